#include "slicemoduli/multipoly.hpp"

#include <Eigen/Dense>
#include <algorithm>

namespace slicemoduli {

namespace {

// all exponent vectors of length n summing to d, lex-descending within grade
void gen_exponents(int n, int d, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (int(cur.size()) == n - 1) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur.push_back(e);
    gen_exponents(n, d - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

HypersurfaceSpec::HypersurfaceSpec(int r, int d) : r_(r), d_(d) {
  if (r < 1 && d > 0) throw MalformedInput("hypersurface: need r >= 1");
  std::vector<int> cur;
  gen_exponents(r + 1, d, cur, exps_);
  coeffs_.assign(exps_.size(), cplx(0.0));
  for (size_t i = 0; i < exps_.size(); ++i) lookup_[exps_[i]] = int(i);
}

int HypersurfaceSpec::index_of(const std::vector<int>& exp) const {
  auto it = lookup_.find(exp);
  if (it == lookup_.end())
    throw MalformedInput("hypersurface: exponent vector of wrong shape/degree");
  return it->second;
}

cplx HypersurfaceSpec::coeff(const std::vector<int>& exp) const {
  return coeffs_[index_of(exp)];
}
void HypersurfaceSpec::set_coeff(const std::vector<int>& exp, cplx c) {
  coeffs_[index_of(exp)] = c;
}
void HypersurfaceSpec::add_coeff(const std::vector<int>& exp, cplx c) {
  coeffs_[index_of(exp)] += c;
}

bool HypersurfaceSpec::is_zero(double) const { return max_abs() == 0.0; }

double HypersurfaceSpec::max_abs() const {
  double m = 0.0;
  for (auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

cplx HypersurfaceSpec::eval(const std::vector<cplx>& x) const {
  cplx acc(0.0);
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (coeffs_[i] == cplx(0.0)) continue;
    cplx term = coeffs_[i];
    for (int v = 0; v <= r_; ++v)
      for (int k = 0; k < exps_[i][v]; ++k) term *= x[v];
    acc += term;
  }
  return acc;
}

std::vector<cplx> HypersurfaceSpec::gradient(const std::vector<cplx>& x) const {
  std::vector<cplx> g(r_ + 1, cplx(0.0));
  for (int v = 0; v <= r_; ++v) g[v] = partial(v).eval(x);
  return g;
}

HypersurfaceSpec HypersurfaceSpec::partial(int var) const {
  if (d_ == 0) return HypersurfaceSpec(r_, 0);
  HypersurfaceSpec out(r_, d_ - 1);
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i][var] == 0 || coeffs_[i] == cplx(0.0)) continue;
    std::vector<int> e = exps_[i];
    double k = e[var];
    e[var] -= 1;
    out.add_coeff(e, coeffs_[i] * k);
  }
  return out;
}

HypersurfaceSpec HypersurfaceSpec::multiply(const HypersurfaceSpec& o) const {
  HypersurfaceSpec out(r_, d_ + o.d_);
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (coeffs_[i] == cplx(0.0)) continue;
    for (size_t j = 0; j < o.exps_.size(); ++j) {
      if (o.coeffs_[j] == cplx(0.0)) continue;
      std::vector<int> e(r_ + 1);
      for (int v = 0; v <= r_; ++v) e[v] = exps_[i][v] + o.exps_[j][v];
      out.add_coeff(e, coeffs_[i] * o.coeffs_[j]);
    }
  }
  return out;
}

HypersurfaceSpec HypersurfaceSpec::scaled(cplx s) const {
  HypersurfaceSpec out = *this;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

HypersurfaceSpec HypersurfaceSpec::plus(const HypersurfaceSpec& o) const {
  if (o.d_ != d_ || o.r_ != r_) throw MalformedInput("plus: shape mismatch");
  HypersurfaceSpec out = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
  return out;
}

HypersurfaceSpec HypersurfaceSpec::linear_substitution(
    const std::vector<std::vector<cplx>>& a) const {
  // x_v -> sum_w a[v][w] x_w, expanded term by term
  HypersurfaceSpec out(r_, d_);
  // linear forms as degree-1 hypersurfaces
  std::vector<HypersurfaceSpec> lin;
  for (int v = 0; v <= r_; ++v) {
    HypersurfaceSpec l(r_, 1);
    for (int w = 0; w <= r_; ++w) {
      std::vector<int> e(r_ + 1, 0);
      e[w] = 1;
      l.set_coeff(e, a[v][w]);
    }
    lin.push_back(std::move(l));
  }
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (coeffs_[i] == cplx(0.0)) continue;
    HypersurfaceSpec term(r_, 0);
    term.set_coeff(std::vector<int>(r_ + 1, 0), coeffs_[i]);
    for (int v = 0; v <= r_; ++v)
      for (int k = 0; k < exps_[i][v]; ++k) term = term.multiply(lin[v]);
    for (size_t j = 0; j < term.coeffs_.size(); ++j)
      out.coeffs_[j] += term.coeffs_[j];
  }
  return out;
}

HypersurfaceSpec HypersurfaceSpec::fermat(int r, int d) {
  HypersurfaceSpec x(r, d);
  for (int v = 0; v <= r; ++v) {
    std::vector<int> e(r + 1, 0);
    e[v] = d;
    x.set_coeff(e, cplx(1.0));
  }
  return x;
}

HypersurfaceSpec HypersurfaceSpec::random(int r, int d, Rng& rng) {
  HypersurfaceSpec x(r, d);
  for (auto& c : x.coefficients()) c = rng.cnormal();
  return x;
}

std::vector<cplx> LineParam::point_at(cplx s, cplx t) const {
  std::vector<cplx> p(basis[0].size());
  for (size_t i = 0; i < p.size(); ++i) p[i] = s * basis[0][i] + t * basis[1][i];
  return p;
}

void LineParam::check_rank(double tol) const {
  if (basis.size() != 2 || basis[0].size() < 2 || basis[0].size() != basis[1].size())
    throw MalformedInput("line: basis must be 2 x (r+1)");
  int n = int(basis[0].size());
  Eigen::MatrixXcd m(2, n);
  for (int j = 0; j < n; ++j) {
    m(0, j) = basis[0][j];
    m(1, j) = basis[1][j];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  if (svd.singularValues()(1) <= tol * svd.singularValues()(0))
    throw MalformedInput("line: rank-deficient basis");
}

std::vector<cplx> LineParam::plucker_normalized() const {
  check_rank();
  int n = int(basis[0].size());
  std::vector<cplx> p;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      p.push_back(basis[0][i] * basis[1][j] - basis[0][j] * basis[1][i]);
  double norm = 0.0;
  for (auto& c : p) norm += std::norm(c);
  norm = std::sqrt(norm);
  int lead = 0;
  double best = -1.0;
  for (size_t i = 0; i < p.size(); ++i)
    if (std::abs(p[i]) > best) {
      best = std::abs(p[i]);
      lead = int(i);
    }
  cplx phase = p[lead] / std::abs(p[lead]);
  for (auto& c : p) c /= (norm * phase);
  return p;
}

double LineParam::distance(const LineParam& a, const LineParam& b) {
  auto pa = a.plucker_normalized();
  auto pb = b.plucker_normalized();
  if (pa.size() != pb.size()) throw MalformedInput("line distance: ambient mismatch");
  // chordal distance between unit vectors mod phase: sqrt(1 - |<a,b>|^2)
  cplx ip(0.0);
  for (size_t i = 0; i < pa.size(); ++i) ip += pa[i] * std::conj(pb[i]);
  double c2 = std::min(1.0, std::norm(ip));
  return std::sqrt(std::max(0.0, 1.0 - c2));
}

BinaryForm restrict_to_line(const HypersurfaceSpec& x, const LineParam& line) {
  line.check_rank();
  if (line.ambient_r() != x.r())
    throw MalformedInput("restrict_to_line: ambient dimension mismatch");
  BinaryForm acc(x.d());
  const auto& exps = x.exponents();
  const auto& cs = x.coefficients();
  for (size_t i = 0; i < exps.size(); ++i) {
    if (cs[i] == cplx(0.0)) continue;
    // prod_j (s*u_j + t*v_j)^{e_j}
    BinaryForm term(0, {cs[i]});
    for (int v = 0; v <= x.r(); ++v) {
      cplx u = line.basis[0][v], w = line.basis[1][v];
      for (int k = 0; k < exps[i][v]; ++k)
        term = term.multiply(BinaryForm(1, {w, u}));  // coeff of s^1 is u
    }
    for (int k = 0; k <= term.d; ++k) acc.coeffs[k] += term.coeffs[k];
  }
  return acc;
}

HypersurfaceSpec hessian_curve(const HypersurfaceSpec& x) {
  if (x.r() != 2) throw MalformedInput("hessian_curve: requires r = 2");
  if (x.d() < 2) throw MalformedInput("hessian_curve: degree must be >= 2");
  HypersurfaceSpec h[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      h[i][j] = x.partial(i).partial(j);
      if (j > i) h[j][i] = h[i][j];
    }
  auto minor2 = [&](int i0, int i1, int j0, int j1) {
    return h[i0][j0].multiply(h[i1][j1]).plus(
        h[i0][j1].multiply(h[i1][j0]).scaled(cplx(-1.0)));
  };
  HypersurfaceSpec det = h[0][0].multiply(minor2(1, 2, 1, 2));
  det = det.plus(h[0][1].multiply(minor2(1, 2, 0, 2)).scaled(cplx(-1.0)));
  det = det.plus(h[0][2].multiply(minor2(1, 2, 0, 1)));
  return det;
}

}  // namespace slicemoduli
