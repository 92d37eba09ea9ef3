#include "slicemoduli/binary_form.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace slicemoduli {

double BinaryForm::max_abs() const {
  double m = 0.0;
  for (const cplx& c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

bool BinaryForm::is_zero(double rel) const {
  (void)rel;
  return max_abs() == 0.0 || max_abs() < 1e-300;
}

cplx BinaryForm::eval_affine(cplx z) const {
  cplx y = coeffs.empty() ? cplx(0.0) : coeffs[d];
  for (int i = d - 1; i >= 0; --i) y = coeffs[i] + z * y;
  return y;
}

cplx BinaryForm::eval(cplx s, cplx t) const {
  // Horner in s with powers of t folded in.
  cplx y(0.0);
  for (int i = d; i >= 0; --i) y = y * s + coeffs[i] * std::pow(t, d - i);
  return y;
}

BinaryForm BinaryForm::derivative_affine() const {
  if (d == 0) return BinaryForm(0, {cplx(0.0)});
  BinaryForm g(d - 1);
  for (int i = 1; i <= d; ++i) g.coeffs[i - 1] = coeffs[i] * double(i);
  return g;
}

BinaryForm BinaryForm::multiply(const BinaryForm& o) const {
  BinaryForm r(d + o.d);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= o.d; ++j) r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
  return r;
}

BinaryForm BinaryForm::linear_factor(const P1Point& p) {
  if (p.at_inf) return BinaryForm(1, {cplx(1.0), cplx(0.0)});  // the form t
  return BinaryForm(1, {-p.value, cplx(1.0)});                 // z - root
}

std::string MultiplicityVector::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << ")";
  return os.str();
}

std::vector<P1Point> polynomial_roots(const std::vector<cplx>& coeffs,
                                      double lead_rel_tol) {
  double scale = 0.0;
  for (const cplx& c : coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) throw MalformedInput("polynomial_roots: zero polynomial");

  int deg = int(coeffs.size()) - 1;
  int eff = deg;
  while (eff > 0 && std::abs(coeffs[eff]) <= lead_rel_tol * scale) --eff;

  std::vector<P1Point> roots;
  for (int i = 0; i < deg - eff; ++i) roots.push_back(P1Point::infinity());
  if (eff == 0) return roots;

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(eff, eff);
  for (int i = 1; i < eff; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < eff; ++i) companion(i, eff - 1) = -coeffs[i] / coeffs[eff];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
  if (es.info() != Eigen::Success)
    throw CertifiedFailure("polynomial_roots: eigensolver failed");

  // Newton polish; skipped where p' is small (multiple root) since the
  // cluster mean is recovered later.
  auto peval = [&](cplx z, cplx& p, cplx& dp) {
    p = coeffs[eff];
    dp = cplx(0.0);
    for (int i = eff - 1; i >= 0; --i) {
      dp = dp * z + p;
      p = p * z + coeffs[i];
    }
  };
  for (int i = 0; i < eff; ++i) {
    cplx z = es.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      cplx p, dp;
      peval(z, p, dp);
      if (std::abs(dp) < 1e-8 * scale) break;
      cplx step = p / dp;
      if (std::abs(step) > 1.0 + std::abs(z)) break;
      z -= step;
    }
    roots.push_back(P1Point::finite(z));
  }
  return roots;
}

namespace {

double merge_threshold(int m, double tol) {
  // splitting floor of an m-fold root under ~1e3*eps backward error
  double floor_m = std::pow(1e3 * 2.220446049250313e-16, 1.0 / double(m));
  return std::max(tol, std::min(floor_m, 5e-3));
}

}  // namespace

RootDivisor cluster_points(const std::vector<P1Point>& pts, double tol) {
  int n = int(pts.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  // Agglomerate closest pairs first; thresholds depend on the union size.
  struct Pair {
    double dist;
    int i, j;
  };
  std::vector<Pair> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({chordal(pts[i], pts[j]), i, j});
  std::sort(pairs.begin(), pairs.end(),
            [](const Pair& a, const Pair& b) { return a.dist < b.dist; });

  std::vector<int> size(n, 1);
  for (const Pair& pr : pairs) {
    int a = find(pr.i), b = find(pr.j);
    if (a == b) continue;
    int m = size[a] + size[b];
    double tau = merge_threshold(m, tol);
    if (pr.dist < tau) {
      parent[b] = a;
      size[a] = m;
    } else if (pr.dist < 10.0 * tau) {
      throw UnstableClustering(
          "ambiguous root clustering: gap " + std::to_string(pr.dist) +
              " inside guard band [" + std::to_string(tau) + ", " +
              std::to_string(10.0 * tau) + ")",
          pr.dist, 10.0 * tau);
    }
    // dist >= 10*tau: keep separate; later pairs are farther but may have
    // larger unions, so keep scanning.
  }

  std::vector<std::vector<int>> groups;
  std::vector<int> group_of(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (group_of[r] < 0) {
      group_of[r] = int(groups.size());
      groups.emplace_back();
    }
    groups[group_of[r]].push_back(i);
  }

  RootDivisor rd;
  for (auto& g : groups) {
    bool inf = pts[g[0]].at_inf;
    if (inf) {
      // infinity clusters only with infinity (chordal dist to finite is ~1)
      rd.points.push_back({P1Point::infinity(), int(g.size())});
      continue;
    }
    cplx mean(0.0);
    for (int idx : g) mean += pts[idx].value;
    mean /= double(g.size());
    rd.points.push_back({P1Point::finite(mean), int(g.size())});
  }
  std::sort(rd.points.begin(), rd.points.end(),
            [](const RootDivisor::Entry& a, const RootDivisor::Entry& b) {
              if (a.multiplicity != b.multiplicity)
                return a.multiplicity > b.multiplicity;
              if (a.point.at_inf != b.point.at_inf) return a.point.at_inf;
              if (a.point.value.real() != b.point.value.real())
                return a.point.value.real() < b.point.value.real();
              return a.point.value.imag() < b.point.value.imag();
            });
  return rd;
}

RootDivisor roots_with_multiplicity(const BinaryForm& f, double tol) {
  if (f.is_zero())
    throw MalformedInput("roots_with_multiplicity: zero form (line contained in X?)");
  std::vector<P1Point> pts = polynomial_roots(f.coeffs);
  return cluster_points(pts, tol);
}

MultiplicityVector multiplicity_vector(const RootDivisor& rd) {
  MultiplicityVector mv;
  for (auto& e : rd.points) mv.parts.push_back(e.multiplicity);
  std::sort(mv.parts.begin(), mv.parts.end(), std::greater<int>());
  return mv;
}

std::vector<cplx> expand_from_roots(const RootDivisor& rd) {
  std::vector<cplx> p{cplx(1.0)};
  for (auto& e : rd.points) {
    if (e.point.at_inf) continue;
    for (int k = 0; k < e.multiplicity; ++k) {
      std::vector<cplx> q(p.size() + 1, cplx(0.0));
      for (size_t i = 0; i < p.size(); ++i) {
        q[i + 1] += p[i];
        q[i] -= p[i] * e.point.value;
      }
      p = std::move(q);
    }
  }
  return p;
}

}  // namespace slicemoduli
