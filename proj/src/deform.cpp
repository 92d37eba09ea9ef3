#include "slicemoduli/deform.hpp"

#include <Eigen/Dense>
#include <algorithm>

namespace slicemoduli {

namespace {

std::vector<cplx> poly_mul(const std::vector<cplx>& a,
                           const std::vector<cplx>& b) {
  std::vector<cplx> r(a.size() + b.size() - 1, cplx(0.0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<cplx> linear_power(cplx alpha, int e) {
  // (z - alpha)^e
  std::vector<cplx> p{cplx(1.0)};
  for (int k = 0; k < e; ++k) p = poly_mul(p, {-alpha, cplx(1.0)});
  return p;
}

int validate_notation2(const std::vector<int>& parts,
                       const std::vector<cplx>& anchors) {
  if (parts.empty()) throw MalformedInput("parts: empty");
  if (parts.size() != anchors.size())
    throw MalformedInput("parts/anchors length mismatch");
  int sum_nm1 = 0;
  for (int n : parts) {
    if (n < 1) throw MalformedInput("parts must be positive");
    sum_nm1 += n - 1;
  }
  if (sum_nm1 % 2 != 0)
    throw MalformedInput("sum (n_i - 1) must be even (parity constraint)");
  for (size_t i = 0; i < anchors.size(); ++i)
    for (size_t j = i + 1; j < anchors.size(); ++j)
      if (std::abs(anchors[i] - anchors[j]) < 1e-12)
        throw MalformedInput("anchors must be distinct");
  return sum_nm1 / 2 + 1;  // r
}

}  // namespace

std::vector<cplx> taylor_at(const std::vector<cplx>& p, cplx alpha, int m) {
  // repeated synthetic division by (z - alpha)
  std::vector<cplx> work = p;
  std::vector<cplx> out;
  for (int k = 0; k < m; ++k) {
    if (work.empty()) {
      out.push_back(cplx(0.0));
      continue;
    }
    cplx rem(0.0);
    for (int i = int(work.size()) - 1; i >= 0; --i) rem = rem * alpha + work[i];
    out.push_back(rem);
    // quotient
    std::vector<cplx> q(work.size() > 1 ? work.size() - 1 : 0);
    cplx carry(0.0);
    for (int i = int(work.size()) - 1; i >= 1; --i) {
      carry = work[i] + carry * alpha;
      q[i - 1] = carry;
    }
    work = std::move(q);
  }
  return out;
}

CompletedPower complete_power(const std::vector<cplx>& coeffs) {
  int n = int(coeffs.size()) - 1;
  if (n < 1) throw MalformedInput("complete_power: degree must be >= 1");
  if (std::abs(coeffs[n] - cplx(1.0)) > 1e-9)
    throw MalformedInput("complete_power: polynomial must be monic");
  cplx shift = -coeffs[n - 1] / double(n);
  // g(z) = f(z + shift): full Taylor expansion at -shift? direct: expand at
  // alpha = shift means coefficients of f(z + shift) are taylor_at(f, -(-shift))
  std::vector<cplx> g = taylor_at(coeffs, shift, n + 1);
  // g[k] = coeff of z^k in f(z + shift)
  CompletedPower cp;
  cp.shift = shift;
  cp.point.n = n;
  cp.point.a.resize(std::max(0, n - 1));
  for (int k = n - 2; k >= 0; --k) cp.point.a[n - 2 - k] = g[k];
  return cp;
}

SubspaceV make_subspace(const std::vector<std::vector<cplx>>& basis,
                        const std::vector<int>& parts,
                        const std::vector<cplx>& anchors) {
  SubspaceV v;
  v.r = validate_notation2(parts, anchors);
  v.parts = parts;
  v.anchors = anchors;
  v.basis = basis;
  v.d = 0;
  for (int n : parts) v.d += n;
  return v;
}

SubspaceV build_V(const std::vector<int>& parts,
                  const std::vector<cplx>& anchors) {
  int r = validate_notation2(parts, anchors);
  const int k = int(parts.size());

  std::vector<int> odd, even;
  for (int i = 0; i < k; ++i) (parts[i] % 2 ? odd : even).push_back(i);
  // parity of sum(n_i - 1) even forces |even| even
  std::vector<std::vector<cplx>> basis;

  auto prod_except = [&](const std::vector<int>& skip) {
    std::vector<cplx> p{cplx(1.0)};
    for (int j = 0; j < k; ++j) {
      if (std::find(skip.begin(), skip.end(), j) != skip.end()) continue;
      p = poly_mul(p, linear_power(anchors[j], parts[j] - 1));
    }
    return p;
  };

  for (int i : odd) {
    // A_i = span{ p_i (z-a_i)^{2a} : 2a <= n_i - 3 }
    std::vector<cplx> pi = prod_except({i});
    for (int e = 0; e + 3 <= parts[i]; e += 2)
      basis.push_back(poly_mul(pi, linear_power(anchors[i], e)));
  }
  for (size_t t = 0; t + 1 < even.size(); t += 2) {
    int i = even[t], j = even[t + 1];
    std::vector<cplx> rest = prod_except({i, j});
    std::vector<cplx> qi = poly_mul(rest, linear_power(anchors[j], parts[j] - 2));
    std::vector<cplx> qj = poly_mul(rest, linear_power(anchors[i], parts[i] - 2));
    // q_i, q_i (z-a_i)^2, ..., q_i (z-a_i)^{n_i-2} = q_j (z-a_j)^{n_j-2}
    for (int e = 0; e <= parts[i] - 2; e += 2)
      basis.push_back(poly_mul(qi, linear_power(anchors[i], e)));
    for (int e = parts[j] - 4; e >= 0; e -= 2)
      basis.push_back(poly_mul(qj, linear_power(anchors[j], e)));
  }

  if (int(basis.size()) != r - 1)
    throw CertifiedFailure("build_V: constructed dimension " +
                           std::to_string(basis.size()) + " != r-1 = " +
                           std::to_string(r - 1));
  return make_subspace(basis, parts, anchors);
}

namespace {

// rows: for each retained part i, orders 0..ords[i]-1 of Taylor coefficients
// at anchor i; cols: 1 (x) v_b, z (x) v_b.
Eigen::MatrixXcd rho_matrix_general(const std::vector<std::vector<cplx>>& basis,
                                    const std::vector<int>& parts,
                                    const std::vector<cplx>& anchors,
                                    const std::vector<int>& ords) {
  int rows = 0;
  for (int o : ords) rows += o;
  int cols = 2 * int(basis.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(std::max(rows, 1), std::max(cols, 1));
  (void)parts;
  for (int b = 0; b < int(basis.size()); ++b) {
    std::vector<cplx> v1 = basis[b];
    std::vector<cplx> vz = poly_mul({cplx(0.0), cplx(1.0)}, basis[b]);
    for (int which = 0; which < 2; ++which) {
      const std::vector<cplx>& v = which == 0 ? v1 : vz;
      int col = 2 * b + which;
      int row = 0;
      for (size_t i = 0; i < anchors.size(); ++i) {
        if (ords[i] == 0) continue;
        std::vector<cplx> tay = taylor_at(v, anchors[i], ords[i]);
        for (int o = 0; o < ords[i]; ++o) m(row + o, col) = tay[o];
        row += ords[i];
      }
    }
  }
  return m;
}

std::pair<double, double> sigma_extremes(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  auto sv = svd.singularValues();
  if (sv.size() == 0) return {0.0, 0.0};
  return {sv(sv.size() - 1), sv(0)};
}

}  // namespace

RhoReport rho_matrix(const SubspaceV& v, double tol) {
  std::vector<int> ords;
  for (int n : v.parts) ords.push_back(std::max(0, n - 1));
  Eigen::MatrixXcd m =
      rho_matrix_general(v.basis, v.parts, v.anchors, ords);

  RhoReport rep;
  rep.rows = 0;
  for (int o : ords) rep.rows += o;
  rep.cols = 2 * int(v.basis.size());
  rep.matrix.assign(rep.rows, std::vector<cplx>(rep.cols, cplx(0.0)));
  for (int i = 0; i < rep.rows; ++i)
    for (int j = 0; j < rep.cols; ++j) rep.matrix[i][j] = m(i, j);

  if (rep.rows == 0 && rep.cols == 0) {
    // r = 1: the zero map between zero spaces is an isomorphism
    rep.sigma_ratio = 1.0;
    rep.is_mini_versal = true;
    return rep;
  }
  auto [smin, smax] = sigma_extremes(m);
  rep.sigma_min = smin;
  rep.sigma_max = smax;
  rep.sigma_ratio = smax > 0 ? smin / smax : 0.0;
  rep.is_mini_versal = (rep.rows == rep.cols) && rep.sigma_ratio > tol;
  return rep;
}

TransversalityReport check_transversality_with_basis(
    const std::vector<std::vector<cplx>>& basis, const std::vector<int>& parts,
    const std::vector<cplx>& anchors, double tol) {
  validate_notation2(parts, anchors);
  std::vector<int> ords;
  for (size_t i = 0; i < parts.size(); ++i)
    ords.push_back(i == 0 ? parts[i] : std::max(0, parts[i] - 1));
  Eigen::MatrixXcd m = rho_matrix_general(basis, parts, anchors, ords);

  TransversalityReport rep;
  rep.rows = int(m.rows());
  rep.cols = 2 * int(basis.size());

  auto [smin, smax] = sigma_extremes(m);
  rep.sigma_ratio_injective = smax > 0 ? smin / smax : 0.0;
  rep.injective = rep.sigma_ratio_injective > tol;

  // w = ((z-alpha_1)^{n_1-1}, 0, ...): Taylor order n_1-1 entry 1 in the
  // first block
  Eigen::MatrixXcd aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()).setZero();
  aug(parts[0] - 1, m.cols()) = cplx(1.0);
  auto [asmin, asmax] = sigma_extremes(aug);
  rep.sigma_ratio_augmented = asmax > 0 ? asmin / asmax : 0.0;
  rep.w_outside_image = rep.sigma_ratio_augmented > tol;
  return rep;
}

TransversalityReport check_transversality(const SubspaceV& v, double tol) {
  return check_transversality_with_basis(v.basis, v.parts, v.anchors, tol);
}

FirstOrderFamily first_order_family(const HypersurfaceSpec& x,
                                    const LineParam& line,
                                    const std::vector<std::vector<cplx>>& c) {
  line.check_rank();
  const int r = x.r();
  if (line.ambient_r() != r)
    throw MalformedInput("first_order_family: ambient mismatch");
  if (c.size() != 2 || int(c[0].size()) != r - 1 || int(c[1].size()) != r - 1)
    throw MalformedInput("first_order_family: direction matrix must be 2 x (r-1)");

  // Change coordinates so the line becomes x_0 = ... = x_{r-2} = 0: build A
  // with last two columns equal to the line basis, first r-1 columns an
  // orthonormal completion.
  int n = r + 1;
  Eigen::MatrixXcd b(n, 2);
  for (int i = 0; i < n; ++i) {
    b(i, 0) = line.basis[0][i];
    b(i, 1) = line.basis[1][i];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(b, Eigen::ComputeFullU);
  Eigen::MatrixXcd u = svd.matrixU();  // columns 2..n-1 span the complement
  std::vector<std::vector<cplx>> a(n, std::vector<cplx>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n - 2; ++j) a[i][j] = u(i, j + 2);
    a[i][n - 2] = line.basis[0][i];
    a[i][n - 1] = line.basis[1][i];
  }
  // F'(x) = F(A x); row v of the substitution is x_v -> sum_w a[v][w] x_w,
  // i.e. linear_substitution wants the matrix acting on variables.
  HypersurfaceSpec fp = x.linear_substitution(a);

  // p = restriction to the standard line; g_j from monomials x_j * (binary)
  FirstOrderFamily out;
  out.p = BinaryForm(x.d());
  std::vector<BinaryForm> g(r - 1, BinaryForm(x.d() - 1));
  const auto& exps = fp.exponents();
  const auto& cs = fp.coefficients();
  for (size_t i = 0; i < exps.size(); ++i) {
    if (cs[i] == cplx(0.0)) continue;
    int front = 0, front_var = -1;
    for (int v = 0; v < r - 1; ++v)
      if (exps[i][v] > 0) {
        front += exps[i][v];
        front_var = v;
      }
    if (front == 0) {
      out.p.coeffs[exps[i][r - 1]] += cs[i];  // s = x_{r-1}
    } else if (front == 1) {
      g[front_var].coeffs[exps[i][r - 1]] += cs[i];
    }
  }
  if (out.p.is_zero())
    throw MalformedInput("first_order_family: line contained in X");

  out.eps = BinaryForm(x.d());
  for (int j = 0; j < r - 1; ++j) {
    // (c[0][j] * s + c[1][j] * t) * g_j
    BinaryForm lin(1, {c[1][j], c[0][j]});
    BinaryForm term = lin.multiply(g[j]);
    for (int k = 0; k <= term.d; ++k) out.eps.coeffs[k] += term.coeffs[k];
  }
  return out;
}

ZCurve z_curve(int m1, int m2) {
  if (m1 < 1 || m2 < 1) throw MalformedInput("z_curve: m1, m2 must be >= 1");
  ZCurve z;
  z.m1 = m1;
  z.m2 = m2;
  z.n = m1 + m2;

  // binomials
  auto binom_row = [](int n) {
    std::vector<long long> b(n + 1, 1);
    for (int k = 1; k <= n; ++k)
      b[k] = b[k - 1] * (n - k + 1) / k;
    return b;
  };
  // (z - m2 t)^{m1}: coefficient of t^i z^{m1-i} = C(m1,i) (-m2)^i
  std::vector<long long> p(m1 + 1), q(m2 + 1);
  auto b1 = binom_row(m1), b2 = binom_row(m2);
  long long pw = 1;
  for (int i = 0; i <= m1; ++i) {
    p[i] = b1[i] * pw;
    pw *= -(long long)m2;
  }
  pw = 1;
  for (int i = 0; i <= m2; ++i) {
    q[i] = b2[i] * pw;
    pw *= (long long)m1;
  }
  z.c.assign(z.n + 1, 0);
  for (int i = 0; i <= m1; ++i)
    for (int j = 0; j <= m2; ++j) z.c[i + j] += p[i] * q[j];
  if (z.c[0] != 1 || z.c[1] != 0)
    throw CertifiedFailure("z_curve: expansion sanity check failed");
  return z;
}

ZIntersection z_curve_intersection_length(const ZCurve& z,
                                          const std::vector<Rational>& h) {
  // h[j] multiplies a_{j+2}, j = 0..n-2
  if (int(h.size()) != z.n - 1)
    throw MalformedInput("hyperplane: expected coefficients for a_2..a_n");
  ZIntersection out;
  out.admissible = !h[0].is_zero();
  for (int j = 2; j <= z.n; ++j) {
    if (!h[j - 2].is_zero() && z.c[j] != 0) {
      out.length = j;
      return out;
    }
  }
  out.length = 0;  // identically zero along the curve
  return out;
}

}  // namespace slicemoduli
