#ifndef SLICEMODULI_BINARY_FORM_HPP
#define SLICEMODULI_BINARY_FORM_HPP

#include <vector>

#include "slicemoduli/p1.hpp"
#include "slicemoduli/util.hpp"

namespace slicemoduli {

// Degree-d form in two variables; coeffs[i] multiplies s^i t^(d-i).
// The affine picture dehomogenizes at t=1 (z = s/t), so coeffs double as the
// coefficients of the one-variable polynomial p(z) = sum coeffs[i] z^i.
struct BinaryForm {
  int d = 0;
  std::vector<cplx> coeffs;  // size d+1

  BinaryForm() = default;
  explicit BinaryForm(int degree) : d(degree), coeffs(degree + 1, cplx(0.0)) {}
  BinaryForm(int degree, std::vector<cplx> c) : d(degree), coeffs(std::move(c)) {}

  bool is_zero(double rel = 1e-14) const;
  double max_abs() const;

  cplx eval_affine(cplx z) const;           // p(z)
  cplx eval(cplx s, cplx t) const;          // full bihomogeneous evaluation
  BinaryForm derivative_affine() const;     // d/dz of p
  BinaryForm multiply(const BinaryForm& o) const;

  // (z - root) or, for the point at infinity, the form t
  static BinaryForm linear_factor(const P1Point& p);
  static BinaryForm constant(cplx c) { return BinaryForm(0, {c}); }
};

// X cap ell as a divisor on P^1: distinct points with multiplicities.
struct RootDivisor {
  struct Entry {
    P1Point point;
    int multiplicity = 1;
  };
  std::vector<Entry> points;

  int total_degree() const {
    int s = 0;
    for (auto& e : points) s += e.multiplicity;
    return s;
  }
};

// Sorted non-increasing parts summing to the degree.
struct MultiplicityVector {
  std::vector<int> parts;

  bool operator==(const MultiplicityVector& o) const { return parts == o.parts; }
  std::string str() const;
};

// Roots of the one-variable polynomial sum c[i] z^i via the companion matrix,
// Newton-polished.  Leading near-zero coefficients are deflated to roots at
// infinity.  No clustering.
std::vector<P1Point> polynomial_roots(const std::vector<cplx>& coeffs,
                                      double lead_rel_tol = 1e-11);

// Clusters the d roots of f into a divisor.  Multiple roots of an m-fold
// point split by (backward error)^(1/m) in floating point, so the merge
// threshold is multiplicity-aware: tau_m = max(tol, (1e3*eps)^(1/m)) capped
// at 5e-3.  A pair landing in the guard band [tau_m, 10*tau_m) raises
// UnstableClustering with the observed gap statistics.  Cluster centers are
// recentered at the mean, which restores O(backward error) accuracy.
RootDivisor roots_with_multiplicity(const BinaryForm& f,
                                    double tol = kDefaultTol);

// Re-clusters an explicit point list (used for idempotence and for divisors
// assembled from tracked data).
RootDivisor cluster_points(const std::vector<P1Point>& pts, double tol);

MultiplicityVector multiplicity_vector(const RootDivisor& rd);

// Expand prod (z - r_i)^{m_i} (finite entries only) into a monic polynomial.
std::vector<cplx> expand_from_roots(const RootDivisor& rd);

}  // namespace slicemoduli

#endif
