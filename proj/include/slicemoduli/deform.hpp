#ifndef SLICEMODULI_DEFORM_HPP
#define SLICEMODULI_DEFORM_HPP

#include <vector>

#include "slicemoduli/multipoly.hpp"
#include "slicemoduli/rational.hpp"
#include "slicemoduli/util.hpp"

namespace slicemoduli {

// Point of the unfolding base of z^n: z^n + a_{n-2} z^{n-2} + ... + a_0,
// no z^{n-1} term.
struct UnfoldingPoint {
  int n = 2;
  std::vector<cplx> a;  // (a_{n-2}, ..., a_0), length n-1
};

// Normalizes a monic degree-n polynomial by the substitution
// z -> z - c_{n-1}/n.  coeffs are ascending (c_0 ... c_n), c_n = 1.
struct CompletedPower {
  UnfoldingPoint point;
  cplx shift;  // applied substitution z -> z + shift
};
CompletedPower complete_power(const std::vector<cplx>& monic_coeffs);

// The multiplication subspace V_{r-1} of degree <= d-1 polynomials built
// from the parts and anchors: spaces A_i for odd parts, paired B_{i,j} for
// even parts (paired in input order).
struct SubspaceV {
  std::vector<std::vector<cplx>> basis;  // ascending coefficient vectors
  std::vector<cplx> anchors;
  std::vector<int> parts;
  int r = 1;  // dim V = r-1
  int d = 0;
};

SubspaceV build_V(const std::vector<int>& parts,
                  const std::vector<cplx>& anchors);

// V with externally supplied basis (for the generic-subspace experiments).
SubspaceV make_subspace(const std::vector<std::vector<cplx>>& basis,
                        const std::vector<int>& parts,
                        const std::vector<cplx>& anchors);

// Matrix of rho: P_1 (x) V -> (+)_i k[z]/(z-alpha_i)^{n_i-1} in the bases
// {1 (x) v_b, z (x) v_b} and Taylor coefficients at each anchor.  Rank
// decisions report sigma_min/sigma_max, never a bare boolean.
struct RhoReport {
  std::vector<std::vector<cplx>> matrix;  // rows x cols
  int rows = 0, cols = 0;
  double sigma_min = 0.0, sigma_max = 0.0;
  double sigma_ratio = 0.0;
  bool is_mini_versal = false;  // square and sigma_ratio > tol
};
RhoReport rho_matrix(const SubspaceV& v, double tol = 1e-6);

// Lemma-level transversality data: rho' into
// k[z]/(z-alpha_1)^{n_1} (+)_{i>=2} k[z]/(z-alpha_i)^{n_i-1};
// (1) rho' injective, (2) w = ((z-alpha_1)^{n_1-1}, 0, ...) not in image.
struct TransversalityReport {
  bool injective = false;
  bool w_outside_image = false;
  double sigma_ratio_injective = 0.0;
  double sigma_ratio_augmented = 0.0;
  int rows = 0, cols = 0;
};
TransversalityReport check_transversality(const SubspaceV& v,
                                          double tol = 1e-6);
TransversalityReport check_transversality_with_basis(
    const std::vector<std::vector<cplx>>& basis, const std::vector<int>& parts,
    const std::vector<cplx>& anchors, double tol = 1e-6);

// First-order family of slices around a line: after moving ell to
// x_0 = ... = x_{r-2} = 0, returns p = F|_ell and the epsilon part
// sum_j (c[0][j] x_{r-1} + c[1][j] x_r) g_j, both binary forms in
// (x_{r-1}, x_r).
struct FirstOrderFamily {
  BinaryForm p;
  BinaryForm eps;
};
FirstOrderFamily first_order_family(const HypersurfaceSpec& x,
                                    const LineParam& line,
                                    const std::vector<std::vector<cplx>>& c);

// Exact integer expansion of (z - m2 t)^{m1} (z + m1 t)^{m2} =
// z^n + c_2 t^2 z^{n-2} + ...; c[j] multiplies t^j z^{n-j}.
struct ZCurve {
  int m1 = 0, m2 = 0, n = 0;
  std::vector<long long> c;  // length n+1, c[0] = 1, c[1] = 0
};
ZCurve z_curve(int m1, int m2);

// Order of vanishing at t=0 of the hyperplane (linear form in a_2..a_n)
// composed with the Z-curve parametrization; admissible hyperplanes (nonzero
// a_2 coefficient) give 2.  Exact.
struct ZIntersection {
  int length = 0;           // 0 means the composition vanishes identically
  bool admissible = false;  // coefficient of a_2 nonzero
};
ZIntersection z_curve_intersection_length(const ZCurve& z,
                                          const std::vector<Rational>& hyperplane);

// Taylor coefficients of p at alpha, orders 0..m-1 (i.e. p mod (z-alpha)^m).
std::vector<cplx> taylor_at(const std::vector<cplx>& p, cplx alpha, int m);

}  // namespace slicemoduli

#endif
