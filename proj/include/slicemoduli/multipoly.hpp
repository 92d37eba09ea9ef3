#ifndef SLICEMODULI_MULTIPOLY_HPP
#define SLICEMODULI_MULTIPOLY_HPP

#include <map>
#include <vector>

#include "slicemoduli/binary_form.hpp"
#include "slicemoduli/util.hpp"

namespace slicemoduli {

// Degree-d form in r+1 variables, dense over the exponent vectors of total
// degree d in graded-lexicographic order.
class HypersurfaceSpec {
 public:
  HypersurfaceSpec() = default;
  HypersurfaceSpec(int r, int d);

  int r() const { return r_; }
  int d() const { return d_; }

  cplx coeff(const std::vector<int>& exp) const;
  void set_coeff(const std::vector<int>& exp, cplx c);
  void add_coeff(const std::vector<int>& exp, cplx c);

  const std::vector<std::vector<int>>& exponents() const { return exps_; }
  const std::vector<cplx>& coefficients() const { return coeffs_; }
  std::vector<cplx>& coefficients() { return coeffs_; }

  bool is_zero(double rel = 0.0) const;
  double max_abs() const;

  cplx eval(const std::vector<cplx>& x) const;
  std::vector<cplx> gradient(const std::vector<cplx>& x) const;

  HypersurfaceSpec partial(int var) const;
  HypersurfaceSpec multiply(const HypersurfaceSpec& o) const;
  HypersurfaceSpec scaled(cplx s) const;
  HypersurfaceSpec plus(const HypersurfaceSpec& o) const;

  // F(A x): substitution by a square matrix acting on the variable vector.
  HypersurfaceSpec linear_substitution(const std::vector<std::vector<cplx>>& a) const;

  static HypersurfaceSpec fermat(int r, int d);
  static HypersurfaceSpec random(int r, int d, Rng& rng);

 private:
  int index_of(const std::vector<int>& exp) const;
  int r_ = 0, d_ = 0;
  std::vector<std::vector<int>> exps_;   // grlex order
  std::vector<cplx> coeffs_;
  std::map<std::vector<int>, int> lookup_;
};

// A line in P^r: two rows spanning it, parametrized by [s : t].
struct LineParam {
  // basis[0], basis[1]: rows of length r+1; the line is
  // { s*basis[0] + t*basis[1] }.
  std::vector<std::vector<cplx>> basis;

  int ambient_r() const { return basis.empty() ? 0 : int(basis[0].size()) - 1; }
  std::vector<cplx> point_at(cplx s, cplx t) const;

  // Pluecker coordinates p_ij (i<j), normalized: unit norm, phase fixed so
  // the largest entry is real positive.
  std::vector<cplx> plucker_normalized() const;
  // Phase-free distance between lines (0 iff equal spans).
  static double distance(const LineParam& a, const LineParam& b);

  void check_rank(double tol = 1e-10) const;
};

// F restricted to the line, as a binary form in (s, t).  Zero form means the
// line lies in X; callers that cannot accept that must check is_zero().
BinaryForm restrict_to_line(const HypersurfaceSpec& x, const LineParam& line);

// Determinant of the matrix of second partials; r = 2 only, degree 3(d-2).
HypersurfaceSpec hessian_curve(const HypersurfaceSpec& x);

}  // namespace slicemoduli

#endif
