#ifndef SLICEMODULI_MODULI_HPP
#define SLICEMODULI_MODULI_HPP

#include <optional>
#include <string>
#include <vector>

#include "slicemoduli/binary_form.hpp"
#include "slicemoduli/p1.hpp"

namespace slicemoduli {

// d points on P^1 with multiplicities: the divisor X cap ell together with
// its set-theoretic support.
struct PointConfig {
  std::vector<P1Point> support;
  std::vector<int> multiplicity;  // parallel to support

  int total_degree() const;
  static PointConfig from_divisor(const RootDivisor& rd);
  static PointConfig simple(std::vector<P1Point> pts);
};

// Canonical PGL2 x S_d invariant.  canonical lists, per the minimizing
// ordered support triple sent to (0,1,inf): the triple's multiplicities as
// real entries, then for each remaining support point its transported value
// followed by its multiplicity.  jset is the multiset of j-invariants of all
// 4-element support subsets, a fast pre-filter.
struct ModuliFingerprint {
  std::vector<cplx> canonical;      // raw values (quantized for hashing only)
  std::vector<cplx> jset;
  Mobius normalizer;                // the minimizing triple map
  double tol = kDefaultTol;

  std::string hash_hex() const;
  static bool equal(const ModuliFingerprint& a, const ModuliFingerprint& b,
                    double tol);
};

// j-invariant of the cross ratio: 256 (l^2-l+1)^3 / (l^2 (l-1)^2).
cplx j_invariant(cplx lambda);
cplx cross_ratio(const P1Point& a, const P1Point& b, const P1Point& c,
                 const P1Point& d);

// Needs >= 3 distinct support points, else throws CertifiedFailure
// ("unstable configuration").  The triple search runs in parallel when
// `parallel`; the serial path is the reference implementation.
ModuliFingerprint canonical_fingerprint(const PointConfig& c,
                                        double tol = kDefaultTol,
                                        bool parallel = true);

struct ModuliWitness {
  Mobius g;  // g . a ~ b as weighted point multisets
};

// Exact orbit test: searches all ordered triples of b for a Moebius map
// carrying a onto b, multiplicities included.  Returns the witness if found.
std::optional<ModuliWitness> same_moduli_witness(const PointConfig& a,
                                                 const PointConfig& b,
                                                 double tol = kDefaultTol);

bool same_moduli(const PointConfig& a, const PointConfig& b,
                 double tol = kDefaultTol);

// Applies g then a relabeling; used by tests and the Fermat witness.
PointConfig apply_mobius(const PointConfig& c, const Mobius& g);

}  // namespace slicemoduli

#endif
