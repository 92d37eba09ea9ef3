#ifndef SLICEMODULI_P1_HPP
#define SLICEMODULI_P1_HPP

#include <array>
#include <cmath>

#include "slicemoduli/util.hpp"

namespace slicemoduli {

// Point of the projective line.  Infinity is a tagged state, never a large
// float.
struct P1Point {
  cplx value{0.0, 0.0};
  bool at_inf = false;

  static P1Point infinity() { return P1Point{cplx(0.0), true}; }
  static P1Point finite(cplx z) { return P1Point{z, false}; }

  // homogeneous representative (s : t), z = s/t, infinity = (1 : 0)
  std::array<cplx, 2> homog() const {
    if (at_inf) return {cplx(1.0), cplx(0.0)};
    double m = std::abs(value);
    if (m > 1.0) return {value / m, cplx(1.0 / m)};
    return {value, cplx(1.0)};
  }
};

// Fubini-Study chordal distance; bounded by 1, uniform at infinity.
inline double chordal(const P1Point& a, const P1Point& b) {
  if (a.at_inf && b.at_inf) return 0.0;
  if (a.at_inf) return 1.0 / std::sqrt(1.0 + std::norm(b.value));
  if (b.at_inf) return 1.0 / std::sqrt(1.0 + std::norm(a.value));
  return std::abs(a.value - b.value) /
         std::sqrt((1.0 + std::norm(a.value)) * (1.0 + std::norm(b.value)));
}

// Moebius transform as a 2x2 matrix acting on homogeneous coordinates.
struct Mobius {
  // [a b; c d], z -> (a z + b) / (c z + d)
  cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};

  P1Point apply(const P1Point& p) const {
    auto h = p.homog();
    cplx u = a * h[0] + b * h[1];
    cplx v = c * h[0] + d * h[1];
    double mu = std::abs(u), mv = std::abs(v);
    if (mv <= 1e-14 * (mu + mv)) return P1Point::infinity();
    return P1Point::finite(u / v);
  }

  Mobius inverse() const { return Mobius{d, -b, -c, a}; }

  Mobius compose(const Mobius& o) const {  // this after o
    return Mobius{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
                  c * o.b + d * o.d};
  }

  // The unique map sending (p, q, r) to (0, 1, infinity).  The three points
  // must be pairwise distinct.
  static Mobius to_standard(const P1Point& p, const P1Point& q,
                            const P1Point& r) {
    auto hp = p.homog(), hq = q.homog(), hr = r.homog();
    // first row kills p (so p -> 0), second row kills r (so r -> infinity)
    cplx n00 = hp[1], n01 = -hp[0];
    cplx n10 = hr[1], n11 = -hr[0];
    // scale rows so q maps to (1,1)
    cplx qa = n00 * hq[0] + n01 * hq[1];
    cplx qb = n10 * hq[0] + n11 * hq[1];
    if (std::abs(qa) < 1e-300 || std::abs(qb) < 1e-300)
      throw MalformedInput("mobius: triple points not pairwise distinct");
    return Mobius{n00 / qa, n01 / qa, n10 / qb, n11 / qb};
  }
};

}  // namespace slicemoduli

#endif
