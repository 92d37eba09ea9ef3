#ifndef SLICEMODULI_UTIL_HPP
#define SLICEMODULI_UTIL_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace slicemoduli {

using cplx = std::complex<double>;

constexpr double kDefaultTol = 1e-8;

// Error taxonomy matching the CLI exit codes: MalformedInput -> 2,
// everything else derived from CertifiedFailure -> 1.
struct MalformedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CertifiedFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnstableClustering : CertifiedFailure {
  double max_diameter = 0.0;
  double min_gap = 0.0;
  UnstableClustering(const std::string& msg, double diam, double gap)
      : CertifiedFailure(msg), max_diameter(diam), min_gap(gap) {}
};
struct TrackingFailure : CertifiedFailure {
  using CertifiedFailure::CertifiedFailure;
};

inline double quantize(double v, double tol) {
  return std::round(v / tol) * tol;
}
inline cplx quantize(cplx v, double tol) {
  return {quantize(v.real(), tol), quantize(v.imag(), tol)};
}

// Band comparison: entries closer than band are treated as equal so that
// lexicographic minimization is stable against fp noise far below tol.
inline int band_cmp(double a, double b, double band) {
  if (std::abs(a - b) <= band) return 0;
  return a < b ? -1 : 1;
}
inline int band_cmp(cplx a, cplx b, double band) {
  int c = band_cmp(a.real(), b.real(), band);
  if (c != 0) return c;
  return band_cmp(a.imag(), b.imag(), band);
}
inline int band_cmp(const std::vector<cplx>& a, const std::vector<cplx>& b,
                    double band) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int c = band_cmp(a[i], b[i], band);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

// Deterministic uniform/normal draws from a seeded engine.  std::*_distribution
// is not pinned across library versions, so the bit-level recipe lives here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  double uniform() {  // [0,1)
    return (eng_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal() {
    // Box-Muller; cache the second value.
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }
  cplx cnormal() { return {normal(), normal()}; }
  cplx unit() {  // random point on the unit circle
    double a = 2.0 * M_PI * uniform();
    return {std::cos(a), std::sin(a)};
  }
  uint64_t bits() { return eng_(); }
  // integer in [0, n)
  uint64_t below(uint64_t n) { return n ? eng_() % n : 0; }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// FNV-1a over the tol-quantized entries; stable across runs with equal input.
inline uint64_t fnv_hash(const std::vector<cplx>& values, double tol) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](int64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= static_cast<uint64_t>(x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (const cplx& v : values) {
    mix(static_cast<int64_t>(std::llround(v.real() / tol)));
    mix(static_cast<int64_t>(std::llround(v.imag() / tol)));
  }
  return h;
}

inline std::string to_hex(uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[h & 0xf];
    h >>= 4;
  }
  return s;
}

}  // namespace slicemoduli

#endif
