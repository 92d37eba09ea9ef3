#include "slicemoduli/moduli.hpp"

#include <algorithm>

#ifdef SLICEMODULI_OPENMP
#include <omp.h>
#endif

namespace slicemoduli {

int PointConfig::total_degree() const {
  int s = 0;
  for (int m : multiplicity) s += m;
  return s;
}

PointConfig PointConfig::from_divisor(const RootDivisor& rd) {
  PointConfig c;
  for (auto& e : rd.points) {
    c.support.push_back(e.point);
    c.multiplicity.push_back(e.multiplicity);
  }
  return c;
}

PointConfig PointConfig::simple(std::vector<P1Point> pts) {
  PointConfig c;
  c.support = std::move(pts);
  c.multiplicity.assign(c.support.size(), 1);
  return c;
}

cplx j_invariant(cplx l) {
  cplx num = l * l - l + cplx(1.0);
  num = num * num * num * cplx(256.0);
  cplx den = l * l * (l - cplx(1.0)) * (l - cplx(1.0));
  return num / den;
}

cplx cross_ratio(const P1Point& a, const P1Point& b, const P1Point& c,
                 const P1Point& d) {
  Mobius t = Mobius::to_standard(a, b, c);
  P1Point img = t.apply(d);
  if (img.at_inf) throw CertifiedFailure("cross_ratio: degenerate quadruple");
  return img.value;
}

namespace {

// comparison band far below tol but far above fp noise
double lex_band(double tol) { return std::max(1e-12, 1e-3 * tol); }

struct Candidate {
  std::vector<cplx> list;
  Mobius map;
};

// Build the flattened candidate list for the ordered triple (i,j,k).
Candidate candidate_for_triple(const PointConfig& c, int i, int j, int k,
                               double band) {
  Candidate cand;
  cand.map = Mobius::to_standard(c.support[i], c.support[j], c.support[k]);
  cand.list.push_back(cplx(double(c.multiplicity[i]), 0.0));
  cand.list.push_back(cplx(double(c.multiplicity[j]), 0.0));
  cand.list.push_back(cplx(double(c.multiplicity[k]), 0.0));
  struct VM {
    cplx v;
    int m;
  };
  std::vector<VM> rest;
  for (int t = 0; t < int(c.support.size()); ++t) {
    if (t == i || t == j || t == k) continue;
    P1Point img = cand.map.apply(c.support[t]);
    if (img.at_inf)
      throw CertifiedFailure("fingerprint: support point collided with triple");
    rest.push_back({img.value, c.multiplicity[t]});
  }
  std::sort(rest.begin(), rest.end(), [band](const VM& a, const VM& b) {
    int cmp = band_cmp(a.v, b.v, band);
    if (cmp != 0) return cmp < 0;
    return a.m < b.m;
  });
  for (auto& vm : rest) {
    cand.list.push_back(vm.v);
    cand.list.push_back(cplx(double(vm.m), 0.0));
  }
  return cand;
}

void check_stable(const PointConfig& c) {
  if (int(c.support.size()) < 3)
    throw CertifiedFailure(
        "unstable configuration: fewer than 3 distinct support points");
  if (c.support.size() != c.multiplicity.size())
    throw MalformedInput("point config: support/multiplicity length mismatch");
}

}  // namespace

std::string ModuliFingerprint::hash_hex() const {
  return to_hex(fnv_hash(canonical, tol));
}

bool ModuliFingerprint::equal(const ModuliFingerprint& a,
                              const ModuliFingerprint& b, double tol) {
  if (a.canonical.size() != b.canonical.size()) return false;
  for (size_t i = 0; i < a.canonical.size(); ++i)
    if (std::abs(a.canonical[i] - b.canonical[i]) > tol) return false;
  return true;
}

ModuliFingerprint canonical_fingerprint(const PointConfig& c, double tol,
                                        bool parallel) {
  check_stable(c);
  const int k = int(c.support.size());
  const double band = lex_band(tol);

  // enumerate ordered triples
  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l)
        if (i != j && j != l && i != l) triples.push_back({i, j, l});

  std::vector<Candidate> cands(triples.size());
  if (parallel) {
#ifdef SLICEMODULI_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long t = 0; t < long(triples.size()); ++t)
      cands[t] =
          candidate_for_triple(c, triples[t][0], triples[t][1], triples[t][2], band);
  } else {
    for (size_t t = 0; t < triples.size(); ++t)
      cands[t] =
          candidate_for_triple(c, triples[t][0], triples[t][1], triples[t][2], band);
  }

  int best = 0;
  for (int t = 1; t < int(cands.size()); ++t)
    if (band_cmp(cands[t].list, cands[best].list, band) < 0) best = t;

  ModuliFingerprint fp;
  fp.tol = tol;
  fp.canonical = cands[best].list;
  fp.normalizer = cands[best].map;

  // j multiset over 4-element support subsets
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int cc = b + 1; cc < k; ++cc)
        for (int dd = cc + 1; dd < k; ++dd)
          fp.jset.push_back(
              j_invariant(cross_ratio(c.support[a], c.support[b],
                                      c.support[cc], c.support[dd])));
  std::sort(fp.jset.begin(), fp.jset.end(), [band](cplx a, cplx b) {
    return band_cmp(a, b, band) < 0;
  });
  return fp;
}

PointConfig apply_mobius(const PointConfig& c, const Mobius& g) {
  PointConfig out = c;
  for (auto& p : out.support) p = g.apply(p);
  return out;
}

namespace {

// weighted multiset match within chordal tol
bool configs_match(const PointConfig& a, const PointConfig& b, double tol) {
  if (a.support.size() != b.support.size()) return false;
  std::vector<bool> used(b.support.size(), false);
  for (size_t i = 0; i < a.support.size(); ++i) {
    bool hit = false;
    for (size_t j = 0; j < b.support.size(); ++j) {
      if (used[j] || a.multiplicity[i] != b.multiplicity[j]) continue;
      if (chordal(a.support[i], b.support[j]) <= tol) {
        used[j] = true;
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

std::optional<ModuliWitness> same_moduli_witness(const PointConfig& a,
                                                 const PointConfig& b,
                                                 double tol) {
  check_stable(a);
  check_stable(b);
  if (a.support.size() != b.support.size()) return std::nullopt;
  if (a.total_degree() != b.total_degree()) return std::nullopt;

  // jset pre-filter
  auto fa = canonical_fingerprint(a, tol);
  auto fb = canonical_fingerprint(b, tol);
  if (fa.jset.size() == fb.jset.size()) {
    double mism = 0.0;
    for (size_t i = 0; i < fa.jset.size(); ++i)
      mism = std::max(mism, std::abs(fa.jset[i] - fb.jset[i]));
    // j values vary on the scale of thousands; generous relative filter
    double scale = 1.0;
    for (auto& j : fa.jset) scale = std::max(scale, std::abs(j));
    if (mism > 1e-4 * scale) return std::nullopt;
  }

  // Exact orbit search: map a's minimizing triple to every ordered triple
  // of b's support with matching multiplicities.
  Mobius ta = fa.normalizer;
  int mi = int(std::real(fa.canonical[0]));
  int mj = int(std::real(fa.canonical[1]));
  int ml = int(std::real(fa.canonical[2]));
  const int k = int(b.support.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        if (i == j || j == l || i == l) continue;
        if (b.multiplicity[i] != mi || b.multiplicity[j] != mj ||
            b.multiplicity[l] != ml)
          continue;
        Mobius tb = Mobius::to_standard(b.support[i], b.support[j], b.support[l]);
        Mobius g = tb.inverse().compose(ta);
        if (configs_match(apply_mobius(a, g), b, tol))
          return ModuliWitness{g};
      }
  return std::nullopt;
}

bool same_moduli(const PointConfig& a, const PointConfig& b, double tol) {
  return same_moduli_witness(a, b, tol).has_value();
}

}  // namespace slicemoduli
