#ifndef SLICEMODULI_STABLE_TREES_HPP
#define SLICEMODULI_STABLE_TREES_HPP

#include <string>
#include <vector>

#include "slicemoduli/binary_form.hpp"
#include "slicemoduli/rational.hpp"
#include "slicemoduli/util.hpp"

namespace slicemoduli {

// One root branch as a truncated generalized power series in t, exponents
// rational and >= 0, sorted ascending.
struct SeriesBranch {
  std::vector<std::pair<Rational, cplx>> terms;

  cplx eval(double t) const;
};

// Numeric path: samples (t, root value) at a geometric ladder of t.
struct NumericBranch {
  std::vector<std::pair<double, cplx>> samples;
};

struct RootFamily {
  std::vector<SeriesBranch> series;
  std::vector<NumericBranch> numeric;

  bool exact() const { return !series.empty(); }
  int degree() const {
    return int(exact() ? series.size() : numeric.size());
  }
  // Sample the exact branches at the standard ladder (1e-2 .. 1e-6).
  RootFamily sampled() const;
};

// Rooted dual tree of the stable limit.  vertices[root] is the original
// fiber; edge scale jumps are recorded as each vertex's valuation level.
struct DualTree {
  struct Vertex {
    std::vector<int> marks;  // 1-based branch labels
    std::vector<int> children;
    int parent = -1;
    Rational scale;  // valuation depth (0 for the original fiber)
  };
  std::vector<Vertex> vertices;
  int root = 0;
  int d = 0;

  int special_points(int v) const {
    const Vertex& vx = vertices[v];
    return int(vx.marks.size() + vx.children.size()) + (vx.parent >= 0 ? 1 : 0);
  }
};

// Ultrametric clustering of branches by pairwise valuation of differences,
// followed by contraction of unstable components.
DualTree stable_limit(const RootFamily& fam, double residual_threshold = 0.05);

// Valuation matrix entry point, exposed for the hand-computed oracles.
std::vector<std::vector<Rational>> pairwise_valuations_exact(
    const std::vector<SeriesBranch>& branches);
std::vector<std::vector<Rational>> pairwise_valuations_numeric(
    const std::vector<NumericBranch>& branches, double residual_threshold);
DualTree tree_from_valuations(const std::vector<std::vector<Rational>>& v);

enum class TreeClass { KDandelion, StraightTree, Other };
struct ClassifyResult {
  TreeClass cls = TreeClass::Other;
  std::string detail;
};
ClassifyResult classify_tree(const DualTree& t, int k);

// Counting lemmas.
long long count_straight_trees(int d);                       // d!/8
long long preimage_count(const MultiplicityVector& mult);    // d!/prod m_i!
long long straight_trees_over_line(int a, int b, int d);     // a!b!/4 or (d-2)!/2

// The degenerating family behind the k-dandelion construction:
// roots t, t^2, ..., t^{d-k}, -(t+...+t^{d-k}) plus k-1 transverse constants.
RootFamily dandelion_family(int d, int k);

std::string tree_to_dot(const DualTree& t);

}  // namespace slicemoduli

#endif
