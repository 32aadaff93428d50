#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detrand.hpp"
#include "metric_core.hpp"
#include "rational.hpp"

namespace windmill {

// Finite simplicial tree, possibly a declared truncation of an infinite one.
// Distance queries go through an LCA table, so big Cayley balls stay cheap.
class Tree {
 public:
  static Tree from_edges(int n, std::vector<std::pair<int, int>> edges,
                         std::vector<std::string> labels = {});

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  int dist(int u, int v) const;
  int lca(int u, int v) const;
  std::vector<int> path(int u, int v) const;  // unique geodesic, endpoints included
  bool between(int y, int x, int z) const { return dist(x, y) + dist(y, z) == dist(x, z); }

  int truncation_radius = -1;  // declared radius, -1 when not applicable

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
  std::vector<int> depth_;
  std::vector<std::vector<int>> up_;  // binary lifting table
};

// Indicator system: d(y)(x,z) = 1 iff y lies on the geodesic from x to z.
DistanceSystem tree_distance_system(const Tree& t);

// All target vertices minimizing distance to p (a single gate when the target
// is connected).
std::vector<int> nearest_point_projection(const Tree& t, const std::vector<int>& target, int p);

// Vertex map on the truncation; -1 marks images outside it.
struct TreeIsometry {
  std::string name;
  std::vector<int> image;
};

// Throws InputError when the defined part is not injective / adjacency preserving.
void validate_isometry(const Tree& t, const TreeIsometry& f);

struct AxisBundle {
  std::string owner;
  std::vector<int> vertices;  // ordered along the line
};

struct AxisResult {
  bool hyperbolic = false;
  long long translation_length = 0;  // min displacement when hyperbolic
  AxisBundle axis;                   // empty when elliptic
};

AxisResult axis_of(const Tree& t, const TreeIsometry& f);

// Per-axis gate data: position along the axis of the nearest-point projection.
struct AxisGates {
  std::vector<std::vector<int>> pos;  // pos[axis][vertex]
};
AxisGates compute_axis_gates(const Tree& t, const std::vector<AxisBundle>& axes);

// d(alpha)(beta,gamma) = diam(pi_alpha(beta) u pi_alpha(gamma)); theta is the
// measured max of diam pi_alpha(beta) over distinct axes.
DistanceSystem axis_distance_system(const Tree& t, const std::vector<AxisBundle>& axes);

struct DistanceFormulaReport {
  bool pass = false;
  Rat M_used{0};
  Rat minimal_M{0};  // smallest cutoff making the inequality hold on the sample
  Rat min_slack{0};  // min over pairs of lhs - rhs
  long long pairs_checked = 0;
  long long failures = 0;
  std::vector<std::array<long long, 4>> failure_samples;  // x, z, lhs, 6*rhs
};

// Checks d(x,z) >= (1/6) sum_alpha cut(d_alpha(x,z))_M over the sampled pairs.
DistanceFormulaReport distance_formula_check(const Tree& t, const std::vector<AxisBundle>& axes,
                                             const Rat& M,
                                             const std::vector<std::pair<int, int>>& samples);

// AHU canonical form of a free tree; equal strings iff isomorphic.
std::string tree_canonical_form(const Tree& t);

// Interprets g as a graph and tests tree-isomorphism with t (false when g is
// not a tree).
bool complex_isomorphic_to_tree(const ComplexGraph& g, const Tree& t);

bool complex_is_complete(const ComplexGraph& g);

// Uniform random attachment tree on n vertices.
Tree random_tree(int n, DetRand& rng);

}  // namespace windmill
