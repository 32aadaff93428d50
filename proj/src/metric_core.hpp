#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace windmill {

// Finite vertex set with one distance function per vertex. d(y)(x,z) is defined
// for x != y != z (x == z allowed). Three storage backends:
//   dense      - explicit rational table (optionally partial)
//   indicator  - 0/1 betweenness derived from an ambient graph metric
//   gates      - |offset(y,x) - offset(y,z)| from per-axis gate positions
// The indicator and gate forms keep big tree instances at O(n^2) memory.
class DistanceSystem {
 public:
  static DistanceSystem dense(int n, Rat theta, bool partial = false);
  static DistanceSystem indicator(std::vector<std::vector<int>> dist_matrix);
  static DistanceSystem gates(std::vector<std::vector<long long>> offsets, Rat theta);

  int size() const { return n_; }
  const Rat& theta() const { return theta_; }
  void set_theta(const Rat& t) { theta_ = t; }
  bool degenerate() const { return n_ <= 2; }

  Rat at(int y, int x, int z) const;  // throws InputError on domain violation / missing entry
  bool has(int y, int x, int z) const;
  void set(int y, int x, int z, const Rat& v);  // dense only; stores both (x,z) and (z,x)

  // Indicator systems remember the ambient graph metric they came from.
  bool is_indicator() const { return kind_ == Kind::Indicator; }
  int ambient_distance(int x, int z) const;

  std::vector<std::string> labels;  // optional, for reports

 private:
  enum class Kind { Dense, Indicator, Gates };
  Kind kind_ = Kind::Dense;
  int n_ = 0;
  Rat theta_{0};
  bool partial_ = false;
  std::vector<Rat> table_;          // dense
  std::vector<char> defined_;       // dense partial
  std::vector<std::vector<int>> dist_;            // indicator
  std::vector<std::vector<long long>> offsets_;   // gates
  std::size_t idx(int y, int x, int z) const;
  void check_domain(int y, int x, int z) const;
};

struct AxiomWitness {
  std::string axiom;
  std::vector<int> tuple;
  std::vector<Rat> values;
};

struct AxiomReport {
  bool symmetry_ok = false;
  bool triangle_ok = false;
  bool triples_ok = false;
  bool finiteness_ok = false;
  int finiteness_max_count = 0;  // max over (x,z) of #{y : d_y(x,z) > theta}
  bool degenerate = false;
  long long violation_count = 0;
  std::vector<AxiomWitness> witnesses;  // capped sample, never empty when a flag is false
  bool all_ok() const { return symmetry_ok && triangle_ok && triples_ok && finiteness_ok; }
};

// Exhaustive check of the four axioms against ds.theta().
AxiomReport verify_axioms(const DistanceSystem& ds);

struct ComplexGraph {
  int n = 0;
  Rat K{0};
  std::vector<std::vector<bool>> adj;
  std::vector<std::vector<int>> adj_list;  // sorted neighbor lists
  std::vector<std::vector<int>> dist;      // all-pairs; -1 if unreachable
  int diameter = 0;                        // max finite distance
  bool degenerate = false;
  std::vector<std::string> labels;
  long long edge_count = 0;
};

// Edge {x,z} iff d(y)(x,z) <= K for every y outside {x,z}. K must be positive.
ComplexGraph build_complex(const DistanceSystem& ds, const Rat& K);

// Graph assembled from an explicit edge list (distances filled in by BFS).
ComplexGraph complex_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Every shortest path from x to z, in lexicographic vertex order. Throws
// InputError if x and z are in different components, TruncationError if more
// than max_paths geodesics exist.
std::vector<std::vector<int>> all_geodesics(const ComplexGraph& g, int x, int z,
                                            std::size_t max_paths = 1u << 20);

// Vertices lying on every geodesic from x to z (excluding x and z themselves).
std::vector<int> geodesic_waypoints(const ComplexGraph& g, int x, int z);

struct ConstantsReport {
  Rat Ke{0};
  Rat Kp{0};
  Rat Kg{0};
  Rat theta{0};
  Rat m{0};            // 11 Ke + 6 Kg + 5 Kp
  Rat L_threshold{1};  // 3 (m + theta) + 1
  bool degenerate = false;
  int path_bound = 0;  // bound used for the path constant scan
};

struct Threshold {
  Rat L;
  Rat m;
};

Threshold spinning_threshold(const Rat& Ke, const Rat& Kg, const Rat& Kp, const Rat& theta);
inline Threshold spinning_threshold(const ConstantsReport& c) {
  return spinning_threshold(c.Ke, c.Kg, c.Kp, c.theta);
}

// Measures the edge, path and geodesic constants of g against ds and fills in
// the derived threshold. path_bound defaults to 2 * diameter.
ConstantsReport measure_constants(const DistanceSystem& ds, const ComplexGraph& g,
                                  std::optional<int> path_bound = std::nullopt);

// Summed system over a shared vertex universe: dd(y)(x,z) is the sum of
// systems[j].at(y,x,z) over j in grouping[y]. The returned theta is
// 12 * C * theta0 with C the largest grouping multiset; theta0 defaults to
// max(1, max component theta).
DistanceSystem sum_distance_systems(const std::vector<DistanceSystem>& systems,
                                    const std::vector<std::vector<int>>& grouping,
                                    std::optional<Rat> theta0 = std::nullopt);

}  // namespace windmill
