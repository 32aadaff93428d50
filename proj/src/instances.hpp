#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coset_model.hpp"
#include "group_action.hpp"
#include "metric_core.hpp"
#include "tree_backend.hpp"
#include "windmill_core.hpp"
#include "words.hpp"

namespace windmill {

// Model-backed instance: the complex is the coset tree of a two-factor free
// product, the metric is either the betweenness indicator or the axis gate
// distance, and the ambient group acts by left multiplication. Quantified
// scans run over the declared truncation ball; per-word evidence (actions,
// distances, geodesics) is exact coset arithmetic at any depth.
class CosetInstance {
 public:
  enum class Metric { Indicator, Gates };
  enum class FamilyKind { Stabilizers, ConjugatePower, Trivial };

  CosetInstance(GroupSig sig, Metric metric, int radius, int exp_bound, FamilyKind family,
                int power, std::optional<GroupSig> kernel_target);

  using Vertex = Coset;
  using Less = CosetLess;

  const CosetModel& model() const { return model_; }
  Metric metric() const { return metric_; }
  int radius() const { return radius_; }
  int exp_bound() const { return exp_bound_; }
  Coset base_vertex() const { return model_.base(0); }

  std::string vertex_label(const Coset& v) const { return model_.label(v); }
  const std::vector<Coset>& universe() const { return universe_; }
  bool in_universe(const Coset& v) const { return universe_set_.count(v) != 0; }
  std::vector<Coset> neighbors(const Coset& v) const { return model_.neighbors(v, exp_bound_); }

  Rat dist_fn(const Coset& y, const Coset& x, const Coset& z) const;
  std::vector<std::vector<Coset>> geodesics(const Coset& x, const Coset& z) const {
    return {model_.geodesic(x, z)};
  }
  int graph_distance(const Coset& x, const Coset& z) const { return model_.distance(x, z); }
  Coset act(const Word& g, const Coset& v) const { return model_.act(g, v); }

  bool family_nontrivial(const Coset& v) const;
  Word family_generator(const Coset& v) const;
  int family_order(const Coset& v) const;

  const GroupSig& group_sig() const { return model_.sig(); }
  std::optional<bool> oracle_trivial(const Word& w) const { return w.is_identity(); }
  std::string oracle_normal_form(const Word& w) const { return word_str(model_.sig(), w); }
  std::optional<Word> kernel_image(const Word& w) const;

  // Certainly-outside test for W_i = H . N beyond the inner approximation:
  // when every H generator dies in the kernel quotient, membership preserves
  // the quotient class, and the inner N covers every class of the true N
  // provided exp_bound dominates the quotient orders (asserted on build).
  int orbit_membership(const std::vector<Word>& h_gens, const std::vector<Coset>& inner_N,
                       const Coset& v) const;

  // Tree spinning condition h(e) != e for the edges at v, h in R_v.
  bool tree_spinning_holds(int word_bound, std::string* witness) const;

 private:
  CosetModel model_;
  Metric metric_;
  int radius_;
  int exp_bound_;
  FamilyKind family_;
  int power_;
  std::optional<GroupSig> kernel_target_;
  std::vector<Coset> universe_;
  std::set<Coset, CosetLess> universe_set_;
};

// A coset instance materialized on its truncation: integer-indexed system,
// complex, action and family, suitable for the table-driven checks.
struct Materialized {
  std::vector<Coset> vertices;
  std::map<Coset, int, CosetLess> index;
  DistanceSystem system;
  ComplexGraph complex;
  std::shared_ptr<GroupAction> action;
  VertexFamily family;

  Materialized() : system(DistanceSystem::dense(0, Rat(0))) {}
};

Materialized materialize(const CosetInstance& inst, const Rat& K, bool with_complex = true);

// Generic instance assembled from explicit tables (JSON inputs).
class TableInstance {
 public:
  TableInstance(DistanceSystem ds, ComplexGraph g, std::shared_ptr<GroupAction> a,
                VertexFamily fam);

  using Vertex = int;
  struct Less {
    bool operator()(int a, int b) const { return a < b; }
  };

  std::string vertex_label(int v) const;
  std::vector<int> universe() const;
  bool in_universe(int v) const { return v >= 0 && v < ds_.size(); }
  std::vector<int> neighbors(int v) const { return g_.adj_list[static_cast<std::size_t>(v)]; }

  Rat dist_fn(int y, int x, int z) const { return ds_.at(y, x, z); }
  std::vector<std::vector<int>> geodesics(int x, int z) const { return all_geodesics(g_, x, z); }
  int graph_distance(int x, int z) const;
  int act(const Word& g, int v) const;

  bool family_nontrivial(int v) const;
  Word family_generator(int v) const;
  int family_order(int v) const;

  const GroupSig& group_sig() const { return action_->word_sig(); }
  std::optional<bool> oracle_trivial(const Word& w) const { return action_->is_trivial(w); }
  std::string oracle_normal_form(const Word& w) const;
  std::optional<Word> kernel_image(const Word& w) const;
  int orbit_membership(const std::vector<Word>&, const std::vector<int>&, int) const {
    return -1;  // only the inner approximation is available for raw tables
  }

  const DistanceSystem& system() const { return ds_; }
  const ComplexGraph& complex() const { return g_; }
  const GroupAction& action() const { return *action_; }
  const VertexFamily& family() const { return fam_; }

 private:
  DistanceSystem ds_;
  ComplexGraph g_;
  std::shared_ptr<GroupAction> action_;
  VertexFamily fam_;
  mutable std::map<std::string, int> order_cache_;
};

// Extends orbit-representative assignments across orbits by conjugation:
// R_{gv} = g R_v g^-1 for every v reachable from an assigned representative.
VertexFamily extend_family_by_conjugation(const GroupAction& a, const VertexFamily& reps,
                                          int word_bound);

// Truncated Cayley tree of a free group: reduced words of length <= radius.
struct CayleyBall {
  GroupSig sig;
  int radius = 0;
  std::vector<Word> words;  // sorted by WordLess; index 0 is the identity
  std::map<Word, int, WordLess> index;
  std::vector<std::pair<int, int>> edges;
};

CayleyBall cayley_ball(const GroupSig& sig, int radius);
Tree cayley_tree(const CayleyBall& ball);

// Left multiplication by g as a partial isometry of the ball.
TreeIsometry left_multiplication(const CayleyBall& ball, const Word& g);

// The line {g s^k} for the coset g<s>, intersected with the ball and ordered
// along k. Skips lines meeting the ball in fewer than two vertices.
std::vector<AxisBundle> conjugate_axes(const CayleyBall& ball, int conjugator_bound);

}  // namespace windmill
