#include "instances.hpp"

#include <algorithm>
#include <deque>

#include "errors.hpp"

namespace windmill {

CosetInstance::CosetInstance(GroupSig sig, Metric metric, int radius, int exp_bound,
                             FamilyKind family, int power, std::optional<GroupSig> kernel_target)
    : model_(std::move(sig)),
      metric_(metric),
      radius_(radius),
      exp_bound_(exp_bound),
      family_(family),
      power_(power),
      kernel_target_(std::move(kernel_target)) {
  if (radius_ <= 0) throw InputError("truncation radius must be positive");
  if (exp_bound_ <= 0) throw InputError("exponent bound must be positive");
  if (power_ <= 0) throw InputError("family power must be positive");
  if (kernel_target_) {
    if (kernel_target_->arity() != 2) throw InputError("kernel quotient must have two generators");
    for (int ord : kernel_target_->orders)
      if (ord != 0 && ord - 1 > exp_bound_)
        throw InputError("exponent bound too small for the declared kernel quotient");
  }
  universe_ = model_.ball(base_vertex(), radius_, exp_bound_);
  universe_set_ = std::set<Coset, CosetLess>(universe_.begin(), universe_.end());
}

Rat CosetInstance::dist_fn(const Coset& y, const Coset& x, const Coset& z) const {
  if (y == x || y == z) throw InputError("distance function undefined at its own vertex");
  if (metric_ == Metric::Indicator) {
    if (x == z) return Rat(0);
    return model_.on_geodesic(y, x, z) ? Rat(1) : Rat(0);
  }
  long long gx = model_.gate_offset(y, x);
  long long gz = model_.gate_offset(y, z);
  return Rat(gx >= gz ? gx - gz : gz - gx);
}

bool CosetInstance::family_nontrivial(const Coset& v) const {
  if (family_ == FamilyKind::Trivial) return false;
  int order = model_.sig().orders[static_cast<std::size_t>(v.side)];
  if (order == 1) return false;
  if (family_ == FamilyKind::ConjugatePower && order != 0 && power_ % order == 0) return false;
  return true;
}

Word CosetInstance::family_generator(const Coset& v) const {
  int n = family_ == FamilyKind::Stabilizers ? 1 : power_;
  return word_conj(model_.sig(), v.rep, word_letter(model_.sig(), v.side, n));
}

int CosetInstance::family_order(const Coset& v) const {
  int order = model_.sig().orders[static_cast<std::size_t>(v.side)];
  if (family_ == FamilyKind::Stabilizers) return order;
  if (order == 0) return 0;
  int g = power_ % order;
  // order of s^g in Z/order
  int d = 1;
  while ((static_cast<long long>(g) * d) % order != 0) ++d;
  return d;
}

std::optional<Word> CosetInstance::kernel_image(const Word& w) const {
  if (!kernel_target_) return std::nullopt;
  return word_map(model_.sig(), *kernel_target_, w);
}

int CosetInstance::orbit_membership(const std::vector<Word>& h_gens,
                                    const std::vector<Coset>& inner_N, const Coset& v) const {
  if (!kernel_target_) return -1;
  for (const Word& g : h_gens)
    if (!word_map(model_.sig(), *kernel_target_, g).is_identity()) return -1;
  auto cls = [&](const Coset& c) {
    Word img = word_map(model_.sig(), *kernel_target_, c.rep);
    // Quotient class of the coset: reduce mod the image subgroup on the right.
    if (!img.letters.empty() && img.letters.back().gen == c.side) img.letters.pop_back();
    return std::make_pair(c.side, word_str(*kernel_target_, img));
  };
  auto target = cls(v);
  for (const Coset& n : inner_N)
    if (cls(n) == target) return -1;
  return 0;
}

bool CosetInstance::tree_spinning_holds(int word_bound, std::string* witness) const {
  for (const Coset& v : universe_) {
    if (!family_nontrivial(v)) continue;
    Word gen = family_generator(v);
    int order = family_order(v);
    long long limit = order > 0 ? order - 1 : word_bound;
    for (long long k = 1; k <= limit; ++k) {
      Word h = word_pow(model_.sig(), gen, k);
      if (h.is_identity()) continue;
      for (const Coset& e : model_.neighbors(v, exp_bound_)) {
        Coset he = model_.act(h, e);
        if (he == e) {
          if (witness)
            *witness = "h=" + word_str(model_.sig(), h) + " fixes the edge toward " +
                       model_.label(e) + " at " + model_.label(v);
          return false;
        }
      }
    }
  }
  return true;
}

Materialized materialize(const CosetInstance& inst, const Rat& K, bool with_complex) {
  Materialized m;
  m.vertices = inst.universe();
  for (std::size_t i = 0; i < m.vertices.size(); ++i)
    m.index[m.vertices[i]] = static_cast<int>(i);
  const int n = static_cast<int>(m.vertices.size());
  const CosetModel& model = inst.model();

  std::vector<std::string> labels;
  for (const Coset& v : m.vertices) labels.push_back(model.label(v));

  if (inst.metric() == CosetInstance::Metric::Indicator) {
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            model.distance(m.vertices[static_cast<std::size_t>(i)],
                           m.vertices[static_cast<std::size_t>(j)]);
    m.system = DistanceSystem::indicator(std::move(dist));
  } else {
    std::vector<std::vector<long long>> offsets(static_cast<std::size_t>(n),
                                                std::vector<long long>(static_cast<std::size_t>(n), 0));
    Rat delta(0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        offsets[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            model.gate_offset(m.vertices[static_cast<std::size_t>(i)],
                              m.vertices[static_cast<std::size_t>(j)]);
      }
    m.system = DistanceSystem::gates(std::move(offsets), delta);
  }
  m.system.labels = labels;
  if (with_complex) m.complex = build_complex(m.system, K);

  // Left multiplication action of the model generators, partial on the ball.
  std::vector<GroupAction::Generator> gens;
  const GroupSig& sig = model.sig();
  for (int g = 0; g < sig.arity(); ++g) {
    GroupAction::Generator gen;
    gen.name = std::string(1, sig.names[static_cast<std::size_t>(g)]);
    gen.image.assign(static_cast<std::size_t>(n), -1);
    Word w = word_letter(sig, g, 1);
    for (int i = 0; i < n; ++i) {
      Coset img = model.act(w, m.vertices[static_cast<std::size_t>(i)]);
      auto it = m.index.find(img);
      if (it != m.index.end()) gen.image[static_cast<std::size_t>(i)] = it->second;
    }
    gens.push_back(std::move(gen));
  }
  QuotientOracle oracle;
  oracle.target = sig;
  for (int g = 0; g < sig.arity(); ++g) oracle.gen_images.push_back(word_letter(sig, g, 1));
  oracle.faithful = true;  // evaluation in the group itself
  m.action = std::make_shared<GroupAction>(n, std::move(gens), oracle);

  GroupSig free_sig = m.action->word_sig();
  for (int i = 0; i < n; ++i) {
    const Coset& v = m.vertices[static_cast<std::size_t>(i)];
    if (!inst.family_nontrivial(v)) continue;
    // The stabilizer word uses free letters; exponents stay explicit.
    Word gen_model = inst.family_generator(v);
    Word gen_free;
    for (const Letter& l : gen_model.letters)
      gen_free = word_mul(free_sig, gen_free, word_letter(free_sig, l.gen, l.exp));
    m.family.assignments[i] = {gen_free};
  }
  return m;
}

TableInstance::TableInstance(DistanceSystem ds, ComplexGraph g, std::shared_ptr<GroupAction> a,
                             VertexFamily fam)
    : ds_(std::move(ds)), g_(std::move(g)), action_(std::move(a)), fam_(std::move(fam)) {
  if (ds_.size() != g_.n || action_->degree() != ds_.size())
    throw InputError("instance components disagree on the vertex set");
}

std::string TableInstance::vertex_label(int v) const {
  if (v >= 0 && v < static_cast<int>(ds_.labels.size()) && !ds_.labels[static_cast<std::size_t>(v)].empty())
    return ds_.labels[static_cast<std::size_t>(v)];
  return std::to_string(v);
}

std::vector<int> TableInstance::universe() const {
  std::vector<int> out(static_cast<std::size_t>(ds_.size()));
  for (int i = 0; i < ds_.size(); ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

int TableInstance::graph_distance(int x, int z) const {
  int d = g_.dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)];
  if (d < 0) throw InputError("vertices in different components");
  return d;
}

int TableInstance::act(const Word& g, int v) const {
  int img = action_->apply(g, v);
  if (img < 0)
    throw TruncationError("action of " + action_->str(g) + " leaves the truncation at vertex " +
                          std::to_string(v));
  return img;
}

bool TableInstance::family_nontrivial(int v) const {
  if (!fam_.has(v) || fam_.at(v).empty()) return false;
  auto trivial = action_->is_trivial(fam_.at(v).front());
  return !(trivial.has_value() && *trivial);
}

Word TableInstance::family_generator(int v) const {
  if (!fam_.has(v)) throw InputError("no subgroup data at vertex " + std::to_string(v));
  const auto& gens = fam_.at(v);
  if (gens.size() != 1)
    throw InputError("certificate machinery needs cyclic R_v (one generator), vertex " +
                     std::to_string(v));
  return gens.front();
}

int TableInstance::family_order(int v) const {
  Word gen = family_generator(v);
  std::string key = action_->str(gen);
  auto it = order_cache_.find(key);
  if (it != order_cache_.end()) return it->second;
  int order = 0;
  Word acc;
  for (int k = 1; k <= 64; ++k) {
    acc = word_mul(action_->word_sig(), acc, gen);
    auto trivial = action_->is_trivial(acc);
    if (trivial.has_value() && *trivial) {
      order = k;
      break;
    }
  }
  order_cache_[key] = order;
  return order;
}

std::string TableInstance::oracle_normal_form(const Word& w) const {
  const auto& oracle = action_->oracle();
  if (oracle && oracle->faithful) return word_str(oracle->target, oracle->image(w));
  // Fall back to the permutation on the truncation as an identity key.
  std::string s;
  for (int v : action_->apply_all(w)) {
    s += std::to_string(v);
    s += ",";
  }
  return s;
}

std::optional<Word> TableInstance::kernel_image(const Word& w) const {
  const auto& oracle = action_->oracle();
  if (oracle && !oracle->faithful) return oracle->image(w);
  return std::nullopt;
}

CayleyBall cayley_ball(const GroupSig& sig, int radius) {
  for (int ord : sig.orders)
    if (ord != 0) throw InputError("Cayley ball helper needs a free group");
  CayleyBall ball;
  ball.sig = sig;
  ball.radius = radius;
  std::set<Word, WordLess> seen{Word{}};
  std::vector<Word> frontier{Word{}};
  for (int r = 1; r <= radius; ++r) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (int g = 0; g < sig.arity(); ++g)
        for (long long e : {1LL, -1LL}) {
          Word v = word_mul(sig, w, word_letter(sig, g, e));
          if (word_length(sig, v) != r) continue;
          if (seen.insert(v).second) next.push_back(v);
        }
    frontier = std::move(next);
  }
  ball.words.assign(seen.begin(), seen.end());
  for (std::size_t i = 0; i < ball.words.size(); ++i)
    ball.index[ball.words[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < ball.words.size(); ++i) {
    const Word& w = ball.words[i];
    if (w.is_identity()) continue;
    // parent: strip one letter from the tail
    Word parent = w;
    Letter& last = parent.letters.back();
    if (last.exp > 1)
      --last.exp;
    else if (last.exp < -1)
      ++last.exp;
    else
      parent.letters.pop_back();
    ball.edges.emplace_back(ball.index.at(parent), static_cast<int>(i));
  }
  return ball;
}

Tree cayley_tree(const CayleyBall& ball) {
  std::vector<std::string> labels;
  for (const Word& w : ball.words) labels.push_back(word_str(ball.sig, w));
  Tree t = Tree::from_edges(static_cast<int>(ball.words.size()), ball.edges, labels);
  t.truncation_radius = ball.radius;
  return t;
}

TreeIsometry left_multiplication(const CayleyBall& ball, const Word& g) {
  TreeIsometry f;
  f.name = word_str(ball.sig, g);
  f.image.assign(ball.words.size(), -1);
  for (std::size_t i = 0; i < ball.words.size(); ++i) {
    Word img = word_mul(ball.sig, g, ball.words[i]);
    auto it = ball.index.find(img);
    if (it != ball.index.end()) f.image[i] = it->second;
  }
  return f;
}

std::vector<AxisBundle> conjugate_axes(const CayleyBall& ball, int conjugator_bound) {
  const GroupSig& sig = ball.sig;
  CosetModel cosets(sig);
  std::vector<AxisBundle> axes;
  std::set<Coset, CosetLess> seen;
  for (const Word& g : ball.words) {
    if (word_length(sig, g) > conjugator_bound) continue;
    for (int side = 0; side < sig.arity(); ++side) {
      Coset coset = cosets.canonical(side, g);
      if (!seen.insert(coset).second) continue;
      AxisBundle axis;
      axis.owner = cosets.label(coset);
      long long k = 0;
      // walk down to the smallest power inside the ball, then sweep upward
      while (ball.index.count(word_mul(sig, coset.rep, word_letter(sig, side, k - 1))) != 0) --k;
      for (;; ++k) {
        Word v = k == 0 ? coset.rep : word_mul(sig, coset.rep, word_letter(sig, side, k));
        auto it = ball.index.find(v);
        if (it == ball.index.end()) break;
        axis.vertices.push_back(it->second);
      }
      if (axis.vertices.size() >= 2) axes.push_back(std::move(axis));
    }
  }
  return axes;
}

VertexFamily extend_family_by_conjugation(const GroupAction& a, const VertexFamily& reps,
                                          int word_bound) {
  VertexFamily out = reps;
  const GroupSig& sig = a.word_sig();
  // BFS over generator moves from each assigned representative.
  std::deque<std::pair<int, Word>> queue;
  for (const auto& [v, gens] : reps.assignments) queue.emplace_back(v, Word{});
  std::map<int, Word> transport;
  for (const auto& [v, gens] : reps.assignments) transport[v] = Word{};
  while (!queue.empty()) {
    auto [v, via] = queue.front();
    queue.pop_front();
    if (static_cast<int>(word_length(sig, via)) >= word_bound) continue;
    for (int g = 0; g < a.gen_count(); ++g)
      for (long long e : {1LL, -1LL}) {
        Word step = word_letter(sig, g, e);
        int img = a.apply(step, v);
        if (img < 0 || transport.count(img)) continue;
        Word new_via = word_mul(sig, step, via);
        transport[img] = new_via;
        queue.emplace_back(img, new_via);
      }
  }
  for (const auto& [v, via] : transport) {
    if (out.has(v)) continue;
    // v = via . rep for some assigned rep; find it by applying via^-1.
    int rep = a.apply(word_inv(sig, via), v);
    if (rep < 0 || !reps.has(rep)) continue;
    std::vector<Word> gens;
    for (const Word& r : reps.at(rep)) gens.push_back(word_conj(sig, via, r));
    out.assignments[v] = gens;
  }
  return out;
}

}  // namespace windmill
