#include "tree_backend.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "errors.hpp"

namespace windmill {

Tree Tree::from_edges(int n, std::vector<std::pair<int, int>> edges,
                      std::vector<std::string> labels) {
  if (n <= 0) throw InputError("tree needs at least one vertex");
  if (static_cast<int>(edges.size()) != n - 1)
    throw InputError("tree must have exactly n-1 edges");
  Tree t;
  t.n_ = n;
  t.adj_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v) throw InputError("bad tree edge");
    t.adj_[static_cast<std::size_t>(u)].push_back(v);
    t.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : t.adj_) std::sort(nb.begin(), nb.end());
  t.edges_ = std::move(edges);
  t.labels_ = std::move(labels);

  // Root at 0, build depth + binary lifting; a BFS reaching all vertices also
  // certifies connectedness (and with n-1 edges, acyclicity).
  t.depth_.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), 0);
  std::deque<int> queue{0};
  t.depth_[0] = 0;
  int seen = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : t.adj_[static_cast<std::size_t>(v)])
      if (t.depth_[static_cast<std::size_t>(w)] < 0) {
        t.depth_[static_cast<std::size_t>(w)] = t.depth_[static_cast<std::size_t>(v)] + 1;
        parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
        ++seen;
      }
  }
  if (seen != n) throw InputError("tree edge list is not connected");

  int levels = 1;
  while ((1 << levels) < n) ++levels;
  t.up_.assign(static_cast<std::size_t>(levels), std::vector<int>(static_cast<std::size_t>(n)));
  t.up_[0] = parent;
  for (int k = 1; k < levels; ++k)
    for (int v = 0; v < n; ++v)
      t.up_[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)] =
          t.up_[static_cast<std::size_t>(k - 1)]
              [static_cast<std::size_t>(t.up_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(v)])];
  return t;
}

int Tree::lca(int u, int v) const {
  if (depth_[static_cast<std::size_t>(u)] < depth_[static_cast<std::size_t>(v)]) std::swap(u, v);
  int diff = depth_[static_cast<std::size_t>(u)] - depth_[static_cast<std::size_t>(v)];
  for (std::size_t k = 0; k < up_.size(); ++k)
    if (diff & (1 << k)) u = up_[k][static_cast<std::size_t>(u)];
  if (u == v) return u;
  for (int k = static_cast<int>(up_.size()) - 1; k >= 0; --k)
    if (up_[static_cast<std::size_t>(k)][static_cast<std::size_t>(u)] !=
        up_[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)]) {
      u = up_[static_cast<std::size_t>(k)][static_cast<std::size_t>(u)];
      v = up_[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)];
    }
  return up_[0][static_cast<std::size_t>(u)];
}

int Tree::dist(int u, int v) const {
  int a = lca(u, v);
  return depth_[static_cast<std::size_t>(u)] + depth_[static_cast<std::size_t>(v)] -
         2 * depth_[static_cast<std::size_t>(a)];
}

std::vector<int> Tree::path(int u, int v) const {
  int a = lca(u, v);
  std::vector<int> left, right;
  for (int x = u; x != a; x = up_[0][static_cast<std::size_t>(x)]) left.push_back(x);
  for (int x = v; x != a; x = up_[0][static_cast<std::size_t>(x)]) right.push_back(x);
  left.push_back(a);
  left.insert(left.end(), right.rbegin(), right.rend());
  return left;
}

DistanceSystem tree_distance_system(const Tree& t) {
  const int n = t.size();
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = t.dist(u, v);
  auto ds = DistanceSystem::indicator(std::move(dist));
  ds.labels = t.labels();
  return ds;
}

std::vector<int> nearest_point_projection(const Tree& t, const std::vector<int>& target, int p) {
  if (target.empty()) throw InputError("projection target must be nonempty");
  int best = -1;
  std::vector<int> out;
  for (int v : target) {
    int d = t.dist(p, v);
    if (best < 0 || d < best) {
      best = d;
      out.clear();
    }
    if (d == best) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void validate_isometry(const Tree& t, const TreeIsometry& f) {
  const int n = t.size();
  if (static_cast<int>(f.image.size()) != n)
    throw InputError("isometry image size does not match the tree");
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    int w = f.image[static_cast<std::size_t>(v)];
    if (w < -1 || w >= n) throw InputError("isometry image out of range");
    if (w >= 0) {
      if (hit[static_cast<std::size_t>(w)])
        throw InputError("isometry not injective at vertex " + std::to_string(w));
      hit[static_cast<std::size_t>(w)] = 1;
    }
  }
  for (auto [u, v] : t.edges()) {
    int fu = f.image[static_cast<std::size_t>(u)];
    int fv = f.image[static_cast<std::size_t>(v)];
    if (fu >= 0 && fv >= 0 && t.dist(fu, fv) != 1)
      throw InputError("isometry does not preserve edge (" + std::to_string(u) + "," +
                       std::to_string(v) + ")");
  }
}

AxisResult axis_of(const Tree& t, const TreeIsometry& f) {
  validate_isometry(t, f);
  const int n = t.size();
  long long best = -1;
  for (int v = 0; v < n; ++v) {
    int w = f.image[static_cast<std::size_t>(v)];
    if (w < 0) continue;
    long long d = t.dist(v, w);
    if (best < 0 || d < best) best = d;
  }
  if (best < 0) throw InputError("isometry has no defined vertices on the truncation");

  AxisResult res;
  if (best == 0) return res;  // elliptic
  res.hyperbolic = true;
  res.translation_length = best;

  std::vector<int> members;
  for (int v = 0; v < n; ++v) {
    int w = f.image[static_cast<std::size_t>(v)];
    if (w >= 0 && t.dist(v, w) == best) members.push_back(v);
  }
  // Min-displacement set intersected with the truncation must induce a path.
  std::set<int> in_set(members.begin(), members.end());
  std::map<int, std::vector<int>> nb;
  for (int v : members)
    for (int w : t.neighbors(v))
      if (in_set.count(w)) nb[v].push_back(w);
  int start = members.front();
  for (int v : members)
    if (nb[v].size() < 2) start = v;
  std::vector<int> ordered{start};
  std::set<int> used{start};
  while (ordered.size() < members.size()) {
    bool advanced = false;
    for (int w : nb[ordered.back()])
      if (!used.count(w)) {
        ordered.push_back(w);
        used.insert(w);
        advanced = true;
        break;
      }
    if (!advanced) throw InputError("min-displacement set is not a path on the truncation");
  }
  for (int v : members)
    if (nb[v].size() > 2) throw InputError("min-displacement set is not a path on the truncation");
  res.axis.owner = f.name;
  res.axis.vertices = std::move(ordered);
  return res;
}

AxisGates compute_axis_gates(const Tree& t, const std::vector<AxisBundle>& axes) {
  const int n = t.size();
  AxisGates g;
  g.pos.assign(axes.size(), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (std::size_t a = 0; a < axes.size(); ++a) {
    const auto& verts = axes[a].vertices;
    if (verts.empty()) throw InputError("empty axis");
    // Multi-source BFS from the axis, remembering which axis vertex was entered.
    std::deque<int> queue;
    auto& pos = g.pos[a];
    for (std::size_t i = 0; i < verts.size(); ++i) {
      pos[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
      queue.push_back(verts[i]);
    }
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : t.neighbors(v))
        if (pos[static_cast<std::size_t>(w)] < 0) {
          pos[static_cast<std::size_t>(w)] = pos[static_cast<std::size_t>(v)];
          queue.push_back(w);
        }
    }
  }
  return g;
}

DistanceSystem axis_distance_system(const Tree& t, const std::vector<AxisBundle>& axes) {
  const int k = static_cast<int>(axes.size());
  if (k < 2) throw InputError("need at least two axes");
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (axes[static_cast<std::size_t>(a)].vertices == axes[static_cast<std::size_t>(b)].vertices)
        throw InputError("coincident axes " + std::to_string(a) + " and " + std::to_string(b));
  AxisGates gates = compute_axis_gates(t, axes);

  // Projection of an axis onto another is the interval of gate positions its
  // vertices reach; the diameter of a union of intervals is max - min.
  std::vector<std::vector<std::pair<int, int>>> span(
      static_cast<std::size_t>(k), std::vector<std::pair<int, int>>(static_cast<std::size_t>(k)));
  Rat delta(0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      int lo = -1, hi = -1;
      for (int v : axes[static_cast<std::size_t>(b)].vertices) {
        int p = gates.pos[static_cast<std::size_t>(a)][static_cast<std::size_t>(v)];
        if (lo < 0 || p < lo) lo = p;
        if (hi < 0 || p > hi) hi = p;
      }
      span[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = {lo, hi};
      delta = std::max(delta, Rat(hi - lo));
    }

  DistanceSystem ds = DistanceSystem::dense(k, delta);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (b == a) continue;
      for (int c = b; c < k; ++c) {
        if (c == a) continue;
        auto [lb, hb] = span[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        auto [lc, hc] = span[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
        ds.set(a, b, c, Rat(std::max(hb, hc) - std::min(lb, lc)));
      }
    }
  std::vector<std::string> labels;
  for (const auto& ax : axes) labels.push_back(ax.owner);
  ds.labels = std::move(labels);
  return ds;
}

DistanceFormulaReport distance_formula_check(const Tree& t, const std::vector<AxisBundle>& axes,
                                             const Rat& M,
                                             const std::vector<std::pair<int, int>>& samples) {
  AxisGates gates = compute_axis_gates(t, axes);
  DistanceFormulaReport rep;
  rep.M_used = M;
  rep.pass = true;
  Rat minimal(0);
  bool have_slack = false;
  for (auto [x, z] : samples) {
    long long lhs6 = 6LL * t.dist(x, z);
    long long rhs6 = 0;
    std::vector<long long> terms;
    for (std::size_t a = 0; a < axes.size(); ++a) {
      long long d = gates.pos[a][static_cast<std::size_t>(x)] - gates.pos[a][static_cast<std::size_t>(z)];
      if (d < 0) d = -d;
      terms.push_back(d);
      if (Rat(d) >= M) rhs6 += d;
    }
    ++rep.pairs_checked;
    Rat slack = Rat(lhs6 - rhs6, 6);
    if (!have_slack || slack < rep.min_slack) {
      rep.min_slack = slack;
      have_slack = true;
    }
    if (lhs6 < rhs6) {
      rep.pass = false;
      ++rep.failures;
      if (rep.failure_samples.size() < 8)
        rep.failure_samples.push_back({x, z, lhs6 / 6, rhs6});
    }
    // Smallest cutoff making this pair pass: drop terms smallest-first until the
    // surviving sum fits.
    std::sort(terms.begin(), terms.end());
    long long sum = 0;
    for (long long v : terms) sum += v;
    Rat pair_min(0);
    std::size_t i = 0;
    while (sum > lhs6 && i < terms.size()) {
      sum -= terms[i];
      pair_min = Rat(terms[i] + 1);
      ++i;
    }
    minimal = std::max(minimal, pair_min);
  }
  rep.minimal_M = minimal;
  return rep;
}

namespace {

std::string rooted_canon(const Tree& t, int root, int parent) {
  std::vector<std::string> parts;
  for (int w : t.neighbors(root))
    if (w != parent) parts.push_back(rooted_canon(t, w, root));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& p : parts) s += p;
  s += ")";
  return s;
}

std::vector<int> tree_centroids(const Tree& t) {
  const int n = t.size();
  std::vector<int> size(static_cast<std::size_t>(n), 1);
  std::vector<int> order, parent(static_cast<std::size_t>(n), -1);
  order.reserve(static_cast<std::size_t>(n));
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : t.neighbors(order[i]))
      if (w != parent[static_cast<std::size_t>(order[i])]) {
        parent[static_cast<std::size_t>(w)] = order[i];
        order.push_back(w);
      }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[static_cast<std::size_t>(*it)] >= 0)
      size[static_cast<std::size_t>(parent[static_cast<std::size_t>(*it)])] +=
          size[static_cast<std::size_t>(*it)];
  std::vector<int> cents;
  for (int v = 0; v < n; ++v) {
    int heaviest = n - size[static_cast<std::size_t>(v)];
    for (int w : t.neighbors(v))
      if (parent[static_cast<std::size_t>(w)] == v)
        heaviest = std::max(heaviest, size[static_cast<std::size_t>(w)]);
    if (heaviest <= n / 2) cents.push_back(v);
  }
  return cents;
}

}  // namespace

std::string tree_canonical_form(const Tree& t) {
  auto cents = tree_centroids(t);
  if (cents.size() == 1) return rooted_canon(t, cents[0], -1);
  std::string a = rooted_canon(t, cents[0], cents[1]);
  std::string b = rooted_canon(t, cents[1], cents[0]);
  if (b < a) std::swap(a, b);
  return "[" + a + b + "]";
}

bool complex_isomorphic_to_tree(const ComplexGraph& g, const Tree& t) {
  if (g.n != t.size()) return false;
  if (g.edge_count != static_cast<long long>(g.n) - 1) return false;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < g.n; ++v)
    for (int w : g.adj_list[static_cast<std::size_t>(v)])
      if (v < w) edges.emplace_back(v, w);
  Tree other;
  try {
    other = Tree::from_edges(g.n, std::move(edges));
  } catch (const InputError&) {
    return false;  // disconnected (and with n-1 edges, then cyclic)
  }
  return tree_canonical_form(other) == tree_canonical_form(t);
}

bool complex_is_complete(const ComplexGraph& g) {
  return g.edge_count == static_cast<long long>(g.n) * (g.n - 1) / 2;
}

Tree random_tree(int n, DetRand& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(v))), v);
  return Tree::from_edges(n, std::move(edges));
}

}  // namespace windmill
