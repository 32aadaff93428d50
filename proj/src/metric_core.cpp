#include "metric_core.hpp"

#include <algorithm>
#include <deque>

#include "errors.hpp"
#include "parallel.hpp"

namespace windmill {

namespace {
constexpr int kDenseLimit = 128;
constexpr std::size_t kWitnessCap = 8;
}  // namespace

DistanceSystem DistanceSystem::dense(int n, Rat theta, bool partial) {
  if (n < 0) throw InputError("negative vertex count");
  if (n > kDenseLimit)
    throw InputError("dense distance table limited to " + std::to_string(kDenseLimit) +
                     " vertices; use an indicator or gate backed system");
  DistanceSystem ds;
  ds.kind_ = Kind::Dense;
  ds.n_ = n;
  ds.theta_ = theta;
  ds.partial_ = partial;
  std::size_t cube = static_cast<std::size_t>(n) * n * n;
  ds.table_.assign(cube, Rat(0));
  if (partial) ds.defined_.assign(cube, 0);
  return ds;
}

DistanceSystem DistanceSystem::indicator(std::vector<std::vector<int>> dist_matrix) {
  DistanceSystem ds;
  ds.kind_ = Kind::Indicator;
  ds.n_ = static_cast<int>(dist_matrix.size());
  ds.theta_ = Rat(0);
  ds.dist_ = std::move(dist_matrix);
  return ds;
}

DistanceSystem DistanceSystem::gates(std::vector<std::vector<long long>> offsets, Rat theta) {
  DistanceSystem ds;
  ds.kind_ = Kind::Gates;
  ds.n_ = static_cast<int>(offsets.size());
  ds.theta_ = theta;
  ds.offsets_ = std::move(offsets);
  return ds;
}

std::size_t DistanceSystem::idx(int y, int x, int z) const {
  return (static_cast<std::size_t>(y) * n_ + x) * n_ + z;
}

void DistanceSystem::check_domain(int y, int x, int z) const {
  if (y < 0 || y >= n_ || x < 0 || x >= n_ || z < 0 || z >= n_)
    throw InputError("vertex index out of range in distance lookup");
  if (x == y || z == y)
    throw InputError("d(y)(x,z) undefined for x == y or z == y: (" + std::to_string(y) + "," +
                     std::to_string(x) + "," + std::to_string(z) + ")");
}

Rat DistanceSystem::at(int y, int x, int z) const {
  check_domain(y, x, z);
  switch (kind_) {
    case Kind::Dense:
      if (partial_ && !defined_[idx(y, x, z)])
        throw InputError("missing distance entry (y,x,z) = (" + std::to_string(y) + "," +
                         std::to_string(x) + "," + std::to_string(z) + ")");
      return table_[idx(y, x, z)];
    case Kind::Indicator:
      if (x == z) return Rat(0);
      return dist_[x][y] + dist_[y][z] == dist_[x][z] ? Rat(1) : Rat(0);
    case Kind::Gates:
      return Rat(offsets_[y][x] >= offsets_[y][z] ? offsets_[y][x] - offsets_[y][z]
                                                  : offsets_[y][z] - offsets_[y][x]);
  }
  throw InputError("unreachable");
}

bool DistanceSystem::has(int y, int x, int z) const {
  check_domain(y, x, z);
  if (kind_ == Kind::Dense && partial_) return defined_[idx(y, x, z)] != 0;
  return true;
}

int DistanceSystem::ambient_distance(int x, int z) const {
  if (kind_ != Kind::Indicator) throw InputError("no ambient metric behind this system");
  return dist_[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)];
}

void DistanceSystem::set(int y, int x, int z, const Rat& v) {
  check_domain(y, x, z);
  if (kind_ != Kind::Dense) throw InputError("cannot set entries of a derived distance system");
  if (v < Rat(0)) throw InputError("negative distance entry");
  table_[idx(y, x, z)] = v;
  table_[idx(y, z, x)] = v;
  if (partial_) {
    defined_[idx(y, x, z)] = 1;
    defined_[idx(y, z, x)] = 1;
  }
}

namespace {

struct AxiomScan {
  bool sym_ok = true, tri_ok = true, trip_ok = true;
  long long violations = 0;
  int max_count = 0;
  std::vector<AxiomWitness> witnesses;

  void add(const char* axiom, std::initializer_list<int> tuple, std::initializer_list<Rat> vals,
           bool& flag) {
    flag = false;
    ++violations;
    if (witnesses.size() < kWitnessCap) {
      AxiomWitness w;
      w.axiom = axiom;
      w.tuple.assign(tuple);
      w.values.assign(vals);
      witnesses.push_back(std::move(w));
    }
  }

  void merge(const AxiomScan& o) {
    sym_ok = sym_ok && o.sym_ok;
    tri_ok = tri_ok && o.tri_ok;
    trip_ok = trip_ok && o.trip_ok;
    violations += o.violations;
    max_count = std::max(max_count, o.max_count);
    for (const auto& w : o.witnesses)
      if (witnesses.size() < kWitnessCap) witnesses.push_back(w);
  }
};

}  // namespace

AxiomReport verify_axioms(const DistanceSystem& ds) {
  const int n = ds.size();
  AxiomReport rep;
  rep.degenerate = ds.degenerate();
  const Rat theta = ds.theta();

  auto scan_y = [&](std::size_t begin, std::size_t end) {
    AxiomScan s;
    for (std::size_t yy = begin; yy < end; ++yy) {
      int y = static_cast<int>(yy);
      // Symmetry and d(y)(x,x) = 0.
      for (int x = 0; x < n; ++x) {
        if (x == y) continue;
        if (ds.at(y, x, x) != Rat(0))
          s.add("symmetry", {y, x, x}, {ds.at(y, x, x)}, s.sym_ok);
        for (int z = x + 1; z < n; ++z) {
          if (z == y) continue;
          Rat a = ds.at(y, x, z), b = ds.at(y, z, x);
          if (a != b) s.add("symmetry", {y, x, z}, {a, b}, s.sym_ok);
        }
      }
      // Triangle inequality d_y(x,z) + d_y(z,w) >= d_y(x,w).
      for (int x = 0; x < n; ++x) {
        if (x == y) continue;
        for (int z = 0; z < n; ++z) {
          if (z == y) continue;
          Rat dxz = ds.at(y, x, z);
          for (int w = 0; w < n; ++w) {
            if (w == y) continue;
            Rat dzw = ds.at(y, z, w), dxw = ds.at(y, x, w);
            if (dxz + dzw < dxw) s.add("triangle", {y, x, z, w}, {dxz, dzw, dxw}, s.tri_ok);
          }
        }
      }
      // Inequality on triples, with y in the first slot of the pair.
      for (int x = 0; x < n; ++x) {
        if (x == y) continue;
        for (int z = 0; z < n; ++z) {
          if (z == y || z == x) continue;
          Rat a = ds.at(y, x, z), b = ds.at(z, x, y);
          if (a > theta && b > theta) s.add("triples", {x, y, z}, {a, b}, s.trip_ok);
        }
      }
    }
    return s;
  };

  AxiomScan total;
  if (n > 2) {
    auto chunks = map_chunks<AxiomScan>(static_cast<std::size_t>(n), scan_y);
    for (const auto& c : chunks) total.merge(c);
    // Finiteness: count, for each pair, the vertices seeing it beyond theta.
    auto count_x = [&](std::size_t begin, std::size_t end) {
      AxiomScan s;
      for (std::size_t xx = begin; xx < end; ++xx) {
        int x = static_cast<int>(xx);
        for (int z = 0; z < n; ++z) {
          if (z == x) continue;
          int count = 0;
          for (int y = 0; y < n; ++y) {
            if (y == x || y == z) continue;
            if (ds.at(y, x, z) > theta) ++count;
          }
          s.max_count = std::max(s.max_count, count);
        }
      }
      return s;
    };
    auto counts = map_chunks<AxiomScan>(static_cast<std::size_t>(n), count_x);
    for (const auto& c : counts) total.max_count = std::max(total.max_count, c.max_count);
  }

  rep.symmetry_ok = total.sym_ok;
  rep.triangle_ok = total.tri_ok;
  rep.triples_ok = total.trip_ok;
  rep.finiteness_ok = true;  // always finite on a finite system; the max count is reported
  rep.finiteness_max_count = total.max_count;
  rep.violation_count = total.violations;
  rep.witnesses = std::move(total.witnesses);
  return rep;
}

namespace {

void bfs_from(const std::vector<std::vector<int>>& adj_list, int src, std::vector<int>& out) {
  out.assign(adj_list.size(), -1);
  std::deque<int> queue{src};
  out[src] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj_list[v])
      if (out[w] < 0) {
        out[w] = out[v] + 1;
        queue.push_back(w);
      }
  }
}

}  // namespace

ComplexGraph build_complex(const DistanceSystem& ds, const Rat& K) {
  if (K <= Rat(0)) throw InputError("complex parameter K must be positive");
  const int n = ds.size();
  ComplexGraph g;
  g.n = n;
  g.K = K;
  g.degenerate = ds.degenerate();
  g.labels = ds.labels;
  g.adj.assign(n, std::vector<bool>(n, false));
  g.adj_list.assign(n, {});

  auto edges_for = [&](std::size_t begin, std::size_t end) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t xx = begin; xx < end; ++xx) {
      int x = static_cast<int>(xx);
      for (int z = x + 1; z < n; ++z) {
        bool edge = true;
        for (int y = 0; y < n && edge; ++y) {
          if (y == x || y == z) continue;
          if (ds.at(y, x, z) > K) edge = false;
        }
        if (edge) edges.emplace_back(x, z);
      }
    }
    return edges;
  };
  auto chunks = map_chunks<std::vector<std::pair<int, int>>>(static_cast<std::size_t>(n), edges_for);
  for (const auto& chunk : chunks)
    for (auto [x, z] : chunk) {
      g.adj[x][z] = g.adj[z][x] = true;
      g.adj_list[x].push_back(z);
      g.adj_list[z].push_back(x);
      ++g.edge_count;
    }
  for (auto& nb : g.adj_list) std::sort(nb.begin(), nb.end());

  g.dist.assign(n, {});
  for (int v = 0; v < n; ++v) bfs_from(g.adj_list, v, g.dist[v]);
  g.diameter = 0;
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) g.diameter = std::max(g.diameter, g.dist[v][w]);
  return g;
}

ComplexGraph complex_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  ComplexGraph g;
  g.n = n;
  g.K = Rat(1);
  g.degenerate = n <= 2;
  g.adj.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  g.adj_list.assign(static_cast<std::size_t>(n), {});
  for (auto [x, z] : edges) {
    if (x < 0 || x >= n || z < 0 || z >= n || x == z) throw InputError("bad edge");
    if (g.adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)]) continue;
    g.adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] = true;
    g.adj[static_cast<std::size_t>(z)][static_cast<std::size_t>(x)] = true;
    g.adj_list[static_cast<std::size_t>(x)].push_back(z);
    g.adj_list[static_cast<std::size_t>(z)].push_back(x);
    ++g.edge_count;
  }
  for (auto& nb : g.adj_list) std::sort(nb.begin(), nb.end());
  g.dist.assign(static_cast<std::size_t>(n), {});
  for (int v = 0; v < n; ++v) bfs_from(g.adj_list, v, g.dist[static_cast<std::size_t>(v)]);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) g.diameter = std::max(g.diameter, g.dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]);
  return g;
}

std::vector<std::vector<int>> all_geodesics(const ComplexGraph& g, int x, int z,
                                            std::size_t max_paths) {
  if (x < 0 || x >= g.n || z < 0 || z >= g.n) throw InputError("vertex out of range");
  if (g.dist[x][z] < 0)
    throw InputError("no path between " + std::to_string(x) + " and " + std::to_string(z));
  std::vector<std::vector<int>> paths;
  std::vector<int> current{x};
  const auto& dz = g.dist[z];
  // DFS descending on distance-to-z, neighbors in increasing id: lexicographic output.
  auto rec = [&](auto&& self, int v) -> void {
    if (v == z) {
      if (paths.size() >= max_paths) throw TruncationError("geodesic enumeration exceeded cap");
      paths.push_back(current);
      return;
    }
    for (int w : g.adj_list[v]) {
      if (dz[w] != dz[v] - 1) continue;
      current.push_back(w);
      self(self, w);
      current.pop_back();
    }
  };
  rec(rec, x);
  return paths;
}

std::vector<int> geodesic_waypoints(const ComplexGraph& g, int x, int z) {
  auto paths = all_geodesics(g, x, z);
  std::vector<char> on_all(static_cast<std::size_t>(g.n), 1);
  for (const auto& p : paths) {
    std::vector<char> here(static_cast<std::size_t>(g.n), 0);
    for (int v : p) here[v] = 1;
    for (int v = 0; v < g.n; ++v) on_all[v] = on_all[v] && here[v];
  }
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v)
    if (on_all[v] && v != x && v != z) out.push_back(v);
  return out;
}

Threshold spinning_threshold(const Rat& Ke, const Rat& Kg, const Rat& Kp, const Rat& theta) {
  Threshold t;
  t.m = Rat(11) * Ke + Rat(6) * Kg + Rat(5) * Kp;
  t.L = Rat(3) * (t.m + theta) + Rat(1);
  return t;
}

ConstantsReport measure_constants(const DistanceSystem& ds, const ComplexGraph& g,
                                  std::optional<int> path_bound) {
  if (ds.size() != g.n) throw InputError("distance system and complex size mismatch");
  const int n = g.n;
  ConstantsReport rep;
  rep.theta = ds.theta();
  rep.degenerate = g.degenerate;
  rep.path_bound = path_bound.value_or(2 * g.diameter);
  if (n > 2) {
    // Edge constant.
    for (int x = 0; x < n; ++x)
      for (int z = x + 1; z < n; ++z) {
        if (!g.adj[x][z]) continue;
        for (int y = 0; y < n; ++y) {
          if (y == x || y == z) continue;
          rep.Ke = std::max(rep.Ke, ds.at(y, x, z));
        }
      }
    // Geodesic constant: pairs admitting a geodesic that avoids y.
    for (int x = 0; x < n; ++x)
      for (int z = x + 1; z < n; ++z) {
        if (g.dist[x][z] < 0) continue;
        auto forced = geodesic_waypoints(g, x, z);
        std::vector<char> is_forced(static_cast<std::size_t>(n), 0);
        for (int v : forced) is_forced[v] = 1;
        for (int y = 0; y < n; ++y) {
          if (y == x || y == z || is_forced[y]) continue;
          rep.Kg = std::max(rep.Kg, ds.at(y, x, z));
        }
      }
    // Path constant: pairs joined by a path avoiding the 2-neighborhood of y,
    // within the length bound.
    for (int y = 0; y < n; ++y) {
      std::vector<char> blocked(static_cast<std::size_t>(n), 0);
      for (int v = 0; v < n; ++v)
        if (g.dist[y][v] >= 0 && g.dist[y][v] <= 2) blocked[v] = 1;
      // BFS in the complement of the blocked set from each allowed source.
      for (int x = 0; x < n; ++x) {
        if (blocked[x]) continue;
        std::vector<int> d(static_cast<std::size_t>(n), -1);
        std::deque<int> queue{x};
        d[x] = 0;
        while (!queue.empty()) {
          int v = queue.front();
          queue.pop_front();
          if (d[v] >= rep.path_bound) continue;
          for (int w : g.adj_list[v])
            if (!blocked[w] && d[w] < 0) {
              d[w] = d[v] + 1;
              queue.push_back(w);
            }
        }
        for (int z = x + 1; z < n; ++z) {
          if (blocked[z] || d[z] < 0) continue;
          rep.Kp = std::max(rep.Kp, ds.at(y, x, z));
        }
      }
    }
  }
  Threshold t = spinning_threshold(rep.Ke, rep.Kg, rep.Kp, rep.theta);
  rep.m = t.m;
  rep.L_threshold = t.L;
  return rep;
}

DistanceSystem sum_distance_systems(const std::vector<DistanceSystem>& systems,
                                    const std::vector<std::vector<int>>& grouping,
                                    std::optional<Rat> theta0) {
  if (systems.empty()) throw InputError("no component systems given");
  const int n = systems.front().size();
  for (const auto& s : systems)
    if (s.size() != n) throw InputError("component systems disagree on the vertex universe");
  if (static_cast<int>(grouping.size()) != n)
    throw InputError("grouping must assign a component multiset to every vertex");

  int C = 1;
  for (const auto& comps : grouping) {
    if (comps.empty()) throw InputError("empty component multiset in grouping");
    for (int j : comps)
      if (j < 0 || j >= static_cast<int>(systems.size()))
        throw InputError("grouping references unknown component system " + std::to_string(j));
    C = std::max(C, static_cast<int>(comps.size()));
  }

  Rat t0 = Rat(1);
  for (const auto& s : systems) t0 = std::max(t0, s.theta());
  if (theta0) t0 = *theta0;

  DistanceSystem out = DistanceSystem::dense(n, Rat(12) * Rat(C) * t0);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      if (x == y) continue;
      for (int z = x; z < n; ++z) {
        if (z == y) continue;
        Rat sum(0);
        for (int j : grouping[static_cast<std::size_t>(y)]) {
          if (!systems[static_cast<std::size_t>(j)].has(y, x, z))
            throw InputError("undefined summand: component " + std::to_string(j) +
                             " has no entry for (y,x,z) = (" + std::to_string(y) + "," +
                             std::to_string(x) + "," + std::to_string(z) + ")");
          sum += systems[static_cast<std::size_t>(j)].at(y, x, z);
        }
        out.set(y, x, z, sum);
      }
    }
  return out;
}

}  // namespace windmill
