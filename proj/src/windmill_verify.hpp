#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "windmill_core.hpp"

namespace windmill {

struct InstanceMetrics {
  Rat theta{0};
  Rat Ke{0}, Kp{0}, Kg{0};
  Rat m{0};
  Rat L_threshold{1};
  Rat L_used{1};  // the spinning level the family was verified at
};

// Evidence for one free product word: pivot projections (statement A, metric
// form), waypoint and order facts (graph form and statement B), oracle data.
template <class Inst>
WordEvidence evaluate_word(const Inst& inst, const typename Inst::Vertex& v0,
                           const FpWord<typename Inst::Vertex>& w, const InstanceMetrics& metrics) {
  using V = typename Inst::Vertex;
  typename Inst::Less less;
  auto same = [&](const V& a, const V& b) { return !less(a, b) && !less(b, a); };

  WordEvidence ev;
  ev.word = fp_word_str(inst, w);
  ev.level = fp_level(w);
  ev.syllable_count = static_cast<int>(fp_syllables(inst, w).size());
  Word image = fp_image(inst, w);
  ev.image = word_str(inst.group_sig(), image);
  ev.normal_form = inst.oracle_normal_form(image);
  auto trivial = inst.oracle_trivial(image);
  ev.oracle_nontrivial = trivial.has_value() && !*trivial;
  if (auto k = inst.kernel_image(image)) ev.kernel_member = k->is_identity();

  V hv0 = inst.act(image, v0);
  std::vector<V> pivots = pivot_points(inst, w);
  auto geos = inst.geodesics(v0, hv0);

  ev.all_waypoints = true;
  ev.in_order = true;
  std::vector<std::vector<std::size_t>> positions(geos.size());
  for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
    const V& p = pivots[pi];
    PivotEvidence pe;
    pe.pivot = inst.vertex_label(p);
    bool degenerate_pivot = same(p, v0) || same(p, hv0);
    if (!degenerate_pivot) {
      pe.projection = inst.dist_fn(p, v0, hv0);
      pe.metric_ok = pe.projection > metrics.m + metrics.theta;
    }
    pe.waypoint = !degenerate_pivot;
    for (std::size_t gi = 0; gi < geos.size() && pe.waypoint; ++gi) {
      bool found = false;
      for (std::size_t pos = 0; pos < geos[gi].size(); ++pos)
        if (same(geos[gi][pos], p)) {
          positions[gi].push_back(pos);
          found = true;
          break;
        }
      if (!found) pe.waypoint = false;
    }
    ev.all_waypoints = ev.all_waypoints && pe.waypoint;
    ev.has_waypoint = ev.has_waypoint || pe.waypoint;
    ev.pivots.push_back(std::move(pe));
  }
  // Statement B: the pivots appear strictly in order on every geodesic.
  for (const auto& pos : positions) {
    if (pos.size() != pivots.size()) {
      ev.in_order = false;
      break;
    }
    for (std::size_t i = 1; i < pos.size(); ++i)
      if (pos[i] <= pos[i - 1]) ev.in_order = false;
  }
  if (pivots.empty()) ev.in_order = true;
  return ev;
}

// Statement C and the path-constant convexity bound, quantified over the
// truncation. Membership in W_i beyond the inner approximation is resolved
// through the instance hook; unresolved vertices are skipped and counted.
template <class Inst>
void locality_check(const WindmillBuilder<Inst>& wb, const InstanceMetrics& metrics,
                    StatementsReport& rep) {
  using V = typename Inst::Vertex;
  const Inst& inst = wb.inst();
  typename Inst::Less less;
  auto same = [&](const V& a, const V& b) { return !less(a, b) && !less(b, a); };
  const auto& levels = wb.levels();

  // Per level: vertices of the truncation certainly outside W_i. Level 0 is
  // exact; beyond it, the inner approximation plus the instance hook decide.
  auto outside_of = [&](std::size_t i, long long& skipped) {
    std::vector<V> out;
    std::vector<V> inner_N(levels[i].N.begin(), levels[i].N.end());
    for (const V& v : wb.universe()) {
      if (i == 0) {
        if (!same(v, wb.v0())) out.push_back(v);
        continue;
      }
      if (levels[i].W.count(v)) continue;
      int state = inst.orbit_membership(levels[i].h_gens, inner_N, v);
      if (state < 0) {
        ++skipped;
        continue;
      }
      if (state == 0) out.push_back(v);
    }
    return out;
  };

  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    auto outside = outside_of(i, rep.c_skipped_membership);
    for (const V& x : levels[i + 1].N) {
      for (const V& v : outside) {
        if (same(v, x)) continue;
        ++rep.c_checked;
        Rat d = inst.dist_fn(v, wb.v0(), x);
        if (d > metrics.m) {
          rep.c_ok = false;
          if (rep.failures.size() < 8)
            rep.failures.push_back("C: level " + std::to_string(i) + " x=" + inst.vertex_label(x) +
                                   " v=" + inst.vertex_label(v) + " d=" + format_rat(d));
        }
      }
    }
  }

  // Bounded projection between vertices two levels down (path-constant form).
  for (std::size_t i = 2; i < levels.size(); ++i) {
    long long ignored = 0;
    auto outside = outside_of(i, ignored);
    std::vector<V> low(levels[i - 2].W.begin(), levels[i - 2].W.end());
    for (const V& v : outside) {
      for (std::size_t a = 0; a < low.size(); ++a)
        for (std::size_t b = a; b < low.size(); ++b) {
          if (same(low[a], v) || same(low[b], v)) continue;
          ++rep.theta_checked;
          Rat d = inst.dist_fn(v, low[a], low[b]);
          if (d > metrics.Kp) {
            rep.convexity_ok = false;
            if (rep.failures.size() < 8)
              rep.failures.push_back("theta: level " + std::to_string(i) + " v=" +
                                     inst.vertex_label(v) + " d=" + format_rat(d));
          }
        }
    }
  }
}

// The 1/3 lower bound relating local spinning at a pivot to the global
// projection, plus the derived strict inequality from the threshold identity.
template <class Inst>
void remember_check(const Inst& inst, const typename Inst::Vertex& v0,
                    const FpWord<typename Inst::Vertex>& w, const InstanceMetrics& metrics,
                    StatementsReport& rep) {
  using V = typename Inst::Vertex;
  typename Inst::Less less;
  auto same = [&](const V& a, const V& b) { return !less(a, b) && !less(b, a); };
  if (fp_level(w) == 0) return;
  Word image = fp_image(inst, w);
  V hv0 = inst.act(image, v0);
  auto syls = fp_syllables(inst, w);
  std::size_t pivot_idx = 0;
  std::vector<V> pivots = pivot_points(inst, w);
  for (const auto& s : syls) {
    if (s.lower) continue;
    const V& wk = pivots[pivot_idx++];
    if (same(wk, v0) || same(wk, hv0)) continue;
    Word hk = fp_image(inst, w, s.begin, s.end);
    V hk_v0 = inst.act(hk, v0);
    Rat local = same(s.vertex, v0) ? Rat(0) : inst.dist_fn(s.vertex, v0, hk_v0);
    Rat global = inst.dist_fn(wk, v0, hv0);
    ++rep.remember_checked;
    Rat slack = global - local / Rat(3);
    if (!rep.remember_any || slack < rep.remember_min_slack) {
      rep.remember_min_slack = slack;
      rep.remember_any = true;
    }
    if (slack < Rat(0)) {
      rep.remember_ok = false;
      if (rep.failures.size() < 8)
        rep.failures.push_back("remember: word " + fp_word_str(inst, w) + " pivot " +
                               inst.vertex_label(wk));
    }
    // Inequality (1): global projection at least L - 2(m + theta) > m + theta.
    Rat floor = metrics.L_used - Rat(2) * (metrics.m + metrics.theta);
    if (global < floor) {
      rep.remember_ok = false;
      if (rep.failures.size() < 8)
        rep.failures.push_back("inequality(1): word " + fp_word_str(inst, w));
    }
  }
}

// Orbit growth of <h> applied to v0: bounded orbits come with a fixed vertex
// and cyclic membership evidence, unbounded ones with the observed drift.
template <class Inst>
ClassifyResult bounded_orbit_classify(const Inst& inst, const typename Inst::Vertex& v0,
                                      const Word& h, int power_bound, int radius_bound) {
  using V = typename Inst::Vertex;
  typename Inst::Less less;
  auto same = [&](const V& a, const V& b) { return !less(a, b) && !less(b, a); };
  const GroupSig& sig = inst.group_sig();

  ClassifyResult res;
  res.powers_tested = power_bound;
  std::vector<int> dists;
  Word hp;
  bool bounded = true;
  for (int p = 1; p <= power_bound; ++p) {
    hp = word_mul(sig, hp, h);
    int d = inst.graph_distance(v0, inst.act(hp, v0));
    dists.push_back(d);
    if (d > radius_bound) bounded = false;
  }
  if (!bounded) {
    res.verdict = "unbounded";
    res.drift = dists.size() >= 2
                    ? Rat(dists.back() - dists.front(), static_cast<long long>(dists.size()) - 1)
                    : Rat(dists.back());
    return res;
  }
  // Bounded: find a fixed vertex and exhibit h inside its cyclic subgroup,
  // preferring the canonical exponent.
  for (const V& w : inst.universe()) {
    if (!inst.family_nontrivial(w)) continue;
    if (!same(inst.act(h, w), w)) continue;
    Word r = inst.family_generator(w);
    int ord = inst.family_order(w);
    std::vector<long long> exps;
    if (ord > 0)
      for (long long k = 1; k < ord; ++k) exps.push_back(k);
    else
      for (long long k = 1; k <= 64; ++k) {
        exps.push_back(k);
        exps.push_back(-k);
      }
    for (long long k : exps) {
      Word cand = word_pow(sig, r, k);
      auto diff_trivial = inst.oracle_trivial(word_mul(sig, h, word_inv(sig, cand)));
      if (diff_trivial.has_value() && *diff_trivial) {
        res.verdict = "bounded";
        res.fixed_vertex = inst.vertex_label(w);
        res.power = k;
        return res;
      }
    }
  }
  res.verdict = "unknown";
  return res;
}

struct WordEnumConfig {
  long long budget = 8;       // total letter cost
  std::size_t max_words = 100000;
};

// All nontrivial canonical free product words of total cost <= budget, ordered
// by cost, then emitted in DFS lexicographic order (alphabet order, exponents
// 1, -1, 2, -2, ...). Deterministic; capped.
template <class Inst>
std::vector<FpWord<typename Inst::Vertex>> enumerate_fp_words(const FpAlphabet<Inst>& alpha,
                                                              const WordEnumConfig& cfg,
                                                              bool& cap_hit) {
  using V = typename Inst::Vertex;
  std::vector<FpWord<V>> out;
  cap_hit = false;

  auto exps_for = [&](const typename FpAlphabet<Inst>::Entry& e, long long max_cost) {
    std::vector<std::pair<long long, long long>> exps;  // (exp, cost)
    if (e.order == 0) {
      for (long long c = 1; c <= max_cost; ++c) {
        exps.push_back({c, c});
        exps.push_back({-c, c});
      }
    } else {
      for (long long x = 1; x < e.order; ++x) {
        long long c = std::min(x, e.order - x);
        if (c <= max_cost) exps.push_back({x, c});
      }
    }
    return exps;
  };

  FpWord<V> current;
  for (long long cost = 1; cost <= cfg.budget && !cap_hit; ++cost) {
    current.clear();
    // Emit exactly-cost words so the stream is cost-ordered.
    auto emit_exact = [&](auto&& self, long long remaining, int last_entry) -> void {
      if (out.size() >= cfg.max_words) {
        cap_hit = true;
        return;
      }
      if (remaining == 0) {
        out.push_back(current);
        return;
      }
      for (std::size_t ei = 0; ei < alpha.entries.size(); ++ei) {
        if (static_cast<int>(ei) == last_entry) continue;
        for (auto [exp, cst] : exps_for(alpha.entries[ei], remaining)) {
          if (cst > remaining) continue;
          current.push_back({alpha.entries[ei].vertex, exp, alpha.entries[ei].level});
          self(self, remaining - cst, static_cast<int>(ei));
          current.pop_back();
          if (cap_hit) return;
        }
      }
    };
    emit_exact(emit_exact, cost, -1);
  }
  return out;
}

struct CertifyConfig {
  int depth = 2;
  int word_bound = 8;
  std::size_t max_words = 100000;
  bool spinning_verified = false;       // L-spinning at the required level
  bool tree_spinning_verified = false;  // tree form, for tree instances
  std::size_t evidence_samples = 12;
};

// Enumerates the canonical nontrivial words of F up to the bound, checks that
// every word of positive level has a waypoint pivot, cross-checks the oracle,
// and assembles the statement evidence. Any failure refuses the certificate
// with the offending word.
template <class Inst>
CertificateResult free_product_certificate(const Inst& inst, typename Inst::Vertex v0,
                                           const InstanceMetrics& metrics,
                                           const CertifyConfig& cfg) {
  CertificateResult res;
  res.word_bound = cfg.word_bound;
  if (!cfg.spinning_verified && !cfg.tree_spinning_verified) {
    res.refusal = "spinning condition was not verified at the required level";
    return res;
  }

  WindmillBuilder<Inst> wb(inst, v0, cfg.depth);
  res.windmill = wb.summary();
  res.orbit_reps_total = static_cast<long long>(wb.all_reps().size());
  auto alpha = fp_alphabet(wb);
  for (const auto& e : alpha.entries) res.orbit_reps.push_back(inst.vertex_label(e.vertex));

  {
    std::map<int, int> order_counts;
    for (const auto& e : alpha.entries) ++order_counts[e.order];
    std::string target;
    for (auto [ord, count] : order_counts) {
      if (!target.empty()) target += " * ";
      std::string factor = ord == 0 ? "Z" : "Z/" + std::to_string(ord);
      target += std::to_string(count) + " x " + factor;
    }
    if (target.empty()) target = "trivial group";
    res.target = target;
  }

  StatementsReport st;
  st.m = metrics.m;
  st.theta = metrics.theta;
  st.L = metrics.L_used;
  st.Kp = metrics.Kp;
  st.derived_gap = metrics.L_used - Rat(3) * (metrics.m + metrics.theta);

  bool cap_hit = false;
  WordEnumConfig ec;
  ec.budget = cfg.word_bound;
  ec.max_words = cfg.max_words;
  auto words = enumerate_fp_words(alpha, ec, cap_hit);
  res.word_cap_hit = cap_hit;

  std::map<std::string, std::string> images_seen;
  bool check_forms_agree = st.m + st.theta >= metrics.Kg;
  for (const auto& w : words) {
    WordEvidence ev;
    try {
      ev = evaluate_word(inst, v0, w, metrics);
      remember_check(inst, v0, w, metrics, st);
    } catch (const TruncationError&) {
      ++res.words_skipped;
      continue;
    }
    ++res.words_tested;
    if (res.sample_evidence.size() < cfg.evidence_samples) res.sample_evidence.push_back(ev);

    if (!ev.oracle_nontrivial) {
      res.refusal = "word is trivial in the target group";
      res.counterexample = ev.word;
      break;
    }
    if (!ev.kernel_member) {
      res.refusal = "word leaves the declared kernel";
      res.counterexample = ev.word;
      break;
    }
    if (ev.level >= 1 && !ev.has_waypoint) {
      res.refusal = "word has no waypoint pivot";
      res.counterexample = ev.word;
      break;
    }
    auto [it, fresh] = images_seen.try_emplace(ev.normal_form, ev.word);
    if (!fresh) {
      res.refusal = "distinct words share an image (collision with " + it->second + ")";
      res.counterexample = ev.word;
      break;
    }
    for (const auto& pe : ev.pivots) {
      ++st.a_checked;
      if (!pe.metric_ok) {
        st.a_ok = false;
        if (st.failures.size() < 8) st.failures.push_back("A: " + ev.word + " pivot " + pe.pivot);
      }
      if (check_forms_agree && pe.metric_ok && !pe.waypoint) st.forms_agree = false;
    }
    if (!ev.pivots.empty()) {
      ++st.b_checked;
      if (!ev.in_order || !ev.all_waypoints) {
        st.b_ok = false;
        if (st.failures.size() < 8) st.failures.push_back("B: " + ev.word);
      }
    }
  }
  res.distinct_images = static_cast<long long>(images_seen.size());

  locality_check(wb, metrics, st);
  res.statements = st;
  res.pass = res.refusal.empty();
  res.inclusion_realized = res.pass;
  return res;
}

}  // namespace windmill
