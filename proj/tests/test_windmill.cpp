#include <doctest.h>

#include "instances.hpp"
#include "windmill_verify.hpp"

using namespace windmill;

namespace {

CosetInstance z3z3(int radius, CosetInstance::FamilyKind fk = CosetInstance::FamilyKind::Stabilizers) {
  GroupSig sig = GroupSig::cyclics({3, 3});
  sig.names = {'x', 'y'};
  return CosetInstance(sig, CosetInstance::Metric::Indicator, radius, 2, fk, 1, std::nullopt);
}

CosetInstance f2_axes(int radius) {
  GroupSig sig = GroupSig::free_group(2);
  return CosetInstance(sig, CosetInstance::Metric::Gates, radius, 2,
                       CosetInstance::FamilyKind::ConjugatePower, 2, GroupSig::cyclics({2, 2}));
}

InstanceMetrics metrics_of(const CosetInstance& inst, const Rat& K) {
  Materialized m = materialize(inst, K);
  ConstantsReport c = measure_constants(m.system, m.complex);
  InstanceMetrics out;
  out.theta = c.theta;
  out.Ke = c.Ke;
  out.Kp = c.Kp;
  out.Kg = c.Kg;
  out.m = c.m;
  out.L_threshold = c.L_threshold;
  out.L_used = c.L_threshold;
  return out;
}

using FpW = FpWord<Coset>;

FpW word_of(const WindmillBuilder<CosetInstance>& wb, std::initializer_list<std::pair<int, long long>> letters) {
  auto alpha = fp_alphabet(wb);
  FpW w;
  for (auto [idx, exp] : letters)
    w.push_back({alpha.entries[static_cast<std::size_t>(idx)].vertex, exp,
                 alpha.entries[static_cast<std::size_t>(idx)].level});
  return fp_normalize(wb.inst(), w);
}

}  // namespace

TEST_CASE("windmill levels over the order-three tree") {
  auto inst = z3z3(6);
  WindmillBuilder<CosetInstance> wb(inst, inst.base_vertex(), 2);
  const auto& lv = wb.levels();
  REQUIRE(lv.size() == 3);
  CHECK(lv[0].W.size() == 1);
  CHECK(lv[0].O.size() == 1);
  // level 1: three neighbors in a single H_0-orbit
  CHECK(lv[1].N.size() == 4);
  CHECK(lv[1].L.size() == 3);
  REQUIRE(lv[1].O.size() == 1);
  CHECK(inst.vertex_label(lv[1].O[0]) == "y:");
  CHECK(lv[1].connected);
  // level 2: W_1 already swallowed the whole truncation
  CHECK(lv[1].W.size() == wb.universe().size());
  CHECK(lv[2].L.empty());
  CHECK(lv[2].O.empty());
  // orbit representatives across levels = v0 and the opposite base coset
  auto alpha = fp_alphabet(wb);
  REQUIRE(alpha.entries.size() == 2);
  CHECK(inst.vertex_label(alpha.entries[0].vertex) == "x:");
  CHECK(inst.vertex_label(alpha.entries[1].vertex) == "y:");
  CHECK(alpha.entries[0].order == 3);
}

TEST_CASE("trivial family windmills are plain balls") {
  auto inst = z3z3(4, CosetInstance::FamilyKind::Trivial);
  WindmillBuilder<CosetInstance> wb(inst, inst.base_vertex(), 3);
  const auto& lv = wb.levels();
  for (std::size_t i = 1; i < lv.size(); ++i) {
    // H_i is trivial, so W_i = N_i = (i)-ball and O_i = all of L_i
    CHECK(lv[i].W == lv[i].N);
    CHECK(lv[i].O.size() == lv[i].L.size());
    CHECK(lv[i].h_gens.empty());
  }
}

TEST_CASE("depth zero keeps only the base subgroup") {
  auto inst = z3z3(4);
  WindmillBuilder<CosetInstance> wb(inst, inst.base_vertex(), 0);
  CHECK(wb.levels().size() == 1);
  auto alpha = fp_alphabet(wb);
  REQUIRE(alpha.entries.size() == 1);
  CHECK(inst.vertex_label(alpha.entries[0].vertex) == "x:");
}

TEST_CASE("syllable decomposition") {
  auto inst = z3z3(5);
  WindmillBuilder<CosetInstance> wb(inst, inst.base_vertex(), 2);

  SUBCASE("empty word has no syllables") {
    FpW w;
    CHECK(fp_syllables(inst, fp_normalize(inst, w)).empty());
  }
  SUBCASE("alternation is already canonical") {
    // r1 s r2 with r_i in R_v0 (level 0) and s in R_w0 (level 1)
    FpW w = word_of(wb, {{0, 1}, {1, 1}, {0, 2}});
    auto syls = fp_syllables(inst, w);
    CHECK(syls.size() == 3);
    CHECK(syls[0].lower);
    CHECK(!syls[1].lower);
    CHECK(syls[2].lower);
  }
  SUBCASE("same-vertex letters merge") {
    FpW w = word_of(wb, {{1, 1}, {1, 1}});
    CHECK(w.size() == 1);
    CHECK(w[0].exp == 2);
    FpW cancel = word_of(wb, {{1, 1}, {1, 2}});  // y * y^2 = 1
    CHECK(cancel.empty());
  }
}

TEST_CASE("pivot points") {
  auto inst = z3z3(6);
  WindmillBuilder<CosetInstance> wb(inst, inst.base_vertex(), 2);

  SUBCASE("single level-one syllable pivots at its own vertex") {
    auto pivots = pivot_points(inst, word_of(wb, {{1, 1}}));
    REQUIRE(pivots.size() == 1);
    CHECK(inst.vertex_label(pivots[0]) == "y:");
  }
  SUBCASE("level zero prefix moves the pivot") {
    // r s with r = x in R_v0, s = y in R_w0: pivot = x . w0
    auto pivots = pivot_points(inst, word_of(wb, {{0, 1}, {1, 1}}));
    REQUIRE(pivots.size() == 1);
    CHECK(inst.vertex_label(pivots[0]) == "y:x");
  }
  SUBCASE("words inside F_0 have no pivots") {
    auto pivots = pivot_points(inst, word_of(wb, {{0, 2}}));
    CHECK(pivots.empty());
  }
}

TEST_CASE("waypoint evidence on alternating words") {
  auto inst = z3z3(6);
  WindmillBuilder<CosetInstance> wb(inst, inst.base_vertex(), 2);
  InstanceMetrics metrics = metrics_of(inst, Rat(1, 2));
  CHECK(metrics.L_threshold == Rat(1));
  CHECK(metrics.m == Rat(0));

  // x y x^2 y^2: syllable length 4, two level-one pivots
  FpW w = word_of(wb, {{0, 1}, {1, 1}, {0, 2}, {1, 2}});
  WordEvidence ev = evaluate_word(inst, wb.v0(), w, metrics);
  CHECK(ev.syllable_count == 4);
  REQUIRE(ev.pivots.size() == 2);
  CHECK(ev.all_waypoints);
  CHECK(ev.in_order);
  CHECK(ev.oracle_nontrivial);
  for (const auto& p : ev.pivots) {
    CHECK(p.waypoint);
    CHECK(p.metric_ok);  // projection 1 > m + theta = 0
    CHECK(p.projection == Rat(1));
  }

  SUBCASE("pivot counts multiply under powers of cyclically reduced words") {
    for (int p = 2; p <= 4; ++p) {
      FpW wp;
      for (int i = 0; i < p; ++i) wp.insert(wp.end(), w.begin(), w.end());
      wp = fp_normalize(inst, wp);
      auto ev_p = evaluate_word(inst, wb.v0(), wp, metrics);
      CHECK(ev_p.pivots.size() == p * ev.pivots.size());
    }
  }
}

TEST_CASE("orbit growth classification") {
  auto inst = z3z3(6);
  const GroupSig& sig = inst.group_sig();
  SUBCASE("a base rotation is recognized inside its own subgroup") {
    auto res = bounded_orbit_classify(inst, inst.base_vertex(), parse_word(sig, "x"), 6, 6);
    CHECK(res.verdict == "bounded");
    CHECK(res.fixed_vertex == "x:");
    CHECK(res.power == 1);
  }
  SUBCASE("an alternating product translates") {
    auto res = bounded_orbit_classify(inst, inst.base_vertex(), parse_word(sig, "xy"), 10, 6);
    CHECK(res.verdict == "unbounded");
    CHECK(res.drift == Rat(2));
  }
  SUBCASE("conjugates are classified into the conjugate subgroup") {
    auto res = bounded_orbit_classify(inst, inst.base_vertex(), parse_word(sig, "yxY"), 6, 6);
    CHECK(res.verdict == "bounded");
    CHECK(res.fixed_vertex == "x:y");
    CHECK(res.power == 1);
  }
}

TEST_CASE("free product certificate for the order-three stabilizer family") {
  auto inst = z3z3(6);
  InstanceMetrics metrics = metrics_of(inst, Rat(1, 2));
  CertifyConfig cfg;
  cfg.depth = 2;
  cfg.word_bound = 10;
  cfg.max_words = 100000;
  cfg.spinning_verified = true;
  cfg.tree_spinning_verified = true;
  auto cert = free_product_certificate(inst, inst.base_vertex(), metrics, cfg);
  CHECK(cert.pass);
  CHECK(cert.orbit_reps.size() == 2);
  CHECK(cert.target == "2 x Z/3");
  CHECK(cert.words_tested > 1000);
  CHECK(cert.words_skipped == 0);
  CHECK(cert.distinct_images == cert.words_tested);
  CHECK(cert.inclusion_realized);
  CHECK(cert.statements.a_ok);
  CHECK(cert.statements.b_ok);
  CHECK(cert.statements.c_ok);
  CHECK(cert.statements.remember_ok);
  CHECK(cert.statements.remember_min_slack >= Rat(0));
  CHECK(cert.statements.derived_gap >= Rat(1));  // L = 3(m+theta)+1 exactly

  SUBCASE("refused without the spinning prerequisite") {
    CertifyConfig off = cfg;
    off.spinning_verified = false;
    off.tree_spinning_verified = false;
    auto bad = free_product_certificate(inst, inst.base_vertex(), metrics, off);
    CHECK(!bad.pass);
  }
  SUBCASE("the orbit representatives are a fundamental domain") {
    // H = <R_v> acts with exactly two orbits on the truncation: the sides
    CHECK(cert.orbit_reps_total == 2);
  }
}

TEST_CASE("empty family certifies the trivial group") {
  auto inst = z3z3(4, CosetInstance::FamilyKind::Trivial);
  InstanceMetrics metrics = metrics_of(inst, Rat(1, 2));
  CertifyConfig cfg;
  cfg.depth = 2;
  cfg.word_bound = 4;
  cfg.spinning_verified = true;
  auto cert = free_product_certificate(inst, inst.base_vertex(), metrics, cfg);
  CHECK(cert.pass);
  CHECK(cert.orbit_reps.empty());
  CHECK(cert.target == "trivial group");
  CHECK(cert.words_tested == 0);
}

TEST_CASE("free product certificate for the square family on the axes tree") {
  auto inst = f2_axes(4);
  InstanceMetrics metrics = metrics_of(inst, Rat(1, 2));
  CHECK(metrics.L_threshold == Rat(1));  // all constants vanish on this instance
  metrics.L_used = Rat(2);               // the family spins by 2

  CertifyConfig cfg;
  cfg.depth = 2;
  cfg.word_bound = 8;
  cfg.max_words = 2000;
  cfg.spinning_verified = true;
  auto cert = free_product_certificate(inst, inst.base_vertex(), metrics, cfg);
  CHECK(cert.pass);
  CHECK(cert.words_tested == 2000);
  CHECK(cert.word_cap_hit);
  CHECK(cert.distinct_images == 2000);
  // every factor is infinite cyclic: free of unbounded rank as depth grows
  CHECK(cert.target.find("x Z") != std::string::npos);
  CHECK(cert.orbit_reps.size() >= 3);
  CHECK(cert.statements.a_ok);
  CHECK(cert.statements.b_ok);
  CHECK(cert.statements.c_ok);
  CHECK(cert.statements.remember_ok);
  // the kernel oracle agreed on every tested word
  for (const auto& ev : cert.sample_evidence) CHECK(ev.kernel_member);
}
