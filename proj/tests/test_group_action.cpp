#include <doctest.h>

#include <set>

#include "errors.hpp"
#include "group_action.hpp"
#include "instances.hpp"
#include "tree_backend.hpp"

using namespace windmill;

namespace {

CosetInstance z3z3_instance(int radius) {
  GroupSig sig = GroupSig::cyclics({3, 3});
  sig.names = {'x', 'y'};
  return CosetInstance(sig, CosetInstance::Metric::Indicator, radius, 2,
                       CosetInstance::FamilyKind::Stabilizers, 1, std::nullopt);
}

}  // namespace

TEST_CASE("identity-only action is trivially invariant") {
  GroupAction::Generator e{"e", {0, 1, 2}};
  GroupAction a(3, {e});
  Tree t = Tree::from_edges(3, {{0, 1}, {1, 2}});
  auto rep = check_invariance(a, tree_distance_system(t), 3);
  CHECK(rep.pass);
  CHECK(rep.violations == 0);
}

TEST_CASE("left multiplication preserves the betweenness system") {
  auto inst = z3z3_instance(5);
  Materialized m = materialize(inst, Rat(1, 2), /*with_complex=*/false);
  auto rep = check_invariance(*m.action, m.system, 3);
  CHECK(rep.pass);
  CHECK(rep.entries_checked > 1000);
}

TEST_CASE("a corrupted permutation is caught with a witness") {
  GroupAction::Generator p{"p", {1, 0, 2, 3}};  // swaps one edge end, not an isometry
  GroupAction a(4, {p});
  Tree t = Tree::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  auto rep = check_invariance(a, tree_distance_system(t), 1);
  CHECK(!rep.pass);
  CHECK(!rep.witnesses.empty());
}

TEST_CASE("equivariance of conjugation-extended families") {
  auto inst = z3z3_instance(4);
  Materialized m = materialize(inst, Rat(1, 2), /*with_complex=*/false);
  auto rep = check_equivariance(m.family, *m.action, 2);
  CHECK(rep.pass);
  CHECK(rep.pairs_checked > 0);

  SUBCASE("an inconsistent assignment on one orbit fails") {
    VertexFamily broken = m.family;
    int victim = -1;
    for (const auto& [v, gens] : broken.assignments)
      if (v != m.index.at(inst.base_vertex())) victim = v;
    REQUIRE(victim >= 0);
    broken.assignments[victim] = {m.action->parse("x")};
    auto bad = check_equivariance(broken, *m.action, 2);
    // the x rotation stabilizes exactly one vertex, so some tested pair breaks
    CHECK(!bad.pass);
    CHECK(!bad.witnesses.empty());
  }
}

TEST_CASE("trivial family passes every family check") {
  auto inst = z3z3_instance(3);
  Materialized m = materialize(inst, Rat(1, 2), /*with_complex=*/false);
  VertexFamily trivial;
  auto eq = check_equivariance(trivial, *m.action, 2);
  CHECK(eq.pass);
  auto spin = check_spinning(trivial, *m.action, m.system, Rat(100), 3);
  CHECK(spin.pass);
  CHECK(!spin.measured_any);
}

TEST_CASE("spinning on the rotation family") {
  auto inst = z3z3_instance(5);
  Materialized m = materialize(inst, Rat(1, 2), /*with_complex=*/false);
  SUBCASE("every rotation spins by exactly one") {
    auto rep = check_spinning(m.family, *m.action, m.system, Rat(1), 2);
    CHECK(rep.pass);
    CHECK(rep.measured_any);
    CHECK(rep.L_measured == Rat(1));
  }
  SUBCASE("a huge L fails with witnesses") {
    auto rep = check_spinning(m.family, *m.action, m.system, Rat(9999), 2);
    CHECK(!rep.pass);
    CHECK(!rep.witnesses.empty());
  }
  SUBCASE("L = 0 always passes") {
    auto rep = check_spinning(m.family, *m.action, m.system, Rat(0), 2);
    CHECK(rep.pass);
  }
  SUBCASE("the tree form holds for full stabilizers") {
    std::string witness;
    CHECK(inst.tree_spinning_holds(3, &witness));
  }
}

TEST_CASE("conjugate power families spin linearly in the power") {
  GroupSig f2 = GroupSig::free_group(2);
  for (int n : {4, 8, 16}) {
    CosetInstance inst(f2, CosetInstance::Metric::Gates, 2, n + 2,
                       CosetInstance::FamilyKind::ConjugatePower, n, GroupSig::cyclics({2, 2}));
    Coset v0 = inst.base_vertex();
    Word h = inst.family_generator(v0);
    Rat measured(-1);
    for (const Coset& w : inst.universe()) {
      if (w == v0) continue;
      Coset hw = inst.act(h, w);
      Rat d = inst.dist_fn(v0, w, hw);
      if (measured < Rat(0) || d < measured) measured = d;
    }
    CHECK(measured == Rat(n));
  }
  // materialized check_spinning agrees at n = 4
  CosetInstance inst4(f2, CosetInstance::Metric::Gates, 2, 6,
                      CosetInstance::FamilyKind::ConjugatePower, 4, GroupSig::cyclics({2, 2}));
  Materialized m = materialize(inst4, Rat(1, 2), /*with_complex=*/false);
  VertexFamily only_base;
  int base = m.index.at(inst4.base_vertex());
  only_base.assignments[base] = m.family.at(base);
  auto rep = check_spinning(only_base, *m.action, m.system, Rat(4), 1);
  CHECK(rep.pass);
  CHECK(rep.L_measured == Rat(4));
}

TEST_CASE("symmetrization") {
  // vertices 0,1 are two components of one composite vertex; s swaps them
  GroupAction::Generator s{"s", {1, 0, 3, 2}};
  GroupAction::Generator f{"f", {0, 1, 3, 2}};
  auto a = std::make_shared<GroupAction>(4, std::vector<GroupAction::Generator>{s, f});

  VertexFamily fam;
  fam.assignments[0] = {a->parse("f")};

  SUBCASE("single component orbit is the identity operation") {
    ComponentOrbit orbit;
    orbit.components = {0};
    orbit.transporters = {Word{}};
    auto res = symmetrize(fam, *a, {orbit});
    CHECK(res.family.assignments.at(0) == fam.assignments.at(0));
    CHECK(res.closure_verified);
  }
  SUBCASE("two swapped components get conjugate copies") {
    ComponentOrbit orbit;
    orbit.components = {0, 1};
    orbit.transporters = {Word{}, a->parse("s")};
    auto res = symmetrize(fam, *a, {orbit});
    REQUIRE(res.family.has(1));
    CHECK(res.family.at(0) == std::vector<Word>{a->parse("f")});
    CHECK(res.family.at(1) == std::vector<Word>{a->parse("sfS")});
    CHECK(res.closure_verified);

    // idempotent up to the generated permutation set
    auto res2 = symmetrize(res.family, *a, {orbit});
    auto perms = [&](const VertexFamily& vf) {
      std::set<std::vector<int>> out;
      for (const auto& [v, gens] : vf.assignments)
        for (const Word& g : gens) out.insert(a->apply_all(g));
      return out;
    };
    CHECK(perms(res2.family) == perms(res.family));
  }
  SUBCASE("bad transporter is rejected") {
    ComponentOrbit orbit;
    orbit.components = {0, 1};
    orbit.transporters = {Word{}, a->parse("f")};  // f does not move 0 to 1
    CHECK_THROWS_AS(symmetrize(fam, *a, {orbit}), InputError);
  }
  SUBCASE("three components in one orbit give nine words before reduction") {
    GroupAction::Generator c{"c", {1, 2, 0, 3}};
    auto a3 = std::make_shared<GroupAction>(4, std::vector<GroupAction::Generator>{c});
    VertexFamily fam3;
    fam3.assignments[0] = {a3->parse("c")};
    fam3.assignments[1] = {a3->parse("c")};
    fam3.assignments[2] = {a3->parse("c")};
    ComponentOrbit orbit;
    orbit.components = {0, 1, 2};
    orbit.transporters = {Word{}, a3->parse("c"), a3->parse("cc")};
    auto res = symmetrize(fam3, *a3, {orbit});
    CHECK(res.generators_before == 9);
  }
}

TEST_CASE("conjugating by stabilizer words preserves the rotation set") {
  auto inst = z3z3_instance(4);
  Materialized m = materialize(inst, Rat(1, 2), /*with_complex=*/false);
  int v0 = m.index.at(inst.base_vertex());
  const GroupSig& sig = m.action->word_sig();
  std::set<std::string> rotation_set;  // keys of the elements of <R_v0>
  for (const Word& r : m.family.at(v0))
    for (int k = 0; k <= 2; ++k) rotation_set.insert(m.action->word_key(word_pow(sig, r, k)));
  for (const Word& g : m.action->words_up_to(3)) {
    if (m.action->apply(g, v0) != v0) continue;
    for (const Word& r : m.family.at(v0)) {
      CHECK(rotation_set.count(m.action->word_key(word_conj(sig, g, r))) == 1);
    }
  }
}
