#include "report_json.hpp"

namespace windmill {

OJson axiom_report_json(const AxiomReport& rep) {
  OJson j;
  j["symmetry_ok"] = rep.symmetry_ok;
  j["triangle_ok"] = rep.triangle_ok;
  j["triples_ok"] = rep.triples_ok;
  j["finiteness_ok"] = rep.finiteness_ok;
  j["finiteness_max_count"] = rep.finiteness_max_count;
  j["degenerate"] = rep.degenerate;
  j["violations"] = rep.violation_count;
  OJson w = OJson::array();
  for (const auto& wit : rep.witnesses) {
    OJson one;
    one["axiom"] = wit.axiom;
    one["tuple"] = wit.tuple;
    OJson vals = OJson::array();
    for (const auto& v : wit.values) vals.push_back(rat_json(v));
    one["values"] = vals;
    w.push_back(one);
  }
  j["witnesses"] = w;
  return j;
}

OJson constants_report_json(const ConstantsReport& rep) {
  OJson j;
  j["K_e"] = rat_json(rep.Ke);
  j["K_p"] = rat_json(rep.Kp);
  j["K_g"] = rat_json(rep.Kg);
  j["theta"] = rat_json(rep.theta);
  j["m"] = rat_json(rep.m);
  j["L_threshold"] = rat_json(rep.L_threshold);
  j["degenerate"] = rep.degenerate;
  j["path_bound"] = rep.path_bound;
  return j;
}

OJson complex_json(const ComplexGraph& g, bool include_edges) {
  OJson j;
  j["vertices"] = g.n;
  j["K"] = rat_json(g.K);
  j["edges"] = g.edge_count;
  j["diameter"] = g.diameter;
  j["degenerate"] = g.degenerate;
  if (include_edges) {
    OJson e = OJson::array();
    for (int v = 0; v < g.n; ++v)
      for (int w : g.adj_list[static_cast<std::size_t>(v)])
        if (v < w) e.push_back(OJson::array({v, w}));
    j["edge_list"] = e;
  }
  return j;
}

namespace {
OJson witnesses_json(const std::vector<CheckWitness>& ws) {
  OJson arr = OJson::array();
  for (const auto& w : ws) {
    OJson one;
    one["kind"] = w.kind;
    one["detail"] = w.detail;
    arr.push_back(one);
  }
  return arr;
}
}  // namespace

OJson invariance_json(const InvarianceReport& rep) {
  OJson j;
  j["pass"] = rep.pass;
  j["word_bound"] = rep.word_bound;
  j["words_tested"] = rep.words_tested;
  j["entries_checked"] = rep.entries_checked;
  j["entries_skipped"] = rep.entries_skipped;
  j["violations"] = rep.violations;
  j["witnesses"] = witnesses_json(rep.witnesses);
  return j;
}

OJson equivariance_json(const EquivarianceReport& rep) {
  OJson j;
  j["pass"] = rep.pass;
  j["word_bound"] = rep.word_bound;
  j["pairs_checked"] = rep.pairs_checked;
  j["pairs_skipped"] = rep.pairs_skipped;
  j["violations"] = rep.violations;
  j["witnesses"] = witnesses_json(rep.witnesses);
  return j;
}

OJson spinning_json(const SpinningReport& rep) {
  OJson j;
  j["pass"] = rep.pass;
  j["L_required"] = rat_json(rep.L_required);
  j["L_measured"] = rep.measured_any ? rat_json(rep.L_measured) : OJson(nullptr);
  j["word_bound"] = rep.word_bound;
  j["tuples_checked"] = rep.tuples_checked;
  j["tuples_skipped"] = rep.tuples_skipped;
  j["inconclusive_words"] = rep.inconclusive_words;
  if (rep.tree_form_checked) j["tree_form_pass"] = rep.tree_form_pass;
  j["violations"] = rep.violations;
  j["witnesses"] = witnesses_json(rep.witnesses);
  return j;
}

OJson windmill_summary_json(const WindmillSummary& s) {
  OJson j;
  j["v0"] = s.v0;
  j["universe_size"] = s.universe_size;
  j["truncated"] = s.truncated;
  OJson levels = OJson::array();
  for (const auto& l : s.levels) {
    OJson one;
    one["level"] = l.index;
    one["W_size"] = l.W_size;
    one["N_size"] = l.N_size;
    one["L_size"] = l.L_size;
    one["orbit_reps"] = l.orbit_reps;
    one["H_generators"] = l.h_generators;
    one["connected"] = l.connected;
    one["truncated"] = l.truncated;
    levels.push_back(one);
  }
  j["levels"] = levels;
  return j;
}

OJson statements_json(const StatementsReport& s) {
  OJson j;
  j["m"] = rat_json(s.m);
  j["theta"] = rat_json(s.theta);
  j["L"] = rat_json(s.L);
  j["K_p"] = rat_json(s.Kp);
  j["A_ok"] = s.a_ok;
  j["A_checked"] = s.a_checked;
  j["B_ok"] = s.b_ok;
  j["B_checked"] = s.b_checked;
  j["C_ok"] = s.c_ok;
  j["C_checked"] = s.c_checked;
  j["C_skipped_membership"] = s.c_skipped_membership;
  j["convexity_ok"] = s.convexity_ok;
  j["convexity_checked"] = s.theta_checked;
  j["remember_ok"] = s.remember_ok;
  j["remember_checked"] = s.remember_checked;
  j["remember_min_slack"] = s.remember_any ? rat_json(s.remember_min_slack) : OJson(nullptr);
  j["derived_gap"] = rat_json(s.derived_gap);
  j["forms_agree"] = s.forms_agree;
  j["failures"] = s.failures;
  return j;
}

OJson certificate_json(const CertificateResult& c) {
  OJson j;
  j["pass"] = c.pass;
  if (!c.refusal.empty()) {
    j["refusal"] = c.refusal;
    j["counterexample"] = c.counterexample;
  }
  j["target"] = c.target;
  j["orbit_reps"] = c.orbit_reps;
  j["orbit_reps_total"] = c.orbit_reps_total;
  j["word_bound"] = c.word_bound;
  j["words_tested"] = c.words_tested;
  j["words_skipped"] = c.words_skipped;
  j["word_cap_hit"] = c.word_cap_hit;
  j["distinct_images"] = c.distinct_images;
  j["inclusion_realized"] = c.inclusion_realized;
  j["windmill"] = windmill_summary_json(c.windmill);
  j["statements"] = statements_json(c.statements);
  OJson ev = OJson::array();
  for (const auto& e : c.sample_evidence) {
    OJson one;
    one["word"] = e.word;
    one["image"] = e.image;
    one["normal_form"] = e.normal_form;
    one["level"] = e.level;
    one["syllables"] = e.syllable_count;
    OJson pivots = OJson::array();
    for (const auto& p : e.pivots) {
      OJson pv;
      pv["pivot"] = p.pivot;
      pv["projection"] = rat_json(p.projection);
      pv["waypoint"] = p.waypoint;
      pv["metric_ok"] = p.metric_ok;
      pivots.push_back(pv);
    }
    one["pivots"] = pivots;
    one["in_order"] = e.in_order;
    one["oracle_nontrivial"] = e.oracle_nontrivial;
    one["kernel_member"] = e.kernel_member;
    ev.push_back(one);
  }
  j["evidence_sample"] = ev;
  return j;
}

OJson distance_formula_json(const DistanceFormulaReport& rep) {
  OJson j;
  j["pass"] = rep.pass;
  j["M"] = rat_json(rep.M_used);
  j["minimal_M"] = rat_json(rep.minimal_M);
  j["min_slack"] = rat_json(rep.min_slack);
  j["pairs_checked"] = rep.pairs_checked;
  j["failures"] = rep.failures;
  return j;
}

OJson quadratic_json(const QuadraticNumber& q) {
  OJson j;
  j["a"] = rat_json(q.a);
  j["b"] = rat_json(q.b);
  j["d"] = q.d;
  j["value"] = qn_str(q);
  return j;
}

OJson dihedral_json(const DihedralReport& rep) {
  OJson j;
  j["g"] = rep.g;
  j["n"] = rep.n;
  OJson sym;
  sym["rotation"] = rep.symbolic.rot;
  sym["reflection"] = rep.symbolic.ref;
  sym["f_power"] = rep.symbolic.fpow;
  j["commutator"] = sym;
  j["expected"] = rep.expected;
  j["matches_permutation"] = rep.matches_permutation;
  if (rep.n % 2 == 0) j["even_power_is_f_power"] = rep.even_power_is_f_power;
  return j;
}

std::string dump_report(const OJson& report) { return report.dump(2) + "\n"; }

}  // namespace windmill
