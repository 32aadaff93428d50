#include "runner.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "errors.hpp"
#include "instances.hpp"
#include "report_json.hpp"
#include "windmill_verify.hpp"

namespace windmill {

namespace {

constexpr const char* kVersion = "1.0.0";

struct Options {
  const RunConfig& cfg;

  bool has(const std::string& key) const { return cfg.options.count(key) != 0; }
  std::string get(const std::string& key, const std::string& fallback = "") const {
    auto it = cfg.options.find(key);
    return it == cfg.options.end() ? fallback : it->second;
  }
  long long get_int(const std::string& key, long long fallback) const {
    auto it = cfg.options.find(key);
    if (it == cfg.options.end()) return fallback;
    try {
      return std::stoll(it->second);
    } catch (const std::exception&) {
      throw InputError("option --" + key + " needs an integer, got '" + it->second + "'");
    }
  }
  Rat get_rat(const std::string& key, const Rat& fallback) const {
    auto it = cfg.options.find(key);
    return it == cfg.options.end() ? fallback : parse_rat(it->second);
  }
};

OJson config_echo(const RunConfig& cfg) {
  OJson j;
  j["subcommand"] = cfg.subcommand;
  OJson opts;
  for (const auto& [k, v] : cfg.options) opts[k] = v;  // std::map: sorted, deterministic
  j["options"] = opts;
  j["version"] = kVersion;
  return j;
}

OJson load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  OJson j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

GroupSig sig_from_json(const OJson& j) {
  std::vector<int> orders;
  for (const auto& o : j.at("orders")) orders.push_back(o.get<int>());
  GroupSig sig = GroupSig::cyclics(orders);
  if (j.contains("names")) {
    std::string names = j.at("names").get<std::string>();
    if (names.size() != sig.names.size()) throw InputError("names/orders length mismatch");
    for (std::size_t i = 0; i < names.size(); ++i) sig.names[i] = names[i];
  }
  return sig;
}

Tree tree_from_json(const OJson& j) {
  std::vector<std::pair<int, int>> edges;
  int maxv = 0;
  for (const auto& e : j.at("edges")) {
    int u = e.at(0).get<int>(), v = e.at(1).get<int>();
    edges.emplace_back(u, v);
    maxv = std::max(maxv, std::max(u, v));
  }
  int n = j.contains("vertices") ? j.at("vertices").get<int>() : maxv + 1;
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  Tree t = Tree::from_edges(n, std::move(edges), std::move(labels));
  if (j.contains("radius")) t.truncation_radius = j.at("radius").get<int>();
  return t;
}

// distance-system.json: explicit table, a tree (indicator system), a tree
// plus axes (axis gate system), or a componentwise sum.
DistanceSystem system_from_json(const OJson& j) {
  if (j.contains("sum")) {
    const auto& s = j.at("sum");
    std::vector<DistanceSystem> systems;
    for (const auto& sj : s.at("systems")) systems.push_back(system_from_json(sj));
    std::vector<std::vector<int>> grouping;
    for (const auto& row : s.at("grouping")) {
      std::vector<int> comps;
      for (const auto& c : row) comps.push_back(c.get<int>());
      grouping.push_back(std::move(comps));
    }
    std::optional<Rat> theta0;
    if (s.contains("theta0")) theta0 = parse_rat(s.at("theta0").get<std::string>());
    return sum_distance_systems(systems, grouping, theta0);
  }
  if (j.contains("tree")) {
    Tree t = tree_from_json(j.at("tree"));
    if (j.contains("axes")) {
      std::vector<AxisBundle> axes;
      for (const auto& a : j.at("axes")) {
        AxisBundle ax;
        ax.owner = a.contains("owner") ? a.at("owner").get<std::string>() : "";
        for (const auto& v : a.at("vertices")) ax.vertices.push_back(v.get<int>());
        axes.push_back(std::move(ax));
      }
      return axis_distance_system(t, axes);
    }
    return tree_distance_system(t);
  }
  int n = j.at("vertices").get<int>();
  Rat theta = j.contains("theta") ? parse_rat(j.at("theta").get<std::string>()) : Rat(0);
  bool partial = j.contains("partial") && j.at("partial").get<bool>();
  DistanceSystem ds = DistanceSystem::dense(n, theta, partial);
  if (j.contains("entries"))
    for (const auto& e : j.at("entries")) {
      int y = e.at(0).get<int>(), x = e.at(1).get<int>(), z = e.at(2).get<int>();
      ds.set(y, x, z, parse_rat(e.at(3).get<std::string>()));
    }
  if (j.contains("labels"))
    for (const auto& l : j.at("labels")) ds.labels.push_back(l.get<std::string>());
  return ds;
}

DistanceSystem load_system_option(const Options& opt) {
  if (!opt.has("in")) throw InputError("missing --in");
  return system_from_json(load_json_file(opt.get("in")));
}

std::optional<QuotientOracle> oracle_from_json(const OJson& j, int gen_count) {
  if (j.is_null()) return std::nullopt;
  QuotientOracle oracle;
  oracle.target = sig_from_json(j);
  oracle.faithful = j.contains("faithful") && j.at("faithful").get<bool>();
  if (j.contains("images")) {
    for (const auto& img : j.at("images"))
      oracle.gen_images.push_back(parse_word(oracle.target, img.get<std::string>()));
  } else {
    for (int g = 0; g < gen_count; ++g) oracle.gen_images.push_back(word_letter(oracle.target, g, 1));
  }
  return oracle;
}

// A loaded windmill run: either a model-backed coset instance or a generic
// table instance, with shared bounds.
struct RunBundle {
  std::shared_ptr<CosetInstance> coset;
  Coset coset_v0;
  std::shared_ptr<TableInstance> table;
  int table_v0 = 0;
  Materialized mat;  // coset instances only
  Rat K{1, 2};
  int depth = 2;
  int word_bound = 8;
  std::size_t max_words = 100000;
  int invariance_bound = 3;
  int equivariance_bound = 2;
  int spin_bound = 4;
};

RunBundle load_run(const Options& opt) {
  if (!opt.has("in")) throw InputError("missing --in");
  OJson j = load_json_file(opt.get("in"));
  RunBundle b;

  if (j.contains("bounds")) {
    const auto& bounds = j.at("bounds");
    if (bounds.contains("depth")) b.depth = bounds.at("depth").get<int>();
    if (bounds.contains("word_bound")) b.word_bound = bounds.at("word_bound").get<int>();
    if (bounds.contains("max_words")) b.max_words = bounds.at("max_words").get<std::size_t>();
    if (bounds.contains("invariance_bound"))
      b.invariance_bound = bounds.at("invariance_bound").get<int>();
    if (bounds.contains("equivariance_bound"))
      b.equivariance_bound = bounds.at("equivariance_bound").get<int>();
    if (bounds.contains("spin_bound")) b.spin_bound = bounds.at("spin_bound").get<int>();
  }
  b.depth = static_cast<int>(opt.get_int("depth", b.depth));
  b.word_bound = static_cast<int>(opt.get_int("word-bound", b.word_bound));
  b.max_words = static_cast<std::size_t>(opt.get_int("max-words", static_cast<long long>(b.max_words)));

  if (j.contains("instance")) {
    const auto& inst = j.at("instance");
    if (inst.at("model").get<std::string>() != "coset")
      throw InputError("unknown instance model '" + inst.at("model").get<std::string>() + "'");
    GroupSig sig = sig_from_json(inst);
    std::string metric_name = inst.contains("metric") ? inst.at("metric").get<std::string>()
                                                      : "indicator";
    CosetInstance::Metric metric = metric_name == "gates" ? CosetInstance::Metric::Gates
                                                          : CosetInstance::Metric::Indicator;
    int radius = inst.contains("radius") ? inst.at("radius").get<int>() : 6;
    radius = static_cast<int>(opt.get_int("radius", radius));
    int exp_bound = inst.contains("exp_bound") ? inst.at("exp_bound").get<int>() : 2;

    CosetInstance::FamilyKind fk = CosetInstance::FamilyKind::Stabilizers;
    int power = 1;
    if (inst.contains("family")) {
      std::string kind = inst.at("family").at("kind").get<std::string>();
      if (kind == "stabilizers")
        fk = CosetInstance::FamilyKind::Stabilizers;
      else if (kind == "conjugate-power") {
        fk = CosetInstance::FamilyKind::ConjugatePower;
        power = inst.at("family").at("power").get<int>();
      } else if (kind == "trivial")
        fk = CosetInstance::FamilyKind::Trivial;
      else
        throw InputError("unknown family kind '" + kind + "'");
    }
    std::optional<GroupSig> kernel;
    if (inst.contains("kernel") && !inst.at("kernel").is_null())
      kernel = sig_from_json(inst.at("kernel"));
    b.coset = std::make_shared<CosetInstance>(sig, metric, radius, exp_bound, fk, power, kernel);
    b.coset_v0 = inst.contains("v0") ? b.coset->model().parse_label(inst.at("v0").get<std::string>())
                                     : b.coset->base_vertex();
    if (inst.contains("K")) b.K = parse_rat(inst.at("K").get<std::string>());
    b.K = opt.get_rat("K", b.K);
    b.mat = materialize(*b.coset, b.K);
    return b;
  }

  // Generic table instance.
  OJson sys = j.contains("system_file") ? load_json_file(j.at("system_file").get<std::string>())
                                        : j.at("system");
  DistanceSystem ds = system_from_json(sys);
  OJson act = j.contains("action_file") ? load_json_file(j.at("action_file").get<std::string>())
                                        : j.at("action");
  std::vector<GroupAction::Generator> gens;
  for (const auto& g : act.at("generators")) {
    GroupAction::Generator gen;
    gen.name = g.at("name").get<std::string>();
    for (const auto& v : g.at("image")) gen.image.push_back(v.get<int>());
    for (int v : gen.image)
      if (v < 0)
        throw InputError("generator " + gen.name + " permutation is not total on the vertex set");
    gens.push_back(std::move(gen));
  }
  std::optional<QuotientOracle> oracle;
  if (act.contains("oracle"))
    oracle = oracle_from_json(act.at("oracle"), static_cast<int>(gens.size()));
  auto action = std::make_shared<GroupAction>(ds.size(), std::move(gens), oracle);

  VertexFamily fam;
  if (j.contains("family") || j.contains("family_file")) {
    OJson fj = j.contains("family_file") ? load_json_file(j.at("family_file").get<std::string>())
                                         : j.at("family");
    for (auto it = fj.at("assignments").begin(); it != fj.at("assignments").end(); ++it) {
      int v = std::stoi(it.key());
      std::vector<Word> words;
      for (const auto& w : it.value()) words.push_back(action->parse(w.get<std::string>()));
      fam.assignments[v] = words;
    }
    if (fj.contains("extend_by_conjugation") && fj.at("extend_by_conjugation").get<bool>())
      fam = extend_family_by_conjugation(*action, fam, ds.size() > 32 ? 16 : ds.size());
  }
  if (j.contains("K")) b.K = parse_rat(j.at("K").get<std::string>());
  b.K = opt.get_rat("K", b.K);
  ComplexGraph g = build_complex(ds, b.K);
  b.table = std::make_shared<TableInstance>(std::move(ds), std::move(g), action, fam);
  if (j.contains("v0")) b.table_v0 = j.at("v0").get<int>();
  return b;
}

// ---- subcommands ----

RunResult finish(const RunConfig& cfg, OJson&& body, int exit_code) {
  OJson report;
  report["config"] = config_echo(cfg);
  report["result"] = std::move(body);
  report["exit_code"] = exit_code;
  RunResult res;
  res.exit_code = exit_code;
  res.report = dump_report(report);
  Options opt{cfg};
  if (opt.has("out")) {
    std::ofstream out(opt.get("out"));
    if (!out) throw InputError("cannot write output file '" + opt.get("out") + "'");
    out << res.report;
  }
  return res;
}

RunResult run_axioms(const RunConfig& cfg) {
  Options opt{cfg};
  DistanceSystem ds = load_system_option(opt);
  AxiomReport rep = verify_axioms(ds);
  OJson body;
  body["vertices"] = ds.size();
  body["theta"] = rat_json(ds.theta());
  body["report"] = axiom_report_json(rep);
  return finish(cfg, std::move(body), rep.all_ok() ? 0 : 2);
}

RunResult run_complex(const RunConfig& cfg) {
  Options opt{cfg};
  DistanceSystem ds = load_system_option(opt);
  Rat K = opt.get_rat("K", Rat(1, 2));
  ComplexGraph g = build_complex(ds, K);
  OJson body = complex_json(g, g.n <= 512);
  return finish(cfg, std::move(body), 0);
}

RunResult run_constants(const RunConfig& cfg) {
  Options opt{cfg};
  DistanceSystem ds = load_system_option(opt);
  Rat K = opt.get_rat("K", Rat(1, 2));
  ComplexGraph g = build_complex(ds, K);
  std::optional<int> path_bound;
  if (opt.has("path-bound")) path_bound = static_cast<int>(opt.get_int("path-bound", 0));
  ConstantsReport rep = measure_constants(ds, g, path_bound);
  OJson body;
  body["complex"] = complex_json(g, false);
  body["constants"] = constants_report_json(rep);
  Threshold t = spinning_threshold(rep);
  body["spinning_threshold"] = rat_json(t.L);
  body["m"] = rat_json(t.m);
  return finish(cfg, std::move(body), 0);
}

struct PipelineChecks {
  ConstantsReport constants;
  InvarianceReport invariance;
  EquivarianceReport equivariance;
  SpinningReport spinning;
  bool tree_form_applicable = false;
  bool tree_form_pass = false;
  std::string tree_witness;
  Rat L_used{0};
  bool L_auto = false;
};

PipelineChecks run_checks(RunBundle& b, const Options& opt) {
  PipelineChecks out;
  const DistanceSystem& ds = b.coset ? b.mat.system : b.table->system();
  const ComplexGraph& g = b.coset ? b.mat.complex : b.table->complex();
  out.constants = measure_constants(ds, g);
  std::string lopt = opt.get("L", "auto");
  out.L_auto = lopt == "auto";
  out.L_used = out.L_auto ? out.constants.L_threshold : parse_rat(lopt);

  const GroupAction& action = b.coset ? *b.mat.action : b.table->action();
  const VertexFamily& family = b.coset ? b.mat.family : b.table->family();
  out.invariance = check_invariance(action, ds, b.invariance_bound);
  out.equivariance = check_equivariance(family, action, b.equivariance_bound);
  out.spinning = check_spinning(family, action, ds, out.L_used, b.spin_bound);
  out.tree_form_applicable = out.spinning.tree_form_checked;
  out.tree_form_pass = out.spinning.tree_form_pass;
  if (b.coset && b.coset->metric() == CosetInstance::Metric::Indicator) {
    // also run the model-level form, which sees the untruncated edge set
    out.tree_form_applicable = true;
    bool model_pass = b.coset->tree_spinning_holds(b.spin_bound, &out.tree_witness);
    out.tree_form_pass = out.tree_form_pass && model_pass;
    out.spinning.tree_form_checked = true;
    out.spinning.tree_form_pass = out.tree_form_pass;
  }
  return out;
}

RunResult run_spin_check(const RunConfig& cfg) {
  Options opt{cfg};
  RunBundle b = load_run(opt);
  PipelineChecks checks = run_checks(b, opt);
  OJson body;
  body["constants"] = constants_report_json(checks.constants);
  body["L_used"] = rat_json(checks.L_used);
  body["L_auto"] = checks.L_auto;
  body["invariance"] = invariance_json(checks.invariance);
  body["equivariance"] = equivariance_json(checks.equivariance);
  body["spinning"] = spinning_json(checks.spinning);
  bool pass = checks.invariance.pass && checks.equivariance.pass && checks.spinning.pass;
  return finish(cfg, std::move(body), pass ? 0 : 2);
}

RunResult run_windmill(const RunConfig& cfg) {
  Options opt{cfg};
  RunBundle b = load_run(opt);
  WindmillSummary summary;
  if (b.coset) {
    WindmillBuilder<CosetInstance> wb(*b.coset, b.coset_v0, b.depth);
    summary = wb.summary();
  } else {
    WindmillBuilder<TableInstance> wb(*b.table, b.table_v0, b.depth);
    summary = wb.summary();
  }
  OJson body = windmill_summary_json(summary);
  return finish(cfg, std::move(body), summary.truncated ? 3 : 0);
}

RunResult run_certify(const RunConfig& cfg) {
  Options opt{cfg};
  RunBundle b = load_run(opt);
  PipelineChecks checks = run_checks(b, opt);

  InstanceMetrics metrics;
  metrics.theta = checks.constants.theta;
  metrics.Ke = checks.constants.Ke;
  metrics.Kp = checks.constants.Kp;
  metrics.Kg = checks.constants.Kg;
  metrics.m = checks.constants.m;
  metrics.L_threshold = checks.constants.L_threshold;
  metrics.L_used = checks.L_used;

  CertifyConfig cc;
  cc.depth = b.depth;
  cc.word_bound = b.word_bound;
  cc.max_words = b.max_words;
  cc.spinning_verified = checks.spinning.pass && checks.L_used >= checks.constants.L_threshold;
  cc.tree_spinning_verified = checks.tree_form_applicable && checks.tree_form_pass;

  CertificateResult cert;
  if (b.coset)
    cert = free_product_certificate(*b.coset, b.coset_v0, metrics, cc);
  else
    cert = free_product_certificate(*b.table, b.table_v0, metrics, cc);

  OJson body;
  body["constants"] = constants_report_json(checks.constants);
  body["L_used"] = rat_json(checks.L_used);
  body["invariance"] = invariance_json(checks.invariance);
  body["equivariance"] = equivariance_json(checks.equivariance);
  body["spinning"] = spinning_json(checks.spinning);
  body["certificate"] = certificate_json(cert);

  int code = 0;
  bool prereq = checks.invariance.pass && checks.equivariance.pass &&
                (checks.spinning.pass || cc.tree_spinning_verified);
  if (!prereq || !cert.pass)
    code = 2;
  else if (cert.words_tested == 0)
    code = 3;
  return finish(cfg, std::move(body), code);
}

std::pair<long long, long long> parse_range(const std::string& text, long long lo_default,
                                            long long hi_default) {
  if (text.empty()) return {lo_default, hi_default};
  auto dots = text.find("..");
  if (dots == std::string::npos) throw InputError("range must look like 'lo..hi': '" + text + "'");
  return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
}

RunResult run_thurston_classify(const RunConfig& cfg) {
  Options opt{cfg};
  TwistWord w = parse_twist_word(opt.get("word", "c d^-1"));
  long long n = opt.get_int("n", 1);
  Mat2 m = derivative(w, n);
  NTClass cls = classify_nt(m);
  OJson body;
  body["word"] = twist_word_str(w);
  body["n"] = n;
  body["matrix"] = mat_str(projectivize(m));
  body["trace"] = mat_trace(m);
  body["class"] = nt_class_str(cls);
  return finish(cfg, std::move(body), 0);
}

RunResult run_thurston_stretch(const RunConfig& cfg) {
  Options opt{cfg};
  TwistWord w = parse_twist_word(opt.get("word", "c d^-1"));
  long long n = opt.get_int("n", 1);
  Mat2 m = derivative(w, n);
  QuadraticNumber lambda = stretch_factor(m);
  OJson body;
  body["word"] = twist_word_str(w);
  body["n"] = n;
  body["matrix"] = mat_str(projectivize(m));
  body["stretch_factor"] = quadratic_json(lambda);
  body["field"] = lambda.d;
  return finish(cfg, std::move(body), 0);
}

RunResult run_thurston_independence(const RunConfig& cfg) {
  Options opt{cfg};
  TwistWord f1 = parse_twist_word(opt.get("f1", "c d^-1"));
  TwistWord f2 = parse_twist_word(opt.get("f2", "c d^-2"));
  long long n = opt.get_int("n", 1);
  IndependenceCertificate cert = normal_independence(f1, f2, n);
  OJson body;
  body["f1"] = twist_word_str(f1);
  body["f2"] = twist_word_str(f2);
  body["n"] = n;
  body["lambda1"] = quadratic_json(cert.lambda1);
  body["lambda2"] = quadratic_json(cert.lambda2);
  body["independent"] = cert.independent;
  body["inconclusive"] = cert.inconclusive;
  body["reasoning"] = cert.reasoning;
  return finish(cfg, std::move(body), cert.independent ? 0 : 3);
}

RunResult run_thurston_congruence(const RunConfig& cfg) {
  Options opt{cfg};
  long long p1 = opt.get_int("p1", 5);
  long long p2 = opt.get_int("p2", 7);
  int genus = static_cast<int>(opt.get_int("genus", 2));
  auto [lo, hi] = parse_range(opt.get("m-range"), 2, 1000);
  HomologyRep rep = standard_homology(genus);
  IVec c(static_cast<std::size_t>(2 * genus), 0);
  c[0] = 1;  // nonseparating primitive class e_1
  CongruenceCertificate cert =
      congruence_certificate(p1, p2, rep, c, static_cast<int>(lo), static_cast<int>(hi));
  OJson body;
  body["p1"] = p1;
  body["p2"] = p2;
  body["genus"] = genus;
  body["m_range"] = std::to_string(lo) + ".." + std::to_string(hi);
  body["power_matches_transvection"] = cert.power_matches_transvection;
  body["membership_iff_divisibility"] = cert.pass;
  body["violations"] = cert.violations;
  body["no_common_level"] = cert.no_common_level;
  body["conclusion"] = cert.pass && cert.no_common_level
                           ? "no proper level-m congruence subgroup contains the normal closure"
                           : "criterion failed on the tested range";
  return finish(cfg, std::move(body), cert.pass && cert.power_matches_transvection ? 0 : 2);
}

RunResult run_thurston_dihedral(const RunConfig& cfg) {
  Options opt{cfg};
  auto [glo, ghi] = parse_range(opt.get("g-range"), opt.get_int("g", 3), opt.get_int("g", 3));
  auto [nlo, nhi] = parse_range(opt.get("n-range"), opt.get_int("n", 1), opt.get_int("n", 1));
  OJson cases = OJson::array();
  bool all_ok = true;
  for (long long g = glo; g <= ghi; ++g)
    for (long long n = nlo; n <= nhi; ++n) {
      DihedralReport rep = dihedral_power_commutator(static_cast<int>(g), n);
      bool ok = rep.expected && rep.matches_permutation;
      all_ok = all_ok && ok;
      if (!ok || (ghi - glo + 1) * (nhi - nlo + 1) <= 16) cases.push_back(dihedral_json(rep));
    }
  OJson body;
  body["g_range"] = std::to_string(glo) + ".." + std::to_string(ghi);
  body["n_range"] = std::to_string(nlo) + ".." + std::to_string(nhi);
  body["all_ok"] = all_ok;
  body["cases"] = cases;
  return finish(cfg, std::move(body), all_ok ? 0 : 2);
}

RunResult run_thurston_partition(const RunConfig& cfg) {
  Options opt{cfg};
  if (!opt.has("in")) throw InputError("missing --in");
  OJson j = load_json_file(opt.get("in"));
  auto load_partition = [&](const char* key) {
    std::vector<std::vector<int>> p;
    for (const auto& block : j.at(key)) {
      std::vector<int> b;
      for (const auto& x : block) b.push_back(x.get<int>());
      p.push_back(std::move(b));
    }
    return p;
  };
  auto p1 = load_partition("p1");
  auto p2 = load_partition("p2");
  PartitionReport rep = partition_compatible(p1, p2);
  OJson body;
  body["compatible"] = rep.compatible;
  if (!rep.compatible) body["witness"] = rep.witness;
  return finish(cfg, std::move(body), rep.compatible ? 0 : 2);
}

}  // namespace

const char* runner_version() { return kVersion; }

RunResult execute(const RunConfig& cfg) {
  try {
    const std::string& s = cfg.subcommand;
    if (s == "axioms") return run_axioms(cfg);
    if (s == "complex") return run_complex(cfg);
    if (s == "constants") return run_constants(cfg);
    if (s == "spin-check") return run_spin_check(cfg);
    if (s == "windmill") return run_windmill(cfg);
    if (s == "certify") return run_certify(cfg);
    if (s == "thurston-classify") return run_thurston_classify(cfg);
    if (s == "thurston-stretch") return run_thurston_stretch(cfg);
    if (s == "thurston-independence") return run_thurston_independence(cfg);
    if (s == "thurston-congruence") return run_thurston_congruence(cfg);
    if (s == "thurston-dihedral") return run_thurston_dihedral(cfg);
    if (s == "thurston-partition") return run_thurston_partition(cfg);
    throw InputError("unknown subcommand '" + s + "'");
  } catch (const TruncationError& e) {
    RunResult res;
    res.exit_code = 3;
    res.error = e.what();
    return res;
  } catch (const InputError& e) {
    RunResult res;
    res.exit_code = 1;
    res.error = e.what();
    return res;
  } catch (const std::exception& e) {
    RunResult res;
    res.exit_code = 4;
    res.error = std::string("internal error: ") + e.what();
    return res;
  }
}

}  // namespace windmill
