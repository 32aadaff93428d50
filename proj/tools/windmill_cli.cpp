// Batch front-end for the windmill verification library. Parses flags, hands
// the run to the shared library through its C interface, prints a one-line
// summary and the report path, and exits with the run status:
//   0 pass, 1 input error, 2 verified counterexample, 3 inconclusive/truncated.

#include <CLI11.hpp>
#include <cstdio>
#include <string>
#include <vector>

#include "windmill.h"

namespace {

struct CommonFlags {
  std::string in, out, K, L, word, f1, f2, m_range, g_range, n_range;
  long long depth = -1, word_bound = -1, max_words = -1, radius = -1, seed = -1;
  long long n = -1, p1 = -1, p2 = -1, genus = -1, g = -1, path_bound = -1;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--in", f.in, "input JSON file");
  cmd->add_option("--out", f.out, "report output path");
  cmd->add_option("--depth", f.depth, "windmill depth");
  cmd->add_option("--word-bound", f.word_bound, "word enumeration bound");
  cmd->add_option("--max-words", f.max_words, "cap on enumerated words");
  cmd->add_option("--radius", f.radius, "truncation radius override");
  cmd->add_option("--seed", f.seed, "seed for sampled checks");
  cmd->add_option("--K", f.K, "complex parameter K (rational p/q)");
  cmd->add_option("--L", f.L, "spinning level (rational or 'auto')");
  cmd->add_option("--path-bound", f.path_bound, "path length bound for K_p");
  cmd->add_option("--m-range", f.m_range, "congruence levels, lo..hi");
  cmd->add_option("--word", f.word, "twist word, e.g. 'c d^-1'");
  cmd->add_option("--f1", f.f1, "first twist word");
  cmd->add_option("--f2", f.f2, "second twist word");
  cmd->add_option("--n", f.n, "intersection number / power");
  cmd->add_option("--p1", f.p1, "first prime");
  cmd->add_option("--p2", f.p2, "second prime");
  cmd->add_option("--genus", f.genus, "genus for the homology representation");
  cmd->add_option("--g", f.g, "dihedral parameter g");
  cmd->add_option("--g-range", f.g_range, "dihedral g values, lo..hi");
  cmd->add_option("--n-range", f.n_range, "dihedral powers, lo..hi");
}

int run_task(const std::string& subcommand, const CommonFlags& f) {
  wm_task* task = wm_task_new(subcommand.c_str());
  if (task == nullptr) {
    std::fprintf(stderr, "unknown subcommand %s\n", subcommand.c_str());
    return 1;
  }
  auto set_str = [&](const char* key, const std::string& value) {
    if (!value.empty()) wm_task_set(task, key, value.c_str());
  };
  auto set_int = [&](const char* key, long long value) {
    if (value >= 0) wm_task_set(task, key, std::to_string(value).c_str());
  };
  set_str("in", f.in);
  set_str("out", f.out);
  set_str("K", f.K);
  set_str("L", f.L);
  set_str("word", f.word);
  set_str("f1", f.f1);
  set_str("f2", f.f2);
  set_str("m-range", f.m_range);
  set_str("g-range", f.g_range);
  set_str("n-range", f.n_range);
  set_int("depth", f.depth);
  set_int("word-bound", f.word_bound);
  set_int("max-words", f.max_words);
  set_int("radius", f.radius);
  set_int("seed", f.seed);
  set_int("path-bound", f.path_bound);
  set_int("n", f.n);
  set_int("p1", f.p1);
  set_int("p2", f.p2);
  set_int("genus", f.genus);
  set_int("g", f.g);

  wm_status status = wm_task_run(task);
  const char* error = wm_task_error(task);
  if (error[0] != '\0') std::fprintf(stderr, "%s\n", error);
  if (f.out.empty()) {
    std::fputs(wm_task_report(task), stdout);
  } else {
    const char* verdict = status == WM_OK            ? "pass"
                          : status == WM_COUNTEREXAMPLE ? "counterexample"
                          : status == WM_INCONCLUSIVE   ? "inconclusive"
                                                        : "error";
    std::printf("%s: %s (report: %s)\n", subcommand.c_str(), verdict, f.out.c_str());
  }
  wm_task_free(task);
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"windmill: finite-instance verification of spinning actions on "
               "projection complexes, with an exact twist-construction calculator"};
  app.require_subcommand(1);

  std::vector<std::pair<std::string, std::string>> simple = {
      {"axioms", "verify the projection complex axioms of a distance system"},
      {"complex", "build the complex P_K of a distance system"},
      {"constants", "measure the edge/path/geodesic constants and the spinning threshold"},
      {"spin-check", "check invariance, equivariance and the spinning condition"},
      {"windmill", "build windmill data from a base point"},
      {"certify", "run the full free product certificate pipeline"},
  };
  std::map<const CLI::App*, std::pair<std::string, CommonFlags>> flag_map;
  for (auto& [name, desc] : simple) {
    auto* cmd = app.add_subcommand(name, desc);
    auto& slot = flag_map[cmd];
    slot.first = name;
    add_common(cmd, slot.second);
  }

  auto* thurston = app.add_subcommand("thurston", "exact twist-construction calculator");
  thurston->require_subcommand(1);
  for (const char* sub : {"classify", "stretch", "independence", "congruence", "dihedral",
                          "partition"}) {
    auto* cmd = thurston->add_subcommand(sub, "");
    auto& slot = flag_map[cmd];
    slot.first = std::string("thurston-") + sub;
    add_common(cmd, slot.second);
  }

  CLI11_PARSE(app, argc, argv);

  for (auto& [cmd, slot] : flag_map)
    if (cmd->parsed()) return run_task(slot.first, slot.second);
  for (auto* sub : thurston->get_subcommands())
    if (sub->parsed()) return run_task(flag_map[sub].first, flag_map[sub].second);
  return 1;
}
