#include "windmill.h"

#include <map>
#include <set>
#include <string>

#include "runner.hpp"

extern "C" {

struct wm_task {
  windmill::RunConfig config;
  windmill::RunResult result;
  bool ran = false;
  std::string error;
};

const char* wm_version(void) { return windmill::runner_version(); }

wm_task* wm_task_new(const char* subcommand) {
  if (subcommand == nullptr) return nullptr;
  static const std::set<std::string> known = {
      "axioms",           "complex",          "constants",
      "spin-check",       "windmill",         "certify",
      "thurston-classify", "thurston-stretch", "thurston-independence",
      "thurston-congruence", "thurston-dihedral", "thurston-partition"};
  if (!known.count(subcommand)) return nullptr;
  auto* task = new wm_task;
  task->config.subcommand = subcommand;
  return task;
}

void wm_task_free(wm_task* task) { delete task; }

wm_status wm_task_set(wm_task* task, const char* key, const char* value) {
  if (task == nullptr || key == nullptr || value == nullptr) return WM_INPUT_ERROR;
  if (task->ran) return WM_INPUT_ERROR;
  task->config.options[key] = value;
  return WM_OK;
}

wm_status wm_task_run(wm_task* task) {
  if (task == nullptr) return WM_INPUT_ERROR;
  task->result = windmill::execute(task->config);
  task->ran = true;
  task->error = task->result.error;
  return static_cast<wm_status>(task->result.exit_code);
}

wm_status wm_task_status(const wm_task* task) {
  if (task == nullptr || !task->ran) return WM_INPUT_ERROR;
  return static_cast<wm_status>(task->result.exit_code);
}

const char* wm_task_report(const wm_task* task) {
  if (task == nullptr) return "";
  return task->result.report.c_str();
}

const char* wm_task_error(const wm_task* task) {
  if (task == nullptr) return "";
  return task->error.c_str();
}

}  // extern "C"
