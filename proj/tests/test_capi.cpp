// Exercises the shared-library C surface end to end.
#include <cassert>
#include <cstdio>
#include <cstring>
#include <string>

#include "windmill.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      std::printf("FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

int main() {
  EXPECT(wm_task_new("frobnicate") == nullptr);
  EXPECT(std::strlen(wm_version()) > 0);

  {
    wm_task* t = wm_task_new("thurston-dihedral");
    EXPECT(t != nullptr);
    EXPECT(wm_task_set(t, "g-range", "3..6") == WM_OK);
    EXPECT(wm_task_set(t, "n-range", "1..8") == WM_OK);
    EXPECT(wm_task_run(t) == WM_OK);
    EXPECT(wm_task_status(t) == WM_OK);
    std::string report = wm_task_report(t);
    EXPECT(report.find("\"all_ok\": true") != std::string::npos);
    EXPECT(wm_task_error(t)[0] == '\0');
    wm_task_free(t);
  }
  {
    wm_task* t = wm_task_new("certify");
    EXPECT(wm_task_set(t, "in", WINDMILL_INSTANCE_DIR "/tripod.json") == WM_OK);
    EXPECT(wm_task_run(t) == WM_OK);
    std::string report = wm_task_report(t);
    EXPECT(report.find("\"pass\": true") != std::string::npos);
    wm_task_free(t);
  }
  {
    wm_task* t = wm_task_new("axioms");
    EXPECT(wm_task_set(t, "in", "no-such-file.json") == WM_OK);
    EXPECT(wm_task_run(t) == WM_INPUT_ERROR);
    EXPECT(wm_task_error(t)[0] != '\0');
    wm_task_free(t);
  }

  if (failures == 0) std::printf("capi: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
