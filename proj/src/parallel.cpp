#include "parallel.hpp"

#include <cstdlib>
#include <string>

namespace windmill {

int max_workers() {
  const char* env = std::getenv("WINDMILL_THREADS");
  if (env != nullptr) {
    int v = std::atoi(env);
    if (v <= 1) return 1;
    return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return hw > 8 ? 8 : static_cast<int>(hw);
}

}  // namespace windmill
