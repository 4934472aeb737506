#include "stratsym/parallel.hpp"

#include <cstdlib>
#include <string>

namespace stratsym {

int default_thread_count() {
  if (const char* env = std::getenv("STRATSYM_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace stratsym
