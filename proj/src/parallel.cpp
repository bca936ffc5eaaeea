#include "riccigap/parallel.hpp"

#include <cstdlib>
#include <string>

namespace riccigap {

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("RICCI_GAP_THREADS")) {
    try {
      const int parsed = std::stoi(env);
      if (parsed > 0) return parsed;
    } catch (const std::exception&) {
      // fall through to hardware concurrency
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace riccigap
