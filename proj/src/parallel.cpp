#include "spm/parallel.hpp"

#include <cstdlib>
#include <string>

namespace spm {

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  if (const char* env = std::getenv("SPM_JOBS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value > 0) return static_cast<unsigned>(value);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace spm
