#include "urysohn/parallel.hpp"

#include <cstdlib>
#include <string>

namespace urysohn {

namespace {

std::atomic<int> configured{0};

}  // namespace

int default_workers() {
  if (const int w = configured.load(); w > 0) return w;
  if (const char* env = std::getenv("URYSOHN_FORGE_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w > 0) return w;
    } catch (const std::exception&) {
    }
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void set_default_workers(int workers) { configured.store(workers); }

}  // namespace urysohn
