#include "hofa/reduce.hpp"

#include <cstdlib>
#include <string>

namespace hofa {

namespace {
std::atomic<int> g_configured{0};
}

int thread_count() {
  if (const char* env = std::getenv("HOFA_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const int configured = g_configured.load(std::memory_order_relaxed);
  if (configured >= 1) return configured;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_thread_count(int n) { g_configured.store(n < 0 ? 0 : n, std::memory_order_relaxed); }

}  // namespace hofa
