#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace c4lab {

// Worker count for parallel scans. C4LAB_THREADS overrides (clamped to
// [1, 256]); otherwise hardware concurrency, at least 1.
inline int thread_cap() {
  if (const char* env = std::getenv("C4LAB_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return std::min(v, 256);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? (int)std::min(hw, 256u) : 1;
}

}  // namespace c4lab
