#include "c4lab/rng.hpp"

#include <numeric>
#include <stdexcept>

namespace c4lab {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::domain_error("Rng::below(0)");
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

long long Rng::int_in(long long lo, long long hi) {
  if (lo > hi) throw std::domain_error("Rng::int_in with lo > hi");
  return lo + (long long)below((std::uint64_t)(hi - lo) + 1);
}

bool Rng::chance(const Rational& p) {
  if (p.num() <= 0) return false;
  if (p.num() >= p.den()) return true;
  return below((std::uint64_t)p.den()) < (std::uint64_t)p.num();
}

std::vector<int> Rng::sample_without_replacement(int n, int k) {
  if (k < 0 || k > n) throw std::domain_error("sample_without_replacement: k out of range");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> out;
  out.reserve(k);
  for (int i = 0; i < k; ++i) {
    int j = i + (int)below((std::uint64_t)(n - i));
    std::swap(pool[i], pool[j]);
    out.push_back(pool[i]);
  }
  return out;
}

}  // namespace c4lab
