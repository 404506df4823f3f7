#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "c4lab/rational.hpp"

namespace c4lab {

// Seeded generator with pinned sampling procedures. mt19937_64 output is fully
// specified by the standard and the derivations below avoid std::distribution
// implementations, so equal seeds give equal draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, bound). bound >= 1. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [lo, hi], inclusive.
  long long int_in(long long lo, long long hi);

  // True with probability exactly p.
  bool chance(const Rational& p);

  double real01() { return (next() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = (std::size_t)below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct values from [0, n), in selection order.
  std::vector<int> sample_without_replacement(int n, int k);

 private:
  std::mt19937_64 eng_;
};

}  // namespace c4lab
