#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace chebo {

/// The first `count` primes, by a sieve sized from the Rosser bound.
inline std::vector<std::int64_t> first_primes(std::size_t count) {
  std::vector<std::int64_t> primes;
  if (count == 0) return primes;
  const double n = static_cast<double>(count);
  const auto limit = static_cast<std::size_t>(count < 6 ? 15.0 : n * (std::log(n) + std::log(std::log(n))) + 3);
  std::vector<bool> composite(limit + 1, false);
  primes.reserve(count);
  for (std::size_t i = 2; i <= limit && primes.size() < count; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::int64_t>(i));
    for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace chebo
