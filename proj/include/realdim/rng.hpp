#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "realdim/rational.hpp"

namespace realdim {

struct RngConfig {
  std::uint64_t seed = 0;
  int coeff_bound = 99;
  int retry_budget = 5;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Deterministic random stream. Bounded draws use rejection sampling on the
// raw mt19937_64 output, so identical seeds give identical streams on every
// platform (std::uniform_int_distribution would not).
class RngState {
 public:
  explicit RngState(RngConfig config)
      : config_(config), engine_(splitmix64(config.seed ^ 0x5eed5eed5eed5eedull)) {}

  const RngConfig& config() const { return config_; }
  int coeff_bound() const { return config_.coeff_bound; }
  int retry_budget() const { return config_.retry_budget; }

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit range
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % range);
  }

  Rational coeff() { return Rational(static_cast<long>(uniform_int(-config_.coeff_bound, config_.coeff_bound))); }

  Rational nonzero_coeff() {
    for (;;) {
      Rational c = coeff();
      if (sign_of(c) != 0) return c;
    }
  }

  // Independent deterministic child stream, for parallel fiber recursion.
  RngState fork(std::uint64_t tag) const {
    RngConfig child = config_;
    child.seed = splitmix64(config_.seed ^ splitmix64(tag + 0x9e37ull));
    return RngState(child);
  }

 private:
  RngConfig config_;
  std::mt19937_64 engine_;
};

// Integers uniform in [-coeff_bound, coeff_bound]; with nonzero set, zero
// components are redrawn.
inline std::vector<Rational> random_generic_vector(int count, bool nonzero, RngState& rng) {
  if (count < 1) throw std::invalid_argument("random_generic_vector: count must be >= 1");
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v.push_back(nonzero ? rng.nonzero_coeff() : rng.coeff());
  return v;
}

}  // namespace realdim
