#pragma once

#include <string>
#include <vector>

#include "realdim/mpoly.hpp"
#include "realdim/parse.hpp"
#include "realdim/rng.hpp"

namespace testsupport {

using namespace realdim;

inline RingPtr ring_xy() { return make_ring({"x", "y"}); }
inline RingPtr ring_xyz() { return make_ring({"x", "y", "z"}); }

inline MPoly P(const std::string& text, const RingPtr& ring) {
  return parse_polynomial(text, ring);
}

// Dense-ish random polynomial: up to `max_terms` random terms of total
// degree <= max_deg with coefficients in [-9, 9].
inline MPoly random_poly(const RingPtr& ring, RngState& rng, int max_deg, int max_terms) {
  std::vector<Term> terms;
  int nterms = static_cast<int>(rng.uniform_int(1, max_terms));
  std::size_t n = ring->size();
  for (int t = 0; t < nterms; ++t) {
    std::vector<std::uint32_t> exps(n, 0);
    int budget = static_cast<int>(rng.uniform_int(0, max_deg));
    for (int b = 0; b < budget; ++b) {
      std::size_t i = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1));
      exps[i] += 1;
    }
    Rational c(static_cast<long>(rng.uniform_int(-9, 9)));
    terms.push_back({Monomial(std::move(exps)), std::move(c)});
  }
  return MPoly::from_terms(ring, std::move(terms));
}

inline std::vector<Rational> random_point(const RingPtr& ring, RngState& rng, int bound = 5) {
  std::vector<Rational> pt;
  for (std::size_t i = 0; i < ring->size(); ++i)
    pt.push_back(Rational(static_cast<long>(rng.uniform_int(-bound, bound))));
  return pt;
}

}  // namespace testsupport
