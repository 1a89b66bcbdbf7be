#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "realdim/mpoly.hpp"
#include "realdim/parse.hpp"
#include "realdim/rng.hpp"

namespace realdim {

namespace instances_detail {

inline RingPtr standard_ring(int n) {
  std::vector<std::string> vars;
  vars.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  return make_ring(std::move(vars));
}

}  // namespace instances_detail

// p_n = (sum x_i^2)^2 - 4 sum_{i<n} x_{i+1}^2 x_i^2 - 4 x_1^2 x_n^2, degree 4.
inline ProblemFile generate_p(int n) {
  if (n < 2) throw std::invalid_argument("p family requires n >= 2");
  RingPtr ring = instances_detail::standard_ring(n);
  MPoly sum_sq = MPoly::zero(ring);
  for (int i = 0; i < n; ++i) {
    MPoly xi = MPoly::variable(ring, i);
    sum_sq = sum_sq + xi * xi;
  }
  MPoly p = sum_sq * sum_sq;
  for (int i = 0; i + 1 < n; ++i) {
    MPoly xi = MPoly::variable(ring, i);
    MPoly xj = MPoly::variable(ring, i + 1);
    p = p - Rational(4) * (xj * xj * xi * xi);
  }
  MPoly x1 = MPoly::variable(ring, 0);
  MPoly xn = MPoly::variable(ring, n - 1);
  p = p - Rational(4) * (x1 * x1 * xn * xn);
  return {ring->vars(), {p}, "p" + std::to_string(n)};
}

// b_n = prod (x_i^2 + n - 1) - n^{n-2} (sum x_i)^2, degree 2n.
inline ProblemFile generate_b(int n) {
  if (n < 2) throw std::invalid_argument("b family requires n >= 2");
  RingPtr ring = instances_detail::standard_ring(n);
  MPoly prod = MPoly::constant(ring, Rational(1));
  MPoly sum = MPoly::zero(ring);
  for (int i = 0; i < n; ++i) {
    MPoly xi = MPoly::variable(ring, i);
    prod = prod * (xi * xi + MPoly::constant(ring, Rational(n - 1)));
    sum = sum + xi;
  }
  Rational scale(integer_pow(Integer(n), static_cast<unsigned long>(n - 2)));
  MPoly b = prod - scale * (sum * sum);
  return {ring->vars(), {b}, "b" + std::to_string(n)};
}

// s_{c,n} = sum of squares of c dense random quadrics with integer
// coefficients in [-9, 9]; generation is seed-deterministic.
inline ProblemFile generate_s(int c, int n, std::uint64_t seed) {
  if (c < 1 || n < 2) throw std::invalid_argument("s family requires c >= 1 and n >= 2");
  RingPtr ring = instances_detail::standard_ring(n);
  RngConfig cfg;
  cfg.seed = seed;
  cfg.coeff_bound = 9;
  RngState rng(cfg);
  MPoly total = MPoly::zero(ring);
  for (int k = 0; k < c; ++k) {
    std::vector<Term> terms;
    // all monomials of total degree <= 2
    std::vector<std::vector<std::uint32_t>> exps;
    exps.push_back(std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = 1;
      exps.push_back(e);
      for (int j = i; j < n; ++j) {
        std::vector<std::uint32_t> e2(static_cast<std::size_t>(n), 0);
        e2[static_cast<std::size_t>(i)] += 1;
        e2[static_cast<std::size_t>(j)] += 1;
        exps.push_back(e2);
      }
    }
    for (auto& e : exps) {
      long coeff = static_cast<long>(rng.uniform_int(-9, 9));
      if (coeff != 0) terms.push_back({Monomial(std::move(e)), Rational(coeff)});
    }
    MPoly quadric = MPoly::from_terms(ring, std::move(terms));
    total = total + quadric * quadric;
  }
  return {ring->vars(), {total},
          "s" + std::to_string(c) + "_" + std::to_string(n)};
}

// FAMILY:PARAMS specs, e.g. "p:4", "b:5", "s:3,5".
inline ProblemFile generate_instance(const std::string& spec, std::uint64_t seed) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("instance spec must look like FAMILY:PARAMS, e.g. p:4");
  std::string family = spec.substr(0, colon);
  std::string params = spec.substr(colon + 1);
  try {
    if (family == "p") return generate_p(std::stoi(params));
    if (family == "b") return generate_b(std::stoi(params));
    if (family == "s") {
      auto comma = params.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("s family takes c,n, e.g. s:3,5");
      return generate_s(std::stoi(params.substr(0, comma)), std::stoi(params.substr(comma + 1)),
                        seed);
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad instance parameters: " + spec);
  }
  throw std::invalid_argument("unknown instance family: " + family);
}

}  // namespace realdim
