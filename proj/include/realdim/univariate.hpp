#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "realdim/mpoly.hpp"
#include "realdim/rational.hpp"

namespace realdim {

// Dense univariate polynomial over Q; c[k] is the coefficient of t^k.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly zero() { return UPoly(); }
  static UPoly constant(Rational c) { return UPoly({std::move(c)}); }
  static UPoly t() { return UPoly({Rational(0), Rational(1)}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t deg() const { return c_.empty() ? kNegInfDeg : static_cast<std::int64_t>(c_.size()) - 1; }
  bool is_constant() const { return c_.size() <= 1; }

  const Rational& leading_coeff() const {
    if (c_.empty()) throw std::logic_error("leading_coeff of zero polynomial");
    return c_.back();
  }

  const Rational& coeff(std::size_t k) const {
    static const Rational zero_(0);
    return k < c_.size() ? c_[k] : zero_;
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc *= x;
      acc += c_[i];
    }
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UPoly(std::move(d));
  }

  UPoly operator-() const {
    UPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }

  UPoly operator+(const UPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UPoly(std::move(r));
  }

  UPoly operator-(const UPoly& o) const { return *this + (-o); }

  UPoly operator*(const UPoly& o) const {
    if (c_.empty() || o.c_.empty()) return UPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(r));
  }

  UPoly operator*(const Rational& s) const {
    if (sign_of(s) == 0) return UPoly();
    UPoly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
  }

  std::pair<UPoly, UPoly> divrem(const UPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("UPoly division by zero");
    std::vector<Rational> rem = c_;
    std::int64_t dd = d.deg();
    if (deg() < dd) return {UPoly(), *this};
    std::vector<Rational> quo(static_cast<std::size_t>(deg() - dd) + 1, Rational(0));
    const Rational& lc = d.leading_coeff();
    for (std::size_t k = rem.size(); static_cast<std::int64_t>(k) > dd;) {
      --k;
      if (sign_of(rem[k]) == 0) continue;
      Rational q = rem[k] / lc;
      std::size_t shift = k - static_cast<std::size_t>(dd);
      quo[shift] = q;
      for (std::size_t i = 0; i < d.c_.size(); ++i) rem[shift + i] -= q * d.c_[i];
    }
    UPoly r(std::move(rem));
    return {UPoly(std::move(quo)), std::move(r)};
  }

  UPoly divexact(const UPoly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw std::logic_error("UPoly::divexact: division is not exact");
    return q;
  }

  UPoly monic() const {
    if (c_.empty()) return UPoly();
    UPoly r(*this);
    Rational lc = c_.back();
    for (auto& c : r.c_) c /= lc;
    return r;
  }

  // Scale by a positive rational so coefficients are coprime integers.
  // Positive scaling only: Sturm sequences rely on signs being preserved.
  UPoly primitive() const {
    if (c_.empty()) return UPoly();
    Integer den_lcm(1);
    for (const auto& c : c_) {
      Integer d = denominator(c);
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Integer num_gcd(0);
    for (const auto& c : c_) {
      Integer scaled_num = numerator(c) * (den_lcm / denominator(c));
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
    }
    Rational scale = make_rational(den_lcm, num_gcd);
    UPoly r(*this);
    for (auto& c : r.c_) c *= scale;
    return r;
  }

  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  std::string to_string(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (sign_of(c_[i]) == 0) continue;
      Rational c = c_[i];
      if (first) {
        if (sign_of(c) < 0) {
          out << "-";
          c = -c;
        }
        first = false;
      } else {
        out << (sign_of(c) < 0 ? " - " : " + ");
        if (sign_of(c) < 0) c = -c;
      }
      if (i == 0 || c != Rational(1)) out << realdim::to_string(c);
      if (i > 0) {
        if (c != Rational(1)) out << "*";
        out << var;
        if (i > 1) out << "^" << i;
      }
    }
    return out.str();
  }

 private:
  void trim() {
    while (!c_.empty() && sign_of(c_.back()) == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

// Monic gcd via a primitive pseudo-remainder sequence (rational-coefficient
// Euclid blows up at the degrees the eliminants reach).
inline UPoly upoly_gcd(UPoly a, UPoly b) {
  a = a.primitive();
  b = b.primitive();
  while (!b.is_zero()) {
    // pseudo-remainder: |lc(b)|^(delta+1) * a mod b stays integral
    std::int64_t delta = std::max<std::int64_t>(a.deg() - b.deg(), 0);
    Rational scale = rational_pow(abs(b.leading_coeff()), static_cast<unsigned long>(delta) + 1);
    UPoly r = (a * scale).divrem(b).second;
    a = std::move(b);
    b = r.is_zero() ? UPoly() : r.primitive();
  }
  return a.is_zero() ? a : a.monic();
}

inline UPoly squarefree_part(const UPoly& u) {
  if (u.is_zero()) throw std::invalid_argument("squarefree_part of the zero polynomial");
  if (u.deg() == 0) return UPoly::constant(Rational(1));
  UPoly g = upoly_gcd(u, u.derivative());
  if (g.deg() <= 0) return u.monic();
  return u.divexact(g).monic();
}

// MPoly bridge: a polynomial using at most one variable of its ring.
inline UPoly upoly_from_mpoly(const MPoly& p, int* var_out = nullptr) {
  int var = -1;
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    if (!p.uses_var(static_cast<int>(i))) continue;
    if (var >= 0) throw std::invalid_argument("upoly_from_mpoly: polynomial is not univariate");
    var = static_cast<int>(i);
  }
  if (var_out) *var_out = var;
  std::int64_t d = var >= 0 ? p.deg_in(var) : 0;
  std::vector<Rational> c(static_cast<std::size_t>(std::max<std::int64_t>(d, 0)) + 1, Rational(0));
  for (const auto& t : p.terms()) c[var >= 0 ? t.mono.exp(var) : 0] = t.coeff;
  return UPoly(std::move(c));
}

inline MPoly mpoly_from_upoly(const UPoly& u, const RingPtr& ring, int var) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
    if (sign_of(u.coeffs()[k]) == 0) continue;
    terms.push_back({Monomial::power_of(ring->size(), var, static_cast<std::uint32_t>(k)),
                     u.coeffs()[k]});
  }
  return MPoly::from_terms(ring, std::move(terms));
}

inline MPoly squarefree_part(const MPoly& p) {
  int var = 0;
  UPoly u = upoly_from_mpoly(p, &var);
  UPoly s = squarefree_part(u);
  return mpoly_from_upoly(s, p.ring(), std::max(var, 0));
}

// Rational-endpoint interval certified to contain exactly one real root.
struct IsolatingInterval {
  Rational lo, hi;
  std::optional<Rational> exact;

  static IsolatingInterval exact_root(Rational r) { return {r, r, r}; }
};

// Sturm chain of a squarefree polynomial: p, p', then negated remainders,
// each scaled to primitive integer form (positive scaling preserves signs).
class SturmChain {
 public:
  explicit SturmChain(const UPoly& u) {
    if (u.is_zero()) throw std::invalid_argument("SturmChain of the zero polynomial");
    chain_.push_back(u.primitive());
    if (u.deg() >= 1) {
      chain_.push_back(u.derivative().primitive());
      while (chain_.back().deg() >= 1) {
        const UPoly& a = chain_[chain_.size() - 2];
        const UPoly& b = chain_.back();
        std::int64_t delta = std::max<std::int64_t>(a.deg() - b.deg(), 0);
        Rational scale = rational_pow(abs(b.leading_coeff()), static_cast<unsigned long>(delta) + 1);
        UPoly r = (a * scale).divrem(b).second;
        if (r.is_zero()) break;
        chain_.push_back((-r).primitive());
      }
    }
  }

  const UPoly& poly() const { return chain_.front(); }

  int variations_at(const Rational& x) const {
    int v = 0, last = 0;
    for (const auto& p : chain_) {
      int s = sign_of(p.eval(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  // Number of distinct real roots in (lo, hi); endpoints must not be roots.
  int count(const Rational& lo, const Rational& hi) const {
    if (!(lo < hi)) throw std::invalid_argument("sturm count: need lo < hi");
    if (sign_of(poly().eval(lo)) == 0 || sign_of(poly().eval(hi)) == 0)
      throw std::invalid_argument("sturm count: endpoint is a root");
    return variations_at(lo) - variations_at(hi);
  }

 private:
  std::vector<UPoly> chain_;
};

inline int sturm_count(const UPoly& u, const Rational& lo, const Rational& hi) {
  return SturmChain(u).count(lo, hi);
}

inline int sturm_count(const MPoly& u, const Rational& lo, const Rational& hi) {
  return sturm_count(upoly_from_mpoly(u), lo, hi);
}

// All real roots lie strictly inside (-B, B).
inline Rational cauchy_root_bound(const UPoly& u) {
  if (u.is_zero() || u.deg() < 1) return Rational(1);
  Rational m(0);
  const Rational lc = abs(u.leading_coeff());
  for (std::size_t i = 0; i + 1 < u.coeffs().size(); ++i) {
    Rational a = abs(u.coeffs()[i]) / lc;
    if (a > m) m = a;
  }
  return m + 1;
}

namespace isolate_detail {

inline void bisect(const SturmChain& chain, const Rational& lo, const Rational& hi, int vlo,
                   int vhi, std::vector<IsolatingInterval>& out) {
  int count = vlo - vhi;
  if (count <= 0) return;
  if (count == 1) {
    out.push_back({lo, hi, std::nullopt});
    return;
  }
  const UPoly& u = chain.poly();
  Rational mid = (lo + hi) / 2;
  if (sign_of(u.eval(mid)) == 0) {
    // mid is an exact rational root; separate it with a gap found by
    // halving (the 1/2^k endpoint nudge).
    Rational delta = (hi - lo) / 4;
    for (;;) {
      Rational a = mid - delta, b = mid + delta;
      if (sign_of(u.eval(a)) != 0 && sign_of(u.eval(b)) != 0 && chain.count(a, b) == 1) break;
      delta /= 2;
    }
    Rational a = mid - delta, b = mid + delta;
    int va = chain.variations_at(a), vb = chain.variations_at(b);
    bisect(chain, lo, a, vlo, va, out);
    out.push_back(IsolatingInterval::exact_root(mid));
    bisect(chain, b, hi, vb, vhi, out);
    return;
  }
  int vmid = chain.variations_at(mid);
  bisect(chain, lo, mid, vlo, vmid, out);
  bisect(chain, mid, hi, vmid, vhi, out);
}

// Shrink a non-exact interval by one bisection step.
inline void refine_once(const SturmChain& chain, IsolatingInterval& iv) {
  if (iv.exact) return;
  const UPoly& u = chain.poly();
  Rational mid = (iv.lo + iv.hi) / 2;
  if (sign_of(u.eval(mid)) == 0) {
    iv = IsolatingInterval::exact_root(mid);
    return;
  }
  if (chain.count(iv.lo, mid) == 1)
    iv.hi = mid;
  else
    iv.lo = mid;
}

}  // namespace isolate_detail

// One interval per distinct real root of squarefree_part(u), sorted and
// pairwise disjoint with strict gaps between consecutive intervals.
inline std::vector<IsolatingInterval> isolate_real_roots(const UPoly& input) {
  if (input.is_zero()) throw std::invalid_argument("isolate_real_roots of the zero polynomial");
  if (input.deg() < 1) return {};
  UPoly u = squarefree_part(input);
  if (u.deg() < 1) return {};
  SturmChain chain(u);
  Rational bound = cauchy_root_bound(u);
  std::vector<IsolatingInterval> out;
  isolate_detail::bisect(chain, -bound, bound, chain.variations_at(-bound),
                         chain.variations_at(bound), out);
  for (std::size_t i = 0; i + 1 < out.size();) {
    if (out[i].hi >= out[i + 1].lo) {
      isolate_detail::refine_once(chain, out[i]);
      isolate_detail::refine_once(chain, out[i + 1]);
    } else {
      ++i;
    }
  }
  return out;
}

inline std::vector<IsolatingInterval> isolate_real_roots(const MPoly& p) {
  return isolate_real_roots(upoly_from_mpoly(p));
}

struct SamplePlan {
  std::vector<IsolatingInterval> roots;
  std::vector<Rational> samples;  // one per connected component of R minus the roots
};

// Midpoints between consecutive interval endpoints, outer samples one unit
// beyond the extreme endpoints; {0} when there are no roots.
inline SamplePlan sample_points(std::vector<IsolatingInterval> roots) {
  SamplePlan plan;
  if (roots.empty()) {
    plan.samples.push_back(Rational(0));
    return plan;
  }
  for (std::size_t i = 0; i + 1 < roots.size(); ++i)
    if (!(roots[i].hi < roots[i + 1].lo))
      throw std::invalid_argument("sample_points: intervals must be sorted and disjoint");
  plan.samples.push_back(roots.front().lo - 1);
  for (std::size_t i = 0; i + 1 < roots.size(); ++i)
    plan.samples.push_back((roots[i].hi + roots[i + 1].lo) / 2);
  plan.samples.push_back(roots.back().hi + 1);
  plan.roots = std::move(roots);
  return plan;
}

}  // namespace realdim
