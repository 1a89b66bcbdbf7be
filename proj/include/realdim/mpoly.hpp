#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "realdim/monomial.hpp"
#include "realdim/rational.hpp"
#include "realdim/ring.hpp"

namespace realdim {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse distributed polynomial with exact rational coefficients.
// Terms are kept sorted in descending grevlex order (a canonical form for
// equality and printing); the Groebner engine re-sorts under its active
// order on demand.
class MPoly {
 public:
  MPoly() = default;

  static MPoly zero(RingPtr ring) {
    MPoly p;
    p.ring_ = std::move(ring);
    return p;
  }

  static MPoly constant(RingPtr ring, Rational c) {
    MPoly p = zero(std::move(ring));
    if (sign_of(c) != 0) p.terms_.push_back({Monomial::one(p.ring_->size()), std::move(c)});
    return p;
  }

  static MPoly variable(RingPtr ring, int var) {
    if (var < 0 || static_cast<std::size_t>(var) >= ring->size())
      throw std::out_of_range("MPoly::variable: index out of range");
    MPoly p = zero(std::move(ring));
    p.terms_.push_back({Monomial::power_of(p.ring_->size(), var), Rational(1)});
    return p;
  }

  static MPoly from_terms(RingPtr ring, std::vector<Term> terms) {
    MPoly p = zero(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  std::size_t nvars() const { return ring_->size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_[0].coeff;
  }

  std::int64_t deg() const {
    if (terms_.empty()) return kNegInfDeg;
    std::int64_t d = kNegInfDeg;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
  }

  std::int64_t deg_in(int var) const {
    if (terms_.empty()) return kNegInfDeg;
    std::int64_t d = 0;
    for (const auto& t : terms_) d = std::max<std::int64_t>(d, t.mono.exp(var));
    return d;
  }

  bool uses_var(int var) const {
    for (const auto& t : terms_)
      if (t.mono.exp(var) != 0) return true;
    return false;
  }

  const Term& leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
    if (order.kind() == MonomialOrder::Kind::grevlex) return terms_.front();
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
      if (order.greater(terms_[i].mono, terms_[best].mono)) best = i;
    return terms_[best];
  }

  MPoly operator-() const {
    MPoly r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  MPoly operator+(const MPoly& o) const { return combine(o, 1); }
  MPoly operator-(const MPoly& o) const { return combine(o, -1); }

  MPoly operator*(const MPoly& o) const {
    check_same_ring(o);
    MPoly r = zero(ring_);
    if (terms_.empty() || o.terms_.empty()) return r;
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) {
        Rational c = a.coeff * b.coeff;
        auto [it, inserted] = acc.try_emplace(a.mono * b.mono, c);
        if (!inserted) it->second += c;
      }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (sign_of(c) != 0) r.terms_.push_back({m, std::move(c)});
    r.sort_terms();
    return r;
  }

  MPoly operator*(const Rational& c) const {
    MPoly r = zero(ring_);
    if (sign_of(c) == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  MPoly pow(unsigned k) const {
    MPoly r = constant(ring_, Rational(1));
    MPoly base(*this);
    while (k > 0) {
      if (k & 1u) r = r * base;
      k >>= 1u;
      if (k) base = base * base;
    }
    return r;
  }

  MPoly derivative(int var) const {
    if (var < 0 || static_cast<std::size_t>(var) >= ring_->size())
      throw std::out_of_range("derivative: variable index out of range");
    MPoly r = zero(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      std::uint32_t e = t.mono.exp(var);
      if (e == 0) continue;
      std::vector<std::uint32_t> exps = t.mono.exps();
      exps[static_cast<std::size_t>(var)] = e - 1;
      r.terms_.push_back({Monomial(std::move(exps)), t.coeff * Rational(static_cast<long>(e))});
    }
    r.sort_terms();
    return r;
  }

  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != ring_->size())
      throw std::invalid_argument("evaluate: point length does not match ring size");
    Rational acc(0);
    for (const auto& t : terms_) {
      Rational v = t.coeff;
      for (std::size_t i = 0; i < point.size(); ++i) {
        std::uint32_t e = t.mono.exp(static_cast<int>(i));
        if (e != 0) v *= rational_pow(point[i], e);
      }
      acc += v;
    }
    return acc;
  }

  // Replace variable `var` by `repl`. If repl lives in this ring (and does
  // not involve var) the result stays here; if repl lives in the ring with
  // var removed, the result is re-ringed down.
  MPoly substitute(int var, const MPoly& repl) const {
    if (var < 0 || static_cast<std::size_t>(var) >= ring_->size())
      throw std::out_of_range("substitute: variable index out of range");
    bool shrink;
    if (same_ring(repl.ring(), ring_)) {
      if (repl.uses_var(var))
        throw std::invalid_argument("substitute: replacement involves the substituted variable");
      shrink = false;
    } else if (same_ring(repl.ring(), drop_var(ring_, var))) {
      shrink = true;
    } else {
      throw std::invalid_argument("substitute: replacement lives in an incompatible ring");
    }
    const RingPtr out_ring = shrink ? repl.ring() : ring_;

    // Horner in var: p = sum_k c_k * var^k with c_k free of var.
    std::int64_t d = deg_in(var);
    if (d == kNegInfDeg) return zero(out_ring);
    std::vector<MPoly> coeffs(static_cast<std::size_t>(d) + 1, zero(out_ring));
    for (const auto& t : terms_) {
      std::uint32_t e = t.mono.exp(var);
      std::vector<std::uint32_t> exps = t.mono.exps();
      if (shrink)
        exps.erase(exps.begin() + var);
      else
        exps[static_cast<std::size_t>(var)] = 0;
      coeffs[e].terms_.push_back({Monomial(std::move(exps)), t.coeff});
    }
    for (auto& c : coeffs) c.sort_terms();
    MPoly acc = coeffs.back();
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * repl + coeffs[k];
    return acc;
  }

  // Re-express over `sub`, which must contain every variable this uses.
  MPoly restricted_to(const RingPtr& sub) const { return remapped(sub); }
  // Re-express over a superset ring.
  MPoly extended_to(const RingPtr& super) const { return remapped(super); }

  bool operator==(const MPoly& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
  }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
      Rational c = t.coeff;
      if (first) {
        if (sign_of(c) < 0) {
          out << "-";
          c = -c;
        }
      } else {
        out << (sign_of(c) < 0 ? " - " : " + ");
        if (sign_of(c) < 0) c = -c;
      }
      first = false;
      bool printed_coeff = false;
      if (t.mono.is_one() || c != Rational(1)) {
        out << realdim::to_string(c);
        printed_coeff = true;
      }
      bool any_var = false;
      for (std::size_t i = 0; i < ring_->size(); ++i) {
        std::uint32_t e = t.mono.exp(static_cast<int>(i));
        if (e == 0) continue;
        if (printed_coeff || any_var) out << "*";
        any_var = true;
        out << ring_->var_name(static_cast<int>(i));
        if (e > 1) out << "^" << e;
      }
    }
    return out.str();
  }

 private:
  void check_same_ring(const MPoly& o) const {
    if (!same_ring(ring_, o.ring_))
      throw std::invalid_argument("MPoly: operands live in different rings");
  }

  MPoly combine(const MPoly& o, int s) const {
    check_same_ring(o);
    MPoly r = zero(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      Cmp c = grevlex_compare(terms_[i].mono, o.terms_[j].mono);
      if (c == Cmp::GT) {
        r.terms_.push_back(terms_[i++]);
      } else if (c == Cmp::LT) {
        Term t = o.terms_[j++];
        if (s < 0) t.coeff = -t.coeff;
        r.terms_.push_back(std::move(t));
      } else {
        Rational c2 = terms_[i].coeff;
        if (s < 0)
          c2 -= o.terms_[j].coeff;
        else
          c2 += o.terms_[j].coeff;
        if (sign_of(c2) != 0) r.terms_.push_back({terms_[i].mono, std::move(c2)});
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) {
      Term t = o.terms_[j];
      if (s < 0) t.coeff = -t.coeff;
      r.terms_.push_back(std::move(t));
    }
    return r;
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
      return grevlex_compare(a.mono, b.mono) == Cmp::GT;
    });
  }

  // Sort, merge duplicate monomials, drop zeros.
  void normalize() {
    sort_terms();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff += t.coeff;
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return sign_of(t.coeff) == 0; });
    terms_ = std::move(out);
  }

  MPoly remapped(const RingPtr& target) const {
    std::vector<int> map(ring_->size(), -1);
    for (std::size_t i = 0; i < ring_->size(); ++i)
      map[i] = target->index_of(ring_->var_name(static_cast<int>(i)));
    MPoly r = zero(target);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      std::vector<std::uint32_t> exps(target->size(), 0);
      for (std::size_t i = 0; i < ring_->size(); ++i) {
        std::uint32_t e = t.mono.exp(static_cast<int>(i));
        if (e == 0) continue;
        if (map[i] < 0)
          throw std::invalid_argument("ring remap: polynomial uses variable " +
                                      ring_->var_name(static_cast<int>(i)) +
                                      " absent from the target ring");
        exps[static_cast<std::size_t>(map[i])] = e;
      }
      r.terms_.push_back({Monomial(std::move(exps)), t.coeff});
    }
    r.sort_terms();
    return r;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline MPoly operator*(const Rational& c, const MPoly& p) { return p * c; }

enum class PolyOp { add, sub, mul };

inline MPoly poly_arithmetic(const MPoly& a, const MPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return a + b;
    case PolyOp::sub:
      return a - b;
    case PolyOp::mul:
      return a * b;
  }
  throw std::logic_error("poly_arithmetic: bad op");
}

inline MPoly partial_derivative(const MPoly& p, int var) { return p.derivative(var); }

inline MPoly substitute(const MPoly& p, int var, const MPoly& repl) {
  return p.substitute(var, repl);
}

inline Rational evaluate(const MPoly& p, std::span<const Rational> point) {
  return p.evaluate(point);
}

}  // namespace realdim
