#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace realdim {

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

// Exponent vector over a fixed ring; index i matches ring variable i.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }
  static Monomial power_of(std::size_t nvars, int var, std::uint32_t k = 1) {
    Monomial m(nvars);
    m.e_.at(static_cast<std::size_t>(var)) = k;
    return m;
  }

  std::size_t nvars() const { return e_.size(); }
  std::uint32_t exp(int i) const { return e_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint32_t>& exps() const { return e_; }

  std::int64_t total_degree() const {
    std::int64_t d = 0;
    for (auto x : e_) d += x;
    return d;
  }

  bool is_one() const {
    for (auto x : e_)
      if (x != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // o / *this, assuming divisibility.
  Monomial divide_into(const Monomial& o) const {
    Monomial r(o);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
    return r;
  }

  bool coprime_with(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] != 0 && o.e_[i] != 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

 private:
  std::vector<std::uint32_t> e_;
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps()[i], b.exps()[i]);
  return Monomial(std::move(e));
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : m.exps()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline Cmp grevlex_compare(const Monomial& a, const Monomial& b) {
  std::int64_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db ? Cmp::GT : Cmp::LT;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    std::uint32_t ea = a.exps()[i], eb = b.exps()[i];
    if (ea != eb) return ea < eb ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

inline Cmp lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    std::uint32_t ea = a.exps()[i], eb = b.exps()[i];
    if (ea != eb) return ea > eb ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

// Total orders on monomials: grevlex, lex, and a block elimination order that
// compares the designated variable block first. Any monomial containing an
// eliminated variable sorts above every monomial free of them.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
  static MonomialOrder block(std::size_t nvars, std::vector<int> elim_vars,
                             Kind inner = Kind::grevlex, Kind outer = Kind::grevlex) {
    MonomialOrder o(Kind::block);
    o.inner_ = inner;
    o.outer_ = outer;
    o.elim_vars_ = std::move(elim_vars);
    o.mask_.assign(nvars, 0);
    for (int v : o.elim_vars_) {
      if (v < 0 || static_cast<std::size_t>(v) >= nvars)
        throw std::out_of_range("block order: variable index out of range");
      o.mask_[static_cast<std::size_t>(v)] = 1;
    }
    return o;
  }

  Kind kind() const { return kind_; }
  const std::vector<int>& elim_vars() const { return elim_vars_; }

  Cmp compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::grevlex:
        return grevlex_compare(a, b);
      case Kind::lex:
        return lex_compare(a, b);
      case Kind::block: {
        Cmp c = masked_compare(inner_, a, b, 1);
        if (c != Cmp::EQ) return c;
        return masked_compare(outer_, a, b, 0);
      }
    }
    return Cmp::EQ;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::LT; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::GT; }

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && inner_ == o.inner_ && outer_ == o.outer_ &&
           elim_vars_ == o.elim_vars_ && mask_ == o.mask_;
  }

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  Cmp masked_compare(Kind k, const Monomial& a, const Monomial& b, char sel) const {
    if (k == Kind::lex) {
      for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (mask_[i] != sel) continue;
        std::uint32_t ea = a.exps()[i], eb = b.exps()[i];
        if (ea != eb) return ea > eb ? Cmp::GT : Cmp::LT;
      }
      return Cmp::EQ;
    }
    std::int64_t da = 0, db = 0;
    for (std::size_t i = 0; i < a.nvars(); ++i) {
      if (mask_[i] != sel) continue;
      da += a.exps()[i];
      db += b.exps()[i];
    }
    if (da != db) return da > db ? Cmp::GT : Cmp::LT;
    for (std::size_t i = a.nvars(); i-- > 0;) {
      if (mask_[i] != sel) continue;
      std::uint32_t ea = a.exps()[i], eb = b.exps()[i];
      if (ea != eb) return ea < eb ? Cmp::GT : Cmp::LT;
    }
    return Cmp::EQ;
  }

  Kind kind_;
  Kind inner_ = Kind::grevlex;
  Kind outer_ = Kind::grevlex;
  std::vector<int> elim_vars_;
  std::vector<char> mask_;
};

inline Cmp monomial_compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  return order.compare(a, b);
}

}  // namespace realdim
