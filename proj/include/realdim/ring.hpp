#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace realdim {

// An ordered list of variable names. Polynomials hold a shared pointer to
// their ring; two rings are interchangeable iff the name lists are equal.
class Ring {
 public:
  explicit Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  std::size_t size() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var_name(int i) const { return vars_.at(static_cast<std::size_t>(i)); }

  int index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    return -1;
  }

  bool operator==(const Ring& other) const { return vars_ == other.vars_; }
  bool operator!=(const Ring& other) const { return !(*this == other); }

 private:
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
  return std::make_shared<const Ring>(std::move(vars));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

// New ring with `extra` appended after the existing variables.
inline RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra) {
  std::vector<std::string> vars = ring->vars();
  for (const auto& v : extra) {
    if (ring->index_of(v) >= 0) throw std::invalid_argument("extend_ring: duplicate variable " + v);
    vars.push_back(v);
  }
  return make_ring(std::move(vars));
}

inline RingPtr drop_var(const RingPtr& ring, int var) {
  if (var < 0 || static_cast<std::size_t>(var) >= ring->size())
    throw std::out_of_range("drop_var: variable index out of range");
  std::vector<std::string> vars;
  vars.reserve(ring->size() - 1);
  for (std::size_t i = 0; i < ring->size(); ++i)
    if (static_cast<int>(i) != var) vars.push_back(ring->vars()[i]);
  return make_ring(std::move(vars));
}

// First of base, base0, base1, ... that is not already a ring variable.
inline std::string fresh_var_name(const Ring& ring, const std::string& base) {
  if (ring.index_of(base) < 0) return base;
  for (int k = 0;; ++k) {
    std::string cand = base + std::to_string(k);
    if (ring.index_of(cand) < 0) return cand;
  }
}

}  // namespace realdim
