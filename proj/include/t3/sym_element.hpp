#pragma once

// Elements of the ring Sym of symmetric functions in the Schur basis, and
// tensor powers of Sym with a fixed arity. Coefficients are exact signed
// 64-bit integers; zero coefficients are never stored.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "t3/checked.hpp"
#include "t3/partition.hpp"

namespace t3 {

// A finite integer combination of Schur functions s_λ.
class SymElement {
 public:
  SymElement() = default;

  static SymElement schur(Partition la) {
    SymElement e;
    e.terms_.emplace(std::move(la), 1);
    return e;
  }

  const std::map<Partition, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::int64_t coeff(const Partition& la) const {
    auto it = terms_.find(la);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const Partition& la, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(la, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  SymElement& operator+=(const SymElement& other) {
    for (const auto& [la, c] : other.terms_) add_term(la, c);
    return *this;
  }

  SymElement& operator-=(const SymElement& other) {
    for (const auto& [la, c] : other.terms_) add_term(la, checked_sub(0, c));
    return *this;
  }

  SymElement& operator*=(std::int64_t k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [la, c] : terms_) c = checked_mul(c, k);
    return *this;
  }

  friend SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
  friend SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }
  friend SymElement operator*(SymElement a, std::int64_t k) { return a *= k; }

  friend bool operator==(const SymElement&, const SymElement&) = default;

 private:
  std::map<Partition, std::int64_t> terms_;
};

// ⟨a, b⟩ under the pairing that makes the Schur basis orthonormal.
inline std::int64_t pairing(const SymElement& a, const SymElement& b) {
  std::int64_t total = 0;
  const auto& small = a.terms().size() <= b.terms().size() ? a : b;
  const auto& large = a.terms().size() <= b.terms().size() ? b : a;
  for (const auto& [la, c] : small.terms())
    total = checked_add(total, checked_mul(c, large.coeff(la)));
  return total;
}

// An element of Sym^{⊗arity}: finite combination of tuples λ₁⊗…⊗λ_arity.
// The arity is a value-level property, checked when tensors are combined.
class SymTensor {
 public:
  explicit SymTensor(std::size_t arity) : arity_(arity) {
    if (arity < 2) throw std::invalid_argument("tensor arity must be at least 2");
  }

  std::size_t arity() const noexcept { return arity_; }
  const std::map<std::vector<Partition>, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::int64_t coeff(const std::vector<Partition>& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(std::vector<Partition> key, std::int64_t c) {
    if (key.size() != arity_)
      throw std::invalid_argument("tensor term arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  SymTensor& operator+=(const SymTensor& other) {
    if (other.arity_ != arity_)
      throw std::invalid_argument("cannot combine tensors of different arity");
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
  }

  friend bool operator==(const SymTensor&, const SymTensor&) = default;

 private:
  std::size_t arity_;
  std::map<std::vector<Partition>, std::int64_t> terms_;
};

// Restriction of a tensor to the terms whose slots have the prescribed box
// counts, e.g. degrees (k, ℓ) picks the μ^k ⊗ ν^ℓ component.
inline SymTensor graded_component(const SymTensor& t, const std::vector<int>& degrees) {
  if (degrees.size() != t.arity())
    throw std::invalid_argument("degree tuple arity must match tensor arity");
  SymTensor out(t.arity());
  for (const auto& [key, c] : t.terms()) {
    bool keep = true;
    for (std::size_t s = 0; s < key.size(); ++s)
      if (key[s].size() != degrees[s]) {
        keep = false;
        break;
      }
    if (keep) out.add_term(key, c);
  }
  return out;
}

}  // namespace t3
