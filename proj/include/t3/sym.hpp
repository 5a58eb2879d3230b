#pragma once

// Hopf structure of Sym in the Schur basis: bilinear product, coproduct and
// iterated coproducts in Sweedler style. The coefficient of μ⊗ν in Δ(s_λ)
// is N^λ_{μ,ν}, dual to the product under the orthonormal pairing.

#include <cstdint>

#include "t3/lr.hpp"
#include "t3/partition.hpp"
#include "t3/sym_element.hpp"

namespace t3 {

// Bilinear extension of lr_expand_product.
inline SymElement product(const SymElement& a, const SymElement& b) {
  SymElement out;
  for (const auto& [la, ca] : a.terms())
    for (const auto& [mu, cb] : b.terms()) {
      SymElement piece = lr_expand_product(la, mu);
      piece *= checked_mul(ca, cb);
      out += piece;
    }
  return out;
}

// Δ(s_λ) = Σ_{μ,ν} N^λ_{μ,ν} μ⊗ν.
inline SymTensor coproduct(const Partition& la) {
  SymTensor out(2);
  const int n = la.size();
  for (int k = 0; k <= n; ++k)
    for (const Partition& mu : enumerate_partitions(k))
      for (const Partition& nu : enumerate_partitions(n - k))
        out.add_term({mu, nu}, lr_coefficient(mu, nu, la));
  return out;
}

// Sweedler components λ_{(1)}⊗…⊗λ_{(arity)}, built as (Δ⊗id⊗…)∘…∘Δ by
// repeatedly splitting the first slot. Coassociativity makes the result
// independent of which slot is split.
inline SymTensor iterated_coproduct(const Partition& la, std::size_t arity) {
  if (arity < 2) throw std::invalid_argument("iterated coproduct needs arity at least 2");
  SymTensor out = coproduct(la);
  while (out.arity() < arity) {
    SymTensor next(out.arity() + 1);
    for (const auto& [key, c] : out.terms()) {
      const SymTensor inner = coproduct(key[0]);
      for (const auto& [split, c2] : inner.terms()) {
        std::vector<Partition> nk;
        nk.reserve(key.size() + 1);
        nk.push_back(split[0]);
        nk.push_back(split[1]);
        nk.insert(nk.end(), key.begin() + 1, key.end());
        next.add_term(std::move(nk), checked_mul(c, c2));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace t3
