#pragma once

// Calculators for the tensor category generated by V, V_* and V^* over the
// Mackey Lie algebra gl^M(V,V_*): socle filtrations of the indecomposable
// injectives I_{λ,μ,ν}, Ext dimensions between the simples V_{λ,μ,ν} (by two
// independent routes), block indices, Schur-Weyl decompositions of the
// injective generators X_{m,n,p}, Hom-space dimensions, and the restriction
// formulas coming from the two-diagram subcategory.

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "t3/checked.hpp"
#include "t3/lr.hpp"
#include "t3/partition.hpp"
#include "t3/poset.hpp"

namespace t3 {

// Names the simple object V_{λ,μ,ν} = (V*/V_*)_λ ⊗ V_{μ,ν}.
struct SimpleLabel {
  Partition lambda;
  Partition mu;
  Partition nu;

  std::string str() const { return lambda.str() + ":" + mu.str() + ":" + nu.str(); }

  friend bool operator==(const SimpleLabel&, const SimpleLabel&) = default;
  friend auto operator<=>(const SimpleLabel&, const SimpleLabel&) = default;
};

// Names the indecomposable injective I_{λ,μ,ν} = (V*/V_*)_λ ⊗ (V^*)_μ ⊗ V_ν,
// the injective hull of V_{λ,μ,ν}.
struct InjectiveLabel {
  Partition lambda;
  Partition mu;
  Partition nu;

  std::string str() const { return lambda.str() + ":" + mu.str() + ":" + nu.str(); }

  friend bool operator==(const InjectiveLabel&, const InjectiveLabel&) = default;
  friend auto operator<=>(const InjectiveLabel&, const InjectiveLabel&) = default;
};

// Names the simple object W_{μ,ν} of the two-diagram category.
struct PairLabel {
  Partition mu;
  Partition nu;

  std::string str() const { return mu.str() + ":" + nu.str(); }

  friend bool operator==(const PairLabel&, const PairLabel&) = default;
  friend auto operator<=>(const PairLabel&, const PairLabel&) = default;
};

// A semisimple layer usoc^k: multiplicities of the simples appearing in it.
using Layer = std::map<SimpleLabel, std::int64_t>;
using Layer2 = std::map<PairLabel, std::int64_t>;

struct Filtration {
  InjectiveLabel injective;
  std::vector<Layer> layers;  // layers[k-1] is usoc^k; trailing zero layers trimmed
};

inline TripleIndex simple_index(const SimpleLabel& s) {
  return {s.lambda.size(), s.mu.size(), s.nu.size()};
}

inline TripleIndex injective_index(const InjectiveLabel& i) {
  return {i.lambda.size(), i.mu.size(), i.nu.size()};
}

// Block of |λ| + |μ| − |ν|; may be negative.
inline int block_index(const SimpleLabel& s) {
  return s.lambda.size() + s.mu.size() - s.nu.size();
}

inline int block_index(const InjectiveLabel& i) {
  return i.lambda.size() + i.mu.size() - i.nu.size();
}

namespace detail {
inline void add_mult(Layer& layer, SimpleLabel s, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = layer.emplace(std::move(s), c);
  if (!inserted) it->second = checked_add(it->second, c);
}
}  // namespace detail

// The k-th semisimple layer usoc^k(I_{λ,μ,ν}), k ≥ 1. The multiplicity of
// V_{ζ,γ,φ} is
//
//   Σ_{ℓ+r=k-1} Σ_{|α|=ℓ} Σ_{|δ|=r} Σ_β  N^ζ_{λ,α} N^μ_{α,β} N^β_{γ,δ} N^ν_{φ,δ},
//
// which forces |γ| = |μ|-(k-1), |ζ| = |λ|+ℓ and |φ| = |ν|-r. Layer 1 is the
// socle {V_{λ,μ,ν} : 1}; layers vanish once k-1 > |μ|.
inline Layer socle_layer(const InjectiveLabel& inj, int k) {
  if (k < 1) throw std::invalid_argument("socle layers are indexed from 1");
  Layer out;
  const int gamma_size = inj.mu.size() - (k - 1);
  if (gamma_size < 0) return out;
  for (int l = 0; l <= k - 1; ++l) {
    const int r = k - 1 - l;
    const int beta_size = inj.mu.size() - l;
    const int phi_size = inj.nu.size() - r;
    if (beta_size < 0 || phi_size < 0) continue;
    for (const Partition& alpha : enumerate_partitions(l)) {
      for (const Partition& beta : enumerate_partitions(beta_size)) {
        const std::int64_t c_mu = lr_coefficient(alpha, beta, inj.mu);
        if (c_mu == 0) continue;
        for (const Partition& zeta : enumerate_partitions(inj.lambda.size() + l)) {
          const std::int64_t c_zeta = lr_coefficient(inj.lambda, alpha, zeta);
          if (c_zeta == 0) continue;
          for (const Partition& delta : enumerate_partitions(r)) {
            for (const Partition& gamma : enumerate_partitions(gamma_size)) {
              const std::int64_t c_beta = lr_coefficient(gamma, delta, beta);
              if (c_beta == 0) continue;
              for (const Partition& phi : enumerate_partitions(phi_size)) {
                const std::int64_t c_nu = lr_coefficient(phi, delta, inj.nu);
                if (c_nu == 0) continue;
                const std::int64_t c =
                    checked_mul(checked_mul(c_zeta, c_mu), checked_mul(c_beta, c_nu));
                detail::add_mult(out, {zeta, gamma, phi}, c);
              }
            }
          }
        }
      }
    }
  }
  return out;
}

// All nonzero socle layers of I_{λ,μ,ν}; there are exactly |μ|+1 of them.
inline Filtration socle_filtration(const InjectiveLabel& inj) {
  Filtration f{inj, {}};
  for (int k = 1; k <= inj.mu.size() + 1; ++k) {
    Layer layer = socle_layer(inj, k);
    if (layer.empty()) break;
    f.layers.push_back(std::move(layer));
  }
  return f;
}

inline int loewy_length(const InjectiveLabel& inj) {
  return static_cast<int>(socle_filtration(inj).layers.size());
}

// dim Ext^q(V_{λ,μ,ν}, V_{λ',μ',ν'}), via the closed four-factor formula
//
//   Σ_{ℓ+r=q} Σ_{|α|=ℓ} Σ_{|δ|=r} Σ_β  N^λ_{λ',α} N^{(μ')⊥}_{α,β} N^β_{μ⊥,δ} N^{ν'}_{ν,δ}.
//
// The Koszul degree constraint q = |μ'|-|μ| and equality of block indices
// are implied by the grading of the factors and short-circuit the sum.
inline std::int64_t ext_dim(const SimpleLabel& src, const SimpleLabel& tgt, int q) {
  if (q < 0) throw std::invalid_argument("negative cohomological degree");
  if (q != tgt.mu.size() - src.mu.size()) return 0;
  if (block_index(src) != block_index(tgt)) return 0;
  const Partition mu_src_t = transpose(src.mu);
  const Partition mu_tgt_t = transpose(tgt.mu);
  std::int64_t total = 0;
  for (int l = 0; l <= q; ++l) {
    const int r = q - l;
    const int beta_size = src.mu.size() + r;
    for (const Partition& alpha : enumerate_partitions(l)) {
      const std::int64_t c_lambda = lr_coefficient(tgt.lambda, alpha, src.lambda);
      if (c_lambda == 0) continue;
      for (const Partition& beta : enumerate_partitions(beta_size)) {
        const std::int64_t c_mu = lr_coefficient(alpha, beta, mu_tgt_t);
        if (c_mu == 0) continue;
        for (const Partition& delta : enumerate_partitions(r)) {
          const std::int64_t c_beta = lr_coefficient(mu_src_t, delta, beta);
          if (c_beta == 0) continue;
          const std::int64_t c_nu = lr_coefficient(src.nu, delta, tgt.nu);
          if (c_nu == 0) continue;
          total = checked_add(
              total, checked_mul(checked_mul(c_lambda, c_mu), checked_mul(c_beta, c_nu)));
        }
      }
    }
  }
  return total;
}

// The same Ext dimension read off a socle filtration: the multiplicity of
// V_{λ,μ⊥,ν} in usoc^{q+1}(I_{λ',(μ')⊥,ν'}). Independent of ext_dim; the two
// must agree (Koszul self-duality).
inline std::int64_t ext_via_socle(const SimpleLabel& src, const SimpleLabel& tgt, int q) {
  if (q < 0) throw std::invalid_argument("negative cohomological degree");
  const Layer layer = socle_layer({tgt.lambda, transpose(tgt.mu), tgt.nu}, q + 1);
  auto it = layer.find(SimpleLabel{src.lambda, transpose(src.mu), src.nu});
  return it == layer.end() ? 0 : it->second;
}

// Schur-Weyl decomposition of X_{m,n,p} into indecomposable injectives:
// X_{m,n,p} = ⊕ I_{λ,μ,ν}^{⊕ f^λ f^μ f^ν} over |λ|=m, |μ|=n, |ν|=p.
inline std::map<InjectiveLabel, std::int64_t> decompose_X(const TripleIndex& i) {
  if (i.m < 0 || i.n < 0 || i.p < 0)
    throw std::invalid_argument("tensor degrees must be nonnegative");
  std::map<InjectiveLabel, std::int64_t> out;
  for (const Partition& la : enumerate_partitions(i.m)) {
    const std::int64_t fl = num_standard_tableaux(la);
    for (const Partition& mu : enumerate_partitions(i.n)) {
      const std::int64_t fm = checked_mul(fl, num_standard_tableaux(mu));
      for (const Partition& nu : enumerate_partitions(i.p))
        out.emplace(InjectiveLabel{la, mu, nu}, checked_mul(fm, num_standard_tableaux(nu)));
    }
  }
  return out;
}

// Jordan-Hölder multiplicity [X_i : s], summed over the socle filtrations of
// the indecomposable summands of X_i.
inline std::int64_t composition_multiplicity(const TripleIndex& i, const SimpleLabel& s) {
  std::int64_t total = 0;
  for (const auto& [inj, mult] : decompose_X(i)) {
    for (const Layer& layer : socle_filtration(inj).layers) {
      auto it = layer.find(s);
      if (it != layer.end()) total = checked_add(total, checked_mul(mult, it->second));
    }
  }
  return total;
}

// dim Hom(X_from, X_to). Since every simple has scalar endomorphisms, Hom
// into the injective hull of a simple counts its composition multiplicity:
// dim Hom(X_from, X_to) = Σ f^λ f^μ f^ν · [X_from : V_{λ,μ,ν}] over the
// labels of X_to.
inline std::int64_t hom_dim(const TripleIndex& from, const TripleIndex& to) {
  Layer content;
  for (const auto& [inj, mult] : decompose_X(from))
    for (const Layer& layer : socle_filtration(inj).layers)
      for (const auto& [s, c] : layer)
        detail::add_mult(content, s, checked_mul(mult, c));
  std::int64_t total = 0;
  for (const auto& [inj, mult] : decompose_X(to)) {
    auto it = content.find(SimpleLabel{inj.lambda, inj.mu, inj.nu});
    if (it != content.end()) total = checked_add(total, checked_mul(mult, it->second));
  }
  return total;
}

// Socle layer usoc^k of the restriction to gl^M of (V*/V_*)_λ ⊗ W_{μ,ν},
// where W_{μ,ν} is a simple of the two-diagram category over End(V). The
// multiplicity of V_{ζ,γ,φ} is Σ_{|α|=k-1} N^ζ_{λ,α} N^μ_{α,γ} [φ = ν].
inline Layer restrict_W_socle(const Partition& la, const Partition& mu, const Partition& nu,
                              int k) {
  if (k < 1) throw std::invalid_argument("socle layers are indexed from 1");
  Layer out;
  const int gamma_size = mu.size() - (k - 1);
  if (gamma_size < 0) return out;
  for (const Partition& alpha : enumerate_partitions(k - 1)) {
    for (const Partition& gamma : enumerate_partitions(gamma_size)) {
      const std::int64_t c_mu = lr_coefficient(alpha, gamma, mu);
      if (c_mu == 0) continue;
      for (const Partition& zeta : enumerate_partitions(la.size() + k - 1)) {
        const std::int64_t c_zeta = lr_coefficient(la, alpha, zeta);
        if (c_zeta == 0) continue;
        detail::add_mult(out, {zeta, gamma, nu}, checked_mul(c_zeta, c_mu));
      }
    }
  }
  return out;
}

inline std::vector<Layer> restrict_W_filtration(const Partition& la, const Partition& mu,
                                                const Partition& nu) {
  std::vector<Layer> out;
  for (int k = 1; k <= mu.size() + 1; ++k) {
    Layer layer = restrict_W_socle(la, mu, nu, k);
    if (layer.empty()) break;
    out.push_back(std::move(layer));
  }
  return out;
}

// Socle layer usoc^k of the two-diagram injective (V_*)_μ ⊗ V_ν: the
// multiplicity of W_{γ,φ} is Σ_{|δ|=k-1} N^μ_{γ,δ} N^ν_{φ,δ}. It equals the
// ζ = ∅ slice of socle_layer(I_{∅,μ,ν}, k).
inline Layer2 socle2_layer(const Partition& mu, const Partition& nu, int k) {
  if (k < 1) throw std::invalid_argument("socle layers are indexed from 1");
  Layer2 out;
  const int gamma_size = mu.size() - (k - 1);
  const int phi_size = nu.size() - (k - 1);
  if (gamma_size < 0 || phi_size < 0) return out;
  for (const Partition& delta : enumerate_partitions(k - 1)) {
    for (const Partition& gamma : enumerate_partitions(gamma_size)) {
      const std::int64_t c_mu = lr_coefficient(gamma, delta, mu);
      if (c_mu == 0) continue;
      for (const Partition& phi : enumerate_partitions(phi_size)) {
        const std::int64_t c_nu = lr_coefficient(phi, delta, nu);
        if (c_nu == 0) continue;
        const std::int64_t c = checked_mul(c_mu, c_nu);
        auto [it, inserted] = out.emplace(PairLabel{gamma, phi}, c);
        if (!inserted) it->second = checked_add(it->second, c);
      }
    }
  }
  return out;
}

inline std::vector<Layer2> socle2_filtration(const Partition& mu, const Partition& nu) {
  std::vector<Layer2> out;
  for (int k = 1; k <= std::min(mu.size(), nu.size()) + 1; ++k) {
    Layer2 layer = socle2_layer(mu, nu, k);
    if (layer.empty()) break;
    out.push_back(std::move(layer));
  }
  return out;
}

}  // namespace t3
