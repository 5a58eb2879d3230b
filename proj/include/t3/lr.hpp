#pragma once

// Littlewood-Richardson coefficients N^ν_{λ,μ} by backtracking enumeration
// of LR skew tableaux, plus Schur-basis product expansion and an independent
// oracle that multiplies monomial expansions of Schur polynomials.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "t3/checked.hpp"
#include "t3/partition.hpp"
#include "t3/sym_element.hpp"

namespace t3 {

namespace detail {

// Counts fillings of ν/λ with content μ: rows weakly increase, columns
// strictly increase, and the reverse reading word (rows top to bottom, each
// read right to left) is a lattice word.
class LrCounter {
 public:
  LrCounter(const Partition& la, const Partition& mu, const Partition& nu)
      : la_(la), mu_(mu), nu_(nu) {
    for (int r = 0; r < nu_.rows(); ++r)
      for (int c = nu_.row(r) - 1; c >= la_.row(r); --c)
        cells_.push_back({r, c});
    fill_.assign(static_cast<std::size_t>(nu_.rows()),
                 std::vector<int>(static_cast<std::size_t>(nu_.row(0)), 0));
    counts_.assign(static_cast<std::size_t>(mu_.rows()) + 1, 0);
    remaining_.assign(static_cast<std::size_t>(mu_.rows()) + 1, 0);
    for (int v = 1; v <= mu_.rows(); ++v)
      remaining_[static_cast<std::size_t>(v)] = mu_.row(v - 1);
  }

  std::int64_t count() { return rec(0); }

 private:
  std::int64_t rec(std::size_t idx) {
    if (idx == cells_.size()) return 1;
    const auto [r, c] = cells_[idx];
    std::int64_t total = 0;
    for (int v = 1; v <= mu_.rows(); ++v) {
      auto vi = static_cast<std::size_t>(v);
      if (remaining_[vi] == 0) continue;
      // lattice: after placing, #v must not exceed #(v-1) in the prefix
      if (v > 1 && counts_[vi] >= counts_[vi - 1]) continue;
      // row weakly increasing: right neighbour was filled first
      if (c + 1 < nu_.row(r) && fill_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) + 1] < v)
        continue;
      // column strictly increasing: cell above is a skew cell once c ≥ λ_{r-1}
      if (r > 0 && c >= la_.row(r - 1) &&
          fill_[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c)] >= v)
        continue;
      fill_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      ++counts_[vi];
      --remaining_[vi];
      total = checked_add(total, rec(idx + 1));
      --counts_[vi];
      ++remaining_[vi];
      fill_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
    }
    return total;
  }

  const Partition& la_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::vector<int>> fill_;
  std::vector<int> counts_;
  std::vector<int> remaining_;
};

// cache key: the three part vectors, byte-encoded (parts here are small)
inline bool lr_cache_key(const Partition& la, const Partition& mu, const Partition& nu,
                         std::string& key) {
  key.clear();
  for (const Partition* p : {&la, &mu, &nu}) {
    for (int part : p->parts()) {
      if (part > 0xfe) return false;
      key.push_back(static_cast<char>(part));
    }
    key.push_back('\xff');
  }
  return true;
}

}  // namespace detail

// The Littlewood-Richardson coefficient N^ν_{λ,μ}. Zero whenever
// |ν| ≠ |λ| + |μ| or λ ⊄ ν. Results are memoized behind a mutex; the cache
// never changes a result.
inline std::int64_t lr_coefficient(const Partition& la, const Partition& mu,
                                   const Partition& nu) {
  if (nu.size() != la.size() + mu.size()) return 0;
  if (!contains(nu, la)) return 0;
  if (mu.empty()) return 1;

  static std::unordered_map<std::string, std::int64_t> cache;
  static std::mutex cache_mutex;

  std::string key;
  const bool cacheable = detail::lr_cache_key(la, mu, nu, key);
  if (cacheable) {
    std::scoped_lock lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  std::int64_t value = detail::LrCounter(la, mu, nu).count();

  if (cacheable) {
    std::scoped_lock lock(cache_mutex);
    cache.emplace(std::move(key), value);
  }
  return value;
}

// s_λ · s_μ = Σ_ν N^ν_{λ,μ} s_ν over partitions ν of |λ| + |μ|.
inline SymElement lr_expand_product(const Partition& la, const Partition& mu) {
  SymElement out;
  for (const Partition& nu : enumerate_partitions(la.size() + mu.size()))
    out.add_term(nu, lr_coefficient(la, mu, nu));
  return out;
}

namespace detail {

// exponent vectors of fixed length, coefficient map ordered lexicographically
using MonomialPoly = std::map<std::vector<int>, std::int64_t>;

// Monomial expansion of the Schur polynomial s_shape in nvars variables:
// one monomial per semistandard tableau with entries in 1..nvars.
inline MonomialPoly ssyt_expansion(const Partition& shape, int nvars) {
  MonomialPoly out;
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < shape.rows(); ++r)
    for (int c = 0; c < shape.row(r); ++c) cells.push_back({r, c});
  std::vector<std::vector<int>> fill(
      static_cast<std::size_t>(shape.rows()),
      std::vector<int>(static_cast<std::size_t>(shape.row(0)), 0));
  std::vector<int> content(static_cast<std::size_t>(nvars), 0);

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      auto [it, inserted] = out.emplace(content, 1);
      if (!inserted) it->second = checked_add(it->second, 1);
      return;
    }
    const auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) - 1]);
    if (r > 0) lo = std::max(lo, fill[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= nvars; ++v) {
      fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      ++content[static_cast<std::size_t>(v) - 1];
      self(self, idx + 1);
      --content[static_cast<std::size_t>(v) - 1];
    }
    fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
  };
  rec(rec, 0);
  return out;
}

inline MonomialPoly multiply(const MonomialPoly& a, const MonomialPoly& b) {
  MonomialPoly out;
  std::vector<int> e;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      std::int64_t c = checked_mul(ca, cb);
      auto [it, inserted] = out.emplace(e, c);
      if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

}  // namespace detail

// Independent check of lr_expand_product: expands s_λ and s_μ as monomial
// sums over semistandard tableaux in nvars variables, multiplies them, and
// re-expresses the product in the Schur basis by eliminating the
// lexicographically leading monomial (for a symmetric polynomial that
// monomial is always a partition). Faithful once nvars ≥ |λ| + |μ|.
inline SymElement lr_oracle_product(const Partition& la, const Partition& mu, int nvars) {
  if (nvars < 1) throw std::invalid_argument("need at least one variable");
  if (nvars < la.size() + mu.size())
    throw std::invalid_argument("monomial expansion is not faithful: need nvars >= |la| + |mu|");

  detail::MonomialPoly poly =
      detail::multiply(detail::ssyt_expansion(la, nvars), detail::ssyt_expansion(mu, nvars));

  std::map<Partition, detail::MonomialPoly> schur_cache;
  SymElement out;
  while (!poly.empty()) {
    auto lead = poly.rbegin();
    const std::vector<int>& e = lead->first;
    for (std::size_t k = 0; k + 1 < e.size(); ++k)
      if (e[k] < e[k + 1])
        throw std::logic_error("leading monomial of a symmetric polynomial must be a partition");
    std::vector<int> parts(e.begin(), e.end());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    const Partition nu{std::vector<int>(parts)};
    const std::int64_t c = lead->second;

    auto it = schur_cache.find(nu);
    if (it == schur_cache.end())
      it = schur_cache.emplace(nu, detail::ssyt_expansion(nu, nvars)).first;
    for (const auto& [em, cm] : it->second) {
      auto [pit, inserted] = poly.emplace(em, checked_mul(-c, cm));
      if (!inserted) {
        pit->second = checked_sub(pit->second, checked_mul(c, cm));
        if (pit->second == 0) poly.erase(pit);
      } else if (pit->second == 0) {
        poly.erase(pit);
      }
    }
    out.add_term(nu, c);
  }
  return out;
}

}  // namespace t3
