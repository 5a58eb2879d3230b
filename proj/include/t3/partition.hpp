#pragma once

// Young diagrams (integer partitions): the canonical index type of the whole
// library. Provides parsing, transpose, containment, enumeration in
// reverse-lexicographic order, and standard-tableau counts f^λ.

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "t3/checked.hpp"

namespace t3 {

// A partition λ = (λ₁ ≥ λ₂ ≥ … ≥ λ_k > 0). The default value is the empty
// diagram ∅. Comparison is lexicographic on the part vector; it is a total
// order used for container keys, not the dominance or inclusion order.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] < 1)
        throw std::invalid_argument("partition parts must be positive");
      if (k > 0 && parts_[k] > parts_[k - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  // Text form: "0" is the empty diagram, otherwise comma-separated parts,
  // e.g. "3,2,1". Zero parts are tolerated where weak decrease allows them
  // (so "2,0" reads as (2)) and are dropped from the canonical value.
  static Partition parse(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty partition text");
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
      int value = 0;
      const char* first = tok.data();
      const char* last = tok.data() + tok.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr != last || tok.empty())
        throw std::invalid_argument("malformed partition text: '" + std::string(text) + "'");
      if (value < 0)
        throw std::invalid_argument("negative part in partition text");
      if (!parts.empty() && value > parts.back())
        throw std::invalid_argument("partition parts must be weakly decreasing: '" +
                                    std::string(text) + "'");
      parts.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
      if (pos == text.size())
        throw std::invalid_argument("trailing comma in partition text");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int rows() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  // Row length, 0 beyond the last row.
  int row(int r) const noexcept { return r >= 0 && r < rows() ? parts_[r] : 0; }

  // Number of boxes |λ|.
  int size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  // Inverse of parse: "0" for ∅, "3,2,1" otherwise.
  std::string str() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(parts_[k]);
    }
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Transpose λ⊥ (columns become rows); an involution.
inline Partition transpose(const Partition& la) {
  std::vector<int> cols;
  cols.reserve(static_cast<std::size_t>(la.row(0)));
  for (int c = 0; c < la.row(0); ++c) {
    int h = 0;
    while (h < la.rows() && la.row(h) > c) ++h;
    cols.push_back(h);
  }
  return Partition(std::move(cols));
}

// True iff μ fits inside λ row by row.
inline bool contains(const Partition& la, const Partition& mu) {
  if (mu.rows() > la.rows()) return false;
  for (int r = 0; r < mu.rows(); ++r)
    if (mu.row(r) > la.row(r)) return false;
  return true;
}

namespace detail {
inline void emit_partitions(int n, int max_part, std::vector<int>& acc,
                            std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int first = std::min(n, max_part); first >= 1; --first) {
    acc.push_back(first);
    emit_partitions(n - first, first, acc, out);
    acc.pop_back();
  }
}
}  // namespace detail

// All partitions of n, in reverse-lexicographic order: (n), (n-1,1), …,
// (1,…,1). The count is the partition function p(n).
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> acc;
  detail::emit_partitions(n, n, acc, out);
  return out;
}

// f^λ, the number of standard Young tableaux of shape λ, by the hook length
// formula |λ|!/∏(hooks). Evaluated through prime factorization so the only
// overflow possible is in the final result; f^∅ = 1.
inline std::int64_t num_standard_tableaux(const Partition& la) {
  const int n = la.size();
  if (n == 0) return 1;

  // exponent of each prime in n! (Legendre's formula)
  std::vector<int> exponent(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (int p = 2; p <= n; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    for (int q = 2 * p; q <= n; q += p) composite[static_cast<std::size_t>(q)] = true;
    for (long long pk = p; pk <= n; pk *= p)
      exponent[static_cast<std::size_t>(p)] += n / static_cast<int>(pk);
  }

  // subtract the factorization of every hook length
  const Partition tr = transpose(la);
  for (int r = 0; r < la.rows(); ++r) {
    for (int c = 0; c < la.row(r); ++c) {
      int hook = (la.row(r) - c - 1) + (tr.row(c) - r - 1) + 1;
      for (int p = 2; p * p <= hook; ++p)
        while (hook % p == 0) {
          exponent[static_cast<std::size_t>(p)] -= 1;
          hook /= p;
        }
      if (hook > 1) exponent[static_cast<std::size_t>(hook)] -= 1;
    }
  }

  std::int64_t result = 1;
  for (int p = 2; p <= n; ++p)
    for (int e = 0; e < exponent[static_cast<std::size_t>(p)]; ++e)
      result = checked_mul(result, p);
  return result;
}

}  // namespace t3
