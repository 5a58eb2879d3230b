#pragma once

// The ordered index sets underlying the category calculators: triples
// (m,n,p) counting V*/V_* , V^* and V tensorands, and pairs (m,n) for the
// two-diagram subcategory. Provides the order predicates, cover moves,
// down-sets, and the defect (longest-chain length between comparable
// indices).

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace t3 {

// Index of X_{m,n,p} = (V*/V_*)^{⊗m} ⊗ (V^*)^{⊗n} ⊗ V^{⊗p}. Components are
// nonnegative. operator<=> is the lexicographic container order, not the
// poset order; use leq3 for the latter.
struct TripleIndex {
  int m = 0;
  int n = 0;
  int p = 0;

  std::string str() const {
    return std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p);
  }

  friend bool operator==(const TripleIndex&, const TripleIndex&) = default;
  friend auto operator<=>(const TripleIndex&, const TripleIndex&) = default;
};

// Index of (V_*)^{⊗m} ⊗ V^{⊗n} in the two-diagram category.
struct PairIndex {
  int m = 0;
  int n = 0;

  std::string str() const { return std::to_string(m) + "," + std::to_string(n); }

  friend bool operator==(const PairIndex&, const PairIndex&) = default;
  friend auto operator<=>(const PairIndex&, const PairIndex&) = default;
};

// i ≤ j in the triple order: for i=(m,n,p), j=(m',n',p') this requires
// m ≥ m', m+n ≤ m'+n', n ≤ n', p ≤ p' and m+n-p = m'+n'-p'. The first
// inequality is deliberately reversed; all five conditions are checked
// literally even though two of them are implied by the rest.
inline bool leq3(const TripleIndex& i, const TripleIndex& j) {
  return i.m >= j.m && i.m + i.n <= j.m + j.n && i.n <= j.n && i.p <= j.p &&
         i.m + i.n - i.p == j.m + j.n - j.p;
}

// Targets of the two contraction families applied to j = (m,n,p):
// (m, n-1, p-1) pairs a V^* tensorand with a V one, and (m+1, n-1, p)
// collapses a V^* tensorand onto V*/V_*. Both targets lie strictly below j.
inline std::vector<TripleIndex> covers3(const TripleIndex& j) {
  std::vector<TripleIndex> out;
  if (j.n >= 1 && j.p >= 1) out.push_back({j.m, j.n - 1, j.p - 1});
  if (j.n >= 1) out.push_back({j.m + 1, j.n - 1, j.p});
  return out;
}

// All indices below i, in lexicographic order. Solving the degree constraint
// for the first component shows directly that the down-set is finite.
inline std::vector<TripleIndex> down_set3(const TripleIndex& i) {
  std::vector<TripleIndex> out;
  for (int b = 0; b <= i.n; ++b)
    for (int c = 0; c <= i.p; ++c) {
      const int a = (i.m + i.n - i.p) + c - b;
      const TripleIndex cand{a, b, c};
      if (a >= i.m && leq3(cand, i)) out.push_back(cand);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Number of links in a longest chain i < … < j, found by exhaustive search
// over the interval {x : i ≤ x ≤ j}. Throws when i ≰ j, where the defect is
// undefined.
inline int defect3(const TripleIndex& i, const TripleIndex& j) {
  if (!leq3(i, j))
    throw std::domain_error("defect is undefined: " + i.str() + " is not below " + j.str());
  std::vector<TripleIndex> interval;
  for (const TripleIndex& x : down_set3(j))
    if (leq3(i, x)) interval.push_back(x);

  std::map<TripleIndex, int> longest;
  auto chain = [&](auto&& self, const TripleIndex& x) -> int {
    if (x == i) return 0;
    auto it = longest.find(x);
    if (it != longest.end()) return it->second;
    int best = 0;
    for (const TripleIndex& y : interval)
      if (y != x && leq3(y, x)) best = std::max(best, self(self, y) + 1);
    longest.emplace(x, best);
    return best;
  };
  return chain(chain, j);
}

// A morphism X_j → X_i with i strictly below j is short when the defect of
// the index drop is exactly 1.
inline bool is_short3(const TripleIndex& i, const TripleIndex& j) {
  return leq3(i, j) && defect3(i, j) == 1;
}

// Pair order: generated by (m,n) ≥ (m-1,n-1), i.e. i ≤ j iff both
// components grow by the same nonnegative amount.
inline bool leq2(const PairIndex& i, const PairIndex& j) {
  return j.m - i.m == j.n - i.n && j.m >= i.m;
}

inline int defect2(const PairIndex& i, const PairIndex& j) {
  if (!leq2(i, j))
    throw std::domain_error("defect is undefined: " + i.str() + " is not below " + j.str());
  return j.m - i.m;
}

}  // namespace t3
