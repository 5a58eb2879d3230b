#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "t3/checked.hpp"
#include "t3/partition.hpp"

using t3::Partition;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// independent oracle: count partitions of n with parts at most k
long long partition_count(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return partition_count(n - k, k) + partition_count(n, k - 1);
}

// independent oracle: count standard tableaux by growing them cell by cell
long long syt_count(const Partition& shape) {
  std::vector<int> filled(static_cast<std::size_t>(shape.rows()), 0);
  std::function<long long()> rec = [&]() -> long long {
    long long total = 0;
    bool complete = true;
    for (int r = 0; r < shape.rows(); ++r) {
      auto ri = static_cast<std::size_t>(r);
      if (filled[ri] < shape.row(r)) complete = false;
      const bool addable = filled[ri] < shape.row(r) && (r == 0 || filled[ri - 1] > filled[ri]);
      if (addable) {
        ++filled[ri];
        total += rec();
        --filled[ri];
      }
    }
    return complete ? 1 : total;
  };
  return rec();
}

}  // namespace

TEST_CASE("partition parsing", "[partition]") {
  CHECK(Partition::parse("3,2,1") == P({3, 2, 1}));
  CHECK(Partition::parse("0") == Partition{});
  CHECK(Partition::parse("7") == P({7}));
  CHECK(Partition::parse("2,0") == P({2}));      // trailing zeros are dropped
  CHECK(Partition::parse("2,2,0,0") == P({2, 2}));
  CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,0,1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("3,"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("3,,1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("-1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(std::vector<int>{0}), std::invalid_argument);
}

TEST_CASE("partition round trip through text", "[partition]") {
  for (int n = 0; n <= 8; ++n)
    for (const Partition& la : t3::enumerate_partitions(n))
      CHECK(Partition::parse(la.str()) == la);
}

TEST_CASE("size and containment", "[partition]") {
  CHECK(P({3, 2, 1}).size() == 6);
  CHECK(Partition{}.size() == 0);
  CHECK(P({2, 2}).size() == 4);
  CHECK(t3::contains(P({2, 1}), P({1, 1})));
  CHECK_FALSE(t3::contains(P({2}), P({1, 1})));
  CHECK(t3::contains(P({3, 1}), Partition{}));
  CHECK(t3::contains(P({3, 1}), P({3, 1})));
}

TEST_CASE("transpose", "[partition]") {
  CHECK(t3::transpose(P({2, 1})) == P({2, 1}));
  CHECK(t3::transpose(P({3, 1})) == P({2, 1, 1}));
  CHECK(t3::transpose(Partition{}) == Partition{});
  CHECK(t3::transpose(P({4})) == P({1, 1, 1, 1}));
}

TEST_CASE("transpose is an involution up to 8 boxes", "[partition]") {
  for (int n = 0; n <= 8; ++n)
    for (const Partition& la : t3::enumerate_partitions(n))
      CHECK(t3::transpose(t3::transpose(la)) == la);
}

TEST_CASE("partition enumeration", "[partition]") {
  CHECK(t3::enumerate_partitions(0) == std::vector<Partition>{Partition{}});
  const auto p4 = t3::enumerate_partitions(4);
  // reverse-lexicographic order
  CHECK(p4 == std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}),
                                     P({1, 1, 1, 1})});
  CHECK(t3::enumerate_partitions(6).size() == 11);
  CHECK_THROWS_AS(t3::enumerate_partitions(-1), std::invalid_argument);
}

TEST_CASE("enumeration count matches recursive generation up to 20", "[partition]") {
  for (int n = 0; n <= 20; ++n) {
    const auto all = t3::enumerate_partitions(n);
    CHECK(static_cast<long long>(all.size()) == partition_count(n, n));
    for (std::size_t k = 1; k < all.size(); ++k) CHECK(all[k - 1] > all[k]);
  }
}

TEST_CASE("standard tableau counts", "[partition]") {
  CHECK(t3::num_standard_tableaux(P({5})) == 1);
  CHECK(t3::num_standard_tableaux(Partition{}) == 1);
  CHECK(t3::num_standard_tableaux(P({2, 1})) == 2);   // hooks 3,1,1
  CHECK(t3::num_standard_tableaux(P({2, 2})) == 2);   // hooks 3,2,2,1
  CHECK(t3::num_standard_tableaux(P({3, 2})) == 5);
  CHECK(t3::num_standard_tableaux(P({1, 1, 1, 1})) == 1);
  // larger values, frozen from an independent computation
  CHECK(t3::num_standard_tableaux(P({7, 6, 5, 4, 3, 2, 1})) == 48608795688960LL);
  CHECK(t3::num_standard_tableaux(P({6, 6, 5, 5, 4, 4, 3})) == 5068564706565360LL);
}

TEST_CASE("hook formula agrees with direct tableau enumeration up to 6 boxes", "[partition]") {
  for (int n = 0; n <= 6; ++n)
    for (const Partition& la : t3::enumerate_partitions(n))
      CHECK(t3::num_standard_tableaux(la) == syt_count(la));
}

TEST_CASE("Schur-Weyl dimension count: sum of squares is n!", "[partition]") {
  for (int n = 0; n <= 7; ++n) {
    std::int64_t total = 0;
    for (const Partition& la : t3::enumerate_partitions(n)) {
      const std::int64_t f = t3::num_standard_tableaux(la);
      total = t3::checked_add(total, t3::checked_mul(f, f));
    }
    CHECK(total == t3::checked_factorial(n));
  }
}

TEST_CASE("tableau count overflow fails loudly", "[partition]") {
  CHECK_THROWS_AS(t3::num_standard_tableaux(P({8, 7, 6, 5, 4, 3, 2, 1})), std::overflow_error);
  CHECK_THROWS_AS(t3::checked_factorial(21), std::overflow_error);
  CHECK(t3::checked_factorial(20) == 2432902008176640000LL);
}
