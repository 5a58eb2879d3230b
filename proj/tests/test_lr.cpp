#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "t3/lr.hpp"
#include "t3/partition.hpp"
#include "t3/sym_element.hpp"

using t3::lr_coefficient;
using t3::lr_expand_product;
using t3::lr_oracle_product;
using t3::Partition;
using t3::SymElement;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

SymElement sym(std::initializer_list<std::pair<std::vector<int>, std::int64_t>> terms) {
  SymElement e;
  for (const auto& [parts, c] : terms) e.add_term(Partition(parts), c);
  return e;
}

}  // namespace

TEST_CASE("LR coefficient values", "[lr]") {
  CHECK(lr_coefficient(P({1}), P({1}), P({2})) == 1);
  CHECK(lr_coefficient(P({1}), P({1}), P({1, 1})) == 1);
  CHECK(lr_coefficient(P({3, 1}), Partition{}, P({3, 1})) == 1);
  CHECK(lr_coefficient(Partition{}, P({3, 1}), P({3, 1})) == 1);
  CHECK(lr_coefficient(P({2, 1}), P({2, 1}), P({3, 2, 1})) == 2);
  CHECK(lr_coefficient(P({1}), P({1}), P({3})) == 0);       // grading
  CHECK(lr_coefficient(P({2}), P({1}), P({1, 1, 1})) == 0); // containment
  CHECK(lr_coefficient(P({2, 1}), P({2, 1}), P({4, 2})) == 1);
  CHECK(lr_coefficient(P({2, 1}), P({2, 1}), P({3, 3})) == 1);
}

TEST_CASE("product expansion", "[lr]") {
  CHECK(lr_expand_product(P({1}), P({1})) == sym({{{2}, 1}, {{1, 1}, 1}}));
  CHECK(lr_expand_product(P({3, 1}), Partition{}) == sym({{{3, 1}, 1}}));
  CHECK(lr_expand_product(P({2}), P({1})) == sym({{{3}, 1}, {{2, 1}, 1}}));
  CHECK(lr_expand_product(P({2, 1}), P({2, 1})) ==
        sym({{{2, 2, 1, 1}, 1},
             {{2, 2, 2}, 1},
             {{3, 1, 1, 1}, 1},
             {{3, 2, 1}, 2},
             {{3, 3}, 1},
             {{4, 1, 1}, 1},
             {{4, 2}, 1}}));
}

TEST_CASE("oracle product", "[lr]") {
  CHECK(lr_oracle_product(P({1}), P({1}), 2) == sym({{{2}, 1}, {{1, 1}, 1}}));
  CHECK(lr_oracle_product(Partition{}, Partition{}, 1) == sym({{{}, 1}}));
  CHECK(lr_oracle_product(P({2, 1}), P({1}), 4) ==
        sym({{{3, 1}, 1}, {{2, 2}, 1}, {{2, 1, 1}, 1}}));
  CHECK_THROWS_AS(lr_oracle_product(P({2, 1}), P({1}), 2), std::invalid_argument);
  CHECK_THROWS_AS(lr_oracle_product(P({1}), P({1}), 0), std::invalid_argument);
}

TEST_CASE("oracle result does not depend on the number of variables", "[lr]") {
  const std::vector<std::pair<Partition, Partition>> pairs = {
      {P({2, 1}), P({2})}, {P({2, 2}), P({1, 1})}, {P({3}), P({2, 1})}};
  for (const auto& [la, mu] : pairs) {
    const int base = la.size() + mu.size();
    const SymElement ref = lr_oracle_product(la, mu, base);
    CHECK(lr_oracle_product(la, mu, base + 1) == ref);
    CHECK(lr_oracle_product(la, mu, base + 2) == ref);
  }
}

TEST_CASE("oracle equivalence for all products up to 8 boxes", "[lr]") {
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; a + b <= 8; ++b) {
      const int nvars = std::max(1, a + b);
      for (const Partition& la : t3::enumerate_partitions(a))
        for (const Partition& mu : t3::enumerate_partitions(b))
          REQUIRE(lr_expand_product(la, mu) == lr_oracle_product(la, mu, nvars));
    }
  }
}

TEST_CASE("symmetry and transpose invariance up to 8 boxes", "[lr]") {
  for (int a = 0; a <= 8; ++a) {
    for (int b = a; a + b <= 8; ++b) {
      for (const Partition& la : t3::enumerate_partitions(a)) {
        for (const Partition& mu : t3::enumerate_partitions(b)) {
          for (const Partition& nu : t3::enumerate_partitions(a + b)) {
            const std::int64_t c = lr_coefficient(la, mu, nu);
            CHECK(lr_coefficient(mu, la, nu) == c);
            CHECK(lr_coefficient(t3::transpose(la), t3::transpose(mu), t3::transpose(nu)) == c);
          }
        }
      }
    }
  }
}

TEST_CASE("associativity on sampled triples up to 9 boxes", "[lr]") {
  std::vector<std::array<Partition, 3>> sample;
  int stride = 0;
  for (int a = 0; a <= 9; ++a)
    for (int b = 0; a + b <= 9; ++b)
      for (int c = 0; a + b + c <= 9; ++c)
        for (const Partition& la : t3::enumerate_partitions(a))
          for (const Partition& mu : t3::enumerate_partitions(b))
            for (const Partition& ka : t3::enumerate_partitions(c))
              if (stride++ % 97 == 0) sample.push_back({la, mu, ka});

  for (const auto& [la, mu, ka] : sample) {
    const int total = la.size() + mu.size() + ka.size();
    for (const Partition& sigma : t3::enumerate_partitions(total)) {
      std::int64_t lhs = 0;
      for (const Partition& nu : t3::enumerate_partitions(la.size() + mu.size()))
        lhs += lr_coefficient(la, mu, nu) * lr_coefficient(nu, ka, sigma);
      std::int64_t rhs = 0;
      for (const Partition& tau : t3::enumerate_partitions(mu.size() + ka.size()))
        rhs += lr_coefficient(la, tau, sigma) * lr_coefficient(mu, ka, tau);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("single-box Pieri coefficients are 0 or 1", "[lr]") {
  for (int a = 0; a <= 7; ++a)
    for (const Partition& la : t3::enumerate_partitions(a))
      for (const Partition& nu : t3::enumerate_partitions(a + 1)) {
        const std::int64_t c = lr_coefficient(la, P({1}), nu);
        CHECK((c == 0 || c == 1));
      }
}
