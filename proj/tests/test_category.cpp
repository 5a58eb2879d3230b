#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "t3/category.hpp"
#include "t3/partition.hpp"
#include "t3/poset.hpp"
#include "t3/verify.hpp"

using t3::block_index;
using t3::composition_multiplicity;
using t3::decompose_X;
using t3::ext_dim;
using t3::ext_via_socle;
using t3::Filtration;
using t3::hom_dim;
using t3::InjectiveLabel;
using t3::Layer;
using t3::Layer2;
using t3::loewy_length;
using t3::PairLabel;
using t3::Partition;
using t3::restrict_W_socle;
using t3::SimpleLabel;
using t3::simple_index;
using t3::socle2_layer;
using t3::socle_filtration;
using t3::socle_layer;
using t3::TripleIndex;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

SimpleLabel V(std::vector<int> la, std::vector<int> mu, std::vector<int> nu) {
  return {P(std::move(la)), P(std::move(mu)), P(std::move(nu))};
}

InjectiveLabel I(std::vector<int> la, std::vector<int> mu, std::vector<int> nu) {
  return {P(std::move(la)), P(std::move(mu)), P(std::move(nu))};
}

}  // namespace

TEST_CASE("socle layers of the one-box injective", "[category]") {
  const InjectiveLabel inj = I({1}, {1}, {1});
  CHECK(socle_layer(inj, 1) == Layer{{V({1}, {1}, {1}), 1}});
  CHECK(socle_layer(inj, 2) == Layer{{V({2}, {}, {1}), 1},
                                     {V({1, 1}, {}, {1}), 1},
                                     {V({1}, {}, {}), 1}});
  CHECK(socle_layer(inj, 3).empty());
  CHECK_THROWS_AS(socle_layer(inj, 0), std::invalid_argument);
}

TEST_CASE("simple injectives have a single layer", "[category]") {
  for (const InjectiveLabel& inj : {I({2}, {}, {1}), I({}, {}, {3, 1}), I({2, 1}, {}, {})}) {
    CHECK(socle_layer(inj, 2).empty());
    const Filtration f = socle_filtration(inj);
    REQUIRE(f.layers.size() == 1);
    CHECK(f.layers[0] == Layer{{SimpleLabel{inj.lambda, inj.mu, inj.nu}, 1}});
    CHECK(loewy_length(inj) == 1);
  }
}

TEST_CASE("socle filtrations", "[category]") {
  const Filtration f1 = socle_filtration(I({}, {1}, {1}));
  REQUIRE(f1.layers.size() == 2);
  CHECK(f1.layers[0] == Layer{{V({}, {1}, {1}), 1}});
  CHECK(f1.layers[1] == Layer{{V({}, {}, {}), 1}, {V({1}, {}, {1}), 1}});

  const Filtration f2 = socle_filtration(I({}, {1}, {}));
  REQUIRE(f2.layers.size() == 2);
  CHECK(f2.layers[1] == Layer{{V({1}, {}, {}), 1}});

  CHECK(loewy_length(I({}, {2}, {})) == 3);

  // a filtration with a nonempty first diagram everywhere
  const Filtration f3 = socle_filtration(I({1}, {2}, {1}));
  REQUIRE(f3.layers.size() == 3);
  CHECK(f3.layers[0] == Layer{{V({1}, {2}, {1}), 1}});
  CHECK(f3.layers[1] == Layer{{V({1}, {1}, {}), 1},
                              {V({1, 1}, {1}, {1}), 1},
                              {V({2}, {1}, {1}), 1}});
  CHECK(f3.layers[2] == Layer{{V({1, 1}, {}, {}), 1},
                              {V({2}, {}, {}), 1},
                              {V({2, 1}, {}, {1}), 1},
                              {V({3}, {}, {1}), 1}});
}

TEST_CASE("a layer with multiplicity two", "[category]") {
  const Filtration f = socle_filtration(I({}, {2, 1}, {1}));
  REQUIRE(f.layers.size() == 4);
  CHECK(f.layers[2] == Layer{{V({1}, {1}, {}), 2},
                             {V({1, 1}, {1}, {1}), 1},
                             {V({2}, {1}, {1}), 1}});
  CHECK(f.layers[3] == Layer{{V({1, 1}, {}, {}), 1},
                             {V({2}, {}, {}), 1},
                             {V({2, 1}, {}, {1}), 1}});
}

TEST_CASE("ext dimensions of the rank-one example", "[category]") {
  const SimpleLabel tgt = V({1}, {1}, {1});
  for (const SimpleLabel& src : {V({2}, {}, {1}), V({1, 1}, {}, {1}), V({1}, {}, {})}) {
    for (int q = 0; q <= 6; ++q) {
      CHECK(ext_dim(src, tgt, q) == (q == 1 ? 1 : 0));
      CHECK(ext_via_socle(src, tgt, q) == (q == 1 ? 1 : 0));
    }
  }
  CHECK_THROWS_AS(ext_dim(tgt, tgt, -1), std::invalid_argument);
}

TEST_CASE("ext in degree zero is a Kronecker delta", "[category]") {
  const SimpleLabel a = V({2}, {1}, {});
  const SimpleLabel b = V({2}, {1}, {1});
  CHECK(ext_dim(a, a, 0) == 1);
  CHECK(ext_dim(b, b, 0) == 1);
  CHECK(ext_dim(a, b, 0) == 0);
  CHECK(ext_via_socle(a, a, 0) == 1);
  CHECK(ext_via_socle(a, b, 0) == 0);
}

TEST_CASE("an ext space of dimension two", "[category]") {
  CHECK(ext_dim(V({1}, {1}, {}), V({}, {2, 1}, {1}), 2) == 2);
  CHECK(ext_via_socle(V({1}, {1}, {}), V({}, {2, 1}, {1}), 2) == 2);
}

TEST_CASE("block and poset indices", "[category]") {
  CHECK(block_index(I({1}, {1}, {1})) == 1);
  CHECK(block_index(V({}, {}, {})) == 0);
  CHECK(block_index(I({}, {}, {2})) == -2);
  CHECK(simple_index(V({2}, {}, {1})) == TripleIndex{2, 0, 1});
  CHECK(simple_index(V({}, {}, {})) == TripleIndex{0, 0, 0});
  CHECK(simple_index(V({1}, {1}, {1})) == TripleIndex{1, 1, 1});
}

TEST_CASE("Schur-Weyl decomposition of the generators", "[category]") {
  using Decomp = std::map<InjectiveLabel, std::int64_t>;
  CHECK(decompose_X({0, 1, 1}) == Decomp{{I({}, {1}, {1}), 1}});
  CHECK(decompose_X({0, 2, 0}) == Decomp{{I({}, {2}, {}), 1}, {I({}, {1, 1}, {}), 1}});
  CHECK(decompose_X({0, 3, 0}) == Decomp{{I({}, {3}, {}), 1},
                                         {I({}, {2, 1}, {}), 2},
                                         {I({}, {1, 1, 1}, {}), 1}});
  CHECK_THROWS_AS(decompose_X({-1, 0, 0}), std::invalid_argument);
}

TEST_CASE("composition multiplicities", "[category]") {
  CHECK(composition_multiplicity({0, 1, 1}, V({}, {}, {})) == 1);
  CHECK(composition_multiplicity({0, 1, 1}, V({1}, {}, {1})) == 1);
  CHECK(composition_multiplicity({0, 1, 1}, V({}, {}, {1})) == 0);  // block mismatch
}

TEST_CASE("hom dimensions", "[category]") {
  CHECK(hom_dim({0, 1, 1}, {0, 0, 0}) == 1);
  CHECK(hom_dim({0, 2, 0}, {0, 2, 0}) == 2);
  CHECK(hom_dim({0, 2, 0}, {2, 0, 0}) == 2);
  CHECK(hom_dim({0, 2, 2}, {1, 0, 1}) == 4);
  CHECK(hom_dim({1, 2, 0}, {3, 0, 0}) == 6);
  CHECK(hom_dim({0, 0, 0}, {0, 1, 1}) == 0);  // no upward homs
}

TEST_CASE("restriction of two-diagram simples", "[category]") {
  CHECK(restrict_W_socle(P({}), P({2}), P({}), 3) == Layer{{V({2}, {}, {}), 1}});
  CHECK(restrict_W_socle(P({3}), P({2}), P({1}), 1) == Layer{{V({3}, {2}, {1}), 1}});
  CHECK(restrict_W_socle(P({1}), P({1}), P({}), 2) ==
        Layer{{V({2}, {}, {}), 1}, {V({1, 1}, {}, {}), 1}});
  CHECK(restrict_W_socle(P({}), P({1}), P({}), 3).empty());
  CHECK(t3::restrict_W_filtration(P({}), P({2}), P({})).size() == 3);
}

TEST_CASE("two-diagram socle layers", "[category]") {
  CHECK(socle2_layer(P({1}), P({1}), 1) == Layer2{{PairLabel{P({1}), P({1})}, 1}});
  CHECK(socle2_layer(P({1}), P({1}), 2) == Layer2{{PairLabel{P({}), P({})}, 1}});
  CHECK(socle2_layer(P({2}), P({1}), 2) == Layer2{{PairLabel{P({1}), P({})}, 1}});
  CHECK(socle2_layer(P({2}), P({}), 2).empty());
  CHECK(t3::socle2_filtration(P({2, 1}), P({1, 1})).size() == 3);
}

TEST_CASE("verify suite passes on small budgets", "[category]") {
  for (int boxes : {0, 2}) {
    const t3::VerifyReport report = t3::verify_suite(boxes);
    CHECK(report.all_passed());
    CHECK(report.invariants.size() == 11);
    for (const auto& inv : report.invariants) {
      INFO(inv.name << ": " << inv.first_failure);
      CHECK(inv.passed());
      if (boxes > 0) CHECK(inv.checks > 0);
    }
  }
  CHECK_THROWS_AS(t3::verify_suite(-1), std::invalid_argument);
}
