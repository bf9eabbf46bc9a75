#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "focal/root_data.hpp"

using namespace focal;

namespace {

const std::vector<RootSystemId> kAllSystems = {
    RootSystemId::A1, RootSystemId::A2, RootSystemId::C2,
    RootSystemId::C3, RootSystemId::B4, RootSystemId::F4};

WeightVector fw_sum(const RootSystem& rs) {
  WeightVector s(rs.ambient_dim, Rat(0));
  for (const auto& w : rs.fundamental_weights) s = add(s, w);
  return s;
}

}  // namespace

TEST_CASE("positive root counts and dimensions") {
  struct Row { RootSystemId id; int rank; size_t positives; int dim; };
  const std::vector<Row> rows = {
      {RootSystemId::A1, 1, 1, 3},  {RootSystemId::A2, 2, 3, 8},
      {RootSystemId::C2, 2, 4, 10}, {RootSystemId::C3, 3, 9, 21},
      {RootSystemId::B4, 4, 16, 36}, {RootSystemId::F4, 4, 24, 52}};
  for (const auto& r : rows) {
    const RootSystem& rs = root_system(r.id);
    CHECK(rs.rank == r.rank);
    CHECK(rs.positive_roots.size() == r.positives);
    CHECK(rs.algebra_dim == r.dim);
    CHECK(rs.algebra_dim == rs.rank + 2 * static_cast<int>(rs.positive_roots.size()));
  }
}

TEST_CASE("weyl vector equals both the half-sum and the fundamental-weight sum") {
  for (auto id : kAllSystems) {
    const RootSystem& rs = root_system(id);
    WeightVector half(rs.ambient_dim, Rat(0));
    for (const auto& a : rs.positive_roots) half = add(half, a);
    half = scaled(half, Rat(1, 2));
    CHECK(rs.weyl_vector == half);
    CHECK(rs.weyl_vector == fw_sum(rs));
  }
}

TEST_CASE("fundamental weights pair with simple coroots as the identity") {
  for (auto id : kAllSystems) {
    const RootSystem& rs = root_system(id);
    for (size_t i = 0; i < rs.fundamental_weights.size(); ++i)
      for (size_t j = 0; j < rs.simple_roots.size(); ++j)
        CHECK(pairing(rs, rs.fundamental_weights[i], rs.simple_roots[j]) ==
              Rat(i == j ? 1 : 0));
  }
}

TEST_CASE("root system closed under its own reflections") {
  for (auto id : kAllSystems) {
    const RootSystem& rs = root_system(id);
    std::set<WeightVector> all;
    for (const auto& a : rs.positive_roots) {
      all.insert(a);
      all.insert(scaled(a, Rat(-1)));
    }
    for (const auto& a : all)
      for (const auto& b : all)
        CHECK(all.count(reflect(rs, a, b)) == 1);
  }
}

TEST_CASE("weight_of examples") {
  const RootSystem& c2 = root_system(RootSystemId::C2);
  CHECK(weight_of(c2, {0, 1}) == WeightVector{Rat(1), Rat(1)});
  CHECK(weight_of(c2, {1, 0}) == WeightVector{Rat(1), Rat(0)});
  CHECK(weight_of(c2, {1, 1}) == c2.weyl_vector);

  const RootSystem& a2 = root_system(RootSystemId::A2);
  CHECK(weight_of(a2, {1, 1}) == a2.weyl_vector);
  CHECK(weight_of(a2, {1, 0}) ==
        WeightVector{Rat(2, 3), Rat(-1, 3), Rat(-1, 3)});

  const RootSystem& f4 = root_system(RootSystemId::F4);
  CHECK(weight_of(f4, {0, 0, 0, 1}) ==
        WeightVector{Rat(1), Rat(0), Rat(0), Rat(0)});
  CHECK(weight_of(f4, {0, 0, 1, 0}) ==
        WeightVector{Rat(3, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)});
  CHECK(weight_of(f4, {1, 1, 1, 1}) ==
        WeightVector{Rat(11, 2), Rat(5, 2), Rat(3, 2), Rat(1, 2)});
}

TEST_CASE("inner product examples") {
  const RootSystem& c2 = root_system(RootSystemId::C2);
  CHECK(inner_product(c2, {Rat(1), Rat(1)}, {Rat(5), Rat(3)}) == Rat(8));
  CHECK(inner_product(c2, c2.weyl_vector, c2.weyl_vector) == Rat(5));

  const RootSystem& f4 = root_system(RootSystemId::F4);
  CHECK(inner_product(f4, f4.weyl_vector, f4.weyl_vector) == Rat(39));
  const RootSystem& b4 = root_system(RootSystemId::B4);
  CHECK(inner_product(b4, b4.weyl_vector, b4.weyl_vector) == Rat(21));
  const RootSystem& c3 = root_system(RootSystemId::C3);
  CHECK(inner_product(c3, c3.weyl_vector, c3.weyl_vector) == Rat(14));
}

TEST_CASE("dominant conjugate and levels round trip") {
  for (auto id : kAllSystems) {
    const RootSystem& rs = root_system(id);
    const DominantWeight dw(rs.rank, 1);
    const WeightVector v = weight_of(rs, dw);
    CHECK(is_dominant(rs, v));
    CHECK(levels_of(rs, v) == dw);
    // Conjugating any reflection of v back recovers v.
    for (const auto& a : rs.positive_roots)
      CHECK(dominant_conjugate(rs, reflect(rs, v, a)) == v);
  }
}

TEST_CASE("root_coefficients inverts the simple-root expansion") {
  for (auto id : kAllSystems) {
    const RootSystem& rs = root_system(id);
    for (const auto& a : rs.positive_roots) {
      auto c = root_coefficients(rs, a);
      REQUIRE(c.has_value());
      WeightVector back(rs.ambient_dim, Rat(0));
      for (size_t i = 0; i < c->size(); ++i)
        back = add(back, scaled(rs.simple_roots[i], (*c)[i]));
      CHECK(back == a);
      // Positive roots have nonnegative integer coefficients.
      for (const auto& x : *c) {
        CHECK(x >= Rat(0));
        CHECK(x.denominator() == 1);
      }
    }
  }
}

TEST_CASE("root_coefficients rejects vectors outside the root span") {
  const RootSystem& a2 = root_system(RootSystemId::A2);
  // (1,1,1) is orthogonal to the sum-zero hyperplane containing the roots.
  CHECK(!root_coefficients(a2, {Rat(1), Rat(1), Rat(1)}).has_value());
}

TEST_CASE("argument validation") {
  const RootSystem& a2 = root_system(RootSystemId::A2);
  CHECK_THROWS_AS(weight_of(a2, {1}), std::invalid_argument);
  CHECK_THROWS_AS(inner_product(a2, {Rat(1)}, {Rat(1), Rat(0), Rat(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(levels_of(a2, {Rat(1, 2), Rat(0), Rat(-1, 2)}),
                  std::invalid_argument);
}
