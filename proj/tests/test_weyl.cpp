#include "doctest.h"
#include "quotrep/weyl.hpp"

#include <random>

using namespace quotrep;

namespace {

std::vector<SimpleType> small_types() {
  return {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2},
          {Family::B, 3}, {Family::C, 3}, {Family::G, 2}, {Family::D, 4}};
}

Weight random_weight(std::mt19937& gen, int rank, int lo, int hi) {
  std::uniform_int_distribution<int> pick(lo, hi);
  std::vector<int> c(rank);
  for (int& v : c) v = pick(gen);
  return Weight(std::move(c));
}

}  // namespace

TEST_CASE("rho is the all-ones weight and half the sum of positive roots") {
  CHECK(rho(build({Family::A, 1})) == Weight{1});
  CHECK(rho(build({Family::B, 3})) == Weight{1, 1, 1});
  for (const SimpleType& t : small_types()) {
    RootSystem rs = build(t);
    std::vector<int> sum(rs.rank, 0);
    for (const PositiveRoot& r : rs.positive_roots)
      for (int i = 0; i < rs.rank; ++i) sum[i] += r.root_coords[i];
    RootVector rr = weight_to_root(rs, rho(rs));
    for (int i = 0; i < rs.rank; ++i) CHECK(rr.r[i] == Rat(sum[i], 2));
  }
  // B2: rho has epsilon-coordinates (3/2, 1/2), i.e. root coordinates (3/2, 2)
  RootSystem b2 = build({Family::B, 2});
  RootVector rr = weight_to_root(b2, rho(b2));
  CHECK(rr.r[0] == Rat(3, 2));
  CHECK(rr.r[1] == Rat(2));
}

TEST_CASE("simple reflections") {
  RootSystem b2 = build({Family::B, 2});
  CHECK(reflect(b2, 2, Weight{3, -1}) == Weight{2, 1});
  CHECK(reflect(b2, 1, Weight::zero(2)) == Weight::zero(2));
  CHECK_THROWS_AS(reflect(b2, 0, Weight{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(reflect(b2, 3, Weight{1, 1}), std::invalid_argument);
  std::mt19937 gen(3);
  for (const SimpleType& t : small_types()) {
    RootSystem rs = build(t);
    for (int trial = 0; trial < 50; ++trial) {
      Weight nu = random_weight(gen, rs.rank, -5, 5);
      for (int i = 1; i <= rs.rank; ++i) CHECK(reflect(rs, i, reflect(rs, i, nu)) == nu);
    }
  }
}

TEST_CASE("dominantize") {
  RootSystem b2 = build({Family::B, 2});
  SUBCASE("already dominant") {
    SignedDominant sd = dominantize(b2, Weight{2, 1});
    CHECK(sd.weight == Weight{2, 1});
    CHECK(sd.sign == 1);
    CHECK(sd.word.empty());
  }
  SUBCASE("single reflection") {
    SignedDominant sd = dominantize(b2, Weight{3, -1});
    CHECK(sd.weight == Weight{2, 1});
    CHECK(sd.sign == -1);
    CHECK(sd.word == std::vector<int>{2});
  }
  SUBCASE("wall cases have sign zero") {
    CHECK(dominantize(b2, Weight{0, 1}).sign == 0);
    CHECK(dominantize(b2, Weight{0, -1}).sign == 0);
    // (-1,2) is in the orbit of the wall weight (1,0)
    SignedDominant sd = dominantize(b2, Weight{-1, 2});
    CHECK(sd.sign == 0);
    CHECK(sd.weight == Weight{1, 0});
  }
  SUBCASE("result is always dominant") {
    std::mt19937 gen(5);
    for (const SimpleType& t : small_types()) {
      RootSystem rs = build(t);
      for (int trial = 0; trial < 60; ++trial) {
        Weight nu = random_weight(gen, rs.rank, -6, 6);
        CHECK(dominantize(rs, nu).weight.dominant());
      }
    }
  }
}

TEST_CASE("orbit property: the recorded word takes the input to its dominant form") {
  std::mt19937 gen(17);
  int checked = 0;
  while (checked < 500) {
    for (const SimpleType& t : small_types()) {
      RootSystem rs = build(t);
      Weight nu = random_weight(gen, rs.rank, -8, 8);
      SignedDominant sd = dominantize(rs, nu);
      CHECK(sd.weight.dominant());
      CHECK(apply_reflections(rs, sd.word, nu) == sd.weight);
      ++checked;
    }
  }
}

TEST_CASE("dual weights") {
  RootSystem a2 = build({Family::A, 2});
  CHECK(dual_weight(a2, Weight{1, 0}) == Weight{0, 1});
  CHECK(dual_weight(a2, Weight{0, 0}) == Weight{0, 0});
  CHECK_THROWS_AS(dual_weight(a2, Weight{-1, 0}), std::invalid_argument);

  std::mt19937 gen(23);
  for (const SimpleType& t : small_types()) {
    RootSystem rs = build(t);
    for (int trial = 0; trial < 200; ++trial) {
      Weight lam = random_weight(gen, rs.rank, 0, 6);
      Weight dual = dual_weight(rs, lam);
      CHECK(dual.dominant());
      CHECK(dual_weight(rs, dual) == lam);
      if (t.family == Family::B) CHECK(dual == lam);  // w_0 = -1 in type B
    }
  }
}

TEST_CASE("weyl group enumeration") {
  CHECK(weyl_elements(build({Family::A, 1})).size() == 2);
  CHECK(weyl_elements(build({Family::B, 2})).size() == 8);
  CHECK(weyl_elements(build({Family::B, 3})).size() == 48);
  CHECK(weyl_elements(build({Family::G, 2})).size() == 12);
  CHECK(weyl_elements(build({Family::A, 3})).size() == 24);
  CHECK(weyl_elements(build({Family::D, 4})).size() == 192);
  CHECK(weyl_elements(build({Family::F, 4})).size() == 1152);

  CHECK(weyl_group_order({Family::B, 8}) == Int(10321920));
  CHECK_THROWS_AS(weyl_elements(build({Family::B, 8})), WeylCapExceeded);
  CHECK_THROWS_AS(weyl_elements(build({Family::A, 2}), 5), WeylCapExceeded);

  RootSystem b3 = build({Family::B, 3});
  auto elements = weyl_elements(b3);
  // words act faithfully on the regular orbit of rho
  std::unordered_set<std::string> images;
  int sign_sum = 0;
  for (const WeylElement& w : elements) {
    CHECK(w.sign == (w.word.size() % 2 == 0 ? 1 : -1));
    sign_sum += w.sign;
    images.insert(to_string(apply_reflections(b3, w.word, rho(b3))));
  }
  CHECK(images.size() == elements.size());
  CHECK(sign_sum == 0);
}

TEST_CASE("sign consistency of dominantize across the group") {
  std::mt19937 gen(29);
  for (const SimpleType& t : {SimpleType{Family::A, 2}, SimpleType{Family::B, 2},
                              SimpleType{Family::B, 3}, SimpleType{Family::G, 2}}) {
    RootSystem rs = build(t);
    auto elements = weyl_elements(rs);
    int used = 0;
    while (used < 5) {
      Weight nu = random_weight(gen, rs.rank, -6, 6);
      SignedDominant base = dominantize(rs, nu);
      if (base.sign == 0) continue;
      ++used;
      for (const WeylElement& w : elements) {
        Weight moved = apply_reflections(rs, w.word, nu);
        SignedDominant sd = dominantize(rs, moved);
        CHECK(sd.weight == base.weight);
        CHECK(sd.sign == w.sign * base.sign);
      }
    }
  }
}
