#include "doctest.h"
#include "quotrep/classify.hpp"

#include <random>

using namespace quotrep;

namespace {

std::vector<Weight> dominant_box(int rank, int max_coord) {
  std::vector<Weight> out;
  std::vector<int> c(rank, 0);
  for (;;) {
    out.emplace_back(c);
    int i = 0;
    while (i < rank && c[i] == max_coord) c[i++] = 0;
    if (i == rank) break;
    ++c[i];
  }
  return out;
}

}  // namespace

TEST_CASE("dominant-root scan") {
  CHECK_THROWS_AS(scan_dominant_roots(1), std::invalid_argument);

  auto hits = scan_dominant_roots(8);
  REQUIRE(hits.size() == 7);  // exactly B_2 .. B_8
  for (const DominantRootHit& h : hits) {
    CHECK(h.type.family == Family::B);
    CHECK(h.root_coords == std::vector<int>(h.type.rank, 1));  // alpha_1 + ... + alpha_n
    Weight omega1 = Weight::zero(h.type.rank);
    omega1.c[0] = 1;
    CHECK(h.weight_coords == omega1);
  }
  for (int n = 2; n <= 8; ++n) {
    bool found = false;
    for (const DominantRootHit& h : hits) found = found || h.type.rank == n;
    CHECK(found);
  }

  auto small = scan_dominant_roots(3);
  REQUIRE(small.size() == 2);
  CHECK(small[0].type.rank + small[1].type.rank == 5);
}

TEST_CASE("classification of the invariant Quot point") {
  Group b2 = build_group({{{Family::B, 2}}});
  const Weight omega1{1, 0}, omega2{0, 1};

  SUBCASE("the pure spin case is the double point") {
    QuotClassification r = classify_quot(b2, {omega1}, {omega2});
    CHECK(r.kind == QuotKind::DoublePoint);
    CHECK(r.tangent_dim == 1);
    REQUIRE(r.witness_factor.has_value());
    CHECK(*r.witness_factor == 1);
  }
  SUBCASE("vanishing short-coroot pairing gives a reduced point") {
    QuotClassification r = classify_quot(b2, {omega1}, {omega1});
    CHECK(r.kind == QuotKind::ReducedPoint);
    CHECK(r.tangent_dim == 0);
    CHECK_FALSE(r.witness_factor.has_value());
  }
  SUBCASE("other highest weights on B2 are reduced") {
    CHECK(classify_quot(b2, {omega2}, {omega2}).kind == QuotKind::ReducedPoint);
    CHECK(classify_quot(b2, {Weight{2, 0}}, {omega2}).kind == QuotKind::ReducedPoint);
    CHECK(classify_quot(b2, {Weight{1, 1}}, {omega2}).kind == QuotKind::ReducedPoint);
  }
  SUBCASE("lam = 0 is a reduced point") {
    CHECK(classify_quot(b2, {Weight::zero(2)}, {omega2}).kind == QuotKind::ReducedPoint);
  }
  SUBCASE("spin factor times a spectator factor") {
    Group g = build_group({{{Family::B, 2}, {Family::A, 1}}});
    QuotClassification r = classify_quot(g, {omega1, Weight{0}}, {omega2, Weight{1}});
    CHECK(r.kind == QuotKind::DoublePoint);
    CHECK(*r.witness_factor == 1);
    Group g2 = build_group({{{Family::A, 1}, {Family::B, 2}}});
    QuotClassification r2 = classify_quot(g2, {Weight{0}, omega1}, {Weight{1}, omega2});
    CHECK(r2.kind == QuotKind::DoublePoint);
    CHECK(*r2.witness_factor == 2);
  }
  SUBCASE("lam must vanish on every other factor") {
    Group g = build_group({{{Family::B, 2}, {Family::A, 1}}});
    CHECK(classify_quot(g, {omega1, Weight{2}}, {omega2, Weight{1}}).kind ==
          QuotKind::ReducedPoint);
    CHECK(classify_quot(g, {omega1, Weight{1}}, {omega2, Weight{1}}).kind ==
          QuotKind::ReducedPoint);
  }
  SUBCASE("the rank-one spin case needs lam = 2 omega1") {
    Group a1 = build_group({{{Family::A, 1}}});
    CHECK(classify_quot(a1, {Weight{2}}, {Weight{1}}).kind == QuotKind::DoublePoint);
    CHECK(classify_quot(a1, {Weight{2}}, {Weight{0}}).kind == QuotKind::ReducedPoint);
    CHECK(classify_quot(a1, {Weight{1}}, {Weight{1}}).kind == QuotKind::ReducedPoint);
    CHECK(classify_quot(a1, {Weight{1}}, {Weight{2}}).kind == QuotKind::ReducedPoint);
    CHECK(classify_quot(a1, {Weight{4}}, {Weight{1}}).kind == QuotKind::ReducedPoint);
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(classify_quot(b2, {Weight{1, 0, 0}}, {omega2}), std::invalid_argument);
    CHECK_THROWS_AS(classify_quot(b2, {omega1}, {Weight{-1, 0}}), std::invalid_argument);
    Group g = build_group({{{Family::B, 2}, {Family::A, 1}}});
    CHECK_THROWS_AS(classify_quot(g, {omega1}, {omega2, Weight{1}}), std::invalid_argument);
  }
}

TEST_CASE("three-way agreement on pure type B sweeps") {
  for (int n : {2, 3}) {
    Group g = build_group({{{Family::B, n}}});
    std::vector<int> c(n, 0);
    c[0] = 1;
    const Weight omega1(c);
    for (const Weight& mu : dominant_box(n, 2)) {
      QuotClassification r = classify_quot(g, {omega1}, {mu});
      Int bound = tangent_upper_bound(g, {omega1}, {mu});
      const bool pairing_nonzero = mu.c.back() >= 1;
      CHECK((r.kind == QuotKind::DoublePoint) == pairing_nonzero);
      CHECK((bound == 1) == pairing_nonzero);
      CHECK((r.kind == QuotKind::DoublePoint) == (bound == 1));
      CHECK(r.tangent_dim == (r.kind == QuotKind::DoublePoint ? 1 : 0));
    }
  }
}

TEST_CASE("a spectator factor never changes the classification") {
  std::mt19937 gen(67);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> pick_type(0, 3);
  const std::vector<SimpleType> pool = {
      {Family::A, 1}, {Family::A, 2}, {Family::B, 2}, {Family::B, 3}};
  for (int trial = 0; trial < 50; ++trial) {
    SimpleType t1 = pool[pick_type(gen)];
    SimpleType t2 = pool[pick_type(gen)];
    Group g1 = build_group({{t1}});
    Group g12 = build_group({{t1, t2}});
    std::vector<int> l1(t1.rank), m1(t1.rank), m2(t2.rank);
    for (int& v : l1) v = pick(gen);
    for (int& v : m1) v = pick(gen);
    for (int& v : m2) v = pick(gen);
    QuotClassification lone = classify_quot(g1, {Weight(l1)}, {Weight(m1)});
    QuotClassification prod =
        classify_quot(g12, {Weight(l1), Weight::zero(t2.rank)}, {Weight(m1), Weight(m2)});
    CHECK(lone.kind == prod.kind);
    CHECK(lone.tangent_dim == prod.tangent_dim);
  }
}
