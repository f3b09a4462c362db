#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gpdlab/groupoid.hpp"
#include "gpdlab/rng.hpp"

using namespace gpdlab;

namespace {

// Z/2 as a one-unit groupoid: 0 = e, 1 = g, g*g = e.
FiniteGroupoid z2_groupoid() {
  return make_groupoid_dense(2, {0}, {0, 0}, {0, 0}, {0, 1}, {0, 1, 1, 0});
}

bool same_set(std::vector<ElementId> a, std::vector<ElementId> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

TEST_CASE("pair groupoid tables validate and compose correctly") {
  auto g = pair_groupoid(3);
  CHECK(g.n == 9);
  CHECK(g.units == std::vector<ElementId>{0, 1, 2});
  // canonical order puts the diagonal first
  for (int i = 0; i < 3; ++i) CHECK(pair_id(3, i, i) == i);
  ElementId a01 = pair_id(3, 0, 1), a12 = pair_id(3, 1, 2), a02 = pair_id(3, 0, 2);
  CHECK(compose(g, a01, a12) == a02);
  CHECK(g.inverse[a01] == pair_id(3, 1, 0));
  CHECK(g.range[a01] == 0);
  CHECK(g.source[a01] == 1);
  CHECK_THROWS_AS(compose(g, a01, a01), NotComposable);
  CHECK_THROWS_AS(compose(g, a01, 99), IndexError);
}

TEST_CASE("corrupted multiplication tables are rejected") {
  auto g = pair_groupoid(2);

  SUBCASE("missing product") {
    auto mul = g.mul;
    mul[pair_id(2, 0, 1) * g.n + pair_id(2, 1, 0)] = -1;
    CHECK_THROWS_AS(
        make_groupoid_dense(g.n, g.units, g.range, g.source, g.inverse, mul),
        AxiomViolation);
  }
  SUBCASE("product defined for non-composable pair") {
    auto mul = g.mul;
    mul[pair_id(2, 0, 1) * g.n + pair_id(2, 0, 1)] = 0;
    CHECK_THROWS_AS(
        make_groupoid_dense(g.n, g.units, g.range, g.source, g.inverse, mul),
        AxiomViolation);
  }
  SUBCASE("wrong product value breaks range consistency") {
    auto mul = g.mul;
    mul[pair_id(2, 0, 1) * g.n + pair_id(2, 1, 0)] = 1;  // should be unit 0
    CHECK_THROWS_AS(
        make_groupoid_dense(g.n, g.units, g.range, g.source, g.inverse, mul),
        AxiomViolation);
  }
  SUBCASE("broken involution") {
    auto inv = g.inverse;
    inv[pair_id(2, 0, 1)] = pair_id(2, 0, 1);
    CHECK_THROWS_AS(make_groupoid_dense(g.n, g.units, g.range, g.source, inv, g.mul),
                    AxiomViolation);
  }
  SUBCASE("unit not fixed by r and s") {
    auto r = g.range;
    r[0] = 1;
    CHECK_THROWS_AS(make_groupoid_dense(g.n, g.units, r, g.source, g.inverse, g.mul),
                    AxiomViolation);
  }
  SUBCASE("range value out of bounds") {
    auto r = g.range;
    r[0] = 17;
    CHECK_THROWS_AS(make_groupoid_dense(g.n, g.units, r, g.source, g.inverse, g.mul),
                    IndexError);
  }
}

TEST_CASE("triple constructor detects conflicting products") {
  auto g = pair_groupoid(2);
  std::vector<std::array<ElementId, 3>> triples;
  for (ElementId a = 0; a < g.n; ++a)
    for (ElementId b = 0; b < g.n; ++b)
      if (g.mul[a * g.n + b] != -1) triples.push_back({a, b, g.mul[a * g.n + b]});
  auto rebuilt = make_groupoid(g.n, g.units, g.range, g.source, g.inverse, triples);
  CHECK(rebuilt == g);
  triples.push_back({triples[0][0], triples[0][1], g.inverse[triples[0][2]] == triples[0][2]
                                                       ? (triples[0][2] + 1) % g.n
                                                       : g.inverse[triples[0][2]]});
  CHECK_THROWS_AS(make_groupoid(g.n, g.units, g.range, g.source, g.inverse, triples),
                  AxiomViolation);
}

TEST_CASE("orbits of a disjoint union separate the parts") {
  auto u = disjoint_union({pair_groupoid(2), pair_groupoid(1)});
  CHECK(u.g.n == 5);
  CHECK(u.g.units == std::vector<ElementId>{0, 1, 2});
  auto p = orbits(u.g);
  REQUIRE(p.orbits.size() == 2);
  CHECK(p.orbits[0] == std::vector<ElementId>{0, 1});
  CHECK(p.orbits[1] == std::vector<ElementId>{2});
  CHECK(p.orbit_of[0] == 0);
  CHECK(p.orbit_of[2] == 1);
  CHECK_FALSE(is_minimal(u.g));
}

TEST_CASE("pair groupoids are minimal, one-unit groupoids are minimal") {
  CHECK(is_minimal(pair_groupoid(4)));
  CHECK(is_minimal(z2_groupoid()));
}

TEST_CASE("invariant closure reaches the whole orbit") {
  auto g = pair_groupoid(3);
  CHECK(invariant_closure(g, {0}) == std::vector<ElementId>{0, 1, 2});
  CHECK(invariant_closure(g, {}) == std::vector<ElementId>{});
  auto u = disjoint_union({pair_groupoid(2), pair_groupoid(1)});
  CHECK(invariant_closure(u.g, {2}) == std::vector<ElementId>{2});
  CHECK(invariant_closure(u.g, {0}) == std::vector<ElementId>{0, 1});
  CHECK_THROWS_AS(invariant_closure(g, {pair_id(3, 0, 1)}), NotAUnit);
}

TEST_CASE("invariant closure is monotone and idempotent") {
  auto u = disjoint_union({pair_groupoid(3), pair_groupoid(2), z2_groupoid()});
  Rng rng(kDefaultSeed);
  const auto& g = u.g;
  for (int t = 0; t < 50; ++t) {
    std::vector<ElementId> x, y;
    for (ElementId q : g.units) {
      if (rng.coin()) x.push_back(q);
      if (rng.coin()) y.push_back(q);
    }
    auto cx = invariant_closure(g, x);
    CHECK(invariant_closure(g, cx) == cx);  // idempotent
    std::vector<ElementId> xy;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(xy));
    auto cxy = invariant_closure(g, xy);
    CHECK(std::includes(cxy.begin(), cxy.end(), cx.begin(), cx.end()));  // monotone
  }
}

TEST_CASE("minimality agrees with the exhaustive invariant-set definition") {
  std::vector<FiniteGroupoid> cases = {
      pair_groupoid(3),
      z2_groupoid(),
      disjoint_union({pair_groupoid(2), pair_groupoid(1)}).g,
      disjoint_union({z2_groupoid(), pair_groupoid(3)}).g,
  };
  for (const auto& g : cases) {
    bool brute = true;
    size_t m = g.units.size();
    for (size_t mask = 1; mask + 1 < (size_t{1} << m); ++mask) {
      std::vector<ElementId> x;
      for (size_t i = 0; i < m; ++i)
        if (mask & (size_t{1} << i)) x.push_back(g.units[i]);
      if (invariant_closure(g, x) == x) brute = false;  // proper nonempty invariant set
    }
    CHECK(is_minimal(g) == brute);
  }
}

TEST_CASE("isotropy groups and topological principality") {
  auto g = z2_groupoid();
  auto iso = isotropy(g);
  REQUIRE(iso.by_unit.size() == 1);
  CHECK(iso.by_unit[0] == std::vector<ElementId>{0, 1});
  CHECK_FALSE(iso.all_trivial);
  CHECK_FALSE(is_topologically_principal(g));
  CHECK(is_topologically_principal(pair_groupoid(4)));
  CHECK(is_group_bundle(g));
  CHECK_FALSE(is_group_bundle(pair_groupoid(2)));
}

TEST_CASE("interior isotropy carves out exactly the r = s arrows") {
  auto u = disjoint_union({pair_groupoid(2), z2_groupoid()});
  auto ii = interior_isotropy(u.g);
  // expect: the three units plus the flip arrow of the Z/2 part
  CHECK(ii.sub.n == 4);
  CHECK(ii.sub.units.size() == 3);
  CHECK(is_group_bundle(ii.sub));
  std::vector<ElementId> expected;
  for (ElementId a = 0; a < u.g.n; ++a)
    if (u.g.range[a] == u.g.source[a]) expected.push_back(a);
  CHECK(same_set(ii.to_parent, expected));
  for (ElementId i = 0; i < ii.sub.n; ++i) CHECK(ii.from_parent[ii.to_parent[i]] == i);
}

TEST_CASE("restriction rejects subsets that are not subgroupoids") {
  auto g = pair_groupoid(3);
  // missing the inverse of (0,1)
  CHECK_THROWS_AS(restrict_to_subgroupoid(g, {0, 1, pair_id(3, 0, 1)}), NotSubgroupoid);
  // missing the product (0,1)(1,0) = (0,0)
  CHECK_THROWS_AS(
      restrict_to_subgroupoid(g, {1, pair_id(3, 0, 1), pair_id(3, 1, 0)}), NotSubgroupoid);
  // units alone form the unit subgroupoid
  auto su = restrict_to_subgroupoid(g, {0, 1, 2});
  CHECK(su.sub.n == 3);
  CHECK(su.sub.units == std::vector<ElementId>{0, 1, 2});
  // a full corner: everything over {0,1}
  auto corner = restrict_to_subgroupoid(
      g, {0, 1, pair_id(3, 0, 1), pair_id(3, 1, 0)});
  CHECK(corner.sub.n == 4);
  CHECK(corner.sub == pair_groupoid(2));
}

TEST_CASE("subgroupoid closure produces valid subgroupoids from random seeds") {
  auto u = disjoint_union({pair_groupoid(3), z2_groupoid()});
  const auto& g = u.g;
  Rng rng(kDefaultSeed);
  for (int t = 0; t < 100; ++t) {
    std::vector<ElementId> seed;
    int k = 1 + rng.below(3);
    for (int i = 0; i < k; ++i) seed.push_back(rng.below(g.n));
    auto s = subgroupoid_closure(g, seed);
    auto sub = restrict_to_subgroupoid(g, s);  // must not throw
    CHECK(sub.sub.n == static_cast<ElementId>(s.size()));
    for (ElementId a : seed) CHECK(std::binary_search(s.begin(), s.end(), a));
  }
}

TEST_CASE("disjoint union keeps part arithmetic intact") {
  auto parts = std::vector<FiniteGroupoid>{z2_groupoid(), pair_groupoid(2)};
  auto u = disjoint_union(parts);
  CHECK(u.g.n == 6);
  CHECK(u.g.units.size() == 3);
  for (size_t p = 0; p < parts.size(); ++p) {
    const auto& m = u.part_to_union[p];
    for (ElementId a = 0; a < parts[p].n; ++a)
      for (ElementId b = 0; b < parts[p].n; ++b) {
        if (!parts[p].composable(a, b)) {
          CHECK_FALSE(u.g.composable(m[a], m[b]));
        } else {
          CHECK(u.g.mul[m[a] * u.g.n + m[b]] == m[parts[p].mul[a * parts[p].n + b]]);
        }
      }
  }
}
