#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gpdlab/action.hpp"
#include "gpdlab/group.hpp"
#include "gpdlab/rng.hpp"

using namespace gpdlab;

namespace {

// C4 acting on Z2 through the quotient map g -> g mod 2
GroupAction c4_on_two_points() {
  auto c4 = cyclic_group(4);
  std::vector<std::vector<int>> act(4, std::vector<int>(2));
  for (int g = 0; g < 4; ++g)
    for (int q = 0; q < 2; ++q) act[g][q] = (q + g) % 2;
  return make_action(c4, 2, act);
}

}  // namespace

TEST_CASE("group presets have the expected structure") {
  auto c4 = cyclic_group(4);
  CHECK(c4.order == 4);
  CHECK(c4.identity == 0);
  CHECK(c4.inv(1) == 3);
  CHECK(c4.mul(2, 3) == 1);

  auto v4 = klein_four_group();
  for (int a = 0; a < 4; ++a) CHECK(v4.inv(a) == a);

  auto d4 = dihedral_group(4);
  CHECK(d4.order == 8);
  // reflections invert rotations: s r s^-1 = r^-1
  int r = 1, s = 4;
  CHECK(d4.mul(d4.mul(s, r), d4.inv(s)) == d4.inv(r));
  bool abelian = true;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      if (d4.mul(a, b) != d4.mul(b, a)) abelian = false;
  CHECK_FALSE(abelian);

  CHECK(symmetric_group(3).order == 6);
  CHECK(symmetric_group(4).order == 24);
  CHECK_THROWS_AS(symmetric_group(5), IndexError);
  CHECK_THROWS_AS(dihedral_group(2), IndexError);
}

TEST_CASE("group_by_name parses the preset family") {
  CHECK(group_by_name("C6")->order == 6);
  CHECK(group_by_name("Z6")->order == 6);
  CHECK(group_by_name("V4")->order == 4);
  CHECK(group_by_name("D3")->order == 6);
  CHECK(group_by_name("S4")->order == 24);
  CHECK_FALSE(group_by_name("Q8").has_value());
  CHECK_FALSE(group_by_name("D2").has_value());
  CHECK_FALSE(group_by_name("").has_value());
}

TEST_CASE("broken Cayley tables are rejected") {
  // 2x2 table without identity row/column symmetry
  CHECK_THROWS_AS(make_group({{0, 0}, {0, 0}}, "bad"), AxiomViolation);
  // non-associative loop of order 5 (Latin square with identity)
  std::vector<std::vector<int>> loop = {
      {0, 1, 2, 3, 4},
      {1, 0, 3, 4, 2},
      {2, 4, 0, 1, 3},
      {3, 2, 4, 0, 1},
      {4, 3, 1, 2, 0},
  };
  CHECK_THROWS_AS(make_group(loop, "loop5"), AxiomViolation);
  CHECK_THROWS_AS(make_group({{0, 1}, {1, 2}}, "range"), IndexError);
}

TEST_CASE("group groupoid puts the identity at id 0") {
  auto gg = group_groupoid(symmetric_group(3));
  CHECK(gg.g.n == 6);
  CHECK(gg.g.units == std::vector<ElementId>{0});
  CHECK(gg.to_group[0] == 0);  // lexicographic first permutation is the identity
  for (int i = 0; i < 6; ++i) CHECK(gg.from_group[gg.to_group[i]] == i);
  CHECK(is_group_bundle(gg.g));
  CHECK(is_minimal(gg.g));
  CHECK_FALSE(is_topologically_principal(gg.g));
}

TEST_CASE("group bundles are disjoint unions of fibers with units first") {
  auto b = make_group_bundle({cyclic_group(2), cyclic_group(3)});
  CHECK(b.g.n == 5);
  CHECK(b.g.units == std::vector<ElementId>{0, 1});
  CHECK(is_group_bundle(b.g));
  CHECK_FALSE(is_minimal(b.g));
  // fiber arithmetic survives the embedding
  auto c3 = cyclic_group(3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      CHECK(b.g.mul[b.fiber_to_bundle[1][x] * b.g.n + b.fiber_to_bundle[1][y]] ==
            b.fiber_to_bundle[1][c3.mul(x, y)]);
}

TEST_CASE("action validation catches broken tables") {
  auto c2 = cyclic_group(2);
  CHECK_THROWS_AS(make_action(c2, 2, {{1, 0}, {0, 1}}), AxiomViolation);  // identity moves
  CHECK_THROWS_AS(make_action(c2, 2, {{0, 1}, {0, 0}}), AxiomViolation);  // not compatible
  CHECK_THROWS_AS(make_action(c2, 2, {{0, 1}, {0, 2}}), IndexError);
  CHECK_NOTHROW(make_action(c2, 2, {{0, 1}, {1, 0}}));
}

TEST_CASE("fixed points, stabilizers, and interior stabilizers") {
  auto a = c4_on_two_points();
  CHECK(fixed_point_set(a, 0) == std::vector<int>{0, 1});
  CHECK(fixed_point_set(a, 1).empty());
  CHECK(fixed_point_set(a, 2) == std::vector<int>{0, 1});
  CHECK(stabilizer(a, 0) == std::vector<int>{0, 2});
  CHECK(stabilizer(a, 1) == std::vector<int>{0, 2});
  CHECK(interior_stabilizer(a, 0) == stabilizer(a, 0));
  CHECK(set_stabilizer(a, {0, 1}) == std::vector<int>{0, 2});
  CHECK(set_stabilizer(a, {}) == std::vector<int>{0, 1, 2, 3});

  // natural S3 action: stabilizer of point 0 is {id, (1 2)}, lex ids 0 and 1
  auto s3 = symmetric_group(3);
  auto nat = make_action(s3, 3,
                         [&] {
                           std::vector<std::vector<int>> act(6, std::vector<int>(3));
                           // reconstruct each permutation by where it sends the points
                           // through the regular enumeration used by symmetric_group
                           std::vector<int> p{0, 1, 2};
                           int i = 0;
                           do {
                             act[i++] = p;
                           } while (std::next_permutation(p.begin(), p.end()));
                           return act;
                         }());
  CHECK(stabilizer(nat, 0) == std::vector<int>{0, 1});
  CHECK(fixed_point_set(nat, 1) == std::vector<int>{0});
}

TEST_CASE("enumerate_actions matches hand counts") {
  CHECK(enumerate_actions(cyclic_group(2), 3).size() == 4);   // e + three transpositions
  CHECK(enumerate_actions(cyclic_group(3), 3).size() == 3);   // e + two 3-cycles
  CHECK(enumerate_actions(cyclic_group(4), 4).size() == 16);  // 1 + 6 + 3 + 6 elements with g^4 = e
  CHECK(enumerate_actions(klein_four_group(), 2).size() == 4);
  CHECK(enumerate_actions(cyclic_group(1), 3).size() == 1);
  // the list is deterministic
  auto a1 = enumerate_actions(symmetric_group(3), 3);
  auto a2 = enumerate_actions(symmetric_group(3), 3);
  REQUIRE(a1.size() == a2.size());
  for (size_t i = 0; i < a1.size(); ++i) CHECK(a1[i] == a2[i]);
  // every enumerated action validates and they are pairwise distinct
  for (size_t i = 0; i + 1 < a1.size(); ++i) CHECK_FALSE(a1[i] == a1[i + 1]);
}

TEST_CASE("transformation groupoid structure matches the action") {
  auto a = c4_on_two_points();
  auto t = transformation_groupoid(a);
  CHECK(t.g.n == 8);
  CHECK(t.g.units == std::vector<ElementId>{0, 1});
  CHECK(t.to_id[0][0] == 0);
  CHECK(t.to_id[0][1] == 1);

  // spot the product rule (g1, g2 q)(g2, q) = (g1 g2, q) across all pairs
  for (int g1 = 0; g1 < 4; ++g1)
    for (int g2 = 0; g2 < 4; ++g2)
      for (int q = 0; q < 2; ++q) {
        ElementId lhs = t.to_id[g1][a.apply(g2, q)];
        ElementId rhs = t.to_id[g2][q];
        CHECK(compose(t.g, lhs, rhs) == t.to_id[a.group.mul(g1, g2)][q]);
      }
  // inverse rule (g, q)^-1 = (g^-1, gq)
  for (int g = 0; g < 4; ++g)
    for (int q = 0; q < 2; ++q)
      CHECK(t.g.inverse[t.to_id[g][q]] == t.to_id[a.group.inv(g)][a.apply(g, q)]);

  // isotropy at q is the stabilizer
  auto iso = isotropy(t.g);
  for (size_t i = 0; i < iso.units.size(); ++i)
    CHECK(iso.by_unit[i].size() == stabilizer(a, static_cast<int>(i)).size());
  CHECK_FALSE(is_topologically_principal(t.g));
  CHECK(is_minimal(t.g));  // the action is transitive
}

TEST_CASE("free transitive actions give pair groupoids") {
  auto c4 = cyclic_group(4);
  std::vector<std::vector<int>> act(4, std::vector<int>(4));
  for (int g = 0; g < 4; ++g)
    for (int q = 0; q < 4; ++q) act[g][q] = c4.mul(g, q);
  auto t = transformation_groupoid(make_action(c4, 4, act));
  CHECK(t.g.n == 16);
  CHECK(is_minimal(t.g));
  CHECK(is_topologically_principal(t.g));
  // swap action of C2 is the pair groupoid on 2 points via (g, q) -> (gq, q)
  auto sw = transformation_groupoid(make_action(cyclic_group(2), 2, {{0, 1}, {1, 0}}));
  auto p2 = pair_groupoid(2);
  auto iso = [&](ElementId e) {
    auto [g, q] = sw.to_pair[e];
    return pair_id(2, sw.action.apply(g, q), q);
  };
  for (ElementId a = 0; a < 4; ++a)
    for (ElementId b = 0; b < 4; ++b) {
      REQUIRE(sw.g.composable(a, b) == p2.composable(iso(a), iso(b)));
      if (sw.g.composable(a, b))
        CHECK(iso(sw.g.mul[a * 4 + b]) == p2.mul[iso(a) * 4 + iso(b)]);
    }
}

TEST_CASE("trivial actions give group bundles") {
  auto t = transformation_groupoid(trivial_action(cyclic_group(3), 2));
  CHECK(is_group_bundle(t.g));
  CHECK_FALSE(is_minimal(t.g));
  auto p = orbits(t.g);
  CHECK(p.orbits.size() == 2);
}
