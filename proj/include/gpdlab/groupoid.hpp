#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpdlab/errors.hpp"

namespace gpdlab {

using ElementId = std::int32_t;

// A finite groupoid on elements 0..n-1 with explicit range/source/inverse maps and
// a partial multiplication table (-1 where undefined). Instances are produced by
// make_groupoid / the preset constructors, which validate every axiom exhaustively;
// downstream code relies on that and never re-checks.
struct FiniteGroupoid {
  ElementId n = 0;
  std::vector<ElementId> units;    // sorted ascending
  std::vector<ElementId> range;    // r[a]
  std::vector<ElementId> source;   // s[a]
  std::vector<ElementId> inverse;  // inv[a]
  std::vector<ElementId> mul;      // flat n*n table, mul[a*n+b] = ab or -1

  bool is_unit(ElementId a) const;
  bool composable(ElementId a, ElementId b) const { return source[a] == range[b]; }
  ElementId product_unchecked(ElementId a, ElementId b) const { return mul[a * n + b]; }

  // elements with source u, ascending (the fiber the regular representation acts on)
  std::vector<ElementId> source_fiber(ElementId u) const;
  // elements with range u, ascending
  std::vector<ElementId> range_fiber(ElementId u) const;
  // u G u, ascending
  std::vector<ElementId> isotropy_at(ElementId u) const;

  bool operator==(const FiniteGroupoid&) const = default;
};

// Validates all tables and every axiom (involution, matching of composability with
// s(a)=r(b), range/source of products, associativity over all composable triples,
// unit laws, and that `units` is exactly the image of r and s). Throws
// AxiomViolation / IndexError with a witness in the message.
FiniteGroupoid make_groupoid(ElementId n, std::vector<ElementId> units,
                             std::vector<ElementId> range, std::vector<ElementId> source,
                             std::vector<ElementId> inverse,
                             const std::vector<std::array<ElementId, 3>>& products);

// Same, but with a pre-flattened n*n multiplication table.
FiniteGroupoid make_groupoid_dense(ElementId n, std::vector<ElementId> units,
                                   std::vector<ElementId> range, std::vector<ElementId> source,
                                   std::vector<ElementId> inverse, std::vector<ElementId> mul);

// Product of two elements; NotComposable when s(a) != r(b), IndexError when out of range.
ElementId compose(const FiniteGroupoid& g, ElementId a, ElementId b);

// Partition of the unit space into orbits, where u ~ v iff some arrow has source u
// and range v. orbit_of is indexed by element id (-1 on non-units); orbits are
// sorted ascending and listed by their smallest unit.
struct OrbitPartition {
  std::vector<int> orbit_of;
  std::vector<std::vector<ElementId>> orbits;
};

OrbitPartition orbits(const FiniteGroupoid& g);

// Least invariant superset of X: closure under X -> X u r(s^{-1}(X)).
// X must consist of units (NotAUnit otherwise). Result sorted ascending.
std::vector<ElementId> invariant_closure(const FiniteGroupoid& g,
                                         const std::vector<ElementId>& x);

// True iff every nonempty invariant set of units is all of them (single orbit).
bool is_minimal(const FiniteGroupoid& g);

struct IsotropyData {
  std::vector<ElementId> units;                 // copy of g.units, same order
  std::vector<std::vector<ElementId>> by_unit;  // by_unit[i] = units[i] G units[i], ascending
  bool all_trivial = false;
};

IsotropyData isotropy(const FiniteGroupoid& g);

// True iff every isotropy group is just its unit.
bool is_topologically_principal(const FiniteGroupoid& g);

bool is_group_bundle(const FiniteGroupoid& g);
void require_group_bundle(const FiniteGroupoid& g, const std::string& where);

// A groupoid carved out of a parent along an element subset, re-indexed to
// 0..|S|-1 in the parent's canonical order with units first.
struct SubGroupoid {
  FiniteGroupoid sub;
  std::vector<ElementId> to_parent;    // sub id -> parent id
  std::vector<ElementId> from_parent;  // parent id -> sub id, -1 outside S
};

// S must be closed under inversion and composition and contain r,s of its members
// (NotSubgroupoid otherwise; duplicates are ignored).
SubGroupoid restrict_to_subgroupoid(const FiniteGroupoid& g, std::vector<ElementId> s);

// Smallest subgroupoid containing the seed elements (always exists).
std::vector<ElementId> subgroupoid_closure(const FiniteGroupoid& g,
                                           std::vector<ElementId> seed);

// Elements gamma with r(gamma) = s(gamma). With the discrete topology every point
// is interior, so this is the interior of the isotropy bundle as well.
SubGroupoid interior_isotropy(const FiniteGroupoid& g);

// Presets ---------------------------------------------------------------------

// Pair groupoid on {0..m-1}: arrows (i,j), r=(i), s=(j), (i,j)(j,k)=(i,k).
// Canonical ids: diagonal (the units) first, then off-diagonal pairs in
// lexicographic order. pair_id recovers the id of (i,j).
FiniteGroupoid pair_groupoid(int m);
ElementId pair_id(int m, int i, int j);

// All parts side by side, units of every part first (parts in order, unit order
// preserved inside a part), then the remaining arrows in the same part order.
struct DisjointUnion {
  FiniteGroupoid g;
  // offsets[p] maps part p's element id to the union id
  std::vector<std::vector<ElementId>> part_to_union;
};

DisjointUnion disjoint_union(const std::vector<FiniteGroupoid>& parts);

}  // namespace gpdlab
