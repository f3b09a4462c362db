#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpdlab/groupoid.hpp"

namespace gpdlab {

// A finite group given by its Cayley table. make_group finds the identity and
// inverses and checks associativity exhaustively.
struct FiniteGroup {
  int order = 0;
  std::vector<int> table;  // flat order*order
  int identity = 0;
  std::vector<int> inverse;
  std::string name;

  int mul(int a, int b) const { return table[a * order + b]; }
  int inv(int a) const { return inverse[a]; }

  bool operator==(const FiniteGroup& o) const {
    return order == o.order && table == o.table;
  }
};

FiniteGroup make_group(const std::vector<std::vector<int>>& table, std::string name);

FiniteGroup cyclic_group(int n);     // C1, C2, ...
FiniteGroup dihedral_group(int n);   // order 2n, n >= 3
FiniteGroup symmetric_group(int n);  // n <= 4
FiniteGroup klein_four_group();      // V4

// Accepts C<n> (alias Z<n>), D<n> with n >= 3, S<n> with n <= 4, V4.
std::optional<FiniteGroup> group_by_name(std::string_view name);

// The group as a one-unit groupoid. Canonical ids put the identity at 0; the
// remaining elements keep their group order. to_group / from_group translate.
struct GroupGroupoid {
  FiniteGroupoid g;
  std::vector<int> to_group;         // groupoid id -> group index
  std::vector<ElementId> from_group; // group index -> groupoid id
};

GroupGroupoid group_groupoid(const FiniteGroup& grp);

// Disjoint union of one-unit group groupoids: a group bundle with one point per
// fiber. Point p's unit gets id p; fiber_to_bundle[p][x] is the bundle id of
// group element x over point p.
struct GroupBundle {
  FiniteGroupoid g;
  std::vector<std::vector<ElementId>> fiber_to_bundle;
};

GroupBundle make_group_bundle(const std::vector<FiniteGroup>& fibers);

}  // namespace gpdlab
