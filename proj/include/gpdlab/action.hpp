#pragma once

#include <utility>
#include <vector>

#include "gpdlab/group.hpp"
#include "gpdlab/groupoid.hpp"

namespace gpdlab {

// Left action of a finite group on points 0..space-1, as a table act[g][q].
// make_action checks the identity law and compatibility with the group product.
struct GroupAction {
  FiniteGroup group;
  int space = 0;
  std::vector<std::vector<int>> act;

  int apply(int g, int q) const { return act[g][q]; }

  bool operator==(const GroupAction& o) const {
    return group == o.group && space == o.space && act == o.act;
  }
};

GroupAction make_action(FiniteGroup group, int space, std::vector<std::vector<int>> act);
GroupAction trivial_action(FiniteGroup group, int space);

// Every action of `group` on `space` points, i.e. every homomorphism into the
// symmetric group, enumerated exhaustively through images of a minimal generating
// set. Deterministic order (lexicographic in the flattened act table).
std::vector<GroupAction> enumerate_actions(const FiniteGroup& group, int space);

std::vector<int> fixed_point_set(const GroupAction& a, int g);
std::vector<int> stabilizer(const GroupAction& a, int q);
// elements fixing every point of v
std::vector<int> set_stabilizer(const GroupAction& a, const std::vector<int>& v);
// union of set stabilizers over neighborhoods of q; with discrete points the
// smallest neighborhood is {q} itself
std::vector<int> interior_stabilizer(const GroupAction& a, int q);

// The action groupoid: elements (g, q) with s = q, r = gq, inverse (g^-1, gq),
// and (g1, g2 q) (g2, q) = (g1 g2, q). Canonical ids: units (e, q) get id q;
// the other pairs follow in (group index, point) order.
struct TransformationGroupoid {
  GroupAction action;
  FiniteGroupoid g;
  std::vector<std::pair<int, int>> to_pair;  // id -> (g, q)
  std::vector<std::vector<ElementId>> to_id; // [g][q] -> id
};

TransformationGroupoid transformation_groupoid(const GroupAction& a);

}  // namespace gpdlab
