#include "gpdlab/action.hpp"

#include <algorithm>
#include <set>

namespace gpdlab {
namespace {

using Perm = std::vector<int>;

Perm compose_perm(const Perm& p, const Perm& q) {
  Perm out(p.size());
  for (size_t x = 0; x < p.size(); ++x) out[x] = p[q[x]];
  return out;
}

std::vector<Perm> all_perms(int m) {
  std::vector<Perm> out;
  Perm p(m);
  for (int i = 0; i < m; ++i) p[i] = i;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// smallest generating set, searched in lexicographic subset order; every group of
// the sizes we handle is generated by at most three elements
std::vector<int> generating_set(const FiniteGroup& g) {
  int k = g.order;
  auto generates = [&](const std::vector<int>& gens) {
    std::vector<char> in(k, 0);
    std::vector<int> work{g.identity};
    in[g.identity] = 1;
    for (size_t i = 0; i < work.size(); ++i)
      for (int x : gens) {
        int y = g.mul(work[i], x);
        if (!in[y]) {
          in[y] = 1;
          work.push_back(y);
        }
      }
    return static_cast<int>(work.size()) == k;
  };
  if (generates({})) return {};
  for (int a = 0; a < k; ++a)
    if (generates({a})) return {a};
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (generates({a, b})) return {a, b};
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c)
        if (generates({a, b, c})) return {a, b, c};
  throw BoundTooLarge("generating_set: group needs more than three generators");
}

}  // namespace

GroupAction make_action(FiniteGroup group, int space, std::vector<std::vector<int>> act) {
  if (space < 0) throw IndexError("action: negative point count");
  if (act.size() != static_cast<size_t>(group.order))
    throw IndexError("action: table must have one row per group element");
  for (const auto& row : act) {
    if (row.size() != static_cast<size_t>(space))
      throw IndexError("action: row length does not match point count");
    for (int q : row)
      if (q < 0 || q >= space)
        throw IndexError("action: image point " + std::to_string(q) + " out of range");
  }
  for (int q = 0; q < space; ++q)
    if (act[group.identity][q] != q)
      throw AxiomViolation("action: identity moves point " + std::to_string(q));
  for (int a = 0; a < group.order; ++a)
    for (int b = 0; b < group.order; ++b)
      for (int q = 0; q < space; ++q)
        if (act[a][act[b][q]] != act[group.mul(a, b)][q])
          throw AxiomViolation("action: compatibility fails at g" + std::to_string(a) +
                               " g" + std::to_string(b) + " q" + std::to_string(q));
  GroupAction out;
  out.group = std::move(group);
  out.space = space;
  out.act = std::move(act);
  return out;
}

GroupAction trivial_action(FiniteGroup group, int space) {
  std::vector<std::vector<int>> act(group.order, std::vector<int>(space));
  for (auto& row : act)
    for (int q = 0; q < space; ++q) row[q] = q;
  return make_action(std::move(group), space, std::move(act));
}

std::vector<GroupAction> enumerate_actions(const FiniteGroup& group, int space) {
  auto perms = all_perms(space);
  auto gens = generating_set(group);
  int k = group.order;

  std::set<std::vector<int>> seen;  // flattened act tables, lexicographic
  std::vector<GroupAction> out;

  std::vector<size_t> choice(gens.size(), 0);
  for (;;) {
    // extend the generator images over the whole group by a closure walk
    std::vector<Perm> phi(k);
    std::vector<char> have(k, 0);
    phi[group.identity] = perms[0];
    have[group.identity] = 1;
    std::vector<int> work{group.identity};
    for (size_t i = 0; i < work.size(); ++i)
      for (size_t t = 0; t < gens.size(); ++t) {
        int y = group.mul(work[i], gens[t]);
        if (!have[y]) {
          phi[y] = compose_perm(phi[work[i]], perms[choice[t]]);
          have[y] = 1;
          work.push_back(y);
        }
      }

    bool hom = true;
    for (int a = 0; a < k && hom; ++a)
      for (int b = 0; b < k && hom; ++b)
        if (phi[group.mul(a, b)] != compose_perm(phi[a], phi[b])) hom = false;

    if (hom) {
      std::vector<int> flat;
      flat.reserve(static_cast<size_t>(k) * space);
      for (int a = 0; a < k; ++a) flat.insert(flat.end(), phi[a].begin(), phi[a].end());
      seen.insert(std::move(flat));
    }

    size_t t = 0;
    while (t < choice.size() && ++choice[t] == perms.size()) choice[t++] = 0;
    if (t == choice.size()) break;
  }

  for (const auto& flat : seen) {
    std::vector<std::vector<int>> act(k, std::vector<int>(space));
    for (int a = 0; a < k; ++a)
      for (int q = 0; q < space; ++q) act[a][q] = flat[a * space + q];
    out.push_back(make_action(group, space, std::move(act)));
  }
  return out;
}

std::vector<int> fixed_point_set(const GroupAction& a, int g) {
  if (g < 0 || g >= a.group.order) throw IndexError("fixed_point_set: bad group element");
  std::vector<int> out;
  for (int q = 0; q < a.space; ++q)
    if (a.act[g][q] == q) out.push_back(q);
  return out;
}

std::vector<int> stabilizer(const GroupAction& a, int q) {
  if (q < 0 || q >= a.space) throw IndexError("stabilizer: bad point");
  std::vector<int> out;
  for (int g = 0; g < a.group.order; ++g)
    if (a.act[g][q] == q) out.push_back(g);
  return out;
}

std::vector<int> set_stabilizer(const GroupAction& a, const std::vector<int>& v) {
  std::vector<int> out;
  for (int g = 0; g < a.group.order; ++g) {
    bool fixes = true;
    for (int q : v) {
      if (q < 0 || q >= a.space) throw IndexError("set_stabilizer: bad point");
      if (a.act[g][q] != q) {
        fixes = false;
        break;
      }
    }
    if (fixes) out.push_back(g);
  }
  return out;
}

std::vector<int> interior_stabilizer(const GroupAction& a, int q) {
  return set_stabilizer(a, {q});
}

TransformationGroupoid transformation_groupoid(const GroupAction& a) {
  TransformationGroupoid out;
  out.action = a;
  int k = a.group.order, m = a.space;
  ElementId n = static_cast<ElementId>(k) * m;
  out.to_pair.resize(n);
  out.to_id.assign(k, std::vector<ElementId>(m, -1));
  ElementId next = 0;
  for (int q = 0; q < m; ++q) {
    out.to_pair[next] = {a.group.identity, q};
    out.to_id[a.group.identity][q] = next++;
  }
  for (int g = 0; g < k; ++g) {
    if (g == a.group.identity) continue;
    for (int q = 0; q < m; ++q) {
      out.to_pair[next] = {g, q};
      out.to_id[g][q] = next++;
    }
  }

  std::vector<ElementId> units(m), range(n), source(n), inverse(n),
      mul(static_cast<size_t>(n) * n, -1);
  for (int q = 0; q < m; ++q) units[q] = q;
  for (ElementId i = 0; i < n; ++i) {
    auto [g, q] = out.to_pair[i];
    range[i] = out.to_id[a.group.identity][a.act[g][q]];
    source[i] = out.to_id[a.group.identity][q];
    inverse[i] = out.to_id[a.group.inv(g)][a.act[g][q]];
    for (ElementId j = 0; j < n; ++j) {
      auto [h, p] = out.to_pair[j];
      if (q == a.act[h][p]) mul[i * n + j] = out.to_id[a.group.mul(g, h)][p];
    }
  }
  out.g = make_groupoid_dense(n, std::move(units), std::move(range), std::move(source),
                              std::move(inverse), std::move(mul));
  return out;
}

}  // namespace gpdlab
