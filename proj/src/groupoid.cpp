#include "gpdlab/groupoid.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace gpdlab {
namespace {

[[noreturn]] void fail_axiom(const std::string& msg) { throw AxiomViolation("groupoid: " + msg); }

std::string elem(ElementId a) { return std::to_string(a); }

void check_range(ElementId n, ElementId v, const char* what) {
  if (v < 0 || v >= n)
    throw IndexError("groupoid: " + std::string(what) + " value " + elem(v) +
                     " outside 0.." + elem(n - 1));
}

}  // namespace

bool FiniteGroupoid::is_unit(ElementId a) const {
  return std::binary_search(units.begin(), units.end(), a);
}

std::vector<ElementId> FiniteGroupoid::source_fiber(ElementId u) const {
  std::vector<ElementId> out;
  for (ElementId a = 0; a < n; ++a)
    if (source[a] == u) out.push_back(a);
  return out;
}

std::vector<ElementId> FiniteGroupoid::range_fiber(ElementId u) const {
  std::vector<ElementId> out;
  for (ElementId a = 0; a < n; ++a)
    if (range[a] == u) out.push_back(a);
  return out;
}

std::vector<ElementId> FiniteGroupoid::isotropy_at(ElementId u) const {
  std::vector<ElementId> out;
  for (ElementId a = 0; a < n; ++a)
    if (source[a] == u && range[a] == u) out.push_back(a);
  return out;
}

FiniteGroupoid make_groupoid_dense(ElementId n, std::vector<ElementId> units,
                                   std::vector<ElementId> range, std::vector<ElementId> source,
                                   std::vector<ElementId> inverse, std::vector<ElementId> mul) {
  if (n < 0) throw IndexError("groupoid: negative element count");
  if (range.size() != static_cast<size_t>(n) || source.size() != static_cast<size_t>(n) ||
      inverse.size() != static_cast<size_t>(n))
    throw IndexError("groupoid: r/s/inv table size does not match element count");
  if (mul.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
    throw IndexError("groupoid: multiplication table must have n*n entries");

  std::sort(units.begin(), units.end());
  if (std::adjacent_find(units.begin(), units.end()) != units.end())
    fail_axiom("duplicate unit id");
  for (ElementId u : units) check_range(n, u, "unit");
  for (ElementId a = 0; a < n; ++a) {
    check_range(n, range[a], "range");
    check_range(n, source[a], "source");
    check_range(n, inverse[a], "inverse");
  }
  for (ElementId v : mul)
    if (v != -1) check_range(n, v, "product");

  FiniteGroupoid g;
  g.n = n;
  g.units = std::move(units);
  g.range = std::move(range);
  g.source = std::move(source);
  g.inverse = std::move(inverse);
  g.mul = std::move(mul);

  std::vector<char> is_u(n, 0);
  for (ElementId u : g.units) is_u[u] = 1;

  for (ElementId u : g.units) {
    if (g.range[u] != u || g.source[u] != u)
      fail_axiom("unit " + elem(u) + " must have r(u) = s(u) = u");
    if (g.inverse[u] != u) fail_axiom("unit " + elem(u) + " must be its own inverse");
  }
  for (ElementId a = 0; a < n; ++a) {
    if (!is_u[g.range[a]]) fail_axiom("r(" + elem(a) + ") is not a declared unit");
    if (!is_u[g.source[a]]) fail_axiom("s(" + elem(a) + ") is not a declared unit");
    if (g.inverse[g.inverse[a]] != a) fail_axiom("inverse is not involutive at " + elem(a));
    if (g.range[g.inverse[a]] != g.source[a] || g.source[g.inverse[a]] != g.range[a])
      fail_axiom("inverse of " + elem(a) + " does not swap range and source");
  }

  // composability must match s(a) = r(b) exactly
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      ElementId p = g.mul[a * n + b];
      bool comp = g.source[a] == g.range[b];
      if (comp && p == -1)
        fail_axiom("product (" + elem(a) + "," + elem(b) + ") missing though composable");
      if (!comp && p != -1)
        fail_axiom("product (" + elem(a) + "," + elem(b) + ") defined though not composable");
      if (p != -1) {
        if (g.range[p] != g.range[a])
          fail_axiom("r((" + elem(a) + ")(" + elem(b) + ")) != r(" + elem(a) + ")");
        if (g.source[p] != g.source[b])
          fail_axiom("s((" + elem(a) + ")(" + elem(b) + ")) != s(" + elem(b) + ")");
      }
    }

  for (ElementId a = 0; a < n; ++a) {
    if (g.mul[g.inverse[a] * n + a] != g.source[a])
      fail_axiom("inv(" + elem(a) + ") * " + elem(a) + " != s(" + elem(a) + ")");
    if (g.mul[a * n + g.inverse[a]] != g.range[a])
      fail_axiom(elem(a) + " * inv(" + elem(a) + ") != r(" + elem(a) + ")");
  }

  // unit laws and the cancellation identities
  std::vector<std::vector<ElementId>> by_range(n);
  for (ElementId b = 0; b < n; ++b) by_range[g.range[b]].push_back(b);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b : by_range[g.source[a]]) {
      ElementId ab = g.mul[a * n + b];
      if (is_u[a] && ab != b) fail_axiom("unit " + elem(a) + " does not act as left identity");
      if (is_u[b] && ab != a) fail_axiom("unit " + elem(b) + " does not act as right identity");
      if (g.mul[g.inverse[a] * n + ab] != b)
        fail_axiom("cancellation inv(a)(ab) = b fails at a=" + elem(a) + " b=" + elem(b));
      if (g.mul[ab * n + g.inverse[b]] != a)
        fail_axiom("cancellation (ab)inv(b) = a fails at a=" + elem(a) + " b=" + elem(b));
    }

  // associativity, exhaustively over composable triples
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b : by_range[g.source[a]]) {
      ElementId ab = g.mul[a * n + b];
      for (ElementId c : by_range[g.source[b]]) {
        if (g.mul[ab * n + c] != g.mul[a * n + g.mul[b * n + c]])
          fail_axiom("associativity fails at (" + elem(a) + "," + elem(b) + "," + elem(c) + ")");
      }
    }

  return g;
}

FiniteGroupoid make_groupoid(ElementId n, std::vector<ElementId> units,
                             std::vector<ElementId> range, std::vector<ElementId> source,
                             std::vector<ElementId> inverse,
                             const std::vector<std::array<ElementId, 3>>& products) {
  std::vector<ElementId> mul(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
  for (const auto& t : products) {
    check_range(n, t[0], "product row");
    check_range(n, t[1], "product column");
    check_range(n, t[2], "product");
    ElementId& slot = mul[t[0] * n + t[1]];
    if (slot != -1 && slot != t[2])
      fail_axiom("conflicting products for (" + elem(t[0]) + "," + elem(t[1]) + ")");
    slot = t[2];
  }
  return make_groupoid_dense(n, std::move(units), std::move(range), std::move(source),
                             std::move(inverse), std::move(mul));
}

ElementId compose(const FiniteGroupoid& g, ElementId a, ElementId b) {
  check_range(g.n, a, "element");
  check_range(g.n, b, "element");
  if (!g.composable(a, b))
    throw NotComposable("compose: s(" + elem(a) + ") = " + elem(g.source[a]) + " but r(" +
                        elem(b) + ") = " + elem(g.range[b]));
  return g.mul[a * g.n + b];
}

OrbitPartition orbits(const FiniteGroupoid& g) {
  OrbitPartition p;
  p.orbit_of.assign(g.n, -1);
  std::vector<std::vector<ElementId>> adj(g.n);
  for (ElementId a = 0; a < g.n; ++a) adj[g.source[a]].push_back(g.range[a]);
  for (ElementId u : g.units) {
    if (p.orbit_of[u] != -1) continue;
    int id = static_cast<int>(p.orbits.size());
    std::vector<ElementId> orb;
    std::queue<ElementId> q;
    q.push(u);
    p.orbit_of[u] = id;
    while (!q.empty()) {
      ElementId v = q.front();
      q.pop();
      orb.push_back(v);
      for (ElementId w : adj[v])
        if (p.orbit_of[w] == -1) {
          p.orbit_of[w] = id;
          q.push(w);
        }
    }
    std::sort(orb.begin(), orb.end());
    p.orbits.push_back(std::move(orb));
  }
  return p;
}

std::vector<ElementId> invariant_closure(const FiniteGroupoid& g,
                                         const std::vector<ElementId>& x) {
  std::vector<char> in(g.n, 0);
  std::queue<ElementId> q;
  for (ElementId u : x) {
    check_range(g.n, u, "unit");
    if (!g.is_unit(u)) throw NotAUnit("invariant_closure: element " + elem(u) + " is not a unit");
    if (!in[u]) {
      in[u] = 1;
      q.push(u);
    }
  }
  std::vector<std::vector<ElementId>> adj(g.n);
  for (ElementId a = 0; a < g.n; ++a) adj[g.source[a]].push_back(g.range[a]);
  while (!q.empty()) {
    ElementId v = q.front();
    q.pop();
    for (ElementId w : adj[v])
      if (!in[w]) {
        in[w] = 1;
        q.push(w);
      }
  }
  std::vector<ElementId> out;
  for (ElementId u : g.units)
    if (in[u]) out.push_back(u);
  return out;
}

bool is_minimal(const FiniteGroupoid& g) { return orbits(g).orbits.size() <= 1; }

IsotropyData isotropy(const FiniteGroupoid& g) {
  IsotropyData d;
  d.units = g.units;
  d.all_trivial = true;
  for (ElementId u : g.units) {
    d.by_unit.push_back(g.isotropy_at(u));
    if (d.by_unit.back().size() != 1) d.all_trivial = false;
  }
  return d;
}

bool is_topologically_principal(const FiniteGroupoid& g) { return isotropy(g).all_trivial; }

bool is_group_bundle(const FiniteGroupoid& g) {
  for (ElementId a = 0; a < g.n; ++a)
    if (g.range[a] != g.source[a]) return false;
  return true;
}

void require_group_bundle(const FiniteGroupoid& g, const std::string& where) {
  if (!is_group_bundle(g))
    throw NotGroupBundle(where + ": groupoid has an arrow with r != s");
}

SubGroupoid restrict_to_subgroupoid(const FiniteGroupoid& g, std::vector<ElementId> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (ElementId a : s) check_range(g.n, a, "element");
  std::vector<char> in(g.n, 0);
  for (ElementId a : s) in[a] = 1;
  for (ElementId a : s) {
    if (!in[g.inverse[a]])
      throw NotSubgroupoid("subset not closed under inversion at " + elem(a));
    if (!in[g.range[a]] || !in[g.source[a]])
      throw NotSubgroupoid("subset misses r or s of element " + elem(a));
    for (ElementId b : s)
      if (g.composable(a, b) && !in[g.mul[a * g.n + b]])
        throw NotSubgroupoid("subset not closed under product (" + elem(a) + "," + elem(b) + ")");
  }

  SubGroupoid out;
  out.to_parent.reserve(s.size());
  for (ElementId a : s)
    if (g.is_unit(a)) out.to_parent.push_back(a);
  for (ElementId a : s)
    if (!g.is_unit(a)) out.to_parent.push_back(a);
  out.from_parent.assign(g.n, -1);
  ElementId m = static_cast<ElementId>(out.to_parent.size());
  for (ElementId i = 0; i < m; ++i) out.from_parent[out.to_parent[i]] = i;

  std::vector<ElementId> units, range, source, inverse, mul(static_cast<size_t>(m) * m, -1);
  for (ElementId i = 0; i < m; ++i) {
    ElementId a = out.to_parent[i];
    if (g.is_unit(a)) units.push_back(i);
    range.push_back(out.from_parent[g.range[a]]);
    source.push_back(out.from_parent[g.source[a]]);
    inverse.push_back(out.from_parent[g.inverse[a]]);
    for (ElementId j = 0; j < m; ++j) {
      ElementId b = out.to_parent[j];
      if (g.composable(a, b)) mul[i * m + j] = out.from_parent[g.mul[a * g.n + b]];
    }
  }
  out.sub = make_groupoid_dense(m, std::move(units), std::move(range), std::move(source),
                                std::move(inverse), std::move(mul));
  return out;
}

std::vector<ElementId> subgroupoid_closure(const FiniteGroupoid& g,
                                           std::vector<ElementId> seed) {
  std::vector<char> in(g.n, 0);
  std::vector<ElementId> work;
  auto add = [&](ElementId a) {
    if (!in[a]) {
      in[a] = 1;
      work.push_back(a);
    }
  };
  for (ElementId a : seed) {
    check_range(g.n, a, "element");
    add(a);
  }
  for (size_t i = 0; i < work.size(); ++i) {
    ElementId a = work[i];
    add(g.inverse[a]);
    add(g.range[a]);
    add(g.source[a]);
    for (size_t j = 0; j <= i; ++j) {
      ElementId b = work[j];
      if (g.composable(a, b)) add(g.mul[a * g.n + b]);
      if (g.composable(b, a)) add(g.mul[b * g.n + a]);
    }
  }
  std::sort(work.begin(), work.end());
  return work;
}

SubGroupoid interior_isotropy(const FiniteGroupoid& g) {
  std::vector<ElementId> iso;
  for (ElementId a = 0; a < g.n; ++a)
    if (g.range[a] == g.source[a]) iso.push_back(a);
  return restrict_to_subgroupoid(g, std::move(iso));
}

ElementId pair_id(int m, int i, int j) {
  if (i == j) return i;
  // off-diagonal pairs in lexicographic order, shifted past the diagonal
  int k = 0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      if (a == i && b == j) return m + k;
      ++k;
    }
  throw IndexError("pair_id: index outside 0..m-1");
}

FiniteGroupoid pair_groupoid(int m) {
  if (m < 0) throw IndexError("pair_groupoid: negative point count");
  ElementId n = static_cast<ElementId>(m) * m;
  std::vector<std::pair<int, int>> pr(n);
  for (int i = 0; i < m; ++i) pr[i] = {i, i};
  {
    int k = m;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (a != b) pr[k++] = {a, b};
  }
  std::vector<ElementId> units(m), range(n), source(n), inverse(n),
      mul(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < m; ++i) units[i] = i;
  for (ElementId a = 0; a < n; ++a) {
    range[a] = pair_id(m, pr[a].first, pr[a].first);
    source[a] = pair_id(m, pr[a].second, pr[a].second);
    inverse[a] = pair_id(m, pr[a].second, pr[a].first);
    for (ElementId b = 0; b < n; ++b)
      if (pr[a].second == pr[b].first) mul[a * n + b] = pair_id(m, pr[a].first, pr[b].second);
  }
  return make_groupoid_dense(n, std::move(units), std::move(range), std::move(source),
                             std::move(inverse), std::move(mul));
}

DisjointUnion disjoint_union(const std::vector<FiniteGroupoid>& parts) {
  DisjointUnion out;
  ElementId n = 0;
  for (const auto& p : parts) n += p.n;
  out.part_to_union.resize(parts.size());
  ElementId next = 0;
  for (size_t p = 0; p < parts.size(); ++p) {
    out.part_to_union[p].assign(parts[p].n, -1);
    for (ElementId u : parts[p].units) out.part_to_union[p][u] = next++;
  }
  for (size_t p = 0; p < parts.size(); ++p)
    for (ElementId a = 0; a < parts[p].n; ++a)
      if (out.part_to_union[p][a] == -1) out.part_to_union[p][a] = next++;

  std::vector<ElementId> units, range(n), source(n), inverse(n),
      mul(static_cast<size_t>(n) * n, -1);
  for (size_t p = 0; p < parts.size(); ++p) {
    const auto& gp = parts[p];
    const auto& map = out.part_to_union[p];
    for (ElementId u : gp.units) units.push_back(map[u]);
    for (ElementId a = 0; a < gp.n; ++a) {
      range[map[a]] = map[gp.range[a]];
      source[map[a]] = map[gp.source[a]];
      inverse[map[a]] = map[gp.inverse[a]];
      for (ElementId b = 0; b < gp.n; ++b)
        if (gp.composable(a, b)) mul[map[a] * n + map[b]] = map[gp.mul[a * gp.n + b]];
    }
  }
  out.g = make_groupoid_dense(n, std::move(units), std::move(range), std::move(source),
                              std::move(inverse), std::move(mul));
  return out;
}

}  // namespace gpdlab
