#include "gpdlab/group.hpp"

#include <algorithm>
#include <charconv>

namespace gpdlab {
namespace {

int parse_int(std::string_view s) {
  int v = -1;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return -1;
  return v;
}

}  // namespace

FiniteGroup make_group(const std::vector<std::vector<int>>& table, std::string name) {
  int k = static_cast<int>(table.size());
  if (k == 0) throw AxiomViolation("group '" + name + "': empty table");
  FiniteGroup g;
  g.order = k;
  g.name = std::move(name);
  g.table.reserve(static_cast<size_t>(k) * k);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != k)
      throw IndexError("group '" + g.name + "': table is not square");
    for (int v : row) {
      if (v < 0 || v >= k)
        throw IndexError("group '" + g.name + "': entry " + std::to_string(v) +
                         " outside 0.." + std::to_string(k - 1));
      g.table.push_back(v);
    }
  }

  g.identity = -1;
  for (int e = 0; e < k; ++e) {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) {
      g.identity = e;
      break;
    }
  }
  if (g.identity < 0) throw AxiomViolation("group '" + g.name + "': no identity element");

  g.inverse.assign(k, -1);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b)
      if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) {
        g.inverse[a] = b;
        break;
      }
    if (g.inverse[a] < 0)
      throw AxiomViolation("group '" + g.name + "': element " + std::to_string(a) +
                           " has no inverse");
  }

  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw AxiomViolation("group '" + g.name + "': associativity fails at (" +
                               std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c) + ")");
  return g;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw IndexError("cyclic_group: order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return make_group(t, "C" + std::to_string(n));
}

FiniteGroup dihedral_group(int n) {
  if (n < 3) throw IndexError("dihedral_group: need n >= 3 (use V4 or C2 below that)");
  // indices: rotation rho_a = a, reflection sigma_a = n + a, acting on Z_n by
  // rho_a(x) = x + a and sigma_a(x) = a - x
  int k = 2 * n;
  auto idx = [&](bool refl, int a) { return (refl ? n : 0) + ((a % n) + n) % n; };
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      bool ri = i >= n, rj = j >= n;
      int a = i % n, b = j % n;
      // compose i after j
      if (!ri && !rj) t[i][j] = idx(false, a + b);
      if (!ri && rj) t[i][j] = idx(true, a + b);
      if (ri && !rj) t[i][j] = idx(true, a - b);
      if (ri && rj) t[i][j] = idx(false, a - b);
    }
  return make_group(t, "D" + std::to_string(n));
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 4) throw IndexError("symmetric_group: n must be 1..4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int k = static_cast<int>(perms.size());
  auto find = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<int> q(n);
      for (int x = 0; x < n; ++x) q[x] = perms[i][perms[j][x]];
      t[i][j] = find(q);
    }
  return make_group(t, "S" + std::to_string(n));
}

FiniteGroup klein_four_group() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
  auto g = make_group(t, "V4");
  return g;
}

std::optional<FiniteGroup> group_by_name(std::string_view name) {
  if (name == "V4" || name == "v4") return klein_four_group();
  if (name.size() < 2) return std::nullopt;
  char kind = name[0];
  int n = parse_int(name.substr(1));
  if (n < 0) return std::nullopt;
  switch (kind) {
    case 'C':
    case 'Z':
      return n >= 1 ? std::optional(cyclic_group(n)) : std::nullopt;
    case 'D':
      return n >= 3 ? std::optional(dihedral_group(n)) : std::nullopt;
    case 'S':
      return (n >= 1 && n <= 4) ? std::optional(symmetric_group(n)) : std::nullopt;
    default:
      return std::nullopt;
  }
}

GroupGroupoid group_groupoid(const FiniteGroup& grp) {
  GroupGroupoid out;
  int k = grp.order;
  out.to_group.reserve(k);
  out.to_group.push_back(grp.identity);
  for (int x = 0; x < k; ++x)
    if (x != grp.identity) out.to_group.push_back(x);
  out.from_group.assign(k, -1);
  for (int i = 0; i < k; ++i) out.from_group[out.to_group[i]] = i;

  std::vector<ElementId> range(k, 0), source(k, 0), inverse(k), mul(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    inverse[i] = out.from_group[grp.inv(out.to_group[i])];
    for (int j = 0; j < k; ++j)
      mul[i * k + j] = out.from_group[grp.mul(out.to_group[i], out.to_group[j])];
  }
  out.g = make_groupoid_dense(k, {0}, std::move(range), std::move(source), std::move(inverse),
                              std::move(mul));
  return out;
}

GroupBundle make_group_bundle(const std::vector<FiniteGroup>& fibers) {
  std::vector<FiniteGroupoid> parts;
  std::vector<GroupGroupoid> ggs;
  parts.reserve(fibers.size());
  for (const auto& f : fibers) {
    ggs.push_back(group_groupoid(f));
    parts.push_back(ggs.back().g);
  }
  auto u = disjoint_union(parts);
  GroupBundle out;
  out.g = std::move(u.g);
  out.fiber_to_bundle.resize(fibers.size());
  for (size_t p = 0; p < fibers.size(); ++p) {
    out.fiber_to_bundle[p].assign(fibers[p].order, -1);
    for (int x = 0; x < fibers[p].order; ++x)
      out.fiber_to_bundle[p][x] = u.part_to_union[p][ggs[p].from_group[x]];
  }
  return out;
}

}  // namespace gpdlab
