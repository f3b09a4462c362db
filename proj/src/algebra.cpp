#include "gpdlab/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace gpdlab {

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (o.c.size() != c.size()) throw GroupoidMismatch("element sizes differ in +");
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (o.c.size() != c.size()) throw GroupoidMismatch("element sizes differ in -");
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Coeff z) {
  for (auto& v : c) v *= z;
  return *this;
}

StarAlgebra::StarAlgebra(FiniteGroupoid g) : g_(std::move(g)) {
  by_range_.resize(g_.n);
  for (ElementId b = 0; b < g_.n; ++b) by_range_[g_.range[b]].push_back(b);
}

void StarAlgebra::check_element(const AlgebraElement& f) const {
  if (f.size() != g_.n)
    throw GroupoidMismatch("element has " + std::to_string(f.size()) +
                           " coefficients, algebra has dimension " + std::to_string(g_.n));
}

AlgebraElement StarAlgebra::delta(ElementId a) const {
  if (a < 0 || a >= g_.n) throw IndexError("delta: element id out of range");
  auto f = zero();
  f.c[a] = 1.0;
  return f;
}

AlgebraElement StarAlgebra::unit() const {
  auto f = zero();
  for (ElementId u : g_.units) f.c[u] = 1.0;
  return f;
}

AlgebraElement StarAlgebra::convolve(const AlgebraElement& f, const AlgebraElement& h) const {
  check_element(f);
  check_element(h);
  auto out = zero();
  for (ElementId a = 0; a < g_.n; ++a) {
    if (f.c[a] == Coeff{}) continue;
    for (ElementId b : by_range_[g_.source[a]]) out.c[g_.mul[a * g_.n + b]] += f.c[a] * h.c[b];
  }
  return out;
}

AlgebraElement StarAlgebra::involution(const AlgebraElement& f) const {
  check_element(f);
  auto out = zero();
  for (ElementId a = 0; a < g_.n; ++a) out.c[a] = std::conj(f.c[g_.inverse[a]]);
  return out;
}

AlgebraElement StarAlgebra::expectation(const AlgebraElement& f) const {
  check_element(f);
  auto out = zero();
  for (ElementId u : g_.units) out.c[u] = f.c[u];
  return out;
}

double StarAlgebra::i_norm(const AlgebraElement& f) const {
  check_element(f);
  std::vector<double> row(g_.n, 0.0), col(g_.n, 0.0);
  for (ElementId a = 0; a < g_.n; ++a) {
    double v = std::abs(f.c[a]);
    row[g_.range[a]] += v;
    col[g_.source[a]] += v;
  }
  double best = 0.0;
  for (ElementId u : g_.units) best = std::max({best, row[u], col[u]});
  return best;
}

AlgebraElement StarAlgebra::conjugate_by_delta(ElementId gamma, const AlgebraElement& f) const {
  check_element(f);
  if (gamma < 0 || gamma >= g_.n) throw IndexError("conjugate_by_delta: bad element id");
  auto out = zero();
  ElementId gi = g_.inverse[gamma];
  for (ElementId x = 0; x < g_.n; ++x) {
    // delta_gamma f delta_gamma^* is supported where both r and s equal r(gamma)
    if (g_.range[x] != g_.range[gamma] || g_.source[x] != g_.range[gamma]) continue;
    ElementId y = g_.mul[g_.mul[gi * g_.n + x] * g_.n + gamma];
    out.c[x] = f.c[y];
  }
  return out;
}

std::vector<ElementId> StarAlgebra::support(const AlgebraElement& f, double tol) const {
  check_element(f);
  std::vector<ElementId> out;
  for (ElementId a = 0; a < g_.n; ++a)
    if (std::abs(f.c[a]) > tol) out.push_back(a);
  return out;
}

double StarAlgebra::norm2(const AlgebraElement& f) const {
  check_element(f);
  double s = 0.0;
  for (const auto& v : f.c) s += std::norm(v);
  return std::sqrt(s);
}

std::vector<AlgebraElement> elementary_normalizers(const StarAlgebra& alg) {
  std::vector<AlgebraElement> out;
  out.reserve(alg.dim());
  for (ElementId a = 0; a < alg.dim(); ++a) out.push_back(alg.delta(a));
  return out;
}

std::vector<AlgebraElement> augmentation_generators(const StarAlgebra& alg) {
  const auto& g = alg.groupoid();
  require_group_bundle(g, "augmentation_generators");
  std::vector<AlgebraElement> out;
  for (ElementId a = 0; a < g.n; ++a) {
    if (g.is_unit(a)) continue;
    out.push_back(alg.delta(a) - alg.delta(g.range[a]));
  }
  return out;
}

CrossedProductElement upsilon(const TransformationGroupoid& t, const AlgebraElement& f) {
  if (f.size() != t.g.n) throw GroupoidMismatch("upsilon: element size mismatch");
  CrossedProductElement x;
  x.group_order = t.action.group.order;
  x.space = t.action.space;
  x.a.assign(static_cast<size_t>(x.group_order) * x.space, Coeff{});
  for (int g = 0; g < x.group_order; ++g) {
    int gi = t.action.group.inv(g);
    for (int q = 0; q < x.space; ++q) x.at(g, q) = f.c[t.to_id[g][t.action.apply(gi, q)]];
  }
  return x;
}

AlgebraElement upsilon_inverse(const TransformationGroupoid& t, const CrossedProductElement& x) {
  if (x.group_order != t.action.group.order || x.space != t.action.space)
    throw GroupoidMismatch("upsilon_inverse: shape mismatch");
  AlgebraElement f{std::vector<Coeff>(t.g.n, Coeff{})};
  for (int g = 0; g < x.group_order; ++g)
    for (int q = 0; q < x.space; ++q) f.c[t.to_id[g][q]] = x.at(g, t.action.apply(g, q));
  return f;
}

CrossedProductElement cp_product(const GroupAction& a, const CrossedProductElement& x,
                                 const CrossedProductElement& y) {
  CrossedProductElement out;
  out.group_order = x.group_order;
  out.space = x.space;
  out.a.assign(x.a.size(), Coeff{});
  for (int g1 = 0; g1 < x.group_order; ++g1) {
    int g1i = a.group.inv(g1);
    for (int g2 = 0; g2 < x.group_order; ++g2) {
      int g = a.group.mul(g1, g2);
      for (int q = 0; q < x.space; ++q)
        out.at(g, q) += x.at(g1, q) * y.at(g2, a.apply(g1i, q));
    }
  }
  return out;
}

CrossedProductElement cp_star(const GroupAction& a, const CrossedProductElement& x) {
  CrossedProductElement out;
  out.group_order = x.group_order;
  out.space = x.space;
  out.a.assign(x.a.size(), Coeff{});
  for (int g = 0; g < x.group_order; ++g) {
    int gi = a.group.inv(g);
    for (int q = 0; q < x.space; ++q) out.at(g, q) = std::conj(x.at(gi, a.apply(gi, q)));
  }
  return out;
}

std::vector<std::pair<int, std::vector<int>>> interior_isotropy_subalgebra_support(
    const GroupAction& a) {
  std::vector<std::pair<int, std::vector<int>>> out;
  for (int g = 0; g < a.group.order; ++g) {
    auto fixed = fixed_point_set(a, g);
    if (!fixed.empty()) out.emplace_back(g, std::move(fixed));
  }
  return out;
}

DeltaContext make_delta_context(const GroupAction& a) {
  DeltaContext ctx;
  ctx.bundle = make_group_bundle(std::vector<FiniteGroup>(a.space, a.group));
  ctx.qg_to_bundle = ctx.bundle.fiber_to_bundle;
  return ctx;
}

AlgebraElement delta_embedding(const DeltaContext& ctx, const TransformationGroupoid& t,
                               const AlgebraElement& f) {
  if (f.size() != t.g.n) throw GroupoidMismatch("delta_embedding: element size mismatch");
  for (ElementId e = 0; e < t.g.n; ++e)
    if (f.c[e] != Coeff{} && t.g.range[e] != t.g.source[e]) {
      auto [g, q] = t.to_pair[e];
      throw SupportOutsideInteriorIsotropy(
          "delta_embedding: coefficient at (g" + std::to_string(g) + ", q" +
          std::to_string(q) + ") moves its point");
    }
  auto x = upsilon(t, f);
  AlgebraElement out{std::vector<Coeff>(ctx.bundle.g.n, Coeff{})};
  for (int q = 0; q < t.action.space; ++q)
    for (int g = 0; g < t.action.group.order; ++g)
      out.c[ctx.qg_to_bundle[q][g]] = x.at(g, q);
  return out;
}

}  // namespace gpdlab
