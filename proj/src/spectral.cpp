#include "gpdlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gpdlab {
namespace {

double max_abs(const Vector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

// orthonormal basis of the column span; rank cut relative to the largest singular value
Matrix orthonormal_span(const Matrix& a) {
  if (a.cols() == 0) return Matrix(a.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  double cut = std::max(1e-12, sv.size() ? sv(0) * 1e-10 : 0.0);
  int r = 0;
  while (r < sv.size() && sv(r) > cut) ++r;
  return svd.matrixU().leftCols(r);
}

bool in_span(const Matrix& w, const Vector& v, double eps) {
  Vector res = v - w * (w.adjoint() * v);
  return max_abs(res) <= eps * std::max(1.0, max_abs(v));
}

struct Cluster {
  double mean;
  int lo, hi;  // eigenvalue index range [lo, hi)
};

}  // namespace

Vector to_vec(const AlgebraElement& f) {
  Vector v(f.size());
  for (int i = 0; i < f.size(); ++i) v(i) = f.c[i];
  return v;
}

AlgebraElement from_vec(const Vector& v) {
  AlgebraElement f{std::vector<Coeff>(v.size())};
  for (int i = 0; i < v.size(); ++i) f.c[i] = v(i);
  return f;
}

Matrix left_mult_matrix(const StarAlgebra& alg, const AlgebraElement& f) {
  alg.check_element(f);
  const auto& g = alg.groupoid();
  Matrix m = Matrix::Zero(g.n, g.n);
  for (ElementId a = 0; a < g.n; ++a) {
    if (f.c[a] == Coeff{}) continue;
    for (ElementId b = 0; b < g.n; ++b)
      if (g.composable(a, b)) m(g.mul[a * g.n + b], b) += f.c[a];
  }
  return m;
}

Matrix right_mult_matrix(const StarAlgebra& alg, const AlgebraElement& f) {
  alg.check_element(f);
  const auto& g = alg.groupoid();
  Matrix m = Matrix::Zero(g.n, g.n);
  for (ElementId b = 0; b < g.n; ++b) {
    if (f.c[b] == Coeff{}) continue;
    for (ElementId a = 0; a < g.n; ++a)
      if (g.composable(a, b)) m(g.mul[a * g.n + b], a) += f.c[b];
  }
  return m;
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

Matrix Representation::apply(const AlgebraElement& f) const {
  Matrix out = Matrix::Zero(dim, dim);
  for (size_t a = 0; a < ops.size(); ++a) out += f.c[a] * ops[a];
  return out;
}

double Representation::hom_defect(const StarAlgebra& alg) const {
  const auto& g = alg.groupoid();
  double worst = 0.0;
  for (ElementId a = 0; a < g.n; ++a) {
    worst = std::max(worst, (ops[a].adjoint() - ops[g.inverse[a]]).cwiseAbs().maxCoeff());
    for (ElementId b = 0; b < g.n; ++b) {
      Matrix prod = ops[a] * ops[b];
      if (g.composable(a, b)) prod -= ops[g.mul[a * g.n + b]];
      worst = std::max(worst, prod.size() ? prod.cwiseAbs().maxCoeff() : 0.0);
    }
  }
  return worst;
}

Representation regular_rep_at(const StarAlgebra& alg, ElementId u) {
  const auto& g = alg.groupoid();
  if (u < 0 || u >= g.n || !g.is_unit(u))
    throw NotAUnit("regular_rep_at: " + std::to_string(u) + " is not a unit");
  Representation rep;
  rep.basis = g.source_fiber(u);
  rep.dim = static_cast<int>(rep.basis.size());
  std::vector<int> pos(g.n, -1);
  for (int i = 0; i < rep.dim; ++i) pos[rep.basis[i]] = i;
  rep.ops.assign(g.n, Matrix::Zero(rep.dim, rep.dim));
  for (ElementId a = 0; a < g.n; ++a)
    for (int j = 0; j < rep.dim; ++j)
      if (g.composable(a, rep.basis[j])) rep.ops[a](pos[g.mul[a * g.n + rep.basis[j]]], j) = 1.0;
  return rep;
}

double cstar_norm(const StarAlgebra& alg, const AlgebraElement& f) {
  alg.check_element(f);
  const auto& g = alg.groupoid();
  double best = 0.0;
  for (ElementId u : g.units) {
    auto fiber = g.source_fiber(u);
    int d = static_cast<int>(fiber.size());
    Matrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        m(i, j) = f.c[g.mul[fiber[i] * g.n + g.inverse[fiber[j]]]];
    best = std::max(best, operator_norm(m));
  }
  return best;
}

namespace {

// shared splitting engine; `w` has orthonormal columns spanning a *-closed
// subalgebra that contains the unit (verified by the callers)
BlockDecomposition decompose_span(const StarAlgebra& alg, const Matrix& w, std::uint64_t seed) {
  const int n = alg.dim();
  const int m = static_cast<int>(w.cols());
  const Vector unit_vec = to_vec(alg.unit());

  // center of the subalgebra: x with x wj = wj x for every basis column
  Matrix stacked(static_cast<Eigen::Index>(m) * n, m);
  for (int j = 0; j < m; ++j) {
    AlgebraElement wj = from_vec(w.col(j));
    stacked.middleRows(static_cast<Eigen::Index>(j) * n, n) =
        (left_mult_matrix(alg, wj) - right_mult_matrix(alg, wj)) * w;
  }
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double cut = std::max(1e-12, sv.size() ? sv(0) * 1e-10 : 0.0);
  int rk = 0;
  while (rk < sv.size() && sv(rk) > cut) ++rk;
  Matrix center = w * svd.matrixV().rightCols(m - rk);  // n x c
  const int c = static_cast<int>(center.cols());
  if (c == 0) throw NumericalDegeneracy("block split: empty center");

  // self-adjoint real-linear spanning set of the center
  std::vector<Vector> herm;
  for (int t = 0; t < c; ++t) {
    Vector v = center.col(t);
    Vector vs = to_vec(alg.involution(from_vec(v)));
    herm.push_back(v + vs);
    herm.push_back(Coeff(0, 1) * (v - vs));
  }

  std::string last_issue = "never attempted";
  for (int attempt = 0; attempt < 8; ++attempt) {
    Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(attempt));
    Vector z = Vector::Zero(n);
    for (auto& h : herm) z += Coeff(rng.sym()) * h;
    if (max_abs(z) < 1e-9) {
      last_issue = "degenerate sample";
      continue;
    }

    Matrix lz = left_mult_matrix(alg, from_vec(z));
    lz = ((lz + lz.adjoint()) / 2.0).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> es(lz);
    const auto& ev = es.eigenvalues();

    std::vector<Cluster> clusters;
    int lo = 0;
    for (int i = 1; i <= n; ++i)
      if (i == n || ev(i) - ev(i - 1) >= tol::spectral_gap) {
        double mean = 0.0;
        for (int t = lo; t < i; ++t) mean += ev(t);
        clusters.push_back({mean / (i - lo), lo, i});
        lo = i;
      }
    bool tight = true;
    for (const auto& cl : clusters)
      if (ev(cl.hi - 1) - ev(cl.lo) > 1e-7) tight = false;
    if (!tight) {
      last_issue = "eigenvalue clusters too wide";
      continue;
    }

    // e_i = (spectral projector of cluster i) applied to the unit: stable because
    // L restricted to the subalgebra acts by left multiplication and e_i 1 = e_i
    std::vector<Vector> idem;
    for (const auto& cl : clusters) {
      Matrix uc = es.eigenvectors().middleCols(cl.lo, cl.hi - cl.lo);
      idem.push_back(uc * (uc.adjoint() * unit_vec));
    }

    const int k = static_cast<int>(idem.size());
    auto elem = [&](int i) { return from_vec(idem[i]); };
    bool ok = true;
    Vector sum = Vector::Zero(n);
    for (int i = 0; i < k && ok; ++i) {
      sum += idem[i];
      AlgebraElement ei = elem(i);
      ok = ok && max_abs(to_vec(alg.convolve(ei, ei)) - idem[i]) <= tol::idem;
      ok = ok && max_abs(to_vec(alg.involution(ei)) - idem[i]) <= tol::idem;
      ok = ok && in_span(w, idem[i], tol::idem);
      for (int j = 0; j < i && ok; ++j)
        ok = max_abs(to_vec(alg.convolve(ei, elem(j)))) <= tol::idem;
      for (int j = 0; j < m && ok; ++j) {
        AlgebraElement wj = from_vec(w.col(j));
        ok = max_abs(to_vec(alg.convolve(ei, wj)) - to_vec(alg.convolve(wj, ei))) <= tol::idem;
      }
    }
    ok = ok && max_abs(sum - unit_vec) <= tol::idem;
    if (!ok) {
      last_issue = "idempotent validation failed";
      continue;
    }

    // block subspaces e_i W and their dimensions d_i^2
    std::vector<int> dims(k);
    std::vector<Matrix> basis(k);
    int total = 0;
    for (int i = 0; i < k && ok; ++i) {
      Matrix d = left_mult_matrix(alg, elem(i)) * w;
      Eigen::JacobiSVD<Matrix> dsvd(d, Eigen::ComputeThinU);
      const auto& ds = dsvd.singularValues();
      double dcut = tol::rank * std::max(1.0, ds.size() ? ds(0) : 0.0);
      int r = 0;
      while (r < ds.size() && ds(r) > dcut) ++r;
      int di = static_cast<int>(std::lround(std::sqrt(static_cast<double>(r))));
      if (di * di != r) {
        ok = false;
        break;
      }
      dims[i] = di;
      basis[i] = dsvd.matrixU().leftCols(r);
      total += r;
    }
    ok = ok && total == m;
    if (!ok) {
      last_issue = "block dimensions are not perfect squares";
      continue;
    }

    // canonical block order: independent of the random sample
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    auto first_support = [&](int i) {
      for (int t = 0; t < n; ++t)
        if (std::abs(idem[i](t)) > 1e-6) return t;
      return n;
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      int fa = first_support(a), fb = first_support(b);
      if (fa != fb) return fa < fb;
      if (dims[a] != dims[b]) return dims[a] < dims[b];
      for (int t = 0; t < n; ++t) {
        double ra = std::round(idem[a](t).real() * 1e6), rb = std::round(idem[b](t).real() * 1e6);
        if (ra != rb) return ra < rb;
        double ia = std::round(idem[a](t).imag() * 1e6), ib = std::round(idem[b](t).imag() * 1e6);
        if (ia != ib) return ia < ib;
      }
      return false;
    });

    BlockDecomposition bd;
    bd.sub_basis = w;
    for (int i : order) {
      bd.idempotents.push_back(elem(i));
      bd.dims.push_back(dims[i]);
      bd.block_basis.push_back(basis[i]);
    }
    return bd;
  }
  throw NumericalDegeneracy("block split: " + last_issue + " after 8 reseeds");
}

}  // namespace

BlockDecomposition block_decomposition(const StarAlgebra& alg, std::uint64_t seed) {
  return decompose_span(alg, Matrix::Identity(alg.dim(), alg.dim()), seed);
}

BlockDecomposition subalgebra_decomposition(const StarAlgebra& alg,
                                            const std::vector<AlgebraElement>& basis,
                                            std::uint64_t seed) {
  const int n = alg.dim();
  Matrix raw(n, static_cast<Eigen::Index>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j) {
    alg.check_element(basis[j]);
    raw.col(j) = to_vec(basis[j]);
  }
  Matrix w = orthonormal_span(raw);
  if (!in_span(w, to_vec(alg.unit()), tol::coeff))
    throw NotSubalgebra("subalgebra basis does not contain the unit");
  for (int i = 0; i < w.cols(); ++i) {
    AlgebraElement wi = from_vec(w.col(i));
    if (!in_span(w, to_vec(alg.involution(wi)), tol::coeff))
      throw NotSubalgebra("subalgebra basis is not closed under the involution");
    for (int j = 0; j < w.cols(); ++j)
      if (!in_span(w, to_vec(alg.convolve(wi, from_vec(w.col(j)))), tol::coeff))
        throw NotSubalgebra("subalgebra basis is not closed under products");
  }
  return decompose_span(alg, w, seed);
}

AlgebraElement block_component(const BlockDecomposition& bd, int i, const AlgebraElement& f) {
  const Matrix& u = bd.block_basis[i];
  Vector v = to_vec(f);
  return from_vec(u * (u.adjoint() * v));
}

std::vector<double> block_norms(const StarAlgebra& alg, const BlockDecomposition& bd,
                                const AlgebraElement& f) {
  std::vector<double> out;
  out.reserve(bd.blocks());
  for (int i = 0; i < bd.blocks(); ++i)
    out.push_back(cstar_norm(alg, block_component(bd, i, f)));
  return out;
}

double blockwise_norm(const StarAlgebra& alg, const BlockDecomposition& bd,
                      const AlgebraElement& f) {
  double best = 0.0;
  for (double v : block_norms(alg, bd, f)) best = std::max(best, v);
  return best;
}

bool is_simple(const BlockDecomposition& bd) { return bd.blocks() == 1; }

Ideal ideal_from_mask(const BlockDecomposition& bd, BlockMask mask) {
  Ideal out;
  out.blocks = mask;
  for (int i = 0; i < bd.blocks(); ++i)
    if (mask & (BlockMask{1} << i)) out.dim += bd.dims[i] * bd.dims[i];
  return out;
}

std::vector<Ideal> all_ideals(const BlockDecomposition& bd, int max_blocks) {
  int k = bd.blocks();
  if (k > max_blocks)
    throw BoundTooLarge("all_ideals: 2^" + std::to_string(k) + " subsets exceed the cap");
  std::vector<Ideal> out;
  out.reserve(size_t{1} << k);
  for (BlockMask mask = 0; mask < (BlockMask{1} << k); ++mask)
    out.push_back(ideal_from_mask(bd, mask));
  return out;
}

Ideal ideal_generated_by(const StarAlgebra& alg, const BlockDecomposition& bd,
                         const std::vector<AlgebraElement>& gens) {
  const int n = alg.dim();
  Matrix v(n, static_cast<Eigen::Index>(gens.size()));
  for (size_t j = 0; j < gens.size(); ++j) {
    alg.check_element(gens[j]);
    v.col(j) = to_vec(gens[j]);
  }
  Matrix span = orthonormal_span(v);
  for (;;) {
    std::vector<Vector> extra;
    for (int j = 0; j < span.cols(); ++j) {
      AlgebraElement x = from_vec(span.col(j));
      for (ElementId a = 0; a < n; ++a) {
        extra.push_back(to_vec(alg.convolve(alg.delta(a), x)));
        extra.push_back(to_vec(alg.convolve(x, alg.delta(a))));
      }
    }
    Matrix all(n, span.cols() + static_cast<Eigen::Index>(extra.size()));
    all.leftCols(span.cols()) = span;
    for (size_t t = 0; t < extra.size(); ++t) all.col(span.cols() + t) = extra[t];
    Matrix next = orthonormal_span(all);
    if (next.cols() == span.cols()) break;
    span = next;
  }

  BlockMask mask = 0;
  for (int i = 0; i < bd.blocks(); ++i) {
    Matrix proj = bd.block_basis[i].adjoint() * span;
    if (proj.size() && proj.cwiseAbs().maxCoeff() > 1e-7) mask |= BlockMask{1} << i;
  }
  Ideal ideal = ideal_from_mask(bd, mask);
  if (ideal.dim != span.cols())
    throw ClosureNotIdeal("ideal closure spans " + std::to_string(span.cols()) +
                          " dimensions but the matched blocks give " +
                          std::to_string(ideal.dim));
  return ideal;
}

bool contained_in_ideal(const BlockDecomposition& bd, const AlgebraElement& f, BlockMask mask,
                        double eps) {
  Vector v = to_vec(f);
  double scale = std::max(1.0, max_abs(v));
  for (int i = 0; i < bd.blocks(); ++i) {
    if (mask & (BlockMask{1} << i)) continue;
    Vector comp = bd.block_basis[i].adjoint() * v;
    if (max_abs(comp) > eps * scale) return false;
  }
  return true;
}

Ideal vanishing_ideal_at(const StarAlgebra& alg, const BlockDecomposition& bd, ElementId q) {
  const auto& g = alg.groupoid();
  if (!is_group_bundle(g))
    throw NotCentralInclusion(
        "vanishing_ideal_at: unit-space functions are central only over a group bundle");
  if (q < 0 || q >= g.n || !g.is_unit(q))
    throw NotAUnit("vanishing_ideal_at: " + std::to_string(q) + " is not a unit");
  std::vector<AlgebraElement> gens;
  for (ElementId u : g.units)
    if (u != q) gens.push_back(alg.delta(u));
  return ideal_generated_by(alg, bd, gens);
}

double quotient_norm(const StarAlgebra& alg, const BlockDecomposition& bd, BlockMask mask,
                     const AlgebraElement& f) {
  double best = 0.0;
  for (int i = 0; i < bd.blocks(); ++i)
    if (!(mask & (BlockMask{1} << i)))
      best = std::max(best, cstar_norm(alg, block_component(bd, i, f)));
  return best;
}

double p_unif(const StarAlgebra& alg, const BlockDecomposition& bd, ElementId q,
              const AlgebraElement& f) {
  return quotient_norm(alg, bd, vanishing_ideal_at(alg, bd, q).blocks, f);
}

Coeff apply_state(const State& psi, const AlgebraElement& f) {
  if (psi.c.size() != f.c.size()) throw GroupoidMismatch("state size mismatch");
  Coeff out{};
  for (size_t i = 0; i < f.c.size(); ++i) out += psi.c[i] * f.c[i];
  return out;
}

State unit_expectation_state(const StarAlgebra& alg, ElementId q) {
  const auto& g = alg.groupoid();
  if (q < 0 || q >= g.n || !g.is_unit(q))
    throw NotAUnit("unit_expectation_state: " + std::to_string(q) + " is not a unit");
  State psi;
  psi.c.assign(g.n, Coeff{});
  psi.c[q] = 1.0;
  return psi;
}

State vector_state(const StarAlgebra& alg, const Vector& xi) {
  State psi;
  psi.c.assign(alg.dim(), Coeff{});
  for (ElementId a = 0; a < alg.dim(); ++a) {
    Vector la = left_mult_matrix(alg, alg.delta(a)) * xi;
    psi.c[a] = xi.dot(la);  // Eigen dot conjugates the first argument
  }
  return psi;
}

Matrix state_gram(const StarAlgebra& alg, const State& psi) {
  const auto& g = alg.groupoid();
  if (psi.c.size() != static_cast<size_t>(g.n)) throw GroupoidMismatch("state size mismatch");
  Matrix gram = Matrix::Zero(g.n, g.n);
  for (ElementId a = 0; a < g.n; ++a) {
    ElementId ai = g.inverse[a];
    for (ElementId b = 0; b < g.n; ++b)
      if (g.composable(ai, b)) gram(a, b) = psi.c[g.mul[ai * g.n + b]];
  }
  return gram;
}

namespace {

struct GnsCore {
  Matrix gram;
  Matrix basis;  // n x d with basis^* gram basis = identity
};

GnsCore gns_core(const StarAlgebra& alg, const State& psi) {
  Matrix gram = state_gram(alg, psi);
  double scale = std::max(1.0, gram.size() ? gram.cwiseAbs().maxCoeff() : 0.0);
  if ((gram - gram.adjoint()).cwiseAbs().maxCoeff() > tol::gram_state * scale)
    throw NotPositive("state Gram matrix is not hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
  const auto& ev = es.eigenvalues();
  double top = std::max(ev.size() ? ev(ev.size() - 1) : 0.0, 0.0);
  if (ev.size() && ev(0) < -tol::gram_state * std::max(1.0, top))
    throw NotPositive("state Gram matrix has eigenvalue " + std::to_string(ev(0)));
  double cut = 1e-10 * std::max(1.0, top);
  GnsCore core;
  core.gram = std::move(gram);
  std::vector<int> keep;
  for (int i = 0; i < ev.size(); ++i)
    if (ev(i) > cut) keep.push_back(i);
  core.basis.resize(alg.dim(), static_cast<Eigen::Index>(keep.size()));
  for (size_t t = 0; t < keep.size(); ++t)
    core.basis.col(t) = es.eigenvectors().col(keep[t]) / std::sqrt(ev(keep[t]));
  return core;
}

}  // namespace

Representation gns_rep(const StarAlgebra& alg, const State& psi) {
  GnsCore core = gns_core(alg, psi);
  Representation rep;
  rep.dim = static_cast<int>(core.basis.cols());
  rep.ops.reserve(alg.dim());
  for (ElementId a = 0; a < alg.dim(); ++a)
    rep.ops.push_back(core.basis.adjoint() * core.gram *
                      left_mult_matrix(alg, alg.delta(a)) * core.basis);
  return rep;
}

Matrix left_kernel(const StarAlgebra& alg, const State& psi) {
  Matrix gram = state_gram(alg, psi);
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
  const auto& ev = es.eigenvalues();
  double top = std::max(ev.size() ? ev(ev.size() - 1) : 0.0, 0.0);
  double cut = 1e-10 * std::max(1.0, top);
  std::vector<int> keep;
  for (int i = 0; i < ev.size(); ++i)
    if (ev(i) <= cut) keep.push_back(i);
  Matrix out(alg.dim(), static_cast<Eigen::Index>(keep.size()));
  for (size_t t = 0; t < keep.size(); ++t) out.col(t) = es.eigenvectors().col(keep[t]);
  return out;
}

Ideal kernel_ideal(const StarAlgebra& alg, const BlockDecomposition& bd, const State& psi) {
  double scale = 0.0;
  for (const auto& v : psi.c) scale = std::max(scale, std::abs(v));
  scale = std::max(scale, 1.0);
  BlockMask mask = 0;
  for (int i = 0; i < bd.blocks(); ++i) {
    bool vanishes = true;
    for (ElementId a = 0; a < alg.dim() && vanishes; ++a) {
      auto x = block_component(bd, i, alg.delta(a));
      vanishes = std::abs(apply_state(psi, x)) <= tol::coeff * scale;
    }
    if (vanishes) mask |= BlockMask{1} << i;
  }
  return ideal_from_mask(bd, mask);
}

double p_e(const StarAlgebra& alg, ElementId q, const AlgebraElement& f) {
  alg.check_element(f);
  GnsCore core = gns_core(alg, unit_expectation_state(alg, q));
  Matrix op = core.basis.adjoint() * core.gram * left_mult_matrix(alg, f) * core.basis;
  return operator_norm(op);
}

EvaluationHom evaluation_hom(const StarAlgebra& alg, ElementId u) {
  const auto& g = alg.groupoid();
  require_group_bundle(g, "evaluation_hom");
  if (u < 0 || u >= g.n || !g.is_unit(u))
    throw NotAUnit("evaluation_hom: " + std::to_string(u) + " is not a unit");
  EvaluationHom ev;
  ev.unit = u;
  ev.fiber = g.isotropy_at(u);
  int k = static_cast<int>(ev.fiber.size());
  std::vector<int> pos(g.n, -1);
  for (int i = 0; i < k; ++i) pos[ev.fiber[i]] = i;
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[i][j] = pos[g.mul[ev.fiber[i] * g.n + ev.fiber[j]]];
  ev.fiber_group = make_group(table, "fiber@" + std::to_string(u));
  ev.codomain = group_groupoid(ev.fiber_group);
  return ev;
}

AlgebraElement evaluate(const EvaluationHom& ev, const AlgebraElement& f) {
  if (f.size() < static_cast<int>(ev.fiber.size()))
    throw GroupoidMismatch("evaluate: element too small for the fiber");
  AlgebraElement out{std::vector<Coeff>(ev.fiber.size(), Coeff{})};
  for (size_t i = 0; i < ev.fiber.size(); ++i)
    out.c[ev.codomain.from_group[static_cast<int>(i)]] = f.c[ev.fiber[i]];
  return out;
}

}  // namespace gpdlab
