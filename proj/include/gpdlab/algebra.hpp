#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "gpdlab/action.hpp"
#include "gpdlab/groupoid.hpp"

namespace gpdlab {

using Coeff = std::complex<double>;

// Element of the convolution *-algebra of a finite groupoid, stored as a dense
// coefficient vector indexed by element id.
struct AlgebraElement {
  std::vector<Coeff> c;

  int size() const { return static_cast<int>(c.size()); }
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(Coeff z);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(Coeff z, AlgebraElement a) { return a *= z; }
};

// Convolution context over a validated groupoid. Products run over the cached
// composable pairs; (f h)(c) sums f(a) h(b) over factorizations ab = c, and the
// involution is f*(a) = conj(f(a^-1)).
class StarAlgebra {
 public:
  explicit StarAlgebra(FiniteGroupoid g);

  const FiniteGroupoid& groupoid() const { return g_; }
  int dim() const { return g_.n; }

  AlgebraElement zero() const { return {std::vector<Coeff>(g_.n, Coeff{})}; }
  AlgebraElement delta(ElementId a) const;
  AlgebraElement unit() const;  // sum of delta_u over units

  AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& h) const;
  AlgebraElement involution(const AlgebraElement& f) const;
  // restriction to the unit space (coefficients off the units dropped)
  AlgebraElement expectation(const AlgebraElement& f) const;
  // max over units of the larger of the absolute row/column sums |f| on u G and G u
  double i_norm(const AlgebraElement& f) const;
  // delta_gamma f delta_gamma^*, computed by the index formula rather than two products
  AlgebraElement conjugate_by_delta(ElementId gamma, const AlgebraElement& f) const;

  std::vector<ElementId> support(const AlgebraElement& f, double tol = 1e-12) const;
  void check_element(const AlgebraElement& f) const;  // GroupoidMismatch on size clash

  double norm2(const AlgebraElement& f) const;  // coefficient l2 norm

 private:
  FiniteGroupoid g_;
  std::vector<std::vector<ElementId>> by_range_;  // arrows grouped by range
};

// The singleton bisections {gamma}: every delta_gamma normalizes the unit-space
// subalgebra, and together they span the whole algebra.
std::vector<AlgebraElement> elementary_normalizers(const StarAlgebra& alg);

// Generators delta_gamma - delta_r(gamma) over the non-unit arrows of a group
// bundle (NotGroupBundle otherwise).
std::vector<AlgebraElement> augmentation_generators(const StarAlgebra& alg);

// Crossed-product picture of a transformation-groupoid element: the family
// a_g(q), stored flat as a[g * space + q].
struct CrossedProductElement {
  int group_order = 0;
  int space = 0;
  std::vector<Coeff> a;

  Coeff& at(int g, int q) { return a[g * space + q]; }
  Coeff at(int g, int q) const { return a[g * space + q]; }
};

// Relabeling a_g(q) = f(g, g^-1 q); a *-isomorphism onto the crossed product.
CrossedProductElement upsilon(const TransformationGroupoid& t, const AlgebraElement& f);
AlgebraElement upsilon_inverse(const TransformationGroupoid& t, const CrossedProductElement& x);
// (x y)_g(q) = sum over g1 g2 = g of x_{g1}(q) y_{g2}(g1^-1 q)
CrossedProductElement cp_product(const GroupAction& a, const CrossedProductElement& x,
                                 const CrossedProductElement& y);
// (x*)_g(q) = conj(x_{g^-1}(g^-1 q))
CrossedProductElement cp_star(const GroupAction& a, const CrossedProductElement& x);

// group elements with nonempty fixed-point set, together with that set; these index
// the direct summands of the subalgebra supported on the interior of the isotropy
std::vector<std::pair<int, std::vector<int>>> interior_isotropy_subalgebra_support(
    const GroupAction& a);

// Target of the diagonal embedding: the constant-fiber bundle Q x G, i.e. one copy
// of the group over every point. qg_to_bundle[q][x] is the bundle id of (q, x).
struct DeltaContext {
  GroupBundle bundle;
  std::vector<std::vector<ElementId>> qg_to_bundle;
};

DeltaContext make_delta_context(const GroupAction& a);

// f_g u_g -> f_g (x) v_g on elements supported in the isotropy
// (SupportOutsideInteriorIsotropy otherwise); the image lives in the algebra of
// context.bundle.g.
AlgebraElement delta_embedding(const DeltaContext& ctx, const TransformationGroupoid& t,
                               const AlgebraElement& f);

}  // namespace gpdlab
