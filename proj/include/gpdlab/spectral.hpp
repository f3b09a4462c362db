#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "gpdlab/algebra.hpp"
#include "gpdlab/rng.hpp"

namespace gpdlab {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// All numeric thresholds used by the verification layer, pinned in one place.
namespace tol {
inline constexpr double coeff = 1e-9;         // coefficient agreement
inline constexpr double norm = 1e-7;          // norm agreement
inline constexpr double idem = 1e-8;          // idempotent / unit reconstruction
inline constexpr double gram_state = 1e-9;    // state Gram eigenvalues >= -gram_state
inline constexpr double gram_eta = 1e-8;      // isotropy functional Gram eigenvalues
inline constexpr double spectral_gap = 1e-6;  // minimal eigenvalue cluster separation
inline constexpr double rank = 1e-8;          // rank decisions relative to sigma_max
}  // namespace tol

Vector to_vec(const AlgebraElement& f);
AlgebraElement from_vec(const Vector& v);

// Matrix of left convolution by f on l2 of the groupoid in the delta basis; this
// is the direct sum of the regular representations over all units, with the
// coordinates grouped by source fiber.
Matrix left_mult_matrix(const StarAlgebra& alg, const AlgebraElement& f);
// right counterpart x -> x f
Matrix right_mult_matrix(const StarAlgebra& alg, const AlgebraElement& f);

double operator_norm(const Matrix& m);

// A finite-dimensional *-representation described by its values on the delta basis.
struct Representation {
  int dim = 0;
  std::vector<ElementId> basis;  // coordinate labels for fiber models, empty for GNS
  std::vector<Matrix> ops;       // ops[a] = image of delta_a

  Matrix apply(const AlgebraElement& f) const;
  // largest deviation from multiplicativity / involution over all basis pairs
  double hom_defect(const StarAlgebra& alg) const;
};

// Left convolution on the fiber G u with its orthonormal delta basis (ascending id).
Representation regular_rep_at(const StarAlgebra& alg, ElementId u);

// The C*-norm: max over units of the operator norm in the regular representation.
double cstar_norm(const StarAlgebra& alg, const AlgebraElement& f);

// Wedderburn data of a *-subalgebra (the whole algebra included): minimal central
// idempotents found by spectral splitting of a seeded generic self-adjoint central
// element, block dimensions, and orthonormal bases of the block subspaces.
struct BlockDecomposition {
  Matrix sub_basis;                      // n x m orthonormal columns spanning the subalgebra
  std::vector<AlgebraElement> idempotents;
  std::vector<int> dims;                 // block i is a full matrix algebra of size dims[i]
  std::vector<Matrix> block_basis;       // n x dims[i]^2 orthonormal columns of block i

  int blocks() const { return static_cast<int>(dims.size()); }
  int sub_dim() const { return static_cast<int>(sub_basis.cols()); }
};

BlockDecomposition block_decomposition(const StarAlgebra& alg,
                                       std::uint64_t seed = kDefaultSeed);
// basis need not be orthonormal or independent; it must span a *-closed subalgebra
// containing the unit (NotSubalgebra otherwise)
BlockDecomposition subalgebra_decomposition(const StarAlgebra& alg,
                                            const std::vector<AlgebraElement>& basis,
                                            std::uint64_t seed = kDefaultSeed);

// Component of f in block i. Valid orthogonal projection because distinct blocks
// are orthogonal in the coefficient inner product.
AlgebraElement block_component(const BlockDecomposition& bd, int i, const AlgebraElement& f);
std::vector<double> block_norms(const StarAlgebra& alg, const BlockDecomposition& bd,
                                const AlgebraElement& f);
double blockwise_norm(const StarAlgebra& alg, const BlockDecomposition& bd,
                      const AlgebraElement& f);

// Ideals of a semisimple algebra are exactly the sums of blocks; a subset is
// represented by a bit mask.
using BlockMask = std::uint64_t;

struct Ideal {
  BlockMask blocks = 0;
  int dim = 0;
};

bool is_simple(const BlockDecomposition& bd);
// the complete two-sided ideal lattice, all 2^k of them (BoundTooLarge past the cap)
std::vector<Ideal> all_ideals(const BlockDecomposition& bd, int max_blocks = 20);
Ideal ideal_from_mask(const BlockDecomposition& bd, BlockMask mask);
// span closure of the generators under two-sided multiplication, identified with a
// block subset; ClosureNotIdeal if the dimensions do not reconcile
Ideal ideal_generated_by(const StarAlgebra& alg, const BlockDecomposition& bd,
                         const std::vector<AlgebraElement>& gens);
// whether the span of xs is contained in the span of the blocks of `mask`
bool contained_in_ideal(const BlockDecomposition& bd, const AlgebraElement& f, BlockMask mask,
                        double eps = tol::idem);

// ----- central quotient seminorms over a group bundle ------------------------

// The ideal generated by the unit-space functions vanishing at q
// (NotCentralInclusion when the groupoid is not a group bundle, NotAUnit for bad q).
Ideal vanishing_ideal_at(const StarAlgebra& alg, const BlockDecomposition& bd, ElementId q);
// quotient norm modulo the blocks of `mask`: max block norm outside the mask
double quotient_norm(const StarAlgebra& alg, const BlockDecomposition& bd, BlockMask mask,
                     const AlgebraElement& f);
double p_unif(const StarAlgebra& alg, const BlockDecomposition& bd, ElementId q,
              const AlgebraElement& f);
// GNS seminorm of the state ev_q after the unit-space expectation
double p_e(const StarAlgebra& alg, ElementId q, const AlgebraElement& f);

// ----- states and GNS --------------------------------------------------------

// psi(f) = sum_gamma c_gamma f(gamma)
struct State {
  std::vector<Coeff> c;
};

Coeff apply_state(const State& psi, const AlgebraElement& f);
State unit_expectation_state(const StarAlgebra& alg, ElementId q);  // ev_q after E
// <xi, L_f xi> in the coefficient inner product; positive by construction
State vector_state(const StarAlgebra& alg, const Vector& xi);

// Gram matrix psi(delta_a^* delta_b); must be Hermitian PSD for a state
Matrix state_gram(const StarAlgebra& alg, const State& psi);
// GNS representation on the Gram quotient (NotPositive when the Gram form fails)
Representation gns_rep(const StarAlgebra& alg, const State& psi);
// orthonormal basis of the left kernel { x : psi(x^* x) = 0 }
Matrix left_kernel(const StarAlgebra& alg, const State& psi);
// largest two-sided ideal annihilated by psi, as a block subset
Ideal kernel_ideal(const StarAlgebra& alg, const BlockDecomposition& bd, const State& psi);

// ----- evaluation over group bundles ----------------------------------------

// f -> sum over the fiber of f(gamma) v_gamma, landing in the fiber group algebra.
struct EvaluationHom {
  ElementId unit = -1;
  std::vector<ElementId> fiber;  // u G u ascending
  FiniteGroup fiber_group;       // Cayley table carried by the fiber
  GroupGroupoid codomain;
};

EvaluationHom evaluation_hom(const StarAlgebra& alg, ElementId u);
AlgebraElement evaluate(const EvaluationHom& ev, const AlgebraElement& f);

}  // namespace gpdlab
