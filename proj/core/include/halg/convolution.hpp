#pragma once

#include "halg/infinity.hpp"
#include "halg/simplex.hpp"
#include "halg/two_term.hpp"

#include <utility>
#include <vector>

namespace halg {

// The space of homomorphisms from the cofree coalgebra on sV to W carries a
// Lie-infinity structure (the convolution structure) whose Maurer-Cartan
// elements of degree -1 are exactly the infinity morphisms V -> W. Tensoring
// with polynomial differential forms on the interval or the triangle gives
// the algebras in which homotopies between morphisms live; the contraction
// operators of simplex.hpp transport Maurer-Cartan elements between a vertex
// value and a form part, which yields extraction, lifting, and simplex-based
// composition of two-term homotopies.
//
// Sign conventions: bracket families are graded antisymmetric with the
// arity-i bracket of homological degree i-2, and the Maurer-Cartan series
// carries the weights (1/p!)(-1)^{p(p-1)/2}. The gauge-flow recursion at the
// end of this header instead absorbs those alternating signs into its terms
// (the convention flag reported by the command-line tools distinguishes the
// two spellings).

/// Shared context for convolution computations: the Leibniz-flavor source
/// (V, l_i), the target (W, m_i), the suspended source space, and the
/// coderivation corestrictions of the source.
struct ConvAlgebra {
    InftyStructure source;
    InftyStructure target;
    GradedSpace s_source;
    MapFamily D;
};

ConvAlgebra make_conv_algebra(const InftyStructure& source, const InftyStructure& target);

/// Homogeneous homomorphism from the reduced tensor module over sV to W,
/// tabulated by arity: components[p] has arity p and total degree `degree`.
/// Components are kept inside the structural arity bound and zero components
/// are pruned, so equality is plain field equality.
struct ConvElement {
    int degree = 0;
    MapFamily components;

    bool operator==(const ConvElement&) const = default;
};

/// Largest arity at which a degree-d element can take nonzero values: some
/// input word degree n·[min, max](sV) must land in the degree range of W
/// after adding d. Capped by the word length bound.
int conv_arity_bound(const ConvAlgebra& alg, int d);

ConvElement conv_zero(int degree);
bool conv_is_zero(const ConvElement& a);
/// Drop zero components (canonical form for equality tests).
void conv_prune(ConvElement& a);
/// Degree-checked sum and scalar multiple.
ConvElement conv_add(const ConvElement& a, const ConvElement& b);
ConvElement conv_scaled(const ConvElement& a, const Scalar& c);
/// Value on a basis word over sV (dispatches on word length).
Vec conv_apply(const ConvElement& a, const Word& w);

/// Convolution brackets: for a single argument L_1 f = m_1 ∘ f + (-1)^{|f|}
/// f ∘ D; for p arguments the composite of the iterated coproduct, the
/// graded antisymmetrization Σ_σ ε(σ) sign(σ) f_{σ(1)} ⊗ ... ⊗ f_{σ(p)},
/// and m_p. All arguments must live over the same algebra pair.
ConvElement conv_bracket(const ConvAlgebra& alg, const std::vector<ConvElement>& fs);

/// Maurer-Cartan residual Σ_p (1/p!)(-1)^{p(p-1)/2} L_p(α,...,α) of a
/// degree -1 element; zero iff α encodes an infinity morphism.
ConvElement mc_residual(const ConvAlgebra& alg, const ConvElement& alpha);

/// Dictionary between morphism component families and degree -1 elements:
/// the arity-p component of the element is s⁻¹ ∘ F_p, with F_p the degree-0
/// corestriction of φ_p. morphism_to_mc and mc_to_morphism are mutually
/// inverse, and the residual of morphism_to_mc(m) vanishes iff m passes
/// check_inf_morphism.
ConvElement morphism_to_mc(const InftyMorphism& m);
InftyMorphism mc_to_morphism(const ConvAlgebra& alg, const ConvElement& alpha);

/// Element of the convolution algebra tensored with polynomial forms on the
/// interval: Σ_j part0[j] ⊗ t^j + Σ_j part1[j] ⊗ t^j dt. Coefficients in
/// part0 have degree `degree`, those in part1 have degree `degree` + 1
/// (dt carries degree -1). Zero coefficients are pruned.
struct ConvTensor1 {
    int degree = 0;
    std::map<int, ConvElement> part0;
    std::map<int, ConvElement> part1;

    bool operator==(const ConvTensor1&) const = default;
};

/// Same over the triangle with coordinates (s, t): monomial coefficients for
/// the form basis {1, ds, dt, ds∧dt}; coefficient degrees are `degree`,
/// `degree`+1, `degree`+1, and `degree`+2 respectively.
struct ConvTensor2 {
    int degree = 0;
    std::map<std::pair<int, int>, ConvElement> part0;
    std::map<std::pair<int, int>, ConvElement> parts;
    std::map<std::pair<int, int>, ConvElement> partt;
    std::map<std::pair<int, int>, ConvElement> partst;

    bool operator==(const ConvTensor2&) const = default;
};

ConvTensor1 tensor_zero1(int degree);
ConvTensor2 tensor_zero2(int degree);
/// a ⊗ 1 (pure 0-form, constant in the simplex coordinates).
ConvTensor1 constant_tensor1(const ConvElement& a);
ConvTensor2 constant_tensor2(const ConvElement& a);
bool tensor_is_zero(const ConvTensor1& x);
bool tensor_is_zero(const ConvTensor2& x);
ConvTensor1 tensor_add(const ConvTensor1& x, const ConvTensor1& y);
ConvTensor2 tensor_add(const ConvTensor2& x, const ConvTensor2& y);
ConvTensor1 tensor_scaled(const ConvTensor1& x, const Scalar& c);
ConvTensor2 tensor_scaled(const ConvTensor2& x, const Scalar& c);

/// Internal differential: L_1 applied to every coefficient (no sign).
ConvTensor1 tensor_delta(const ConvAlgebra& alg, const ConvTensor1& x);
ConvTensor2 tensor_delta(const ConvAlgebra& alg, const ConvTensor2& x);
/// Form-side de Rham differential with the sign (-1)^{|coefficient|}.
ConvTensor1 tensor_d(const ConvTensor1& x);
ConvTensor2 tensor_d(const ConvTensor2& x);
/// Form-side contraction toward vertex i with the sign (-1)^{|coefficient|};
/// together with the total differential it satisfies the interval relations
/// of simplex.hpp coefficient-wise.
ConvTensor1 tensor_h(int i, const ConvTensor1& x);
ConvTensor2 tensor_h(int i, const ConvTensor2& x);
/// Evaluation of the 0-form part at vertex i (degree 0, no sign).
ConvElement tensor_eval(int i, const ConvTensor1& x);
ConvElement tensor_eval(int i, const ConvTensor2& x);
/// Pullback to the edge lo->hi of the triangle, coefficient-wise.
ConvTensor1 tensor_restrict(int lo, int hi, const ConvTensor2& x);

/// Brackets on the form-valued algebra: one argument gives the total
/// differential tensor_delta + tensor_d; p arguments give
/// (-1)^{Σ_{r<s} |ω_r||v_s|} L_p(v_1,...,v_p) ⊗ (ω_1 ∧ ... ∧ ω_p) summed
/// over coefficient monomials.
ConvTensor1 tensor_bracket(const ConvAlgebra& alg, const std::vector<ConvTensor1>& xs);
ConvTensor2 tensor_bracket(const ConvAlgebra& alg, const std::vector<ConvTensor2>& xs);

/// Maurer-Cartan residual of a degree -1 form-valued element.
ConvTensor1 tensor_mc_residual(const ConvAlgebra& alg, const ConvTensor1& x);
ConvTensor2 tensor_mc_residual(const ConvAlgebra& alg, const ConvTensor2& x);

/// Vertex decomposition of a Maurer-Cartan element α over a simplex:
/// (ε_i α, (δ+d) h_i α). The first part is a constant Maurer-Cartan element,
/// the second is exact with vanishing evaluation at vertex i. Throws when
/// the input residual is nonzero.
std::pair<ConvElement, ConvTensor1> b_forward(const ConvAlgebra& alg, const ConvTensor1& alpha,
                                              int i);
std::pair<ConvElement, ConvTensor2> b_forward(const ConvAlgebra& alg, const ConvTensor2& alpha,
                                              int i);

/// Inverse of the vertex decomposition: the fixed point of
/// α_{k+1} = μ + ν - h_i Σ_{j≥2} (1/j!) L̄_j(α_k,...,α_k), starting from
/// α_0 = μ + ν. Requires μ Maurer-Cartan and ε_i ν = 0; the iteration must
/// stabilize within (arity bound + 2) steps, else a degree-window
/// misconfiguration is reported. For two-term data the fixed point is
/// reached at the second stage.
ConvTensor1 b_inverse(const ConvAlgebra& alg, const ConvElement& mu, const ConvTensor1& nu,
                      int i);
ConvTensor2 b_inverse(const ConvAlgebra& alg, const ConvElement& mu, const ConvTensor2& nu,
                      int i);

/// Read a two-term homotopy off an interval Maurer-Cartan element: the
/// endpoint evaluations give the morphisms f (vertex 0) and g (vertex 1),
/// and θ₁ = (β(1) - β(0)) ∘ s with β = h_i α. Throws when an endpoint fails
/// the morphism relations.
TwoTermHomotopy extract_homotopy(const TwoTermLeibniz& a, const TwoTermLeibniz& b,
                                 const ConvTensor1& alpha, int i);

/// Build an interval Maurer-Cartan element inducing the given homotopy: the
/// form part is the affine interpolation with β(i) = 0 and
/// β(1-i) = (-1)^i θ₁ ∘ s⁻¹, and the element is assembled from the vertex-i
/// endpoint by the fixed-point construction. extract_homotopy at the same
/// vertex returns the input homotopy.
ConvTensor1 lift_homotopy(const TwoTermHomotopy& th, int i);

/// Vertical composite computed geometrically: lift θ: f ⇒ g onto the edge
/// 0->1 and τ: g ⇒ h onto 1->2, extend the form parts affinely over the
/// triangle, solve for the Maurer-Cartan element with endpoint g at vertex
/// 1, restrict to the edge 0->2, and extract. Agrees with vcompose.
TwoTermHomotopy vcompose_via_simplex(const TwoTermHomotopy& tau, const TwoTermHomotopy& theta);

/// Maurer-Cartan residual for a plain antisymmetric bracket family acting on
/// vectors: Σ_p (1/p!)(-1)^{p(p-1)/2} l_p(α,...,α) for degree -1 α.
Vec mc_residual(const MapFamily& brackets, const Vec& alpha);

/// Formal flow line α(t) = Σ_k t^k/k! e^k through a Maurer-Cartan element in
/// the direction of a degree-0 vector r.
struct GaugeCurve {
    Vec alpha;
    Vec r;
    std::vector<Vec> coefficients; // e^0 = alpha, ..., e^order

    int order() const { return static_cast<int>(coefficients.size()) - 1; }
};

/// Coefficients of the flow line by the inductive rule
///   e^{i+1} = Σ_n (1/n!)(-1)^{n(n+1)/2} Σ_{k_1+...+k_n=i} i!/(k_1!...k_n!)
///             l_{n+1}(e^{k_1},...,e^{k_n}, r),
/// the order-by-order expansion of the differential equation
///   d_t α(t) = Σ_n (1/n!)(-1)^{n(n+1)/2} l_{n+1}(α(t),...,α(t), r).
/// The flow preserves the Maurer-Cartan condition at every polynomial order.
GaugeCurve gauge_curve(const MapFamily& brackets, const Vec& alpha, const Vec& r, int order);

} // namespace halg
