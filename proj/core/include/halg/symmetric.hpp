#pragma once

#include <halg/multimap.hpp>

#include <functional>
#include <map>
#include <vector>

namespace halg {

// Symmetric words are stored canonically: letters sorted by (degree, index),
// with the Koszul sign of the sorting absorbed into the coefficient. A word
// with a repeated odd-degree letter is zero.

/// Sorts a word into canonical form. Returns the sorted word and the sign of
/// the rearrangement (0 when the word vanishes by odd-letter repetition).
std::pair<Word, int> sym_canonical(const Word& w);

/// Adds c times the canonical form of w.
void add_sym_word(WordSum& s, const Word& w, const Scalar& c);

/// Commutative product: concatenation followed by canonical sorting.
WordSum sym_product(const WordSum& a, const WordSum& b);

/// Reduced coproduct: Σ_{i=1}^{p-1} Σ_{σ∈Sh(i,p-i)} ε(σ) (first i) ⊗ (rest).
/// Coassociative and graded cocommutative; weight-one words are primitive.
WordPairSum sym_coproduct(const Word& w);

/// Iterated coproduct Δ^{p-1}, expanding the first factor at each step.
std::map<std::vector<Word>, Scalar> sym_iterated_coproduct(const Word& w, int p);

/// Weight-p component of the coderivation extending D: on a weight-n word,
/// Σ_{σ∈Sh(k,n-k)} ε(σ) D_k(first block)·(second block) with k = n-p+1.
WordSum sym_coderivation_weight(const MapFamily& D, const Word& w, int p);

/// Full coderivation.
WordSum sym_coderivation(const MapFamily& D, const Word& w);

/// Weight-p component of the coalgebra morphism with degree-0 corestrictions:
/// (1/p!) Σ_{k₁+…+k_p=n} Σ_{σ∈Sh(k₁,…,k_p)} ε(σ) F_{k₁}(…)·…·F_{k_p}(…).
WordSum sym_morphism_weight(const MapFamily& F, const Word& w, int p);

/// Full morphism action.
WordSum sym_morphism(const MapFamily& F, const Word& w);

/// Operator on the reduced symmetric module, for convolution products.
/// `act` receives canonical words and returns canonical word sums.
struct SymOp {
    int degree = 0;
    std::function<WordSum(const Word&)> act;
};

/// Operator vanishing outside weight f.arity, acting by f into weight one.
SymOp sym_op_from_map(const MultiMap& f);

/// Operator form of the coderivation extending D.
SymOp sym_op_coderivation(const MapFamily& D);

/// Convolution product f⊙g = (product)∘(f⊗g)∘(coproduct):
///   (f⊙g)(v₁…v_p) = Σ_{i=1}^{p-1} Σ_{σ∈Sh(i,p-i)}
///       ε(σ)·(-1)^{|g|(v̄_{σ(1)}+…+v̄_{σ(i)})}·f(block₁)·g(block₂).
/// Graded commutative and associative.
SymOp sym_odot(const SymOp& f, const SymOp& g);

} // namespace halg
