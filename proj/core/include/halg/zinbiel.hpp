#pragma once

#include <halg/multimap.hpp>

#include <map>
#include <vector>

namespace halg {

// Words v₁…v_p are ordered tensors; no reordering is performed on storage.
// The half-shuffle product, its coproduct, and the induced coderivation /
// morphism actions all keep the last letter of each participating block
// anchored, which is what makes the coalgebra cofree over its cogenerators.

/// Half-shuffle product of two words:
///   (v₁…v_p)·(v_{p+1}…v_{p+q}) = Σ_{σ∈Sh(p,q-1)} ε(σ)⁻¹-signed shuffle of the
/// first p+q-1 letters with v_{p+q} kept last.
WordSum zin_product(const Word& a, const Word& b);

/// Bilinear extension to sums of words.
WordSum zin_product(const WordSum& a, const WordSum& b);

/// Deconcatenation-style coproduct. For each cut size k of v₁…v_p,
/// shuffles of the first p-1 letters feed (first k) ⊗ (rest, v_p last).
/// Weight-one words are primitive: the reduced coproduct vanishes.
WordPairSum zin_coproduct(const Word& w);

/// Iterated coproduct Δ^{p-1}: all splittings into p blocks, obtained by
/// repeatedly expanding the first tensor factor. Returns block tuples with
/// coefficients. p = 1 returns {w} with coefficient 1.
std::map<std::vector<Word>, Scalar> zin_iterated_coproduct(const Word& w, int p);

/// Weight-p component of the coderivation extending the family D (the
/// component D_k has arity k and fixed homological degree).
/// On a weight-n word, each summand applies D_k to a shuffle-selected block
/// whose final letter stays put, then reinserts the image letter.
WordSum zin_coderivation_weight(const MapFamily& D, const Word& w, int p);

/// Full coderivation: sum of all weight components inside the length cap.
WordSum zin_coderivation(const MapFamily& D, const Word& w);

/// Weight-p component of the coalgebra morphism with degree-0 corestrictions
/// F_k: F(u₁…uₙ)|_p = Σ_{k₁+…+k_p=n} Σ_{σ∈Hsh(k₁,…,k_p)} (F_{k₁}⊗…⊗F_{k_p})(σ·word).
WordSum zin_morphism_weight(const MapFamily& F, const Word& w, int p);

/// Full morphism action inside the length cap.
WordSum zin_morphism(const MapFamily& F, const Word& w);

} // namespace halg
