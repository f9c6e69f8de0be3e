#pragma once

#include "halg/permutation.hpp"

#include <vector>

namespace halg {

/// Multilinear map V^{⊗arity} -> W of homogeneous degree, tabulated on basis
/// words. Only nonzero rows are stored; every stored output is required to sit
/// in degree word_degree(args) + degree.
struct MultiMap {
    int arity = 1;
    int degree = 0;
    std::map<Word, Vec> table;

    Vec apply(const Word& args) const;
    /// Multilinear extension to one vector argument per slot.
    Vec apply_vecs(const std::vector<Vec>& args) const;

    void add_entry(const Word& args, const Basis& out, const Scalar& c);
    void add_entries(const Word& args, const Vec& out, const Scalar& c = 1);
    bool is_zero() const;
    void prune(); // drop empty rows

    MultiMap& operator+=(const MultiMap& other);

    bool operator==(const MultiMap&) const = default;
};

MultiMap scaled(const MultiMap& f, const Scalar& c);

/// Identity map of a space (arity 1, degree 0).
MultiMap identity_map(const GradedSpace& sp);

/// Tensor evaluation (f1 ⊗ ... ⊗ fp)(w): w splits into consecutive blocks by
/// the arities; the result is the word of block images with the sign
/// (-1)^{ Σ_{s>1} |f_s| (|block_1| + ... + |block_{s-1}|) }.
WordSum apply_tensor(const std::vector<const MultiMap*>& fs, const Word& w);

/// Composite g ∘ (f1 ⊗ ... ⊗ fp) as a tabulated map; g must have arity p.
MultiMap compose_tensor(const MultiMap& g, const std::vector<const MultiMap*>& fs);

/// Composite g ∘ f for arity-1 g.
MultiMap compose1(const MultiMap& g, const MultiMap& f);

/// Sign exponent of the interchange (f1⊗...⊗fp)∘(g1⊗...⊗gp) =
/// (-1)^{Σ_{r<s} |f_s||g_r|} (f1 g1 ⊗ ... ⊗ fp gp).
int tensor_compose_sign(const std::vector<int>& fdegs, const std::vector<int>& gdegs);

/// Transpose of an arity-1 map on dual spaces ((V*)_{-d} ≅ (V_d)*, index kept):
/// fᵀ(ŷ) = (-1)^{|f||ŷ|} ŷ ∘ f.
MultiMap transpose(const MultiMap& f);

/// Sign of s^{⊗p} (equally (s⁻¹)^{⊗p}) on a word of degrees d1..dp:
/// (-1)^{ Σ_{r<p} (p-r) d_r }.
int power_suspension_sign(const std::vector<int>& degs);

/// Conjugation by suspension: s ∘ f ∘ (s⁻¹)^{⊗n}; letters shift degree +1.
MultiMap conjugate_up(const MultiMap& f);

/// Conjugation by desuspension: s⁻¹ ∘ f ∘ s^{⊗n}; letters shift degree -1.
MultiMap conjugate_down(const MultiMap& f);

/// Arity-indexed family of multilinear maps (brackets, coderivation or
/// coalgebra-morphism components). Missing arities act as zero.
struct MapFamily {
    std::map<int, MultiMap> comps;

    const MultiMap* at(int k) const {
        auto it = comps.find(k);
        return it == comps.end() ? nullptr : &it->second;
    }
    int max_arity() const { return comps.empty() ? 0 : comps.rbegin()->first; }
    void set(int k, MultiMap f) { comps.insert_or_assign(k, std::move(f)); }
    bool operator==(const MapFamily&) const = default;
};

} // namespace halg
