#pragma once

#include <halg/symmetric.hpp>
#include <halg/zinbiel.hpp>

#include <map>
#include <string>
#include <vector>

namespace halg {

// Homological convention throughout: the arity-i bracket has degree i-2,
// the arity-i morphism component has degree i-1. Tensor-word structures
// (Leibniz flavor) extend over the half-shuffle coalgebra; antisymmetric
// structures (Lie flavor) extend over the symmetric coalgebra.

enum class Flavor { leibniz, lie };

std::string to_string(Flavor f);

struct InftyStructure {
    Flavor flavor = Flavor::leibniz;
    GradedSpace space;
    MapFamily brackets; // i -> l_i, arity i, degree i-2
};

struct InftyMorphism {
    InftyStructure source;
    InftyStructure target;
    MapFamily components; // i -> phi_i, arity i, degree i-1
};

/// Residual bookkeeping for a family of identities indexed by arity.
struct IdentityReport {
    struct Sample {
        int index = 0;
        Word args;
        Vec residual;
    };

    bool pass = true;
    long long tuples_checked = 0;
    std::map<int, long long> failure_counts; // identity index -> failing tuples
    std::vector<Sample> samples;             // first few failures
    std::size_t sample_cap = 20;
    std::vector<std::string> precheck_errors;

    void record_failure(int index, const Word& args, const Vec& residual);
    void record_error(std::string msg);
};

/// Identities with index above 2·(degree span) + 1 hold for degree reasons.
int structural_identity_bound(const GradedSpace& sp);

/// Left-hand side of the arity-n higher Jacobi identity on one argument
/// tuple; n is the word length. Zero for every tuple iff the structure is
/// a homotopy algebra of the given flavor.
Vec leibniz_jacobi_residual(const MapFamily& brackets, const Word& args);
Vec lie_jacobi_residual(const MapFamily& brackets, const Word& args);

/// LHS - RHS of the arity-n morphism identity on one argument tuple.
Vec inf_morphism_residual(const InftyMorphism& m, const Word& args);

/// Degree/antisymmetry prechecks followed by identity sweeps over all basis
/// tuples of arity <= n_max (default: the structural bound).
IdentityReport check_leibniz_infinity(const InftyStructure& s, int n_max = -1);
IdentityReport check_lie_infinity(const InftyStructure& s, int n_max = -1);
IdentityReport check_inf_structure(const InftyStructure& s, int n_max = -1);
IdentityReport check_inf_morphism(const InftyMorphism& m, int n_max = -1);

/// Coderivation corestrictions on the suspended space:
/// D_i = (-1)^{i(i-1)/2} s ∘ l_i ∘ (s⁻¹)^{⊗i}, all of degree -1.
MapFamily to_codifferential(const MapFamily& brackets);

/// Inverse dictionary: l_i = (-1)^{i(i-1)/2} s⁻¹ ∘ D_i ∘ s^{⊗i}.
MapFamily brackets_from_codifferential(const MapFamily& D);

/// Morphism corestrictions F_i = (-1)^{i(i-1)/2} s ∘ φ_i ∘ (s⁻¹)^{⊗i},
/// all of degree 0, and the inverse dictionary.
MapFamily morphism_to_corestrictions(const MapFamily& components);
MapFamily corestrictions_to_morphism(const MapFamily& F);

/// Letter part of D(D(w)) on a word over the suspended space.
Vec codifferential_square_apply(const MapFamily& D, Flavor flavor, const Word& w);

/// Corestrictions of D∘D, tabulated per arity on the suspended space
/// (arities 1..n_max; degree -2 maps). All zero iff D is a codifferential.
std::map<int, MultiMap> codifferential_square_residual(const MapFamily& D, Flavor flavor,
                                                       const GradedSpace& suspended,
                                                       int n_max);

/// Letter part of (F∘D_src - D_tgt∘F)(w) on a word over the suspended
/// source space; zero for all words iff F intertwines the codifferentials.
Vec morphism_defect_apply(const MapFamily& F, const MapFamily& Dsrc, const MapFamily& Dtgt,
                          Flavor flavor, const Word& w);

/// Identity morphism on a structure.
InftyMorphism identity_inf_morphism(const InftyStructure& s);

/// Composite morphism: extend both to coalgebra morphisms, compose, project
/// back to corestrictions, and desuspend.
InftyMorphism compose_inf_morphisms(const InftyMorphism& g, const InftyMorphism& f);

} // namespace halg
