#pragma once

#include <halg/infinity.hpp>

#include <utility>

namespace halg {

// Closed-form theory of structures concentrated in degrees 0 and 1: the
// bracket relations, morphisms, homotopies between morphisms, their vertical
// and horizontal compositions, and the dictionary between 3-term chain
// complexes and linear 2-categories.

struct TwoTermLeibniz {
    GradedSpace space; // degrees 0 and 1 only
    MultiMap l1;       // arity 1, degree -1
    MultiMap l2;       // arity 2, degree 0
    MultiMap l3;       // arity 3, degree 1
    bool operator==(const TwoTermLeibniz&) const = default;
};

struct TwoTermMorphism {
    TwoTermLeibniz source;
    TwoTermLeibniz target;
    MultiMap f1; // arity 1, degree 0
    MultiMap f2; // arity 2, degree 1
    bool operator==(const TwoTermMorphism&) const = default;
};

struct TwoTermHomotopy {
    TwoTermMorphism source; // f
    TwoTermMorphism target; // g
    MultiMap theta1;        // arity 1, degree 1
    bool operator==(const TwoTermHomotopy&) const = default;
};

/// Repackage as a generic homotopy structure / morphism (same data).
InftyStructure to_infinity(const TwoTermLeibniz& a);
InftyMorphism to_inf_morphism(const TwoTermMorphism& m);

/// Residual (left side minus right side) of one closed-form relation on one
/// argument tuple. Families are numbered 1..5 = (a)..(e) for algebras,
/// 1..4 = (a)..(d) for morphisms, 1..3 = (a)..(c) for homotopies; families
/// with several displayed equations dispatch on the degree pattern of the
/// tuple. Throws std::invalid_argument for a tuple no equation covers.
Vec two_term_relation_residual(const TwoTermLeibniz& a, int family, const Word& args);
Vec two_term_morphism_residual(const TwoTermMorphism& m, int family, const Word& args);
Vec two_term_homotopy_residual(const TwoTermHomotopy& h, int family, const Word& args);

/// Sweep every relation family over all basis tuples it quantifies over.
/// failure_counts is keyed by family number.
IdentityReport check_two_term_algebra(const TwoTermLeibniz& a);
IdentityReport check_two_term_morphism(const TwoTermMorphism& m);
IdentityReport check_homotopy(const TwoTermHomotopy& h);

TwoTermMorphism identity_two_term_morphism(const TwoTermLeibniz& a);

/// Composite first-then-second: (g∘f)_1 = g_1 f_1 and
/// (g∘f)_2 = g_1 f_2 + g_2 (f_1 ⊗ f_1).
TwoTermMorphism compose_two_term_morphisms(const TwoTermMorphism& g, const TwoTermMorphism& f);

/// The identity 2-cell on a morphism is the zero map.
TwoTermHomotopy zero_homotopy(const TwoTermMorphism& f);

/// Given f and a degree-1 map theta1, build the unique morphism g for which
/// theta1 is a homotopy f => g:
///   g_1 = f_1 + m_1 theta_1 + theta_1 l_1,
///   g_2 = f_2 + theta_1 l_2 - m_2(f_1 ., theta_1 .) - m_2(theta_1 ., g_1 .).
TwoTermHomotopy homotopy_from_map(const TwoTermMorphism& f, const MultiMap& theta1);

/// Vertical composite of tau: g => h with theta: f => g has component
/// tau_1 + theta_1.
TwoTermHomotopy vcompose(const TwoTermHomotopy& tau, const TwoTermHomotopy& theta);

/// Horizontal composite of tau: f' => g' (over W -> X) with theta: f => g
/// (over V -> W) has component g'_1 theta_1 + tau_1 f_1; the alternative
/// expression f'_1 theta_1 + tau_1 g_1 coincides for valid homotopies and a
/// mismatch throws.
TwoTermHomotopy hcompose(const TwoTermHomotopy& tau, const TwoTermHomotopy& theta);

// ---------------------------------------------------------------------------
// Chain complexes of length 3 versus linear 2-categories.
//
// An m-cell is a tuple (v_0, ..., v_m) with v_i in the degree-i slice; the
// category structure on those tuples is
//   s(v_0,...,v_m) = (v_0,...,v_{m-1}),
//   t(v_0,...,v_m) = (v_0,...,v_{m-1} + d v_m),
//   1_(v_0,...,v_m) = (v_0,...,v_m, 0),
//   (v_0,...,v_m) o_p (v'_0,...,v'_m) = (v_0,...,v_p, v_{p+1}+v'_{p+1}, ...),
// the last for tuples composable along a p-cell (the left factor acts first).

struct Cell {
    int level = 0;
    Vec value; // supported in degrees 0..level
    bool operator==(const Cell&) const = default;
};

struct Linear2Category {
    GradedSpace slices; // degree-i part: the i-cells with zero source
    MultiMap boundary;  // arity 1, degree -1, squares to zero

    int level_dim(int m) const; // dim of the space of m-cells
    Cell source(const Cell& a) const;
    Cell target(const Cell& a) const;
    Cell identity(const Cell& a) const;
    bool composable(int p, const Cell& a, const Cell& b) const;
    Cell compose(int p, const Cell& a, const Cell& b) const;
    std::vector<Cell> basis_cells(int m) const;
    bool operator==(const Linear2Category&) const = default;
};

/// Build the unique linear 2-category on a 3-term complex (throws unless
/// d has arity 1, degree -1, and squares to zero), and read the complex back.
Linear2Category chain_to_2cat(const GradedSpace& sp, const MultiMap& d);
std::pair<GradedSpace, MultiMap> two_cat_to_chain(const Linear2Category& L);

} // namespace halg
