// Reusable generators for two-term structures, morphisms, homotopies, and
// short chain complexes: random (generically invalid) data for equivalence
// sweeps, and hand-built families that satisfy the closed-form relations.
#pragma once

#include <halg/two_term.hpp>

#include "test_util.hpp"

#include <random>

namespace halg::testutil {

inline GradedSpace two_term_space(int dim0, int dim1) {
    GradedSpace sp{"V", {}};
    if (dim0 > 0)
        sp.dims[0] = dim0;
    if (dim1 > 0)
        sp.dims[1] = dim1;
    return sp;
}

// Arbitrary bracket tables of the right shapes; relations generically fail.
inline TwoTermLeibniz random_two_term(std::mt19937_64& rng, int dim0, int dim1) {
    GradedSpace sp = two_term_space(dim0, dim1);
    return TwoTermLeibniz{sp, random_map(rng, sp, sp, 1, -1), random_map(rng, sp, sp, 2, 0),
                          random_map(rng, sp, sp, 3, 1)};
}

inline TwoTermLeibniz zero_two_term(int dim0, int dim1) {
    TwoTermLeibniz a{two_term_space(dim0, dim1), {}, {}, {}};
    a.l1.arity = 1;
    a.l1.degree = -1;
    a.l2.arity = 2;
    a.l2.degree = 0;
    a.l3.arity = 3;
    a.l3.degree = 1;
    return a;
}

// Degree-0 part is the two-dimensional algebra with [y,y] = x, all brackets
// touching the degree-1 part vanish.
inline TwoTermLeibniz squares_two_term(int dim1) {
    TwoTermLeibniz a = zero_two_term(2, dim1);
    a.l2.add_entry({Basis{0, 1}, Basis{0, 1}}, Basis{0, 0}, 1);
    return a;
}

// Only the trilinear map is nonzero; every relation then holds.
inline TwoTermLeibniz trilinear_two_term(std::mt19937_64& rng, int dim0, int dim1) {
    TwoTermLeibniz a = zero_two_term(dim0, dim1);
    a.l3 = random_map(rng, a.space, a.space, 3, 1);
    return a;
}

// Only the differential is nonzero; its square vanishes for degree reasons.
inline TwoTermLeibniz differential_two_term(std::mt19937_64& rng, int dim0, int dim1) {
    TwoTermLeibniz a = zero_two_term(dim0, dim1);
    a.l1 = random_map(rng, a.space, a.space, 1, -1);
    return a;
}

// Degree-1 copy of the degree-0 algebra with the identity differential and
// the mixed brackets induced through it.
inline TwoTermLeibniz adjoint_two_term() {
    TwoTermLeibniz a = zero_two_term(2, 2);
    const Basis x{0, 0}, y{0, 1}, hx{1, 0}, hy{1, 1};
    a.l1.add_entry({hx}, x, 1);
    a.l1.add_entry({hy}, y, 1);
    a.l2.add_entry({y, y}, x, 1);
    a.l2.add_entry({y, hy}, hx, 1);
    a.l2.add_entry({hy, y}, hx, 1);
    return a;
}

inline TwoTermLeibniz valid_two_term(std::mt19937_64& rng) {
    switch (rng() % 5) {
    case 0:
        return zero_two_term(1 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 3));
    case 1:
        return squares_two_term(static_cast<int>(rng() % 3));
    case 2:
        return trilinear_two_term(rng, 1 + static_cast<int>(rng() % 3),
                                  1 + static_cast<int>(rng() % 2));
    case 3:
        return differential_two_term(rng, 1 + static_cast<int>(rng() % 3),
                                     1 + static_cast<int>(rng() % 2));
    default:
        return adjoint_two_term();
    }
}

inline TwoTermMorphism random_two_term_morphism(std::mt19937_64& rng, const TwoTermLeibniz& src,
                                                const TwoTermLeibniz& tgt) {
    return TwoTermMorphism{src, tgt, random_map(rng, src.space, tgt.space, 1, 0),
                           random_map(rng, src.space, tgt.space, 2, 1)};
}

// A valid endomorphism of a valid structure, built by pushing the identity
// along a random degree-1 map.
inline TwoTermMorphism valid_endomorphism(std::mt19937_64& rng, const TwoTermLeibniz& a) {
    MultiMap theta = random_map(rng, a.space, a.space, 1, 1);
    return homotopy_from_map(identity_two_term_morphism(a), theta).target;
}

// A 3-term complex (degrees 0..2) with an exactly vanishing square: the
// degree-1 slice splits as A + B, d maps degree 2 into A and kills A.
inline std::pair<GradedSpace, MultiMap> random_three_term_complex(std::mt19937_64& rng) {
    int n0 = 1 + static_cast<int>(rng() % 2);
    int a = 1 + static_cast<int>(rng() % 2);
    int b = 1 + static_cast<int>(rng() % 2);
    int n2 = 1 + static_cast<int>(rng() % 2);
    GradedSpace sp{"V", {{0, n0}, {1, a + b}, {2, n2}}};
    MultiMap d;
    d.arity = 1;
    d.degree = -1;
    for (int k = 0; k < n2; ++k)
        for (int i = 0; i < a; ++i)
            d.add_entry({Basis{2, k}}, Basis{1, i}, random_scalar(rng));
    for (int j = 0; j < b; ++j)
        for (int i = 0; i < n0; ++i)
            d.add_entry({Basis{1, a + j}}, Basis{0, i}, random_scalar(rng));
    return {sp, d};
}

} // namespace halg::testutil
