#pragma once

#include <halg/rational.hpp>

#include <map>
#include <utility>

namespace halg {

// Polynomial differential forms on the standard 1- and 2-simplex, with exact
// rational coefficients. Forms are graded negatively: 0-forms sit in degree
// 0, 1-forms in degree -1, 2-forms in degree -2, so the de Rham differential
// has degree -1 throughout.
//
// The contraction operator h(i) integrates along the straight-line
// contraction onto vertex i (pull back along (u, x) -> u x + (1-u) e_i, then
// integrate the fiber over u in [0,1]). Together with evaluation at the
// vertex it satisfies
//   d h(i) + h(i) d = id - eval(i),   h(i) h(j) + h(j) h(i) = 0,
//   eval(i) h(i) = 0.

/// Polynomial in one variable t: exponent -> coefficient, zeros absent.
using Poly1 = std::map<int, Scalar>;
/// Polynomial in two variables (s, t): (exponent_s, exponent_t) -> coeff.
using Poly2 = std::map<std::pair<int, int>, Scalar>;

void poly_add(Poly1& p, int j, const Scalar& c);
void poly_add(Poly2& p, int a, int b, const Scalar& c);
Poly1 poly_mul(const Poly1& p, const Poly1& q);
Poly2 poly_mul(const Poly2& p, const Poly2& q);
Scalar poly_eval(const Poly1& p, const Scalar& t);
Scalar poly_eval(const Poly2& p, const Scalar& s, const Scalar& t);

/// Form on the interval: part0 + part1 dt.
struct Form1 {
    Poly1 part0;
    Poly1 part1;
    bool operator==(const Form1&) const = default;
};

/// Form on the triangle with coordinates (s, t) (the barycentric coordinates
/// of vertices 1 and 2): part0 + parts ds + partt dt + partst ds^dt.
struct Form2 {
    Poly2 part0;
    Poly2 parts;
    Poly2 partt;
    Poly2 partst;
    bool operator==(const Form2&) const = default;
};

Form1 form_d(const Form1& w);
Form2 form_d(const Form2& w);

/// Contraction onto vertex i; raises form degree by one (h of a 0-form is 0).
/// On the interval, h(i) integrates the dt-part from i to t.
Form1 form_h(int i, const Form1& w);
Form2 form_h(int i, const Form2& w);

/// Evaluation of the 0-form part at vertex i (vertices of the triangle:
/// 0 -> (0,0), 1 -> (1,0), 2 -> (0,1)); higher form parts evaluate to zero.
Scalar form_eval(int i, const Form1& w);
Scalar form_eval(int i, const Form2& w);

Form1 form_wedge(const Form1& a, const Form1& b);
Form2 form_wedge(const Form2& a, const Form2& b);

/// Restriction of a triangle form to an edge, parameterized by u in [0,1]
/// running from the lower to the higher vertex:
///   edge 01: (s,t) = (u, 0);  edge 12: (s,t) = (1-u, u);  edge 02: (0, u).
Form1 form_restrict(int lo, int hi, const Form2& w);

} // namespace halg
