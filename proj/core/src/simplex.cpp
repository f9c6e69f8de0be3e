#include "halg/simplex.hpp"

#include "halg/graded.hpp"

#include <stdexcept>

namespace halg {

namespace {

void check_poly_degree(int deg) {
    if (deg < 0)
        throw std::invalid_argument("polynomial exponents must be nonnegative");
    if (deg > poly_degree_cap)
        throw std::runtime_error("polynomial degree cap exceeded");
}

// Polynomial in u with Poly2 coefficients, used for the cone pullbacks.
using UPoly = std::map<int, Poly2>;

UPoly upoly_mul(const UPoly& p, const UPoly& q) {
    UPoly out;
    for (const auto& [i, a] : p)
        for (const auto& [j, b] : q) {
            Poly2 ab = poly_mul(a, b);
            Poly2& slot = out[i + j];
            for (const auto& [m, c] : ab)
                poly_add(slot, m.first, m.second, c);
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
}

// u s + (1-u) e written as a polynomial in u: u (x - e) + e.
UPoly cone_coordinate(const Poly2& x, const Scalar& e) {
    UPoly out;
    Poly2 shifted = x;
    poly_add(shifted, 0, 0, -e);
    if (!shifted.empty())
        out[1] = shifted;
    if (e != 0)
        poly_add(out[0], 0, 0, e);
    return out;
}

// Integral over u in [0,1] of u^k times the pullback of g along the
// contraction (u, s, t) -> (u s + (1-u) e_s, u t + (1-u) e_t).
Poly2 cone_integral(const Poly2& g, int k, const Scalar& es, const Scalar& et) {
    UPoly base_s = cone_coordinate(Poly2{{{1, 0}, 1}}, es);
    UPoly base_t = cone_coordinate(Poly2{{{0, 1}, 1}}, et);
    Poly2 out;
    for (const auto& [mono, coeff] : g) {
        UPoly term{{0, Poly2{{{0, 0}, 1}}}};
        for (int r = 0; r < mono.first; ++r)
            term = upoly_mul(term, base_s);
        for (int r = 0; r < mono.second; ++r)
            term = upoly_mul(term, base_t);
        for (const auto& [j, poly] : term)
            for (const auto& [m, c] : poly)
                poly_add(out, m.first, m.second, coeff * c / Scalar(j + k + 1));
    }
    return out;
}

Poly1 derivative(const Poly1& p) {
    Poly1 out;
    for (const auto& [j, c] : p)
        if (j > 0)
            poly_add(out, j - 1, c * j);
    return out;
}

Poly2 derivative_s(const Poly2& p) {
    Poly2 out;
    for (const auto& [m, c] : p)
        if (m.first > 0)
            poly_add(out, m.first - 1, m.second, c * m.first);
    return out;
}

Poly2 derivative_t(const Poly2& p) {
    Poly2 out;
    for (const auto& [m, c] : p)
        if (m.second > 0)
            poly_add(out, m.first, m.second - 1, c * m.second);
    return out;
}

void add_poly(Poly1& p, const Poly1& q, const Scalar& c = 1) {
    for (const auto& [j, a] : q)
        poly_add(p, j, c * a);
}

void add_poly(Poly2& p, const Poly2& q, const Scalar& c = 1) {
    for (const auto& [m, a] : q)
        poly_add(p, m.first, m.second, c * a);
}

// Poly2 evaluated along the affine line (s, t) = (a0 + a1 u, b0 + b1 u).
Poly1 substitute_line(const Poly2& p, const Scalar& a0, const Scalar& a1, const Scalar& b0,
                      const Scalar& b1) {
    Poly1 s_lin, t_lin;
    if (a0 != 0)
        poly_add(s_lin, 0, a0);
    if (a1 != 0)
        poly_add(s_lin, 1, a1);
    if (b0 != 0)
        poly_add(t_lin, 0, b0);
    if (b1 != 0)
        poly_add(t_lin, 1, b1);
    Poly1 out;
    for (const auto& [m, c] : p) {
        Poly1 term{{0, c}};
        for (int r = 0; r < m.first; ++r)
            term = poly_mul(term, s_lin);
        for (int r = 0; r < m.second; ++r)
            term = poly_mul(term, t_lin);
        add_poly(out, term);
    }
    return out;
}

std::pair<Scalar, Scalar> triangle_vertex(int i) {
    switch (i) {
    case 0:
        return {0, 0};
    case 1:
        return {1, 0};
    case 2:
        return {0, 1};
    default:
        throw std::invalid_argument("triangle vertex index must be 0, 1, or 2");
    }
}

} // namespace

void poly_add(Poly1& p, int j, const Scalar& c) {
    check_poly_degree(j);
    auto it = p.find(j);
    if (it == p.end()) {
        if (c != 0)
            p.emplace(j, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        p.erase(it);
}

void poly_add(Poly2& p, int a, int b, const Scalar& c) {
    check_poly_degree(a + b);
    auto key = std::make_pair(a, b);
    auto it = p.find(key);
    if (it == p.end()) {
        if (c != 0)
            p.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        p.erase(it);
}

Poly1 poly_mul(const Poly1& p, const Poly1& q) {
    Poly1 out;
    for (const auto& [i, a] : p)
        for (const auto& [j, b] : q)
            poly_add(out, i + j, a * b);
    return out;
}

Poly2 poly_mul(const Poly2& p, const Poly2& q) {
    Poly2 out;
    for (const auto& [m, a] : p)
        for (const auto& [n, b] : q)
            poly_add(out, m.first + n.first, m.second + n.second, a * b);
    return out;
}

Scalar poly_eval(const Poly1& p, const Scalar& t) {
    Scalar out = 0;
    for (const auto& [j, c] : p) {
        Scalar power = 1;
        for (int r = 0; r < j; ++r)
            power *= t;
        out += c * power;
    }
    return out;
}

Scalar poly_eval(const Poly2& p, const Scalar& s, const Scalar& t) {
    Scalar out = 0;
    for (const auto& [m, c] : p) {
        Scalar power = 1;
        for (int r = 0; r < m.first; ++r)
            power *= s;
        for (int r = 0; r < m.second; ++r)
            power *= t;
        out += c * power;
    }
    return out;
}

Form1 form_d(const Form1& w) {
    return Form1{{}, derivative(w.part0)};
}

Form2 form_d(const Form2& w) {
    Form2 out;
    out.parts = derivative_s(w.part0);
    out.partt = derivative_t(w.part0);
    out.partst = derivative_s(w.partt);
    add_poly(out.partst, derivative_t(w.parts), -1);
    return out;
}

Form1 form_h(int i, const Form1& w) {
    if (i != 0 && i != 1)
        throw std::invalid_argument("interval vertex index must be 0 or 1");
    Form1 out;
    for (const auto& [j, c] : w.part1) {
        poly_add(out.part0, j + 1, c / Scalar(j + 1));
        if (i == 1)
            poly_add(out.part0, 0, -c / Scalar(j + 1));
    }
    return out;
}

Form2 form_h(int i, const Form2& w) {
    auto [es, et] = triangle_vertex(i);
    Form2 out;
    // 1-form part: (s - e_s) H0(f_s) + (t - e_t) H0(f_t).
    Poly2 s_shift{{{1, 0}, 1}};
    poly_add(s_shift, 0, 0, -es);
    Poly2 t_shift{{{0, 1}, 1}};
    poly_add(t_shift, 0, 0, -et);
    add_poly(out.part0, poly_mul(s_shift, cone_integral(w.parts, 0, es, et)));
    add_poly(out.part0, poly_mul(t_shift, cone_integral(w.partt, 0, es, et)));
    // 2-form part: -(t - e_t) H1(f_st) ds + (s - e_s) H1(f_st) dt.
    Poly2 h1 = cone_integral(w.partst, 1, es, et);
    add_poly(out.parts, poly_mul(t_shift, h1), -1);
    add_poly(out.partt, poly_mul(s_shift, h1));
    return out;
}

Scalar form_eval(int i, const Form1& w) {
    if (i != 0 && i != 1)
        throw std::invalid_argument("interval vertex index must be 0 or 1");
    return poly_eval(w.part0, Scalar(i));
}

Scalar form_eval(int i, const Form2& w) {
    auto [es, et] = triangle_vertex(i);
    return poly_eval(w.part0, es, et);
}

Form1 form_wedge(const Form1& a, const Form1& b) {
    Form1 out;
    out.part0 = poly_mul(a.part0, b.part0);
    out.part1 = poly_mul(a.part0, b.part1);
    add_poly(out.part1, poly_mul(a.part1, b.part0));
    return out;
}

Form2 form_wedge(const Form2& a, const Form2& b) {
    Form2 out;
    out.part0 = poly_mul(a.part0, b.part0);
    out.parts = poly_mul(a.part0, b.parts);
    add_poly(out.parts, poly_mul(a.parts, b.part0));
    out.partt = poly_mul(a.part0, b.partt);
    add_poly(out.partt, poly_mul(a.partt, b.part0));
    out.partst = poly_mul(a.part0, b.partst);
    add_poly(out.partst, poly_mul(a.partst, b.part0));
    add_poly(out.partst, poly_mul(a.parts, b.partt));
    add_poly(out.partst, poly_mul(a.partt, b.parts), -1);
    return out;
}

Form1 form_restrict(int lo, int hi, const Form2& w) {
    Form1 out;
    if (lo == 0 && hi == 1) { // (s, t) = (u, 0), ds -> du, dt -> 0
        out.part0 = substitute_line(w.part0, 0, 1, 0, 0);
        out.part1 = substitute_line(w.parts, 0, 1, 0, 0);
    } else if (lo == 1 && hi == 2) { // (s, t) = (1-u, u), ds -> -du, dt -> du
        out.part0 = substitute_line(w.part0, 1, -1, 0, 1);
        out.part1 = substitute_line(w.partt, 1, -1, 0, 1);
        add_poly(out.part1, substitute_line(w.parts, 1, -1, 0, 1), -1);
    } else if (lo == 0 && hi == 2) { // (s, t) = (0, u), ds -> 0, dt -> du
        out.part0 = substitute_line(w.part0, 0, 0, 0, 1);
        out.part1 = substitute_line(w.partt, 0, 0, 0, 1);
    } else {
        throw std::invalid_argument("edge must be one of 01, 12, 02");
    }
    return out;
}

} // namespace halg
