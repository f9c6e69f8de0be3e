// Polynomial forms on the interval and the triangle: contraction relations,
// wedge/differential compatibility, vertex evaluation, edge restriction, and
// the exact values the rest of the suite leans on.

#include "halg/simplex.hpp"

#include <cassert>
#include <cstdio>
#include <random>
#include <stdexcept>

using namespace halg;

static Poly1 random_poly1(std::mt19937_64& rng, int maxdeg) {
    Poly1 p;
    for (int k = 0; k < 3; ++k)
        poly_add(p, static_cast<int>(rng() % (maxdeg + 1)), static_cast<int>(rng() % 7) - 3);
    return p;
}

static Poly2 random_poly2(std::mt19937_64& rng, int maxdeg) {
    Poly2 p;
    for (int k = 0; k < 3; ++k) {
        int a = static_cast<int>(rng() % (maxdeg + 1));
        int b = static_cast<int>(rng() % (maxdeg - a + 1));
        poly_add(p, a, b, static_cast<int>(rng() % 7) - 3);
    }
    return p;
}

static Form1 random_form1(std::mt19937_64& rng, int maxdeg) {
    return Form1{random_poly1(rng, maxdeg), random_poly1(rng, maxdeg - 1)};
}

static Form2 random_form2(std::mt19937_64& rng, int maxdeg) {
    return Form2{random_poly2(rng, maxdeg), random_poly2(rng, maxdeg - 1),
                 random_poly2(rng, maxdeg - 1), random_poly2(rng, maxdeg - 2)};
}

static void acc(Poly1& p, const Poly1& q, int scale = 1) {
    for (const auto& [j, c] : q)
        poly_add(p, j, c * scale);
}

static void acc(Poly2& p, const Poly2& q, int scale = 1) {
    for (const auto& [m, c] : q)
        poly_add(p, m.first, m.second, c * scale);
}

static Form1 form_add(const Form1& a, const Form1& b, int scale = 1) {
    Form1 out = a;
    acc(out.part0, b.part0, scale);
    acc(out.part1, b.part1, scale);
    return out;
}

static Form2 form_add(const Form2& a, const Form2& b, int scale = 1) {
    Form2 out = a;
    acc(out.part0, b.part0, scale);
    acc(out.parts, b.parts, scale);
    acc(out.partt, b.partt, scale);
    acc(out.partst, b.partst, scale);
    return out;
}

static Poly1 mono1(int j, const Scalar& c) {
    Poly1 p;
    poly_add(p, j, c);
    return p;
}

static Poly2 mono2(int a, int b, const Scalar& c) {
    Poly2 p;
    poly_add(p, a, b, c);
    return p;
}

int main() {
    std::mt19937_64 rng(417);

    // polynomial arithmetic: evaluation is a ring homomorphism
    {
        for (int trial = 0; trial < 30; ++trial) {
            Poly1 p = random_poly1(rng, 6), q = random_poly1(rng, 6);
            Scalar t(static_cast<int>(rng() % 9) - 4, 3);
            assert(poly_eval(poly_mul(p, q), t) == poly_eval(p, t) * poly_eval(q, t));
            Poly2 u = random_poly2(rng, 6), v = random_poly2(rng, 6);
            Scalar s2(static_cast<int>(rng() % 9) - 4, 5);
            assert(poly_eval(poly_mul(u, v), s2, t) == poly_eval(u, s2, t) * poly_eval(v, s2, t));
        }
    }

    // exact contraction values on the interval: h(i) integrates dt from i
    {
        Form1 dt{{}, mono1(0, 1)};
        assert(form_h(0, dt) == (Form1{mono1(1, 1), {}}));
        Poly1 t_minus_1 = mono1(1, 1);
        poly_add(t_minus_1, 0, -1);
        assert(form_h(1, dt) == (Form1{t_minus_1, {}}));

        Form1 t2{mono1(2, 1), {}};
        assert(form_d(t2) == (Form1{{}, mono1(1, 2)}));
        // {d, h(0)} on t^2 returns t^2 - t^2(0) = t^2
        Form1 dh = form_add(form_d(form_h(0, t2)), form_h(0, form_d(t2)));
        assert(dh == t2);
    }

    // exact contraction values on the triangle: monomial 1-form and area form
    {
        // h(0)(s^a t^b ds) = s^{a+1} t^b / (a+b+1)
        Form2 w{{}, mono2(2, 1, 1), {}, {}};
        assert(form_h(0, w) == (Form2{mono2(3, 1, Scalar(1, 4)), {}, {}, {}}));
        // h(0)(s^a t^b ds^dt) = (-s^a t^{b+1} ds + s^{a+1} t^b dt) / (a+b+2)
        Form2 a{{}, {}, {}, mono2(1, 1, 1)};
        assert(form_h(0, a) ==
               (Form2{{}, mono2(1, 2, Scalar(-1, 4)), mono2(2, 1, Scalar(1, 4)), {}}));
        // contraction onto the other vertices recovers coordinate differences
        Form2 ds{{}, mono2(0, 0, 1), {}, {}};
        Poly2 s_minus_1 = mono2(1, 0, 1);
        poly_add(s_minus_1, 0, 0, -1);
        assert(form_h(1, ds) == (Form2{s_minus_1, {}, {}, {}}));
        assert(form_h(2, ds) == (Form2{mono2(1, 0, 1), {}, {}, {}}));
        Form2 dt{{}, {}, mono2(0, 0, 1), {}};
        Poly2 t_minus_1 = mono2(0, 1, 1);
        poly_add(t_minus_1, 0, 0, -1);
        assert(form_h(1, dt) == (Form2{mono2(0, 1, 1), {}, {}, {}}));
        assert(form_h(2, dt) == (Form2{t_minus_1, {}, {}, {}}));
    }

    // interval contraction relations on random forms:
    // d h(i) + h(i) d = id - eval(i), h(i)h(j) + h(j)h(i) = 0, eval(i) h(i) = 0
    {
        for (int trial = 0; trial < 40; ++trial) {
            Form1 w = random_form1(rng, 6);
            for (int i = 0; i <= 1; ++i) {
                Form1 lhs = form_add(form_d(form_h(i, w)), form_h(i, form_d(w)));
                Form1 expect = w;
                poly_add(expect.part0, 0, -form_eval(i, w));
                assert(lhs == expect);
                assert(form_eval(i, form_h(i, w)) == 0);
                for (int j = 0; j <= 1; ++j)
                    assert(form_add(form_h(i, form_h(j, w)), form_h(j, form_h(i, w))) == Form1{});
            }
            assert(form_d(form_d(w)) == Form1{});
        }
    }

    // triangle contraction relations, all three vertices
    {
        for (int trial = 0; trial < 40; ++trial) {
            Form2 w = random_form2(rng, 6);
            for (int i = 0; i <= 2; ++i) {
                Form2 lhs = form_add(form_d(form_h(i, w)), form_h(i, form_d(w)));
                Form2 expect = w;
                poly_add(expect.part0, 0, 0, -form_eval(i, w));
                assert(lhs == expect);
                assert(form_eval(i, form_h(i, w)) == 0);
                for (int j = 0; j <= 2; ++j)
                    assert(form_add(form_h(i, form_h(j, w)), form_h(j, form_h(i, w))) == Form2{});
            }
            assert(form_d(form_d(w)) == Form2{});
        }
    }

    // wedge: graded Leibniz for d, anticommutativity of 1-forms
    {
        for (int trial = 0; trial < 25; ++trial) {
            // interval: 0-form times arbitrary form
            Form1 p{random_poly1(rng, 5), {}};
            Form1 w = random_form1(rng, 5);
            assert(form_d(form_wedge(p, w)) ==
                   form_add(form_wedge(form_d(p), w), form_wedge(p, form_d(w))));

            // triangle: 0-form (sign +) and 1-form (sign -) against a general form
            Form2 q{random_poly2(rng, 4), {}, {}, {}};
            Form2 v = random_form2(rng, 4);
            assert(form_d(form_wedge(q, v)) ==
                   form_add(form_wedge(form_d(q), v), form_wedge(q, form_d(v))));
            Form2 one{{}, random_poly2(rng, 4), random_poly2(rng, 4), {}};
            assert(form_d(form_wedge(one, v)) ==
                   form_add(form_wedge(form_d(one), v), form_wedge(one, form_d(v)), -1));
            // 1-forms anticommute, so the self-wedge vanishes
            assert(form_wedge(one, one) == Form2{});
            Form2 other{{}, random_poly2(rng, 4), random_poly2(rng, 4), {}};
            assert(form_wedge(one, other) == form_add(Form2{}, form_wedge(other, one), -1));
        }
        // ds ^ dt is the positive area form
        Form2 ds{{}, mono2(0, 0, 1), {}, {}};
        Form2 dt{{}, {}, mono2(0, 0, 1), {}};
        assert(form_wedge(ds, dt) == (Form2{{}, {}, {}, mono2(0, 0, 1)}));
        assert(form_wedge(dt, ds) == (Form2{{}, {}, {}, mono2(0, 0, -1)}));
    }

    // vertex evaluation picks out the 0-form part at (0,0), (1,0), (0,1)
    {
        Form2 w{mono2(1, 0, 2), random_poly2(rng, 3), random_poly2(rng, 3), {}};
        poly_add(w.part0, 0, 1, 3);
        poly_add(w.part0, 0, 0, 5);
        assert(form_eval(0, w) == 5);
        assert(form_eval(1, w) == 7);
        assert(form_eval(2, w) == 8);
    }

    // edge restriction: frozen values, compatibility with d and with eval
    {
        // w = st + 2t ds + 3s dt
        Form2 w{mono2(1, 1, 1), mono2(0, 1, 2), mono2(1, 0, 3), {}};
        assert(form_restrict(0, 1, w) == Form1{}); // t = 0 kills every term
        assert(form_restrict(0, 2, w) == Form1{}); // s = 0 likewise
        // edge 12: (s,t) = (1-u, u) gives u - u^2 + (3 - 5u) du
        Poly1 p0 = mono1(1, 1);
        poly_add(p0, 2, -1);
        Poly1 p1 = mono1(0, 3);
        poly_add(p1, 1, -5);
        assert(form_restrict(1, 2, w) == (Form1{p0, p1}));

        for (int trial = 0; trial < 25; ++trial) {
            Form2 v = random_form2(rng, 5);
            const int edges[3][2] = {{0, 1}, {1, 2}, {0, 2}};
            for (auto& e : edges) {
                assert(form_restrict(e[0], e[1], form_d(v)) ==
                       form_d(form_restrict(e[0], e[1], v)));
                Form1 r = form_restrict(e[0], e[1], v);
                assert(form_eval(0, r) == form_eval(e[0], v));
                assert(form_eval(1, r) == form_eval(e[1], v));
            }
        }
    }

    // guard rails: bad vertex/edge indices, negative exponents, the degree cap
    {
        Form1 w{mono1(1, 1), {}};
        bool threw = false;
        try {
            form_h(2, w);
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        assert(threw);
        threw = false;
        try {
            form_restrict(1, 0, Form2{});
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        assert(threw);
        threw = false;
        try {
            Poly1 p;
            poly_add(p, -1, 1);
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        assert(threw);
        threw = false;
        try {
            Poly1 p;
            poly_add(p, 13, 1);
        } catch (const std::runtime_error&) {
            threw = true;
        }
        assert(threw);
        threw = false;
        try {
            Poly2 p;
            poly_add(p, 7, 6, 1);
        } catch (const std::runtime_error&) {
            threw = true;
        }
        assert(threw);
    }

    std::printf("test_simplex: all checks passed\n");
    return 0;
}
