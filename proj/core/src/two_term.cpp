#include <halg/two_term.hpp>

#include <stdexcept>

namespace halg {

namespace {

// Zero maps may arrive with default metadata; hand back a zero map of the
// declared shape so that apply() accepts the tuples we feed it.
const MultiMap& norm(const MultiMap& f, int arity, int degree) {
    if (!f.is_zero() || (f.arity == arity && f.degree == degree))
        return f;
    static thread_local std::map<std::pair<int, int>, MultiMap> zeros;
    MultiMap& z = zeros[{arity, degree}];
    z.arity = arity;
    z.degree = degree;
    return z;
}

Vec ap1(const MultiMap& f, const Vec& v) { return f.apply_vecs({v}); }
Vec ap2(const MultiMap& f, const Vec& a, const Vec& b) { return f.apply_vecs({a, b}); }
Vec ap3(const MultiMap& f, const Vec& a, const Vec& b, const Vec& c) {
    return f.apply_vecs({a, b, c});
}

Vec mono(const Basis& b) { return Vec{{b, 1}}; }

std::vector<int> degree_pattern(const Word& args) {
    std::vector<int> p;
    p.reserve(args.size());
    for (const Basis& b : args)
        p.push_back(b.deg);
    return p;
}

[[noreturn]] void bad_tuple(const char* what) {
    throw std::invalid_argument(std::string(what) + ": no relation covers this degree pattern");
}

// f(w) for each basis word, assembled into a fresh table.
template <typename Fn>
MultiMap tabulate(const GradedSpace& sp, int arity, int degree, Fn&& fn) {
    MultiMap out;
    out.arity = arity;
    out.degree = degree;
    for (const Word& w : basis_words(sp, arity))
        for (const auto& [b, c] : fn(w))
            out.add_entry(w, b, c);
    return out;
}

bool shape_ok(const MultiMap& f, int arity, int degree) {
    return f.is_zero() || (f.arity == arity && f.degree == degree);
}

bool degrees_within(const GradedSpace& sp, int lo, int hi) {
    for (const auto& [deg, dim] : sp.dims)
        if (dim > 0 && (deg < lo || deg > hi))
            return false;
    return true;
}

std::vector<Basis> letters_of_degree(const GradedSpace& sp, int deg) {
    std::vector<Basis> out;
    for (int i = 0; i < sp.dim(deg); ++i)
        out.push_back(Basis{deg, i});
    return out;
}

void sweep(IdentityReport& report, int family, const std::vector<Word>& tuples,
           const std::function<Vec(const Word&)>& residual) {
    for (const Word& w : tuples) {
        ++report.tuples_checked;
        Vec r = residual(w);
        if (!is_zero(r))
            report.record_failure(family, w, r);
    }
}

std::vector<Word> tuples_by_pattern(const GradedSpace& sp, const std::vector<int>& pattern) {
    std::vector<Word> out{Word{}};
    for (int deg : pattern) {
        std::vector<Word> next;
        for (const Word& w : out)
            for (const Basis& b : letters_of_degree(sp, deg)) {
                Word v = w;
                v.push_back(b);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

} // namespace

InftyStructure to_infinity(const TwoTermLeibniz& a) {
    InftyStructure s{Flavor::leibniz, a.space, {}};
    if (!a.l1.is_zero())
        s.brackets.set(1, a.l1);
    if (!a.l2.is_zero())
        s.brackets.set(2, a.l2);
    if (!a.l3.is_zero())
        s.brackets.set(3, a.l3);
    return s;
}

InftyMorphism to_inf_morphism(const TwoTermMorphism& m) {
    InftyMorphism f{to_infinity(m.source), to_infinity(m.target), {}};
    if (!m.f1.is_zero())
        f.components.set(1, m.f1);
    if (!m.f2.is_zero())
        f.components.set(2, m.f2);
    return f;
}

Vec two_term_relation_residual(const TwoTermLeibniz& a, int family, const Word& args) {
    const MultiMap &l1 = norm(a.l1, 1, -1), &l2 = norm(a.l2, 2, 0), &l3 = norm(a.l3, 3, 1);
    const std::vector<int> p = degree_pattern(args);
    switch (family) {
    case 1: { // l1 l2(x,h) = l2(x, l1 h)  and  l1 l2(h,x) = l2(l1 h, x)
        if (p == std::vector<int>{0, 1}) {
            Vec res = ap1(l1, l2.apply(args));
            add_vec(res, ap2(l2, mono(args[0]), l1.apply({args[1]})), Scalar(-1));
            return res;
        }
        if (p == std::vector<int>{1, 0}) {
            Vec res = ap1(l1, l2.apply(args));
            add_vec(res, ap2(l2, l1.apply({args[0]}), mono(args[1])), Scalar(-1));
            return res;
        }
        bad_tuple("relation (a)");
    }
    case 2: { // l2(l1 h, k) = l2(h, l1 k)
        if (p != std::vector<int>{1, 1})
            bad_tuple("relation (b)");
        Vec res = ap2(l2, l1.apply({args[0]}), mono(args[1]));
        add_vec(res, ap2(l2, mono(args[0]), l1.apply({args[1]})), Scalar(-1));
        return res;
    }
    case 3: { // l1 l3(x,y,z) = l2(x,l2(y,z)) - l2(y,l2(x,z)) - l2(l2(x,y),z)
        if (p != std::vector<int>{0, 0, 0})
            bad_tuple("relation (c)");
        Vec x = mono(args[0]), y = mono(args[1]), z = mono(args[2]);
        Vec res = ap1(l1, l3.apply(args));
        add_vec(res, ap2(l2, x, l2.apply({args[1], args[2]})), Scalar(-1));
        add_vec(res, ap2(l2, y, l2.apply({args[0], args[2]})), Scalar(1));
        add_vec(res, ap2(l2, l2.apply({args[0], args[1]}), z), Scalar(1));
        return res;
    }
    case 4: { // the three mixed trilinear relations, one slot in degree 1
        Vec u = mono(args[0]), v = mono(args[1]), w = mono(args[2]);
        if (p == std::vector<int>{0, 0, 1}) {
            // l3(x,y,l1 h) = l2(x,l2(y,h)) - l2(y,l2(x,h)) - l2(l2(x,y),h)
            Vec res = ap3(l3, u, v, l1.apply({args[2]}));
            add_vec(res, ap2(l2, u, l2.apply({args[1], args[2]})), Scalar(-1));
            add_vec(res, ap2(l2, v, l2.apply({args[0], args[2]})), Scalar(1));
            add_vec(res, ap2(l2, l2.apply({args[0], args[1]}), w), Scalar(1));
            return res;
        }
        if (p == std::vector<int>{0, 1, 0}) {
            // l3(x,l1 h,y) = l2(x,l2(h,y)) - l2(h,l2(x,y)) - l2(l2(x,h),y)
            Vec res = ap3(l3, u, l1.apply({args[1]}), w);
            add_vec(res, ap2(l2, u, l2.apply({args[1], args[2]})), Scalar(-1));
            add_vec(res, ap2(l2, v, l2.apply({args[0], args[2]})), Scalar(1));
            add_vec(res, ap2(l2, l2.apply({args[0], args[1]}), w), Scalar(1));
            return res;
        }
        if (p == std::vector<int>{1, 0, 0}) {
            // l3(l1 h,x,y) = l2(h,l2(x,y)) - l2(x,l2(h,y)) - l2(l2(h,x),y)
            Vec res = ap3(l3, l1.apply({args[0]}), v, w);
            add_vec(res, ap2(l2, u, l2.apply({args[1], args[2]})), Scalar(-1));
            add_vec(res, ap2(l2, v, l2.apply({args[0], args[2]})), Scalar(1));
            add_vec(res, ap2(l2, l2.apply({args[0], args[1]}), w), Scalar(1));
            return res;
        }
        bad_tuple("relation (d)");
    }
    case 5: { // the ten-term compatibility of l2 with l3
        if (p != std::vector<int>{0, 0, 0, 0})
            bad_tuple("relation (e)");
        Vec w = mono(args[0]), x = mono(args[1]), y = mono(args[2]), z = mono(args[3]);
        const Basis &bw = args[0], &bx = args[1], &by = args[2], &bz = args[3];
        Vec res = ap2(l2, l3.apply({bw, bx, by}), z);
        add_vec(res, ap2(l2, w, l3.apply({bx, by, bz})), Scalar(1));
        add_vec(res, ap2(l2, x, l3.apply({bw, by, bz})), Scalar(-1));
        add_vec(res, ap2(l2, y, l3.apply({bw, bx, bz})), Scalar(1));
        add_vec(res, ap3(l3, l2.apply({bw, bx}), y, z), Scalar(-1));
        add_vec(res, ap3(l3, w, l2.apply({bx, by}), z), Scalar(1));
        add_vec(res, ap3(l3, x, l2.apply({bw, by}), z), Scalar(-1));
        add_vec(res, ap3(l3, w, x, l2.apply({by, bz})), Scalar(-1));
        add_vec(res, ap3(l3, w, y, l2.apply({bx, bz})), Scalar(1));
        add_vec(res, ap3(l3, x, y, l2.apply({bw, bz})), Scalar(-1));
        return res;
    }
    default:
        throw std::invalid_argument("two_term_relation_residual: family must be 1..5");
    }
}

Vec two_term_morphism_residual(const TwoTermMorphism& m, int family, const Word& args) {
    const MultiMap &l1 = norm(m.source.l1, 1, -1), &l2 = norm(m.source.l2, 2, 0),
                   &l3 = norm(m.source.l3, 3, 1);
    const MultiMap &m1 = norm(m.target.l1, 1, -1), &m2 = norm(m.target.l2, 2, 0),
                   &m3 = norm(m.target.l3, 3, 1);
    const MultiMap &f1 = norm(m.f1, 1, 0), &f2 = norm(m.f2, 2, 1);
    const std::vector<int> p = degree_pattern(args);
    switch (family) {
    case 1: { // m1 f1 h = f1 l1 h
        if (p != std::vector<int>{1})
            bad_tuple("morphism relation (a)");
        Vec res = ap1(m1, f1.apply(args));
        add_vec(res, ap1(f1, l1.apply(args)), Scalar(-1));
        return res;
    }
    case 2: { // m2(f1 x, f1 y) + m1 f2(x,y) = f1 l2(x,y)
        if (p != std::vector<int>{0, 0})
            bad_tuple("morphism relation (b)");
        Vec res = ap2(m2, f1.apply({args[0]}), f1.apply({args[1]}));
        add_vec(res, ap1(m1, f2.apply(args)), Scalar(1));
        add_vec(res, ap1(f1, l2.apply(args)), Scalar(-1));
        return res;
    }
    case 3: { // m2(f1 x, f1 h) = f1 l2(x,h) - f2(x, l1 h)   and the mirror
        if (p == std::vector<int>{0, 1}) {
            Vec res = ap2(m2, f1.apply({args[0]}), f1.apply({args[1]}));
            add_vec(res, ap1(f1, l2.apply(args)), Scalar(-1));
            add_vec(res, ap2(f2, mono(args[0]), l1.apply({args[1]})), Scalar(1));
            return res;
        }
        if (p == std::vector<int>{1, 0}) {
            Vec res = ap2(m2, f1.apply({args[0]}), f1.apply({args[1]}));
            add_vec(res, ap1(f1, l2.apply(args)), Scalar(-1));
            add_vec(res, ap2(f2, l1.apply({args[0]}), mono(args[1])), Scalar(1));
            return res;
        }
        bad_tuple("morphism relation (c)");
    }
    case 4: { // the trilinear compatibility
        if (p != std::vector<int>{0, 0, 0})
            bad_tuple("morphism relation (d)");
        const Basis &bx = args[0], &by = args[1], &bz = args[2];
        Vec x = mono(bx), y = mono(by), z = mono(bz);
        Vec res = ap3(m3, f1.apply({bx}), f1.apply({by}), f1.apply({bz}));
        add_vec(res, ap2(m2, f2.apply({bx, by}), f1.apply({bz})), Scalar(-1));
        add_vec(res, ap2(m2, f1.apply({bx}), f2.apply({by, bz})), Scalar(1));
        add_vec(res, ap2(m2, f1.apply({by}), f2.apply({bx, bz})), Scalar(-1));
        add_vec(res, ap1(f1, l3.apply(args)), Scalar(-1));
        add_vec(res, ap2(f2, l2.apply({bx, by}), z), Scalar(-1));
        add_vec(res, ap2(f2, x, l2.apply({by, bz})), Scalar(1));
        add_vec(res, ap2(f2, y, l2.apply({bx, bz})), Scalar(-1));
        return res;
    }
    default:
        throw std::invalid_argument("two_term_morphism_residual: family must be 1..4");
    }
}

Vec two_term_homotopy_residual(const TwoTermHomotopy& h, int family, const Word& args) {
    const TwoTermMorphism &f = h.source, &g = h.target;
    const MultiMap &m1 = norm(f.target.l1, 1, -1), &m2 = norm(f.target.l2, 2, 0);
    const MultiMap &l1 = norm(f.source.l1, 1, -1), &l2 = norm(f.source.l2, 2, 0);
    const MultiMap &f1 = norm(f.f1, 1, 0), &f2 = norm(f.f2, 2, 1);
    const MultiMap &g1 = norm(g.f1, 1, 0), &g2 = norm(g.f2, 2, 1);
    const MultiMap& th = norm(h.theta1, 1, 1);
    const std::vector<int> p = degree_pattern(args);
    switch (family) {
    case 1: { // g1 x - f1 x = m1 theta1 x
        if (p != std::vector<int>{0})
            bad_tuple("homotopy relation (a)");
        Vec res = g1.apply(args);
        add_vec(res, f1.apply(args), Scalar(-1));
        add_vec(res, ap1(m1, th.apply(args)), Scalar(-1));
        return res;
    }
    case 2: { // g1 h - f1 h = theta1 l1 h
        if (p != std::vector<int>{1})
            bad_tuple("homotopy relation (b)");
        Vec res = g1.apply(args);
        add_vec(res, f1.apply(args), Scalar(-1));
        add_vec(res, ap1(th, l1.apply(args)), Scalar(-1));
        return res;
    }
    case 3: { // g2(x,y) - f2(x,y) = theta1 l2(x,y) - m2(f1 x, theta1 y)
              //                     - m2(theta1 x, g1 y)
        if (p != std::vector<int>{0, 0})
            bad_tuple("homotopy relation (c)");
        Vec res = g2.apply(args);
        add_vec(res, f2.apply(args), Scalar(-1));
        add_vec(res, ap1(th, l2.apply(args)), Scalar(-1));
        add_vec(res, ap2(m2, f1.apply({args[0]}), th.apply({args[1]})), Scalar(1));
        add_vec(res, ap2(m2, th.apply({args[0]}), g1.apply({args[1]})), Scalar(1));
        return res;
    }
    default:
        throw std::invalid_argument("two_term_homotopy_residual: family must be 1..3");
    }
}

IdentityReport check_two_term_algebra(const TwoTermLeibniz& a) {
    IdentityReport report;
    if (!degrees_within(a.space, 0, 1))
        report.record_error("space is not concentrated in degrees 0 and 1");
    if (!shape_ok(a.l1, 1, -1))
        report.record_error("l1 must have arity 1, degree -1");
    if (!shape_ok(a.l2, 2, 0))
        report.record_error("l2 must have arity 2, degree 0");
    if (!shape_ok(a.l3, 3, 1))
        report.record_error("l3 must have arity 3, degree 1");
    if (!report.precheck_errors.empty())
        return report;

    auto res = [&a](int family) {
        return [&a, family](const Word& w) { return two_term_relation_residual(a, family, w); };
    };
    const GradedSpace& sp = a.space;
    sweep(report, 1, tuples_by_pattern(sp, {0, 1}), res(1));
    sweep(report, 1, tuples_by_pattern(sp, {1, 0}), res(1));
    sweep(report, 2, tuples_by_pattern(sp, {1, 1}), res(2));
    sweep(report, 3, tuples_by_pattern(sp, {0, 0, 0}), res(3));
    sweep(report, 4, tuples_by_pattern(sp, {0, 0, 1}), res(4));
    sweep(report, 4, tuples_by_pattern(sp, {0, 1, 0}), res(4));
    sweep(report, 4, tuples_by_pattern(sp, {1, 0, 0}), res(4));
    sweep(report, 5, tuples_by_pattern(sp, {0, 0, 0, 0}), res(5));
    return report;
}

IdentityReport check_two_term_morphism(const TwoTermMorphism& m) {
    IdentityReport report;
    if (!shape_ok(m.f1, 1, 0))
        report.record_error("f1 must have arity 1, degree 0");
    if (!shape_ok(m.f2, 2, 1))
        report.record_error("f2 must have arity 2, degree 1");
    if (!check_two_term_algebra(m.source).pass)
        report.record_error("source structure fails its relation check");
    if (!check_two_term_algebra(m.target).pass)
        report.record_error("target structure fails its relation check");
    if (!report.precheck_errors.empty())
        return report;

    auto res = [&m](int family) {
        return [&m, family](const Word& w) { return two_term_morphism_residual(m, family, w); };
    };
    const GradedSpace& sp = m.source.space;
    sweep(report, 1, tuples_by_pattern(sp, {1}), res(1));
    sweep(report, 2, tuples_by_pattern(sp, {0, 0}), res(2));
    sweep(report, 3, tuples_by_pattern(sp, {0, 1}), res(3));
    sweep(report, 3, tuples_by_pattern(sp, {1, 0}), res(3));
    sweep(report, 4, tuples_by_pattern(sp, {0, 0, 0}), res(4));
    return report;
}

IdentityReport check_homotopy(const TwoTermHomotopy& h) {
    IdentityReport report;
    if (!shape_ok(h.theta1, 1, 1))
        report.record_error("theta1 must have arity 1, degree 1");
    if (!(h.source.source == h.target.source) || !(h.source.target == h.target.target))
        report.record_error("endpoint morphisms do not share source and target structures");
    else {
        if (!check_two_term_morphism(h.source).pass)
            report.record_error("source morphism fails its relation check");
        if (!check_two_term_morphism(h.target).pass)
            report.record_error("target morphism fails its relation check");
    }
    if (!report.precheck_errors.empty())
        return report;

    auto res = [&h](int family) {
        return [&h, family](const Word& w) { return two_term_homotopy_residual(h, family, w); };
    };
    const GradedSpace& sp = h.source.source.space;
    sweep(report, 1, tuples_by_pattern(sp, {0}), res(1));
    sweep(report, 2, tuples_by_pattern(sp, {1}), res(2));
    sweep(report, 3, tuples_by_pattern(sp, {0, 0}), res(3));
    return report;
}

TwoTermMorphism identity_two_term_morphism(const TwoTermLeibniz& a) {
    TwoTermMorphism m{a, a, identity_map(a.space), {}};
    m.f2.arity = 2;
    m.f2.degree = 1;
    return m;
}

TwoTermMorphism compose_two_term_morphisms(const TwoTermMorphism& g, const TwoTermMorphism& f) {
    if (!(f.target == g.source))
        throw std::invalid_argument("compose_two_term_morphisms: middle structure mismatch");
    const MultiMap &f1 = norm(f.f1, 1, 0), &f2 = norm(f.f2, 2, 1);
    const MultiMap &g1 = norm(g.f1, 1, 0), &g2 = norm(g.f2, 2, 1);
    TwoTermMorphism out{f.source, g.target, {}, {}};
    out.f1 = tabulate(f.source.space, 1, 0, [&](const Word& w) { return ap1(g1, f1.apply(w)); });
    out.f2 = tabulate(f.source.space, 2, 1, [&](const Word& w) {
        Vec v = ap1(g1, f2.apply(w));
        add_vec(v, ap2(g2, f1.apply({w[0]}), f1.apply({w[1]})), Scalar(1));
        return v;
    });
    return out;
}

TwoTermHomotopy zero_homotopy(const TwoTermMorphism& f) {
    TwoTermHomotopy h{f, f, {}};
    h.theta1.arity = 1;
    h.theta1.degree = 1;
    return h;
}

TwoTermHomotopy homotopy_from_map(const TwoTermMorphism& f, const MultiMap& theta1) {
    if (!shape_ok(theta1, 1, 1))
        throw std::invalid_argument("homotopy_from_map: theta1 must have arity 1, degree 1");
    const MultiMap &m1 = norm(f.target.l1, 1, -1), &m2 = norm(f.target.l2, 2, 0);
    const MultiMap &l1 = norm(f.source.l1, 1, -1), &l2 = norm(f.source.l2, 2, 0);
    const MultiMap &f1 = norm(f.f1, 1, 0), &f2 = norm(f.f2, 2, 1);
    const MultiMap& th = norm(theta1, 1, 1);
    TwoTermMorphism g{f.source, f.target, {}, {}};
    g.f1 = tabulate(f.source.space, 1, 0, [&](const Word& w) {
        Vec v = f1.apply(w);
        add_vec(v, ap1(m1, th.apply(w)), Scalar(1));
        add_vec(v, ap1(th, l1.apply(w)), Scalar(1));
        return v;
    });
    g.f2 = tabulate(f.source.space, 2, 1, [&](const Word& w) {
        Vec v = f2.apply(w);
        add_vec(v, ap1(th, l2.apply(w)), Scalar(1));
        add_vec(v, ap2(m2, f1.apply({w[0]}), th.apply({w[1]})), Scalar(-1));
        add_vec(v, ap2(m2, th.apply({w[0]}), g.f1.apply({w[1]})), Scalar(-1));
        return v;
    });
    return TwoTermHomotopy{f, g, th};
}

TwoTermHomotopy vcompose(const TwoTermHomotopy& tau, const TwoTermHomotopy& theta) {
    if (!(tau.source == theta.target))
        throw std::invalid_argument("vcompose: middle morphism mismatch");
    const MultiMap &t1 = norm(tau.theta1, 1, 1), &t2 = norm(theta.theta1, 1, 1);
    TwoTermHomotopy out{theta.source, tau.target, {}};
    out.theta1 = tabulate(theta.source.source.space, 1, 1, [&](const Word& w) {
        Vec v = t1.apply(w);
        add_vec(v, t2.apply(w), Scalar(1));
        return v;
    });
    return out;
}

TwoTermHomotopy hcompose(const TwoTermHomotopy& tau, const TwoTermHomotopy& theta) {
    const TwoTermMorphism &f = theta.source, &g = theta.target;
    const TwoTermMorphism &fp = tau.source, &gp = tau.target;
    if (!(f.target == fp.source))
        throw std::invalid_argument("hcompose: structures are not composable");
    const GradedSpace& sp = f.source.space;
    const MultiMap &th = norm(theta.theta1, 1, 1), &ta = norm(tau.theta1, 1, 1);
    const MultiMap &f1 = norm(f.f1, 1, 0), &g1 = norm(g.f1, 1, 0);
    const MultiMap &fp1 = norm(fp.f1, 1, 0), &gp1 = norm(gp.f1, 1, 0);
    MultiMap first = tabulate(sp, 1, 1, [&](const Word& w) {
        Vec v = ap1(gp1, th.apply(w));
        add_vec(v, ap1(ta, f1.apply(w)), Scalar(1));
        return v;
    });
    MultiMap second = tabulate(sp, 1, 1, [&](const Word& w) {
        Vec v = ap1(fp1, th.apply(w));
        add_vec(v, ap1(ta, g1.apply(w)), Scalar(1));
        return v;
    });
    for (const Basis& b : basis_list(sp))
        if (first.apply({b}) != second.apply({b}))
            throw std::invalid_argument(
                "hcompose: the two defining expressions differ; inputs are not homotopies");
    TwoTermHomotopy out{compose_two_term_morphisms(fp, f), compose_two_term_morphisms(gp, g),
                        std::move(first)};
    return out;
}

// ---------------------------------------------------------------------------

int Linear2Category::level_dim(int m) const {
    int total = 0;
    for (int i = 0; i <= m; ++i)
        total += slices.dim(i);
    return total;
}

Cell Linear2Category::source(const Cell& a) const {
    if (a.level < 1)
        throw std::invalid_argument("source: 0-cells have no source");
    Cell out{a.level - 1, {}};
    for (const auto& [b, c] : a.value)
        if (b.deg < a.level)
            add_term(out.value, b, c);
    return out;
}

Cell Linear2Category::target(const Cell& a) const {
    if (a.level < 1)
        throw std::invalid_argument("target: 0-cells have no target");
    Cell out{a.level - 1, {}};
    for (const auto& [b, c] : a.value) {
        if (b.deg < a.level)
            add_term(out.value, b, c);
        else
            add_vec(out.value, boundary.apply({b}), c);
    }
    return out;
}

Cell Linear2Category::identity(const Cell& a) const {
    if (a.level >= 2)
        throw std::invalid_argument("identity: there are no cells above level 2");
    return Cell{a.level + 1, a.value};
}

bool Linear2Category::composable(int p, const Cell& a, const Cell& b) const {
    if (a.level != b.level || p < 0 || p >= a.level)
        return false;
    Cell ta = a, sb = b;
    for (int i = a.level; i > p; --i) {
        ta = target(ta);
        sb = source(sb);
    }
    return ta == sb;
}

Cell Linear2Category::compose(int p, const Cell& a, const Cell& b) const {
    if (!composable(p, a, b))
        throw std::invalid_argument("compose: cells are not composable along that level");
    Cell out{a.level, a.value};
    for (const auto& [bb, c] : b.value)
        if (bb.deg > p)
            add_term(out.value, bb, c);
    return out;
}

std::vector<Cell> Linear2Category::basis_cells(int m) const {
    std::vector<Cell> out;
    for (int i = 0; i <= m; ++i)
        for (const Basis& b : letters_of_degree(slices, i))
            out.push_back(Cell{m, {{b, 1}}});
    return out;
}

Linear2Category chain_to_2cat(const GradedSpace& sp, const MultiMap& d) {
    if (!degrees_within(sp, 0, 2))
        throw std::invalid_argument("chain_to_2cat: space must live in degrees 0..2");
    if (!shape_ok(d, 1, -1))
        throw std::invalid_argument("chain_to_2cat: differential must have arity 1, degree -1");
    for (const Basis& b : letters_of_degree(sp, 2))
        if (!is_zero(d.apply_vecs({d.apply({b})})))
            throw std::invalid_argument("chain_to_2cat: differential does not square to zero");
    Linear2Category L{sp, d};
    L.boundary.arity = 1;
    L.boundary.degree = -1;
    return L;
}

std::pair<GradedSpace, MultiMap> two_cat_to_chain(const Linear2Category& L) {
    return {L.slices, L.boundary};
}

} // namespace halg
