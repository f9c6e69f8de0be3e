#include "halg/convolution.hpp"

#include <stdexcept>
#include <utility>

namespace halg {

namespace {

Scalar factorial(int n) {
    Scalar out = 1;
    for (int k = 2; k <= n; ++k)
        out *= k;
    return out;
}

int parity_sign(int e) {
    return (e % 2 != 0) ? -1 : 1;
}

void check_monomial_degree(int total) {
    if (total > poly_degree_cap)
        throw std::runtime_error("polynomial degree cap exceeded");
}

template <class K>
void put_term(std::map<K, ConvElement>& part, const K& key, const ConvElement& c) {
    ConvElement cc = c;
    conv_prune(cc);
    if (conv_is_zero(cc))
        return;
    auto it = part.find(key);
    if (it == part.end()) {
        part.emplace(key, std::move(cc));
        return;
    }
    it->second = conv_add(it->second, cc);
    if (conv_is_zero(it->second))
        part.erase(it);
}

void put_term1(std::map<int, ConvElement>& part, int key, const ConvElement& c) {
    check_monomial_degree(key);
    put_term(part, key, c);
}

void put_term2(std::map<std::pair<int, int>, ConvElement>& part, std::pair<int, int> key,
               const ConvElement& c) {
    check_monomial_degree(key.first + key.second);
    put_term(part, key, c);
}

// The four form slots of the triangle, in the basis order {1, ds, dt, ds∧dt}.
enum class Slot2 { one, ds, dt, dsdt };

Form2 monomial2(Slot2 slot, int a, int b) {
    Form2 f;
    Poly2 mono{{{a, b}, 1}};
    switch (slot) {
    case Slot2::one:
        f.part0 = mono;
        break;
    case Slot2::ds:
        f.parts = mono;
        break;
    case Slot2::dt:
        f.partt = mono;
        break;
    case Slot2::dsdt:
        f.partst = mono;
        break;
    }
    return f;
}

// Distribute coef * weight over every monomial of the scalar form.
void scatter2(ConvTensor2& out, const Form2& f, const ConvElement& coef, const Scalar& weight) {
    for (const auto& [m, q] : f.part0)
        put_term2(out.part0, m, conv_scaled(coef, q * weight));
    for (const auto& [m, q] : f.parts)
        put_term2(out.parts, m, conv_scaled(coef, q * weight));
    for (const auto& [m, q] : f.partt)
        put_term2(out.partt, m, conv_scaled(coef, q * weight));
    for (const auto& [m, q] : f.partst)
        put_term2(out.partst, m, conv_scaled(coef, q * weight));
}

void check_vertex1(int i) {
    if (i != 0 && i != 1)
        throw std::invalid_argument("interval vertex index must be 0 or 1");
}

} // namespace

ConvAlgebra make_conv_algebra(const InftyStructure& source, const InftyStructure& target) {
    if (source.flavor != Flavor::leibniz || target.flavor != Flavor::leibniz)
        throw std::invalid_argument(
            "convolution structure is defined over tensor-word (Leibniz-flavor) pairs");
    ConvAlgebra alg;
    alg.source = source;
    alg.target = target;
    alg.s_source = shift_space(source.space, 1, "s" + source.space.name);
    alg.D = to_codifferential(source.brackets);
    return alg;
}

int conv_arity_bound(const ConvAlgebra& alg, int d) {
    int lo_s = alg.s_source.min_degree();
    int hi_s = alg.s_source.max_degree();
    int lo_w = alg.target.space.min_degree();
    int hi_w = alg.target.space.max_degree();
    int bound = 0;
    for (int n = 1; n <= word_length_cap; ++n)
        if (n * lo_s + d <= hi_w && n * hi_s + d >= lo_w)
            bound = n;
    return bound;
}

ConvElement conv_zero(int degree) {
    return ConvElement{degree, {}};
}

bool conv_is_zero(const ConvElement& a) {
    for (const auto& [p, comp] : a.components.comps)
        if (!comp.is_zero())
            return false;
    return true;
}

void conv_prune(ConvElement& a) {
    auto& m = a.components.comps;
    for (auto it = m.begin(); it != m.end();) {
        it->second.prune();
        it = it->second.is_zero() ? m.erase(it) : std::next(it);
    }
}

ConvElement conv_add(const ConvElement& a, const ConvElement& b) {
    if (a.degree != b.degree)
        throw std::invalid_argument("cannot add homomorphisms of different degrees");
    ConvElement out = a;
    for (const auto& [p, comp] : b.components.comps) {
        auto it = out.components.comps.find(p);
        if (it == out.components.comps.end())
            out.components.set(p, comp);
        else
            it->second += comp;
    }
    conv_prune(out);
    return out;
}

ConvElement conv_scaled(const ConvElement& a, const Scalar& c) {
    ConvElement out = conv_zero(a.degree);
    if (c == 0)
        return out;
    for (const auto& [p, comp] : a.components.comps)
        out.components.set(p, scaled(comp, c));
    conv_prune(out);
    return out;
}

Vec conv_apply(const ConvElement& a, const Word& w) {
    const MultiMap* comp = a.components.at(static_cast<int>(w.size()));
    return comp ? comp->apply(w) : Vec{};
}

namespace {

ConvElement conv_bracket1(const ConvAlgebra& alg, const ConvElement& f) {
    ConvElement out = conv_zero(f.degree - 1);
    const MultiMap* m1 = alg.target.brackets.at(1);
    Scalar fsign = parity_sign(f.degree);
    int bound = conv_arity_bound(alg, out.degree);
    for (int n = 1; n <= bound; ++n) {
        MultiMap comp{n, out.degree, {}};
        for (const Word& w : basis_words(alg.s_source, n)) {
            Vec val;
            if (m1)
                if (const MultiMap* c = f.components.at(n)) {
                    Vec fv = c->apply(w);
                    if (!fv.empty())
                        add_vec(val, m1->apply_vecs({fv}));
                }
            for (const auto& [w2, cw] : zin_coderivation(alg.D, w)) {
                const MultiMap* c = f.components.at(static_cast<int>(w2.size()));
                if (c)
                    add_vec(val, c->apply(w2), fsign * cw);
            }
            if (!val.empty())
                comp.add_entries(w, val);
        }
        if (!comp.is_zero())
            out.components.set(n, std::move(comp));
    }
    return out;
}

} // namespace

ConvElement conv_bracket(const ConvAlgebra& alg, const std::vector<ConvElement>& fs) {
    if (fs.empty())
        throw std::invalid_argument("bracket needs at least one argument");
    int p = static_cast<int>(fs.size());
    if (p == 1)
        return conv_bracket1(alg, fs[0]);

    int dres = p - 2;
    std::vector<int> fdegs;
    fdegs.reserve(fs.size());
    for (const ConvElement& f : fs) {
        dres += f.degree;
        fdegs.push_back(f.degree);
    }
    ConvElement out = conv_zero(dres);
    const MultiMap* mp = alg.target.brackets.at(p);
    if (!mp)
        return out;
    std::vector<Perm> sigmas = unshuffles(std::vector<int>(static_cast<size_t>(p), 1));
    int bound = conv_arity_bound(alg, dres);
    std::vector<Vec> vals(static_cast<size_t>(p));
    for (int n = p; n <= bound; ++n) { // p nonempty blocks need at least p letters
        MultiMap comp{n, dres, {}};
        for (const Word& w : basis_words(alg.s_source, n)) {
            Vec val;
            for (const auto& [blocks, csplit] : zin_iterated_coproduct(w, p)) {
                for (const Perm& sigma : sigmas) {
                    int eps = koszul_sign(sigma, fdegs) * sigma.sign();
                    int app_exp = 0, prefix = 0;
                    bool dead = false;
                    for (int s = 1; s <= p; ++s) {
                        const Word& u = blocks[static_cast<size_t>(s) - 1];
                        const ConvElement& f = fs[static_cast<size_t>(sigma(s)) - 1];
                        app_exp += f.degree * prefix;
                        prefix += word_degree(u);
                        const MultiMap* c = f.components.at(static_cast<int>(u.size()));
                        if (!c) {
                            dead = true;
                            break;
                        }
                        Vec v = c->apply(u);
                        if (v.empty()) {
                            dead = true;
                            break;
                        }
                        vals[static_cast<size_t>(s) - 1] = std::move(v);
                    }
                    if (dead)
                        continue;
                    Vec mv = mp->apply_vecs(vals);
                    if (!mv.empty())
                        add_vec(val, mv, csplit * eps * parity_sign(app_exp));
                }
            }
            if (!val.empty())
                comp.add_entries(w, val);
        }
        if (!comp.is_zero())
            out.components.set(n, std::move(comp));
    }
    return out;
}

ConvElement mc_residual(const ConvAlgebra& alg, const ConvElement& alpha) {
    if (alpha.degree != -1)
        throw std::invalid_argument("Maurer-Cartan elements have degree -1");
    ConvElement out = conv_zero(-2);
    int max_p = std::max(1, alg.target.brackets.max_arity());
    for (int p = 1; p <= max_p; ++p) {
        Scalar weight = Scalar(parity_sign(p * (p - 1) / 2)) / factorial(p);
        std::vector<ConvElement> args(static_cast<size_t>(p), alpha);
        out = conv_add(out, conv_scaled(conv_bracket(alg, args), weight));
    }
    return out;
}

ConvElement morphism_to_mc(const InftyMorphism& m) {
    ConvElement out = conv_zero(-1);
    MapFamily F = morphism_to_corestrictions(m.components);
    for (const auto& [p, comp] : F.comps) {
        MultiMap desus{p, -1, {}};
        for (const auto& [w, vec] : comp.table)
            desus.add_entries(w, shift_vec(vec, -1));
        if (!desus.is_zero())
            out.components.set(p, std::move(desus));
    }
    return out;
}

InftyMorphism mc_to_morphism(const ConvAlgebra& alg, const ConvElement& alpha) {
    if (alpha.degree != -1)
        throw std::invalid_argument("Maurer-Cartan elements have degree -1");
    MapFamily F;
    for (const auto& [p, comp] : alpha.components.comps) {
        MultiMap sus{p, 0, {}};
        for (const auto& [w, vec] : comp.table)
            sus.add_entries(w, shift_vec(vec, 1));
        if (!sus.is_zero())
            F.set(p, std::move(sus));
    }
    return InftyMorphism{alg.source, alg.target, corestrictions_to_morphism(F)};
}

ConvTensor1 tensor_zero1(int degree) {
    return ConvTensor1{degree, {}, {}};
}

ConvTensor2 tensor_zero2(int degree) {
    return ConvTensor2{degree, {}, {}, {}, {}};
}

ConvTensor1 constant_tensor1(const ConvElement& a) {
    ConvTensor1 out = tensor_zero1(a.degree);
    put_term1(out.part0, 0, a);
    return out;
}

ConvTensor2 constant_tensor2(const ConvElement& a) {
    ConvTensor2 out = tensor_zero2(a.degree);
    put_term2(out.part0, {0, 0}, a);
    return out;
}

bool tensor_is_zero(const ConvTensor1& x) {
    return x.part0.empty() && x.part1.empty();
}

bool tensor_is_zero(const ConvTensor2& x) {
    return x.part0.empty() && x.parts.empty() && x.partt.empty() && x.partst.empty();
}

ConvTensor1 tensor_add(const ConvTensor1& x, const ConvTensor1& y) {
    if (x.degree != y.degree)
        throw std::invalid_argument("cannot add form-valued elements of different degrees");
    ConvTensor1 out = x;
    for (const auto& [j, c] : y.part0)
        put_term1(out.part0, j, c);
    for (const auto& [j, c] : y.part1)
        put_term1(out.part1, j, c);
    return out;
}

ConvTensor2 tensor_add(const ConvTensor2& x, const ConvTensor2& y) {
    if (x.degree != y.degree)
        throw std::invalid_argument("cannot add form-valued elements of different degrees");
    ConvTensor2 out = x;
    for (const auto& [m, c] : y.part0)
        put_term2(out.part0, m, c);
    for (const auto& [m, c] : y.parts)
        put_term2(out.parts, m, c);
    for (const auto& [m, c] : y.partt)
        put_term2(out.partt, m, c);
    for (const auto& [m, c] : y.partst)
        put_term2(out.partst, m, c);
    return out;
}

ConvTensor1 tensor_scaled(const ConvTensor1& x, const Scalar& c) {
    ConvTensor1 out = tensor_zero1(x.degree);
    if (c == 0)
        return out;
    for (const auto& [j, a] : x.part0)
        put_term1(out.part0, j, conv_scaled(a, c));
    for (const auto& [j, a] : x.part1)
        put_term1(out.part1, j, conv_scaled(a, c));
    return out;
}

ConvTensor2 tensor_scaled(const ConvTensor2& x, const Scalar& c) {
    ConvTensor2 out = tensor_zero2(x.degree);
    if (c == 0)
        return out;
    for (const auto& [m, a] : x.part0)
        put_term2(out.part0, m, conv_scaled(a, c));
    for (const auto& [m, a] : x.parts)
        put_term2(out.parts, m, conv_scaled(a, c));
    for (const auto& [m, a] : x.partt)
        put_term2(out.partt, m, conv_scaled(a, c));
    for (const auto& [m, a] : x.partst)
        put_term2(out.partst, m, conv_scaled(a, c));
    return out;
}

ConvTensor1 tensor_delta(const ConvAlgebra& alg, const ConvTensor1& x) {
    ConvTensor1 out = tensor_zero1(x.degree - 1);
    for (const auto& [j, a] : x.part0)
        put_term1(out.part0, j, conv_bracket(alg, {a}));
    for (const auto& [j, a] : x.part1)
        put_term1(out.part1, j, conv_bracket(alg, {a}));
    return out;
}

ConvTensor2 tensor_delta(const ConvAlgebra& alg, const ConvTensor2& x) {
    ConvTensor2 out = tensor_zero2(x.degree - 1);
    for (const auto& [m, a] : x.part0)
        put_term2(out.part0, m, conv_bracket(alg, {a}));
    for (const auto& [m, a] : x.parts)
        put_term2(out.parts, m, conv_bracket(alg, {a}));
    for (const auto& [m, a] : x.partt)
        put_term2(out.partt, m, conv_bracket(alg, {a}));
    for (const auto& [m, a] : x.partst)
        put_term2(out.partst, m, conv_bracket(alg, {a}));
    return out;
}

ConvTensor1 tensor_d(const ConvTensor1& x) {
    ConvTensor1 out = tensor_zero1(x.degree - 1);
    Scalar sign = parity_sign(x.degree);
    for (const auto& [j, a] : x.part0)
        if (j > 0)
            put_term1(out.part1, j - 1, conv_scaled(a, sign * j));
    return out;
}

ConvTensor2 tensor_d(const ConvTensor2& x) {
    ConvTensor2 out = tensor_zero2(x.degree - 1);
    Scalar s0 = parity_sign(x.degree);
    Scalar s1 = parity_sign(x.degree + 1);
    for (const auto& [m, a] : x.part0)
        scatter2(out, form_d(monomial2(Slot2::one, m.first, m.second)), a, s0);
    for (const auto& [m, a] : x.parts)
        scatter2(out, form_d(monomial2(Slot2::ds, m.first, m.second)), a, s1);
    for (const auto& [m, a] : x.partt)
        scatter2(out, form_d(monomial2(Slot2::dt, m.first, m.second)), a, s1);
    return out;
}

ConvTensor1 tensor_h(int i, const ConvTensor1& x) {
    check_vertex1(i);
    ConvTensor1 out = tensor_zero1(x.degree + 1);
    Scalar sign = parity_sign(x.degree + 1);
    for (const auto& [j, b] : x.part1) {
        Scalar c = sign / Scalar(j + 1);
        put_term1(out.part0, j + 1, conv_scaled(b, c));
        if (i == 1)
            put_term1(out.part0, 0, conv_scaled(b, -c));
    }
    return out;
}

ConvTensor2 tensor_h(int i, const ConvTensor2& x) {
    form_h(i, Form2{}); // validates the vertex index
    ConvTensor2 out = tensor_zero2(x.degree + 1);
    Scalar s1 = parity_sign(x.degree + 1);
    Scalar s2 = parity_sign(x.degree + 2);
    for (const auto& [m, a] : x.parts)
        scatter2(out, form_h(i, monomial2(Slot2::ds, m.first, m.second)), a, s1);
    for (const auto& [m, a] : x.partt)
        scatter2(out, form_h(i, monomial2(Slot2::dt, m.first, m.second)), a, s1);
    for (const auto& [m, a] : x.partst)
        scatter2(out, form_h(i, monomial2(Slot2::dsdt, m.first, m.second)), a, s2);
    return out;
}

ConvElement tensor_eval(int i, const ConvTensor1& x) {
    check_vertex1(i);
    ConvElement out = conv_zero(x.degree);
    for (const auto& [j, a] : x.part0)
        if (i == 1 || j == 0)
            out = conv_add(out, a);
    return out;
}

ConvElement tensor_eval(int i, const ConvTensor2& x) {
    form_eval(i, Form2{}); // validates the vertex index
    ConvElement out = conv_zero(x.degree);
    for (const auto& [m, a] : x.part0) {
        Scalar v = form_eval(i, monomial2(Slot2::one, m.first, m.second));
        if (v != 0)
            out = conv_add(out, conv_scaled(a, v));
    }
    return out;
}

namespace {

void scatter1(ConvTensor1& out, const Form1& f, const ConvElement& coef) {
    for (const auto& [j, q] : f.part0)
        put_term1(out.part0, j, conv_scaled(coef, q));
    for (const auto& [j, q] : f.part1)
        put_term1(out.part1, j, conv_scaled(coef, q));
}

} // namespace

ConvTensor1 tensor_restrict(int lo, int hi, const ConvTensor2& x) {
    form_restrict(lo, hi, Form2{}); // validates the edge
    ConvTensor1 out = tensor_zero1(x.degree);
    for (const auto& [m, a] : x.part0)
        scatter1(out, form_restrict(lo, hi, monomial2(Slot2::one, m.first, m.second)), a);
    for (const auto& [m, a] : x.parts)
        scatter1(out, form_restrict(lo, hi, monomial2(Slot2::ds, m.first, m.second)), a);
    for (const auto& [m, a] : x.partt)
        scatter1(out, form_restrict(lo, hi, monomial2(Slot2::dt, m.first, m.second)), a);
    return out;
}

namespace {

// One coefficient monomial of a form-valued element: the scalar form part
// (with unit coefficient), its parity, and the attached coefficient.
struct Mono1 {
    bool dt = false;
    int pow = 0;
    const ConvElement* coef = nullptr;
};

struct Mono2 {
    Slot2 slot = Slot2::one;
    std::pair<int, int> pow{0, 0};
    const ConvElement* coef = nullptr;
};

int slot_parity(Slot2 s) {
    return (s == Slot2::ds || s == Slot2::dt) ? 1 : 0;
}

std::vector<Mono1> monomials(const ConvTensor1& x) {
    std::vector<Mono1> out;
    for (const auto& [j, a] : x.part0)
        out.push_back({false, j, &a});
    for (const auto& [j, a] : x.part1)
        out.push_back({true, j, &a});
    return out;
}

std::vector<Mono2> monomials(const ConvTensor2& x) {
    std::vector<Mono2> out;
    for (const auto& [m, a] : x.part0)
        out.push_back({Slot2::one, m, &a});
    for (const auto& [m, a] : x.parts)
        out.push_back({Slot2::ds, m, &a});
    for (const auto& [m, a] : x.partt)
        out.push_back({Slot2::dt, m, &a});
    for (const auto& [m, a] : x.partst)
        out.push_back({Slot2::dsdt, m, &a});
    return out;
}

// Odometer over one monomial choice per argument.
template <class M, class F>
void for_each_choice(const std::vector<std::vector<M>>& lists, F&& body) {
    std::vector<size_t> idx(lists.size(), 0);
    for (const auto& l : lists)
        if (l.empty())
            return;
    std::vector<const M*> choice(lists.size());
    while (true) {
        for (size_t k = 0; k < lists.size(); ++k)
            choice[k] = &lists[k][idx[k]];
        body(choice);
        size_t k = 0;
        for (; k < lists.size(); ++k) {
            if (++idx[k] < lists[k].size())
                break;
            idx[k] = 0;
        }
        if (k == lists.size())
            return;
    }
}

} // namespace

ConvTensor1 tensor_bracket(const ConvAlgebra& alg, const std::vector<ConvTensor1>& xs) {
    if (xs.empty())
        throw std::invalid_argument("bracket needs at least one argument");
    if (xs.size() == 1)
        return tensor_add(tensor_delta(alg, xs[0]), tensor_d(xs[0]));
    int p = static_cast<int>(xs.size());
    int dres = p - 2;
    for (const ConvTensor1& x : xs)
        dres += x.degree;
    ConvTensor1 out = tensor_zero1(dres);
    std::vector<std::vector<Mono1>> lists;
    lists.reserve(xs.size());
    for (const ConvTensor1& x : xs)
        lists.push_back(monomials(x));
    for_each_choice(lists, [&](const std::vector<const Mono1*>& choice) {
        int dt_count = 0, pow_sum = 0, interleave = 0;
        std::vector<ConvElement> coefs;
        coefs.reserve(choice.size());
        for (const Mono1* m : choice) {
            interleave += dt_count * m->coef->degree; // forms already passed this coefficient
            dt_count += m->dt ? 1 : 0;
            pow_sum += m->pow;
            coefs.push_back(*m->coef);
        }
        if (dt_count > 1)
            return;
        ConvElement val = conv_scaled(conv_bracket(alg, coefs), parity_sign(interleave));
        if (dt_count == 0)
            put_term1(out.part0, pow_sum, val);
        else
            put_term1(out.part1, pow_sum, val);
    });
    return out;
}

ConvTensor2 tensor_bracket(const ConvAlgebra& alg, const std::vector<ConvTensor2>& xs) {
    if (xs.empty())
        throw std::invalid_argument("bracket needs at least one argument");
    if (xs.size() == 1)
        return tensor_add(tensor_delta(alg, xs[0]), tensor_d(xs[0]));
    int p = static_cast<int>(xs.size());
    int dres = p - 2;
    for (const ConvTensor2& x : xs)
        dres += x.degree;
    ConvTensor2 out = tensor_zero2(dres);
    std::vector<std::vector<Mono2>> lists;
    lists.reserve(xs.size());
    for (const ConvTensor2& x : xs)
        lists.push_back(monomials(x));
    for_each_choice(lists, [&](const std::vector<const Mono2*>& choice) {
        int odd_count = 0, interleave = 0;
        std::vector<ConvElement> coefs;
        coefs.reserve(choice.size());
        Form2 wedge = monomial2(choice[0]->slot, choice[0]->pow.first, choice[0]->pow.second);
        bool first = true;
        for (const Mono2* m : choice) {
            interleave += odd_count * m->coef->degree;
            odd_count += slot_parity(m->slot);
            coefs.push_back(*m->coef);
            if (!first)
                wedge = form_wedge(wedge, monomial2(m->slot, m->pow.first, m->pow.second));
            first = false;
        }
        if (wedge == Form2{})
            return;
        ConvElement val = conv_scaled(conv_bracket(alg, coefs), parity_sign(interleave));
        scatter2(out, wedge, val, 1);
    });
    return out;
}

namespace {

template <class Tensor>
Tensor tensor_mc_residual_impl(const ConvAlgebra& alg, const Tensor& x, Tensor zero) {
    if (x.degree != -1)
        throw std::invalid_argument("Maurer-Cartan elements have degree -1");
    Tensor out = std::move(zero);
    int max_p = std::max(1, alg.target.brackets.max_arity());
    for (int p = 1; p <= max_p; ++p) {
        Scalar weight = Scalar(parity_sign(p * (p - 1) / 2)) / factorial(p);
        std::vector<Tensor> args(static_cast<size_t>(p), x);
        out = tensor_add(out, tensor_scaled(tensor_bracket(alg, args), weight));
    }
    return out;
}

// Arity part of the Maurer-Cartan residual beyond the differential:
// Σ_{j≥2} (1/j!)(-1)^{j(j-1)/2} L̄_j(x,...,x).
template <class Tensor>
Tensor curvature_tail(const ConvAlgebra& alg, const Tensor& x, Tensor zero) {
    Tensor out = std::move(zero);
    int max_p = alg.target.brackets.max_arity();
    for (int p = 2; p <= max_p; ++p) {
        Scalar weight = Scalar(parity_sign(p * (p - 1) / 2)) / factorial(p);
        std::vector<Tensor> args(static_cast<size_t>(p), x);
        out = tensor_add(out, tensor_scaled(tensor_bracket(alg, args), weight));
    }
    return out;
}

template <class Tensor>
std::pair<ConvElement, Tensor> b_forward_impl(const ConvAlgebra& alg, const Tensor& alpha,
                                              int i, Tensor zero) {
    if (!tensor_is_zero(tensor_mc_residual_impl(alg, alpha, zero)))
        throw std::invalid_argument("vertex decomposition requires a Maurer-Cartan input");
    ConvElement mu = tensor_eval(i, alpha);
    Tensor nu = tensor_bracket(alg, {tensor_h(i, alpha)});
    return {std::move(mu), std::move(nu)};
}

template <class Tensor>
Tensor b_inverse_impl(const ConvAlgebra& alg, const ConvElement& mu, const Tensor& nu, int i,
                      Tensor zero_m2, Tensor constant_mu) {
    if (!conv_is_zero(mc_residual(alg, mu)))
        throw std::invalid_argument("vertex value must be Maurer-Cartan");
    if (!conv_is_zero(tensor_eval(i, nu)))
        throw std::invalid_argument("form part must evaluate to zero at the chosen vertex");
    Tensor base = tensor_add(constant_mu, nu);
    Tensor alpha = base;
    int guard = conv_arity_bound(alg, -1) + 2;
    for (int step = 0; step < guard; ++step) {
        Tensor next = tensor_add(
            base, tensor_scaled(tensor_h(i, curvature_tail(alg, alpha, zero_m2)), -1));
        if (next == alpha)
            return alpha;
        alpha = std::move(next);
    }
    throw std::runtime_error(
        "fixed-point iteration did not stabilize; check the degree window");
}

} // namespace

ConvTensor1 tensor_mc_residual(const ConvAlgebra& alg, const ConvTensor1& x) {
    return tensor_mc_residual_impl(alg, x, tensor_zero1(-2));
}

ConvTensor2 tensor_mc_residual(const ConvAlgebra& alg, const ConvTensor2& x) {
    return tensor_mc_residual_impl(alg, x, tensor_zero2(-2));
}

std::pair<ConvElement, ConvTensor1> b_forward(const ConvAlgebra& alg, const ConvTensor1& alpha,
                                              int i) {
    return b_forward_impl(alg, alpha, i, tensor_zero1(-2));
}

std::pair<ConvElement, ConvTensor2> b_forward(const ConvAlgebra& alg, const ConvTensor2& alpha,
                                              int i) {
    return b_forward_impl(alg, alpha, i, tensor_zero2(-2));
}

ConvTensor1 b_inverse(const ConvAlgebra& alg, const ConvElement& mu, const ConvTensor1& nu,
                      int i) {
    return b_inverse_impl(alg, mu, nu, i, tensor_zero1(-2), constant_tensor1(mu));
}

ConvTensor2 b_inverse(const ConvAlgebra& alg, const ConvElement& mu, const ConvTensor2& nu,
                      int i) {
    return b_inverse_impl(alg, mu, nu, i, tensor_zero2(-2), constant_tensor2(mu));
}

namespace {

// Repackage arity-1/2 morphism components between the given two-term
// algebras; higher components cannot occur for degree reasons.
TwoTermMorphism two_term_morphism_from(const TwoTermLeibniz& a, const TwoTermLeibniz& b,
                                       const MapFamily& comps) {
    TwoTermMorphism m{a, b, MultiMap{1, 0, {}}, MultiMap{2, 1, {}}};
    if (const MultiMap* c1 = comps.at(1))
        m.f1 = *c1;
    if (const MultiMap* c2 = comps.at(2))
        m.f2 = *c2;
    return m;
}

// θ₁ ∘ s⁻¹ as a degree-0 homomorphism concentrated in arity 1.
ConvElement desuspended_input(const MultiMap& theta1) {
    ConvElement out = conv_zero(0);
    MultiMap comp{1, 0, {}};
    for (const auto& [w, vec] : theta1.table)
        comp.add_entries(shift_word(w, 1), vec);
    if (!comp.is_zero())
        out.components.set(1, std::move(comp));
    return out;
}

} // namespace

TwoTermHomotopy extract_homotopy(const TwoTermLeibniz& a, const TwoTermLeibniz& b,
                                 const ConvTensor1& alpha, int i) {
    check_vertex1(i);
    ConvAlgebra alg = make_conv_algebra(to_infinity(a), to_infinity(b));
    TwoTermMorphism f =
        two_term_morphism_from(a, b, mc_to_morphism(alg, tensor_eval(0, alpha)).components);
    TwoTermMorphism g =
        two_term_morphism_from(a, b, mc_to_morphism(alg, tensor_eval(1, alpha)).components);
    if (!check_two_term_morphism(f).pass || !check_two_term_morphism(g).pass)
        throw std::invalid_argument("endpoint evaluations are not valid morphisms");
    ConvTensor1 beta = tensor_h(i, alpha);
    ConvElement diff =
        conv_add(tensor_eval(1, beta), conv_scaled(tensor_eval(0, beta), -1));
    MultiMap theta1{1, 1, {}};
    if (const MultiMap* c = diff.components.at(1))
        for (const auto& [w, vec] : c->table)
            theta1.add_entries(shift_word(w, -1), vec);
    return TwoTermHomotopy{std::move(f), std::move(g), std::move(theta1)};
}

ConvTensor1 lift_homotopy(const TwoTermHomotopy& th, int i) {
    check_vertex1(i);
    if (!check_homotopy(th).pass)
        throw std::invalid_argument("input fails the homotopy relations");
    ConvAlgebra alg =
        make_conv_algebra(to_infinity(th.source.source), to_infinity(th.source.target));
    ConvElement B = desuspended_input(th.theta1);
    ConvTensor1 beta = tensor_zero1(0);
    put_term1(beta.part0, 1, B);
    if (i == 1)
        put_term1(beta.part0, 0, conv_scaled(B, -1));
    ConvElement mu = morphism_to_mc(to_inf_morphism(i == 0 ? th.source : th.target));
    ConvTensor1 nu = tensor_bracket(alg, {beta});
    return b_inverse(alg, mu, nu, i);
}

TwoTermHomotopy vcompose_via_simplex(const TwoTermHomotopy& tau, const TwoTermHomotopy& theta) {
    if (theta.target != tau.source)
        throw std::invalid_argument("homotopies are not composable");
    if (!check_homotopy(theta).pass || !check_homotopy(tau).pass)
        throw std::invalid_argument("input fails the homotopy relations");
    const TwoTermLeibniz& a = theta.source.source;
    const TwoTermLeibniz& b = theta.source.target;
    ConvAlgebra alg = make_conv_algebra(to_infinity(a), to_infinity(b));
    ConvElement Btheta = desuspended_input(theta.theta1);
    ConvElement Btau = desuspended_input(tau.theta1);
    // Affine form part over the triangle: (s + t - 1)·Bθ + t·Bτ. It restricts
    // to the interval parts of the two lifts on the edges 0->1 and 1->2 and
    // vanishes at vertex 1, where the shared morphism g lives.
    ConvTensor2 beta = tensor_zero2(0);
    put_term2(beta.part0, {1, 0}, Btheta);
    put_term2(beta.part0, {0, 1}, conv_add(Btheta, Btau));
    put_term2(beta.part0, {0, 0}, conv_scaled(Btheta, -1));
    ConvElement mu = morphism_to_mc(to_inf_morphism(theta.target));
    ConvTensor2 nu = tensor_bracket(alg, {beta});
    ConvTensor2 alpha = b_inverse(alg, mu, nu, 1);
    return extract_homotopy(a, b, tensor_restrict(0, 2, alpha), 0);
}

Vec mc_residual(const MapFamily& brackets, const Vec& alpha) {
    if (!is_zero(alpha) && vec_degree(alpha) != -1)
        throw std::invalid_argument("Maurer-Cartan elements have degree -1");
    Vec out;
    for (int p = 1; p <= brackets.max_arity(); ++p) {
        const MultiMap* l = brackets.at(p);
        if (!l)
            continue;
        Scalar weight = Scalar(parity_sign(p * (p - 1) / 2)) / factorial(p);
        add_vec(out, l->apply_vecs(std::vector<Vec>(static_cast<size_t>(p), alpha)), weight);
    }
    return out;
}

GaugeCurve gauge_curve(const MapFamily& brackets, const Vec& alpha, const Vec& r, int order) {
    if (!is_zero(alpha) && vec_degree(alpha) != -1)
        throw std::invalid_argument("flow lines start at degree -1 elements");
    if (!is_zero(r) && vec_degree(r) != 0)
        throw std::invalid_argument("flow directions have degree 0");
    if (order < 0)
        throw std::invalid_argument("order must be nonnegative");
    GaugeCurve gc{alpha, r, {alpha}};
    for (int i = 0; i < order; ++i) {
        Vec next;
        for (int n = 0; n + 1 <= brackets.max_arity(); ++n) {
            const MultiMap* l = brackets.at(n + 1);
            if (!l)
                continue;
            Scalar weight = Scalar(parity_sign(n * (n + 1) / 2)) / factorial(n);
            if (n == 0) {
                if (i == 0)
                    add_vec(next, l->apply_vecs({r}), weight);
                continue;
            }
            for (const std::vector<int>& comp : compositions(i + n, n)) {
                Scalar multinomial = factorial(i);
                std::vector<Vec> args;
                args.reserve(static_cast<size_t>(n) + 1);
                for (int part : comp) {
                    int k = part - 1; // compositions are of i+n into parts >= 1
                    multinomial /= factorial(k);
                    args.push_back(gc.coefficients[static_cast<size_t>(k)]);
                }
                args.push_back(r);
                add_vec(next, l->apply_vecs(args), weight * multinomial);
            }
        }
        gc.coefficients.push_back(std::move(next));
    }
    return gc;
}

} // namespace halg
