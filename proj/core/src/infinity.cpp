#include <halg/infinity.hpp>

#include <stdexcept>

namespace halg {

std::string to_string(Flavor f) { return f == Flavor::leibniz ? "leibniz" : "lie"; }

void IdentityReport::record_failure(int index, const Word& args, const Vec& residual) {
    pass = false;
    ++failure_counts[index];
    if (samples.size() < sample_cap)
        samples.push_back({index, args, residual});
}

void IdentityReport::record_error(std::string msg) {
    pass = false;
    precheck_errors.push_back(std::move(msg));
}

int structural_identity_bound(const GradedSpace& sp) {
    if (sp.dims.empty())
        return 1;
    int span = sp.max_degree() - sp.min_degree() + 1;
    return 2 * span + 1;
}

Vec leibniz_jacobi_residual(const MapFamily& brackets, const Word& args) {
    Vec res;
    const int n = static_cast<int>(args.size());
    for (int j = 1; j <= n; ++j) {
        const int i = n + 1 - j;
        const MultiMap* lj = brackets.at(j);
        const MultiMap* li = brackets.at(i);
        if (lj == nullptr || li == nullptr || lj->is_zero() || li->is_zero())
            continue;
        for (int k = j; k <= n; ++k) {
            const Word prefix(args.begin(), args.begin() + (k - 1));
            for (const Perm& sigma : unshuffles({k - j, j - 1})) {
                auto [arranged, eps] = permute_word(sigma, prefix);
                const Word outer_head(arranged.begin(), arranged.begin() + (k - j));
                Word inner(arranged.begin() + (k - j), arranged.end());
                inner.push_back(args[static_cast<size_t>(k) - 1]);

                long long expo = static_cast<long long>(n - k + 1) * (j - 1) +
                                 static_cast<long long>(j) * word_degree(outer_head);
                int sign = eps * sigma.sign() * parity_sign(expo);
                for (const auto& [y, c] : lj->apply(inner)) {
                    Word outer = outer_head;
                    outer.push_back(y);
                    outer.insert(outer.end(), args.begin() + k, args.end());
                    add_vec(res, li->apply(outer), c * sign);
                }
            }
        }
    }
    return res;
}

Vec lie_jacobi_residual(const MapFamily& brackets, const Word& args) {
    Vec res;
    const int n = static_cast<int>(args.size());
    for (int k = 1; k <= n; ++k) {
        const int p = n + 1 - k;
        const MultiMap* lk = brackets.at(k);
        const MultiMap* lp = brackets.at(p);
        if (lk == nullptr || lp == nullptr || lk->is_zero() || lp->is_zero())
            continue;
        for (const Perm& sigma : unshuffles({k, p - 1})) {
            auto [arranged, eps] = permute_word(sigma, args);
            const Word inner(arranged.begin(), arranged.begin() + k);
            int sign = eps * sigma.sign() * parity_sign(static_cast<long long>(k) * (p - 1));
            for (const auto& [y, c] : lk->apply(inner)) {
                Word outer{y};
                outer.insert(outer.end(), arranged.begin() + k, arranged.end());
                add_vec(res, lp->apply(outer), c * sign);
            }
        }
    }
    return res;
}

namespace {

// Shared left-hand side of the morphism identities: blockwise application of
// the components followed by a target bracket. Lie flavor sums over all
// unshuffles of each composition and normalizes by 1/p! (each distinct term
// appears p! times there); Leibniz flavor enumerates terms once via
// half-unshuffles.
Vec morphism_identity_lhs(const MapFamily& tgt_brackets, const MapFamily& phi, Flavor flavor,
                          const Word& args) {
    Vec res;
    const int n = static_cast<int>(args.size());
    for (int p = 1; p <= n; ++p) {
        const MultiMap* mp = tgt_brackets.at(p);
        if (mp == nullptr || mp->is_zero())
            continue;
        for (const auto& comp : compositions(n, p)) {
            std::vector<const MultiMap*> factors;
            bool usable = true;
            for (int k : comp) {
                const MultiMap* fk = phi.at(k);
                if (fk == nullptr || fk->is_zero()) {
                    usable = false;
                    break;
                }
                factors.push_back(fk);
            }
            if (!usable)
                continue;

            long long base_expo = static_cast<long long>(p) * (p - 1) / 2;
            for (int r = 0; r < p - 1; ++r)
                base_expo += static_cast<long long>(p - 1 - r) * comp[static_cast<size_t>(r)];

            const std::vector<Perm> sigmas =
                flavor == Flavor::leibniz ? half_unshuffles(comp) : unshuffles(comp);
            const Scalar norm = flavor == Flavor::leibniz
                                    ? Scalar(1)
                                    : Scalar(1) / rat_factorial(p);
            for (const Perm& sigma : sigmas) {
                auto [arranged, eps] = permute_word(sigma, args);
                long long expo = base_expo;
                std::vector<Vec> block_values;
                int offset = 0;
                for (int r = 0; r < p; ++r) {
                    const int kr = comp[static_cast<size_t>(r)];
                    const Word block(arranged.begin() + offset, arranged.begin() + offset + kr);
                    if (r > 0)
                        expo += static_cast<long long>(kr - 1) *
                                word_degree(Word(arranged.begin(), arranged.begin() + offset));
                    block_values.push_back(factors[static_cast<size_t>(r)]->apply(block));
                    offset += kr;
                }
                Scalar coeff = norm * (eps * sigma.sign() * parity_sign(expo));
                add_vec(res, mp->apply_vecs(block_values), coeff);
            }
        }
    }
    return res;
}

Vec leibniz_morphism_rhs(const MapFamily& src_brackets, const MapFamily& phi, const Word& args) {
    Vec res;
    const int n = static_cast<int>(args.size());
    for (int j = 1; j <= n; ++j) {
        const int i = n + 1 - j;
        const MultiMap* lj = src_brackets.at(j);
        const MultiMap* fi = phi.at(i);
        if (lj == nullptr || fi == nullptr || lj->is_zero() || fi->is_zero())
            continue;
        for (int k = j; k <= n; ++k) {
            const Word prefix(args.begin(), args.begin() + (k - 1));
            for (const Perm& sigma : unshuffles({k - j, j - 1})) {
                auto [arranged, eps] = permute_word(sigma, prefix);
                const Word outer_head(arranged.begin(), arranged.begin() + (k - j));
                Word inner(arranged.begin() + (k - j), arranged.end());
                inner.push_back(args[static_cast<size_t>(k) - 1]);

                long long expo = k + static_cast<long long>(n - k + 1) * j +
                                 static_cast<long long>(j) * word_degree(outer_head);
                int sign = eps * sigma.sign() * parity_sign(expo);
                for (const auto& [y, c] : lj->apply(inner)) {
                    Word outer = outer_head;
                    outer.push_back(y);
                    outer.insert(outer.end(), args.begin() + k, args.end());
                    add_vec(res, fi->apply(outer), c * sign);
                }
            }
        }
    }
    return res;
}

Vec lie_morphism_rhs(const MapFamily& src_brackets, const MapFamily& phi, const Word& args) {
    Vec res;
    const int n = static_cast<int>(args.size());
    for (int k = 1; k <= n; ++k) {
        const int p = n + 1 - k;
        const MultiMap* lk = src_brackets.at(k);
        const MultiMap* fp = phi.at(p);
        if (lk == nullptr || fp == nullptr || lk->is_zero() || fp->is_zero())
            continue;
        for (const Perm& sigma : unshuffles({k, p - 1})) {
            auto [arranged, eps] = permute_word(sigma, args);
            const Word inner(arranged.begin(), arranged.begin() + k);
            int sign = eps * sigma.sign() * parity_sign(static_cast<long long>(k) * (p - 1));
            for (const auto& [y, c] : lk->apply(inner)) {
                Word outer{y};
                outer.insert(outer.end(), arranged.begin() + k, arranged.end());
                add_vec(res, fp->apply(outer), c * sign);
            }
        }
    }
    return res;
}

void precheck_brackets(const InftyStructure& s, IdentityReport& report) {
    for (const auto& [i, li] : s.brackets.comps) {
        if (li.is_zero())
            continue;
        if (li.arity != i)
            report.record_error("bracket " + std::to_string(i) + ": arity mismatch");
        if (li.degree != i - 2)
            report.record_error("bracket " + std::to_string(i) + ": degree is not arity-2");
    }
    if (s.flavor == Flavor::lie) {
        for (const auto& [i, li] : s.brackets.comps) {
            if (li.is_zero() || i < 2)
                continue;
            bool ok = true;
            for (const Word& w : basis_words(s.space, i)) {
                for (int r = 1; r < i && ok; ++r) {
                    Perm tau = Perm::identity(i);
                    std::swap(tau.img[static_cast<size_t>(r) - 1], tau.img[static_cast<size_t>(r)]);
                    auto [swapped, eps] = permute_word(tau, w);
                    if (li.apply(swapped) != scaled(li.apply(w), Scalar(-eps)))
                        ok = false;
                }
                if (!ok)
                    break;
            }
            if (!ok)
                report.record_error("bracket " + std::to_string(i) +
                                    ": graded antisymmetry fails");
        }
    }
}

void precheck_components(const InftyMorphism& m, IdentityReport& report) {
    if (m.source.flavor != m.target.flavor)
        report.record_error("source and target flavors differ");
    for (const auto& [i, fi] : m.components.comps) {
        if (fi.is_zero())
            continue;
        if (fi.arity != i)
            report.record_error("component " + std::to_string(i) + ": arity mismatch");
        if (fi.degree != i - 1)
            report.record_error("component " + std::to_string(i) + ": degree is not arity-1");
    }
    if (m.source.flavor == Flavor::lie) {
        for (const auto& [i, fi] : m.components.comps) {
            if (fi.is_zero() || i < 2)
                continue;
            bool ok = true;
            for (const Word& w : basis_words(m.source.space, i)) {
                for (int r = 1; r < i && ok; ++r) {
                    Perm tau = Perm::identity(i);
                    std::swap(tau.img[static_cast<size_t>(r) - 1], tau.img[static_cast<size_t>(r)]);
                    auto [swapped, eps] = permute_word(tau, w);
                    if (fi.apply(swapped) != scaled(fi.apply(w), Scalar(-eps)))
                        ok = false;
                }
                if (!ok)
                    break;
            }
            if (!ok)
                report.record_error("component " + std::to_string(i) +
                                    ": graded antisymmetry fails");
        }
    }
}

} // namespace

IdentityReport check_leibniz_infinity(const InftyStructure& s, int n_max) {
    IdentityReport report;
    if (s.flavor != Flavor::leibniz) {
        report.record_error("flavor mismatch: expected leibniz");
        return report;
    }
    precheck_brackets(s, report);
    if (!report.precheck_errors.empty())
        return report;
    if (n_max < 0)
        n_max = structural_identity_bound(s.space);
    for (int n = 1; n <= n_max && n <= word_length_cap; ++n) {
        for (const Word& w : basis_words(s.space, n)) {
            ++report.tuples_checked;
            Vec res = leibniz_jacobi_residual(s.brackets, w);
            if (!is_zero(res))
                report.record_failure(n, w, res);
        }
    }
    return report;
}

IdentityReport check_lie_infinity(const InftyStructure& s, int n_max) {
    IdentityReport report;
    if (s.flavor != Flavor::lie) {
        report.record_error("flavor mismatch: expected lie");
        return report;
    }
    precheck_brackets(s, report);
    if (!report.precheck_errors.empty())
        return report;
    if (n_max < 0)
        n_max = structural_identity_bound(s.space);
    for (int n = 1; n <= n_max && n <= word_length_cap; ++n) {
        for (const Word& w : basis_words(s.space, n)) {
            ++report.tuples_checked;
            Vec res = lie_jacobi_residual(s.brackets, w);
            if (!is_zero(res))
                report.record_failure(n, w, res);
        }
    }
    return report;
}

IdentityReport check_inf_structure(const InftyStructure& s, int n_max) {
    return s.flavor == Flavor::leibniz ? check_leibniz_infinity(s, n_max)
                                       : check_lie_infinity(s, n_max);
}

Vec inf_morphism_residual(const InftyMorphism& m, const Word& args) {
    Vec res = morphism_identity_lhs(m.target.brackets, m.components, m.source.flavor, args);
    Vec rhs = m.source.flavor == Flavor::leibniz
                  ? leibniz_morphism_rhs(m.source.brackets, m.components, args)
                  : lie_morphism_rhs(m.source.brackets, m.components, args);
    add_vec(res, rhs, Scalar(-1));
    return res;
}

IdentityReport check_inf_morphism(const InftyMorphism& m, int n_max) {
    IdentityReport report;
    precheck_components(m, report);
    if (!report.precheck_errors.empty())
        return report;
    if (n_max < 0)
        n_max = std::max(structural_identity_bound(m.source.space),
                         structural_identity_bound(m.target.space));
    for (int n = 1; n <= n_max && n <= word_length_cap; ++n) {
        for (const Word& w : basis_words(m.source.space, n)) {
            ++report.tuples_checked;
            Vec res = inf_morphism_residual(m, w);
            if (!is_zero(res))
                report.record_failure(n, w, res);
        }
    }
    return report;
}

MapFamily to_codifferential(const MapFamily& brackets) {
    MapFamily D;
    for (const auto& [i, li] : brackets.comps) {
        if (li.is_zero())
            continue;
        MultiMap di = scaled(conjugate_up(li), Scalar(parity_sign(static_cast<long long>(i) *
                                                                  (i - 1) / 2)));
        if (di.degree != -1)
            throw std::logic_error("to_codifferential: corestriction degree is not -1");
        D.set(i, std::move(di));
    }
    return D;
}

MapFamily brackets_from_codifferential(const MapFamily& D) {
    // Inverse of to_codifferential.  Because (s^{-1})^{oti} s^{oti} =
    // (-1)^{i(i-1)/2} id, conjugating back down already reproduces the sign
    // used on the way up, so no extra factor appears here.
    MapFamily brackets;
    for (const auto& [i, di] : D.comps) {
        if (di.is_zero())
            continue;
        brackets.set(i, conjugate_down(di));
    }
    return brackets;
}

MapFamily morphism_to_corestrictions(const MapFamily& components) {
    MapFamily F;
    for (const auto& [i, fi] : components.comps) {
        if (fi.is_zero())
            continue;
        MultiMap Fi = scaled(conjugate_up(fi), Scalar(parity_sign(static_cast<long long>(i) *
                                                                  (i - 1) / 2)));
        if (Fi.degree != 0)
            throw std::logic_error("morphism_to_corestrictions: corestriction degree is not 0");
        F.set(i, std::move(Fi));
    }
    return F;
}

MapFamily corestrictions_to_morphism(const MapFamily& F) {
    // Inverse of morphism_to_corestrictions; see brackets_from_codifferential
    // for why the descent needs no sign of its own.
    MapFamily components;
    for (const auto& [i, Fi] : F.comps) {
        if (Fi.is_zero())
            continue;
        components.set(i, conjugate_down(Fi));
    }
    return components;
}

Vec codifferential_square_apply(const MapFamily& D, Flavor flavor, const Word& w) {
    const WordSum first =
        flavor == Flavor::leibniz ? zin_coderivation(D, w) : sym_coderivation(D, w);
    Vec out;
    for (const auto& [x, c] : first) {
        const MultiMap* dm = D.at(static_cast<int>(x.size()));
        if (dm != nullptr)
            add_vec(out, dm->apply(x), c);
    }
    return out;
}

std::map<int, MultiMap> codifferential_square_residual(const MapFamily& D, Flavor flavor,
                                                       const GradedSpace& suspended, int n_max) {
    std::map<int, MultiMap> residuals;
    for (int n = 1; n <= n_max && n <= word_length_cap; ++n) {
        MultiMap rn;
        rn.arity = n;
        rn.degree = -2;
        for (const Word& w : basis_words(suspended, n)) {
            Vec v = codifferential_square_apply(D, flavor, w);
            for (const auto& [y, c] : v)
                rn.add_entry(w, y, c);
        }
        residuals.emplace(n, std::move(rn));
    }
    return residuals;
}

Vec morphism_defect_apply(const MapFamily& F, const MapFamily& Dsrc, const MapFamily& Dtgt,
                          Flavor flavor, const Word& w) {
    Vec out;
    const WordSum derived =
        flavor == Flavor::leibniz ? zin_coderivation(Dsrc, w) : sym_coderivation(Dsrc, w);
    for (const auto& [x, c] : derived) {
        const MultiMap* fm = F.at(static_cast<int>(x.size()));
        if (fm != nullptr)
            add_vec(out, fm->apply(x), c);
    }
    const int n = static_cast<int>(w.size());
    for (int p = 1; p <= n; ++p) {
        const MultiMap* dp = Dtgt.at(p);
        if (dp == nullptr || dp->is_zero())
            continue;
        const WordSum pushed = flavor == Flavor::leibniz ? zin_morphism_weight(F, w, p)
                                                         : sym_morphism_weight(F, w, p);
        for (const auto& [u, c] : pushed)
            add_vec(out, dp->apply(u), -c);
    }
    return out;
}

InftyMorphism identity_inf_morphism(const InftyStructure& s) {
    InftyMorphism m;
    m.source = s;
    m.target = s;
    m.components.set(1, identity_map(s.space));
    return m;
}

InftyMorphism compose_inf_morphisms(const InftyMorphism& g, const InftyMorphism& f) {
    if (f.source.flavor != g.source.flavor)
        throw std::invalid_argument("compose_inf_morphisms: flavor mismatch");
    if (!(f.target.space == g.source.space))
        throw std::invalid_argument("compose_inf_morphisms: middle space mismatch");

    const Flavor flavor = f.source.flavor;
    const MapFamily F = morphism_to_corestrictions(f.components);
    const MapFamily G = morphism_to_corestrictions(g.components);
    const GradedSpace sV = shift_space(f.source.space, 1, "s" + f.source.space.name);

    int max_n = F.max_arity() * G.max_arity();
    if (max_n > word_length_cap)
        max_n = word_length_cap;

    MapFamily GF;
    for (int n = 1; n <= max_n; ++n) {
        MultiMap comp;
        comp.arity = n;
        comp.degree = 0;
        for (const Word& w : basis_words(sV, n)) {
            Vec out;
            for (int p = 1; p <= n; ++p) {
                const MultiMap* gp = G.at(p);
                if (gp == nullptr || gp->is_zero())
                    continue;
                const WordSum pushed = flavor == Flavor::leibniz
                                           ? zin_morphism_weight(F, w, p)
                                           : sym_morphism_weight(F, w, p);
                for (const auto& [u, c] : pushed)
                    add_vec(out, gp->apply(u), c);
            }
            for (const auto& [y, c] : out)
                comp.add_entry(w, y, c);
        }
        if (!comp.is_zero())
            GF.set(n, std::move(comp));
    }

    InftyMorphism composed;
    composed.source = f.source;
    composed.target = g.target;
    composed.components = corestrictions_to_morphism(GF);
    return composed;
}

} // namespace halg
