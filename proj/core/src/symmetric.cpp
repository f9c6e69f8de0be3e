#include <halg/symmetric.hpp>

#include <stdexcept>

namespace halg {

std::pair<Word, int> sym_canonical(const Word& w) {
    Word out = w;
    int sign = 1;
    // Insertion sort; each adjacent swap of letters a, b costs (-1)^{|a||b|}.
    for (size_t i = 1; i < out.size(); ++i) {
        for (size_t j = i; j > 0 && out[j] < out[j - 1]; --j) {
            if (out[j].deg % 2 != 0 && out[j - 1].deg % 2 != 0)
                sign = -sign;
            std::swap(out[j], out[j - 1]);
        }
    }
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i] == out[i - 1] && out[i].deg % 2 != 0)
            return {out, 0};
    return {out, sign};
}

void add_sym_word(WordSum& s, const Word& w, const Scalar& c) {
    auto [canon, sign] = sym_canonical(w);
    if (sign != 0 && c != 0)
        add_word(s, canon, c * sign);
}

WordSum sym_product(const WordSum& a, const WordSum& b) {
    WordSum out;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            if (wa.size() + wb.size() > static_cast<size_t>(word_length_cap))
                throw std::length_error("sym_product: word length cap exceeded");
            Word cat = wa;
            cat.insert(cat.end(), wb.begin(), wb.end());
            add_sym_word(out, cat, ca * cb);
        }
    }
    return out;
}

WordPairSum sym_coproduct(const Word& w) {
    WordPairSum out;
    auto [canon, base] = sym_canonical(w);
    if (base == 0)
        return out;
    const int p = static_cast<int>(canon.size());
    for (int i = 1; i <= p - 1; ++i) {
        for (const Perm& sigma : unshuffles({i, p - i})) {
            auto [arranged, sgn] = permute_word(sigma, canon);
            Word left(arranged.begin(), arranged.begin() + i);
            Word right(arranged.begin() + i, arranged.end());
            add_word_pair(out, left, right, Scalar(base * sgn));
        }
    }
    return out;
}

std::map<std::vector<Word>, Scalar> sym_iterated_coproduct(const Word& w, int p) {
    if (p < 1)
        throw std::invalid_argument("sym_iterated_coproduct: need p >= 1");
    std::map<std::vector<Word>, Scalar> cur;
    auto [canon, base] = sym_canonical(w);
    if (base == 0)
        return cur;
    cur[{canon}] = base;
    for (int step = 1; step < p; ++step) {
        std::map<std::vector<Word>, Scalar> next;
        for (const auto& [blocks, c] : cur) {
            for (const auto& [cut, s] : sym_coproduct(blocks.front())) {
                std::vector<Word> refined{cut.first, cut.second};
                refined.insert(refined.end(), blocks.begin() + 1, blocks.end());
                auto [it, fresh] = next.try_emplace(std::move(refined), 0);
                it->second += c * s;
                if (it->second == 0)
                    next.erase(it);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

WordSum sym_coderivation_weight(const MapFamily& D, const Word& w, int p) {
    WordSum out;
    auto [canon, base] = sym_canonical(w);
    if (base == 0)
        return out;
    const int n = static_cast<int>(canon.size());
    const int k = n - p + 1;
    if (p < 1 || k < 1)
        return out;
    const MultiMap* dk = D.at(k);
    if (dk == nullptr || dk->is_zero())
        return out;

    for (const Perm& sigma : unshuffles({k, n - k})) {
        auto [arranged, sgn] = permute_word(sigma, canon);
        Word args(arranged.begin(), arranged.begin() + k);
        const Word rest(arranged.begin() + k, arranged.end());
        for (const auto& [y, c] : dk->apply(args)) {
            Word image{y};
            image.insert(image.end(), rest.begin(), rest.end());
            add_sym_word(out, image, c * base * sgn);
        }
    }
    return out;
}

WordSum sym_coderivation(const MapFamily& D, const Word& w) {
    WordSum out;
    const int n = static_cast<int>(w.size());
    for (const auto& [k, dk] : D.comps) {
        (void)dk;
        if (k >= 1 && k <= n)
            add_word_sum(out, sym_coderivation_weight(D, w, n - k + 1), 1);
    }
    return out;
}

WordSum sym_morphism_weight(const MapFamily& F, const Word& w, int p) {
    WordSum out;
    auto [canon, base] = sym_canonical(w);
    if (base == 0)
        return out;
    const int n = static_cast<int>(canon.size());
    if (p < 1 || p > n)
        return out;
    const Scalar norm = Scalar(base) / rat_factorial(p);
    for (const auto& comp : compositions(n, p)) {
        std::vector<const MultiMap*> factors;
        factors.reserve(comp.size());
        bool usable = true;
        for (int k : comp) {
            const MultiMap* fk = F.at(k);
            if (fk == nullptr || fk->is_zero()) {
                usable = false;
                break;
            }
            if (fk->degree != 0)
                throw std::invalid_argument(
                    "sym_morphism_weight: morphism components must have degree 0");
            factors.push_back(fk);
        }
        if (!usable)
            continue;
        for (const Perm& sigma : unshuffles(comp)) {
            auto [arranged, sgn] = permute_word(sigma, canon);
            for (const auto& [img, c] : apply_tensor(factors, arranged))
                add_sym_word(out, img, c * sgn * norm);
        }
    }
    return out;
}

WordSum sym_morphism(const MapFamily& F, const Word& w) {
    WordSum out;
    const int n = static_cast<int>(w.size());
    for (int p = 1; p <= n; ++p)
        add_word_sum(out, sym_morphism_weight(F, w, p), 1);
    return out;
}

SymOp sym_op_from_map(const MultiMap& f) {
    SymOp op;
    op.degree = f.degree;
    op.act = [f](const Word& w) {
        WordSum out;
        if (static_cast<int>(w.size()) != f.arity)
            return out;
        for (const auto& [y, c] : f.apply(w))
            add_word(out, Word{y}, c);
        return out;
    };
    return op;
}

SymOp sym_op_coderivation(const MapFamily& D) {
    int deg = 0;
    for (const auto& [k, dk] : D.comps) {
        (void)k;
        if (!dk.is_zero())
            deg = dk.degree;
    }
    SymOp op;
    op.degree = deg;
    op.act = [D](const Word& w) { return sym_coderivation(D, w); };
    return op;
}

SymOp sym_odot(const SymOp& f, const SymOp& g) {
    SymOp op;
    op.degree = f.degree + g.degree;
    const int gdeg = g.degree;
    auto fa = f.act;
    auto ga = g.act;
    op.act = [fa, ga, gdeg](const Word& w) {
        WordSum out;
        auto [canon, base] = sym_canonical(w);
        if (base == 0)
            return out;
        const int p = static_cast<int>(canon.size());
        for (int i = 1; i <= p - 1; ++i) {
            for (const Perm& sigma : unshuffles({i, p - i})) {
                auto [arranged, sgn] = permute_word(sigma, canon);
                const Word left(arranged.begin(), arranged.begin() + i);
                const Word right(arranged.begin() + i, arranged.end());
                int sign = base * sgn;
                if (gdeg % 2 != 0 && word_degree(left) % 2 != 0)
                    sign = -sign;
                add_word_sum(out, sym_product(fa(left), ga(right)), Scalar(sign));
            }
        }
        return out;
    };
    return op;
}

} // namespace halg
