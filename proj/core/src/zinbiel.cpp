#include <halg/zinbiel.hpp>

#include <stdexcept>

namespace halg {

WordSum zin_product(const Word& a, const Word& b) {
    WordSum out;
    if (a.empty() || b.empty())
        return out;
    const int p = static_cast<int>(a.size());
    const int q = static_cast<int>(b.size());
    if (p + q > word_length_cap)
        throw std::length_error("zin_product: word length cap exceeded");

    Word head = a;
    head.insert(head.end(), b.begin(), b.end() - 1); // all letters but the last
    for (const Perm& sigma : unshuffles({p, q - 1})) {
        // The shuffle sends slot i of `head` to position sigma(i), i.e. the
        // rearranged word is head ∘ sigma⁻¹; the last letter of b stays last.
        auto [shuffled, sgn] = permute_word(sigma.inverse(), head);
        shuffled.push_back(b.back());
        add_word(out, shuffled, Scalar(sgn));
    }
    return out;
}

WordSum zin_product(const WordSum& a, const WordSum& b) {
    WordSum out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b)
            add_word_sum(out, zin_product(wa, wb), ca * cb);
    return out;
}

WordPairSum zin_coproduct(const Word& w) {
    WordPairSum out;
    const int p = static_cast<int>(w.size());
    if (p < 2)
        return out;
    const Word body(w.begin(), w.end() - 1); // first p-1 letters
    for (int k = 1; k <= p - 1; ++k) {
        for (const Perm& sigma : unshuffles({k, p - 1 - k})) {
            auto [arranged, sgn] = permute_word(sigma, body);
            Word left(arranged.begin(), arranged.begin() + k);
            Word right(arranged.begin() + k, arranged.end());
            right.push_back(w.back());
            add_word_pair(out, left, right, Scalar(sgn));
        }
    }
    return out;
}

std::map<std::vector<Word>, Scalar> zin_iterated_coproduct(const Word& w, int p) {
    if (p < 1)
        throw std::invalid_argument("zin_iterated_coproduct: need p >= 1");
    std::map<std::vector<Word>, Scalar> cur;
    cur[{w}] = 1;
    for (int step = 1; step < p; ++step) {
        std::map<std::vector<Word>, Scalar> next;
        for (const auto& [blocks, c] : cur) {
            for (const auto& [cut, s] : zin_coproduct(blocks.front())) {
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

WordSum zin_coderivation_weight(const MapFamily& D, const Word& w, int p) {
    WordSum out;
    const int n = static_cast<int>(w.size());
    const int k = n - p + 1;
    if (p < 1 || k < 1)
        return out;
    const MultiMap* dk = D.at(k);
    if (dk == nullptr || dk->is_zero())
        return out;

    for (int i = 1; i <= p; ++i) {
        const int m = i + k - 2; // letters shuffled ahead of the anchored one
        const Word prefix(w.begin(), w.begin() + m);
        for (const Perm& sigma : unshuffles({i - 1, k - 1})) {
            auto [arranged, sgn] = permute_word(sigma, prefix);
            Word passive(arranged.begin(), arranged.begin() + (i - 1));
            Word args(arranged.begin() + (i - 1), arranged.end());
            args.push_back(w[static_cast<size_t>(m)]);

            int sign = sgn;
            if (dk->degree % 2 != 0 && word_degree(passive) % 2 != 0)
                sign = -sign; // D_k passes the untouched prefix
            for (const auto& [y, c] : dk->apply(args)) {
                Word image = passive;
                image.push_back(y);
                image.insert(image.end(), w.begin() + m + 1, w.end());
                add_word(out, image, c * sign);
            }
        }
    }
    return out;
}

WordSum zin_coderivation(const MapFamily& D, const Word& w) {
    WordSum out;
    const int n = static_cast<int>(w.size());
    for (const auto& [k, dk] : D.comps) {
        (void)dk;
        if (k >= 1 && k <= n)
            add_word_sum(out, zin_coderivation_weight(D, w, n - k + 1), 1);
    }
    return out;
}

WordSum zin_morphism_weight(const MapFamily& F, const Word& w, int p) {
    WordSum out;
    const int n = static_cast<int>(w.size());
    if (p < 1 || p > n)
        return out;
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
                    "zin_morphism_weight: morphism components must have degree 0");
            factors.push_back(fk);
        }
        if (!usable)
            continue;
        for (const Perm& sigma : half_unshuffles(comp)) {
            auto [arranged, sgn] = permute_word(sigma, w);
            add_word_sum(out, apply_tensor(factors, arranged), Scalar(sgn));
        }
    }
    return out;
}

WordSum zin_morphism(const MapFamily& F, const Word& w) {
    WordSum out;
    const int n = static_cast<int>(w.size());
    for (int p = 1; p <= n; ++p)
        add_word_sum(out, zin_morphism_weight(F, w, p), 1);
    return out;
}

} // namespace halg
