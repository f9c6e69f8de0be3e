#include "halg/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace halg {

Perm Perm::identity(int n) {
    Perm p;
    p.img.resize(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        p.img[static_cast<size_t>(i) - 1] = i;
    return p;
}

Perm Perm::inverse() const {
    Perm p;
    p.img.resize(img.size());
    for (int i = 1; i <= n(); ++i)
        p.img[static_cast<size_t>(img[static_cast<size_t>(i) - 1]) - 1] = i;
    return p;
}

Perm Perm::after(const Perm& tau) const {
    Perm p;
    p.img.resize(img.size());
    for (int i = 1; i <= n(); ++i)
        p.img[static_cast<size_t>(i) - 1] = (*this)(tau(i));
    return p;
}

int Perm::sign() const {
    int s = 1;
    for (int r = 1; r < n(); ++r)
        for (int t = r + 1; t <= n(); ++t)
            if ((*this)(r) > (*this)(t))
                s = -s;
    return s;
}

int koszul_sign(const Perm& sigma, const std::vector<int>& degs) {
    if (degs.size() != sigma.img.size())
        throw std::invalid_argument("koszul_sign: degree list length mismatch");
    int s = 1;
    int n = sigma.n();
    for (int r = 1; r < n; ++r)
        for (int t = r + 1; t <= n; ++t)
            if (sigma(r) > sigma(t) && degs[static_cast<size_t>(sigma(r)) - 1] % 2 != 0 &&
                degs[static_cast<size_t>(sigma(t)) - 1] % 2 != 0)
                s = -s;
    return s;
}

std::pair<Word, int> permute_word(const Perm& sigma, const Word& w) {
    if (w.size() != sigma.img.size())
        throw std::invalid_argument("permute_word: word length mismatch");
    Word out(w.size());
    for (int j = 1; j <= sigma.n(); ++j)
        out[static_cast<size_t>(j) - 1] = w[static_cast<size_t>(sigma(j)) - 1];
    return {std::move(out), koszul_sign(sigma, word_degrees(w))};
}

static void unshuffle_rec(const std::vector<int>& blocks, size_t bi, std::vector<int>& avail,
                          std::vector<int>& img, std::vector<Perm>& out) {
    if (bi == blocks.size()) {
        out.push_back(Perm{img});
        return;
    }
    int k = blocks[bi];
    int m = static_cast<int>(avail.size());
    if (k > m)
        return;
    // choose k of the available values, keep them in increasing order
    std::vector<int> pick(static_cast<size_t>(k));
    std::vector<char> used(avail.size(), 0);
    auto choose = [&](auto&& self, int start, int got) -> void {
        if (got == k) {
            std::vector<int> rest;
            rest.reserve(avail.size() - static_cast<size_t>(k));
            for (size_t i = 0; i < avail.size(); ++i)
                if (!used[i])
                    rest.push_back(avail[i]);
            size_t base = img.size();
            img.insert(img.end(), pick.begin(), pick.end());
            std::vector<int> saved = std::move(avail);
            avail = std::move(rest);
            unshuffle_rec(blocks, bi + 1, avail, img, out);
            avail = std::move(saved);
            img.resize(base);
            return;
        }
        for (int i = start; i <= m - (k - got); ++i) {
            used[static_cast<size_t>(i)] = 1;
            pick[static_cast<size_t>(got)] = avail[static_cast<size_t>(i)];
            self(self, i + 1, got + 1);
            used[static_cast<size_t>(i)] = 0;
        }
    };
    if (k == 0) {
        unshuffle_rec(blocks, bi + 1, avail, img, out);
        return;
    }
    choose(choose, 0, 0);
}

std::vector<Perm> unshuffles(const std::vector<int>& blocks) {
    int n = 0;
    for (int k : blocks) {
        if (k < 0)
            throw std::invalid_argument("unshuffles: negative block size");
        n += k;
    }
    std::vector<int> avail(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        avail[static_cast<size_t>(i) - 1] = i;
    std::vector<int> img;
    img.reserve(static_cast<size_t>(n));
    std::vector<Perm> out;
    unshuffle_rec(blocks, 0, avail, img, out);
    return out;
}

std::vector<Perm> half_unshuffles(const std::vector<int>& blocks) {
    for (int k : blocks)
        if (k <= 0)
            throw std::invalid_argument("half_unshuffles: blocks must be positive");
    std::vector<Perm> all = unshuffles(blocks);
    std::vector<Perm> out;
    for (const Perm& sigma : all) {
        bool ok = true;
        int pos = 0, prev = 0;
        for (size_t r = 0; r < blocks.size(); ++r) {
            pos += blocks[r];
            int last = sigma(pos);
            if (r > 0 && last <= prev) {
                ok = false;
                break;
            }
            prev = last;
        }
        if (ok)
            out.push_back(sigma);
    }
    return out;
}

std::vector<std::vector<int>> compositions(int n, int parts) {
    std::vector<std::vector<int>> out;
    if (parts <= 0 || n < parts)
        return out;
    std::vector<int> cur(static_cast<size_t>(parts), 1);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == parts - 1) {
            cur[static_cast<size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int k = 1; k <= left - (parts - 1 - pos); ++k) {
            cur[static_cast<size_t>(pos)] = k;
            self(self, pos + 1, left - k);
        }
    };
    rec(rec, 0, n);
    return out;
}

std::vector<std::vector<int>> all_compositions(int n) {
    std::vector<std::vector<int>> out;
    for (int p = 1; p <= n; ++p) {
        auto cs = compositions(n, p);
        out.insert(out.end(), cs.begin(), cs.end());
    }
    return out;
}

} // namespace halg
