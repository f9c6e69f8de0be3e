#include "halg/permutation.hpp"
#include "halg/rational.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <random>

using namespace halg;

static Word make_word(const std::vector<int>& degs) {
    Word w;
    for (size_t i = 0; i < degs.size(); ++i)
        w.push_back(Basis{degs[i], static_cast<int>(i)});
    return w;
}

static Perm random_perm(int n, std::mt19937_64& rng) {
    Perm p = Perm::identity(n);
    std::shuffle(p.img.begin(), p.img.end(), rng);
    return p;
}

int main() {
    // identity and swap signs
    {
        Perm id = Perm::identity(3);
        assert(koszul_sign(id, {1, 1, 0}) == 1);
        assert(id.sign() == 1);

        Perm swap{{2, 1}};
        assert(swap.sign() == -1);
        assert(koszul_sign(swap, {1, 1}) == -1); // two odd letters anticommute
        assert(koszul_sign(swap, {1, 0}) == 1);
        assert(koszul_sign(swap, {2, 1}) == 1);
        assert(koszul_sign(swap, {-1, 1}) == -1); // parity only
    }

    // cycle sending (v1 v2 v3) to (v2 v3 v1), degrees (1,1,0)
    {
        Perm c{{2, 3, 1}};
        Word w = make_word({1, 1, 0});
        auto [out, sgn] = permute_word(c, w);
        assert(out[0].idx == 1 && out[1].idx == 2 && out[2].idx == 0);
        assert(sgn == -1);
    }

    // group structure: sign multiplicative, inverse/compose consistent
    {
        std::mt19937_64 rng(12345);
        for (int trial = 0; trial < 200; ++trial) {
            int n = 1 + static_cast<int>(rng() % 6);
            Perm a = random_perm(n, rng), b = random_perm(n, rng);
            assert(a.after(b).sign() == a.sign() * b.sign());
            assert(a.after(a.inverse()) == Perm::identity(n));
            assert(a.inverse().after(a) == Perm::identity(n));
        }
    }

    // graded action: applying sigma then its inverse restores the word, total sign +1
    {
        std::mt19937_64 rng(777);
        for (int trial = 0; trial < 300; ++trial) {
            int n = 1 + static_cast<int>(rng() % 6);
            std::vector<int> degs;
            for (int i = 0; i < n; ++i)
                degs.push_back(static_cast<int>(rng() % 5) - 2);
            Word w = make_word(degs);
            Perm s = random_perm(n, rng);
            auto [mid, s1] = permute_word(s, w);
            auto [back, s2] = permute_word(s.inverse(), mid);
            assert(back == w);
            assert(s1 * s2 == 1);
        }
    }

    // unshuffles: Sh(1,1) = {id, swap}
    {
        auto sh = unshuffles({1, 1});
        assert(sh.size() == 2);
        assert(std::find(sh.begin(), sh.end(), Perm::identity(2)) != sh.end());
        assert(std::find(sh.begin(), sh.end(), Perm{{2, 1}}) != sh.end());
    }

    // |Sh(2,1)| = 3, explicit list
    {
        auto sh = unshuffles({2, 1});
        assert(sh.size() == 3);
        assert(std::find(sh.begin(), sh.end(), Perm{{1, 2, 3}}) != sh.end());
        assert(std::find(sh.begin(), sh.end(), Perm{{1, 3, 2}}) != sh.end());
        assert(std::find(sh.begin(), sh.end(), Perm{{2, 3, 1}}) != sh.end());
    }

    // counts: |Sh(p,q)| = C(p+q, p), block monotonicity, multinomial for 3 blocks
    {
        for (int p = 0; p <= 4; ++p)
            for (int q = 0; q <= 4 - p; ++q) {
                auto sh = unshuffles({p, q});
                assert(Scalar(static_cast<int>(sh.size())) == rat_binomial(p + q, p));
                for (const Perm& s : sh) {
                    for (int i = 2; i <= p; ++i)
                        assert(s(i - 1) < s(i));
                    for (int i = p + 2; i <= p + q; ++i)
                        assert(s(i - 1) < s(i));
                }
            }
        auto sh3 = unshuffles({2, 2, 2});
        assert(sh3.size() == 90); // 6!/(2!2!2!)
        auto sh312 = unshuffles({3, 1, 2});
        assert(sh312.size() == 60); // 6!/(3!1!2!)
    }

    // half-unshuffles: Hsh(1,1) = {id} only
    {
        auto hsh = half_unshuffles({1, 1});
        assert(hsh.size() == 1);
        assert(hsh[0] == Perm::identity(2));
    }

    // half-unshuffle counts match prod_r C(k1+..+kr-1, kr-1); last image is n
    {
        std::vector<std::vector<int>> cases = {{1, 2}, {2, 1}, {2, 2}, {1, 1, 1}, {3, 2}, {2, 2, 2}, {1, 2, 3}};
        for (auto& blocks : cases) {
            auto hsh = half_unshuffles(blocks);
            Scalar expect = 1;
            int acc = 0;
            for (int k : blocks) {
                acc += k;
                expect *= rat_binomial(acc - 1, k - 1);
            }
            assert(Scalar(static_cast<int>(hsh.size())) == expect);
            int n = acc;
            for (const Perm& s : hsh) {
                assert(s(n) == n); // block-final monotonicity forces sigma(n) = n
                int pos = 0, prev = 0;
                for (size_t r = 0; r < blocks.size(); ++r) {
                    pos += blocks[r];
                    assert(r == 0 || s(pos) > prev);
                    prev = s(pos);
                }
            }
        }
    }

    // ordered compositions: count C(n-1, p-1)
    {
        for (int n = 1; n <= 7; ++n)
            for (int p = 1; p <= n; ++p) {
                auto cs = compositions(n, p);
                assert(Scalar(static_cast<int>(cs.size())) == rat_binomial(n - 1, p - 1));
                for (auto& c : cs) {
                    int sum = 0;
                    for (int k : c) {
                        assert(k >= 1);
                        sum += k;
                    }
                    assert(sum == n);
                }
            }
        assert(all_compositions(4).size() == 8);
    }

    std::printf("test_koszul: all checks passed\n");
    return 0;
}
