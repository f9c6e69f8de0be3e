#include "halg/multimap.hpp"
#include "test_util.hpp"

#include <cassert>
#include <cstdio>
#include <random>

using namespace halg;
using namespace halg::testutil;

// s^{⊗n} and (s^{-1})^{⊗n} applied to a word: shifted word and sign.  Both
// operators are odd in every slot, so the application sign is the same
// function of the degrees of the word they are applied to.
static std::pair<Word, int> desuspend_word(const Word& w) {
    return {shift_word(w, -1), power_suspension_sign(word_degrees(w))};
}
static std::pair<Word, int> suspend_word(const Word& w) {
    return {shift_word(w, +1), power_suspension_sign(word_degrees(w))};
}

int main() {
    // degree window default and enforcement
    {
        assert(degree_window().lo == -8 && degree_window().hi == 8);
        check_degree(8);
        check_degree(-8);
        bool threw = false;
        try {
            check_degree(9);
        } catch (const degree_window_error&) {
            threw = true;
        }
        assert(threw);
    }

    // vector/word arithmetic: cancellation keeps containers canonical
    {
        Vec v;
        add_term(v, Basis{0, 0}, Scalar(1, 2));
        add_term(v, Basis{0, 0}, Scalar(-1, 2));
        assert(is_zero(v));
        WordSum s;
        add_word(s, Word{Basis{1, 0}}, 3);
        add_word(s, Word{Basis{1, 0}}, -3);
        assert(is_zero(s));
    }

    // MultiMap rejects rows that contradict its degree
    {
        MultiMap f;
        f.arity = 1;
        f.degree = -1;
        bool threw = false;
        try {
            f.add_entry(Word{Basis{1, 0}}, Basis{1, 0}, 1);
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        assert(threw);
        f.add_entry(Word{Basis{1, 0}}, Basis{0, 0}, 1);
        assert(!f.is_zero());
    }

    GradedSpace sp;
    sp.name = "V";
    sp.dims = {{0, 2}, {1, 2}, {2, 1}, {-1, 1}};
    std::mt19937_64 rng(2024);

    // (id ⊗ f)(v ⊗ w) = (-1)^{|f||v|} v ⊗ f(w)
    {
        MultiMap id = identity_map(sp);
        for (int fdeg = -2; fdeg <= 2; ++fdeg) {
            MultiMap f = random_map(rng, sp, sp, 1, fdeg, 3);
            for (const Word& w : basis_words(sp, 2)) {
                WordSum lhs = apply_tensor({&id, &f}, w);
                WordSum rhs;
                for (auto& [b, c] : f.apply(Word{w[1]}))
                    add_word(rhs, Word{w[0], b}, c * parity_sign(static_cast<long long>(fdeg) * w[0].deg));
                assert(lhs == rhs);
            }
        }
    }

    // tensor evaluation sign: (f1 ⊗ f2 ⊗ f3) picks up |f2||x1| + |f3|(|x1|+|x2|)
    {
        MultiMap f1 = random_map(rng, sp, sp, 1, 1, 3);
        MultiMap f2 = random_map(rng, sp, sp, 1, -1, 3);
        MultiMap f3 = random_map(rng, sp, sp, 1, 1, 3);
        for (const Word& w : basis_words(sp, 3)) {
            WordSum lhs = apply_tensor({&f1, &f2, &f3}, w);
            long long e = static_cast<long long>(f2.degree) * w[0].deg +
                          static_cast<long long>(f3.degree) * (w[0].deg + w[1].deg);
            WordSum rhs;
            for (auto& [a, ca] : f1.apply(Word{w[0]}))
                for (auto& [b, cb] : f2.apply(Word{w[1]}))
                    for (auto& [c, cc] : f3.apply(Word{w[2]}))
                        add_word(rhs, Word{a, b, c}, ca * cb * cc * parity_sign(e));
            assert(lhs == rhs);
        }
    }

    // interchange (f1⊗f2)∘(g1⊗g2) = (-1)^{|f2||g1|} (f1 g1 ⊗ f2 g2)
    {
        for (int trial = 0; trial < 10; ++trial) {
            MultiMap f1 = random_map(rng, sp, sp, 1, static_cast<int>(rng() % 3) - 1, 3);
            MultiMap f2 = random_map(rng, sp, sp, 1, static_cast<int>(rng() % 3) - 1, 3);
            MultiMap g1 = random_map(rng, sp, sp, 1, static_cast<int>(rng() % 3) - 1, 3);
            MultiMap g2 = random_map(rng, sp, sp, 1, static_cast<int>(rng() % 3) - 1, 3);
            int sgn = tensor_compose_sign({f1.degree, f2.degree}, {g1.degree, g2.degree});
            assert(sgn == parity_sign(static_cast<long long>(f2.degree) * g1.degree));
            MultiMap f1g1 = compose1(f1, g1), f2g2 = compose1(f2, g2);
            for (const Word& w : basis_words(sp, 2)) {
                WordSum inner = apply_tensor({&g1, &g2}, w);
                WordSum lhs;
                for (auto& [u, c] : inner)
                    add_word_sum(lhs, apply_tensor({&f1, &f2}, u), c);
                WordSum rhs = scaled(apply_tensor({&f1g1, &f2g2}, w), sgn);
                assert(lhs == rhs);
            }
        }
    }

    // transpose: (f g)ᵀ = (-1)^{|f||g|} gᵀ ∘ fᵀ on random arity-1 maps
    {
        for (int trial = 0; trial < 40; ++trial) {
            int fd = static_cast<int>(rng() % 5) - 2;
            int gd = static_cast<int>(rng() % 5) - 2;
            MultiMap f = random_map(rng, sp, sp, 1, fd, 3);
            MultiMap g = random_map(rng, sp, sp, 1, gd, 3);
            MultiMap lhs = transpose(compose1(f, g));
            MultiMap rhs = scaled(compose1(transpose(g), transpose(f)),
                                  parity_sign(static_cast<long long>(fd) * gd));
            lhs.prune();
            rhs.prune();
            assert(lhs == rhs);
        }
    }

    // transpose is degree-faithful: fᵀ(ŷ)(x) = (-1)^{|f||ŷ|} ŷ(f x)
    {
        MultiMap f = random_map(rng, sp, sp, 1, 1, 3);
        MultiMap ft = transpose(f);
        for (auto& [w, row] : f.table) {
            for (auto& [y, c] : row) {
                Vec img = ft.apply(Word{Basis{-y.deg, y.idx}});
                Scalar got = 0;
                auto it = img.find(Basis{-w[0].deg, w[0].idx});
                if (it != img.end())
                    got = it->second;
                assert(got == c * parity_sign(static_cast<long long>(f.degree) * (-y.deg)));
            }
        }
    }

    // s^{⊗n} ∘ (s^{-1})^{⊗n} = (s^{-1})^{⊗n} ∘ s^{⊗n} = (-1)^{n(n-1)/2} id
    {
        for (int n = 1; n <= 5; ++n) {
            int expect = parity_sign(static_cast<long long>(n) * (n - 1) / 2);
            for (int trial = 0; trial < 30; ++trial) {
                Word w;
                for (int i = 0; i < n; ++i)
                    w.push_back(Basis{static_cast<int>(rng() % 7) - 3, 0});
                auto [up, s1] = suspend_word(w);
                auto [down, s2] = desuspend_word(up);
                assert(down == w);
                assert(s1 * s2 == expect);
                auto [dn, t1] = desuspend_word(w);
                auto [back, t2] = suspend_word(dn);
                assert(back == w);
                assert(t1 * t2 == expect);
            }
        }
    }

    // explicit low-arity suspension signs: s^{⊗2}(v1 ⊗ v2) = (-1)^{|v1|}(sv1 ⊗ sv2)
    {
        assert(power_suspension_sign({1, 5}) == -1);
        assert(power_suspension_sign({2, 5}) == 1);
        assert(power_suspension_sign({1, 1, 0}) == -1); // 2*1 + 1*1
        assert(power_suspension_sign({7}) == 1);
    }

    // conjugation round trip: because (s^{-1})^{⊗n}∘s^{⊗n} = (-1)^{n(n-1)/2} id,
    // s^{-1}∘(s∘f∘(s^{-1})^{⊗n})∘s^{⊗n} = (-1)^{n(n-1)/2} f
    {
        for (int arity = 1; arity <= 3; ++arity)
            for (int trial = 0; trial < 6; ++trial) {
                MultiMap f = random_map(rng, sp, sp, arity, arity - 2, 2);
                MultiMap back = conjugate_down(conjugate_up(f));
                back.prune();
                MultiMap orig = scaled(f, parity_sign(static_cast<long long>(arity) * (arity - 1) / 2));
                orig.prune();
                assert(back == orig);
            }
    }

    // suspended bracket dictionary: with D_k = (-1)^{k(k-1)/2} s∘l_k∘(s^{-1})^{⊗k},
    // the bare conjugate s^{-1}∘D_k∘s^{⊗k} recovers l_k exactly (the round-trip
    // sign (-1)^{k(k-1)/2} cancels the dictionary factor), and D_k has degree -1
    {
        for (int k = 1; k <= 3; ++k) {
            MultiMap l = random_map(rng, sp, sp, k, k - 2, 2);
            MultiMap D = scaled(conjugate_up(l), parity_sign(static_cast<long long>(k) * (k - 1) / 2));
            assert(D.degree == -1);
            MultiMap back = conjugate_down(D);
            back.prune();
            MultiMap orig = l;
            orig.prune();
            assert(back == orig);
        }
    }

    // arity-2 suspended bracket evaluation: D_2(sv1, sv2) = (-1)^{|v1|} s l_2(v1, v2)
    {
        MultiMap l2 = random_map(rng, sp, sp, 2, 0, 2);
        MultiMap D2 = scaled(conjugate_up(l2), -1);
        for (const Word& w : basis_words(sp, 2)) {
            Vec lhs = D2.apply(shift_word(w, +1));
            Vec rhs = scaled(shift_vec(l2.apply(w), +1), parity_sign(w[0].deg));
            assert(lhs == rhs);
        }
    }

    // permutation conjugation: (s^{-1})^{⊗n} σ s^{⊗n} = (-1)^{n(n-1)/2} sign(σ) σ
    {
        for (int n = 2; n <= 5; ++n)
            for (int trial = 0; trial < 40; ++trial) {
                Perm s = Perm::identity(n);
                std::shuffle(s.img.begin(), s.img.end(), rng);
                Word w;
                for (int i = 0; i < n; ++i)
                    w.push_back(Basis{static_cast<int>(rng() % 7) - 3, i});
                auto [up, s1] = suspend_word(w);
                auto [pw, s2] = permute_word(s, up);
                auto [down, s3] = desuspend_word(pw);
                auto [direct, s4] = permute_word(s, w);
                assert(down == direct);
                int expect = parity_sign(static_cast<long long>(n) * (n - 1) / 2) * s.sign() * s4;
                assert(s1 * s2 * s3 == expect);
            }
    }

    // block suspension: (s^{-1})^{⊗p} (D_k ⊗ id^{⊗(p-1)}) s^{⊗(p+k-1)}
    //                  = (-1)^{p(p-1)/2 + k(p-1)} (l_k ⊗ id^{⊗(p-1)})
    {
        GradedSpace ssp = shift_space(sp, +1, "sV");
        MultiMap idv = identity_map(sp), ids = identity_map(ssp);
        for (int k = 1; k <= 3; ++k)
            for (int p = 1; p <= 3; ++p) {
                if (k + p - 1 > 4)
                    continue;
                MultiMap l = random_map(rng, sp, sp, k, k - 2, 2);
                MultiMap D = scaled(conjugate_up(l), parity_sign(static_cast<long long>(k) * (k - 1) / 2));
                int n = p + k - 1;
                int expect = parity_sign(static_cast<long long>(p) * (p - 1) / 2 +
                                         static_cast<long long>(k) * (p - 1));
                std::vector<const MultiMap*> lhs_fs{&D};
                std::vector<const MultiMap*> rhs_fs{&l};
                for (int i = 1; i < p; ++i) {
                    lhs_fs.push_back(&ids);
                    rhs_fs.push_back(&idv);
                }
                for (const Word& w : basis_words(sp, n)) {
                    auto [up, s1] = suspend_word(w);
                    WordSum mid = apply_tensor(lhs_fs, up);
                    WordSum lhs;
                    for (auto& [u, c] : mid) {
                        auto [down, s2] = desuspend_word(u);
                        add_word(lhs, down, c * s1 * s2);
                    }
                    WordSum rhs = scaled(apply_tensor(rhs_fs, w), expect);
                    assert(lhs == rhs);
                }
            }
    }

    // interior block: (s^{-1})^{⊗p} (id^{⊗(i-1)} ⊗ D_k ⊗ id^{⊗(p-i)}) s^{⊗n}
    //               = (-1)^{(i-1) + p(p-1)/2 + (p-i)k} id^{⊗(i-1)} ⊗ l_k ⊗ id^{⊗(p-i)}
    {
        GradedSpace ssp = shift_space(sp, +1, "sV");
        MultiMap idv = identity_map(sp), ids = identity_map(ssp);
        for (int k = 1; k <= 2; ++k)
            for (int p = 1; p <= 3; ++p)
                for (int i = 1; i <= p; ++i) {
                    int n = p + k - 1;
                    if (n > 4)
                        continue;
                    MultiMap l = random_map(rng, sp, sp, k, k - 2, 2);
                    MultiMap D = scaled(conjugate_up(l), parity_sign(static_cast<long long>(k) * (k - 1) / 2));
                    int expect = parity_sign((i - 1) + static_cast<long long>(p) * (p - 1) / 2 +
                                             static_cast<long long>(p - i) * k);
                    std::vector<const MultiMap*> lhs_fs, rhs_fs;
                    for (int j = 1; j < i; ++j) {
                        lhs_fs.push_back(&ids);
                        rhs_fs.push_back(&idv);
                    }
                    lhs_fs.push_back(&D);
                    rhs_fs.push_back(&l);
                    for (int j = i; j < p; ++j) {
                        lhs_fs.push_back(&ids);
                        rhs_fs.push_back(&idv);
                    }
                    for (const Word& w : basis_words(sp, n)) {
                        auto [up, s1] = suspend_word(w);
                        WordSum mid = apply_tensor(lhs_fs, up);
                        WordSum lhs;
                        for (auto& [u, c] : mid) {
                            auto [down, s2] = desuspend_word(u);
                            add_word(lhs, down, c * s1 * s2);
                        }
                        WordSum rhs = scaled(apply_tensor(rhs_fs, w), expect);
                        assert(lhs == rhs);
                    }
                }
    }

    // morphism blocks: (s^{-1})^{⊗p} (F_{k1} ⊗ ... ⊗ F_{kp}) s^{⊗n}
    //                = (-1)^{Σ_{r<p} (p-r) k_r} φ_{k1} ⊗ ... ⊗ φ_{kp},
    // with F_k = (-1)^{k(k-1)/2} s∘φ_k∘(s^{-1})^{⊗k} of degree 0
    {
        std::vector<std::vector<int>> shapes = {{1, 1}, {1, 2}, {2, 1}, {1, 1, 1}, {2, 2}, {1, 3}};
        for (auto& ks : shapes) {
            int n = 0;
            for (int k : ks)
                n += k;
            if (n > 4)
                continue;
            std::vector<MultiMap> phis, Fs;
            for (int k : ks) {
                phis.push_back(random_map(rng, sp, sp, k, k - 1, 2));
                Fs.push_back(scaled(conjugate_up(phis.back()),
                                    parity_sign(static_cast<long long>(k) * (k - 1) / 2)));
                assert(Fs.back().degree == 0);
            }
            long long e = 0;
            int p = static_cast<int>(ks.size());
            for (int r = 1; r < p; ++r)
                e += static_cast<long long>(p - r) * ks[static_cast<size_t>(r) - 1];
            int expect = parity_sign(e);
            std::vector<const MultiMap*> lhs_fs, rhs_fs;
            for (size_t i = 0; i < ks.size(); ++i) {
                lhs_fs.push_back(&Fs[i]);
                rhs_fs.push_back(&phis[i]);
            }
            for (const Word& w : basis_words(sp, n)) {
                auto [up, s1] = suspend_word(w);
                WordSum mid = apply_tensor(lhs_fs, up);
                WordSum lhs;
                for (auto& [u, c] : mid) {
                    auto [down, s2] = desuspend_word(u);
                    add_word(lhs, down, c * s1 * s2);
                }
                WordSum rhs = scaled(apply_tensor(rhs_fs, w), expect);
                assert(lhs == rhs);
            }
        }
    }

    std::printf("test_graded: all checks passed\n");
    return 0;
}
