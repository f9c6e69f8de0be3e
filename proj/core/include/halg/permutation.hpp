#pragma once

#include "halg/graded.hpp"

#include <utility>
#include <vector>

namespace halg {

/// Permutation of {1..n}, stored as images: img[i-1] = sigma(i).
struct Perm {
    std::vector<int> img;

    int n() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[static_cast<size_t>(i) - 1]; }

    static Perm identity(int n);
    Perm inverse() const;
    /// Composite (this ∘ tau)(i) = this(tau(i)).
    Perm after(const Perm& tau) const;
    int sign() const;

    bool operator==(const Perm&) const = default;
};

/// Koszul sign of sigma on homogeneous degrees d1..dn: the product of
/// (-1)^{d_{sigma(r)} d_{sigma(s)}} over all pairs r < s with sigma(r) > sigma(s).
int koszul_sign(const Perm& sigma, const std::vector<int>& degs);

/// Graded action on tensor words: slot j of the result receives letter sigma(j).
/// Returns the permuted word together with its Koszul sign.
std::pair<Word, int> permute_word(const Perm& sigma, const Word& w);

/// Unshuffles Sh(k1,...,kp) in S_{k1+...+kp}: permutations increasing on each
/// consecutive block of positions. Zero-length blocks are allowed.
std::vector<Perm> unshuffles(const std::vector<int>& blocks);

/// Half-unshuffles Hsh(k1,...,kp): unshuffles whose block-final images increase,
/// sigma(k1) < sigma(k1+k2) < ... < sigma(n). All blocks must be nonempty.
std::vector<Perm> half_unshuffles(const std::vector<int>& blocks);

/// Ordered compositions n = k1 + ... + kp with every ki >= 1.
std::vector<std::vector<int>> compositions(int n, int parts);

/// All ordered compositions of n into any number of parts >= 1.
std::vector<std::vector<int>> all_compositions(int n);

} // namespace halg
