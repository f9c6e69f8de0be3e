#pragma once

#include "halg/rational.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace halg {

/// Degrees are clamped to a finite window; leaving it is a hard error.
struct DegreeWindow {
    int lo = -8;
    int hi = 8;
};

/// Active window. The environment variable HALG_DEGREE_WINDOW ("lo..hi",
/// e.g. "-8..8") overrides the default; it is read once per process.
const DegreeWindow& degree_window();

struct degree_window_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Throws degree_window_error when deg falls outside the active window.
void check_degree(int deg);

/// Hard caps: tensor word length and polynomial degree.
inline constexpr int word_length_cap = 6;
inline constexpr int poly_degree_cap = 12;

/// Finite-dimensional graded vector space, homological grading.
struct GradedSpace {
    std::string name;
    std::map<int, int> dims; // degree -> dimension, only nonzero entries

    int dim(int deg) const {
        auto it = dims.find(deg);
        return it == dims.end() ? 0 : it->second;
    }
    int min_degree() const { return dims.empty() ? 0 : dims.begin()->first; }
    int max_degree() const { return dims.empty() ? 0 : dims.rbegin()->first; }
    int total_dim() const {
        int n = 0;
        for (auto& [d, k] : dims)
            n += k;
        return n;
    }
    bool operator==(const GradedSpace&) const = default;
};

/// Same space with all degrees shifted by k (suspension for k = +1);
/// basis indices are preserved.
GradedSpace shift_space(const GradedSpace& sp, int k, std::string new_name);

/// Basis element (degree, index); the ambient space is tracked by context.
struct Basis {
    int deg = 0;
    int idx = 0;
    auto operator<=>(const Basis&) const = default;
};

using Vec = std::map<Basis, Scalar>;    // finite linear combination of basis elements
using Word = std::vector<Basis>;        // tensor word, letters left to right
using WordSum = std::map<Word, Scalar>; // element of the tensor module
using WordPair = std::pair<Word, Word>;
using WordPairSum = std::map<WordPair, Scalar>; // element of a two-fold tensor product

void add_term(Vec& v, const Basis& b, const Scalar& c);
void add_vec(Vec& v, const Vec& w, const Scalar& c = 1);
Vec scaled(const Vec& v, const Scalar& c);
bool is_zero(const Vec& v);

/// Degree of a homogeneous vector; throws on mixed degrees or zero input.
int vec_degree(const Vec& v);

int word_degree(const Word& w);
std::vector<int> word_degrees(const Word& w);
Word shift_word(const Word& w, int k);
Vec shift_vec(const Vec& v, int k);

void add_word(WordSum& s, const Word& w, const Scalar& c);
void add_word_sum(WordSum& s, const WordSum& t, const Scalar& c = 1);
WordSum scaled(const WordSum& s, const Scalar& c);
bool is_zero(const WordSum& s);

void add_word_pair(WordPairSum& s, const Word& a, const Word& b, const Scalar& c);
void add_word_pair_sum(WordPairSum& s, const WordPairSum& t, const Scalar& c = 1);
bool is_zero(const WordPairSum& s);

/// All basis letters of sp, ordered by (degree, index).
std::vector<Basis> basis_list(const GradedSpace& sp);

/// All basis words of the given length (enforces the word length cap).
std::vector<Word> basis_words(const GradedSpace& sp, int length);

std::string to_string(const Basis& b);
std::string to_string(const Word& w);
std::string to_string(const Vec& v);
std::string to_string(const WordSum& s);

} // namespace halg
