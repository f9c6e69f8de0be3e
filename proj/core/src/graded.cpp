#include "halg/graded.hpp"

#include <cstdlib>
#include <string>

namespace halg {

static DegreeWindow parse_window() {
    DegreeWindow w;
    const char* env = std::getenv("HALG_DEGREE_WINDOW");
    if (!env)
        return w;
    std::string s(env);
    size_t dots = s.find("..");
    bool ok = dots != std::string::npos;
    if (ok) {
        try {
            size_t p1 = 0, p2 = 0;
            int lo = std::stoi(s.substr(0, dots), &p1);
            int hi = std::stoi(s.substr(dots + 2), &p2);
            ok = p1 == dots && p2 == s.size() - dots - 2 && lo <= hi;
            if (ok) {
                w.lo = lo;
                w.hi = hi;
            }
        } catch (...) {
            ok = false;
        }
    }
    if (!ok)
        throw degree_window_error("malformed HALG_DEGREE_WINDOW '" + s + "', expected 'lo..hi'");
    return w;
}

const DegreeWindow& degree_window() {
    static const DegreeWindow w = parse_window();
    return w;
}

void check_degree(int deg) {
    const DegreeWindow& w = degree_window();
    if (deg < w.lo || deg > w.hi)
        throw degree_window_error("degree " + std::to_string(deg) + " outside window " +
                                  std::to_string(w.lo) + ".." + std::to_string(w.hi));
}

GradedSpace shift_space(const GradedSpace& sp, int k, std::string new_name) {
    GradedSpace out;
    out.name = std::move(new_name);
    for (auto& [d, n] : sp.dims) {
        check_degree(d + k);
        out.dims[d + k] = n;
    }
    return out;
}

void add_term(Vec& v, const Basis& b, const Scalar& c) {
    if (c == 0)
        return;
    auto [it, fresh] = v.try_emplace(b, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            v.erase(it);
    }
}

void add_vec(Vec& v, const Vec& w, const Scalar& c) {
    for (auto& [b, x] : w)
        add_term(v, b, x * c);
}

Vec scaled(const Vec& v, const Scalar& c) {
    Vec out;
    if (c == 0)
        return out;
    for (auto& [b, x] : v)
        out.emplace(b, x * c);
    return out;
}

bool is_zero(const Vec& v) { return v.empty(); }

int vec_degree(const Vec& v) {
    if (v.empty())
        throw std::invalid_argument("degree of the zero vector");
    int d = v.begin()->first.deg;
    for (auto& [b, x] : v)
        if (b.deg != d)
            throw std::invalid_argument("degree of a non-homogeneous vector");
    return d;
}

int word_degree(const Word& w) {
    int d = 0;
    for (const Basis& b : w)
        d += b.deg;
    return d;
}

std::vector<int> word_degrees(const Word& w) {
    std::vector<int> d;
    d.reserve(w.size());
    for (const Basis& b : w)
        d.push_back(b.deg);
    return d;
}

Word shift_word(const Word& w, int k) {
    Word out = w;
    for (Basis& b : out) {
        check_degree(b.deg + k);
        b.deg += k;
    }
    return out;
}

Vec shift_vec(const Vec& v, int k) {
    Vec out;
    for (auto& [b, x] : v) {
        check_degree(b.deg + k);
        out.emplace(Basis{b.deg + k, b.idx}, x);
    }
    return out;
}

void add_word(WordSum& s, const Word& w, const Scalar& c) {
    if (c == 0)
        return;
    auto [it, fresh] = s.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            s.erase(it);
    }
}

void add_word_sum(WordSum& s, const WordSum& t, const Scalar& c) {
    for (auto& [w, x] : t)
        add_word(s, w, x * c);
}

WordSum scaled(const WordSum& s, const Scalar& c) {
    WordSum out;
    if (c == 0)
        return out;
    for (auto& [w, x] : s)
        out.emplace(w, x * c);
    return out;
}

bool is_zero(const WordSum& s) { return s.empty(); }

void add_word_pair(WordPairSum& s, const Word& a, const Word& b, const Scalar& c) {
    if (c == 0)
        return;
    WordPair key{a, b};
    auto [it, fresh] = s.try_emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            s.erase(it);
    }
}

void add_word_pair_sum(WordPairSum& s, const WordPairSum& t, const Scalar& c) {
    for (auto& [p, x] : t) {
        WordPair key = p;
        auto [it, fresh] = s.try_emplace(key, x * c);
        if (!fresh) {
            it->second += x * c;
            if (it->second == 0)
                s.erase(it);
        }
    }
}

bool is_zero(const WordPairSum& s) { return s.empty(); }

std::vector<Basis> basis_list(const GradedSpace& sp) {
    std::vector<Basis> out;
    for (auto& [d, n] : sp.dims) {
        check_degree(d);
        for (int i = 0; i < n; ++i)
            out.push_back(Basis{d, i});
    }
    return out;
}

std::vector<Word> basis_words(const GradedSpace& sp, int length) {
    if (length < 0 || length > word_length_cap)
        throw std::invalid_argument("word length " + std::to_string(length) + " beyond cap " +
                                    std::to_string(word_length_cap));
    std::vector<Basis> letters = basis_list(sp);
    std::vector<Word> out{Word{}};
    for (int i = 0; i < length; ++i) {
        std::vector<Word> next;
        next.reserve(out.size() * letters.size());
        for (const Word& w : out)
            for (const Basis& b : letters) {
                Word v = w;
                v.push_back(b);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

std::string to_string(const Basis& b) {
    return "(" + std::to_string(b.deg) + "," + std::to_string(b.idx) + ")";
}

std::string to_string(const Word& w) {
    std::string s = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += " ";
        s += to_string(w[i]);
    }
    return s + "]";
}

std::string to_string(const Vec& v) {
    if (v.empty())
        return "0";
    std::string s;
    for (auto& [b, x] : v) {
        if (!s.empty())
            s += " + ";
        s += rat_to_string(x) + "*" + to_string(b);
    }
    return s;
}

std::string to_string(const WordSum& ws) {
    if (ws.empty())
        return "0";
    std::string s;
    for (auto& [w, x] : ws) {
        if (!s.empty())
            s += " + ";
        s += rat_to_string(x) + "*" + to_string(w);
    }
    return s;
}

} // namespace halg
