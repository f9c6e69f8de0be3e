#include "halg/multimap.hpp"

#include <stdexcept>

namespace halg {

Vec MultiMap::apply(const Word& args) const {
    if (static_cast<int>(args.size()) != arity)
        throw std::invalid_argument("MultiMap::apply: arity mismatch");
    auto it = table.find(args);
    return it == table.end() ? Vec{} : it->second;
}

Vec MultiMap::apply_vecs(const std::vector<Vec>& args) const {
    if (static_cast<int>(args.size()) != arity)
        throw std::invalid_argument("MultiMap::apply_vecs: arity mismatch");
    Vec out;
    Word w(static_cast<size_t>(arity));
    Scalar coeff;
    auto rec = [&](auto&& self, size_t slot, const Scalar& c) -> void {
        if (slot == args.size()) {
            add_vec(out, apply(w), c);
            return;
        }
        for (auto& [b, x] : args[slot]) {
            w[slot] = b;
            self(self, slot + 1, c * x);
        }
    };
    rec(rec, 0, Scalar(1));
    return out;
}

void MultiMap::add_entry(const Word& args, const Basis& out, const Scalar& c) {
    if (static_cast<int>(args.size()) != arity)
        throw std::invalid_argument("MultiMap::add_entry: arity mismatch");
    if (out.deg != word_degree(args) + degree)
        throw std::invalid_argument("MultiMap::add_entry: output degree violates map degree");
    check_degree(out.deg);
    if (c == 0)
        return;
    Vec& row = table[args];
    add_term(row, out, c);
    if (row.empty())
        table.erase(args);
}

void MultiMap::add_entries(const Word& args, const Vec& out, const Scalar& c) {
    for (auto& [b, x] : out)
        add_entry(args, b, x * c);
}

bool MultiMap::is_zero() const {
    for (auto& [w, v] : table)
        if (!v.empty())
            return false;
    return true;
}

void MultiMap::prune() {
    for (auto it = table.begin(); it != table.end();)
        it = it->second.empty() ? table.erase(it) : std::next(it);
}

MultiMap& MultiMap::operator+=(const MultiMap& other) {
    if (arity != other.arity || degree != other.degree)
        throw std::invalid_argument("MultiMap::operator+=: arity/degree mismatch");
    for (auto& [w, v] : other.table) {
        Vec& row = table[w];
        add_vec(row, v, 1);
        if (row.empty())
            table.erase(w);
    }
    return *this;
}

MultiMap scaled(const MultiMap& f, const Scalar& c) {
    MultiMap out;
    out.arity = f.arity;
    out.degree = f.degree;
    if (c == 0)
        return out;
    for (auto& [w, v] : f.table)
        out.table.emplace(w, scaled(v, c));
    return out;
}

MultiMap identity_map(const GradedSpace& sp) {
    MultiMap id;
    id.arity = 1;
    id.degree = 0;
    for (const Basis& b : basis_list(sp))
        id.add_entry(Word{b}, b, 1);
    return id;
}

WordSum apply_tensor(const std::vector<const MultiMap*>& fs, const Word& w) {
    size_t pos = 0;
    long long sign_exp = 0, prefix_deg = 0;
    std::vector<Vec> outs;
    outs.reserve(fs.size());
    for (size_t s = 0; s < fs.size(); ++s) {
        const MultiMap& f = *fs[s];
        if (pos + static_cast<size_t>(f.arity) > w.size())
            throw std::invalid_argument("apply_tensor: word shorter than total arity");
        Word block(w.begin() + static_cast<long>(pos), w.begin() + static_cast<long>(pos + static_cast<size_t>(f.arity)));
        pos += static_cast<size_t>(f.arity);
        if (s > 0)
            sign_exp += static_cast<long long>(f.degree) * prefix_deg;
        prefix_deg += word_degree(block);
        outs.push_back(f.apply(block));
    }
    if (pos != w.size())
        throw std::invalid_argument("apply_tensor: word longer than total arity");
    WordSum result;
    Word letters(fs.size());
    auto rec = [&](auto&& self, size_t slot, const Scalar& c) -> void {
        if (slot == outs.size()) {
            add_word(result, letters, c);
            return;
        }
        for (auto& [b, x] : outs[slot]) {
            letters[slot] = b;
            self(self, slot + 1, c * x);
        }
    };
    rec(rec, 0, Scalar(parity_sign(sign_exp)));
    return result;
}

MultiMap compose_tensor(const MultiMap& g, const std::vector<const MultiMap*>& fs) {
    if (g.arity != static_cast<int>(fs.size()))
        throw std::invalid_argument("compose_tensor: arity of g must match the number of factors");
    MultiMap out;
    out.arity = 0;
    out.degree = g.degree;
    for (const MultiMap* f : fs) {
        out.arity += f->arity;
        out.degree += f->degree;
    }
    // candidate input words: concatenations of the factors' table keys
    Word w;
    auto rec = [&](auto&& self, size_t slot) -> void {
        if (slot == fs.size()) {
            WordSum mid = apply_tensor(fs, w);
            Vec val;
            for (auto& [letters, c] : mid)
                add_vec(val, g.apply(letters), c);
            if (!val.empty())
                out.add_entries(w, val);
            return;
        }
        size_t base = w.size();
        for (auto& [args, row] : fs[slot]->table) {
            w.insert(w.end(), args.begin(), args.end());
            self(self, slot + 1);
            w.resize(base);
        }
    };
    rec(rec, 0);
    return out;
}

MultiMap compose1(const MultiMap& g, const MultiMap& f) {
    if (g.arity != 1)
        throw std::invalid_argument("compose1: g must have arity 1");
    MultiMap out;
    out.arity = f.arity;
    out.degree = f.degree + g.degree;
    for (auto& [w, v] : f.table) {
        Vec val;
        for (auto& [b, c] : v)
            add_vec(val, g.apply(Word{b}), c);
        if (!val.empty())
            out.add_entries(w, val);
    }
    return out;
}

int tensor_compose_sign(const std::vector<int>& fdegs, const std::vector<int>& gdegs) {
    if (fdegs.size() != gdegs.size())
        throw std::invalid_argument("tensor_compose_sign: length mismatch");
    long long e = 0;
    for (size_t r = 0; r < gdegs.size(); ++r)
        for (size_t s = r + 1; s < fdegs.size(); ++s)
            e += static_cast<long long>(fdegs[s]) * gdegs[r];
    return parity_sign(e);
}

MultiMap transpose(const MultiMap& f) {
    if (f.arity != 1)
        throw std::invalid_argument("transpose: defined for arity-1 maps");
    MultiMap out;
    out.arity = 1;
    out.degree = f.degree;
    for (auto& [w, v] : f.table) {
        const Basis& x = w[0];
        for (auto& [y, c] : v) {
            // fᵀ(ŷ) = (-1)^{|f||ŷ|} ŷ∘f, with |ŷ| = -y.deg in the dual space
            int sgn = parity_sign(static_cast<long long>(f.degree) * y.deg);
            out.add_entry(Word{Basis{-y.deg, y.idx}}, Basis{-x.deg, x.idx}, c * sgn);
        }
    }
    return out;
}

int power_suspension_sign(const std::vector<int>& degs) {
    long long e = 0;
    int p = static_cast<int>(degs.size());
    for (int r = 1; r < p; ++r)
        e += static_cast<long long>(p - r) * degs[static_cast<size_t>(r) - 1];
    return parity_sign(e);
}

MultiMap conjugate_up(const MultiMap& f) {
    MultiMap out;
    out.arity = f.arity;
    out.degree = f.degree + 1 - f.arity;
    for (auto& [w, v] : f.table) {
        Word sw = shift_word(w, +1);
        int sgn = power_suspension_sign(word_degrees(sw));
        out.add_entries(sw, shift_vec(v, +1), sgn);
    }
    return out;
}

MultiMap conjugate_down(const MultiMap& f) {
    MultiMap out;
    out.arity = f.arity;
    out.degree = f.degree - 1 + f.arity;
    for (auto& [w, v] : f.table) {
        Word dw = shift_word(w, -1);
        int sgn = power_suspension_sign(word_degrees(dw));
        out.add_entries(dw, shift_vec(v, -1), sgn);
    }
    return out;
}

} // namespace halg
