#include "rht/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace rht {

int Alphabet::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (gens[i].name == name) return i;
    throw std::invalid_argument("unknown generator: " + name);
}

int Alphabet::add(const std::string& name, int degree) {
    for (const auto& g : gens)
        if (g.name == name) throw std::invalid_argument("duplicate generator: " + name);
    if (size() >= 120) throw std::invalid_argument("too many generators");
    gens.push_back({name, degree});
    return size() - 1;
}

int Alphabet::degree(const Word& w) const {
    int d = 0;
    for (char c : w) d += gens.at(static_cast<unsigned char>(c)).degree;
    return d;
}

std::string Alphabet::render(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += " ";
        out += gens.at(static_cast<unsigned char>(w[i])).name;
    }
    return out;
}

Word letter(int g) { return Word(1, static_cast<char>(g)); }

Tensor gen(int g, const Scalar& c) { return unit_word(letter(g), c); }

Tensor unit_word(const Word& w, const Scalar& c) {
    Tensor t;
    if (c != 0) t.emplace(w, c);
    return t;
}

std::optional<int> homogeneous_degree(const Alphabet& A, const Tensor& t) {
    std::optional<int> d;
    for (const auto& [w, c] : t) {
        int e = A.degree(w);
        if (d && *d != e) throw std::invalid_argument("inhomogeneous element");
        d = e;
    }
    return d;
}

Tensor mul(const Alphabet& A, const Tensor& a, const Tensor& b) {
    Tensor out;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) {
            if (static_cast<int>(u.size() + v.size()) > A.max_len) continue;
            add_term(out, u + v, cu * cv);
        }
    return out;
}

Tensor truncate(const Tensor& t, int max_len) {
    Tensor out;
    for (const auto& [w, c] : t)
        if (static_cast<int>(w.size()) <= max_len) out.emplace(w, c);
    return out;
}

Tensor bracket(const Alphabet& A, const Tensor& a, const Tensor& b) {
    auto da = homogeneous_degree(A, a);
    auto db = homogeneous_degree(A, b);
    if (!da || !db) return {};
    Tensor out = mul(A, a, b);
    axpy(out, Scalar(-parity_sign(static_cast<long>(*da) * *db)), mul(A, b, a));
    return out;
}

Tensor ad_power(const Alphabet& A, const Tensor& x, int i, const Tensor& y) {
    Tensor t = y;
    for (int k = 0; k < i && !t.empty(); ++k) t = bracket(A, x, t);
    return t;
}

Tensor ad_series(const Alphabet& A, const Tensor& x, const std::vector<Scalar>& coeffs, const Tensor& y) {
    auto dx = homogeneous_degree(A, x);
    if (dx && *dx != 0) throw std::invalid_argument("ad_series needs a degree 0 element");
    Tensor out;
    Tensor term = y;
    for (size_t i = 0; i < coeffs.size() && !term.empty(); ++i) {
        axpy(out, coeffs[i], term);
        if (i + 1 < coeffs.size()) term = bracket(A, x, term);
    }
    return out;
}

std::string render(const Alphabet& A, const Tensor& t) {
    if (t.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : t) {
        if (!first) out += " + ";
        first = false;
        out += "(" + to_string(c) + ")" + A.render(w);
    }
    return out;
}

Tensor lie_to_tensor(const Alphabet& A, const LieExpr& e) {
    if (e.kids.empty()) {
        if (e.gen < 0 || e.gen >= A.size()) throw std::invalid_argument("bad generator in Lie expression");
        return gen(e.gen);
    }
    if (e.kids.size() != 2) throw std::invalid_argument("Lie expression nodes are binary");
    return bracket(A, lie_to_tensor(A, e.kids[0]), lie_to_tensor(A, e.kids[1]));
}

Tensor right_normed(const Alphabet& A, const std::vector<int>& seq) {
    if (seq.empty()) return {};
    Tensor t = gen(seq.back());
    for (int i = static_cast<int>(seq.size()) - 2; i >= 0 && !t.empty(); --i) t = bracket(A, gen(seq[i]), t);
    return t;
}

SparseVec LieBasis::coordinates(const Tensor& t) const {
    SparseVec out;
    Tensor rest = t;
    for (int i = 0; i < size(); ++i) {
        auto it = t.find(pivots[i]);
        if (it == t.end()) continue;
        out[i] = it->second;
        axpy(rest, -it->second, elems[i]);
    }
    if (!rest.empty()) throw std::logic_error("element is not in the Lie span");
    return out;
}

static void seq_rec(const Alphabet& A, int degree, int length, std::vector<int>& cur, int mind, int maxd,
                    std::vector<std::vector<int>>& out) {
    int left = length - static_cast<int>(cur.size());
    if (left == 0) {
        if (degree == 0) out.push_back(cur);
        return;
    }
    if (degree < mind * left || degree > maxd * left) return;
    for (int g = 0; g < A.size(); ++g) {
        cur.push_back(g);
        seq_rec(A, degree - A.gens[g].degree, length, cur, mind, maxd, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> degree_sequences(const Alphabet& A, int degree, int length) {
    std::vector<std::vector<int>> out;
    if (A.size() == 0 || length <= 0) return out;
    int mind = A.gens[0].degree, maxd = A.gens[0].degree;
    for (const auto& g : A.gens) {
        mind = std::min(mind, g.degree);
        maxd = std::max(maxd, g.degree);
    }
    std::vector<int> cur;
    seq_rec(A, degree, length, cur, mind, maxd, out);
    return out;
}

bool words_exist(const Alphabet& A, int degree, int length) {
    if (length == 0) return degree == 0;
    std::vector<int> reach{0};
    for (int l = 0; l < length; ++l) {
        std::vector<int> next;
        for (int d : reach)
            for (const auto& g : A.gens) next.push_back(d + g.degree);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        reach = std::move(next);
    }
    return std::binary_search(reach.begin(), reach.end(), degree);
}

LieBasis lie_subspace_basis(const Alphabet& A, int degree, int length) {
    // right-normed brackets keep the letter content, so reduce per content
    Alphabet B = A;
    B.max_len = std::max(A.max_len, length);
    std::map<std::vector<int>, Echelon<Word>> blocks;
    for (const auto& seq : degree_sequences(B, degree, length)) {
        std::vector<int> content = seq;
        std::sort(content.begin(), content.end());
        Tensor t = right_normed(B, seq);
        if (!t.empty()) blocks[content].insert(t);
    }
    std::vector<std::pair<Word, Tensor>> rows;
    for (auto& [content, e] : blocks)
        for (const auto& [p, row] : e.rows()) rows.emplace_back(p, row);
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    LieBasis out;
    for (auto& [p, row] : rows) {
        out.pivots.push_back(p);
        out.elems.push_back(std::move(row));
    }
    return out;
}

}  // namespace rht
