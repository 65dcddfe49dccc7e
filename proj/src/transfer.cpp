#include "rht/transfer.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "rht/ls.hpp"

namespace rht {

const Tensor& AInfinityCoalgebra::get(int k, int i) const {
    static const Tensor zero;
    auto it = delta.find(k);
    if (it == delta.end() || i >= static_cast<int>(it->second.size())) return zero;
    return it->second[i];
}

void AInfinityCoalgebra::set(int k, int i, const Tensor& t) {
    auto& v = delta[k];
    if (static_cast<int>(v.size()) < dim()) v.resize(dim());
    v.at(i) = t;
}

Alphabet AInfinityCoalgebra::alphabet(int max_len) const {
    Alphabet A;
    A.max_len = max_len;
    for (const auto& g : basis) A.add(g.name, g.degree);
    return A;
}

std::vector<RelationViolation> check_ainfty_relations(const AInfinityCoalgebra& C, int max_i) {
    Alphabet A = C.alphabet(max_i);
    std::vector<RelationViolation> out;
    for (int i = 1; i <= max_i; ++i)
        for (int c = 0; c < C.dim(); ++c) {
            Tensor res;
            for (int k = 1; k <= i; ++k) {
                const Tensor& outer = C.get(i - k + 1, c);
                for (int n = 0; n <= i - k; ++n) {
                    int p = i - k - n;
                    int sign = parity_sign(k + n + k * n);
                    for (const auto& [w, cw] : outer) {
                        int pre = A.degree(w.substr(0, p));
                        const Tensor& inner = C.get(k, static_cast<unsigned char>(w[p]));
                        Scalar s = cw * sign * parity_sign(static_cast<long>(k - 2) * pre);
                        for (const auto& [u, cu] : inner) add_term(res, w.substr(0, p) + u + w.substr(p + 1), s * cu);
                    }
                }
            }
            if (!res.empty()) out.push_back({i, C.basis[c].name, std::move(res)});
        }
    return out;
}

DGLPresentation cobar_infty(const AInfinityCoalgebra& C, int W) {
    DGLPresentation D;
    D.alph.max_len = W;
    for (const auto& g : C.basis) D.add_generator("s-" + g.name, g.degree - 1);
    for (int c = 0; c < C.dim(); ++c) {
        Tensor d;
        for (const auto& [k, vals] : C.delta) {
            if (k > W) continue;
            Scalar sk = -parity_sign(static_cast<long>(k) * (k - 1) / 2);
            for (const auto& [w, cw] : C.get(k, c)) {
                long e = 0;
                for (int j = 0; j < k; ++j) e += static_cast<long>(k - 1 - j) * C.basis[static_cast<unsigned char>(w[j])].degree;
                add_term(d, w, sk * cw * parity_sign(e));
            }
        }
        D.set_diff(c, d);
    }
    return D;
}

QuillenResult quillen_construction(const AInfinityCoalgebra& C, int W) {
    QuillenResult q{cobar_infty(C, W), {}};
    for (int g = 0; g < q.dgl.alph.size(); ++g) {
        std::map<size_t, Tensor> parts;
        for (const auto& [w, c] : q.dgl.diff[g]) parts[w.size()].emplace(w, c);
        Tensor lie;
        for (const auto& [k, part] : parts) axpy(lie, Scalar(1, static_cast<long>(k)), dynkin(q.dgl.alph, part));
        if (lie != q.dgl.diff[g]) q.non_lie.push_back(q.dgl.alph.gens[g].name);
        q.dgl.diff[g] = lie;
    }
    return q;
}

std::string UniversalCoalgebra::name(int i) const {
    return (is_beta(i) ? "beta" : "alpha") + std::to_string(index(i));
}

SparseVec UniversalCoalgebra::d(int i) const {
    SparseVec out;
    if (is_beta(i) && index(i) + 1 <= J) out[alpha(index(i) + 1)] = index(i) + 1;
    return out;
}

SparseVec UniversalCoalgebra::diagonal(int i) const {
    SparseVec out;
    int n = index(i);
    for (int a = 0; a <= n; ++a) {
        int b = n - a;
        if (!is_beta(i)) {
            out[alpha(a) * dim() + alpha(b)] += 1;
        } else {
            out[beta(a) * dim() + alpha(b)] += 1;
            out[alpha(a) * dim() + beta(b)] += 1;
        }
    }
    return out;
}

UniversalCoalgebra build_universal_coalgebra(int J) {
    if (J < 1) throw std::invalid_argument("universal coalgebra needs J >= 1");
    return UniversalCoalgebra{J};
}

SparseVec ContractionData::theta(int m) const {
    SparseVec out;
    if (m == M.alpha(0)) {
        out[0] = -1;
    } else if (m == M.alpha(1)) {
        out[0] = 1;
        out[1] = -1;
    } else if (m == M.beta(0)) {
        out[2] = 1;
    }
    return out;
}

SparseVec ContractionData::omega(int n) const {
    SparseVec out;
    switch (n) {
        case 0:
            out[M.alpha(0)] = -1;
            break;
        case 1:
            for (int i = 0; i <= M.J; ++i) out[M.alpha(i)] = -1;
            break;
        case 2:
            for (int i = 0; i <= M.J; ++i) out[M.beta(i)] = Scalar(1, i + 1);
            break;
        default:
            throw std::out_of_range("contraction target index");
    }
    return out;
}

SparseVec ContractionData::K(int m) const {
    SparseVec out;
    if (M.is_beta(m)) return out;
    int j = M.index(m);
    if (j == 1) {
        for (int i = 1; i <= M.J; ++i) out[M.beta(i)] = Scalar(1, i + 1);
    } else if (j >= 2) {
        out[M.beta(j - 1)] = Scalar(-1, j);
    }
    return out;
}

SparseVec ContractionData::dN(int n) const {
    SparseVec out;
    if (n == 2) {
        out[0] = 1;
        out[1] = -1;
    }
    return out;
}

ContractionData build_contraction(int J) { return ContractionData{build_universal_coalgebra(J)}; }

namespace {

template <class F>
SparseVec apply_lin(const SparseVec& v, F f) {
    SparseVec out;
    for (const auto& [i, c] : v) axpy(out, c, f(i));
    return out;
}

SparseVec safe_part(const ContractionData& cd, const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, c] : v)
        if (cd.M.index(i) < cd.M.J) out.emplace(i, c);
    return out;
}

}  // namespace

std::vector<std::string> contraction_identities(const ContractionData& cd) {
    std::vector<std::string> out;
    const auto& M = cd.M;
    auto th = [&](int i) { return cd.theta(i); };
    auto Kf = [&](int i) { return cd.K(i); };
    auto dM = [&](int i) { return M.d(i); };
    auto om = [&](int i) { return cd.omega(i); };
    for (int n = 0; n < 3; ++n) {
        SparseVec v = apply_lin(cd.omega(n), th);
        if (v != SparseVec{{n, 1}}) out.push_back("theta omega != id on " + cd.N[n].name);
        if (!safe_part(cd, apply_lin(cd.omega(n), Kf)).empty()) out.push_back("K omega != 0 on " + cd.N[n].name);
        SparseVec chain = apply_lin(cd.dN(n), om);
        axpy(chain, Scalar(-1), apply_lin(cd.omega(n), dM));
        if (!safe_part(cd, chain).empty()) out.push_back("omega is not a chain map on " + cd.N[n].name);
    }
    for (int m = 0; m < M.dim(); ++m) {
        if (M.index(m) >= M.J) continue;
        SparseVec lhs = apply_lin(M.d(m), Kf);
        axpy(lhs, Scalar(1), apply_lin(cd.K(m), dM));
        SparseVec rhs = apply_lin(cd.theta(m), om);
        add_term(rhs, m, Scalar(-1));
        axpy(lhs, Scalar(-1), rhs);
        if (!safe_part(cd, lhs).empty()) out.push_back("K d + d K != omega theta - id on " + M.name(m));
        if (!apply_lin(cd.K(m), th).empty()) out.push_back("theta K != 0 on " + M.name(m));
        if (!apply_lin(cd.K(m), Kf).empty()) out.push_back("K K != 0 on " + M.name(m));
        SparseVec chain = apply_lin(M.d(m), th);
        axpy(chain, Scalar(-1), apply_lin(cd.theta(m), [&](int n) { return cd.dN(n); }));
        if (!chain.empty()) out.push_back("theta is not a chain map on " + M.name(m));
    }
    return out;
}

int PlanarTree::leaves() const { return static_cast<int>(left.size()) + 1; }

int PlanarTree::left_leaves() const {
    int n = 0;
    for (int l : left)
        if (l < 0) ++n;
    return n;
}

int PlanarTree::subtree_leaves(int v) const {
    if (v < 0) return 1;
    return subtree_leaves(left[v]) + subtree_leaves(right[v]);
}

int PlanarTree::odd_subtree_left_leaves() const {
    int n = 0;
    for (size_t v = 0; v < left.size(); ++v)
        if (left[v] < 0 && subtree_leaves(static_cast<int>(v)) % 2 == 1) ++n;
    return n;
}

bool PlanarTree::contributing() const {
    for (size_t v = 0; v < left.size(); ++v)
        if (left[v] >= 0 && right[v] >= 0) return false;
    return true;
}

std::string PlanarTree::to_string() const {
    std::function<std::string(int)> rec = [&](int v) -> std::string {
        if (v < 0) return "|";
        return "(" + rec(left[v]) + rec(right[v]) + ")";
    };
    return left.empty() ? "|" : rec(0);
}

std::vector<PlanarTree> enumerate_trees(int k) {
    if (k < 1) throw std::invalid_argument("trees need at least one leaf");
    std::vector<std::vector<PlanarTree>> memo(k + 1);
    memo[1] = {PlanarTree{}};
    for (int n = 2; n <= k; ++n)
        for (int kl = 1; kl < n; ++kl)
            for (const auto& L : memo[kl])
                for (const auto& R : memo[n - kl]) {
                    PlanarTree T;
                    int ls = static_cast<int>(L.left.size());
                    T.left.push_back(L.left.empty() ? -1 : 1);
                    T.right.push_back(R.left.empty() ? -1 : 1 + ls);
                    for (size_t v = 0; v < L.left.size(); ++v) {
                        T.left.push_back(L.left[v] < 0 ? -1 : L.left[v] + 1);
                        T.right.push_back(L.right[v] < 0 ? -1 : L.right[v] + 1);
                    }
                    for (size_t v = 0; v < R.left.size(); ++v) {
                        T.left.push_back(R.left[v] < 0 ? -1 : R.left[v] + 1 + ls);
                        T.right.push_back(R.right[v] < 0 ? -1 : R.right[v] + 1 + ls);
                    }
                    memo[n].push_back(std::move(T));
                }
    return memo[k];
}

std::string to_string(TreeSignRule r) {
    switch (r) {
        case TreeSignRule::LeftLeaves:
            return "left-leaves";
        case TreeSignRule::Trivial:
            return "trivial";
        case TreeSignRule::OddSubtree:
            return "odd-subtree";
    }
    return "?";
}

namespace {

// Composite map of a subtree on basis elements of M, memoized by subtree shape.
struct TreeEvaluator {
    const ContractionData& cd;
    std::map<std::pair<std::string, int>, Tensor> memo;

    static std::pair<std::string, std::string> split(const std::string& shape) {
        // shape is "(" L R ")" with L, R either "|" or balanced
        size_t pos = 1;
        int depth = 0;
        do {
            if (shape[pos] == '(') ++depth;
            if (shape[pos] == ')') --depth;
            ++pos;
        } while (depth > 0);
        return {shape.substr(1, pos - 1), shape.substr(pos, shape.size() - pos - 1)};
    }

    Tensor edge(const std::string& child, int u) {
        if (child == "|") {
            Tensor t;
            for (const auto& [n, c] : cd.theta(u)) add_term(t, letter(n), c);
            return t;
        }
        Tensor out;
        for (const auto& [m, c] : cd.K(u)) axpy(out, c, vertex(child, m));
        return out;
    }

    const Tensor& vertex(const std::string& shape, int m) {
        auto key = std::make_pair(shape, m);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        auto [ls, rs] = split(shape);
        long degR = static_cast<long>(std::count(rs.begin(), rs.end(), '('));
        Tensor out;
        int dim = cd.M.dim();
        for (const auto& [uv, cuv] : cd.M.diagonal(m)) {
            int u = uv / dim, w = uv % dim;
            Tensor L = edge(ls, u);
            if (L.empty()) continue;
            Tensor R = edge(rs, w);
            if (R.empty()) continue;
            Scalar s = cuv * parity_sign(degR * cd.M.degree(u));
            for (const auto& [a, ca] : L)
                for (const auto& [b, cb] : R) add_term(out, a + b, s * ca * cb);
        }
        return memo.emplace(key, std::move(out)).first->second;
    }
};

}  // namespace

Tensor tree_term(const ContractionData& cd, const PlanarTree& T, int n) {
    if (T.left.empty()) throw std::invalid_argument("tree without vertices");
    TreeEvaluator ev{cd, {}};
    Tensor out;
    for (const auto& [m, c] : cd.omega(n)) axpy(out, c, ev.vertex(T.to_string(), m));
    return out;
}

int tree_sign(const PlanarTree& T, TreeSignRule rule) {
    switch (rule) {
        case TreeSignRule::LeftLeaves:
            return parity_sign(T.left_leaves());
        case TreeSignRule::OddSubtree:
            return parity_sign(T.odd_subtree_left_leaves());
        case TreeSignRule::Trivial:
            break;
    }
    return 1;
}

std::vector<Tensor> transferred_diagonal(const ContractionData& cd, int k, TreeSignRule rule) {
    std::vector<Tensor> out(3);
    if (k < 1) throw std::invalid_argument("diagonal arity must be positive");
    if (k == 1) {
        for (int n = 0; n < 3; ++n)
            for (const auto& [m, c] : cd.dN(n)) add_term(out[n], letter(m), c);
        return out;
    }
    if (cd.M.J < k + 1) throw std::invalid_argument("transferred diagonal needs J >= k + 1");
    TreeEvaluator ev{cd, {}};
    for (const auto& T : enumerate_trees(k)) {
        Scalar sign(tree_sign(T, rule));
        std::string shape = T.to_string();
        for (int n = 0; n < 3; ++n)
            for (const auto& [m, c] : cd.omega(n)) axpy(out[n], sign * c, ev.vertex(shape, m));
    }
    return out;
}

std::vector<Tensor> closed_form_diagonals(int k) {
    std::vector<Tensor> out(3);
    const Word y = letter(0), z = letter(1), c = letter(2);
    if (k == 1) {
        add_term(out[2], y, Scalar(1));
        add_term(out[2], z, Scalar(-1));
    } else if (k == 2) {
        add_term(out[0], y + y, Scalar(-1));
        add_term(out[1], z + z, Scalar(-1));
        for (const Word& e : {y, z}) {
            add_term(out[2], c + e, Scalar(-1, 2));
            add_term(out[2], e + c, Scalar(-1, 2));
        }
    } else {
        Scalar b = bernoulli(k - 1);
        for (int p = 0; p <= k - 1; ++p) {
            int q = k - 1 - p;
            Scalar coeff = b / (factorial(p) * factorial(q));
            Word cp(p, c[0]), cq(q, c[0]);
            add_term(out[2], cp + y + cq, coeff);
            add_term(out[2], cp + z + cq, -coeff);
        }
    }
    return out;
}

DiagonalReport verify_diagonals(int k, int J, TreeSignRule rule) {
    DiagonalReport r;
    r.k = k;
    r.J = J;
    r.rule = rule;
    auto cd = build_contraction(J);
    r.computed = transferred_diagonal(cd, k, rule);
    r.expected = closed_form_diagonals(k);
    r.matches = r.computed == r.expected;
    r.stable = transferred_diagonal(build_contraction(J + 2), k, rule) == r.computed;
    auto trees = enumerate_trees(k);
    r.trees = static_cast<int>(trees.size());
    for (const auto& T : trees)
        if (T.contributing()) ++r.contributing_trees;
    return r;
}

AInfinityCoalgebra interval_coalgebra(int kmax) {
    AInfinityCoalgebra C;
    C.basis = {{"y", 0}, {"z", 0}, {"c", 1}};
    for (int k = 1; k <= kmax; ++k) {
        auto d = closed_form_diagonals(k);
        for (int n = 0; n < 3; ++n) C.set(k, n, d[n]);
    }
    return C;
}

namespace {

bool tau_zero(const AInfinityCoalgebra& C, const Tensor& t, bool full) {
    std::map<std::pair<Word, Word>, Scalar> acc;
    for (const auto& [w, cw] : t) {
        int n = static_cast<int>(w.size());
        std::vector<int> deg(n);
        for (int j = 0; j < n; ++j) deg[j] = C.basis[static_cast<unsigned char>(w[j])].degree;
        for (int i = 1; i <= (full ? n : n - 1); ++i)
            for (const auto& s : shuffles(i, n)) {
                Word a, b;
                for (int j = 0; j < i; ++j) a += w[s[j]];
                for (int j = i; j < n; ++j) b += w[s[j]];
                auto& slot = acc[{a, b}];
                slot += cw * koszul_sign(s, deg);
            }
    }
    for (const auto& [key, c] : acc)
        if (c != 0) return false;
    return true;
}

bool symmetric(const Alphabet& A, const Tensor& t) {
    for (const auto& [w, c] : t)
        for (size_t p = 0; p + 1 < w.size(); ++p) {
            Word s = w;
            std::swap(s[p], s[p + 1]);
            int sign = parity_sign(static_cast<long>(A.gens[static_cast<unsigned char>(w[p])].degree) *
                                   A.gens[static_cast<unsigned char>(w[p + 1])].degree);
            auto it = t.find(s);
            Scalar other = it == t.end() ? Scalar(0) : it->second;
            if (other != sign * c) return false;
        }
    return true;
}

}  // namespace

std::vector<CocommutativityReport> check_cocommutative(const AInfinityCoalgebra& C) {
    std::vector<CocommutativityReport> out;
    int kmax = C.max_arity();
    DGLPresentation cob = cobar_infty(C, std::max(kmax, 1));
    for (const auto& [k, vals] : C.delta) {
        CocommutativityReport r;
        r.k = k;
        r.tau_full_zero = r.tau_reduced_zero = r.d_lie = r.d_symmetric = true;
        for (int c = 0; c < C.dim(); ++c) {
            const Tensor& t = C.get(k, c);
            if (!tau_zero(C, t, true)) r.tau_full_zero = false;
            if (!tau_zero(C, t, false)) r.tau_reduced_zero = false;
            Tensor dk;
            for (const auto& [w, cw] : cob.diff[c])
                if (static_cast<int>(w.size()) == k) dk.emplace(w, cw);
            if (!is_lie(cob.alph, dk)) r.d_lie = false;
            if (!symmetric(cob.alph, dk)) r.d_symmetric = false;
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace rht
