#include "rht/linfty.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace rht {

int skew_sort(Tuple& args, const std::vector<int>& degrees) {
    int sign = 1;
    for (size_t i = 1; i < args.size(); ++i) {
        for (size_t j = i; j > 0 && args[j - 1] > args[j]; --j) {
            int a = args[j - 1], b = args[j];
            // swapping adjacent x_a, x_b contributes -(-1)^{|a||b|}
            if (!((degrees[a] & 1) && (degrees[b] & 1))) sign = -sign;
            std::swap(args[j - 1], args[j]);
        }
    }
    for (size_t i = 1; i < args.size(); ++i)
        if (args[i] == args[i - 1] && !(degrees[args[i]] & 1)) return 0;
    return sign;
}

SparseVec basis_vector(int i, const Scalar& c) {
    SparseVec v;
    if (c != 0) v.emplace(i, c);
    return v;
}

int vector_degree(const std::vector<int>& degrees, const SparseVec& v) {
    int d = kZeroDegree;
    for (const auto& [i, c] : v) {
        int di = degrees.at(i);
        if (d == kZeroDegree) d = di;
        else if (d != di) throw std::invalid_argument("inhomogeneous vector");
    }
    return d;
}

SparseVec eval_skew(const SkewTable& table, const std::vector<int>& degrees, const std::vector<SparseVec>& args) {
    SparseVec out;
    if (table.entries.empty()) return out;
    for (const auto& a : args)
        if (a.empty()) return out;
    Tuple t(args.size());
    std::function<void(size_t, Scalar)> rec = [&](size_t pos, Scalar coeff) {
        if (pos == args.size()) {
            Tuple s = t;
            int sign = skew_sort(s, degrees);
            if (sign == 0) return;
            auto it = table.entries.find(s);
            if (it == table.entries.end()) return;
            axpy(out, sign * coeff, it->second);
            return;
        }
        for (const auto& [i, c] : args[pos]) {
            t[pos] = i;
            rec(pos + 1, coeff * c);
        }
    };
    rec(0, Scalar(1));
    return out;
}

std::vector<Tuple> sorted_tuples(const std::vector<int>& degrees, int k) {
    std::vector<Tuple> out;
    int n = static_cast<int>(degrees.size());
    Tuple t;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(t.size()) == k) {
            out.push_back(t);
            return;
        }
        for (int i = start; i < n; ++i) {
            if (!t.empty() && t.back() == i && !(degrees[i] & 1)) continue;
            t.push_back(i);
            rec(i);
            t.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<int> LInfinityAlgebra::degrees() const {
    std::vector<int> d;
    d.reserve(basis.size());
    for (const auto& g : basis) d.push_back(g.degree);
    return d;
}

int LInfinityAlgebra::index_of(const std::string& name) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].name == name) return static_cast<int>(i);
    return -1;
}

int LInfinityAlgebra::add_basis(const std::string& name, int degree) {
    if (index_of(name) >= 0) throw std::invalid_argument("duplicate basis element " + name);
    basis.push_back({name, degree});
    return dim() - 1;
}

namespace {

void store(SkewTable& table, const std::vector<int>& degs, const Tuple& args, const SparseVec& value) {
    for (int a : args)
        if (a < 0 || a >= static_cast<int>(degs.size())) throw std::out_of_range("basis index");
    Tuple s = args;
    int sign = skew_sort(s, degs);
    if (sign == 0) {
        if (!value.empty()) throw std::invalid_argument("value on a tuple forced to vanish by skew-symmetry");
        return;
    }
    table.entries.erase(s);
    if (!value.empty()) table.entries.emplace(s, scaled(value, Scalar(sign)));
}

}  // namespace

void LInfinityAlgebra::set_bracket(const Tuple& args, const SparseVec& value) {
    int k = static_cast<int>(args.size());
    if (k < 1) throw std::invalid_argument("bracket arity must be positive");
    auto degs = degrees();
    int expected = k - 2;
    for (int a : args) expected += degs.at(a);
    int d = vector_degree(degs, value);
    if (d != kZeroDegree && d != expected) throw std::invalid_argument("bracket value has wrong degree");
    if (static_cast<int>(brackets.size()) <= k) brackets.resize(k + 1);
    store(brackets[k], degs, args, value);
}

SparseVec LInfinityAlgebra::eval_basis(const Tuple& args) const {
    std::vector<SparseVec> v;
    for (int a : args) v.push_back(basis_vector(a));
    return eval(v);
}

SparseVec LInfinityAlgebra::eval(const std::vector<SparseVec>& args) const {
    int k = static_cast<int>(args.size());
    if (k < 1 || k > kmax()) return {};
    return eval_skew(brackets[k], degrees(), args);
}

void LInfinityMorphism::set_component(const Tuple& args, const SparseVec& value) {
    int k = static_cast<int>(args.size());
    if (k < 1) throw std::invalid_argument("component arity must be positive");
    auto sd = source.degrees();
    int expected = k - 1;
    for (int a : args) expected += sd.at(a);
    int d = vector_degree(target.degrees(), value);
    if (d != kZeroDegree && d != expected) throw std::invalid_argument("component value has wrong degree");
    if (static_cast<int>(comps.size()) <= k) comps.resize(k + 1);
    store(comps[k], sd, args, value);
}

SparseVec LInfinityMorphism::eval(const std::vector<SparseVec>& args) const {
    int k = static_cast<int>(args.size());
    if (k < 1 || k > kmax()) return {};
    return eval_skew(comps[k], source.degrees(), args);
}

LInfinityMorphism identity_morphism(const LInfinityAlgebra& L) {
    LInfinityMorphism f{L, L, {}};
    for (int i = 0; i < L.dim(); ++i) f.set_component({i}, basis_vector(i));
    return f;
}

// ---------------------------------------------------------------------------
// Lie models of truncated free DGLs

SparseVec LieModel::coordinates(const Tensor& t) const {
    std::map<std::pair<int, int>, Tensor> parts;
    for (const auto& [w, c] : t) {
        int len = static_cast<int>(w.size());
        if (len > alph.max_len) continue;
        parts[{len, alph.degree(w)}].emplace(w, c);
    }
    SparseVec out;
    for (const auto& [key, part] : parts) {
        auto it = blocks.find(key);
        if (it == blocks.end()) throw std::logic_error("element outside the Lie model");
        SparseVec local = it->second.coordinates(part);
        int off = offsets.at(key);
        for (const auto& [i, c] : local) out.emplace(off + i, c);
    }
    return out;
}

Tensor LieModel::tensor(const SparseVec& v) const {
    Tensor out;
    for (const auto& [i, c] : v) axpy(out, c, elems.at(i));
    return out;
}

LieModel dgl_to_linfty(const DGLPresentation& D, int N) {
    if (N < 1 || N > D.W()) throw std::invalid_argument("Lie model length must lie in [1, W]");
    LieModel M;
    M.alph = D.alph;
    M.alph.max_len = N;
    std::set<int> degs{0};
    for (int len = 1; len <= N; ++len) {
        std::set<int> next;
        for (int d : degs)
            for (const auto& g : M.alph.gens) next.insert(d + g.degree);
        degs = next;
        for (int d : degs) {
            LieBasis B = lie_subspace_basis(M.alph, d, len);
            if (B.size() == 0) continue;
            M.offsets[{len, d}] = M.L.dim();
            for (int i = 0; i < B.size(); ++i) {
                std::string name = len == 1 ? M.alph.render(B.pivots[i])
                                            : "[" + M.alph.render(B.pivots[i]) + "]";
                M.L.add_basis(name, d);
                M.elems.push_back(B.elems[i]);
                M.lengths.push_back(len);
            }
            M.blocks.emplace(std::make_pair(len, d), std::move(B));
        }
    }
    DGLPresentation T = D;
    T.alph.max_len = N;
    for (auto& v : T.diff) v = truncate(v, N);
    M.L.brackets.resize(3);
    auto ldeg = M.L.degrees();
    for (int i = 0; i < M.L.dim(); ++i) {
        SparseVec v = M.coordinates(apply_d(T, M.elems[i]));
        if (!v.empty()) M.L.brackets[1].entries.emplace(Tuple{i}, v);
        for (int j = i; j < M.L.dim(); ++j) {
            if (i == j && !(ldeg[i] & 1)) continue;
            if (M.lengths[i] + M.lengths[j] > N) continue;
            SparseVec b = M.coordinates(bracket(M.alph, M.elems[i], M.elems[j]));
            if (!b.empty()) M.L.brackets[2].entries.emplace(Tuple{i, j}, b);
        }
    }
    return M;
}

// ---------------------------------------------------------------------------
// Jacobi identities

namespace {

std::vector<SparseVec> basis_args(const Tuple& t) {
    std::vector<SparseVec> out;
    for (int a : t) out.push_back(basis_vector(a));
    return out;
}

std::vector<SparseVec> with_powers(const SparseVec& z, int i, const std::vector<SparseVec>& rest) {
    std::vector<SparseVec> out(i, z);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

}  // namespace

SparseVec jacobiator(const LInfinityAlgebra& L, const Tuple& args) {
    int n = static_cast<int>(args.size());
    auto degs = L.degrees();
    std::vector<int> ad;
    for (int a : args) ad.push_back(degs[a]);
    SparseVec out;
    for (int i = 1; i <= n; ++i) {
        int j = n - i + 1;
        if (i > L.kmax() || j > L.kmax()) continue;
        for (const auto& sigma : shuffles(i, n)) {
            int sign = permutation_sign(sigma) * koszul_sign(sigma, ad) * parity_sign(static_cast<long>(i) * (n - i));
            std::vector<SparseVec> inner, outer;
            for (int p = 0; p < i; ++p) inner.push_back(basis_vector(args[sigma[p]]));
            SparseVec li = L.eval(inner);
            if (li.empty()) continue;
            outer.push_back(li);
            for (int p = i; p < n; ++p) outer.push_back(basis_vector(args[sigma[p]]));
            axpy(out, Scalar(sign), L.eval(outer));
        }
    }
    return out;
}

std::vector<JacobiViolation> jacobi_report(const LInfinityAlgebra& L, int n) {
    std::vector<JacobiViolation> out;
    for (const auto& t : sorted_tuples(L.degrees(), n)) {
        SparseVec r = jacobiator(L, t);
        if (!r.empty()) out.push_back({n, t, std::move(r)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Maurer-Cartan elements and perturbation

namespace {

void require_degree(const LInfinityAlgebra& L, const SparseVec& z, int degree) {
    int d = vector_degree(L.degrees(), z);
    if (d != kZeroDegree && d != degree)
        throw std::invalid_argument("expected an element of degree " + std::to_string(degree));
}

}  // namespace

SparseVec mc_residual(const LInfinityAlgebra& L, const SparseVec& z) {
    require_degree(L, z, -1);
    SparseVec out;
    for (int k = 1; k <= L.kmax(); ++k) axpy(out, 1 / factorial(k), L.eval(with_powers(z, k, {})));
    return out;
}

bool is_mc(const LInfinityAlgebra& L, const SparseVec& z) { return mc_residual(L, z).empty(); }

LInfinityAlgebra perturb(const LInfinityAlgebra& L, const SparseVec& z) {
    if (!is_mc(L, z)) throw std::invalid_argument("perturbation needs a Maurer-Cartan element");
    LInfinityAlgebra out{L.basis, {}};
    out.brackets.resize(L.kmax() + 1);
    auto degs = L.degrees();
    for (int k = 1; k <= L.kmax(); ++k) {
        for (const auto& t : sorted_tuples(degs, k)) {
            auto rest = basis_args(t);
            SparseVec v;
            for (int i = 0; i + k <= L.kmax(); ++i) {
                if (i > 0 && z.empty()) break;
                axpy(v, 1 / factorial(i), L.eval(with_powers(z, i, rest)));
            }
            if (!v.empty()) out.brackets[k].entries.emplace(t, std::move(v));
        }
    }
    return out;
}

namespace {

// Solves for coordinates in the span of a fixed family of vectors.
class SpanSolver {
public:
    explicit SpanSolver(const std::vector<SparseVec>& family) {
        for (size_t j = 0; j < family.size(); ++j) {
            SparseVec v = family[j];
            SparseVec combo{{static_cast<int>(j), Scalar(1)}};
            reduce(v, combo);
            if (v.empty()) throw std::invalid_argument("dependent family");
            int p = v.begin()->first;
            Scalar inv = 1 / v.begin()->second;
            v = scaled(v, inv);
            combo = scaled(combo, inv);
            rows_.emplace(p, std::make_pair(std::move(v), std::move(combo)));
        }
    }
    bool solve(SparseVec v, SparseVec& coords) const {
        SparseVec combo;
        reduce(v, combo);
        if (!v.empty()) return false;
        coords = scaled(combo, Scalar(-1));
        return true;
    }

private:
    void reduce(SparseVec& v, SparseVec& combo) const {
        bool again = true;
        while (again && !v.empty()) {
            again = false;
            for (const auto& [k, c] : v) {
                auto it = rows_.find(k);
                if (it == rows_.end()) continue;
                Scalar f = c;
                axpy(v, -f, it->second.first);
                axpy(combo, -f, it->second.second);
                again = true;
                break;
            }
        }
    }
    std::map<int, std::pair<SparseVec, SparseVec>> rows_;
};

}  // namespace

Truncation truncate_positive(const LInfinityAlgebra& Lz) {
    auto degs = Lz.degrees();
    std::vector<int> zero;
    for (int i = 0; i < Lz.dim(); ++i)
        if (degs[i] == 0) zero.push_back(i);
    std::vector<SparseVec> images;
    for (int i : zero) images.push_back(Lz.eval_basis({i}));
    std::vector<SparseVec> kernel;
    for (const auto& kv : kernel_of_images(images)) {
        SparseVec v;
        for (const auto& [p, c] : kv) v.emplace(zero[p], c);
        kernel.push_back(std::move(v));
    }

    Truncation T;
    std::map<int, int> positive;  // old index -> new index
    for (size_t k = 0; k < kernel.size(); ++k) {
        const auto& v = kernel[k];
        std::string name = (v.size() == 1 && v.begin()->second == 1) ? Lz.basis[v.begin()->first].name
                                                                       : "ker" + std::to_string(k);
        T.L.add_basis(name, 0);
        T.embedding.push_back(v);
    }
    for (int i = 0; i < Lz.dim(); ++i) {
        if (degs[i] <= 0) continue;
        positive[i] = T.L.add_basis(Lz.basis[i].name, degs[i]);
        T.embedding.push_back(basis_vector(i));
    }
    SpanSolver solver(kernel);
    auto to_new = [&](const SparseVec& v) {
        SparseVec out, zero_part;
        for (const auto& [i, c] : v) {
            if (degs[i] > 0) out.emplace(positive.at(i), c);
            else if (degs[i] == 0) zero_part.emplace(i, c);
            else throw std::logic_error("induced bracket leaves the truncation");
        }
        SparseVec coords;
        if (!solver.solve(zero_part, coords)) throw std::logic_error("induced bracket leaves ker l_1");
        for (const auto& [k, c] : coords) out.emplace(static_cast<int>(k), c);
        return out;
    };
    T.L.brackets.resize(std::max(Lz.kmax(), 0) + 1);
    auto ndegs = T.L.degrees();
    for (int k = 1; k <= Lz.kmax(); ++k) {
        for (const auto& t : sorted_tuples(ndegs, k)) {
            std::vector<SparseVec> args;
            for (int a : t) args.push_back(T.embedding[a]);
            SparseVec v = to_new(Lz.eval(args));
            if (!v.empty()) T.L.brackets[k].entries.emplace(t, std::move(v));
        }
    }
    return T;
}

// ---------------------------------------------------------------------------
// Morphisms

std::vector<MorphismViolation> morphism_report(const LInfinityMorphism& f, int n) {
    std::vector<MorphismViolation> out;
    const auto& L = f.source;
    const auto& M = f.target;
    auto degs = L.degrees();
    if (n >= 1) {
        for (int i = 0; i < L.dim(); ++i) {
            SparseVec x = basis_vector(i);
            SparseVec r = M.l1(f.eval({x}));
            axpy(r, Scalar(-1), f.eval({L.l1(x)}));
            if (!r.empty()) out.push_back({1, {i}, std::move(r), true});
        }
    }
    if (n >= 2) {
        for (const auto& t : sorted_tuples(degs, 2)) {
            SparseVec x = basis_vector(t[0]), y = basis_vector(t[1]);
            SparseVec r = M.l1(f.eval({x, y}));
            axpy(r, Scalar(1), M.eval({f.eval({x}), f.eval({y})}));
            axpy(r, Scalar(-1), f.eval({L.eval({x, y})}));
            axpy(r, Scalar(-1), f.eval({L.l1(x), y}));
            axpy(r, Scalar(parity_sign(degs[t[0]])), f.eval({x, L.l1(y)}));
            if (!r.empty()) out.push_back({2, t, std::move(r), true});
        }
    }
    if (n >= 3) {
        for (auto& v : coalgebra_morphism_report(f, n))
            if (v.n >= 3) out.push_back(std::move(v));
    }
    return out;
}

namespace {

int dictionary_sign(Dictionary dict, int k) {
    return dict == Dictionary::Signed ? 1 : parity_sign(static_cast<long>(k) * (k - 1) / 2);
}

// Component of a coalgebra map or coderivation on s x_1 ^ ... ^ s x_k, given
// by g (a bracket or morphism component); returns the L-vector under s.
// The sign is (-1)^{sum_j (k-j)|x_j|} in the signed dictionary.
template <class G>
SparseVec suspended(const G& g, const std::vector<int>& degs, const std::vector<SparseVec>& args, Dictionary dict) {
    int k = static_cast<int>(args.size());
    long e = 0;
    for (int j = 0; j < k; ++j) {
        int d = vector_degree(degs, args[j]);
        if (d == kZeroDegree) return {};
        e += static_cast<long>(k - 1 - j) * d;
    }
    return scaled(g(args), Scalar(parity_sign(e) * dictionary_sign(dict, k)));
}

// Set partitions of {0..n-1}, blocks ordered by smallest element.
void set_partitions(int n, std::vector<std::vector<std::vector<int>>>& out) {
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.push_back(blocks);
            return;
        }
        for (size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(i);
            rec(i + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({i});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
}

std::vector<int> suspended_degrees(const std::vector<int>& degs, const Tuple& t) {
    std::vector<int> out;
    for (int a : t) out.push_back(degs[a] + 1);
    return out;
}

}  // namespace

std::vector<JacobiViolation> coalgebra_square_report(const LInfinityAlgebra& L, int n, Dictionary dict) {
    std::vector<JacobiViolation> out;
    auto degs = L.degrees();
    auto ell = [&](const std::vector<SparseVec>& a) { return L.eval(a); };
    for (const auto& t : sorted_tuples(degs, n)) {
        auto sd = suspended_degrees(degs, t);
        SparseVec r;
        for (int i = 1; i <= n; ++i) {
            if (i > L.kmax() || n - i + 1 > L.kmax()) continue;
            for (const auto& sigma : shuffles(i, n)) {
                std::vector<SparseVec> inner, outer;
                for (int p = 0; p < i; ++p) inner.push_back(basis_vector(t[sigma[p]]));
                SparseVec d1 = suspended(ell, degs, inner, dict);
                if (d1.empty()) continue;
                outer.push_back(d1);
                for (int p = i; p < n; ++p) outer.push_back(basis_vector(t[sigma[p]]));
                axpy(r, Scalar(koszul_sign(sigma, sd)), suspended(ell, degs, outer, dict));
            }
        }
        if (!r.empty()) out.push_back({n, t, std::move(r)});
    }
    return out;
}

std::vector<MorphismViolation> coalgebra_morphism_report(const LInfinityMorphism& f, int n, Dictionary dict) {
    std::vector<MorphismViolation> out;
    const auto& L = f.source;
    const auto& M = f.target;
    auto degs = L.degrees();
    auto tdegs = M.degrees();
    auto ell = [&](const std::vector<SparseVec>& a) { return L.eval(a); };
    auto ellM = [&](const std::vector<SparseVec>& a) { return M.eval(a); };
    auto comp = [&](const std::vector<SparseVec>& a) { return f.eval(a); };
    std::vector<std::vector<std::vector<int>>> parts;
    set_partitions(n, parts);
    for (const auto& t : sorted_tuples(degs, n)) {
        auto sd = suspended_degrees(degs, t);
        SparseVec r;
        for (int i = 1; i <= n; ++i) {
            if (i > L.kmax() || n - i + 1 > f.kmax()) continue;
            for (const auto& sigma : shuffles(i, n)) {
                std::vector<SparseVec> inner, outer;
                for (int p = 0; p < i; ++p) inner.push_back(basis_vector(t[sigma[p]]));
                SparseVec d1 = suspended(ell, degs, inner, dict);
                if (d1.empty()) continue;
                outer.push_back(d1);
                for (int p = i; p < n; ++p) outer.push_back(basis_vector(t[sigma[p]]));
                axpy(r, Scalar(koszul_sign(sigma, sd)), suspended(comp, degs, outer, dict));
            }
        }
        for (const auto& blocks : parts) {
            int s = static_cast<int>(blocks.size());
            if (s > M.kmax()) continue;
            Permutation sigma;
            std::vector<SparseVec> images;
            bool zero = false;
            for (const auto& b : blocks) {
                if (static_cast<int>(b.size()) > f.kmax()) {
                    zero = true;
                    break;
                }
                std::vector<SparseVec> args;
                for (int p : b) {
                    sigma.push_back(p);
                    args.push_back(basis_vector(t[p]));
                }
                SparseVec img = suspended(comp, degs, args, dict);
                if (img.empty()) {
                    zero = true;
                    break;
                }
                images.push_back(std::move(img));
            }
            if (zero) continue;
            axpy(r, Scalar(-koszul_sign(sigma, sd)), suspended(ellM, tdegs, images, dict));
        }
        if (!r.empty()) out.push_back({n, t, std::move(r), false});
    }
    return out;
}

LInfinityAlgebra twist(const LInfinityAlgebra& L) {
    LInfinityAlgebra out = L;
    for (int k = 1; k <= out.kmax(); ++k)
        if (parity_sign(static_cast<long>(k) * (k - 1) / 2) < 0)
            for (auto& [t, v] : out.brackets[k].entries) v = scaled(v, Scalar(-1));
    return out;
}

LInfinityMorphism twist(const LInfinityMorphism& f) {
    LInfinityMorphism out{twist(f.source), twist(f.target), f.comps};
    for (int k = 1; k <= out.kmax(); ++k)
        if (parity_sign(static_cast<long>(k) * (k - 1) / 2) < 0)
            for (auto& [t, v] : out.comps[k].entries) v = scaled(v, Scalar(-1));
    return out;
}

// ---------------------------------------------------------------------------
// The canonical morphism out of Lib(u)

LInfinityAlgebra lib_u() {
    LInfinityAlgebra L;
    int u = L.add_basis("u", -1);
    int w = L.add_basis("w", -2);
    L.set_bracket({u}, basis_vector(w, frac(-1, 2)));
    L.set_bracket({u, u}, basis_vector(w));
    return L;
}

LInfinityMorphism canonical_mc_morphism(const LInfinityAlgebra& L, const SparseVec& z, int n) {
    require_degree(L, z, -1);
    if (n < 1) throw std::invalid_argument("arity must be positive");
    LInfinityMorphism phi{lib_u(), L, {}};
    phi.set_component({0}, z);
    SparseVec prev;
    for (int k = 1; k <= n; ++k) {
        SparseVec p = scaled(prev, Scalar(k - 1));
        axpy(p, -Scalar(2) / k, L.eval(with_powers(z, k, {})));
        Tuple args{1};
        for (int i = 1; i < k; ++i) args.push_back(0);
        phi.set_component(args, p);
        prev = std::move(p);
    }
    return phi;
}

SparseVec canonical_closed_form(const LInfinityAlgebra& L, const SparseVec& z, int k) {
    SparseVec s;
    for (int i = 1; i <= k; ++i) axpy(s, 1 / factorial(i), L.eval(with_powers(z, i, {})));
    return scaled(s, -2 * factorial(k - 1));
}

std::vector<IdentityCheck> check_canonical_identities(const LInfinityMorphism& phi, const SparseVec& z, int n) {
    const auto& L = phi.target;
    std::vector<SparseVec> P(n + 1);
    for (int k = 1; k <= n; ++k) {
        std::vector<SparseVec> args{basis_vector(1)};
        for (int i = 1; i < k; ++i) args.push_back(basis_vector(0));
        P[k] = phi.eval(args);
    }
    std::vector<IdentityCheck> out;
    for (int k = 1; k <= n; ++k) {
        IdentityCheck c;
        c.k = k;
        c.first_residual = L.eval(with_powers(z, k, {}));
        if (k >= 2) axpy(c.first_residual, -binomial(k, 2), P[k - 1]);
        axpy(c.first_residual, Scalar(k) / 2, P[k]);
        SparseVec reordered;
        for (int j = 1; j <= k; ++j) {
            const SparseVec& p = P[k - j + 1];
            std::vector<SparseVec> a{p}, b(j - 1, z);
            a.insert(a.end(), j - 1, z);
            b.push_back(p);
            axpy(c.second_residual, binomial(k - 1, j - 1), L.eval(a));
            axpy(reordered, binomial(k - 1, j - 1), L.eval(b));
        }
        c.first = c.first_residual.empty();
        c.second = c.second_residual.empty();
        c.second_reordered = reordered.empty();
        out.push_back(std::move(c));
    }
    return out;
}

SparseVec mc_pushforward(const LInfinityMorphism& g, const SparseVec& z) {
    if (!is_mc(g.source, z)) throw std::invalid_argument("pushforward needs a Maurer-Cartan element");
    SparseVec out;
    for (int k = 1; k <= g.kmax(); ++k) axpy(out, 1 / factorial(k), g.eval(with_powers(z, k, {})));
    return out;
}

SparseVec coalgebra_mc_residual(const LInfinityAlgebra& L, const SparseVec& z) {
    require_degree(L, z, -1);
    SparseVec out;
    for (int k = 1; k <= L.kmax(); ++k)
        axpy(out, parity_sign(k * (k + 1) / 2 + 1) / factorial(k), L.eval(with_powers(z, k, {})));
    return out;
}

SparseVec coalgebra_pushforward(const LInfinityMorphism& g, const SparseVec& z) {
    if (!coalgebra_mc_residual(g.source, z).empty()) throw std::invalid_argument("pushforward needs a Maurer-Cartan element");
    SparseVec out;
    for (int k = 1; k <= g.kmax(); ++k)
        axpy(out, parity_sign(k * (k + 1) / 2 + 1) / factorial(k), g.eval(with_powers(z, k, {})));
    return out;
}

// ---------------------------------------------------------------------------
// Polynomial forms on the interval

int FormsTensorAlgebra::index(int i, int j, bool with_dt) const {
    if (i < 0 || i >= base_dim || j < 0 || j > (with_dt ? D - 1 : D)) return -1;
    return i * (2 * D + 1) + (with_dt ? D + 1 + j : j);
}

SparseVec FormsTensorAlgebra::eta(int point, const SparseVec& v) const {
    SparseVec out;
    for (const auto& [idx, c] : v) {
        int i = idx / (2 * D + 1), r = idx % (2 * D + 1);
        if (r > D) continue;
        Scalar p = 1;
        for (int e = 0; e < r; ++e) p *= point;
        add_term(out, i, c * p);
    }
    return out;
}

SparseVec FormsTensorAlgebra::constant(const SparseVec& x) const {
    SparseVec out;
    for (const auto& [i, c] : x) out.emplace(index(i, 0, false), c);
    return out;
}

FormsTensorAlgebra tensor_with_forms(const LInfinityAlgebra& L, int D) {
    if (D < 1) throw std::invalid_argument("form degree bound must be at least 1");
    FormsTensorAlgebra F;
    F.base = L;
    F.base_dim = L.dim();
    F.D = D;
    for (int i = 0; i < L.dim(); ++i) {
        const auto& g = L.basis[i];
        for (int j = 0; j <= D; ++j) F.L.add_basis(g.name + "*t^" + std::to_string(j), g.degree);
        for (int j = 0; j < D; ++j) F.L.add_basis(g.name + "*t^" + std::to_string(j) + "dt", g.degree - 1);
    }
    F.L.brackets.resize(std::max(L.kmax(), 1) + 1);
    auto ldegs = L.degrees();
    auto fdegs = F.L.degrees();
    // l_1(x a) = dx a + (-1)^{|x|} x da
    for (int i = 0; i < L.dim(); ++i) {
        SparseVec dx = L.eval_basis({i});
        for (int j = 0; j <= D; ++j) {
            for (int dt = 0; dt < 2; ++dt) {
                int idx = F.index(i, j, dt);
                if (idx < 0) continue;
                SparseVec v;
                for (const auto& [m, c] : dx) v.emplace(F.index(m, j, dt), c);
                if (!dt && j >= 1) add_term(v, F.index(i, j - 1, true), Scalar(parity_sign(ldegs[i]) * j));
                if (!v.empty()) F.L.brackets[1].entries.emplace(Tuple{idx}, std::move(v));
            }
        }
    }
    // l_k(x_1 a_1, ..) = eps l_k(x_1..) a_1...a_k
    int forms = 2 * D + 1;
    for (int k = 2; k <= L.kmax(); ++k) {
        std::set<Tuple> seen;
        for (const auto& [t, val] : L.brackets[k].entries) {
            std::vector<int> choice(k, 0);
            while (true) {
                int power = 0, dts = 0;
                for (int c : choice) {
                    if (c > D) {
                        power += c - D - 1;
                        ++dts;
                    } else {
                        power += c;
                    }
                }
                if (dts <= 1 && power <= (dts ? D - 1 : D)) {
                    Tuple args;
                    long e = 0;
                    for (int p = 0; p < k; ++p) {
                        args.push_back(t[p] * forms + choice[p]);
                        for (int q = 0; q < p; ++q)
                            if (choice[q] > D) e += ldegs[t[p]];
                    }
                    Tuple s = args;
                    if (skew_sort(s, fdegs) != 0 && !seen.count(s)) {
                        seen.insert(s);
                        SparseVec v;
                        for (const auto& [m, c] : val) v.emplace(F.index(m, power, dts == 1), c * parity_sign(e));
                        F.L.set_bracket(args, v);
                    }
                }
                int p = 0;
                while (p < k && ++choice[p] == forms) choice[p++] = 0;
                if (p == k) break;
            }
        }
    }
    return F;
}

LInfinityMorphism evaluation_morphism(const FormsTensorAlgebra& F, int point) {
    LInfinityMorphism f{F.L, F.base, {}};
    for (int i = 0; i < F.L.dim(); ++i) {
        SparseVec v = F.eta(point, basis_vector(i));
        if (!v.empty()) f.set_component({i}, v);
    }
    return f;
}

bool q_homotopy_check(const FormsTensorAlgebra& F, const SparseVec& phi, const SparseVec& z0, const SparseVec& z1) {
    if (!is_mc(F.L, phi)) throw std::invalid_argument("path is not Maurer-Cartan");
    return F.eta(0, phi) == z0 && F.eta(1, phi) == z1;
}

SparseVec gauge_path(const FormsTensorAlgebra& F, const SparseVec& x, const SparseVec& z0) {
    if (F.base.kmax() > 2) throw std::invalid_argument("gauge paths need a DGL");
    require_degree(F.base, x, 0);
    require_degree(F.base, z0, -1);
    SparseVec out;
    auto place = [&](const SparseVec& v, int j, bool dt, const Scalar& c) {
        if (v.empty()) return;
        if (j > (dt ? F.D - 1 : F.D)) throw std::invalid_argument("form degree bound too small for the gauge path");
        for (const auto& [i, a] : v) add_term(out, F.index(i, j, dt), c * a);
    };
    SparseVec a = z0;
    SparseVec b = F.base.l1(x);
    for (int n = 0; !a.empty() || !b.empty(); ++n) {
        place(a, n, false, 1 / factorial(n));
        place(b, n + 1, false, -1 / factorial(n + 1));
        a = F.base.eval({x, a});
        b = F.base.eval({x, b});
    }
    place(x, 0, true, Scalar(-1));
    return out;
}

std::string render(const LInfinityAlgebra& L, const SparseVec& v) {
    if (v.empty()) return "0";
    std::string out;
    for (const auto& [i, c] : v) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")" + L.basis.at(i).name;
    }
    return out;
}

}  // namespace rht
