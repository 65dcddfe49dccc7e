#include "rht/cdga.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "rht/linalg.hpp"
#include "rht/ls.hpp"

namespace rht {

int FreeCDGA::add_generator(const std::string& name, int degree) {
    if (index_of(name) >= 0) throw std::invalid_argument("duplicate generator " + name);
    if (size() >= 120) throw std::invalid_argument("too many generators");
    gens.push_back({name, degree});
    diff.emplace_back();
    return size() - 1;
}

int FreeCDGA::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (gens[i].name == name) return i;
    return -1;
}

int FreeCDGA::degree(const Monomial& m) const {
    int d = 0;
    for (char c : m) d += gens.at(static_cast<unsigned char>(c)).degree;
    return d;
}

void FreeCDGA::set_diff(int g, const Poly& value) {
    Poly v;
    for (const auto& [m, c] : value) {
        if (m.empty()) throw std::invalid_argument("differential of " + gens.at(g).name + " has a constant term");
        if (degree(m) != gens.at(g).degree - 1)
            throw std::invalid_argument("differential of " + gens.at(g).name + " has the wrong degree");
        Monomial n = m;
        int s = normalize(*this, n);
        if (s != 0 && static_cast<int>(n.size()) <= P) add_term(v, n, Scalar(s) * c);
    }
    diff.at(g) = std::move(v);
}

Poly constant_poly(const Scalar& c) {
    Poly p;
    add_term(p, Monomial{}, c);
    return p;
}

Poly generator_poly(int g, const Scalar& c) {
    Poly p;
    add_term(p, Monomial(1, static_cast<char>(g)), c);
    return p;
}

namespace {

bool odd(const FreeCDGA& A, char c) { return A.gens.at(static_cast<unsigned char>(c)).degree & 1; }

}  // namespace

int normalize(const FreeCDGA& A, Monomial& m) {
    int sign = 1;
    for (size_t i = 1; i < m.size(); ++i) {
        for (size_t j = i; j > 0 && static_cast<unsigned char>(m[j - 1]) > static_cast<unsigned char>(m[j]); --j) {
            if (odd(A, m[j - 1]) && odd(A, m[j])) sign = -sign;
            std::swap(m[j - 1], m[j]);
        }
    }
    for (size_t i = 1; i < m.size(); ++i)
        if (m[i] == m[i - 1] && odd(A, m[i])) return 0;
    return sign;
}

Poly mul(const FreeCDGA& A, const Poly& p, const Poly& q) {
    Poly out;
    for (const auto& [a, x] : p) {
        for (const auto& [b, y] : q) {
            if (static_cast<int>(a.size() + b.size()) > A.P) continue;
            Monomial m = a + b;
            int s = normalize(A, m);
            if (s != 0) add_term(out, m, Scalar(s) * x * y);
        }
    }
    return out;
}

Poly apply_d(const FreeCDGA& A, const Poly& p) {
    Poly out;
    for (const auto& [m, c] : p) {
        int prefix = 0;
        for (size_t i = 0; i < m.size(); ++i) {
            int g = static_cast<unsigned char>(m[i]);
            Poly left;
            left.emplace(m.substr(0, i), c * parity_sign(prefix));
            Poly right;
            right.emplace(m.substr(i + 1), Scalar(1));
            axpy(out, Scalar(1), mul(A, mul(A, left, A.diff.at(g)), right));
            prefix += A.gens[g].degree;
        }
    }
    return out;
}

std::string render(const FreeCDGA& A, const Poly& p) {
    if (p.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p) {
        if (!first) out += " + ";
        first = false;
        out += "(" + to_string(c) + ")";
        if (m.empty()) out += "1";
        for (size_t i = 0; i < m.size();) {
            size_t j = i;
            while (j < m.size() && m[j] == m[i]) ++j;
            if (i > 0) out += " ";
            out += A.gens[static_cast<unsigned char>(m[i])].name;
            if (j - i > 1) out += "^" + std::to_string(j - i);
            i = j;
        }
    }
    return out;
}

std::vector<CDGAD2Violation> d_squared_report(const FreeCDGA& A) {
    std::vector<CDGAD2Violation> out;
    for (int g = 0; g < A.size(); ++g) {
        Poly r = apply_d(A, A.diff[g]);
        if (!r.empty()) out.push_back({A.gens[g].name, r});
    }
    return out;
}

Poly AlgebraMap::apply(const Poly& p) const {
    Poly out;
    for (const auto& [m, c] : p) {
        Poly term = constant_poly(c);
        for (char g : m) {
            term = mul(codomain, term, images.at(static_cast<unsigned char>(g)));
            if (term.empty()) break;
        }
        axpy(out, Scalar(1), term);
    }
    return out;
}

std::vector<ChainViolation> chain_map_report(const AlgebraMap& f, const std::vector<int>& only) {
    std::vector<int> gens = only;
    if (gens.empty())
        for (int g = 0; g < f.domain.size(); ++g) gens.push_back(g);
    std::vector<ChainViolation> out;
    for (int g : gens) {
        Poly r = apply_d(f.codomain, f.images.at(g));
        axpy(r, Scalar(-1), f.apply(f.domain.diff.at(g)));
        if (!r.empty()) out.push_back({f.domain.gens[g].name, r});
    }
    return out;
}

AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f) {
    if (!(f.codomain == g.domain)) throw std::invalid_argument("maps are not composable");
    AlgebraMap h{f.domain, g.codomain, {}};
    for (const auto& p : f.images) h.images.push_back(g.apply(p));
    return h;
}

AlgebraMap identity_map(const FreeCDGA& A) {
    AlgebraMap f{A, A, {}};
    for (int g = 0; g < A.size(); ++g) f.images.push_back(generator_poly(g));
    return f;
}

namespace {

Monomial monomial_of(const Tuple& t) {
    Monomial m;
    for (int i : t) m.push_back(static_cast<char>(i));
    return m;
}

Tuple tuple_of(const Monomial& m) {
    Tuple t;
    for (char c : m) t.push_back(static_cast<unsigned char>(c));
    return t;
}

// <v_{t_1}..v_{t_k}; s x_{t_1} ^ .. ^ s x_{t_k}> on a sorted tuple.
Scalar pairing(const Tuple& t, const std::vector<int>& ldegs) {
    Scalar out = 1;
    for (size_t i = 0; i < t.size();) {
        size_t j = i;
        while (j < t.size() && t[j] == t[i]) ++j;
        out *= factorial(static_cast<int>(j - i));
        i = j;
    }
    long e = 0;
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j) e += static_cast<long>(ldegs[t[i]] + 1) * (ldegs[t[j]] + 1);
    return out * parity_sign(e);
}

long position_exponent(const Tuple& t, const std::vector<int>& ldegs) {
    long e = 0;
    int k = static_cast<int>(t.size());
    for (int j = 0; j < k; ++j) e += static_cast<long>(k - 1 - j) * ldegs[t[j]];
    return e;
}

FreeCDGA cochain_generators(const LInfinityAlgebra& L, int P) {
    FreeCDGA A;
    A.P = P;
    for (const auto& g : L.basis) A.add_generator("#" + g.name, -(g.degree + 1));
    return A;
}

}  // namespace

FreeCDGA cochains_literal(const LInfinityAlgebra& L, int P) {
    FreeCDGA A = cochain_generators(L, P);
    auto ldegs = L.degrees();
    std::vector<Poly> d(L.dim());
    for (int k = 1; k <= L.kmax(); ++k) {
        for (const auto& [t, val] : L.brackets[k].entries) {
            if (val.empty()) continue;
            if (k > P) throw std::invalid_argument("monomial bound below the bracket arity");
            Scalar base = parity_sign(position_exponent(t, ldegs)) / pairing(t, ldegs);
            for (const auto& [i, c] : val) add_term(d[i], monomial_of(t), base * c * parity_sign(A.gens[i].degree));
        }
    }
    for (int i = 0; i < L.dim(); ++i) A.set_diff(i, d[i]);
    return A;
}

std::vector<Scalar> degree_zero_flip(const FreeCDGA& A) {
    std::vector<Scalar> f;
    for (const auto& g : A.gens) f.push_back(g.degree == 0 ? -1 : 1);
    return f;
}

FreeCDGA rescale(const FreeCDGA& A, const std::vector<Scalar>& factors) {
    if (static_cast<int>(factors.size()) != A.size()) throw std::invalid_argument("one factor per generator");
    FreeCDGA B = A;
    for (int g = 0; g < A.size(); ++g) {
        if (factors[g] == 0) throw std::invalid_argument("rescaling factors must be nonzero");
        Poly v;
        for (const auto& [m, c] : A.diff[g]) {
            Scalar s = c * factors[g];
            for (char x : m) s /= factors[static_cast<unsigned char>(x)];
            v.emplace(m, s);
        }
        B.diff[g] = std::move(v);
    }
    return B;
}

FreeCDGA cochains(const LInfinityAlgebra& L, int P) {
    FreeCDGA A = cochains_literal(L, P);
    return rescale(A, degree_zero_flip(A));
}

LInfinityAlgebra brackets_from_cochains(const FreeCDGA& A, const std::vector<GradedGenerator>& basis) {
    if (static_cast<int>(basis.size()) != A.size()) throw std::invalid_argument("basis size differs from generator count");
    LInfinityAlgebra L;
    for (const auto& g : basis) L.add_basis(g.name, g.degree);
    for (int i = 0; i < A.size(); ++i)
        if (A.gens[i].degree != -(basis[i].degree + 1)) throw std::invalid_argument("generator degrees do not match the basis");
    auto ldegs = L.degrees();
    std::map<Tuple, SparseVec> values;
    for (int i = 0; i < A.size(); ++i) {
        for (const auto& [m, c] : A.diff[i]) {
            Tuple t = tuple_of(m);
            Scalar v = c * pairing(t, ldegs) * parity_sign(position_exponent(t, ldegs) + A.gens[i].degree);
            add_term(values[t], i, v);
        }
    }
    for (const auto& [t, v] : values) {
        if (static_cast<int>(t.size()) > L.kmax()) L.brackets.resize(t.size() + 1);
        L.set_bracket(t, v);
    }
    if (L.brackets.size() < 2) L.brackets.resize(2);
    return L;
}

AlgebraMap cochains_of_morphism_literal(const LInfinityMorphism& g, int P) {
    FreeCDGA W = cochains_literal(g.target, P);
    FreeCDGA V = cochains_literal(g.source, P);
    auto ldegs = g.source.degrees();
    std::vector<Poly> images(W.size());
    for (int k = 1; k <= g.kmax(); ++k) {
        for (const auto& [t, val] : g.comps[k].entries) {
            if (val.empty()) continue;
            if (k > P) throw std::invalid_argument("monomial bound below the component arity");
            Scalar base = parity_sign(position_exponent(t, ldegs)) / pairing(t, ldegs);
            for (const auto& [i, c] : val) add_term(images[i], monomial_of(t), base * c);
        }
    }
    return AlgebraMap{W, V, images};
}

AlgebraMap cochains_of_morphism(const LInfinityMorphism& g, int P) {
    AlgebraMap f = cochains_of_morphism_literal(g, P);
    auto fw = degree_zero_flip(f.domain);
    auto fv = degree_zero_flip(f.codomain);
    AlgebraMap out{rescale(f.domain, fw), rescale(f.codomain, fv), {}};
    for (int w = 0; w < f.domain.size(); ++w) {
        Poly p;
        for (const auto& [m, c] : f.images[w]) {
            Scalar s = c * fw[w];
            for (char x : m) s /= fv[static_cast<unsigned char>(x)];
            p.emplace(m, s);
        }
        out.images.push_back(std::move(p));
    }
    return out;
}

LInfinityMorphism morphism_from_cochains(const AlgebraMap& f, const LInfinityAlgebra& source,
                                         const LInfinityAlgebra& target) {
    if (f.domain.size() != target.dim() || f.codomain.size() != source.dim())
        throw std::invalid_argument("map does not match the algebras");
    LInfinityMorphism g{source, target, {}};
    auto ldegs = source.degrees();
    std::map<Tuple, SparseVec> values;
    for (int i = 0; i < f.domain.size(); ++i) {
        for (const auto& [m, c] : f.images[i]) {
            Tuple t = tuple_of(m);
            add_term(values[t], i, c * pairing(t, ldegs) * parity_sign(position_exponent(t, ldegs)));
        }
    }
    for (const auto& [t, v] : values) g.set_component(t, v);
    return g;
}

std::vector<Monomial> monomials(const FreeCDGA& A, int degree, int max_len) {
    std::vector<Monomial> out;
    // degrees can be of both signs, so bound the search by length only
    std::function<void(int, Monomial&, int)> rec = [&](int start, Monomial& m, int deg) {
        if (deg == degree) out.push_back(m);
        if (static_cast<int>(m.size()) == max_len) return;
        for (int g = start; g < A.size(); ++g) {
            if ((A.gens[g].degree & 1) && !m.empty() && static_cast<unsigned char>(m.back()) == g) continue;
            m.push_back(static_cast<char>(g));
            rec(g, m, deg + A.gens[g].degree);
            m.pop_back();
        }
    };
    Monomial m;
    rec(0, m, 0);
    return out;
}

std::vector<CohomologyEntry> cohomology(const FreeCDGA& A, int lo, int hi) {
    int spread = 1;
    for (const auto& d : A.diff)
        for (const auto& [m, c] : d) spread = std::max(spread, static_cast<int>(m.size()));
    FreeCDGA wide = A;
    wide.P = A.P + spread;
    // F^p: polynomials of length <= P whose differential has length <= P
    auto filtered = [&](int p, std::vector<Poly>& images) {
        auto mons = monomials(A, -p, A.P);
        std::vector<SparseVec> over;
        std::vector<Poly> full;
        std::map<Monomial, int> index;
        for (const auto& m : mons) {
            Poly d = apply_d(wide, Poly{{m, Scalar(1)}});
            SparseVec o;
            for (const auto& [n, c] : d) {
                if (static_cast<int>(n.size()) <= A.P) continue;
                auto it = index.emplace(n, static_cast<int>(index.size())).first;
                o.emplace(it->second, c);
            }
            over.push_back(o);
            full.push_back(d);
        }
        auto ker = kernel_of_images(over);
        images.clear();
        for (const auto& k : ker) {
            Poly d;
            for (const auto& [j, c] : k) axpy(d, c, full[j]);
            images.push_back(d);
        }
        return static_cast<int>(ker.size());
    };
    auto poly_rank = [](const std::vector<Poly>& ps) {
        Echelon<Monomial> e;
        for (const auto& p : ps) e.insert(p);
        return static_cast<int>(e.rank());
    };
    std::vector<CohomologyEntry> out;
    for (int p = lo; p <= hi; ++p) {
        std::vector<Poly> here, below;
        int dim = filtered(p, here);
        filtered(p - 1, below);
        CohomologyEntry e;
        e.degree = p;
        e.dim = dim - poly_rank(here) - poly_rank(below);
        for (int q : {p - 1, p, p + 1})
            for (const auto& m : monomials(A, -q, A.P + 1))
                if (static_cast<int>(m.size()) == A.P + 1) e.boundary_affected = true;
        out.push_back(e);
    }
    return out;
}

FreeCDGA based_target(int P) {
    FreeCDGA B;
    B.P = P;
    int x = B.add_generator("x", 0);
    int y = B.add_generator("y", 1);
    Poly dy;
    add_term(dy, Monomial(2, static_cast<char>(x)), frac(1, 2));
    add_term(dy, Monomial(1, static_cast<char>(x)), frac(-1, 2));
    B.set_diff(y, dy);
    return B;
}

FreeCDGA interval_forms(int D) {
    if (D < 1) throw std::invalid_argument("form degree bound must be at least 1");
    FreeCDGA F;
    F.P = D;
    int t = F.add_generator("t", 0);
    int dt = F.add_generator("dt", -1);
    F.set_diff(t, generator_poly(dt));
    return F;
}

Scalar evaluate(const FreeCDGA& A, const Augmentation& f, const Poly& p) {
    if (static_cast<int>(f.values.size()) != A.size()) throw std::invalid_argument("augmentation size mismatch");
    Scalar out = 0;
    for (const auto& [m, c] : p) {
        Scalar term = c;
        for (char g : m) term *= A.gens[static_cast<unsigned char>(g)].degree == 0 ? f.values[static_cast<unsigned char>(g)] : Scalar(0);
        out += term;
    }
    return out;
}

bool is_augmentation(const FreeCDGA& A, const Augmentation& f) {
    if (static_cast<int>(f.values.size()) != A.size()) return false;
    for (int g = 0; g < A.size(); ++g) {
        if (A.gens[g].degree != 0 && f.values[g] != 0) return false;
        if (evaluate(A, f, A.diff[g]) != 0) return false;
    }
    return true;
}

Augmentation augmentation_from_mc(const LInfinityAlgebra& L, const SparseVec& z) {
    Augmentation f;
    f.values.assign(L.dim(), Scalar(0));
    for (const auto& [i, c] : z) {
        if (L.degree(i) != -1) throw std::invalid_argument("Maurer-Cartan elements have degree -1");
        f.values[i] = c;
    }
    return f;
}

SparseVec mc_from_augmentation(const LInfinityAlgebra& L, const Augmentation& f) {
    FreeCDGA A = cochains(L, std::max(L.kmax(), 1));
    if (!is_augmentation(A, f)) throw std::invalid_argument("not an augmentation of the cochains");
    SparseVec z;
    for (int i = 0; i < L.dim(); ++i)
        if (f.values[i] != 0) z.emplace(i, f.values[i]);
    if (!is_mc(L, z)) throw std::logic_error("augmentation does not give a Maurer-Cartan element");
    return z;
}

Augmentation evaluate_map(const AlgebraMap& f, int point) {
    Augmentation out;
    for (int g = 0; g < f.domain.size(); ++g) {
        Scalar v = 0;
        for (const auto& [m, c] : f.images[g]) {
            if (f.codomain.degree(m) != 0) continue;
            Scalar term = c;
            for (char x : m) term *= f.codomain.gens[static_cast<unsigned char>(x)].degree == 0 ? Scalar(point) : Scalar(0);
            v += term;
        }
        out.values.push_back(v);
    }
    return out;
}

namespace {

// Coefficient list of a polynomial in the single generator g.
std::vector<Scalar> univariate(const Poly& p, int g) {
    std::vector<Scalar> out;
    for (const auto& [m, c] : p) {
        for (char x : m)
            if (static_cast<unsigned char>(x) != g) throw std::logic_error("polynomial involves another generator");
        if (out.size() <= m.size()) out.resize(m.size() + 1);
        out[m.size()] += c;
    }
    return out;
}

Poly from_univariate(const std::vector<Scalar>& coeffs, int g) {
    Poly p;
    for (size_t n = 0; n < coeffs.size(); ++n) add_term(p, Monomial(n, static_cast<char>(g)), coeffs[n]);
    return p;
}

}  // namespace

AlgebraMap based_lift(const FreeCDGA& A, const Augmentation& f, const std::vector<Scalar>& phi) {
    if (!is_augmentation(A, f)) throw std::invalid_argument("not an augmentation");
    if (phi.empty() || phi[0] != 0) throw std::invalid_argument("the lift polynomial needs zero constant term");
    Scalar at1 = 0;
    for (const auto& c : phi) at1 += c;
    if (at1 != 1) throw std::invalid_argument("the lift polynomial must take the value 1 at 1");
    int len = 0;
    for (const auto& d : A.diff)
        for (const auto& [m, c] : d) len = std::max(len, static_cast<int>(m.size()));
    FreeCDGA B = based_target(std::max(8, len * static_cast<int>(phi.size()) + 2));
    AlgebraMap out{A, B, std::vector<Poly>(A.size())};
    Poly Phi = from_univariate(phi, 0);
    for (int g = 0; g < A.size(); ++g)
        if (A.gens[g].degree == 0) out.images[g] = scaled(Phi, f.values[g]);
    for (int g = 0; g < A.size(); ++g) {
        if (A.gens[g].degree != 1) continue;
        auto P = univariate(out.apply(A.diff[g]), 0);
        // divide by x^2 - x
        std::vector<Scalar> r(P.size() > 2 ? P.size() - 2 : 0);
        for (int n = static_cast<int>(P.size()) - 1; n >= 2; --n) {
            Scalar q = P[n];
            r[n - 2] = q;
            P[n] = 0;
            P[n - 1] += q;
        }
        for (const auto& c : P)
            if (c != 0) throw std::logic_error("image of the differential is not divisible by x(x-1)");
        out.images[g] = mul(B, generator_poly(1, 2), from_univariate(r, 0));
    }
    if (!chain_map_report(out).empty()) throw std::logic_error("based lift is not a chain map");
    return out;
}

bool homotopy_check(const Augmentation& f0, const Augmentation& f1, const AlgebraMap& H) {
    if (H.codomain.size() != 2 || H.codomain.gens[0].name != "t" || H.codomain.gens[1].name != "dt")
        throw std::invalid_argument("homotopies take values in interval forms");
    if (!chain_map_report(H).empty()) throw std::invalid_argument("homotopy is not a chain map");
    return evaluate_map(H, 0) == f0 && evaluate_map(H, 1) == f1;
}

GammaReport gamma_map(int W, int D) {
    if (W < 2) throw std::invalid_argument("gamma map needs W >= 2");
    LieModel M = dgl_to_linfty(build_ls(W), W);
    GammaReport r;
    r.cochains = cochains(M.L, 2);
    FreeCDGA T = interval_forms(D);
    r.gamma = AlgebraMap{r.cochains, T, std::vector<Poly>(r.cochains.size())};
    int a = M.L.index_of("a"), b = M.L.index_of("b"), x = M.L.index_of("x");
    Poly ta = generator_poly(0);
    add_term(ta, Monomial{}, Scalar(-1));
    r.gamma.images[a] = ta;
    r.gamma.images[b] = generator_poly(0, -1);
    r.gamma.images[x] = generator_poly(1);
    for (int g = 0; g < r.cochains.size(); ++g)
        if (M.lengths[g] <= W - 1) r.safe_generators.push_back(g);
    r.chain_violations = chain_map_report(r.gamma, r.safe_generators);
    r.at0 = evaluate_map(r.gamma, 0);
    r.at1 = evaluate_map(r.gamma, 1);
    r.phi_a = augmentation_from_mc(M.L, basis_vector(a));
    r.phi_b = augmentation_from_mc(M.L, basis_vector(b));
    // (-x) * a = b, so the gauge path runs from a to b
    FormsTensorAlgebra F = tensor_with_forms(M.L, std::max(D, W + 1));
    r.path_map = forms_morphism_from_mc(F, gauge_path(F, basis_vector(x, -1), basis_vector(a)));
    r.path_is_homotopy = homotopy_check(r.phi_a, r.phi_b, r.path_map);
    return r;
}

Localization localize(const FreeCDGA& A, const Augmentation& f) {
    if (!is_augmentation(A, f)) throw std::invalid_argument("not an augmentation");
    std::vector<int> v1;
    std::map<int, int> pos1;
    for (int g = 0; g < A.size(); ++g)
        if (A.gens[g].degree == -1) {
            pos1[g] = static_cast<int>(v1.size());
            v1.push_back(g);
        }
    // substitute the augmentation and kill negative superscript degrees
    AlgebraMap sub{A, A, std::vector<Poly>(A.size())};
    for (int g = 0; g < A.size(); ++g) {
        int d = A.gens[g].degree;
        if (d == 0) sub.images[g] = constant_poly(f.values[g]);
        else if (d < 0) sub.images[g] = generator_poly(g);
    }
    Echelon<int> dbar;
    for (int g = 0; g < A.size(); ++g) {
        if (A.gens[g].degree != 0) continue;
        SparseVec row;
        for (const auto& [m, c] : sub.apply(A.diff[g])) {
            if (m.size() != 1) throw std::logic_error("linear part expected in degree 1");
            row.emplace(pos1.at(static_cast<unsigned char>(m[0])), c);
        }
        dbar.insert(row);
    }
    Localization out;
    out.algebra.P = A.P;
    AlgebraMap q{A, FreeCDGA{}, std::vector<Poly>(A.size())};
    std::map<int, int> newgen;
    for (int g = 0; g < A.size(); ++g) {
        int d = A.gens[g].degree;
        if (d < -1 || (d == -1 && !dbar.rows().count(pos1[g]))) {
            newgen[g] = out.algebra.add_generator(A.gens[g].name, d);
            if (d == -1) out.coker_basis.push_back(generator_poly(g));
        }
    }
    for (int g = 0; g < A.size(); ++g) {
        int d = A.gens[g].degree;
        if (d == 0) {
            q.images[g] = constant_poly(f.values[g]);
        } else if (d == -1) {
            SparseVec red = dbar.reduce(SparseVec{{pos1[g], Scalar(1)}});
            for (const auto& [j, c] : red) add_term(q.images[g], Monomial(1, static_cast<char>(newgen.at(v1[j]))), c);
        } else if (d < -1) {
            q.images[g] = generator_poly(newgen.at(g));
        }
    }
    q.codomain = out.algebra;
    for (const auto& [g, n] : newgen) out.algebra.set_diff(n, q.apply(A.diff[g]));
    return out;
}

std::map<int, int> generator_profile(const FreeCDGA& A) {
    std::map<int, int> out;
    for (const auto& g : A.gens) ++out[-g.degree];
    return out;
}

AlgebraMap forms_morphism_from_mc(const FormsTensorAlgebra& F, const SparseVec& phi) {
    if (!is_mc(F.L, phi)) throw std::invalid_argument("not a Maurer-Cartan element of the forms algebra");
    return forms_morphism(F, phi);
}

AlgebraMap forms_morphism(const FormsTensorAlgebra& F, const SparseVec& phi) {
    FreeCDGA C = cochains(F.base, std::max(F.D, std::max(F.base.kmax(), 1)));
    FreeCDGA T = interval_forms(F.D);
    AlgebraMap psi{C, T, std::vector<Poly>(C.size())};
    for (int i = 0; i < F.base_dim; ++i) {
        int deg = F.base.degree(i);
        if (deg != -1 && deg != 0) continue;
        bool dt = deg == 0;
        for (int j = 0; j <= F.D; ++j) {
            int idx = F.index(i, j, dt);
            if (idx < 0) continue;
            auto it = phi.find(idx);
            if (it == phi.end()) continue;
            Monomial m(j, static_cast<char>(0));
            if (dt) m.push_back(static_cast<char>(1));
            add_term(psi.images[i], m, dt ? -it->second : it->second);
        }
    }
    return psi;
}

SparseVec mc_from_forms_morphism(const FormsTensorAlgebra& F, const AlgebraMap& psi) {
    if (!chain_map_report(psi).empty()) throw std::invalid_argument("not a chain map");
    SparseVec phi;
    for (int i = 0; i < F.base_dim; ++i) {
        for (const auto& [m, c] : psi.images.at(i)) {
            bool dt = !m.empty() && static_cast<unsigned char>(m.back()) == 1;
            int j = static_cast<int>(m.size()) - (dt ? 1 : 0);
            add_term(phi, F.index(i, j, dt), dt ? -c : c);
        }
    }
    return phi;
}

}  // namespace rht
