#include "rht/fleet.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rht {

namespace {

DGLPresentation source_dgl(int which) {
    DGLPresentation D;
    D.alph.max_len = which == 2 ? 2 : 3;
    int a = D.add_generator("a", -1);
    if (which == 2) {
        int b = D.add_generator("b", -1);
        D.set_diff(a, scaled(bracket(D.alph, gen(a), gen(a)), frac(-1, 2)));
        D.set_diff(b, scaled(bracket(D.alph, gen(b), gen(b)), frac(-1, 2)));
        return D;
    }
    int c = D.add_generator("c", 0);
    D.set_diff(a, scaled(bracket(D.alph, gen(a), gen(a)), frac(-1, 2)));
    if (which == 0) D.set_diff(c, scaled(bracket(D.alph, gen(a), gen(c)), Scalar(-1)));
    return D;
}

int weight(const Monomial& m, const std::vector<int>& weights) {
    int w = 0;
    for (char c : m) w += weights[static_cast<unsigned char>(c)];
    return w;
}

// x1 (weight 1), x2 (weight 2) in degree -1 and y1, y2 in degree -2; brackets
// only land in y and vanish on y. x1 is made Maurer-Cartan through l_1.
LInfinityAlgebra two_step(std::mt19937_64& rng, std::vector<int>& weights) {
    LInfinityAlgebra L;
    L.add_basis("x1", -1);
    L.add_basis("x2", -1);
    L.add_basis("y1", -2);
    L.add_basis("y2", -2);
    weights = {1, 2, 4, 4};
    L.brackets.resize(5);
    std::uniform_int_distribution<int> num(-2, 2);
    auto degs = L.degrees();
    for (int k = 1; k <= 4; ++k) {
        for (const auto& t : sorted_tuples(degs, k)) {
            int w = 0;
            bool xs = true;
            for (int i : t) {
                w += weights[i];
                xs = xs && i < 2;
            }
            if (!xs || w > 4 || t == Tuple{0}) continue;
            SparseVec v;
            for (int y : {2, 3}) add_term(v, y, Scalar(num(rng)));
            if (!v.empty()) L.set_bracket(t, v);
        }
    }
    SparseVec r;
    for (int k = 2; k <= 4; ++k) axpy(r, -1 / factorial(k), L.eval_basis(Tuple(k, 0)));
    if (!r.empty()) L.set_bracket({0}, r);
    return L;
}

}  // namespace

AlgebraMap conjugate(const FreeCDGA& A, const std::vector<Poly>& perturbation, const std::vector<int>& weights) {
    int n = A.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return weights[x] < weights[y]; });
    AlgebraMap theta{A, A, std::vector<Poly>(n)};
    AlgebraMap inverse{A, A, std::vector<Poly>(n)};
    for (int g : order) {
        for (const auto& [m, c] : perturbation[g]) {
            if (m.size() < 2 || weight(m, weights) != weights[g] || A.degree(m) != A.gens[g].degree)
                throw std::invalid_argument("perturbation must be decomposable and of the generator's weight and degree");
            for (char x : m)
                if (weights[static_cast<unsigned char>(x)] >= weights[g]) throw std::logic_error("perturbation is not triangular");
        }
        theta.images[g] = generator_poly(g);
        axpy(theta.images[g], Scalar(1), perturbation[g]);
        // inverse(v) = v - inverse(p(v)); p only involves lighter generators
        inverse.images[g] = generator_poly(g);
        axpy(inverse.images[g], Scalar(-1), inverse.apply(perturbation[g]));
    }
    FreeCDGA B = A;
    for (int g = 0; g < n; ++g) B.set_diff(g, inverse.apply(apply_d(A, theta.images[g])));
    theta.domain = B;
    return theta;
}

FleetMember fleet_member(std::mt19937_64& rng, int source, int density) {
    FleetMember out;
    out.name = std::string("src") + std::to_string(source);
    if (source == 3) {
        out.source = two_step(rng, out.weights);
    } else {
        LieModel M = dgl_to_linfty(source_dgl(source), source == 2 ? 2 : 3);
        out.source = M.L;
        out.weights = M.lengths;
    }
    const LInfinityAlgebra& S = out.source;
    FreeCDGA A = cochains_literal(S, 4);
    std::uniform_int_distribution<int> coin(0, density);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    std::vector<Poly> p(A.size());
    for (int g = 0; g < A.size(); ++g) {
        for (const auto& m : monomials(A, A.gens[g].degree, 4)) {
            if (m.size() < 2 || weight(m, out.weights) != out.weights[g]) continue;
            if (coin(rng) == 0) continue;
            add_term(p[g], m, frac(num(rng), den(rng)));
        }
    }
    AlgebraMap theta = conjugate(A, p, out.weights);
    out.L = brackets_from_cochains(theta.domain, S.basis);
    out.iso = morphism_from_cochains(theta, S, out.L);
    out.source_mc.push_back({});
    out.source_mc.push_back(basis_vector(S.index_of(source == 3 ? "x1" : "a")));
    if (source == 2) out.source_mc.push_back(basis_vector(S.index_of("b")));
    for (const auto& z : out.source_mc)
        if (!is_mc(out.source, z)) throw std::logic_error("fleet source element is not Maurer-Cartan");
    return out;
}

PointedDGL random_point_dgl(std::mt19937_64& rng, int N) {
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<int> num(-2, 2);
    std::uniform_int_distribution<int> mode(0, 2);
    DGLPresentation D;
    D.alph.max_len = N;
    int u = D.add_generator("u", -1);
    int d1 = deg(rng), d2 = deg(rng);
    if (d1 > d2) std::swap(d1, d2);
    int c1 = D.add_generator("c1", d1);
    int c2 = D.add_generator("c2", d2);
    D.set_diff(u, scaled(bracket(D.alph, gen(u), gen(u)), frac(-1, 2)));
    Scalar lambda(num(rng));
    if (d2 == d1 + 1) D.set_diff(c2, gen(c1, lambda));
    else if (d1 == 1 && d2 == 3) D.set_diff(c2, scaled(bracket(D.alph, gen(c1), gen(c1)), lambda));
    PointedDGL out;
    out.name = "Lib(u,c1,c2) |c| = " + std::to_string(d1) + "," + std::to_string(d2);
    switch (mode(rng)) {
    case 0:
        out.dgl = D;
        out.z = gen(u);
        break;
    case 1:
        out.dgl = perturb_dgl(D, gen(u));
        out.z = gen(u, -1);
        out.name += " twisted";
        break;
    default:
        out.dgl = D;
        out.name += " at 0";
        break;
    }
    if (!dgl_mc_residual(out.dgl, out.z).empty()) throw std::logic_error("random point is not Maurer-Cartan");
    return out;
}

std::vector<FleetMember> build_fleet(unsigned long long seed, int count) {
    std::mt19937_64 rng(seed);
    std::vector<FleetMember> out;
    for (int i = 0; i < count; ++i) out.push_back(fleet_member(rng, i % 4));
    return out;
}

}  // namespace rht
