#include "rht/acceptance.hpp"

#include <random>
#include <sstream>

#include "rht/fleet.hpp"
#include "rht/ls.hpp"
#include "rht/models.hpp"

namespace rht {

namespace {

struct Collector {
    CriterionResult r;
    Collector(int id, std::string title) {
        r.id = id;
        r.title = std::move(title);
        r.pass = true;
    }
    void check(bool ok, const std::string& what) {
        r.details.push_back(what + (ok ? ": ok" : ": FAILED"));
        if (!ok) r.pass = false;
    }
    void note(const std::string& what) { r.details.push_back(what); }
};

std::string list(const std::vector<int>& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

CriterionResult bernoulli_suite() {
    Collector c(1, "Bernoulli numbers");
    auto B = bernoulli_table(12);
    bool recursion = true, convention = true, odd = true;
    for (int n = 1; n <= 12; ++n) {
        Scalar s = 0;
        for (int i = 0; i < n; ++i) s += B[n - 1 - i] / (factorial(n - 1 - i) * factorial(i + 2));
        if (-B[n] / factorial(n) != s) recursion = false;
    }
    for (int m = 2; m <= 12; ++m) {
        Scalar s = 0;
        for (int k = 0; k < m; ++k) s += binomial(m, k) * B[k];
        if (s != 0) convention = false;
    }
    for (int n = 3; n <= 12; n += 2)
        if (B[n] != 0) odd = false;
    c.check(B[0] == 1 && recursion, "recursion n<=12");
    c.check(convention, "sum binom(m,k) B_k = 0 for 2<=m<=12");
    c.check(B[1] == frac(-1, 2) && B[2] == frac(1, 6) && B[4] == frac(-1, 30), "B1=-1/2 B2=1/6 B4=-1/30");
    c.check(odd, "odd B_n = 0 for n>=3");
    return c.r;
}

CriterionResult ls_consistency(const AcceptanceOptions& opt) {
    Collector c(2, "LS consistency");
    std::vector<int> Ws = opt.level == Level::Ci ? std::vector<int>{4, 6} : std::vector<int>{4, 6, 8};
    for (int W : Ws) {
        c.check(d_squared_report(build_ls(W)).empty(), "LS d^2 W=" + std::to_string(W));
        c.check(d_squared_report(build_cylinder(W)).empty(), "cylinder d^2 W=" + std::to_string(W));
        c.check(d_squared_report(build_interval(W)).empty(), "interval d^2 W=" + std::to_string(W));
    }
    return c.r;
}

CriterionResult enveloping() {
    Collector c(3, "enveloping agreement");
    auto m = enveloping_compare(build_ls(6), build_cylinder(6));
    c.check(m.empty(), "word-for-word through length 6 (" + std::to_string(m.size()) + " mismatches)");
    return c.r;
}

CriterionResult gauge_identity() {
    Collector c(4, "gauge identity");
    auto L = build_ls(6);
    Tensor a = gen(L.index_of("a")), b = gen(L.index_of("b")), x = gen(L.index_of("x"));
    c.check(gauge(L, x, a) == b, "gauge(x,a) = b at W=6");
    c.note(std::string("gauge(x,b) = a: ") + (gauge(L, x, b) == a ? "holds" : "fails"));
    c.note(std::string("gauge(-x,a) = b: ") + (gauge(L, scaled(x, Scalar(-1)), a) == b ? "holds" : "fails"));
    return c.r;
}

CriterionResult transfer_golden(const AcceptanceOptions& opt) {
    Collector c(5, "transfer golden");
    int kmax = opt.level == Level::Ci ? 5 : 6;
    for (int k = 2; k <= kmax; ++k) {
        auto r = verify_diagonals(k, k + 3, TreeSignRule::OddSubtree);
        c.check(r.pass(), "k=" + std::to_string(k) + " matches closed form, " + std::to_string(r.contributing_trees) +
                              " contributing trees");
        if (k >= 3) c.check(r.computed[0].empty() && r.computed[1].empty(), "Delta_k y = Delta_k z = 0, k=" + std::to_string(k));
        if (k >= 4 && k % 2 == 0) c.check(r.computed[2].empty(), "Delta_k c = 0, k=" + std::to_string(k));
        if (k == 2) {
            // y, z, c are letters 0, 1, 2
            Tensor y, z, cc;
            add_term(y, Word{0, 0}, Scalar(-1));
            add_term(z, Word{1, 1}, Scalar(-1));
            for (char e : {0, 1}) {
                add_term(cc, Word{2, e}, frac(-1, 2));
                add_term(cc, Word{e, 2}, frac(-1, 2));
            }
            c.check(r.computed == std::vector<Tensor>{y, z, cc}, "k=2 values");
        }
    }
    return c.r;
}

CriterionResult contraction() {
    Collector c(6, "contraction identities");
    auto v = contraction_identities(build_contraction(10));
    c.check(v.empty(), "J=10 (" + std::to_string(v.size()) + " violations)");
    return c.r;
}

SparseVec random_degree_minus_one(const LInfinityAlgebra& L, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    SparseVec z;
    for (int i = 0; i < L.dim(); ++i)
        if (L.degree(i) == -1) add_term(z, i, Scalar(num(rng)));
    return z;
}

CriterionResult canonical_suite(const AcceptanceOptions& opt) {
    Collector c(7, "canonical morphism suite");
    auto fleet = build_fleet(opt.seed, 20);
    std::mt19937_64 rng(opt.seed ^ 0x5eedULL);
    int size_ok = 0, first = 0, second = 0, reordered = 0, closed = 0, total = 0;
    int pushed = 0, pushed_mc = 0, co_pushed = 0, co_pushed_mc = 0;
    for (const auto& m : fleet) {
        if (m.L.dim() <= 6 && m.L.kmax() <= 4) ++size_ok;
        SparseVec z = random_degree_minus_one(m.L, rng);
        auto phi = canonical_mc_morphism(m.L, z, 6);
        ++total;
        bool f = true, s = true, so = true, cf = true;
        for (const auto& ck : check_canonical_identities(phi, z, 6)) {
            f = f && ck.first;
            s = s && ck.second;
            so = so && ck.second_reordered;
        }
        for (int k = 1; k <= 6; ++k) {
            std::vector<SparseVec> args{basis_vector(1)};
            args.insert(args.end(), k - 1, basis_vector(0));
            if (phi.eval(args) != canonical_closed_form(m.L, z, k)) cf = false;
        }
        first += f;
        second += s;
        reordered += so;
        closed += cf;
        for (const auto& w : m.source_mc) {
            ++pushed;
            pushed_mc += is_mc(m.L, mc_pushforward(m.iso, w));
            if (coalgebra_mc_residual(m.source, w).empty()) {
                ++co_pushed;
                co_pushed_mc += coalgebra_mc_residual(m.L, coalgebra_pushforward(m.iso, w)).empty();
            }
        }
    }
    auto frac_str = [](int a, int b) { return std::to_string(a) + "/" + std::to_string(b); };
    c.check(size_ok == 20, "20 algebras with basis<=6, K_max<=4 (" + frac_str(size_ok, 20) + ")");
    c.check(closed == total, "recursion = closed form through arity 6 (" + frac_str(closed, total) + ")");
    c.check(first == total, "first identity through arity 6 (" + frac_str(first, total) + ")");
    c.check(second == total, "second identity through arity 6 (" + frac_str(second, total) + ")");
    c.note("second identity with z first: " + frac_str(reordered, total));
    c.check(pushed_mc == pushed, "pushforward of MC is MC (" + frac_str(pushed_mc, pushed) + ")");
    c.note("coalgebra pushforward of coalgebra-MC: " + frac_str(co_pushed_mc, co_pushed));
    return c.r;
}

CriterionResult cochain_anchors(const AcceptanceOptions& opt) {
    Collector c(8, "cochain anchors");
    auto B = cochains(lib_u(), 6);
    Poly dy;
    add_term(dy, Monomial{0, 0}, frac(1, 2));
    add_term(dy, Monomial{0}, frac(-1, 2));
    c.check(B.size() == 2 && B.gens[0].degree == 0 && B.gens[1].degree == 1 && B.diff[0].empty() && B.diff[1] == dy,
            "cochains(Lib(u)) = Lambda(x,y), dy = (x^2-x)/2");
    bool h = true;
    for (const auto& e : cohomology(B, -3, 3))
        if (e.dim != (e.degree == 0 ? 2 : 0)) h = false;
    c.check(h, "H^0 = 2, zero elsewhere in [-3,3] at P=6");
    int agree = 0, zero = 0;
    auto fleet = build_fleet(opt.seed, 20);
    for (const auto& m : fleet) {
        bool d2 = d_squared_report(cochains(m.L, 4)).empty();
        bool jac = true;
        for (int n = 1; n <= 4; ++n) jac = jac && jacobi_report(m.L, n).empty();
        zero += d2;
        agree += d2 == jac;
    }
    c.check(zero == 20, "d^2 = 0 on the 20 random algebras (" + std::to_string(zero) + "/20)");
    c.check(agree == 20, "d^2 result agrees with jacobi_report (" + std::to_string(agree) + "/20)");
    return c.r;
}

CriterionResult homotopy_bridge() {
    Collector c(9, "homotopy bridge");
    auto g = gamma_map(5);
    c.check(g.chain_violations.empty(),
            "Gamma chain map on safe duals at W=5 (" + std::to_string(g.chain_violations.size()) + " violations)");
    c.check(g.at0 == g.phi_a, "eps_0 Gamma = phi_a");
    c.check(g.at1 == g.phi_b, "eps_1 Gamma = phi_b");
    c.note(std::string("gauge path map is a homotopy phi_a ~ phi_b: ") + (g.path_is_homotopy ? "yes" : "no"));
    auto T = based_target(6);
    auto lift = based_lift(T, Augmentation{{1, 0}}, {0, 1});
    c.check(lift.images[1] == generator_poly(1), "self-lift f(y) = y");
    return c.r;
}

CriterionResult localization(const AcceptanceOptions& opt) {
    Collector c(10, "localization coherence");
    std::mt19937_64 rng(opt.seed);
    int ok = 0;
    for (int i = 0; i < 10; ++i) {
        auto p = random_point_dgl(rng);
        auto M = dgl_to_linfty(p.dgl, 3);
        auto z = M.coordinates(p.z);
        auto C = cochains(M.L, 4);
        auto f = augmentation_from_mc(M.L, z);
        if (!is_augmentation(C, f)) continue;
        auto loc = localize(C, f);
        ok += generator_profile(loc.algebra) == generator_profile(cochains(truncate_positive(perturb(M.L, z)).L, 4));
    }
    c.check(ok == 10, "10 random DGLs (" + std::to_string(ok) + "/10)");
    return c.r;
}

bool same_presentation(const DGLPresentation& P, const DGLPresentation& Q) {
    if (P.alph.size() != Q.alph.size()) return false;
    std::vector<Tensor> rename(P.alph.size());
    for (int g = 0; g < P.alph.size(); ++g) {
        int h = Q.index_of(P.alph.gens[g].name);
        if (h < 0 || Q.alph.gens[h].degree != P.alph.gens[g].degree) return false;
        rename[g] = gen(h);
    }
    for (int g = 0; g < P.alph.size(); ++g)
        if (apply_morphism(Q.alph, rename, P.diff[g]) != Q.diff[Q.index_of(P.alph.gens[g].name)]) return false;
    return true;
}

CriterionResult model_assembly(const AcceptanceOptions& opt) {
    Collector c(11, "model assembly");
    std::vector<int> matched, unmatched;
    for (int n = 1; n <= 4; ++n) {
        auto A = assemble({ComponentSpec::of_sphere(n)}, ComponentSpec::of_sphere(n), 6);
        (same_presentation(naive_sphere_union({n, n}, 0, 6), A.M) ? matched : unmatched).push_back(n);
    }
    c.check(unmatched.empty(), "two-sphere presentation with da_i = [a_i,u_i] (matches n=" + list(matched) +
                                   (unmatched.empty() ? "" : "; differs n=" + list(unmatched)) + ")");
    std::vector<ComponentSpec> comps{ComponentSpec::of_sphere(3)};
    auto base = ComponentSpec::of_sphere(2);
    auto A = assemble(comps, base, 6);
    bool mc = true;
    for (const auto& z : A.mc_elements) mc = mc && dgl_mc_residual(A.M, z).empty();
    c.check(mc, "mc_residual(M, -u_j) = 0");
    std::vector<int> sweep = opt.level == Level::Ci ? std::vector<int>{4, 6} : std::vector<int>{4, 6, 8};
    for (int which = 0; which <= 1; ++which) {
        auto r = component_localize(comps, base, which, 0, 3, sweep);
        c.check(r.stable && r.agree, std::string(which ? "H(M^(-u_1)) = H(L_1)" : "H(M^(0)) = H(L)") +
                                         " in [0..3], maxlen " + list(sweep));
    }
    DGLPresentation L;
    L.alph.max_len = sweep.back() + 1;
    L.add_generator("a", 1);
    auto p = acyclicity_probe(L, 0, 2, sweep);
    c.check(p.stabilized_zero, "(Lib(u)*<a>)^u acyclic in [0..2] (filtered truncation)");
    return c.r;
}

CriterionResult determinism(const AcceptanceOptions& opt) {
    Collector c(12, "determinism and round-trip");
    int ok = 0, total = 0;
    auto rt = [&](const auto& x, auto same) {
        using T = std::decay_t<decltype(x)>;
        std::string text = export_object(x);
        T back = import_object<T>(text);
        ++total;
        ok += same(back, x) && export_object(back) == text && export_object(x) == text;
    };
    auto same_dgl = [](const DGLPresentation& a, const DGLPresentation& b) {
        return a.W() == b.W() && a.alph.gens == b.alph.gens && a.diff == b.diff;
    };
    auto eq = [](const auto& a, const auto& b) { return a == b; };
    auto same_map = [](const AlgebraMap& a, const AlgebraMap& b) {
        return a.domain == b.domain && a.codomain == b.codomain && a.images == b.images;
    };
    auto same_mor = [](const LInfinityMorphism& a, const LInfinityMorphism& b) {
        return a.source == b.source && a.target == b.target && a.comps == b.comps;
    };
    auto same_coalg = [](const AInfinityCoalgebra& a, const AInfinityCoalgebra& b) {
        return a.basis == b.basis && a.delta == b.delta;
    };
    for (int W : {4, 6}) {
        rt(build_ls(W), same_dgl);
        rt(build_cylinder(W), same_dgl);
        rt(build_interval(W), same_dgl);
    }
    rt(interval_coalgebra(5), same_coalg);
    rt(lib_u(), eq);
    rt(cochains(lib_u(), 6), eq);
    rt(LInfinityAlgebra{}, eq);
    for (const auto& m : build_fleet(opt.seed, 4)) {
        rt(m.L, eq);
        rt(m.iso, same_mor);
        rt(cochains(m.L, 4), eq);
        rt(cochains_of_morphism(m.iso, 4), same_map);
    }
    rt(assemble({ComponentSpec::of_sphere(3)}, ComponentSpec::of_sphere(2), 5).M, same_dgl);
    c.check(ok == total, "golden objects round-trip (" + std::to_string(ok) + "/" + std::to_string(total) + ")");
    std::string first = canonical_dump(localization(opt).to_json()) + canonical_dump(canonical_suite(opt).to_json());
    std::string second = canonical_dump(localization(opt).to_json()) + canonical_dump(canonical_suite(opt).to_json());
    c.check(first == second, "repeated randomized reports byte-identical");
    return c.r;
}

}  // namespace

std::string CriterionResult::line() const {
    std::ostringstream os;
    os << "criterion " << id << " [" << title << "]: " << (pass ? "PASS" : "FAIL");
    std::string sep = " -- ";
    for (const auto& d : details) {
        os << sep << d;
        sep = "; ";
    }
    return os.str();
}

Json CriterionResult::to_json() const {
    return {{"id", id}, {"title", title}, {"pass", pass}, {"details", details}};
}

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
    switch (id) {
    case 1: return bernoulli_suite();
    case 2: return ls_consistency(opt);
    case 3: return enveloping();
    case 4: return gauge_identity();
    case 5: return transfer_golden(opt);
    case 6: return contraction();
    case 7: return canonical_suite(opt);
    case 8: return cochain_anchors(opt);
    case 9: return homotopy_bridge();
    case 10: return localization(opt);
    case 11: return model_assembly(opt);
    case 12: return determinism(opt);
    default: throw std::invalid_argument("no criterion " + std::to_string(id));
    }
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id, opt));
    return out;
}

bool recorded_outcome(int id) {
    switch (id) {
    case 4:   // the action carries b to a along x
    case 7:   // second identity and the naive pushforward
    case 9:   // Gamma is not a chain map
    case 11:  // odd spheres in the naive presentation
        return false;
    default: return true;
    }
}

}  // namespace rht
