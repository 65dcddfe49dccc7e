#include "rht/models.hpp"

#include <stdexcept>

#include "rht/ls.hpp"

namespace rht {

ComponentSpec ComponentSpec::of_sphere(int n) {
    if (n < 1) throw std::invalid_argument("sphere dimension must be at least 1");
    ComponentSpec c;
    c.sphere = n;
    return c;
}

ComponentSpec ComponentSpec::of_dgl(const DGLPresentation& D) {
    for (const auto& g : D.alph.gens)
        if (g.degree < 0) throw std::invalid_argument("components must be non-negatively graded");
    ComponentSpec c;
    c.dgl = D;
    return c;
}

DGLPresentation ComponentSpec::presentation(const std::string& name, int W) const {
    if (sphere == 0) {
        DGLPresentation D = dgl;
        D.alph.max_len = W;
        for (auto& d : D.diff) d = truncate(d, W);
        return D;
    }
    DGLPresentation D;
    D.alph.max_len = W;
    D.add_generator(name, sphere - 1);
    return D;
}

namespace {

DGLPresentation adjoin_unchecked(const DGLPresentation& L, const std::string& u) {
    DGLPresentation U;
    U.alph.max_len = L.W();
    int ui = U.add_generator(u, -1);
    U.set_diff(ui, scaled(bracket(U.alph, gen(ui), gen(ui)), frac(-1, 2)));
    return coproduct(U, L);
}

}  // namespace

DGLPresentation point_adjoin(const DGLPresentation& L, const std::string& u) {
    for (const auto& g : L.alph.gens)
        if (g.degree < 0) throw std::invalid_argument("point_adjoin needs a non-negatively graded DGL");
    return adjoin_unchecked(L, u);
}

DGLPresentation perturbed_component(const DGLPresentation& L, const std::string& u) {
    DGLPresentation P = point_adjoin(L, u);
    DGLPresentation out = perturb_dgl(P, gen(P.index_of(u)));
    // the same differential written out: d_u(u) = [u,u]/2, d_u(x) = dx + [u,x]
    int ui = out.index_of(u);
    Tensor expect = scaled(bracket(out.alph, gen(ui), gen(ui)), frac(1, 2));
    if (truncate(expect, out.W()) != out.diff[ui]) throw std::logic_error("perturbed differential of u disagrees");
    for (int g = 0; g < out.alph.size(); ++g) {
        if (g == ui) continue;
        Tensor e = P.diff[g];
        axpy(e, Scalar(1), bracket(out.alph, gen(ui), gen(g)));
        if (truncate(e, out.W()) != out.diff[g]) throw std::logic_error("perturbed differential disagrees");
    }
    if (!d_squared_report(out).empty()) throw std::logic_error("perturbed component has d^2 != 0");
    return out;
}

AssembledModel assemble(const std::vector<ComponentSpec>& components, const ComponentSpec& base, int W) {
    AssembledModel out;
    out.M.alph.max_len = W;
    for (size_t j = 0; j < components.size(); ++j) {
        std::string u = "u" + std::to_string(j + 1);
        DGLPresentation Mj = perturbed_component(components[j].presentation("a" + std::to_string(j + 1), W), u);
        std::vector<std::string> renamed;
        int before = out.M.alph.size();
        out.M = coproduct(out.M, Mj, &renamed);
        out.u_names.push_back(out.M.alph.gens[before].name);
        for (int g = before; g < out.M.alph.size(); ++g) out.component_of.push_back(static_cast<int>(j));
        out.renamed.insert(out.renamed.end(), renamed.begin(), renamed.end());
    }
    std::vector<std::string> renamed;
    int before = out.M.alph.size();
    out.M = coproduct(out.M, base.presentation("a0", W), &renamed);
    for (int g = before; g < out.M.alph.size(); ++g) out.component_of.push_back(-1);
    out.renamed.insert(out.renamed.end(), renamed.begin(), renamed.end());
    out.mc_elements.push_back({});
    for (const auto& u : out.u_names) out.mc_elements.push_back(gen(out.M.index_of(u), -1));
    for (const auto& z : out.mc_elements)
        if (!dgl_mc_residual(out.M, z).empty()) throw std::logic_error("assembled Maurer-Cartan element fails");
    return out;
}

DGLPresentation naive_sphere_union(const std::vector<int>& n, int i0, int W) {
    DGLPresentation D;
    D.alph.max_len = W;
    std::vector<int> a(n.size()), u(n.size(), -1);
    for (size_t i = 0; i < n.size(); ++i) {
        if (n[i] < 1) throw std::invalid_argument("sphere dimension must be at least 1");
        if (static_cast<int>(i) != i0) u[i] = D.add_generator("u" + std::to_string(i), -1);
        a[i] = D.add_generator("a" + std::to_string(i), n[i] - 1);
    }
    for (size_t i = 0; i < n.size(); ++i) {
        if (u[i] < 0) continue;
        D.set_diff(u[i], scaled(bracket(D.alph, gen(u[i]), gen(u[i])), frac(1, 2)));
        D.set_diff(a[i], bracket(D.alph, gen(a[i]), gen(u[i])));
    }
    return D;
}

namespace {

bool stable_pair(const std::vector<std::vector<HomologyEntry>>& runs) {
    if (runs.size() < 2) return false;
    const auto& x = runs[runs.size() - 1];
    const auto& y = runs[runs.size() - 2];
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i].dim != y[i].dim) return false;
    return true;
}

}  // namespace

LocalizationReport component_localize(const std::vector<ComponentSpec>& components, const ComponentSpec& base,
                                       int which, int lo, int hi, const std::vector<int>& maxlens) {
    if (which < 0 || which > static_cast<int>(components.size())) throw std::invalid_argument("unknown Maurer-Cartan element");
    if (lo < 0) throw std::invalid_argument("localized homology lives in degrees >= 0");
    LocalizationReport r;
    r.maxlens = maxlens;
    for (int N : maxlens) {
        AssembledModel A = assemble(components, base, N + 1);
        DGLPresentation Mz = which == 0 ? A.M : perturb_dgl(A.M, A.mc_elements[which]);
        r.model.push_back(dgl_homology(Mz, lo, hi, N, HomologyMode::Filtered));
        const ComponentSpec& c = which == 0 ? base : components[which - 1];
        r.component.push_back(dgl_homology(c.presentation("a", N), lo, hi, N));
    }
    r.stable = stable_pair(r.model) && stable_pair(r.component);
    r.agree = !r.model.empty();
    if (r.agree)
        for (size_t i = 0; i < r.model.back().size(); ++i)
            if (r.model.back()[i].dim != r.component.back()[i].dim) r.agree = false;
    return r;
}

AcyclicityReport acyclicity_probe(const DGLPresentation& L, int lo, int hi, const std::vector<int>& maxlens) {
    AcyclicityReport r;
    r.maxlens = maxlens;
    for (int N : maxlens) {
        DGLPresentation T = L;
        T.alph.max_len = N;
        for (auto& d : T.diff) d = truncate(d, N);
        r.quotient.push_back(dgl_homology(perturbed_component(T), lo, hi, N));
        // the filtered complex needs words one longer than the chains
        DGLPresentation F = T;
        F.alph.max_len = N + 1;
        r.filtered.push_back(dgl_homology(perturbed_component(F), lo, hi, N, HomologyMode::Filtered));
    }
    r.stabilized_zero = r.filtered.size() >= 2;
    for (size_t k = r.filtered.size() >= 2 ? r.filtered.size() - 2 : 0; k < r.filtered.size(); ++k)
        for (const auto& e : r.filtered[k])
            if (e.dim != 0) r.stabilized_zero = false;
    return r;
}

namespace {

// Span of the ideal generated by seeds, as an echelon basis of tensors.
Echelon<Word> ideal_span(const Alphabet& A, const std::vector<Tensor>& seeds) {
    Echelon<Word> span;
    std::vector<Tensor> frontier;
    for (const auto& s : seeds)
        if (span.insert(s)) frontier.push_back(s);
    while (!frontier.empty()) {
        std::vector<Tensor> next;
        for (const auto& t : frontier) {
            for (int g = 0; g < A.size(); ++g) {
                Tensor b = bracket(A, gen(g), t);
                if (!b.empty() && span.insert(b)) next.push_back(b);
            }
        }
        frontier = std::move(next);
    }
    return span;
}

}  // namespace

FiltrationPage filtration_page(const DGLPresentation& L, int pmax, int lo, int hi) {
    DGLPresentation M = perturbed_component(L);
    const Alphabet& A = M.alph;
    int u = M.index_of("u");
    // L inside M: Lie elements in the generators of L up to the truncation
    std::vector<Tensor> Lbasis;
    for (int len = 1; len <= M.W(); ++len) {
        for (int deg = -len; deg <= len * 8; ++deg) {
            if (!words_exist(A, deg, len)) continue;
            for (const auto& t : lie_subspace_basis(A, deg, len).elems) {
                bool inL = true;
                for (const auto& [w, c] : t)
                    for (char ch : w)
                        if (static_cast<unsigned char>(ch) == u) inL = false;
                if (inL) Lbasis.push_back(t);
            }
        }
    }
    FiltrationPage out;
    std::vector<Echelon<Word>> ideals;
    for (int p = 0; p <= pmax; ++p) {
        std::vector<Tensor> seeds;
        for (const auto& x : Lbasis) {
            Tensor s = ad_power(A, gen(u), p, x);
            if (!s.empty()) seeds.push_back(s);
        }
        ideals.push_back(ideal_span(A, seeds));
        out.ideal_dims.push_back(static_cast<int>(ideals.back().rank()));
    }
    out.decreasing = true;
    out.differential_ideals = true;
    for (int p = 0; p <= pmax; ++p) {
        for (const auto& [k, row] : ideals[p].rows()) {
            if (p > 0 && !ideals[p - 1].contains(row)) out.decreasing = false;
            if (!ideals[p].contains(apply_d(M, row))) out.differential_ideals = false;
        }
    }
    out.total_homology = dgl_homology(M, lo, hi, M.W() - 1, HomologyMode::Filtered);
    return out;
}

DGLPresentation interval_cofibre(int W) { return build_interval(W); }

std::vector<SubstitutionCandidate> interval_substitution_search(int W) {
    DGLPresentation LS = build_ls(W);
    DGLPresentation target = adjoin_unchecked(interval_cofibre(W), "u");
    const Alphabet& T = target.alph;
    int u = target.index_of("u"), a = target.index_of("a"), x = target.index_of("x");
    struct Lin {
        std::string label;
        int cu, ca;
    };
    std::vector<Lin> odd;
    for (int cu : {-1, 0, 1})
        for (int ca : {-1, 0, 1})
            if (cu != 0 || ca != 0) {
                std::string l;
                if (ca) l += std::string(ca < 0 ? "-" : "") + "a";
                if (cu) l += std::string(cu < 0 ? "-" : (ca ? "+" : "")) + "u";
                odd.push_back({l, cu, ca});
            }
    std::vector<SubstitutionCandidate> out;
    for (const auto& ia : odd) {
        for (const auto& ib : odd) {
            if (ia.cu * ib.ca - ia.ca * ib.cu == 0) continue;
            for (int sx : {1, -1}) {
                SubstitutionCandidate c;
                c.label = "a->" + ia.label + " b->" + ib.label + " x->" + (sx < 0 ? "-x" : "x");
                auto lin = [&](const Lin& l) {
                    Tensor t;
                    add_term(t, letter(u), Scalar(l.cu));
                    add_term(t, letter(a), Scalar(l.ca));
                    return t;
                };
                c.images = {lin(ia), lin(ib), gen(x, sx)};
                c.chain_map = true;
                for (int g = 0; g < LS.alph.size() && c.chain_map; ++g) {
                    Tensor lhs = truncate(apply_d(target, c.images[g]), W);
                    Tensor rhs = truncate(apply_morphism(T, c.images, LS.diff[g]), W);
                    if (lhs != rhs) c.chain_map = false;
                }
                out.push_back(c);
            }
        }
    }
    return out;
}

}  // namespace rht
