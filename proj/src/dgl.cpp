#include "rht/dgl.hpp"

#include <map>
#include <stdexcept>

namespace rht {

int DGLPresentation::add_generator(const std::string& name, int degree) {
    int g = alph.add(name, degree);
    diff.emplace_back();
    return g;
}

void DGLPresentation::set_diff(int g, const Tensor& value) {
    if (g < 0 || g >= alph.size()) throw std::out_of_range("generator index");
    auto d = homogeneous_degree(alph, value);
    if (d && *d != alph.gens[g].degree - 1)
        throw std::invalid_argument("differential of " + alph.gens[g].name + " has wrong degree");
    diff[g] = truncate(value, alph.max_len);
}

Tensor extend_derivation(const Alphabet& A, const std::vector<Tensor>& values, int degree, const Tensor& t) {
    Tensor out;
    for (const auto& [w, c] : t) {
        int prefix_deg = 0;
        for (size_t i = 0; i < w.size(); ++i) {
            int g = static_cast<unsigned char>(w[i]);
            const Tensor& v = values.at(g);
            Scalar sc = c * parity_sign(static_cast<long>(degree) * prefix_deg);
            size_t rest = w.size() - 1;
            for (const auto& [u, cu] : v) {
                if (static_cast<int>(rest + u.size()) > A.max_len) continue;
                Word nw;
                nw.reserve(rest + u.size());
                nw.append(w, 0, i);
                nw += u;
                nw.append(w, i + 1, Word::npos);
                add_term(out, nw, sc * cu);
            }
            prefix_deg += A.gens[g].degree;
        }
    }
    return out;
}

Tensor apply_d(const DGLPresentation& D, const Tensor& t) { return extend_derivation(D.alph, D.diff, -1, t); }

Tensor dynkin(const Alphabet& A, const Tensor& t) {
    Alphabet B = A;
    for (const auto& [w, c] : t) B.max_len = std::max<int>(B.max_len, static_cast<int>(w.size()));
    Tensor out;
    for (const auto& [w, c] : t) {
        std::vector<int> seq;
        for (char ch : w) seq.push_back(static_cast<unsigned char>(ch));
        axpy(out, c, right_normed(B, seq));
    }
    return out;
}

bool is_lie(const Alphabet& A, const Tensor& t) {
    std::map<size_t, Tensor> parts;
    for (const auto& [w, c] : t) {
        if (w.empty()) return false;
        parts[w.size()].emplace(w, c);
    }
    for (const auto& [n, part] : parts) {
        Tensor diff = dynkin(A, part);
        axpy(diff, Scalar(-static_cast<long>(n)), part);
        if (!diff.empty()) return false;
    }
    return true;
}

std::vector<D2Violation> d_squared_report(const DGLPresentation& D) {
    std::vector<D2Violation> out;
    for (int g = 0; g < D.alph.size(); ++g) {
        Tensor r = apply_d(D, D.diff[g]);
        if (!r.empty()) out.push_back({D.alph.gens[g].name, std::move(r)});
    }
    return out;
}

DGLPresentation coproduct(const DGLPresentation& a, const DGLPresentation& b, std::vector<std::string>* renamed) {
    DGLPresentation out;
    out.alph.max_len = std::min(a.W(), b.W());
    for (const auto& g : a.alph.gens) out.add_generator(g.name, g.degree);
    std::vector<Tensor> images;
    for (int g = 0; g < a.alph.size(); ++g) out.diff[g] = truncate(a.diff[g], out.W());
    int offset = a.alph.size();
    for (const auto& g : b.alph.gens) {
        std::string name = g.name;
        bool clash = true;
        while (clash) {
            clash = false;
            for (const auto& h : out.alph.gens)
                if (h.name == name) clash = true;
            if (clash) name += "'";
        }
        if (name != g.name && renamed) renamed->push_back(g.name + "->" + name);
        out.add_generator(name, g.degree);
    }
    for (int g = 0; g < b.alph.size(); ++g) images.push_back(gen(offset + g));
    for (int g = 0; g < b.alph.size(); ++g) out.diff[offset + g] = apply_morphism(out.alph, images, b.diff[g]);
    return out;
}

Tensor dgl_mc_residual(const DGLPresentation& D, const Tensor& z) {
    Tensor r = apply_d(D, z);
    axpy(r, Scalar(1, 2), bracket(D.alph, z, z));
    return r;
}

DGLPresentation perturb_dgl(const DGLPresentation& D, const Tensor& z) {
    auto dz = homogeneous_degree(D.alph, z);
    if (dz && *dz != -1) throw std::invalid_argument("perturbation needs a degree -1 element");
    if (!dgl_mc_residual(D, z).empty()) throw std::invalid_argument("element is not Maurer-Cartan");
    DGLPresentation out = D;
    for (int g = 0; g < D.alph.size(); ++g) {
        Tensor v = D.diff[g];
        axpy(v, Scalar(1), bracket(D.alph, z, gen(g)));
        out.diff[g] = v;
    }
    return out;
}

Tensor apply_morphism(const Alphabet& target, const std::vector<Tensor>& images, const Tensor& t) {
    Tensor out;
    for (const auto& [w, c] : t) {
        Tensor acc = unit_word(Word(), c);
        for (char ch : w) {
            acc = mul(target, acc, images.at(static_cast<unsigned char>(ch)));
            if (acc.empty()) break;
        }
        axpy(out, Scalar(1), acc);
    }
    return out;
}

namespace {

struct Chains {
    std::vector<Tensor> elems;
    std::map<int, LieBasis> by_len;
    std::map<int, int> offset;

    SparseVec coords(const Tensor& t) const {
        std::map<int, Tensor> parts;
        for (const auto& [w, c] : t) parts[static_cast<int>(w.size())].emplace(w, c);
        SparseVec out;
        for (const auto& [n, part] : parts) {
            auto it = by_len.find(n);
            if (it == by_len.end()) throw std::logic_error("chain outside the truncated range");
            for (const auto& [i, c] : it->second.coordinates(part)) out[offset.at(n) + i] = c;
        }
        return out;
    }
};

Chains build_chains(const Alphabet& A, int degree, int maxlen) {
    Chains ch;
    for (int n = 1; n <= maxlen; ++n) {
        LieBasis b = lie_subspace_basis(A, degree, n);
        ch.offset[n] = static_cast<int>(ch.elems.size());
        for (const auto& e : b.elems) ch.elems.push_back(e);
        ch.by_len.emplace(n, std::move(b));
    }
    return ch;
}

struct BoundaryData {
    // basis of the chain space in use, in coordinates of the full chain space
    std::vector<SparseVec> space;
    // boundaries of those basis vectors, in coordinates of degree - 1
    std::vector<SparseVec> images;
};

}  // namespace

std::vector<HomologyEntry> dgl_homology(const DGLPresentation& D, int lo, int hi, int maxlen, HomologyMode mode) {
    if (lo > hi) throw std::invalid_argument("empty homology window");
    if (maxlen < 1) throw std::invalid_argument("maxlen must be positive");
    if (maxlen > D.W()) throw std::invalid_argument("maxlen exceeds the presentation truncation");
    int dlen = 1;
    for (const auto& v : D.diff)
        for (const auto& [w, c] : v) dlen = std::max<int>(dlen, static_cast<int>(w.size()));
    if (mode == HomologyMode::Filtered && D.W() < maxlen + dlen - 1)
        throw std::invalid_argument("filtered homology needs a larger presentation truncation");

    Alphabet Aq = D.alph;
    Aq.max_len = maxlen;
    std::map<int, Chains> chains;
    for (int p = lo - 1; p <= hi + 1; ++p) chains.emplace(p, build_chains(D.alph, p, maxlen));

    auto boundary = [&](int p) {
        BoundaryData bd;
        const Chains& src = chains.at(p);
        const Chains& tgt = chains.at(p - 1);
        std::vector<SparseVec> low;
        std::vector<SparseVec> high;
        std::map<Word, int> overflow_index;
        for (const auto& e : src.elems) {
            if (mode == HomologyMode::Quotient) {
                low.push_back(tgt.coords(extend_derivation(Aq, D.diff, -1, e)));
                continue;
            }
            Tensor de = apply_d(D, e);
            Tensor keep;
            SparseVec over;
            for (const auto& [w, c] : de) {
                if (static_cast<int>(w.size()) <= maxlen) {
                    keep.emplace(w, c);
                } else {
                    auto it = overflow_index.try_emplace(w, static_cast<int>(overflow_index.size())).first;
                    over[it->second] = c;
                }
            }
            low.push_back(tgt.coords(keep));
            high.push_back(std::move(over));
        }
        if (mode == HomologyMode::Quotient) {
            for (size_t i = 0; i < src.elems.size(); ++i) bd.space.push_back(SparseVec{{static_cast<int>(i), 1}});
            bd.images = std::move(low);
            return bd;
        }
        bd.space = kernel_of_images(high);
        for (const auto& k : bd.space) {
            SparseVec img;
            for (const auto& [i, c] : k) axpy(img, c, low[i]);
            bd.images.push_back(std::move(img));
        }
        return bd;
    };

    std::map<int, BoundaryData> bds;
    for (int p = lo; p <= hi + 1; ++p) bds.emplace(p, boundary(p));

    std::vector<HomologyEntry> out;
    for (int p = lo; p <= hi; ++p) {
        const auto& here = bds.at(p);
        const auto& above = bds.at(p + 1);
        int dim = static_cast<int>(here.space.size()) - rank_of(here.images) - rank_of(above.images);
        bool flag = words_exist(D.alph, p, maxlen + 1) || words_exist(D.alph, p + 1, maxlen + 1);
        out.push_back({p, dim, flag});
    }
    return out;
}

}  // namespace rht
