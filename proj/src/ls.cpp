#include "rht/ls.hpp"

#include <mutex>
#include <stdexcept>

namespace rht {

std::vector<Scalar> bernoulli_table(int n_max) {
    static std::mutex mu;
    static std::vector<Scalar> memo{Scalar(1)};
    std::lock_guard<std::mutex> lock(mu);
    for (int n = static_cast<int>(memo.size()); n <= n_max; ++n) {
        Scalar s = 0;
        for (int i = 0; i < n; ++i) s += memo[n - 1 - i] / (factorial(n - 1 - i) * factorial(i + 2));
        memo.push_back(-s * factorial(n));
    }
    return std::vector<Scalar>(memo.begin(), memo.begin() + n_max + 1);
}

Scalar bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli index must be non-negative");
    return bernoulli_table(n)[n];
}

std::vector<Scalar> h_coefficients(int n) {
    auto b = bernoulli_table(n);
    std::vector<Scalar> out(n + 1);
    for (int i = 0; i <= n; ++i) out[i] = b[i] / factorial(i);
    return out;
}

std::vector<Scalar> f_coefficients(int n) {
    std::vector<Scalar> out(n + 1);
    for (int i = 0; i <= n; ++i) out[i] = 1 / factorial(i + 1);
    return out;
}

std::vector<Scalar> exp_coefficients(int n) {
    std::vector<Scalar> out(n + 1);
    for (int i = 0; i <= n; ++i) out[i] = 1 / factorial(i);
    return out;
}

static std::vector<Scalar> table_or_default(int W, const std::vector<Scalar>* bern) {
    auto b = bernoulli_table(W);
    if (bern)
        for (int i = 0; i <= W && i < static_cast<int>(bern->size()); ++i) b[i] = (*bern)[i];
    return b;
}

static void check_d2(const DGLPresentation& D, const char* what) {
    auto rep = d_squared_report(D);
    if (!rep.empty())
        throw std::logic_error(std::string(what) + ": d^2 != 0 on " + rep.front().generator);
}

DGLPresentation build_ls(int W, const std::vector<Scalar>* bern) {
    if (W < 2) throw std::invalid_argument("build_ls needs W >= 2");
    DGLPresentation D;
    D.alph.max_len = W;
    int a = D.add_generator("a", -1);
    int b = D.add_generator("b", -1);
    int x = D.add_generator("x", 0);
    const Alphabet& A = D.alph;
    D.set_diff(a, scaled(bracket(A, gen(a), gen(a)), Scalar(-1, 2)));
    D.set_diff(b, scaled(bracket(A, gen(b), gen(b)), Scalar(-1, 2)));
    auto bt = table_or_default(W, bern);
    std::vector<Scalar> h(W);
    for (int i = 0; i < W; ++i) h[i] = bt[i] / factorial(i);
    Tensor bma = gen(b);
    add_term(bma, letter(a), Scalar(-1));
    Tensor dx = bracket(A, gen(x), gen(b));
    axpy(dx, Scalar(1), ad_series(A, gen(x), h, bma));
    D.set_diff(x, dx);
    if (!bern) check_d2(D, "build_ls");
    return D;
}

DGLPresentation build_cylinder(int W, const std::vector<Scalar>* bern) {
    if (W < 2) throw std::invalid_argument("build_cylinder needs W >= 2");
    DGLPresentation D;
    D.alph.max_len = W;
    int a = D.add_generator("a", -1);
    int b = D.add_generator("b", -1);
    int x = D.add_generator("x", 0);
    D.set_diff(a, unit_word(letter(a) + letter(a), -1));
    D.set_diff(b, unit_word(letter(b) + letter(b), -1));
    auto bt = table_or_default(W, bern);
    Tensor dx;
    add_term(dx, letter(x) + letter(b), Scalar(1));
    add_term(dx, letter(b) + letter(x), Scalar(-1));
    for (int n = 0; n + 1 <= W; ++n)
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            Scalar c = parity_sign(q) * bt[n] / (factorial(p) * factorial(q));
            Word xp(p, letter(x)[0]), xq(q, letter(x)[0]);
            add_term(dx, xp + letter(b) + xq, c);
            add_term(dx, xp + letter(a) + xq, -c);
        }
    D.set_diff(x, dx);
    if (!bern) check_d2(D, "build_cylinder");
    return D;
}

DGLPresentation build_interval(int W) {
    if (W < 2) throw std::invalid_argument("build_interval needs W >= 2");
    DGLPresentation D;
    D.alph.max_len = W;
    int a = D.add_generator("a", -1);
    int x = D.add_generator("x", 0);
    D.set_diff(a, scaled(bracket(D.alph, gen(a), gen(a)), Scalar(-1, 2)));
    auto h = h_coefficients(W - 1);
    D.set_diff(x, scaled(ad_series(D.alph, gen(x), h, gen(a)), Scalar(-1)));
    check_d2(D, "build_interval");
    return D;
}

std::vector<WordMismatch> enveloping_compare(const DGLPresentation& ls, const DGLPresentation& cyl) {
    if (ls.W() != cyl.W()) throw std::invalid_argument("enveloping_compare needs equal truncations");
    std::vector<WordMismatch> out;
    for (int g = 0; g < ls.alph.size(); ++g) {
        const std::string& name = ls.alph.gens[g].name;
        const Tensor& l = ls.diff[g];
        const Tensor& c = cyl.diff[cyl.index_of(name)];
        Tensor diff = l;
        axpy(diff, Scalar(-1), c);
        for (const auto& [w, v] : diff) {
            auto li = l.find(w);
            auto ci = c.find(w);
            out.push_back({name, ls.alph.render(w), li == l.end() ? Scalar(0) : li->second,
                           ci == c.end() ? Scalar(0) : ci->second});
        }
    }
    return out;
}

Tensor gauge(const DGLPresentation& D, const Tensor& x, const Tensor& z) {
    const Alphabet& A = D.alph;
    auto dx = homogeneous_degree(A, x);
    auto dz = homogeneous_degree(A, z);
    if (dx && *dx != 0) throw std::invalid_argument("gauge needs a degree 0 element");
    if (dz && *dz != -1) throw std::invalid_argument("gauge acts on degree -1 elements");
    if (!dgl_mc_residual(D, z).empty()) throw std::invalid_argument("gauge: element is not Maurer-Cartan");
    Tensor out = ad_series(A, x, exp_coefficients(D.W()), z);
    axpy(out, Scalar(-1), ad_series(A, x, f_coefficients(D.W()), apply_d(D, x)));
    if (!dgl_mc_residual(D, out).empty()) throw std::logic_error("gauge: result is not Maurer-Cartan");
    return out;
}

}  // namespace rht
