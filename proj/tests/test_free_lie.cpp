#include <doctest.h>

#include "rht/dgl.hpp"
#include "support.hpp"

using namespace rht;

namespace {

Alphabet abc(std::vector<int> degrees, int W = 6) {
    Alphabet A;
    A.max_len = W;
    for (size_t i = 0; i < degrees.size(); ++i) A.add(std::string(1, static_cast<char>('a' + i)), degrees[i]);
    return A;
}

Tensor words(const Alphabet& A, std::vector<std::pair<std::string, Scalar>> terms) {
    Tensor t;
    for (auto& [w, c] : terms) {
        Word x;
        for (char ch : w) x += letter(ch - 'a');
        add_term(t, x, c);
    }
    (void)A;
    return t;
}

Tensor random_homogeneous(const Alphabet& A, int degree, int length) {
    Tensor t;
    auto seqs = degree_sequences(A, degree, length);
    if (seqs.empty()) return t;
    for (int k = 0; k < 3; ++k) {
        const auto& s = seqs[testing::rand_int(0, static_cast<int>(seqs.size()) - 1)];
        axpy(t, testing::rand_scalar(), right_normed(A, s));
    }
    return t;
}

}  // namespace

TEST_CASE("graded commutator") {
    Alphabet A = abc({-1, -1});
    CHECK(bracket(A, gen(0), gen(0)) == words(A, {{"a", 0}, {"aa", 2}}));
    CHECK(bracket(A, gen(0), gen(1)) == words(A, {{"ab", 1}, {"ba", 1}}));
    Alphabet B = abc({0, -1});
    Tensor x = gen(0), b = gen(1);
    CHECK(bracket(B, x, bracket(B, x, b)) == words(B, {{"aab", 1}, {"aba", -2}, {"baa", 1}}));
    Tensor inhom = gen(0);
    add_term(inhom, letter(1), Scalar(1));
    CHECK_THROWS(bracket(B, inhom, b));
}

TEST_CASE("ad series") {
    Alphabet A = abc({0, -1});
    std::vector<Scalar> c{1, Scalar(1, 2)};
    Tensor t = ad_series(A, gen(0), c, gen(1));
    Tensor expect = gen(1);
    axpy(expect, Scalar(1, 2), bracket(A, gen(0), gen(1)));
    CHECK(t == expect);
    Alphabet B = abc({-1, -1});
    CHECK_THROWS(ad_series(B, gen(0), c, gen(1)));
}

TEST_CASE("graded Jacobi identity on random elements") {
    Alphabet A = abc({-1, 0, 1}, 7);
    for (int trial = 0; trial < 30; ++trial) {
        int dx = testing::rand_int(-2, 2), dy = testing::rand_int(-2, 2), dz = testing::rand_int(-2, 2);
        Tensor x = random_homogeneous(A, dx, testing::rand_int(1, 2));
        Tensor y = random_homogeneous(A, dy, testing::rand_int(1, 2));
        Tensor z = random_homogeneous(A, dz, testing::rand_int(1, 2));
        auto degx = homogeneous_degree(A, x), degy = homogeneous_degree(A, y);
        if (!degx || !degy) continue;
        Tensor lhs = bracket(A, x, bracket(A, y, z));
        Tensor rhs = bracket(A, bracket(A, x, y), z);
        axpy(rhs, Scalar(parity_sign(static_cast<long>(*degx) * *degy)), bracket(A, y, bracket(A, x, z)));
        CHECK(lhs == rhs);
        CHECK(is_lie(A, bracket(A, x, y)));
    }
    CHECK_FALSE(is_lie(A, words(A, {{"ab", 1}})));
}

TEST_CASE("Lie subspace dimensions") {
    Alphabet A = abc({-1}, 6);
    CHECK(lie_subspace_basis(A, -1, 1).size() == 1);
    CHECK(lie_subspace_basis(A, -2, 2).size() == 1);
    CHECK(lie_subspace_basis(A, -3, 3).size() == 0);
    Alphabet B = abc({0, 0}, 6);
    CHECK(lie_subspace_basis(B, 0, 2).size() == 1);
    // Witt formula for two even generators: 2, 1, 2, 3, 6
    int expect[] = {2, 1, 2, 3, 6};
    for (int n = 1; n <= 5; ++n) CHECK(lie_subspace_basis(B, 0, n).size() == expect[n - 1]);
}

TEST_CASE("derivation extension sign") {
    Alphabet A = abc({-1, 0}, 4);
    std::vector<Tensor> vals{Tensor{}, gen(0)};
    // d(ab) = (-1)^{|a|} a d(b) for a derivation of degree -1
    Tensor t = extend_derivation(A, vals, -1, words(A, {{"ab", 1}}));
    CHECK(t == words(A, {{"aa", -1}}));
}

TEST_CASE("d squared and coproduct") {
    DGLPresentation D;
    D.alph.max_len = 5;
    int a = D.add_generator("a", -1);
    D.set_diff(a, scaled(bracket(D.alph, gen(a), gen(a)), Scalar(-1, 2)));
    CHECK(d_squared_report(D).empty());
    DGLPresentation bad = D;
    bad.diff[a] = scaled(bracket(D.alph, gen(a), gen(a)), Scalar(1));
    bad.add_generator("c", 0);
    bad.set_diff(1, gen(a));
    CHECK_FALSE(d_squared_report(bad).empty());
    std::vector<std::string> renamed;
    DGLPresentation C = coproduct(D, D, &renamed);
    CHECK(C.alph.size() == 2);
    CHECK(C.alph.gens[1].name == "a'");
    CHECK(renamed.size() == 1);
    CHECK(d_squared_report(C).empty());
    CHECK(dgl_mc_residual(D, gen(a)).empty());
}

TEST_CASE("homology of small free Lie algebras") {
    DGLPresentation D;
    D.alph.max_len = 4;
    D.add_generator("a", 3);
    auto h = dgl_homology(D, 0, 7, 2);
    for (const auto& e : h) CHECK(e.dim == ((e.degree == 3 || e.degree == 6) ? 1 : 0));

    DGLPresentation U;
    U.alph.max_len = 4;
    int u = U.add_generator("u", -1);
    U.set_diff(u, scaled(bracket(U.alph, gen(u), gen(u)), Scalar(-1, 2)));
    for (auto mode : {HomologyMode::Quotient, HomologyMode::Filtered})
        for (const auto& e : dgl_homology(U, -3, 1, 3, mode)) CHECK(e.dim == 0);
}
