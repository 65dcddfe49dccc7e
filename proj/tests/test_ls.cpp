#include <doctest.h>

#include "rht/ls.hpp"

using namespace rht;

namespace {

Tensor parse_words(const Alphabet& A, std::vector<std::pair<std::string, Scalar>> terms) {
    Tensor t;
    for (auto& [w, c] : terms) {
        Word x;
        for (char ch : w) x += letter(A.index_of(std::string(1, ch)));
        add_term(t, x, c);
    }
    return t;
}

}  // namespace

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == frac(-1, 2));
    CHECK(bernoulli(2) == frac(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == frac(-1, 30));
    CHECK(bernoulli(12) == frac(-691, 2730));
    CHECK_THROWS(bernoulli(-1));
    for (int m = 2; m <= 12; ++m) {
        Scalar s = 0;
        for (int k = 0; k < m; ++k) s += binomial(m, k) * bernoulli(k);
        CHECK(s == 0);
    }
}

TEST_CASE("LS differential low terms") {
    auto L = build_ls(2);
    const Alphabet& A = L.alph;
    Tensor bma = parse_words(A, {{"b", 1}, {"a", -1}});
    Tensor expect = bracket(A, gen(A.index_of("x")), gen(A.index_of("b")));
    axpy(expect, Scalar(1), bma);
    axpy(expect, frac(-1, 2), bracket(A, gen(A.index_of("x")), bma));
    CHECK(L.diff[A.index_of("x")] == expect);
    CHECK(L.diff[A.index_of("a")] == parse_words(A, {{"aa", -1}}));
}

TEST_CASE("LS alternative form agrees with ad_x(b) + h_x(b - a)") {
    auto L = build_ls(6);
    const Alphabet& A = L.alph;
    Tensor x = gen(A.index_of("x"));
    Tensor alt = bracket(A, x, gen(A.index_of("b")));
    axpy(alt, Scalar(1), ad_series(A, x, h_coefficients(5), parse_words(A, {{"b", 1}, {"a", -1}})));
    CHECK(alt == L.diff[A.index_of("x")]);
}

TEST_CASE("f_x inverts h_x up to truncation") {
    auto L = build_ls(6);
    const Alphabet& A = L.alph;
    Tensor x = gen(A.index_of("x"));
    Tensor y = gen(A.index_of("a"));
    Tensor hy = ad_series(A, x, h_coefficients(6), y);
    CHECK(ad_series(A, x, f_coefficients(6), hy) == y);
}

TEST_CASE("cylinder low terms") {
    auto C = build_cylinder(2);
    const Alphabet& A = C.alph;
    CHECK(C.diff[A.index_of("x")] == parse_words(A, {{"xb", 1}, {"bx", -1}, {"b", 1}, {"a", -1}, {"xb", frac(-1, 2)},
                                                   {"xa", frac(1, 2)}, {"bx", frac(1, 2)}, {"ax", frac(-1, 2)}}));
}

TEST_CASE("d squared vanishes on LS, cylinder and interval") {
    for (int W : {4, 6}) {
        CHECK(d_squared_report(build_ls(W)).empty());
        CHECK(d_squared_report(build_cylinder(W)).empty());
        CHECK(d_squared_report(build_interval(W)).empty());
    }
}

TEST_CASE("interval differential low terms") {
    auto I = build_interval(2);
    const Alphabet& A = I.alph;
    Tensor expect = parse_words(A, {{"a", -1}});
    axpy(expect, frac(1, 2), bracket(A, gen(A.index_of("x")), gen(A.index_of("a"))));
    CHECK(I.diff[A.index_of("x")] == expect);
}

TEST_CASE("enveloping comparison and its mutation") {
    CHECK(enveloping_compare(build_ls(5), build_cylinder(5)).empty());
    auto bad = bernoulli_table(5);
    bad[2] += 1;
    auto mism = enveloping_compare(build_ls(5, &bad), build_cylinder(5));
    REQUIRE_FALSE(mism.empty());
    size_t shortest = 100;
    for (const auto& m : mism) shortest = std::min(shortest, (m.word.size() + 1) / 2);
    CHECK(shortest == 3);
}

TEST_CASE("gauge action") {
    auto L = build_ls(5);
    const Alphabet& A = L.alph;
    Tensor a = gen(A.index_of("a")), b = gen(A.index_of("b")), x = gen(A.index_of("x"));
    CHECK(gauge(L, Tensor{}, a) == a);
    // the action moves b to a along x, and a to b along -x
    CHECK(gauge(L, x, b) == a);
    CHECK(gauge(L, scaled(x, Scalar(-1)), a) == b);
    Tensor xa = gauge(L, x, a);
    CHECK(xa != b);
    CHECK(truncate(xa, 1) == parse_words(A, {{"a", 2}, {"b", -1}}));
    CHECK_THROWS(gauge(L, x, gen(A.index_of("x"))));
    CHECK_THROWS(gauge(L, a, a));
}
