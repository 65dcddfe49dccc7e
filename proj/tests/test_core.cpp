#include <doctest.h>

#include <algorithm>

#include "rht/graded.hpp"
#include "rht/linalg.hpp"
#include "support.hpp"

using namespace rht;

TEST_CASE("scalar formatting round-trips") {
    CHECK(to_string(Scalar(-1, 2)) == "-1/2");
    CHECK(to_string(Scalar(4, 2)) == "2");
    CHECK(parse_scalar("3/6") == Scalar(1, 2));
    CHECK_THROWS(parse_scalar("1.5"));
    CHECK_THROWS(parse_scalar("1/0"));
    CHECK(binomial(6, 2) == 15);
    CHECK(factorial(5) == 120);
}

TEST_CASE("koszul sign of a transposition") {
    CHECK(koszul_sign({1, 0}, {1, 1}) == -1);
    CHECK(koszul_sign({1, 0}, {2, 1}) == 1);
    CHECK(koszul_sign({0, 1, 2}, {1, 1, 1}) == 1);
    CHECK(permutation_sign({1, 0}) == -1);
    CHECK(permutation_sign({1, 2, 0}) == 1);
    CHECK_THROWS(koszul_sign({0, 0}, {1, 1}));
}

TEST_CASE("koszul sign is a cocycle under composition") {
    for (int trial = 0; trial < 200; ++trial) {
        int n = testing::rand_int(1, 6);
        std::vector<int> deg(n);
        for (auto& d : deg) d = testing::rand_int(-3, 3);
        Permutation s(n), t(n);
        for (int i = 0; i < n; ++i) s[i] = t[i] = i;
        std::shuffle(s.begin(), s.end(), testing::rng());
        std::shuffle(t.begin(), t.end(), testing::rng());
        // apply s, then reorder the result by t
        std::vector<int> deg_s(n);
        for (int p = 0; p < n; ++p) deg_s[p] = deg[s[p]];
        Permutation st(n);
        for (int p = 0; p < n; ++p) st[p] = s[t[p]];
        CHECK(koszul_sign(st, deg) == koszul_sign(s, deg) * koszul_sign(t, deg_s));
        std::vector<int> odd(n, 1);
        CHECK(koszul_sign(s, odd) == permutation_sign(s));
    }
}

TEST_CASE("unshuffles are counted by binomials") {
    for (int n = 0; n <= 7; ++n)
        for (int i = 0; i <= n; ++i) CHECK(Scalar(static_cast<long>(shuffles(i, n).size())) == binomial(n, i));
    auto s = shuffles(1, 3);
    CHECK(s[0] == Permutation{0, 1, 2});
    CHECK(s[1] == Permutation{1, 0, 2});
    CHECK(s[2] == Permutation{2, 0, 1});
    CHECK_THROWS(shuffles(4, 3));
}

TEST_CASE("rank and kernel") {
    CHECK(rank(SparseMatrix(3, 3)) == 0);
    SparseMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.set(i, i, 1);
    CHECK(rank(id) == 3);
    auto m = SparseMatrix::from_dense({{1, 2}, {2, 4}});
    CHECK(rank(m) == 1);
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0].at(0) == -2);
    CHECK(k[0].at(1) == 1);
    CHECK(quotient_dimension(m) == 1);
}

TEST_CASE("random kernels are annihilated and have complementary dimension") {
    for (int trial = 0; trial < 50; ++trial) {
        int r = testing::rand_int(1, 5), c = testing::rand_int(1, 6);
        SparseMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (testing::rand_int(0, 2) == 0) m.set(i, j, testing::rand_scalar());
        auto k = kernel_basis(m);
        CHECK(static_cast<int>(k.size()) + rank(m) == c);
        for (const auto& v : k)
            for (const auto& row : m.rows) {
                Scalar s = 0;
                for (const auto& [j, x] : v) {
                    auto it = row.find(j);
                    if (it != row.end()) s += it->second * x;
                }
                CHECK(s == 0);
            }
    }
}
