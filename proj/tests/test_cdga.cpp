#include <doctest.h>

#include <set>

#include "rht/fleet.hpp"
#include "support.hpp"

using namespace rht;

namespace {

Poly poly(std::initializer_list<std::pair<Monomial, Scalar>> terms) {
    Poly p;
    for (const auto& [m, c] : terms) add_term(p, m, c);
    return p;
}

Monomial mono(std::initializer_list<int> gens) {
    Monomial m;
    for (int g : gens) m.push_back(static_cast<char>(g));
    return m;
}

}  // namespace

TEST_CASE("graded commutative multiplication") {
    FreeCDGA A;
    int x = A.add_generator("x", 0);
    int y = A.add_generator("y", 1);
    int z = A.add_generator("z", 1);
    Monomial m = mono({z, y});
    CHECK(normalize(A, m) == -1);
    CHECK(m == mono({y, z}));
    Monomial yy = mono({y, y});
    CHECK(normalize(A, yy) == 0);
    CHECK(mul(A, generator_poly(y), generator_poly(y)).empty());
    CHECK(mul(A, generator_poly(z), generator_poly(y)) == poly({{mono({y, z}), -1}}));
    CHECK(mul(A, generator_poly(x), generator_poly(x)) == poly({{mono({x, x}), 1}}));
    CHECK_THROWS(A.set_diff(x, generator_poly(y)));
    CHECK_THROWS(A.set_diff(y, constant_poly(1)));
    A.P = 2;
    CHECK(mul(A, generator_poly(x), mul(A, generator_poly(x), generator_poly(x))).empty());
}

TEST_CASE("cochains of Lib(u)") {
    auto B = cochains(lib_u(), 6);
    REQUIRE(B.size() == 2);
    CHECK(B.gens[0].name == "#u");
    CHECK(B.gens[0].degree == 0);
    CHECK(B.gens[1].degree == 1);
    CHECK(B.diff[0].empty());
    CHECK(B.diff[1] == poly({{mono({0, 0}), frac(1, 2)}, {mono({0}), frac(-1, 2)}}));
    auto T = based_target(6);
    CHECK(B.diff == T.diff);
    CHECK(B.gens[1].degree == T.gens[1].degree);
    auto literal = cochains_literal(lib_u(), 6);
    CHECK(literal.diff[1] == poly({{mono({0, 0}), frac(1, 2)}, {mono({0}), frac(1, 2)}}));
    CHECK(rescale(literal, degree_zero_flip(literal)) == B);
}

TEST_CASE("cohomology of the based target and of interval forms") {
    for (const auto& e : cohomology(cochains(lib_u(), 6), -3, 3)) {
        CAPTURE(e.degree);
        CHECK(e.dim == (e.degree == 0 ? 2 : 0));
    }
    for (int D : {2, 3, 4})
        for (const auto& e : cohomology(interval_forms(D), -3, 3)) CHECK(e.dim == (e.degree == 0 ? 1 : 0));
}

TEST_CASE("cochain differential squares to zero on fleet algebras") {
    for (const auto& m : build_fleet(testing::test_seed(), 8)) {
        CAPTURE(m.name);
        CHECK(d_squared_report(cochains(m.L, 4)).empty());
        CHECK(d_squared_report(cochains_literal(m.L, 4)).empty());
    }
}

TEST_CASE("brackets are read back from the literal cochains") {
    for (const auto& m : build_fleet(testing::test_seed() + 5, 8)) {
        CHECK(brackets_from_cochains(cochains_literal(m.L, 4), m.L.basis) == m.L);
        auto back = morphism_from_cochains(cochains_of_morphism_literal(m.iso, 4), m.source, m.L);
        for (int k = 1; k <= std::min(back.kmax(), m.iso.kmax()); ++k)
            CHECK(back.comps[k] == m.iso.comps[k]);
    }
}

TEST_CASE("cochain pairing against a hand computation") {
    // l_2(z, z) = w with |z| = -1: the dual of w goes to the pairing of v^2
    LInfinityAlgebra L;
    L.add_basis("z", -1);
    L.add_basis("w", -2);
    L.brackets.resize(3);
    L.set_bracket({0, 0}, basis_vector(1));
    auto A = cochains_literal(L, 4);
    // <v v; sz ^ sz> = 2 and d v_w = -(1/2) <v v; sz^sz> v^2 / 2! up to the bracket sign
    CHECK(A.diff[1].size() == 1);
    CHECK(A.diff[1].count(mono({0, 0})) == 1);
    CHECK(abs(A.diff[1].at(mono({0, 0}))) == frac(1, 2));
}

TEST_CASE("cochain maps of fleet isomorphisms are chain maps") {
    for (const auto& m : build_fleet(testing::test_seed() + 6, 8)) {
        auto f = cochains_of_morphism(m.iso, 4);
        CHECK(chain_map_report(f).empty());
        CHECK(chain_map_report(cochains_of_morphism_literal(m.iso, 4)).empty());
        auto id = cochains_of_morphism(identity_morphism(m.L), 4);
        CHECK(id.images == identity_map(cochains(m.L, 4)).images);
        CHECK(chain_map_report(compose(f, id)).empty());
        CHECK(compose(f, id).images == f.images);
    }
}

TEST_CASE("augmentations and Maurer-Cartan elements") {
    for (const auto& m : build_fleet(testing::test_seed() + 7, 8)) {
        auto C = cochains(m.source, 4);
        for (const auto& z : m.source_mc) {
            auto f = augmentation_from_mc(m.source, z);
            bool coherent = coalgebra_mc_residual(m.source, z).empty();
            CHECK(is_augmentation(C, f) == coherent);
            if (coherent) CHECK(mc_from_augmentation(m.source, f) == z);
            else CHECK_THROWS(mc_from_augmentation(m.source, f));
        }
    }
}

TEST_CASE("based lifts") {
    auto B = cochains(lib_u(), 6);
    Augmentation f{{1, 0}};
    REQUIRE(is_augmentation(B, f));
    auto self = based_lift(B, f, {0, 1});
    CHECK(self.images[0] == generator_poly(0));
    CHECK(self.images[1] == generator_poly(1));
    auto other = based_lift(B, f, {0, 2, -1});
    CHECK(chain_map_report(other).empty());
    CHECK(other.images[0] == poly({{mono({0}), 2}, {mono({0, 0}), -1}}));
    CHECK(other.images[1] != generator_poly(1));
    CHECK_THROWS(based_lift(B, f, {0, 2}));
}

TEST_CASE("cochains of the canonical morphism are the based lift") {
    for (const auto& m : build_fleet(testing::test_seed() + 8, 8)) {
        auto C = cochains(m.source, 4);
        for (const auto& z : m.source_mc) {
            auto f = augmentation_from_mc(m.source, z);
            if (!is_augmentation(C, f)) continue;
            auto lift = based_lift(C, f, {0, 1});
            auto Cphi = cochains_of_morphism(canonical_mc_morphism(m.source, z, 4), 4);
            CHECK(Cphi.images == lift.images);
        }
    }
}

TEST_CASE("localization matches the truncated perturbation") {
    std::mt19937_64 rng(testing::test_seed());
    for (int trial = 0; trial < 10; ++trial) {
        auto p = random_point_dgl(rng);
        CAPTURE(p.name);
        auto M = dgl_to_linfty(p.dgl, 3);
        auto z = M.coordinates(p.z);
        auto C = cochains(M.L, 4);
        auto f = augmentation_from_mc(M.L, z);
        REQUIRE(is_augmentation(C, f));
        auto loc = localize(C, f);
        CHECK(generator_profile(loc.algebra) == generator_profile(cochains(truncate_positive(perturb(M.L, z)).L, 4)));
        CHECK(d_squared_report(loc.algebra).empty());
    }
}

TEST_CASE("forms morphisms correspond to Maurer-Cartan elements") {
    auto D = random_point_dgl(testing::rng()).dgl;
    auto M = dgl_to_linfty(D, 3);
    auto F = tensor_with_forms(M.L, 5);
    SparseVec u = basis_vector(M.L.index_of("u"));
    int checked = 0;
    for (int trial = 0; trial < 20; ++trial) {
        SparseVec x;
        for (int i = 0; i < M.L.dim(); ++i)
            if (M.L.degree(i) == 0 && testing::rand_int(0, 1)) add_term(x, i, testing::rand_scalar());
        SparseVec path;
        try {
            path = gauge_path(F, x, is_mc(M.L, u) ? u : SparseVec{});
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++checked;
        auto psi = forms_morphism_from_mc(F, path);
        CHECK(chain_map_report(psi).empty());
        CHECK(mc_from_forms_morphism(F, psi) == path);
    }
    CHECK(checked > 0);
    SparseVec bad = F.constant(basis_vector(M.L.index_of("u"), 3));
    CHECK_THROWS(forms_morphism_from_mc(F, bad));
    CHECK_FALSE(chain_map_report(forms_morphism(F, bad)).empty());
}

TEST_CASE("the literal Gamma and the gauge path map") {
    auto g = gamma_map(3);
    std::set<std::string> names;
    for (const auto& v : g.chain_violations) names.insert(v.generator);
    CHECK(names.size() == 5);
    CHECK(g.at0.values[0] == -1);
    CHECK(g.phi_a.values[0] == 1);
    CHECK(g.at1.values[1] == -1);
    CHECK(g.phi_b.values[1] == 1);
    CHECK(g.path_is_homotopy);
    CHECK(chain_map_report(g.path_map).empty());
    CHECK(evaluate_map(g.path_map, 0) == g.phi_a);
    CHECK(evaluate_map(g.path_map, 1) == g.phi_b);
    CHECK_THROWS(gamma_map(1));
}
