#pragma once

#include <map>
#include <string>
#include <vector>

#include "rht/linfty.hpp"

namespace rht {

// Sorted generator indices, one char each; odd generators appear at most once.
using Monomial = std::string;
using Poly = SparseMap<Monomial>;

// Free graded-commutative algebra with a degree -1 derivation (homological
// degrees; the superscript degree is the negative). Monomials longer than P
// are dropped.
struct FreeCDGA {
    std::vector<GradedGenerator> gens;
    std::vector<Poly> diff;
    int P = 6;

    int size() const { return static_cast<int>(gens.size()); }
    int add_generator(const std::string& name, int degree);
    int index_of(const std::string& name) const;
    void set_diff(int g, const Poly& value);
    int degree(const Monomial& m) const;
    bool operator==(const FreeCDGA&) const = default;
};

Poly constant_poly(const Scalar& c);
Poly generator_poly(int g, const Scalar& c = 1);
// Sorts a word of generators into normal form; returns the Koszul sign, 0 if it vanishes.
int normalize(const FreeCDGA& A, Monomial& m);
Poly mul(const FreeCDGA& A, const Poly& p, const Poly& q);
Poly apply_d(const FreeCDGA& A, const Poly& p);
std::string render(const FreeCDGA& A, const Poly& p);

struct CDGAD2Violation {
    std::string generator;
    Poly residual;
};
std::vector<CDGAD2Violation> d_squared_report(const FreeCDGA& A);

// Algebra map sending domain generator i to images[i].
struct AlgebraMap {
    FreeCDGA domain;
    FreeCDGA codomain;
    std::vector<Poly> images;
    Poly apply(const Poly& p) const;
};
struct ChainViolation {
    std::string generator;
    Poly residual;
};
// d f(v) - f(d v) on the listed generators (all when empty).
std::vector<ChainViolation> chain_map_report(const AlgebraMap& f, const std::vector<int>& only = {});
AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f);  // g after f
AlgebraMap identity_map(const FreeCDGA& A);

// Cochains: generators dual to s z_i with homological degree -(|z_i| + 1).
// The literal form follows the pairing formula; the default also replaces
// every generator of degree 0 by its negative.
FreeCDGA cochains_literal(const LInfinityAlgebra& L, int P = 6);
FreeCDGA cochains(const LInfinityAlgebra& L, int P = 6);
// Reads the brackets back from a cochain algebra produced by cochains_literal.
LInfinityAlgebra brackets_from_cochains(const FreeCDGA& A, const std::vector<GradedGenerator>& basis);

AlgebraMap cochains_of_morphism_literal(const LInfinityMorphism& g, int P = 6);
AlgebraMap cochains_of_morphism(const LInfinityMorphism& g, int P = 6);
// Reads the components back from a map produced by cochains_of_morphism_literal.
LInfinityMorphism morphism_from_cochains(const AlgebraMap& f, const LInfinityAlgebra& source,
                                         const LInfinityAlgebra& target);

// Generator i goes to factors[i] times itself.
FreeCDGA rescale(const FreeCDGA& A, const std::vector<Scalar>& factors);
std::vector<Scalar> degree_zero_flip(const FreeCDGA& A);

struct CohomologyEntry {
    int degree = 0;  // superscript
    int dim = 0;
    bool boundary_affected = false;
    bool operator==(const CohomologyEntry&) const = default;
};
// Cohomology of the subcomplex of polynomials of length <= P whose
// differential also has length <= P, over superscript degrees [lo, hi].
std::vector<CohomologyEntry> cohomology(const FreeCDGA& A, int lo, int hi);
std::vector<Monomial> monomials(const FreeCDGA& A, int degree, int max_len);

// Lambda(x, y): |x| = 0, |y| = 1 homological, dy = (x^2 - x)/2.
FreeCDGA based_target(int P = 32);
// Lambda(t, dt) modulo (t^{D+1}, t^D dt).
FreeCDGA interval_forms(int D);

struct Augmentation {
    std::vector<Scalar> values;  // on generators; zero off degree 0
    bool operator==(const Augmentation&) const = default;
};
Scalar evaluate(const FreeCDGA& A, const Augmentation& f, const Poly& p);
bool is_augmentation(const FreeCDGA& A, const Augmentation& f);
Augmentation augmentation_from_mc(const LInfinityAlgebra& L, const SparseVec& z);
// Throws unless f is an augmentation of cochains(L) and the element is Maurer-Cartan.
SparseVec mc_from_augmentation(const LInfinityAlgebra& L, const Augmentation& f);
Augmentation evaluate_map(const AlgebraMap& f, int point);  // f into interval forms, then t -> point

// Polynomial in x (coefficient list) with no constant term and value 1 at x = 1.
AlgebraMap based_lift(const FreeCDGA& A, const Augmentation& f, const std::vector<Scalar>& phi);

// Throws unless H is a chain map into interval forms.
bool homotopy_check(const Augmentation& f0, const Augmentation& f1, const AlgebraMap& H);

struct GammaReport {
    FreeCDGA cochains;
    AlgebraMap gamma;
    std::vector<int> safe_generators;
    std::vector<ChainViolation> chain_violations;
    Augmentation at0, at1, phi_a, phi_b;
    // the map attached to the gauge path from a to b through -x
    AlgebraMap path_map;
    bool path_is_homotopy = false;
};
// Gamma(sa#) = t - 1, Gamma(sb#) = -t, Gamma(sx#) = dt, zero on the other
// generators; chain violations are collected on duals of words of length <= W-1.
GammaReport gamma_map(int W, int D = 4);

struct Localization {
    FreeCDGA algebra;
    std::vector<Poly> coker_basis;  // V^1 representatives of the new degree 1 generators
};
Localization localize(const FreeCDGA& A, const Augmentation& f);
// Number of generators per superscript degree.
std::map<int, int> generator_profile(const FreeCDGA& A);

// Maurer-Cartan elements of L tensor forms and maps cochains(L) -> interval forms.
AlgebraMap forms_morphism_from_mc(const FormsTensorAlgebra& F, const SparseVec& phi);
// The same assignment without the Maurer-Cartan check.
AlgebraMap forms_morphism(const FormsTensorAlgebra& F, const SparseVec& phi);
SparseVec mc_from_forms_morphism(const FormsTensorAlgebra& F, const AlgebraMap& psi);

}  // namespace rht
