#pragma once

#include <map>
#include <string>
#include <vector>

#include "rht/dgl.hpp"

namespace rht {

// Basis indices of the arguments of a bracket or morphism component.
using Tuple = std::vector<int>;

// Sign s with f(args) = s f(sorted args) for a graded skew-symmetric f, where
// sorting is stable ascending; 0 when an even-degree argument repeats.
int skew_sort(Tuple& args, const std::vector<int>& degrees);

// Table of a graded skew-symmetric multilinear map, stored on weakly
// increasing tuples.
struct SkewTable {
    std::map<Tuple, SparseVec> entries;
    bool operator==(const SkewTable&) const = default;
};

struct LInfinityAlgebra {
    std::vector<GradedGenerator> basis;
    // brackets[k] holds l_k; brackets[0] is unused.
    std::vector<SkewTable> brackets;

    int dim() const { return static_cast<int>(basis.size()); }
    int kmax() const { return static_cast<int>(brackets.size()) - 1; }
    int degree(int i) const { return basis.at(i).degree; }
    std::vector<int> degrees() const;
    int index_of(const std::string& name) const;
    int add_basis(const std::string& name, int degree);
    // Stores l_k(args) = value; the value must have degree sum|args| + k - 2.
    void set_bracket(const Tuple& args, const SparseVec& value);
    SparseVec eval_basis(const Tuple& args) const;
    SparseVec eval(const std::vector<SparseVec>& args) const;
    SparseVec l1(const SparseVec& x) const { return eval({x}); }
    bool operator==(const LInfinityAlgebra&) const = default;
};

SparseVec basis_vector(int i, const Scalar& c = 1);
constexpr int kZeroDegree = -1000000;
// Degree of a homogeneous vector, kZeroDegree for zero; throws if inhomogeneous.
int vector_degree(const std::vector<int>& degrees, const SparseVec& v);

// Multilinear evaluation of a skew table on vectors.
SparseVec eval_skew(const SkewTable& table, const std::vector<int>& degrees, const std::vector<SparseVec>& args);

// All weakly increasing tuples of length k over [0, n) avoiding repeated
// even-degree entries.
std::vector<Tuple> sorted_tuples(const std::vector<int>& degrees, int k);

// Free DGL truncated at word length N, as an L-infinity algebra on a Lie basis.
struct LieModel {
    LInfinityAlgebra L;
    Alphabet alph;
    std::vector<Tensor> elems;
    std::vector<int> lengths;
    SparseVec coordinates(const Tensor& t) const;
    Tensor tensor(const SparseVec& v) const;

    std::map<std::pair<int, int>, LieBasis> blocks;  // (length, degree)
    std::map<std::pair<int, int>, int> offsets;
};
LieModel dgl_to_linfty(const DGLPresentation& D, int N);

struct JacobiViolation {
    int n = 0;
    Tuple args;
    SparseVec residual;
};
// sum_i sum_{unshuffles} sgn eps (-1)^{i(n-i)} l_{n-i+1}(l_i(..), ..) on sorted basis tuples.
std::vector<JacobiViolation> jacobi_report(const LInfinityAlgebra& L, int n);
SparseVec jacobiator(const LInfinityAlgebra& L, const Tuple& args);

// sum_k l_k(z,...,z)/k!
SparseVec mc_residual(const LInfinityAlgebra& L, const SparseVec& z);
bool is_mc(const LInfinityAlgebra& L, const SparseVec& z);
// l^z_k(x..) = sum_i l_{i+k}(z^i, x..)/i!; throws unless z is Maurer-Cartan.
LInfinityAlgebra perturb(const LInfinityAlgebra& L, const SparseVec& z);

struct Truncation {
    LInfinityAlgebra L;
    // old-basis vector of each new basis element
    std::vector<SparseVec> embedding;
};
// Positive degrees, the kernel of l_1 in degree 0, nothing below.
Truncation truncate_positive(const LInfinityAlgebra& Lz);

// Components f^(k) of degree k - 1, skew-symmetric like brackets.
struct LInfinityMorphism {
    LInfinityAlgebra source;
    LInfinityAlgebra target;
    std::vector<SkewTable> comps;  // comps[0] unused

    int kmax() const { return static_cast<int>(comps.size()) - 1; }
    void set_component(const Tuple& args, const SparseVec& value);
    SparseVec eval(const std::vector<SparseVec>& args) const;
};
LInfinityMorphism identity_morphism(const LInfinityAlgebra& L);

struct MorphismViolation {
    int n = 0;
    Tuple args;
    SparseVec residual;
    bool displayed = false;  // from the displayed k = 1, 2 equations
};
std::vector<MorphismViolation> morphism_report(const LInfinityMorphism& f, int n);

// Sign relating l_k to the coderivation component delta^(k) on Lambda sL:
// Signed uses delta^(k) = (-1)^{k(k-1)/2} s l_k (s^-1)^k, Unsigned drops the factor.
enum class Dictionary { Signed, Unsigned };

// Symmetric-coalgebra checks: D^2 and F D - D' F projected to the cogenerators.
std::vector<JacobiViolation> coalgebra_square_report(const LInfinityAlgebra& L, int n,
                                                     Dictionary dict = Dictionary::Signed);
std::vector<MorphismViolation> coalgebra_morphism_report(const LInfinityMorphism& f, int n,
                                                         Dictionary dict = Dictionary::Signed);

// Signed dictionary, with z read as the group-like point exp(-sz):
// sum_k (-1)^{k(k+1)/2 + 1} l_k(z^k)/k!, signs + + - - ...
SparseVec coalgebra_mc_residual(const LInfinityAlgebra& L, const SparseVec& z);
// The same signs applied to g^(k)(z^k)/k!; throws unless z solves the equation above.
SparseVec coalgebra_pushforward(const LInfinityMorphism& g, const SparseVec& z);

// l_k -> (-1)^{k(k-1)/2} l_k, which carries one dictionary to the other.
LInfinityAlgebra twist(const LInfinityAlgebra& L);
LInfinityMorphism twist(const LInfinityMorphism& f);

// Lib(u): u of degree -1 and w = [u,u] of degree -2, with l_1 u = -w/2.
LInfinityAlgebra lib_u();

// phi^(1)(u) = z, phi^(k)(u..u) = 0 for k >= 2, and phi^(k)(w,u..u) from the
// recursion; components up to arity n.
LInfinityMorphism canonical_mc_morphism(const LInfinityAlgebra& L, const SparseVec& z, int n);
// -2 (k-1)! sum_{i<=k} l_i(z^i)/i!
SparseVec canonical_closed_form(const LInfinityAlgebra& L, const SparseVec& z, int k);

struct IdentityCheck {
    int k = 0;
    bool first = false;
    bool second = false;
    // second identity with the z arguments placed before phi
    bool second_reordered = false;
    SparseVec first_residual;
    SparseVec second_residual;
};
// The two identities relating l_k(z^k) to phi^(k)(w u^{k-1}).
std::vector<IdentityCheck> check_canonical_identities(const LInfinityMorphism& phi, const SparseVec& z, int n);

// sum_k g^(k)(z^k)/k!; throws unless z is Maurer-Cartan in the source.
SparseVec mc_pushforward(const LInfinityMorphism& g, const SparseVec& z);

// L tensor Q[t,dt]/(t^{D+1}, t^D dt).
struct FormsTensorAlgebra {
    LInfinityAlgebra base;
    LInfinityAlgebra L;
    int base_dim = 0;
    int D = 0;
    // basis index of x_i t^j (dt if with_dt)
    int index(int i, int j, bool with_dt) const;
    SparseVec eta(int point, const SparseVec& v) const;
    SparseVec constant(const SparseVec& x) const;
};
FormsTensorAlgebra tensor_with_forms(const LInfinityAlgebra& L, int D);
LInfinityMorphism evaluation_morphism(const FormsTensorAlgebra& F, int point);

// (t x) * z0 - x dt for a DGL: e^{t ad_x} z0 - sum t^{n+1} ad_x^n(dx)/(n+1)! - x dt.
SparseVec gauge_path(const FormsTensorAlgebra& F, const SparseVec& x, const SparseVec& z0);

// Throws unless phi is Maurer-Cartan in F.
bool q_homotopy_check(const FormsTensorAlgebra& F, const SparseVec& phi, const SparseVec& z0, const SparseVec& z1);

std::string render(const LInfinityAlgebra& L, const SparseVec& v);

}  // namespace rht
