#pragma once

#include <map>
#include <string>
#include <vector>

#include "rht/dgl.hpp"

namespace rht {

// Delta_k sends basis element i to a tensor whose words have length k.
struct AInfinityCoalgebra {
    std::vector<GradedGenerator> basis;
    std::map<int, std::vector<Tensor>> delta;

    int dim() const { return static_cast<int>(basis.size()); }
    const Tensor& get(int k, int i) const;
    void set(int k, int i, const Tensor& t);
    int max_arity() const { return delta.empty() ? 0 : delta.rbegin()->first; }
    Alphabet alphabet(int max_len) const;
};

struct RelationViolation {
    int arity = 0;
    std::string element;
    Tensor residual;
};

// sum_{k, n} (-1)^{k+n+kn} (id^{i-k-n} (x) Delta_k (x) id^n) Delta_{i-k+1} = 0 for i <= max_i
std::vector<RelationViolation> check_ainfty_relations(const AInfinityCoalgebra& C, int max_i);

// Tensor algebra on s^{-1}C (generator "s-<name>", degree |c|-1) with
// d_k = -(-1)^{k(k-1)/2} (s^{-1})^{(x)k} Delta_k s.
DGLPresentation cobar_infty(const AInfinityCoalgebra& C, int W);

struct QuillenResult {
    DGLPresentation dgl;
    // generators whose d_k is not a Lie element
    std::vector<std::string> non_lie;
};
// Free Lie algebra on s^{-1}C with d_k replaced by theta(d_k)/k, theta the
// right-normed bracketing; equal to the cobar differential when d_k is Lie.
QuillenResult quillen_construction(const AInfinityCoalgebra& C, int W);

// Basis alpha_0..alpha_J (degree 0), beta_0..beta_J (degree 1).
struct UniversalCoalgebra {
    int J = 0;

    int dim() const { return 2 * (J + 1); }
    int alpha(int j) const { return j; }
    int beta(int j) const { return J + 1 + j; }
    bool is_beta(int i) const { return i > J; }
    int index(int i) const { return is_beta(i) ? i - J - 1 : i; }
    int degree(int i) const { return is_beta(i) ? 1 : 0; }
    std::string name(int i) const;

    SparseVec d(int i) const;
    // pairs (u, v) with coefficient, flattened as u * dim() + v
    SparseVec diagonal(int i) const;
};

UniversalCoalgebra build_universal_coalgebra(int J);

// M = universal coalgebra, N = <y, z, c> with |y| = |z| = 0, |c| = 1, dc = y - z.
struct ContractionData {
    UniversalCoalgebra M;
    std::vector<GradedGenerator> N{{"y", 0}, {"z", 0}, {"c", 1}};

    SparseVec theta(int m) const;
    SparseVec omega(int n) const;
    SparseVec K(int m) const;
    SparseVec dN(int n) const;
};

ContractionData build_contraction(int J);

// Checks theta omega = id, K d + d K = omega theta - id, theta K = K omega = K^2 = 0,
// comparing only indices below J so the truncation cannot interfere.
std::vector<std::string> contraction_identities(const ContractionData& cd);

struct PlanarTree {
    // node 0 is the root vertex; child -1 is a leaf
    std::vector<int> left;
    std::vector<int> right;

    int leaves() const;
    int left_leaves() const;
    int subtree_leaves(int v) const;
    int odd_subtree_left_leaves() const;
    // every vertex carries at least one leaf
    bool contributing() const;
    std::string to_string() const;
};

std::vector<PlanarTree> enumerate_trees(int k);

enum class TreeSignRule {
    // (-1)^{number of left leaves}: each binary vertex has two incoming edges
    LeftLeaves,
    // vertices counted with valence three, so no pair contributes
    Trivial,
    // left leaves at vertices whose subtree carries an odd number of leaves
    OddSubtree,
};

std::string to_string(TreeSignRule r);

// Unsigned composite Delta_T applied to basis element n of N.
Tensor tree_term(const ContractionData& cd, const PlanarTree& T, int n);
int tree_sign(const PlanarTree& T, TreeSignRule rule);

// Delta_k on y, z, c; needs J >= k + 1.
std::vector<Tensor> transferred_diagonal(const ContractionData& cd, int k, TreeSignRule rule);

std::vector<Tensor> closed_form_diagonals(int k);

struct DiagonalReport {
    int k = 0;
    int J = 0;
    TreeSignRule rule = TreeSignRule::LeftLeaves;
    std::vector<Tensor> computed;
    std::vector<Tensor> expected;
    bool matches = false;
    bool stable = false;
    int trees = 0;
    int contributing_trees = 0;

    bool pass() const { return matches && stable && contributing_trees == (1 << (k - 2)); }
};

DiagonalReport verify_diagonals(int k, int J, TreeSignRule rule);

// The coalgebra <y, z, c> with the closed-form diagonals up to arity kmax.
AInfinityCoalgebra interval_coalgebra(int kmax);

struct CocommutativityReport {
    int k = 0;
    // tau with blocks of size 1..n
    bool tau_full_zero = false;
    // tau with blocks of size 1..n-1
    bool tau_reduced_zero = false;
    // d_k in the cobar construction
    bool d_lie = false;
    bool d_symmetric = false;
};

std::vector<CocommutativityReport> check_cocommutative(const AInfinityCoalgebra& C);

}  // namespace rht
