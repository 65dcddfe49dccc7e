#pragma once

#include <string>
#include <vector>

#include "rht/tensor.hpp"

namespace rht {

// Free Lie algebra on a graded alphabet, truncated at word length alph.max_len,
// with a degree -1 derivation given on generators as Lie elements of the
// tensor algebra.
struct DGLPresentation {
    Alphabet alph;
    std::vector<Tensor> diff;

    int W() const { return alph.max_len; }
    int add_generator(const std::string& name, int degree);
    void set_diff(int g, const Tensor& value);
    int index_of(const std::string& name) const { return alph.index_of(name); }
};

// Extends generator values to a derivation of the given degree on tensors.
Tensor extend_derivation(const Alphabet& A, const std::vector<Tensor>& values, int degree, const Tensor& t);
Tensor apply_d(const DGLPresentation& D, const Tensor& t);

// Dynkin criterion: each length-n component satisfies theta(t_n) = n t_n.
bool is_lie(const Alphabet& A, const Tensor& t);
Tensor dynkin(const Alphabet& A, const Tensor& t);

struct D2Violation {
    std::string generator;
    Tensor residual;
};
std::vector<D2Violation> d_squared_report(const DGLPresentation& D);

// Disjoint union of presentations; clashing names in the second factor get
// a prime appended. Truncation is the smaller of the two.
DGLPresentation coproduct(const DGLPresentation& a, const DGLPresentation& b,
                          std::vector<std::string>* renamed = nullptr);

// dz + 1/2 [z,z]
Tensor dgl_mc_residual(const DGLPresentation& D, const Tensor& z);
// d^z g = dg + [z,g]; throws unless z is Maurer-Cartan at the truncation.
DGLPresentation perturb_dgl(const DGLPresentation& D, const Tensor& z);

// Algebra map on tensors determined by generator images.
Tensor apply_morphism(const Alphabet& target, const std::vector<Tensor>& images, const Tensor& t);

enum class HomologyMode {
    // free Lie algebra modulo brackets longer than maxlen
    Quotient,
    // chains c of length <= maxlen with dc also of length <= maxlen
    Filtered,
};

struct HomologyEntry {
    int degree = 0;
    int dim = 0;
    bool boundary_affected = false;

    bool operator==(const HomologyEntry&) const = default;
};

std::vector<HomologyEntry> dgl_homology(const DGLPresentation& D, int lo, int hi, int maxlen,
                                        HomologyMode mode = HomologyMode::Quotient);

}  // namespace rht
