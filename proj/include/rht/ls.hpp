#pragma once

#include <string>
#include <vector>

#include "rht/dgl.hpp"

namespace rht {

// Bernoulli numbers with B_1 = -1/2, from the recursion
// -B_n/n! = sum_{i<n} B_{n-1-i} / ((n-1-i)! (i+2)!).
Scalar bernoulli(int n);
std::vector<Scalar> bernoulli_table(int n_max);

// Generators a, b (degree -1) and x (degree 0); a and b are Maurer-Cartan and
// dx = [x,b] + sum_i B_i/i! ad_x^i (b - a). A custom table replaces B_i.
DGLPresentation build_ls(int W, const std::vector<Scalar>* bern = nullptr);

// Tensor algebra on a, b, x with da = -a a, db = -b b and
// dx = x b - b x + sum_n sum_{p+q=n} (-1)^q B_n/(p! q!) x^p (b - a) x^q.
DGLPresentation build_cylinder(int W, const std::vector<Scalar>* bern = nullptr);

// Generators a (degree -1), x (degree 0); dx = -sum_i B_i/i! ad_x^i(a).
DGLPresentation build_interval(int W);

struct WordMismatch {
    std::string generator;
    std::string word;
    Scalar lhs;
    Scalar rhs;
};
std::vector<WordMismatch> enveloping_compare(const DGLPresentation& ls, const DGLPresentation& cyl);

// e^{ad_x}(z) - sum_i ad_x^i(dx)/(i+1)!, truncated.
Tensor gauge(const DGLPresentation& D, const Tensor& x, const Tensor& z);

// Coefficient lists for the series h_x = sum B_i/i! ad_x^i, f_x = sum ad_x^i/(i+1)!,
// e^{ad_x} = sum ad_x^i/i!.
std::vector<Scalar> h_coefficients(int n);
std::vector<Scalar> f_coefficients(int n);
std::vector<Scalar> exp_coefficients(int n);

}  // namespace rht
