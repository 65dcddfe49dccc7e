#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rht/graded.hpp"
#include "rht/linalg.hpp"

namespace rht {

// A word is a string of generator indices, one char per letter.
using Word = std::string;
using Tensor = SparseMap<Word>;

struct Alphabet {
    std::vector<GradedGenerator> gens;
    int max_len = 6;

    int size() const { return static_cast<int>(gens.size()); }
    int index_of(const std::string& name) const;
    int add(const std::string& name, int degree);
    int degree(const Word& w) const;
    std::string render(const Word& w) const;
};

Word letter(int g);
Tensor gen(int g, const Scalar& c = 1);
Tensor unit_word(const Word& w, const Scalar& c = 1);

// Degree of a homogeneous element; nullopt for zero; throws if inhomogeneous.
std::optional<int> homogeneous_degree(const Alphabet& A, const Tensor& t);

Tensor mul(const Alphabet& A, const Tensor& a, const Tensor& b);
Tensor truncate(const Tensor& t, int max_len);
Tensor bracket(const Alphabet& A, const Tensor& a, const Tensor& b);
Tensor ad_power(const Alphabet& A, const Tensor& x, int i, const Tensor& y);
// sum_i coeffs[i] ad_x^i(y); x must have degree 0.
Tensor ad_series(const Alphabet& A, const Tensor& x, const std::vector<Scalar>& coeffs, const Tensor& y);

std::string render(const Alphabet& A, const Tensor& t);

struct LieExpr {
    int gen = -1;
    std::vector<LieExpr> kids;

    static LieExpr leaf(int g) { return LieExpr{g, {}}; }
    static LieExpr br(LieExpr l, LieExpr r) { return LieExpr{-1, {std::move(l), std::move(r)}}; }
};

Tensor lie_to_tensor(const Alphabet& A, const LieExpr& e);
// Right-normed bracket [g1,[g2,[...,gn]]].
Tensor right_normed(const Alphabet& A, const std::vector<int>& seq);

// Basis of the Lie elements of a fixed degree and word length, obtained by
// reducing all right-normed brackets; the pivot of each element is its
// smallest word and every other basis element vanishes on it.
struct LieBasis {
    std::vector<Tensor> elems;
    std::vector<Word> pivots;

    int size() const { return static_cast<int>(elems.size()); }
    SparseVec coordinates(const Tensor& t) const;
};

LieBasis lie_subspace_basis(const Alphabet& A, int degree, int length);

// Generator sequences of a given length and total degree.
std::vector<std::vector<int>> degree_sequences(const Alphabet& A, int degree, int length);
bool words_exist(const Alphabet& A, int degree, int length);

}  // namespace rht
