#pragma once

#include <string>
#include <vector>

namespace rht {

struct GradedGenerator {
    std::string name;
    int degree = 0;

    bool operator==(const GradedGenerator&) const = default;
};

// perm[p] is the index of the input factor placed at output position p.
using Permutation = std::vector<int>;

void check_permutation(const Permutation& perm);

// Koszul sign of reordering factors of the given degrees by perm:
// one factor (-1)^{|x_i||x_j|} per inverted pair.
int koszul_sign(const Permutation& perm, const std::vector<int>& degrees);

// Ordinary sign of the permutation.
int permutation_sign(const Permutation& perm);

// (i, n-i) unshuffles: perm[0..i) increasing and perm[i..n) increasing.
// Listed in lexicographic order of perm.
std::vector<Permutation> shuffles(int i, int n);

}  // namespace rht
