#include "rht/graded.hpp"

#include <stdexcept>

namespace rht {

void check_permutation(const Permutation& perm) {
    std::vector<bool> seen(perm.size(), false);
    for (int v : perm) {
        if (v < 0 || v >= static_cast<int>(perm.size()) || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
}

int koszul_sign(const Permutation& perm, const std::vector<int>& degrees) {
    check_permutation(perm);
    if (degrees.size() != perm.size()) throw std::invalid_argument("degree list length mismatch");
    int odd = 0;
    for (size_t p = 0; p < perm.size(); ++p)
        for (size_t q = p + 1; q < perm.size(); ++q)
            if (perm[p] > perm[q] && (degrees[perm[p]] & 1) && (degrees[perm[q]] & 1)) odd ^= 1;
    return odd ? -1 : 1;
}

int permutation_sign(const Permutation& perm) {
    check_permutation(perm);
    int odd = 0;
    for (size_t p = 0; p < perm.size(); ++p)
        for (size_t q = p + 1; q < perm.size(); ++q)
            if (perm[p] > perm[q]) odd ^= 1;
    return odd ? -1 : 1;
}

std::vector<Permutation> shuffles(int i, int n) {
    if (i < 0 || n < 0 || i > n) throw std::invalid_argument("shuffles: need 0 <= i <= n");
    std::vector<Permutation> out;
    // choose the first block as an increasing i-subset, in lexicographic order
    std::vector<int> pick(i);
    for (int k = 0; k < i; ++k) pick[k] = k;
    while (true) {
        Permutation p(pick.begin(), pick.end());
        std::vector<bool> used(n, false);
        for (int v : pick) used[v] = true;
        for (int v = 0; v < n; ++v)
            if (!used[v]) p.push_back(v);
        out.push_back(std::move(p));
        int k = i - 1;
        while (k >= 0 && pick[k] == n - i + k) --k;
        if (k < 0) break;
        ++pick[k];
        for (int m = k + 1; m < i; ++m) pick[m] = pick[m - 1] + 1;
    }
    return out;
}

}  // namespace rht
