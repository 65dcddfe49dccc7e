#pragma once

#include <map>
#include <vector>

#include "rht/scalar.hpp"

namespace rht {

template <class K>
using SparseMap = std::map<K, Scalar>;

using SparseVec = SparseMap<int>;

template <class K>
void axpy(SparseMap<K>& y, const Scalar& a, const SparseMap<K>& x) {
    if (a == 0) return;
    for (const auto& [k, v] : x) {
        auto it = y.find(k);
        if (it == y.end()) {
            y.emplace(k, a * v);
        } else {
            it->second += a * v;
            if (it->second == 0) y.erase(it);
        }
    }
}

template <class K>
void add_term(SparseMap<K>& y, const K& k, const Scalar& a) {
    if (a == 0) return;
    auto it = y.find(k);
    if (it == y.end()) {
        y.emplace(k, a);
    } else {
        it->second += a;
        if (it->second == 0) y.erase(it);
    }
}

template <class K>
SparseMap<K> scaled(const SparseMap<K>& x, const Scalar& a) {
    SparseMap<K> out;
    if (a == 0) return out;
    for (const auto& [k, v] : x) out.emplace(k, a * v);
    return out;
}

// Fully reduced row echelon form; the pivot of a row is its smallest key.
template <class K>
class Echelon {
public:
    SparseMap<K> reduce(SparseMap<K> v) const {
        std::vector<std::pair<K, Scalar>> hits;
        for (const auto& [k, c] : v)
            if (rows_.count(k)) hits.emplace_back(k, c);
        for (const auto& [k, c] : hits) axpy(v, -c, rows_.at(k));
        return v;
    }

    bool insert(const SparseMap<K>& v) {
        SparseMap<K> r = reduce(v);
        if (r.empty()) return false;
        K p = r.begin()->first;
        Scalar inv = 1 / r.begin()->second;
        for (auto& [k, c] : r) c *= inv;
        for (auto& [q, row] : rows_) {
            auto it = row.find(p);
            if (it != row.end()) {
                Scalar c = it->second;
                axpy(row, -c, r);
            }
        }
        rows_.emplace(p, std::move(r));
        return true;
    }

    bool contains(const SparseMap<K>& v) const { return reduce(v).empty(); }
    size_t rank() const { return rows_.size(); }
    const std::map<K, SparseMap<K>>& rows() const { return rows_; }

private:
    std::map<K, SparseMap<K>> rows_;
};

struct SparseMatrix {
    int nrows = 0;
    int ncols = 0;
    std::vector<SparseVec> rows;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : nrows(r), ncols(c), rows(r) {}
    static SparseMatrix from_dense(const std::vector<std::vector<Scalar>>& dense);

    void set(int r, int c, const Scalar& v);
    Scalar get(int r, int c) const;
};

int rank(const SparseMatrix& m);
// Basis of {v : m v = 0}, one vector per free column, in RREF order.
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);
// dim of Q^ncols modulo the row span.
int quotient_dimension(const SparseMatrix& m);

// Kernel of the map sending basis vector j of the domain to images[j].
std::vector<SparseVec> kernel_of_images(const std::vector<SparseVec>& images);
int rank_of(const std::vector<SparseVec>& vectors);

}  // namespace rht
