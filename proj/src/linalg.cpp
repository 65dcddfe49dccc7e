#include "rht/linalg.hpp"

#include <stdexcept>

namespace rht {

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Scalar>>& dense) {
    SparseMatrix m(static_cast<int>(dense.size()), dense.empty() ? 0 : static_cast<int>(dense[0].size()));
    for (int r = 0; r < m.nrows; ++r) {
        if (static_cast<int>(dense[r].size()) != m.ncols) throw std::invalid_argument("ragged matrix");
        for (int c = 0; c < m.ncols; ++c)
            if (dense[r][c] != 0) m.rows[r][c] = dense[r][c];
    }
    return m;
}

void SparseMatrix::set(int r, int c, const Scalar& v) {
    if (r < 0 || r >= nrows || c < 0 || c >= ncols) throw std::out_of_range("matrix index");
    if (v == 0)
        rows[r].erase(c);
    else
        rows[r][c] = v;
}

Scalar SparseMatrix::get(int r, int c) const {
    auto it = rows.at(r).find(c);
    return it == rows[r].end() ? Scalar(0) : it->second;
}

int rank(const SparseMatrix& m) { return rank_of(m.rows); }

int rank_of(const std::vector<SparseVec>& vectors) {
    Echelon<int> e;
    for (const auto& v : vectors) e.insert(v);
    return static_cast<int>(e.rank());
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
    Echelon<int> e;
    for (const auto& r : m.rows) e.insert(r);
    std::vector<SparseVec> out;
    for (int f = 0; f < m.ncols; ++f) {
        if (e.rows().count(f)) continue;
        SparseVec v;
        v[f] = 1;
        for (const auto& [p, row] : e.rows()) {
            auto it = row.find(f);
            if (it != row.end()) v[p] = -it->second;
        }
        out.push_back(std::move(v));
    }
    return out;
}

int quotient_dimension(const SparseMatrix& m) { return m.ncols - rank(m); }

std::vector<SparseVec> kernel_of_images(const std::vector<SparseVec>& images) {
    int maxrow = -1;
    for (const auto& v : images)
        if (!v.empty()) maxrow = std::max(maxrow, v.rbegin()->first);
    SparseMatrix t(maxrow + 1, static_cast<int>(images.size()));
    for (int j = 0; j < static_cast<int>(images.size()); ++j)
        for (const auto& [i, c] : images[j]) t.rows[i][j] = c;
    return kernel_basis(t);
}

}  // namespace rht
