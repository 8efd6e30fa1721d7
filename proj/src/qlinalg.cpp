#include "cdk/qlinalg.hpp"

#include <stdexcept>

namespace cdk {

std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t piv = row;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
        const Rat inv = 1 / m.at(row, col);
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const Rat f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(RatMatrix m) { return rref(m).size(); }

std::vector<RatVec> kernel(const RatMatrix& m) {
    RatMatrix r = m;
    const std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(m.cols, Rat(0));
        v[free] = 1;
        for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -r.at(p, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> membership(const std::vector<RatVec>& span_vectors, const RatVec& target) {
    const std::size_t dim = target.size();
    for (const RatVec& v : span_vectors)
        if (v.size() != dim) throw std::invalid_argument("membership: dimension mismatch");

    // Columns are the span vectors, augmented with the target.
    RatMatrix m(dim, span_vectors.size() + 1);
    for (std::size_t j = 0; j < span_vectors.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = span_vectors[j][i];
    for (std::size_t i = 0; i < dim; ++i) m.at(i, span_vectors.size()) = target[i];

    const std::vector<std::size_t> pivots = rref(m);
    if (!pivots.empty() && pivots.back() == span_vectors.size()) return std::nullopt;

    RatVec coords(span_vectors.size(), Rat(0));
    for (std::size_t p = 0; p < pivots.size(); ++p)
        coords[pivots[p]] = m.at(p, span_vectors.size());
    return coords;
}

std::vector<RatVec> orthogonal_complement(const std::vector<RatVec>& vectors,
                                          std::size_t ambient_dim) {
    RatMatrix m(vectors.size(), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient_dim)
            throw std::invalid_argument("orthogonal_complement: dimension mismatch");
        for (std::size_t j = 0; j < ambient_dim; ++j) m.at(i, j) = vectors[i][j];
    }
    if (vectors.empty()) m = RatMatrix(0, ambient_dim);
    // Kernel of a 0 x d matrix is all of Q^d; RatMatrix(0, d) has no rows,
    // so kernel() returns the standard basis.
    if (m.rows == 0) {
        std::vector<RatVec> basis;
        for (std::size_t j = 0; j < ambient_dim; ++j) {
            RatVec v(ambient_dim, Rat(0));
            v[j] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    return kernel(m);
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace cdk
