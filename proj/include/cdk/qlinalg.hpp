#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cdk/rational.hpp"

namespace cdk {

using RatVec = std::vector<Rat>;

// Dense row-major rational matrix.
struct RatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> entries;  // rows * cols, row-major

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Rat& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

// Reduced row echelon form in place; returns the pivot columns.
// Pivot choice is deterministic: first nonzero entry scanning left to right.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(RatMatrix m);

// Basis of the right null space {v : Mv = 0}, in the canonical form induced
// by the RREF free columns (one basis vector per free column, in column
// order, with entry 1 at its free column).
std::vector<RatVec> kernel(const RatMatrix& m);

// Exact coordinates of target in the span of the given vectors, or nullopt
// if target lies outside the span. All vectors must share a dimension.
std::optional<RatVec> membership(const std::vector<RatVec>& span_vectors, const RatVec& target);

// Basis of the orthogonal complement of span(vectors) in Q^ambient_dim
// under the standard dot product.
std::vector<RatVec> orthogonal_complement(const std::vector<RatVec>& vectors,
                                          std::size_t ambient_dim);

Rat dot(const RatVec& a, const RatVec& b);

}  // namespace cdk
