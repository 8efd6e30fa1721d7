#pragma once

#include <cstdint>
#include <memory>

#include "cdk/element.hpp"

namespace cdk {

// Memoized signed basis products for one level: e_i e_j = sign(i,j) e_index(i,j).
// index(i,j) is always i XOR j; that law is verified against cd_mul in tests.
struct StructureTable {
    int level = 0;
    std::vector<std::int8_t> sign;      // 2^n x 2^n, row-major, values +-1
    std::vector<std::uint32_t> index;   // 2^n x 2^n, row-major

    std::size_t dim() const { return std::size_t(1) << level; }
    std::int8_t sign_at(std::size_t i, std::size_t j) const { return sign[i * dim() + j]; }
    std::uint32_t index_at(std::size_t i, std::size_t j) const { return index[i * dim() + j]; }
};

// Practical cap for table construction; cd_mul itself is uncapped.
inline constexpr int kMaxTableLevel = 10;

// Builds (or fetches) the complete table for a level. Memoized per level;
// first concurrent access races are resolved by single initialization.
// Throws for n < 0 or n > kMaxTableLevel.
const StructureTable& structure_table(int n);

// e_i e_j at level n as (sign, index). Throws on out-of-range indices.
std::pair<int, std::size_t> basis_product(std::size_t i, std::size_t j, int n);

// Table-driven product; bit-identical to cd_mul (cross-validated in tests).
Element mul_table(const Element& x, const Element& y);

}  // namespace cdk
