#include "cdk/table.hpp"

#include <array>
#include <mutex>
#include <stdexcept>

namespace cdk {

namespace {

StructureTable build_table(int n) {
    StructureTable t;
    t.level = n;
    const std::size_t dim = std::size_t(1) << n;
    t.sign.assign(dim * dim, 1);
    t.index.assign(dim * dim, 0);
    if (n == 0) return t;

    const StructureTable& prev = structure_table(n - 1);
    const std::size_t h = dim / 2;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const std::size_t p = i & (h - 1);
            const std::size_t q = j & (h - 1);
            int s;
            std::size_t k;
            if (i < h && j < h) {
                // (e_p, 0)(e_q, 0) = (e_p e_q, 0)
                s = prev.sign_at(p, q);
                k = prev.index_at(p, q);
            } else if (i < h) {
                // (e_p, 0)(0, e_q) = (0, e_q e_p)
                s = prev.sign_at(q, p);
                k = h + prev.index_at(q, p);
            } else if (j < h) {
                // (0, e_p)(e_q, 0) = (0, e_p conj(e_q))
                s = prev.sign_at(p, q) * (q == 0 ? 1 : -1);
                k = h + prev.index_at(p, q);
            } else {
                // (0, e_p)(0, e_q) = (-conj(e_q) e_p, 0)
                s = -prev.sign_at(q, p) * (q == 0 ? 1 : -1);
                k = prev.index_at(q, p);
            }
            t.sign[i * dim + j] = std::int8_t(s);
            t.index[i * dim + j] = std::uint32_t(k);
        }
    }
    return t;
}

}  // namespace

const StructureTable& structure_table(int n) {
    if (n < 0 || n > kMaxTableLevel)
        throw std::invalid_argument("structure_table: level out of supported range");
    static std::array<std::once_flag, kMaxTableLevel + 1> flags;
    static std::array<StructureTable, kMaxTableLevel + 1> tables;
    std::call_once(flags[std::size_t(n)], [n] { tables[std::size_t(n)] = build_table(n); });
    return tables[std::size_t(n)];
}

std::pair<int, std::size_t> basis_product(std::size_t i, std::size_t j, int n) {
    const StructureTable& t = structure_table(n);
    if (i >= t.dim() || j >= t.dim())
        throw std::out_of_range("basis_product: index out of range");
    return {t.sign_at(i, j), t.index_at(i, j)};
}

Element mul_table(const Element& x, const Element& y) {
    if (x.level != y.level) throw std::invalid_argument("mul_table: level mismatch");
    const StructureTable& t = structure_table(x.level);
    Element r(x.level);
    const std::size_t dim = x.dim();
    for (std::size_t i = 0; i < dim; ++i) {
        if (x.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y.coeffs[j] == 0) continue;
            const Rat term = x.coeffs[i] * y.coeffs[j];
            if (t.sign_at(i, j) > 0)
                r.coeffs[t.index_at(i, j)] += term;
            else
                r.coeffs[t.index_at(i, j)] -= term;
        }
    }
    return r;
}

}  // namespace cdk
