#include "cdk/zdiv.hpp"

#include <algorithm>
#include <stdexcept>

#include "cdk/sampling.hpp"
#include "cdk/table.hpp"

namespace cdk {

namespace {

RatMatrix mul_matrix(const Element& x, bool right) {
    const StructureTable& t = structure_table(x.level);
    const std::size_t dim = x.dim();
    RatMatrix mat(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            // left:  x e_j = sum_i x_i (e_i e_j); right: e_j x = sum_i x_i (e_j e_i)
            const std::size_t a = right ? j : i;
            const std::size_t b = right ? i : j;
            const std::size_t k = t.index_at(a, b);
            if (t.sign_at(a, b) > 0)
                mat.at(k, j) += x.coeffs[i];
            else
                mat.at(k, j) -= x.coeffs[i];
        }
    }
    return mat;
}

// Lexicographic enumeration of strictly increasing index tuples.
void enumerate_supports(std::size_t dim, int support, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    // Depth-first gives lexicographic order over variable-length tuples:
    // (0) < (0,1) < (0,2) < ... < (1) < (1,2) < ...
    auto rec = [&](auto&& self, std::size_t start) -> void {
        for (std::size_t i = start; i < dim; ++i) {
            cur.push_back(i);
            out.push_back(cur);
            if (int(cur.size()) < support) self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

RatMatrix left_mul_matrix(const Element& x) { return mul_matrix(x, false); }

RatMatrix right_mul_matrix(const Element& x) { return mul_matrix(x, true); }

Annihilator annihilator(const Element& x, bool right) {
    if (x.is_zero()) throw std::invalid_argument("annihilator: x must be nonzero");
    Annihilator out;
    out.x = x;
    for (RatVec& v : kernel(mul_matrix(x, right)))
        out.basis.emplace_back(x.level, std::move(v));
    return out;
}

bool is_xbar_member(const Element& x, const Element& y) {
    if (x.level != y.level) throw std::invalid_argument("is_xbar_member: level mismatch");
    return !x.is_zero() && !y.is_zero() && cd_mul(x, y).is_zero();
}

std::vector<ZeroDivisorPair> search_pairs(const SearchParams& params) {
    if (params.level < 1) throw std::invalid_argument("search_pairs: level must be >= 1");
    if (params.support < 1) throw std::invalid_argument("search_pairs: support must be >= 1");
    if (params.coeffs.empty()) throw std::invalid_argument("search_pairs: empty coefficient set");

    const std::size_t dim = std::size_t(1) << params.level;
    std::vector<long> nz_coeffs;
    for (long c : params.coeffs)
        if (c != 0) nz_coeffs.push_back(c);
    if (nz_coeffs.empty()) throw std::invalid_argument("search_pairs: all coefficients are zero");

    // Count candidates analytically before enumerating anything:
    // sum over k of C(dim, k) * |coeffs|^k.
    unsigned long long total = 0;
    for (int k = 1; k <= params.support && std::size_t(k) <= dim; ++k) {
        long double binom = 1.0L;
        for (int i = 0; i < k; ++i) binom = binom * (long double)(dim - std::size_t(i)) / (i + 1);
        long double combos = binom;
        for (int i = 0; i < k; ++i) combos *= (long double)nz_coeffs.size();
        if (combos > (long double)kSearchCap || (total += (unsigned long long)combos) > kSearchCap)
            throw std::runtime_error("search_pairs: candidate family exceeds the resource cap");
    }

    std::vector<std::vector<std::size_t>> supports;
    enumerate_supports(dim, params.support, supports);

    // Flatten candidates so the parallel loop has a plain index space.
    std::vector<Element> candidates;
    candidates.reserve(std::size_t(total));
    for (const auto& s : supports) {
        std::vector<std::size_t> pick(s.size(), 0);
        for (;;) {
            Element x(params.level);
            for (std::size_t i = 0; i < s.size(); ++i) x.coeffs[s[i]] = nz_coeffs[pick[i]];
            candidates.push_back(std::move(x));
            std::size_t k = s.size();
            while (k > 0 && ++pick[k - 1] == nz_coeffs.size()) pick[--k] = 0;
            if (k == 0) break;
        }
    }

    std::vector<std::vector<ZeroDivisorPair>> found(candidates.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const Annihilator ann = annihilator(candidates[c], params.right);
        for (const Element& y : ann.basis)
            found[c].push_back({params.level, candidates[c], y});
    }

    // Candidates were generated in lexicographic (support indices, coeffs)
    // order already; concatenation preserves it.
    std::vector<ZeroDivisorPair> out;
    for (auto& v : found)
        for (auto& p : v) out.push_back(std::move(p));
    return out;
}

SmokeReport no_zero_divisors_smoke(int level, int samples, unsigned long long seed) {
    if (level > 3)
        throw std::invalid_argument(
            "no_zero_divisors_smoke: A_n has zero divisors for n >= 4; the claim only holds "
            "for n <= 3");
    SmokeReport rep;
    rep.level = level;
    rep.samples = samples;
    rep.seed = seed;
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        const Element x = random_element(level, rng);
        const Element y = random_element(level, rng);
        if (norm2(cd_mul(x, y)) != norm2(x) * norm2(y)) {
            rep.message = "norm multiplicativity fails at sample " + std::to_string(i);
            return rep;
        }
        if (!x.is_zero() && !annihilator(x).basis.empty()) {
            rep.message = "nonempty annihilator at sample " + std::to_string(i);
            return rep;
        }
    }
    rep.pass = true;
    rep.message = "pass";
    return rep;
}

}  // namespace cdk
