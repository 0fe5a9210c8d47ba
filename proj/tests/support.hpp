#pragma once

// Test-only helpers and independent oracles. Nothing here calls into the
// library's elimination engine or Jacobian ring code.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hodgejac/poly.hpp"

namespace hodgejac::testing {

inline GradedPolynomial poly(const std::string& text, const Field& field = Field::rationals(),
                             std::size_t nvars = 0) {
    ParseOptions opts;
    if (nvars != 0) opts.nvars = nvars;
    return parse_polynomial(text, field, opts);
}

inline std::string fermat_text(std::size_t nvars, int d) {
    std::string s;
    for (std::size_t i = 0; i < nvars; ++i) {
        if (i != 0) s += " + ";
        s += "x" + std::to_string(i) + "^" + std::to_string(d);
    }
    return s;
}

inline GradedPolynomial fermat(std::size_t nvars, int d, const Field& field = Field::rationals()) {
    return poly(fermat_text(nvars, d), field);
}

// Pascal's triangle, independent of the library's multiplicative binomial.
inline std::uint64_t pascal(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    std::vector<std::uint64_t> row(n + 1, 0);
    row[0] = 1;
    for (std::uint64_t i = 1; i <= n; ++i) {
        for (std::uint64_t j = i; j > 0; --j) row[j] += row[j - 1];
    }
    return row[r];
}

// For Fermat f = sum x_i^d the Jacobian ideal is (x_i^{d-1}), so R^k is
// spanned by exponent vectors with every entry <= d-2: count them.
inline std::size_t fermat_quotient_dim(std::size_t nvars, int d, int k) {
    if (k < 0) return 0;
    std::vector<std::size_t> counts(static_cast<std::size_t>(k) + 1, 0);
    counts[0] = 1;
    for (std::size_t v = 0; v < nvars; ++v) {
        std::vector<std::size_t> next(counts.size(), 0);
        for (std::size_t total = 0; total < counts.size(); ++total) {
            for (int e = 0; e <= d - 2 && total + static_cast<std::size_t>(e) < counts.size(); ++e) {
                next[total + static_cast<std::size_t>(e)] += counts[total];
            }
        }
        counts = std::move(next);
    }
    return counts[static_cast<std::size_t>(k)];
}

// Textbook dense Gauss-Jordan over Q on mpq_class entries; returns the rank.
inline std::size_t brute_rank(std::vector<std::vector<mpq_class>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const mpq_class factor = m[r][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[r][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Multiplication matrix of the Jacobian generators in degree k, built from
// explicit exponent arithmetic on the Fermat form sum x_i^d (each generator
// multiple m * d x_i^{d-1} is a single monomial).
inline std::vector<std::vector<mpq_class>> fermat_jacobian_rows(std::size_t nvars, int d, int k) {
    const auto cols = monomials_of_degree(nvars, k);
    std::vector<std::vector<mpq_class>> rows;
    if (k < d - 1) return rows;
    for (const auto& m : monomials_of_degree(nvars, k - (d - 1))) {
        for (std::size_t i = 0; i < nvars; ++i) {
            std::vector<mpq_class> row(cols.size(), 0);
            std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().end());
            e[i] += static_cast<std::uint32_t>(d - 1);
            for (std::size_t c = 0; c < cols.size(); ++c) {
                if (std::vector<std::uint32_t>(cols[c].exponents().begin(), cols[c].exponents().end()) == e) {
                    row[c] = d;
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

inline long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Random form of degree k with small integer coefficients.
inline GradedPolynomial random_form(std::size_t nvars, int k, std::mt19937_64& rng,
                                    const Field& field = Field::rationals(), long bound = 5) {
    GradedPolynomial p(nvars, k, field);
    for (const auto& m : monomials_of_degree(nvars, k)) p.add_term(m, Scalar(draw(rng, -bound, bound), field));
    return p;
}

}  // namespace hodgejac::testing
