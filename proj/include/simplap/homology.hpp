#ifndef SIMPLAP_HOMOLOGY_HPP
#define SIMPLAP_HOMOLOGY_HPP

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "simplap/constructions.hpp"
#include "simplap/matrix.hpp"
#include "simplap/operators.hpp"
#include "simplap/spectra.hpp"

namespace simplap {

/**
 * Rank of an integer matrix by Bareiss fraction-free elimination. All
 * intermediate values stay integral (divisions are exact), so the rank is
 * exact regardless of entry growth.
 */
inline std::size_t rank_bareiss(IntMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    BigInt prev(1);
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m(pivot, col) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m(pivot, j), m(rank, j));
        const BigInt p = m(rank, col);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const BigInt factor = m(i, col);
            for (std::size_t j = 0; j < cols; ++j) {
                BigInt value = p * m(i, j) - factor * m(rank, j);
                m(i, j) = value / prev;
            }
        }
        prev = p;
        ++rank;
    }
    return rank;
}

/// Signed incidence matrix of the coboundary map as exact integers.
inline IntMatrix coboundary_int(const Complex& x, int k) {
    const auto& rows = x.faces(k + 1);
    const auto& cols = x.faces(k);
    std::unordered_map<std::uint64_t, std::size_t> col_index;
    for (std::size_t j = 0; j < cols.size(); ++j)
        col_index[mask_of(cols[j])] = j;
    IntMatrix d(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::uint64_t m = mask_of(rows[i]);
        for (std::size_t pos = 0; pos < rows[i].size(); ++pos) {
            auto it = col_index.find(m & ~(1ULL << rows[i][pos]));
            if (it != col_index.end())
                d(i, it->second) = (pos % 2 == 0) ? 1 : -1;
        }
    }
    return d;
}

/// Reduced Betti numbers indexed from dimension -1.
struct BettiVector {
    int dim = -2;
    std::vector<std::int64_t> counts;  // index k+1

    std::int64_t at(int k) const {
        const int i = k + 1;
        if (i < 0 || i >= static_cast<int>(counts.size()))
            return 0;
        return counts[i];
    }
};

/**
 * Exact reduced Betti numbers over the rationals: b_k is the k-cochain
 * count minus the ranks of the coboundary maps leaving and entering
 * dimension k.
 */
inline BettiVector betti_exact(const Complex& x) {
    if (x.is_void())
        throw std::invalid_argument("betti_exact: void complex");
    BettiVector out;
    out.dim = x.dim();
    std::vector<std::size_t> rank(out.dim + 2, 0);  // rank[k+1] = rank d_k
    for (int k = -1; k < out.dim; ++k)
        rank[k + 1] = rank_bareiss(coboundary_int(x, k));
    out.counts.resize(out.dim + 2);
    for (int k = -1; k <= out.dim; ++k) {
        std::int64_t b = static_cast<std::int64_t>(x.f(k));
        if (k < out.dim)
            b -= static_cast<std::int64_t>(rank[k + 1]);
        if (k > -1)
            b -= static_cast<std::int64_t>(rank[k]);
        out.counts[k + 1] = b;
    }
    return out;
}

/**
 * Kernel dimension of the weighted Laplacian at dimension k, counted as
 * eigenvalues below the threshold. Equals the exact Betti number for every
 * positive weighting.
 */
inline int betti_hodge(const WeightedComplex& w, int k, double tol = -1.0) {
    if (tol < 0)
        tol = kernel_tol(w);
    const Spectrum s = spectrum_of(full_laplacian(w, k), tol);
    int count = 0;
    for (double v : s.values)
        if (v < tol)
            ++count;
    return count;
}

/**
 * Homology duality against the canonical Alexander dual: the (k-1)-th
 * Betti number of the dual equals the (n-2-k)-th of the complex for
 * 0 <= k <= n-1. A void dual contributes zeros.
 */
inline bool alexander_check(const Complex& x) {
    const int n = x.n();
    const Complex dual = alexander_dual(x);
    BettiVector bx = betti_exact(x);
    BettiVector bd;
    if (!dual.is_void())
        bd = betti_exact(dual);
    for (int k = 0; k <= n - 1; ++k)
        if (bd.at(k - 1) != bx.at(n - 2 - k))
            return false;
    return true;
}

/// Reduced Euler characteristic both ways: alternating face counts against
/// alternating Betti numbers.
inline bool euler_consistent(const Complex& x) {
    const BettiVector b = betti_exact(x);
    std::int64_t faces = 0, betti = 0;
    for (int k = -1; k <= x.dim(); ++k) {
        const std::int64_t sign = (k % 2 == 0) ? 1 : -1;  // k odd (incl. -1) negative
        faces += sign * static_cast<std::int64_t>(x.f(k));
        betti += sign * b.at(k);
    }
    return faces == betti;
}

}  // namespace simplap

#endif  // SIMPLAP_HOMOLOGY_HPP
