#ifndef SIMPLAP_SPECTRA_HPP
#define SIMPLAP_SPECTRA_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simplap/operators.hpp"

namespace simplap {

/// Eigenvalue multiset in weakly decreasing order, with a grouping
/// tolerance remembered from the producing computation.
struct Spectrum {
    std::vector<double> values;
    double tol = 1e-9;

    std::size_t size() const { return values.size(); }

    /// 1-based i-th largest eigenvalue.
    double down(std::size_t i) const { return values.at(i - 1); }
    /// 1-based i-th smallest eigenvalue.
    double up(std::size_t i) const { return values.at(values.size() - i); }

    double min() const { return values.empty() ? 0.0 : values.back(); }
    double max() const { return values.empty() ? 0.0 : values.front(); }

    int multiplicity(double lambda, double use_tol = -1.0) const {
        const double t = use_tol < 0 ? tol : use_tol;
        int count = 0;
        for (double v : values)
            if (std::abs(v - lambda) <= t)
                ++count;
        return count;
    }

    /// Multiplicity-grouped form; adjacent values within tol coalesce.
    std::vector<std::pair<double, int>> grouped(double use_tol = -1.0) const {
        const double t = use_tol < 0 ? tol : use_tol;
        std::vector<std::pair<double, int>> out;
        for (double v : values) {
            if (!out.empty() && std::abs(out.back().first - v) <= t)
                ++out.back().second;
            else
                out.emplace_back(v, 1);
        }
        return out;
    }
};

struct EigenDecomposition {
    std::vector<double> values;  // weakly decreasing
    RealMatrix vectors;          // column i pairs with values[i]
};

/**
 * Cyclic Jacobi eigensolver for dense symmetric matrices. Sweeps rotate
 * every off-diagonal pair; iteration stops once the off-diagonal Frobenius
 * mass drops below 1e-14 times the Frobenius norm of the input.
 */
inline EigenDecomposition jacobi_eigen(const RealMatrix& input, int max_sweeps = 80) {
    const std::size_t n = input.rows();
    if (input.cols() != n)
        throw std::invalid_argument("jacobi_eigen: matrix is not square");
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            scale = std::max(scale, std::abs(input(i, j)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(input(i, j) - input(j, i)) > 1e-12 * std::max(1.0, scale))
                throw std::invalid_argument("jacobi_eigen: matrix is not symmetric");

    RealMatrix a = input;
    RealMatrix v = RealMatrix::identity(n);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            norm += a(i, j) * a(i, j);
    norm = std::sqrt(norm);
    const double target = 1e-14 * norm;

    auto offdiag = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                s += 2.0 * a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    int sweep = 0;
    while (n > 1 && offdiag() > target) {
        if (++sweep > max_sweeps)
            throw std::runtime_error("jacobi_eigen: no convergence in sweep budget");
        for (std::size_t p = 0; p < n - 1; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0)
                    continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0)
                                     ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                                     : 1.0 / (theta - std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double api = a(p, i), aqi = a(q, i);
                    a(p, i) = c * api - s * aqi;
                    a(q, i) = s * api + c * aqi;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * viq;
                    v(i, q) = s * vip + c * viq;
                }
            }
    }

    EigenDecomposition out;
    out.values.resize(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i)
        diag[i] = a(i, i);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return diag[x] > diag[y]; });
    out.vectors = RealMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = diag[order[j]];
        for (std::size_t i = 0; i < n; ++i)
            out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

/// All eigenvalues of a symmetric real matrix, weakly decreasing.
inline Spectrum eigenvalues_symmetric(const RealMatrix& a) {
    Spectrum s;
    s.values = jacobi_eigen(a).values;
    return s;
}

/**
 * Spectrum of a weighted operator via symmetrization. Values in (-tol, 0)
 * are clamped to zero, which is the right reading for the positive
 * semidefinite Laplacians this is used on.
 */
inline Spectrum spectrum_of(const OperatorMatrix& m, double tol = 1e-9) {
    Spectrum s = eigenvalues_symmetric(symmetrize(m));
    s.tol = tol;
    for (double& v : s.values)
        if (v < 0.0 && v > -tol)
            v = 0.0;
    return s;
}

/// Multiset equality of the nonzero parts, pairwise within tol.
inline bool multiset_equal_nonzero(const Spectrum& a, const Spectrum& b, double tol) {
    std::vector<double> av, bv;
    for (double v : a.values)
        if (std::abs(v) > tol)
            av.push_back(v);
    for (double v : b.values)
        if (std::abs(v) > tol)
            bv.push_back(v);
    if (av.size() != bv.size())
        return false;
    for (std::size_t i = 0; i < av.size(); ++i)
        if (std::abs(av[i] - bv[i]) > tol)
            return false;
    return true;
}

/// Full multiset equality (zeros included), pairwise within tol.
inline bool multiset_equal(const Spectrum& a, const Spectrum& b, double tol) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a.values[i] - b.values[i]) > tol)
            return false;
    return true;
}

/// Largest pairwise deviation between two sorted equal-size multisets.
inline double multiset_residual(const Spectrum& a, const Spectrum& b) {
    if (a.size() != b.size())
        return std::numeric_limits<double>::infinity();
    double r = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        r = std::max(r, std::abs(a.values[i] - b.values[i]));
    return r;
}

inline Spectrum multiset_union(const Spectrum& a, const Spectrum& b) {
    Spectrum u;
    u.tol = std::max(a.tol, b.tol);
    u.values = a.values;
    u.values.insert(u.values.end(), b.values.begin(), b.values.end());
    std::sort(u.values.begin(), u.values.end(), std::greater<double>());
    return u;
}

/// All sums of `subset_size` eigenvalues, ascending.
struct SumSet {
    int subset_size = 0;
    std::vector<double> sums;

    /// 1-based m-th smallest sum.
    double up(std::size_t m) const { return sums.at(m - 1); }
    /// 1-based m-th largest sum.
    double down(std::size_t m) const { return sums.at(sums.size() - m); }
};

inline SumSet sum_set(const Spectrum& s, int subset_size) {
    const int n = static_cast<int>(s.size());
    if (subset_size < 1 || subset_size > n)
        throw std::invalid_argument("sum_set: subset size out of range");
    const std::uint64_t count = binomial(n, subset_size);
    if (count > 2000000ULL)
        throw std::invalid_argument("sum_set: enumeration guard exceeded");
    SumSet out;
    out.subset_size = subset_size;
    out.sums.reserve(count);
    for (const Face& idx : all_subsets(n, subset_size)) {
        double total = 0.0;
        for (int i : idx)
            total += s.values[i];
        out.sums.push_back(total);
    }
    std::sort(out.sums.begin(), out.sums.end());
    return out;
}

/**
 * Additive compound on the k-th exterior power basis (lexicographic
 * k-subsets): diagonal entries sum the chosen diagonal of M, and subsets
 * differing in one index couple through the signed original entry.
 */
template <typename T>
Matrix<T> additive_compound(const Matrix<T>& m, int k) {
    const int n = static_cast<int>(m.rows());
    if (m.cols() != m.rows())
        throw std::invalid_argument("additive_compound: matrix is not square");
    if (k < 1 || k > n)
        throw std::invalid_argument("additive_compound: order out of range");
    const std::vector<Face> basis = all_subsets(n, k);
    Matrix<T> out(basis.size(), basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a) {
        const std::uint64_t ma = mask_of(basis[a]);
        T diag(0);
        for (int i : basis[a])
            diag += m(i, i);
        out(a, a) = diag;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (a == b)
                continue;
            const std::uint64_t mb = mask_of(basis[b]);
            if (popcount64(ma & mb) != k - 1)
                continue;
            const int i = face_of(ma & ~mb)[0];
            const int j = face_of(mb & ~ma)[0];
            const T entry = m(i, j);
            if (entry == T(0))
                continue;
            out(a, b) = T(sign_eps(basis[a], basis[b])) * entry;
        }
    }
    return out;
}

struct InterlacingReport {
    bool ok = true;
    std::size_t violated_index = 0;
    double residual = 0.0;
};

/**
 * Check that the spectrum of the principal submatrix on `subset` interlaces
 * the spectrum of the full operator, within tol.
 */
inline InterlacingReport interlacing_check(const OperatorMatrix& m,
                                           const std::vector<std::size_t>& subset,
                                           double tol) {
    if (subset.empty())
        throw std::invalid_argument("interlacing_check: empty index subset");
    OperatorMatrix sub;
    sub.entries = m.entries.principal_submatrix(subset);
    for (std::size_t i : subset) {
        sub.row_basis.push_back(m.row_basis.at(i));
        sub.row_weights.push_back(m.row_weights.at(i));
    }
    sub.col_basis = sub.row_basis;
    sub.col_weights = sub.row_weights;

    const Spectrum full = spectrum_of(m, tol);
    const Spectrum part = spectrum_of(sub, tol);
    const std::size_t n = full.size(), k = part.size();
    InterlacingReport report;
    for (std::size_t i = 1; i <= k; ++i) {
        const double lower = full.down(n - k + i);
        const double upper = full.down(i);
        const double mid = part.down(i);
        if (mid < lower - tol || mid > upper + tol) {
            report.ok = false;
            report.violated_index = i;
            report.residual = std::max(lower - mid, mid - upper);
            return report;
        }
        report.residual = std::max({report.residual, lower - mid, mid - upper});
    }
    return report;
}

}  // namespace simplap

#endif  // SIMPLAP_SPECTRA_HPP
