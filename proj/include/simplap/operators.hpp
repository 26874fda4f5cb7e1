#ifndef SIMPLAP_OPERATORS_HPP
#define SIMPLAP_OPERATORS_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "simplap/matrix.hpp"
#include "simplap/weighted.hpp"

namespace simplap {

/**
 * A matrix together with its labeled simplex basis and the basis weights
 * that make it the representation of a self-adjoint operator in a weighted
 * (orthogonal but not orthonormal) basis. Square operators here satisfy
 * W·M = Mᵀ·W exactly, W = diag(basis weights).
 */
struct OperatorMatrix {
    RatMatrix entries;
    std::vector<Face> row_basis;
    std::vector<Face> col_basis;
    std::vector<Rational> row_weights;
    std::vector<Rational> col_weights;

    std::size_t rows() const { return entries.rows(); }
    std::size_t cols() const { return entries.cols(); }
    bool square() const { return rows() == cols(); }
};

namespace detail {

inline void check_k(const WeightedComplex& w, int k, const char* where) {
    if (k < -1 || k > w.complex().n() - 1)
        throw std::invalid_argument(std::string(where) + ": dimension out of range");
}

inline std::vector<Rational> basis_weights(const WeightedComplex& w,
                                           const std::vector<Face>& basis) {
    std::vector<Rational> out;
    out.reserve(basis.size());
    for (const Face& f : basis)
        out.push_back(w.simplex_weight(f));
    return out;
}

}  // namespace detail

/**
 * Signed incidence matrix of the coboundary map from k-cochains to
 * (k+1)-cochains: entry (sigma, tau) is (-1)^j when tau is sigma with its
 * (j+1)-st vertex removed.
 */
inline OperatorMatrix coboundary(const WeightedComplex& w, int k) {
    detail::check_k(w, k, "coboundary");
    const Complex& x = w.complex();
    OperatorMatrix op;
    op.col_basis = x.faces(k);
    op.row_basis = x.faces(k + 1);
    op.col_weights = detail::basis_weights(w, op.col_basis);
    op.row_weights = detail::basis_weights(w, op.row_basis);
    op.entries = RatMatrix(op.row_basis.size(), op.col_basis.size());

    std::unordered_map<std::uint64_t, std::size_t> col_index;
    for (std::size_t j = 0; j < op.col_basis.size(); ++j)
        col_index[mask_of(op.col_basis[j])] = j;

    for (std::size_t i = 0; i < op.row_basis.size(); ++i) {
        const Face& sigma = op.row_basis[i];
        const std::uint64_t m = mask_of(sigma);
        for (std::size_t pos = 0; pos < sigma.size(); ++pos) {
            const std::uint64_t tau = m & ~(1ULL << sigma[pos]);
            auto it = col_index.find(tau);
            if (it != col_index.end())
                op.entries(i, it->second) = (pos % 2 == 0) ? 1 : -1;
        }
    }
    return op;
}

/// Weighted adjoint of the coboundary: W_k⁻¹ · dᵀ · W_{k+1} in the
/// elementary-cochain bases.
inline OperatorMatrix adjoint_coboundary(const WeightedComplex& w, int k) {
    OperatorMatrix d = coboundary(w, k);
    OperatorMatrix op;
    op.row_basis = d.col_basis;
    op.col_basis = d.row_basis;
    op.row_weights = d.col_weights;
    op.col_weights = d.row_weights;
    op.entries = RatMatrix(op.row_basis.size(), op.col_basis.size());
    for (std::size_t i = 0; i < op.rows(); ++i)
        for (std::size_t j = 0; j < op.cols(); ++j) {
            const Rational& e = d.entries(j, i);
            if (e != 0)
                op.entries(i, j) = e * op.col_weights[j] / op.row_weights[i];
        }
    return op;
}

/**
 * Down Laplacian on the k-faces: diagonal entries sum the vertex weights of
 * the face; two faces sharing all but one vertex couple with the sign
 * pairing times the weight of the swapped-in vertex.
 */
inline OperatorMatrix down_laplacian(const WeightedComplex& w, int k) {
    detail::check_k(w, k, "down_laplacian");
    const Complex& x = w.complex();
    OperatorMatrix op;
    op.row_basis = op.col_basis = x.faces(k);
    op.row_weights = op.col_weights = detail::basis_weights(w, op.row_basis);
    const std::size_t m = op.row_basis.size();
    op.entries = RatMatrix(m, m);
    if (k == -1)
        return op;  // C^{-1} is one-dimensional and has no boundary below it
    for (std::size_t i = 0; i < m; ++i) {
        const Face& sigma = op.row_basis[i];
        op.entries(i, i) = w.weight_sum(sigma);
        const std::uint64_t ms = mask_of(sigma);
        for (std::size_t j = i + 1; j < m; ++j) {
            const Face& tau = op.row_basis[j];
            const std::uint64_t mt = mask_of(tau);
            if (popcount64(ms & mt) != k)
                continue;
            const int sign = sign_eps(sigma, tau);
            op.entries(i, j) = Rational(sign) * w.simplex_weight_mask(mt & ~ms);
            op.entries(j, i) = Rational(sign) * w.simplex_weight_mask(ms & ~mt);
        }
    }
    return op;
}

/**
 * Up Laplacian restricted to the k-faces of the complex: diagonal sums the
 * link weights; faces whose union is a (k+1)-face couple with the negated
 * sign pairing.
 */
inline OperatorMatrix up_laplacian_restricted(const WeightedComplex& w, int k) {
    detail::check_k(w, k, "up_laplacian_restricted");
    const Complex& x = w.complex();
    OperatorMatrix op;
    op.row_basis = op.col_basis = x.faces(k);
    op.row_weights = op.col_weights = detail::basis_weights(w, op.row_basis);
    const std::size_t m = op.row_basis.size();
    op.entries = RatMatrix(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        const Face& sigma = op.row_basis[i];
        const std::uint64_t ms = mask_of(sigma);
        op.entries(i, i) = w.weight_sum_mask(x.link_mask(ms));
        for (std::size_t j = i + 1; j < m; ++j) {
            const Face& tau = op.row_basis[j];
            const std::uint64_t mt = mask_of(tau);
            if (popcount64(ms & mt) != k || !x.contains(ms | mt))
                continue;
            const int sign = -sign_eps(sigma, tau);
            op.entries(i, j) = Rational(sign) * w.simplex_weight_mask(mt & ~ms);
            op.entries(j, i) = Rational(sign) * w.simplex_weight_mask(ms & ~mt);
        }
    }
    return op;
}

/**
 * Up Laplacian on the full binomial basis of all (k+1)-subsets of the
 * ground set; rows and columns of subsets outside the complex are zero, and
 * the restriction to the k-faces equals up_laplacian_restricted.
 */
inline OperatorMatrix up_laplacian_extended(const WeightedComplex& w, int k) {
    detail::check_k(w, k, "up_laplacian_extended");
    const Complex& x = w.complex();
    OperatorMatrix op;
    op.row_basis = op.col_basis = all_subsets(x.n(), k + 1);
    op.row_weights = op.col_weights = detail::basis_weights(w, op.row_basis);
    const std::size_t m = op.row_basis.size();
    op.entries = RatMatrix(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        const Face& sigma = op.row_basis[i];
        const std::uint64_t ms = mask_of(sigma);
        if (!x.contains(ms))
            continue;
        op.entries(i, i) = w.weight_sum_mask(x.link_mask(ms));
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i)
                continue;
            const Face& tau = op.row_basis[j];
            const std::uint64_t mt = mask_of(tau);
            if (popcount64(ms & mt) != k || !x.contains(ms | mt))
                continue;
            op.entries(i, j) =
                Rational(-sign_eps(sigma, tau)) * w.simplex_weight_mask(mt & ~ms);
        }
    }
    return op;
}

/**
 * Full weighted Laplacian on the k-faces. Off-diagonal entries survive
 * exactly on pairs sharing all but one vertex whose union is not a face;
 * when the union is a face the up and down couplings cancel.
 */
inline OperatorMatrix full_laplacian(const WeightedComplex& w, int k) {
    detail::check_k(w, k, "full_laplacian");
    const Complex& x = w.complex();
    OperatorMatrix op;
    op.row_basis = op.col_basis = x.faces(k);
    op.row_weights = op.col_weights = detail::basis_weights(w, op.row_basis);
    const std::size_t m = op.row_basis.size();
    op.entries = RatMatrix(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        const Face& sigma = op.row_basis[i];
        const std::uint64_t ms = mask_of(sigma);
        op.entries(i, i) = w.weight_sum_mask(x.link_mask(ms)) + w.weight_sum(sigma);
        for (std::size_t j = i + 1; j < m; ++j) {
            const Face& tau = op.row_basis[j];
            const std::uint64_t mt = mask_of(tau);
            if (popcount64(ms & mt) != k || x.contains(ms | mt))
                continue;
            const int sign = sign_eps(sigma, tau);
            op.entries(i, j) = Rational(sign) * w.simplex_weight_mask(mt & ~ms);
            op.entries(j, i) = Rational(sign) * w.simplex_weight_mask(ms & ~mt);
        }
    }
    return op;
}

/// Weighted Laplacian of the underlying graph, on the full vertex basis.
inline OperatorMatrix graph_laplacian(const WeightedComplex& w) {
    const Complex& x = w.complex();
    const int n = x.n();
    OperatorMatrix op;
    for (int v = 0; v < n; ++v)
        op.row_basis.push_back(Face{v});
    op.col_basis = op.row_basis;
    op.row_weights = op.col_weights = detail::basis_weights(w, op.row_basis);
    op.entries = RatMatrix(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v)
                continue;
            if (x.contains((1ULL << u) | (1ULL << v))) {
                op.entries(u, u) += w.weight(v);
                op.entries(u, v) = -w.weight(v);
            }
        }
    return op;
}

/// Rank-one-like weight matrix with every row equal to the weight vector.
inline OperatorMatrix j_matrix(const WeightedComplex& w) {
    const int n = w.complex().n();
    OperatorMatrix op;
    for (int v = 0; v < n; ++v)
        op.row_basis.push_back(Face{v});
    op.col_basis = op.row_basis;
    op.row_weights = op.col_weights = detail::basis_weights(w, op.row_basis);
    op.entries = RatMatrix(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            op.entries(u, v) = w.weight(v);
    return op;
}

inline OperatorMatrix operator_sum(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.row_basis != b.row_basis || a.col_basis != b.col_basis)
        throw std::invalid_argument("operator sum: bases differ");
    OperatorMatrix s = a;
    s.entries = a.entries + b.entries;
    return s;
}

/// Exact check that the weighted transpose symmetry W·M = Mᵀ·W holds.
inline bool is_weight_symmetric(const OperatorMatrix& m) {
    if (!m.square())
        return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m.row_weights[i] * m.entries(i, j) != m.entries(j, i) * m.row_weights[j])
                return false;
    return true;
}

/**
 * Conjugate by W^{1/2} to obtain the spectrum-preserving symmetric real
 * matrix. Entries are produced exactly symmetric: the (i,j) and (j,i)
 * slots share one square root of the exact product M_ij·M_ji.
 */
inline RealMatrix symmetrize(const OperatorMatrix& m) {
    if (!m.square())
        throw std::invalid_argument("symmetrize: matrix is not square");
    if (!is_weight_symmetric(m))
        throw std::invalid_argument("symmetrize: weighted symmetry check failed");
    const std::size_t n = m.rows();
    RealMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        s(i, i) = to_double(m.entries(i, i));
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational prod = m.entries(i, j) * m.entries(j, i);  // = M_ij^2 w_i/w_j >= 0
            double v = std::sqrt(to_double(prod));
            if (m.entries(i, j) < 0)
                v = -v;
            s(i, j) = s(j, i) = v;
        }
    }
    return s;
}

}  // namespace simplap

#endif  // SIMPLAP_OPERATORS_HPP
