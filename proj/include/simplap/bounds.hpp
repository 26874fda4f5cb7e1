#ifndef SIMPLAP_BOUNDS_HPP
#define SIMPLAP_BOUNDS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "simplap/homology.hpp"
#include "simplap/operators.hpp"
#include "simplap/spectra.hpp"
#include "simplap/weighted.hpp"

namespace simplap {

/// A lower bound on the spectral gap with the face that attains the
/// minimized quantity. Inapplicable when the complex has no missing face
/// (full simplex) or no k-faces.
struct GapBound {
    bool applicable = false;
    Rational value;
    Rational min_quantity;  // the minimized weight sum m_k (or its weak form)
    int d = 0;
    Face witness;
};

/// Smallest closed-star weight over the k-faces and its witness.
inline std::pair<Rational, Face> min_closed_star_weight(const WeightedComplex& w, int k) {
    const Complex& x = w.complex();
    if (x.f(k) == 0)
        throw std::invalid_argument("min_closed_star_weight: no k-faces");
    bool first = true;
    Rational best;
    Face witness;
    for (const Face& sigma : x.faces(k)) {
        const std::uint64_t m = mask_of(sigma);
        const Rational q = w.weight_sum_mask(m | x.link_mask(m));
        if (first || q < best) {
            best = q;
            witness = sigma;
            first = false;
        }
    }
    return {best, witness};
}

/// Gap lower bound from the closed-star weights: (d+1)·m_k − d·Σω.
inline GapBound gap_lower_bound(const WeightedComplex& w, int k) {
    GapBound out;
    const Complex& x = w.complex();
    if (x.f(k) == 0)
        return out;
    const auto hx = x.h();
    if (!hx.has_value())
        return out;
    out.d = *hx;
    auto [mk, witness] = min_closed_star_weight(w, k);
    out.min_quantity = mk;
    out.witness = witness;
    out.value = Rational(out.d + 1) * mk - Rational(out.d) * w.total_weight();
    out.applicable = true;
    return out;
}

/// Weaker gap lower bound using face weights only: (d+1)·min_σ ω(σ-sum) − d·Σω.
inline GapBound gap_lower_bound_weak(const WeightedComplex& w, int k) {
    GapBound out;
    const Complex& x = w.complex();
    if (x.f(k) == 0)
        return out;
    const auto hx = x.h();
    if (!hx.has_value())
        return out;
    out.d = *hx;
    bool first = true;
    for (const Face& sigma : x.faces(k)) {
        const Rational q = w.weight_sum(sigma);
        if (first || q < out.min_quantity) {
            out.min_quantity = q;
            out.witness = sigma;
            first = false;
        }
    }
    out.value = Rational(out.d + 1) * out.min_quantity - Rational(out.d) * w.total_weight();
    out.applicable = true;
    return out;
}

/// Upper bound Σω on the largest eigenvalue, with the face-count lower
/// bound on the multiplicity at which it is attained.
struct RadiusBound {
    Rational upper;
    std::int64_t mult_lower = 0;
};

inline RadiusBound spectral_radius_bounds(const WeightedComplex& w, int k) {
    const Complex& x = w.complex();
    const int n = x.n();
    RadiusBound out;
    out.upper = w.total_weight();
    const std::int64_t fk = static_cast<std::int64_t>(x.f(k));
    const std::int64_t fk1 = static_cast<std::int64_t>(x.f(k + 1));
    const std::int64_t both = fk + fk1 - static_cast<std::int64_t>(binomial(n, k + 2));
    const std::int64_t down_part = fk - static_cast<std::int64_t>(binomial(n - 1, k + 1));
    const std::int64_t up_part = fk1 - static_cast<std::int64_t>(binomial(n - 1, k + 2));
    out.mult_lower = std::max({both, down_part, up_part, std::int64_t(0)});
    return out;
}

/// Weighted count of vertices adjacent to all of sigma but outside its
/// link, graded by how many boundary faces see them; maximized over X(k).
struct PenaltyTerm {
    Rational value;
    Face witness;
};

inline PenaltyTerm sigma_class_penalty(const WeightedComplex& w, int k) {
    const Complex& x = w.complex();
    if (k < 0 || x.f(k) == 0)
        throw std::invalid_argument("sigma_class_penalty: no k-faces");
    PenaltyTerm out;
    out.value = Rational(0);
    bool first = true;
    for (const Face& sigma : x.faces(k)) {
        const auto classes = x.sigma_classes(sigma);
        Rational p(0);
        for (std::size_t j = 0; j < classes.size(); ++j)
            for (int u : classes[j])
                p += Rational(static_cast<int>(j) + 1) * w.weight(u);
        if (first || p > out.value) {
            out.value = p;
            out.witness = sigma;
            first = false;
        }
    }
    return out;
}

/// Spectrum of the weighted graph Laplacian plus the weight matrix, the
/// reference operator for the eigenvalue and cohomology bounds.
inline Spectrum graph_reference_spectrum(const WeightedComplex& w, double tol) {
    return spectrum_of(operator_sum(graph_laplacian(w), j_matrix(w)), tol);
}

/**
 * Lower bound on the i-th smallest Laplacian eigenvalue at dimension k:
 * the i-th smallest (k+1)-fold eigenvalue sum of the graph reference
 * operator, minus k·Σω, minus the sigma-class penalty.
 */
inline double eigenvalue_lower_bound(const WeightedComplex& w, int k, std::size_t i,
                                     double tol = -1.0) {
    const Complex& x = w.complex();
    if (k < 0 || x.f(k) == 0)
        throw std::invalid_argument("eigenvalue_lower_bound: no k-faces");
    if (i < 1 || i > x.f(k))
        throw std::invalid_argument("eigenvalue_lower_bound: index out of range");
    if (tol < 0)
        tol = default_tol(w);
    const Spectrum ref = graph_reference_spectrum(w, tol);
    const SumSet sums = sum_set(ref, k + 1);
    const double penalty = to_double(sigma_class_penalty(w, k).value);
    return sums.up(i) - static_cast<double>(k) * to_double(w.total_weight()) - penalty;
}

/**
 * Upper bound on the k-th reduced cohomology dimension: how many
 * (k+1)-fold eigenvalue sums of the graph reference operator stay below
 * k·Σω plus the sigma-class penalty.
 */
inline std::int64_t cohomology_dim_upper(const WeightedComplex& w, int k, double tol = -1.0) {
    const Complex& x = w.complex();
    if (k < 0 || x.f(k) == 0)
        throw std::invalid_argument("cohomology_dim_upper: no k-faces");
    if (tol < 0)
        tol = default_tol(w);
    const Spectrum ref = graph_reference_spectrum(w, tol);
    const SumSet sums = sum_set(ref, k + 1);
    const double rhs = static_cast<double>(k) * to_double(w.total_weight()) +
                       to_double(sigma_class_penalty(w, k).value);
    std::int64_t count = 0;
    for (double s : sums.sums)
        if (s <= rhs + tol)
            ++count;
    return count;
}

/// Largest link-weight loss over the k-faces of the subcomplex.
inline Rational subcomplex_shift(const WeightedComplex& w, const WeightedComplex& sub, int k) {
    const Complex& x = w.complex();
    const Complex& xs = sub.complex();
    if (!xs.is_subcomplex_of(x))
        throw std::invalid_argument("subcomplex_shift: not a subcomplex");
    if (xs.f(k) == 0)
        throw std::invalid_argument("subcomplex_shift: subcomplex has no k-faces");
    Rational best(0);
    for (const Face& sigma : xs.faces(k)) {
        const std::uint64_t m = mask_of(sigma);
        const Rational loss = w.weight_sum_mask(x.link_mask(m) & ~xs.link_mask(m));
        if (loss > best)
            best = loss;
    }
    return best;
}

/// Lower bound on the subcomplex's i-th smallest eigenvalue from the
/// ambient complex: λ_i(X) − (k+2)·shift.
inline double subcomplex_eigenvalue_bound(const WeightedComplex& w, const WeightedComplex& sub,
                                          int k, std::size_t i, double tol = -1.0) {
    if (tol < 0)
        tol = default_tol(w);
    const Spectrum ambient = spectrum_of(full_laplacian(w, k), tol);
    if (i < 1 || i > ambient.size())
        throw std::invalid_argument("subcomplex_eigenvalue_bound: index out of range");
    return ambient.up(i) - (k + 2) * to_double(subcomplex_shift(w, sub, k));
}

/// Exact two-sided quantities of the boundary-link weight inequality at a
/// face: lhs sums link weights over the boundary faces; rhs is the
/// closed-form cap in terms of d = h(X).
struct LinkWeightSides {
    Rational lhs;
    Rational rhs;
};

inline LinkWeightSides link_weight_sides(const WeightedComplex& w, const Face& sigma, int d) {
    const Complex& x = w.complex();
    const int k = static_cast<int>(sigma.size()) - 1;
    if (k < 0 || !x.contains(sigma))
        throw std::invalid_argument("link_weight_sides: need a face of dimension >= 0");
    const std::uint64_t m = mask_of(sigma);
    LinkWeightSides out;
    out.lhs = Rational(0);
    for (int v : sigma) {
        const std::uint64_t eta = m & ~(1ULL << v);
        out.lhs += w.weight_sum_mask(x.link_mask(eta));
    }
    out.rhs = Rational(d) * w.total_weight() - Rational(d - 1) * w.weight_sum(sigma) +
              Rational(k + 1 - d) * w.weight_sum_mask(x.link_mask(m));
    return out;
}

/// Vanishing conditions: when one fires, the matching reduced cohomology
/// must vanish.
struct VanishingReport {
    bool gap_condition_applicable = false;
    bool gap_condition_fired = false;
    bool subcomplex_condition_evaluated = false;
    bool subcomplex_condition_fired = false;
};

inline VanishingReport vanishing_checks(const WeightedComplex& w, int k,
                                        const WeightedComplex* sub = nullptr) {
    VanishingReport out;
    const Complex& x = w.complex();
    const auto hx = x.h();
    if (hx.has_value() && x.f(k) > 0 && k >= 0) {
        out.gap_condition_applicable = true;
        const auto [mk, witness] = min_closed_star_weight(w, k);
        (void)witness;
        out.gap_condition_fired =
            mk * Rational(*hx + 1) > Rational(*hx) * w.total_weight();
    }
    if (sub != nullptr && k >= 1 && x.f(k) > 0 && sub->complex().f(k) > 0) {
        out.subcomplex_condition_evaluated = true;
        const double tol = default_tol(w);
        const Spectrum ref = graph_reference_spectrum(w, tol);
        const double lhs = ref.up(1);
        const double total = to_double(w.total_weight());
        const double penalty = to_double(sigma_class_penalty(w, k).value);
        const double shift = to_double(subcomplex_shift(w, *sub, k));
        const double rhs = (static_cast<double>(k) * total + penalty +
                            (k + 2) * shift) /
                           (k + 1);
        out.subcomplex_condition_fired = lhs > rhs + tol;
    }
    return out;
}

}  // namespace simplap

#endif  // SIMPLAP_BOUNDS_HPP
