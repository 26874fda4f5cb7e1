#ifndef SIMPLAP_WEIGHTED_HPP
#define SIMPLAP_WEIGHTED_HPP

#include <stdexcept>
#include <vector>

#include "simplap/complex.hpp"
#include "simplap/rational.hpp"
#include "simplap/rng.hpp"

namespace simplap {

/**
 * A complex paired with a positive vertex weight map. Simplex weights are
 * the product of the vertex weights, with the empty face weighing 1.
 */
class WeightedComplex {
  public:
    WeightedComplex() = default;

    WeightedComplex(Complex complex, std::vector<Rational> vertex_weights)
        : complex_(std::move(complex)), weights_(std::move(vertex_weights)) {
        if (static_cast<int>(weights_.size()) != complex_.n())
            throw std::invalid_argument("weight count must match vertex count");
        for (const Rational& w : weights_)
            if (w <= 0)
                throw std::invalid_argument("vertex weights must be positive");
    }

    /// The combinatorial case: every vertex weighs 1.
    static WeightedComplex unit(Complex complex) {
        std::vector<Rational> w(complex.n(), Rational(1));
        return WeightedComplex(std::move(complex), std::move(w));
    }

    static WeightedComplex random_weights(Complex complex, SplitMix64& rng) {
        std::vector<Rational> w(complex.n());
        for (auto& x : w)
            x = rng.weight();
        return WeightedComplex(std::move(complex), std::move(w));
    }

    const Complex& complex() const { return complex_; }
    const std::vector<Rational>& weights() const { return weights_; }
    const Rational& weight(int v) const { return weights_.at(v); }

    /// Product of vertex weights over any sorted tuple (membership in the
    /// complex is not required; the extended binomial basis uses this too).
    Rational simplex_weight(const Face& sigma) const {
        Rational w(1);
        for (int v : sigma)
            w *= weights_.at(v);
        return w;
    }

    Rational simplex_weight_mask(std::uint64_t mask) const {
        Rational w(1);
        for (int v = 0; mask != 0; ++v, mask >>= 1)
            if (mask & 1)
                w *= weights_.at(v);
        return w;
    }

    /// Total vertex weight of the ground set.
    Rational total_weight() const {
        Rational s(0);
        for (const Rational& w : weights_)
            s += w;
        return s;
    }

    Rational weight_sum(const std::vector<int>& verts) const {
        Rational s(0);
        for (int v : verts)
            s += weights_.at(v);
        return s;
    }

    Rational weight_sum_mask(std::uint64_t mask) const {
        Rational s(0);
        for (int v = 0; mask != 0; ++v, mask >>= 1)
            if (mask & 1)
                s += weights_.at(v);
        return s;
    }

    /// Same weights on a derived complex over the same ground set.
    WeightedComplex with_complex(Complex other) const {
        return WeightedComplex(std::move(other), weights_);
    }

    std::uint64_t weights_digest() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (const Rational& w : weights_)
            h = rational_digest(h, w);
        return h;
    }

  private:
    Complex complex_;
    std::vector<Rational> weights_;
};

/// Default comparison tolerance: 1e-8 * max(1, total weight).
inline double default_tol(const WeightedComplex& w) {
    const double s = to_double(w.total_weight());
    return 1e-8 * (s > 1.0 ? s : 1.0);
}

/// Kernel-detection threshold for Hodge checks: 1e-9 * total weight.
inline double kernel_tol(const WeightedComplex& w) {
    return 1e-9 * to_double(w.total_weight());
}

}  // namespace simplap

#endif  // SIMPLAP_WEIGHTED_HPP
