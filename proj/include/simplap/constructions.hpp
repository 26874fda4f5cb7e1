#ifndef SIMPLAP_CONSTRUCTIONS_HPP
#define SIMPLAP_CONSTRUCTIONS_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simplap/weighted.hpp"

namespace simplap {

/**
 * Join of two weighted complexes on disjoint label sets: the vertex order
 * keeps the first complex's vertices, then the second's, and the faces are
 * all unions F1 ∪ F2. Weights carry over unchanged.
 */
inline WeightedComplex join(const WeightedComplex& a, const WeightedComplex& b) {
    const Complex& x1 = a.complex();
    const Complex& x2 = b.complex();
    std::vector<std::string> labels = x1.vertex_labels();
    for (const auto& l : x2.vertex_labels()) {
        for (const auto& existing : x1.vertex_labels())
            if (existing == l)
                throw std::invalid_argument("join: vertex label collision: " + l);
        labels.push_back(l);
    }
    const int shift = x1.n();
    std::vector<std::uint64_t> masks;
    for (int k1 = -1; k1 <= x1.dim(); ++k1)
        for (const Face& f1 : x1.faces(k1)) {
            const std::uint64_t m1 = mask_of(f1);
            for (int k2 = -1; k2 <= x2.dim(); ++k2)
                for (const Face& f2 : x2.faces(k2))
                    masks.push_back(m1 | (mask_of(f2) << shift));
        }
    Complex joined = Complex::from_masks(labels, masks, false);
    std::vector<Rational> weights = a.weights();
    weights.insert(weights.end(), b.weights().begin(), b.weights().end());
    return WeightedComplex(std::move(joined), std::move(weights));
}

inline WeightedComplex multi_join(const std::vector<WeightedComplex>& parts) {
    if (parts.empty())
        throw std::invalid_argument("multi_join: no factors");
    WeightedComplex acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        acc = join(acc, parts[i]);
    return acc;
}

/// Subsets of the ground set avoiding some k-face: the downward closure of
/// the complements of the k-faces.
inline Complex star_complex(const Complex& x, int k) {
    if (x.f(k) == 0)
        throw std::invalid_argument("star_complex: no faces of the requested dimension");
    const std::uint64_t full = (x.n() >= 64) ? ~0ULL : ((1ULL << x.n()) - 1);
    std::vector<std::uint64_t> generators;
    for (const Face& sigma : x.faces(k))
        generators.push_back(full & ~mask_of(sigma));
    return Complex::from_masks(x.vertex_labels(), generators, true);
}

/// Downward closure of the (k+1)-subsets of the ground set that are not
/// k-faces of the complex.
inline Complex complement_complex(const Complex& x, int k) {
    std::vector<std::uint64_t> generators;
    for (const Face& cand : all_subsets(x.n(), k + 1)) {
        const std::uint64_t m = mask_of(cand);
        if (!x.contains(m))
            generators.push_back(m);
    }
    if (generators.empty())
        throw std::invalid_argument("complement_complex: complete skeleton, no generators");
    return Complex::from_masks(x.vertex_labels(), generators, true);
}

/**
 * Canonical Alexander dual {V∖σ : σ ∉ X}. Downward closed by construction;
 * void exactly when X is the full simplex, and contains the empty face
 * exactly when the full vertex set is not a face.
 */
inline Complex alexander_dual(const Complex& x) {
    const int n = x.n();
    if (n > 20)
        throw std::invalid_argument("alexander_dual: ground set too large to enumerate");
    const std::uint64_t full = (1ULL << n) - 1;
    std::vector<std::uint64_t> masks;
    for (std::uint64_t s = 0; s <= full; ++s)
        if (!x.contains(s))
            masks.push_back(full & ~s);
    return Complex::from_masks(x.vertex_labels(), masks, false);
}

/// Full simplex on n labeled vertices.
inline Complex simplex(int n, const std::string& prefix = "v") {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i)
        labels[i] = prefix + std::to_string(i);
    return Complex::from_facets(labels, {std::vector<std::string>(labels)});
}

/// p-skeleton of the full simplex on n vertices.
inline Complex skeleton_simplex(int n, int p, const std::string& prefix = "v") {
    return simplex(n, prefix).skeleton(p);
}

/// Boundary of the k-simplex: the (k-1)-skeleton on k+1 vertices, a
/// triangulated (k-1)-sphere.
inline Complex sphere_boundary(int k, const std::string& prefix = "v") {
    if (k < 1)
        throw std::invalid_argument("sphere_boundary: k must be at least 1");
    return skeleton_simplex(k + 1, k - 1, prefix);
}

/// Clique complex of the complete graph on 2n vertices minus the perfect
/// matching {u2i, u2i+1}: faces are the subsets avoiding every matched pair.
inline Complex cocktail_party(int n) {
    if (n < 1)
        throw std::invalid_argument("cocktail_party: n must be at least 1");
    const int verts = 2 * n;
    std::vector<std::string> labels(verts);
    for (int i = 0; i < verts; ++i)
        labels[i] = "u" + std::to_string(i);
    std::vector<std::uint64_t> masks;
    const std::uint64_t full = (1ULL << verts) - 1;
    for (std::uint64_t s = 0; s <= full; ++s) {
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            const std::uint64_t pair = 3ULL << (2 * i);
            if ((s & pair) == pair) {
                ok = false;
                break;
            }
        }
        if (ok)
            masks.push_back(s);
    }
    return Complex::from_masks(labels, masks, false);
}

/// Clique complex of n triangles glued at one common vertex.
inline Complex friendship(int n) {
    if (n < 1)
        throw std::invalid_argument("friendship: n must be at least 1");
    std::vector<std::string> labels{"c"};
    std::vector<std::vector<std::string>> facets;
    for (int i = 0; i < n; ++i) {
        const std::string xi = "x" + std::to_string(i);
        const std::string yi = "y" + std::to_string(i);
        labels.push_back(xi);
        labels.push_back(yi);
        facets.push_back({"c", xi, yi});
    }
    return Complex::from_facets(labels, facets);
}

/// Per-block weight data for the extremal gap family.
struct ExtremalWeights {
    std::vector<Rational> block_constants;  // one constant per boundary block
    std::vector<Rational> apex;             // per-vertex weights on the simplex block
};

/**
 * The gap-extremal family: t copies of the boundary of the d-simplex,
 * joined with a full simplex on r vertices. Block i carries the constant
 * weight block_constants[i]; the simplex block carries the apex weights.
 * Exposes the closed-form spectral gap of the family.
 */
class ExtremalFamily {
  public:
    ExtremalFamily(int d, int t, int r, ExtremalWeights weights)
        : d_(d), t_(t), r_(r), weights_(std::move(weights)) {
        if (d < 1 || t < 1 || r < 1)
            throw std::invalid_argument("extremal family: d, t, r must be positive");
        if (static_cast<int>(weights_.block_constants.size()) != t ||
            static_cast<int>(weights_.apex.size()) != r)
            throw std::invalid_argument("extremal family: weight shape mismatch");
        for (int i = 0; i < t; ++i) {
            Complex block = sphere_boundary(d, "b" + std::to_string(i) + "v");
            std::vector<Rational> w(block.n(), weights_.block_constants[i]);
            factors_.emplace_back(std::move(block), std::move(w));
        }
        factors_.emplace_back(simplex(r, "a"), weights_.apex);
        weighted_ = multi_join(factors_);
    }

    static ExtremalFamily unit(int d, int t, int r) {
        ExtremalWeights w;
        w.block_constants.assign(t, Rational(1));
        w.apex.assign(r, Rational(1));
        return ExtremalFamily(d, t, r, std::move(w));
    }

    const WeightedComplex& weighted() const { return weighted_; }
    const std::vector<WeightedComplex>& factors() const { return factors_; }
    int d() const { return d_; }
    int t() const { return t_; }
    int r() const { return r_; }

    /// How many boundary blocks a k-face can saturate.
    int theta(int k) const {
        if (k < -1 || k > d_ * t_ + r_ - 1)
            throw std::invalid_argument("extremal family: k out of range");
        if (k <= d_ * t_ - 2)
            return (k + 1) / d_;
        return t_;
    }

    /// Closed-form spectral gap: cheapest (t - theta) block sums plus the
    /// full weight of the simplex block.
    Rational gap_formula(int k) const {
        const int keep = t_ - theta(k);
        std::vector<Rational> sums;
        for (int i = 0; i < t_; ++i)
            sums.push_back(Rational(d_ + 1) * weights_.block_constants[i]);
        std::sort(sums.begin(), sums.end());
        Rational gap(0);
        for (int i = 0; i < keep; ++i)
            gap += sums[i];
        for (const Rational& w : weights_.apex)
            gap += w;
        return gap;
    }

  private:
    int d_, t_, r_;
    ExtremalWeights weights_;
    std::vector<WeightedComplex> factors_;
    WeightedComplex weighted_;
};

/**
 * Structural test for the gap-equality family: the missing faces must be
 * disjoint (d+1)-blocks, the faces must be exactly the unions of proper
 * block subsets with arbitrary subsets of the remainder, and the weights
 * must be constant on each block.
 */
inline bool matches_extremal_structure(const WeightedComplex& w, int d, int k) {
    const Complex& x = w.complex();
    if (x.is_void() || x.dim() != k)
        return false;
    const auto missing = x.missing_faces();
    if (missing.empty())
        return false;
    std::uint64_t covered = 0;
    std::vector<std::uint64_t> blocks;
    for (const Face& mf : missing) {
        if (static_cast<int>(mf.size()) != d + 1)
            return false;
        const std::uint64_t m = mask_of(mf);
        if (m & covered)
            return false;
        covered |= m;
        blocks.push_back(m);
    }
    const int n = x.n();
    const int t = static_cast<int>(blocks.size());
    const int r = n - t * (d + 1);
    if (r < 1 || t != n - k - 1)
        return false;
    // Face count of the predicted join, then one-sided membership.
    std::uint64_t expected = 1;
    for (int i = 0; i < t; ++i)
        expected *= (1ULL << (d + 1)) - 1;
    expected <<= r;
    std::uint64_t actual = 0;
    for (int kk = -1; kk <= x.dim(); ++kk)
        actual += x.f(kk);
    if (actual != expected)
        return false;
    const std::uint64_t full = (1ULL << n) - 1;
    for (std::uint64_t s = 0; s <= full; ++s) {
        bool proper = true;
        for (std::uint64_t b : blocks)
            if ((s & b) == b) {
                proper = false;
                break;
            }
        if (proper && !x.contains(s))
            return false;
    }
    for (std::uint64_t b : blocks) {
        const Face verts = face_of(b);
        for (std::size_t i = 1; i < verts.size(); ++i)
            if (w.weight(verts[i]) != w.weight(verts[0]))
                return false;
    }
    return true;
}

}  // namespace simplap

#endif  // SIMPLAP_CONSTRUCTIONS_HPP
