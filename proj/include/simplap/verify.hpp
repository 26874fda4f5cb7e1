#ifndef SIMPLAP_VERIFY_HPP
#define SIMPLAP_VERIFY_HPP

#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "simplap/bounds.hpp"
#include "simplap/constructions.hpp"
#include "simplap/homology.hpp"
#include "simplap/operators.hpp"
#include "simplap/rng.hpp"
#include "simplap/spectra.hpp"

namespace simplap {

/// Thrown by a check when an identity fails; the message is the witness.
struct CheckFail : std::runtime_error {
    explicit CheckFail(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

template <typename... Args>
std::string cat(Args&&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

inline void require(bool cond, const std::string& witness) {
    if (!cond)
        throw CheckFail(witness);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Reusable identity checks. Each returns the largest residual it observed
// and throws CheckFail with a witness if a structural condition breaks.
// ---------------------------------------------------------------------------

/// Nonzero spectrum of the full Laplacian = union of the nonzero up and
/// down spectra.
inline double spectrum_union_residual(const WeightedComplex& w, int k, double tol) {
    const Spectrum full = spectrum_of(full_laplacian(w, k), tol);
    const Spectrum down = spectrum_of(down_laplacian(w, k), tol);
    const Spectrum upr = spectrum_of(up_laplacian_restricted(w, k), tol);
    std::vector<double> lhs, rhs;
    for (double v : full.values)
        if (v > tol)
            lhs.push_back(v);
    for (double v : down.values)
        if (v > tol)
            rhs.push_back(v);
    for (double v : upr.values)
        if (v > tol)
            rhs.push_back(v);
    std::sort(rhs.begin(), rhs.end(), std::greater<double>());
    detail::require(lhs.size() == rhs.size(),
                    detail::cat("nonzero count mismatch at k=", k, ": ", lhs.size(),
                                " vs ", rhs.size()));
    double r = 0.0;
    for (std::size_t i = 0; i < lhs.size(); ++i)
        r = std::max(r, std::abs(lhs[i] - rhs[i]));
    detail::require(r <= tol, detail::cat("union residual ", r, " at k=", k));
    return r;
}

/// Nonzero spectra of the down Laplacian at k and the up Laplacian at k-1
/// coincide.
inline double up_down_shift_residual(const WeightedComplex& w, int k, double tol) {
    const Spectrum down = spectrum_of(down_laplacian(w, k), tol);
    const Spectrum up = spectrum_of(up_laplacian_restricted(w, k - 1), tol);
    detail::require(multiset_equal_nonzero(down, up, tol),
                    detail::cat("down/up shift mismatch at k=", k));
    std::vector<double> a, b;
    for (double v : down.values)
        if (v > tol)
            a.push_back(v);
    for (double v : up.values)
        if (v > tol)
            b.push_back(v);
    double r = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        r = std::max(r, std::abs(a[i] - b[i]));
    return r;
}

/// Complementary pairing of the down spectra of X and its star complex:
/// the i-th largest of one plus the co-i-th of the other sums to Σω.
inline double star_pairing_residual(const WeightedComplex& w, int k, double tol) {
    const Complex& x = w.complex();
    const int n = x.n();
    const Complex star = star_complex(x, k);
    const WeightedComplex ws = w.with_complex(star);
    const Spectrum a = spectrum_of(down_laplacian(w, k), tol);
    const Spectrum b = spectrum_of(down_laplacian(ws, n - k - 2), tol);
    detail::require(a.size() == b.size(),
                    detail::cat("star complex face count mismatch at k=", k));
    const double total = to_double(w.total_weight());
    double r = 0.0;
    const std::size_t fk = a.size();
    for (std::size_t i = 1; i <= fk; ++i)
        r = std::max(r, std::abs(a.down(i) + b.down(fk + 1 - i) - total));
    detail::require(r <= tol, detail::cat("star pairing residual ", r, " at k=", k));
    return r;
}

/// Closed-form spectrum of a complete p-skeleton at dimension k.
inline void complete_skeleton_check(int n, int p, const std::vector<Rational>& weights,
                                    int k, double tol_factor = 1e-8) {
    const WeightedComplex w(skeleton_simplex(n, p), weights);
    const double total = to_double(w.total_weight());
    const double tol = tol_factor * std::max(1.0, total);
    const Spectrum s = spectrum_of(full_laplacian(w, k), tol);
    const auto expect_value = [&](double value, std::uint64_t mult) {
        detail::require(s.multiplicity(value, tol) == static_cast<int>(mult),
                        detail::cat("multiplicity of ", value, " is ",
                                    s.multiplicity(value, tol), ", expected ", mult,
                                    " (n=", n, " p=", p, " k=", k, ")"));
    };
    if (k <= p - 1) {
        expect_value(total, binomial(n, k + 1));
        detail::require(s.size() == binomial(n, k + 1),
                        detail::cat("spectrum size at k=", k));
    } else if (k == p) {
        expect_value(total, binomial(n - 1, k));
        expect_value(0.0, binomial(n - 1, k + 1));
        detail::require(s.size() == binomial(n - 1, k) + binomial(n - 1, k + 1),
                        detail::cat("spectrum size at k=p=", k));
    }
}

/// Exact operator identity on the binomial basis: the up Laplacians of X
/// and of the complement complex sum to the complete-skeleton one, and all
/// three pairwise commute.
inline void complement_identity_check(const WeightedComplex& w, int k) {
    const Complex& x = w.complex();
    const Complex comp = complement_complex(x, k + 1);
    const Complex full =
        Complex::from_facets(x.vertex_labels(), {x.vertex_labels()}).skeleton(k + 1);
    const RatMatrix a = up_laplacian_extended(w, k).entries;
    const RatMatrix b = up_laplacian_extended(w.with_complex(comp), k).entries;
    const RatMatrix c = up_laplacian_extended(w.with_complex(full), k).entries;
    detail::require(a + b == c, detail::cat("up-Laplacian sum identity fails at k=", k));
    detail::require(a * b == b * a, detail::cat("commutator [X, complement] at k=", k));
    detail::require(a * c == c * a, detail::cat("commutator [X, complete] at k=", k));
    detail::require(b * c == c * b, detail::cat("commutator [complement, complete] at k=", k));
}

/// Spectral pairing between the extended up Laplacians of X and of its
/// complement complex, including the vanishing tail.
inline double complement_pairing_residual(const WeightedComplex& w, int k, double tol) {
    const Complex& x = w.complex();
    const int n = x.n();
    const Complex comp = complement_complex(x, k + 1);
    const Spectrum a = spectrum_of(up_laplacian_extended(w, k), tol);
    const Spectrum b = spectrum_of(up_laplacian_extended(w.with_complex(comp), k), tol);
    const std::uint64_t head = binomial(n - 1, k + 1);
    const double total = to_double(w.total_weight());
    double r = 0.0;
    for (std::size_t i = head + 1; i <= a.size(); ++i) {
        r = std::max(r, std::abs(a.down(i)));
        r = std::max(r, std::abs(b.down(i)));
    }
    detail::require(r <= tol, detail::cat("nonzero tail beyond index ", head, " at k=", k));
    for (std::size_t i = 1; i <= head; ++i)
        r = std::max(r, std::abs(a.down(i) + b.down(head + 1 - i) - total));
    detail::require(r <= tol, detail::cat("complement pairing residual ", r, " at k=", k));
    return r;
}

/// Largest eigenvalue capped by the total weight; multiplicity at the cap
/// at least the face-count bound.
inline void radius_check(const WeightedComplex& w, int k, double tol) {
    const Spectrum s = spectrum_of(full_laplacian(w, k), tol);
    if (s.size() == 0)
        return;
    const double total = to_double(w.total_weight());
    detail::require(s.max() <= total + tol,
                    detail::cat("largest eigenvalue ", s.max(), " exceeds ", total));
    const RadiusBound rb = spectral_radius_bounds(w, k);
    const int mult = s.multiplicity(total, tol);
    detail::require(mult >= rb.mult_lower,
                    detail::cat("top multiplicity ", mult, " < bound ", rb.mult_lower,
                                " at k=", k));
}

/// Multiplicity transfer to the Alexander dual: below the total weight the
/// two Laplacians share every multiplicity; at the total weight they differ
/// by the face-count excess.
inline void dual_multiplicity_check(const WeightedComplex& w, int k, double tol) {
    const Complex& x = w.complex();
    const int n = x.n();
    const Complex dual = alexander_dual(x);
    const int j = n - k - 3;
    Spectrum sx, sd;
    if (x.f(k) > 0)
        sx = spectrum_of(full_laplacian(w, k), tol);
    if (!dual.is_void() && dual.f(j) > 0)
        sd = spectrum_of(full_laplacian(w.with_complex(dual), j), tol);
    const double total = to_double(w.total_weight());

    // Cluster the merged value set, then compare per-cluster counts. The
    // top-weight cluster is always evaluated: its count difference is
    // pinned even when neither spectrum reaches the total weight.
    std::vector<double> all = sx.values;
    all.insert(all.end(), sd.values.begin(), sd.values.end());
    std::sort(all.begin(), all.end());
    std::vector<double> centers;
    for (double v : all)
        if (centers.empty() || v - centers.back() > tol)
            centers.push_back(v);
    if (centers.empty() || std::abs(centers.back() - total) > tol)
        centers.push_back(total);
    for (double c : centers) {
        const int mx = sx.multiplicity(c, tol);
        const int md = sd.multiplicity(c, tol);
        if (std::abs(c - total) <= tol) {
            const std::int64_t excess = static_cast<std::int64_t>(x.f(k)) +
                                        static_cast<std::int64_t>(x.f(k + 1)) -
                                        static_cast<std::int64_t>(binomial(n, k + 2));
            detail::require(mx - md == excess,
                            detail::cat("top multiplicity difference ", mx - md,
                                        " != ", excess, " at k=", k));
        } else {
            detail::require(mx == md, detail::cat("multiplicity of ", c, ": ", mx,
                                                  " vs dual ", md, " at k=", k));
        }
    }
}

/// Composed spectrum of a join at dimension k from measured factor spectra,
/// per the tensor-degree block decomposition of the join Laplacian: fold
/// factors left to right, tracking the accumulated join degree of every
/// partial sum. Joining degrees i and j lands at degree i + j + 1.
inline Spectrum composed_join_spectrum(const std::vector<WeightedComplex>& factors, int k,
                                       double tol) {
    const std::size_t m = factors.size();
    std::vector<std::vector<Spectrum>> level(m);  // level[j][i+1] at dimension i
    for (std::size_t j = 0; j < m; ++j) {
        const int dj = factors[j].complex().dim();
        level[j].resize(dj + 2);
        for (int i = -1; i <= dj; ++i)
            level[j][i + 1] = spectrum_of(full_laplacian(factors[j], i), tol);
    }
    std::vector<std::pair<int, std::vector<double>>> acc;
    {
        const int d0 = factors[0].complex().dim();
        for (int i = -1; i <= d0; ++i)
            acc.emplace_back(i, level[0][i + 1].values);
    }
    for (std::size_t j = 1; j < m; ++j) {
        std::vector<std::pair<int, std::vector<double>>> next;
        const int dj = factors[j].complex().dim();
        for (const auto& [deg, sums] : acc)
            for (int i = -1; i <= dj; ++i) {
                const int ndeg = deg + i + 1;
                if (ndeg > k)
                    continue;  // degrees only grow while folding
                std::vector<double>* bucket = nullptr;
                for (auto& entry : next)
                    if (entry.first == ndeg)
                        bucket = &entry.second;
                if (!bucket) {
                    next.emplace_back(ndeg, std::vector<double>{});
                    bucket = &next.back().second;
                }
                for (double s : sums)
                    for (double v : level[j][i + 1].values)
                        bucket->push_back(s + v);
            }
        acc = std::move(next);
    }
    Spectrum out;
    out.tol = tol;
    for (const auto& [deg, sums] : acc)
        if (deg == k)
            out.values.insert(out.values.end(), sums.begin(), sums.end());
    std::sort(out.values.begin(), out.values.end(), std::greater<double>());
    return out;
}

/// Join spectrum law: the measured spectrum of the join equals the
/// composed multiset, zeros included.
inline double join_law_residual(const WeightedComplex& a, const WeightedComplex& b, int k,
                                double tol) {
    const WeightedComplex joined = join(a, b);
    const Spectrum direct = spectrum_of(full_laplacian(joined, k), tol);
    const Spectrum composed = composed_join_spectrum({a, b}, k, tol);
    detail::require(direct.size() == composed.size(),
                    detail::cat("join multiset size mismatch at k=", k, ": ", direct.size(),
                                " vs ", composed.size()));
    const double r = multiset_residual(direct, composed);
    detail::require(r <= tol, detail::cat("join law residual ", r, " at k=", k));
    return r;
}

/// Exact block structure of the join Laplacian in the elementary basis:
/// entries couple only faces with equal per-factor degrees, through the
/// matching factor Laplacian entry.
inline void join_block_identity_check(const WeightedComplex& a, const WeightedComplex& b,
                                      int k) {
    const WeightedComplex joined = join(a, b);
    const int n1 = a.complex().n();
    const std::uint64_t low_mask = (1ULL << n1) - 1;

    std::unordered_map<std::uint64_t, std::size_t> index1, index2;
    std::vector<RatMatrix> lap1, lap2;
    for (int i = -1; i <= a.complex().dim(); ++i) {
        const auto& faces = a.complex().faces(i);
        for (std::size_t p = 0; p < faces.size(); ++p)
            index1[mask_of(faces[p])] = p;
        lap1.push_back(full_laplacian(a, i).entries);
    }
    for (int i = -1; i <= b.complex().dim(); ++i) {
        const auto& faces = b.complex().faces(i);
        for (std::size_t p = 0; p < faces.size(); ++p)
            index2[mask_of(faces[p])] = p;
        lap2.push_back(full_laplacian(b, i).entries);
    }

    const OperatorMatrix op = full_laplacian(joined, k);
    const auto& basis = op.row_basis;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const std::uint64_t mi = mask_of(basis[i]);
        const std::uint64_t lo_i = mi & low_mask, hi_i = mi >> n1;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const std::uint64_t mj = mask_of(basis[j]);
            const std::uint64_t lo_j = mj & low_mask, hi_j = mj >> n1;
            Rational expected(0);
            if (popcount64(lo_i) == popcount64(lo_j) &&
                popcount64(hi_i) == popcount64(hi_j)) {
                const int d1 = popcount64(lo_i) - 1;
                const int d2 = popcount64(hi_i) - 1;
                if (lo_i == lo_j && hi_i == hi_j)
                    expected = lap1[d1 + 1](index1[lo_i], index1[lo_i]) +
                               lap2[d2 + 1](index2[hi_i], index2[hi_i]);
                else if (hi_i == hi_j)
                    expected = lap1[d1 + 1](index1[lo_i], index1[lo_j]);
                else if (lo_i == lo_j)
                    expected = lap2[d2 + 1](index2[hi_i], index2[hi_j]);
            }
            detail::require(op.entries(i, j) == expected,
                            detail::cat("join block entry (", i, ",", j, ") at k=", k));
        }
    }
}

/// Additive compound spectrum law: eigenvalues of the compound are the
/// subset sums of the original spectrum.
inline double compound_law_residual(const RealMatrix& m, int k, double tol) {
    const Spectrum base = eigenvalues_symmetric(m);
    const Spectrum comp = eigenvalues_symmetric(additive_compound(m, k));
    SumSet sums = sum_set(base, k);
    std::vector<double> expect = sums.sums;
    std::sort(expect.begin(), expect.end(), std::greater<double>());
    detail::require(expect.size() == comp.size(), "compound dimension mismatch");
    double r = 0.0;
    for (std::size_t i = 0; i < expect.size(); ++i)
        r = std::max(r, std::abs(expect[i] - comp.values[i]));
    detail::require(r <= tol, detail::cat("compound law residual ", r, " at k=", k));
    return r;
}

/// Gap lower bounds: both bound forms hold against the measured gap and the
/// weak form never beats the closed-star form.
inline void gap_bounds_check(const WeightedComplex& w, int k, double tol) {
    const GapBound strong = gap_lower_bound(w, k);
    const GapBound weak = gap_lower_bound_weak(w, k);
    if (!strong.applicable || !weak.applicable)
        return;
    detail::require(weak.value <= strong.value, detail::cat("weak bound exceeds strong at k=", k));
    const Spectrum s = spectrum_of(full_laplacian(w, k), tol);
    if (s.size() == 0)
        return;
    detail::require(s.min() >= to_double(strong.value) - tol,
                    detail::cat("gap ", s.min(), " below bound ", to_double(strong.value),
                                " at k=", k));
    detail::require(s.min() >= to_double(weak.value) - tol,
                    detail::cat("gap ", s.min(), " below weak bound at k=", k));
}

struct ExtremalCellResult {
    double measured = 0.0;
    double residual = 0.0;
    bool direct = true;  // false when the block-composed route measured it
};

/// Measured spectral gap of an extremal-family cell against the two closed
/// forms. Large cells are measured through the join block decomposition.
inline ExtremalCellResult extremal_cell_check(const ExtremalFamily& fam, int k, double tol,
                                              std::uint64_t direct_cap = 600) {
    const WeightedComplex& w = fam.weighted();
    ExtremalCellResult out;
    if (w.complex().f(k) <= direct_cap) {
        out.measured = spectrum_of(full_laplacian(w, k), tol).min();
        out.direct = true;
    } else {
        const Spectrum s = composed_join_spectrum(fam.factors(), k, tol);
        detail::require(s.size() == w.complex().f(k), "composed spectrum size mismatch");
        out.measured = s.min();
        out.direct = false;
    }
    const double formula = to_double(fam.gap_formula(k));
    const GapBound strong = gap_lower_bound(w, k);
    detail::require(strong.applicable, "extremal family bound inapplicable");
    detail::require(strong.d == fam.d(), detail::cat("missing-face dimension ", strong.d,
                                                     " != ", fam.d()));
    out.residual = std::abs(out.measured - formula);
    out.residual = std::max(out.residual, std::abs(out.measured - to_double(strong.value)));
    detail::require(out.residual <= tol,
                    detail::cat("extremal gap mismatch at k=", k, ": measured ", out.measured,
                                ", formula ", formula, ", bound ",
                                to_double(strong.value)));
    return out;
}

/// Boundary-link weight inequality at every k-face, exact.
inline void link_weight_check(const WeightedComplex& w, int k) {
    const auto hx = w.complex().h();
    if (!hx.has_value() || k < 0)
        return;
    for (const Face& sigma : w.complex().faces(k)) {
        const LinkWeightSides sides = link_weight_sides(w, sigma, *hx);
        detail::require(sides.lhs <= sides.rhs,
                        detail::cat("link weight inequality fails at k=", k));
    }
}

/// Every Laplacian eigenvalue dominates its sum-set lower bound.
inline void eigenvalue_lower_check(const WeightedComplex& w, int k, double tol) {
    const Complex& x = w.complex();
    if (k < 0 || x.f(k) == 0)
        return;
    const Spectrum s = spectrum_of(full_laplacian(w, k), tol);
    for (std::size_t i = 1; i <= s.size(); ++i) {
        const double bound = eigenvalue_lower_bound(w, k, i, tol);
        detail::require(s.up(i) >= bound - tol,
                        detail::cat("eigenvalue ", s.up(i), " below bound ", bound, " at k=",
                                    k, " i=", i));
    }
}

/// The sum-set count bounds the exact Betti number from above.
inline void cohomology_bound_check(const WeightedComplex& w, int k, double tol) {
    const Complex& x = w.complex();
    if (k < 0 || x.f(k) == 0)
        return;
    const std::int64_t bound = cohomology_dim_upper(w, k, tol);
    const std::int64_t betti = betti_exact(x).at(k);
    detail::require(bound >= betti,
                    detail::cat("cohomology bound ", bound, " below Betti ", betti,
                                " at k=", k));
}

/// Subcomplex eigenvalue shift bound, plus the vanishing implication when
/// its condition fires.
inline void subcomplex_check(const WeightedComplex& w, const WeightedComplex& sub, int k,
                             double tol) {
    const Complex& xs = sub.complex();
    if (k < 1 || xs.f(k) == 0)
        return;
    const Spectrum inner = spectrum_of(full_laplacian(sub, k), tol);
    for (std::size_t i = 1; i <= inner.size(); ++i) {
        const double bound = subcomplex_eigenvalue_bound(w, sub, k, i, tol);
        detail::require(inner.up(i) >= bound - tol,
                        detail::cat("subcomplex eigenvalue ", inner.up(i), " below ", bound,
                                    " at k=", k, " i=", i));
    }
    const VanishingReport vr = vanishing_checks(w, k, &sub);
    if (vr.subcomplex_condition_fired)
        detail::require(betti_exact(xs).at(k) == 0,
                        detail::cat("vanishing condition fired but Betti nonzero at k=", k));
}

/// Kernel dimension of the weighted Laplacian equals the exact Betti
/// number in every dimension.
inline void hodge_check(const WeightedComplex& w) {
    const BettiVector b = betti_exact(w.complex());
    for (int k = -1; k <= w.complex().dim(); ++k) {
        const int measured = betti_hodge(w, k);
        detail::require(measured == b.at(k),
                        detail::cat("kernel count ", measured, " != Betti ", b.at(k),
                                    " at k=", k));
    }
}

// ---------------------------------------------------------------------------
// Suite harness
// ---------------------------------------------------------------------------

struct CheckResult {
    std::string suite;
    std::string instance;
    bool pass = false;
    double residual = 0.0;
    std::string witness;
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    int instances = 50;
    int max_n = 7;
    bool parallel = true;
};

/// Deterministic per-instance stream, independent of execution order.
inline SplitMix64 instance_rng(std::uint64_t seed, int idx) {
    SplitMix64 mix(seed ^ (0xd1b54a32d192ed03ULL * static_cast<std::uint64_t>(idx + 1)));
    return mix.split();
}

inline WeightedComplex random_instance(SplitMix64& rng, int max_n, int min_n = 3) {
    const int n = static_cast<int>(rng.uniform_int(min_n, max_n));
    const int facet_dim = static_cast<int>(rng.uniform_int(1, std::max(1, n - 2)));
    const double density = 0.25 + 0.55 * rng.uniform01();
    Complex x = Complex::random(n, facet_dim, density, rng.next());
    return WeightedComplex::random_weights(std::move(x), rng);
}

/// Same complex with every vertex label prefixed (to force disjointness
/// before a join).
inline Complex relabeled(const Complex& x, const std::string& prefix) {
    std::vector<std::string> labels;
    for (const auto& l : x.vertex_labels())
        labels.push_back(prefix + l);
    std::vector<std::uint64_t> masks;
    for (int k = -1; k <= x.dim(); ++k)
        for (const Face& f : x.faces(k))
            masks.push_back(mask_of(f));
    return Complex::from_masks(labels, masks, false);
}

/// Disjoint union on concatenated label lists (test scaffolding for the
/// eigenvector-support construction).
inline Complex disjoint_union(const Complex& a, const Complex& b) {
    std::vector<std::string> labels;
    for (const auto& l : a.vertex_labels())
        labels.push_back("L" + l);
    for (const auto& l : b.vertex_labels())
        labels.push_back("R" + l);
    const int shift = a.n();
    std::vector<std::uint64_t> masks;
    for (int k = -1; k <= a.dim(); ++k)
        for (const Face& f : a.faces(k))
            masks.push_back(mask_of(f));
    for (int k = -1; k <= b.dim(); ++k)
        for (const Face& f : b.faces(k))
            masks.push_back(mask_of(f) << shift);
    return Complex::from_masks(labels, masks, false);
}

namespace detail {

template <typename Fn>
std::vector<CheckResult> run_instances(const std::string& suite, const SuiteOptions& opt,
                                       Fn body) {
    std::vector<CheckResult> results(opt.instances);
    std::atomic<int> cursor{0};
    auto worker = [&]() {
        while (true) {
            const int idx = cursor.fetch_add(1);
            if (idx >= opt.instances)
                return;
            CheckResult r;
            r.suite = suite;
            SplitMix64 rng = instance_rng(opt.seed, idx);
            try {
                body(idx, rng, r);
                r.pass = true;
            } catch (const std::exception& e) {
                r.pass = false;
                r.witness = e.what();
            }
            if (r.instance.empty())
                r.instance = cat("seed=", opt.seed, " idx=", idx);
            results[idx] = std::move(r);
        }
    };
    unsigned threads = opt.parallel ? std::thread::hardware_concurrency() : 1;
    if (threads == 0)
        threads = 1;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(opt.instances));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    return results;
}

inline std::string describe(const SuiteOptions& opt, int idx, const WeightedComplex& w) {
    return cat("seed=", opt.seed, " idx=", idx, " n=", w.complex().n(), " digest=",
               w.weights_digest());
}

}  // namespace detail

using SuiteFn = std::function<std::vector<CheckResult>(const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suite_registry();

inline std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : suite_registry())
        names.push_back(name);
    return names;
}

inline std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt) {
    SuiteOptions sane = opt;
    sane.instances = std::max(1, sane.instances);
    sane.max_n = std::max(3, std::min(sane.max_n, 10));
    if (name == "all") {
        std::vector<CheckResult> all;
        for (const auto& [suite, fn] : suite_registry()) {
            auto part = fn(sane);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    for (const auto& [suite, fn] : suite_registry())
        if (suite == name)
            return fn(sane);
    throw std::invalid_argument("unknown suite: " + name);
}

// ---------------------------------------------------------------------------
// Suite bodies
// ---------------------------------------------------------------------------

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_registry_impl() {
    static const std::vector<std::pair<std::string, SuiteFn>> registry = {
        {"multiset-union",
         [](const SuiteOptions& opt) {
             return detail::run_instances(
                 "multiset-union", opt, [&](int idx, SplitMix64& rng, CheckResult& r) {
                     const WeightedComplex w = random_instance(rng, opt.max_n);
                     r.instance = detail::describe(opt, idx, w);
                     const double tol = default_tol(w);
                     for (int k = 0; k <= w.complex().dim(); ++k)
                         r.residual =
                             std::max(r.residual, spectrum_union_residual(w, k, tol));
                 });
         }},
        {"up-down-shift",
         [](const SuiteOptions& opt) {
             return detail::run_instances(
                 "up-down-shift", opt, [&](int idx, SplitMix64& rng, CheckResult& r) {
                     const WeightedComplex w = random_instance(rng, opt.max_n);
                     r.instance = detail::describe(opt, idx, w);
                     const double tol = default_tol(w);
                     for (int k = 0; k <= w.complex().dim(); ++k)
                         r.residual = std::max(r.residual, up_down_shift_residual(w, k, tol));
                 });
         }},
        {"star-duality",
         [](const SuiteOptions& opt) {
             return detail::run_instances(
                 "star-duality", opt, [&](int idx, SplitMix64& rng, CheckResult& r) {
                     const WeightedComplex w = random_instance(rng, opt.max_n);
                     r.instance = detail::describe(opt, idx, w);
                     const double tol = default_tol(w);
                     for (int k = 0; k <= w.complex().dim(); ++k)
                         r.residual = std::max(r.residual, star_pairing_residual(w, k, tol));
                 });
         }},
        {"complete-skeleton",
         [](const SuiteOptions& opt) {
             return detail::run_instances(
                 "complete-skeleton", opt, [&](int idx, SplitMix64& rng, CheckResult& r) {
                     const int n = static_cast<int>(rng.uniform_int(3, std::min(opt.max_n, 6)));
                     const int p = static_cast<int>(rng.uniform_int(0, n - 1));
                     std::vector<Rational> weights(n);
                     for (auto& x : weights)
                         x = rng.weight();
                     r.instance = detail::cat("seed=", opt.seed, " idx=", idx, " n=", n,
                                              " p=", p);
                     for (int k = -1; k <= p; ++k)
                         complete_skeleton_check(n, p, weights, k);
                 });
         }},
        {"complement-pairing",
         [](const SuiteOptions& opt) {
             return detail::run_instances(
                 "complement-pairing", opt, [&](int idx, SplitMix64& rng, CheckResult& r) {
                     const WeightedComplex w = random_instance(rng, opt.max_n);
                     r.instance = detail::describe(opt, idx, w);
                     const double tol = default_tol(w);
                     const Complex& x = w.complex();
                     for (int k = 0; k <= std::min(x.dim(), x.n() - 2); ++k) {
                         if (x.f(k + 1) == binomial(x.n(), k + 2))
                             continue;  // complete skeleton: complement undefined
                         r.residual =
                             std::max(r.residual, complement_pairing_residual(w, k, tol));
                     }
                 });
         }},
        {"complement-identity",
         [](const SuiteOptions& opt) {
             return detail::run_instances(
                 "complement-identity", opt, [&](int idx, SplitMix64& rng, CheckResult& r) {
                     const WeightedComplex w = random_instance(rng, std::min(opt.max_n, 6));
                     r.instance = detail::describe(opt, idx, w);
                     const Complex& x = w.complex();
                     for (int k = 0; k <= std::min(x.dim(), x.n() - 2); ++k) {
                         if (x.f(k + 1) == binomial(x.n(), k + 2))
                             continue;
                         complement_identity_check(w, k);
                     }
                 });
         }},
        {"spectral-radius",
         [](const SuiteOptions& opt) {
             return detail::run_instances(
                 "spectral-radius", opt, [&](int idx, SplitMix64& rng, CheckResult& r) {
                     const WeightedComplex w = random_instance(rng, opt.max_n);
                     r.instance = detail::describe(opt, idx, w);
                     const double tol = default_tol(w);
                     for (int k = 0; k <= w.complex().dim(); ++k)
                         radius_check(w, k, tol);
                 });
         }},
        {"dual-multiplicity",
         [](const SuiteOptions& opt) {
             return detail::run_instances(
                 "dual-multiplicity", opt, [&](int idx, SplitMix64& rng, CheckResult& r) {
                     const WeightedComplex w = random_instance(rng, std::min(opt.max_n, 6));
                     r.instance = detail::describe(opt, idx, w);
                     const double tol = default_tol(w);
                     for (int k = -1; k <= w.complex().n() - 2; ++k)
                         dual_multiplicity_check(w, k, tol);
                 });
         }},
        {"alexander-homology",
         [](const SuiteOptions& opt) {
             return detail::run_instances(
                 "alexander-homology", opt, [&](int idx, SplitMix64& rng, CheckResult& r) {
                     const WeightedComplex w = random_instance(rng, opt.max_n);
                     r.instance = detail::describe(opt, idx, w);
                     detail::require(alexander_check(w.complex()), "homology duality fails");
                     detail::require(euler_consistent(w.complex()),
                                     "Euler characteristic mismatch");
                 });
         }},
        {"join-spectrum",
         [](const SuiteOptions& opt) {
             return detail::run_instances(
                 "join-spectrum", opt, [&](int idx, SplitMix64& rng, CheckResult& r) {
                     const int n1 = static_cast<int>(rng.uniform_int(2, 4));
                     const int n2 = static_cast<int>(rng.uniform_int(2, 4));
                     Complex x1 = relabeled(Complex::random(n1, std::max(1, n1 - 2),
                                                            0.3 + 0.5 * rng.uniform01(),
                                                            rng.next()),
                                            "p");
                     Complex x2 = relabeled(Complex::random(n2, std::max(1, n2 - 2),
                                                            0.3 + 0.5 * rng.uniform01(),
                                                            rng.next()),
                                            "q");
                     WeightedComplex a = WeightedComplex::random_weights(std::move(x1), rng);
                     WeightedComplex b = WeightedComplex::random_weights(std::move(x2), rng);
                     r.instance = detail::cat("seed=", opt.seed, " idx=", idx, " n1=", n1,
                                              " n2=", n2);
                     const WeightedComplex joined = join(a, b);
                     const double tol = default_tol(joined);
                     for (int k = -1; k <= joined.complex().dim(); ++k) {
                         r.residual = std::max(r.residual, join_law_residual(a, b, k, tol));
                         join_block_identity_check(a, b, k);
                     }
                 });
         }},
        {"compound",
         [](const SuiteOptions& opt) {
             return detail::run_instances(
                 "compound", opt, [&](int idx, SplitMix64& rng, CheckResult& r) {
                     const int n = static_cast<int>(rng.uniform_int(2, 6));
                     RealMatrix m(n, n);
                     for (int i = 0; i < n; ++i)
                         for (int j = i; j < n; ++j) {
                             const double v = static_cast<double>(rng.uniform_int(-8, 8)) +
                                              0.25 * static_cast<double>(rng.uniform_int(0, 3));
                             m(i, j) = m(j, i) = v;
                         }
                     r.instance = detail::cat("seed=", opt.seed, " idx=", idx, " n=", n);
                     for (int k = 1; k <= n; ++k)
                         r.residual = std::max(r.residual, compound_law_residual(m, k, 1e-9));
                 });
         }},
        {"interlacing",
         [](const SuiteOptions& opt) {
             return detail::run_instances(
                 "interlacing", opt, [&](int idx, SplitMix64& rng, CheckResult& r) {
                     const WeightedComplex w = random_instance(rng, opt.max_n);
                     r.instance = detail::describe(opt, idx, w);
                     const double tol = default_tol(w);
                     const Complex& x = w.complex();
                     const int k = static_cast<int>(rng.uniform_int(0, x.dim()));
                     const OperatorMatrix op = full_laplacian(w, k);
                     if (op.rows() == 0)
                         return;
                     std::vector<std::size_t> subset;
                     for (std::size_t i = 0; i < op.rows(); ++i)
                         if (rng.uniform01() < 0.6)
                             subset.push_back(i);
                     if (subset.empty())
                         subset.push_back(rng.uniform_int(0, op.rows() - 1));
                     const InterlacingReport rep = interlacing_check(op, subset, tol);
                     detail::require(rep.ok, detail::cat("interlacing violated at index ",
                                                         rep.violated_index));
                     r.residual = std::max(0.0, rep.residual);
                 });
         }},
        {"eigenvector-support",
         [](const SuiteOptions& opt) {
             return detail::run_instances(
                 "eigenvector-support", opt, [&](int idx, SplitMix64& rng, CheckResult& r) {
                     // Two disjoint components make the dimension-1 operator
                     // block diagonal, so the component attaining the overall
                     // minimum shares it with the full matrix, and the
                     // extended eigenvector must be supported there.
                     Complex c1 = Complex::random(static_cast<int>(rng.uniform_int(3, 4)), 1,
                                                  0.6 + 0.4 * rng.uniform01(), rng.next());
                     Complex c2 = Complex::random(static_cast<int>(rng.uniform_int(3, 4)), 1,
                                                  0.6 + 0.4 * rng.uniform01(), rng.next());
                     if (c1.f(1) == 0 || c2.f(1) == 0)
                         return;  // need edges on both sides
                     Complex u = disjoint_union(c1, c2);
                     WeightedComplex w = WeightedComplex::random_weights(std::move(u), rng);
                     r.instance = detail::describe(opt, idx, w);
                     const double tol = default_tol(w);
                     const OperatorMatrix op = full_laplacian(w, 1);
                     std::vector<std::size_t> left;
                     for (std::size_t i = 0; i < op.row_basis.size(); ++i)
                         if (op.row_basis[i].back() < c1.n())
                             left.push_back(i);
                     OperatorMatrix sub;
                     sub.entries = op.entries.principal_submatrix(left);
                     for (std::size_t i : left) {
                         sub.row_basis.push_back(op.row_basis[i]);
                         sub.row_weights.push_back(op.row_weights[i]);
                     }
                     sub.col_basis = sub.row_basis;
                     sub.col_weights = sub.row_weights;

                     const RealMatrix a_sym = symmetrize(op);
                     const EigenDecomposition full = jacobi_eigen(a_sym);
                     const EigenDecomposition part = jacobi_eigen(symmetrize(sub));
                     const double full_min = full.values.back();
                     const double part_min = part.values.back();
                     if (std::abs(full_min - part_min) > tol)
                         return;  // minimum sits in the other block: nothing to assert
                     // Zero-extend the submatrix eigenvector and check it is an
                     // eigenvector of the full symmetrized matrix.
                     const std::size_t n = op.rows();
                     std::vector<double> ext(n, 0.0);
                     for (std::size_t i = 0; i < left.size(); ++i)
                         ext[left[i]] = part.vectors(i, part.values.size() - 1);
                     double residual = 0.0;
                     for (std::size_t i = 0; i < n; ++i) {
                         double acc = 0.0;
                         for (std::size_t j = 0; j < n; ++j)
                             acc += a_sym(i, j) * ext[j];
                         residual = std::max(residual, std::abs(acc - part_min * ext[i]));
                     }
                     r.residual = residual;
                     detail::require(residual <= tol,
                                     detail::cat("supported eigenvector residual ", residual));
                 });
         }},
        {"gap-bound",
         [](const SuiteOptions& opt) {
             return detail::run_instances(
                 "gap-bound", opt, [&](int idx, SplitMix64& rng, CheckResult& r) {
                     const WeightedComplex w = random_instance(rng, opt.max_n);
                     r.instance = detail::describe(opt, idx, w);
                     const double tol = default_tol(w);
                     for (int k = -1; k <= w.complex().dim(); ++k)
                         gap_bounds_check(w, k, tol);
                     // One extremal cell per instance: measured gap equals the
                     // closed forms, and the weak-bound equality case lands on
                     // the structured family (with a weight perturbation as a
                     // negative control).
                     const int d = static_cast<int>(rng.uniform_int(1, 2));
                     const int t = static_cast<int>(rng.uniform_int(1, 2));
                     const int rr = static_cast<int>(rng.uniform_int(1, 2));
                     ExtremalWeights ew;
                     for (int i = 0; i < t; ++i)
                         ew.block_constants.push_back(rng.weight());
                     for (int i = 0; i < rr; ++i)
                         ew.apex.push_back(rng.weight());
                     const ExtremalFamily fam(d, t, rr, ew);
                     const double ftol = default_tol(fam.weighted());
                     const int kk =
                         static_cast<int>(rng.uniform_int(-1, fam.weighted().complex().dim()));
                     extremal_cell_check(fam, kk, ftol);
                     const int dim = fam.weighted().complex().dim();
                     {  // equality case: weak bound attained and structure matches
                         const double eq_tol =
                             1e-10 *
                             std::max(1.0, to_double(fam.weighted().total_weight()));
                         const GapBound weak = gap_lower_bound_weak(fam.weighted(), dim);
                         const double gap =
                             spectrum_of(full_laplacian(fam.weighted(), dim), ftol).min();
                         detail::require(std::abs(gap - to_double(weak.value)) <= eq_tol,
                                         "weak bound not attained on extremal family");
                         detail::require(
                             matches_extremal_structure(fam.weighted(), d, dim),
                             "structure check rejects the extremal family");
                     }
                     {  // perturbed weights: equality must break
                         ExtremalWeights pw = ew;
                         pw.block_constants[0] += Rational(1, 7);
                         const ExtremalFamily base(d, t, rr, pw);
                         std::vector<Rational> wts = base.weighted().weights();
                         wts[0] += Rational(1, 5);  // non-constant on block 0 (blocks have >= 2 vertices)
                         const WeightedComplex bumped(base.weighted().complex(), wts);
                         const double eq_tol =
                             1e-10 * std::max(1.0, to_double(bumped.total_weight()));
                         const GapBound weak = gap_lower_bound_weak(bumped, dim);
                         const double gap =
                             spectrum_of(full_laplacian(bumped, dim), default_tol(bumped))
                                 .min();
                         detail::require(gap > to_double(weak.value) + eq_tol,
                                         "perturbed weights still attain the weak bound");
                     }
                 });
         }},
        {"link-weight-sum",
         [](const SuiteOptions& opt) {
             return detail::run_instances(
                 "link-weight-sum", opt, [&](int idx, SplitMix64& rng, CheckResult& r) {
                     const WeightedComplex w = random_instance(rng, opt.max_n);
                     r.instance = detail::describe(opt, idx, w);
                     for (int k = 0; k <= w.complex().dim(); ++k)
                         link_weight_check(w, k);
                 });
         }},
        {"eigenvalue-lower",
         [](const SuiteOptions& opt) {
             return detail::run_instances(
                 "eigenvalue-lower", opt, [&](int idx, SplitMix64& rng, CheckResult& r) {
                     const WeightedComplex w = random_instance(rng, opt.max_n);
                     r.instance = detail::describe(opt, idx, w);
                     const double tol = default_tol(w);
                     for (int k = 0; k <= w.complex().dim(); ++k)
                         eigenvalue_lower_check(w, k, tol);
                     if (w.complex().is_clique_complex())
                         for (int k = 0; k <= w.complex().dim(); ++k)
                             detail::require(sigma_class_penalty(w, k).value == 0,
                                             "clique complex with nonzero penalty");
                 });
         }},
        {"cohomology-bound",
         [](const SuiteOptions& opt) {
             return detail::run_instances(
                 "cohomology-bound", opt, [&](int idx, SplitMix64& rng, CheckResult& r) {
                     const WeightedComplex w = random_instance(rng, opt.max_n);
                     r.instance = detail::describe(opt, idx, w);
                     const double tol = default_tol(w);
                     for (int k = 0; k <= w.complex().dim(); ++k) {
                         cohomology_bound_check(w, k, tol);
                         const VanishingReport vr = vanishing_checks(w, k);
                         if (vr.gap_condition_fired)
                             detail::require(betti_exact(w.complex()).at(k) == 0,
                                             detail::cat("gap condition fired, Betti != 0 at k=",
                                                         k));
                     }
                 });
         }},
        {"subcomplex-shift",
         [](const SuiteOptions& opt) {
             return detail::run_instances(
                 "subcomplex-shift", opt, [&](int idx, SplitMix64& rng, CheckResult& r) {
                     const WeightedComplex w = random_instance(rng, opt.max_n);
                     r.instance = detail::describe(opt, idx, w);
                     const Complex& x = w.complex();
                     std::vector<Face> big_facets;
                     for (const Face& f : x.facets())
                         if (f.size() >= 2)
                             big_facets.push_back(f);
                     if (big_facets.empty())
                         return;
                     const Face& drop =
                         big_facets[rng.uniform_int(0, big_facets.size() - 1)];
                     const WeightedComplex sub = w.with_complex(x.delete_face(drop));
                     const double tol = default_tol(w);
                     for (int k = 1; k <= sub.complex().dim(); ++k)
                         subcomplex_check(w, sub, k, tol);
                 });
         }},
        {"hodge",
         [](const SuiteOptions& opt) {
             return detail::run_instances(
                 "hodge", opt, [&](int idx, SplitMix64& rng, CheckResult& r) {
                     Complex x = random_instance(rng, opt.max_n).complex();
                     // two independent weightings of the same complex
                     WeightedComplex w1 = WeightedComplex::random_weights(x, rng);
                     WeightedComplex w2 = WeightedComplex::random_weights(x, rng);
                     r.instance = detail::describe(opt, idx, w1);
                     hodge_check(w1);
                     hodge_check(w2);
                 });
         }},
    };
    return registry;
}

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
    return suite_registry_impl();
}

}  // namespace simplap

#endif  // SIMPLAP_VERIFY_HPP
