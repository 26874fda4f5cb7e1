#include <catch2/catch_amalgamated.hpp>

#include "simplap/constructions.hpp"
#include "simplap/operators.hpp"
#include "simplap/spectra.hpp"
#include "simplap/verify.hpp"

using namespace simplap;

TEST_CASE("jacobi eigensolver basics") {
    RealMatrix d(3, 3);
    d(0, 0) = 1;
    d(1, 1) = 2;
    d(2, 2) = 3;
    Spectrum s = eigenvalues_symmetric(d);
    REQUIRE(s.values == std::vector<double>{3, 2, 1});

    RealMatrix flip(2, 2);
    flip(0, 1) = flip(1, 0) = 1;
    Spectrum f = eigenvalues_symmetric(flip);
    REQUIRE(f.down(1) == Catch::Approx(1.0).margin(1e-14));
    REQUIRE(f.down(2) == Catch::Approx(-1.0).margin(1e-14));

    RealMatrix bad(2, 2);
    bad(0, 1) = 1;
    REQUIRE_THROWS_AS(eigenvalues_symmetric(bad), std::invalid_argument);
}

TEST_CASE("eigenvectors accompany the values") {
    SplitMix64 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 5;
        RealMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                m(i, j) = m(j, i) = static_cast<double>(rng.uniform_int(-4, 4));
        EigenDecomposition e = jacobi_eigen(m);
        for (int c = 0; c < n; ++c) {
            double residual = 0;
            for (int i = 0; i < n; ++i) {
                double acc = 0;
                for (int j = 0; j < n; ++j)
                    acc += m(i, j) * e.vectors(j, c);
                residual = std::max(residual, std::abs(acc - e.values[c] * e.vectors(i, c)));
            }
            REQUIRE(residual < 1e-11);
        }
    }
}

TEST_CASE("solver accuracy on known integer spectra") {
    // complete-skeleton Laplacians with unit weights have spectrum {n, 0}
    SplitMix64 rng(67);
    for (int n = 4; n <= 7; ++n) {
        const int p = static_cast<int>(rng.uniform_int(1, n - 1));
        WeightedComplex w = WeightedComplex::unit(skeleton_simplex(n, p));
        for (int k = 0; k <= p; ++k) {
            Spectrum s = spectrum_of(full_laplacian(w, k), 1e-12);
            for (double v : s.values) {
                const double nearest = std::round(v);
                REQUIRE(std::abs(v - nearest) < 1e-10);
            }
        }
    }
}

TEST_CASE("laplacian spectra are nonnegative") {
    SplitMix64 rng(71);
    for (int trial = 0; trial < 15; ++trial) {
        WeightedComplex w = random_instance(rng, 7);
        const double floor = -1e-10 * to_double(w.total_weight());
        for (int k = -1; k <= w.complex().dim(); ++k) {
            Spectrum s = spectrum_of(full_laplacian(w, k), kernel_tol(w));
            if (s.size())
                REQUIRE(s.min() >= floor);
        }
    }
}

TEST_CASE("spectrum_of conventions") {
    SplitMix64 rng(73);
    WeightedComplex w = random_instance(rng, 6);
    const int dim = w.complex().dim();
    Spectrum top = spectrum_of(up_laplacian_restricted(w, dim), default_tol(w));
    for (double v : top.values)
        REQUIRE(v == 0.0);
    Spectrum bottom = spectrum_of(full_laplacian(w, -1), default_tol(w));
    REQUIRE(bottom.size() == 1);
    REQUIRE(bottom.down(1) == Catch::Approx(to_double(w.total_weight())).epsilon(1e-14));
}

TEST_CASE("multiset operations") {
    Spectrum a{{3, 0}, 1e-9};
    Spectrum b{{3, 0, 0}, 1e-9};
    REQUIRE(multiset_equal_nonzero(a, b, 1e-9));
    REQUIRE(!multiset_equal(a, b, 1e-9));

    Spectrum u = multiset_union(Spectrum{{2, 1}, 1e-9}, Spectrum{{1}, 1e-9});
    REQUIRE(u.values == std::vector<double>{2, 1, 1});

    Spectrum c{{4, 4, 2, 2}, 1e-9};
    REQUIRE(c.multiplicity(4.0) == 2);
    auto groups = c.grouped();
    REQUIRE(groups.size() == 2);
    REQUIRE(groups[0].second == 2);
}

TEST_CASE("eigenvalue subset sums") {
    Spectrum s{{3, 2, 1}, 1e-9};
    SumSet ss = sum_set(s, 2);
    REQUIRE(ss.sums == std::vector<double>{3, 4, 5});
    REQUIRE(ss.up(1) == 3);
    REQUIRE(ss.down(1) == 5);

    Spectrum zeros{{0, 0, 0}, 1e-9};
    for (double v : sum_set(zeros, 2).sums)
        REQUIRE(v == 0.0);

    // smallest sum is the sum of the smallest eigenvalues
    SplitMix64 rng(79);
    for (int trial = 0; trial < 10; ++trial) {
        Spectrum r;
        for (int i = 0; i < 6; ++i)
            r.values.push_back(static_cast<double>(rng.uniform_int(-10, 10)));
        std::sort(r.values.begin(), r.values.end(), std::greater<double>());
        for (int i = 1; i <= 6; ++i) {
            double tail = 0;
            for (int j = 0; j < i; ++j)
                tail += r.values[r.values.size() - 1 - j];
            REQUIRE(sum_set(r, i).up(1) == Catch::Approx(tail).margin(1e-12));
        }
    }

    REQUIRE_THROWS_AS(sum_set(s, 4), std::invalid_argument);

    Spectrum wide;
    wide.values.assign(40, 1.0);
    REQUIRE_THROWS_AS(sum_set(wide, 20), std::invalid_argument);  // enumeration guard
}

TEST_CASE("additive compound structure and spectrum") {
    RealMatrix d(3, 3);
    d(0, 0) = 1;
    d(1, 1) = 2;
    d(2, 2) = 3;
    RealMatrix c2 = additive_compound(d, 2);
    REQUIRE(c2.rows() == 3);
    REQUIRE(c2(0, 0) == 3);  // {0,1}
    REQUIRE(c2(1, 1) == 4);  // {0,2}
    REQUIRE(c2(2, 2) == 5);  // {1,2}

    SplitMix64 rng(83);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(2, 5));
        RealMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                m(i, j) = m(j, i) = static_cast<double>(rng.uniform_int(-6, 6));
        REQUIRE(additive_compound(m, 1) == m);
        for (int k = 1; k <= n; ++k)
            compound_law_residual(m, k, 1e-9);
    }
}

TEST_CASE("down Laplacian is a compound principal submatrix, exactly") {
    // the dimension-k down operator is the (k+1)-st compound of the
    // dimension-0 one, restricted to the faces of the complex
    SplitMix64 rng(89);
    for (int trial = 0; trial < 8; ++trial) {
        WeightedComplex w = random_instance(rng, 6);
        const Complex& x = w.complex();
        const RatMatrix base = down_laplacian(w, 0).entries;
        for (int k = 1; k <= x.dim(); ++k) {
            RatMatrix comp = additive_compound(base, k + 1);
            const auto all = all_subsets(x.n(), k + 1);
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < all.size(); ++i)
                if (x.contains(all[i]))
                    keep.push_back(i);
            REQUIRE(comp.principal_submatrix(keep) == down_laplacian(w, k).entries);
        }
    }
}

TEST_CASE("interlacing of principal submatrices") {
    SplitMix64 rng(97);
    WeightedComplex w = random_instance(rng, 6);
    const int k = 0;
    OperatorMatrix op = full_laplacian(w, k);
    const double tol = default_tol(w);

    std::vector<std::size_t> everything(op.rows());
    for (std::size_t i = 0; i < everything.size(); ++i)
        everything[i] = i;
    REQUIRE(interlacing_check(op, everything, tol).ok);

    // single diagonal entry sits between the extreme eigenvalues
    Spectrum s = spectrum_of(op, tol);
    for (std::size_t i = 0; i < op.rows(); ++i) {
        REQUIRE(interlacing_check(op, {i}, tol).ok);
        const double dv = to_double(op.entries(i, i));
        REQUIRE(dv >= s.min() - tol);
        REQUIRE(dv <= s.max() + tol);
    }

    for (int trial = 0; trial < 20; ++trial) {
        WeightedComplex wt = random_instance(rng, 6);
        const int kk = static_cast<int>(rng.uniform_int(0, wt.complex().dim()));
        OperatorMatrix m = full_laplacian(wt, kk);
        if (m.rows() < 2)
            continue;
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (rng.uniform01() < 0.5)
                subset.push_back(i);
        if (subset.empty())
            subset.push_back(0);
        REQUIRE(interlacing_check(m, subset, default_tol(wt)).ok);
    }

    REQUIRE_THROWS_AS(interlacing_check(op, {}, tol), std::invalid_argument);
}
