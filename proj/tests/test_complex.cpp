#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "simplap/complex.hpp"
#include "simplap/constructions.hpp"
#include "simplap/verify.hpp"

using namespace simplap;

namespace {

// Brute-force oracle: minimal non-faces straight from the definition,
// enumerating every subset of the ground set.
std::vector<Face> missing_faces_oracle(const Complex& x) {
    std::vector<Face> out;
    const std::uint64_t full = (1ULL << x.n()) - 1;
    for (std::uint64_t s = 1; s <= full; ++s) {
        if (x.contains(s))
            continue;
        bool all_proper_in = true;
        for (std::uint64_t sub = (s - 1) & s; all_proper_in; sub = (sub - 1) & s) {
            if (!x.contains(sub))
                all_proper_in = false;
            if (sub == 0)
                break;
        }
        if (all_proper_in)
            out.push_back(face_of(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Complex triangle_boundary() {
    return Complex::from_facets({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

Complex four_cycle() {
    return Complex::from_facets({"a", "b", "c", "d"},
                                {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}});
}

}  // namespace

TEST_CASE("from_facets closes downward and counts faces") {
    Complex tri = triangle_boundary();
    REQUIRE(tri.f(-1) == 1);
    REQUIRE(tri.f(0) == 3);
    REQUIRE(tri.f(1) == 3);
    REQUIRE(tri.dim() == 1);

    Complex point = Complex::from_facets({"a"}, {});
    REQUIRE(point.f(-1) == 1);
    REQUIRE(point.f(0) == 1);
    REQUIRE(point.dim() == 0);

    Complex full = Complex::from_facets({"a", "b", "c", "d"}, {{"a", "b", "c", "d"}});
    for (int k = -1; k <= 3; ++k)
        REQUIRE(full.f(k) == binomial(4, k + 1));

    REQUIRE_THROWS_AS(Complex::from_facets({"a"}, {{"z"}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Complex::from_facets({"a", "a"}, {}), std::invalid_argument);
}

TEST_CASE("closure is idempotent after every constructor") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Complex x = Complex::random(6, 2, 0.5, rng.next());
        std::vector<std::uint64_t> masks;
        for (int k = -1; k <= x.dim(); ++k)
            for (const Face& f : x.faces(k))
                masks.push_back(mask_of(f));
        REQUIRE(Complex::from_masks(x.vertex_labels(), masks, true) == x);
    }
}

TEST_CASE("link answers from actual faces") {
    Complex tri = triangle_boundary();
    REQUIRE(tri.link({0}) == std::vector<int>{1, 2});
    REQUIRE(tri.link({0, 1}).empty());
    Complex full = Complex::from_facets({"a", "b", "c", "d"}, {{"a", "b", "c", "d"}});
    REQUIRE(full.link({0, 1}) == std::vector<int>{2, 3});
    REQUIRE_THROWS_AS(tri.link({0, 1, 2}), std::invalid_argument);

    // link of the empty face is the whole vertex set for facet-built complexes
    SplitMix64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Complex x = Complex::random(5, 1, 0.5, rng.next());
        REQUIRE(x.link({}).size() == 5);
    }
}

TEST_CASE("missing faces and h against the subset oracle") {
    Complex cyc = four_cycle();
    auto expect = missing_faces_oracle(cyc);
    auto got = cyc.missing_faces();
    std::sort(got.begin(), got.end());
    REQUIRE(got == expect);
    REQUIRE(got == std::vector<Face>{{0, 2}, {1, 3}});
    REQUIRE(cyc.h() == 1);

    Complex tri = triangle_boundary();
    REQUIRE(tri.missing_faces() == std::vector<Face>{{0, 1, 2}});
    REQUIRE(tri.h() == 2);

    Complex full = Complex::from_facets({"a", "b", "c"}, {{"a", "b", "c"}});
    REQUIRE(full.missing_faces().empty());
    REQUIRE(!full.h().has_value());

    SplitMix64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Complex x = Complex::random(6, 2, 0.45, rng.next());
        auto brute = missing_faces_oracle(x);
        auto fast = x.missing_faces();
        std::sort(fast.begin(), fast.end());
        REQUIRE(fast == brute);
    }
}

TEST_CASE("h equals one exactly on clique complexes") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Complex x = Complex::random(6, static_cast<int>(rng.uniform_int(1, 3)),
                                    0.3 + 0.5 * rng.uniform01(), rng.next());
        const auto hx = x.h();
        const bool is_clique = x.is_clique_complex();
        if (hx.has_value())
            REQUIRE((*hx == 1) == is_clique);
        else
            REQUIRE(is_clique);  // full simplex is the clique complex of K_n
    }
    REQUIRE(cocktail_party(3).is_clique_complex());
    REQUIRE(friendship(3).is_clique_complex());
    REQUIRE(!triangle_boundary().is_clique_complex());
}

TEST_CASE("sign conventions") {
    REQUIRE(sign_eps({1, 2}, {2, 3}) == -1);
    REQUIRE(sign_eps({1, 2}, {1, 3}) == 1);
    REQUIRE(boundary_sign({3, 5, 7}, 1) == 1);
    REQUIRE(boundary_sign({3, 5, 7}, 2) == -1);
    REQUIRE_THROWS_AS(boundary_sign({3, 5, 7}, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(sign_eps({1, 2}, {3, 4}), std::invalid_argument);

    SplitMix64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 8;
        const int k = static_cast<int>(rng.uniform_int(1, 5));
        auto subsets = all_subsets(n, k);
        const Face& a = subsets[rng.uniform_int(0, subsets.size() - 1)];
        for (const Face& b : subsets) {
            if (popcount64(mask_of(a) & mask_of(b)) != k - 1 || a == b)
                continue;
            REQUIRE(sign_eps(a, b) == sign_eps(b, a));
            // product of removal signs matches the between-count sign
            const Face shared = face_of(mask_of(a) & mask_of(b));
            auto removal_sign = [&](const Face& f) {
                const int gone = face_of(mask_of(f) & ~mask_of(shared))[0];
                const int pos =
                    static_cast<int>(std::find(f.begin(), f.end(), gone) - f.begin()) + 1;
                return boundary_sign(f, pos);
            };
            REQUIRE(sign_eps(a, b) == removal_sign(a) * removal_sign(b));
        }
    }
}

TEST_CASE("boundary-face neighbor sets") {
    Complex cyc = four_cycle();
    auto [n_side, m_side] = cyc.n_sets({0, 1}, 2);  // sigma = {a,b}, v = c
    REQUIRE(n_side == std::vector<Face>{{1}});
    REQUIRE(m_side == std::vector<Face>{{0}});

    Complex full3 = Complex::from_facets({"a", "b", "c"}, {{"a", "b", "c"}});
    auto [n2, m2] = full3.n_sets({0, 1}, 2);
    REQUIRE(n2.size() == 2);

    Complex points = Complex::from_facets({"a", "b"}, {});
    auto [n3, m3] = points.n_sets({0}, 1);
    REQUIRE(n3 == std::vector<Face>{{}});  // the empty boundary face sees b
    REQUIRE(m3 == std::vector<Face>{{0}});

    REQUIRE_THROWS_AS(cyc.n_sets({0, 1}, 1), std::invalid_argument);
}

TEST_CASE("sigma classes partition the shared-link vertices") {
    // boundary of the tetrahedron: the remaining vertex sees all three
    // boundary faces of a triangle; classes run over j = 0..k+1
    Complex tetra_b = sphere_boundary(3);
    auto classes = tetra_b.sigma_classes({0, 1, 2});
    REQUIRE(classes.size() == 4);
    REQUIRE(classes[3] == std::vector<int>{3});
    for (std::size_t j = 0; j + 1 < classes.size(); ++j)
        REQUIRE(classes[j].empty());

    // on clique complexes every class is empty
    REQUIRE(friendship(3).sigma_classes({0, 1, 2}).size() == 4);
    for (const auto& cls : friendship(3).sigma_classes({0, 1, 2}))
        REQUIRE(cls.empty());

    // partition property on random complexes
    SplitMix64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        Complex x = Complex::random(6, 2, 0.5, rng.next());
        for (int k = 0; k <= x.dim(); ++k)
            for (const Face& sigma : x.faces(k)) {
                auto cls = x.sigma_classes(sigma);
                std::uint64_t common = (1ULL << x.n()) - 1;
                for (int v : sigma)
                    common &= x.link_mask(1ULL << v);
                const std::uint64_t pool =
                    common & ~x.link_mask(mask_of(sigma)) & ~mask_of(sigma);
                std::size_t total = 0;
                for (const auto& c : cls)
                    total += c.size();
                REQUIRE(total == static_cast<std::size_t>(popcount64(pool)));
            }
    }
}

TEST_CASE("subcomplex constructions") {
    Complex full4 = Complex::from_facets({"a", "b", "c", "d"}, {{"a", "b", "c", "d"}});
    Complex k4 = full4.skeleton(1);
    REQUIRE(k4.dim() == 1);
    REQUIRE(k4.f(1) == 6);

    Complex edge = four_cycle().induced({"a", "b"});
    REQUIRE(edge.n() == 2);
    REQUIRE(edge.f(1) == 1);
    REQUIRE(edge.dim() == 1);

    REQUIRE_THROWS_AS(four_cycle().delete_face({0}), std::invalid_argument);
    Complex smaller = four_cycle().delete_face({0, 1});
    REQUIRE(smaller.f(1) == 3);
    REQUIRE(smaller.is_subcomplex_of(four_cycle()));

    REQUIRE(four_cycle().underlying_graph() == four_cycle());
    REQUIRE(full4.underlying_graph() == k4);
}

TEST_CASE("random complexes are deterministic under the seed") {
    Complex a = Complex::random(6, 2, 0.5, 42);
    Complex b = Complex::random(6, 2, 0.5, 42);
    REQUIRE(a == b);
    Complex c = Complex::random(6, 2, 0.5, 43);
    REQUIRE(a != c);
}

TEST_CASE("void and empty complexes are distinct states") {
    Complex full = Complex::from_facets({"a", "b", "c"}, {{"a", "b", "c"}});
    Complex dual = alexander_dual(full);
    REQUIRE(dual.is_void());
    REQUIRE(dual.dim() == -2);
    REQUIRE(dual.f(-1) == 0);

    Complex empty = alexander_dual(triangle_boundary());
    REQUIRE(!empty.is_void());
    REQUIRE(empty.dim() == -1);
    REQUIRE(empty.f(-1) == 1);
    REQUIRE(empty.f(0) == 0);
}

TEST_CASE("facets recover the maximal faces") {
    Complex cyc = four_cycle();
    auto facets = cyc.facets();
    REQUIRE(facets.size() == 4);
    for (const Face& f : facets)
        REQUIRE(f.size() == 2);

    Complex mixed = Complex::from_facets({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"c", "d"}});
    auto got = mixed.facets();
    REQUIRE(got == std::vector<Face>{{2, 3}, {0, 1, 2}});
}
