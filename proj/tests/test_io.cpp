#include <catch2/catch_amalgamated.hpp>

#include "simplap/io.hpp"

using namespace simplap;

TEST_CASE("exact rational parsing") {
    REQUIRE(parse_rational("3/4") == Rational(3, 4));
    REQUIRE(parse_rational("-7/2") == Rational(-7, 2));
    REQUIRE(parse_rational("2") == 2);
    REQUIRE(parse_rational("1.25") == Rational(5, 4));
    REQUIRE(parse_rational("0.1") == Rational(1, 10));
    REQUIRE(rational_to_string(Rational(5, 4)) == "5/4");
    REQUIRE(rational_to_string(Rational(8, 4)) == "2");
    REQUIRE_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational(""), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational("1."), std::invalid_argument);
}

TEST_CASE("canonical complex format") {
    json j = json::parse(R"({
      "vertices": ["a", "b", "c"],
      "weights": {"a": "1", "b": "2", "c": "1/2"},
      "facets": [["a", "b"], ["b", "c"]]
    })");
    WeightedComplex w = weighted_from_json(j);
    REQUIRE(w.complex().n() == 3);
    REQUIRE(w.complex().f(1) == 2);
    REQUIRE(w.weight(1) == 2);
    REQUIRE(w.weight(2) == Rational(1, 2));

    // weights default to one; every vertex is a face
    json bare = json::parse(R"({"vertices": ["x", "y"], "facets": []})");
    WeightedComplex wb = weighted_from_json(bare);
    REQUIRE(wb.weight(0) == 1);
    REQUIRE(wb.complex().f(0) == 2);

    json neg = json::parse(R"({"vertices": ["x"], "weights": {"x": "-1"}, "facets": []})");
    REQUIRE_THROWS_AS(weighted_from_json(neg), std::invalid_argument);
    json unknown = json::parse(R"({"vertices": ["x"], "weights": {"z": "1"}, "facets": []})");
    REQUIRE_THROWS_AS(weighted_from_json(unknown), std::invalid_argument);
    json fractional = json::parse(R"({"vertices": ["x"], "weights": {"x": 0.5}, "facets": []})");
    REQUIRE_THROWS_AS(weighted_from_json(fractional), std::invalid_argument);
}

TEST_CASE("round trips preserve the complex and weights") {
    SplitMix64 rng(211);
    for (int trial = 0; trial < 10; ++trial) {
        WeightedComplex w = random_instance(rng, 6);
        WeightedComplex back = weighted_from_json(complex_to_json(w));
        REQUIRE(back.complex() == w.complex());
        REQUIRE(back.weights() == w.weights());
    }

    // support-restricted complexes survive the trip
    Complex dual = alexander_dual(sphere_boundary(2));
    WeightedComplex wd(dual, {Rational(1), Rational(2), Rational(3)});
    WeightedComplex back = weighted_from_json(complex_to_json(wd));
    REQUIRE(back.complex() == dual);
    REQUIRE(back.weights() == wd.weights());

    Complex star = star_complex(Complex::random(5, 2, 0.5, 77), 2);
    WeightedComplex ws = WeightedComplex::unit(star);
    REQUIRE(weighted_from_json(complex_to_json(ws)).complex() == star);

    // the void complex round-trips through its marker
    WeightedComplex void_c(alexander_dual(simplex(3)), {Rational(1), Rational(1), Rational(1)});
    WeightedComplex void_back = weighted_from_json(complex_to_json(void_c));
    REQUIRE(void_back.complex().is_void());
    REQUIRE(void_back.complex().n() == 3);

    // through an actual file
    WeightedComplex w = random_instance(rng, 6);
    const std::string path = "roundtrip_tmp.json";
    save_weighted(path, w);
    WeightedComplex from_file = load_weighted(path);
    std::remove(path.c_str());
    REQUIRE(from_file.complex() == w.complex());
    REQUIRE(from_file.weights() == w.weights());
    REQUIRE_THROWS_AS(load_weighted("definitely_missing.json"), std::invalid_argument);
}

TEST_CASE("spectrum serialization") {
    Spectrum s{{4, 4, 2, 0}, 1e-8};
    json j = spectrum_to_json(s, 1, "full");
    REQUIRE(j["k"] == 1);
    REQUIRE(j["operator"] == "full");
    REQUIRE(j["values"].size() == 4);
    REQUIRE(j["grouped"][0]["multiplicity"] == 2);

    const std::string csv = spectrum_to_csv(s);
    REQUIRE(csv.find("value\n4\n4\n2\n0\n") == 0);

    // json and csv agree to 17 significant digits
    Spectrum noisy{{1.0 / 3.0, 2.0 / 7.0}, 1e-8};
    json jn = spectrum_to_json(noisy, 0, "full");
    std::string cn = spectrum_to_csv(noisy);
    for (double v : noisy.values)
        REQUIRE(cn.find(format_double(v)) != std::string::npos);
    REQUIRE(jn["values"][0].get<double>() == noisy.values[0]);
}

TEST_CASE("operator and report serialization") {
    WeightedComplex w = WeightedComplex::unit(sphere_boundary(2));
    OperatorMatrix op = full_laplacian(w, 0);
    json j = operator_to_json(op, w.complex());
    REQUIRE(j["basis"].size() == 3);
    REQUIRE(j["entries"][0].size() == 3);

    OperatorMatrix third = down_laplacian(
        WeightedComplex(w.complex(), {Rational(1, 3), Rational(1), Rational(1)}), 0);
    const std::string csv = operator_to_csv(third);
    REQUIRE(csv.find(format_double(1.0 / 3.0)) != std::string::npos);
    REQUIRE(operator_to_json(third, w.complex())["entries"][0][0] == "1/3");

    json report = bound_report_json(w, 1, nullptr);
    REQUIRE(report["k"] == 1);
    REQUIRE(report["spectrum"].size() == 3);
    REQUIRE(report.contains("gap_lower"));
    REQUIRE(report.contains("cohomology_upper"));

    json info = info_to_json(w);
    REQUIRE(info["n"] == 3);
    REQUIRE(info["dim"] == 1);
    REQUIRE(info["h"] == 2);
    REQUIRE(info["clique_complex"] == false);
}
