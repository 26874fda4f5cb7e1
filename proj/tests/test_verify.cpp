#include <catch2/catch_amalgamated.hpp>

#include "simplap/verify.hpp"

using namespace simplap;

TEST_CASE("registry covers every bound suite") {
    const std::vector<std::string> expected = {
        "multiset-union",    "up-down-shift",       "star-duality",
        "complete-skeleton", "complement-pairing",  "complement-identity",
        "spectral-radius",   "dual-multiplicity",   "alexander-homology",
        "join-spectrum",     "compound",            "interlacing",
        "eigenvector-support", "gap-bound",         "link-weight-sum",
        "eigenvalue-lower",  "cohomology-bound",    "subcomplex-shift",
        "hodge",
    };
    REQUIRE(suite_names() == expected);
}

TEST_CASE("suites run deterministically") {
    SuiteOptions opt;
    opt.seed = 7;
    opt.instances = 6;
    opt.max_n = 5;

    auto first = run_suite("hodge", opt);
    auto second = run_suite("hodge", opt);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        REQUIRE(first[i].instance == second[i].instance);
        REQUIRE(first[i].pass == second[i].pass);
        REQUIRE(first[i].residual == second[i].residual);
    }

    // parallel and sequential execution agree bit for bit
    SuiteOptions serial = opt;
    serial.parallel = false;
    auto third = run_suite("star-duality", opt);
    auto fourth = run_suite("star-duality", serial);
    for (std::size_t i = 0; i < third.size(); ++i) {
        REQUIRE(third[i].instance == fourth[i].instance);
        REQUIRE(third[i].pass == fourth[i].pass);
        REQUIRE(third[i].residual == fourth[i].residual);
    }
}

TEST_CASE("every suite passes on a small budget") {
    SuiteOptions opt;
    opt.seed = 2024;
    opt.instances = 4;
    opt.max_n = 5;
    for (const auto& name : suite_names()) {
        auto results = run_suite(name, opt);
        REQUIRE(results.size() == 4);
        for (const auto& r : results) {
            INFO(r.suite << " " << r.instance << " " << r.witness);
            REQUIRE(r.pass);
        }
    }
}

TEST_CASE("unknown suites are rejected") {
    SuiteOptions opt;
    REQUIRE_THROWS_AS(run_suite("no-such-suite", opt), std::invalid_argument);
}
