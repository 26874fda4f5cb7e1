// Command line front end: inspect complexes, compute spectra and bound
// reports, run the named constructions, and drive the property suites.
//
// Exit codes: 0 success, 1 domain error (bad input, out-of-range k, ...),
// 2 property-suite failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simplap/simplap.hpp"

using namespace simplap;

namespace {

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw std::invalid_argument("cannot write " + out_path);
    out << j.dump(2) << "\n";
}

std::vector<Rational> parse_weight_list(const std::string& csv, int expected,
                                        const char* what) {
    std::vector<Rational> out;
    if (csv.empty()) {
        out.assign(expected, Rational(1));
        return out;
    }
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        const std::string item =
            csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(parse_rational(item));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    if (static_cast<int>(out.size()) != expected)
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(expected) + " comma-separated values");
    return out;
}

int check_k_range(const WeightedComplex& w, int k) {
    if (k < -1 || k >= w.complex().n())
        throw std::invalid_argument("k out of range for this complex");
    return k;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex-weighted simplicial Laplacian toolkit"};
    app.require_subcommand(1);

    // info
    std::string info_file;
    auto* info = app.add_subcommand("info", "f-vector, missing faces, clique flag");
    info->add_option("file", info_file, "complex json")->required();

    // spectrum
    std::string spec_file, spec_operator = "full", spec_csv;
    std::string spec_matrix_json, spec_matrix_csv;
    int spec_k = 0;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of a weighted operator");
    spectrum_cmd->add_option("file", spec_file, "complex json")->required();
    spectrum_cmd->add_option("-k,--dim", spec_k, "operator dimension")->required();
    spectrum_cmd->add_option("--operator", spec_operator,
                             "full | up | down | up-extended (default full)");
    spectrum_cmd->add_option("--csv", spec_csv, "also write values as csv to this file");
    spectrum_cmd->add_option("--matrix-json", spec_matrix_json,
                             "write the exact operator matrix as json");
    spectrum_cmd->add_option("--matrix-csv", spec_matrix_csv,
                             "write the operator matrix as decimal csv");

    // bounds
    std::string bounds_file, bounds_sub;
    int bounds_k = 0;
    auto* bounds_cmd = app.add_subcommand("bounds", "bound report at a dimension");
    bounds_cmd->add_option("file", bounds_file, "complex json")->required();
    bounds_cmd->add_option("-k,--dim", bounds_k, "dimension")->required();
    bounds_cmd->add_option("--subcomplex", bounds_sub, "subcomplex json for shift bounds");

    // betti
    std::string betti_file;
    auto* betti_cmd = app.add_subcommand("betti", "exact reduced Betti numbers");
    betti_cmd->add_option("file", betti_file, "complex json")->required();

    // construct
    std::string cons_kind, cons_input, cons_input_b, cons_out, cons_blocks, cons_apex;
    int cons_k = 0, cons_p = 1, cons_n = 3, cons_d = 1, cons_t = 1, cons_r = 1;
    int cons_facet_dim = 1;
    double cons_density = 0.5;
    std::uint64_t cons_seed = 1;
    auto* construct_cmd = app.add_subcommand(
        "construct",
        "join | dual | complement | star | skeleton | extremal | simplex | "
        "skeleton-simplex | cocktail-party | friendship | sphere | random");
    construct_cmd->add_option("kind", cons_kind, "construction name")->required();
    construct_cmd->add_option("--input", cons_input, "input complex json");
    construct_cmd->add_option("--input-b", cons_input_b, "second input (join)");
    construct_cmd->add_option("-k,--dim", cons_k, "dimension parameter");
    construct_cmd->add_option("-p,--skeleton-dim", cons_p, "skeleton dimension");
    construct_cmd->add_option("-n,--size", cons_n, "vertex-count parameter");
    construct_cmd->add_option("--d", cons_d, "extremal family block dimension");
    construct_cmd->add_option("--t", cons_t, "extremal family block count");
    construct_cmd->add_option("--r", cons_r, "extremal family apex size");
    construct_cmd->add_option("--block-weights", cons_blocks,
                              "comma separated block constants");
    construct_cmd->add_option("--apex-weights", cons_apex, "comma separated apex weights");
    construct_cmd->add_option("--facet-dim", cons_facet_dim, "random facet dimension");
    construct_cmd->add_option("--density", cons_density, "random facet density");
    construct_cmd->add_option("--seed", cons_seed, "random seed");
    construct_cmd->add_option("-o,--out", cons_out, "output path (stdout if omitted)");

    // verify
    std::string verify_suite = "all", verify_json;
    int verify_seeds = 50, verify_max_n = 7;
    std::uint64_t verify_seed = 1;
    bool verify_serial = false;
    auto* verify_cmd = app.add_subcommand("verify", "run property suites");
    verify_cmd->add_option("suite", verify_suite, "suite name or 'all'");
    verify_cmd->add_option("--seeds", verify_seeds, "instances per suite (default 50)");
    verify_cmd->add_option("--max-n", verify_max_n, "vertex cap (default 7)");
    verify_cmd->add_option("--seed", verify_seed, "base seed (default 1)");
    verify_cmd->add_option("--json", verify_json, "write the machine report here");
    verify_cmd->add_flag("--serial", verify_serial, "disable instance parallelism");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*info) {
            emit(info_to_json(load_weighted(info_file)), "");
        } else if (*spectrum_cmd) {
            const WeightedComplex w = load_weighted(spec_file);
            check_k_range(w, spec_k);
            const double tol = default_tol(w);
            OperatorMatrix op;
            if (spec_operator == "full")
                op = full_laplacian(w, spec_k);
            else if (spec_operator == "up")
                op = up_laplacian_restricted(w, spec_k);
            else if (spec_operator == "down")
                op = down_laplacian(w, spec_k);
            else if (spec_operator == "up-extended")
                op = up_laplacian_extended(w, spec_k);
            else
                throw std::invalid_argument("unknown operator: " + spec_operator);
            const Spectrum s = spectrum_of(op, tol);
            emit(spectrum_to_json(s, spec_k, spec_operator), "");
            if (!spec_csv.empty()) {
                std::ofstream out(spec_csv);
                if (!out)
                    throw std::invalid_argument("cannot write " + spec_csv);
                out << spectrum_to_csv(s);
            }
            if (!spec_matrix_json.empty())
                emit(operator_to_json(op, w.complex()), spec_matrix_json);
            if (!spec_matrix_csv.empty()) {
                std::ofstream out(spec_matrix_csv);
                if (!out)
                    throw std::invalid_argument("cannot write " + spec_matrix_csv);
                out << operator_to_csv(op);
            }
        } else if (*bounds_cmd) {
            const WeightedComplex w = load_weighted(bounds_file);
            check_k_range(w, bounds_k);
            std::optional<WeightedComplex> sub;
            if (!bounds_sub.empty()) {
                sub = load_weighted(bounds_sub);
                if (!sub->complex().is_subcomplex_of(w.complex()))
                    throw std::invalid_argument("--subcomplex is not a subcomplex");
            }
            emit(bound_report_json(w, bounds_k, sub ? &*sub : nullptr), "");
        } else if (*betti_cmd) {
            emit(betti_to_json(betti_exact(load_weighted(betti_file).complex())), "");
        } else if (*construct_cmd) {
            WeightedComplex result;
            if (cons_kind == "join") {
                if (cons_input.empty() || cons_input_b.empty())
                    throw std::invalid_argument("join needs --input and --input-b");
                result = join(load_weighted(cons_input), load_weighted(cons_input_b));
            } else if (cons_kind == "dual") {
                const WeightedComplex w = load_weighted(cons_input);
                result = w.with_complex(alexander_dual(w.complex()));
            } else if (cons_kind == "complement") {
                const WeightedComplex w = load_weighted(cons_input);
                result = w.with_complex(complement_complex(w.complex(), cons_k));
            } else if (cons_kind == "star") {
                const WeightedComplex w = load_weighted(cons_input);
                result = w.with_complex(star_complex(w.complex(), cons_k));
            } else if (cons_kind == "skeleton") {
                const WeightedComplex w = load_weighted(cons_input);
                result = w.with_complex(w.complex().skeleton(cons_p));
            } else if (cons_kind == "extremal") {
                ExtremalWeights ew;
                ew.block_constants =
                    parse_weight_list(cons_blocks, cons_t, "--block-weights");
                ew.apex = parse_weight_list(cons_apex, cons_r, "--apex-weights");
                result = ExtremalFamily(cons_d, cons_t, cons_r, ew).weighted();
            } else if (cons_kind == "simplex") {
                result = WeightedComplex::unit(simplex(cons_n));
            } else if (cons_kind == "skeleton-simplex") {
                result = WeightedComplex::unit(skeleton_simplex(cons_n, cons_p));
            } else if (cons_kind == "cocktail-party") {
                result = WeightedComplex::unit(cocktail_party(cons_n));
            } else if (cons_kind == "friendship") {
                result = WeightedComplex::unit(friendship(cons_n));
            } else if (cons_kind == "sphere") {
                result = WeightedComplex::unit(sphere_boundary(cons_k));
            } else if (cons_kind == "random") {
                result = WeightedComplex::unit(
                    Complex::random(cons_n, cons_facet_dim, cons_density, cons_seed));
            } else {
                throw std::invalid_argument("unknown construction: " + cons_kind);
            }
            emit(complex_to_json(result), cons_out);
        } else if (*verify_cmd) {
            SuiteOptions opt;
            opt.seed = verify_seed;
            opt.instances = verify_seeds;
            opt.max_n = verify_max_n;
            opt.parallel = !verify_serial;
            const auto results = run_suite(verify_suite, opt);
            int failed = 0;
            std::string current;
            int suite_pass = 0, suite_total = 0;
            double suite_residual = 0.0;
            auto flush_suite = [&]() {
                if (!current.empty())
                    std::printf("%-22s %3d/%-3d pass   max residual %.3e\n", current.c_str(),
                                suite_pass, suite_total, suite_residual);
            };
            for (const auto& r : results) {
                if (r.suite != current) {
                    flush_suite();
                    current = r.suite;
                    suite_pass = suite_total = 0;
                    suite_residual = 0.0;
                }
                ++suite_total;
                if (r.pass)
                    ++suite_pass;
                else {
                    ++failed;
                    std::printf("FAIL %s [%s]: %s\n", r.suite.c_str(), r.instance.c_str(),
                                r.witness.c_str());
                }
                suite_residual = std::max(suite_residual, r.residual);
            }
            flush_suite();
            if (!verify_json.empty()) {
                std::ofstream out(verify_json);
                if (!out)
                    throw std::invalid_argument("cannot write " + verify_json);
                out << check_results_json(results).dump(2) << "\n";
            }
            if (failed) {
                std::printf("%d check(s) failed\n", failed);
                return 2;
            }
            std::printf("all checks passed\n");
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
