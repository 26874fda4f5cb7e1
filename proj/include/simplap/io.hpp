#ifndef SIMPLAP_IO_HPP
#define SIMPLAP_IO_HPP

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "simplap/bounds.hpp"
#include "simplap/homology.hpp"
#include "simplap/operators.hpp"
#include "simplap/spectra.hpp"
#include "simplap/verify.hpp"
#include "simplap/weighted.hpp"

namespace simplap {

using nlohmann::json;

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::vector<std::string> face_labels(const Complex& x, const Face& f) {
    std::vector<std::string> out;
    for (int v : f)
        out.push_back(x.label(v));
    return out;
}

/**
 * Canonical complex format:
 *   {"vertices": [...], "weights": {label: "p/q" | "1.25" | int}, "facets": [[...]]}
 * Weights default to 1. Without the optional keys below, every listed
 * vertex is a 0-face. Two optional keys cover the degenerate states that
 * facets cannot express: "support" restricts which vertices are faces, and
 * "void": true denotes the complex with no faces at all.
 */
inline WeightedComplex weighted_from_json(const json& j) {
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("complex json: missing vertices array");
    std::vector<std::string> vertices;
    for (const auto& v : j["vertices"])
        vertices.push_back(v.get<std::string>());

    std::vector<Rational> weights(vertices.size(), Rational(1));
    if (j.contains("weights")) {
        if (!j["weights"].is_object())
            throw std::invalid_argument("complex json: weights must be an object");
        Complex lookup = Complex::from_facets(vertices, {});
        for (const auto& [label, value] : j["weights"].items()) {
            Rational w;
            if (value.is_string())
                w = parse_rational(value.get<std::string>());
            else if (value.is_number_integer())
                w = Rational(value.get<long long>());
            else
                throw std::invalid_argument(
                    "complex json: weight for " + label +
                    " must be a rational or decimal string (exact parsing)");
            if (w <= 0)
                throw std::invalid_argument("complex json: weight of " + label +
                                            " must be positive");
            weights[lookup.vertex_index(label)] = w;
        }
    }

    if (j.value("void", false))
        return WeightedComplex(Complex::from_masks(vertices, {}, false), weights);

    std::vector<std::vector<std::string>> facets;
    if (j.contains("facets"))
        for (const auto& facet : j["facets"]) {
            std::vector<std::string> labels;
            for (const auto& v : facet)
                labels.push_back(v.get<std::string>());
            facets.push_back(std::move(labels));
        }

    if (j.contains("support")) {
        Complex lookup = Complex::from_facets(vertices, {});
        std::vector<std::uint64_t> masks{0};
        for (const auto& v : j["support"])
            masks.push_back(1ULL << lookup.vertex_index(v.get<std::string>()));
        for (const auto& facet : facets) {
            std::uint64_t m = 0;
            for (const auto& label : facet)
                m |= 1ULL << lookup.vertex_index(label);
            masks.push_back(m);
        }
        return WeightedComplex(Complex::from_masks(vertices, masks, true), weights);
    }
    return WeightedComplex(Complex::from_facets(vertices, facets), weights);
}

inline json complex_to_json(const WeightedComplex& w) {
    const Complex& x = w.complex();
    json j;
    j["vertices"] = json::array();
    for (const auto& label : x.vertex_labels())
        j["vertices"].push_back(label);
    j["weights"] = json::object();
    for (int v = 0; v < x.n(); ++v)
        j["weights"][x.label(v)] = rational_to_string(w.weight(v));
    if (x.is_void()) {
        j["void"] = true;
        j["facets"] = json::array();
        return j;
    }
    json facets = json::array();
    for (const Face& f : x.facets())
        if (!f.empty())
            facets.push_back(face_labels(x, f));
    j["facets"] = facets;
    if (static_cast<int>(x.f(0)) != x.n()) {
        json support = json::array();
        for (const Face& f : x.faces(0))
            support.push_back(x.label(f[0]));
        j["support"] = support;
    }
    return j;
}

inline WeightedComplex load_weighted(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return weighted_from_json(j);
}

inline void save_weighted(const std::string& path, const WeightedComplex& w) {
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot write " + path);
    out << complex_to_json(w).dump(2) << "\n";
}

inline json spectrum_to_json(const Spectrum& s, int k, const std::string& op_name) {
    json j;
    j["k"] = k;
    j["operator"] = op_name;
    j["values"] = json::array();
    for (double v : s.values)
        j["values"].push_back(v);
    j["grouped"] = json::array();
    for (const auto& [value, mult] : s.grouped())
        j["grouped"].push_back({{"value", value}, {"multiplicity", mult}});
    j["grouping_tol"] = s.tol;
    return j;
}

inline std::string spectrum_to_csv(const Spectrum& s) {
    std::ostringstream os;
    os << "value\n";
    for (double v : s.values)
        os << format_double(v) << "\n";
    return os.str();
}

inline json operator_to_json(const OperatorMatrix& m, const Complex& x) {
    json j;
    j["basis"] = json::array();
    for (const Face& f : m.row_basis)
        j["basis"].push_back(face_labels(x, f));
    j["entries"] = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(rational_to_string(m.entries(i, c)));
        j["entries"].push_back(row);
    }
    return j;
}

inline std::string operator_to_csv(const OperatorMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c)
                os << ",";
            os << format_double(to_double(m.entries(i, c)));
        }
        os << "\n";
    }
    return os.str();
}

inline json betti_to_json(const BettiVector& b) {
    json j = json::object();
    for (int k = -1; k <= b.dim; ++k)
        j[std::to_string(k)] = b.at(k);
    return j;
}

inline json info_to_json(const WeightedComplex& w) {
    const Complex& x = w.complex();
    json j;
    j["n"] = x.n();
    j["dim"] = x.dim();
    j["void"] = x.is_void();
    json fv = json::array();
    for (int k = -1; k <= x.dim(); ++k)
        fv.push_back(x.f(k));
    j["f_vector"] = fv;
    j["total_weight"] = rational_to_string(w.total_weight());
    if (!x.is_void()) {
        json mf = json::array();
        for (const Face& f : x.missing_faces())
            mf.push_back(face_labels(x, f));
        j["missing_faces"] = mf;
        const auto hx = x.h();
        if (hx.has_value())
            j["h"] = *hx;
        else
            j["h"] = nullptr;
        j["clique_complex"] = x.is_clique_complex();
    }
    return j;
}

inline json bound_report_json(const WeightedComplex& w, int k, const WeightedComplex* sub) {
    const double tol = default_tol(w);
    json j;
    j["k"] = k;
    j["total_weight"] = to_double(w.total_weight());

    const Spectrum s = spectrum_of(full_laplacian(w, k), tol);
    j["spectrum"] = json::array();
    for (double v : s.values)
        j["spectrum"].push_back(v);

    const GapBound strong = gap_lower_bound(w, k);
    const GapBound weak = gap_lower_bound_weak(w, k);
    if (strong.applicable) {
        j["gap_lower"] = {{"value", to_double(strong.value)},
                          {"exact", rational_to_string(strong.value)},
                          {"d", strong.d},
                          {"min_closed_star_weight", to_double(strong.min_quantity)},
                          {"witness", face_labels(w.complex(), strong.witness)}};
        j["gap_lower_weak"] = {{"value", to_double(weak.value)},
                               {"exact", rational_to_string(weak.value)},
                               {"witness", face_labels(w.complex(), weak.witness)}};
    } else {
        j["gap_lower"] = nullptr;
        j["gap_lower_weak"] = nullptr;
    }

    const RadiusBound rb = spectral_radius_bounds(w, k);
    j["radius_upper"] = to_double(rb.upper);
    j["radius_multiplicity_lower"] = rb.mult_lower;
    j["radius_multiplicity_measured"] =
        s.multiplicity(to_double(w.total_weight()), tol);

    if (k >= 0 && w.complex().f(k) > 0) {
        const PenaltyTerm penalty = sigma_class_penalty(w, k);
        j["class_penalty"] = {{"value", to_double(penalty.value)},
                              {"witness", face_labels(w.complex(), penalty.witness)}};
        json lower = json::array();
        for (std::size_t i = 1; i <= s.size(); ++i)
            lower.push_back({{"i", i},
                             {"bound", eigenvalue_lower_bound(w, k, i, tol)},
                             {"measured", s.up(i)}});
        j["eigenvalue_lower"] = lower;
        j["cohomology_upper"] = cohomology_dim_upper(w, k, tol);
        j["betti"] = betti_exact(w.complex()).at(k);
        const VanishingReport vr = vanishing_checks(w, k, sub);
        j["vanishing"] = {{"gap_condition_applicable", vr.gap_condition_applicable},
                          {"gap_condition_fired", vr.gap_condition_fired}};
        if (vr.subcomplex_condition_evaluated)
            j["vanishing"]["subcomplex_condition_fired"] = vr.subcomplex_condition_fired;
    }

    if (sub != nullptr && k >= 0 && sub->complex().f(k) > 0) {
        j["subcomplex_shift"] = to_double(subcomplex_shift(w, *sub, k));
        const Spectrum inner = spectrum_of(full_laplacian(*sub, k), tol);
        json bounds = json::array();
        for (std::size_t i = 1; i <= inner.size(); ++i)
            bounds.push_back({{"i", i},
                              {"bound", subcomplex_eigenvalue_bound(w, *sub, k, i, tol)},
                              {"measured", inner.up(i)}});
        j["subcomplex_eigenvalue_lower"] = bounds;
    }
    return j;
}

inline json check_results_json(const std::vector<CheckResult>& results) {
    json j = json::array();
    for (const auto& r : results) {
        json e;
        e["suite"] = r.suite;
        e["instance"] = r.instance;
        e["pass"] = r.pass;
        e["residual"] = r.residual;
        if (!r.pass)
            e["witness"] = r.witness;
        j.push_back(e);
    }
    return j;
}

}  // namespace simplap

#endif  // SIMPLAP_IO_HPP
