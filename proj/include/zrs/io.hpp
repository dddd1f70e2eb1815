#pragma once

#include <cerrno>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "zrs/classifier.hpp"
#include "zrs/metric.hpp"
#include "zrs/smatrix.hpp"

namespace zrs::io {

using json = nlohmann::json;

/// Input that does not follow the interaction schema.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error("SchemaError: " + what) {}
};

inline double parse_real(const json& j, const std::string& where) {
    if (!j.is_number()) throw SchemaError(where + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw SchemaError(where + ": non-finite number");
    return v;
}

/// [re, im]
inline cplx parse_complex(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw SchemaError(where + ": expected [re, im]");
    return {parse_real(j[0], where + "[0]"), parse_real(j[1], where + "[1]")};
}

inline Mat2 parse_matrix(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw SchemaError(where + ": expected 2 rows");
    Mat2 m;
    for (int r = 0; r < 2; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != 2) throw SchemaError(where + ": expected 2 columns");
        for (int c = 0; c < 2; ++c)
            m(r, c) = parse_complex(row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    return m;
}

/// {"form":"abcd","a":[re,im],"b":..,"c":..,"d":..}  or  {"form":"frakT","t":[[z,z],[z,z]]}.
/// Missing a, b, c, d default to zero. Inadmissible couplings raise NotRepresentable.
inline Interaction parse_interaction(const json& j, const Tolerance& tol = {}) {
    if (!j.is_object()) throw SchemaError("interaction must be a JSON object");
    if (!j.contains("form") || !j["form"].is_string()) throw SchemaError("missing string field \"form\"");
    const std::string form = j["form"].get<std::string>();
    if (form == "abcd") {
        for (const auto& [key, _] : j.items())
            if (key != "form" && key != "a" && key != "b" && key != "c" && key != "d")
                throw SchemaError("unknown field \"" + key + "\" in abcd form");
        auto get = [&](const char* key) { return j.contains(key) ? parse_complex(j[key], key) : cplx{}; };
        const PotentialABCD p{get("a"), get("b"), get("c"), get("d")};
        return Interaction::from_abcd(p, tol.base);
    }
    if (form == "frakT") {
        for (const auto& [key, _] : j.items())
            if (key != "form" && key != "t") throw SchemaError("unknown field \"" + key + "\" in frakT form");
        if (!j.contains("t")) throw SchemaError("missing field \"t\"");
        return Interaction::from_matrix(parse_matrix(j["t"], "t"));
    }
    throw SchemaError("form must be \"abcd\" or \"frakT\"");
}

inline json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
}

inline json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const Mat2& m) {
    return json::array({json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                        json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

inline json to_json(const PauliVector& v) {
    return json::array({to_json(v.x0), to_json(v.x1), to_json(v.x2), to_json(v.x3)});
}

inline json to_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

inline json to_json(const Interaction& i) {
    json j = {{"form", "frakT"}, {"t", to_json(i.frakT())}};
    return j;
}

inline json to_json(const PoleReport& p) {
    json j;
    j["k"] = p.location.is_finite() ? to_json(p.location.value()) : json(nullptr);
    j["order"] = p.order;
    j["sheet"] = to_string(p.sheet);
    if (p.location.is_finite()) j["z"] = to_json(p.z);
    return j;
}

inline json to_json(const SpectralClassification& c) {
    json j;
    j["poles"] = json::array();
    for (const auto& p : c.poles) j["poles"].push_back(to_json(p));
    j["eigenvalues"] = json::array();
    for (const auto& z : c.eigenvalues) j["eigenvalues"].push_back(to_json(z));
    j["spectral_singularities"] = c.spectral_singularities;
    j["singularity_at_infinity"] = c.singularity_at_infinity;
    j["exceptional_points"] = json::array();
    for (const auto& z : c.exceptional_points) j["exceptional_points"].push_back(to_json(z));
    j["similarity"] = to_string(c.similarity);
    j["region"] = to_string(c.region);
    j["has_negative_eigenvalues"] = c.has_negative_eigenvalues;
    j["constant_s"] = c.constant_s;
    return j;
}

inline json to_json(const ScatteringCoefficients& c) {
    return {{"r_right", to_json(c.r_right)}, {"t_right", to_json(c.t_right)},
            {"r_left", to_json(c.r_left)},   {"t_left", to_json(c.t_left)},
            {"delta_k", to_json(c.delta_k)}, {"phase", to_json(c.phase)}};
}

inline json to_json(const MetricSpec& m) {
    return {{"alpha", to_json(m.alpha)},       {"chi", m.chi},
            {"kappa", m.kappa},                {"re_gamma", to_json(m.re_gamma)},
            {"im_gamma", to_json(m.im_gamma)}, {"E", to_json(m.boundary_matrix())}};
}

/// Byte-stable rendering: sorted keys, shortest round-trip doubles.
inline std::string dump(const json& j) { return j.dump() + "\n"; }

/// Tolerance from ZRS_TOLERANCE, falling back to the default base.
inline Tolerance tolerance_from_env(const char* name = "ZRS_TOLERANCE") {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return {};
    char* end = nullptr;
    errno = 0;
    const double base = std::strtod(v, &end);
    if (errno != 0 || end == v || *end != '\0' || !(base > 0.0) || !std::isfinite(base))
        throw SchemaError(std::string(name) + " must be a positive number");
    return Tolerance::with_base(base);
}

} // namespace zrs::io
