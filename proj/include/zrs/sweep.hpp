#pragma once

#include <charconv>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "zrs/classifier.hpp"
#include "zrs/io.hpp"

namespace zrs {

/// Parameter grid outside the allowed limits.
class GuardViolation : public std::runtime_error {
public:
    explicit GuardViolation(const std::string& what) : std::runtime_error("GuardViolation: " + what) {}
};

enum class Family { Delta, Mixed, DeltaPrime, ExampleV, FrakTPath };

inline const char* to_string(Family f) {
    switch (f) {
    case Family::Delta: return "delta";
    case Family::Mixed: return "mixed";
    case Family::DeltaPrime: return "deltaprime";
    case Family::ExampleV: return "examplev";
    default: return "frakTpath";
    }
}

inline Family parse_family(const std::string& s) {
    if (s == "delta") return Family::Delta;
    if (s == "mixed") return Family::Mixed;
    if (s == "deltaprime") return Family::DeltaPrime;
    if (s == "examplev") return Family::ExampleV;
    if (s == "frakTpath" || s == "fraktpath") return Family::FrakTPath;
    throw io::SchemaError("unknown family \"" + s + "\"");
}

/// Families:
///   delta       a = t dir               (b = c = d = 0)
///   mixed       b = t dir               (a = c = d = 0)
///   deltaprime  d = t dir               (a = b = c = 0)
///   examplev    a = -e^{it}, b = -1, c = 1, d = e^{-it}   (dir ignored)
///   frakTpath   the listed interactions, param = list index
struct SweepSpec {
    Family family = Family::Delta;
    double start = 0.0, stop = 0.0, step = 1.0;
    cplx dir{1.0, 0.0};
    std::vector<io::json> path;
};

inline constexpr std::size_t max_grid_size = 10'000'000;

inline std::size_t grid_size(const SweepSpec& s) {
    if (s.family == Family::FrakTPath) {
        if (s.path.size() > max_grid_size) throw GuardViolation("path longer than 1e7 entries");
        return s.path.size();
    }
    if (!std::isfinite(s.start) || !std::isfinite(s.stop) || !std::isfinite(s.step))
        throw GuardViolation("grid bounds must be finite");
    if (!(s.step > 0.0)) throw GuardViolation("step must be positive");
    if (s.stop < s.start) throw GuardViolation("stop must not be below start");
    const double n = std::floor((s.stop - s.start) / s.step * (1.0 + 1e-12)) + 1.0;
    if (n > static_cast<double>(max_grid_size)) throw GuardViolation("grid exceeds 1e7 points");
    return static_cast<std::size_t>(n);
}

inline double grid_value(const SweepSpec& s, std::size_t j) {
    if (s.family == Family::FrakTPath) return static_cast<double>(j);
    return s.start + static_cast<double>(j) * s.step;
}

inline PotentialABCD family_point(Family f, double t, cplx dir) {
    switch (f) {
    case Family::Delta: return {t * dir, 0.0, 0.0, 0.0};
    case Family::Mixed: return {0.0, t * dir, 0.0, 0.0};
    case Family::DeltaPrime: return {0.0, 0.0, 0.0, t * dir};
    case Family::ExampleV: return {-std::exp(I * t), -1.0, 1.0, std::exp(-I * t)};
    default: throw std::logic_error("frakTpath has no (a,b,c,d) family");
    }
}

struct SweepRow {
    std::size_t index = 0;
    double param = 0.0;
    bool admissible = true;
    SpectralClassification classification;
};

inline SweepRow sweep_row(const SweepSpec& s, std::size_t j, const Tolerance& tol) {
    SweepRow row;
    row.index = j;
    row.param = grid_value(s, j);
    try {
        const Interaction i = s.family == Family::FrakTPath
                                  ? io::parse_interaction(s.path[j], tol)
                                  : Interaction::from_abcd(family_point(s.family, row.param, s.dir), tol.base);
        row.classification = classify(SMatrixFn::build(i, tol));
    } catch (const NotRepresentable&) {
        row.admissible = false;
    }
    return row;
}

/// Rows in grid order, handed to `emit` one at a time.
inline void run_sweep(const SweepSpec& s, const Tolerance& tol, const std::function<void(const SweepRow&)>& emit) {
    const std::size_t n = grid_size(s);
    for (std::size_t j = 0; j < n; ++j) emit(sweep_row(s, j, tol));
}

inline io::json to_json(const SweepRow& r) {
    io::json j = {{"index", r.index}, {"param", r.param}, {"admissible", r.admissible}};
    if (!r.admissible) return j;
    const io::json c = io::to_json(r.classification);
    for (const char* key : {"region", "similarity", "eigenvalues", "spectral_singularities",
                            "singularity_at_infinity", "exceptional_points", "has_negative_eigenvalues",
                            "constant_s"})
        j[key] = c[key];
    j["poles"] = io::json::array();
    for (const auto& p : r.classification.poles) {
        io::json pj = {{"order", p.order}, {"sheet", to_string(p.sheet)}};
        pj["k"] = p.location.is_finite() ? io::to_json(p.location.value()) : io::json(nullptr);
        j["poles"].push_back(pj);
    }
    return j;
}

namespace csv {

/// Stable column set. Absent entries are empty cells; a pole at infinity has
/// empty re/im and sheet "Infinity".
inline const std::vector<std::string>& columns() {
    static const std::vector<std::string> cols = {
        "index",          "param",          "admissible",        "region",
        "similarity",     "n_poles",        "pole1_re",          "pole1_im",
        "pole1_order",    "pole1_sheet",    "pole2_re",          "pole2_im",
        "pole2_order",    "pole2_sheet",    "n_eigenvalues",     "eig1_re",
        "eig1_im",        "eig2_re",        "eig2_im",           "n_singularities",
        "sing1",          "sing2",          "singularity_at_infinity", "n_exceptional",
        "ep1_re",         "ep1_im",         "has_negative_eigenvalues", "constant_s"};
    return cols;
}

inline std::string header() {
    std::string h;
    for (const auto& c : columns()) h += (h.empty() ? "" : ",") + c;
    return h;
}

inline std::string fmt(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

inline double parse_double(const std::string& s) {
    double v = 0.0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) throw io::SchemaError("bad number \"" + s + "\" in CSV");
    return v;
}

inline std::string fmt(bool b) { return b ? "true" : "false"; }

inline std::string row(const SweepRow& r) {
    std::vector<std::string> f(columns().size());
    f[0] = std::to_string(r.index);
    f[1] = fmt(r.param);
    f[2] = fmt(r.admissible);
    if (r.admissible) {
        const auto& c = r.classification;
        if (c.poles.size() > 2 || c.eigenvalues.size() > 2 || c.spectral_singularities.size() > 2 ||
            c.exceptional_points.size() > 1)
            throw std::logic_error("classification does not fit the CSV layout");
        f[3] = to_string(c.region);
        f[4] = to_string(c.similarity);
        f[5] = std::to_string(c.poles.size());
        for (std::size_t p = 0; p < c.poles.size(); ++p) {
            const auto& pr = c.poles[p];
            if (pr.location.is_finite()) {
                f[6 + 4 * p] = fmt(pr.location.value().real());
                f[7 + 4 * p] = fmt(pr.location.value().imag());
            }
            f[8 + 4 * p] = std::to_string(pr.order);
            f[9 + 4 * p] = to_string(pr.sheet);
        }
        f[14] = std::to_string(c.eigenvalues.size());
        for (std::size_t e = 0; e < c.eigenvalues.size(); ++e) {
            f[15 + 2 * e] = fmt(c.eigenvalues[e].real());
            f[16 + 2 * e] = fmt(c.eigenvalues[e].imag());
        }
        f[19] = std::to_string(c.spectral_singularities.size());
        for (std::size_t e = 0; e < c.spectral_singularities.size(); ++e) f[20 + e] = fmt(c.spectral_singularities[e]);
        f[22] = fmt(c.singularity_at_infinity);
        f[23] = std::to_string(c.exceptional_points.size());
        if (!c.exceptional_points.empty()) {
            f[24] = fmt(c.exceptional_points[0].real());
            f[25] = fmt(c.exceptional_points[0].imag());
        }
        f[26] = fmt(c.has_negative_eigenvalues);
        f[27] = fmt(c.constant_s);
    }
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + f[i];
    return out;
}

/// Rebuild the JSON form of a sweep row from one CSV line.
inline io::json row_to_json(const std::string& line) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != columns().size()) throw io::SchemaError("CSV row has wrong number of cells");
    auto to_bool = [](const std::string& s) {
        if (s == "true") return true;
        if (s == "false") return false;
        throw io::SchemaError("bad boolean \"" + s + "\" in CSV");
    };
    auto to_size = [](const std::string& s) { return static_cast<std::size_t>(std::stoull(s)); };
    io::json j = {{"index", to_size(f[0])}, {"param", parse_double(f[1])}, {"admissible", to_bool(f[2])}};
    if (!j["admissible"].get<bool>()) return j;
    j["region"] = f[3];
    j["similarity"] = f[4];
    j["poles"] = io::json::array();
    for (std::size_t p = 0; p < to_size(f[5]); ++p) {
        io::json pj = {{"order", std::stoi(f[8 + 4 * p])}, {"sheet", f[9 + 4 * p]}};
        pj["k"] = f[6 + 4 * p].empty()
                      ? io::json(nullptr)
                      : io::json::array({parse_double(f[6 + 4 * p]), parse_double(f[7 + 4 * p])});
        j["poles"].push_back(pj);
    }
    j["eigenvalues"] = io::json::array();
    for (std::size_t e = 0; e < to_size(f[14]); ++e)
        j["eigenvalues"].push_back({parse_double(f[15 + 2 * e]), parse_double(f[16 + 2 * e])});
    j["spectral_singularities"] = io::json::array();
    for (std::size_t e = 0; e < to_size(f[19]); ++e) j["spectral_singularities"].push_back(parse_double(f[20 + e]));
    j["singularity_at_infinity"] = to_bool(f[22]);
    j["exceptional_points"] = io::json::array();
    if (to_size(f[23]) > 0) j["exceptional_points"].push_back({parse_double(f[24]), parse_double(f[25])});
    j["has_negative_eigenvalues"] = to_bool(f[26]);
    j["constant_s"] = to_bool(f[27]);
    return j;
}

} // namespace csv

} // namespace zrs
