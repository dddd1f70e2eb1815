#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zrs/zrs.hpp"

namespace zrs::cli {

enum ExitCode : int { Ok = 0, Internal = 1, Schema = 2, Inadmissible = 3, Guard = 4 };

using io::json;

inline cplx parse_pair(const std::string& s, const std::string& what) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw io::SchemaError(what + " must be RE,IM");
    try {
        return {csv::parse_double(s.substr(0, comma)), csv::parse_double(s.substr(comma + 1))};
    } catch (const io::SchemaError&) {
        throw io::SchemaError(what + " must be RE,IM");
    }
}

inline std::vector<double> parse_colon_list(const std::string& s, std::size_t n, const std::string& what) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ':')) {
        try {
            v.push_back(csv::parse_double(part));
        } catch (const io::SchemaError&) {
            throw io::SchemaError(what + " has a malformed number");
        }
    }
    if (v.size() != n) throw io::SchemaError(what + " needs " + std::to_string(n) + " ':'-separated numbers");
    return v;
}

inline std::string read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(in), {}};
    std::ifstream f(path);
    if (!f) throw io::SchemaError("cannot read input file " + path);
    return {std::istreambuf_iterator<char>(f), {}};
}

inline json classify_json(const Interaction& i, const Tolerance& tol) {
    json j = io::to_json(classify(SMatrixFn::build(i, tol)));
    j["frakT"] = io::to_json(i.frakT());
    return j;
}

inline json eval_json(const Interaction& i, cplx k, const Tolerance& tol) {
    const SMatrixFn s = SMatrixFn::build(i, tol);
    json j = {{"k", io::to_json(k)}};
    try {
        j["matrix"] = io::to_json(s.eval(k));
        j["pauli_components"] = io::to_json(s.pauli_components(k));
    } catch (const AtPole& e) {
        j["pole"] = true;
        j["message"] = e.what();
        return j;
    }
    j["pole"] = false;
    if (k.real() != 0.0) {
        try {
            j["coefficients"] = io::to_json(scattering_coefficients(i, k, tol));
        } catch (const DegenerateSystem& e) {
            j["coefficients"] = {{"degenerate", true}, {"message", e.what()}};
        }
    }
    return j;
}

inline json metric_json(const Interaction& i, const Tolerance& tol) {
    const Applicability a = check_applicability(i, tol);
    if (a == Applicability::NotApplicable) {
        std::string reason = "poles are not simple non-zero imaginary";
        if (is_hermitian(i, tol.base)) {
            reason = "already self-adjoint";
        } else {
            const auto poles = find_poles(SMatrixFn::build(i, tol));
            if (std::any_of(poles.begin(), poles.end(), [](const PoleReport& p) { return p.order == 2; }))
                reason = "pole of order 2";
        }
        return {{"applicable", false}, {"reason", reason}};
    }
    MetricSpec m;
    try {
        m = construct(i, tol);
    } catch (const DegenerateGamma& e) {
        return {{"applicable", false}, {"reason", e.what()}};
    }
    json j = io::to_json(m);
    j["applicable"] = true;
    j["applicability"] = to_string(a);
    const IntertwiningReport r = verify_intertwining(i, m);
    j["residual"] = r.residual;
    j["positive_definite"] = r.positive_definite;
    j["min_eigenvalue"] = r.min_eigenvalue;
    if (a == Applicability::TwoImaginaryPoles) j["cosh_chi_from_poles"] = cosh_chi_from_poles(i, tol);
    return j;
}

inline json probe_json(const Interaction& i, const std::vector<double>& eps, double xi_a, double xi_b, int panels,
                       const Tolerance& tol) {
    json values = json::array();
    double lo = 0.0, hi = 0.0;
    for (std::size_t n = 0; n < eps.size(); ++n) {
        const double v = similarity_integral_probe(i, eps[n], xi_a, xi_b, panels, tol);
        values.push_back(v);
        lo = n == 0 ? v : std::min(lo, v);
        hi = n == 0 ? v : std::max(hi, v);
    }
    json j = {{"evidence", true},
              {"note", "sampled epsilon values; numerical evidence for the resolvent bound, not a proof"},
              {"epsilon", eps},
              {"xi", {xi_a, xi_b}},
              {"panels", panels},
              {"values", values}};
    j["ratio_max_min"] = lo > 0.0 ? json(hi / lo) : json(nullptr);
    return j;
}

/// Runs the command line `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral analysis of zero-range potentials", "zrs"};
    app.require_subcommand(1);

    std::string input;
    auto add_input = [&](CLI::App* c) { c->add_option("--input", input, "interaction JSON file (default: stdin)"); };

    auto* c_classify = app.add_subcommand("classify", "poles, eigenvalues, singularities, similarity, region");
    add_input(c_classify);

    auto* c_eval = app.add_subcommand("eval", "S(k), its Pauli components and scattering coefficients");
    std::string k_text;
    add_input(c_eval);
    c_eval->add_option("--k", k_text, "RE,IM")->required();

    auto* c_metric = app.add_subcommand("metric", "metric operator parameters when poles are simple imaginary");
    add_input(c_metric);

    auto* c_sweep = app.add_subcommand("sweep", "classify along a one-parameter family");
    std::string family, param, dir_text, format = "json";
    add_input(c_sweep);
    c_sweep->add_option("--family", family, "delta | mixed | deltaprime | examplev | frakTpath")->required();
    c_sweep->add_option("--param", param, "START:STOP:STEP");
    c_sweep->add_option("--dir", dir_text, "RE,IM direction of the complex coupling (default 1,0)");
    c_sweep->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    auto* c_probe = app.add_subcommand("probe", "resolvent bound evidence along Im z = epsilon");
    std::vector<double> eps;
    std::string xi_text = "-10:10";
    int panels = 64;
    add_input(c_probe);
    c_probe->add_option("--epsilon", eps, "E[,E...]")->required()->delimiter(',');
    c_probe->add_option("--xi", xi_text, "A:B (default -10:10)");
    c_probe->add_option("--panels", panels, "quadrature panels (>= 16)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : Schema;
    }

    try {
        const Tolerance tol = io::tolerance_from_env();
        auto interaction = [&] { return io::parse_interaction(io::parse_text(read_input(input, in)), tol); };

        if (c_classify->parsed()) {
            out << io::dump(classify_json(interaction(), tol));
        } else if (c_eval->parsed()) {
            const cplx k = parse_pair(k_text, "--k");
            out << io::dump(eval_json(interaction(), k, tol));
        } else if (c_metric->parsed()) {
            out << io::dump(metric_json(interaction(), tol));
        } else if (c_probe->parsed()) {
            const auto xi = parse_colon_list(xi_text, 2, "--xi");
            for (double e : eps)
                if (!(e > 0.0)) throw io::SchemaError("--epsilon values must be positive");
            if (panels < 16) throw io::SchemaError("--panels must be at least 16");
            if (!(xi[1] > xi[0])) throw io::SchemaError("--xi needs A < B");
            out << io::dump(probe_json(interaction(), eps, xi[0], xi[1], panels, tol));
        } else if (c_sweep->parsed()) {
            SweepSpec spec;
            spec.family = parse_family(family);
            if (!dir_text.empty()) spec.dir = parse_pair(dir_text, "--dir");
            if (spec.family == Family::FrakTPath) {
                const json list = io::parse_text(read_input(input, in));
                if (!list.is_array()) throw io::SchemaError("frakTpath input must be a JSON array of interactions");
                spec.path = list.get<std::vector<json>>();
            } else {
                if (param.empty()) throw io::SchemaError("--param START:STOP:STEP is required");
                const auto g = parse_colon_list(param, 3, "--param");
                spec.start = g[0];
                spec.stop = g[1];
                spec.step = g[2];
            }
            grid_size(spec); // guard before any output
            if (format == "csv") {
                out << csv::header() << "\n";
                run_sweep(spec, tol, [&](const SweepRow& r) { out << csv::row(r) << "\n"; });
            } else {
                json rows = json::array();
                run_sweep(spec, tol, [&](const SweepRow& r) { rows.push_back(to_json(r)); });
                out << io::dump(rows);
            }
        }
    } catch (const io::SchemaError& e) {
        err << e.what() << "\n";
        return Schema;
    } catch (const NotRepresentable& e) {
        err << e.what() << "\n";
        return Inadmissible;
    } catch (const GuardViolation& e) {
        err << e.what() << "\n";
        return Guard;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return Internal;
    }
    return Ok;
}

} // namespace zrs::cli
