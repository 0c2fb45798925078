// Command line front end: evaluate, exponentiate, take star-logarithms,
// solve cos/sin systems, classify polynomial zeros and run the built-in
// verification suites on function files.
//
// Exit codes: 0 success, 1 parse/IO error, 2 precondition violation,
// 3 obstruction found (log), 4 residual failure.

#include <CLI11.hpp>
#include <cstdio>
#include <string>

#include "qslice/io.hpp"
#include "qslice/qslice.hpp"
#include "qslice/verify.hpp"

namespace {

using namespace qslice;
using io::Json;

struct GlobalOptions {
    std::size_t order = 64;
    double tol = 1e-10;
    std::string out;
};

QJet<double> prepare(io::FunctionFile file, const GlobalOptions& g) {
    QJet<double> jet = std::move(file.jet);
    jet.c.resize(g.order + 1, Quaternion<double>{});
    jet.tol = g.tol;
    return jet;
}

RJet<double> prepare_real(const io::FunctionFile& file, const GlobalOptions& g,
                          const std::string& role) {
    if (!file.real_kind && !is_real_jet(file.jet))
        throw std::domain_error(role + " must be an rpoly (real coefficients)");
    RJet<double> r;
    r.c.resize(g.order + 1, 0.0);
    for (std::size_t k = 0; k < file.jet.c.size() && k <= g.order; ++k)
        r.c[k] = file.jet.c[k].w;
    r.trust_radius = file.jet.trust_radius;
    r.tol = g.tol;
    return r;
}

void emit(const GlobalOptions& g, const Json& report) {
    if (!g.out.empty()) io::write_json_file(g.out, report);
}

int run_eval(const GlobalOptions& g, const std::string& fn, const std::string& at) {
    QJet<double> jet = prepare(io::load_function_file(fn), g);
    Quaternion<double> q = io::parse_quaternion(at);
    bool outside = false;
    Quaternion<double> v = eval(jet, q, &outside);
    std::printf("%s\n", io::format_quaternion(v).c_str());
    if (outside)
        std::fprintf(stderr, "warning: |q| = %g exceeds the trust radius %g\n", abs(q),
                     jet.trust_radius);
    Json report;
    report["command"] = "eval";
    report["fn"] = fn;
    report["at"] = io::format_quaternion(q);
    report["value"] = io::quaternion_to_json(v);
    report["value_literal"] = io::format_quaternion(v);
    report["outside_trust_radius"] = outside;
    emit(g, report);
    return 0;
}

int run_exp(const GlobalOptions& g, const std::string& fn, const std::string& route) {
    QJet<double> jet = prepare(io::load_function_file(fn), g);
    QJet<double> result;
    Json report;
    double route_diff = -1;
    if (route == "direct") {
        result = star_exp_series(jet);
    } else if (route == "formula") {
        result = star_exp(jet);
    } else {
        result = star_exp(jet);
        route_diff = max_coeff_dist(result, star_exp_series(jet));
    }
    report = io::qjet_to_json(result);
    report["command"] = "exp";
    report["fn"] = fn;
    report["route"] = route;
    if (route_diff >= 0) report["max_route_difference"] = route_diff;
    std::printf("exp_* of order-%zu jet computed (route %s)\n", jet.order(), route.c_str());
    std::printf("value at 0: %s\n", io::format_quaternion(result.c[0]).c_str());
    if (route_diff >= 0) std::printf("max route difference: %g\n", route_diff);
    emit(g, report);
    return 0;
}

int run_log(const GlobalOptions& g, const std::string& fn, double coeff_threshold,
            double point_threshold) {
    QJet<double> jet = prepare(io::load_function_file(fn), g);
    LogOptions<double> opts;
    opts.coeff_threshold = coeff_threshold;
    opts.point_threshold = point_threshold;
    auto outcome = star_log(jet, opts);
    if (const auto* obs = std::get_if<std::vector<Obstruction<double>>>(&outcome)) {
        std::printf("no star-logarithm: non-real isolated zero of g_v with g(q0) != 1\n");
        for (const auto& o : *obs)
            std::printf("  zero at %s, value %s\n",
                        io::format_quaternion(o.zero_point).c_str(),
                        io::format_quaternion(o.g_value).c_str());
        Json report;
        report["command"] = "log";
        report["fn"] = fn;
        report["rule"] = "non-real isolated zero of g_v with g(q0) != 1";
        Json list = Json::array();
        for (const auto& o : *obs) {
            Json e;
            e["zero"] = io::quaternion_to_json(o.zero_point);
            e["zero_literal"] = io::format_quaternion(o.zero_point);
            e["g0_value"] = io::quaternion_to_json(o.g_value);
            e["g0_value_literal"] = io::format_quaternion(o.g_value);
            list.push_back(e);
        }
        report["obstruction"] = list.front();
        report["obstructions"] = list;
        emit(g, report);
        return 3;
    }
    const auto& lr = std::get<LogResult<double>>(outcome);
    std::printf("star-logarithm found (route %s)\n", to_string(lr.route));
    std::printf("residual: coefficientwise %g, pointwise %g\n", lr.residual_coeff,
                lr.residual_point);
    Json report = io::qjet_to_json(lr.f);
    report["command"] = "log";
    report["fn"] = fn;
    report["route"] = to_string(lr.route);
    report["residual"] = lr.residual_coeff;
    report["residual_pointwise"] = lr.residual_point;
    emit(g, report);
    return 0;
}

int run_cossin(const GlobalOptions& g, const std::string& a0_path, const std::string& a1_path) {
    RJet<double> a0 = prepare_real(io::load_function_file(a0_path), g, "--a0");
    RJet<double> a1 = prepare_real(io::load_function_file(a1_path), g, "--a1");
    RJet<double> gamma = solve_cos_sin(a0, a1);
    std::printf("gamma(0) = %s\n", io::format_double(gamma.c[0]).c_str());
    Json report = io::rjet_to_json(gamma);
    report["command"] = "cossin";
    report["a0"] = a0_path;
    report["a1"] = a1_path;
    emit(g, report);
    return 0;
}

int run_classify(const GlobalOptions& g, const std::string& fn) {
    QJet<double> jet = prepare(io::load_function_file(fn), g);
    ClassifyOptions<double> copts;
    copts.strip_tol = g.tol;
    ZeroReport<double> rep = classify_zeros(jet, copts);
    std::printf("real zeros: %zu, spherical zeros: %zu, isolated zeros: %zu\n",
                rep.real_zeros.size(), rep.spherical_zeros.size(), rep.isolated_zeros.size());
    for (const auto& [x, m] : rep.real_zeros) std::printf("  real %g (multiplicity %d)\n", x, m);
    for (const auto& [a, b] : rep.spherical_zeros) std::printf("  sphere %g + %g S\n", a, b);
    for (const auto& z : rep.isolated_zeros)
        std::printf("  isolated %s\n", io::format_quaternion(z).c_str());
    Json report;
    report["command"] = "classify";
    report["fn"] = fn;
    Json reals = Json::array();
    for (const auto& [x, m] : rep.real_zeros) reals.push_back(Json::array({x, m}));
    Json spheres = Json::array();
    for (const auto& [a, b] : rep.spherical_zeros) spheres.push_back(Json::array({a, b}));
    Json isolated = Json::array();
    for (const auto& z : rep.isolated_zeros) isolated.push_back(io::quaternion_to_json(z));
    report["real_zeros"] = reals;
    report["spherical_zeros"] = spheres;
    report["isolated_zeros"] = isolated;
    report["max_residual"] = rep.max_residual;
    emit(g, report);
    return 0;
}

int run_verify(const GlobalOptions& g, const std::string& suite) {
    std::vector<verify::CheckResult> results = verify::run_suite(suite);
    bool all_pass = true;
    Json list = Json::array();
    for (const auto& r : results) {
        std::printf("%-22s %s  (max residual %.3g)\n", r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.max_residual);
        all_pass = all_pass && r.pass;
        Json e;
        e["name"] = r.name;
        e["pass"] = r.pass;
        e["max_residual"] = r.max_residual;
        list.push_back(e);
    }
    Json report;
    report["command"] = "verify";
    report["suite"] = suite;
    report["checks"] = list;
    report["all_pass"] = all_pass;
    emit(g, report);
    return all_pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternionic slice-regular function engine"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand name

    GlobalOptions g;
    app.add_option("--order", g.order, "truncation order for loaded jets")->capture_default_str();
    app.add_option("--tol", g.tol, "comparison tolerance")->capture_default_str();
    app.add_option("--out", g.out, "write a JSON report to this path");

    std::string fn, at, route = "formula", a0_path, a1_path, suite = "all";
    double coeff_threshold = 1e-7, point_threshold = 1e-6;

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a function file at a quaternion");
    eval_cmd->add_option("--fn", fn, "function file (JSON)")->required();
    eval_cmd->add_option("--at", at, "quaternion literal, e.g. \"1-0.5j\"")->required();

    CLI::App* exp_cmd = app.add_subcommand("exp", "star-exponential of a function file");
    exp_cmd->add_option("--fn", fn, "function file (JSON)")->required();
    exp_cmd->add_option("--route", route, "direct | formula | both")
        ->check(CLI::IsMember({"direct", "formula", "both"}));

    CLI::App* log_cmd = app.add_subcommand("log", "star-logarithm of a function file");
    log_cmd->add_option("--fn", fn, "function file (JSON)")->required();
    log_cmd->add_option("--coeff-threshold", coeff_threshold, "residual acceptance, coefficients")
        ->capture_default_str();
    log_cmd->add_option("--point-threshold", point_threshold, "residual acceptance, pointwise")
        ->capture_default_str();

    CLI::App* cossin_cmd = app.add_subcommand("cossin", "solve cos(g)=a0, sin(g)=a1");
    cossin_cmd->add_option("--a0", a0_path, "rpoly file")->required();
    cossin_cmd->add_option("--a1", a1_path, "rpoly file")->required();

    CLI::App* classify_cmd = app.add_subcommand("classify", "classify polynomial zeros");
    classify_cmd->add_option("--fn", fn, "function file (JSON)")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
    verify_cmd->add_option("--suite", suite, "all | identities | roundtrip | obstruction")
        ->check(CLI::IsMember({"all", "identities", "roundtrip", "obstruction"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(eval_cmd)) return run_eval(g, fn, at);
        if (app.got_subcommand(exp_cmd)) return run_exp(g, fn, route);
        if (app.got_subcommand(log_cmd)) return run_log(g, fn, coeff_threshold, point_threshold);
        if (app.got_subcommand(cossin_cmd)) return run_cossin(g, a0_path, a1_path);
        if (app.got_subcommand(classify_cmd)) return run_classify(g, fn);
        if (app.got_subcommand(verify_cmd)) return run_verify(g, suite);
    } catch (const io::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const ResidualError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
