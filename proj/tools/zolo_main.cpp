#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zolo/harness.hpp"

namespace {

using json = nlohmann::json;
using zolo::harness::ExperimentConfig;
using zolo::zolotarev::Method;

Method parse_method(const std::string& s) {
    if (s == "loewner") return Method::loewner;
    if (s == "aaa") return Method::aaa;
    if (s == "aaa-lawson") return Method::aaa_lawson;
    throw zolo::ConfigError("unknown method '" + s + "'");
}

// "2:2:26" -> {2, 4, ..., 26}; a plain comma list also works.
std::vector<Eigen::Index> parse_orders(const std::string& s) {
    std::vector<Eigen::Index> out;
    if (s.find(':') != std::string::npos) {
        long start = 0, step = 0, stop = 0;
        char c1 = 0, c2 = 0;
        std::istringstream in(s);
        if (!(in >> start >> c1 >> step >> c2 >> stop) || c1 != ':' || c2 != ':' || step <= 0)
            throw zolo::ConfigError("orders range must look like start:step:stop");
        for (long v = start; v <= stop; v += step) out.push_back(v);
    } else {
        std::istringstream in(s);
        std::string tok;
        while (std::getline(in, tok, ','))
            if (!tok.empty()) out.push_back(std::stol(tok));
    }
    if (out.empty()) throw zolo::ConfigError("no orders given");
    return out;
}

std::vector<Method> parse_methods(const std::string& s) {
    std::vector<Method> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) out.push_back(parse_method(tok));
    if (out.empty()) throw zolo::ConfigError("no methods given");
    return out;
}

void write_file(const std::string& path, const std::string& payload) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw zolo::ConfigError("cannot open output path '" + path + "'");
    out << payload;
}

json complex_list(const std::vector<zolo::numerics::Complex>& v) {
    json out = json::array();
    for (const auto& z : v) out.push_back({z.real(), z.imag()});
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Data-driven rational approximation for Zolotarev sign problems"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "Run a single experiment and write a JSON report");
    std::string s_example = "1a", s_method = "loewner", s_out;
    int s_n = 512, s_lawson = 200, s_grid = 0;
    double s_damping = 0.95;
    std::optional<long> s_order;
    std::optional<double> s_tol;
    bool s_sign = false;
    solve->add_option("--example", s_example, "Example name from the catalog");
    solve->add_option("--n", s_n, "Samples per set");
    solve->add_option("--method", s_method, "loewner | aaa | aaa-lawson");
    solve->add_option("--order", s_order, "Fixed approximation order");
    solve->add_option("--tol", s_tol, "Order-selection tolerance");
    solve->add_option("--lawson", s_lawson, "Lawson iteration count");
    solve->add_option("--damping", s_damping, "Lawson damping exponent");
    solve->add_flag("--sign", s_sign, "Sign-mode Lawson reference");
    solve->add_option("--out", s_out, "Report path")->required();
    solve->add_option("--grid", s_grid, "Contour grid resolution (0 = off)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Sweep orders and methods, write a CSV");
    std::string w_example = "1a", w_orders = "2:2:26", w_methods = "loewner,aaa,aaa-lawson",
                w_out;
    int w_n = 512, w_lawson = 200;
    double w_damping = 0.95;
    sweep->add_option("--example", w_example, "Example name from the catalog");
    sweep->add_option("--n", w_n, "Samples per set");
    sweep->add_option("--orders", w_orders, "start:step:stop or comma list");
    sweep->add_option("--methods", w_methods, "Comma list of methods");
    sweep->add_option("--lawson", w_lawson, "Lawson iteration count");
    sweep->add_option("--damping", w_damping, "Lawson damping exponent");
    sweep->add_option("--out", w_out, "CSV path")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Closed-form two-circle optimum");
    double o_rho = 0.5, o_alpha = 1.0;
    long o_order = 2;
    std::string o_out;
    oracle->add_option("--rho", o_rho, "Circle radius");
    oracle->add_option("--alpha", o_alpha, "Circle center offset");
    oracle->add_option("--order", o_order, "Order r");
    oracle->add_option("--out", o_out, "Report path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) {
            ExperimentConfig cfg;
            cfg.example_name = s_example;
            cfg.n_per_set = s_n;
            cfg.method = parse_method(s_method);
            if (s_order) cfg.order = *s_order;
            if (s_tol) cfg.tolerance = *s_tol;
            cfg.lawson_iterations = s_lawson;
            cfg.damping = s_damping;
            cfg.sign_mode = s_sign || s_method == "aaa-lawson";
            cfg.output_path = s_out;
            cfg.grid_resolution = s_grid;
            zolo::harness::run_experiment(cfg);
        } else if (sweep->parsed()) {
            ExperimentConfig cfg;
            cfg.example_name = w_example;
            cfg.n_per_set = w_n;
            cfg.lawson_iterations = w_lawson;
            cfg.damping = w_damping;
            const auto rows = zolo::harness::sweep_orders(cfg, parse_orders(w_orders),
                                                          parse_methods(w_methods));
            write_file(w_out, zolo::harness::sweep_csv(rows));
        } else if (oracle->parsed()) {
            const auto [h3, sigma] = zolo::zolotarev::optimal_two_circles(o_rho, o_alpha, o_order);
            json report{{"rho", o_rho}, {"alpha", o_alpha}, {"order", o_order}, {"sigma", sigma}};
            try {
                const auto ratio = zolo::rational::to_polynomial_ratio(h3);
                report["numerator"] = complex_list(ratio.numerator_coeffs);
                report["denominator"] = complex_list(ratio.denominator_coeffs);
            } catch (const zolo::IllConditioned& e) {
                report["numerator"] = json::array();
                report["denominator"] = json::array();
                report["coefficients_error"] = e.name();
            }
            report["poles_h3"] = complex_list(zolo::rational::poles(h3));
            report["zeros_h3"] = complex_list(zolo::rational::zeros(h3));
            write_file(o_out, report.dump(2) + "\n");
        }
    } catch (const zolo::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const zolo::Error& e) {
        std::cerr << e.name() << "\n";
        return 3;
    }
    return 0;
}
