#include "zolo/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

namespace zolo::harness {

namespace {

using json = nlohmann::json;
using numerics::Complex;
using rational::RationalFunction;

json complex_list(const std::vector<Complex>& v) {
    json out = json::array();
    for (const Complex& z : v) out.push_back({z.real(), z.imag()});
    return out;
}

json config_echo(const ExperimentConfig& cfg) {
    json j{{"example", cfg.example_name},
           {"n_per_set", cfg.n_per_set},
           {"method", zolotarev::method_name(cfg.method)},
           {"lawson_iterations", cfg.lawson_iterations},
           {"damping", cfg.damping},
           {"sign_mode", cfg.sign_mode},
           {"grid_resolution", cfg.grid_resolution}};
    if (cfg.order) j["order"] = *cfg.order;
    if (cfg.tolerance) j["tolerance"] = *cfg.tolerance;
    return j;
}

zolotarev::SolveOptions solve_options(const ExperimentConfig& cfg) {
    zolotarev::SolveOptions opt;
    opt.order = cfg.order;
    opt.tolerance = cfg.tolerance;
    opt.lawson_iterations = cfg.lawson_iterations;
    opt.damping = cfg.damping;
    opt.sign_mode = cfg.sign_mode;
    return opt;
}

void write_file(const std::string& path, const std::string& payload) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output path '" + path + "'");
    out << payload;
}

} // namespace

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

nlohmann::json run_experiment(const ExperimentConfig& cfg) {
    if (!cfg.order && !cfg.tolerance)
        throw ConfigError("either an order or a tolerance must be given");
    if (cfg.grid_resolution != 0 && cfg.grid_resolution < 16)
        throw ConfigError("grid resolution must be at least 16");

    const domains::SignProblemInstance inst =
        domains::make_example(cfg.example_name, cfg.n_per_set);
    const zolotarev::ZolotarevSolution sol =
        zolotarev::solve_z4(inst, cfg.method, solve_options(cfg));

    json report;
    report["config"] = config_echo(cfg);
    report["sigma"] = sol.sigma;
    report["tau"] = sol.tau;
    report["p"] = sol.p;
    report["log10_sigma"] = std::log10(sol.sigma);
    report["order"] = sol.order;
    report["elapsed_seconds"] = sol.elapsed_seconds;
    try {
        const rational::PolynomialRatio ratio = rational::to_polynomial_ratio(sol.h4);
        report["numerator"] = complex_list(ratio.numerator_coeffs);
        report["denominator"] = complex_list(ratio.denominator_coeffs);
    } catch (const IllConditioned& e) {
        // AAA variants at high order can produce coefficients too wild for the
        // monomial basis; the report still carries poles/zeros.
        report["numerator"] = json::array();
        report["denominator"] = json::array();
        report["coefficients_error"] = e.name();
    }
    report["poles_h4"] = complex_list(rational::poles(sol.h4));
    report["zeros_h4"] = complex_list(rational::zeros(sol.h4));
    report["poles_h3"] = complex_list(rational::poles(sol.h3));
    report["zeros_h3"] = complex_list(rational::zeros(sol.h3));

    std::string grid_path;
    if (cfg.grid_resolution >= 16) {
        const std::string csv = contour_grid_csv(sol.h3, inst.bounding_box, cfg.grid_resolution);
        if (!cfg.output_path.empty()) {
            grid_path = cfg.output_path + ".grid.csv";
            write_file(grid_path, csv);
        }
    }
    report["grid_csv_path"] = grid_path;

    if (!cfg.output_path.empty()) write_file(cfg.output_path, report.dump(2) + "\n");
    return report;
}

std::vector<SweepRow> sweep_orders(const ExperimentConfig& base,
                                   const std::vector<Eigen::Index>& orders,
                                   const std::vector<zolotarev::Method>& methods) {
    if (orders.empty() || !std::is_sorted(orders.begin(), orders.end()))
        throw ConfigError("orders must be a nonempty ascending list");
    if (methods.empty()) throw ConfigError("at least one method required");

    const domains::SignProblemInstance inst =
        domains::make_example(base.example_name, base.n_per_set);
    std::vector<SweepRow> rows;
    for (const Eigen::Index order : orders) {
        for (const zolotarev::Method method : methods) {
            SweepRow row;
            row.order = order;
            row.method = zolotarev::method_name(method);
            try {
                ExperimentConfig cfg = base;
                cfg.method = method;
                cfg.order = order;
                cfg.tolerance.reset();
                const zolotarev::ZolotarevSolution sol =
                    zolotarev::solve_z4(inst, method, solve_options(cfg));
                row.sigma = sol.sigma;
                row.tau = sol.tau;
                row.elapsed_seconds = sol.elapsed_seconds;
            } catch (const Error& e) {
                row.error = e.name();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "order,method,sigma,tau,elapsed_seconds,error\n";
    for (const SweepRow& r : rows) {
        out += std::to_string(r.order) + "," + r.method + "," + format_double(r.sigma) + "," +
               format_double(r.tau) + "," + format_double(r.elapsed_seconds) + "," + r.error +
               "\n";
    }
    return out;
}

std::string contour_grid_csv(const zolotarev::RationalFunction& h3,
                             const domains::BoundingBox& box, int resolution) {
    if (resolution < 16) throw ConfigError("grid resolution must be at least 16");
    std::string out = "re,im,log10_abs_h3\n";
    for (int iy = 0; iy < resolution; ++iy) {
        const double im =
            box.im_min + (box.im_max - box.im_min) * iy / (resolution - 1);
        for (int ix = 0; ix < resolution; ++ix) {
            const double re =
                box.re_min + (box.re_max - box.re_min) * ix / (resolution - 1);
            double val;
            try {
                val = std::log10(std::abs(h3.eval(Complex(re, im))));
            } catch (const SingularAtPoint&) {
                val = 5.0;
            }
            val = std::clamp(std::isnan(val) ? -30.0 : val, -30.0, 5.0);
            out += format_double(re) + "," + format_double(im) + "," + format_double(val) + "\n";
        }
    }
    return out;
}

} // namespace zolo::harness
