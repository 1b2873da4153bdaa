#include "zolo/zolotarev.hpp"

#include <chrono>
#include <cmath>
#include <limits>

namespace zolo::zolotarev {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Complex> all_points(const SignProblemInstance& inst) {
    std::vector<Complex> pts = inst.e_points;
    pts.insert(pts.end(), inst.f_points.begin(), inst.f_points.end());
    return pts;
}

std::vector<Complex> all_labels(const SignProblemInstance& inst) {
    std::vector<Complex> vals(inst.e_points.size(), Complex(-1.0, 0.0));
    vals.insert(vals.end(), inst.f_points.size(), Complex(1.0, 0.0));
    return vals;
}

double measured_tau(const RationalFunction& h4, const SignProblemInstance& inst) {
    double tau = 0.0;
    auto visit = [&](const std::vector<Complex>& pts, double label) {
        for (const Complex& z : pts) {
            double err;
            try {
                err = std::abs(h4.eval(z) - Complex(label, 0.0));
            } catch (const Error&) {
                err = std::numeric_limits<double>::infinity();
            }
            tau = std::max(tau, err);
        }
    };
    visit(inst.e_points, -1.0);
    visit(inst.f_points, +1.0);
    return tau;
}

} // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::loewner: return "loewner";
        case Method::aaa: return "aaa";
        case Method::aaa_lawson: return "aaa-lawson";
    }
    return "?";
}

double tau_from_sigma(double sigma) { return 2.0 * std::sqrt(sigma) / (1.0 + sigma); }

double sigma_from_tau(double tau) {
    const double t = tau / (1.0 + std::sqrt(1.0 - tau * tau));
    return t * t;
}

int sign_of(const SignProblemInstance& inst, Complex z) {
    for (const Complex& p : inst.e_points)
        if (std::abs(z - p) <= 1e-12) return -1;
    for (const Complex& p : inst.f_points)
        if (std::abs(z - p) <= 1e-12) return +1;
    throw UndefinedOutsideSets("point is not a sample of E or F");
}

ZolotarevSolution solve_z4(const SignProblemInstance& inst, Method method,
                           const SolveOptions& options) {
    std::optional<RationalFunction> h4;
    Eigen::Index order = 0;
    double elapsed = 0.0;

    try {
        if (method == Method::loewner) {
            const domains::PartitionedData data = domains::split_left_right(inst);
            loewner::OrderPolicy policy = options.order
                ? loewner::OrderPolicy(numerics::FixedRank{*options.order})
                : loewner::OrderPolicy(numerics::RelativeTolerance{options.tolerance.value_or(1e-14)});
            const auto t0 = Clock::now();
            const loewner::LoewnerPencil pencil = loewner::build_pencil(data);
            rational::DescriptorRealization red = loewner::reduce(pencil, policy);
            elapsed = seconds_since(t0);
            order = red.dimension();
            h4.emplace(std::move(red));
        } else {
            const std::vector<Complex> pts = all_points(inst);
            const std::vector<Complex> vals = all_labels(inst);
            aaa::AAAConfig cfg;
            if (options.order) {
                cfg.max_order = *options.order;
                cfg.convergence_tolerance = 0.0; // run out to the requested order
            } else {
                cfg.max_order = static_cast<Eigen::Index>(pts.size()) / 4;
                cfg.convergence_tolerance = options.tolerance.value_or(1e-13);
            }
            cfg.lawson_iterations = options.lawson_iterations;
            cfg.damping = options.damping;
            cfg.sign_mode = options.sign_mode;
            const auto t0 = Clock::now();
            aaa::BarycentricForm form = aaa::aaa_fit(pts, vals, cfg);
            if (method == Method::aaa_lawson && cfg.lawson_iterations > 0)
                form = aaa::lawson_refine(form, pts, vals, cfg);
            elapsed = seconds_since(t0);
            order = static_cast<Eigen::Index>(form.support_points.size()) - 1;
            h4.emplace(std::move(form));
        }
    } catch (const Error& e) {
        throw MethodFailure(method_name(method) + " failed: " + e.what());
    }

    Z3Conversion conv = z4_to_z3(*h4, inst);
    return ZolotarevSolution{std::move(*h4), std::move(conv.h3), conv.tau,  conv.sigma,
                             conv.p,         method_name(method), order,   elapsed};
}

Z3Conversion z4_to_z3(const RationalFunction& h4, const SignProblemInstance& inst) {
    const double tau = measured_tau(h4, inst);
    if (!(tau < 1.0)) throw DegenerateTau("measured tau >= 1; Z3 conversion undefined");
    if (!(tau > 0.0)) throw DegenerateTau("measured tau vanished");
    const double sigma = sigma_from_tau(tau);
    const double p = (1.0 - sigma) / (1.0 + sigma);
    RationalFunction h3 = rational::mobius_z4_to_z3(h4, sigma);

    double min_f = std::numeric_limits<double>::infinity();
    for (const Complex& z : inst.f_points) {
        try {
            min_f = std::min(min_f, std::abs(h3.eval(z)));
        } catch (const SingularAtPoint&) {
            // a pole of h3 on an F sample does not affect the minimum
        }
    }
    // min_F |h3| = 2 sqrt(sigma) / max_F |p - h4|, which the conversion normalizes to 1
    // for an equioscillating h4. Once tau falls to roundoff level the E/F
    // residual split is noise and the ratio is meaningless, so the guard only
    // fires while tau is actually resolved.
    if (tau >= 1e-10 && !(min_f >= 0.5 && min_f <= 2.0))
        throw NormalizationDrift("min |h3| over F drifted outside [0.5, 2]");
    return Z3Conversion{std::move(h3), p, sigma, tau};
}

double measure_sigma(const RationalFunction& h3, const SignProblemInstance& inst) {
    double log_max_e = -std::numeric_limits<double>::infinity();
    for (const Complex& z : inst.e_points)
        log_max_e = std::max(log_max_e, std::log10(std::abs(h3.eval(z))));
    double log_min_f = std::numeric_limits<double>::infinity();
    for (const Complex& z : inst.f_points) {
        try {
            log_min_f = std::min(log_min_f, std::log10(std::abs(h3.eval(z))));
        } catch (const SingularAtPoint&) {
        }
    }
    if (!std::isfinite(log_min_f))
        throw ZeroOnF("|h3| vanished (or was undefined) on every F sample");
    return std::pow(10.0, log_max_e - log_min_f);
}

std::pair<RationalFunction, double> optimal_two_circles(double rho, double alpha,
                                                        Eigen::Index r) {
    if (!(rho > 0.0 && rho < alpha)) throw InvalidGeometry("requires 0 < rho < alpha");
    if (r < 1) throw InvalidGeometry("order must be >= 1");
    const double c = std::sqrt(alpha * alpha - rho * rho);
    const double sigma = std::pow((1.0 - c) / (1.0 + c), static_cast<double>(r));

    if (r <= 12) {
        // Binomial expansion of ((z + c)/(z - c))^r. Beyond r ~ 12 the
        // expanded form loses too many digits to cancellation on E, where
        // the value is ~|z + c|^r but the terms are ~(|z| + c)^r.
        std::vector<Complex> num(static_cast<size_t>(r) + 1), den(static_cast<size_t>(r) + 1);
        double binom = 1.0;
        for (Eigen::Index k = 0; k <= r; ++k) {
            const double ck = binom * std::pow(c, static_cast<double>(k));
            num[static_cast<size_t>(k)] = Complex(ck, 0.0);
            den[static_cast<size_t>(k)] = Complex((k % 2 == 0) ? ck : -ck, 0.0);
            binom = binom * static_cast<double>(r - k) / static_cast<double>(k + 1);
        }
        return {RationalFunction(rational::PolynomialRatio{std::move(num), std::move(den)}),
                sigma};
    }

    // Cascade realization whose states are the partial products
    //   x_0 = 1/(z - c),  y_1 = 1 + 2c x_0 = (z + c)/(z - c),
    //   y_i = y_{i-1} (z + c)/(z - c)    via    (z - c) y_i = (z + c) y_{i-1}.
    // Every row couples at most two states, so solving the triangular pencil
    // multiplies the sections one by one and the relative error stays
    // O(r eps) even where the value is ~1e-30; a summed-sections form would
    // cancel catastrophically there.
    using numerics::ComplexMatrix;
    using numerics::ComplexVector;
    const Eigen::Index dim = r + 1; // x_0, y_1 .. y_r
    rational::DescriptorRealization d;
    d.e_mat = ComplexMatrix::Zero(dim, dim);
    d.a_mat = ComplexMatrix::Zero(dim, dim);
    d.b_vec = ComplexVector::Zero(dim);
    d.e_mat(0, 0) = 1.0;
    d.a_mat(0, 0) = c;
    d.b_vec(0) = 1.0; // (z - c) x_0 = 1
    d.a_mat(1, 1) = -1.0;
    d.a_mat(1, 0) = 2.0 * c;
    d.b_vec(1) = 1.0; // y_1 - 2c x_0 = 1 (algebraic)
    for (Eigen::Index i = 2; i <= r; ++i) {
        d.e_mat(i, i) = 1.0;
        d.e_mat(i, i - 1) = -1.0;
        d.a_mat(i, i) = c;
        d.a_mat(i, i - 1) = c; // z(y_i - y_{i-1}) = c(y_i + y_{i-1})
    }
    d.c_vec = Eigen::RowVectorXcd::Zero(dim);
    d.c_vec(r) = 1.0;
    return {RationalFunction(std::move(d)), sigma};
}

std::pair<std::vector<Complex>, std::vector<Complex>> extremal_sets(
    const RationalFunction& h3, const SignProblemInstance& inst, double sigma, double tol) {
    std::vector<Complex> m1, m2;
    for (const Complex& z : inst.e_points)
        if (std::abs(h3.eval(z)) >= sigma * (1.0 - tol)) m1.push_back(z);
    for (const Complex& z : inst.f_points)
        if (std::abs(h3.eval(z)) >= 1.0 - tol) m2.push_back(z);
    return {std::move(m1), std::move(m2)};
}

} // namespace zolo::zolotarev
