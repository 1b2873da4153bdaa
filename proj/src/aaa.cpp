#include "zolo/aaa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace zolo::aaa {

namespace {

using numerics::ComplexMatrix;
using numerics::ComplexVector;

// Barycentric value at sample z given supports/values/weights; +inf marker
// (NaN-free) is not needed here, spurious-pole hits return inf.
Complex bary_at(const std::vector<Complex>& lam, const std::vector<Complex>& w,
                const ComplexVector& alpha, Complex z) {
    Complex num(0.0, 0.0), den(0.0, 0.0);
    for (size_t k = 0; k < lam.size(); ++k) {
        const Complex t = alpha(static_cast<Eigen::Index>(k)) / (z - lam[k]);
        num += t * w[k];
        den += t;
    }
    return num / den;
}

ComplexMatrix loewner_rows(const std::vector<Complex>& points, const std::vector<Complex>& values,
                           const std::vector<int>& non_support, const std::vector<Complex>& lam,
                           const std::vector<Complex>& w) {
    ComplexMatrix a(static_cast<Eigen::Index>(non_support.size()),
                    static_cast<Eigen::Index>(lam.size()));
    for (size_t r = 0; r < non_support.size(); ++r) {
        const int j = non_support[r];
        for (size_t k = 0; k < lam.size(); ++k)
            a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) =
                (values[static_cast<size_t>(j)] - w[k]) /
                (points[static_cast<size_t>(j)] - lam[k]);
    }
    return a;
}

} // namespace

BarycentricForm aaa_fit(const std::vector<Complex>& points, const std::vector<Complex>& values,
                        const AAAConfig& cfg) {
    const size_t n = points.size();
    if (values.size() != n) throw DimensionMismatch("points and values differ in length");
    if (static_cast<Eigen::Index>(n) <= cfg.max_order + 1)
        throw InsufficientSamples("need more samples than max_order + 1");

    double max_abs_f = 0.0;
    Complex mean(0.0, 0.0);
    for (const Complex& f : values) {
        max_abs_f = std::max(max_abs_f, std::abs(f));
        mean += f;
    }
    mean /= static_cast<double>(n);

    std::vector<bool> is_support(n, false);
    std::vector<Complex> lam, w;
    ComplexVector alpha;
    std::vector<Complex> model(n, mean);

    while (true) {
        // Current worst non-support residual; ties resolved by lowest index.
        int worst = -1;
        double worst_err = -1.0;
        for (size_t j = 0; j < n; ++j) {
            if (is_support[j]) continue;
            const double e = std::abs(model[j] - values[j]);
            if (e > worst_err) {
                worst_err = e;
                worst = static_cast<int>(j);
            }
        }
        if (!lam.empty() && worst_err <= cfg.convergence_tolerance * max_abs_f) break;
        if (static_cast<Eigen::Index>(lam.size()) == cfg.max_order + 1) break;

        is_support[static_cast<size_t>(worst)] = true;
        lam.push_back(points[static_cast<size_t>(worst)]);
        w.push_back(values[static_cast<size_t>(worst)]);

        std::vector<int> non_support;
        for (size_t j = 0; j < n; ++j)
            if (!is_support[j]) non_support.push_back(static_cast<int>(j));
        alpha = numerics::min_right_singular_vector(
            loewner_rows(points, values, non_support, lam, w));

        for (size_t j = 0; j < n; ++j)
            model[j] = is_support[j] ? values[j] : bary_at(lam, w, alpha, points[j]);
    }

    BarycentricForm out;
    out.support_points = lam;
    out.support_values = w;
    out.weights.resize(lam.size());
    for (size_t k = 0; k < lam.size(); ++k) out.weights[k] = alpha(static_cast<Eigen::Index>(k));
    return out;
}

BarycentricForm lawson_refine(const BarycentricForm& form, const std::vector<Complex>& points,
                              const std::vector<Complex>& values, const AAAConfig& cfg,
                              LawsonState* state) {
    const size_t n = points.size();
    if (values.size() != n) throw DimensionMismatch("points and values differ in length");
    if (cfg.lawson_iterations < 1)
        throw InsufficientSamples("lawson_refine requires lawson_iterations >= 1");

    const std::vector<Complex>& lam = form.support_points;
    const std::vector<Complex>& w = form.support_values;
    std::vector<bool> is_support(n, false);
    std::vector<int> non_support;
    for (size_t j = 0; j < n; ++j) {
        bool sup = false;
        for (const Complex& s : lam) sup = sup || (points[j] == s);
        is_support[j] = sup;
        if (!sup) non_support.push_back(static_cast<int>(j));
    }
    if (non_support.empty()) return form;

    std::vector<Complex> ref(n);
    for (size_t j = 0; j < n; ++j)
        ref[j] = cfg.sign_mode ? Complex(values[j].real() < 0.0 ? -1.0 : 1.0, 0.0) : values[j];

    const Eigen::Index m = static_cast<Eigen::Index>(lam.size());
    const Eigen::Index rows = static_cast<Eigen::Index>(non_support.size());

    // The refinement works on the decoupled form r = n(z)/d(z) with
    //   n(z) = sum_k beta_k / (z - lam_k),  d(z) = sum_k alpha_k / (z - lam_k),
    // dropping the interpolation tie beta_k = alpha_k w_k. This is essential:
    // on exactly two-valued data the tied family contains structurally null
    // least-squares directions (whole blocks of v_j - w_k vanish) that trap
    // the reweighting, while the decoupled family spans all of R_{l,l}.
    //
    // Each weighted least-squares step is solved as a Gauss-Newton step on
    // the true residuals r(z_j) - ref_j rather than as a smallest-singular-
    // vector problem on the linearized matrix. Two-valued data defeats the
    // singular-vector form: coefficient pairs with d nearly vanishing on one
    // of the sets make r identically +-1 at negligible linearized cost, so
    // the minimizer is always one of these degenerate directions no matter
    // how gamma is rebalanced. The Gauss-Newton residual is normalized by
    // the current denominator row by row, which prices those directions at
    // their true (large) error, and the gauge direction (beta, alpha) itself
    // lies in the Jacobian null space so no norm constraint is needed.
    ComplexMatrix cauchy(rows, m);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const size_t j = static_cast<size_t>(non_support[static_cast<size_t>(r)]);
        for (Eigen::Index k = 0; k < m; ++k)
            cauchy(r, k) = 1.0 / (points[j] - lam[static_cast<size_t>(k)]);
    }

    auto eval_pair = [&](const ComplexVector& beta, const ComplexVector& alpha, Complex z) {
        Complex num(0.0, 0.0), den(0.0, 0.0);
        for (Eigen::Index k = 0; k < m; ++k) {
            const Complex cauchy = 1.0 / (z - lam[static_cast<size_t>(k)]);
            num += beta(k) * cauchy;
            den += alpha(k) * cauchy;
        }
        return num / den;
    };

    // Start from the tied input form so the result can never be worse.
    ComplexVector best_beta(m), best_alpha(m);
    for (Eigen::Index k = 0; k < m; ++k) {
        best_alpha(k) = form.weights[static_cast<size_t>(k)];
        best_beta(k) = form.weights[static_cast<size_t>(k)] * w[static_cast<size_t>(k)];
    }
    double best_res = 0.0;
    for (size_t j = 0; j < n; ++j) {
        const Complex r = is_support[j] ? values[j] : eval_pair(best_beta, best_alpha, points[j]);
        best_res = std::max(best_res, std::abs(r - ref[j]));
    }

    std::vector<double> history;
    Eigen::VectorXd gamma = Eigen::VectorXd::Constant(rows, 1.0 / static_cast<double>(rows));

    // Weighted sum-of-squares objective for the line search.
    auto objective = [&](const ComplexVector& beta, const ComplexVector& alpha) {
        double s = 0.0;
        for (Eigen::Index r = 0; r < rows; ++r) {
            const size_t j = static_cast<size_t>(non_support[static_cast<size_t>(r)]);
            const double e = std::abs(eval_pair(beta, alpha, points[j]) - ref[j]);
            if (!std::isfinite(e)) return std::numeric_limits<double>::infinity();
            s += gamma(r) * e * e;
        }
        return s;
    };

    ComplexVector beta = best_beta, alpha = best_alpha;
    {
        const double s = std::sqrt(beta.squaredNorm() + alpha.squaredNorm());
        if (s > 0.0) {
            beta /= s;
            alpha /= s;
        }
    }

    for (int it = 0; it < cfg.lawson_iterations; ++it) {
        ComplexVector rho(rows);
        ComplexMatrix jac(rows, 2 * m);
        const Eigen::VectorXd u = gamma.cwiseSqrt();
        for (Eigen::Index r = 0; r < rows; ++r) {
            const size_t j = static_cast<size_t>(non_support[static_cast<size_t>(r)]);
            Complex num(0.0, 0.0), den(0.0, 0.0);
            for (Eigen::Index k = 0; k < m; ++k) {
                num += beta(k) * cauchy(r, k);
                den += alpha(k) * cauchy(r, k);
            }
            const Complex rv = num / den;
            rho(r) = u(r) * (rv - ref[j]);
            for (Eigen::Index k = 0; k < m; ++k) {
                jac(r, k) = u(r) * cauchy(r, k) / den;
                jac(r, m + k) = -u(r) * cauchy(r, k) * rv / den;
            }
        }
        if (!rho.allFinite() || !jac.allFinite()) break;
        const ComplexVector delta =
            jac.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(-rho);

        // Halving line search keeps the step from overshooting through a
        // pole configuration where the objective blows up.
        const double before = objective(beta, alpha);
        double step = 1.0;
        ComplexVector next_beta, next_alpha;
        for (int half = 0; half < 30; ++half) {
            next_beta = beta + step * delta.head(m);
            next_alpha = alpha + step * delta.tail(m);
            const double s = std::sqrt(next_beta.squaredNorm() + next_alpha.squaredNorm());
            next_beta /= s;
            next_alpha /= s;
            if (objective(next_beta, next_alpha) < before) break;
            step *= 0.5;
        }
        beta = next_beta;
        alpha = next_alpha;

        double worst = 0.0;
        Eigen::VectorXd errs(rows);
        for (Eigen::Index r = 0; r < rows; ++r) {
            const size_t j = static_cast<size_t>(non_support[static_cast<size_t>(r)]);
            double e = std::abs(eval_pair(beta, alpha, points[j]) - ref[j]);
            // A spurious pole sitting on a sample yields inf/NaN; cap it so
            // the weight update stays finite and keeps pushing mass there.
            if (!std::isfinite(e)) e = 1e6;
            errs(r) = std::min(e, 1e6);
            worst = std::max(worst, e);
        }
        if (worst < best_res) {
            best_res = worst;
            best_beta = beta;
            best_alpha = alpha;
        }
        history.push_back(worst);
        if (worst == 0.0) break; // already exact everywhere

        for (Eigen::Index r = 0; r < rows; ++r) gamma(r) *= std::pow(errs(r), cfg.damping);
        const double total = gamma.sum();
        if (!(total > 0.0) || !std::isfinite(total)) break;
        gamma /= total;
    }

    if (state) {
        state->sample_weights = gamma;
        state->barycentric_weights = best_alpha;
        state->residual_history = std::move(history);
    }
    BarycentricForm out = form;
    const double alpha_floor = 1e-14 * best_alpha.cwiseAbs().maxCoeff();
    for (Eigen::Index k = 0; k < m; ++k) {
        // Support values become beta/alpha; a vanishing alpha entry would put
        // the pole exactly on the support point, so clamp its magnitude.
        Complex a = best_alpha(k);
        if (std::abs(a) < alpha_floor)
            a = (a == Complex(0.0, 0.0)) ? Complex(alpha_floor, 0.0)
                                         : a * (alpha_floor / std::abs(a));
        out.weights[static_cast<size_t>(k)] = a;
        out.support_values[static_cast<size_t>(k)] = best_beta(k) / a;
    }
    return out;
}

std::vector<double> residual_curve(const BarycentricForm& form,
                                   const std::vector<Complex>& points,
                                   const std::vector<Complex>& values) {
    std::vector<double> out(points.size());
    for (size_t j = 0; j < points.size(); ++j) {
        try {
            out[j] = std::abs(rational::eval_barycentric(form, points[j]) - values[j]);
        } catch (const DivideByZeroWeightSum&) {
            out[j] = std::numeric_limits<double>::infinity();
        }
    }
    return out;
}

} // namespace zolo::aaa
