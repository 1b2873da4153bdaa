#pragma once

#include <optional>
#include <string>
#include <utility>

#include "zolo/aaa.hpp"
#include "zolo/domains.hpp"
#include "zolo/loewner.hpp"
#include "zolo/rational.hpp"

namespace zolo::zolotarev {

using domains::SignProblemInstance;
using numerics::Complex;
using rational::RationalFunction;

enum class Method { loewner, aaa, aaa_lawson };

std::string method_name(Method m);

struct SolveOptions {
    std::optional<Eigen::Index> order;  // fixed approximation order
    std::optional<double> tolerance;    // LF: relative SV threshold; AAA: residual tol
    int lawson_iterations = 200;
    double damping = 0.95;
    bool sign_mode = true;
};

// Paired Z4/Z3 approximants with the conversion scalars. tau is measured on the
// instance samples; sigma and p follow from tau; h3 = mobius_z4_to_z3(h4, sigma).
struct ZolotarevSolution {
    RationalFunction h4;
    RationalFunction h3;
    double tau = 0.0;
    double sigma = 0.0;
    double p = 0.0;
    std::string method_tag;
    Eigen::Index order = 0;
    double elapsed_seconds = 0.0;
};

struct Z3Conversion {
    RationalFunction h3;
    double p;
    double sigma;
    double tau;
};

// -1 for E samples, +1 for F samples (match tolerance 1e-12); undefined
// elsewhere.
int sign_of(const SignProblemInstance& inst, Complex z);

ZolotarevSolution solve_z4(const SignProblemInstance& inst, Method method,
                           const SolveOptions& options);

// tau from the samples, then sigma = (tau / (1 + sqrt(1 - tau^2)))^2,
// p = (1 - sigma)/(1 + sigma), h3 via the Moebius map. The min of |h3| over
// the F samples must stay in [0.5, 2] (the conversion normalizes it to 1).
Z3Conversion z4_to_z3(const RationalFunction& h4, const SignProblemInstance& inst);

// (max over E samples of |h3|) / (min over F samples of |h3|), formed in
// log10 space so that ratios near 1e-30 survive.
double measure_sigma(const RationalFunction& h3, const SignProblemInstance& inst);

// Closed-form optimum for the two-circle topology (E on the left, so the
// factor that is small on E goes in the numerator):
//   r*(z) = ((z + c)/(z - c))^r, sigma_r = ((1 - c)/(1 + c))^r, c = sqrt(alpha^2 - rho^2).
// Monomial coefficients for r <= 12; a cascaded product realization beyond
// (the expanded form cancels catastrophically at higher orders).
std::pair<RationalFunction, double> optimal_two_circles(double rho, double alpha, Eigen::Index r);

// M1 = E samples with |h3| >= sigma (1 - tol); M2 = F samples with |h3| >= 1 - tol.
std::pair<std::vector<Complex>, std::vector<Complex>> extremal_sets(
    const RationalFunction& h3, const SignProblemInstance& inst, double sigma, double tol);

// Scalar relations of the conversion, exposed for reuse and testing.
double tau_from_sigma(double sigma);
double sigma_from_tau(double tau);

} // namespace zolo::zolotarev
