#pragma once

#include "zolo/numerics.hpp"
#include "zolo/rational.hpp"

namespace zolo::aaa {

using numerics::Complex;
using rational::BarycentricForm;

struct AAAConfig {
    Eigen::Index max_order = 100;        // degree (l, l) cap
    double convergence_tolerance = 1e-13; // relative, on max residual
    int lawson_iterations = 0;            // 0 = off
    double damping = 1.0;                 // weight-update exponent in (0, 1]
    bool sign_mode = false;               // measure residuals against sign(Re f)
};

// Greedy barycentric fit: each step adds the sample with the largest current
// absolute residual (ties broken by lowest index) as a support point, then
// solves for the weights via the smallest right singular vector of the
// rectangular Loewner matrix of non-support rows vs. support columns.
BarycentricForm aaa_fit(const std::vector<Complex>& points, const std::vector<Complex>& values,
                        const AAAConfig& cfg);

// Diagnostic record of a Lawson run: final sample weights over the
// non-support samples (normalized to sum 1), the returned barycentric
// weights, and the max residual recorded at every iteration.
struct LawsonState {
    Eigen::VectorXd sample_weights;
    numerics::ComplexVector barycentric_weights;
    std::vector<double> residual_history;
};

// Iteratively-reweighted refinement of the barycentric weights. Keeps the
// iterate with the smallest recorded max-residual (the iteration is not
// monotone), so the result is never worse than the input on the samples.
BarycentricForm lawson_refine(const BarycentricForm& form, const std::vector<Complex>& points,
                              const std::vector<Complex>& values, const AAAConfig& cfg,
                              LawsonState* state = nullptr);

// |r(z_j) - f_j| per sample, sample order preserved.
std::vector<double> residual_curve(const BarycentricForm& form,
                                   const std::vector<Complex>& points,
                                   const std::vector<Complex>& values);

} // namespace zolo::aaa
