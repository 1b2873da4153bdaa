#pragma once

#include <complex>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "zolo/errors.hpp"

namespace zolo::numerics {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Truncation policy for svd_truncate: keep everything with
// sigma_i / sigma_1 >= relative_tolerance, or exactly fixed_rank values.
struct RelativeTolerance {
    double value;
};
struct FixedRank {
    Eigen::Index value;
};
using TruncationPolicy = std::variant<RelativeTolerance, FixedRank>;

struct TruncatedSVD {
    ComplexMatrix left_vectors;          // k x r, orthonormal columns
    Eigen::VectorXd singular_values;     // r, descending, >= 0
    ComplexMatrix right_vectors;         // q x r, orthonormal columns
    Eigen::Index effective_rank = 0;
};

// One generalized eigenvalue of a pencil (A, E). Eigenvalues whose beta is
// negligible relative to ||E|| are flagged infinite instead of being dropped:
// the augmented pole/zero pencils downstream contain one singular row by
// construction and produce exactly one infinite eigenvalue to discard.
struct GeneralizedEigenvalue {
    Complex value{};
    bool is_infinite = false;
};

TruncatedSVD svd_truncate(const ComplexMatrix& m, const TruncationPolicy& policy);

std::vector<GeneralizedEigenvalue> generalized_eigenvalues(const ComplexMatrix& a,
                                                           const ComplexMatrix& e);

// Unit vector v minimizing ||M v||_2; the weight solve inside AAA.
ComplexVector min_right_singular_vector(const ComplexMatrix& m);

} // namespace zolo::numerics
