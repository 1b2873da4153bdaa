#pragma once

#include "zolo/domains.hpp"
#include "zolo/numerics.hpp"
#include "zolo/rational.hpp"

namespace zolo::loewner {

using numerics::Complex;
using numerics::ComplexMatrix;
using numerics::ComplexVector;

// Loewner matrix L[j][i] = (v_j - w_i)/(mu_j - lambda_i), shifted Loewner
// matrix Ls[j][i] = (mu_j v_j - w_i lambda_i)/(mu_j - lambda_i), and the data
// vectors V (left values, column) and W (right values, row).
struct LoewnerPencil {
    ComplexMatrix l;          // k x q
    ComplexMatrix ls;         // k x q
    ComplexVector v;          // k
    Eigen::RowVectorXcd w;    // q
    std::vector<Complex> left_points;
    std::vector<Complex> right_points;
};

// Order selection: relative singular-value threshold or a fixed order.
using OrderPolicy = numerics::TruncationPolicy;

LoewnerPencil build_pencil(const domains::PartitionedData& data);

// Projection to a reduced realization: X_r from the SVD of [L Ls] (blocks in
// a row), Y_r from [L; Ls] (blocks in a column), then
//   E = -X* L Y, A = -X* Ls Y, B = X* V, C = W Y.
rational::DescriptorRealization reduce(const LoewnerPencil& pencil, const OrderPolicy& policy);

// Normalized singular values sigma_i / sigma_1 of the stacked pencil [L Ls];
// this is the curve the order threshold is applied to.
Eigen::VectorXd normalized_singular_values(const LoewnerPencil& pencil);

// Max over all data points of |R(point) - value|; points hitting a pole
// contribute +infinity.
double interpolation_residual(const rational::DescriptorRealization& r,
                              const domains::PartitionedData& data);

} // namespace zolo::loewner
