#pragma once

#include <string>
#include <vector>

#include "zolo/numerics.hpp"

namespace zolo::domains {

using numerics::Complex;

struct BoundingBox {
    double re_min = 0.0;
    double re_max = 0.0;
    double im_min = 0.0;
    double im_max = 0.0;
};

// Sampled sets E and F with sign labels -1 on E and +1 on F.
struct SignProblemInstance {
    std::string name;
    std::vector<Complex> e_points;
    std::vector<Complex> f_points;
    bool conjugate_symmetric = false;
    BoundingBox bounding_box;
};

// Left/right split of the labeled samples for the Loewner framework.
struct PartitionedData {
    std::vector<Complex> right_points; // lambda_i
    std::vector<Complex> right_values; // w_i
    std::vector<Complex> left_points;  // mu_j
    std::vector<Complex> left_values;  // v_j
};

// Two circles of radius rho centered at -alpha (E) and +alpha (F), sampled at
// n_per_set uniformly spaced boundary angles starting at angle 0.
SignProblemInstance two_circles(double rho, double alpha, int n_per_set);

// Named topology catalog: '1a'..'3d', '7', 'spiral1', 'pm2'. Deterministic:
// same name and count produce identical bytes.
SignProblemInstance make_example(const std::string& name, int n_per_set = 512);

std::vector<std::string> catalog_names();

// Alternating assignment within each of E and F separately (even indices go
// right, odd go left), so both sets contribute to both halves.
PartitionedData split_left_right(const SignProblemInstance& inst);

} // namespace zolo::domains
