#pragma once

#include <variant>
#include <vector>

#include "zolo/numerics.hpp"

namespace zolo::rational {

using numerics::Complex;
using numerics::ComplexMatrix;
using numerics::ComplexVector;

// Barycentric representation N(z)/D(z) with
//   N(z) = sum_k alpha_k w_k / (z - lambda_k),
//   D(z) = sum_k alpha_k / (z - lambda_k).
// Degree (l, l) for l + 1 support points.
struct BarycentricForm {
    std::vector<Complex> support_points;
    std::vector<Complex> support_values;
    std::vector<Complex> weights;
};

// Scalar-output realization C (z E - A)^{-1} B.
struct DescriptorRealization {
    ComplexMatrix e_mat;
    ComplexMatrix a_mat;
    ComplexVector b_vec;
    Eigen::RowVectorXcd c_vec;

    Eigen::Index dimension() const { return e_mat.rows(); }
};

// Monomial coefficients, descending degree, denominator monic.
struct PolynomialRatio {
    std::vector<Complex> numerator_coeffs;
    std::vector<Complex> denominator_coeffs;
};

// Tagged union over the three representations plus cached order metadata and
// a separate real scale factor. The scale stays outside the stored
// representation so that pencils remain well-conditioned when the overall
// magnitude is tiny (sqrt(sigma) can be ~1e-15 at high orders).
class RationalFunction {
public:
    using Rep = std::variant<BarycentricForm, DescriptorRealization, PolynomialRatio>;

    explicit RationalFunction(BarycentricForm f, double scale = 1.0);
    explicit RationalFunction(DescriptorRealization r, double scale = 1.0);
    explicit RationalFunction(PolynomialRatio p, double scale = 1.0);

    Complex eval(Complex z) const;
    Eigen::Index order() const { return order_; }
    double scale() const { return scale_; }
    const Rep& rep() const { return rep_; }

private:
    Rep rep_;
    Eigen::Index order_;
    double scale_;
};

Complex eval_barycentric(const BarycentricForm& f, Complex z);
Complex eval_descriptor(const DescriptorRealization& r, Complex z);
Complex eval_polynomial_ratio(const PolynomialRatio& p, Complex z);

// Equivalent realization of dimension l + 1 (one state per support point).
DescriptorRealization barycentric_to_descriptor(const BarycentricForm& f);

// Realization of the full function, scale folded into the output row.
DescriptorRealization to_descriptor(const RationalFunction& f);

// Finite poles / zeros, sorted by (real, imag) lexicographic order.
// Zeros come from the augmented pencil ([A B; C 0], blkdiag(E, 0)).
std::vector<Complex> poles(const RationalFunction& f);
std::vector<Complex> zeros(const RationalFunction& f);

// Monic-denominator monomial coefficients, validated against eval at seeded
// probe points (IllConditioned when the order is too high for the basis).
PolynomialRatio to_polynomial_ratio(const RationalFunction& f);

// Z4 -> Z3 conversion map:
//   r*(z) = sqrt(sigma) (p + h4(z)) / (p - h4(z)),  p = (1 - sigma)/(1 + sigma).
// Realized on the descriptor pencil; sqrt(sigma) is carried as the scale tag.
RationalFunction mobius_z4_to_z3(const RationalFunction& h4, double sigma);

// Roots of a polynomial given by descending coefficients (companion matrix).
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs_descending);

} // namespace zolo::rational
