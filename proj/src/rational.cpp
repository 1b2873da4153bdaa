#include "zolo/rational.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace zolo::rational {

namespace {

void sort_lexicographic(std::vector<Complex>& v) {
    std::sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

std::vector<Complex> finite_eigenvalues(const ComplexMatrix& a, const ComplexMatrix& e) {
    std::vector<Complex> out;
    for (const auto& ev : numerics::generalized_eigenvalues(a, e))
        if (!ev.is_infinite) out.push_back(ev.value);
    sort_lexicographic(out);
    return out;
}

// Monic polynomial with the given roots, descending coefficients.
std::vector<Complex> poly_from_roots(const std::vector<Complex>& roots) {
    std::vector<Complex> coeffs{Complex(1.0, 0.0)};
    for (const Complex& r : roots) {
        coeffs.push_back(Complex(0.0, 0.0));
        for (size_t i = coeffs.size() - 1; i >= 1; --i) coeffs[i] -= r * coeffs[i - 1];
    }
    return coeffs;
}

Complex horner(const std::vector<Complex>& coeffs_descending, Complex z) {
    Complex acc(0.0, 0.0);
    for (const Complex& c : coeffs_descending) acc = acc * z + c;
    return acc;
}

void strip_leading_zeros(std::vector<Complex>& coeffs) {
    size_t lead = 0;
    while (lead + 1 < coeffs.size() && coeffs[lead] == Complex(0.0, 0.0)) ++lead;
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(lead));
}

void validate_barycentric(const BarycentricForm& f) {
    const size_t n = f.support_points.size();
    if (n < 1 || f.support_values.size() != n || f.weights.size() != n)
        throw DimensionMismatch("barycentric form needs equal-length nonempty lists");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (f.support_points[i] == f.support_points[j])
                throw CoincidentPoints("duplicate barycentric support point");
    bool any = false;
    for (const Complex& a : f.weights) any = any || (a != Complex(0.0, 0.0));
    if (!any) throw IllConditioned("all barycentric weights are zero");
}

void validate_descriptor(const DescriptorRealization& r) {
    const auto n = r.e_mat.rows();
    if (n < 1 || r.e_mat.cols() != n || r.a_mat.rows() != n || r.a_mat.cols() != n ||
        r.b_vec.size() != n || r.c_vec.size() != n)
        throw DimensionMismatch("descriptor blocks must share one dimension r >= 1");
}

void validate_polynomial(const PolynomialRatio& p) {
    if (p.denominator_coeffs.empty() || p.numerator_coeffs.empty())
        throw DimensionMismatch("polynomial ratio needs nonempty coefficient lists");
    if (p.denominator_coeffs.front() != Complex(1.0, 0.0))
        throw IllConditioned("denominator must be monic");
    if (p.numerator_coeffs.size() > p.denominator_coeffs.size())
        throw IllConditioned("numerator degree exceeds denominator degree");
}

Eigen::Index rep_order(const RationalFunction::Rep& rep) {
    if (const auto* b = std::get_if<BarycentricForm>(&rep))
        return static_cast<Eigen::Index>(b->support_points.size()) - 1;
    if (const auto* d = std::get_if<DescriptorRealization>(&rep)) return d->dimension();
    return static_cast<Eigen::Index>(std::get<PolynomialRatio>(rep).denominator_coeffs.size()) - 1;
}

// Companion-form realization of num/den (den monic, degree n >= 1); a possible
// polynomial part of degree 0 (feedthrough) is absorbed by one extra
// algebraic state, giving dimension n + 1.
DescriptorRealization polynomial_to_descriptor(const PolynomialRatio& p) {
    const auto n = static_cast<Eigen::Index>(p.denominator_coeffs.size()) - 1;
    // num = d * den + rem with deg rem < n
    std::vector<Complex> num(p.denominator_coeffs.size(), Complex(0.0, 0.0));
    std::copy(p.numerator_coeffs.rbegin(), p.numerator_coeffs.rend(), num.rbegin());
    const Complex d = num.front();
    std::vector<Complex> rem(num.size() - 1);
    for (size_t i = 0; i < rem.size(); ++i) rem[i] = num[i + 1] - d * p.denominator_coeffs[i + 1];

    DescriptorRealization r;
    r.e_mat = ComplexMatrix::Zero(n + 1, n + 1);
    r.e_mat.topLeftCorner(n, n).setIdentity();
    r.a_mat = ComplexMatrix::Zero(n + 1, n + 1);
    for (Eigen::Index i = 0; i + 1 < n; ++i) r.a_mat(i, i + 1) = 1.0;
    for (Eigen::Index j = 0; j < n; ++j)
        r.a_mat(n - 1, j) = -p.denominator_coeffs[static_cast<size_t>(n - j)];
    r.a_mat(n, n) = -1.0;
    r.b_vec = ComplexVector::Zero(n + 1);
    if (n >= 1) r.b_vec(n - 1) = 1.0;
    r.b_vec(n) = 1.0;
    r.c_vec = Eigen::RowVectorXcd::Zero(n + 1);
    for (Eigen::Index j = 0; j < n; ++j) r.c_vec(j) = rem[static_cast<size_t>(n - 1 - j)];
    r.c_vec(n) = d;
    return r;
}

std::vector<Complex> seeded_probe_points(size_t count, double radius, uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> rad(radius, 2.0 * radius);
    std::vector<Complex> out(count);
    for (auto& z : out) {
        const double t = angle(gen);
        const double r = rad(gen);
        z = Complex(r * std::cos(t), r * std::sin(t));
    }
    return out;
}

} // namespace

RationalFunction::RationalFunction(BarycentricForm f, double scale)
    : rep_(std::move(f)), order_(0), scale_(scale) {
    validate_barycentric(std::get<BarycentricForm>(rep_));
    order_ = rep_order(rep_);
}

RationalFunction::RationalFunction(DescriptorRealization r, double scale)
    : rep_(std::move(r)), order_(0), scale_(scale) {
    validate_descriptor(std::get<DescriptorRealization>(rep_));
    order_ = rep_order(rep_);
}

RationalFunction::RationalFunction(PolynomialRatio p, double scale)
    : rep_(std::move(p)), order_(0), scale_(scale) {
    validate_polynomial(std::get<PolynomialRatio>(rep_));
    order_ = rep_order(rep_);
}

Complex RationalFunction::eval(Complex z) const {
    const Complex core = std::visit(
        [&](const auto& rep) -> Complex {
            using T = std::decay_t<decltype(rep)>;
            if constexpr (std::is_same_v<T, BarycentricForm>) return eval_barycentric(rep, z);
            else if constexpr (std::is_same_v<T, DescriptorRealization>)
                return eval_descriptor(rep, z);
            else return eval_polynomial_ratio(rep, z);
        },
        rep_);
    return scale_ * core;
}

Complex eval_barycentric(const BarycentricForm& f, Complex z) {
    const size_t n = f.support_points.size();
    // Exact-equality short circuit; tolerance snapping would silently alter
    // nearby evaluations.
    for (size_t k = 0; k < n; ++k)
        if (z == f.support_points[k]) return f.support_values[k];
    Complex num(0.0, 0.0), den(0.0, 0.0);
    for (size_t k = 0; k < n; ++k) {
        const Complex t = f.weights[k] / (z - f.support_points[k]);
        num += t * f.support_values[k];
        den += t;
    }
    if (den == Complex(0.0, 0.0))
        throw DivideByZeroWeightSum("barycentric denominator vanished at a non-support point");
    return num / den;
}

Complex eval_descriptor(const DescriptorRealization& r, Complex z) {
    const ComplexMatrix m = z * r.e_mat - r.a_mat;
    Eigen::PartialPivLU<ComplexMatrix> lu(m);
    const ComplexVector x = lu.solve(r.b_vec);
    const Complex y = r.c_vec * x;
    const double resid = (m * x - r.b_vec).norm();
    if (!std::isfinite(y.real()) || !std::isfinite(y.imag()) ||
        resid > 1e-8 * (r.b_vec.norm() + m.norm() * x.norm()))
        throw SingularAtPoint("(zE - A) is singular to machine precision at this point");
    return y;
}

Complex eval_polynomial_ratio(const PolynomialRatio& p, Complex z) {
    const Complex den = horner(p.denominator_coeffs, z);
    if (den == Complex(0.0, 0.0))
        throw SingularAtPoint("polynomial denominator vanished");
    return horner(p.numerator_coeffs, z) / den;
}

DescriptorRealization barycentric_to_descriptor(const BarycentricForm& f) {
    validate_barycentric(f);
    const auto n = static_cast<Eigen::Index>(f.support_points.size());
    // States xi_k = eta / (z - lambda_k) with the common factor eta = 1/D(z)
    // eliminated through the pairwise rows (z - lambda_k) xi_k = (z - lambda_0) xi_0,
    // plus one algebraic row enforcing sum_k alpha_k xi_k = 1.
    DescriptorRealization r;
    r.e_mat = ComplexMatrix::Zero(n, n);
    r.a_mat = ComplexMatrix::Zero(n, n);
    r.b_vec = ComplexVector::Zero(n);
    r.c_vec = Eigen::RowVectorXcd::Zero(n);
    for (Eigen::Index k = 1; k < n; ++k) {
        r.e_mat(k - 1, k) = 1.0;
        r.e_mat(k - 1, 0) = -1.0;
        r.a_mat(k - 1, k) = f.support_points[static_cast<size_t>(k)];
        r.a_mat(k - 1, 0) = -f.support_points[0];
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        r.a_mat(n - 1, k) = f.weights[static_cast<size_t>(k)];
        r.c_vec(k) = f.weights[static_cast<size_t>(k)] * f.support_values[static_cast<size_t>(k)];
    }
    r.b_vec(n - 1) = -1.0;
    return r;
}

DescriptorRealization to_descriptor(const RationalFunction& f) {
    DescriptorRealization r = std::visit(
        [](const auto& rep) -> DescriptorRealization {
            using T = std::decay_t<decltype(rep)>;
            if constexpr (std::is_same_v<T, BarycentricForm>)
                return barycentric_to_descriptor(rep);
            else if constexpr (std::is_same_v<T, DescriptorRealization>) return rep;
            else return polynomial_to_descriptor(rep);
        },
        f.rep());
    r.c_vec *= f.scale();
    return r;
}

std::vector<Complex> poles(const RationalFunction& f) {
    if (const auto* p = std::get_if<PolynomialRatio>(&f.rep())) {
        auto roots = polynomial_roots(p->denominator_coeffs);
        sort_lexicographic(roots);
        return roots;
    }
    const DescriptorRealization d = to_descriptor(f);
    return finite_eigenvalues(d.a_mat, d.e_mat);
}

std::vector<Complex> zeros(const RationalFunction& f) {
    if (const auto* p = std::get_if<PolynomialRatio>(&f.rep())) {
        auto roots = polynomial_roots(p->numerator_coeffs);
        sort_lexicographic(roots);
        return roots;
    }
    const DescriptorRealization d = to_descriptor(f);
    const auto n = d.dimension();
    ComplexMatrix a_aug = ComplexMatrix::Zero(n + 1, n + 1);
    a_aug.topLeftCorner(n, n) = d.a_mat;
    a_aug.topRightCorner(n, 1) = d.b_vec;
    a_aug.bottomLeftCorner(1, n) = d.c_vec;
    ComplexMatrix e_aug = ComplexMatrix::Zero(n + 1, n + 1);
    e_aug.topLeftCorner(n, n) = d.e_mat;
    return finite_eigenvalues(a_aug, e_aug);
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs_descending) {
    std::vector<Complex> coeffs = coeffs_descending;
    strip_leading_zeros(coeffs);
    const auto deg = static_cast<Eigen::Index>(coeffs.size()) - 1;
    if (deg < 1) return {};
    ComplexMatrix companion = ComplexMatrix::Zero(deg, deg);
    for (Eigen::Index i = 0; i < deg; ++i) companion(0, i) = -coeffs[static_cast<size_t>(i + 1)] / coeffs[0];
    for (Eigen::Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<ComplexMatrix> es(companion, false);
    if (es.info() != Eigen::Success)
        throw ConvergenceFailure("companion eigenvalue iteration failed");
    std::vector<Complex> roots(static_cast<size_t>(deg));
    for (Eigen::Index i = 0; i < deg; ++i) roots[static_cast<size_t>(i)] = es.eigenvalues()(i);
    return roots;
}

PolynomialRatio to_polynomial_ratio(const RationalFunction& f) {
    if (f.order() > 64)
        throw IllConditioned("monomial representation limited to order 64");
    const std::vector<Complex> ps = poles(f);
    const std::vector<Complex> zs = zeros(f);

    double max_root = 0.0;
    for (const Complex& r : ps) max_root = std::max(max_root, std::abs(r));
    for (const Complex& r : zs) max_root = std::max(max_root, std::abs(r));
    const double radius = 1.0 + 2.0 * max_root;

    PolynomialRatio out;
    out.denominator_coeffs = poly_from_roots(ps);
    std::vector<Complex> num_base = poly_from_roots(zs);

    // Leading numerator coefficient from a probe evaluation away from all roots.
    const auto anchors = seeded_probe_points(4, radius, 0x5a1ad1ceULL);
    Complex k_sum(0.0, 0.0);
    for (const Complex& w : anchors)
        k_sum += f.eval(w) * horner(out.denominator_coeffs, w) / horner(num_base, w);
    const Complex k = k_sum / static_cast<double>(anchors.size());

    if (std::abs(k) == 0.0) {
        out.numerator_coeffs = {Complex(0.0, 0.0)};
    } else {
        out.numerator_coeffs = num_base;
        for (Complex& c : out.numerator_coeffs) c *= k;
    }

    const size_t n_probes = std::max<size_t>(4 * static_cast<size_t>(f.order()), 8);
    for (const Complex& w : seeded_probe_points(n_probes, radius, 0x70bedecafULL)) {
        const Complex ref = f.eval(w);
        const Complex got = eval_polynomial_ratio(out, w);
        if (std::abs(got - ref) > 1e-8 * (1.0 + std::abs(ref)))
            throw IllConditioned("monomial coefficients failed the probe-point check");
    }
    return out;
}

RationalFunction mobius_z4_to_z3(const RationalFunction& h4, double sigma) {
    if (!(sigma > 0.0 && sigma <= 1.0))
        throw DegenerateSigma("sigma must lie in (0, 1]");
    const double scale = std::sqrt(sigma);
    const double p = (1.0 - sigma) / (1.0 + sigma);
    if (p == 0.0) {
        // sigma == 1: (p + h)/(p - h) degenerates to the constant -1.
        return RationalFunction(PolynomialRatio{{Complex(-1.0, 0.0)}, {Complex(1.0, 0.0)}}, scale);
    }

    // (p + h)/(p - h) = 1 + (2/p) C (zE - A - BC/p)^{-1} B for h = C (zE - A)^{-1} B;
    // the unit feedthrough is absorbed by one extra algebraic state. The finite
    // eigenvalues of the resulting pole/zero pencils coincide with those of the
    // augmented pencils ([A B; -/+C p], blkdiag(E, 0)).
    const DescriptorRealization d = to_descriptor(h4);
    const auto n = d.dimension();
    DescriptorRealization r;
    r.e_mat = ComplexMatrix::Zero(n + 1, n + 1);
    r.e_mat.topLeftCorner(n, n) = d.e_mat;
    r.a_mat = ComplexMatrix::Zero(n + 1, n + 1);
    r.a_mat.topLeftCorner(n, n) = d.a_mat + d.b_vec * d.c_vec / p;
    r.a_mat.topRightCorner(n, 1) = (2.0 / p) * d.b_vec;
    r.a_mat(n, n) = -1.0;
    r.b_vec = ComplexVector::Zero(n + 1);
    r.b_vec(n) = 1.0;
    r.c_vec = Eigen::RowVectorXcd::Zero(n + 1);
    r.c_vec.head(n) = d.c_vec;
    r.c_vec(n) = 1.0;
    return RationalFunction(std::move(r), scale);
}

} // namespace zolo::rational
