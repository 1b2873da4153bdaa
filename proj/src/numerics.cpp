#include "zolo/numerics.hpp"

#include <algorithm>
#include <cmath>

#define lapack_complex_double std::complex<double>
#define lapack_complex_float std::complex<float>
#include <lapacke.h>

namespace zolo::numerics {

namespace {

void require_finite(const ComplexMatrix& m) {
    if (!m.allFinite())
        throw NonFiniteEntry("matrix contains NaN or Inf entries");
}

// Full SVD via zgesdd (divide and conquer), thin U/V.
void full_svd(const ComplexMatrix& m, ComplexMatrix& u, Eigen::VectorXd& s, ComplexMatrix& v) {
    const auto rows = m.rows();
    const auto cols = m.cols();
    const auto mn = std::min(rows, cols);
    ComplexMatrix a = m; // zgesdd destroys its input
    u.resize(rows, mn);
    s.resize(mn);
    ComplexMatrix vt(mn, cols);
    const int info = LAPACKE_zgesdd(
        LAPACK_COL_MAJOR, 'S', static_cast<lapack_int>(rows), static_cast<lapack_int>(cols),
        a.data(), static_cast<lapack_int>(rows), s.data(), u.data(),
        static_cast<lapack_int>(rows), vt.data(), static_cast<lapack_int>(mn));
    if (info != 0)
        throw ConvergenceFailure("zgesdd failed with info=" + std::to_string(info));
    v = vt.adjoint();
}

} // namespace

TruncatedSVD svd_truncate(const ComplexMatrix& m, const TruncationPolicy& policy) {
    if (m.rows() < 1 || m.cols() < 1)
        throw EmptyMatrix("svd_truncate requires a nonempty matrix");
    require_finite(m);

    ComplexMatrix u, v;
    Eigen::VectorXd s;
    full_svd(m, u, s, v);
    const Eigen::Index mn = s.size();

    Eigen::Index r = 0;
    if (const auto* fixed = std::get_if<FixedRank>(&policy)) {
        if (fixed->value < 1 || fixed->value > mn)
            throw RankOutOfRange("fixed_rank " + std::to_string(fixed->value) +
                                 " outside [1, " + std::to_string(mn) + "]");
        r = fixed->value;
    } else {
        const double tol = std::get<RelativeTolerance>(policy).value;
        if (!(tol > 0.0 && tol < 1.0))
            throw RankOutOfRange("relative_tolerance must lie in (0, 1)");
        const double s0 = s(0);
        r = 1;
        while (r < mn && s(r) / s0 >= tol) ++r;
    }

    TruncatedSVD out;
    out.left_vectors = u.leftCols(r);
    out.singular_values = s.head(r);
    out.right_vectors = v.leftCols(r);
    out.effective_rank = r;
    return out;
}

std::vector<GeneralizedEigenvalue> generalized_eigenvalues(const ComplexMatrix& a,
                                                           const ComplexMatrix& e) {
    if (a.rows() != a.cols() || e.rows() != e.cols() || a.rows() != e.rows())
        throw DimensionMismatch("generalized_eigenvalues requires square A, E of equal size");
    require_finite(a);
    require_finite(e);

    const auto n = a.rows();
    const double scale = std::max({a.cwiseAbs().maxCoeff(), e.cwiseAbs().maxCoeff(), 1e-300});
    const double imag_part =
        std::max(a.imag().cwiseAbs().maxCoeff(), e.imag().cwiseAbs().maxCoeff());

    std::vector<Complex> alpha(static_cast<size_t>(n)), beta(static_cast<size_t>(n));
    if (imag_part <= 1e-12 * scale) {
        // Real pencil up to roundoff: the real-arithmetic solver returns
        // complex eigenvalues in exactly conjugate pairs, which the complex
        // solver cannot guarantee and which downstream symmetry checks rely
        // on for conjugate-symmetric problem data.
        Eigen::MatrixXd ar = a.real(), er = e.real();
        std::vector<double> ai_r(static_cast<size_t>(n)), ai_i(static_cast<size_t>(n)),
            be(static_cast<size_t>(n));
        const int info = LAPACKE_dggev(
            LAPACK_COL_MAJOR, 'N', 'N', static_cast<lapack_int>(n), ar.data(),
            static_cast<lapack_int>(n), er.data(), static_cast<lapack_int>(n), ai_r.data(),
            ai_i.data(), be.data(), nullptr, 1, nullptr, 1);
        if (info != 0)
            throw ConvergenceFailure("dggev failed with info=" + std::to_string(info));
        for (size_t i = 0; i < alpha.size(); ++i) {
            alpha[i] = Complex(ai_r[i], ai_i[i]);
            beta[i] = Complex(be[i], 0.0);
        }
    } else {
        ComplexMatrix aw = a, ew = e;
        const int info = LAPACKE_zggev(
            LAPACK_COL_MAJOR, 'N', 'N', static_cast<lapack_int>(n), aw.data(),
            static_cast<lapack_int>(n), ew.data(), static_cast<lapack_int>(n), alpha.data(),
            beta.data(), nullptr, 1, nullptr, 1);
        if (info != 0)
            throw ConvergenceFailure("zggev failed with info=" + std::to_string(info));
    }

    const double beta_floor = 1e-14 * std::max(e.norm(), 1e-300);
    std::vector<GeneralizedEigenvalue> out(static_cast<size_t>(n));
    for (size_t i = 0; i < out.size(); ++i) {
        if (std::abs(beta[i]) < beta_floor) {
            out[i].is_infinite = true;
        } else {
            out[i].value = alpha[i] / beta[i];
        }
    }
    return out;
}

ComplexVector min_right_singular_vector(const ComplexMatrix& m) {
    if (m.rows() < 1 || m.cols() < 1)
        throw EmptyMatrix("min_right_singular_vector requires a nonempty matrix");
    require_finite(m);

    if (m.rows() < m.cols()) {
        // Wide matrix: zgesdd 'S' only returns min(rows, cols) right vectors,
        // which misses the nullspace directions. Pad with zero rows instead.
        ComplexMatrix padded = ComplexMatrix::Zero(m.cols(), m.cols());
        padded.topRows(m.rows()) = m;
        return min_right_singular_vector(padded);
    }

    ComplexMatrix u, v;
    Eigen::VectorXd s;
    full_svd(m, u, s, v);
    return v.col(v.cols() - 1);
}

} // namespace zolo::numerics
