#include "zolo/loewner.hpp"

#include <cmath>
#include <limits>

namespace zolo::loewner {

namespace {

// Index of the conjugate partner for every entry (an entry whose point and
// value are both their own conjugates is its own partner). Empty when the
// data are not closed under conjugation.
std::vector<Eigen::Index> conjugate_pairing(const std::vector<Complex>& points,
                                            const ComplexVector& values) {
    const auto n = static_cast<Eigen::Index>(points.size());
    std::vector<Eigen::Index> partner(static_cast<size_t>(n), -1);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (partner[static_cast<size_t>(i)] >= 0) continue;
        const Complex zc = std::conj(points[static_cast<size_t>(i)]);
        const Complex vc = std::conj(values(i));
        const double ztol = 1e-12 * (1.0 + std::abs(zc));
        const double vtol = 1e-12 * (1.0 + std::abs(vc));
        Eigen::Index match = -1;
        for (Eigen::Index j = i; j < n; ++j) {
            if (partner[static_cast<size_t>(j)] >= 0) continue;
            if (std::abs(points[static_cast<size_t>(j)] - zc) <= ztol &&
                std::abs(values(j) - vc) <= vtol) {
                match = j;
                break;
            }
        }
        if (match < 0) return {};
        partner[static_cast<size_t>(i)] = match;
        partner[static_cast<size_t>(match)] = i;
    }
    return partner;
}

// Unitary change of basis that sends each conjugate pair (e_i, e_j), i < j,
// to ((e_i + e_j)/sqrt2, (e_i - e_j)/(i sqrt2)) and keeps self-paired
// coordinates. In this basis every matrix g with g(conj mu, conj lambda) =
// conj g(mu, lambda) becomes real; the Loewner blocks, V, and W all qualify
// when the data are conjugation-closed.
numerics::ComplexMatrix realifier(const std::vector<Eigen::Index>& partner) {
    const auto n = static_cast<Eigen::Index>(partner.size());
    numerics::ComplexMatrix j = numerics::ComplexMatrix::Zero(n, n);
    const double s = 1.0 / std::sqrt(2.0);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index p = partner[static_cast<size_t>(i)];
        if (p == i) {
            j(i, i) = 1.0;
        } else if (i < p) {
            j(i, i) = s;
            j(p, i) = s;
            j(i, p) = Complex(0.0, -s);
            j(p, p) = Complex(0.0, s);
        }
    }
    return j;
}

// svd_truncate over real matrices, mirroring the complex policy semantics.
struct RealTruncatedSVD {
    Eigen::MatrixXd left_vectors;
    Eigen::VectorXd singular_values;
    Eigen::MatrixXd right_vectors;
    Eigen::Index effective_rank = 0;
};

RealTruncatedSVD real_svd_truncate(const Eigen::MatrixXd& m,
                                   const numerics::TruncationPolicy& policy) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    Eigen::Index rank = sv.size();
    if (const auto* rel = std::get_if<numerics::RelativeTolerance>(&policy)) {
        rank = 0;
        while (rank < sv.size() && sv(rank) >= rel->value * sv(0)) ++rank;
    } else {
        const auto fixed = std::get<numerics::FixedRank>(policy).value;
        if (fixed < 1 || fixed > sv.size())
            throw RankOutOfRange("fixed rank outside [1, min(k, q)]");
        rank = fixed;
    }
    if (rank < 1) throw RankOutOfRange("tolerance removed every singular value");
    return {svd.matrixU().leftCols(rank), sv.head(rank), svd.matrixV().leftCols(rank), rank};
}

} // namespace

LoewnerPencil build_pencil(const domains::PartitionedData& data) {
    const auto k = static_cast<Eigen::Index>(data.left_points.size());
    const auto q = static_cast<Eigen::Index>(data.right_points.size());
    if (k < 1 || q < 1 || data.left_values.size() != static_cast<size_t>(k) ||
        data.right_values.size() != static_cast<size_t>(q))
        throw DimensionMismatch("partition points and values must be nonempty and aligned");

    LoewnerPencil p;
    p.left_points = data.left_points;
    p.right_points = data.right_points;
    p.l.resize(k, q);
    p.ls.resize(k, q);
    p.v.resize(k);
    p.w.resize(q);
    for (Eigen::Index j = 0; j < k; ++j) p.v(j) = data.left_values[static_cast<size_t>(j)];
    for (Eigen::Index i = 0; i < q; ++i) p.w(i) = data.right_values[static_cast<size_t>(i)];

    for (Eigen::Index j = 0; j < k; ++j) {
        const Complex mu = data.left_points[static_cast<size_t>(j)];
        const Complex vj = p.v(j);
        for (Eigen::Index i = 0; i < q; ++i) {
            const Complex la = data.right_points[static_cast<size_t>(i)];
            const Complex d = mu - la;
            if (std::abs(d) < 1e-14 * (1.0 + std::abs(mu)))
                throw CoincidentPoints("left point coincides with a right point");
            p.l(j, i) = (vj - p.w(i)) / d;
            p.ls(j, i) = (mu * vj - p.w(i) * la) / d;
        }
    }
    return p;
}

Eigen::VectorXd normalized_singular_values(const LoewnerPencil& pencil) {
    ComplexMatrix row(pencil.l.rows(), 2 * pencil.l.cols());
    row << pencil.l, pencil.ls;
    const auto svd =
        numerics::svd_truncate(row, numerics::FixedRank{std::min(row.rows(), row.cols())});
    return svd.singular_values / svd.singular_values(0);
}

rational::DescriptorRealization reduce(const LoewnerPencil& pencil, const OrderPolicy& policy) {
    // Conjugation-closed data admit a unitary change of basis under which the
    // whole pencil is real; reducing in real arithmetic then yields an exactly
    // real realization, so downstream coefficients are real and poles/zeros
    // are exactly conjugate-closed. This is the realness-enforcing basis
    // choice for the Loewner framework; it alters nothing but the coordinate
    // system of the projection spaces.
    const auto left_pairs = conjugate_pairing(pencil.left_points, pencil.v);
    const auto right_pairs =
        conjugate_pairing(pencil.right_points, pencil.w.transpose());
    if (!left_pairs.empty() && !right_pairs.empty()) {
        const ComplexMatrix jl = realifier(left_pairs);
        const ComplexMatrix jr = realifier(right_pairs);
        const ComplexMatrix lt = jl.adjoint() * pencil.l * jr;
        const ComplexMatrix lst = jl.adjoint() * pencil.ls * jr;
        const ComplexVector vt = jl.adjoint() * pencil.v;
        const Eigen::RowVectorXcd wt = pencil.w * jr;
        const double scale = std::max({lt.cwiseAbs().maxCoeff(), lst.cwiseAbs().maxCoeff(),
                                       vt.cwiseAbs().maxCoeff(), wt.cwiseAbs().maxCoeff()});
        const double imag_part =
            std::max({lt.imag().cwiseAbs().maxCoeff(), lst.imag().cwiseAbs().maxCoeff(),
                      vt.imag().cwiseAbs().maxCoeff(), wt.imag().cwiseAbs().maxCoeff()});
        if (imag_part <= 1e-10 * scale) {
            const Eigen::MatrixXd lr = lt.real(), lsr = lst.real();
            Eigen::MatrixXd row(lr.rows(), 2 * lr.cols());
            row << lr, lsr;
            Eigen::MatrixXd col(2 * lr.rows(), lr.cols());
            col << lr, lsr;
            RealTruncatedSVD svd_row, svd_col;
            try {
                svd_row = real_svd_truncate(row, policy);
                svd_col = real_svd_truncate(col, policy);
            } catch (const RankOutOfRange& e) {
                throw RankDeficientPencil(e.what());
            }
            const Eigen::Index r = std::min(svd_row.effective_rank, svd_col.effective_rank);
            const Eigen::MatrixXd x = svd_row.left_vectors.leftCols(r);
            const Eigen::MatrixXd y = svd_col.right_vectors.leftCols(r);

            rational::DescriptorRealization out;
            out.e_mat = (-(x.transpose() * lr * y)).cast<Complex>();
            out.a_mat = (-(x.transpose() * lsr * y)).cast<Complex>();
            out.b_vec = (x.transpose() * vt.real()).cast<Complex>();
            out.c_vec = (wt.real() * y).cast<Complex>();
            return out;
        }
    }

    ComplexMatrix row(pencil.l.rows(), 2 * pencil.l.cols());
    row << pencil.l, pencil.ls;
    ComplexMatrix col(2 * pencil.l.rows(), pencil.l.cols());
    col << pencil.l, pencil.ls;

    numerics::TruncatedSVD svd_row, svd_col;
    try {
        svd_row = numerics::svd_truncate(row, policy);
        svd_col = numerics::svd_truncate(col, policy);
    } catch (const RankOutOfRange& e) {
        throw RankDeficientPencil(e.what());
    }
    const Eigen::Index r = std::min(svd_row.effective_rank, svd_col.effective_rank);
    const ComplexMatrix x = svd_row.left_vectors.leftCols(r);   // k x r
    const ComplexMatrix y = svd_col.right_vectors.leftCols(r);  // q x r

    rational::DescriptorRealization out;
    out.e_mat = -(x.adjoint() * pencil.l * y);
    out.a_mat = -(x.adjoint() * pencil.ls * y);
    out.b_vec = x.adjoint() * pencil.v;
    out.c_vec = pencil.w * y;
    return out;
}

double interpolation_residual(const rational::DescriptorRealization& r,
                              const domains::PartitionedData& data) {
    double worst = 0.0;
    auto visit = [&](const std::vector<Complex>& pts, const std::vector<Complex>& vals) {
        for (size_t i = 0; i < pts.size(); ++i) {
            double err;
            try {
                err = std::abs(rational::eval_descriptor(r, pts[i]) - vals[i]);
            } catch (const SingularAtPoint&) {
                err = std::numeric_limits<double>::infinity();
            }
            worst = std::max(worst, err);
        }
    };
    visit(data.right_points, data.right_values);
    visit(data.left_points, data.left_values);
    return worst;
}

} // namespace zolo::loewner
