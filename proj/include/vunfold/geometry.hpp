#pragma once

#include <Eigen/Dense>
#include <vector>

namespace vunfold {

using Point = std::vector<double>;

namespace geom {

/// Offsets p_i - p_base for all i != base, as rows, in index order.
inline Eigen::MatrixXd offset_matrix(const std::vector<Point>& pts, int base) {
    const int m = static_cast<int>(pts[0].size());
    Eigen::MatrixXd offs(static_cast<int>(pts.size()) - 1, m);
    int row = 0;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        if (i == base) continue;
        for (int j = 0; j < m; ++j) offs(row, j) = pts[i][j] - pts[base][j];
        ++row;
    }
    return offs;
}

/// True when the points do not span a (pts.size()-1)-dimensional simplex.
inline bool simplex_degenerate(const std::vector<Point>& pts, double tol = 1e-12) {
    const Eigen::MatrixXd offs = offset_matrix(pts, 0);
    if (offs.rows() > offs.cols()) return true;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(offs.transpose());
    qr.setThreshold(tol);
    return qr.rank() < offs.rows();
}

/// Minimum-norm w with offs * w = rhs.  The solution lies in the row space
/// of offs, i.e. in the direction space of the simplex's affine hull.
inline Eigen::VectorXd min_norm_solve(const Eigen::MatrixXd& offs, const Eigen::VectorXd& rhs) {
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(offs);
    return cod.solve(rhs);
}

/// Modified Gram-Schmidt over the columns of `vecs` seeded with `first`;
/// returns an orthonormal basis whose first axis is `first` (normalized).
/// Columns that are numerically dependent on earlier ones are skipped.
inline Eigen::MatrixXd orthonormal_frame(const Eigen::VectorXd& first,
                                         const Eigen::MatrixXd& vecs,
                                         int target_rank,
                                         double tol = 1e-12) {
    const int m = static_cast<int>(first.size());
    Eigen::MatrixXd basis(m, target_rank);
    int have = 0;
    basis.col(have++) = first.normalized();
    for (int c = 0; c < vecs.cols() && have < target_rank; ++c) {
        Eigen::VectorXd v = vecs.col(c);
        const double scale = v.norm();
        for (int k = 0; k < have; ++k) v -= basis.col(k).dot(v) * basis.col(k);
        // second pass for numerical stability
        for (int k = 0; k < have; ++k) v -= basis.col(k).dot(v) * basis.col(k);
        if (v.norm() > tol * std::max(1.0, scale)) basis.col(have++) = v.normalized();
    }
    if (have < target_rank) return Eigen::MatrixXd();
    return basis;
}

}  // namespace geom
}  // namespace vunfold
