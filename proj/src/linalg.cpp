#include "maslov/linalg.hpp"

#include <Eigen/SVD>
#include <Eigen/QR>
#include <cmath>

namespace maslov::linalg {

double max_abs(const Eigen::MatrixXd& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

int numerical_rank(const Eigen::MatrixXd& m, double tol) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) return 0;
    const double thresh = tol * sv(0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > thresh) ++rank;
    return rank;
}

int numerical_rank(const Eigen::MatrixXcd& m, double tol) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) return 0;
    const double thresh = tol * sv(0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > thresh) ++rank;
    return rank;
}

Eigen::MatrixXd null_space_basis(const Eigen::MatrixXd& m, double tol) {
    const int n = static_cast<int>(m.cols());
    if (m.size() == 0) return Eigen::MatrixXd::Identity(n, n);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    int rank = 0;
    if (smax > 0.0) {
        const double thresh = tol * smax;
        for (int i = 0; i < sv.size(); ++i)
            if (sv(i) > thresh) ++rank;
    }
    return svd.matrixV().rightCols(n - rank);
}

Eigen::MatrixXd orthonormal_columns(const Eigen::MatrixXd& m) {
    if (m.cols() == 0) return m;
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(m.rows(), m.cols());
    return q;
}

Eigen::MatrixXd matrix_power_scaled(const Eigen::MatrixXd& m, int p) {
    const double scale = std::max(1.0, max_abs(m));
    Eigen::MatrixXd b = m / scale;
    Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(m.rows(), m.cols());
    for (int i = 0; i < p; ++i) acc = acc * b;
    return acc;
}

Eigen::MatrixXd expm(const Eigen::MatrixXd& m) {
    const int n = static_cast<int>(m.rows());
    const double norm = max_abs(m);
    int squarings = 0;
    double scale = 1.0;
    while (norm * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    Eigen::MatrixXd b = m * scale;
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd sum = term;
    for (int k = 1; k <= 30; ++k) {
        term = (term * b) / static_cast<double>(k);
        sum += term;
        if (max_abs(term) < 1e-18 * std::max(1.0, max_abs(sum))) break;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

Eigen::VectorXd singular_values(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    Eigen::VectorXd sv = svd.singularValues();
    return sv.reverse();
}

Eigen::MatrixXd standard_omega(int n) {
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    omega.topRightCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
    omega.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
    return omega;
}

} // namespace maslov::linalg
