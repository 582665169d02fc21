#include "maslov/forms.hpp"

#include <Eigen/Eigenvalues>

#include "maslov/errors.hpp"
#include "maslov/linalg.hpp"

namespace maslov {

BilinearForm::BilinearForm(Eigen::MatrixXd entries, double tol_sym) {
    if (entries.rows() != entries.cols())
        throw validation_error("bilinear form: matrix is not square");
    if (entries.rows() == 0)
        throw validation_error("bilinear form: empty matrix");
    const double scale = linalg::max_abs(entries);
    const double resid = linalg::max_abs(entries - entries.transpose());
    if (resid > tol_sym * scale)
        throw validation_error("bilinear form: matrix is not symmetric");
    m_ = 0.5 * (entries + entries.transpose());
}

Inertia inertia(const BilinearForm& form, double tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(form.matrix(),
                                                      Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = es.eigenvalues();
    double scale = ev.cwiseAbs().maxCoeff();
    if (scale < tol) scale = 1.0;
    Inertia result;
    for (int i = 0; i < ev.size(); ++i) {
        if (ev(i) > tol * scale)
            ++result.n_plus;
        else if (ev(i) < -tol * scale)
            ++result.n_minus;
        else
            ++result.nullity;
    }
    return result;
}

int signature(const BilinearForm& form, double tol) {
    return inertia(form, tol).signature();
}

BilinearForm restrict_form(const BilinearForm& form, const Eigen::MatrixXd& basis,
                           double tol_rank) {
    if (basis.rows() != form.dim())
        throw validation_error("restrict: basis vectors have wrong dimension");
    if (basis.cols() == 0)
        throw validation_error("restrict: empty basis");
    if (linalg::numerical_rank(basis, tol_rank) < basis.cols())
        throw validation_error("restrict: basis is rank deficient");
    Eigen::MatrixXd restricted = basis.transpose() * form.matrix() * basis;
    // symmetrize away the multiplication noise
    return BilinearForm(0.5 * (restricted + restricted.transpose()), 1.0);
}

BilinearForm sip_matrix(int n) {
    if (n < 1) throw validation_error("sip matrix: size must be positive");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, n - 1 - i) = 1.0;
    return BilinearForm(std::move(m));
}

} // namespace maslov
