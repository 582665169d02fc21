#pragma once

#include <Eigen/Dense>

#include "maslov/tolerances.hpp"

namespace maslov {

/// Symmetric bilinear form on R^n, stored canonically symmetrized.
class BilinearForm {
public:
    /// Validates squareness and symmetry (relative to the largest entry),
    /// then stores (M + M^T)/2.
    explicit BilinearForm(Eigen::MatrixXd entries, double tol_sym = Tolerances{}.sym);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXd& matrix() const { return m_; }

    double operator()(const Eigen::VectorXd& v, const Eigen::VectorXd& w) const {
        return v.dot(m_ * w);
    }

private:
    Eigen::MatrixXd m_;
};

/// Counts of the Sylvester canonical form: coindex, index, nullity.
struct Inertia {
    int n_plus = 0;
    int n_minus = 0;
    int nullity = 0;

    int signature() const { return n_plus - n_minus; }
    int dim() const { return n_plus + n_minus + nullity; }
};

/// Eigenvalue counts above +tol*scale, below -tol*scale and within the band,
/// where scale is the largest |eigenvalue| (1 when the form is numerically
/// zero).
Inertia inertia(const BilinearForm& form, double tol = Tolerances{}.nullity);

/// n_plus - n_minus.
int signature(const BilinearForm& form, double tol = Tolerances{}.nullity);

/// The k x k form with entries form(b_i, b_j) for the given basis columns.
/// The basis must have full column rank at the given tolerance.
BilinearForm restrict_form(const BilinearForm& form, const Eigen::MatrixXd& basis,
                           double tol_rank = Tolerances{}.rank);

/// The n x n matrix with ones on the anti-diagonal.
BilinearForm sip_matrix(int n);

} // namespace maslov
