#pragma once

#include <Eigen/Dense>

namespace maslov::linalg {

/// Largest absolute entry; 0 for empty matrices.
double max_abs(const Eigen::MatrixXd& m);

/// Number of singular values above tol * sigma_max.
int numerical_rank(const Eigen::MatrixXd& m, double tol);
int numerical_rank(const Eigen::MatrixXcd& m, double tol);

/// Orthonormal basis of the (right) null space at relative tolerance tol.
/// Returns an n x k matrix with orthonormal columns (k may be zero).
Eigen::MatrixXd null_space_basis(const Eigen::MatrixXd& m, double tol);

/// Thin orthonormalization of the column span (columns assumed independent).
Eigen::MatrixXd orthonormal_columns(const Eigen::MatrixXd& m);

/// m^p with a pre-scaling by max(1, ||m||_inf); only the rank of the result
/// is meaningful.
Eigen::MatrixXd matrix_power_scaled(const Eigen::MatrixXd& m, int p);

/// Dense matrix exponential (scaling and squaring on a truncated series).
Eigen::MatrixXd expm(const Eigen::MatrixXd& m);

/// Ascending singular values.
Eigen::VectorXd singular_values(const Eigen::MatrixXd& m);

/// Standard symplectic matrix [[0, I], [-I, 0]] of size 2n.
Eigen::MatrixXd standard_omega(int n);

} // namespace maslov::linalg
