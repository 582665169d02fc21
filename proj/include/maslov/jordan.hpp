#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "maslov/forms.hpp"
#include "maslov/tolerances.hpp"

namespace maslov {

/// The triple (g, A, T) of the second-order system v'' = A v on [0, T],
/// with A symmetric relative to the nondegenerate form g.
struct GSymmetricSystem {
    BilinearForm g;
    Eigen::MatrixXd A;
    double T = 0.0;

    int dim() const { return g.dim(); }
};

/// Checks nondegeneracy of g, the g-symmetry of A (gA = A^T g relative to
/// the scale of gA) and positivity of T. Returns the system unchanged.
GSymmetricSystem validate(GSymmetricSystem system, const Tolerances& tol = {});

/// One eigenvalue (or one member of a conjugate pair) with its multiplicities.
/// For non-real values, `algebraic` counts the eigenvalue alone and the pair
/// contributes twice to the dimension; `geometric` is the complex kernel
/// dimension.
struct EigenvalueRecord {
    std::complex<double> value;
    int algebraic = 0;
    int geometric = 0;
    bool is_real = false;
};

/// Clustered spectrum of A. Real eigenvalues carry rank-based multiplicities:
/// geometric = dim - rank(A - lambda I), algebraic = dim Ker((A - lambda I)^dim).
/// The clustering radius starts at tol.eig and widens until every real
/// cluster's algebraic multiplicity matches its cardinality.
std::vector<EigenvalueRecord> real_spectrum(const GSymmetricSystem& system,
                                            const Tolerances& tol = {});

/// One canonical pair block: on span(basis), A acts as the Jordan block
/// J_size(lambda) and g restricts to epsilon * Sip_size.
struct CanonicalBlock {
    double lambda = 0.0;
    int size = 0;
    int epsilon = 0;
    Eigen::MatrixXd basis; ///< dim x size, columns v_1..v_size
};

/// Canonical pair decomposition of the real generalized eigenspace of
/// lambda, by the constructive chain a_1 -> a_j -> b_1 -> w_j with recursion
/// on the g-orthogonal complement. Blocks are sorted by descending size,
/// then descending epsilon.
std::vector<CanonicalBlock> canonical_pair(const GSymmetricSystem& system,
                                           double lambda,
                                           const Tolerances& tol = {});

/// Canonical blocks for every real eigenvalue plus a summary of the complex
/// spectrum and a basis of the g-orthocomplement of the real blocks.
struct CanonicalPairDecomposition {
    std::vector<EigenvalueRecord> spectrum;       ///< full clustered spectrum
    std::vector<CanonicalBlock> real_blocks;      ///< grouped by eigenvalue
    Eigen::MatrixXd complement_basis;             ///< dim x (dim - sum of block sizes)

    /// Blocks belonging to one real eigenvalue (clustering already applied,
    /// so comparison is exact on the stored values).
    std::vector<CanonicalBlock> blocks_for(double lambda) const;
    const EigenvalueRecord* record_for(double lambda) const;
};

CanonicalPairDecomposition decompose(const GSymmetricSystem& system,
                                     const Tolerances& tol = {});

} // namespace maslov
