#pragma once

namespace maslov {

/// Numerical knobs shared across the pipeline. All values are relative
/// tolerances unless noted otherwise.
struct Tolerances {
    /// Symmetry residual allowed on matrices that must be symmetric,
    /// relative to the largest entry.
    double sym = 1e-9;
    /// Eigenvalue clustering radius, relative to max(1, spectral radius).
    /// Starting value; clustering widens adaptively until the rank-based
    /// multiplicities are consistent.
    double eig = 1e-8;
    /// Singular values below rank * sigma_max count as zero.
    double rank = 1e-9;
    /// Eigenvalues of a symmetric matrix within nullity * max|eigenvalue|
    /// count as kernel when computing inertia.
    double nullity = 1e-9;
    /// Conjugate instants closer than merge_rel * T are one instant; also
    /// the half-width of the final-instant band around T.
    double merge_rel = 1e-8;
    /// Normalization floor for the canonical-pair pivot |B(a1,a1)|.
    double pivot = 1e-10;
};

/// Knobs of the definitional (path-following) computations.
struct OracleOptions {
    int grid = 2048;             ///< samples on [0, T] for event scanning
    double refine_rel = 1e-10;   ///< event location accuracy, relative to T
    double band = 1e-6;          ///< kernel band for chart forms / intersection dims
    double margin = 1e-6;        ///< minimal transversality margin for a chart
    int chart_samples = 65;      ///< samples per subinterval in the margin check
    int chart_candidates = 10;   ///< candidate charts tried before subdividing
    int max_depth = 36;          ///< subdivision budget per top-level subinterval
    unsigned long long seed = 0x9e3779b97f4a7c15ull; ///< chart candidate RNG seed
};

} // namespace maslov
