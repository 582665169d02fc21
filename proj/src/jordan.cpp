#include "maslov/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "maslov/errors.hpp"
#include "maslov/linalg.hpp"

namespace maslov {

namespace {

constexpr int kClusterWidenSteps = 7;

struct Cluster {
    std::complex<double> mean;
    int count = 0;
};

// Single-linkage clustering of the raw eigenvalue list at radius `radius`.
std::vector<Cluster> cluster_eigenvalues(const Eigen::VectorXcd& eigs, double radius) {
    const int n = static_cast<int>(eigs.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(eigs(i) - eigs(j)) <= radius) parent[find(i)] = find(j);

    std::vector<Cluster> clusters;
    std::vector<int> root_index(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (root_index[r] < 0) {
            root_index[r] = static_cast<int>(clusters.size());
            clusters.push_back({});
        }
        Cluster& c = clusters[root_index[r]];
        c.mean += eigs(i);
        c.count += 1;
    }
    for (Cluster& c : clusters) c.mean /= static_cast<double>(c.count);
    return clusters;
}

int algebraic_by_rank(const Eigen::MatrixXd& A, double lambda, double tol_rank) {
    const int n = static_cast<int>(A.rows());
    Eigen::MatrixXd shifted = A - lambda * Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd powered = linalg::matrix_power_scaled(shifted, n);
    return n - linalg::numerical_rank(powered, tol_rank);
}

} // namespace

GSymmetricSystem validate(GSymmetricSystem system, const Tolerances& tol) {
    const int n = system.dim();
    if (system.A.rows() != n || system.A.cols() != n)
        throw validation_error("system: A must be square of the form's dimension");
    if (!(system.T > 0.0))
        throw validation_error("system: horizon T must be positive");
    if (inertia(system.g, tol.nullity).nullity != 0)
        throw validation_error("system: form g is degenerate");
    const Eigen::MatrixXd ga = system.g.matrix() * system.A;
    const double resid = linalg::max_abs(ga - ga.transpose());
    if (resid > tol.sym * linalg::max_abs(ga))
        throw validation_error("system: A is not g-symmetric (gA != A^T g)");
    return system;
}

std::vector<EigenvalueRecord> real_spectrum(const GSymmetricSystem& system,
                                            const Tolerances& tol) {
    const int n = system.dim();
    Eigen::EigenSolver<Eigen::MatrixXd> es(system.A, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw numeric_error("spectrum: eigenvalue iteration failed to converge");
    const Eigen::VectorXcd eigs = es.eigenvalues();
    const double rho = eigs.cwiseAbs().maxCoeff();
    const double base = tol.eig * std::max(1.0, rho);

    double radius = base;
    for (int step = 0; step < kClusterWidenSteps; ++step, radius *= 10.0) {
        std::vector<Cluster> clusters = cluster_eigenvalues(eigs, radius);

        std::vector<EigenvalueRecord> records;
        bool consistent = true;
        int dim_check = 0;
        for (const Cluster& c : clusters) {
            if (std::abs(c.mean.imag()) <= radius) {
                const double lambda = c.mean.real();
                const int alg = algebraic_by_rank(system.A, lambda, tol.rank);
                if (alg != c.count) { consistent = false; break; }
                Eigen::MatrixXd shifted =
                    system.A - lambda * Eigen::MatrixXd::Identity(n, n);
                EigenvalueRecord rec;
                rec.value = lambda;
                rec.is_real = true;
                rec.algebraic = alg;
                rec.geometric = n - linalg::numerical_rank(shifted, tol.rank);
                if (rec.geometric < 1 || rec.geometric > rec.algebraic) {
                    consistent = false;
                    break;
                }
                dim_check += alg;
                records.push_back(rec);
            } else if (c.mean.imag() > 0.0) {
                Eigen::MatrixXcd shifted =
                    system.A.cast<std::complex<double>>() -
                    c.mean * Eigen::MatrixXcd::Identity(n, n);
                EigenvalueRecord rec;
                rec.value = c.mean;
                rec.is_real = false;
                rec.algebraic = c.count;
                rec.geometric = n - linalg::numerical_rank(shifted, tol.rank);
                dim_check += 2 * c.count;
                records.push_back(rec);
            }
            // conjugates with negative imaginary part are implied
        }
        if (!consistent || dim_check != n) continue;

        std::sort(records.begin(), records.end(),
                  [](const EigenvalueRecord& a, const EigenvalueRecord& b) {
                      if (a.is_real != b.is_real) return a.is_real;
                      if (a.value.real() != b.value.real())
                          return a.value.real() < b.value.real();
                      return a.value.imag() < b.value.imag();
                  });
        return records;
    }
    std::ostringstream msg;
    msg << "spectrum: eigenvalue clustering did not stabilize (spectral radius "
        << rho << ", base tolerance " << base << ")";
    throw numeric_error(msg.str());
}

std::vector<CanonicalBlock> canonical_pair(const GSymmetricSystem& system,
                                           double lambda, const Tolerances& tol) {
    const int n = system.dim();
    const Eigen::MatrixXd& G = system.g.matrix();
    const Eigen::MatrixXd N =
        system.A - lambda * Eigen::MatrixXd::Identity(n, n);

    // real generalized eigenspace Ker(N^n)
    Eigen::MatrixXd Q =
        linalg::null_space_basis(linalg::matrix_power_scaled(N, n), tol.rank);
    if (Q.cols() == 0)
        throw validation_error("canonical pair: lambda is not an eigenvalue");

    std::vector<CanonicalBlock> blocks;
    int guard = static_cast<int>(Q.cols()) + 1;
    while (Q.cols() > 0 && guard-- > 0) {
        const int r = static_cast<int>(Q.cols());
        const Eigen::MatrixXd Nr = Q.transpose() * N * Q;
        const double nr_scale = std::max(linalg::max_abs(Nr), 1e-300);

        // nilpotency index s of N on the current subspace
        int s = 0;
        Eigen::MatrixXd power = Eigen::MatrixXd::Identity(r, r);
        Eigen::MatrixXd prev = power;
        for (int k = 1; k <= r; ++k) {
            prev = power;
            power = power * (Nr / nr_scale);
            if (linalg::max_abs(power) <= tol.rank * 10.0) {
                s = k;
                break;
            }
        }
        if (s == 0)
            throw numeric_error("canonical pair: restriction is not nilpotent; "
                                "clustering tolerance too tight");

        // B(x, y) = g(N^{s-1} x, y) on the subspace; prev = (Nr/scale)^{s-1}
        Eigen::MatrixXd Ns1 = prev * std::pow(nr_scale, s - 1);
        Eigen::MatrixXd B = Ns1.transpose() * (Q.transpose() * G * Q);
        B = 0.5 * (B + B.transpose());

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eb(B);
        int pivot = 0;
        for (int i = 1; i < r; ++i)
            if (std::abs(eb.eigenvalues()(i)) > std::abs(eb.eigenvalues()(pivot)))
                pivot = i;
        const double bval = eb.eigenvalues()(pivot);
        const double pivot_scale =
            linalg::max_abs(Q.transpose() * G * Q) *
            std::pow(std::max(linalg::max_abs(Nr), 1e-30), s - 1);
        if (std::abs(bval) <= tol.pivot * std::max(pivot_scale, 1e-300))
            throw numeric_error(
                "canonical pair: normalization pivot |B(a,a)| is numerically "
                "isotropic; adjust tolerances");

        const int epsilon = bval > 0.0 ? 1 : -1;
        Eigen::VectorXd a1 = (Q * eb.eigenvectors().col(pivot)) / std::sqrt(std::abs(bval));

        // chain a_j = N^{j-1} a_1
        std::vector<Eigen::VectorXd> a(s);
        a[0] = a1;
        for (int j = 1; j < s; ++j) a[j] = N * a[j - 1];

        // b_1 = a_1 + sum alpha_k a_k with g(b_1, b_j) = 0 for j < s
        Eigen::VectorXd alpha = Eigen::VectorXd::Zero(s + 1);
        Eigen::VectorXd b1 = a1;
        for (int j = s - 1; j >= 1; --j) {
            Eigen::VectorXd bj = b1;
            for (int p = 0; p < j - 1; ++p) bj = N * bj;
            const double resid = b1.dot(G * bj);
            alpha(s - j + 1) -= resid / (2.0 * epsilon);
            b1 = a1;
            for (int k = 2; k <= s; ++k) b1 += alpha(k) * a[k - 1];
        }

        // w_j = b_{s-j+1} = N^{s-j} b_1
        CanonicalBlock block;
        block.lambda = lambda;
        block.size = s;
        block.epsilon = epsilon;
        block.basis.resize(n, s);
        Eigen::VectorXd w = b1;
        block.basis.col(s - 1) = w;
        for (int j = s - 2; j >= 0; --j) {
            w = N * w;
            block.basis.col(j) = w;
        }
        blocks.push_back(std::move(block));

        // deflate: g-orthogonal complement of the block inside the subspace
        Eigen::MatrixXd C = (G * blocks.back().basis).transpose() * Q;
        Eigen::MatrixXd Z = linalg::null_space_basis(C, tol.rank);
        if (Z.cols() != r - s)
            throw numeric_error("canonical pair: block complement has wrong "
                                "dimension; form nearly degenerate on block");
        Q = Q * Z;
    }
    if (Q.cols() > 0)
        throw numeric_error("canonical pair: recursion did not terminate");

    std::sort(blocks.begin(), blocks.end(),
              [](const CanonicalBlock& x, const CanonicalBlock& y) {
                  if (x.size != y.size) return x.size > y.size;
                  return x.epsilon > y.epsilon;
              });
    return blocks;
}

std::vector<CanonicalBlock>
CanonicalPairDecomposition::blocks_for(double lambda) const {
    std::vector<CanonicalBlock> out;
    for (const CanonicalBlock& b : real_blocks)
        if (b.lambda == lambda) out.push_back(b);
    return out;
}

const EigenvalueRecord*
CanonicalPairDecomposition::record_for(double lambda) const {
    for (const EigenvalueRecord& r : spectrum)
        if (r.is_real && r.value.real() == lambda) return &r;
    return nullptr;
}

CanonicalPairDecomposition decompose(const GSymmetricSystem& system,
                                     const Tolerances& tol) {
    CanonicalPairDecomposition out;
    out.spectrum = real_spectrum(system, tol);

    const int n = system.dim();
    int used = 0;
    for (const EigenvalueRecord& rec : out.spectrum) {
        if (!rec.is_real) continue;
        std::vector<CanonicalBlock> blocks =
            canonical_pair(system, rec.value.real(), tol);
        int total = 0;
        for (const CanonicalBlock& b : blocks) total += b.size;
        if (static_cast<int>(blocks.size()) != rec.geometric || total != rec.algebraic)
            throw numeric_error("decompose: block structure disagrees with "
                                "rank-based multiplicities");
        used += total;
        for (CanonicalBlock& b : blocks) out.real_blocks.push_back(std::move(b));
    }

    if (used == 0) {
        out.complement_basis = Eigen::MatrixXd::Identity(n, n);
    } else {
        Eigen::MatrixXd U(n, used);
        int col = 0;
        for (const CanonicalBlock& b : out.real_blocks) {
            U.middleCols(col, b.size) = b.basis;
            col += b.size;
        }
        out.complement_basis =
            linalg::null_space_basis((system.g.matrix() * U).transpose(), tol.rank);
        if (out.complement_basis.cols() != n - used)
            throw numeric_error("decompose: complement dimension mismatch");
    }
    return out;
}

} // namespace maslov
