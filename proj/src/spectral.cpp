#include "hyperlap/spectral.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <lapacke.h>

#include "hyperlap/stats.hpp"

namespace hyperlap {

namespace {

SpectralDecomposition eig_lapack(const Eigen::MatrixXd& matrix, Eigen::Index m) {
    const lapack_int n = static_cast<lapack_int>(matrix.rows());
    Eigen::MatrixXd a = matrix;  // dsyevr destroys its input
    Eigen::VectorXd w(n);
    Eigen::MatrixXd z(n, m);
    std::vector<lapack_int> isuppz(static_cast<size_t>(2 * std::max<Eigen::Index>(1, m)));
    lapack_int found = 0;
    lapack_int info = LAPACKE_dsyevr(
        LAPACK_COL_MAJOR, 'V', m == n ? 'A' : 'I', 'U', n, a.data(), n,
        0.0, 0.0, 1, static_cast<lapack_int>(m), 0.0, &found, w.data(), z.data(), n,
        isuppz.data());
    if (info != 0)
        throw NumericalError("dsyevr failed with info=" + std::to_string(info));
    if (found < m)
        throw NumericalError("dsyevr converged only " + std::to_string(found) + " of " +
                             std::to_string(m) + " eigenpairs");
    SpectralDecomposition dec;
    dec.values = w.head(m);
    dec.vectors = z;
    return dec;
}

SpectralDecomposition eig_eigen(const Eigen::MatrixXd& matrix, Eigen::Index m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
    if (solver.info() != Eigen::Success)
        throw NumericalError("dense symmetric eigensolver did not converge");
    SpectralDecomposition dec;
    dec.values = solver.eigenvalues().head(m);
    dec.vectors = solver.eigenvectors().leftCols(m);
    return dec;
}

} // namespace

SpectralDecomposition eig_sym(const Eigen::MatrixXd& matrix, Eigen::Index m,
                              EigSolver solver) {
    const Eigen::Index n = matrix.rows();
    if (n == 0 || matrix.cols() != n) throw ArgumentError("eig_sym: matrix must be square and nonempty");
    const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
    const double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-9 * scale)
        throw ArgumentError("eig_sym: input is not symmetric (max deviation " +
                            std::to_string(asym) + ")");
    if (m <= 0 || m > n) m = n;

    if (solver == EigSolver::Auto) solver = m == n ? EigSolver::EigenDense : EigSolver::Lapack;
    SpectralDecomposition dec =
        solver == EigSolver::Lapack ? eig_lapack(matrix, m) : eig_eigen(matrix, m);

    if (dec.values.size() > 0 && dec.values[0] < -1e-12 * scale)
        dec.warnings.push_back("smallest eigenvalue is negative: " + std::to_string(dec.values[0]));
    return dec;
}

SpMat diffusion_laplacian(const SpMat& lh) {
    std::vector<Eigen::Triplet<double>> trips;
    Eigen::VectorXd degree = Eigen::VectorXd::Zero(lh.rows());
    for (int k = 0; k < lh.outerSize(); ++k)
        for (SpMat::InnerIterator it(lh, k); it; ++it)
            if (it.row() != it.col()) {
                trips.emplace_back(it.row(), it.col(), -it.value());
                degree[it.row()] += it.value();
            }
    for (Eigen::Index i = 0; i < lh.rows(); ++i)
        trips.emplace_back(i, i, degree[i]);
    SpMat out(lh.rows(), lh.cols());
    out.setFromTriplets(trips.begin(), trips.end());
    return out;
}

double diffusion_distance2(const SpectralDecomposition& dec, Eigen::Index i,
                           Eigen::Index j, double t) {
    if (t <= 0.0) throw ArgumentError("diffusion time must be positive");
    if (i < 0 || j < 0 || i >= dec.vectors.rows() || j >= dec.vectors.rows())
        throw LookupError("diffusion_distance2: index out of range");
    double acc = 0.0;
    for (Eigen::Index k = 0; k < dec.retained(); ++k) {
        const double diff = dec.vectors(i, k) - dec.vectors(j, k);
        acc += std::exp(-2.0 * dec.values[k] * t) * diff * diff;
    }
    return acc;
}

DffConfig DffConfig::uniform_hyperedges(const SimplexRegistry& reg, double t) {
    DffConfig c;
    c.t = t;
    c.distribution = Eigen::VectorXd::Zero(reg.size());
    const SimplexId m = reg.hyperedge_count();
    if (m == 0) throw ArgumentError("hypergraph has no dim>=1 hyperedges");
    for (SimplexId id = reg.offset(1); id < reg.size(); ++id)
        c.distribution[id] = 1.0 / static_cast<double>(m);
    return c;
}

DffConfig DffConfig::uniform_all(const SimplexRegistry& reg, double t) {
    DffConfig c;
    c.t = t;
    c.distribution =
        Eigen::VectorXd::Constant(reg.size(), 1.0 / static_cast<double>(reg.size()));
    return c;
}

void DffConfig::validate(Eigen::Index n) const {
    if (t <= 0.0) throw ArgumentError("diffusion time must be positive");
    if (distribution.size() != n)
        throw ArgumentError("distribution length " + std::to_string(distribution.size()) +
                            " does not match simplex count " + std::to_string(n));
    if (distribution.minCoeff() < 0.0)
        throw ArgumentError("distribution entries must be non-negative");
    if (std::abs(distribution.sum() - 1.0) > 1e-12)
        throw ArgumentError("distribution must sum to 1");
}

std::vector<double> dff_scores(const SpectralDecomposition& dec, const DffConfig& config) {
    const Eigen::Index n = dec.vectors.rows();
    config.validate(n);

    // F(i) = |y_i|^2 - 2 y_i . mu + sum_j w_j |y_j|^2 with the heat-kernel
    // embedding y_i(k) = exp(-lambda_k t) phi_k(i) and mu the weighted mean.
    Eigen::MatrixXd emb = dec.vectors;
    for (Eigen::Index k = 0; k < dec.retained(); ++k)
        emb.col(k) *= std::exp(-dec.values[k] * config.t);

    Eigen::VectorXd norm2 = emb.rowwise().squaredNorm();
    Eigen::VectorXd mean = emb.transpose() * config.distribution;
    const double mean_norm2 = norm2.dot(config.distribution);

    std::vector<double> scores(static_cast<size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        double f = norm2[i] - 2.0 * emb.row(i).dot(mean) + mean_norm2;
        scores[static_cast<size_t>(i)] = std::max(0.0, f);
    }
    return scores;
}

TScanResult calibrate_t(const SpectralDecomposition& dec, const SimplexRegistry& reg,
                        const DffConfig& base, std::span<const double> reference,
                        std::span<const double> grid) {
    if (reference.size() != static_cast<size_t>(reg.hyperedge_count()))
        throw ArgumentError("calibrate_t: reference length must match hyperedge count");
    TScanResult res;
    for (double t : grid) {
        DffConfig c = base;
        c.t = t;
        std::vector<double> all = dff_scores(dec, c);
        std::vector<double> hyper(all.begin() + reg.offset(1), all.end());
        const double rho = spearman(hyper, reference);
        res.curve.emplace_back(t, rho);
        if (rho > res.best_rho) {
            res.best_rho = rho;
            res.best_t = t;
        }
    }
    return res;
}

} // namespace hyperlap
