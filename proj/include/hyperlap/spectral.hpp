#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hyperlap/laplacian.hpp"
#include "hyperlap/simplex.hpp"

namespace hyperlap {

/// Ascending eigenvalues with orthonormal eigenvectors (columns).
struct SpectralDecomposition {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;  // N x m
    std::vector<std::string> warnings;

    Eigen::Index retained() const { return values.size(); }
};

enum class EigSolver { Auto, EigenDense, Lapack };

/// Symmetric eigendecomposition of the m smallest pairs (m <= 0 or m >= N
/// means full). ArgumentError when the input is asymmetric beyond 1e-9
/// (relative to the largest entry); NumericalError on solver failure.
/// A warning is attached when the smallest eigenvalue is negative.
SpectralDecomposition eig_sym(const Eigen::MatrixXd& matrix, Eigen::Index m = -1,
                              EigSolver solver = EigSolver::Auto);

/// Heat-diffusion generator used for the diffusion-distance centrality: the
/// combinatorial graph Laplacian of the weighted simplex graph carried by the
/// block Laplacian, L = diag(rowsums of offdiag) - offdiag. At this operator
/// the bundled example reproduces its reference centrality values exactly.
SpMat diffusion_laplacian(const SpMat& lh);

/// Squared heat-kernel diffusion distance
///   d_t^2(i,j) = sum_k exp(-2 lambda_k t) (phi_k(i) - phi_k(j))^2
/// over the retained eigenpairs.
double diffusion_distance2(const SpectralDecomposition& dec, Eigen::Index i,
                           Eigen::Index j, double t);

struct DffConfig {
    double t = 0.5;
    Eigen::VectorXd distribution;  // over all simplex indices, sums to 1

    /// Uniform over dim>=1 simplices (vertices excluded).
    static DffConfig uniform_hyperedges(const SimplexRegistry& reg, double t);
    /// Uniform over every simplex index.
    static DffConfig uniform_all(const SimplexRegistry& reg, double t);

    void validate(Eigen::Index n) const;
};

/// Diffusion Frechet function F(i) = sum_j d_t^2(i,j) * distribution[j],
/// evaluated at every simplex index. Smaller values mean the heat profile
/// centered at i resembles many others, i.e. more influential.
std::vector<double> dff_scores(const SpectralDecomposition& dec,
                               const DffConfig& config);

struct TScanResult {
    double best_t = 0.0;
    double best_rho = -2.0;
    std::vector<std::pair<double, double>> curve;  // (t, rho)
};

/// Scans diffusion times and reports the rank agreement (Spearman of the
/// hyperedge scores against a reference, e.g. known ranks: both ascending).
TScanResult calibrate_t(const SpectralDecomposition& dec, const SimplexRegistry& reg,
                        const DffConfig& base, std::span<const double> reference,
                        std::span<const double> grid);

} // namespace hyperlap
