#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "doctest.h"
#include "hyperlap/centrality.hpp"
#include "hyperlap/laplacian.hpp"
#include "hyperlap/spectral.hpp"
#include "hyperlap/stats.hpp"
#include "hyperlap/toy.hpp"

using namespace hyperlap;

namespace {

void check_contract(const Eigen::MatrixXd& m, const SpectralDecomposition& dec) {
    // ascending eigenvalues, orthonormal vectors, small residuals
    for (Eigen::Index k = 1; k < dec.retained(); ++k)
        CHECK(dec.values[k] >= dec.values[k - 1]);
    Eigen::MatrixXd gram = dec.vectors.transpose() * dec.vectors;
    CHECK((gram - Eigen::MatrixXd::Identity(dec.retained(), dec.retained()))
              .cwiseAbs()
              .maxCoeff() <= 1e-8);
    for (Eigen::Index k = 0; k < dec.retained(); ++k) {
        double resid = (m * dec.vectors.col(k) - dec.values[k] * dec.vectors.col(k)).norm();
        CHECK(resid <= 1e-6 * std::max(1.0, std::abs(dec.values[k])));
    }
}

} // namespace

TEST_SUITE_BEGIN("spectral");

TEST_CASE("2x2 analytic case") {
    Eigen::MatrixXd m(2, 2);
    m << 2, 1, 1, 2;
    SpectralDecomposition dec = eig_sym(m);
    CHECK(dec.values[0] == doctest::Approx(1.0));
    CHECK(dec.values[1] == doctest::Approx(3.0));
    check_contract(m, dec);
    // eigenvectors up to sign
    CHECK(std::abs(dec.vectors(0, 0)) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(std::abs(dec.vectors(0, 1)) == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("identity matrix") {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(5, 5);
    SpectralDecomposition dec = eig_sym(m);
    for (Eigen::Index k = 0; k < 5; ++k) CHECK(dec.values[k] == doctest::Approx(1.0));
}

TEST_CASE("solvers cross-check on the toy block Laplacian") {
    SimplexRegistry reg = toy_hypergraph();
    Eigen::MatrixXd lh = Eigen::MatrixXd(assemble_LH(reg));
    SpectralDecomposition a = eig_sym(lh, -1, EigSolver::EigenDense);
    SpectralDecomposition b = eig_sym(lh, -1, EigSolver::Lapack);
    REQUIRE(a.retained() == 17);
    REQUIRE(b.retained() == 17);
    for (Eigen::Index k = 0; k < 17; ++k)
        CHECK(std::abs(a.values[k] - b.values[k]) <= 1e-8);
    check_contract(lh, a);
    check_contract(lh, b);
    // the toy block Laplacian happens to be positive definite
    CHECK(a.values[0] > 0.0);
    CHECK(a.warnings.empty());
}

TEST_CASE("negative spectrum carries a warning") {
    Eigen::MatrixXd m(2, 2);
    m << 0, 1, 1, 0;
    SpectralDecomposition dec = eig_sym(m);
    CHECK(dec.values[0] == doctest::Approx(-1.0));
    REQUIRE(dec.warnings.size() == 1);
}

TEST_CASE("partial decomposition keeps the smallest pairs") {
    SimplexRegistry reg = toy_hypergraph();
    Eigen::MatrixXd lap = Eigen::MatrixXd(diffusion_laplacian(assemble_LH(reg)));
    SpectralDecomposition full = eig_sym(lap);
    SpectralDecomposition part = eig_sym(lap, 8);
    REQUIRE(part.retained() == 8);
    for (Eigen::Index k = 0; k < 8; ++k)
        CHECK(part.values[k] == doctest::Approx(full.values[k]).epsilon(1e-10));
    check_contract(lap, part);
}

TEST_CASE("asymmetric input is rejected") {
    Eigen::MatrixXd m(2, 2);
    m << 1, 2, 0, 1;
    CHECK_THROWS_AS(eig_sym(m), ArgumentError);
}

TEST_CASE("diffusion distance formula") {
    // manufactured two-state system: lambda = {0,2}, phi = rotation by 45 deg
    SpectralDecomposition dec;
    dec.values = Eigen::VectorXd(2);
    dec.values << 0.0, 2.0;
    dec.vectors = Eigen::MatrixXd(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    dec.vectors << s, -s,
                   s, s;
    const double d2 = diffusion_distance2(dec, 0, 1, 0.5);
    CHECK(d2 == doctest::Approx(2.0 * std::exp(-2.0)));
    CHECK(diffusion_distance2(dec, 0, 0, 0.5) == 0.0);
    CHECK(diffusion_distance2(dec, 1, 0, 0.5) == doctest::Approx(d2));
    CHECK_THROWS_AS(diffusion_distance2(dec, 0, 1, 0.0), ArgumentError);
    CHECK_THROWS_AS(diffusion_distance2(dec, 0, 5, 0.5), LookupError);
}

TEST_CASE("distance matrix properties on the toy example") {
    SimplexRegistry reg = toy_hypergraph();
    SpectralDecomposition dec = eig_sym(Eigen::MatrixXd(diffusion_laplacian(assemble_LH(reg))));
    for (double t : {0.1, 0.5, 1.0}) {
        for (int i = 0; i < 17; i += 3)
            for (int j = 0; j < 17; j += 2) {
                const double dij = diffusion_distance2(dec, i, j, t);
                CHECK(dij >= 0.0);
                CHECK(dij == doctest::Approx(diffusion_distance2(dec, j, i, t)));
            }
        // pseudo-metric triangle inequality on sampled triples
        for (int i = 0; i < 17; i += 4)
            for (int j = 1; j < 17; j += 4)
                for (int k = 2; k < 17; k += 4) {
                    const double dij = std::sqrt(diffusion_distance2(dec, i, j, t));
                    const double dik = std::sqrt(diffusion_distance2(dec, i, k, t));
                    const double dkj = std::sqrt(diffusion_distance2(dec, k, j, t));
                    CHECK(dij <= dik + dkj + 1e-8);
                }
    }
}

TEST_CASE("truncation monotonicity: adding eigenpairs never shrinks d^2") {
    SimplexRegistry reg = toy_hypergraph();
    Eigen::MatrixXd lap = Eigen::MatrixXd(diffusion_laplacian(assemble_LH(reg)));
    SpectralDecomposition full = eig_sym(lap);
    auto truncate = [&](Eigen::Index m) {
        SpectralDecomposition t;
        t.values = full.values.head(m);
        t.vectors = full.vectors.leftCols(m);
        return t;
    };
    Eigen::Index ms[] = {2, 4, 8, 12, 17};
    for (size_t a = 0; a + 1 < std::size(ms); ++a) {
        SpectralDecomposition less = truncate(ms[a]);
        SpectralDecomposition more = truncate(ms[a + 1]);
        for (int i = 0; i < 17; i += 5)
            for (int j = 1; j < 17; j += 5)
                CHECK(diffusion_distance2(more, i, j, 0.5) >=
                      diffusion_distance2(less, i, j, 0.5) - 1e-12);
    }
}

TEST_CASE("dff scores: degenerate and invariance cases") {
    // single hyperedge: its score is zero under the hyperedge distribution
    SimplexRegistry reg = SimplexRegistry::build({1, 2}, {{{1, 2}, 1.0}});
    SpectralDecomposition dec = eig_sym(Eigen::MatrixXd(diffusion_laplacian(assemble_LH(reg))));
    DffConfig cfg = DffConfig::uniform_hyperedges(reg, 0.5);
    std::vector<double> scores = dff_scores(dec, cfg);
    CHECK(scores[static_cast<size_t>(reg.offset(1))] == doctest::Approx(0.0));

    // distributions must be normalized
    DffConfig bad = cfg;
    bad.distribution *= 2.0;
    CHECK_THROWS_AS(dff_scores(dec, bad), ArgumentError);
}

TEST_CASE("rescaling then renormalizing a distribution leaves scores unchanged") {
    SimplexRegistry reg = toy_hypergraph();
    SpectralDecomposition dec = eig_sym(Eigen::MatrixXd(diffusion_laplacian(assemble_LH(reg))));
    DffConfig cfg = DffConfig::uniform_hyperedges(reg, 0.3);
    DffConfig rescaled = cfg;
    rescaled.distribution = (rescaled.distribution * 7.0) / (rescaled.distribution * 7.0).sum();
    CHECK(dff_scores(dec, cfg) == dff_scores(dec, rescaled));
}

TEST_CASE("scores with m=N and m=N/2 agree in rank for t >= 0.5") {
    SimplexRegistry reg = toy_hypergraph();
    Eigen::MatrixXd lap = Eigen::MatrixXd(diffusion_laplacian(assemble_LH(reg)));
    SpectralDecomposition full = eig_sym(lap);
    SpectralDecomposition half = eig_sym(lap, 8);
    for (double t : {0.5, 1.0}) {
        DffConfig cfg = DffConfig::uniform_hyperedges(reg, t);
        std::vector<double> a = dff_scores(full, cfg);
        std::vector<double> b = dff_scores(half, cfg);
        std::vector<double> ah(a.begin() + reg.offset(1), a.end());
        std::vector<double> bh(b.begin() + reg.offset(1), b.end());
        CHECK(spearman(ah, bh) >= 0.99);
    }
}

TEST_CASE("t-scan calibration finds the reference ranking") {
    SimplexRegistry reg = toy_hypergraph();
    SpectralDecomposition dec = eig_sym(Eigen::MatrixXd(diffusion_laplacian(assemble_LH(reg))));
    DffConfig base = DffConfig::uniform_hyperedges(reg, 0.5);
    std::vector<double> grid = log_grid(1e-2, 10.0, 64);
    CHECK(grid.front() == 1e-2);
    CHECK(grid.back() == 10.0);
    TScanResult scan = calibrate_t(dec, reg, base, toy_reference().dff_ranks, grid);
    CHECK(scan.best_rho >= 0.9);
}

TEST_SUITE_END();
