#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hyperlap/simplex.hpp"

namespace hyperlap {

/// The bundled 6-vertex example: eight edges and three triangles on vertices
/// 1..6. Its Laplacians, centrality tables, and diffusion indices have been
/// worked out independently and serve as the library's built-in oracle.
SimplexRegistry toy_hypergraph();

struct ToyReference {
    Eigen::MatrixXd l0;          ///< 6x6 vertex Laplacian
    Eigen::MatrixXd lh;          ///< 17x17 block Laplacian as published
    /// Cells of `lh` that are internally inconsistent with the vertex
    /// Laplacian (the build yields 6 there, the published grid shows 5).
    std::vector<std::pair<int, int>> lh_known_mismatches;

    // reference centrality values, one entry per hyperedge in registry order
    std::vector<double> degree;
    std::vector<double> closeness;
    std::vector<double> betweenness;
    std::vector<double> dff_values;  ///< at dff_t with the all-simplices distribution
    std::vector<double> dff_ranks;   ///< 1 = most influential
    std::vector<double> rs;          ///< per-hyperedge diffusion indices (stochastic reference)
    double dff_t = 0.01;
    double mu_c = 0.0;
};

const ToyReference& toy_reference();

struct ToyCheck {
    std::string name;
    bool passed = false;
    std::string details;
};

struct ToyVerification {
    std::vector<ToyCheck> checks;
    double dff_best_t = 0.0;
    double dff_best_rho = 0.0;
    bool ok() const;
};

/// Rebuilds everything for the bundled example and compares against the
/// reference: exact vertex/block Laplacians (modulo the known mismatched
/// cells), exact degree table, closeness and betweenness to three decimals,
/// DFF values to three decimals at the reference t, and a diffusion-time
/// scan whose best rank agreement must reach 0.9.
ToyVerification verify_toy();

/// Same checks against an arbitrary reference; failed checks name the
/// mismatching entries. verify_toy() passes toy_reference().
ToyVerification verify_toy_against(const ToyReference& ref);

void print_verification(const ToyVerification& v, std::ostream& out);

} // namespace hyperlap
