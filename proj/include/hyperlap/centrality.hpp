#pragma once

#include <span>
#include <string>
#include <vector>

#include "hyperlap/laplacian.hpp"
#include "hyperlap/simplex.hpp"
#include "hyperlap/spectral.hpp"

namespace hyperlap {

/// Undirected graph over all simplices: an edge wherever the block Laplacian
/// has a positive off-diagonal entry, carrying that entry as its weight.
struct SimplexGraph {
    int n = 0;
    std::vector<int> offsets;      // size n+1
    std::vector<int> neighbors;    // ascending within each node
    std::vector<double> weights;

    std::span<const int> adj(int u) const {
        return {neighbors.data() + offsets[static_cast<size_t>(u)],
                neighbors.data() + offsets[static_cast<size_t>(u) + 1]};
    }
    std::span<const double> adj_weights(int u) const {
        return {weights.data() + offsets[static_cast<size_t>(u)],
                weights.data() + offsets[static_cast<size_t>(u) + 1]};
    }
};

SimplexGraph simplex_graph(const SpMat& lh);

enum class Measure { Dff, Degree, Betweenness, Closeness };

const char* measure_name(Measure m);
Measure measure_from_name(const std::string& name);

/// Lower scores are more influential for DFF; higher for the rest.
bool score_ascending(Measure m);

struct CentralityResult {
    Measure measure = Measure::Degree;
    std::vector<double> all_scores;     // per simplex id, every dimension
    std::vector<SimplexId> hyperedges;  // dim>=1 ids, ascending
    std::vector<double> scores;         // aligned with `hyperedges`
    std::vector<SimplexId> ranking;     // most -> least influential, ties by id
    std::vector<double> raw;            // betweenness only: unnormalized pair sums
};

/// Ranking ids most->least influential; stable, ties broken by ascending id.
std::vector<SimplexId> rank_hyperedges(std::span<const SimplexId> ids,
                                       std::span<const double> scores, bool ascending);

/// Row sums of the block Laplacian without the diagonal, over all simplex
/// columns (vertices included).
CentralityResult degree_centrality(const SimplexRegistry& reg, const SpMat& lh);

/// Unweighted hop distances (-1 where unreachable).
std::vector<int> bfs_hops(const SimplexGraph& g, int source);

/// Weighted distances as minimal sums of 1/weight (infinity if unreachable).
std::vector<double> inverse_weight_distances(const SimplexGraph& g, int source);

/// Component-scaled closeness: ((r-1)/sum of distances) * ((r-1)/(N-1)) with
/// r the reachable-component size; isolated nodes score 0.
CentralityResult closeness_centrality(const SimplexRegistry& reg, const SimplexGraph& g,
                                      bool weighted = false, int workers = 0);

/// Shortest-path betweenness with endpoints excluded, every simplex as an
/// endpoint, unordered pairs, normalized by 2/((N-1)(N-2)); `raw` keeps the
/// unnormalized accumulation so any other constant can be checked.
CentralityResult betweenness_centrality(const SimplexRegistry& reg, const SimplexGraph& g,
                                        bool weighted = false, int workers = 0);

/// Diffusion Frechet function scores from an eigendecomposition of the
/// diffusion Laplacian (see diffusion_laplacian).
CentralityResult dff_centrality(const SimplexRegistry& reg, const SpectralDecomposition& dec,
                                const DffConfig& config);

} // namespace hyperlap
