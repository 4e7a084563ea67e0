#pragma once

#include <span>
#include <string>
#include <vector>

#include "hyperlap/centrality.hpp"
#include "hyperlap/dataset_io.hpp"
#include "hyperlap/simplex.hpp"
#include "hyperlap/sir.hpp"
#include "hyperlap/stats.hpp"

namespace hyperlap {

/// Relative drop of the mean affected scale; ArgumentError when f1 <= 0.
double diffusion_index(double f1, double f2);

/// Splits a ranking into `parts` consecutive groups whose sizes differ by at
/// most one (earlier groups get the extra element). ArgumentError when parts
/// exceeds the number of ranked ids or is not positive.
std::vector<std::vector<SimplexId>> make_parts(std::span<const SimplexId> ranking, int parts);

struct PartResult {
    std::vector<SimplexId> removed;  ///< ids in the original registry
    double mean_score = 0.0;         ///< mean centrality score of the part
    double f2 = 0.0;
    double rs = 0.0;
    double stderr_rs = 0.0;
};

struct RankRemovalReport {
    std::string measure;
    int parts = 0;
    double mu = 0.0;
    double mu_c = 0.0;
    bool mu_clamped = false;
    bool mu_recomputed = false;
    double f1 = 0.0;
    double stderr_f1 = 0.0;
    std::vector<PartResult> part_results;
    /// Spearman of influence-ordered part position against per-part R_s:
    /// +1 when R_s decays monotonically from the most influential part.
    double rho_rank = 0.0;
    /// Spearman of per-part mean score (negated for ascending measures)
    /// against per-part R_s.
    double rho_score = 0.0;
};

/// Ranked non-cumulative removal: for each part independently, remove it,
/// rebuild the contact network, rerun the SIR sweep with the infection rate
/// held at the original network's value (unless recompute_mu), and report
/// R_s plus the two Spearman pairings.
RankRemovalReport part_removal_experiment(const SimplexRegistry& reg,
                                          const CentralityResult& centrality, int parts,
                                          const SirParams& params, bool recompute_mu = false);

struct SweepPoint {
    std::string measure;
    int step = 0;
    double x = 0.0;  ///< removal ratio or mu-ratio
    double f1 = 0.0;
    double f2 = 0.0;
    double rs = 0.0;
    double stderr_rs = 0.0;
};

struct SweepReport {
    std::string kind;  ///< "ratio-sweep" or "infection-sweep"
    double mu = 0.0;   ///< ratio sweep: the fixed rate; infection sweep: last grid rate
    double mu_c = 0.0;
    bool mu_clamped = false;
    double removal_fraction = 0.0;  ///< infection sweep only
    std::vector<SweepPoint> points;
};

/// Fixed infection rate, varying removed fraction of the ranking.
SweepReport ratio_sweep(const SimplexRegistry& reg,
                        std::span<const CentralityResult> centralities,
                        std::span<const double> ratios, const SirParams& params);

/// Fixed removed fraction (default 5%), varying infection rate.
SweepReport infection_sweep(const SimplexRegistry& reg,
                            std::span<const CentralityResult> centralities,
                            std::span<const double> mu_ratios, double removal_fraction,
                            const SirParams& params);

/// Vertex/hyperedge counts, max hyperedge size, and the average weighted
/// vertex degree taken from the contact network.
DatasetStats dataset_report(const SimplexRegistry& reg);

} // namespace hyperlap
