#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperlap/simplex.hpp"

namespace hyperlap {

/// Vertex-level weighted contact graph: w(u,v) is the total weight of the
/// dim>=1 simplices containing both u and v (the off-diagonal of the vertex
/// Laplacian). Indices are the registry's dense vertex indices, which stay
/// stable across hyperedge removals.
struct ContactNetwork {
    int n = 0;
    std::vector<int> offsets;      // size n+1
    std::vector<int> neighbors;    // ascending within each vertex
    std::vector<double> weights;
    std::vector<double> weighted_degree;  // per vertex

    std::int64_t contact_count() const { return static_cast<std::int64_t>(neighbors.size()) / 2; }
};

ContactNetwork contact_network(const SimplexRegistry& reg);

/// Epidemic threshold <k>/(<k^2>-<k>) over weighted vertex degrees.
/// NumericalError when <k^2> <= <k> (degenerate network).
double critical_infection_rate(const ContactNetwork& net);

/// Per-contact infection probability 1-(1-mu)^w.
double edge_infection_prob(double mu, double w);

struct SirParams {
    double mu_ratio = 1.5;          ///< multiplier on the critical rate
    std::optional<double> mu;       ///< absolute infection rate; overrides mu_ratio
    double beta = 1.0;              ///< recovery probability
    int trials = 100;               ///< repetitions per seed vertex
    std::uint64_t seed = 0;         ///< master seed
    int workers = 0;                ///< 0 = hardware concurrency
    int max_steps = 1000000;        ///< diagnostic cap on rounds

    void validate() const;
};

/// Resolves the infection rate for this network: explicit mu if set,
/// otherwise mu_ratio * mu_c, clamped into [0,1] (clamping is reported by
/// the experiment layer).
double resolve_mu(const ContactNetwork& net, const SirParams& params);

/// One discrete-time epidemic from one seed vertex. Rounds are synchronous:
/// each infected vertex draws one uniform variate per susceptible neighbor
/// (susceptible as of the round start) and infects with probability
/// edge_infection_prob(mu, w); afterwards the infected recover with
/// probability beta (unconditionally when beta == 1). Returns the number of
/// ever-infected vertices, seed included. The outcome is a pure function of
/// (master seed, seed vertex, trial index) for a fixed network.
int run_sir(const ContactNetwork& net, int seed_vertex, double mu, double beta,
            std::uint64_t master_seed, int trial, int max_steps = 1000000);

/// Spec'd convenience overload deriving mu from the network itself.
int run_sir(const ContactNetwork& net, int seed_vertex, const SirParams& params, int trial);

struct SirOutcome {
    std::vector<double> mean_affected;  ///< per seed vertex, mean n_u over trials
    std::vector<double> f_u;            ///< per seed vertex, mean n_u / n
    double f_mean = 0.0;                ///< average of f_u over all seeds
    std::vector<int> samples;           ///< n_u per (seed, trial), seed-major
    double mu = 0.0;                    ///< infection rate actually used
    bool mu_clamped = false;
};

/// Mean normalized affected scale over every seed vertex and trial;
/// deterministic for a fixed master seed regardless of worker count.
SirOutcome mean_affected_scale(const ContactNetwork& net, const SirParams& params);

/// Same but with an externally fixed infection rate (used by removal
/// experiments, which hold mu at the original network's value).
SirOutcome mean_affected_scale_mu(const ContactNetwork& net, double mu,
                                  const SirParams& params);

} // namespace hyperlap
