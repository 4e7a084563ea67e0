#include "hyperlap/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hyperlap {

namespace {

/// Standard error of the overall mean F. Seeds form fixed strata, so
/// Var(F_hat) = sum_u Var(mean_u) / n^2 with per-seed sample variances.
double stderr_of_f(const SirOutcome& out, int n, int trials) {
    if (trials < 2) return 0.0;
    double var_sum = 0.0;
    for (int u = 0; u < n; ++u) {
        double mean = out.mean_affected[static_cast<size_t>(u)];
        double ss = 0.0;
        for (int t = 0; t < trials; ++t) {
            const double d =
                out.samples[static_cast<size_t>(u) * static_cast<size_t>(trials) +
                            static_cast<size_t>(t)] -
                mean;
            ss += d * d;
        }
        var_sum += ss / (trials - 1) / trials;  // variance of the per-seed mean
    }
    const double nn = static_cast<double>(n);
    return std::sqrt(var_sum / (nn * nn)) / nn;  // samples are n_u; F divides by n
}

double stderr_rs(double f1, double se1, double f2, double se2) {
    if (f1 <= 0.0) return 0.0;
    const double a = f2 / (f1 * f1) * se1;
    const double b = se2 / f1;
    return std::sqrt(a * a + b * b);
}

double oriented_mean_score(const CentralityResult& c, const SimplexRegistry& reg,
                           std::span<const SimplexId> ids) {
    double s = 0.0;
    for (SimplexId id : ids) s += c.scores[static_cast<size_t>(id - reg.offset(1))];
    s /= ids.empty() ? 1.0 : static_cast<double>(ids.size());
    return score_ascending(c.measure) ? -s : s;
}

int removal_count(double fraction, size_t m) {
    const long long k = std::llround(fraction * static_cast<double>(m));
    return static_cast<int>(std::clamp<long long>(k, 0, static_cast<long long>(m)));
}

} // namespace

double diffusion_index(double f1, double f2) {
    if (f1 <= 0.0) throw ArgumentError("diffusion_index: F1 must be positive");
    return (f1 - f2) / f1;
}

std::vector<std::vector<SimplexId>> make_parts(std::span<const SimplexId> ranking, int parts) {
    if (parts < 1) throw ArgumentError("parts must be >= 1");
    if (static_cast<size_t>(parts) > ranking.size())
        throw ArgumentError("parts (" + std::to_string(parts) + ") exceeds the number of ranked hyperedges (" +
                            std::to_string(ranking.size()) + ")");
    std::vector<std::vector<SimplexId>> out(static_cast<size_t>(parts));
    const size_t base = ranking.size() / static_cast<size_t>(parts);
    const size_t extra = ranking.size() % static_cast<size_t>(parts);
    size_t cursor = 0;
    for (size_t p = 0; p < static_cast<size_t>(parts); ++p) {
        const size_t len = base + (p < extra ? 1 : 0);
        out[p].assign(ranking.begin() + static_cast<std::ptrdiff_t>(cursor),
                      ranking.begin() + static_cast<std::ptrdiff_t>(cursor + len));
        cursor += len;
    }
    return out;
}

RankRemovalReport part_removal_experiment(const SimplexRegistry& reg,
                                          const CentralityResult& centrality, int parts,
                                          const SirParams& params, bool recompute_mu) {
    if (reg.hyperedge_count() == 0) throw ArgumentError("hypergraph has no hyperedges to remove");
    RankRemovalReport rep;
    rep.measure = measure_name(centrality.measure);
    rep.parts = parts;
    rep.mu_recomputed = recompute_mu;

    const ContactNetwork base_net = contact_network(reg);
    rep.mu_c = critical_infection_rate(base_net);
    const double mu_raw = params.mu ? *params.mu : params.mu_ratio * rep.mu_c;
    rep.mu = std::min(mu_raw, 1.0);
    rep.mu_clamped = mu_raw > 1.0;

    SirOutcome base = mean_affected_scale_mu(base_net, rep.mu, params);
    rep.f1 = base.f_mean;
    rep.stderr_f1 = stderr_of_f(base, base_net.n, params.trials);

    auto groups = make_parts(centrality.ranking, parts);
    std::vector<double> rs_values;
    rs_values.reserve(groups.size());
    for (auto& group : groups) {
        PartResult pr;
        pr.removed = group;
        pr.mean_score = oriented_mean_score(centrality, reg, group);

        SimplexRegistry variant = remove_hyperedges(reg, group);
        ContactNetwork net = contact_network(variant);
        double mu = rep.mu;
        if (recompute_mu) mu = std::min(params.mu_ratio * critical_infection_rate(net), 1.0);
        SirOutcome out = mean_affected_scale_mu(net, mu, params);
        pr.f2 = out.f_mean;
        pr.rs = diffusion_index(rep.f1, pr.f2);
        pr.stderr_rs = stderr_rs(rep.f1, rep.stderr_f1, pr.f2,
                                 stderr_of_f(out, net.n, params.trials));
        rs_values.push_back(pr.rs);
        rep.part_results.push_back(std::move(pr));
    }

    // rank pairing: position counted from the least influential part upward
    std::vector<double> influence(groups.size()), mean_scores(groups.size());
    for (size_t i = 0; i < groups.size(); ++i) {
        influence[i] = static_cast<double>(groups.size() - i);
        mean_scores[i] = rep.part_results[i].mean_score;
    }
    rep.rho_rank = spearman(influence, rs_values);
    rep.rho_score = spearman(mean_scores, rs_values);
    return rep;
}

SweepReport ratio_sweep(const SimplexRegistry& reg,
                        std::span<const CentralityResult> centralities,
                        std::span<const double> ratios, const SirParams& params) {
    for (double p : ratios)
        if (!(p > 0.0) || p > 1.0) throw ArgumentError("removal ratios must lie in (0,1]");
    SweepReport rep;
    rep.kind = "ratio-sweep";

    const ContactNetwork base_net = contact_network(reg);
    rep.mu_c = critical_infection_rate(base_net);
    const double mu_raw = params.mu ? *params.mu : params.mu_ratio * rep.mu_c;
    rep.mu = std::min(mu_raw, 1.0);
    rep.mu_clamped = mu_raw > 1.0;

    SirOutcome base = mean_affected_scale_mu(base_net, rep.mu, params);
    const double se1 = stderr_of_f(base, base_net.n, params.trials);

    for (const CentralityResult& c : centralities) {
        int step = 0;
        for (double p : ratios) {
            const int k = removal_count(p, c.ranking.size());
            std::vector<SimplexId> removed(c.ranking.begin(), c.ranking.begin() + k);
            SimplexRegistry variant = remove_hyperedges(reg, removed);
            ContactNetwork net = contact_network(variant);
            SirOutcome out = mean_affected_scale_mu(net, rep.mu, params);

            SweepPoint pt;
            pt.measure = measure_name(c.measure);
            pt.step = step++;
            pt.x = p;
            pt.f1 = base.f_mean;
            pt.f2 = out.f_mean;
            pt.rs = diffusion_index(pt.f1, pt.f2);
            pt.stderr_rs = stderr_rs(pt.f1, se1, pt.f2, stderr_of_f(out, net.n, params.trials));
            rep.points.push_back(std::move(pt));
        }
    }
    return rep;
}

SweepReport infection_sweep(const SimplexRegistry& reg,
                            std::span<const CentralityResult> centralities,
                            std::span<const double> mu_ratios, double removal_fraction,
                            const SirParams& params) {
    for (double r : mu_ratios)
        if (!(r > 0.0)) throw ArgumentError("mu ratios must be positive");
    if (!(removal_fraction > 0.0) || removal_fraction > 1.0)
        throw ArgumentError("removal fraction must lie in (0,1]");

    SweepReport rep;
    rep.kind = "infection-sweep";
    rep.removal_fraction = removal_fraction;

    const ContactNetwork base_net = contact_network(reg);
    rep.mu_c = critical_infection_rate(base_net);

    // per-centrality removed set is fixed across the grid
    std::vector<ContactNetwork> removed_nets;
    removed_nets.reserve(centralities.size());
    for (const CentralityResult& c : centralities) {
        const int k = removal_count(removal_fraction, c.ranking.size());
        std::vector<SimplexId> removed(c.ranking.begin(), c.ranking.begin() + k);
        removed_nets.push_back(contact_network(remove_hyperedges(reg, removed)));
    }

    for (size_t gi = 0; gi < mu_ratios.size(); ++gi) {
        const double mu_raw = mu_ratios[gi] * rep.mu_c;
        const double mu = std::min(mu_raw, 1.0);
        rep.mu = mu;
        rep.mu_clamped = rep.mu_clamped || mu_raw > 1.0;

        SirOutcome base = mean_affected_scale_mu(base_net, mu, params);
        const double se1 = stderr_of_f(base, base_net.n, params.trials);
        for (size_t ci = 0; ci < centralities.size(); ++ci) {
            SirOutcome out = mean_affected_scale_mu(removed_nets[ci], mu, params);
            SweepPoint pt;
            pt.measure = measure_name(centralities[ci].measure);
            pt.step = static_cast<int>(gi);
            pt.x = mu_ratios[gi];
            pt.f1 = base.f_mean;
            pt.f2 = out.f_mean;
            pt.rs = diffusion_index(pt.f1, pt.f2);
            pt.stderr_rs = stderr_rs(pt.f1, se1, pt.f2,
                                     stderr_of_f(out, removed_nets[ci].n, params.trials));
            rep.points.push_back(std::move(pt));
        }
    }
    return rep;
}

DatasetStats dataset_report(const SimplexRegistry& reg) {
    DatasetStats stats;
    stats.vertices = reg.vertex_count();
    stats.hyperedges = reg.hyperedge_count();
    stats.k_max = reg.max_dim() + 1;
    if (reg.vertex_count() > 0) {
        ContactNetwork net = contact_network(reg);
        stats.k_avg = std::accumulate(net.weighted_degree.begin(), net.weighted_degree.end(), 0.0) /
                      static_cast<double>(net.n);
    }
    return stats;
}

} // namespace hyperlap
