#include "hyperlap/sir.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "parallel.hpp"

namespace hyperlap {

namespace {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Counter-based job seed so (seed vertex, trial) streams are independent.
inline std::uint64_t job_seed(std::uint64_t master, int seed_vertex, int trial) {
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(seed_vertex)));
    s = splitmix64(s ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(trial)));
    return s;
}

/// Uniform double in [0,1) with portable bit-exact behavior.
inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

int simulate(const ContactNetwork& net, std::span<const double> probs, int seed_vertex,
             double beta, std::uint64_t seed, int max_steps) {
    enum : std::uint8_t { Susceptible = 0, Infected = 1, Recovered = 2 };
    std::vector<std::uint8_t> state(static_cast<size_t>(net.n), Susceptible);
    std::vector<int> frontier{seed_vertex};
    state[static_cast<size_t>(seed_vertex)] = Infected;
    int affected = 1;

    std::mt19937_64 eng(seed);
    std::vector<int> newly;
    int steps = 0;
    while (!frontier.empty()) {
        if (++steps > max_steps)
            throw NumericalError("SIR simulation exceeded the step cap of " +
                                 std::to_string(max_steps));
        newly.clear();
        // infection phase: states are frozen at the round start
        for (int u : frontier) {
            const int lo = net.offsets[static_cast<size_t>(u)];
            const int hi = net.offsets[static_cast<size_t>(u) + 1];
            for (int e = lo; e < hi; ++e) {
                const int v = net.neighbors[static_cast<size_t>(e)];
                if (state[static_cast<size_t>(v)] != Susceptible) continue;
                if (uniform01(eng) < probs[static_cast<size_t>(e)]) newly.push_back(v);
            }
        }
        // recovery phase
        if (beta >= 1.0) {
            for (int u : frontier) state[static_cast<size_t>(u)] = Recovered;
            frontier.clear();
        } else {
            std::vector<int> staying;
            for (int u : frontier) {
                if (uniform01(eng) < beta)
                    state[static_cast<size_t>(u)] = Recovered;
                else
                    staying.push_back(u);
            }
            frontier.swap(staying);
        }
        // commit this round's infections
        for (int v : newly) {
            if (state[static_cast<size_t>(v)] == Susceptible) {
                state[static_cast<size_t>(v)] = Infected;
                frontier.push_back(v);
                ++affected;
            }
        }
        std::sort(frontier.begin(), frontier.end());
    }
    return affected;
}

std::vector<double> contact_probs(const ContactNetwork& net, double mu) {
    std::vector<double> probs(net.weights.size());
    for (size_t i = 0; i < net.weights.size(); ++i)
        probs[i] = edge_infection_prob(mu, net.weights[i]);
    return probs;
}

} // namespace

ContactNetwork contact_network(const SimplexRegistry& reg) {
    const int n = reg.vertex_count();
    std::vector<std::map<int, double>> acc(static_cast<size_t>(n));
    for (SimplexId id = reg.max_dim() >= 1 ? reg.offset(1) : reg.size(); id < reg.size(); ++id) {
        const Simplex& s = reg.simplex(id);
        std::vector<int> idx;
        idx.reserve(s.vertices.size());
        for (VertexId v : s.vertices) idx.push_back(reg.vertex_index(v));
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = a + 1; b < idx.size(); ++b) {
                acc[static_cast<size_t>(idx[a])][idx[b]] += s.weight;
                acc[static_cast<size_t>(idx[b])][idx[a]] += s.weight;
            }
    }
    ContactNetwork net;
    net.n = n;
    net.offsets.assign(static_cast<size_t>(n) + 1, 0);
    for (int u = 0; u < n; ++u)
        net.offsets[static_cast<size_t>(u) + 1] =
            net.offsets[static_cast<size_t>(u)] + static_cast<int>(acc[static_cast<size_t>(u)].size());
    net.neighbors.reserve(static_cast<size_t>(net.offsets.back()));
    net.weights.reserve(static_cast<size_t>(net.offsets.back()));
    net.weighted_degree.assign(static_cast<size_t>(n), 0.0);
    for (int u = 0; u < n; ++u) {
        double deg = 0.0;
        for (auto [v, w] : acc[static_cast<size_t>(u)]) {
            net.neighbors.push_back(v);
            net.weights.push_back(w);
            deg += w;
        }
        net.weighted_degree[static_cast<size_t>(u)] = deg;
    }
    return net;
}

double critical_infection_rate(const ContactNetwork& net) {
    if (net.n == 0 || net.neighbors.empty())
        throw NumericalError("critical_infection_rate: network has no contacts");
    double k1 = 0.0, k2 = 0.0;
    for (double d : net.weighted_degree) {
        k1 += d;
        k2 += d * d;
    }
    k1 /= net.n;
    k2 /= net.n;
    if (k2 <= k1)
        throw NumericalError("degenerate contact network: <k^2> <= <k>");
    return k1 / (k2 - k1);
}

double edge_infection_prob(double mu, double w) {
    if (mu < 0.0 || mu > 1.0) throw ArgumentError("infection rate must lie in [0,1]");
    if (w < 0.0) throw ArgumentError("contact weight must be non-negative");
    if (mu >= 1.0) return w > 0.0 ? 1.0 : 0.0;
    // 1-(1-mu)^w, evaluated stably for small mu
    return -std::expm1(w * std::log1p(-mu));
}

void SirParams::validate() const {
    if (mu && (*mu < 0.0 || *mu > 1.0)) throw ArgumentError("mu must lie in [0,1]");
    if (!mu && mu_ratio <= 0.0) throw ArgumentError("mu_ratio must be positive");
    if (beta <= 0.0 || beta > 1.0) throw ArgumentError("beta must lie in (0,1]");
    if (trials < 1) throw ArgumentError("trials must be >= 1");
    if (max_steps < 1) throw ArgumentError("max_steps must be >= 1");
}

double resolve_mu(const ContactNetwork& net, const SirParams& params) {
    params.validate();
    if (params.mu) return *params.mu;
    const double mu = params.mu_ratio * critical_infection_rate(net);
    return std::min(mu, 1.0);
}

int run_sir(const ContactNetwork& net, int seed_vertex, double mu, double beta,
            std::uint64_t master_seed, int trial, int max_steps) {
    if (seed_vertex < 0 || seed_vertex >= net.n)
        throw LookupError("seed vertex index " + std::to_string(seed_vertex) + " out of range");
    std::vector<double> probs = contact_probs(net, mu);
    return simulate(net, probs, seed_vertex, beta, job_seed(master_seed, seed_vertex, trial),
                    max_steps);
}

int run_sir(const ContactNetwork& net, int seed_vertex, const SirParams& params, int trial) {
    return run_sir(net, seed_vertex, resolve_mu(net, params), params.beta, params.seed, trial,
                   params.max_steps);
}

SirOutcome mean_affected_scale_mu(const ContactNetwork& net, double mu,
                                  const SirParams& params) {
    params.validate();
    if (net.n == 0) throw ArgumentError("empty contact network");
    const int n = net.n;
    const int trials = params.trials;
    std::vector<double> probs = contact_probs(net, mu);

    SirOutcome out;
    out.mu = mu;
    out.samples.assign(static_cast<size_t>(n) * static_cast<size_t>(trials), 0);
    detail::parallel_for(static_cast<std::int64_t>(n) * trials, params.workers,
                         [&](std::int64_t job) {
                             const int seed_vertex = static_cast<int>(job / trials);
                             const int trial = static_cast<int>(job % trials);
                             out.samples[static_cast<size_t>(job)] =
                                 simulate(net, probs, seed_vertex, params.beta,
                                          job_seed(params.seed, seed_vertex, trial),
                                          params.max_steps);
                         });

    out.mean_affected.assign(static_cast<size_t>(n), 0.0);
    out.f_u.assign(static_cast<size_t>(n), 0.0);
    double total = 0.0;
    for (int u = 0; u < n; ++u) {
        double s = 0.0;
        for (int t = 0; t < trials; ++t)
            s += out.samples[static_cast<size_t>(u) * static_cast<size_t>(trials) +
                             static_cast<size_t>(t)];
        out.mean_affected[static_cast<size_t>(u)] = s / trials;
        out.f_u[static_cast<size_t>(u)] = s / trials / n;
        total += out.f_u[static_cast<size_t>(u)];
    }
    out.f_mean = total / n;
    return out;
}

SirOutcome mean_affected_scale(const ContactNetwork& net, const SirParams& params) {
    const double mu_raw = params.mu ? *params.mu
                                    : params.mu_ratio * critical_infection_rate(net);
    SirOutcome out = mean_affected_scale_mu(net, std::min(mu_raw, 1.0), params);
    out.mu_clamped = mu_raw > 1.0;
    return out;
}

} // namespace hyperlap
