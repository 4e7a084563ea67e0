#include "hyperlap/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include "parallel.hpp"

namespace hyperlap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

CentralityResult finalize(const SimplexRegistry& reg, Measure m,
                          std::vector<double> all_scores) {
    CentralityResult res;
    res.measure = m;
    res.all_scores = std::move(all_scores);
    res.hyperedges = reg.hyperedge_ids();
    res.scores.reserve(res.hyperedges.size());
    for (SimplexId id : res.hyperedges)
        res.scores.push_back(res.all_scores[static_cast<size_t>(id)]);
    res.ranking = rank_hyperedges(res.hyperedges, res.scores, score_ascending(m));
    return res;
}

} // namespace

SimplexGraph simplex_graph(const SpMat& lh) {
    const int n = static_cast<int>(lh.rows());
    std::vector<std::vector<std::pair<int, double>>> adj(static_cast<size_t>(n));
    for (int k = 0; k < lh.outerSize(); ++k)
        for (SpMat::InnerIterator it(lh, k); it; ++it)
            if (it.row() != it.col() && it.value() > 0.0)
                adj[static_cast<size_t>(it.row())].emplace_back(static_cast<int>(it.col()),
                                                                it.value());
    SimplexGraph g;
    g.n = n;
    g.offsets.assign(static_cast<size_t>(n) + 1, 0);
    for (int u = 0; u < n; ++u) {
        std::sort(adj[static_cast<size_t>(u)].begin(), adj[static_cast<size_t>(u)].end());
        g.offsets[static_cast<size_t>(u) + 1] =
            g.offsets[static_cast<size_t>(u)] + static_cast<int>(adj[static_cast<size_t>(u)].size());
    }
    g.neighbors.reserve(static_cast<size_t>(g.offsets.back()));
    g.weights.reserve(static_cast<size_t>(g.offsets.back()));
    for (int u = 0; u < n; ++u)
        for (auto [v, w] : adj[static_cast<size_t>(u)]) {
            g.neighbors.push_back(v);
            g.weights.push_back(w);
        }
    return g;
}

const char* measure_name(Measure m) {
    switch (m) {
        case Measure::Dff: return "dff";
        case Measure::Degree: return "degree";
        case Measure::Betweenness: return "betweenness";
        case Measure::Closeness: return "closeness";
    }
    return "?";
}

Measure measure_from_name(const std::string& name) {
    if (name == "dff") return Measure::Dff;
    if (name == "degree") return Measure::Degree;
    if (name == "betweenness") return Measure::Betweenness;
    if (name == "closeness") return Measure::Closeness;
    throw ArgumentError("unknown centrality measure '" + name + "'");
}

bool score_ascending(Measure m) { return m == Measure::Dff; }

std::vector<SimplexId> rank_hyperedges(std::span<const SimplexId> ids,
                                       std::span<const double> scores, bool ascending) {
    if (ids.size() != scores.size()) throw ArgumentError("rank: ids/scores length mismatch");
    std::vector<size_t> order(ids.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (scores[a] != scores[b]) return ascending ? scores[a] < scores[b] : scores[a] > scores[b];
        return ids[a] < ids[b];
    });
    std::vector<SimplexId> ranking;
    ranking.reserve(ids.size());
    for (size_t i : order) ranking.push_back(ids[i]);
    return ranking;
}

CentralityResult degree_centrality(const SimplexRegistry& reg, const SpMat& lh) {
    if (lh.rows() != reg.size())
        throw ArgumentError("degree_centrality: matrix size does not match registry");
    std::vector<double> scores(static_cast<size_t>(reg.size()), 0.0);
    for (int k = 0; k < lh.outerSize(); ++k)
        for (SpMat::InnerIterator it(lh, k); it; ++it)
            if (it.row() != it.col()) scores[static_cast<size_t>(it.row())] += it.value();
    return finalize(reg, Measure::Degree, std::move(scores));
}

std::vector<int> bfs_hops(const SimplexGraph& g, int source) {
    std::vector<int> dist(static_cast<size_t>(g.n), -1);
    std::vector<int> frontier{source};
    dist[static_cast<size_t>(source)] = 0;
    int level = 0;
    std::vector<int> next;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (int u : frontier)
            for (int v : g.adj(u))
                if (dist[static_cast<size_t>(v)] < 0) {
                    dist[static_cast<size_t>(v)] = level;
                    next.push_back(v);
                }
        frontier.swap(next);
    }
    return dist;
}

std::vector<double> inverse_weight_distances(const SimplexGraph& g, int source) {
    std::vector<double> dist(static_cast<size_t>(g.n), kInf);
    dist[static_cast<size_t>(source)] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[static_cast<size_t>(u)]) continue;
        auto nbrs = g.adj(u);
        auto ws = g.adj_weights(u);
        for (size_t i = 0; i < nbrs.size(); ++i) {
            const double nd = d + 1.0 / ws[i];
            if (nd < dist[static_cast<size_t>(nbrs[i])]) {
                dist[static_cast<size_t>(nbrs[i])] = nd;
                heap.emplace(nd, nbrs[i]);
            }
        }
    }
    return dist;
}

CentralityResult closeness_centrality(const SimplexRegistry& reg, const SimplexGraph& g,
                                      bool weighted, int workers) {
    if (g.n != reg.size()) throw ArgumentError("closeness: graph does not match registry");
    const int n = g.n;
    std::vector<double> scores(static_cast<size_t>(n), 0.0);
    detail::parallel_for(n, workers, [&](std::int64_t u) {
        double total = 0.0;
        int reachable = 1;
        if (weighted) {
            std::vector<double> d = inverse_weight_distances(g, static_cast<int>(u));
            for (int v = 0; v < n; ++v)
                if (v != u && d[static_cast<size_t>(v)] < kInf) {
                    total += d[static_cast<size_t>(v)];
                    ++reachable;
                }
        } else {
            std::vector<int> d = bfs_hops(g, static_cast<int>(u));
            for (int v = 0; v < n; ++v)
                if (v != u && d[static_cast<size_t>(v)] >= 0) {
                    total += d[static_cast<size_t>(v)];
                    ++reachable;
                }
        }
        if (reachable <= 1 || total == 0.0) {
            scores[static_cast<size_t>(u)] = 0.0;
        } else {
            const double within = static_cast<double>(reachable - 1) / total;
            const double scale = n > 1 ? static_cast<double>(reachable - 1) /
                                             static_cast<double>(n - 1)
                                       : 1.0;
            scores[static_cast<size_t>(u)] = within * scale;
        }
    });
    return finalize(reg, Measure::Closeness, std::move(scores));
}

namespace {

/// Single-source dependency accumulation (path-counting betweenness).
/// Returns the per-node dependency of this source, endpoints excluded.
std::vector<double> brandes_source(const SimplexGraph& g, int s, bool weighted) {
    const int n = g.n;
    std::vector<double> sigma(static_cast<size_t>(n), 0.0);
    std::vector<double> delta(static_cast<size_t>(n), 0.0);
    std::vector<std::vector<int>> preds(static_cast<size_t>(n));
    std::vector<int> order;  // nodes in nondecreasing distance
    order.reserve(static_cast<size_t>(n));
    sigma[static_cast<size_t>(s)] = 1.0;

    if (!weighted) {
        std::vector<int> dist(static_cast<size_t>(n), -1);
        dist[static_cast<size_t>(s)] = 0;
        std::vector<int> queue{s};
        size_t head = 0;
        while (head < queue.size()) {
            int u = queue[head++];
            order.push_back(u);
            for (int v : g.adj(u)) {
                if (dist[static_cast<size_t>(v)] < 0) {
                    dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                    queue.push_back(v);
                }
                if (dist[static_cast<size_t>(v)] == dist[static_cast<size_t>(u)] + 1) {
                    sigma[static_cast<size_t>(v)] += sigma[static_cast<size_t>(u)];
                    preds[static_cast<size_t>(v)].push_back(u);
                }
            }
        }
    } else {
        std::vector<double> dist(static_cast<size_t>(n), kInf);
        dist[static_cast<size_t>(s)] = 0.0;
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        heap.emplace(0.0, s);
        std::vector<char> done(static_cast<size_t>(n), 0);
        while (!heap.empty()) {
            auto [d, u] = heap.top();
            heap.pop();
            if (done[static_cast<size_t>(u)]) continue;
            done[static_cast<size_t>(u)] = 1;
            order.push_back(u);
            auto nbrs = g.adj(u);
            auto ws = g.adj_weights(u);
            for (size_t i = 0; i < nbrs.size(); ++i) {
                const int v = nbrs[i];
                const double nd = d + 1.0 / ws[i];
                if (nd < dist[static_cast<size_t>(v)] - 1e-12) {
                    dist[static_cast<size_t>(v)] = nd;
                    heap.emplace(nd, v);
                    sigma[static_cast<size_t>(v)] = sigma[static_cast<size_t>(u)];
                    preds[static_cast<size_t>(v)].assign(1, u);
                } else if (std::abs(nd - dist[static_cast<size_t>(v)]) <= 1e-12) {
                    sigma[static_cast<size_t>(v)] += sigma[static_cast<size_t>(u)];
                    preds[static_cast<size_t>(v)].push_back(u);
                }
            }
        }
    }

    for (size_t i = order.size(); i-- > 0;) {
        const int w = order[i];
        for (int v : preds[static_cast<size_t>(w)])
            delta[static_cast<size_t>(v)] += sigma[static_cast<size_t>(v)] /
                                             sigma[static_cast<size_t>(w)] *
                                             (1.0 + delta[static_cast<size_t>(w)]);
    }
    delta[static_cast<size_t>(s)] = 0.0;
    return delta;
}

} // namespace

CentralityResult betweenness_centrality(const SimplexRegistry& reg, const SimplexGraph& g,
                                        bool weighted, int workers) {
    if (g.n != reg.size()) throw ArgumentError("betweenness: graph does not match registry");
    const int n = g.n;
    std::vector<double> acc(static_cast<size_t>(n), 0.0);

    // Sources are processed in blocks; block results are reduced in source
    // order, so sums do not depend on the worker count.
    const int block = 256;
    std::vector<std::vector<double>> buf(static_cast<size_t>(std::min(block, n)));
    for (int base = 0; base < n; base += block) {
        const int hi = std::min(n, base + block);
        detail::parallel_for(hi - base, workers, [&](std::int64_t off) {
            buf[static_cast<size_t>(off)] = brandes_source(g, base + static_cast<int>(off), weighted);
        });
        for (int s = base; s < hi; ++s) {
            const auto& d = buf[static_cast<size_t>(s - base)];
            for (int v = 0; v < n; ++v) acc[static_cast<size_t>(v)] += d[static_cast<size_t>(v)];
        }
    }

    // accumulated over ordered pairs; halve for unordered
    std::vector<double> raw(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) raw[static_cast<size_t>(v)] = acc[static_cast<size_t>(v)] / 2.0;
    const double norm = n > 2 ? 2.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2)) : 1.0;
    std::vector<double> scores(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) scores[static_cast<size_t>(v)] = raw[static_cast<size_t>(v)] * norm;

    CentralityResult res = finalize(reg, Measure::Betweenness, std::move(scores));
    res.raw = std::move(raw);
    return res;
}

CentralityResult dff_centrality(const SimplexRegistry& reg, const SpectralDecomposition& dec,
                                const DffConfig& config) {
    if (dec.vectors.rows() != reg.size())
        throw ArgumentError("dff_centrality: decomposition does not match registry");
    return finalize(reg, Measure::Dff, dff_scores(dec, config));
}

} // namespace hyperlap
