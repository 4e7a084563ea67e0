#include "hyperlap/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hyperlap {

std::vector<double> average_ranks(std::span<const double> values) {
    const size_t n = values.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n, 0.0);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw ArgumentError("spearman: length mismatch (" + std::to_string(x.size()) + " vs " +
                            std::to_string(y.size()) + ")");
    if (x.size() < 2) throw ArgumentError("spearman: need at least two samples");
    std::vector<double> rx = average_ranks(x);
    std::vector<double> ry = average_ranks(y);
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double dx = rx[i] - mx;
        const double dy = ry[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw ArgumentError("spearman: a sequence is constant, correlation undefined");
    return sxy / std::sqrt(sxx * syy);
}

std::vector<double> log_grid(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi > lo) || points < 2)
        throw ArgumentError("log_grid: need 0 < lo < hi and points >= 2");
    std::vector<double> grid(static_cast<size_t>(points));
    const double step = (std::log(hi) - std::log(lo)) / (points - 1);
    for (int i = 0; i < points; ++i)
        grid[static_cast<size_t>(i)] = std::exp(std::log(lo) + step * i);
    grid.front() = lo;  // endpoints exact
    grid.back() = hi;
    return grid;
}

} // namespace hyperlap
