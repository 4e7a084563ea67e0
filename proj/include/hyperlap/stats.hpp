#pragma once

#include <span>
#include <vector>

#include "hyperlap/errors.hpp"

namespace hyperlap {

/// Average (tie-aware) ranks, 1-based: ties receive the mean of the
/// positions they occupy.
std::vector<double> average_ranks(std::span<const double> values);

/// Spearman rank correlation: Pearson correlation of average ranks.
/// ArgumentError on length mismatch or fewer than two samples.
double spearman(std::span<const double> x, std::span<const double> y);

/// Log-spaced grid including both endpoints exactly.
std::vector<double> log_grid(double lo, double hi, int points);

} // namespace hyperlap
