/**
 * @file distribution.cpp
 */
#include "melscore/distribution.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "melscore/errors.h"
#include "melscore/measure.h"

namespace melscore {
namespace {

/// Enumerates nondecreasing lists of `count` positive integers summing to
/// `total`, in lexicographic order.
void enumerateNondecreasing(std::size_t count, long long total,
                            long long minimum, std::vector<long long>& prefix,
                            std::vector<std::vector<long long>>& out) {
  if (count == 1) {
    if (total >= minimum) {
      prefix.push_back(total);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  // Leave at least `value` for each of the remaining slots (nondecreasing).
  for (long long value = minimum;
       value * static_cast<long long>(count) <= total; ++value) {
    prefix.push_back(value);
    enumerateNondecreasing(count - 1, total - value, value, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<double> combinedDistribution(const Decomposition& decomposition) {
  std::vector<double> values;
  values.reserve(decomposition.transitions.deltas.size() +
                 decomposition.withinDiffs.size() + 1);
  values.insert(values.end(), decomposition.transitions.deltas.begin(),
                decomposition.transitions.deltas.end());
  values.insert(values.end(), decomposition.withinDiffs.begin(),
                decomposition.withinDiffs.end());
  values.push_back(decomposition.directionGap);
  return values;
}

ClusterPartition cluster1d(std::span<const double> values, std::size_t k) {
  if (k < 1 || k > values.size()) {
    std::ostringstream message;
    message << "cannot split " << values.size() << " value(s) into " << k
            << " cluster(s)";
    throw ValidationError(message.str());
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();

  std::vector<double> prefixSum(n + 1, 0.0);
  std::vector<double> prefixSquares(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    prefixSum[i + 1] = prefixSum[i] + sorted[i];
    prefixSquares[i + 1] = prefixSquares[i] + sorted[i] * sorted[i];
  }
  // Sum of squared deviations of sorted[a, b); clamped because the closed
  // form can dip a few ulp below zero for constant runs.
  auto intervalCost = [&](std::size_t a, std::size_t b) {
    const double sum = prefixSum[b] - prefixSum[a];
    const double squares = prefixSquares[b] - prefixSquares[a];
    const double cost = squares - sum * sum / static_cast<double>(b - a);
    return cost > 0.0 ? cost : 0.0;
  };

  // best[m][i] = minimal cost of splitting sorted[i, n) into m clusters.
  // Equal-cost partitions exist (grid-valued inputs tie often), and the
  // contract picks the one with the leftmost split points. Rounding turns
  // exact ties into ulp-level differences, so tie detection uses a slack
  // scaled to the one-cluster cost: scanning splits in ascending order and
  // only accepting improvements beyond the slack keeps the leftmost member
  // of each tie band, and the reconstruction below re-applies the same rule.
  const double slack = 1e-9 * std::max(1.0, intervalCost(0, n));
  constexpr double kInfinity = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> best(
      k + 1, std::vector<double>(n + 1, kInfinity));
  for (std::size_t i = 0; i + 1 <= n; ++i) {
    best[1][i] = intervalCost(i, n);
  }
  for (std::size_t m = 2; m <= k; ++m) {
    for (std::size_t i = 0; i + m <= n; ++i) {
      double bestCost = kInfinity;
      for (std::size_t split = i + 1; split + (m - 1) <= n; ++split) {
        const double cost = intervalCost(i, split) + best[m - 1][split];
        if (cost < bestCost - slack) {
          bestCost = cost;
        }
      }
      best[m][i] = bestCost;
    }
  }

  ClusterPartition partition;
  partition.wcss = best[k][0];
  std::size_t begin = 0;
  for (std::size_t m = k; m >= 2; --m) {
    std::size_t chosen = 0;
    for (std::size_t split = begin + 1; split + (m - 1) <= n; ++split) {
      if (intervalCost(begin, split) + best[m - 1][split] <=
          best[m][begin] + slack) {
        chosen = split;
        break;
      }
    }
    partition.clusters.emplace_back(sorted.begin() + begin,
                                    sorted.begin() + chosen);
    begin = chosen;
  }
  partition.clusters.emplace_back(sorted.begin() + begin, sorted.end());
  for (const auto& cluster : partition.clusters) {
    partition.signature.push_back(cluster.size());
  }
  return partition;
}

DistributionCheck distributionCheck(
    const Decomposition& decomposition,
    std::span<const std::size_t> expectedSignature) {
  const std::vector<double> values = combinedDistribution(decomposition);
  DistributionCheck check;
  check.partition = cluster1d(values, expectedSignature.size());
  check.matches = std::ranges::equal(check.partition.signature,
                                     expectedSignature);
  return check;
}

double wignerSurmisePdf(double s, SurmiseParams params) {
  if (s < 0.0) {
    std::ostringstream message;
    message << "spacing must be nonnegative, got " << s;
    throw ValidationError(message.str());
  }
  constexpr double kPi = std::numbers::pi;
  switch (params.beta) {
    case 1:
      return (kPi / 2.0) * s * std::exp(-kPi * s * s / 4.0);
    case 2:
      return (32.0 / (kPi * kPi)) * s * s * std::exp(-4.0 * s * s / kPi);
    case 4: {
      const double coefficient = 262144.0 / (729.0 * kPi * kPi * kPi);
      const double s4 = s * s * s * s;
      return coefficient * s4 * std::exp(-64.0 * s * s / (9.0 * kPi));
    }
    default: {
      std::ostringstream message;
      message << "unsupported ensemble beta " << params.beta
              << " (expected 1, 2, or 4)";
      throw ValidationError(message.str());
    }
  }
}

double rRatio(std::span<const double> spacings) {
  if (spacings.empty()) {
    throw ValidationError("cannot compute a ratio of an empty spacing list");
  }
  return scoreLevel(spacings).ratio;
}

SpacingLabReport spacingLab(std::size_t count, double targetSum, double step,
                            SurmiseParams params) {
  if (count == 0) {
    throw ValidationError("spacing lab needs at least one spacing");
  }
  if (!(step > 0.0) || !(targetSum > 0.0)) {
    std::ostringstream message;
    message << "spacing lab needs positive step and sum, got step " << step
            << " and sum " << targetSum;
    throw ValidationError(message.str());
  }
  // Validate beta eagerly so an infeasible grid still reports a real error.
  wignerSurmisePdf(0.0, params);

  SpacingLabReport report;
  report.count = count;
  report.targetSum = targetSum;
  report.step = step;
  report.params = params;

  // Work in integer grid units; a sum off the grid is simply infeasible.
  const long long units = std::llround(targetSum / step);
  const bool onGrid =
      std::abs(static_cast<double>(units) * step - targetSum) <=
      1e-9 * std::max(1.0, std::abs(targetSum));
  if (!onGrid || units < static_cast<long long>(count)) {
    report.feasible = false;
    return report;
  }

  std::vector<std::vector<long long>> multisets;
  std::vector<long long> prefix;
  enumerateNondecreasing(count, units, 1, prefix, multisets);
  if (multisets.empty()) {
    report.feasible = false;
    return report;
  }

  report.feasible = true;
  report.ranked.reserve(multisets.size());
  for (const auto& multiset : multisets) {
    SpacingCandidate candidate;
    candidate.values.reserve(count);
    for (long long value : multiset) {
      candidate.values.push_back(static_cast<double>(value) * step);
    }
    candidate.r = rRatio(candidate.values);
    report.ranked.push_back(std::move(candidate));
  }
  std::ranges::stable_sort(report.ranked, [](const SpacingCandidate& a,
                                             const SpacingCandidate& b) {
    if (a.r != b.r) {
      return a.r > b.r;
    }
    return a.values < b.values;
  });

  // Overlay: the winner's spacings normalized to mean 1, with empirical
  // weights and the surmise density at the same points.
  const std::vector<double>& winner = report.ranked.front().values;
  const double mean = targetSum / static_cast<double>(count);
  std::vector<double> normalized;
  normalized.reserve(winner.size());
  for (double value : winner) {
    normalized.push_back(value / mean);
  }
  for (std::size_t i = 0; i < normalized.size();) {
    std::size_t j = i;
    while (j < normalized.size() && normalized[j] == normalized[i]) {
      ++j;
    }
    report.histogramSpacings.push_back(normalized[i]);
    report.histogramWeights.push_back(static_cast<double>(j - i) /
                                      static_cast<double>(normalized.size()));
    report.surmiseDensity.push_back(wignerSurmisePdf(normalized[i], params));
    i = j;
  }
  return report;
}

}  // namespace melscore
