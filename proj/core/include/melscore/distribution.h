/**
 * @file distribution.h
 * Combined level distribution, cluster-signature check, and the
 * spacing-distribution lab.
 *
 * The combined distribution of a piece pools the transitions, the
 * within-direction differences, and the direction-sum gap into one multiset.
 * Well-formed four-note pieces cluster into a (2,3,1) signature: two values
 * on the left, three in the middle, one on the right. The spacing lab ranks
 * candidate spacing multisets by their entropy-energy ratio R and compares
 * the winner against a Wigner-surmise reference density.
 */
#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "melscore/piece.h"

namespace melscore {

/// Expected cluster signature for four-note pieces.
inline constexpr std::array<std::size_t, 3> kDefaultSignature{2, 3, 1};

/// An optimal contiguous partition of sorted values into k clusters.
struct ClusterPartition {
  /// Clusters in ascending value order; together they are the sorted input.
  std::vector<std::vector<double>> clusters;
  /// Cluster sizes, left to right.
  std::vector<std::size_t> signature;
  /// Total within-cluster sum of squared deviations (the minimum).
  double wcss = 0.0;
};

/// Result of checking a decomposition against an expected signature.
struct DistributionCheck {
  bool matches = false;
  ClusterPartition partition;
};

/// Wigner-surmise ensemble selector.
struct SurmiseParams {
  int beta = 2;  ///< one of 1, 2, 4.
};

/// One ranked entry of the spacing lab.
struct SpacingCandidate {
  std::vector<double> values;  ///< nondecreasing multiset.
  double r = 0.0;              ///< entropy-energy ratio.
};

/// Spacing-lab output: every feasible multiset ranked by R, plus overlay
/// data comparing the winner's spacing histogram with the surmise density.
struct SpacingLabReport {
  std::size_t count = 0;  ///< multiset size n.
  double targetSum = 0.0;
  double step = 0.0;
  SurmiseParams params;
  /// False when no multiset satisfies the constraints; all other report
  /// fields are empty in that case.
  bool feasible = false;
  /// Candidates ordered by R descending, ties by ascending lexicographic
  /// comparison of the value lists.
  std::vector<SpacingCandidate> ranked;
  /// Distinct spacings of the argmax multiset normalized to mean 1,
  /// ascending. Empty when infeasible.
  std::vector<double> histogramSpacings;
  /// Empirical weight of each normalized spacing; sums to 1.
  std::vector<double> histogramWeights;
  /// Surmise density evaluated at each normalized spacing.
  std::vector<double> surmiseDensity;
};

/// Pools transitions, within-direction differences, and the direction gap
/// into one multiset (in that order).
std::vector<double> combinedDistribution(const Decomposition& decomposition);

/// Exact minimum-WCSS contiguous partition of the sorted values into k
/// clusters (dynamic programming over split points). Ties are broken by the
/// leftmost split points. Throws ValidationError unless 1 <= k <= |values|.
ClusterPartition cluster1d(std::span<const double> values, std::size_t k);

/// Clusters the combined distribution into |expectedSignature| clusters and
/// compares the resulting size signature. Throws ValidationError when the
/// combined distribution has fewer values than clusters requested.
DistributionCheck distributionCheck(
    const Decomposition& decomposition,
    std::span<const std::size_t> expectedSignature = kDefaultSignature);

/// Nearest-neighbour spacing density of the chosen ensemble, for s >= 0:
///   beta=1: (pi/2) s exp(-pi s^2 / 4)
///   beta=2: (32/pi^2) s^2 exp(-4 s^2 / pi)
///   beta=4: (2^18 / (3^6 pi^3)) s^4 exp(-64 s^2 / (9 pi))
/// Throws ValidationError for negative s or unsupported beta.
double wignerSurmisePdf(double s, SurmiseParams params = {});

/// Entropy-energy ratio R of a spacing multiset (default entropy mode).
/// Throws ValidationError when the input is empty.
double rRatio(std::span<const double> spacings);

/// Enumerates all size-`count` multisets of positive multiples of `step`
/// summing to `targetSum`, ranks them by R, and builds the surmise overlay
/// for the winner. Unsatisfiable constraints yield feasible = false rather
/// than an error. Throws ValidationError when count is 0 or step/targetSum
/// are non-positive.
SpacingLabReport spacingLab(std::size_t count, double targetSum, double step,
                            SurmiseParams params = {});

}  // namespace melscore
