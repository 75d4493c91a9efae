/**
 * @file piece.h
 * Melodic pieces and their multilevel decomposition.
 *
 * A piece is an ordered list of note frequencies. Scoring and distribution
 * analysis both work on the same three derived levels:
 *   L1 - the frequencies shifted so their minimum is 1,
 *   L2 - the successive transitions t[i] = f[i+1] - f[i],
 *   L3 - differences between consecutive transitions within each maximal
 *        same-direction run, plus the positive/negative direction-sum gap.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace melscore {

/// An ordered melodic line. Frequencies are in hertz and must be positive;
/// a piece needs at least two notes before any level can be derived.
struct Piece {
  std::string label;
  std::vector<double> frequencies;
};

/// Successive differences between neighbouring notes, in temporal order.
struct TransitionPattern {
  std::vector<double> deltas;

  friend bool operator==(const TransitionPattern&,
                         const TransitionPattern&) = default;
};

/// Transitions partitioned by direction, temporal order preserved in each
/// bucket. Zero transitions belong to neither direction.
struct DirectionGroups {
  std::vector<double> positive;
  std::vector<double> negative;
  std::vector<double> zeros;
};

/// The three levels of a piece plus the direction-sum gap, computed once and
/// shared by the measure and the distribution check.
struct Decomposition {
  std::vector<double> shifted;       ///< L1: frequencies shifted to min 1.
  TransitionPattern transitions;     ///< L2.
  std::vector<double> withinDiffs;   ///< L3 without the direction-sum gap.
  double directionGap = 0.0;         ///< sum(positive) - sum(negative).
};

/// Throws ValidationError unless the piece has >= 2 notes, all positive.
void validatePiece(const Piece& piece);

/// t[i] = f[i+1] - f[i]. Requires a valid piece.
TransitionPattern transitions(const Piece& piece);

/// Shifts values so the smallest becomes exactly 1. Requires a non-empty
/// input; the result preserves order and pairwise differences.
std::vector<double> shiftToMinOne(const std::vector<double>& values);

/// Splits transitions into positive / negative / zero buckets.
DirectionGroups directionSplit(const TransitionPattern& pattern);

/// Differences between consecutive transitions inside each maximal
/// same-direction run, each computed as earlier minus later. A run of one
/// transition passes through unchanged; zero transitions break runs and pass
/// through unchanged. Output order: results of positive runs, then negative
/// runs, then zeros.
std::vector<double> withinDirectionDiffs(const TransitionPattern& pattern);

/// sum of positive transitions minus sum of negative transitions.
double directionSumDiff(const TransitionPattern& pattern);

/// Computes all three levels in one pass. Requires a valid piece.
Decomposition decompose(const Piece& piece);

}  // namespace melscore
