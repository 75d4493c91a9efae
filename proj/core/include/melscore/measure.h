/**
 * @file measure.h
 * Entropy-energy aesthetic measure.
 *
 * Each level of a decomposition is scored by the ratio of its entropy to its
 * energy; the measure M of a piece is one tenth of the sum of the three level
 * ratios. The calibrated default entropy is the unnormalized
 * sum v^2 ln(v^2) over the level's values (natural logarithm, 0 ln 0 := 0);
 * a Shannon-style normalized entropy is available as an alternative mode.
 */
#pragma once

#include <span>

#include "melscore/piece.h"

namespace melscore {

/// Entropy convention used for level scores.
enum class EntropyMode {
  kSquaredLog,  ///< sum of v^2 ln(v^2); the calibrated default.
  kShannon,     ///< -sum p ln p with p = v^2 / energy.
};

/// Overall scale applied to the sum of the three level ratios.
inline constexpr double kMeasureScale = 0.1;

/// Entropy, energy, and their ratio for one level.
struct LevelScore {
  double entropy = 0.0;
  double energy = 0.0;
  double ratio = 0.0;  ///< entropy / energy, 0 when energy is 0.
};

/// Level scores of a piece plus the combined measure.
struct AestheticScore {
  LevelScore shifted;      ///< L1.
  LevelScore transitions;  ///< L2.
  LevelScore withinDiffs;  ///< L3 (within-direction differences).
  double m = 0.0;          ///< kMeasureScale * sum of the three ratios.
};

/// Entropy of a value list under the given mode. Zero values contribute
/// nothing in either mode.
double entropy(std::span<const double> values,
               EntropyMode mode = EntropyMode::kSquaredLog);

/// Sum of squared values.
double energy(std::span<const double> values);

/// Entropy, energy and ratio of one value list.
LevelScore scoreLevel(std::span<const double> values,
                      EntropyMode mode = EntropyMode::kSquaredLog);

/// Scores an existing decomposition. Requires at least one transition.
AestheticScore scoreDecomposition(const Decomposition& decomposition,
                                  EntropyMode mode = EntropyMode::kSquaredLog);

/// Decomposes and scores a piece. Throws ValidationError for pieces shorter
/// than three notes (the within-direction level would be empty).
AestheticScore mValue(const Piece& piece,
                      EntropyMode mode = EntropyMode::kSquaredLog);

}  // namespace melscore
