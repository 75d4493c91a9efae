/**
 * @file measure.cpp
 */
#include "melscore/measure.h"

#include <cmath>
#include <sstream>

#include "melscore/errors.h"

namespace melscore {

double entropy(std::span<const double> values, EntropyMode mode) {
  if (mode == EntropyMode::kSquaredLog) {
    double sum = 0.0;
    for (double value : values) {
      const double squared = value * value;
      if (squared > 0.0) {
        sum += squared * std::log(squared);
      }
    }
    return sum;
  }
  const double total = energy(values);
  if (total <= 0.0) {
    return 0.0;
  }
  double sum = 0.0;
  for (double value : values) {
    const double p = value * value / total;
    if (p > 0.0) {
      sum -= p * std::log(p);
    }
  }
  return sum;
}

double energy(std::span<const double> values) {
  double sum = 0.0;
  for (double value : values) {
    sum += value * value;
  }
  return sum;
}

LevelScore scoreLevel(std::span<const double> values, EntropyMode mode) {
  LevelScore score;
  score.entropy = entropy(values, mode);
  score.energy = energy(values);
  score.ratio = score.energy > 0.0 ? score.entropy / score.energy : 0.0;
  return score;
}

AestheticScore scoreDecomposition(const Decomposition& decomposition,
                                  EntropyMode mode) {
  if (decomposition.transitions.deltas.empty()) {
    throw ValidationError(
        "cannot score a decomposition without transitions");
  }
  AestheticScore score;
  score.shifted = scoreLevel(decomposition.shifted, mode);
  score.transitions = scoreLevel(decomposition.transitions.deltas, mode);
  score.withinDiffs = scoreLevel(decomposition.withinDiffs, mode);
  score.m = kMeasureScale * (score.shifted.ratio + score.transitions.ratio +
                             score.withinDiffs.ratio);
  return score;
}

AestheticScore mValue(const Piece& piece, EntropyMode mode) {
  if (piece.frequencies.size() < 3) {
    std::ostringstream message;
    message << "piece";
    if (!piece.label.empty()) {
      message << " '" << piece.label << "'";
    }
    message << " has " << piece.frequencies.size()
            << " note(s); the within-direction level needs at least 3";
    throw ValidationError(message.str());
  }
  return scoreDecomposition(decompose(piece), mode);
}

}  // namespace melscore
