/**
 * @file piece.cpp
 */
#include "melscore/piece.h"

#include <algorithm>
#include <sstream>

#include "melscore/errors.h"

namespace melscore {
namespace {

/// Maximal runs of consecutive same-sign transitions. Zeros end the current
/// run and never join one.
std::vector<std::vector<double>> signRuns(const std::vector<double>& deltas) {
  std::vector<std::vector<double>> runs;
  std::vector<double> current;
  for (double delta : deltas) {
    if (delta == 0.0) {
      if (!current.empty()) {
        runs.push_back(std::move(current));
        current.clear();
      }
      continue;
    }
    if (!current.empty() && (current.back() > 0.0) != (delta > 0.0)) {
      runs.push_back(std::move(current));
      current.clear();
    }
    current.push_back(delta);
  }
  if (!current.empty()) {
    runs.push_back(std::move(current));
  }
  return runs;
}

}  // namespace

void validatePiece(const Piece& piece) {
  if (piece.frequencies.size() < 2) {
    std::ostringstream message;
    message << "piece";
    if (!piece.label.empty()) {
      message << " '" << piece.label << "'";
    }
    message << " has " << piece.frequencies.size()
            << " note(s); at least 2 are required";
    throw ValidationError(message.str());
  }
  for (std::size_t i = 0; i < piece.frequencies.size(); ++i) {
    if (!(piece.frequencies[i] > 0.0)) {
      std::ostringstream message;
      message << "piece";
      if (!piece.label.empty()) {
        message << " '" << piece.label << "'";
      }
      message << " has non-positive frequency " << piece.frequencies[i]
              << " at index " << i;
      throw ValidationError(message.str());
    }
  }
}

TransitionPattern transitions(const Piece& piece) {
  validatePiece(piece);
  TransitionPattern pattern;
  pattern.deltas.reserve(piece.frequencies.size() - 1);
  for (std::size_t i = 0; i + 1 < piece.frequencies.size(); ++i) {
    pattern.deltas.push_back(piece.frequencies[i + 1] - piece.frequencies[i]);
  }
  return pattern;
}

std::vector<double> shiftToMinOne(const std::vector<double>& values) {
  if (values.empty()) {
    throw ValidationError("cannot shift an empty value list");
  }
  const double offset = 1.0 - *std::min_element(values.begin(), values.end());
  std::vector<double> shifted;
  shifted.reserve(values.size());
  for (double value : values) {
    shifted.push_back(value + offset);
  }
  return shifted;
}

DirectionGroups directionSplit(const TransitionPattern& pattern) {
  DirectionGroups groups;
  for (double delta : pattern.deltas) {
    if (delta > 0.0) {
      groups.positive.push_back(delta);
    } else if (delta < 0.0) {
      groups.negative.push_back(delta);
    } else {
      groups.zeros.push_back(delta);
    }
  }
  return groups;
}

std::vector<double> withinDirectionDiffs(const TransitionPattern& pattern) {
  std::vector<double> positiveOut;
  std::vector<double> negativeOut;
  for (const auto& run : signRuns(pattern.deltas)) {
    auto& out = run.front() > 0.0 ? positiveOut : negativeOut;
    if (run.size() == 1) {
      out.push_back(run.front());
      continue;
    }
    for (std::size_t i = 0; i + 1 < run.size(); ++i) {
      out.push_back(run[i] - run[i + 1]);
    }
  }
  std::vector<double> diffs = std::move(positiveOut);
  diffs.insert(diffs.end(), negativeOut.begin(), negativeOut.end());
  for (double delta : pattern.deltas) {
    if (delta == 0.0) {
      diffs.push_back(0.0);
    }
  }
  return diffs;
}

double directionSumDiff(const TransitionPattern& pattern) {
  double positiveSum = 0.0;
  double negativeSum = 0.0;
  for (double delta : pattern.deltas) {
    if (delta > 0.0) {
      positiveSum += delta;
    } else if (delta < 0.0) {
      negativeSum += delta;
    }
  }
  return positiveSum - negativeSum;
}

Decomposition decompose(const Piece& piece) {
  Decomposition result;
  result.transitions = transitions(piece);
  result.shifted = shiftToMinOne(piece.frequencies);
  result.withinDiffs = withinDirectionDiffs(result.transitions);
  result.directionGap = directionSumDiff(result.transitions);
  return result;
}

}  // namespace melscore
