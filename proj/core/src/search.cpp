/**
 * @file search.cpp
 */
#include "melscore/search.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>

#include "melscore/errors.h"

namespace melscore {
namespace {

/// Rounds a grid quantity to integer step units; returns false if it is not
/// a multiple of the step (within rounding slack).
bool toStepUnits(double value, double step, long long& units) {
  units = std::llround(value / step);
  return std::abs(static_cast<double>(units) * step - value) <=
         1e-9 * std::max(1.0, std::abs(value));
}

std::string formatSignature(std::span<const std::size_t> signature) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < signature.size(); ++i) {
    out << (i ? "," : "") << signature[i];
  }
  out << ")";
  return out.str();
}

/// Realizes, filters, and scores one pattern. Shared by sweeps and
/// permutation runs; never throws (failures become rejection notes).
CandidateReport evaluateCandidate(const TransitionPattern& pattern,
                                  double startFrequency,
                                  std::span<const std::size_t> signature,
                                  EntropyMode mode) {
  CandidateReport report;
  report.pattern = pattern;
  const RealizeOutcome outcome = tryRealize(pattern, startFrequency);
  if (!outcome.piece) {
    std::ostringstream note;
    note << "realization reaches non-positive frequency "
         << outcome.failedFrequency << " at note " << outcome.failedIndex;
    report.rejection = note.str();
    return report;
  }
  report.piece = *outcome.piece;
  try {
    const Decomposition decomposition = decompose(*outcome.piece);
    const DistributionCheck check = distributionCheck(decomposition, signature);
    report.partition = check.partition;
    report.score = scoreDecomposition(decomposition, mode);
    report.passedFilter = check.matches;
    if (!check.matches) {
      std::ostringstream note;
      note << "signature " << formatSignature(check.partition.signature)
           << " does not match expected " << formatSignature(signature);
      report.rejection = note.str();
    }
  } catch (const ValidationError& error) {
    report.rejection = error.what();
  }
  return report;
}

/// Ranks passing candidates by M descending, ties by pattern ascending.
bool sweepRankLess(const std::vector<CandidateReport>& candidates,
                   std::size_t a, std::size_t b) {
  const double mA = candidates[a].score->m;
  const double mB = candidates[b].score->m;
  if (mA != mB) {
    return mA > mB;
  }
  return candidates[a].pattern.deltas < candidates[b].pattern.deltas;
}

}  // namespace

void validateSearchConfig(const SearchConfig& config) {
  if (config.length < 1) {
    throw ValidationError("search needs at least one transition per pattern");
  }
  if (!(config.step > 0.0)) {
    std::ostringstream message;
    message << "grid step must be positive, got " << config.step;
    throw ValidationError(message.str());
  }
  if (!(config.startFrequency > 0.0)) {
    std::ostringstream message;
    message << "start frequency must be positive, got "
            << config.startFrequency;
    throw ValidationError(message.str());
  }
  long long units = 0;
  if (!toStepUnits(config.maxMagnitude, config.step, units) || units < 1) {
    std::ostringstream message;
    message << "max magnitude " << config.maxMagnitude
            << " must be a positive multiple of step " << config.step;
    throw ValidationError(message.str());
  }
  if (!toStepUnits(config.targetLevel.value, config.step, units) ||
      units < 0) {
    std::ostringstream message;
    message << "target level " << config.targetLevel.value
            << " must be a nonnegative multiple of step " << config.step;
    throw ValidationError(message.str());
  }
  if (config.signature.empty()) {
    throw ValidationError("expected cluster signature must not be empty");
  }
}

EnergyLevel energyLevel(const TransitionPattern& pattern) {
  double sum = 0.0;
  for (double delta : pattern.deltas) {
    sum += std::abs(delta);
  }
  return EnergyLevel{sum};
}

std::vector<TransitionPattern> arrangements(const TransitionPattern& pattern) {
  std::vector<double> sorted = pattern.deltas;
  std::sort(sorted.begin(), sorted.end());
  std::vector<TransitionPattern> result;
  do {
    result.push_back(TransitionPattern{sorted});
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return result;
}

Piece realize(const TransitionPattern& pattern, double startFrequency) {
  const RealizeOutcome outcome = tryRealize(pattern, startFrequency);
  if (!outcome.piece) {
    std::ostringstream message;
    message << "realization reaches non-positive frequency "
            << outcome.failedFrequency << " at note " << outcome.failedIndex;
    throw ValidationError(message.str());
  }
  return *outcome.piece;
}

RealizeOutcome tryRealize(const TransitionPattern& pattern,
                          double startFrequency) {
  RealizeOutcome outcome;
  if (!(startFrequency > 0.0)) {
    outcome.failedIndex = 0;
    outcome.failedFrequency = startFrequency;
    return outcome;
  }
  Piece piece;
  piece.frequencies.reserve(pattern.deltas.size() + 1);
  piece.frequencies.push_back(startFrequency);
  for (std::size_t i = 0; i < pattern.deltas.size(); ++i) {
    const double next = piece.frequencies.back() + pattern.deltas[i];
    if (!(next > 0.0)) {
      outcome.failedIndex = i + 1;
      outcome.failedFrequency = next;
      return outcome;
    }
    piece.frequencies.push_back(next);
  }
  outcome.piece = std::move(piece);
  return outcome;
}

PermutationReport permutationExperiment(
    const Piece& piece, std::span<const std::size_t> signature,
    EntropyMode mode) {
  validatePiece(piece);
  PermutationReport report;
  report.original = piece;
  const TransitionPattern original = transitions(piece);
  const double start = piece.frequencies.front();

  const std::vector<TransitionPattern> patterns = arrangements(original);
  report.candidates.reserve(patterns.size());
  for (const TransitionPattern& pattern : patterns) {
    report.candidates.push_back(
        evaluateCandidate(pattern, start, signature, mode));
  }
  report.originalIndex = static_cast<std::size_t>(
      std::distance(patterns.begin(),
                    std::find(patterns.begin(), patterns.end(), original)));

  // Rank passing candidates by L1 ratio descending, ties by pattern.
  std::vector<std::size_t> passing;
  for (std::size_t i = 0; i < report.candidates.size(); ++i) {
    if (report.candidates[i].passedFilter) {
      passing.push_back(i);
    }
  }
  std::ranges::stable_sort(passing, [&](std::size_t a, std::size_t b) {
    const double ratioA = report.candidates[a].score->shifted.ratio;
    const double ratioB = report.candidates[b].score->shifted.ratio;
    if (ratioA != ratioB) {
      return ratioA > ratioB;
    }
    return report.candidates[a].pattern.deltas <
           report.candidates[b].pattern.deltas;
  });
  for (std::size_t rank = 0; rank < passing.size(); ++rank) {
    report.candidates[passing[rank]].rank = rank + 1;
  }

  const CandidateReport& originalReport =
      report.candidates[report.originalIndex];
  const double originalRatio =
      originalReport.score ? originalReport.score->shifted.ratio : 0.0;
  if (passing.empty()) {
    // Nothing passes the filter, so nothing outranks the original; the
    // maximum stays at its zero default rather than borrowing a ratio from
    // a non-passing candidate.
    report.originalAttainsMax = true;
  } else {
    const double maxRatio =
        report.candidates[passing.front()].score->shifted.ratio;
    report.maxPassingL1Ratio = maxRatio;
    // Arrangements sharing a value multiset differ only by summation order,
    // so allow rounding-level slack when comparing against the maximum.
    const double slack = 1e-9 * std::max(1.0, std::abs(maxRatio));
    report.originalAttainsMax =
        originalReport.passedFilter && originalRatio >= maxRatio - slack;
  }
  return report;
}

std::vector<TransitionPattern> enumeratePatterns(const SearchConfig& config) {
  validateSearchConfig(config);
  long long maxUnits = 0;
  long long levelUnits = 0;
  toStepUnits(config.maxMagnitude, config.step, maxUnits);
  toStepUnits(config.targetLevel.value, config.step, levelUnits);

  std::vector<TransitionPattern> patterns;
  std::vector<long long> prefix;
  // Depth-first over signed step multiples in ascending order, pruning on
  // the reachable |delta| budget for the remaining slots.
  auto descend = [&](auto&& self, long long remaining) -> void {
    const std::size_t slots = config.length - prefix.size();
    if (slots == 0) {
      if (remaining != 0) {
        return;
      }
      TransitionPattern pattern;
      pattern.deltas.reserve(prefix.size());
      for (long long units : prefix) {
        pattern.deltas.push_back(static_cast<double>(units) * config.step);
      }
      patterns.push_back(std::move(pattern));
      return;
    }
    for (long long units = -maxUnits; units <= maxUnits; ++units) {
      if (units == 0) {
        continue;
      }
      const long long rest = remaining - std::llabs(units);
      const long long left = static_cast<long long>(slots) - 1;
      if (rest < left || rest > left * maxUnits) {
        continue;
      }
      prefix.push_back(units);
      self(self, rest);
      prefix.pop_back();
    }
  };
  descend(descend, levelUnits);
  return patterns;
}

SweepReport energySweep(const SearchConfig& config, unsigned threads,
                        EntropyMode mode) {
  SweepReport report;
  report.config = config;
  const std::vector<TransitionPattern> patterns = enumeratePatterns(config);
  report.candidates.resize(patterns.size());

  // Index-addressed evaluation keeps the report independent of the worker
  // count and of scheduling order.
  auto evaluateRange = [&](std::atomic<std::size_t>& next) {
    for (std::size_t i = next.fetch_add(1); i < patterns.size();
         i = next.fetch_add(1)) {
      report.candidates[i] = evaluateCandidate(
          patterns[i], config.startFrequency, config.signature, mode);
    }
  };
  std::atomic<std::size_t> next{0};
  const unsigned workerCount = std::max(1u, threads);
  if (workerCount == 1 || patterns.size() <= 1) {
    evaluateRange(next);
  } else {
    std::vector<std::thread> workers;
    const unsigned spawned = static_cast<unsigned>(
        std::min<std::size_t>(workerCount, patterns.size()));
    workers.reserve(spawned);
    for (unsigned i = 0; i < spawned; ++i) {
      workers.emplace_back([&] { evaluateRange(next); });
    }
    for (std::thread& worker : workers) {
      worker.join();
    }
  }

  for (std::size_t i = 0; i < report.candidates.size(); ++i) {
    if (report.candidates[i].passedFilter) {
      report.passingOrder.push_back(i);
    }
  }
  std::ranges::stable_sort(report.passingOrder, [&](std::size_t a,
                                                    std::size_t b) {
    return sweepRankLess(report.candidates, a, b);
  });
  for (std::size_t rank = 0; rank < report.passingOrder.size(); ++rank) {
    report.candidates[report.passingOrder[rank]].rank = rank + 1;
  }

  // Per-multiset view: group by sorted deltas, rank within each class.
  std::map<std::vector<double>, std::vector<std::size_t>> byMultiset;
  for (std::size_t i = 0; i < report.candidates.size(); ++i) {
    std::vector<double> key = report.candidates[i].pattern.deltas;
    std::sort(key.begin(), key.end());
    byMultiset[std::move(key)].push_back(i);
  }
  for (auto& [key, members] : byMultiset) {
    ArrangementClass group;
    group.sortedDeltas = key;
    group.memberIndices = members;
    std::vector<std::size_t> passing;
    for (std::size_t index : members) {
      if (report.candidates[index].passedFilter) {
        passing.push_back(index);
      }
    }
    std::ranges::stable_sort(passing, [&](std::size_t a, std::size_t b) {
      return sweepRankLess(report.candidates, a, b);
    });
    for (std::size_t rank = 0; rank < passing.size(); ++rank) {
      report.candidates[passing[rank]].classRank = rank + 1;
    }
    if (!passing.empty()) {
      group.bestPassing = passing.front();
    }
    report.classes.push_back(std::move(group));
  }
  return report;
}

}  // namespace melscore
