/**
 * @file search.h
 * Brute-force engines: transition-arrangement permutation runs and
 * fixed-energy-level pattern sweeps, with filtering and ranking.
 *
 * A sweep enumerates every transition pattern at one energy level, realizes
 * each into a piece, keeps the candidates whose combined distribution matches
 * the expected cluster signature, and ranks the survivors by M. A permutation
 * run does the same over the distinct rearrangements of one piece's
 * transitions, ranking by the L1 entropy-energy ratio instead.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "melscore/distribution.h"
#include "melscore/measure.h"
#include "melscore/piece.h"

namespace melscore {

/// Sum of absolute transition values. Pieces are only compared within one
/// energy level.
struct EnergyLevel {
  double value = 0.0;

  friend bool operator==(const EnergyLevel&, const EnergyLevel&) = default;
};

/// Grid and filter settings for pattern enumeration and sweeps.
struct SearchConfig {
  std::size_t length = 3;         ///< number of transitions per pattern.
  double step = 5.0;              ///< grid step in Hz.
  double maxMagnitude = 40.0;     ///< largest |delta| on the grid.
  double startFrequency = 120.0;  ///< realization anchor in Hz.
  EnergyLevel targetLevel;
  std::vector<std::size_t> signature{kDefaultSignature.begin(),
                                     kDefaultSignature.end()};
};

/// One evaluated candidate of a sweep or permutation run. Candidates whose
/// realization would leave the positive-frequency domain carry a rejection
/// note and no piece or score.
struct CandidateReport {
  TransitionPattern pattern;
  std::optional<Piece> piece;
  std::optional<AestheticScore> score;
  std::optional<ClusterPartition> partition;
  bool passedFilter = false;
  /// 1-based rank among all passing candidates (M descending for sweeps,
  /// L1 ratio descending for permutation runs; ties by pattern ascending).
  std::optional<std::size_t> rank;
  /// 1-based rank among passing candidates that share a delta multiset
  /// (sweeps only).
  std::optional<std::size_t> classRank;
  /// Why the candidate was discarded or failed the filter; empty if passing.
  std::string rejection;
};

/// Candidates grouped by their delta multiset (arrangement class).
struct ArrangementClass {
  std::vector<double> sortedDeltas;          ///< class key, ascending.
  std::vector<std::size_t> memberIndices;    ///< into SweepReport::candidates.
  std::optional<std::size_t> bestPassing;    ///< member with classRank 1.
};

/// Full sweep output: every candidate in enumeration order plus the global
/// passing order and the per-multiset view.
struct SweepReport {
  SearchConfig config;
  std::vector<CandidateReport> candidates;
  /// Indices of passing candidates in rank order.
  std::vector<std::size_t> passingOrder;
  std::vector<ArrangementClass> classes;
};

/// Permutation-run output over one piece's transition arrangements.
struct PermutationReport {
  Piece original;
  std::vector<CandidateReport> candidates;  ///< lexicographic pattern order.
  std::size_t originalIndex = 0;            ///< into candidates.
  double maxPassingL1Ratio = 0.0;
  bool originalAttainsMax = false;
};

/// Throws ValidationError unless step > 0, maxMagnitude is a positive
/// multiple of step, targetLevel is a nonnegative multiple of step,
/// length >= 1, and startFrequency > 0.
void validateSearchConfig(const SearchConfig& config);

EnergyLevel energyLevel(const TransitionPattern& pattern);

/// All distinct permutations of the delta multiset, lexicographic order.
std::vector<TransitionPattern> arrangements(const TransitionPattern& pattern);

/// Cumulative realization: piece[0] = start, piece[i+1] = piece[i] + d[i].
/// Throws ValidationError naming the offending index if any cumulative
/// frequency is non-positive (or start <= 0).
Piece realize(const TransitionPattern& pattern, double startFrequency);

/// Non-throwing realization for search loops.
struct RealizeOutcome {
  std::optional<Piece> piece;
  std::size_t failedIndex = 0;     ///< index into the realized note list.
  double failedFrequency = 0.0;    ///< the non-positive value reached.
};
RealizeOutcome tryRealize(const TransitionPattern& pattern,
                          double startFrequency);

/// Evaluates every distinct arrangement of the piece's transitions, realized
/// from the piece's first frequency. Passing candidates are ranked by L1
/// ratio descending; the report flags whether the original arrangement
/// attains the maximum passing L1 ratio.
PermutationReport permutationExperiment(
    const Piece& piece,
    std::span<const std::size_t> signature = kDefaultSignature,
    EntropyMode mode = EntropyMode::kSquaredLog);

/// All patterns of config.length whose deltas are nonzero signed multiples
/// of step with |delta| <= maxMagnitude and sum |delta| = targetLevel, in
/// lexicographic order. Infeasible configurations yield an empty list.
std::vector<TransitionPattern> enumeratePatterns(const SearchConfig& config);

/// Full sweep at config.targetLevel. Evaluation may run on `threads` worker
/// threads; the report is byte-for-byte independent of the thread count.
SweepReport energySweep(const SearchConfig& config, unsigned threads = 1,
                        EntropyMode mode = EntropyMode::kSquaredLog);

}  // namespace melscore
