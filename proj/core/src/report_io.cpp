/**
 * @file report_io.cpp
 */
#include "melscore/report_io.h"

#include <charconv>
#include <iomanip>
#include <ostream>

#include <json.hpp>

namespace melscore {
namespace {

using ordered_json = nlohmann::ordered_json;

/// Shortest decimal form that round-trips to the same double.
std::string formatNumber(double value) {
  char buffer[64];
  const auto [end, errc] =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

const char* modeName(EntropyMode mode) {
  return mode == EntropyMode::kSquaredLog ? "cw" : "shannon";
}

ordered_json pieceJson(const Piece& piece) {
  ordered_json object;
  object["label"] = piece.label;
  object["frequencies"] = piece.frequencies;
  return object;
}

ordered_json levelJson(const LevelScore& level) {
  ordered_json object;
  object["entropy"] = level.entropy;
  object["energy"] = level.energy;
  object["ratio"] = level.ratio;
  return object;
}

ordered_json scoreJson(const AestheticScore& score) {
  ordered_json object;
  object["levels"] = ordered_json::object();
  object["levels"]["shifted"] = levelJson(score.shifted);
  object["levels"]["transitions"] = levelJson(score.transitions);
  object["levels"]["within_diffs"] = levelJson(score.withinDiffs);
  object["m"] = score.m;
  return object;
}

ordered_json partitionJson(const ClusterPartition& partition) {
  ordered_json object;
  object["clusters"] = partition.clusters;
  object["signature"] = partition.signature;
  object["wcss"] = partition.wcss;
  return object;
}

ordered_json candidateJson(const CandidateReport& candidate) {
  ordered_json object;
  object["pattern"] = candidate.pattern.deltas;
  if (candidate.piece) {
    object["frequencies"] = candidate.piece->frequencies;
  }
  if (candidate.score) {
    object["score"] = scoreJson(*candidate.score);
  }
  if (candidate.partition) {
    object["signature"] = candidate.partition->signature;
  }
  object["passed"] = candidate.passedFilter;
  if (candidate.rank) {
    object["rank"] = *candidate.rank;
  }
  if (candidate.classRank) {
    object["class_rank"] = *candidate.classRank;
  }
  if (!candidate.rejection.empty()) {
    object["rejection"] = candidate.rejection;
  }
  return object;
}

ordered_json claimJson(const ClaimResult& claim) {
  ordered_json object;
  object["id"] = claim.id;
  object["claim"] = claim.claim;
  object["citation"] = claim.citation;
  if (claim.expected) {
    object["expected"] = *claim.expected;
  }
  if (claim.computed) {
    object["computed"] = *claim.computed;
  }
  if (claim.tolerance) {
    object["tolerance"] = *claim.tolerance;
  }
  object["pass"] = claim.pass;
  if (!claim.detail.empty()) {
    object["detail"] = claim.detail;
  }
  return object;
}

ordered_json claimsJson(const std::vector<ClaimResult>& claims) {
  ordered_json array = ordered_json::array();
  for (const ClaimResult& claim : claims) {
    array.push_back(claimJson(claim));
  }
  return array;
}

ordered_json permutationJson(const PermutationReport& report) {
  ordered_json object = pieceJson(report.original);
  object["original_index"] = report.originalIndex;
  object["candidates"] = ordered_json::array();
  for (const CandidateReport& candidate : report.candidates) {
    object["candidates"].push_back(candidateJson(candidate));
  }
  object["max_passing_l1_ratio"] = report.maxPassingL1Ratio;
  object["original_attains_max"] = report.originalAttainsMax;
  return object;
}

ordered_json sweepJson(const SweepReport& report) {
  ordered_json object;
  object["config"] = ordered_json::object();
  object["config"]["length"] = report.config.length;
  object["config"]["step"] = report.config.step;
  object["config"]["max_magnitude"] = report.config.maxMagnitude;
  object["config"]["start_frequency"] = report.config.startFrequency;
  object["config"]["level"] = report.config.targetLevel.value;
  object["config"]["signature"] = report.config.signature;
  object["candidate_count"] = report.candidates.size();
  object["passing_count"] = report.passingOrder.size();
  object["candidates"] = ordered_json::array();
  for (const CandidateReport& candidate : report.candidates) {
    object["candidates"].push_back(candidateJson(candidate));
  }
  object["passing_order"] = report.passingOrder;
  object["classes"] = ordered_json::array();
  for (const ArrangementClass& group : report.classes) {
    ordered_json classObject;
    classObject["deltas"] = group.sortedDeltas;
    classObject["members"] = group.memberIndices;
    if (group.bestPassing) {
      classObject["best_passing"] = *group.bestPassing;
    }
    object["classes"].push_back(classObject);
  }
  return object;
}

ordered_json spacingLabJson(const SpacingLabReport& report) {
  ordered_json object;
  object["count"] = report.count;
  object["target_sum"] = report.targetSum;
  object["step"] = report.step;
  object["beta"] = report.params.beta;
  object["feasible"] = report.feasible;
  object["ranked"] = ordered_json::array();
  for (const SpacingCandidate& candidate : report.ranked) {
    ordered_json entry;
    entry["values"] = candidate.values;
    entry["r"] = candidate.r;
    object["ranked"].push_back(entry);
  }
  ordered_json histogram;
  histogram["spacings"] = report.histogramSpacings;
  histogram["weights"] = report.histogramWeights;
  histogram["surmise"] = report.surmiseDensity;
  object["histogram"] = histogram;
  return object;
}

ordered_json fig3CellJson(const Fig3Report::Cell& cell) {
  ordered_json object;
  object["count"] = cell.count;
  object["target_sum"] = cell.targetSum;
  object["feasible"] = cell.lab.feasible;
  object["feasible_count"] = cell.feasibleCount;
  if (cell.lab.feasible) {
    object["argmax"] = cell.lab.ranked.front().values;
    object["r"] = cell.lab.ranked.front().r;
    object["all_equal"] = cell.argmaxAllEqual;
    object["skewed_small"] = cell.skewedTowardSmall;
    ordered_json histogram;
    histogram["spacings"] = cell.lab.histogramSpacings;
    histogram["weights"] = cell.lab.histogramWeights;
    histogram["surmise"] = cell.lab.surmiseDensity;
    object["histogram"] = histogram;
  }
  return object;
}

std::string dumpDocument(const ordered_json& document) {
  return document.dump(2) + "\n";
}

void printPatternInline(std::ostream& out, const TransitionPattern& pattern) {
  out << "[";
  for (std::size_t i = 0; i < pattern.deltas.size(); ++i) {
    out << (i ? ", " : "") << pattern.deltas[i];
  }
  out << "]";
}

void printValuesInline(std::ostream& out, std::span<const double> values) {
  out << "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << (i ? ", " : "") << values[i];
  }
  out << "}";
}

/// Pattern cell for CSV rows: space-separated deltas in brackets, so the
/// field never needs quoting.
std::string csvPattern(const TransitionPattern& pattern) {
  std::string out = "[";
  for (std::size_t i = 0; i < pattern.deltas.size(); ++i) {
    if (i) {
      out += " ";
    }
    out += formatNumber(pattern.deltas[i]);
  }
  out += "]";
  return out;
}

struct Fixed3 {
  std::ostream& out;
  std::ios::fmtflags flags;
  std::streamsize precision;
  explicit Fixed3(std::ostream& stream)
      : out(stream), flags(stream.flags()), precision(stream.precision()) {
    out << std::fixed << std::setprecision(3);
  }
  ~Fixed3() {
    out.flags(flags);
    out.precision(precision);
  }
};

}  // namespace

std::string scoreReportJson(const Piece& piece, const AestheticScore& score) {
  ordered_json document = pieceJson(piece);
  const ordered_json scored = scoreJson(score);
  document["levels"] = scored["levels"];
  document["m"] = scored["m"];
  return dumpDocument(document);
}

std::string decompositionReportJson(const Piece& piece,
                                    const Decomposition& decomposition) {
  ordered_json document = pieceJson(piece);
  document["shifted"] = decomposition.shifted;
  document["transitions"] = decomposition.transitions.deltas;
  document["within_diffs"] = decomposition.withinDiffs;
  document["direction_gap"] = decomposition.directionGap;
  document["combined"] = combinedDistribution(decomposition);
  return dumpDocument(document);
}

std::string checkReportJson(const Piece& piece,
                            const Decomposition& decomposition,
                            const DistributionCheck& check,
                            std::span<const std::size_t> expectedSignature) {
  ordered_json document = pieceJson(piece);
  document["combined"] = combinedDistribution(decomposition);
  document["expected_signature"] =
      std::vector<std::size_t>(expectedSignature.begin(),
                               expectedSignature.end());
  document["matches"] = check.matches;
  document["partition"] = partitionJson(check.partition);
  return dumpDocument(document);
}

std::string permutationReportJson(const PermutationReport& report) {
  return dumpDocument(permutationJson(report));
}

std::string sweepReportJson(const SweepReport& report) {
  return dumpDocument(sweepJson(report));
}

std::string spacingLabReportJson(const SpacingLabReport& report) {
  return dumpDocument(spacingLabJson(report));
}

std::string table1ReportJson(const Table1Report& report) {
  ordered_json document;
  document["experiment"] = "table1";
  document["entropy_mode"] = modeName(report.mode);
  document["tolerance"] = report.tolerance;
  document["rows"] = ordered_json::array();
  for (const Table1Report::Row& row : report.rows) {
    ordered_json rowObject = pieceJson(row.piece);
    const ordered_json scored = scoreJson(row.score);
    rowObject["levels"] = scored["levels"];
    rowObject["m"] = row.score.m;
    rowObject["expected"] = row.expected;
    rowObject["pass"] = row.pass;
    document["rows"].push_back(rowObject);
  }
  document["claims"] = claimsJson(report.claims);
  return dumpDocument(document);
}

std::string permutationClaimsReportJson(
    const PermutationClaimsReport& report) {
  ordered_json document;
  document["experiment"] = "permutation-claims";
  document["runs"] = ordered_json::array();
  for (const PermutationReport& run : report.runs) {
    document["runs"].push_back(permutationJson(run));
  }
  document["claims"] = claimsJson(report.claims);
  return dumpDocument(document);
}

std::string energySweepsReportJson(const EnergySweepsReport& report) {
  ordered_json document;
  document["experiment"] = "energy-sweeps";
  document["levels"] = ordered_json::array();
  for (const EnergySweepsReport::LevelRun& run : report.levels) {
    ordered_json levelObject;
    levelObject["level"] = run.level;
    levelObject["expected_winners"] = ordered_json::array();
    for (const TransitionPattern& winner : run.expectedWinners) {
      levelObject["expected_winners"].push_back(winner.deltas);
    }
    levelObject["expected_winner_ranks"] = ordered_json::array();
    for (const auto& rank : run.expectedWinnerRanks) {
      if (rank) {
        levelObject["expected_winner_ranks"].push_back(*rank);
      } else {
        levelObject["expected_winner_ranks"].push_back(nullptr);
      }
    }
    levelObject["outranking"] = run.outrankingIndices;
    levelObject["sweep"] = sweepJson(run.sweep);
    document["levels"].push_back(levelObject);
  }
  document["claims"] = claimsJson(report.claims);
  return dumpDocument(document);
}

std::string fig3ReportJson(const Fig3Report& report) {
  ordered_json document;
  document["experiment"] = "fig3";
  document["step"] = report.step;
  document["cells"] = ordered_json::array();
  for (const Fig3Report::Cell& cell : report.cells) {
    document["cells"].push_back(fig3CellJson(cell));
  }
  document["claims"] = claimsJson(report.claims);
  return dumpDocument(document);
}

std::string wrapResultsJson(const std::string& command,
                            std::span<const std::string> documents) {
  ordered_json wrapper;
  wrapper["command"] = command;
  wrapper["results"] = ordered_json::array();
  for (const std::string& document : documents) {
    wrapper["results"].push_back(ordered_json::parse(document));
  }
  return dumpDocument(wrapper);
}

void printScoreReport(std::ostream& out, const Piece& piece,
                      const AestheticScore& score) {
  Fixed3 guard(out);
  out << piece.label << " ";
  printValuesInline(out, piece.frequencies);
  out << "\n";
  out << "  level         entropy        energy    ratio\n";
  const auto printLevel = [&](const char* name, const LevelScore& level) {
    out << "  " << std::left << std::setw(12) << name << std::right
        << std::setw(13) << level.entropy << std::setw(14) << level.energy
        << std::setw(9) << level.ratio << "\n";
  };
  printLevel("shifted", score.shifted);
  printLevel("transitions", score.transitions);
  printLevel("within", score.withinDiffs);
  out << "  M = " << score.m << "\n";
}

void printDecompositionReport(std::ostream& out, const Piece& piece,
                              const Decomposition& decomposition) {
  Fixed3 guard(out);
  out << piece.label << " ";
  printValuesInline(out, piece.frequencies);
  out << "\n";
  out << "  shifted      ";
  printValuesInline(out, decomposition.shifted);
  out << "\n  transitions  ";
  printValuesInline(out, decomposition.transitions.deltas);
  out << "\n  within       ";
  printValuesInline(out, decomposition.withinDiffs);
  out << "\n  gap          " << decomposition.directionGap;
  out << "\n  combined     ";
  printValuesInline(out, combinedDistribution(decomposition));
  out << "\n";
}

void printCheckReport(std::ostream& out, const Piece& piece,
                      const DistributionCheck& check,
                      std::span<const std::size_t> expectedSignature) {
  Fixed3 guard(out);
  out << piece.label << ": signature (";
  for (std::size_t i = 0; i < check.partition.signature.size(); ++i) {
    out << (i ? "," : "") << check.partition.signature[i];
  }
  out << ") vs expected (";
  for (std::size_t i = 0; i < expectedSignature.size(); ++i) {
    out << (i ? "," : "") << expectedSignature[i];
  }
  out << "): " << (check.matches ? "match" : "mismatch") << "\n";
  out << "  clusters ";
  for (const auto& cluster : check.partition.clusters) {
    printValuesInline(out, cluster);
    out << " ";
  }
  out << "\n  wcss " << check.partition.wcss << "\n";
}

void printPermutationReport(std::ostream& out,
                            const PermutationReport& report) {
  Fixed3 guard(out);
  out << report.original.label << " ";
  printValuesInline(out, report.original.frequencies);
  out << "\n";
  out << "  arrangement        passed  l1-ratio        M   rank\n";
  for (std::size_t i = 0; i < report.candidates.size(); ++i) {
    const CandidateReport& candidate = report.candidates[i];
    std::ostringstream patternText;
    printPatternInline(patternText, candidate.pattern);
    out << "  " << std::left << std::setw(18) << patternText.str()
        << std::right << (candidate.passedFilter ? "    yes" : "     no");
    if (candidate.score) {
      out << std::setw(10) << candidate.score->shifted.ratio << std::setw(9)
          << candidate.score->m;
    } else {
      out << std::setw(10) << "-" << std::setw(9) << "-";
    }
    if (candidate.rank) {
      out << std::setw(7) << *candidate.rank;
    } else {
      out << std::setw(7) << "-";
    }
    if (i == report.originalIndex) {
      out << "  (original)";
    }
    out << "\n";
  }
  out << "  original attains max passing l1-ratio: "
      << (report.originalAttainsMax ? "yes" : "no") << " (max "
      << report.maxPassingL1Ratio << ")\n";
}

void printSweepReport(std::ostream& out, const SweepReport& report) {
  Fixed3 guard(out);
  out << "sweep level " << report.config.targetLevel.value << " (length "
      << report.config.length << ", step " << report.config.step << ", max "
      << report.config.maxMagnitude << ", start "
      << report.config.startFrequency << ")\n";
  out << "  candidates " << report.candidates.size() << ", passing "
      << report.passingOrder.size() << "\n";
  for (std::size_t index : report.passingOrder) {
    const CandidateReport& candidate = report.candidates[index];
    out << "  " << std::setw(4) << *candidate.rank << "  ";
    std::ostringstream patternText;
    printPatternInline(patternText, candidate.pattern);
    out << std::left << std::setw(20) << patternText.str() << std::right
        << "M " << candidate.score->m << "\n";
  }
  std::size_t discarded = 0;
  std::size_t filtered = 0;
  for (const CandidateReport& candidate : report.candidates) {
    if (!candidate.piece) {
      ++discarded;
    } else if (!candidate.passedFilter) {
      ++filtered;
    }
  }
  out << "  discarded " << discarded << " (positivity), filtered out "
      << filtered << " (signature)\n";
}

void printSpacingLabReport(std::ostream& out, const SpacingLabReport& report) {
  Fixed3 guard(out);
  out << "spacing lab: " << report.count << " spacing(s) summing to "
      << report.targetSum << ", step " << report.step << ", beta "
      << report.params.beta << "\n";
  if (!report.feasible) {
    out << "  no feasible multiset\n";
    return;
  }
  for (std::size_t i = 0; i < report.ranked.size(); ++i) {
    out << "  " << std::setw(4) << i + 1 << "  ";
    printValuesInline(out, report.ranked[i].values);
    out << "  R " << report.ranked[i].r << "\n";
  }
  out << "  winner histogram (spacing/mean, weight, surmise):\n";
  for (std::size_t i = 0; i < report.histogramSpacings.size(); ++i) {
    out << "    " << report.histogramSpacings[i] << "  "
        << report.histogramWeights[i] << "  " << report.surmiseDensity[i]
        << "\n";
  }
}

namespace {

void printClaims(std::ostream& out, const std::vector<ClaimResult>& claims) {
  std::size_t passed = 0;
  for (const ClaimResult& claim : claims) {
    if (claim.pass) {
      ++passed;
    }
  }
  out << "claims: " << passed << "/" << claims.size() << " pass\n";
  for (const ClaimResult& claim : claims) {
    out << "  [" << (claim.pass ? "pass" : "FAIL") << "] " << claim.id << ": "
        << claim.claim << " (" << claim.citation << ")";
    if (claim.expected && claim.computed) {
      Fixed3 guard(out);
      out << " expected " << *claim.expected << ", computed "
          << *claim.computed;
    }
    if (!claim.detail.empty()) {
      out << " - " << claim.detail;
    }
    out << "\n";
  }
}

}  // namespace

void printTable1Report(std::ostream& out, const Table1Report& report) {
  {
    Fixed3 guard(out);
    out << "reference pieces (entropy mode " << modeName(report.mode)
        << ", tolerance " << report.tolerance << ")\n";
    out << "  piece     computed M   expected   verdict\n";
    for (const Table1Report::Row& row : report.rows) {
      out << "  " << std::left << std::setw(8) << row.piece.label
          << std::right << std::setw(12) << row.score.m << std::setw(11)
          << row.expected << (row.pass ? "      pass" : "      FAIL") << "\n";
    }
  }
  printClaims(out, report.claims);
}

void printPermutationClaimsReport(std::ostream& out,
                                  const PermutationClaimsReport& report) {
  for (const PermutationReport& run : report.runs) {
    printPermutationReport(out, run);
  }
  printClaims(out, report.claims);
}

void printEnergySweepsReport(std::ostream& out,
                             const EnergySweepsReport& report) {
  {
    Fixed3 guard(out);
    for (const EnergySweepsReport::LevelRun& run : report.levels) {
      out << "level " << run.level << ": " << run.sweep.candidates.size()
          << " candidates, " << run.sweep.passingOrder.size()
          << " passing\n";
      for (std::size_t i = 0; i < run.expectedWinners.size(); ++i) {
        out << "  expected winner ";
        printPatternInline(out, run.expectedWinners[i]);
        if (run.expectedWinnerRanks[i]) {
          out << " -> rank " << *run.expectedWinnerRanks[i] << "\n";
        } else {
          out << " -> failed the filter\n";
        }
      }
      if (!run.outrankingIndices.empty()) {
        out << "  outranked by " << run.outrankingIndices.size()
            << " candidate(s):\n";
        for (std::size_t index : run.outrankingIndices) {
          const CandidateReport& candidate = run.sweep.candidates[index];
          out << "    rank " << *candidate.rank << "  ";
          printPatternInline(out, candidate.pattern);
          out << "  M " << candidate.score->m << "\n";
        }
      }
    }
  }
  printClaims(out, report.claims);
}

void printFig3Report(std::ostream& out, const Fig3Report& report) {
  {
    Fixed3 guard(out);
    out << "spacing-ratio grid (step " << report.step << ")\n";
    for (const Fig3Report::Cell& cell : report.cells) {
      if (!cell.lab.feasible) {
        continue;
      }
      out << "  n " << cell.count << ", sum " << cell.targetSum << ": argmax ";
      printValuesInline(out, cell.lab.ranked.front().values);
      out << ", R " << cell.lab.ranked.front().r << ", "
          << cell.feasibleCount << " feasible"
          << (cell.argmaxAllEqual ? ", all-equal (forced)" : "") << "\n";
    }
  }
  printClaims(out, report.claims);
}

void writeValuesCsv(std::ostream& out, std::span<const double> values) {
  out << "value\n";
  for (double value : values) {
    out << formatNumber(value) << "\n";
  }
}

void writeSweepCsv(std::ostream& out, const SweepReport& report) {
  out << "pattern,M,passed,rank\n";
  for (const CandidateReport& candidate : report.candidates) {
    out << csvPattern(candidate.pattern) << ",";
    if (candidate.score) {
      out << formatNumber(candidate.score->m);
    }
    out << "," << (candidate.passedFilter ? "true" : "false") << ",";
    if (candidate.rank) {
      out << *candidate.rank;
    }
    out << "\n";
  }
}

}  // namespace melscore
