/**
 * @file report_io.h
 * Report rendering: stable machine-readable JSON, human-readable text, and
 * CSV figure data.
 *
 * JSON output is deterministic (insertion-ordered fields, shortest
 * round-trip number formatting) so repeated runs are byte-identical. Human
 * output prints three decimal places; machine output keeps full precision.
 */
#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "melscore/distribution.h"
#include "melscore/experiments.h"
#include "melscore/measure.h"
#include "melscore/piece.h"
#include "melscore/search.h"

namespace melscore {

// --- machine-readable JSON (one document per call, trailing newline) ---

std::string scoreReportJson(const Piece& piece, const AestheticScore& score);
std::string decompositionReportJson(const Piece& piece,
                                    const Decomposition& decomposition);
std::string checkReportJson(const Piece& piece,
                            const Decomposition& decomposition,
                            const DistributionCheck& check,
                            std::span<const std::size_t> expectedSignature);
std::string permutationReportJson(const PermutationReport& report);
std::string sweepReportJson(const SweepReport& report);
std::string spacingLabReportJson(const SpacingLabReport& report);
std::string table1ReportJson(const Table1Report& report);
std::string permutationClaimsReportJson(const PermutationClaimsReport& report);
std::string energySweepsReportJson(const EnergySweepsReport& report);
std::string fig3ReportJson(const Fig3Report& report);

/// Wraps per-piece JSON documents into one top-level document:
/// {"command": <command>, "results": [...]}.
std::string wrapResultsJson(const std::string& command,
                            std::span<const std::string> documents);

// --- human-readable text ---

void printScoreReport(std::ostream& out, const Piece& piece,
                      const AestheticScore& score);
void printDecompositionReport(std::ostream& out, const Piece& piece,
                              const Decomposition& decomposition);
void printCheckReport(std::ostream& out, const Piece& piece,
                      const DistributionCheck& check,
                      std::span<const std::size_t> expectedSignature);
void printPermutationReport(std::ostream& out, const PermutationReport& report);
void printSweepReport(std::ostream& out, const SweepReport& report);
void printSpacingLabReport(std::ostream& out, const SpacingLabReport& report);
void printTable1Report(std::ostream& out, const Table1Report& report);
void printPermutationClaimsReport(std::ostream& out,
                                  const PermutationClaimsReport& report);
void printEnergySweepsReport(std::ostream& out,
                             const EnergySweepsReport& report);
void printFig3Report(std::ostream& out, const Fig3Report& report);

// --- CSV figure data ---

/// Header row "value", then one value per row (full precision).
void writeValuesCsv(std::ostream& out, std::span<const double> values);

/// Header row "pattern,M,passed,rank"; patterns render as space-separated
/// deltas in brackets so no field needs quoting. Discarded candidates have
/// an empty M; only passing candidates have a rank.
void writeSweepCsv(std::ostream& out, const SweepReport& report);

}  // namespace melscore
