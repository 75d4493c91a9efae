/**
 * @file cli.cpp
 */
#include "cli.h"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "melscore/errors.h"
#include "melscore/experiments.h"
#include "melscore/piece_io.h"
#include "melscore/report_io.h"

namespace melscore {
namespace {

struct GlobalOptions {
  bool json = false;
  std::string csvPath;
  std::string entropyName = "cw";
  bool midi = false;
  bool noRegisterNormalize = false;
  bool strict = false;

  EntropyMode mode() const {
    return entropyName == "shannon" ? EntropyMode::kShannon
                                    : EntropyMode::kSquaredLog;
  }
};

std::string readFile(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) {
    throw ValidationError("cannot open file '" + path + "'");
  }
  std::ostringstream content;
  content << stream.rdbuf();
  return content.str();
}

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) {
    throw ValidationError("cannot write file '" + path + "'");
  }
  stream << content;
}

/// Structured documents start with a JSON object or array; anything else is
/// treated as delimited records.
PieceFormat sniffFormat(std::string_view document) {
  for (char c : document) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      continue;
    }
    return (c == '{' || c == '[') ? PieceFormat::kStructured
                                  : PieceFormat::kDelimited;
  }
  return PieceFormat::kDelimited;
}

std::vector<Piece> loadPieces(const std::string& path,
                              const GlobalOptions& options) {
  const std::string document = readFile(path);
  const std::vector<PieceFile> records =
      parsePieceFiles(document, sniffFormat(document), options.midi);
  RegisterPolicy policy;
  policy.enabled = !options.noRegisterNormalize;
  std::vector<Piece> pieces;
  pieces.reserve(records.size());
  for (const PieceFile& record : records) {
    pieces.push_back(normalizeRegister(toPiece(record), policy));
  }
  return pieces;
}

std::vector<std::size_t> parseSignature(const std::string& text) {
  std::vector<std::size_t> signature;
  std::stringstream stream(text);
  std::string cell;
  while (std::getline(stream, cell, ',')) {
    try {
      const long value = std::stol(cell);
      if (value < 1) {
        throw ValidationError("cluster sizes must be positive, got '" + cell +
                              "'");
      }
      signature.push_back(static_cast<std::size_t>(value));
    } catch (const std::logic_error&) {
      throw ValidationError("bad signature component '" + cell + "'");
    }
  }
  if (signature.empty()) {
    throw ValidationError("signature '" + text + "' has no components");
  }
  return signature;
}

void maybeWriteValuesCsv(const GlobalOptions& options,
                         const std::vector<Piece>& pieces) {
  if (options.csvPath.empty()) {
    return;
  }
  std::vector<double> pooled;
  for (const Piece& piece : pieces) {
    const std::vector<double> values =
        combinedDistribution(decompose(piece));
    pooled.insert(pooled.end(), values.begin(), values.end());
  }
  std::ostringstream csv;
  writeValuesCsv(csv, pooled);
  writeFile(options.csvPath, csv.str());
}

std::size_t failedClaims(const std::vector<ClaimResult>& claims) {
  std::size_t failed = 0;
  for (const ClaimResult& claim : claims) {
    if (!claim.pass) {
      ++failed;
    }
  }
  return failed;
}

int runScore(const std::string& path, const GlobalOptions& options,
             std::ostream& out) {
  const std::vector<Piece> pieces = loadPieces(path, options);
  std::vector<std::string> documents;
  for (const Piece& piece : pieces) {
    const AestheticScore score = mValue(piece, options.mode());
    if (options.json) {
      documents.push_back(scoreReportJson(piece, score));
    } else {
      printScoreReport(out, piece, score);
    }
  }
  if (options.json) {
    out << wrapResultsJson("score", documents);
  }
  maybeWriteValuesCsv(options, pieces);
  return 0;
}

int runDecompose(const std::string& path, const GlobalOptions& options,
                 std::ostream& out) {
  const std::vector<Piece> pieces = loadPieces(path, options);
  std::vector<std::string> documents;
  for (const Piece& piece : pieces) {
    const Decomposition decomposition = decompose(piece);
    if (options.json) {
      documents.push_back(decompositionReportJson(piece, decomposition));
    } else {
      printDecompositionReport(out, piece, decomposition);
    }
  }
  if (options.json) {
    out << wrapResultsJson("decompose", documents);
  }
  maybeWriteValuesCsv(options, pieces);
  return 0;
}

int runCheck(const std::string& path, const std::string& signatureText,
             const GlobalOptions& options, std::ostream& out) {
  const std::vector<std::size_t> signature = parseSignature(signatureText);
  const std::vector<Piece> pieces = loadPieces(path, options);
  std::vector<std::string> documents;
  for (const Piece& piece : pieces) {
    const Decomposition decomposition = decompose(piece);
    const DistributionCheck check =
        distributionCheck(decomposition, signature);
    if (options.json) {
      documents.push_back(
          checkReportJson(piece, decomposition, check, signature));
    } else {
      printCheckReport(out, piece, check, signature);
    }
  }
  if (options.json) {
    out << wrapResultsJson("check", documents);
  }
  maybeWriteValuesCsv(options, pieces);
  return 0;
}

int runPermute(const std::string& path, const GlobalOptions& options,
               std::ostream& out) {
  const std::vector<Piece> pieces = loadPieces(path, options);
  std::vector<std::string> documents;
  bool anyDivergence = false;
  for (const Piece& piece : pieces) {
    const PermutationReport report =
        permutationExperiment(piece, kDefaultSignature, options.mode());
    anyDivergence = anyDivergence || !report.originalAttainsMax;
    if (options.json) {
      documents.push_back(permutationReportJson(report));
    } else {
      printPermutationReport(out, report);
    }
  }
  if (options.json) {
    out << wrapResultsJson("permute", documents);
  }
  maybeWriteValuesCsv(options, pieces);
  return options.strict && anyDivergence ? 2 : 0;
}

int runSweep(double level, const SearchConfig& base, unsigned threads,
             const GlobalOptions& options, std::ostream& out) {
  SearchConfig config = base;
  config.targetLevel = EnergyLevel{level};
  const SweepReport report = energySweep(config, threads, options.mode());
  if (options.json) {
    out << sweepReportJson(report);
  } else {
    printSweepReport(out, report);
  }
  if (!options.csvPath.empty()) {
    std::ostringstream csv;
    writeSweepCsv(csv, report);
    writeFile(options.csvPath, csv.str());
  }
  return 0;
}

int runTable1(const GlobalOptions& options, std::ostream& out) {
  const Table1Report report = reproduceTable1(options.mode());
  if (options.json) {
    out << table1ReportJson(report);
  } else {
    printTable1Report(out, report);
  }
  return options.strict && failedClaims(report.claims) > 0 ? 2 : 0;
}

int runSweeps(unsigned threads, const GlobalOptions& options,
              std::ostream& out) {
  const EnergySweepsReport report = reproduceEnergySweeps(threads);
  if (options.json) {
    out << energySweepsReportJson(report);
  } else {
    printEnergySweepsReport(out, report);
  }
  return options.strict && failedClaims(report.claims) > 0 ? 2 : 0;
}

int runFig3Cell(std::size_t count, double sum, int beta,
                const GlobalOptions& options, std::ostream& out) {
  const SpacingLabReport report =
      spacingLab(count, sum, 5.0, SurmiseParams{beta});
  if (options.json) {
    out << spacingLabReportJson(report);
  } else {
    printSpacingLabReport(out, report);
  }
  if (!options.csvPath.empty()) {
    std::ostringstream csv;
    writeValuesCsv(csv, report.feasible ? report.ranked.front().values
                                        : std::vector<double>{});
    writeFile(options.csvPath, csv.str());
  }
  return 0;
}

int runFig3Grid(int beta, const GlobalOptions& options, std::ostream& out) {
  const Fig3Report report = reproduceFig3(5, 60.0, 5.0, SurmiseParams{beta});
  if (options.json) {
    out << fig3ReportJson(report);
  } else {
    printFig3Report(out, report);
  }
  return options.strict && failedClaims(report.claims) > 0 ? 2 : 0;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"melscore: entropy-energy scoring and distribution analysis "
               "of short melodic pieces"};
  app.require_subcommand(1);
  // Let global flags (--json, --strict, ...) appear after the subcommand.
  app.fallthrough();

  GlobalOptions options;
  app.add_flag("--json", options.json, "machine-readable JSON output");
  app.add_option("--csv", options.csvPath,
                 "write histogram/figure data to this CSV file");
  app.add_option("--entropy", options.entropyName,
                 "entropy convention: cw (calibrated default) or shannon")
      ->check(CLI::IsMember({"cw", "shannon"}));
  app.add_flag("--midi", options.midi,
               "treat delimited note lists as MIDI note numbers");
  app.add_flag("--no-register-normalize", options.noRegisterNormalize,
               "skip octave normalization into the vocal band");
  app.add_flag("--strict", options.strict,
               "exit with code 2 when an experiment claim diverges");

  std::string scorePath;
  CLI::App* score = app.add_subcommand(
      "score", "per-level entropy/energy/ratio and M for each piece");
  score->add_option("file", scorePath, "piece file")->required();

  std::string decomposePath;
  CLI::App* decomposeCommand = app.add_subcommand(
      "decompose", "shifted level, transitions, within-direction "
                   "differences, and direction gap");
  decomposeCommand->add_option("file", decomposePath, "piece file")
      ->required();

  std::string checkPath;
  std::string checkSignature = "2,3,1";
  CLI::App* check = app.add_subcommand(
      "check", "cluster-signature check of the combined distribution");
  check->add_option("file", checkPath, "piece file")->required();
  check->add_option("--signature", checkSignature,
                    "expected cluster sizes, comma separated");

  std::string permutePath;
  CLI::App* permute = app.add_subcommand(
      "permute", "evaluate every arrangement of each piece's transitions");
  permute->add_option("file", permutePath, "piece file")->required();

  double sweepLevel = 0.0;
  SearchConfig sweepConfig;
  unsigned sweepThreads = 1;
  std::string sweepSignature = "2,3,1";
  CLI::App* sweep = app.add_subcommand(
      "sweep", "enumerate, filter, and rank all patterns at one energy level");
  sweep->add_option("--level", sweepLevel, "target energy level")->required();
  sweep->add_option("--length", sweepConfig.length,
                    "transitions per pattern (default 3)");
  sweep->add_option("--step", sweepConfig.step, "grid step (default 5)");
  sweep->add_option("--max", sweepConfig.maxMagnitude,
                    "largest |delta| (default 40)");
  sweep->add_option("--start", sweepConfig.startFrequency,
                    "realization start frequency (default 120)");
  sweep->add_option("--signature", sweepSignature,
                    "expected cluster sizes, comma separated");
  sweep->add_option("--threads", sweepThreads,
                    "worker threads (output is thread-count independent)");

  CLI::App* table1 = app.add_subcommand(
      "table1", "score the reference pieces against their published M values");

  unsigned sweepsThreads = 1;
  CLI::App* sweeps = app.add_subcommand(
      "sweeps", "reproduce the energy-level sweeps at levels 25/45/60/75");
  sweeps->add_option("--threads", sweepsThreads,
                     "worker threads (output is thread-count independent)");

  std::size_t fig3Count = 0;
  double fig3Sum = 0.0;
  int fig3Beta = 2;
  CLI::App* fig3 = app.add_subcommand(
      "fig3", "spacing-ratio lab: ranked multisets vs the surmise reference");
  CLI::Option* countOption =
      fig3->add_option("--count", fig3Count, "number of spacings");
  CLI::Option* sumOption =
      fig3->add_option("--sum", fig3Sum, "target spacing sum");
  countOption->needs(sumOption);
  sumOption->needs(countOption);
  fig3->add_option("--beta", fig3Beta, "surmise ensemble (1, 2, or 4)");

  try {
    // CLI11's vector overload consumes arguments from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (score->parsed()) {
      return runScore(scorePath, options, out);
    }
    if (decomposeCommand->parsed()) {
      return runDecompose(decomposePath, options, out);
    }
    if (check->parsed()) {
      return runCheck(checkPath, checkSignature, options, out);
    }
    if (permute->parsed()) {
      return runPermute(permutePath, options, out);
    }
    if (sweep->parsed()) {
      sweepConfig.signature = parseSignature(sweepSignature);
      return runSweep(sweepLevel, sweepConfig, sweepThreads, options, out);
    }
    if (table1->parsed()) {
      return runTable1(options, out);
    }
    if (sweeps->parsed()) {
      return runSweeps(sweepsThreads, options, out);
    }
    if (fig3->parsed()) {
      if (countOption->count() > 0) {
        return runFig3Cell(fig3Count, fig3Sum, fig3Beta, options, out);
      }
      return runFig3Grid(fig3Beta, options, out);
    }
  } catch (const ValidationError& error) {
    err << "error: " << error.what() << "\n";
    return 1;
  } catch (const ParseError& error) {
    err << "error: " << error.what() << "\n";
    return 1;
  }
  err << "error: no subcommand selected\n";
  return 1;
}

}  // namespace melscore
