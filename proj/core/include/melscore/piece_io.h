/**
 * @file piece_io.h
 * Piece ingestion: structured and delimited text formats, MIDI note-number
 * conversion, and voice-register normalization.
 */
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "melscore/piece.h"

namespace melscore {

/// On-disk piece representations.
enum class PieceFormat {
  kStructured,  ///< JSON object/array with "label" and one note-list field.
  kDelimited,   ///< one record per line: label, then comma-separated numbers.
};

/// A parsed piece record before conversion: exactly one of frequencies /
/// midiNotes is present.
struct PieceFile {
  std::string label;
  std::optional<std::vector<double>> frequencies;
  std::optional<std::vector<int>> midiNotes;
};

/// Octave-only register normalization policy.
struct RegisterPolicy {
  double lowHz = 100.0;
  double highHz = 300.0;
  bool enabled = true;
};

/// Parses every record in the document. Structured documents hold a single
/// object or an array of objects; delimited documents hold one record per
/// non-empty line. `midiNumbers` selects how delimited numbers are read
/// (structured records name their own field). Throws ParseError with the
/// offending line/field or JSON path.
std::vector<PieceFile> parsePieceFiles(std::string_view document,
                                       PieceFormat format,
                                       bool midiNumbers = false);

/// Serializes records in the given format; parse(serialize(x)) == x and the
/// serialization is byte-stable.
std::string serializePieceFiles(const std::vector<PieceFile>& records,
                                PieceFormat format);

/// Equal-tempered conversion: 440 * 2^((note - 69) / 12).
/// Throws ValidationError unless 0 <= note <= 127.
double midiToFrequency(int note);

/// Converts a record into a validated Piece (MIDI notes become frequencies).
Piece toPiece(const PieceFile& record);

/// Scales all frequencies by a single power of two so the geometric mean
/// lands inside the policy band; identity when already inside or when the
/// policy is disabled. Throws ValidationError (naming the piece) when no
/// octave shift can reach the band.
Piece normalizeRegister(const Piece& piece, const RegisterPolicy& policy);

/// The octave shift normalizeRegister would apply.
int registerShift(const Piece& piece, const RegisterPolicy& policy);

}  // namespace melscore
