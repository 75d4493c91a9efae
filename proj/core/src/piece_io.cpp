/**
 * @file piece_io.cpp
 */
#include "melscore/piece_io.h"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "melscore/errors.h"

namespace melscore {
namespace {

using ordered_json = nlohmann::ordered_json;

double parseNumber(std::string_view text, std::size_t line,
                   std::size_t field) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [parsed, errc] = std::from_chars(begin, end, value);
  if (errc != std::errc{} || parsed != end) {
    std::ostringstream message;
    message << "line " << line << ", field " << field << ": '" << text
            << "' is not a number";
    throw ParseError(message.str());
  }
  return value;
}

std::string_view trimmed(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t' ||
                           text.front() == '\r')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\r')) {
    text.remove_suffix(1);
  }
  return text;
}

PieceFile parseDelimitedLine(std::string_view lineText, std::size_t line,
                             bool midiNumbers) {
  PieceFile record;
  std::size_t field = 1;
  std::size_t begin = 0;
  bool first = true;
  std::vector<double> numbers;
  while (begin <= lineText.size()) {
    const std::size_t comma = lineText.find(',', begin);
    const std::string_view cell = trimmed(
        lineText.substr(begin, comma == std::string_view::npos
                                   ? std::string_view::npos
                                   : comma - begin));
    if (first) {
      if (cell.empty()) {
        std::ostringstream message;
        message << "line " << line << ", field 1: empty label";
        throw ParseError(message.str());
      }
      record.label = std::string(cell);
      first = false;
    } else {
      numbers.push_back(parseNumber(cell, line, field));
    }
    if (comma == std::string_view::npos) {
      break;
    }
    begin = comma + 1;
    ++field;
  }
  if (numbers.empty()) {
    std::ostringstream message;
    message << "line " << line << ": record '" << record.label
            << "' has no notes";
    throw ParseError(message.str());
  }
  if (midiNumbers) {
    std::vector<int> notes;
    notes.reserve(numbers.size());
    for (std::size_t i = 0; i < numbers.size(); ++i) {
      const int note = static_cast<int>(std::llround(numbers[i]));
      if (static_cast<double>(note) != numbers[i]) {
        std::ostringstream message;
        message << "line " << line << ", field " << i + 2 << ": '"
                << numbers[i] << "' is not an integer note number";
        throw ParseError(message.str());
      }
      notes.push_back(note);
    }
    record.midiNotes = std::move(notes);
  } else {
    record.frequencies = std::move(numbers);
  }
  return record;
}

PieceFile parseStructuredObject(const ordered_json& object,
                                const std::string& path) {
  if (!object.is_object()) {
    throw ParseError(path + ": expected an object");
  }
  PieceFile record;
  if (!object.contains("label") || !object["label"].is_string()) {
    throw ParseError(path + ": missing string field 'label'");
  }
  record.label = object["label"].get<std::string>();
  const bool hasFrequencies = object.contains("frequencies");
  const bool hasMidi = object.contains("midi_notes");
  if (hasFrequencies == hasMidi) {
    throw ParseError(path + ": exactly one of 'frequencies'/'midi_notes' " +
                     (hasFrequencies ? "may" : "must") + " be present");
  }
  const char* key = hasFrequencies ? "frequencies" : "midi_notes";
  const ordered_json& list = object[key];
  if (!list.is_array() || list.empty()) {
    throw ParseError(path + "." + key + ": expected a non-empty array");
  }
  if (hasFrequencies) {
    std::vector<double> frequencies;
    frequencies.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (!list[i].is_number()) {
        std::ostringstream message;
        message << path << "." << key << "[" << i << "]: expected a number";
        throw ParseError(message.str());
      }
      frequencies.push_back(list[i].get<double>());
    }
    record.frequencies = std::move(frequencies);
  } else {
    std::vector<int> notes;
    notes.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (!list[i].is_number_integer()) {
        std::ostringstream message;
        message << path << "." << key << "[" << i
                << "]: expected an integer note number";
        throw ParseError(message.str());
      }
      notes.push_back(list[i].get<int>());
    }
    record.midiNotes = std::move(notes);
  }
  return record;
}

ordered_json toStructuredObject(const PieceFile& record) {
  ordered_json object;
  object["label"] = record.label;
  if (record.frequencies) {
    object["frequencies"] = *record.frequencies;
  } else if (record.midiNotes) {
    object["midi_notes"] = *record.midiNotes;
  }
  return object;
}

/// Shortest round-trip decimal form, matching JSON number output.
std::string formatNumber(double value) {
  return ordered_json(value).dump();
}

}  // namespace

std::vector<PieceFile> parsePieceFiles(std::string_view document,
                                       PieceFormat format, bool midiNumbers) {
  std::vector<PieceFile> records;
  if (format == PieceFormat::kDelimited) {
    std::size_t line = 1;
    std::size_t begin = 0;
    while (begin <= document.size()) {
      const std::size_t newline = document.find('\n', begin);
      const std::string_view lineText = document.substr(
          begin, newline == std::string_view::npos ? std::string_view::npos
                                                   : newline - begin);
      if (!trimmed(lineText).empty()) {
        records.push_back(parseDelimitedLine(lineText, line, midiNumbers));
      }
      if (newline == std::string_view::npos) {
        break;
      }
      begin = newline + 1;
      ++line;
    }
    if (records.empty()) {
      throw ParseError("document contains no records");
    }
    return records;
  }

  ordered_json parsed;
  try {
    parsed = ordered_json::parse(document);
  } catch (const ordered_json::parse_error& error) {
    throw ParseError(std::string("invalid document: ") + error.what());
  }
  if (parsed.is_array()) {
    if (parsed.empty()) {
      throw ParseError("document contains no records");
    }
    for (std::size_t i = 0; i < parsed.size(); ++i) {
      std::ostringstream path;
      path << "$[" << i << "]";
      records.push_back(parseStructuredObject(parsed[i], path.str()));
    }
  } else {
    records.push_back(parseStructuredObject(parsed, "$"));
  }
  return records;
}

std::string serializePieceFiles(const std::vector<PieceFile>& records,
                                PieceFormat format) {
  if (format == PieceFormat::kStructured) {
    ordered_json document;
    if (records.size() == 1) {
      document = toStructuredObject(records.front());
    } else {
      document = ordered_json::array();
      for (const PieceFile& record : records) {
        document.push_back(toStructuredObject(record));
      }
    }
    return document.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const PieceFile& record : records) {
    out << record.label;
    if (record.frequencies) {
      for (double value : *record.frequencies) {
        out << "," << formatNumber(value);
      }
    } else if (record.midiNotes) {
      for (int note : *record.midiNotes) {
        out << "," << note;
      }
    }
    out << "\n";
  }
  return out.str();
}

double midiToFrequency(int note) {
  if (note < 0 || note > 127) {
    std::ostringstream message;
    message << "note number " << note << " is outside 0..127";
    throw ValidationError(message.str());
  }
  return 440.0 * std::exp2(static_cast<double>(note - 69) / 12.0);
}

Piece toPiece(const PieceFile& record) {
  Piece piece;
  piece.label = record.label;
  if (record.frequencies) {
    piece.frequencies = *record.frequencies;
  } else if (record.midiNotes) {
    piece.frequencies.reserve(record.midiNotes->size());
    for (int note : *record.midiNotes) {
      piece.frequencies.push_back(midiToFrequency(note));
    }
  } else {
    throw ValidationError("piece record '" + record.label +
                          "' carries no notes");
  }
  validatePiece(piece);
  return piece;
}

int registerShift(const Piece& piece, const RegisterPolicy& policy) {
  if (!policy.enabled) {
    return 0;
  }
  if (!(policy.lowHz > 0.0) || !(policy.lowHz < policy.highHz)) {
    std::ostringstream message;
    message << "register band [" << policy.lowHz << ", " << policy.highHz
            << "] is not a valid positive range";
    throw ValidationError(message.str());
  }
  // Unlike the derived levels, the register shift is defined for any
  // non-empty positive piece, including a single note.
  if (piece.frequencies.empty()) {
    throw ValidationError("piece '" + piece.label + "' has no notes");
  }
  double logSum = 0.0;
  for (double frequency : piece.frequencies) {
    if (!(frequency > 0.0)) {
      std::ostringstream message;
      message << "piece";
      if (!piece.label.empty()) {
        message << " '" << piece.label << "'";
      }
      message << " has a non-positive frequency " << frequency;
      throw ValidationError(message.str());
    }
    logSum += std::log2(frequency);
  }
  const double logMean = logSum / static_cast<double>(piece.frequencies.size());
  const double logLow = std::log2(policy.lowHz);
  const double logHigh = std::log2(policy.highHz);
  if (logMean >= logLow && logMean <= logHigh) {
    return 0;
  }
  // Aim the geometric mean at the band's geometric centre; if the nearest
  // octave shift misses the band, no octave shift can reach it.
  const double logCentre = 0.5 * (logLow + logHigh);
  const int shift = static_cast<int>(std::lround(logCentre - logMean));
  const double shifted = logMean + static_cast<double>(shift);
  if (shifted < logLow || shifted > logHigh) {
    std::ostringstream message;
    message << "piece";
    if (!piece.label.empty()) {
      message << " '" << piece.label << "'";
    }
    message << " cannot reach the register band [" << policy.lowHz << ", "
            << policy.highHz << "] by octave shifts";
    throw ValidationError(message.str());
  }
  return shift;
}

Piece normalizeRegister(const Piece& piece, const RegisterPolicy& policy) {
  const int shift = registerShift(piece, policy);
  if (shift == 0) {
    return piece;
  }
  Piece scaled;
  scaled.label = piece.label;
  const double factor = std::exp2(static_cast<double>(shift));
  scaled.frequencies.reserve(piece.frequencies.size());
  for (double frequency : piece.frequencies) {
    scaled.frequencies.push_back(frequency * factor);
  }
  return scaled;
}

}  // namespace melscore
