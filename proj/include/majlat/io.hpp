#pragma once

// Input documents for the command-line front end.
//
// JSON: {"d": 4, "vectors": [["0.6", "0.16", "0.16", "0.08"], ...]}, with
// entries as decimal strings (numbers are accepted and converted through
// their shortest decimal form). A result document written by majlat is also
// accepted; its "result" vector is read back. Target states for the ocr
// command may be given as
//   "states": [{"amplitudes": [["re", "im"], ...]}, {"schmidt": [...]},
//              {"spectrum": [...]}]
// CSV: one vector per row, comma separated.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "majlat/core.hpp"
#include "majlat/qrt.hpp"

namespace majlat {

struct StateRecord {
  enum class Kind { Amplitudes, Schmidt, Spectrum };
  Kind kind = Kind::Spectrum;
  std::vector<std::pair<std::string, std::string>> amplitudes;  // (re, im)
  std::vector<std::string> probabilities;
};

struct InputDocument {
  std::optional<std::size_t> d;
  std::vector<std::vector<std::string>> vectors;
  std::vector<StateRecord> states;
};

// Errors: ParseError.
InputDocument parse_json_input(std::string_view text);
InputDocument parse_csv_input(std::string_view text);

// Reads a file; ".csv" files (or content not starting with '{') are CSV.
// Errors: IoError, ParseError.
InputDocument read_input(const std::string& path);

// Comma-separated scalars, e.g. "0.525,0.35,0.125". Errors: ParseError.
template <class T>
std::vector<T> parse_scalar_list(std::string_view text);

// Errors: DimensionMismatch when "d" disagrees with a vector's length, plus
// ProbVector::make errors.
template <class T>
std::vector<ProbVector<T>> build_vectors(const InputDocument& doc, MakeOptions options);

template <class T>
PureStateSpec<T> build_state(const StateRecord& record);

}  // namespace majlat
