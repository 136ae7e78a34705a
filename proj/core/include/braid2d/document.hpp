#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "braid2d/monodromy_tuple.hpp"

namespace braid2d {

// On-disk form of one tuple.
//
// Text grammar (version 1):
//
//   degree <m>
//   [label <free text>]
//   band (<l1>,<l2>,...) <index> <+1|-1>
//   ...
//
// Blank lines and lines starting with '#' are ignored. The structured form is
// a JSON object {"format": "braid2d-tuple", "version": 1, "degree": m,
// "label": "...", "entries": [{"conjugator": [...], "index": i,
// "exponent": e}, ...]}.
struct TupleDocument {
  static constexpr int kVersion = 1;

  int version = kVersion;
  std::size_t degree = 1;
  std::vector<EntrySpec> entries;
  std::string label;
  // Source line of each entry, 0 when unknown.
  std::vector<std::size_t> entry_lines;
};

// Throws Error(Parse) with the offending line.
TupleDocument parse_text_document(const std::string& text);
TupleDocument parse_json_document(const nlohmann::json& j);
// Dispatches on the first non-blank character: '{' selects JSON.
TupleDocument parse_document(const std::string& text);

std::string to_text(const TupleDocument& doc);
nlohmann::json to_json(const TupleDocument& doc);

// Validation errors are rethrown with "line N" context when known.
MonodromyTuple to_tuple(const TupleDocument& doc);
TupleDocument to_document(const MonodromyTuple& t, std::string label = {});

// Signed integers separated by whitespace and/or commas.
BraidWord parse_braid_word(std::size_t degree, const std::string& text);

}  // namespace braid2d
