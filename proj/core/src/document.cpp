#include "braid2d/document.hpp"

#include <cctype>
#include <sstream>

#include "braid2d/error.hpp"

namespace braid2d {

namespace {

constexpr const char* kFormatName = "braid2d-tuple";

Error parse_error(std::size_t line, const std::string& what) {
  return Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Strict signed decimal integer; std::nullopt on anything else.
std::optional<long> to_integer(const std::string& token) {
  if (token.empty()) return std::nullopt;
  std::size_t start = token[0] == '+' || token[0] == '-' ? 1 : 0;
  if (start == token.size() || token.size() - start > 9) return std::nullopt;
  for (std::size_t t = start; t < token.size(); ++t) {
    if (!std::isdigit(static_cast<unsigned char>(token[t]))) return std::nullopt;
  }
  return std::stol(token);
}

std::vector<int> parse_letters(const std::string& body, std::size_t line) {
  std::vector<int> letters;
  std::string token;
  std::istringstream is(body);
  while (std::getline(is, token, ',')) {
    const std::string t = trim(token);
    const auto value = to_integer(t);
    if (!value) throw parse_error(line, "bad conjugator letter '" + t + "'");
    letters.push_back(static_cast<int>(*value));
  }
  if (!body.empty() && body.back() == ',') throw parse_error(line, "trailing comma in conjugator");
  return letters;
}

}  // namespace

TupleDocument parse_text_document(const std::string& text) {
  TupleDocument doc;
  bool have_degree = false;
  std::istringstream is(text);
  std::string raw;
  for (std::size_t line = 1; std::getline(is, raw); ++line) {
    const std::string content = trim(raw);
    if (content.empty() || content[0] == '#') continue;
    std::istringstream fields(content);
    std::string head;
    fields >> head;
    if (!have_degree) {
      std::string value;
      std::string extra;
      if (head != "degree" || !(fields >> value) || (fields >> extra)) {
        throw parse_error(line, "expected 'degree <m>'");
      }
      const auto m = to_integer(value);
      if (!m || *m < 1) throw parse_error(line, "degree must be a positive integer");
      doc.degree = static_cast<std::size_t>(*m);
      have_degree = true;
      continue;
    }
    if (head == "label") {
      if (!doc.entries.empty()) throw parse_error(line, "label must precede the entries");
      doc.label = trim(content.substr(5));
      continue;
    }
    if (head != "band") throw parse_error(line, "expected 'band (...) <index> <+1|-1>'");
    const std::size_t open = content.find('(');
    const std::size_t close = content.find(')');
    if (open == std::string::npos || close == std::string::npos || close < open ||
        !trim(content.substr(4, open - 4)).empty()) {
      throw parse_error(line, "conjugator must be written as (<letters>)");
    }
    EntrySpec spec;
    spec.conjugator = parse_letters(trim(content.substr(open + 1, close - open - 1)), line);
    std::istringstream rest(content.substr(close + 1));
    std::string index;
    std::string exponent;
    std::string extra;
    if (!(rest >> index >> exponent) || (rest >> extra)) {
      throw parse_error(line, "expected '<index> <exponent>' after the conjugator");
    }
    const auto i = to_integer(index);
    const auto e = to_integer(exponent);
    if (!i) throw parse_error(line, "bad band index '" + index + "'");
    if (!e) throw parse_error(line, "bad exponent '" + exponent + "'");
    spec.index = static_cast<int>(*i);
    spec.exponent = static_cast<int>(*e);
    doc.entries.push_back(std::move(spec));
    doc.entry_lines.push_back(line);
  }
  if (!have_degree) throw Error(ErrorCode::Parse, "missing 'degree <m>' line");
  return doc;
}

TupleDocument parse_json_document(const nlohmann::json& j) {
  try {
    TupleDocument doc;
    if (j.at("format").get<std::string>() != kFormatName) {
      throw Error(ErrorCode::Parse, "unknown format '" + j.at("format").get<std::string>() + "'");
    }
    doc.version = j.at("version").get<int>();
    if (doc.version != TupleDocument::kVersion) {
      throw Error(ErrorCode::Parse, "unsupported version " + std::to_string(doc.version));
    }
    const long degree = j.at("degree").get<long>();
    if (degree < 1) throw Error(ErrorCode::Parse, "degree must be a positive integer");
    doc.degree = static_cast<std::size_t>(degree);
    doc.label = j.value("label", std::string{});
    for (const auto& e : j.at("entries")) {
      doc.entries.push_back(
          {e.at("conjugator").get<std::vector<int>>(), e.at("index").get<int>(), e.at("exponent").get<int>()});
      doc.entry_lines.push_back(0);
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed JSON document: ") + e.what());
  }
}

TupleDocument parse_document(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != '{') break;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Parse, std::string("malformed JSON document: ") + e.what());
    }
    return parse_json_document(j);
  }
  return parse_text_document(text);
}

std::string to_text(const TupleDocument& doc) {
  std::ostringstream os;
  os << "degree " << doc.degree << '\n';
  if (!doc.label.empty()) os << "label " << doc.label << '\n';
  for (const auto& e : doc.entries) {
    os << "band (";
    for (std::size_t t = 0; t < e.conjugator.size(); ++t) {
      if (t) os << ',';
      os << e.conjugator[t];
    }
    os << ") " << e.index << ' ' << (e.exponent > 0 ? "+" : "") << e.exponent << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const TupleDocument& doc) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : doc.entries) {
    entries.push_back({{"conjugator", e.conjugator}, {"index", e.index}, {"exponent", e.exponent}});
  }
  nlohmann::json j{{"format", kFormatName},
                   {"version", doc.version},
                   {"degree", doc.degree},
                   {"entries", entries}};
  if (!doc.label.empty()) j["label"] = doc.label;
  return j;
}

MonodromyTuple to_tuple(const TupleDocument& doc) {
  if (auto err = validate(doc.degree, doc.entries)) {
    if (err->entry() && *err->entry() < doc.entry_lines.size() && doc.entry_lines[*err->entry()] > 0) {
      throw Error(err->code(), "line " + std::to_string(doc.entry_lines[*err->entry()]) + ", " +
                                   err->message(),
                  err->entry());
    }
    throw *err;
  }
  return MonodromyTuple::from_specs(doc.degree, doc.entries);
}

TupleDocument to_document(const MonodromyTuple& t, std::string label) {
  TupleDocument doc;
  doc.degree = t.degree();
  doc.entries = t.specs();
  doc.label = std::move(label);
  doc.entry_lines.assign(doc.entries.size(), 0);
  return doc;
}

BraidWord parse_braid_word(std::size_t degree, const std::string& text) {
  std::string spaced = text;
  for (char& c : spaced) {
    if (c == ',') c = ' ';
  }
  std::istringstream is(spaced);
  std::vector<int> letters;
  for (std::string token; is >> token;) {
    const auto value = to_integer(token);
    if (!value) throw Error(ErrorCode::Parse, "bad braid letter '" + token + "'");
    letters.push_back(static_cast<int>(*value));
  }
  return BraidWord(degree, std::move(letters));
}

}  // namespace braid2d
