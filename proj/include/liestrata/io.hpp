#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "liestrata/core_types.hpp"
#include "liestrata/error.hpp"
#include "liestrata/exact_linalg.hpp"
#include "liestrata/rational.hpp"

namespace liestrata {

/// Parsed input file: an index set plus optional per-command data.
struct InputDocument {
  IndexSet lambda;
  std::optional<RationalVector> a, b, center;
  std::optional<std::vector<IntVector>> directions;
  std::optional<Rational> exponent;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split_values(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

inline long long parse_integer(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw Error(ErrorCode::ParseError, "expected an integer, got '" + s + "'");
  return v;
}

inline int parse_index(const std::string& s) {
  const long long v = parse_integer(s);
  if (v < -1000000 || v > 1000000) throw Error(ErrorCode::IndexOutOfRange, "index " + s + " is out of range");
  return static_cast<int>(v);
}

inline RationalVector parse_rational_list(std::string_view s) {
  RationalVector out;
  for (const auto& tok : split_values(s)) out.push_back(parse_rational(tok));
  return out;
}

inline Mode parse_mode(const std::string& s) {
  if (s == "theta") return Mode::Theta;
  if (s == "upsilon") return Mode::Upsilon;
  throw Error(ErrorCode::ParseError, "unknown mode '" + s + "'");
}

}  // namespace detail

/// Rationals separated by commas or whitespace.
inline RationalVector parse_rational_vector(std::string_view s) { return detail::parse_rational_list(s); }

/// Integer vectors separated by ';', entries by commas or whitespace.
inline std::vector<IntVector> parse_directions(std::string_view s) {
  std::vector<IntVector> out;
  std::string part;
  std::istringstream in{std::string(s)};
  while (std::getline(in, part, ';')) {
    const auto toks = detail::split_values(part);
    if (toks.empty()) continue;
    IntVector v;
    for (const auto& t : toks) v.push_back(detail::parse_integer(t));
    out.push_back(std::move(v));
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "no direction vectors given");
  return out;
}

/// Index set text "n=7; (1,2,4) (1,3,5)"; the mode defaults to theta.
inline IndexSet parse_index_set(std::string_view text, Mode mode = Mode::Theta) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ';')) ++pos;
  };
  auto number = [&]() -> std::string {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t b = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (b == pos) throw Error(ErrorCode::ParseError, "expected a number at offset " + std::to_string(b));
    std::string s(text.substr(b, pos - b));
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return s;
  };
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c)
      throw Error(ErrorCode::ParseError, std::string("expected '") + c + "' at offset " + std::to_string(pos));
    ++pos;
  };
  skip();
  expect('n');
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  expect('=');
  const int n = detail::parse_index(number());
  std::vector<Triple> raw;
  skip();
  while (pos < text.size()) {
    expect('(');
    Triple t;
    t.i = detail::parse_index(number());
    expect(',');
    t.j = detail::parse_index(number());
    expect(',');
    t.k = detail::parse_index(number());
    expect(')');
    raw.push_back(t);
    skip();
  }
  return IndexSet::validate(std::move(raw), n, mode);
}

/// Line-based text input. Lines "key: value" set a, b, center, directions, exponent or mode;
/// all other non-comment lines form the index set.
inline InputDocument parse_input_text(std::string_view content) {
  InputDocument doc;
  std::string lambda_text;
  Mode mode = Mode::Theta;
  std::istringstream in{std::string(content)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    const std::string t = detail::trim(line);
    if (t.empty()) continue;
    const auto colon = t.find(':');
    if (colon == std::string::npos) {
      lambda_text += " " + t;
      continue;
    }
    const std::string key = detail::trim(std::string_view(t).substr(0, colon));
    const std::string value = detail::trim(std::string_view(t).substr(colon + 1));
    if (key == "a")
      doc.a = detail::parse_rational_list(value);
    else if (key == "b")
      doc.b = detail::parse_rational_list(value);
    else if (key == "center")
      doc.center = detail::parse_rational_list(value);
    else if (key == "directions")
      doc.directions = parse_directions(value);
    else if (key == "exponent")
      doc.exponent = parse_rational(value);
    else if (key == "mode")
      mode = detail::parse_mode(value);
    else if (key == "lambda" || key == "index_set")
      lambda_text += " " + value;
    else
      throw Error(ErrorCode::ParseError, "unknown key '" + key + "'");
  }
  if (detail::trim(lambda_text).empty()) throw Error(ErrorCode::ParseError, "no index set given");
  doc.lambda = parse_index_set(lambda_text, mode);
  return doc;
}

namespace detail {

inline Rational json_rational(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  throw Error(ErrorCode::ParseError, "structure values must be fraction strings or integers");
}

inline RationalVector json_rational_vector(const nlohmann::json& v) {
  if (!v.is_array()) throw Error(ErrorCode::ParseError, "expected an array of values");
  RationalVector out;
  for (const auto& x : v) out.push_back(json_rational(x));
  return out;
}

inline int json_index(const nlohmann::json& v) {
  if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, "indices must be integers");
  const long long x = v.get<long long>();
  if (x < -1000000 || x > 1000000) throw Error(ErrorCode::IndexOutOfRange, "index is out of range");
  return static_cast<int>(x);
}

}  // namespace detail

/// Structured input {n, mode, triples, a, b, center, directions, exponent}.
inline InputDocument parse_input_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "input document must be an object");
  if (!j.contains("n") || !j.contains("triples")) throw Error(ErrorCode::ParseError, "fields n and triples are required");
  const Mode mode = j.contains("mode") ? detail::parse_mode(j.at("mode").get<std::string>()) : Mode::Theta;
  std::vector<Triple> raw;
  if (!j.at("triples").is_array()) throw Error(ErrorCode::ParseError, "triples must be an array");
  for (const auto& t : j.at("triples")) {
    if (!t.is_array() || t.size() != 3) throw Error(ErrorCode::ParseError, "each triple needs three indices");
    raw.push_back({detail::json_index(t[0]), detail::json_index(t[1]), detail::json_index(t[2])});
  }
  InputDocument doc;
  doc.lambda = IndexSet::validate(std::move(raw), detail::json_index(j.at("n")), mode);
  if (j.contains("a")) doc.a = detail::json_rational_vector(j.at("a"));
  if (j.contains("b")) doc.b = detail::json_rational_vector(j.at("b"));
  if (j.contains("center")) doc.center = detail::json_rational_vector(j.at("center"));
  if (j.contains("exponent")) doc.exponent = detail::json_rational(j.at("exponent"));
  if (j.contains("directions")) {
    std::vector<IntVector> dirs;
    for (const auto& w : j.at("directions")) {
      if (!w.is_array()) throw Error(ErrorCode::ParseError, "directions must be arrays of integers");
      IntVector v;
      for (const auto& x : w) {
        if (!x.is_number_integer()) throw Error(ErrorCode::ParseError, "directions must be arrays of integers");
        v.push_back(x.get<long long>());
      }
      dirs.push_back(std::move(v));
    }
    doc.directions = std::move(dirs);
  }
  return doc;
}

/// Structured input if the content starts with '{', text otherwise.
inline InputDocument parse_input(std::string_view content) {
  const std::string t = detail::trim(content);
  if (!t.empty() && t.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    try {
      return parse_input_json(j);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }
  return parse_input_text(content);
}

}  // namespace liestrata
