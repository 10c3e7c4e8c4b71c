#pragma once

#include <string>

#include <yaml-cpp/yaml.h>

#include "json.hpp"

#include "liestrata/error.hpp"

namespace liestrata {

namespace detail {

inline bool scalar_array(const nlohmann::ordered_json& j) {
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

inline void emit_yaml(YAML::Emitter& out, const nlohmann::ordered_json& j) {
  if (j.is_object()) {
    out << YAML::BeginMap;
    for (auto it = j.begin(); it != j.end(); ++it) {
      out << YAML::Key << it.key() << YAML::Value;
      emit_yaml(out, it.value());
    }
    out << YAML::EndMap;
  } else if (j.is_array()) {
    if (scalar_array(j)) out << YAML::Flow;
    out << YAML::BeginSeq;
    for (const auto& x : j) emit_yaml(out, x);
    out << YAML::EndSeq;
  } else if (j.is_string()) {
    out << YAML::DoubleQuoted << j.get<std::string>();
  } else if (j.is_boolean()) {
    out << YAML::TrueFalseBool << j.get<bool>();
  } else if (j.is_number_unsigned()) {
    out << j.get<unsigned long long>();
  } else if (j.is_number_integer()) {
    out << j.get<long long>();
  } else if (j.is_number_float()) {
    out << j.get<double>();
  } else {
    out << YAML::Null;
  }
}

}  // namespace detail

/// Human-readable rendering of a report: block YAML, strings always quoted.
inline std::string to_text(const nlohmann::ordered_json& j) {
  YAML::Emitter out;
  out.SetIndent(2);
  detail::emit_yaml(out, j);
  return std::string(out.c_str()) + "\n";
}

/// Reads text produced by to_text back into a document; quoted scalars are strings.
inline nlohmann::ordered_json yaml_to_json(const YAML::Node& n) {
  using J = nlohmann::ordered_json;
  switch (n.Type()) {
    case YAML::NodeType::Map: {
      J o = J::object();
      for (const auto& kv : n) o[kv.first.as<std::string>()] = yaml_to_json(kv.second);
      return o;
    }
    case YAML::NodeType::Sequence: {
      J a = J::array();
      for (const auto& x : n) a.push_back(yaml_to_json(x));
      return a;
    }
    case YAML::NodeType::Scalar: {
      const std::string s = n.Scalar();
      if (n.Tag() == "!") return s;
      if (s == "true") return true;
      if (s == "false") return false;
      try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used == s.size()) return v;
        const double d = std::stod(s, &used);
        if (used == s.size()) return d;
      } catch (const std::exception&) {
      }
      return s;
    }
    default:
      return nullptr;
  }
}

inline nlohmann::ordered_json parse_text(const std::string& text) {
  try {
    return yaml_to_json(YAML::Load(text));
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace liestrata
