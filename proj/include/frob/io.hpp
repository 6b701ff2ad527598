#pragma once

// Text formats: instance files, cost-sequence files, residue-table JSON.
//
// Instance file: line 1 holds whitespace separated item sizes, an optional
// line 2 reads "t <integer>". Blank lines are ignored.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "frob/instance.hpp"
#include "frob/minconv.hpp"

namespace frob::io {

inline constexpr int kSchemaVersion = 1;

struct InstanceFile {
  std::vector<Value> items;  // sorted, distinct; gcd not checked
  std::optional<Value> target;
};

inline InstanceFile parse_instance_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  if (lines.empty()) throw InvalidInput("instance file is empty");
  if (lines.size() > 2) throw InvalidInput("instance file has more than two lines");
  InstanceFile out{parse_items(lines[0]), std::nullopt};
  if (lines.size() == 2) {
    std::istringstream tl(lines[1]);
    std::string key, value, extra;
    tl >> key >> value;
    if (key != "t" || value.empty() || (tl >> extra)) throw InvalidInput("second line must read 't <integer>'");
    std::size_t used = 0;
    try {
      out.target = std::stoll(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size()) throw InvalidInput("target is not an integer: '" + value + "'");
    if (*out.target < 0) throw InvalidInput("target must be non-negative");
  }
  return out;
}

inline std::string format_instance_file(std::span<const Value> items, std::optional<Value> target) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(items[i]);
  }
  s += '\n';
  if (target) s += "t " + std::to_string(*target) + '\n';
  return s;
}

/// Integers plus the sentinels "inf" / "-inf".
inline minconv::CostSeq parse_cost_sequence(std::string_view text) {
  std::istringstream in{std::string(text)};
  minconv::CostSeq out;
  for (std::string tok; in >> tok;) {
    if (tok == "inf" || tok == "+inf") {
      out.push_back(minconv::kInf);
      continue;
    }
    if (tok == "-inf") {
      out.push_back(minconv::kNegInf);
      continue;
    }
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw InvalidInput("not an integer or inf/-inf: '" + tok + "'");
    if (v > (minconv::kInf >> 2) || v < -(minconv::kInf >> 2)) throw InvalidInput("value out of range: " + tok);
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("empty sequence");
  return out;
}

inline std::string format_cost(minconv::Cost c) {
  if (c == minconv::kInf) return "inf";
  if (c == minconv::kNegInf) return "-inf";
  return std::to_string(c);
}

inline nlohmann::json to_json(const ResidueTable& table) {
  return nlohmann::json{{"schema", kSchemaVersion}, {"modulus", table.modulus}, {"residue_table", table.entries}};
}

inline ResidueTable residue_table_from_json(const nlohmann::json& j) {
  ResidueTable t;
  t.modulus = j.at("modulus").get<Value>();
  t.entries = j.at("residue_table").get<std::vector<Value>>();
  if (t.modulus < 1 || static_cast<Value>(t.entries.size()) != t.modulus)
    throw InvalidInput("residue_table length does not match modulus");
  return t;
}

}  // namespace frob::io
