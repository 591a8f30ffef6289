#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "maxplus/io.hpp"
#include "maxplus/walk/coin.hpp"
#include "maxplus/walk/sdm.hpp"

namespace cli {

// exit codes: 0 ok / verification pass, 1 verification failure,
// 2 usage or config error, 3 I/O error
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// "a=1,b=2,c=-2,d=-1" -> the four named values as strings.
inline std::map<std::string, std::string> parseKeyValueList(
    const std::string& spec, char sep) {
  std::map<std::string, std::string> kv;
  std::istringstream is(spec);
  std::string item;
  while (std::getline(is, item, sep)) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected key=value, got '" + item + "'");
    kv[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
  }
  return kv;
}

template <typename T>
T parseCoinEntry(const std::string& tok) {
  auto v = maxplus::io::parseNumber<T>(tok);
  if (!v) {
    if constexpr (std::is_same_v<T, long long>) {
      if (maxplus::io::parseDouble(tok))
        throw ConfigError("exact mode requires integer coin entries, got '" +
                          tok + "'");
    }
    throw ConfigError("bad coin entry '" + tok + "'");
  }
  return *v;
}

template <typename T>
maxplus::walk::Coin<T> coinFromMap(const std::map<std::string, std::string>& kv) {
  maxplus::walk::Coin<T> coin;
  for (const char* key : {"a", "b", "c", "d"}) {
    auto it = kv.find(key);
    if (it == kv.end())
      throw ConfigError(std::string("coin entry '") + key + "' missing");
    const T v = parseCoinEntry<T>(it->second);
    if (key[0] == 'a') coin.a = v;
    if (key[0] == 'b') coin.b = v;
    if (key[0] == 'c') coin.c = v;
    if (key[0] == 'd') coin.d = v;
  }
  return coin;
}

/// Inline coin spec: a=..,b=..,c=..,d=..
template <typename T>
maxplus::walk::Coin<T> parseCoinSpec(const std::string& spec) {
  return coinFromMap<T>(parseKeyValueList(spec, ','));
}

/// Coin file: JSON object {"a":..., ...} or key=value lines.
template <typename T>
maxplus::walk::Coin<T> loadCoinFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open coin file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = trim(buf.str());
  if (!text.empty() && text.front() == '{') {
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ConfigError("coin file is not valid JSON");
    std::map<std::string, std::string> kv;
    for (const char* key : {"a", "b", "c", "d"}) {
      if (!j.contains(key))
        throw ConfigError(std::string("coin entry '") + key + "' missing");
      kv[key] = j[key].dump();
    }
    return coinFromMap<T>(kv);
  }
  return coinFromMap<T>(parseKeyValueList(text, '\n'));
}

/// Flat key=value config file; blank lines and '#' comments are ignored.
inline std::map<std::string, std::string> loadFlatConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line is not key=value: '" + line + "'");
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    kv[trim(line.substr(0, eq))] = value;
  }
  return kv;
}

inline void writeFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file '" + path + "'");
  out << content;
  if (!out) throw IoError("write failed for '" + path + "'");
}

/// Writes to the path when given, stdout otherwise.
inline void emit(const std::optional<std::string>& path, const std::string& content) {
  if (path)
    writeFile(*path, content);
  else
    std::cout << content;
}

inline bool endsWith(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

inline const char* branchName(maxplus::walk::EigBranch b) {
  switch (b) {
    case maxplus::walk::EigBranch::DeltaNonNegative: return "delta-nonnegative";
    case maxplus::walk::EigBranch::DeltaNegative: return "delta-negative";
    case maxplus::walk::EigBranch::BoundaryLeft: return "boundary-left";
    case maxplus::walk::EigBranch::BoundaryRight: return "boundary-right";
  }
  return "?";
}

/// JSON cell map {"k": [[..],[..]]} for a state-decision grid.
template <typename T>
nlohmann::ordered_json gridCellsJson(const maxplus::walk::SdmGrid<T>& grid) {
  nlohmann::ordered_json cells = nlohmann::ordered_json::object();
  for (const auto& [k, mat] : grid.cells) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < 2; ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int j = 0; j < 2; ++j) {
        if (mat(i, j).isEps())
          row.push_back("eps");
        else
          row.push_back(mat(i, j).value());
      }
      rows.push_back(std::move(row));
    }
    cells[std::to_string(k)] = std::move(rows);
  }
  return cells;
}

}  // namespace cli
