#pragma once

#include <cctype>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxplus/matrix.hpp"
#include "maxplus/rational.hpp"

namespace maxplus {
namespace io {

/// Locale-free, shortest round-trip number formatting (byte-stable output).
inline std::string formatNumber(long long v) { return std::to_string(v); }
inline std::string formatNumber(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}
inline std::string formatNumber(const Rational& v) {
  if (v.isInteger()) return std::to_string(v.num());
  return formatNumber(v.toDouble());
}

template <typename T>
std::string formatScalar(const MaxScalar<T>& s, const char* epsToken = "eps") {
  return s.isEps() ? std::string(epsToken) : formatNumber(s.value());
}

inline std::optional<long long> parseInteger(const std::string& tok) {
  long long v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    return std::nullopt;
  return v;
}

inline std::optional<double> parseDouble(const std::string& tok) {
  double v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    return std::nullopt;
  return v;
}

template <typename T>
std::optional<T> parseNumber(const std::string& tok);
template <>
inline std::optional<long long> parseNumber<long long>(const std::string& tok) {
  return parseInteger(tok);
}
template <>
inline std::optional<double> parseNumber<double>(const std::string& tok) {
  return parseDouble(tok);
}

inline bool isEpsToken(std::string tok) {
  for (auto& c : tok) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return tok == "e" || tok == "eps";
}

/// Text format: one row per line, entries whitespace-separated, the literal
/// token `e` (case-insensitive) for eps; a blank line separates matrices.
template <typename T>
void writeMatrixText(std::ostream& os, const MaxMatrix<T>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j > 0) os << ' ';
      os << (a(i, j).isEps() ? std::string("e") : formatNumber(a(i, j).value()));
    }
    os << '\n';
  }
}

template <typename T>
std::vector<MaxMatrix<T>> readMatricesText(std::istream& is) {
  std::vector<MaxMatrix<T>> out;
  std::vector<std::vector<MaxScalar<T>>> rows;

  auto flush = [&] {
    if (rows.empty()) return;
    const size_t cols = rows.front().size();
    MaxMatrix<T> m = allEps<T>(static_cast<Eigen::Index>(rows.size()),
                               static_cast<Eigen::Index>(cols));
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw std::invalid_argument("matrix text: ragged rows");
      for (size_t j = 0; j < cols; ++j)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
    out.push_back(std::move(m));
    rows.clear();
  };

  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::vector<MaxScalar<T>> row;
    std::string tok;
    while (ls >> tok) {
      if (isEpsToken(tok)) {
        row.push_back(MaxScalar<T>::eps());
      } else {
        auto v = parseNumber<T>(tok);
        if (!v) throw std::invalid_argument("matrix text: bad token '" + tok + "'");
        row.push_back(MaxScalar<T>::finite(*v));
      }
    }
    if (row.empty())
      flush();
    else
      rows.push_back(std::move(row));
  }
  flush();
  return out;
}

/// JSON form: {"rows": n, "cols": m, "entries": [[..., "eps", ...], ...]}.
template <typename T>
nlohmann::ordered_json matrixToJson(const MaxMatrix<T>& a) {
  nlohmann::ordered_json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index j2 = 0; j2 < a.cols(); ++j2) {
      if (a(i, j2).isEps())
        row.push_back("eps");
      else
        row.push_back(a(i, j2).value());
    }
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

template <typename T>
MaxMatrix<T> matrixFromJson(const nlohmann::json& j) {
  const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
  const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
  const auto& entries = j.at("entries");
  if (static_cast<Eigen::Index>(entries.size()) != rows)
    throw std::invalid_argument("matrix json: row count mismatch");
  MaxMatrix<T> m = allEps<T>(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = entries.at(static_cast<size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != cols)
      throw std::invalid_argument("matrix json: col count mismatch");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& cell = row.at(static_cast<size_t>(c));
      if (cell.is_string()) {
        if (!isEpsToken(cell.get<std::string>()))
          throw std::invalid_argument("matrix json: bad entry token");
      } else {
        m(i, c) = MaxScalar<T>::finite(cell.get<T>());
      }
    }
  }
  return m;
}

}  // namespace io
}  // namespace maxplus
