#pragma once

// Flat output records and their CSV / JSON / plain renderings.

#include "consets/aggregate.hpp"
#include "consets/exactmath.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace consets {

inline constexpr int kDefaultPrecision = 12;

enum class OutputFormat { plain, csv, json };

inline OutputFormat parse_format(std::string_view name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw domain_error("unknown format '" + std::string(name) + "' (expected csv, json or plain)");
}

struct OutputRecord {
  std::size_t m = 0;
  std::size_t n = 0;
  BigInt N;
  BigInt S;
  BigRational A;
  BigRational D;
  int precision = kDefaultPrecision;

  std::string A_exact() const { return A.str(); }
  std::string A_decimal() const { return to_decimal(A, precision); }
  std::string D_exact() const { return D.str(); }
  std::string D_decimal() const { return to_decimal(D, precision); }
};

inline OutputRecord to_record(const ProductResult& r, int precision = kDefaultPrecision) {
  return {r.m, r.n, r.count_N, r.total_S, r.average_A, r.density_D, precision};
}

inline constexpr std::string_view kCsvHeader = "m,n,N,S,A_num,A_den,A_dec,D_num,D_den,D_dec";

inline std::string csv_row(const OutputRecord& r) {
  return std::to_string(r.m) + "," + std::to_string(r.n) + "," + r.N.str() + "," + r.S.str() +
         "," + r.A.num().str() + "," + r.A.den().str() + "," + r.A_decimal() + "," +
         r.D.num().str() + "," + r.D.den().str() + "," + r.D_decimal();
}

inline std::string plain_line(const OutputRecord& r) {
  return "m=" + std::to_string(r.m) + " n=" + std::to_string(r.n) + " N=" + r.N.str() +
         " S=" + r.S.str() + " A_exact=" + r.A_exact() + " A_decimal=" + r.A_decimal() +
         " D_exact=" + r.D_exact() + " D_decimal=" + r.D_decimal();
}

// Big integers and fractions are strings; only m and n are JSON numbers.
inline nlohmann::json to_json(const OutputRecord& r) {
  return {{"m", r.m},
          {"n", r.n},
          {"N", r.N.str()},
          {"S", r.S.str()},
          {"A_exact", r.A_exact()},
          {"A_decimal", r.A_decimal()},
          {"D_exact", r.D_exact()},
          {"D_decimal", r.D_decimal()}};
}

// Writes records in the chosen format. A single JSON record is an object,
// more than one is an array.
inline void write_records(std::ostream& out, const std::vector<OutputRecord>& records,
                          OutputFormat format, bool force_array = false) {
  switch (format) {
    case OutputFormat::plain:
      for (const auto& r : records) out << plain_line(r) << '\n';
      break;
    case OutputFormat::csv:
      out << kCsvHeader << '\n';
      for (const auto& r : records) out << csv_row(r) << '\n';
      break;
    case OutputFormat::json: {
      if (records.size() == 1 && !force_array) {
        out << to_json(records.front()).dump(2) << '\n';
      } else {
        auto arr = nlohmann::json::array();
        for (const auto& r : records) arr.push_back(to_json(r));
        out << arr.dump(2) << '\n';
      }
      break;
    }
  }
}

}  // namespace consets
