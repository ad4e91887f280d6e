#include "consets/record.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

using namespace consets;

TEST(Record, FieldsForPrism) {
  const auto r = to_record(compute_product(3, 2));
  EXPECT_EQ(r.N, 51);
  EXPECT_EQ(r.A_exact(), "54/17");
  EXPECT_EQ(r.A_decimal(), "3.17647058824");
  EXPECT_EQ(r.D_exact(), "9/17");
  EXPECT_EQ(r.D_decimal(), "0.529411764706");
  EXPECT_EQ(csv_row(r), "3,2,51,162,54,17,3.17647058824,9,17,0.529411764706");
  EXPECT_EQ(plain_line(r),
            "m=3 n=2 N=51 S=162 A_exact=54/17 A_decimal=3.17647058824 D_exact=9/17 "
            "D_decimal=0.529411764706");
}

TEST(Record, PrecisionFlag) {
  const auto r = to_record(compute_product(3, 2), 4);
  EXPECT_EQ(r.A_decimal(), "3.176");
  EXPECT_EQ(r.D_decimal(), "0.5294");
}

TEST(Record, CsvHeaderAndColumnCount) {
  std::ostringstream out;
  write_records(out, {to_record(compute_product(2, 1)), to_record(compute_product(2, 2))},
                OutputFormat::csv);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, kCsvHeader);
  while (std::getline(lines, line)) EXPECT_EQ(std::count(line.begin(), line.end(), ','), 9);
}

TEST(Record, JsonRoundTripRecomputesAverage) {
  ProductEngine engine(5, 40);
  for (std::size_t n = 1; n <= 40; n += 3) {
    std::ostringstream out;
    write_records(out, {to_record(engine.result(n))}, OutputFormat::json);
    const auto j = nlohmann::json::parse(out.str());
    ASSERT_TRUE(j["N"].is_string());
    ASSERT_TRUE(j["S"].is_string());
    const BigRational a(BigInt(j["S"].get<std::string>()), BigInt(j["N"].get<std::string>()));
    EXPECT_EQ(a, BigRational::parse(j["A_exact"].get<std::string>()));
    EXPECT_EQ(a.str(), j["A_exact"].get<std::string>());
    EXPECT_EQ(j["m"].get<int>(), 5);
  }
}

TEST(Record, JsonArrayWhenForced) {
  std::ostringstream out;
  write_records(out, {to_record(compute_product(1, 1))}, OutputFormat::json, true);
  EXPECT_TRUE(nlohmann::json::parse(out.str()).is_array());
}

TEST(Record, ParseFormat) {
  EXPECT_EQ(parse_format("csv"), OutputFormat::csv);
  EXPECT_EQ(parse_format("json"), OutputFormat::json);
  EXPECT_EQ(parse_format("plain"), OutputFormat::plain);
  EXPECT_THROW(parse_format("xml"), domain_error);
}
