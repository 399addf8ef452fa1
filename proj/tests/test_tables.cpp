#include <doctest.h>

#include <cmath>
#include <sstream>

#include "benford/serialization.hpp"
#include "benford/tables.hpp"

using namespace benford;

namespace {

const std::vector<ReferenceRow>& rows() {
  static const auto r = load_reference_table();
  return r;
}

const ReferenceRow& row(const std::string& name) {
  for (const auto& r : rows()) {
    if (r.name == name) return r;
  }
  FAIL("no row " << name);
  throw 0;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream in(line);
  std::string cell;
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

TEST_CASE("reference table contents") {
  REQUIRE(rows().size() == 19);
  CHECK(rows().front().name == "Square");
  CHECK(rows().back().name == "Partition number");
  int generated = 0;
  for (const auto& r : rows()) {
    CHECK(r.reconstructed_histogram().sample_size == r.sample_size);
    if (r.source == RowSource::generated) {
      ++generated;
      REQUIRE(r.generator.has_value());
    }
  }
  CHECK(generated == 11);
  CHECK(row("Keith number").truncation == 1000);
  CHECK(row("Catalan number").truncation == 5000);
  CHECK(row("Mixing sequence").reconstructed_histogram().counts ==
        std::array<std::uint64_t, 9>{175, 90, 71, 61, 47, 48, 50, 41, 35});
}

TEST_CASE("generated rows reproduce the printed percentages") {
  for (const auto& r : rows()) {
    if (r.source != RowSource::generated || r.name == "Bell number") continue;
    CAPTURE(r.name);
    CHECK(r.matches_percentages(r.histogram()));
    CHECK(r.matches_percentages(r.reconstructed_histogram()));
  }
  // Exact Bell numbers B(1..100) do not give the printed Bell row.
  CHECK_FALSE(row("Bell number").matches_percentages(row("Bell number").histogram()));
  // At n = 10000 one printed decimal cannot pin the counts down.
  CHECK_FALSE(row("Cube 10000").histogram() == row("Cube 10000").reconstructed_histogram());
}

TEST_CASE("row reproduction") {
  const TableRowResult fib = reproduce_row(row("Fibonacci number"));
  REQUIRE_FALSE(fib.error.has_value());
  CHECK(std::abs(fib.benford.chi_square - 1.029) < 0.001);
  CHECK(std::abs(100.0 * fib.benford.p_value - 99.81) < 0.01);

  const TableRowResult p = reproduce_row(row("Prime < 10000"));
  CHECK(std::abs(p.tspb.chi_square - 307.322) < 0.01);
  CHECK(p.tspb.p_value < 5e-5);
  CHECK(std::get<PbModel>(p.pb.model).m == 100);

  TableOptions fixed{TableTruncation::fixed, 250};
  CHECK(std::get<PbModel>(reproduce_row(row("Square"), fixed).pb.model).m == 250);
  TableOptions adaptive{TableTruncation::adaptive};
  CHECK(std::get<PbModel>(reproduce_row(row("Square"), adaptive).pb.model).m >= kDefaultTruncation);
}

TEST_CASE("a failing row is reported without aborting the others") {
  ReferenceRow bad = row("Square");
  bad.name = "Broken";
  bad.generator->kind = SequenceKind::keith;
  bad.generator->param = 500;  // more Keith numbers than are available
  const auto results = reproduce_tables({bad, row("Square")});
  REQUIRE(results.size() == 2);
  CHECK(results[0].error.has_value());
  CHECK_FALSE(results[1].error.has_value());
  CHECK(fit_table_markdown(results).find("error") != std::string::npos);
  CHECK(digit_table_markdown(results).find("| Square |") != std::string::npos);
}

TEST_CASE("renderers") {
  const std::vector<TableRowResult> results = {reproduce_row(row("Square")), reproduce_row(row("Mixing sequence"))};
  const std::string md = fit_table_markdown(results);
  CHECK(md.find("| Mixing sequence | reconstructed |") != std::string::npos);
  CHECK(md.find("93.55") != std::string::npos);
  CHECK(md.find("4.93") != std::string::npos);

  const std::string digits = digit_table_markdown(results);
  CHECK(digits.find("28.3") != std::string::npos);

  const auto j = fit_table_json(results);
  REQUIRE(j.size() == 2);

  // The CSV parses back to the exact library values.
  std::istringstream csv(fit_table_csv(results));
  std::string line;
  std::getline(csv, line);
  const auto header = split(line, ',');
  for (const auto& r : results) {
    REQUIRE(std::getline(csv, line));
    const auto cells = split(line, ',');
    REQUIRE(cells.size() == header.size());
    auto cell = [&](const std::string& name) {
      for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return cells[i];
      }
      FAIL("no column " << name);
      return std::string();
    };
    CHECK(cell("sequence") == r.row.name);
    CHECK(std::stod(cell("benford_chi2")) == r.benford.chi_square);
    CHECK(std::stod(cell("tspb_chi2")) == r.tspb.chi_square);
    CHECK(std::stod(cell("pb_chi2")) == r.pb.chi_square);
    CHECK(std::stod(cell("pb_p")) == r.pb.p_value);
    CHECK(std::stod(cell("tspb_c")) == std::get<TspbModel>(r.tspb.model).c);
  }
}
