#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "benford/data_files.hpp"
#include "benford/fitting.hpp"

namespace benford {

/// Benford, TSPB and PB fits of one reference row.
struct TableRowResult {
  ReferenceRow row;
  DigitHistogram histogram;
  FitResult benford;
  FitResult tspb;
  FitResult pb;
  /// Set when the row could not be computed; the fits are then meaningless.
  std::optional<std::string> error;
};

enum class TableTruncation {
  per_row,   // the m recorded for each row
  fixed,     // one m for every row
  adaptive,
};

struct TableOptions {
  TableTruncation truncation = TableTruncation::per_row;
  std::int64_t m = kDefaultTruncation;
};

TableRowResult reproduce_row(const ReferenceRow& row, const TableOptions& options = {});
/// Rows are processed independently; a failing row is reported, not fatal.
std::vector<TableRowResult> reproduce_tables(const std::vector<ReferenceRow>& rows,
                                             const TableOptions& options = {});

/// Observed first-digit percentages, one row per sequence.
std::string digit_table_markdown(const std::vector<TableRowResult>& results);
/// Chi-square and p-value (percent, two decimals) for each family.
std::string fit_table_markdown(const std::vector<TableRowResult>& results);
/// Lossless CSV: chi-squares and p-values (as probabilities) in shortest round-trip form.
std::string fit_table_csv(const std::vector<TableRowResult>& results);
nlohmann::json fit_table_json(const std::vector<TableRowResult>& results);

}  // namespace benford
