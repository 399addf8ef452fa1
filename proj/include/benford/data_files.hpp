#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "benford/digits.hpp"
#include "benford/sequences.hpp"

namespace benford {

/// Directory holding the bundled data files. BENFORD_DATA_DIR overrides the
/// location compiled into the library.
std::filesystem::path data_dir();

/// Keith numbers shipped with the library.
struct KeithList {
  std::vector<BigInt> values;
  /// The list holds every Keith number with at most this many digits.
  int complete_through_digits = 0;
};

KeithList load_keith_list(const std::filesystem::path& path);
KeithList load_keith_list();
std::vector<BigInt> load_keith_numbers();

enum class RowSource { generated, reconstructed };

std::string_view to_string(RowSource source);

/// One row of the reference first-digit table: published percentages, the
/// generator that reproduces it (when there is one) and the PB truncation
/// index used for it.
struct ReferenceRow {
  std::string name;
  std::uint64_t sample_size = 0;
  RowSource source = RowSource::reconstructed;
  std::optional<SequenceSpec> generator;
  std::int64_t truncation = 100;
  std::array<double, kNumDigits> percentages{};

  /// Counts rebuilt from the printed percentages.
  DigitHistogram reconstructed_histogram() const;
  /// Generated histogram for generated rows, reconstruction otherwise.
  DigitHistogram histogram() const;

  /// True when `hist`, printed as percentages to one decimal, gives this
  /// row's percentages.
  bool matches_percentages(const DigitHistogram& hist) const;
};

std::vector<ReferenceRow> load_reference_table(const std::filesystem::path& path);
std::vector<ReferenceRow> load_reference_table();

}  // namespace benford
