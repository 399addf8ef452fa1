#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace benford {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kNumDigits = 9;

/// Observed counts of first significant digits 1..9.
///
/// counts[0] holds the tally for digit 1, counts[8] the tally for digit 9.
/// sample_size always equals the sum of counts.
struct DigitHistogram {
  std::array<std::uint64_t, kNumDigits> counts{};
  std::uint64_t sample_size = 0;

  /// Builds a histogram from raw counts; sample_size is derived.
  static DigitHistogram from_counts(const std::array<std::uint64_t, kNumDigits>& counts);

  std::uint64_t count(int digit) const;
  void add(int digit, std::uint64_t times = 1);

  /// Relative frequencies; all zero for an empty histogram.
  std::array<double, kNumDigits> frequencies() const;

  DigitHistogram& operator+=(const DigitHistogram& other);
  friend bool operator==(const DigitHistogram&, const DigitHistogram&) = default;
};

DigitHistogram operator+(DigitHistogram lhs, const DigitHistogram& rhs);

/// Leading decimal digit of a positive integer, computed exactly.
int first_digit_int(const BigInt& n);

/// Leading decimal digit of a positive finite real.
int first_digit_real(double x);

/// Tallies a stream of digits; every value must lie in 1..9.
DigitHistogram histogram(std::span<const int> digits);

/// Rebuilds integer counts from printed percentages.
///
/// Each cell is round(n * pct / 100). If the rounded cells do not sum to n,
/// the shortfall or surplus is distributed one count at a time to the cells
/// with the largest (or smallest) rounding remainders, lower digit first on
/// ties. Throws std::invalid_argument when more than one count per digit
/// would have to move.
DigitHistogram histogram_from_percentages(std::span<const double, kNumDigits> pct,
                                          std::uint64_t n);

// One-row CSV: nine comma-separated counts.
std::string to_csv(const DigitHistogram& hist);
DigitHistogram histogram_from_csv(std::string_view line);

}  // namespace benford
