#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "benford/digits.hpp"

namespace benford {

enum class SequenceKind {
  squares,
  cubes,
  square_roots,
  primes_below,
  pentagonal,
  fibonacci,
  catalan,
  bell,
  partition,
  lucky,
  ulam,
  keith,
  idoneal,
  custom_file,
};

std::string_view to_string(SequenceKind kind);
std::optional<SequenceKind> parse_sequence_kind(std::string_view name);

/// What to generate. `param` is a count for most kinds and an exclusive
/// upper bound for primes_below.
struct SequenceSpec {
  SequenceKind kind = SequenceKind::squares;
  std::uint64_t param = 0;
  /// First argument for square_roots: sqrt(first), ..., sqrt(first + param - 1).
  std::uint64_t first = 1;
  /// Input path for custom_file.
  std::filesystem::path path;
  /// Keith numbers beyond the bundled list are searched for up to this many
  /// digits. Zero disables the search.
  int keith_search_digits = 0;
};

using SequenceValue = std::variant<BigInt, double>;

int first_digit(const SequenceValue& value);

std::vector<SequenceValue> generate(const SequenceSpec& spec);
DigitHistogram digit_histogram_of(const SequenceSpec& spec);

// Individual generators.
std::vector<std::uint64_t> primes_below(std::uint64_t bound);
/// F(1)..F(count) with F(1) = F(2) = 1.
std::vector<BigInt> fibonacci_numbers(std::uint64_t count);
/// C(0)..C(count - 1).
std::vector<BigInt> catalan_numbers(std::uint64_t count);
/// B(1)..B(count), read off the Bell triangle.
std::vector<BigInt> bell_numbers(std::uint64_t count);
/// p(1)..p(count) by Euler's pentagonal-number recurrence.
std::vector<BigInt> partition_numbers(std::uint64_t count);
std::vector<std::uint64_t> lucky_numbers(std::uint64_t count);
/// Terms of the (1, 2)-Ulam sequence.
std::vector<std::uint64_t> ulam_numbers(std::uint64_t count);
/// The 65 known idoneal numbers.
const std::vector<std::uint64_t>& idoneal_numbers();

bool is_keith_number(const BigInt& n);
/// All Keith numbers with exactly `digits` decimal digits (2 <= digits <= 12),
/// found by splitting the digit vector and matching the two halves.
std::vector<std::uint64_t> keith_numbers_with_digits(int digits);
/// First `count` Keith numbers: the bundled list, extended by search when
/// spec.keith_search_digits allows it.
std::vector<BigInt> keith_numbers(std::uint64_t count, int search_digits = 0);

/// Custom sequence file: one positive decimal integer (any length) or real per
/// line. Blank lines and lines starting with '#' are skipped; trailing
/// '#' comments are stripped.
std::vector<SequenceValue> read_sequence_file(const std::filesystem::path& path);
std::vector<SequenceValue> parse_sequence(std::istream& in);
void write_sequence(std::ostream& out, const std::vector<SequenceValue>& values);

}  // namespace benford
