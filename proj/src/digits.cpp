#include "benford/digits.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace benford {
namespace {

void check_digit(int digit) {
  if (digit < 1 || digit > kNumDigits) {
    throw std::invalid_argument("digit out of range 1..9: " + std::to_string(digit));
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

DigitHistogram DigitHistogram::from_counts(const std::array<std::uint64_t, kNumDigits>& counts) {
  DigitHistogram h;
  h.counts = counts;
  h.sample_size = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  return h;
}

std::uint64_t DigitHistogram::count(int digit) const {
  check_digit(digit);
  return counts[digit - 1];
}

void DigitHistogram::add(int digit, std::uint64_t times) {
  check_digit(digit);
  counts[digit - 1] += times;
  sample_size += times;
}

std::array<double, kNumDigits> DigitHistogram::frequencies() const {
  std::array<double, kNumDigits> f{};
  if (sample_size == 0) return f;
  for (int i = 0; i < kNumDigits; ++i) {
    f[i] = static_cast<double>(counts[i]) / static_cast<double>(sample_size);
  }
  return f;
}

DigitHistogram& DigitHistogram::operator+=(const DigitHistogram& other) {
  for (int i = 0; i < kNumDigits; ++i) counts[i] += other.counts[i];
  sample_size += other.sample_size;
  return *this;
}

DigitHistogram operator+(DigitHistogram lhs, const DigitHistogram& rhs) {
  lhs += rhs;
  return lhs;
}

int first_digit_int(const BigInt& n) {
  if (n <= 0) throw std::invalid_argument("first_digit_int: value must be positive");
  // Strip trailing decimal chunks until the value fits in a machine word.
  static const BigInt kChunk = BigInt(10000000000000000000ull);  // 10^19
  BigInt v = n;
  while (v >= kChunk) v /= kChunk;
  auto small = v.convert_to<std::uint64_t>();
  while (small >= 10) small /= 10;
  return static_cast<int>(small);
}

int first_digit_real(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::invalid_argument("first_digit_real: value must be positive and finite");
  }
  // The shortest round-trip decimal form gives the digits the value was
  // written with; 7e-3 / 10^-3 in binary lands a hair below 7.
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific);
  const char* e = std::find(buf, res.ptr, 'e');
  double mantissa = 0.0;
  std::from_chars(buf, e, mantissa);
  if (std::abs(mantissa - 10.0) <= 1e-12 * 10.0) return 1;
  return buf[0] - '0';
}

DigitHistogram histogram(std::span<const int> digits) {
  DigitHistogram h;
  for (int d : digits) h.add(d);
  return h;
}

DigitHistogram histogram_from_percentages(std::span<const double, kNumDigits> pct,
                                          std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("histogram_from_percentages: n must be >= 1");
  std::array<double, kNumDigits> remainder{};
  std::array<std::uint64_t, kNumDigits> counts{};
  std::int64_t total = 0;
  for (int i = 0; i < kNumDigits; ++i) {
    if (!(pct[i] >= 0.0) || !std::isfinite(pct[i])) {
      throw std::invalid_argument("histogram_from_percentages: percentages must be >= 0");
    }
    const double raw = static_cast<double>(n) * pct[i] / 100.0;
    const double rounded = std::round(raw);
    counts[i] = static_cast<std::uint64_t>(rounded);
    remainder[i] = raw - rounded;
    total += static_cast<std::int64_t>(counts[i]);
  }

  std::int64_t diff = static_cast<std::int64_t>(n) - total;
  if (diff == 0) return DigitHistogram::from_counts(counts);
  if (std::abs(diff) > kNumDigits) {
    throw std::invalid_argument("histogram_from_percentages: percentages inconsistent with n");
  }

  std::array<int, kNumDigits> order{};
  std::iota(order.begin(), order.end(), 0);
  if (diff > 0) {
    // Cells rounded down the most gain a count first.
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return remainder[a] > remainder[b]; });
  } else {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return remainder[a] < remainder[b]; });
  }
  for (int k = 0; k < std::abs(diff); ++k) {
    const int cell = order[k];
    if (diff > 0) {
      ++counts[cell];
    } else {
      if (counts[cell] == 0) {
        throw std::invalid_argument("histogram_from_percentages: percentages inconsistent with n");
      }
      --counts[cell];
    }
  }
  return DigitHistogram::from_counts(counts);
}

std::string to_csv(const DigitHistogram& hist) {
  std::string out;
  for (int i = 0; i < kNumDigits; ++i) {
    if (i) out += ',';
    out += std::to_string(hist.counts[i]);
  }
  return out;
}

DigitHistogram histogram_from_csv(std::string_view line) {
  std::array<std::uint64_t, kNumDigits> counts{};
  line = trim(line);
  int index = 0;
  while (true) {
    const auto comma = line.find(',');
    const auto field = trim(line.substr(0, comma));
    if (index >= kNumDigits) throw std::invalid_argument("histogram CSV: expected 9 counts");
    if (field.empty() || field.front() == '-') {
      throw std::invalid_argument("histogram CSV: counts must be non-negative integers");
    }
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), counts[index]);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
      throw std::invalid_argument("histogram CSV: bad count '" + std::string(field) + "'");
    }
    ++index;
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  if (index != kNumDigits) throw std::invalid_argument("histogram CSV: expected 9 counts");
  return DigitHistogram::from_counts(counts);
}

}  // namespace benford
