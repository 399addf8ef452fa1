#include "benford/sequences.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace benford {
namespace {

constexpr std::array<std::pair<SequenceKind, std::string_view>, 14> kKindNames{{
    {SequenceKind::squares, "squares"},
    {SequenceKind::cubes, "cubes"},
    {SequenceKind::square_roots, "square_roots"},
    {SequenceKind::primes_below, "primes_below"},
    {SequenceKind::pentagonal, "pentagonal"},
    {SequenceKind::fibonacci, "fibonacci"},
    {SequenceKind::catalan, "catalan"},
    {SequenceKind::bell, "bell"},
    {SequenceKind::partition, "partition"},
    {SequenceKind::lucky, "lucky"},
    {SequenceKind::ulam, "ulam"},
    {SequenceKind::keith, "keith"},
    {SequenceKind::idoneal, "idoneal"},
    {SequenceKind::custom_file, "custom_file"},
}};

template <class T>
std::vector<SequenceValue> as_values(const std::vector<T>& xs) {
  std::vector<SequenceValue> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.emplace_back(BigInt(x));
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

SequenceValue parse_value(std::string_view token, std::size_t line_no) {
  const auto fail = [&](const char* what) {
    return std::invalid_argument("sequence line " + std::to_string(line_no) + ": " + what + " '" +
                                 std::string(token) + "'");
  };
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  if (!digits.empty() && std::all_of(digits.begin(), digits.end(),
                                     [](char ch) { return ch >= '0' && ch <= '9'; })) {
    BigInt v(std::string{digits});
    if (v <= 0) throw fail("value must be positive");
    return v;
  }
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), x);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) throw fail("not a number");
  if (!(x > 0.0) || !std::isfinite(x)) throw fail("value must be positive and finite");
  return x;
}

}  // namespace

std::string_view to_string(SequenceKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<SequenceKind> parse_sequence_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  if (name == "primes") return SequenceKind::primes_below;
  if (name == "sqrt") return SequenceKind::square_roots;
  if (name == "file") return SequenceKind::custom_file;
  return std::nullopt;
}

int first_digit(const SequenceValue& value) {
  return std::visit(
      [](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, double>) {
          return first_digit_real(v);
        } else {
          return first_digit_int(v);
        }
      },
      value);
}

std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound <= 2) return primes;
  std::vector<bool> composite(bound, false);
  for (std::uint64_t i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j < bound; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<BigInt> fibonacci_numbers(std::uint64_t count) {
  std::vector<BigInt> out;
  out.reserve(count);
  BigInt a = 1, b = 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(a);
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return out;
}

std::vector<BigInt> catalan_numbers(std::uint64_t count) {
  // C(n+1) = C(n) * 2(2n+1) / (n+2); the division is exact.
  std::vector<BigInt> out;
  out.reserve(count);
  BigInt c = 1;
  for (std::uint64_t n = 0; n < count; ++n) {
    out.push_back(c);
    c = c * (2 * (2 * n + 1)) / (n + 2);
  }
  return out;
}

std::vector<BigInt> bell_numbers(std::uint64_t count) {
  std::vector<BigInt> out;
  out.reserve(count);
  std::vector<BigInt> row{1};  // row 0 of the triangle
  for (std::uint64_t n = 1; n <= count; ++n) {
    std::vector<BigInt> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
    out.push_back(row.front());
  }
  return out;
}

std::vector<BigInt> partition_numbers(std::uint64_t count) {
  std::vector<BigInt> p(count + 1);
  p[0] = 1;
  for (std::uint64_t n = 1; n <= count; ++n) {
    BigInt sum = 0;
    for (std::uint64_t k = 1;; ++k) {
      const std::uint64_t g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const std::uint64_t g2 = k * (3 * k + 1) / 2;
      BigInt term = p[n - g1];
      if (g2 <= n) term += p[n - g2];
      if (k % 2 == 1) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    p[n] = std::move(sum);
  }
  return {p.begin() + 1, p.end()};
}

std::vector<std::uint64_t> lucky_numbers(std::uint64_t count) {
  std::uint64_t bound = std::max<std::uint64_t>(64, count * 16);
  while (true) {
    std::vector<std::uint64_t> list;
    for (std::uint64_t v = 1; v <= bound; v += 2) list.push_back(v);
    // Sieving by position keeps every prefix exact even though the list is cut at `bound`.
    for (std::size_t i = 1; i < list.size() && list[i] <= list.size(); ++i) {
      const std::uint64_t step = list[i];
      std::vector<std::uint64_t> kept;
      kept.reserve(list.size());
      for (std::size_t j = 0; j < list.size(); ++j) {
        if ((j + 1) % step != 0) kept.push_back(list[j]);
      }
      list = std::move(kept);
    }
    if (list.size() >= count) {
      list.resize(count);
      return list;
    }
    bound *= 2;
  }
}

std::vector<std::uint64_t> ulam_numbers(std::uint64_t count) {
  std::vector<std::uint64_t> terms;
  if (count == 0) return terms;
  terms.push_back(1);
  if (count == 1) return terms;
  terms.push_back(2);
  // ways[s]: number of pairs of distinct terms summing to s, saturated at 2.
  std::vector<std::uint8_t> ways(8, 0);
  ways[3] = 1;
  while (terms.size() < count) {
    std::uint64_t c = terms.back() + 1;
    while (true) {
      if (c >= ways.size()) ways.resize(2 * c + 2, 0);
      if (ways[c] == 1) break;
      ++c;
    }
    for (std::uint64_t t : terms) {
      const std::uint64_t s = t + c;
      if (s >= ways.size()) ways.resize(2 * s + 2, 0);
      if (ways[s] < 2) ++ways[s];
    }
    terms.push_back(c);
  }
  return terms;
}

const std::vector<std::uint64_t>& idoneal_numbers() {
  static const std::vector<std::uint64_t> kIdoneal{
      1,   2,   3,   4,   5,   6,   7,   8,   9,   10,  12,  13,   15,   16,   18,   21,   22,
      24,  25,  28,  30,  33,  37,  40,  42,  45,  48,  57,  58,   60,   70,   72,   78,   85,
      88,  93,  102, 105, 112, 120, 130, 133, 165, 168, 177, 190,  210,  232,  240,  253,  273,
      280, 312, 330, 345, 357, 385, 408, 462, 520, 760, 840, 1320, 1365, 1848};
  return kIdoneal;
}

std::vector<SequenceValue> generate(const SequenceSpec& spec) {
  const auto n = spec.param;
  const bool needs_param =
      spec.kind != SequenceKind::idoneal && spec.kind != SequenceKind::custom_file;
  if (needs_param && n < 1) {
    throw std::invalid_argument("sequence '" + std::string(to_string(spec.kind)) +
                                "' needs param >= 1");
  }

  switch (spec.kind) {
    case SequenceKind::squares:
    case SequenceKind::cubes: {
      const unsigned power = spec.kind == SequenceKind::squares ? 2 : 3;
      std::vector<SequenceValue> out;
      out.reserve(n);
      for (std::uint64_t i = 1; i <= n; ++i) out.emplace_back(boost::multiprecision::pow(BigInt(i), power));
      return out;
    }
    case SequenceKind::square_roots: {
      if (spec.first < 1) throw std::invalid_argument("square_roots: first argument must be >= 1");
      std::vector<SequenceValue> out;
      out.reserve(n);
      for (std::uint64_t i = 0; i < n; ++i) {
        out.emplace_back(std::sqrt(static_cast<double>(spec.first + i)));
      }
      return out;
    }
    case SequenceKind::primes_below:
      return as_values(primes_below(n));
    case SequenceKind::pentagonal: {
      std::vector<SequenceValue> out;
      out.reserve(n);
      for (std::uint64_t i = 1; i <= n; ++i) out.emplace_back(BigInt(i) * (3 * BigInt(i) - 1) / 2);
      return out;
    }
    case SequenceKind::fibonacci:
      return as_values(fibonacci_numbers(n));
    case SequenceKind::catalan:
      return as_values(catalan_numbers(n));
    case SequenceKind::bell:
      return as_values(bell_numbers(n));
    case SequenceKind::partition:
      return as_values(partition_numbers(n));
    case SequenceKind::lucky:
      return as_values(lucky_numbers(n));
    case SequenceKind::ulam:
      return as_values(ulam_numbers(n));
    case SequenceKind::keith:
      return as_values(keith_numbers(n, spec.keith_search_digits));
    case SequenceKind::idoneal: {
      const auto& all = idoneal_numbers();
      if (n > all.size()) {
        throw std::invalid_argument("idoneal: only " + std::to_string(all.size()) +
                                    " idoneal numbers are known");
      }
      const auto take = n == 0 ? all.size() : n;
      return as_values(std::vector<std::uint64_t>(all.begin(), all.begin() + take));
    }
    case SequenceKind::custom_file:
      return read_sequence_file(spec.path);
  }
  throw std::invalid_argument("unknown sequence kind");
}

DigitHistogram digit_histogram_of(const SequenceSpec& spec) {
  DigitHistogram h;
  for (const auto& v : generate(spec)) h.add(first_digit(v));
  return h;
}

std::vector<SequenceValue> parse_sequence(std::istream& in) {
  std::vector<SequenceValue> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    out.push_back(parse_value(view, line_no));
  }
  return out;
}

std::vector<SequenceValue> read_sequence_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sequence file: " + path.string());
  return parse_sequence(in);
}

void write_sequence(std::ostream& out, const std::vector<SequenceValue>& values) {
  std::array<char, 32> buf{};
  for (const auto& v : values) {
    if (const auto* real = std::get_if<double>(&v)) {
      auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), *real);
      out.write(buf.data(), ptr - buf.data());
    } else {
      out << std::get<BigInt>(v);
    }
    out << '\n';
  }
}

}  // namespace benford
