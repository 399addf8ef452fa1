#include "benford/data_files.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace benford {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto pos = line.find(sep);
    fields.push_back(trim(line.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    line.remove_prefix(pos + 1);
  }
  return fields;
}

template <class T>
T parse_number(std::string_view field, const std::string& where) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::runtime_error(where + ": bad number '" + std::string(field) + "'");
  }
  return value;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data file: " + path.string());
  return in;
}

}  // namespace

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("BENFORD_DATA_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return BENFORD_DEFAULT_DATA_DIR;
}

KeithList load_keith_list(const std::filesystem::path& path) {
  auto in = open(path);
  KeithList list;
  std::string line;
  constexpr std::string_view kCompleteTag = "complete-through-digits:";
  while (std::getline(in, line)) {
    std::string_view view = trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      if (const auto pos = view.find(kCompleteTag); pos != std::string_view::npos) {
        list.complete_through_digits =
            parse_number<int>(trim(view.substr(pos + kCompleteTag.size())), path.string());
      }
      continue;
    }
    list.values.emplace_back(std::string(view));
  }
  return list;
}

KeithList load_keith_list() { return load_keith_list(data_dir() / "keith_numbers.txt"); }

std::vector<BigInt> load_keith_numbers() { return load_keith_list().values; }

std::string_view to_string(RowSource source) {
  return source == RowSource::generated ? "generated" : "reconstructed";
}

DigitHistogram ReferenceRow::reconstructed_histogram() const {
  return histogram_from_percentages(percentages, sample_size);
}

DigitHistogram ReferenceRow::histogram() const {
  if (source == RowSource::generated && generator) return digit_histogram_of(*generator);
  return reconstructed_histogram();
}

bool ReferenceRow::matches_percentages(const DigitHistogram& hist) const {
  if (hist.sample_size != sample_size) return false;
  const auto freq = hist.frequencies();
  for (int d = 0; d < kNumDigits; ++d) {
    if (std::abs(std::round(1000.0 * freq[d]) / 10.0 - percentages[d]) > 1e-9) return false;
  }
  return true;
}

// Columns: name, sample_size, source, kind, param, m, pct1..pct9.
std::vector<ReferenceRow> load_reference_table(const std::filesystem::path& path) {
  auto in = open(path);
  std::vector<ReferenceRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    const auto fields = split(view, ',');
    if (fields.size() != 6 + kNumDigits) throw std::runtime_error(where + ": expected 15 fields");

    ReferenceRow row;
    row.name = std::string(fields[0]);
    row.sample_size = parse_number<std::uint64_t>(fields[1], where);
    if (fields[2] == "generated") {
      row.source = RowSource::generated;
    } else if (fields[2] == "reconstructed") {
      row.source = RowSource::reconstructed;
    } else {
      throw std::runtime_error(where + ": unknown source '" + std::string(fields[2]) + "'");
    }
    if (fields[3] != "-") {
      const auto kind = parse_sequence_kind(fields[3]);
      if (!kind) throw std::runtime_error(where + ": unknown sequence '" + std::string(fields[3]) + "'");
      SequenceSpec spec;
      spec.kind = *kind;
      spec.param = parse_number<std::uint64_t>(fields[4], where);
      row.generator = spec;
    } else if (row.source == RowSource::generated) {
      throw std::runtime_error(where + ": generated row without a generator");
    }
    row.truncation = parse_number<std::int64_t>(fields[5], where);
    for (int d = 0; d < kNumDigits; ++d) row.percentages[d] = parse_number<double>(fields[6 + d], where);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ReferenceRow> load_reference_table() {
  return load_reference_table(data_dir() / "first_digit_table.csv");
}

}  // namespace benford
