// Command-line front end: PMF evaluation, sequence generation, fitting,
// reference-table reproduction and Monte Carlo verification.
//
// Exit codes: 0 success, 1 computational failure or failed verification,
// 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "benford/data_files.hpp"
#include "benford/digits.hpp"
#include "benford/distributions.hpp"
#include "benford/fitting.hpp"
#include "benford/sampling.hpp"
#include "benford/sequences.hpp"
#include "benford/serialization.hpp"
#include "benford/tables.hpp"

namespace {

using namespace benford;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelFlags {
  std::string model = "benford";
  std::optional<double> c;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<std::int64_t> m;
  bool adaptive = false;
};

struct SourceFlags {
  std::vector<std::string> seq;
  std::uint64_t first = 1;
  int keith_search_digits = 0;
  std::string counts;
  std::string file;
  std::string hist;
  std::string row;
};

struct Options {
  ModelFlags model;
  SourceFlags source;
  std::string format = "csv";
  std::string table_format = "markdown";
  std::string truncation = "fixed";
  std::string output;
  std::uint64_t n_samples = 100000;
  std::uint64_t seed = 0;
  unsigned shards = 1;
  double z_limit = 4.0;
  bool digit_table = false;
};

void add_model_flags(CLI::App* cmd, ModelFlags& f, bool family_only) {
  std::vector<std::string> names{"benford", "tspb", "pb"};
  if (family_only) names.push_back("all");
  cmd->add_option("--model", f.model, "Model family")->check(CLI::IsMember(names));
  if (!family_only) {
    cmd->add_option("--c", f.c, "TSPB shape c > 0");
    cmd->add_option("--alpha", f.alpha, "PB alpha > 0");
    cmd->add_option("--beta", f.beta, "PB beta > 0");
  }
  cmd->add_option("--m", f.m, "PB truncation index");
  cmd->add_flag("--adaptive", f.adaptive, "Grow the PB truncation until the lost mass is below 1e-10");
}

void add_format_flag(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "markdown"}));
}

void add_sequence_flags(CLI::App* cmd, SourceFlags& s) {
  cmd->add_option("--seq", s.seq, "Sequence kind and parameter, e.g. --seq squares 100")
      ->expected(1, 2);
  cmd->add_option("--first", s.first, "First argument for square_roots");
  cmd->add_option("--keith-search-digits", s.keith_search_digits,
                  "Search for Keith numbers beyond the bundled list up to this many digits");
  cmd->add_option("--file", s.file, "Custom sequence file (one value per line)");
}

ModelParams model_from_flags(const ModelFlags& f) {
  auto require = [](const std::optional<double>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing ") + flag);
    return *v;
  };
  ModelParams model;
  if (f.model == "benford") {
    model = BenfordModel{};
  } else if (f.model == "tspb") {
    model = TspbModel{require(f.c, "--c")};
  } else {
    const double alpha = require(f.alpha, "--alpha");
    const double beta = require(f.beta, "--beta");
    if (alpha <= 0.0 || beta <= 0.0) throw UsageError("--alpha and --beta must be > 0");
    std::int64_t m = f.m.value_or(kDefaultTruncation);
    if (f.adaptive) m = adaptive_truncation(alpha, beta);
    model = PbModel{alpha, beta, m};
  }
  try {
    validate(model);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return model;
}

SequenceSpec sequence_from_flags(const SourceFlags& s) {
  SequenceSpec spec;
  if (!s.file.empty() && s.seq.empty()) {
    spec.kind = SequenceKind::custom_file;
    spec.path = s.file;
    return spec;
  }
  if (s.seq.empty()) throw UsageError("no sequence given (use --seq KIND PARAM or --file PATH)");
  const auto kind = parse_sequence_kind(s.seq[0]);
  if (!kind) throw UsageError("unknown sequence kind '" + s.seq[0] + "'");
  spec.kind = *kind;
  if (spec.kind == SequenceKind::custom_file) {
    if (s.file.empty()) throw UsageError("custom_file needs --file PATH");
    spec.path = s.file;
    return spec;
  }
  if (s.seq.size() < 2 && spec.kind != SequenceKind::idoneal) {
    throw UsageError("sequence '" + s.seq[0] + "' needs a parameter");
  }
  if (s.seq.size() == 2) {
    try {
      std::size_t used = 0;
      spec.param = std::stoull(s.seq[1], &used);
      if (used != s.seq[1].size() || s.seq[1].front() == '-') throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw UsageError("bad sequence parameter '" + s.seq[1] + "'");
    }
  }
  spec.first = s.first;
  spec.keith_search_digits = s.keith_search_digits;
  return spec;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DigitHistogram histogram_from_file(const std::string& path) {
  const std::string text = slurp(path);
  try {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      return nlohmann::json::parse(text).get<DigitHistogram>();
    }
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return histogram_from_csv(line);
    }
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad histogram file: ") + e.what());
  }
  throw UsageError("histogram file holds no counts");
}

std::optional<ReferenceRow> find_row(const std::string& name) {
  for (auto& row : load_reference_table()) {
    if (row.name == name) return row;
  }
  return std::nullopt;
}

// Resolves the histogram source of `fit`/`hist`. Generator failures are
// computational (exit 1); malformed inputs are usage errors (exit 2).
DigitHistogram resolve_histogram(const SourceFlags& s, std::string& label) {
  const int given = !s.seq.empty() + !s.counts.empty() + (!s.file.empty() && s.seq.empty()) +
                    !s.hist.empty() + !s.row.empty();
  if (given != 1) throw UsageError("give exactly one of --seq, --counts, --file, --hist, --row");

  DigitHistogram hist;
  if (!s.counts.empty()) {
    try {
      hist = histogram_from_csv(s.counts);
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad --counts: ") + e.what());
    }
    label = "counts";
  } else if (!s.hist.empty()) {
    hist = histogram_from_file(s.hist);
    label = s.hist;
  } else if (!s.row.empty()) {
    const auto row = find_row(s.row);
    if (!row) throw UsageError("no reference row named '" + s.row + "'");
    hist = row->histogram();
    label = row->name;
  } else {
    const SequenceSpec spec = sequence_from_flags(s);
    hist = digit_histogram_of(spec);
    label = spec.kind == SequenceKind::custom_file
                ? spec.path.string()
                : std::string(to_string(spec.kind)) + " " + std::to_string(spec.param);
  }
  if (hist.sample_size == 0) throw UsageError("histogram is empty");
  return hist;
}

std::string fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw std::runtime_error("cannot write " + opt.output);
  out << text;
}

int run_pmf(const Options& opt) {
  const ModelParams model = model_from_flags(opt.model);
  const Pmf p = pmf_vector(model);
  std::optional<double> deficit;
  if (const auto* pb = std::get_if<PbModel>(&model)) deficit = pb_truncation_deficit(pb->alpha, pb->beta, pb->m);

  std::ostringstream out;
  if (opt.format == "json") {
    nlohmann::json j = model_to_json(model);
    j["pmf"] = p;
    if (deficit) j["truncation_deficit"] = *deficit;
    out << j.dump(2) << '\n';
  } else if (opt.format == "markdown") {
    out << "| digit | probability |\n|---:|---:|\n";
    for (int d = 0; d < kNumDigits; ++d) out << "| " << d + 1 << " | " << fixed(p[d], 6) << " |\n";
    if (deficit) out << "\ntruncation deficit: " << exact_decimal(*deficit) << '\n';
  } else {
    out << "digit,probability\n";
    for (int d = 0; d < kNumDigits; ++d) out << d + 1 << ',' << exact_decimal(p[d]) << '\n';
    if (deficit) out << "deficit," << exact_decimal(*deficit) << '\n';
  }
  emit(opt, out.str());
  return kExitOk;
}

int run_generate(const Options& opt) {
  const SequenceSpec spec = sequence_from_flags(opt.source);
  const auto values = generate(spec);
  std::ostringstream out;
  write_sequence(out, values);
  emit(opt, out.str());
  return kExitOk;
}

int run_hist(const Options& opt) {
  std::string label;
  const DigitHistogram hist = resolve_histogram(opt.source, label);
  std::ostringstream out;
  if (opt.format == "json") {
    out << nlohmann::json(hist).dump() << '\n';
  } else if (opt.format == "markdown") {
    out << "| digit | count | percent |\n|---:|---:|---:|\n";
    const auto f = hist.frequencies();
    for (int d = 0; d < kNumDigits; ++d) {
      out << "| " << d + 1 << " | " << hist.counts[d] << " | " << fixed(100.0 * f[d], 1) << " |\n";
    }
  } else {
    out << to_csv(hist) << '\n';
  }
  emit(opt, out.str());
  return kExitOk;
}

int run_fit(const Options& opt) {
  std::string label;
  const DigitHistogram hist = resolve_histogram(opt.source, label);

  Truncation truncation = FixedTruncation{opt.model.m.value_or(kDefaultTruncation)};
  if (opt.model.adaptive || opt.truncation == "adaptive") {
    truncation = AdaptiveTruncation{};
  } else if (opt.truncation == "row") {
    if (opt.source.row.empty()) throw UsageError("--truncation row needs --row NAME");
    truncation = FixedTruncation{find_row(opt.source.row)->truncation};
  }
  if (const auto* f = std::get_if<FixedTruncation>(&truncation); f && f->m < 1) {
    throw UsageError("--m must be >= 1");
  }

  std::vector<FitResult> fits;
  const auto& family = opt.model.model;
  if (family == "benford" || family == "all") fits.push_back(fit_benford(hist));
  if (family == "tspb" || family == "all") fits.push_back(fit_tspb(hist));
  if (family == "pb" || family == "all") fits.push_back(fit_pb(hist, truncation));

  std::ostringstream out;
  if (opt.format == "json") {
    nlohmann::json j{{"sequence", label}, {"histogram", hist}, {"fits", nlohmann::json::array()}};
    for (const auto& f : fits) j["fits"].push_back(fit_to_json(f));
    out << j.dump(2) << '\n';
  } else if (opt.format == "markdown") {
    out << "| model | params | chi2 | df | p (%) |\n|---|---|---:|---:|---:|\n";
    for (const auto& f : fits) {
      out << "| " << model_name(f.model) << " | " << format_params(f.model) << " | "
          << fixed(f.chi_square, 3) << " | " << f.df << " | " << fixed(100.0 * f.p_value, 2) << " |\n";
    }
  } else {
    out << fit_csv_header() << '\n';
    for (const auto& f : fits) out << fit_to_csv_row(label, f) << '\n';
  }
  emit(opt, out.str());
  return kExitOk;
}

int run_tables(const Options& opt) {
  TableOptions table_opt;
  if (opt.truncation == "adaptive") {
    table_opt.truncation = TableTruncation::adaptive;
  } else if (opt.model.m) {
    table_opt.truncation = TableTruncation::fixed;
    table_opt.m = *opt.model.m;
  }
  const auto results = reproduce_tables(load_reference_table(), table_opt);

  std::ostringstream out;
  if (opt.table_format == "json") {
    out << fit_table_json(results).dump(2) << '\n';
  } else if (opt.table_format == "markdown") {
    if (opt.digit_table) out << digit_table_markdown(results) << '\n';
    out << fit_table_markdown(results);
  } else {
    out << fit_table_csv(results);
  }
  emit(opt, out.str());
  for (const auto& r : results) {
    if (r.error) return kExitFailure;
  }
  return kExitOk;
}

int run_verify(const Options& opt) {
  ModelParams model = model_from_flags(opt.model);
  if (auto* pb = std::get_if<PbModel>(&model); pb && !opt.model.m) {
    pb->m = adaptive_truncation(pb->alpha, pb->beta);
  }
  if (opt.n_samples < 1) throw UsageError("--n must be >= 1");
  if (opt.n_samples < 1000) std::cerr << "note: fewer than 1000 samples; z-scores are noisy\n";

  const DigitHistogram empirical = empirical_digit_pmf_sharded(model, opt.n_samples, opt.seed, opt.shards);
  VerificationReport report = compare_to_model(empirical, pmf_vector(model));
  if (const auto* pb = std::get_if<PbModel>(&model)) {
    report.truncation_deficit = pb_truncation_deficit(pb->alpha, pb->beta, pb->m);
  }
  const bool pass = report.passes(opt.z_limit);

  std::ostringstream out;
  if (opt.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"digit", r.digit}, {"expected", r.expected}, {"observed", r.observed}, {"z", r.z_score}});
    }
    out << nlohmann::json{{"model", model_to_json(model)},
                          {"n", report.n_samples},
                          {"seed", opt.seed},
                          {"rows", rows},
                          {"chi_square", report.chi_square},
                          {"max_abs_z", report.max_abs_z},
                          {"truncation_deficit", report.truncation_deficit},
                          {"pass", pass}}
               .dump(2)
        << '\n';
  } else if (opt.format == "markdown") {
    out << "| digit | expected | observed | z |\n|---:|---:|---:|---:|\n";
    for (const auto& r : report.rows) {
      out << "| " << r.digit << " | " << fixed(r.expected, 6) << " | " << fixed(r.observed, 6) << " | "
          << fixed(r.z_score, 3) << " |\n";
    }
    out << "\nchi-square " << fixed(report.chi_square, 3) << ", max |z| " << fixed(report.max_abs_z, 3)
        << ": " << (pass ? "PASS" : "FAIL") << '\n';
  } else {
    out << to_csv(report);
    out << "# chi_square," << exact_decimal(report.chi_square) << '\n';
    out << "# max_abs_z," << exact_decimal(report.max_abs_z) << '\n';
    out << "# result," << (pass ? "pass" : "fail") << '\n';
  }
  emit(opt, out.str());
  return pass ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-digit laws: Benford, two-sided power Benford and Pareto Benford"};
  app.require_subcommand(1, 1);
  Options opt;

  auto* pmf = app.add_subcommand("pmf", "Print the first-digit probabilities of a model");
  add_model_flags(pmf, opt.model, false);
  add_format_flag(pmf, opt.format);

  auto* gen = app.add_subcommand("generate", "Write a sequence, one value per line");
  add_sequence_flags(gen, opt.source);
  gen->add_option("-o,--output", opt.output, "Output file (default stdout)");

  auto* hist = app.add_subcommand("hist", "First-digit histogram of a sequence or counts");
  add_sequence_flags(hist, opt.source);
  hist->add_option("--counts", opt.source.counts, "Nine comma-separated counts");
  hist->add_option("--hist", opt.source.hist, "Histogram file (CSV row or JSON)");
  hist->add_option("--row", opt.source.row, "Reference table row name");
  add_format_flag(hist, opt.format);

  auto* fit = app.add_subcommand("fit", "Minimum chi-square fit of a first-digit histogram");
  add_sequence_flags(fit, opt.source);
  fit->add_option("--counts", opt.source.counts, "Nine comma-separated counts");
  fit->add_option("--hist", opt.source.hist, "Histogram file (CSV row or JSON)");
  fit->add_option("--row", opt.source.row, "Reference table row name");
  add_model_flags(fit, opt.model, true);
  fit->add_option("--truncation", opt.truncation, "PB truncation mode")
      ->check(CLI::IsMember({"fixed", "adaptive", "row"}));
  add_format_flag(fit, opt.format);

  auto* tables = app.add_subcommand("tables", "Reproduce the reference fit table");
  tables->add_option("--m", opt.model.m, "Use this PB truncation for every row");
  tables->add_option("--truncation", opt.truncation, "PB truncation mode")
      ->check(CLI::IsMember({"fixed", "adaptive", "row"}));
  tables->add_flag("--digits", opt.digit_table, "Also print the first-digit percentage table (markdown)");
  tables->add_option("-o,--output", opt.output, "Output file (default stdout)");
  add_format_flag(tables, opt.table_format);

  auto* verify = app.add_subcommand("verify", "Monte Carlo check of a model's first-digit law");
  add_model_flags(verify, opt.model, false);
  verify->add_option("--n", opt.n_samples, "Number of samples");
  verify->add_option("--seed", opt.seed, "Random seed");
  verify->add_option("--shards", opt.shards, "Independent sub-streams to merge")->check(CLI::PositiveNumber);
  verify->add_option("--z-limit", opt.z_limit, "Largest accepted |z|");
  add_format_flag(verify, opt.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  try {
    if (pmf->parsed()) return run_pmf(opt);
    if (gen->parsed()) return run_generate(opt);
    if (hist->parsed()) return run_hist(opt);
    if (fit->parsed()) return run_fit(opt);
    if (tables->parsed()) return run_tables(opt);
    if (verify->parsed()) return run_verify(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
