#include "benford/tables.hpp"

#include <cstdio>
#include <sstream>

#include "benford/serialization.hpp"

namespace benford {
namespace {

std::string fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

std::string percent(double p) { return fixed(100.0 * p, 2); }

}  // namespace

TableRowResult reproduce_row(const ReferenceRow& row, const TableOptions& options) {
  TableRowResult result;
  result.row = row;
  try {
    result.histogram = row.histogram();
    result.benford = fit_benford(result.histogram);
    result.tspb = fit_tspb(result.histogram);
    switch (options.truncation) {
      case TableTruncation::per_row:
        result.pb = fit_pb(result.histogram, row.truncation);
        break;
      case TableTruncation::fixed:
        result.pb = fit_pb(result.histogram, options.m);
        break;
      case TableTruncation::adaptive:
        result.pb = fit_pb(result.histogram, AdaptiveTruncation{});
        break;
    }
  } catch (const std::exception& e) {
    result.error = e.what();
  }
  return result;
}

std::vector<TableRowResult> reproduce_tables(const std::vector<ReferenceRow>& rows,
                                             const TableOptions& options) {
  std::vector<TableRowResult> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(reproduce_row(row, options));
  return out;
}

std::string digit_table_markdown(const std::vector<TableRowResult>& results) {
  std::ostringstream out;
  out << "| Sequence | Source | n | 1 | 2 | 3 | 4 | 5 | 6 | 7 | 8 | 9 |\n";
  out << "|---|---|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|\n";
  for (const auto& r : results) {
    out << "| " << r.row.name << " | " << to_string(r.row.source) << " | ";
    if (r.error) {
      out << "error: " << *r.error << " |\n";
      continue;
    }
    out << r.histogram.sample_size;
    const auto f = r.histogram.frequencies();
    for (double x : f) out << " | " << fixed(100.0 * x, 1);
    out << " |\n";
  }
  return out.str();
}

std::string fit_table_markdown(const std::vector<TableRowResult>& results) {
  std::ostringstream out;
  out << "| Sequence | Source | n | Benford chi2 | p (%) | TSPB c | TSPB chi2 | p (%) "
         "| PB alpha | PB beta | m | PB chi2 | p (%) |\n";
  out << "|---|---|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|\n";
  for (const auto& r : results) {
    out << "| " << r.row.name << " | " << to_string(r.row.source) << " | ";
    if (r.error) {
      out << "error: " << *r.error << " |\n";
      continue;
    }
    const auto& tspb = std::get<TspbModel>(r.tspb.model);
    const auto& pb = std::get<PbModel>(r.pb.model);
    out << r.histogram.sample_size << " | " << fixed(r.benford.chi_square, 3) << " | "
        << percent(r.benford.p_value) << " | " << fixed(tspb.c, 5) << " | " << fixed(r.tspb.chi_square, 3)
        << " | " << percent(r.tspb.p_value) << " | " << fixed(pb.alpha, 5) << " | " << fixed(pb.beta, 5)
        << " | " << pb.m << " | " << fixed(r.pb.chi_square, 3) << " | " << percent(r.pb.p_value) << " |\n";
  }
  return out.str();
}

std::string fit_table_csv(const std::vector<TableRowResult>& results) {
  std::ostringstream out;
  out << "sequence,source,n,benford_chi2,benford_p,tspb_c,tspb_chi2,tspb_p,"
         "pb_alpha,pb_beta,pb_m,pb_chi2,pb_p,error\n";
  for (const auto& r : results) {
    out << r.row.name << ',' << to_string(r.row.source) << ',';
    if (r.error) {
      out << ",,,,,,,,,,," << *r.error << '\n';
      continue;
    }
    const auto& tspb = std::get<TspbModel>(r.tspb.model);
    const auto& pb = std::get<PbModel>(r.pb.model);
    out << r.histogram.sample_size << ',' << exact_decimal(r.benford.chi_square) << ','
        << exact_decimal(r.benford.p_value) << ',' << exact_decimal(tspb.c) << ','
        << exact_decimal(r.tspb.chi_square) << ',' << exact_decimal(r.tspb.p_value) << ','
        << exact_decimal(pb.alpha) << ',' << exact_decimal(pb.beta) << ',' << pb.m << ','
        << exact_decimal(r.pb.chi_square) << ',' << exact_decimal(r.pb.p_value) << ",\n";
  }
  return out.str();
}

nlohmann::json fit_table_json(const std::vector<TableRowResult>& results) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json j{{"sequence", r.row.name}, {"source", to_string(r.row.source)}};
    if (r.error) {
      j["error"] = *r.error;
    } else {
      j["histogram"] = r.histogram;
      j["benford"] = fit_to_json(r.benford);
      j["tspb"] = fit_to_json(r.tspb);
      j["pb"] = fit_to_json(r.pb);
    }
    rows.push_back(std::move(j));
  }
  return rows;
}

}  // namespace benford
