#include "benford/serialization.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace benford {

std::string exact_decimal(double x) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

void to_json(nlohmann::json& j, const DigitHistogram& hist) {
  j = nlohmann::json{{"counts", hist.counts}, {"n", hist.sample_size}};
}

void from_json(const nlohmann::json& j, DigitHistogram& hist) {
  const auto& counts = j.at("counts");
  if (!counts.is_array() || counts.size() != kNumDigits) {
    throw std::invalid_argument("histogram JSON: \"counts\" must hold 9 values");
  }
  std::array<std::uint64_t, kNumDigits> c{};
  for (int d = 0; d < kNumDigits; ++d) {
    if (!counts[d].is_number_unsigned() && !(counts[d].is_number_integer() && counts[d].get<long long>() >= 0)) {
      throw std::invalid_argument("histogram JSON: counts must be non-negative integers");
    }
    c[d] = counts[d].get<std::uint64_t>();
  }
  hist = DigitHistogram::from_counts(c);
  if (j.contains("n") && j.at("n").get<std::uint64_t>() != hist.sample_size) {
    throw std::invalid_argument("histogram JSON: \"n\" disagrees with the counts");
  }
}

nlohmann::json model_to_json(const ModelParams& model) {
  if (std::holds_alternative<BenfordModel>(model)) return {{"model", "benford"}};
  if (const auto* t = std::get_if<TspbModel>(&model)) return {{"model", "tspb"}, {"c", t->c}};
  const auto& p = std::get<PbModel>(model);
  return {{"model", "pb"}, {"alpha", p.alpha}, {"beta", p.beta}, {"m", p.m}};
}

ModelParams model_from_json(const nlohmann::json& j) {
  const auto name = j.at("model").get<std::string>();
  ModelParams model;
  if (name == "benford") {
    model = BenfordModel{};
  } else if (name == "tspb") {
    model = TspbModel{j.at("c").get<double>()};
  } else if (name == "pb") {
    model = PbModel{j.at("alpha").get<double>(), j.at("beta").get<double>(),
                    j.value("m", kDefaultTruncation)};
  } else {
    throw std::invalid_argument("unknown model '" + name + "'");
  }
  validate(model);
  return model;
}

nlohmann::json fit_to_json(const FitResult& fit) {
  return {{"model", model_to_json(fit.model)}, {"chi_square", fit.chi_square},
          {"df", fit.df},                      {"p_value", fit.p_value},
          {"converged", fit.converged},        {"evaluations", fit.evaluations}};
}

FitResult fit_from_json(const nlohmann::json& j) {
  FitResult fit;
  fit.model = model_from_json(j.at("model"));
  fit.chi_square = j.at("chi_square").get<double>();
  fit.df = j.at("df").get<int>();
  fit.p_value = j.at("p_value").get<double>();
  fit.converged = j.value("converged", true);
  fit.evaluations = j.value("evaluations", 0);
  return fit;
}

std::string format_params(const ModelParams& model) {
  if (const auto* t = std::get_if<TspbModel>(&model)) return "c=" + exact_decimal(t->c);
  if (const auto* p = std::get_if<PbModel>(&model)) {
    return "alpha=" + exact_decimal(p->alpha) + ";beta=" + exact_decimal(p->beta) +
           ";m=" + std::to_string(p->m);
  }
  return "";
}

std::string fit_csv_header() { return "sequence,model,params,chi2,df,p"; }

std::string fit_to_csv_row(std::string_view sequence, const FitResult& fit) {
  return std::string(sequence) + ',' + model_name(fit.model) + ',' + format_params(fit.model) + ',' +
         exact_decimal(fit.chi_square) + ',' + std::to_string(fit.df) + ',' + exact_decimal(fit.p_value);
}

}  // namespace benford
