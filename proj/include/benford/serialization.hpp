#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "benford/digits.hpp"
#include "benford/distributions.hpp"
#include "benford/fitting.hpp"

namespace benford {

// {"counts": [9 ints], "n": int}
void to_json(nlohmann::json& j, const DigitHistogram& hist);
void from_json(const nlohmann::json& j, DigitHistogram& hist);

// {"model": "benford"|"tspb"|"pb", "c"?, "alpha"?, "beta"?, "m"?}
nlohmann::json model_to_json(const ModelParams& model);
ModelParams model_from_json(const nlohmann::json& j);

// {"model": {...}, "chi_square", "df", "p_value", "converged", "evaluations"}
nlohmann::json fit_to_json(const FitResult& fit);
FitResult fit_from_json(const nlohmann::json& j);

/// "c=..." or "alpha=...;beta=...;m=..."; empty for Benford.
std::string format_params(const ModelParams& model);

std::string fit_csv_header();
/// sequence,model,params,chi2,df,p with round-trip precision.
std::string fit_to_csv_row(std::string_view sequence, const FitResult& fit);

/// Shortest decimal text that parses back to the same double.
std::string exact_decimal(double x);

}  // namespace benford
