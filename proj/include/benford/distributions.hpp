#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>

#include "benford/digits.hpp"

namespace benford {

using Pmf = std::array<double, kNumDigits>;

struct BenfordModel {
  friend bool operator==(const BenfordModel&, const BenfordModel&) = default;
};

/// Two-sided power Benford law with shape c > 0.
struct TspbModel {
  double c = 1.0;
  friend bool operator==(const TspbModel&, const TspbModel&) = default;
};

/// Pareto Benford law; the k-series of the mass function is cut after m terms.
struct PbModel {
  double alpha = 1.0;
  double beta = 1.0;
  std::int64_t m = 1000;
  friend bool operator==(const PbModel&, const PbModel&) = default;
};

using ModelParams = std::variant<BenfordModel, TspbModel, PbModel>;

/// Throws std::invalid_argument if a parameter is outside its domain.
void validate(const ModelParams& model);

std::string model_name(const ModelParams& model);

/// Number of free parameters a fit of this family estimates (0, 1 or 2).
int estimated_parameter_count(const ModelParams& model);

inline constexpr std::int64_t kDefaultTruncation = 1000;
inline constexpr double kAdaptiveDeficitTolerance = 1e-10;
inline constexpr std::int64_t kAdaptiveTruncationCap = 10'000'000;

double benford_pmf(int d);
double tspb_pmf(int d, double c);
double pb_pmf(int d, double alpha, double beta, std::int64_t m);

/// All nine PB probabilities in one pass over the k-series.
Pmf pb_pmf_vector(double alpha, double beta, std::int64_t m);

/// Mass left out by cutting the PB series after m terms: beta/(alpha+beta) * (m+1)^-alpha.
double pb_truncation_deficit(double alpha, double beta, std::int64_t m);

/// Smallest power-of-two multiple of kDefaultTruncation whose deficit is
/// below tolerance, or cap if none is.
std::int64_t adaptive_truncation(double alpha, double beta,
                                 double tolerance = kAdaptiveDeficitTolerance,
                                 std::int64_t cap = kAdaptiveTruncationCap);

Pmf pmf_vector(const ModelParams& model);

/// Regularized lower incomplete gamma P(a, x).
double regularized_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_gamma_q(double a, double x);

/// Upper tail P(X > x) of a chi-square variable with df degrees of freedom.
double chi_square_sf(double x, int df);

}  // namespace benford
