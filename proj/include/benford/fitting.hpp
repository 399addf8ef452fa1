#pragma once

#include <cstdint>
#include <variant>

#include "benford/digits.hpp"
#include "benford/distributions.hpp"

namespace benford {

/// Outcome of a minimum chi-square fit.
struct FitResult {
  ModelParams model;
  double chi_square = 0.0;
  /// 8 minus the number of estimated parameters.
  int df = 8;
  /// Upper-tail probability, not a percentage.
  double p_value = 1.0;
  bool converged = true;
  int evaluations = 0;
};

struct GoodnessOfFit {
  double chi_square = 0.0;
  int df = 8;
  double p_value = 1.0;
};

/// Pearson statistic sum_d (O_d - n p_d)^2 / (n p_d) without cell pooling.
/// Cells with p_d = 0 and O_d = 0 contribute nothing; p_d <= 0 with O_d > 0
/// throws std::invalid_argument.
double chi_square_stat(const DigitHistogram& hist, const Pmf& probs);

/// df = 8 - estimated_params, p = chi_square_sf(chi_square, df).
GoodnessOfFit goodness_of_fit(const DigitHistogram& hist, const ModelParams& model,
                              int estimated_params);

/// Benford has no free parameters; this only scores it.
FitResult fit_benford(const DigitHistogram& hist);

/// Minimum chi-square c over (0, 10]: a scan at step 0.25 followed by
/// golden-section refinement of every local minimum of the scan.
FitResult fit_tspb(const DigitHistogram& hist);

inline constexpr double kMaxPbAlpha = 1e9;

/// Fixed truncation index, or one chosen per (alpha, beta) so that the
/// truncated mass stays below `tolerance` (never above `cap`).
struct FixedTruncation {
  std::int64_t m = kDefaultTruncation;
};
struct AdaptiveTruncation {
  double tolerance = kAdaptiveDeficitTolerance;
  std::int64_t cap = 20'000;
};
using Truncation = std::variant<FixedTruncation, AdaptiveTruncation>;

/// Minimum chi-square (alpha, beta) by Nelder-Mead in (log alpha, log beta)
/// from a 6x6 grid of starting points; alpha is capped at kMaxPbAlpha.
FitResult fit_pb(const DigitHistogram& hist, std::int64_t m);
FitResult fit_pb(const DigitHistogram& hist, const Truncation& truncation);

}  // namespace benford
