#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include "benford/digits.hpp"
#include "benford/distributions.hpp"

namespace benford {

/// Geometric Brownian motion observed at an exponentially distributed time.
struct GbmParams {
  double mu = 0.0;      // drift per unit time
  double sigma = 1.0;   // volatility per sqrt-time, > 0
  double lambda = 1.0;  // rate of the observation time, > 0
};

struct CharacteristicRoots {
  double alpha = 0.0;  // the positive root
  double beta = 0.0;   // minus the negative root
};

/// Roots of sigma^2/2 z^2 + (mu - sigma^2/2) z - lambda = 0.
CharacteristicRoots gbm_char_roots(const GbmParams& params);

/// Inverse CDF of the two-sided power distribution on (0, 2) with mode alpha
/// and shape c, evaluated at u in [0, 1).
double sample_tspp(double alpha, double c, double u);

/// Inverse CDF of the double Pareto distribution with unit scale:
/// density proportional to w^(beta-1) below 1 and w^(-alpha-1) above.
double sample_dp(double alpha, double beta, double u);

/// CDFs matching the two samplers.
double tspp_cdf(double alpha, double c, double w);
double dp_cdf(double alpha, double beta, double w);

/// First digit of 10^w, i.e. floor(10^frac(w)), decided by comparing frac(w)
/// with the boundaries log10(2), ..., log10(9).
int first_digit_of_exponent(double w);

/// Deterministic uniform source on the open interval (0, 1).
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed, std::uint64_t stream = 0);
  double operator()();

 private:
  std::mt19937_64 engine_;
};

/// Draws n_samples exponents from the model's generating distribution
/// (uniform on (0,1) for Benford, TSPP(1, c) for TSPB, DP(1, alpha, beta) for
/// PB), maps each to its first digit and tallies.
DigitHistogram empirical_digit_pmf(const ModelParams& model, std::uint64_t n_samples,
                                   std::uint64_t seed);

/// The same draw split into independent sub-streams (seed, shard) whose
/// histograms are added up; shard_count = 1 equals the unsharded call.
DigitHistogram empirical_digit_pmf_sharded(const ModelParams& model, std::uint64_t n_samples,
                                           std::uint64_t seed, unsigned shard_count);

/// Per-digit comparison of an empirical histogram with a model PMF.
struct VerificationRow {
  int digit = 0;
  double expected = 0.0;   // model probability
  double observed = 0.0;   // empirical frequency
  double z_score = 0.0;    // (count - n p) / sqrt(n p (1 - p))
};

struct VerificationReport {
  std::array<VerificationRow, kNumDigits> rows{};
  std::uint64_t n_samples = 0;
  double chi_square = 0.0;
  double max_abs_z = 0.0;
  /// Mass the model PMF leaves out (PB truncation), zero otherwise.
  double truncation_deficit = 0.0;

  bool passes(double z_limit) const { return max_abs_z < z_limit; }
};

VerificationReport compare_to_model(const DigitHistogram& empirical, const Pmf& model);

/// CSV with header "digit,expected,observed,z".
std::string to_csv(const VerificationReport& report);

}  // namespace benford
