#include "benford/sampling.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "benford/fitting.hpp"

namespace benford {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void check_unit(double u) {
  if (!(u >= 0.0 && u < 1.0)) throw std::invalid_argument("uniform variate must lie in [0, 1)");
}

}  // namespace

CharacteristicRoots gbm_char_roots(const GbmParams& params) {
  if (!(params.sigma > 0.0)) throw std::invalid_argument("gbm: sigma must be > 0");
  if (!(params.lambda > 0.0)) throw std::invalid_argument("gbm: lambda must be > 0");
  const double a = 0.5 * params.sigma * params.sigma;
  const double b = params.mu - a;
  const double c = -params.lambda;
  // a > 0 and c < 0, so the discriminant is positive and the roots have opposite signs.
  const double root = std::sqrt(b * b - 4.0 * a * c);
  const double q = -0.5 * (b + std::copysign(root, b));
  const double r1 = q / a;
  const double r2 = c / q;
  return r1 > 0.0 ? CharacteristicRoots{r1, -r2} : CharacteristicRoots{r2, -r1};
}

double sample_tspp(double alpha, double c, double u) {
  if (!(alpha > 0.0 && alpha < 2.0)) throw std::invalid_argument("tspp: alpha must lie in (0, 2)");
  if (!(c > 0.0)) throw std::invalid_argument("tspp: c must be > 0");
  check_unit(u);
  if (u <= alpha / 2.0) return alpha * std::pow(2.0 * u / alpha, 1.0 / c);
  return 2.0 - (2.0 - alpha) * std::pow(2.0 * (1.0 - u) / (2.0 - alpha), 1.0 / c);
}

double tspp_cdf(double alpha, double c, double w) {
  if (w <= 0.0) return 0.0;
  if (w >= 2.0) return 1.0;
  if (w <= alpha) return alpha / 2.0 * std::pow(w / alpha, c);
  return 1.0 - (2.0 - alpha) / 2.0 * std::pow((2.0 - w) / (2.0 - alpha), c);
}

double sample_dp(double alpha, double beta, double u) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw std::invalid_argument("dp: alpha and beta must be > 0");
  check_unit(u);
  const double below_one = alpha / (alpha + beta);
  if (u < below_one) return std::pow((alpha + beta) * u / alpha, 1.0 / beta);
  return std::pow((alpha + beta) * (1.0 - u) / beta, -1.0 / alpha);
}

double dp_cdf(double alpha, double beta, double w) {
  if (w <= 0.0) return 0.0;
  if (w <= 1.0) return alpha / (alpha + beta) * std::pow(w, beta);
  return 1.0 - beta / (alpha + beta) * std::pow(w, -alpha);
}

int first_digit_of_exponent(double w) {
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw std::invalid_argument("first_digit_of_exponent: w must be positive and finite");
  }
  // fl(log10 d) sits below the true log10 d for d = 3, 7, 8, 9 and above it
  // for the others (checked at 50 digits); a frac equal to a boundary that is
  // rounded down has not reached d yet.
  static const std::array<double, kNumDigits - 1> kBoundaries = [] {
    std::array<double, kNumDigits - 1> b{};
    for (int d = 2; d <= kNumDigits; ++d) b[d - 2] = std::log10(static_cast<double>(d));
    return b;
  }();
  static constexpr std::array<bool, kNumDigits - 1> kRoundedDown{false, true, false, false,
                                                                 false, true, true, true};
  const double frac = w - std::floor(w);
  int digit = 1;
  for (int i = 0; i < kNumDigits - 1; ++i) {
    if (frac > kBoundaries[i] || (frac == kBoundaries[i] && !kRoundedDown[i])) ++digit;
  }
  return digit;
}

UniformSource::UniformSource(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double UniformSource::operator()() {
  // Midpoints of a 2^-53 grid: never 0, never 1.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

DigitHistogram empirical_digit_pmf_sharded(const ModelParams& model, std::uint64_t n_samples,
                                           std::uint64_t seed, unsigned shard_count) {
  if (n_samples < 1) throw std::invalid_argument("empirical_digit_pmf: n_samples must be >= 1");
  if (shard_count < 1) throw std::invalid_argument("empirical_digit_pmf: shard_count must be >= 1");
  validate(model);

  auto draw = [&](UniformSource& uniform) {
    return std::visit(Overloaded{
                          [&](const BenfordModel&) { return uniform(); },
                          [&](const TspbModel& t) { return sample_tspp(1.0, t.c, uniform()); },
                          [&](const PbModel& p) { return sample_dp(p.alpha, p.beta, uniform()); },
                      },
                      model);
  };

  DigitHistogram total;
  for (unsigned shard = 0; shard < shard_count; ++shard) {
    const std::uint64_t share = n_samples / shard_count + (shard < n_samples % shard_count ? 1 : 0);
    UniformSource uniform(seed, shard);
    DigitHistogram part;
    for (std::uint64_t i = 0; i < share; ++i) part.add(first_digit_of_exponent(draw(uniform)));
    total += part;
  }
  return total;
}

DigitHistogram empirical_digit_pmf(const ModelParams& model, std::uint64_t n_samples,
                                   std::uint64_t seed) {
  return empirical_digit_pmf_sharded(model, n_samples, seed, 1);
}

VerificationReport compare_to_model(const DigitHistogram& empirical, const Pmf& model) {
  if (empirical.sample_size == 0) throw std::invalid_argument("compare_to_model: empty histogram");
  VerificationReport report;
  report.n_samples = empirical.sample_size;
  const double n = static_cast<double>(empirical.sample_size);
  const auto freq = empirical.frequencies();
  for (int d = 0; d < kNumDigits; ++d) {
    auto& row = report.rows[d];
    row.digit = d + 1;
    row.expected = model[d];
    row.observed = freq[d];
    const double sd = std::sqrt(n * model[d] * (1.0 - model[d]));
    row.z_score = sd > 0.0 ? (static_cast<double>(empirical.counts[d]) - n * model[d]) / sd : 0.0;
    report.max_abs_z = std::max(report.max_abs_z, std::abs(row.z_score));
  }
  report.chi_square = chi_square_stat(empirical, model);
  return report;
}

std::string to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out.precision(10);
  out << "digit,expected,observed,z\n";
  for (const auto& row : report.rows) {
    out << row.digit << ',' << row.expected << ',' << row.observed << ',' << row.z_score << '\n';
  }
  return out.str();
}

}  // namespace benford
