#include "benford/distributions.hpp"

#include <cmath>
#include <stdexcept>

namespace benford {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void check_digit(int d) {
  if (d < 1 || d > kNumDigits) throw std::invalid_argument("digit out of range 1..9");
}

void check_tspb(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("TSPB: c must be > 0");
}

void check_pb(double alpha, double beta, std::int64_t m) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("PB: alpha must be > 0");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("PB: beta must be > 0");
  if (m < 1) throw std::invalid_argument("PB: truncation m must be >= 1");
}

// log10 of 1..10; log10(1) and log10(10) are exact.
const std::array<double, kNumDigits + 1>& log_table() {
  static const auto table = [] {
    std::array<double, kNumDigits + 1> t{};
    for (int i = 0; i <= kNumDigits; ++i) t[i] = std::log10(static_cast<double>(i + 1));
    return t;
  }();
  return table;
}

// Remaining series mass below this no longer changes any probability in double precision.
constexpr double kNegligibleTail = 1e-18;

}  // namespace

void validate(const ModelParams& model) {
  std::visit(Overloaded{
                 [](const BenfordModel&) {},
                 [](const TspbModel& t) { check_tspb(t.c); },
                 [](const PbModel& p) { check_pb(p.alpha, p.beta, p.m); },
             },
             model);
}

std::string model_name(const ModelParams& model) {
  return std::visit(Overloaded{
                        [](const BenfordModel&) { return std::string("benford"); },
                        [](const TspbModel&) { return std::string("tspb"); },
                        [](const PbModel&) { return std::string("pb"); },
                    },
                    model);
}

int estimated_parameter_count(const ModelParams& model) {
  return std::visit(Overloaded{
                        [](const BenfordModel&) { return 0; },
                        [](const TspbModel&) { return 1; },
                        [](const PbModel&) { return 2; },
                    },
                    model);
}

double benford_pmf(int d) {
  check_digit(d);
  return std::log10(1.0 + 1.0 / d);
}

double tspb_pmf(int d, double c) {
  check_digit(d);
  check_tspb(c);
  const auto& lg = log_table();
  const double lo = lg[d - 1];
  const double hi = lg[d];
  return 0.5 * (std::pow(hi, c) - std::pow(lo, c) - std::pow(1.0 - hi, c) + std::pow(1.0 - lo, c));
}

Pmf pb_pmf_vector(double alpha, double beta, std::int64_t m) {
  check_pb(alpha, beta, m);
  const auto& lg = log_table();
  const double w_power = alpha / (alpha + beta);
  const double w_series = beta / (alpha + beta);

  // Boundary terms (k + log10 j)^-alpha for j = 1..10 are shared between
  // neighbouring digits.
  std::array<double, kNumDigits> series{};
  std::array<double, kNumDigits + 1> prev{};
  for (std::int64_t k = 1; k <= m; ++k) {
    const double kd = static_cast<double>(k);
    for (int j = 0; j <= kNumDigits; ++j) prev[j] = std::pow(kd + lg[j], -alpha);
    for (int d = 0; d < kNumDigits; ++d) series[d] += prev[d] - prev[d + 1];
    if (w_series * std::pow(kd + 1.0, -alpha) < kNegligibleTail) break;
  }

  Pmf p{};
  for (int d = 0; d < kNumDigits; ++d) {
    p[d] = w_power * (std::pow(lg[d + 1], beta) - std::pow(lg[d], beta)) + w_series * series[d];
  }
  return p;
}

double pb_pmf(int d, double alpha, double beta, std::int64_t m) {
  check_digit(d);
  return pb_pmf_vector(alpha, beta, m)[d - 1];
}

double pb_truncation_deficit(double alpha, double beta, std::int64_t m) {
  check_pb(alpha, beta, m);
  return beta / (alpha + beta) * std::pow(static_cast<double>(m) + 1.0, -alpha);
}

std::int64_t adaptive_truncation(double alpha, double beta, double tolerance, std::int64_t cap) {
  std::int64_t m = kDefaultTruncation;
  while (m < cap && pb_truncation_deficit(alpha, beta, m) >= tolerance) m *= 2;
  return std::min(m, cap);
}

Pmf pmf_vector(const ModelParams& model) {
  validate(model);
  return std::visit(Overloaded{
                        [](const BenfordModel&) {
                          Pmf p{};
                          for (int d = 1; d <= kNumDigits; ++d) p[d - 1] = benford_pmf(d);
                          return p;
                        },
                        [](const TspbModel& t) {
                          Pmf p{};
                          for (int d = 1; d <= kNumDigits; ++d) p[d - 1] = tspb_pmf(d, t.c);
                          return p;
                        },
                        [](const PbModel& m) { return pb_pmf_vector(m.alpha, m.beta, m.m); },
                    },
                    model);
}

}  // namespace benford
