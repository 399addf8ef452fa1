#include "benford/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "benford/nelder_mead.hpp"

namespace benford {
namespace {

void check_histogram(const DigitHistogram& hist) {
  if (hist.sample_size == 0) throw std::invalid_argument("fit: histogram is empty");
}

FitResult finish(const DigitHistogram& hist, ModelParams model, bool converged, int evaluations) {
  FitResult r;
  r.chi_square = chi_square_stat(hist, pmf_vector(model));
  r.df = 8 - estimated_parameter_count(model);
  r.p_value = chi_square_sf(r.chi_square, r.df);
  r.model = std::move(model);
  r.converged = converged;
  r.evaluations = evaluations;
  return r;
}

// Objective used inside the searches: a zero-probability cell holding
// observations makes the point infeasible rather than an error.
double chi_square_objective(const DigitHistogram& hist, const Pmf& probs) {
  for (int d = 0; d < kNumDigits; ++d) {
    if (!(probs[d] > 0.0) && hist.counts[d] > 0) return std::numeric_limits<double>::infinity();
  }
  return chi_square_stat(hist, probs);
}

// --- one-parameter search ----------------------------------------------

constexpr double kTspbMinC = 1e-6;
constexpr double kTspbMaxC = 10.0;
constexpr double kTspbScanStep = 0.25;
constexpr double kGoldenTolerance = 1e-8;

struct Minimum1D {
  double x = 0.0;
  double value = std::numeric_limits<double>::infinity();
};

template <class F>
Minimum1D golden_section(F&& f, double lo, double hi, int& evaluations, bool& converged) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  evaluations += 2;
  Minimum1D best = f1 <= f2 ? Minimum1D{x1, f1} : Minimum1D{x2, f2};
  int iterations = 0;
  while (b - a > kGoldenTolerance && iterations++ < 200) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
      if (f1 < best.value) best = {x1, f1};
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
      if (f2 < best.value) best = {x2, f2};
    }
    ++evaluations;
  }
  converged = converged && (b - a <= kGoldenTolerance);
  return best;
}

// --- two-parameter search ----------------------------------------------

constexpr double kMinLogParam = -20.0;
constexpr double kMaxLogBeta = 20.0;
const double kMaxLogAlpha = std::log(kMaxPbAlpha);
constexpr std::array<double, 6> kPbStartGrid{-1.0, 0.0, 1.0, 2.0, 4.0, 8.0};
constexpr double kNegligibleTail = 1e-18;

double alpha_from_log(double x) { return std::exp(std::clamp(x, kMinLogParam, kMaxLogAlpha)); }
double beta_from_log(double y) { return std::exp(std::clamp(y, kMinLogParam, kMaxLogBeta)); }

// PB mass function with the logarithms ln(k + log10 j) tabulated once, so a
// fit evaluates only exponentials.
class PbKernel {
 public:
  explicit PbKernel(std::int64_t max_m) : max_m_(max_m), logs_(static_cast<std::size_t>(max_m) * 10) {
    for (std::int64_t k = 1; k <= max_m; ++k) {
      for (int j = 0; j < 10; ++j) {
        logs_[index(k, j)] = std::log(static_cast<double>(k) + std::log10(static_cast<double>(j + 1)));
      }
    }
    for (int j = 0; j <= kNumDigits; ++j) log10_[j] = std::log10(static_cast<double>(j + 1));
  }

  Pmf operator()(double alpha, double beta, std::int64_t m) const {
    const double w_power = alpha / (alpha + beta);
    const double w_series = beta / (alpha + beta);
    std::array<double, kNumDigits> series{};
    std::array<double, 10> terms{};
    const std::int64_t limit = std::min(m, max_m_);
    for (std::int64_t k = 1; k <= limit; ++k) {
      const double* row = &logs_[index(k, 0)];
      for (int j = 0; j < 10; ++j) terms[j] = std::exp(-alpha * row[j]);
      for (int d = 0; d < kNumDigits; ++d) series[d] += terms[d] - terms[d + 1];
      // terms[9] is (k + 1)^-alpha: it bounds everything the series has left.
      if (w_series * terms[9] < kNegligibleTail) break;
    }
    Pmf p{};
    for (int d = 0; d < kNumDigits; ++d) {
      p[d] = w_power * (std::pow(log10_[d + 1], beta) - std::pow(log10_[d], beta)) + w_series * series[d];
    }
    return p;
  }

 private:
  std::size_t index(std::int64_t k, int j) const { return static_cast<std::size_t>(k - 1) * 10 + j; }

  std::int64_t max_m_;
  std::vector<double> logs_;
  std::array<double, kNumDigits + 1> log10_{};
};

}  // namespace

double chi_square_stat(const DigitHistogram& hist, const Pmf& probs) {
  if (hist.sample_size == 0) throw std::invalid_argument("chi_square_stat: empty histogram");
  const double n = static_cast<double>(hist.sample_size);
  double stat = 0.0;
  for (int d = 0; d < kNumDigits; ++d) {
    const double observed = static_cast<double>(hist.counts[d]);
    if (!(probs[d] > 0.0)) {
      if (observed > 0.0) {
        throw std::invalid_argument("chi_square_stat: zero probability for an observed digit");
      }
      continue;
    }
    const double expected = n * probs[d];
    const double diff = observed - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

GoodnessOfFit goodness_of_fit(const DigitHistogram& hist, const ModelParams& model,
                              int estimated_params) {
  if (estimated_params < 0 || estimated_params > 2) {
    throw std::invalid_argument("goodness_of_fit: estimated_params must be 0, 1 or 2");
  }
  GoodnessOfFit g;
  g.chi_square = chi_square_stat(hist, pmf_vector(model));
  g.df = 8 - estimated_params;
  g.p_value = chi_square_sf(g.chi_square, g.df);
  return g;
}

FitResult fit_benford(const DigitHistogram& hist) {
  check_histogram(hist);
  return finish(hist, BenfordModel{}, true, 1);
}

FitResult fit_tspb(const DigitHistogram& hist) {
  check_histogram(hist);
  int evaluations = 0;
  auto objective = [&](double c) {
    Pmf p{};
    for (int d = 1; d <= kNumDigits; ++d) p[d - 1] = tspb_pmf(d, c);
    return chi_square_objective(hist, p);
  };

  std::vector<double> grid{kTspbMinC};
  for (double c = kTspbScanStep; c <= kTspbMaxC + 1e-12; c += kTspbScanStep) grid.push_back(c);
  std::vector<double> values;
  values.reserve(grid.size());
  for (double c : grid) values.push_back(objective(c));
  evaluations += static_cast<int>(grid.size());

  Minimum1D best;
  bool converged = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const bool left_ok = i == 0 || values[i] <= values[i - 1];
    const bool right_ok = i + 1 == grid.size() || values[i] <= values[i + 1];
    if (values[i] < best.value) best = {grid[i], values[i]};
    if (!(left_ok && right_ok)) continue;
    const double lo = grid[i == 0 ? 0 : i - 1];
    const double hi = grid[i + 1 == grid.size() ? i : i + 1];
    const Minimum1D local = golden_section(objective, lo, hi, evaluations, converged);
    if (local.value < best.value) best = local;
  }
  return finish(hist, TspbModel{best.x}, converged, evaluations);
}

FitResult fit_pb(const DigitHistogram& hist, std::int64_t m) {
  return fit_pb(hist, FixedTruncation{m});
}

FitResult fit_pb(const DigitHistogram& hist, const Truncation& truncation) {
  check_histogram(hist);
  const auto* fixed = std::get_if<FixedTruncation>(&truncation);
  const auto* adaptive = std::get_if<AdaptiveTruncation>(&truncation);
  if (fixed && fixed->m < 1) throw std::invalid_argument("fit_pb: m must be >= 1");
  if (adaptive && adaptive->cap < 1) throw std::invalid_argument("fit_pb: cap must be >= 1");

  auto truncation_for = [&](double alpha, double beta) {
    if (fixed) return fixed->m;
    return std::min(adaptive->cap, adaptive_truncation(alpha, beta, adaptive->tolerance, adaptive->cap));
  };

  const PbKernel kernel(fixed ? fixed->m : adaptive->cap);
  auto objective = [&](const Point<2>& x) {
    const double alpha = alpha_from_log(x[0]);
    const double beta = beta_from_log(x[1]);
    return chi_square_objective(hist, kernel(alpha, beta, truncation_for(alpha, beta)));
  };

  SimplexResult<2> best;
  best.value = std::numeric_limits<double>::infinity();
  int evaluations = 0;
  // Row-major over the start grid; strict improvement keeps the earliest start on ties.
  for (double la : kPbStartGrid) {
    for (double lb : kPbStartGrid) {
      const SimplexResult<2> run = nelder_mead<2>(objective, Point<2>{la, lb});
      evaluations += run.evaluations;
      if (run.value < best.value) best = run;
    }
  }

  const double alpha = alpha_from_log(best.x[0]);
  const double beta = beta_from_log(best.x[1]);
  return finish(hist, PbModel{alpha, beta, truncation_for(alpha, beta)}, best.converged, evaluations);
}

}  // namespace benford
