#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "benford/fitting.hpp"
#include "benford/sequences.hpp"
#include "oracles.hpp"

using namespace benford;

namespace {

const DigitHistogram kMixing = DigitHistogram::from_counts({175, 90, 71, 61, 47, 48, 50, 41, 35});

DigitHistogram random_histogram(std::mt19937_64& rng) {
  std::array<std::uint64_t, 9> counts{};
  const int n = 20 + static_cast<int>(rng() % 500);
  // Draw from a random digit law so some histograms are far from Benford.
  std::array<double, 9> w{};
  for (double& x : w) x = 0.2 + std::uniform_real_distribution<>(0.0, 1.0)(rng);
  std::discrete_distribution<int> pick(w.begin(), w.end());
  for (int i = 0; i < n; ++i) ++counts[pick(rng)];
  return DigitHistogram::from_counts(counts);
}

}  // namespace

TEST_CASE("chi-square statistic") {
  const DigitHistogram squares = digit_histogram_of({SequenceKind::squares, 100});
  CHECK(chi_square_stat(squares, pmf_vector(BenfordModel{})) == doctest::Approx(9.096).epsilon(0.01 / 9.096));
  CHECK(chi_square_stat(kMixing, pmf_vector(BenfordModel{})) == doctest::Approx(15.550).epsilon(0.05 / 15.55));

  const Pmf p{0.5, 0.25, 0.125, 0.0625, 0.0625, 0, 0, 0, 0};
  CHECK(chi_square_stat(DigitHistogram::from_counts({8, 4, 2, 1, 1, 0, 0, 0, 0}), p) == 0.0);
  CHECK_THROWS_AS(chi_square_stat(DigitHistogram::from_counts({8, 4, 2, 1, 1, 1, 0, 0, 0}), p),
                  std::invalid_argument);
  CHECK_THROWS_AS(chi_square_stat(DigitHistogram{}, p), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const DigitHistogram h = random_histogram(rng);
    const Pmf q = pmf_vector(TspbModel{0.3 + i * 0.1});
    CHECK(chi_square_stat(h, q) == doctest::Approx(oracle::pearson(h.counts, q)).epsilon(1e-12));
  }
}

TEST_CASE("goodness of fit") {
  const GoodnessOfFit g = goodness_of_fit(kMixing, BenfordModel{}, 0);
  CHECK(g.df == 8);
  CHECK(std::abs(g.p_value - 0.0493) < 0.0005);
  const FitResult pb = fit_pb(kMixing, 100);
  const GoodnessOfFit gp = goodness_of_fit(kMixing, pb.model, 2);
  CHECK(gp.df == 6);
  CHECK(std::abs(gp.p_value - 0.9355) < 0.002);
  CHECK_THROWS_AS(goodness_of_fit(kMixing, BenfordModel{}, 3), std::invalid_argument);
  CHECK_THROWS_AS(goodness_of_fit(kMixing, BenfordModel{}, -1), std::invalid_argument);

  std::array<std::uint64_t, 9> exact{};
  for (int d = 0; d < 9; ++d) exact[d] = 1;
  const Pmf uniform{1. / 9, 1. / 9, 1. / 9, 1. / 9, 1. / 9, 1. / 9, 1. / 9, 1. / 9, 1. / 9};
  CHECK(chi_square_stat(DigitHistogram::from_counts(exact), uniform) == doctest::Approx(0.0));
}

TEST_CASE("Benford fit") {
  const FitResult f = fit_benford(digit_histogram_of({SequenceKind::fibonacci, 100}));
  CHECK(f.df == 8);
  CHECK(f.chi_square == doctest::Approx(1.029).epsilon(0.001));
  CHECK(f.p_value == chi_square_sf(f.chi_square, 8));
  CHECK_THROWS_AS(fit_benford(DigitHistogram{}), std::invalid_argument);
}

TEST_CASE("TSPB fit examples") {
  const FitResult mix = fit_tspb(kMixing);
  CHECK(mix.df == 7);
  CHECK(mix.converged);
  CHECK(std::get<TspbModel>(mix.model).c == doctest::Approx(2.540).epsilon(0.01 / 2.54));
  CHECK(std::abs(mix.chi_square - 9.014) < 0.02);
  CHECK(mix.p_value == chi_square_sf(mix.chi_square, 7));

  const FitResult pent = fit_tspb(digit_histogram_of({SequenceKind::pentagonal, 100}));
  CHECK(std::abs(pent.chi_square - 2.127) < 0.05);
}

TEST_CASE("TSPB fit of an exactly Benford-proportional histogram") {
  std::array<std::uint64_t, 9> counts{};
  const double n = 1e15;
  for (int d = 1; d <= 9; ++d) counts[d - 1] = static_cast<std::uint64_t>(std::llround(n * benford_pmf(d)));
  const FitResult f = fit_tspb(DigitHistogram::from_counts(counts));
  CHECK(f.chi_square < 1e-10);
  const double c = std::get<TspbModel>(f.model).c;
  CHECK((std::abs(c - 1.0) < 1e-3 || std::abs(c - 2.0) < 1e-3));
}

TEST_CASE("TSPB fit is never worse than Benford") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const DigitHistogram h = random_histogram(rng);
    CHECK(fit_tspb(h).chi_square <= fit_benford(h).chi_square + 1e-9);
  }
}

TEST_CASE("TSPB fit agrees with a dense grid search") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 5; ++i) {
    const DigitHistogram h = random_histogram(rng);
    auto f = [&](double c) {
      std::array<double, 9> p{};
      for (int d = 1; d <= 9; ++d) p[d - 1] = tspb_pmf(d, c);
      return oracle::pearson_or_inf(h.counts, p);
    };
    const auto coarse = oracle::grid_argmin(f, 1e-4, 10.0, 1e-4);
    const auto fine = oracle::grid_argmin(f, std::max(1e-6, coarse.first - 1e-4), coarse.first + 1e-4, 1e-8);
    CHECK(std::abs(fit_tspb(h).chi_square - fine.second) < 1e-6);
  }
}

TEST_CASE("PB fit examples") {
  const DigitHistogram squares = digit_histogram_of({SequenceKind::squares, 100});
  const FitResult sq = fit_pb(squares, 100);
  CHECK(sq.df == 6);
  CHECK(std::abs(sq.chi_square - 0.362) < 0.02);
  CHECK(std::get<PbModel>(sq.model).m == 100);

  const FitResult primes = fit_pb(digit_histogram_of({SequenceKind::primes_below, 1000}), 100);
  CHECK(std::abs(primes.chi_square - 0.333) < 0.05);
  CHECK(primes.p_value == doctest::Approx(0.999).epsilon(0.001));

  const FitResult mix = fit_pb(kMixing, 100);
  CHECK(std::abs(mix.chi_square - 1.819) < 0.05);
  CHECK(std::abs(mix.p_value - 0.9355) < 0.002);

  CHECK_THROWS_AS(fit_pb(kMixing, 0), std::invalid_argument);
  CHECK_THROWS_AS(fit_pb(DigitHistogram{}, 100), std::invalid_argument);
}

TEST_CASE("PB fit is never worse than the near-Benford member") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const DigitHistogram h = random_histogram(rng);
    const FitResult f = fit_pb(h, 100);
    CHECK(std::get<PbModel>(f.model).alpha <= kMaxPbAlpha);
    CHECK(f.chi_square <= chi_square_stat(h, pb_pmf_vector(1e6, 1.0, 100)) + 1e-9);
  }
}

TEST_CASE("PB fit with adaptive truncation") {
  const FitResult f = fit_pb(kMixing, AdaptiveTruncation{});
  const auto& pb = std::get<PbModel>(f.model);
  CHECK(pb.m >= kDefaultTruncation);
  CHECK(f.chi_square <= fit_pb(kMixing, 100).chi_square + 0.05);
}

TEST_CASE("fits are deterministic") {
  const DigitHistogram h = digit_histogram_of({SequenceKind::cubes, 500});
  const FitResult a = fit_pb(h, 100), b = fit_pb(h, 100);
  CHECK(a.chi_square == b.chi_square);
  CHECK(a.model == b.model);
  CHECK(a.evaluations == b.evaluations);
  const FitResult c = fit_tspb(h), d = fit_tspb(h);
  CHECK(c.model == d.model);
  CHECK(c.chi_square == d.chi_square);
}
