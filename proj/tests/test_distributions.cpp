#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "benford/distributions.hpp"
#include "benford/fitting.hpp"
#include "benford/sequences.hpp"
#include "oracles.hpp"

using namespace benford;

namespace {

const DigitHistogram kMixing = DigitHistogram::from_counts({175, 90, 71, 61, 47, 48, 50, 41, 35});

double sum(const Pmf& p) {
  double s = 0.0;
  for (double x : p) s += x;
  return s;
}

}  // namespace

TEST_CASE("Benford pmf") {
  CHECK(benford_pmf(1) == doctest::Approx(0.301030).epsilon(1e-6));
  CHECK(benford_pmf(9) == doctest::Approx(0.045757).epsilon(1e-5));
  CHECK(std::abs(sum(pmf_vector(BenfordModel{})) - 1.0) < 1e-15);
  CHECK_THROWS_AS(benford_pmf(0), std::invalid_argument);
  CHECK_THROWS_AS(benford_pmf(10), std::invalid_argument);
  const Pmf expected{0.3010, 0.1761, 0.1249, 0.0969, 0.0792, 0.0669, 0.0580, 0.0512, 0.0458};
  const Pmf got = pmf_vector(BenfordModel{});
  for (int d = 0; d < 9; ++d) CHECK(got[d] == doctest::Approx(expected[d]).epsilon(6e-4));
}

TEST_CASE("TSPB pmf: normalization, range and reduction to Benford") {
  for (double c = 0.001; c <= 10.0; c += 0.001) {
    const Pmf p = pmf_vector(TspbModel{c});
    REQUIRE(std::abs(sum(p) - 1.0) < 1e-12);
    for (double x : p) REQUIRE((x >= 0.0 && x <= 1.0));
  }
  for (int d = 1; d <= 9; ++d) {
    CHECK(std::abs(tspb_pmf(d, 1.0) - benford_pmf(d)) < 1e-14);
    CHECK(std::abs(tspb_pmf(d, 2.0) - benford_pmf(d)) < 1e-14);
  }
  CHECK_THROWS_AS(tspb_pmf(1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(tspb_pmf(1, -1.0), std::invalid_argument);
  CHECK(chi_square_stat(kMixing, pmf_vector(TspbModel{2.53958})) == doctest::Approx(9.014).epsilon(0.02 / 9.014));
}

TEST_CASE("PB pmf: truncation deficit identity") {
  for (double a : {0.1, 0.65651, 1.0, 2.5, 10.0, 100.0}) {
    for (double b : {0.2, 1.0, 2.30760, 5.0}) {
      for (std::int64_t m : {1, 2, 10, 100, 1000, 5000}) {
        const Pmf p = pb_pmf_vector(a, b, m);
        CHECK(std::abs((1.0 - sum(p)) - pb_truncation_deficit(a, b, m)) < 1e-12);
        for (int d = 1; d <= 9; ++d) {
          CHECK(p[d - 1] >= 0.0);
          CHECK(p[d - 1] <= 1.0);
          CHECK(std::abs(pb_pmf(d, a, b, m) - p[d - 1]) < 1e-14);
        }
      }
    }
  }
  CHECK(pb_truncation_deficit(2.0, 1.0, 1000) == doctest::Approx(1.0 / 3.0 / (1001.0 * 1001.0)));
}

TEST_CASE("PB pmf approaches Benford for beta = 1 and large alpha") {
  const Pmf p = pb_pmf_vector(1e6, 1.0, 10'000);
  for (int d = 1; d <= 9; ++d) CHECK(std::abs(p[d - 1] - benford_pmf(d)) < 1e-3);
}

TEST_CASE("PB pmf at published parameters") {
  const DigitHistogram squares = digit_histogram_of({SequenceKind::squares, 100});
  CHECK(chi_square_stat(squares, pb_pmf_vector(15.55957, 1.74552, 100)) ==
        doctest::Approx(0.362).epsilon(0.02 / 0.362));
  const DigitHistogram primes = digit_histogram_of({SequenceKind::primes_below, 10'000});
  CHECK(chi_square_stat(primes, pmf_vector(PbModel{29.76729, 2.30760, 100})) ==
        doctest::Approx(3.297).epsilon(0.05 / 3.297));
}

TEST_CASE("PB parameter validation") {
  CHECK_THROWS_AS(pb_pmf(1, 0.0, 1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(pb_pmf(1, 1.0, -1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(pb_pmf(1, 1.0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(validate(PbModel{1.0, 1.0, 0}), std::invalid_argument);
  CHECK_NOTHROW(validate(BenfordModel{}));
}

TEST_CASE("adaptive truncation") {
  const std::int64_t m = adaptive_truncation(2.0, 1.0);
  CHECK(pb_truncation_deficit(2.0, 1.0, m) < kAdaptiveDeficitTolerance);
  CHECK(pb_truncation_deficit(2.0, 1.0, m / 2) >= kAdaptiveDeficitTolerance);
  CHECK(adaptive_truncation(50.0, 1.0) == kDefaultTruncation);
  CHECK(adaptive_truncation(0.3, 1.0) == kAdaptiveTruncationCap);
  CHECK(adaptive_truncation(0.3, 1.0, 1e-10, 4000) == 4000);
}

TEST_CASE("chi-square survival function against closed forms") {
  for (int df = 1; df <= 12; ++df) {
    for (double x = 0.0; x <= 80.0; x += 0.137) {
      if (x == 0.0) continue;
      CHECK(std::abs(chi_square_sf(x, df) - oracle::chi_square_sf_closed_form(x, df)) < 1e-10);
    }
  }
  CHECK(chi_square_sf(0.0, 3) == 1.0);
}

TEST_CASE("chi-square survival function is decreasing in x") {
  for (int df : {1, 2, 6, 7, 8, 30}) {
    double previous = 1.0;
    for (double x = 0.0; x <= 200.0; x += 0.05) {
      const double v = chi_square_sf(x, df);
      CHECK(v <= previous);
      previous = v;
    }
  }
}

TEST_CASE("chi-square survival function spot values and errors") {
  CHECK(std::abs(chi_square_sf(15.550, 8) - 0.0493) < 0.0005);
  CHECK(std::abs(chi_square_sf(9.014, 7) - 0.2517) < 0.0005);
  CHECK(std::abs(chi_square_sf(1.819, 6) - 0.9355) < 0.002);
  CHECK_THROWS_AS(chi_square_sf(-1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(chi_square_sf(1.0, 0), std::invalid_argument);
  for (double a : {0.5, 3.0, 17.5}) {
    for (double x : {0.1, 2.0, 20.0}) {
      CHECK(regularized_gamma_p(a, x) + regularized_gamma_q(a, x) == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("df = 8 - k is the only convention consistent with published chi-square/p pairs") {
  // (chi-square, p in percent, parameters estimated); rows with p not
  // printed as 0.00.
  struct Pair {
    double chi2, p;
    int k;
  };
  const Pair pairs[] = {
      {9.096, 33.43, 0}, {7.837, 34.72, 1}, {0.362, 99.91, 2}, {15.550, 4.93, 0}, {9.014, 25.17, 1},
      {1.819, 93.55, 2}, {5.277, 72.76, 0}, {2.127, 95.24, 1}, {1.968, 92.26, 2}, {9.215, 32.45, 0},
      {7.688, 36.09, 1}, {7.402, 28.53, 2}, {3.138, 79.13, 2}, {8.612, 37.61, 0}, {7.002, 42.86, 1},
  };
  for (int offset = 6; offset <= 10; ++offset) {
    bool consistent = true;
    for (const Pair& pr : pairs) {
      consistent = consistent && std::abs(100.0 * chi_square_sf(pr.chi2, offset - pr.k) - pr.p) < 0.02;
    }
    CHECK(consistent == (offset == 8));
  }
}
