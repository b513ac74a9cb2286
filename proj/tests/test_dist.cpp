#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "trapdist/dist.hpp"

using namespace trapdist;

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

std::vector<double> cuts_for(CaseId id) { return distribution(id).breakpoints(); }

}  // namespace

TEST_CASE("PiecewiseFn") {
  using Fn = PiecewiseFn<double>;
  const Fn f({0.0, 1.0, 2.0}, {[](double x) { return x; }, [](double x) { return 2 - x; }}, -1, 7);
  CHECK(f(-0.1) == -1);
  CHECK(f(2.1) == 7);
  CHECK(f(0.5) == 0.5);
  CHECK(f(1.5) == 0.5);
  CHECK(f.locate(1.0) == 0);
  CHECK(f.locate(2.0) == 1);
  CHECK_THROWS_AS(Fn({0.0, 1.0}, {}, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Fn({0.0, 0.0}, {[](double) { return 0.0; }}, 0, 0), std::invalid_argument);
}

TEST_CASE("breakpoints and support") {
  CHECK(support(CaseId::AB) == std::pair{0.0, 2.0});
  CHECK(support(CaseId::CD).second == 2.0);
  CHECK(std::abs(support(CaseId::EF).second - 2 * kSqrt3) < 1e-15);
  CHECK(std::abs(support(CaseId::GH).second - std::sqrt(7.0)) < 1e-15);
  CHECK(distribution(CaseId::EF).breakpoints().size() == 7);
  for (const CaseId id : kAllCases) {
    const auto& bp = distribution(id).breakpoints();
    CHECK(bp.front() == 0.0);
    CHECK(std::abs(bp[1] - kSqrt3 / 2) < 1e-15);
  }
}

TEST_CASE("pdf values") {
  CHECK(pdf(CaseId::AB, 0) == 0);
  CHECK(pdf(CaseId::AB, -0.5) == 0);
  CHECK(pdf(CaseId::AB, 2.5) == 0);
  CHECK(std::abs(distribution(CaseId::GH).density_fn()(std::sqrt(7.0))) < 1e-9);
  for (const CaseId id : kAllCases) {
    CHECK(std::abs(distribution(id).density_fn()(distribution(id).d_max())) < 1e-9);
  }
}

TEST_CASE("pdf agrees with a Monte Carlo histogram" * doctest::timeout(60)) {
  // N = 1e7, bin of width 0.02 centred at 0.5.
  const auto est = oracle::histogram_density(CaseId::CD, 0.49, 0.51, 10000000, 11);
  const double bin_avg =
      oracle::tanh_sinh_piecewise([](double t) { return pdf(CaseId::CD, t); },
                                  std::vector<double>{0.49, 0.51}) / 0.02;
  CHECK(std::abs(bin_avg - pdf(CaseId::CD, 0.5)) < 1e-4);
  CHECK(std::abs(est.value - pdf(CaseId::CD, 0.5)) < 3 * est.std_error);

  const auto near_top = oracle::histogram_density(CaseId::GH, std::sqrt(7.0) - 0.02,
                                                  std::sqrt(7.0), 1000000, 12);
  CHECK(near_top.value < 1e-3);
}

TEST_CASE("cdf values") {
  CHECK(cdf(CaseId::AB, -1) == 0);
  CHECK(cdf(CaseId::EF, 4) == 1);
  const auto& ab = distribution(CaseId::AB).cumulative_fn();
  CHECK(std::abs(ab.branch(1, 1.0) - ab.branch(2, 1.0)) < 1e-12);

  const double oracle_value = oracle::tanh_sinh_piecewise(
      [](double t) { return pdf(CaseId::CD, t); }, std::vector<double>{0, kSqrt3 / 2, 1, 1.2});
  CHECK(std::abs(cdf(CaseId::CD, 1.2) - oracle_value) < 1e-9);
}

TEST_CASE("continuity constants") {
  // Frozen from a 40-digit evaluation of the branch expressions at the
  // breakpoints; each is an exact multiple of 1/54.
  const std::vector<std::pair<CaseId, std::vector<double>>> expected = {
      {CaseId::AB, {0, 0, 4.0 / 54, 22.0 / 54}},
      {CaseId::CD, {0, 0, 2.0 / 54, 38.0 / 54}},
      {CaseId::EF, {0, 0, -3.0 / 54, -3.0 / 54, -19.0 / 54, -90.0 / 54}},
      {CaseId::GH, {0, 0, 1.0 / 54, -17.0 / 54}},
  };
  for (const auto& [id, values] : expected) {
    const auto c = solve_continuity_constants<double>(id);
    CAPTURE(to_string(id));
    REQUIRE(c.constants.size() == values.size());
    CHECK(c.constants[0] == 0.0);
    for (std::size_t i = 0; i < values.size(); ++i) CHECK(std::abs(c.constants[i] - values[i]) < 1e-12);
    CHECK(std::abs(c.endpoint_defect) < 1e-10);
    CHECK(cdf(id, 0) == 0.0);
  }
}

TEST_CASE("long double route agrees with double") {
  RandomStream rng(3);
  for (const CaseId id : kAllCases) {
    const Distribution<long double> wide(id);
    const auto& narrow = distribution(id);
    const auto c_wide = wide.constants().constants;
    for (std::size_t i = 0; i < c_wide.size(); ++i) {
      CHECK(std::abs(static_cast<double>(c_wide[i]) - narrow.constants().constants[i]) < 1e-13);
    }
    CHECK(std::abs(static_cast<double>(wide.constants().endpoint_defect)) < 1e-15);
    for (int k = 0; k < 2000; ++k) {
      const double d = rng.uniform() * narrow.d_max();
      CHECK(std::abs(static_cast<double>(wide.pdf(d)) - narrow.pdf(d)) < 1e-12);
      CHECK(std::abs(static_cast<double>(wide.cdf(d)) - narrow.cdf(d)) < 1e-12);
    }
  }
}

TEST_CASE("ContinuityError names the case and defect") {
  const ContinuityError e(CaseId::EF, 2.5e-3);
  CHECK(std::string(e.what()).find("EF") != std::string::npos);
  CHECK(e.case_id() == CaseId::EF);
  CHECK(e.defect() == 2.5e-3);
}

TEST_CASE("normalization against an independent quadrature") {
  for (const CaseId id : kAllCases) {
    const auto cuts = cuts_for(id);
    const double mass = oracle::tanh_sinh_piecewise([id](double t) { return pdf(id, t); }, cuts);
    CHECK(std::abs(mass - 1) < 1e-9);
  }
}

TEST_CASE("properties on grids") {
  for (const CaseId id : kAllCases) {
    CAPTURE(to_string(id));
    const auto& dist = distribution(id);
    const double top = dist.d_max();
    double min_pdf = 0;
    double max_drop = 0;
    double prev = 0;
    for (int k = 0; k <= 100000; ++k) {
      const double d = top * k / 100000.0;
      min_pdf = std::min(min_pdf, dist.density_fn()(d));
      const double F = cdf(id, d);
      max_drop = std::max(max_drop, prev - F);
      prev = F;
    }
    CHECK(min_pdf >= -1e-12);
    CHECK(max_drop <= 1e-13);

    const auto& bp = dist.breakpoints();
    for (std::size_t i = 1; i + 1 < bp.size(); ++i) {
      CHECK(std::abs(dist.density_fn().branch(i - 1, bp[i]) - dist.density_fn().branch(i, bp[i])) <
            1e-9);
      CHECK(std::abs(dist.cumulative_fn().branch(i - 1, bp[i]) -
                     dist.cumulative_fn().branch(i, bp[i])) < 1e-9);
    }
  }
}

TEST_CASE("cdf derivative matches pdf at random interior points") {
  RandomStream rng(99);
  const double h = 1e-6;
  for (const CaseId id : kAllCases) {
    const auto& bp = distribution(id).breakpoints();
    int tested = 0;
    while (tested < 500) {
      const double d = rng.uniform() * bp.back();
      if (std::any_of(bp.begin(), bp.end(), [d](double b) { return std::abs(d - b) < 1e-3; })) {
        continue;
      }
      const double slope = (cdf(id, d + h) - cdf(id, d - h)) / (2 * h);
      const double f = pdf(id, d);
      CHECK(std::abs(slope - f) <= std::max(1e-6, 1e-4 * f));
      ++tested;
    }
  }
}

TEST_CASE("scaling law") {
  for (const double d : {-1.0, 0.0, 0.3, 1.0, 1.9, 2.5}) {
    CHECK(scaled_pdf(CaseId::AB, 1, d) == pdf(CaseId::AB, d));
    CHECK(scaled_cdf(CaseId::CD, 1, d) == cdf(CaseId::CD, d));
  }
  CHECK(scaled_pdf(CaseId::AB, 2, 1) == doctest::Approx(0.5 * pdf(CaseId::AB, 0.5)).epsilon(1e-15));
  CHECK(scaled_cdf(CaseId::CD, 0.5, 1) == 1.0);
  CHECK(scaled_cdf(CaseId::EF, 2, 3) == cdf(CaseId::EF, 1.5));

  for (const double s : {0.5, 3.0}) {
    std::vector<double> cuts = cuts_for(CaseId::AB);
    for (auto& c : cuts) c *= s;
    const double mass =
        oracle::tanh_sinh_piecewise([s](double t) { return scaled_pdf(CaseId::AB, s, t); }, cuts);
    CHECK(std::abs(mass - 1) < 1e-9);
  }

  const ScaledDistribution big(CaseId::GH, 10);
  CHECK(big.support().second == doctest::Approx(10 * std::sqrt(7.0)));

  CHECK_THROWS_AS(scaled_pdf(CaseId::AB, 0, 1), std::domain_error);
  CHECK_THROWS_AS(scaled_cdf(CaseId::AB, -2, 1), std::domain_error);
  CHECK_THROWS_AS(ScaledDistribution(CaseId::AB, NAN), std::domain_error);
}

TEST_CASE("mean distance") {
  const double ab = mean_distance(CaseId::AB);
  CHECK(ab > 0);
  CHECK(ab < 2);
  for (const CaseId id : kAllCases) {
    const double independent = oracle::tanh_sinh_piecewise(
        [id](double t) { return t * pdf(id, t); }, cuts_for(id));
    CHECK(std::abs(mean_distance(id) - independent) < 1e-10);
  }
}

TEST_CASE("mean distance against Monte Carlo" * doctest::timeout(60)) {
  for (const CaseId id : {CaseId::AB, CaseId::GH}) {
    const auto est = oracle::sample_mean(id, 10000000, 31);
    CHECK(std::abs(mean_distance(id) - est.value) < 3 * est.std_error);
  }
}
