#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "trapdist/dist.hpp"
#include "trapdist/polyfit.hpp"

using namespace trapdist;

namespace {

double sup_error(const FitResult& f) {
  return (eval_poly(f.coefficients, f.grid) - f.target).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("eval_poly") {
  Eigen::Vector3d sq(1, 0, 0);
  CHECK(eval_poly(sq, 3.0) == 9);
  Eigen::VectorXd c(1);
  c << 4.5;
  for (const double x : {-3.0, 0.0, 17.0}) CHECK(eval_poly(c, x) == 4.5);

  Eigen::Vector4f cubic(2, -1, 0, 3);  // 2x^3 - x^2 + 3
  CHECK(eval_poly(cubic, 2.0f) == 15.0f);
  Eigen::Matrix<long double, 3, 1> wide(1, 2, 1);
  CHECK(eval_poly(wide, -1.0L) == 0.0L);

  const Eigen::Vector3d xs(0, 1, 2);
  CHECK(eval_poly(sq, xs) == Eigen::Vector3d(0, 1, 4));
}

TEST_CASE("fit_polynomial recovers an exact polynomial") {
  const Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(50, 0, 2.6);
  const Eigen::VectorXd y = x.array().square();
  const auto fit = fit_polynomial(x, y, 2);
  REQUIRE(fit.degree() == 2);
  CHECK(std::abs(fit.coefficients(0) - 1) < 1e-10);
  CHECK(std::abs(fit.coefficients(1)) < 1e-10);
  CHECK(std::abs(fit.coefficients(2)) < 1e-10);
  CHECK(fit.norm_residuals < 1e-10);

  // A degree-5 polynomial recovered through a degree-8 fit.
  Eigen::VectorXd coeffs(6);
  coeffs << 0.5, -1, 0, 2, 3, -0.25;
  const Eigen::VectorXd y5 = eval_poly(coeffs, x);
  const auto high = fit_polynomial(x, y5, 8);
  CHECK(high.coefficients.head(3).cwiseAbs().maxCoeff() < 1e-8);
  CHECK((high.coefficients.tail(6) - coeffs).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("fit_pdf at the default configuration") {
  const auto ab = fit_pdf(CaseId::AB);
  CHECK(ab.degree() == 12);
  CHECK(ab.coefficients.size() == 13);
  CHECK(ab.grid.size() == 1000);
  CHECK(ab.grid(0) == 0);
  CHECK(ab.grid(999) == 2);
  CHECK(ab.norm_residuals <= 0.25);
  CHECK(std::abs(eval_poly(ab.coefficients, 0.5) - pdf(CaseId::AB, 0.5)) <= 0.05);

  const auto gh = fit_pdf(CaseId::GH);
  CHECK(sup_error(gh) <= 0.05);

  for (const CaseId id : kAllCases) {
    const auto f = fit_pdf(id);
    CAPTURE(to_string(id));
    CHECK(f.norm_residuals >= 0);
    // Residual norm recomputed from scratch.
    double ss = 0;
    for (Eigen::Index i = 0; i < f.grid.size(); ++i) {
      const double r = pdf(id, f.grid(i)) - eval_poly(f.coefficients, f.grid(i));
      ss += r * r;
    }
    CHECK(std::abs(std::sqrt(ss) - f.norm_residuals) < 1e-12);
    CHECK(f.norm_residuals <= (id == CaseId::AB || id == CaseId::CD ? 0.25 : 0.5));
    CHECK(sup_error(f) <= 0.05);
  }
}

TEST_CASE("residual does not grow with degree") {
  for (const CaseId id : kAllCases) {
    double prev = INFINITY;
    for (int degree = 6; degree <= 12; ++degree) {
      const double r = fit_pdf(id, {degree, 1000}).norm_residuals;
      CAPTURE(degree);
      CHECK(r <= prev * (1 + 1e-12));
      prev = r;
    }
  }
}

TEST_CASE("fitted polynomial keeps the probability mass") {
  for (const CaseId id : kAllCases) {
    const auto f = fit_pdf(id);
    const double top = distribution(id).d_max();
    const double mass =
        oracle::simpson([&f](double t) { return eval_poly(f.coefficients, t); }, 0, top, 2000);
    CHECK(std::abs(mass - 1) <= 0.02);
  }
}

TEST_CASE("fits are deterministic") {
  const auto a = fit_pdf(CaseId::EF);
  const auto b = fit_pdf(CaseId::EF);
  CHECK(a.coefficients == b.coefficients);
  CHECK(a.norm_residuals == b.norm_residuals);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(fit_pdf(CaseId::AB, {0, 1000}), std::invalid_argument);
  CHECK_THROWS_AS(fit_pdf(CaseId::AB, {12, 13}), std::invalid_argument);
  CHECK_THROWS_AS(fit_pdf(CaseId::AB, {12, 12}), std::invalid_argument);
  CHECK_NOTHROW(fit_pdf(CaseId::AB, {12, 14}));
}

TEST_CASE("coefficient CSV") {
  std::vector<FitResult> fits;
  for (const CaseId id : kAllCases) fits.push_back(fit_pdf(id));
  fits.push_back(fit_pdf(CaseId::AB, {2, 100}));
  std::ostringstream out;
  write_coefficients_csv(out, fits);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line.rfind("case,degree,normr,c_12,c_11,", 0) == 0);
  CHECK(line.ends_with(",c_1,c_0"));
  int rows = 0;
  std::string last;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 3 + 12);
    last = line;
  }
  CHECK(rows == 5);
  line = last;
  CHECK(line.rfind("ab,2,", 0) == 0);
  // Degree-2 row leaves the high-order cells empty.
  CHECK(line.find(",,,,,,,,,,") != std::string::npos);
}
