#include "trapdist/polyfit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "trapdist/dist.hpp"
#include "trapdist/io.hpp"

namespace trapdist {

void FitConfig::validate() const {
  if (degree < 1) throw std::invalid_argument("fit degree must be at least 1");
  if (grid_points <= static_cast<std::size_t>(degree) + 1) {
    throw std::invalid_argument("fit grid needs more than degree + 1 points (got " +
                                std::to_string(grid_points) + " for degree " +
                                std::to_string(degree) + ")");
  }
}

PolynomialFit fit_polynomial(const Eigen::Ref<const Eigen::VectorXd>& x,
                             const Eigen::Ref<const Eigen::VectorXd>& y, int degree) {
  if (degree < 0) throw std::invalid_argument("fit_polynomial: negative degree");
  if (x.size() != y.size()) throw std::invalid_argument("fit_polynomial: size mismatch");
  if (x.size() <= degree) throw std::invalid_argument("fit_polynomial: too few points");

  const double scale = std::max(x.cwiseAbs().maxCoeff(), 1e-300);
  const Eigen::VectorXd t = x / scale;

  // Columns ordered highest power first.
  const Eigen::Index m = x.size();
  Eigen::MatrixXd vandermonde(m, degree + 1);
  vandermonde.col(degree).setOnes();
  for (int j = degree - 1; j >= 0; --j) {
    vandermonde.col(j) = vandermonde.col(j + 1).cwiseProduct(t);
  }

  const Eigen::VectorXd scaled = vandermonde.colPivHouseholderQr().solve(y);

  PolynomialFit out;
  out.coefficients.resize(degree + 1);
  for (int j = 0; j <= degree; ++j) {
    out.coefficients(j) = scaled(j) / std::pow(scale, degree - j);
  }
  out.norm_residuals = (eval_poly(out.coefficients, x) - y).norm();
  return out;
}

FitResult fit_pdf(CaseId id, const FitConfig& cfg) {
  cfg.validate();
  const auto& dist = distribution(id);
  const Eigen::VectorXd grid =
      Eigen::VectorXd::LinSpaced(static_cast<Eigen::Index>(cfg.grid_points), 0.0, dist.d_max());
  const Eigen::VectorXd target = grid.unaryExpr([&dist](double d) { return dist.pdf(d); });
  auto fit = fit_polynomial(grid, target, cfg.degree);
  return FitResult{id, std::move(fit.coefficients), fit.norm_residuals, grid, target};
}

void write_coefficients_csv(std::ostream& out, std::span<const FitResult> fits) {
  int max_degree = 0;
  for (const auto& f : fits) max_degree = std::max(max_degree, f.degree());
  out << "case,degree,normr";
  for (int k = max_degree; k >= 0; --k) out << ",c_" << k;
  out << '\n';
  for (const auto& f : fits) {
    out << lower_name(f.case_id) << ',' << f.degree() << ',' << format_real(f.norm_residuals);
    // Lower-degree rows are left-padded with empty cells so c_k stays aligned.
    for (int k = max_degree; k > f.degree(); --k) out << ',';
    for (Eigen::Index j = 0; j < f.coefficients.size(); ++j) {
      out << ',' << format_real(f.coefficients(j));
    }
    out << '\n';
  }
}

}  // namespace trapdist
