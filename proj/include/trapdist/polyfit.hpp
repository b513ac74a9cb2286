#ifndef TRAPDIST_POLYFIT_HPP
#define TRAPDIST_POLYFIT_HPP

#include <cstddef>
#include <ostream>
#include <span>

#include <Eigen/Dense>

#include "trapdist/geom.hpp"

namespace trapdist {

struct FitConfig {
  int degree = 12;
  std::size_t grid_points = 1000;

  // Throws std::invalid_argument unless degree >= 1 and the system is
  // overdetermined (grid_points > degree + 1).
  void validate() const;
};

struct PolynomialFit {
  Eigen::VectorXd coefficients;  // highest degree first
  double norm_residuals = 0;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

struct FitResult {
  CaseId case_id;
  Eigen::VectorXd coefficients;  // highest degree first
  double norm_residuals = 0;
  Eigen::VectorXd grid;
  Eigen::VectorXd target;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

// Horner evaluation; coefficients are ordered highest degree first.
template <typename Derived>
typename Derived::Scalar eval_poly(const Eigen::DenseBase<Derived>& coefficients,
                                   typename Derived::Scalar x) {
  using Scalar = typename Derived::Scalar;
  Scalar acc = Scalar(0);
  for (Eigen::Index i = 0; i < coefficients.size(); ++i) acc = acc * x + coefficients(i);
  return acc;
}

// Elementwise Horner evaluation over a vector of abscissae.
template <typename Derived, typename XDerived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> eval_poly(
    const Eigen::DenseBase<Derived>& coefficients, const Eigen::DenseBase<XDerived>& xs) {
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> out(xs.size());
  for (Eigen::Index k = 0; k < xs.size(); ++k) out(k) = eval_poly(coefficients, xs(k));
  return out;
}

/// Least-squares polynomial of the given degree through (x, y).
///
/// The abscissae are divided by max |x| before building the Vandermonde
/// matrix, the scaled problem is solved by column-pivoted Householder QR,
/// and the coefficients are rescaled back to powers of x. The residual norm
/// is measured with the returned coefficients.
PolynomialFit fit_polynomial(const Eigen::Ref<const Eigen::VectorXd>& x,
                             const Eigen::Ref<const Eigen::VectorXd>& y, int degree);

// Fit to the case's pdf on cfg.grid_points uniform points over [0, d_max].
FitResult fit_pdf(CaseId id, const FitConfig& cfg = {});

// `case,degree,normr,c_degree,...,c_0` rows. The header is sized for the
// largest degree among `fits`.
void write_coefficients_csv(std::ostream& out, std::span<const FitResult> fits);

}  // namespace trapdist

#endif  // TRAPDIST_POLYFIT_HPP
