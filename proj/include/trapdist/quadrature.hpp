#ifndef TRAPDIST_QUADRATURE_HPP
#define TRAPDIST_QUADRATURE_HPP

#include <cstddef>
#include <span>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace trapdist {

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
};

// Adaptive 15-point Gauss-Kronrod over each panel [cuts[i], cuts[i+1]].
// Splitting at the kinks of a piecewise integrand keeps every panel smooth.
// Panels ending at a square-root point stall above tight tolerances, so the
// depth stays bounded.
template <typename F>
QuadratureResult integrate_piecewise(F&& f, std::span<const double> cuts, double tolerance = 1e-12,
                                     unsigned max_depth = 12) {
  QuadratureResult out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double err = 0;
    out.value += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, cuts[i], cuts[i + 1], max_depth, tolerance, &err);
    out.error_estimate += err;
  }
  return out;
}

}  // namespace trapdist

#endif  // TRAPDIST_QUADRATURE_HPP
