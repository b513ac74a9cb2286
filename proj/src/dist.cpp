#include "trapdist/dist.hpp"

#include <array>
#include <stdexcept>

#include "trapdist/quadrature.hpp"

namespace trapdist {

const Distribution<double>& distribution(CaseId id) {
  static const std::array<Distribution<double>, 4> cache = {
      Distribution<double>(CaseId::AB), Distribution<double>(CaseId::CD),
      Distribution<double>(CaseId::EF), Distribution<double>(CaseId::GH)};
  return cache[static_cast<std::size_t>(id)];
}

double pdf(CaseId id, double d) { return distribution(id).pdf(d); }

double cdf(CaseId id, double d) { return distribution(id).cdf(d); }

std::pair<double, double> support(CaseId id) { return distribution(id).support(); }

double mean_distance(CaseId id) {
  const auto& dist = distribution(id);
  return integrate_piecewise([&dist](double t) { return t * dist.pdf(t); }, dist.breakpoints())
      .value;
}

ScaledDistribution::ScaledDistribution(CaseId base_case, double scale) : base(base_case), s(scale) {
  if (!(scale > 0) || !std::isfinite(scale)) {
    throw std::domain_error("scale must be a positive finite number");
  }
}

double ScaledDistribution::pdf(double d) const { return trapdist::pdf(base, d / s) / s; }

double ScaledDistribution::cdf(double d) const { return trapdist::cdf(base, d / s); }

std::pair<double, double> ScaledDistribution::support() const {
  return {0.0, s * distribution(base).d_max()};
}

double scaled_pdf(CaseId base, double s, double d) { return ScaledDistribution(base, s).pdf(d); }

double scaled_cdf(CaseId base, double s, double d) { return ScaledDistribution(base, s).cdf(d); }

}  // namespace trapdist
