#ifndef TRAPDIST_DIST_HPP
#define TRAPDIST_DIST_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trapdist/closed_form.hpp"
#include "trapdist/geom.hpp"

namespace trapdist {

/// Piecewise real function over [breakpoints.front(), breakpoints.back()].
///
/// Branch i covers the closed interval [breakpoints[i], breakpoints[i+1]];
/// at a shared breakpoint the lower branch is used. Outside the covered
/// range the function is the constant `below` or `above`.
template <typename Scalar>
class PiecewiseFn {
 public:
  using Branch = std::function<Scalar(Scalar)>;

  PiecewiseFn(std::vector<Scalar> breakpoints, std::vector<Branch> branches, Scalar below,
              Scalar above)
      : breakpoints_(std::move(breakpoints)),
        branches_(std::move(branches)),
        below_(below),
        above_(above) {
    if (breakpoints_.size() < 2 || branches_.size() + 1 != breakpoints_.size()) {
      throw std::invalid_argument("PiecewiseFn: need one branch per interval");
    }
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
      if (!(breakpoints_[i - 1] < breakpoints_[i])) {
        throw std::invalid_argument("PiecewiseFn: breakpoints must be strictly increasing");
      }
    }
  }

  Scalar operator()(Scalar x) const {
    if (x < breakpoints_.front()) return below_;
    if (x > breakpoints_.back()) return above_;
    return branches_[locate(x)](x);
  }

  // Index of the branch that owns x, for x inside the covered range.
  std::size_t locate(Scalar x) const {
    std::size_t i = 0;
    while (i + 2 < breakpoints_.size() && x > breakpoints_[i + 1]) ++i;
    return i;
  }

  Scalar branch(std::size_t i, Scalar x) const { return branches_.at(i)(x); }

  const std::vector<Scalar>& breakpoints() const { return breakpoints_; }
  std::size_t branch_count() const { return branches_.size(); }

 private:
  std::vector<Scalar> breakpoints_;
  std::vector<Branch> branches_;
  Scalar below_;
  Scalar above_;
};

// Additive constants of the distribution-function branches. constants[0]
// is zero by F(0) = 0; the rest follow from continuity at each breakpoint.
template <typename Scalar>
struct ContinuityConstants {
  CaseId case_id;
  std::vector<Scalar> constants;
  // F(d_max) - 1 with the solved constants.
  Scalar endpoint_defect;
};

// Raised when the solved distribution function does not reach 1 at d_max,
// which means a branch expression is wrong.
class ContinuityError : public std::runtime_error {
 public:
  ContinuityError(CaseId id, double defect)
      : std::runtime_error("case " + std::string(to_string(id)) +
                           ": F(d_max) - 1 = " + std::to_string(defect) +
                           " after solving continuity constants"),
        case_id_(id),
        defect_(defect) {}

  CaseId case_id() const { return case_id_; }
  double defect() const { return defect_; }

 private:
  CaseId case_id_;
  double defect_;
};

inline constexpr double kEndpointHardLimit = 1e-6;

template <typename Scalar>
ContinuityConstants<Scalar> solve_continuity_constants(CaseId id) {
  const auto bp = closed_form::breakpoints<Scalar>(id);
  const std::size_t n = closed_form::branch_count(id);
  std::vector<Scalar> c(n, Scalar(0));
  for (std::size_t i = 1; i < n; ++i) {
    const Scalar x = bp[i];
    c[i] = closed_form::cumulative_branch(id, i - 1, x) + c[i - 1] -
           closed_form::cumulative_branch(id, i, x);
  }
  const Scalar top = closed_form::cumulative_branch(id, n - 1, bp.back()) + c.back();
  ContinuityConstants<Scalar> out{id, std::move(c), top - 1};
  using std::abs;
  if (!(abs(out.endpoint_defect) <= Scalar(kEndpointHardLimit))) {
    throw ContinuityError(id, static_cast<double>(out.endpoint_defect));
  }
  return out;
}

/// Density and distribution function of the distance for one case.
///
/// Built once per case; immutable afterwards. The distribution function
/// uses the exact continuity constants, not rounded ones.
template <typename Scalar>
class Distribution {
 public:
  explicit Distribution(CaseId id)
      : id_(id),
        constants_(solve_continuity_constants<Scalar>(id)),
        pdf_(make_pdf(id)),
        cdf_(make_cdf(id, constants_.constants)) {}

  CaseId case_id() const { return id_; }
  Scalar d_max() const { return pdf_.breakpoints().back(); }
  std::pair<Scalar, Scalar> support() const { return {Scalar(0), d_max()}; }
  const std::vector<Scalar>& breakpoints() const { return pdf_.breakpoints(); }
  const ContinuityConstants<Scalar>& constants() const { return constants_; }

  // Density, floored at zero. Use density_fn() for the raw branch values.
  Scalar pdf(Scalar d) const { return std::max(Scalar(0), pdf_(d)); }

  // Distribution function, clamped to [0, 1] and exactly 1 from d_max on.
  Scalar cdf(Scalar d) const {
    if (d >= d_max()) return Scalar(1);
    return std::clamp(cdf_(d), Scalar(0), Scalar(1));
  }

  const PiecewiseFn<Scalar>& density_fn() const { return pdf_; }
  const PiecewiseFn<Scalar>& cumulative_fn() const { return cdf_; }

 private:
  static PiecewiseFn<Scalar> make_pdf(CaseId id) {
    std::vector<typename PiecewiseFn<Scalar>::Branch> branches;
    for (std::size_t i = 0; i < closed_form::branch_count(id); ++i) {
      branches.emplace_back([id, i](Scalar d) { return closed_form::density_branch(id, i, d); });
    }
    return PiecewiseFn<Scalar>(closed_form::breakpoints<Scalar>(id), std::move(branches),
                               Scalar(0), Scalar(0));
  }

  static PiecewiseFn<Scalar> make_cdf(CaseId id, const std::vector<Scalar>& c) {
    std::vector<typename PiecewiseFn<Scalar>::Branch> branches;
    for (std::size_t i = 0; i < closed_form::branch_count(id); ++i) {
      const Scalar offset = c[i];
      branches.emplace_back(
          [id, i, offset](Scalar d) { return closed_form::cumulative_branch(id, i, d) + offset; });
    }
    return PiecewiseFn<Scalar>(closed_form::breakpoints<Scalar>(id), std::move(branches),
                               Scalar(0), Scalar(1));
  }

  CaseId id_;
  ContinuityConstants<Scalar> constants_;
  PiecewiseFn<Scalar> pdf_;
  PiecewiseFn<Scalar> cdf_;
};

// Cached double-precision instance for `id`.
const Distribution<double>& distribution(CaseId id);

double pdf(CaseId id, double d);
double cdf(CaseId id, double d);
std::pair<double, double> support(CaseId id);

// First moment, by adaptive quadrature split at every breakpoint.
double mean_distance(CaseId id);

/// Distance law for a trapezoid whose sides are all scaled by s > 0:
/// F_s(d) = F(d / s) and f_s(d) = f(d / s) / s.
struct ScaledDistribution {
  CaseId base;
  double s;

  ScaledDistribution(CaseId base_case, double scale);

  double pdf(double d) const;
  double cdf(double d) const;
  std::pair<double, double> support() const;
};

// Throw std::domain_error unless s > 0.
double scaled_pdf(CaseId base, double s, double d);
double scaled_cdf(CaseId base, double s, double d);

}  // namespace trapdist

#endif  // TRAPDIST_DIST_HPP
