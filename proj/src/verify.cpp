#include "trapdist/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "trapdist/dist.hpp"
#include "trapdist/io.hpp"
#include "trapdist/quadrature.hpp"

namespace trapdist {

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw std::invalid_argument("EmpiricalCdf needs at least one sample");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::mean() const {
  return std::accumulate(sorted_.begin(), sorted_.end(), 0.0) / static_cast<double>(n());
}

double EmpiricalCdf::stddev() const {
  if (n() < 2) return 0;
  const double m = mean();
  double ss = 0;
  for (const double x : sorted_) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(n() - 1));
}

EmpiricalCdf simulate_distances(CaseId id, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("simulate_distances: n must be at least 1");
  const Arrangement arrangement = make_arrangement(id);
  RandomStream rng(seed);
  std::vector<double> distances(n);
  for (auto& d : distances) {
    const auto [p, q] = sample_pair(arrangement, rng);
    d = (p - q).norm();
  }
  return EmpiricalCdf(std::move(distances));
}

KsStatistic ks_statistic(const EmpiricalCdf& emp, CaseId id) {
  const auto& dist = distribution(id);
  const auto& xs = emp.sorted();
  const double n = static_cast<double>(xs.size());
  KsStatistic out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = dist.cdf(xs[i]);
    const double gap = std::max(std::abs(static_cast<double>(i + 1) / n - f),
                                std::abs(static_cast<double>(i) / n - f));
    if (gap > out.value) {
      out.value = gap;
      out.location = xs[i];
    }
  }
  return out;
}

double ks_critical_value(std::size_t n) { return 1.36 / std::sqrt(static_cast<double>(n)); }

bool ConsistencyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

const CheckRecord& ConsistencyReport::find(const std::string& check) const {
  for (const auto& c : checks) {
    if (c.check == check) return c;
  }
  throw std::out_of_range("no check named '" + check + "'");
}

namespace {

constexpr double kNormalizationTol = 1e-9;
constexpr double kEndpointTol = 1e-10;
constexpr double kContinuityTol = 1e-9;
constexpr double kNonNegativityFloor = -1e-12;
// Rounding noise of the closed forms near d_max, where the true increments
// between grid points fall below double resolution.
constexpr double kMonotonicitySlack = 1e-13;
constexpr double kFiniteDifferenceStep = 1e-6;
constexpr double kBreakpointExclusion = 1e-3;
constexpr std::size_t kFiniteDifferencePoints = 1000;
constexpr std::size_t kScanPoints = 100000;

CheckRecord make_check(CaseId id, std::string name, double statistic, double threshold,
                       std::optional<double> location, bool pass) {
  return CheckRecord{id, std::move(name), std::nullopt, std::nullopt, statistic, threshold,
                     location, pass};
}

// Uniform grid of at least `count` points in (0, d_max) that stay at least
// kBreakpointExclusion away from every breakpoint.
std::vector<double> interior_grid(const std::vector<double>& breakpoints, std::size_t count) {
  const double d_max = breakpoints.back();
  for (std::size_t m = count;; m += count / 10) {
    std::vector<double> grid;
    for (std::size_t k = 0; k < m; ++k) {
      const double x = d_max * (static_cast<double>(k) + 0.5) / static_cast<double>(m);
      const bool near = std::any_of(breakpoints.begin(), breakpoints.end(), [x](double b) {
        return std::abs(x - b) < kBreakpointExclusion;
      });
      if (!near) grid.push_back(x);
    }
    if (grid.size() >= count) return grid;
  }
}

}  // namespace

ConsistencyReport consistency_suite(CaseId id) {
  const auto& dist = distribution(id);
  const auto& bp = dist.breakpoints();
  const double d_max = dist.d_max();
  ConsistencyReport report{id, {}};

  {
    const double mass =
        integrate_piecewise([&dist](double t) { return dist.pdf(t); }, bp).value;
    const double defect = std::abs(mass - 1);
    report.checks.push_back(make_check(id, "normalization", defect, kNormalizationTol,
                                       std::nullopt, defect <= kNormalizationTol));
  }
  {
    const double defect = std::abs(dist.cumulative_fn()(d_max) - 1);
    report.checks.push_back(
        make_check(id, "cdf_endpoint", defect, kEndpointTol, d_max, defect <= kEndpointTol));
  }
  for (const auto* which : {"pdf_continuity", "cdf_continuity"}) {
    const auto& fn = std::string(which) == "pdf_continuity" ? dist.density_fn() : dist.cumulative_fn();
    double worst = 0;
    double where = bp[1];
    for (std::size_t i = 1; i + 1 < bp.size(); ++i) {
      const double jump = std::abs(fn.branch(i - 1, bp[i]) - fn.branch(i, bp[i]));
      if (jump > worst) {
        worst = jump;
        where = bp[i];
      }
    }
    report.checks.push_back(
        make_check(id, which, worst, kContinuityTol, where, worst <= kContinuityTol));
  }
  {
    const double h = kFiniteDifferenceStep;
    double worst = 0;
    double where = 0;
    for (const double x : interior_grid(bp, kFiniteDifferencePoints)) {
      const double slope = (dist.cdf(x + h) - dist.cdf(x - h)) / (2 * h);
      const double f = dist.pdf(x);
      const double ratio = std::abs(slope - f) / std::max(1e-6, 1e-4 * std::abs(f));
      if (ratio > worst) {
        worst = ratio;
        where = x;
      }
    }
    report.checks.push_back(make_check(id, "finite_difference", worst, 1.0, where, worst <= 1.0));
  }
  {
    double lowest = 0;
    double where = 0;
    double largest_drop = 0;
    double drop_at = 0;
    double prev = dist.cdf(0);
    for (std::size_t k = 0; k <= kScanPoints; ++k) {
      const double x = d_max * static_cast<double>(k) / static_cast<double>(kScanPoints);
      const double f = dist.density_fn()(x);
      if (f < lowest) {
        lowest = f;
        where = x;
      }
      const double F = dist.cdf(x);
      if (prev - F > largest_drop) {
        largest_drop = prev - F;
        drop_at = x;
      }
      prev = F;
    }
    report.checks.push_back(make_check(id, "nonnegativity", lowest, kNonNegativityFloor, where,
                                       lowest >= kNonNegativityFloor));
    report.checks.push_back(
        make_check(id, "monotonicity", largest_drop, kMonotonicitySlack, drop_at,
                   largest_drop <= kMonotonicitySlack));
  }
  {
    const double worst = std::max({std::abs(dist.cdf(-1.0)), std::abs(dist.cdf(d_max + 1) - 1),
                                   std::abs(dist.pdf(-0.5)), std::abs(dist.pdf(d_max + 0.5))});
    report.checks.push_back(
        make_check(id, "outside_support", worst, 0.0, std::nullopt, worst <= 0.0));
  }
  return report;
}

double VerificationReport::ks_pass_fraction() const {
  if (ks.empty()) return 0;
  const auto passed = std::count_if(ks.begin(), ks.end(), [](const KsReport& r) { return r.pass; });
  return static_cast<double>(passed) / static_cast<double>(ks.size());
}

std::vector<CheckRecord> VerificationReport::records() const {
  std::vector<CheckRecord> out;
  out.reserve(ks.size() + consistency.checks.size());
  for (const auto& r : ks) {
    out.push_back(CheckRecord{r.case_id, "ks", r.n, r.seed, r.ks_statistic, r.critical_value,
                              r.location, r.pass});
  }
  out.insert(out.end(), consistency.checks.begin(), consistency.checks.end());
  return out;
}

VerificationReport run_verification(CaseId id, std::size_t n,
                                    std::span<const std::uint64_t> seeds) {
  if (n < 100) throw std::invalid_argument("run_verification: n must be at least 100");
  if (seeds.empty()) throw std::invalid_argument("run_verification: need at least one seed");

  std::vector<std::uint64_t> ordered(seeds.begin(), seeds.end());
  std::sort(ordered.begin(), ordered.end());

  VerificationReport report{id, {}, consistency_suite(id)};
  const double critical = ks_critical_value(n);
  for (const auto seed : ordered) {
    const auto ks = ks_statistic(simulate_distances(id, n, seed), id);
    report.ks.push_back(KsReport{id, n, seed, ks.value, critical, ks.location, ks.value < critical});
  }
  return report;
}

void write_report_csv(std::ostream& out, std::span<const CheckRecord> records, bool with_header) {
  if (with_header) out << kReportHeader << '\n';
  for (const auto& r : records) {
    out << lower_name(r.case_id) << ',' << r.check << ',';
    if (r.n) out << *r.n;
    out << ',';
    if (r.seed) out << *r.seed;
    out << ',' << format_real(r.statistic) << ',' << format_real(r.threshold) << ','
        << format_real(r.location) << ',' << (r.pass ? "true" : "false") << '\n';
  }
}

}  // namespace trapdist
