#ifndef TRAPDIST_VERIFY_HPP
#define TRAPDIST_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "trapdist/geom.hpp"

namespace trapdist {

// Empirical distribution of a sample, stored sorted ascending.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> samples);

  std::size_t n() const { return sorted_.size(); }
  const std::vector<double>& sorted() const { return sorted_; }

  // Fraction of samples <= x.
  double operator()(double x) const;

  double max() const { return sorted_.back(); }
  double min() const { return sorted_.front(); }
  double mean() const;
  // Unbiased sample standard deviation (0 when n == 1).
  double stddev() const;

 private:
  std::vector<double> sorted_;
};

// n independent pairs from the case's arrangement, stream seeded with `seed`.
EmpiricalCdf simulate_distances(CaseId id, std::size_t n, std::uint64_t seed);

struct KsStatistic {
  double value = 0;
  // Sample point where the supremum is attained.
  double location = 0;
};

// sup_i max(|i/n - F(x_i)|, |(i-1)/n - F(x_i)|) against the closed-form cdf.
KsStatistic ks_statistic(const EmpiricalCdf& emp, CaseId id);

// Asymptotic one-sample critical value at alpha = 0.05.
double ks_critical_value(std::size_t n);

struct KsReport {
  CaseId case_id;
  std::size_t n;
  std::uint64_t seed;
  double ks_statistic;
  double critical_value;
  double location;
  bool pass;
};

// One row of the machine-readable report.
struct CheckRecord {
  CaseId case_id;
  std::string check;
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> seed;
  double statistic;
  double threshold;
  std::optional<double> location;
  bool pass;
};

struct ConsistencyReport {
  CaseId case_id;
  std::vector<CheckRecord> checks;

  bool all_pass() const;
  const CheckRecord& find(const std::string& check) const;
};

/// Deterministic self-consistency checks of the closed forms:
///   normalization      |integral of pdf - 1|          <= 1e-9
///   cdf_endpoint       |F(d_max) - 1|                 <= 1e-10
///   pdf_continuity     max jump between branches      <= 1e-9
///   cdf_continuity     max jump between branches      <= 1e-9
///   finite_difference  worst |dF - f| / max(1e-6, 1e-4 f) on 1000 points
///                      away from breakpoints          <= 1
///   nonnegativity      min raw pdf on 1e5 points      >= -1e-12
///   monotonicity       max drop of cdf on 1e5 points  <= 1e-13
///   outside_support    max |value - convention|       <= 0
ConsistencyReport consistency_suite(CaseId id);

struct VerificationReport {
  CaseId case_id;
  std::vector<KsReport> ks;  // sorted by seed
  ConsistencyReport consistency;

  double ks_pass_fraction() const;
  std::vector<CheckRecord> records() const;
};

// KS test for each seed plus the consistency suite.
// Requires n >= 100 and at least one seed.
VerificationReport run_verification(CaseId id, std::size_t n, std::span<const std::uint64_t> seeds);

inline constexpr const char* kReportHeader = "case,check,n,seed,statistic,threshold,location,pass";

void write_report_csv(std::ostream& out, std::span<const CheckRecord> records,
                      bool with_header = true);

}  // namespace trapdist

#endif  // TRAPDIST_VERIFY_HPP
