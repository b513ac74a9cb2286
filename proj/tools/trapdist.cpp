// trapdist: evaluate, sample, verify and fit the distance distributions of
// unit trapezoids.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "trapdist/dist.hpp"
#include "trapdist/geom.hpp"
#include "trapdist/io.hpp"
#include "trapdist/polyfit.hpp"
#include "trapdist/verify.hpp"

namespace {

using namespace trapdist;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

constexpr double kRequiredKsPassFraction = 0.90;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<CaseId> select_cases(const std::string& selector) {
  if (selector == "all" || selector == "ALL") return {kAllCases.begin(), kAllCases.end()};
  try {
    return {parse_case(selector)};
  } catch (const std::invalid_argument&) {
    throw UsageError("case must be one of ab, cd, ef, gh, all (got '" + selector + "')");
  }
}

CaseId single_case(const std::string& selector) {
  const auto cases = select_cases(selector);
  if (cases.size() != 1) throw UsageError("this subcommand takes a single case");
  return cases.front();
}

std::uint64_t parse_seed(std::string_view text) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("invalid seed '" + std::string(text) + "'");
  }
  return value;
}

// "7", "1..100", "1,5,9..12"
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      seeds.push_back(parse_seed(item));
      continue;
    }
    const auto lo = parse_seed(std::string_view(item).substr(0, dots));
    const auto hi = parse_seed(std::string_view(item).substr(dots + 2));
    if (hi < lo) throw UsageError("empty seed range '" + item + "'");
    for (auto s = lo; s <= hi; ++s) {
      seeds.push_back(s);
      if (s == hi) break;
    }
  }
  if (seeds.empty()) throw UsageError("no seeds given");
  return seeds;
}

void emit(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
    std::cout.flush();
    return;
  }
  write_file_atomic(path, contents);
}

struct EvalOptions {
  std::string selector;
  double d = 0;
  bool want_pdf = false;
  bool want_cdf = false;
  double scale = 1;
};

int run_eval(const EvalOptions& o) {
  const CaseId id = single_case(o.selector);
  if (!(o.scale > 0)) throw UsageError("--scale must be positive");
  const double value = o.want_cdf ? scaled_cdf(id, o.scale, o.d) : scaled_pdf(id, o.scale, o.d);
  std::cout << format_real(value) << '\n';
  return kExitOk;
}

struct SampleOptions {
  std::string selector;
  std::size_t n = 10000;
  std::uint64_t seed = 1;
  std::string output;
};

int run_sample(const SampleOptions& o) {
  const CaseId id = single_case(o.selector);
  if (o.n < 1) throw UsageError("-n must be at least 1");
  const Arrangement arrangement = make_arrangement(id);
  RandomStream rng(o.seed);
  std::string out = "d\n";
  out.reserve(o.n * 22);
  for (std::size_t i = 0; i < o.n; ++i) {
    const auto [p, q] = sample_pair(arrangement, rng);
    out += format_real((p - q).norm());
    out += '\n';
  }
  emit(o.output, out);
  return kExitOk;
}

struct VerifyOptions {
  std::string selector;
  std::size_t n = 10000;
  std::string seeds = "1..100";
  std::string output;
};

int run_verify(const VerifyOptions& o) {
  const auto cases = select_cases(o.selector);
  if (o.n < 100) throw UsageError("-n must be at least 100");
  const auto seeds = parse_seeds(o.seeds);

  std::vector<std::future<VerificationReport>> jobs;
  for (const CaseId id : cases) {
    jobs.push_back(std::async(std::launch::async, [id, &o, &seeds] {
      return run_verification(id, o.n, seeds);
    }));
  }

  bool ok = true;
  std::ostringstream csv;
  csv << kReportHeader << '\n';
  for (auto& job : jobs) {
    const auto report = job.get();
    const auto records = report.records();
    write_report_csv(csv, records, false);
    const double fraction = report.ks_pass_fraction();
    const bool consistent = report.consistency.all_pass();
    const bool case_ok = consistent && fraction >= kRequiredKsPassFraction;
    ok = ok && case_ok;
    const auto passed =
        std::count_if(report.ks.begin(), report.ks.end(), [](const KsReport& r) { return r.pass; });
    std::cerr << lower_name(report.case_id) << ": ks pass " << passed << "/" << report.ks.size()
              << ", consistency " << (consistent ? "ok" : "FAILED")
              << (case_ok ? "" : "  <-- verification failed") << '\n';
  }
  emit(o.output, csv.str());
  return ok ? kExitOk : kExitVerifyFailed;
}

struct FitOptions {
  std::string selector;
  int degree = 12;
  std::size_t grid = 1000;
  std::string output;
};

int run_fit(const FitOptions& o) {
  const auto cases = select_cases(o.selector);
  const FitConfig cfg{o.degree, o.grid};
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<FitResult> fits;
  for (const CaseId id : cases) fits.push_back(fit_pdf(id, cfg));
  std::ostringstream csv;
  write_coefficients_csv(csv, fits);
  emit(o.output, csv.str());
  for (const auto& f : fits) {
    std::cerr << lower_name(f.case_id) << " normr " << format_real(f.norm_residuals) << '\n';
  }
  return kExitOk;
}

struct CurvesOptions {
  std::string selector;
  std::size_t grid = 1000;
  std::string output;
};

int run_curves(const CurvesOptions& o) {
  const auto cases = select_cases(o.selector);
  if (o.grid < 2) throw UsageError("-g must be at least 2");
  double span = 0;
  for (const CaseId id : cases) span = std::max(span, distribution(id).d_max());

  std::string out = "d";
  for (const CaseId id : cases) {
    out += ",pdf_";
    out += lower_name(id);
    out += ",cdf_";
    out += lower_name(id);
  }
  out += '\n';
  for (std::size_t k = 0; k < o.grid; ++k) {
    const double d = k + 1 == o.grid ? span
                                     : span * static_cast<double>(k) / static_cast<double>(o.grid - 1);
    out += format_real(d);
    for (const CaseId id : cases) {
      out += ',';
      out += format_real(pdf(id, d));
      out += ',';
      out += format_real(cdf(id, d));
    }
    out += '\n';
  }
  emit(o.output, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance distributions within and between unit trapezoids"};
  app.require_subcommand(1);

  const std::string case_help = "Case: ab, cd, ef, gh";
  const std::string cases_help = "Case: ab, cd, ef, gh or all";

  EvalOptions eval_opts;
  auto* eval = app.add_subcommand("eval", "Evaluate the pdf or cdf at one distance");
  eval->add_option("case", eval_opts.selector, case_help)->required();
  eval->add_option("-d", eval_opts.d, "Distance")->required();
  auto* pdf_flag = eval->add_flag("--pdf", eval_opts.want_pdf, "Evaluate the density (default)");
  auto* cdf_flag = eval->add_flag("--cdf", eval_opts.want_cdf, "Evaluate the distribution function");
  pdf_flag->excludes(cdf_flag);
  eval->add_option("--scale", eval_opts.scale, "Side-length scale factor s > 0")
      ->capture_default_str();

  SampleOptions sample_opts;
  auto* sample = app.add_subcommand("sample", "Write Monte Carlo distances, one per line");
  sample->add_option("case", sample_opts.selector, case_help)->required();
  sample->add_option("-n", sample_opts.n, "Number of point pairs")->capture_default_str();
  sample->add_option("-s,--seed", sample_opts.seed, "Random seed")->capture_default_str();
  sample->add_option("-o", sample_opts.output, "Output path (default: standard output)");

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Monte Carlo KS tests plus consistency checks");
  verify->add_option("case", verify_opts.selector, cases_help)->required();
  verify->add_option("-n", verify_opts.n, "Point pairs per seed")->capture_default_str();
  verify->add_option("--seeds", verify_opts.seeds, "Seeds: list and/or ranges, e.g. 1..100 or 3,7")
      ->capture_default_str();
  verify->add_option("-o", verify_opts.output, "Report path (default: standard output)");

  FitOptions fit_opts;
  auto* fit = app.add_subcommand("fit", "Least-squares polynomial fit of the pdf");
  fit->add_option("case", fit_opts.selector, cases_help)->required();
  fit->add_option("-D", fit_opts.degree, "Polynomial degree")->capture_default_str();
  fit->add_option("-g", fit_opts.grid, "Uniform grid points on [0, d_max]")->capture_default_str();
  fit->add_option("-o", fit_opts.output, "Coefficient CSV path (default: standard output)");

  CurvesOptions curves_opts;
  auto* curves = app.add_subcommand("curves", "Tabulate pdf and cdf curves as CSV");
  curves->add_option("case", curves_opts.selector, cases_help)->required();
  curves->add_option("-g", curves_opts.grid, "Grid points")->capture_default_str();
  curves->add_option("-o", curves_opts.output, "Output path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval) return run_eval(eval_opts);
    if (*sample) return run_sample(sample_opts);
    if (*verify) return run_verify(verify_opts);
    if (*fit) return run_fit(fit_opts);
    if (*curves) return run_curves(curves_opts);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
