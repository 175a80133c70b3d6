// Command-line front end: exact counts, point enumeration, Ehrhart
// interpolation, certificate checks, density sampling, and regime bounds.
// JSON goes to stdout; errors go to stderr with exit codes
//   2 usage, 3 resource budget, 4 infeasible or out-of-range parameters.

#include <cstdint>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hadlat/bounds.hpp"
#include "hadlat/errors.hpp"
#include "hadlat/lattice_enum.hpp"
#include "hadlat/serialize.hpp"

namespace {

using hadlat::Json;

struct Options {
  int m = 2;
  int64_t n = 0;
  int64_t d = 1;
  int k = 0;
  int64_t c = 1;
  int64_t radius = 1;
  std::string eps = "0.1";
  uint64_t samples = 10000;
  uint64_t seed = 0;
  uint64_t cap = UINT64_MAX;
  uint64_t budget = 0;  // 0 = subcommand default
  std::string method = "auto";
  std::string format = "json";
  unsigned threads = 0;  // 0 = all cores
};

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

hadlat::CountMethod parse_method(const std::string& name, int64_t d) {
  if (name == "oracle") return hadlat::CountMethod::kOracle;
  if (name == "bijection") return hadlat::CountMethod::kBijection;
  if (name == "auto") {
    return d == 1 ? hadlat::CountMethod::kBijection
                  : hadlat::CountMethod::kOracle;
  }
  throw CLI::ValidationError("--method must be oracle, bijection, or auto");
}

int run_count(const Options& opt) {
  const hadlat::CountMethod method = parse_method(opt.method, opt.d);
  const uint64_t budget =
      opt.budget ? opt.budget : hadlat::kDefaultNodeBudget;
  hadlat::BigInt count = hadlat::count_dilate(opt.m, opt.d, method, budget);
  Json j;
  j["m"] = opt.m;
  j["d"] = opt.d;
  j["method"] =
      method == hadlat::CountMethod::kOracle ? "oracle" : "bijection";
  j["count"] = hadlat::to_string(count);
  emit(j);
  return 0;
}

int run_enumerate(const Options& opt) {
  const hadlat::CountMethod method = parse_method(opt.method, opt.d);
  const uint64_t budget =
      opt.budget ? opt.budget : hadlat::kDefaultNodeBudget;
  const bool csv = opt.format == "csv";
  uint64_t yielded = 0;
  Json points = Json::array();
  auto take = [&](const hadlat::LatticePoint& v) {
    if (csv) {
      std::cout << hadlat::point_to_csv(v) << "\n";
    } else {
      points.push_back(hadlat::point_to_json(v));
    }
    return ++yielded < opt.cap;
  };
  if (method == hadlat::CountMethod::kBijection) {
    if (opt.d != 1) {
      throw hadlat::DomainError(
          "the bijection method enumerates the unit dilate only (d = 1)");
    }
    hadlat::UnitPointStream stream(opt.m);
    while (auto v = stream.next()) {
      if (!take(*v)) break;
    }
  } else {
    hadlat::DilatePointStream stream(opt.m, opt.d, budget);
    while (auto v = stream.next()) {
      if (!take(*v)) break;
    }
  }
  if (!csv) emit(points);
  return 0;
}

int run_ehrhart(const Options& opt) {
  const uint64_t budget =
      opt.budget ? opt.budget : hadlat::kDefaultNodeBudget;
  const int64_t n = int64_t(1) << opt.m;
  std::vector<hadlat::EhrhartSample> samples;
  Json counts = Json::array();
  for (int64_t d = 0; d < n; ++d) {
    hadlat::BigInt c =
        hadlat::count_dilate(opt.m, d, hadlat::CountMethod::kOracle, budget);
    counts.push_back({{"d", d}, {"count", hadlat::to_string(c)}});
    samples.push_back({d, c});
  }
  std::vector<hadlat::BigRational> coeffs =
      hadlat::ehrhart_interpolate(opt.m, samples);
  Json j;
  j["m"] = opt.m;
  j["counts"] = counts;
  Json cj = Json::array();
  for (const auto& c : coeffs) cj.push_back(hadlat::to_string(c));
  j["coefficients"] = cj;
  emit(j);
  return 0;
}

int run_certify(const Options& opt) {
  const uint64_t budget =
      opt.budget ? opt.budget : hadlat::kDefaultFamilyBudget;
  hadlat::Case1Count count = hadlat::case1_count_lower_bound(opt.m, opt.d);
  hadlat::InjectivityReport report =
      hadlat::case1_verify_injectivity(opt.m, opt.d, budget);
  Json j;
  j["m"] = opt.m;
  j["d"] = opt.d;
  j["families"] = hadlat::to_string(count.exact);
  j["distinct_sums"] = report.distinct;
  j["sums_member"] = report.sums_member;
  j["central_dims"] = count.central_dims;
  j["crude_log2"] = count.crude_log2;
  emit(j);
  return report.distinct && report.sums_member ? 0 : 1;
}

int run_density(const Options& opt) {
  const unsigned threads =
      opt.threads ? opt.threads
                  : std::max(1u, std::thread::hardware_concurrency());
  hadlat::DensityEstimate est = hadlat::case3_sample_density(
      opt.m, opt.d, opt.c, opt.radius, opt.samples, opt.seed, threads);
  emit(hadlat::to_json(est));
  return 0;
}

int run_bound(const Options& opt) {
  int64_t n = opt.n;
  if (n == 0) n = int64_t(1) << opt.m;
  hadlat::BoundReport report =
      hadlat::theorem1_bound(n, opt.d, hadlat::rational_from_string(opt.eps));
  emit(hadlat::to_json(report));
  return 0;
}

int run_gbinom(const Options& opt) {
  Json j;
  j["m"] = opt.m;
  j["k"] = opt.k;
  j["value"] = hadlat::to_string(hadlat::gaussian_binomial(opt.m, opt.k));
  emit(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hadlat: integer points of the Hadamard polytope and its dilates"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", opt.threads,
                    "Worker threads (default: all cores); never changes "
                    "output bytes");
    sub->add_option("--budget", opt.budget,
                    "Override the work budget for this subcommand");
  };

  CLI::App* count = app.add_subcommand("count", "Count points of d*Had");
  count->add_option("--m", opt.m, "log2 of the ambient dimension")->required();
  count->add_option("--d", opt.d, "dilation");
  count->add_option("--method", opt.method, "oracle | bijection | auto");
  add_common(count);

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "List points of d*Had");
  enumerate->add_option("--m", opt.m, "log2 of the ambient dimension")
      ->required();
  enumerate->add_option("--d", opt.d, "dilation");
  enumerate->add_option("--method", opt.method, "oracle | bijection | auto");
  enumerate->add_option("--cap", opt.cap, "Maximum points to emit");
  enumerate->add_option("--format", opt.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  add_common(enumerate);

  CLI::App* ehrhart = app.add_subcommand(
      "ehrhart", "Interpolate the counting polynomial from oracle counts");
  ehrhart->add_option("--m", opt.m, "log2 of the ambient dimension")
      ->required();
  add_common(ehrhart);

  CLI::App* certify = app.add_subcommand(
      "certify", "Enumerate certificate families and verify distinct sums");
  certify->add_option("--m", opt.m, "log2 of the ambient dimension")
      ->required();
  certify->add_option("--d", opt.d, "family size / dilation");
  add_common(certify);

  CLI::App* density = app.add_subcommand(
      "density", "Sample a random punctured hypercube against d*Had");
  density->add_option("--m", opt.m, "log2 of the ambient dimension")
      ->required();
  density->add_option("--d", opt.d, "dilation");
  density->add_option("--c", opt.c, "support size")->required();
  density->add_option("--D", opt.radius, "hypercube radius")->required();
  density->add_option("--samples", opt.samples, "number of samples");
  density->add_option("--seed", opt.seed, "RNG seed; determines all output");
  add_common(density);

  CLI::App* bound =
      app.add_subcommand("bound", "Regime-classified lower bound for d*Had");
  bound->add_option("--n", opt.n, "ambient dimension (power of two)");
  bound->add_option("--m", opt.m, "log2 of the ambient dimension");
  bound->add_option("--d", opt.d, "dilation")->required();
  bound->add_option("--eps", opt.eps, "epsilon as a decimal or p/q");
  add_common(bound);

  CLI::App* gbinom =
      app.add_subcommand("gbinom", "Gaussian binomial [m k]_2");
  gbinom->add_option("--m", opt.m, "ambient dimension")->required();
  gbinom->add_option("--k", opt.k, "subspace dimension")->required();
  add_common(gbinom);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(count)) return run_count(opt);
    if (app.got_subcommand(enumerate)) return run_enumerate(opt);
    if (app.got_subcommand(ehrhart)) return run_ehrhart(opt);
    if (app.got_subcommand(certify)) return run_certify(opt);
    if (app.got_subcommand(density)) return run_density(opt);
    if (app.got_subcommand(bound)) return run_bound(opt);
    if (app.got_subcommand(gbinom)) return run_gbinom(opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const hadlat::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 3;
  } catch (const hadlat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
