#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "su3sb/catalog.hpp"
#include "su3sb/irreps.hpp"
#include "su3sb/su2.hpp"
#include "su3sb/suites.hpp"

namespace su3sb::cli {

namespace {

constexpr int kDefaultMaxTotal = 5;
constexpr int kVerifyCeiling = 7;
constexpr int kDefaultMaxRho = 10;
constexpr int kDefaultMaxSu2 = 16;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IrrepArgs {
  int n = -1;
  int m = -1;
  std::vector<int> upper;
  std::vector<int> lower;
  std::string method = "isb";
  std::string format = "json";
  int max_total = kDefaultMaxTotal;
  std::string cache_dir;
};

struct VerifyArgs {
  std::string suite;
  int max_total = kDefaultMaxTotal;
  std::string out_file;
  bool inject_fault = false;
};

struct DimArgs {
  int n = -1;
  int m = -1;
  int max_total = kDefaultMaxTotal;
};

struct TowerArgs {
  int n = -1;
  int m = -1;
  std::vector<int> upper;
  std::vector<int> lower;
  int rho = 0;
  int max_total = kDefaultMaxTotal;
  int max_rho = kDefaultMaxRho;
};

struct Su2Args {
  std::vector<int> indices;
  int max_n = kDefaultMaxSu2;
};

void require_bound(bool ok, const std::string& what) {
  if (!ok) {
    throw ResourceError(what);
  }
}

IrrepRequest make_request(int n, int m, std::vector<int> upper, std::vector<int> lower, bool pad_with_ones) {
  if (n < 0 || m < 0) {
    throw UsageError("--n and --m must be non-negative");
  }
  if (pad_with_ones) {
    if (upper.empty()) upper.assign(static_cast<std::size_t>(n), 1);
    if (lower.empty()) lower.assign(static_cast<std::size_t>(m), 1);
  }
  IrrepRequest req{n, m, std::move(upper), std::move(lower)};
  try {
    req.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return req;
}

std::string render_irrep(const IrrepArgs& args) {
  auto req = make_request(args.n, args.m, args.upper, args.lower, false);
  require_bound(req.n + req.m <= args.max_total, "irrep: n + m = " + std::to_string(req.n + req.m) +
                                                     " exceeds --max-total " + std::to_string(args.max_total));
  Method method;
  try {
    method = parse_method(args.method);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto state = build_irrep(req, method);
  if (args.format == "text") {
    return irrep_state_text(state);
  }
  return irrep_state_json(state).dump(2) + "\n";
}

std::string canonical_irrep_request(const IrrepArgs& args) {
  Json j;
  j["command"] = "irrep";
  j["n"] = args.n;
  j["m"] = args.m;
  j["upper"] = args.upper;
  j["lower"] = args.lower;
  j["method"] = args.method;
  j["format"] = args.format;
  return j.dump();
}

int cmd_irrep(const IrrepArgs& args, std::ostream& out) {
  std::string cache_dir = args.cache_dir;
  if (cache_dir.empty()) {
    if (const char* env = std::getenv(kCacheEnvVar)) {
      cache_dir = env;
    }
  }
  if (cache_dir.empty()) {
    out << render_irrep(args) << std::flush;
    return kSuccess;
  }
  // Bounds and argument checks run before any cache lookup.
  make_request(args.n, args.m, args.upper, args.lower, false);
  require_bound(args.n + args.m <= args.max_total, "irrep: n + m exceeds --max-total");

  Catalog catalog(cache_dir);
  const auto key = Catalog::key_for(canonical_irrep_request(args));
  if (auto hit = catalog.lookup(key)) {
    out << hit->body << std::flush;
    return kSuccess;
  }
  auto body = render_irrep(args);
  catalog.store(key, body);
  out << body << std::flush;
  return kSuccess;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  if (!is_suite_name(args.suite)) {
    throw UsageError("unknown suite: " + args.suite);
  }
  if (args.max_total < 0) {
    throw UsageError("--max-total must be non-negative");
  }
  require_bound(args.max_total <= kVerifyCeiling,
                "verify: --max-total " + std::to_string(args.max_total) + " exceeds ceiling " +
                    std::to_string(kVerifyCeiling));
  VerifyOptions options;
  options.max_total = args.max_total;
  options.inject_fault = args.inject_fault;
  auto report = run_suite(args.suite, options);
  auto text = report.to_json().dump(2) + "\n";
  if (args.out_file.empty()) {
    out << text << std::flush;
  } else {
    std::ofstream file(args.out_file, std::ios::binary | std::ios::trunc);
    if (!file) {
      throw UsageError("cannot open --out file " + args.out_file);
    }
    file << text;
  }
  return report.passed() ? kSuccess : kVerificationFailed;
}

int cmd_dim(const DimArgs& args, std::ostream& out) {
  if (args.n < 0 || args.m < 0) {
    throw UsageError("--n and --m must be non-negative");
  }
  auto rank = gram_rank(args.n, args.m, args.max_total);
  auto formula = irrep_dimension(args.n, args.m);
  Json j;
  j["n"] = args.n;
  j["m"] = args.m;
  j["gram_rank"] = rank;
  j["formula"] = formula;
  j["match"] = static_cast<long>(rank) == formula;
  out << j.dump() << "\n" << std::flush;
  return kSuccess;
}

int cmd_tower(const TowerArgs& args, std::ostream& out) {
  auto req = make_request(args.n, args.m, args.upper, args.lower, true);
  if (args.rho < 0) {
    throw UsageError("--rho must be non-negative");
  }
  require_bound(req.n + req.m <= args.max_total, "tower: n + m exceeds --max-total");
  require_bound(args.rho <= args.max_rho, "tower: --rho exceeds --max-rho");
  auto state = tower_state(req, args.rho);
  auto weight = sp2r_weight(state);
  Json j;
  j["label"] = Json::array({req.n, req.m});
  j["upper"] = req.upper;
  j["lower"] = req.lower;
  j["rho"] = args.rho;
  j["k"] = weight.k.to_string();
  j["m_prime"] = weight.m_prime.to_string();
  j["terms"] = state_json(state);
  out << j.dump(2) << "\n" << std::flush;
  return kSuccess;
}

int cmd_su2(const Su2Args& args, std::ostream& out) {
  require_bound(static_cast<int>(args.indices.size()) <= args.max_n, "su2-irrep: too many indices for --max-n");
  SU2State state;
  try {
    state = su2_irrep_state(args.indices);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  Json j;
  j["indices"] = state.indices;
  j["j"] = state.j().to_string();
  j["m"] = state.m().to_string();
  j["terms"] = state_json(state.vector);
  out << j.dump(2) << "\n" << std::flush;
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact SU(3) irreps from two-triplet Schwinger bosons", "su3sb"};
  app.require_subcommand(1);

  IrrepArgs irrep;
  auto* irrep_cmd = app.add_subcommand("irrep", "Construct one (n,m) irrep basis state");
  irrep_cmd->add_option("--n", irrep.n, "Number of upper (triplet) indices")->required();
  irrep_cmd->add_option("--m", irrep.m, "Number of lower (anti-triplet) indices")->required();
  irrep_cmd->add_option("--upper", irrep.upper, "Upper indices, comma separated")->delimiter(',');
  irrep_cmd->add_option("--lower", irrep.lower, "Lower indices, comma separated")->delimiter(',');
  irrep_cmd->add_option("--method", irrep.method, "explicit | projection | isb")
      ->check(CLI::IsMember({"explicit", "projection", "isb"}));
  irrep_cmd->add_option("--format", irrep.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  irrep_cmd->add_option("--max-total", irrep.max_total, "Upper bound on n + m");
  irrep_cmd->add_option("--cache", irrep.cache_dir, std::string("Cache directory (default: $") + kCacheEnvVar + ")");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and print its report");
  verify_cmd->add_option("--suite", verify.suite, "oscillator | su2 | algebra | sp2r | irreps | isb | ladder | all")
      ->required();
  verify_cmd->add_option("--max-total", verify.max_total, "Occupation / degree bound");
  verify_cmd->add_option("--out", verify.out_file, "Write the report here instead of stdout");
  verify_cmd->add_flag("--inject-fault", verify.inject_fault, "Negative control: corrupt one Gell-Mann matrix")
      ->group("");

  DimArgs dim;
  auto* dim_cmd = app.add_subcommand("dim", "Exact Gram rank of an (n,m) sector vs. the dimension formula");
  dim_cmd->add_option("--n", dim.n)->required();
  dim_cmd->add_option("--m", dim.m)->required();
  dim_cmd->add_option("--max-total", dim.max_total, "Upper bound on n + m");

  TowerArgs tower;
  auto* tower_cmd = app.add_subcommand("tower", "(a†·b†)^rho applied to an irrep state, with its Sp(2,R) labels");
  tower_cmd->add_option("--n", tower.n)->required();
  tower_cmd->add_option("--m", tower.m)->required();
  tower_cmd->add_option("--upper", tower.upper, "Upper indices (default all 1)")->delimiter(',');
  tower_cmd->add_option("--lower", tower.lower, "Lower indices (default all 1)")->delimiter(',');
  tower_cmd->add_option("--rho", tower.rho, "Power of a†·b†")->required();
  tower_cmd->add_option("--max-total", tower.max_total, "Upper bound on n + m");
  tower_cmd->add_option("--max-rho", tower.max_rho, "Upper bound on rho");

  Su2Args su2;
  auto* su2_cmd = app.add_subcommand("su2-irrep", "SU(2) state a†^{i1}...a†^{in}|0> with its (j, m) labels");
  su2_cmd->add_option("--indices", su2.indices, "Indices in {1,2}, comma separated")->delimiter(',');
  su2_cmd->add_option("--max-n", su2.max_n, "Upper bound on the number of indices");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  try {
    if (irrep_cmd->parsed()) return cmd_irrep(irrep, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    if (dim_cmd->parsed()) return cmd_dim(dim, out);
    if (tower_cmd->parsed()) return cmd_tower(tower, out);
    if (su2_cmd->parsed()) return cmd_su2(su2, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ResourceError& e) {
    err << "resource bound exceeded: " << e.what() << "\n";
    return kResourceExceeded;
  }
  err << app.help();
  return kUsageError;
}

}  // namespace su3sb::cli
