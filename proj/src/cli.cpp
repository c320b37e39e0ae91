#include "anore/cli.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

namespace anore {

namespace {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// compact h expressions

class HParser {
 public:
  explicit HParser(std::string text) : s_(std::move(text)) {}

  std::vector<cplx> parse() {
    std::vector<cplx> acc{1.0};
    skip();
    if (pos_ >= s_.size()) fail("empty expression");
    while (pos_ < s_.size()) {
      acc = convolve(acc, factor());
      skip();
    }
    return acc;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse h expression '" + s_ + "': " + why);
  }

  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '*')) ++pos_;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  static bool is_var(char c) { return c == 'y' || c == 'z'; }

  double number() {
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("expected a number");
    pos_ += static_cast<size_t>(end - begin);
    return v;
  }

  int exponent() {
    skip();
    const size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer exponent after '^'");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  static std::vector<cplx> convolve(const std::vector<cplx>& a,
                                    const std::vector<cplx>& b) {
    std::vector<cplx> c(a.size() + b.size() - 1, 0.0);
    for (size_t p = 0; p < a.size(); ++p) {
      for (size_t q = 0; q < b.size(); ++q) c[p + q] += a[p] * b[q];
    }
    return c;
  }

  // var | var +- const inside parentheses
  std::vector<cplx> linear() {
    skip();
    if (is_var(peek())) {
      ++pos_;
      skip();
      if (peek() == '+' || peek() == '-') {
        return {number(), 1.0};
      }
      return {0.0, 1.0};
    }
    return {number()};
  }

  std::vector<cplx> factor() {
    skip();
    std::vector<cplx> base;
    if (peek() == '(') {
      ++pos_;
      base = linear();
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else if (is_var(peek())) {
      ++pos_;
      base = {0.0, 1.0};
    } else {
      base = {number()};
    }
    skip();
    if (peek() == '^') {
      ++pos_;
      const int e = exponent();
      std::vector<cplx> out{1.0};
      for (int t = 0; t < e; ++t) out = convolve(out, base);
      base = std::move(out);
    }
    return base;
  }

  std::string s_;
  size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// shared plumbing

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

fs::path resolve_out_dir(const std::string& flag) {
  if (!flag.empty()) return fs::path(flag);
  if (const char* env = std::getenv("ANORE_OUT_DIR"); env && *env) return fs::path(env);
  return fs::path(".");
}

void write_file(const fs::path& dir, const std::string& name, const std::string& body) {
  fs::create_directories(dir);
  std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
  out << body;
}

struct LoadedFunction {
  FunctionModel model;
  std::optional<std::vector<ZeroDatum>> declared_zeros;
  Json echo;
};

LoadedFunction load_function(const std::string& h_expr, const std::string& spec_path) {
  if (!h_expr.empty() && !spec_path.empty()) {
    throw std::invalid_argument("give either --h or --spec, not both");
  }
  if (!h_expr.empty()) {
    if (h_expr.rfind("poly:", 0) == 0) {
      std::vector<cplx> coeffs;
      std::stringstream ss(h_expr.substr(5));
      std::string item;
      while (std::getline(ss, item, ',')) coeffs.push_back(std::stod(item));
      if (coeffs.empty()) throw std::invalid_argument("poly: needs coefficients");
      Json echo{{"type", "polynomial"}, {"expression", h_expr}};
      return {FunctionModel::polynomial(std::move(coeffs)), std::nullopt, echo};
    }
    Json echo{{"type", "polynomial"}, {"expression", h_expr}};
    return {parse_h_expression(h_expr), std::nullopt, echo};
  }
  if (spec_path.empty()) throw std::invalid_argument("one of --h or --spec is required");
  std::ifstream in(spec_path);
  if (!in) throw std::invalid_argument("cannot open spec file " + spec_path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("spec parse error: ") + e.what());
  }
  auto spec = function_spec_from_json(j);
  return {std::move(spec.model), std::move(spec.declared_zeros), std::move(spec.echo)};
}

struct ZeroAnalysis {
  std::vector<ZeroDatum> zeros;
  bool trivial = false;
  std::vector<std::string> warnings;
};

ZeroAnalysis analyze_zeros(const LoadedFunction& fn, double tol) {
  ZeroAnalysis out;
  if (fn.declared_zeros) {
    for (const auto& z : *fn.declared_zeros) {
      try {
        const int k = zero_order(fn.model, z.lambda, tol, std::max(2 * z.order, 8));
        if (k != z.order) {
          out.warnings.push_back("declared order " + std::to_string(z.order) +
                                 " probed as " + std::to_string(k) + " at lambda=(" +
                                 format17(z.lambda.real()) + "," +
                                 format17(z.lambda.imag()) + ")");
        }
        out.zeros.emplace_back(z.lambda, k);
      } catch (const NotAZeroError& e) {
        out.warnings.push_back(std::string("declared zero rejected: ") + e.what());
      } catch (const OrderUndecidableError& e) {
        out.warnings.push_back(std::string("zero order undecidable: ") + e.what());
      }
    }
  } else {
    try {
      out.zeros = find_zeros(fn.model, Rectangle{}, tol);
    } catch (const OrderUndecidableError& e) {
      out.warnings.push_back(std::string("zero order undecidable: ") + e.what());
    }
  }
  out.trivial = out.zeros.empty();
  return out;
}

Json zeros_to_json(const ZeroAnalysis& za) {
  Json arr = Json::array();
  for (const auto& z : za.zeros) arr.push_back(zero_to_json(z));
  return arr;
}

Json report_header(const std::string& command, const Json& config) {
  Json j;
  j["tool"] = "anore";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["config"] = config;
  return j;
}

constexpr const char* kTrivialDiagnostic =
    "h has no zeros in the region: the universal algebra is trivial";

// ---------------------------------------------------------------------------
// suite bodies shared between the dedicated subcommands and `report`

struct CheckLine {
  std::string name;
  bool pass = true;
  std::string detail;
};

void print_checks(const std::vector<CheckLine>& checks) {
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << ": " << c.detail;
    std::cout << "\n";
  }
}

bool all_pass(const std::vector<CheckLine>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckLine& c) { return c.pass; });
}

Json checks_to_json(const std::vector<CheckLine>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    arr.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return arr;
}

Json run_ore_suite(const LoadedFunction& fn, const ZeroAnalysis& za, int N, int xdeg,
                   double tol, int ftrials, uint64_t seed,
                   std::vector<CheckLine>& checks) {
  Json j;
  if (za.trivial) {
    j["diagnostic"] = kTrivialDiagnostic;
    checks.push_back({"ore-check/trivial", true, kTrivialDiagnostic});
    return j;
  }
  const auto rel = verify_main_relation(fn.model, za.zeros, N, xdeg);
  j["relation"] = relation_report_to_json(rel);
  checks.push_back({"ore-check/main-relation", rel.max_deviation <= tol,
                    "max deviation " + format17(rel.max_deviation)});

  if (ftrials > 0) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int t = 0; t < ftrials; ++t) {
      const auto f = FunctionModel::polynomial(random_series(0.0, 10, rng).coeffs());
      const double resid = intertwining_residual(fn.model, za.zeros, f, N);
      // normalize by the coefficient scale: expanding at far-away zeros blows
      // the magnitudes up and the float error with them
      const auto img =
          mu(FunctionModel::product(fn.model, FunctionModel::derivative(f)), za.zeros, N);
      double scale = 1.0;
      for (const auto& comp : img.components) {
        for (const auto& c : comp.coeffs()) scale = std::max(scale, std::abs(c));
      }
      worst = std::max(worst, resid / scale);
    }
    j["intertwining_max_relative_residual"] = worst;
    j["intertwining_trials"] = ftrials;
    checks.push_back({"ore-check/intertwining", worst <= 1e-10,
                      "max relative residual " + format17(worst)});
  }
  return j;
}

Json run_stability_suite(const LoadedFunction& fn, const ZeroAnalysis& za,
                         const std::vector<double>& r_grid,
                         const std::vector<double>& s_grid, int N, int trials,
                         double R, int samples, uint64_t seed,
                         std::vector<CheckLine>& checks) {
  Json j;
  Json certs = Json::array();
  Json formal = Json::array();
  std::mt19937_64 rng(seed);
  for (const auto& z : za.zeros) {
    if (z.order >= 2) {
      std::vector<double> svals = s_grid;
      if (svals.empty()) {
        const double s_min = 1.0 / (z.order - 1);
        svals = {s_min, s_min + 0.5, 1.0};
        std::sort(svals.begin(), svals.end());
        svals.erase(std::unique(svals.begin(), svals.end()), svals.end());
      }
      for (const double r : r_grid) {
        for (const double s : svals) {
          if (s < 1.0 / (z.order - 1) - 1e-12) continue;
          const auto cert = certify_stability(fn.model, z, r, s, N, trials, rng, R, samples);
          certs.push_back(certificate_to_json(cert));
          checks.push_back({"stability/power r=" + format17(r) + " s=" + format17(s) +
                                " lambda=(" + format17(z.lambda.real()) + "," +
                                format17(z.lambda.imag()) + ")",
                            cert.dominated(),
                            "empirical " + format17(cert.C_empirical) + " vs analytic " +
                                format17(cert.C_analytic)});
        }
      }
    } else {
      for (const int m : {0, 1, 2, 4, 8}) {
        const double bound = formal_operator_bound(fn.model, z, m);
        const double emp =
            stability_empirical(fn.model, z, SeminormParams::formal(m), N, trials, rng);
        Json entry;
        entry["zero"] = zero_to_json(z);
        entry["family"] = "formal";
        entry["m"] = m;
        entry["bound"] = bound;
        entry["empirical"] = emp;
        const bool ok = emp <= bound * (1.0 + 1e-9);
        entry["dominated"] = ok;
        formal.push_back(entry);
        checks.push_back({"stability/formal m=" + std::to_string(m) + " lambda=(" +
                              format17(z.lambda.real()) + "," +
                              format17(z.lambda.imag()) + ")",
                          ok, "empirical " + format17(emp) + " vs bound " + format17(bound)});
      }
    }
  }
  j["certificates"] = std::move(certs);
  j["formal"] = std::move(formal);
  return j;
}

std::string volterra_csv(const std::vector<double>& norms) {
  std::string csv = "n,norm,n_factorial_scaled\n";
  for (size_t i = 0; i < norms.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    const double scaled =
        std::exp(std::lgamma(static_cast<double>(n) + 1.0) + std::log(norms[i]));
    csv += std::to_string(n) + "," + format17(norms[i]) + "," + format17(scaled) + "\n";
  }
  return csv;
}

Json run_volterra_suite(int grid, int nmax, bool with_tv,
                        const std::vector<int>& tv_grids, bool enforce,
                        std::vector<CheckLine>& checks, std::string* csv_out) {
  Json j;
  j["grid"] = grid;
  j["n_max"] = nmax;
  const auto norms = volterra_norms(grid, nmax);
  *csv_out = volterra_csv(norms);

  std::vector<double> scaled;
  for (size_t i = 0; i < norms.size(); ++i) {
    scaled.push_back(
        std::exp(std::lgamma(static_cast<double>(i) + 2.0) + std::log(norms[i])));
  }
  j["norm_1"] = norms.front();
  j["scaled_last"] = scaled.back();

  if (enforce && nmax >= 40) {
    double lo = 1e300, hi = 0.0;
    for (int n = 20; n <= 40; ++n) {
      lo = std::min(lo, scaled[static_cast<size_t>(n - 1)]);
      hi = std::max(hi, scaled[static_cast<size_t>(n - 1)]);
    }
    j["band_min"] = lo;
    j["band_max"] = hi;
    checks.push_back({"volterra/band", lo >= 0.40 && hi <= 0.60,
                      "n!*norm in [" + format17(lo) + ", " + format17(hi) + "]"});
    double wlo = 1e300, whi = 0.0;
    for (int n = 25; n <= 40; ++n) {
      wlo = std::min(wlo, scaled[static_cast<size_t>(n - 1)]);
      whi = std::max(whi, scaled[static_cast<size_t>(n - 1)]);
    }
    const double variation = (whi - wlo) / wlo;
    j["variation_25_40"] = variation;
    checks.push_back(
        {"volterra/flatness", variation <= 0.05, "relative variation " + format17(variation)});
  }

  if (with_tv) {
    Json tv = Json::array();
    std::vector<double> residuals;
    for (const int g : tv_grids) {
      const double r = commutator_residual_tv(g);
      residuals.push_back(r);
      tv.push_back(Json{{"grid", g}, {"residual", r}});
    }
    j["tv_residuals"] = std::move(tv);
    if (enforce && residuals.size() >= 2) {
      bool decreasing = true;
      for (size_t i = 1; i < residuals.size(); ++i) {
        if (!(residuals[i] < residuals[i - 1])) decreasing = false;
      }
      checks.push_back({"volterra/tv-monotone", decreasing,
                        "residuals " + format17(residuals.front()) + " .. " +
                            format17(residuals.back())});
    }
  }
  return j;
}

Json run_jordan_suite(const LoadedFunction& fn, const ZeroAnalysis& za,
                      const std::vector<int>& dims, double tol, bool emit_matrices,
                      std::vector<CheckLine>& checks) {
  Json arr = Json::array();
  std::vector<ZeroDatum> sites = za.zeros;
  if (sites.empty()) sites.emplace_back(cplx(0.0), 1);  // no-zero case: obstruction demo
  for (const auto& z : sites) {
    for (const int dim : dims) {
      const auto rep = jordan_pair(fn.model, z, dim, tol);
      Json entry;
      entry["lambda"] = complex_to_json(z.lambda);
      entry["dimension"] = rep.n;
      entry["residual"] = rep.residual;
      entry["trace_obstruction"] = rep.trace_obstruction;
      entry["solved"] = rep.solved;
      if (emit_matrices) {
        Json xm = Json::array(), ym = Json::array();
        for (int row = 0; row < rep.n; ++row) {
          Json xr = Json::array(), yr = Json::array();
          for (int col = 0; col < rep.n; ++col) {
            xr.push_back(complex_to_json(rep.X(row, col)));
            yr.push_back(complex_to_json(rep.Y(row, col)));
          }
          xm.push_back(std::move(xr));
          ym.push_back(std::move(yr));
        }
        entry["X"] = std::move(xm);
        entry["Y"] = std::move(ym);
      }
      arr.push_back(entry);
      const bool ok = rep.solved || rep.trace_obstruction;
      checks.push_back({"jordan/dim=" + std::to_string(dim) + " lambda=(" +
                            format17(z.lambda.real()) + "," + format17(z.lambda.imag()) +
                            ")",
                        ok,
                        rep.trace_obstruction
                            ? "trace obstruction: no finite-dimensional realization"
                            : "residual " + format17(rep.residual)});
    }
  }
  return arr;
}

}  // namespace

FunctionModel parse_h_expression(const std::string& text) {
  return FunctionModel::polynomial(HParser(text).parse());
}

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"universal-algebra toolkit for the relation [x,y] = h(y)"};
  app.require_subcommand(1);
  // --h names the function, so help lives on --help alone
  app.set_help_flag("--help", "print help and exit");

  // shared flags (each subcommand picks what it needs)
  std::string h_expr, spec_path, out_flag;
  int N = 64, xdeg = 4;
  uint64_t seed = 12345;

  // analyze
  auto* analyze = app.add_subcommand("analyze", "zero set, orders, local exponents");
  analyze->set_help_flag("--help", "print help and exit");
  double an_tol = 1e-9;
  analyze->add_option("--h", h_expr, "compact h expression");
  analyze->add_option("--spec", spec_path, "JSON function spec file");
  analyze->add_option("--tol", an_tol, "zero-detection tolerance");
  analyze->add_option("--out", out_flag, "output directory");

  // stability
  auto* stability = app.add_subcommand("stability", "derivation stability certificates");
  stability->set_help_flag("--help", "print help and exit");
  std::vector<double> st_r{0.5, 1.0, 2.0, 4.0};
  std::vector<double> st_s;
  int st_trials = 200, st_samples = 256;
  double st_R = 1.0;
  stability->add_option("--h", h_expr, "compact h expression");
  stability->add_option("--spec", spec_path, "JSON function spec file");
  stability->add_option("--r", st_r, "seminorm radii");
  stability->add_option("--s", st_s, "seminorm exponents (default per zero order)");
  stability->add_option("--N", N, "series order");
  stability->add_option("--trials", st_trials, "random trials per certificate");
  stability->add_option("--R", st_R, "Cauchy radius");
  stability->add_option("--samples", st_samples, "circle samples for Cauchy bounds");
  stability->add_option("--seed", seed, "RNG seed");
  stability->add_option("--out", out_flag, "output directory");

  // ore-check
  auto* orecheck = app.add_subcommand("ore-check", "verify [x,y] = h(y) in the truncated Ore algebra");
  orecheck->set_help_flag("--help", "print help and exit");
  double oc_tol = 1e-12;
  int oc_ftrials = 20;
  orecheck->add_option("--h", h_expr, "compact h expression");
  orecheck->add_option("--spec", spec_path, "JSON function spec file");
  orecheck->add_option("--N", N, "series order");
  orecheck->add_option("--xdeg", xdeg, "x-degree to compare through");
  orecheck->add_option("--tol", oc_tol, "max allowed coefficient deviation");
  orecheck->add_option("--ftrials", oc_ftrials, "random intertwining trials");
  orecheck->add_option("--seed", seed, "RNG seed");
  orecheck->add_option("--out", out_flag, "output directory");

  // volterra
  auto* volterra = app.add_subcommand("volterra", "norm study of the integration operator");
  volterra->set_help_flag("--help", "print help and exit");
  int vo_grid = 2000, vo_nmax = 40;
  bool vo_tv = false;
  volterra->add_option("--grid", vo_grid, "quadrature grid size");
  volterra->add_option("--nmax", vo_nmax, "largest power");
  volterra->add_flag("--tv", vo_tv, "also sweep the [T,V]=V^2 residual");
  volterra->add_option("--out", out_flag, "output directory");

  // jordan
  auto* jordan = app.add_subcommand("jordan", "Jordan-block matrix realization");
  jordan->set_help_flag("--help", "print help and exit");
  std::string jo_lambda = "0";
  std::vector<int> jo_dims{4};
  double jo_tol = 1e-10;
  bool jo_matrices = false;
  jordan->add_option("--h", h_expr, "compact h expression");
  jordan->add_option("--spec", spec_path, "JSON function spec file");
  jordan->add_option("--lambda", jo_lambda, "spectrum point, 're' or 're,im'");
  jordan->add_option("--dim", jo_dims, "matrix dimensions");
  jordan->add_option("--tol", jo_tol, "residual tolerance");
  jordan->add_flag("--matrices", jo_matrices, "emit X and Y in the report");
  jordan->add_option("--out", out_flag, "output directory");

  // report
  auto* report = app.add_subcommand("report", "run selected suites and aggregate");
  report->set_help_flag("--help", "print help and exit");
  std::vector<std::string> rp_suites{"ore-check", "stability", "volterra", "jordan"};
  int rp_grid = 2000, rp_nmax = 40, rp_trials = 200, rp_ftrials = 20;
  double rp_tol = 1e-12;
  report->add_option("--h", h_expr, "compact h expression");
  report->add_option("--spec", spec_path, "JSON function spec file");
  report->add_option("--suites", rp_suites, "subset of ore-check,stability,volterra,jordan");
  report->add_option("--N", N, "series order");
  report->add_option("--xdeg", xdeg, "x-degree to compare through");
  report->add_option("--grid", rp_grid, "volterra grid");
  report->add_option("--nmax", rp_nmax, "volterra n_max");
  report->add_option("--trials", rp_trials, "stability trials");
  report->add_option("--ftrials", rp_ftrials, "intertwining trials");
  report->add_option("--tol", rp_tol, "relation tolerance");
  report->add_option("--seed", seed, "RNG seed");
  report->add_option("--out", out_flag, "output directory");

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  argv.reserve(storage.size());
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const fs::path out_dir = resolve_out_dir(out_flag);

  try {
    if (*analyze) {
      const auto fn = load_function(h_expr, spec_path);
      const auto za = analyze_zeros(fn, an_tol);
      Json j = report_header("analyze", Json{{"tol", an_tol}});
      j["function"] = fn.echo;
      j["zeros"] = zeros_to_json(za);
      j["trivial"] = za.trivial;
      if (za.trivial) j["diagnostic"] = kTrivialDiagnostic;
      j["warnings"] = za.warnings;
      write_file(out_dir, "analyze.json", j.dump(2) + "\n");
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*stability) {
      const auto fn = load_function(h_expr, spec_path);
      const auto za = analyze_zeros(fn, 1e-9);
      std::vector<CheckLine> checks;
      Json j = report_header("stability",
                             Json{{"r", st_r},
                                  {"s", st_s},
                                  {"N", N},
                                  {"trials", st_trials},
                                  {"R", st_R},
                                  {"samples", st_samples},
                                  {"seed", seed}});
      j["function"] = fn.echo;
      j["zeros"] = zeros_to_json(za);
      j.update(run_stability_suite(fn, za, st_r, st_s, N, st_trials, st_R, st_samples,
                                   seed, checks));
      j["checks"] = checks_to_json(checks);
      j["pass"] = all_pass(checks);
      write_file(out_dir, "stability.json", j.dump(2) + "\n");
      print_checks(checks);
      return all_pass(checks) ? 0 : 1;
    }

    if (*orecheck) {
      const auto fn = load_function(h_expr, spec_path);
      const auto za = analyze_zeros(fn, 1e-9);
      std::vector<CheckLine> checks;
      Json j = report_header("ore-check", Json{{"N", N},
                                               {"xdeg", xdeg},
                                               {"tol", oc_tol},
                                               {"ftrials", oc_ftrials},
                                               {"seed", seed}});
      j["function"] = fn.echo;
      j["zeros"] = zeros_to_json(za);
      j.update(run_ore_suite(fn, za, N, xdeg, oc_tol, oc_ftrials, seed, checks));
      j["checks"] = checks_to_json(checks);
      j["pass"] = all_pass(checks);
      write_file(out_dir, "orecheck.json", j.dump(2) + "\n");
      print_checks(checks);
      return all_pass(checks) ? 0 : 1;
    }

    if (*volterra) {
      std::vector<CheckLine> checks;
      std::string csv;
      Json j = report_header("volterra", Json{{"grid", vo_grid}, {"nmax", vo_nmax}});
      j.update(run_volterra_suite(vo_grid, vo_nmax, vo_tv, {200, 400, 800},
                                  /*enforce=*/false, checks, &csv));
      write_file(out_dir, "volterra.csv", csv);
      write_file(out_dir, "volterra.json", j.dump(2) + "\n");
      std::cout << "wrote " << (out_dir / "volterra.csv").string() << " (" << vo_nmax
                << " rows)\n";
      return 0;
    }

    if (*jordan) {
      const auto fn = load_function(h_expr, spec_path);
      cplx lambda;
      {
        std::stringstream ss(jo_lambda);
        std::string re, im;
        std::getline(ss, re, ',');
        std::getline(ss, im, ',');
        lambda = cplx(std::stod(re), im.empty() ? 0.0 : std::stod(im));
      }
      ZeroAnalysis za;
      try {
        za.zeros.push_back(validated_zero(fn.model, lambda, 1e-9, 16));
      } catch (const NotAZeroError&) {
        za.zeros.emplace_back(lambda, 1);  // not a zero: obstruction expected
      }
      std::vector<CheckLine> checks;
      Json j = report_header("jordan", Json{{"lambda", jo_lambda},
                                            {"dims", jo_dims},
                                            {"tol", jo_tol}});
      j["function"] = fn.echo;
      j["representations"] =
          run_jordan_suite(fn, za, jo_dims, jo_tol, jo_matrices, checks);
      j["checks"] = checks_to_json(checks);
      j["pass"] = all_pass(checks);
      write_file(out_dir, "jordan.json", j.dump(2) + "\n");
      print_checks(checks);
      return all_pass(checks) ? 0 : 1;
    }

    if (*report) {
      const auto fn = load_function(h_expr, spec_path);
      const auto za = analyze_zeros(fn, 1e-9);
      const std::set<std::string> suites(rp_suites.begin(), rp_suites.end());
      std::vector<CheckLine> checks;
      Json j = report_header("report", Json{{"suites", rp_suites},
                                            {"N", N},
                                            {"xdeg", xdeg},
                                            {"grid", rp_grid},
                                            {"nmax", rp_nmax},
                                            {"trials", rp_trials},
                                            {"ftrials", rp_ftrials},
                                            {"tol", rp_tol},
                                            {"seed", seed}});
      j["function"] = fn.echo;
      j["zeros"] = zeros_to_json(za);
      j["trivial"] = za.trivial;
      if (za.trivial) j["diagnostic"] = kTrivialDiagnostic;
      j["warnings"] = za.warnings;

      if (suites.count("ore-check")) {
        j["ore_check"] = run_ore_suite(fn, za, N, xdeg, rp_tol, rp_ftrials, seed, checks);
      }
      if (suites.count("stability")) {
        j["stability"] = run_stability_suite(fn, za, {0.5, 1.0, 2.0, 4.0}, {}, N,
                                             rp_trials, 1.0, 256, seed, checks);
      }
      if (suites.count("volterra")) {
        std::string csv;
        j["volterra"] = run_volterra_suite(rp_grid, rp_nmax, /*with_tv=*/true,
                                           {200, 400, 800}, /*enforce=*/true, checks, &csv);
        write_file(out_dir, "volterra.csv", csv);
      }
      if (suites.count("jordan")) {
        j["jordan"] = run_jordan_suite(fn, za, {4, 6}, 1e-10, false, checks);
      }
      j["checks"] = checks_to_json(checks);
      j["pass"] = all_pass(checks);
      write_file(out_dir, "report.json", j.dump(2) + "\n");
      print_checks(checks);
      return all_pass(checks) ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace anore
