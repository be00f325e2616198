// Command-line front end over the sharpyoung C API: sharp constants,
// inequality verification runs, transport-map dumps, extremizer scans and
// constant-surface sweeps. Exit codes: 0 all checks pass, 1 any check
// fails, 2 usage/parse error.
#include <sharpyoung/sharpyoung.h>

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void die(const std::string& msg) { throw UsageError(msg); }

void check_ok(sy_status s, const char* what) {
  if (s != SY_OK) die(std::string(what) + ": " + sy_last_error());
}

// Shortest round-trip decimal formatting; keeps seeded outputs byte-stable.
std::string fmt(double v) {
  std::array<char, 32> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

// Exponents accepted as decimals or exact fractions like "4/3".
double parse_exponent(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return std::stod(text);
    const double num = std::stod(text.substr(0, slash));
    const double den = std::stod(text.substr(slash + 1));
    if (den == 0.0) die("exponent '" + text + "': division by zero");
    return num / den;
  } catch (const std::invalid_argument&) {
    die("cannot parse exponent '" + text + "'");
  } catch (const std::out_of_range&) {
    die("exponent '" + text + "' out of range");
  }
}

using TripleHandle = std::unique_ptr<sy_triple, decltype(&sy_triple_free)>;
using FnHandle = std::unique_ptr<sy_fn, decltype(&sy_fn_free)>;
using ReportHandle = std::unique_ptr<sy_report, decltype(&sy_report_free)>;

TripleHandle make_triple(const std::string& p_text, const std::string& q_text,
                         const std::string& r_text) {
  const double p = parse_exponent(p_text);
  const double q = parse_exponent(q_text);
  sy_triple* t = nullptr;
  check_ok(sy_triple_make(p, q, &t), "triple");
  TripleHandle handle(t, sy_triple_free);
  if (!r_text.empty()) {
    const double r_given = parse_exponent(r_text);
    double r = 0.0;
    check_ok(sy_triple_values(t, nullptr, nullptr, &r), "triple");
    if (std::abs(1.0 / p + 1.0 / q - 1.0 - 1.0 / r_given) > 1e-12)
      die("(p, q, r) violates 1/p + 1/q = 1 + 1/r; implied r = " + fmt(r));
  }
  return handle;
}

FnHandle load_fn(const std::string& path) {
  sy_fn* f = nullptr;
  check_ok(sy_fn_read(path.c_str(), &f), path.c_str());
  return FnHandle(f, sy_fn_free);
}

FnHandle random_fn(uint64_t seed, double window, int n) {
  sy_fn* f = nullptr;
  check_ok(sy_fn_random_density(seed, -window, window, n, 1.0, &f), "random density");
  return FnHandle(f, sy_fn_free);
}

FnHandle unit_gaussian(double rate, double window, int n) {
  sy_fn* raw = nullptr;
  check_ok(sy_fn_gaussian(1.0, rate, 0.0, -window, window, n, &raw), "gaussian");
  FnHandle h(raw, sy_fn_free);
  sy_fn* unit = nullptr;
  check_ok(sy_fn_normalized(raw, &unit), "gaussian");
  return FnHandle(unit, sy_fn_free);
}

std::string report_json(const sy_report* rep) {
  size_t needed = 0;
  std::vector<char> buf(512);
  sy_status s = sy_report_json(rep, buf.data(), buf.size(), &needed);
  if (s == SY_ERR_BUFFER) {
    buf.resize(needed);
    s = sy_report_json(rep, buf.data(), buf.size(), &needed);
  }
  check_ok(s, "report");
  return std::string(buf.data());
}

std::string report_csv(const std::string& check, const sy_report* rep) {
  double lhs, rhs, ratio;
  sy_check_status st;
  sy_regime regime;
  check_ok(sy_report_values(rep, &lhs, &rhs, &ratio), "report");
  check_ok(sy_report_status(rep, &st), "report");
  check_ok(sy_report_regime(rep, &regime), "report");
  const char* status = st == SY_CHECK_PASS ? "Pass" : (st == SY_CHECK_FAIL ? "Fail" : "Degenerate");
  const char* reg = regime == SY_REGIME_CLASSICAL ? "Classical"
                    : regime == SY_REGIME_REVERSE ? "Reverse"
                                                  : "Boundary";
  return check + "," + fmt(lhs) + "," + fmt(rhs) + "," + fmt(ratio) + "," + reg + "," + status;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) die("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct CommonOpts {
  std::string p, q, r;
  int n = 2048;
  double window = 8.0;
  uint64_t seed = 1;
  double tol = 5e-3;
  std::string format = "json";
  std::string out;
};

void add_triple_flags(CLI::App* cmd, CommonOpts& o, bool require_pq = true) {
  auto* p = cmd->add_option("--p", o.p, "exponent p (decimal or fraction like 4/3)");
  auto* q = cmd->add_option("--q", o.q, "exponent q");
  cmd->add_option("--r", o.r, "optional r, cross-checked against 1/p + 1/q = 1 + 1/r");
  if (require_pq) {
    p->required();
    q->required();
  }
}

int cmd_constants(const CommonOpts& o, int dim) {
  const TripleHandle t = make_triple(o.p, o.q, o.r);
  double p, q, r, c, s, cp, cq, cr, k, young, pc, qc, rc;
  check_ok(sy_triple_values(t.get(), &p, &q, &r), "triple");
  sy_regime regime;
  check_ok(sy_triple_regime(t.get(), &regime), "triple");
  const char* reg = regime == SY_REGIME_CLASSICAL ? "Classical"
                    : regime == SY_REGIME_REVERSE ? "Reverse"
                                                  : "Boundary";
  check_ok(sy_constant_ct(p, &cp), "C_p");
  check_ok(sy_constant_ct(q, &cq), "C_q");
  check_ok(sy_constant_ct(r, &cr), "C_r");
  check_ok(sy_constant_k(t.get(), &k), "K");
  check_ok(sy_constant_young(t.get(), dim, &young), "young constant");

  const bool rotatable = regime != SY_REGIME_BOUNDARY;
  if (rotatable) {
    check_ok(sy_triple_rotation(t.get(), &c, &s), "rotation");
    check_ok(sy_triple_conjugates(t.get(), &pc, &qc, &rc), "conjugates");
  }

  Output out(o.out);
  if (o.format == "json") {
    std::string j = "{\"p\":" + fmt(p) + ",\"q\":" + fmt(q) + ",\"r\":" + fmt(r) +
                    ",\"regime\":\"" + reg + "\"";
    if (rotatable)
      j += ",\"p_conj\":" + fmt(pc) + ",\"q_conj\":" + fmt(qc) + ",\"r_conj\":" + fmt(rc) +
           ",\"c\":" + fmt(c) + ",\"s\":" + fmt(s);
    j += ",\"C_p\":" + fmt(cp) + ",\"C_q\":" + fmt(cq) + ",\"C_r\":" + fmt(cr) +
         ",\"K\":" + fmt(k) + ",\"dimension\":" + std::to_string(dim) +
         ",\"young_constant\":" + fmt(young) + "}";
    out.stream() << j << "\n";
  } else {
    auto& os = out.stream();
    os << "p = " << fmt(p) << "\nq = " << fmt(q) << "\nr = " << fmt(r) << "\nregime = " << reg
       << "\n";
    if (rotatable) os << "c = " << fmt(c) << "\ns = " << fmt(s) << "\n";
    os << "C_p = " << fmt(cp) << "\nC_q = " << fmt(cq) << "\nC_r = " << fmt(cr)
       << "\nK = " << fmt(k) << "\nyoung_constant(N=" << dim << ") = " << fmt(young) << "\n";
  }
  return kExitPass;
}

struct VerifyOpts {
  CommonOpts common;
  std::string check = "all";
  std::string f_path, g_path, F_path, G_path;
  bool random = false;
  bool gaussian_pair = false;
  int pairs = 1;
  int n2d = 1024;
};

int cmd_verify(const VerifyOpts& vo) {
  const CommonOpts& o = vo.common;
  const TripleHandle t = make_triple(o.p, o.q, o.r);
  double p, q;
  check_ok(sy_triple_values(t.get(), &p, &q, nullptr), "triple");
  sy_regime regime;
  check_ok(sy_triple_regime(t.get(), &regime), "triple");
  if (regime == SY_REGIME_BOUNDARY) die("verify requires a Classical or Reverse triple");

  const bool do_bilinear = vo.check == "all" || vo.check == "bilinear";
  const bool do_comparison =
      (vo.check == "all" && regime == SY_REGIME_CLASSICAL) || vo.check == "comparison";
  const bool do_convolution = vo.check == "all" || vo.check == "convolution";
  if (!do_bilinear && !do_comparison && !do_convolution)
    die("unknown check '" + vo.check + "' (bilinear|comparison|convolution|all)");

  struct Case {
    FnHandle f, g;
  };
  std::vector<Case> cases;
  if (vo.random) {
    for (int i = 0; i < vo.pairs; ++i)
      cases.push_back(Case{random_fn(o.seed + 2 * i, o.window, o.n),
                           random_fn(o.seed + 2 * i + 1, o.window, o.n)});
  } else if (vo.gaussian_pair) {
    const double wf = 8.0 / std::sqrt(p), wg = 8.0 / std::sqrt(q);
    cases.push_back(Case{unit_gaussian(p, wf, o.n), unit_gaussian(q, wg, o.n)});
  } else {
    if (vo.f_path.empty() || vo.g_path.empty())
      die("verify needs --f/--g files, --random, or --gaussian-pair");
    cases.push_back(Case{load_fn(vo.f_path), load_fn(vo.g_path)});
  }

  Output out(o.out);
  if (o.format == "csv") out.stream() << "check,lhs,rhs,ratio,regime,status\n";
  const char* reg = regime == SY_REGIME_CLASSICAL ? "Classical" : "Reverse";
  bool all_pass = true;

  // a check that cannot run (mass mismatch, degenerate inputs) reports
  // Degenerate instead of aborting the whole stream
  auto emit = [&](const std::string& name, sy_status status, sy_report* raw) {
    if (status != SY_OK) {
      std::cerr << name << ": " << sy_last_error() << "\n";
      all_pass = false;
      if (o.format == "csv")
        out.stream() << name << ",0,0,0," << reg << ",Degenerate\n";
      else
        out.stream() << "{\"lhs\":0,\"rhs\":0,\"ratio\":0,\"regime\":\"" << reg
                     << "\",\"tolerance\":" << fmt(o.tol)
                     << ",\"status\":\"Degenerate\",\"grid\":{\"n\":" << vo.n2d
                     << ",\"window\":[0,0]}}\n";
      return;
    }
    ReportHandle rep(raw, sy_report_free);
    sy_check_status st;
    check_ok(sy_report_status(rep.get(), &st), "report");
    all_pass = all_pass && st == SY_CHECK_PASS;
    if (o.format == "csv")
      out.stream() << report_csv(name, rep.get()) << "\n";
    else
      out.stream() << report_json(rep.get()) << "\n";
  };

  for (const auto& c : cases) {
    if (do_bilinear) {
      sy_report* rep = nullptr;
      emit("bilinear", sy_verify_bilinear(c.f.get(), c.g.get(), t.get(), vo.n2d, o.tol, &rep),
           rep);
    }
    if (do_comparison) {
      // auto targets are gaussians mass-matched to the inputs
      auto matched_gaussian = [&](const FnHandle& fn, double rate) {
        double mass = 0.0;
        check_ok(sy_fn_integral(fn.get(), &mass), "mass");
        FnHandle unit = unit_gaussian(rate, o.window, o.n);
        sy_fn* out = nullptr;
        check_ok(sy_fn_scaled(unit.get(), mass, &out), "gaussian");
        return FnHandle(out, sy_fn_free);
      };
      FnHandle F = vo.F_path.empty() ? matched_gaussian(c.f, p) : load_fn(vo.F_path);
      FnHandle G = vo.G_path.empty() ? matched_gaussian(c.g, q) : load_fn(vo.G_path);
      sy_report* rep = nullptr;
      emit("comparison",
           sy_verify_comparison(c.f.get(), c.g.get(), F.get(), G.get(), t.get(), vo.n2d, o.tol,
                                &rep),
           rep);
    }
    if (do_convolution) {
      sy_report* rep = nullptr;
      emit("convolution", sy_verify_convolution(c.f.get(), c.g.get(), t.get(), o.tol, &rep),
           rep);
    }
  }
  return all_pass ? kExitPass : kExitFail;
}

struct TransportOpts {
  CommonOpts common;
  std::string f_path, target_path;
  bool random = false;
  double target_rate = 1.0;
};

int cmd_transport(const TransportOpts& to) {
  const CommonOpts& o = to.common;
  FnHandle f(nullptr, sy_fn_free), F(nullptr, sy_fn_free);
  if (to.random) {
    f = random_fn(o.seed, o.window, o.n);
    F = unit_gaussian(to.target_rate, o.window, o.n);
  } else {
    if (to.f_path.empty() || to.target_path.empty())
      die("transport needs --f and --target files, or --random");
    f = load_fn(to.f_path);
    F = load_fn(to.target_path);
  }
  sy_transport* raw = nullptr;
  check_ok(sy_transport_build(f.get(), F.get(), &raw), "transport");
  std::unique_ptr<sy_transport, decltype(&sy_transport_free)> map(raw, sy_transport_free);

  int n = 0;
  check_ok(sy_transport_size(map.get(), &n), "transport");
  Output out(o.out);
  out.stream() << "t,u,uprime,residual\n";
  for (int i = 0; i < n; ++i) {
    double tpt, u, up, res;
    check_ok(sy_transport_row(map.get(), i, &tpt, &u, &up, &res), "transport row");
    out.stream() << fmt(tpt) << "," << fmt(u) << "," << fmt(up) << "," << fmt(res) << "\n";
  }
  return kExitPass;
}

struct ExtremizeOpts {
  CommonOpts common;
  std::string direction = "quartic";
  int steps = 11;
  double eps_max = 0.5;
  int n2d = 512;
  std::string fit_path;
};

int cmd_extremize(const ExtremizeOpts& eo) {
  const CommonOpts& o = eo.common;
  Output out(o.out);
  if (!eo.fit_path.empty()) {
    const FnHandle f = load_fn(eo.fit_path);
    double a, rate, center, residual;
    check_ok(sy_fit_gaussian(f.get(), &a, &rate, &center, &residual), "fit");
    out.stream() << "{\"amplitude\":" << fmt(a) << ",\"rate\":" << fmt(rate)
                 << ",\"center\":" << fmt(center) << ",\"residual\":" << fmt(residual) << "}\n";
    return kExitPass;
  }

  const TripleHandle t = make_triple(o.p, o.q, o.r);
  sy_perturbation kind;
  if (eo.direction == "scaling")
    kind = SY_PERTURB_SCALING;
  else if (eo.direction == "dilation")
    kind = SY_PERTURB_DILATION;
  else if (eo.direction == "quartic")
    kind = SY_PERTURB_QUARTIC;
  else if (eo.direction == "cosine")
    kind = SY_PERTURB_COSINE;
  else if (eo.direction == "sextic")
    kind = SY_PERTURB_SEXTIC;
  else
    die("unknown direction '" + eo.direction + "'");

  std::vector<double> eps(eo.steps), ratios(eo.steps);
  check_ok(sy_stationarity_scan(t.get(), kind, eo.steps, eo.eps_max, o.n, eo.n2d, eps.data(),
                                ratios.data()),
           "scan");
  out.stream() << "epsilon,ratio\n";
  for (int i = 0; i < eo.steps; ++i)
    out.stream() << fmt(eps[i]) << "," << fmt(ratios[i]) << "\n";
  return kExitPass;
}

struct SweepOpts {
  CommonOpts common;
  std::string p_min, p_max, q_min, q_max;
  int steps_p = 5, steps_q = 5;
  int dim = 1;
};

int cmd_sweep(const SweepOpts& so) {
  const double p0 = parse_exponent(so.p_min), p1 = parse_exponent(so.p_max);
  const double q0 = parse_exponent(so.q_min), q1 = parse_exponent(so.q_max);
  if (so.steps_p < 1 || so.steps_q < 1) die("sweep needs at least one step per axis");
  Output out(so.common.out);
  out.stream() << "p,q,r,K,young_constant\n";
  for (int i = 0; i < so.steps_p; ++i) {
    const double p = so.steps_p == 1 ? p0 : p0 + (p1 - p0) * i / (so.steps_p - 1);
    for (int j = 0; j < so.steps_q; ++j) {
      const double q = so.steps_q == 1 ? q0 : q0 + (q1 - q0) * j / (so.steps_q - 1);
      sy_triple* raw = nullptr;
      if (sy_triple_make(p, q, &raw) != SY_OK) {
        out.stream() << fmt(p) << "," << fmt(q) << ",invalid,invalid,invalid\n";
        continue;
      }
      TripleHandle t(raw, sy_triple_free);
      double r, k, young;
      check_ok(sy_triple_values(t.get(), nullptr, nullptr, &r), "triple");
      check_ok(sy_constant_k(t.get(), &k), "K");
      check_ok(sy_constant_young(t.get(), so.dim, &young), "young");
      out.stream() << fmt(p) << "," << fmt(q) << "," << fmt(r) << "," << fmt(k) << ","
                   << fmt(young) << "\n";
    }
  }
  return kExitPass;
}

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--n", o.n, "1D grid resolution");
  cmd->add_option("--window", o.window, "half-width of the sampling window");
  cmd->add_option("--seed", o.seed, "RNG seed for --random inputs");
  cmd->add_option("--tol", o.tol, "verification tolerance");
  cmd->add_option("--format", o.format, "output format (json|csv|text)")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", o.out, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sharp convolution inequality toolkit"};
  app.require_subcommand(1);

  CommonOpts const_opts;
  int const_dim = 1;
  auto* constants = app.add_subcommand("constants", "sharp constants for a triple");
  add_triple_flags(constants, const_opts);
  add_common_flags(constants, const_opts);
  constants->add_option("--dim", const_dim, "dimension N for the constant power");

  VerifyOpts verify_opts;
  auto* verify = app.add_subcommand("verify", "verify the inequalities on concrete inputs");
  add_triple_flags(verify, verify_opts.common);
  add_common_flags(verify, verify_opts.common);
  verify->add_option("--check", verify_opts.check, "bilinear|comparison|convolution|all");
  verify->add_option("--f", verify_opts.f_path, "first input function (csv/json)");
  verify->add_option("--g", verify_opts.g_path, "second input function");
  verify->add_option("--F", verify_opts.F_path, "comparison target for f");
  verify->add_option("--G", verify_opts.G_path, "comparison target for g");
  verify->add_flag("--random", verify_opts.random, "use seeded random densities");
  verify->add_flag("--gaussian-pair", verify_opts.gaussian_pair,
                   "use the Gaussian equality pair (rates p and q)");
  verify->add_option("--pairs", verify_opts.pairs, "number of random pairs");
  verify->add_option("--n2d", verify_opts.n2d, "tensor grid resolution per axis");

  TransportOpts transport_opts;
  auto* transport = app.add_subcommand("transport", "dump a monotone transport map as CSV");
  add_common_flags(transport, transport_opts.common);
  transport->add_option("--f", transport_opts.f_path, "source density (csv/json)");
  transport->add_option("--target", transport_opts.target_path, "target density");
  transport->add_flag("--random", transport_opts.random, "random source onto a Gaussian target");
  transport->add_option("--target-rate", transport_opts.target_rate,
                        "Gaussian target rate for --random");

  ExtremizeOpts extremize_opts;
  auto* extremize = app.add_subcommand("extremize", "stationarity scans and Gaussian fits");
  add_triple_flags(extremize, extremize_opts.common, false);
  add_common_flags(extremize, extremize_opts.common);
  extremize->add_option("--direction", extremize_opts.direction,
                        "scaling|dilation|quartic|cosine|sextic");
  extremize->add_option("--steps", extremize_opts.steps, "scan points");
  extremize->add_option("--eps-max", extremize_opts.eps_max, "scan range half-width");
  extremize->add_option("--n2d", extremize_opts.n2d, "tensor grid resolution per axis");
  extremize->add_option("--fit", extremize_opts.fit_path, "fit a Gaussian to this function file");

  SweepOpts sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "tabulate constants over a (p, q) rectangle");
  add_common_flags(sweep, sweep_opts.common);
  sweep->add_option("--p-min", sweep_opts.p_min)->required();
  sweep->add_option("--p-max", sweep_opts.p_max)->required();
  sweep->add_option("--q-min", sweep_opts.q_min)->required();
  sweep->add_option("--q-max", sweep_opts.q_max)->required();
  sweep->add_option("--steps-p", sweep_opts.steps_p, "grid points along p");
  sweep->add_option("--steps-q", sweep_opts.steps_q, "grid points along q");
  sweep->add_option("--dim", sweep_opts.dim, "dimension N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (constants->parsed()) return cmd_constants(const_opts, const_dim);
    if (verify->parsed()) return cmd_verify(verify_opts);
    if (transport->parsed()) return cmd_transport(transport_opts);
    if (extremize->parsed()) return cmd_extremize(extremize_opts);
    if (sweep->parsed()) return cmd_sweep(sweep_opts);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
