#include "tcurv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

#include "tcurv/analysis.hpp"
#include "tcurv/battery.hpp"
#include "tcurv/curvature.hpp"
#include "tcurv/format.hpp"
#include "tcurv/integrate.hpp"

namespace tcurv::cli {

namespace {

struct Flags {
  int n = 0;
  double t = 0.0;
  int deriv = 0;
  double t0 = 0.0;
  double t1 = 0.0;
  int steps = 0;
  std::string out_path;
  double a = 0.0;
  double b = 0.0;
  bool improper = false;
  bool quick = false;
  std::string format = "kv";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_interval(double lo, double hi, const char* lo_name,
                      const char* hi_name) {
  if (!(lo < hi)) {
    throw UsageError(std::string("--") + lo_name + " must be less than --" +
                     hi_name);
  }
}

std::string integral_kv(const IntegralResult& r) {
  std::string s;
  s += "value=" + format_real(r.value) + '\n';
  s += "error_estimate=" + format_real(r.error_estimate) + '\n';
  s += "evals=" + std::to_string(r.evals) + '\n';
  s += std::string("converged=") + (r.converged ? "true" : "false") + '\n';
  return s;
}

int cmd_roots(const Flags& f, std::ostream& out) {
  out << format_root_table(characteristic_roots(f.n));
  return kOk;
}

int cmd_eval(const Flags& f, std::ostream& out) {
  if (f.deriv < 0) throw UsageError("--deriv must be >= 0");
  const PointN x = curve_derivative(CurveSpec(f.n), f.t, f.deriv);
  out << format_csv_row(x.coords()) << '\n';
  return kOk;
}

int cmd_curvature(const Flags& f, std::ostream& out) {
  out << to_csv_row(curvature_sample(CurveSpec(f.n), f.t)) << '\n';
  return kOk;
}

int cmd_sample(const Flags& f, std::ostream& out) {
  require_interval(f.t0, f.t1, "t0", "t1");
  if (f.steps < 2) throw UsageError("--steps must be >= 2");
  const auto rows = sample_curvature(CurveSpec(f.n), f.t0, f.t1, f.steps);
  std::ofstream file;
  std::ostream* sink = &out;
  if (!f.out_path.empty()) {
    file.open(f.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot open output file " + f.out_path);
    sink = &file;
  }
  *sink << curvature_csv_header() << '\n';
  for (const auto& r : rows) *sink << to_csv_row(r) << '\n';
  sink->flush();
  if (!*sink) throw UsageError("failed writing output");
  return kOk;
}

int cmd_length(const Flags& f, std::ostream& out) {
  require_interval(f.t0, f.t1, "t0", "t1");
  const IntegralResult r = arc_length(CurveSpec(f.n), f.t0, f.t1);
  out << "n=" << f.n << '\n'
      << "t0=" << format_real(f.t0) << '\n'
      << "t1=" << format_real(f.t1) << '\n'
      << integral_kv(r);
  return r.converged ? kOk : kNotConverged;
}

int cmd_total_curvature(const Flags& f, bool has_a, bool has_b,
                        std::ostream& out) {
  const CurveSpec spec(f.n);
  if (f.improper) {
    if (has_a || has_b) throw UsageError("--improper excludes --a/--b");
    const ConvergenceVerdict v = classify(spec);
    out << to_key_values(v);
    return v.converged() ? kOk : kNotConverged;
  }
  if (!has_a || !has_b) {
    throw UsageError("total-curvature needs --a and --b, or --improper");
  }
  require_interval(f.a, f.b, "a", "b");
  const IntegralResult r = truncated_total_curvature(spec, f.a, f.b);
  out << "n=" << f.n << '\n'
      << "a=" << format_real(f.a) << '\n'
      << "b=" << format_real(f.b) << '\n'
      << integral_kv(r);
  return r.converged ? kOk : kNotConverged;
}

int cmd_classify(const Flags& f, std::ostream& out) {
  const ConvergenceVerdict v = classify(CurveSpec(f.n));
  out << (f.format == "text" ? to_text(v) : to_key_values(v));
  return v.converged() ? kOk : kNotConverged;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  if (f.n > kDefaultMaxDimension) {
    throw UsageError("--n must be <= " + std::to_string(kDefaultMaxDimension));
  }
  const ValidationReport report = verification_battery(CurveSpec(f.n), f.quick);
  out << report.to_text();
  out << "verify n=" << f.n << ": " << report.size() - report.failures() << '/'
      << report.size() << " checks passed\n";
  return report.all_passed() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Curvature of the curves whose coordinates solve y^(n) = y"};
  app.name("tcurv");
  app.require_subcommand(1);

  Flags f;
  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", f.n, "dimension (>= 2)")
        ->required()
        ->check(CLI::Range(2, 1 << 20));
  };

  auto* roots = app.add_subcommand("roots", "non-real n-th roots of unity");
  add_n(roots);

  auto* eval = app.add_subcommand("eval", "curve point or derivative as CSV");
  add_n(eval);
  eval->add_option("--t", f.t, "curve parameter")->required();
  eval->add_option("--deriv", f.deriv, "derivative order")
      ->check(CLI::NonNegativeNumber);

  auto* curvature = app.add_subcommand("curvature", "one t,speed,k1,K1 row");
  add_n(curvature);
  curvature->add_option("--t", f.t, "curve parameter")->required();

  auto* sample = app.add_subcommand("sample", "CSV samples on [t0, t1]");
  add_n(sample);
  sample->add_option("--t0", f.t0)->required();
  sample->add_option("--t1", f.t1)->required();
  sample->add_option("--steps", f.steps, "number of intervals (>= 2)")
      ->required();
  sample->add_option("--out", f.out_path, "write CSV here instead of stdout");

  auto* length = app.add_subcommand("length", "arc length on [t0, t1]");
  add_n(length);
  length->add_option("--t0", f.t0)->required();
  length->add_option("--t1", f.t1)->required();

  auto* total = app.add_subcommand("total-curvature",
                                   "total first curvature, truncated or improper");
  add_n(total);
  auto* opt_a = total->add_option("--a", f.a, "lower limit");
  auto* opt_b = total->add_option("--b", f.b, "upper limit");
  total->add_flag("--improper", f.improper, "certified improper integral");

  auto* cls = app.add_subcommand("classify", "finite/infinite verdict");
  add_n(cls);
  cls->add_option("--format", f.format, "kv or text")
      ->check(CLI::IsMember({"kv", "text"}));

  auto* verify = app.add_subcommand("verify", "run the invariant battery");
  add_n(verify);
  verify->add_flag("--quick", f.quick, "thinner grids");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "tcurv: " << e.what() << '\n';
    return kInvalidArguments;
  }

  try {
    if (*roots) return cmd_roots(f, out);
    if (*eval) return cmd_eval(f, out);
    if (*curvature) return cmd_curvature(f, out);
    if (*sample) return cmd_sample(f, out);
    if (*length) return cmd_length(f, out);
    if (*total) return cmd_total_curvature(f, opt_a->count() > 0,
                                           opt_b->count() > 0, out);
    if (*cls) return cmd_classify(f, out);
    if (*verify) return cmd_verify(f, out);
  } catch (const UsageError& e) {
    err << "tcurv: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const std::invalid_argument& e) {
    err << "tcurv: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const CoordinateOverflow& e) {
    err << "tcurv: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const InternalConsistencyError& e) {
    err << "tcurv: certification failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
  err << "tcurv: no subcommand\n";
  return kInvalidArguments;
}

}  // namespace tcurv::cli
