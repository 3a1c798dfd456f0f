#include "cli.hpp"

#include "mvzeta/barnes.hpp"
#include "mvzeta/errors.hpp"
#include "mvzeta/meanvalue.hpp"
#include "mvzeta/output.hpp"
#include "mvzeta/verify.hpp"
#include "mvzeta/zetacore.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <ostream>
#include <thread>

namespace mvzeta::cli {

namespace {

namespace fs = std::filesystem;
using io::format_double;

struct Common {
  std::string kind = "hurwitz";
  double sigma = 0.0;
  double a = 1.0;
  std::string lambda;
  int r = 1;
  std::vector<double> w;
  double rel_tol = 1e-12;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--kind", c.kind, "hurwitz | lerch | multi | barnes")
      ->check(CLI::IsMember({"hurwitz", "lerch", "multi", "barnes"}));
  cmd->add_option("--sigma", c.sigma, "real part of s")->required();
  cmd->add_option("--a", c.a, "shift a > 0");
  cmd->add_option("--lambda", c.lambda, "twist, P/Q or a real in (0, 1]");
  cmd->add_option("--r", c.r, "order of the Hurwitz multiple zeta function");
  cmd->add_option("--w", c.w, "Barnes weights, comma separated")->delimiter(',');
  cmd->add_option("--rel-tol", c.rel_tol, "target relative error");
}

struct Twist {
  double value = 1.0;
  std::optional<std::pair<long, long>> rational;
};

Twist parse_lambda(const std::string& text) {
  if (text.empty()) return {};
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      const long p = std::stol(text.substr(0, slash));
      const long q = std::stol(text.substr(slash + 1));
      const auto tw = zeta::RationalTwist::make(p, q);
      return {tw.value(), std::make_pair(tw.p, tw.q)};
    }
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return {v, std::nullopt};
  } catch (const std::logic_error&) {
    throw DomainError("cannot parse --lambda '" + text + "'");
  }
}

zeta::Precision precision(const Common& c) {
  zeta::Precision p;
  p.rel_tol = c.rel_tol;
  p.validate();
  return p;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string out = "mvzeta";
  for (const auto& a : args) out += " " + a;
  return out;
}

std::string join_doubles(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += format_double(xs[i]);
  }
  return out;
}

fs::path sibling(const fs::path& out, const std::string& suffix) {
  fs::path p = out;
  p.replace_extension();
  p += suffix;
  return p;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- eval -------------------------------------------------------------

struct EvalArgs {
  Common c;
  double t = 0.0;
  std::optional<double> x;
  double C = kTwoPi;
  int tail_cut = 16;
};

int cmd_eval(const EvalArgs& e, std::ostream& out) {
  const Common& c = e.c;
  const zeta::LinePoint s{c.sigma, e.t};
  const zeta::Precision prec = precision(c);
  zeta::Evaluation result;
  if (c.kind == "hurwitz") {
    result = zeta::hurwitz_zeta_eval(s, {c.a}, prec);
  } else if (c.kind == "lerch") {
    const Twist tw = parse_lambda(c.lambda);
    const auto params = tw.rational
                            ? zeta::LerchParams::with_rational(c.a, tw.rational->first, tw.rational->second)
                            : zeta::LerchParams::from_real(c.a, tw.value);
    result = zeta::lerch_zeta_eval(s, params, prec);
  } else if (c.kind == "multi") {
    result = barnes::multi_hurwitz_eval(s, c.a, c.r, prec);
  } else {
    if (c.w.empty()) throw DomainError("--kind barnes needs --w");
    const auto w = barnes::Weights::make(c.w);
    if (e.x) {
      const auto v = barnes::barnes_truncated(s, c.a, w, barnes::TruncationPolicy::fixed(*e.x, e.C));
      result = {v.value, v.remainder_scale};
    } else if (s.sigma > w.r() + 0.1) {
      result = barnes::barnes_direct(s, c.a, w, e.tail_cut, prec);
    } else {
      throw UnsupportedRegionError(
          "barnes: sigma <= r + 0.1 is outside the direct series; the strip r-1 < sigma needs "
          "a truncation length --x with |t| <= 2 pi x / C");
    }
  }
  out << "re=" << format_double(result.value.real()) << " im=" << format_double(result.value.imag())
      << " err=" << format_double(result.error_estimate) << '\n';
  return kOk;
}

// ---- meansquare -------------------------------------------------------

struct MeanSquareArgs {
  Common c;
  std::optional<double> T;
  std::vector<double> t_grid;
  std::string out;
  std::string predict = "none";
  std::optional<double> h;
  std::string profile_cache;
};

int cmd_meansquare(const MeanSquareArgs& m, int threads, const std::vector<std::string>& args,
                   std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  if (m.out.empty()) throw IoError("meansquare needs --out PATH");
  const Common& c = m.c;

  mv::MeanSquareRequest req;
  req.kind = mv::kind_from_string(c.kind);
  req.sigma = c.sigma;
  req.a = c.a;
  req.r = c.r;
  req.prec = precision(c);
  req.threads = threads;
  if (m.h) req.step_rule = mv::StepRule::fixed(*m.h);
  if (req.kind == mv::Kind::lerch) req.lambda = parse_lambda(c.lambda).value;
  if (req.kind == mv::Kind::barnes) {
    if (c.w.empty()) throw DomainError("--kind barnes needs --w");
    req.w = barnes::Weights::make(c.w);
  }
  std::vector<double> grid = m.t_grid;
  if (grid.empty()) {
    if (!m.T) throw DomainError("meansquare needs --T or --T-grid");
    grid.push_back(*m.T);
  }
  std::sort(grid.begin(), grid.end());
  req.T = grid.back();
  req.validate();
  if (req.kind == mv::Kind::barnes && !req.w->uniform() && !m.profile_cache.empty()) {
    const double x = barnes::TruncationPolicy::proportional().x_for(req.T);
    req.profile = std::make_shared<const barnes::LatticeProfile>(
        barnes::cached_profile(req.a, *req.w, x, m.profile_cache));
  }

  const auto results = mv::mean_square_series(req, grid);
  const fs::path csv = m.out;
  io::write_meansquare_csv(csv, req, results);
  io::RunManifest manifest;
  manifest.outputs.push_back(csv.string());
  for (const auto& r : results) {
    out << "T=" << format_double(r.T) << " value=" << format_double(r.value)
        << " richardson_err=" << format_double(r.richardson_err)
        << (r.accuracy_warning ? " (accuracy warning)" : "") << '\n';
  }

  if (m.predict != "none") {
    mv::Prediction pred;
    if (m.predict == "thm11") {
      if (req.kind == mv::Kind::lerch || req.kind == mv::Kind::barnes) {
        throw DomainError("--predict thm11 applies to --kind hurwitz or multi");
      }
      pred = mv::predict_theorem11(req.kind == mv::Kind::multi_hurwitz ? req.r : 1, req.sigma, req.a,
                                   req.prec);
    } else {
      if (req.kind != mv::Kind::hurwitz && req.kind != mv::Kind::lerch) {
        throw DomainError("--predict lerch applies to --kind hurwitz or lerch");
      }
      pred = mv::predict_lerch(req.sigma, req.a, req.lambda.value_or(1.0), req.prec);
    }
    std::vector<std::pair<double, mv::MeanSquareResult>> measured;
    for (const auto& r : results) measured.emplace_back(r.T, r);
    const auto rep = mv::residual_report(measured, pred);
    const fs::path report = sibling(csv, ".report.json");
    io::write_residual_report(report, rep, pred);
    manifest.outputs.push_back(report.string());
    out << "prediction " << rep.branch << ": fitted exponent " << format_double(rep.fitted_exponent)
        << " (allowed " << format_double(rep.allowed_exponent) << "), pass=" << (rep.pass ? "true" : "false")
        << '\n';
  }

  manifest.command_line = join_args(args);
  manifest.parameters = {{"kind", c.kind},
                         {"sigma", format_double(c.sigma)},
                         {"a", format_double(c.a)},
                         {"lambda", c.lambda},
                         {"r", std::to_string(c.r)},
                         {"w", join_doubles(c.w)},
                         {"T_grid", join_doubles(grid)},
                         {"step", format_double(results.front().step)},
                         {"predict", m.predict},
                         {"rel_tol", format_double(c.rel_tol)}};
  manifest.wall_seconds = seconds_since(start);
  io::write_manifest(sibling(csv, ".manifest.json"), manifest);
  return kOk;
}

// ---- verify -----------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_verify(const VerifyArgs& v, int threads, const std::vector<std::string>& args,
               std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  if (v.out.empty()) throw IoError("verify needs --out DIR");
  const fs::path dir = v.out;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  verify::SuiteOptions opt;
  opt.seed = v.seed;
  opt.threads = threads;
  auto records = verify::run_suite(v.suite, opt);
  io::RunManifest manifest;
  bool all_pass = true;
  for (auto& rec : records) {
    for (const auto& p : verify::write_record(rec, dir)) manifest.outputs.push_back(p.filename().string());
    all_pass = all_pass && rec.pass;
    out << (rec.pass ? "PASS " : "FAIL ") << rec.suite << " observed=" << format_double(rec.observed_constant)
        << " threshold=" << format_double(rec.threshold) << " [" << rec.artifacts << "]\n";
  }
  manifest.command_line = join_args(args);
  manifest.parameters = {{"suite", v.suite}, {"seed", std::to_string(v.seed)}};
  manifest.wall_seconds = seconds_since(start);
  io::write_manifest(dir / "manifest.json", manifest);
  return all_pass ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hurwitz, Lerch and Barnes zeta functions on vertical lines", "mvzeta"};
  app.require_subcommand(1);
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_option("--threads", threads, "maximum worker threads")->check(CLI::PositiveNumber);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate one zeta value");
  add_common(eval, eval_args.c);
  eval->add_option("--t", eval_args.t, "imaginary part of s")->required();
  eval->add_option("--x", eval_args.x, "truncation length for the Barnes strip formula");
  eval->add_option("--C", eval_args.C, "truncation safety factor");
  eval->add_option("--tail-cut", eval_args.tail_cut, "minimum explicit terms per lattice direction");

  MeanSquareArgs ms_args;
  auto* ms = app.add_subcommand("meansquare", "mean-square integral over [1, T]");
  ms->set_help_flag("--help", "print this help message and exit");
  add_common(ms, ms_args.c);
  ms->add_option("--T", ms_args.T, "upper limit");
  ms->add_option("--T-grid", ms_args.t_grid, "upper limits, comma separated")->delimiter(',');
  ms->add_option("--out", ms_args.out, "CSV output path");
  ms->add_option("--predict", ms_args.predict, "thm11 | lerch | none")
      ->check(CLI::IsMember({"thm11", "lerch", "none"}));
  ms->add_option("--h", ms_args.h, "fixed quadrature step");
  ms->add_option("--profile-cache", ms_args.profile_cache, "lattice profile cache file");

  VerifyArgs v_args;
  auto* ver = app.add_subcommand("verify", "run property suites");
  ver->add_option("--suite", v_args.suite, "envelopes | mv | comparability | oscillatory | coefficients | funceq | all")
      ->check(CLI::IsMember({"envelopes", "mv", "comparability", "oscillatory", "coefficients", "funceq", "all"}));
  ver->add_option("--seed", v_args.seed, "base seed for random coefficients");
  ver->add_option("--out", v_args.out, "output directory");

  for (auto* cmd : {eval, ms, ver}) cmd->add_option("--threads", threads, "maximum worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kDomain;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_args, out);
    if (ms->parsed()) return cmd_meansquare(ms_args, threads, args, out);
    return cmd_verify(v_args, threads, args, out);
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const AccuracyError& e) {
    err << "accuracy error: " << e.what() << " (achieved " << format_double(e.achieved()) << ")\n";
    return kAccuracy;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kResource;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIo;
  }
}

}  // namespace mvzeta::cli
