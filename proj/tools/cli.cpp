#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "heatpade/disk_exact.hpp"
#include "heatpade/error.hpp"
#include "heatpade/heat_content.hpp"
#include "heatpade/mc_oracle.hpp"
#include "heatpade/pade.hpp"
#include "heatpade/parallel.hpp"
#include "heatpade/series.hpp"
#include "heatpade/shape_io.hpp"

namespace heatpade::cli {

namespace {

using nlohmann::json;

// Shortest text that reads back to the same double.
std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// Key/value record of how an output was produced, in insertion order.
class Manifest {
 public:
  explicit Manifest(std::string subcommand) { add("subcommand", std::move(subcommand)); }

  void add(const std::string& key, std::string value) { entries_.emplace_back(key, std::move(value)); }
  void add(const std::string& key, double value) { add(key, shortest(value)); }
  void add_list(const std::string& key, const std::vector<double>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + shortest(values[i]);
    add(key, s);
  }

  void write_comments(std::ostream& os) const {
    os << "# heatpade " << HEATPADE_VERSION << '\n';
    for (const auto& [k, v] : entries_) os << "# " << k << ": " << v << '\n';
  }

  json to_json() const {
    json j = json::object();
    j["version"] = HEATPADE_VERSION;
    for (const auto& [k, v] : entries_) j[k] = v;
    return j;
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  std::ostringstream s;
  s << std::setprecision(15) << v;
  return s.str();
}

struct ShapeArg {
  std::string spec;

  bool is_file() const { return !spec.empty() && spec.front() != '{'; }

  BoundaryCurve load() const {
    if (spec.empty()) throw Error(ErrorKind::InvalidArgument, "--shape is required");
    if (spec.front() == '{') {
      json j;
      try {
        j = json::parse(spec);
      } catch (const json::parse_error& e) {
        throw Error(ErrorKind::InvalidShape, std::string("inline shape is not valid JSON: ") + e.what());
      }
      return shape_from_json(j);
    }
    return load_shape(spec);
  }
};

SeriesMode parse_mode(const std::string& mode) {
  return mode == "savo" ? SeriesMode::SavoExact : SeriesMode::CurvatureApprox;
}

// Writes to --out when given, else to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : path_(path), fallback_(fallback) {}

  void emit(const std::string& text) const {
    if (path_.empty()) {
      fallback_ << text;
      return;
    }
    std::ofstream f(path_);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path_);
    f << text;
  }

 private:
  std::string path_;
  std::ostream& fallback_;
};

struct Options {
  ShapeArg shape;
  std::string out;
  std::string mode = "curvature";
  std::string method;
  int order = 0;
  int n = 4;
  int n_max = 7;
  std::vector<int> n_list{3, 4};
  std::vector<double> values;
  double b = 1.0;
  int multistarts = SolveOptions{}.multistarts;
  std::uint64_t seed = 42;
  std::int64_t walkers = 100000;
  double dt = 1e-5;
};

void add_io_manifest(Manifest& m, const Options& o, const BoundaryCurve& curve) {
  m.add("shape", shape_to_json(curve).dump());
  if (o.shape.is_file()) m.add("shape_file", o.shape.spec);
  if (!o.out.empty()) m.add("out", o.out);
}

SolveOptions solve_options(const Options& o) {
  SolveOptions s;
  s.seed = o.seed;
  s.multistarts = o.multistarts;
  return s;
}

void add_solver_manifest(Manifest& m, const Options& o) {
  m.add("mode", o.mode);
  m.add("seed", std::to_string(o.seed));
  m.add("multistarts", std::to_string(o.multistarts));
}

std::string cmd_coeffs(const Options& o) {
  const auto curve = o.shape.load();
  const int order = o.order > 0 ? o.order : 8;
  const auto cur = small_time_expansion(curve, order, SeriesMode::CurvatureApprox);
  const auto exact = small_time_expansion(curve, std::min(order, kSavoMaxOrder), SeriesMode::SavoExact);
  const auto large = LargeSSeries::from_expansion(cur);

  Manifest m("coeffs");
  add_io_manifest(m, o, curve);
  m.add("order", std::to_string(order));
  std::ostringstream os;
  m.write_comments(os);
  os << "j,sigma_curvature,sigma_exact,c_curvature\n";
  for (int j = 1; j <= order; ++j) {
    os << j << ',' << fmt(cur.sigma[j - 1]) << ',' << (j <= kSavoMaxOrder ? fmt(exact.sigma[j - 1]) : "")
       << ',' << fmt(large.c(j)) << '\n';
  }
  return os.str();
}

std::string cmd_survival(const Options& o) {
  const auto curve = o.shape.load();
  const std::string method = o.method.empty() ? (curve.is_disk() ? "exact" : "expansion") : o.method;
  const auto times = o.values.empty() ? std::vector<double>{0.0, 0.001, 0.01, 0.05, 0.1, 0.2, 0.5} : o.values;
  const int order = o.order > 0 ? o.order : 5;

  Manifest m("survival");
  add_io_manifest(m, o, curve);
  m.add("method", method);
  m.add_list("times", times);
  std::ostringstream os;
  if (method == "exact") {
    const auto* disk = std::get_if<DiskShape>(&curve.kind());
    if (!disk) throw Error(ErrorKind::InvalidArgument, "exact survival is available for disks only");
    m.write_comments(os);
    os << "t,S\n";
    for (double t : times) os << fmt(t) << ',' << fmt(t == 0.0 ? 1.0 : survival_disk(t, disk->radius)) << '\n';
    return os.str();
  }
  const auto e = small_time_expansion(curve, order, parse_mode(o.mode));
  m.add("order", std::to_string(order));
  m.add("mode", o.mode);
  m.write_comments(os);
  os << "t,S\n";
  for (double t : times) os << fmt(t) << ',' << fmt(small_time_survival(e, t, order)) << '\n';
  return os.str();
}

std::string cmd_tau(const Options& o) {
  const auto curve = o.shape.load();
  const std::string method = o.method.empty() ? (curve.is_disk() ? "exact" : "series") : o.method;
  const auto svals = o.values.empty() ? std::vector<double>{0.5, 1.0, 2.0, 5.0, 10.0, 20.0} : o.values;
  for (double s : svals)
    if (!(s > 0.0)) throw Error(ErrorKind::InvalidArgument, "s values must be positive");

  Manifest m("tau");
  add_io_manifest(m, o, curve);
  m.add("method", method);
  m.add_list("s", svals);
  std::ostringstream os;
  if (method == "exact") {
    const auto* disk = std::get_if<DiskShape>(&curve.kind());
    if (!disk) throw Error(ErrorKind::InvalidArgument, "exact tau is available for disks only");
    m.write_comments(os);
    os << "s,tau\n";
    for (double s : svals) os << fmt(s) << ',' << fmt(tau_disk(s, disk->radius)) << '\n';
    return os.str();
  }
  const int order = o.order > 0 ? o.order : 6;
  const auto series = tau_large_s_series(curve, order, parse_mode(o.mode));
  m.add("order", std::to_string(order));
  m.add("mode", o.mode);
  m.write_comments(os);
  os << "s,tau\n";
  for (double s : svals) {
    double acc = 0.0;
    for (int j = order; j >= 1; --j) acc = (acc + series.c(j)) / s;
    os << fmt(s) << ',' << fmt((1.0 + acc) / (s * s)) << '\n';
  }
  return os.str();
}

json solution_json(const PadeSolution& sol) {
  json poles = json::array();
  for (const auto& z : sol.poles) poles.push_back({z.real(), z.imag()});
  json j{{"n", sol.approximant.n},
         {"p", sol.approximant.p},
         {"q", sol.approximant.q},
         {"residual_norm", sol.residual_norm},
         {"poles", poles},
         {"d", sol.small_s},
         {"physical", is_physical(sol)}};
  if (sol.has_complex_pole()) {
    j["closest_pole"] = {sol.closest_pole().real(), sol.closest_pole().imag()};
    j["lambda1"] = sol.lambda1();
    j["modulus_squared"] = sol.spectral->modulus_squared;
  }
  return j;
}

std::vector<SequenceEntry> run_sequence(const BoundaryCurve& curve, int n_max, const Options& o,
                                        int threads = 0) {
  if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "order must be >= 1");
  const auto mode = parse_mode(o.mode);
  if (mode == SeriesMode::SavoExact && n_max + 2 > kSavoMaxOrder)
    throw Error(ErrorKind::UnsupportedOrder, "exact-coefficient mode supports n <= 4");
  const auto series = tau_large_s_series(curve, n_max + 2, mode);
  auto opts = solve_options(o);
  opts.threads = threads;
  return solve_sequence(series, n_max, opts);
}

std::string cmd_pade(const Options& o) {
  const auto curve = o.shape.load();
  const auto seq = run_sequence(curve, o.n, o);
  const auto& last = seq.back();
  if (!last.selected)
    throw Error(ErrorKind::NoSolutionFound, "no physical solution at n = " + std::to_string(o.n));

  Manifest m("pade");
  add_io_manifest(m, o, curve);
  m.add("n", std::to_string(o.n));
  add_solver_manifest(m, o);
  json j = solution_json(*last.selected);
  j["solution_count"] = last.solution_count;
  j["manifest"] = m.to_json();
  return j.dump(2) + "\n";
}

std::string cmd_lambda1(const Options& o) {
  const auto curve = o.shape.load();
  const auto seq = run_sequence(curve, o.n_max, o);
  Manifest m("lambda1");
  add_io_manifest(m, o, curve);
  m.add("n_max", std::to_string(o.n_max));
  add_solver_manifest(m, o);
  std::ostringstream os;
  m.write_comments(os);
  os << "n,im,re,lambda1\n";
  for (const auto& e : seq) {
    if (e.selected) {
      const auto z = e.selected->closest_pole();
      os << e.n << ',' << fmt(z.imag()) << ',' << fmt(z.real()) << ',' << fmt(e.selected->lambda1()) << '\n';
    } else {
      os << e.n << ",nan,nan,nan\n";
    }
  }
  return os.str();
}

std::string cmd_sweep(const Options& o) {
  auto eps = o.values.empty() ? std::vector<double>{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9} : o.values;
  std::sort(eps.begin(), eps.end());
  auto ns = o.n_list;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  if (ns.empty() || ns.front() < 1) throw Error(ErrorKind::InvalidArgument, "--n values must be >= 1");
  const int n_max = ns.back();
  for (double e : eps) (void)BoundaryCurve::ellipse(o.b, e);

  std::vector<std::vector<SequenceEntry>> cells(eps.size());
  parallel_for(eps.size(), 0, [&](std::size_t i) {
    cells[i] = run_sequence(BoundaryCurve::ellipse(o.b, eps[i]), n_max, o, 1);
  });

  Manifest m("sweep");
  if (!o.out.empty()) m.add("out", o.out);
  m.add("b", o.b);
  m.add_list("eps", eps);
  std::vector<double> nd(ns.begin(), ns.end());
  m.add_list("n", nd);
  add_solver_manifest(m, o);
  std::ostringstream os;
  m.write_comments(os);
  os << "eps,n,lambda1,im,re\n";
  for (std::size_t i = 0; i < eps.size(); ++i) {
    for (int n : ns) {
      const auto& e = cells[i][n - 1];
      os << fmt(eps[i]) << ',' << n << ',';
      if (e.selected) {
        const auto z = e.selected->closest_pole();
        os << fmt(e.selected->lambda1()) << ',' << fmt(z.imag()) << ',' << fmt(z.real()) << '\n';
      } else {
        os << "nan,nan,nan\n";
      }
    }
  }
  return os.str();
}

std::string cmd_mc(const Options& o) {
  const auto curve = o.shape.load();
  McConfig cfg;
  cfg.walkers = o.walkers;
  cfg.dt = o.dt;
  cfg.t_grid = o.values.empty() ? std::vector<double>{0.05, 0.1, 0.2} : o.values;
  cfg.seed = o.seed;
  const auto samples = simulate_survival(curve, cfg);

  Manifest m("mc");
  add_io_manifest(m, o, curve);
  m.add("walkers", std::to_string(o.walkers));
  m.add("dt", o.dt);
  m.add_list("times", cfg.t_grid);
  m.add("seed", std::to_string(o.seed));
  std::ostringstream os;
  m.write_comments(os);
  os << "t,S,stderr\n";
  for (const auto& s : samples) os << fmt(s.t) << ',' << fmt(s.survival) << ',' << fmt(s.stderr_) << '\n';
  return os.str();
}

std::string cmd_table1(const Options& o) {
  Options local = o;
  local.mode = "curvature";
  const auto seq = run_sequence(BoundaryCurve::disk(1.0), o.n_max, local);

  Manifest m("table1");
  if (!o.out.empty()) m.add("out", o.out);
  m.add("n_max", std::to_string(o.n_max));
  add_solver_manifest(m, local);
  std::ostringstream os;
  m.write_comments(os);
  os << "pade,d0,d2,d4,d6,im\n";
  for (const auto& e : seq) {
    os << '[' << e.n << '/' << e.n + 2 << "],";
    if (e.selected) {
      const auto& d = e.selected->small_s;
      os << fmt(d[0]) << ',' << fmt(d[1]) << ',' << fmt(d[2]) << ',' << fmt(d[3]) << ','
         << fmt(e.selected->closest_pole().imag()) << '\n';
    } else {
      os << "nan,nan,nan,nan,nan\n";
    }
  }
  const auto d = maclaurin_tau_disk(1.0, 3);
  os << "exact," << fmt(d[0]) << ',' << fmt(d[1]) << ',' << fmt(d[2]) << ',' << fmt(d[3]) << ','
     << fmt(j0_zero(1)) << '\n';
  return os.str();
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heat content coefficients and two-sided Pade estimates of the lowest Dirichlet eigenvalue"};
  app.set_version_flag("--version", std::string(HEATPADE_VERSION));
  app.require_subcommand(1);

  Options o;
  const auto modes = CLI::IsMember({"curvature", "savo"});
  auto add_shape = [&](CLI::App* sub) {
    sub->add_option("--shape", o.shape.spec, "Shape JSON file, or inline JSON object")->required();
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Output file (default stdout)"); };
  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--mode", o.mode, "Series mode")->check(modes);
    sub->add_option("--seed", o.seed, "Multistart seed");
    sub->add_option("--multistarts", o.multistarts, "Random Newton starts per order")->check(CLI::NonNegativeNumber);
  };

  auto* coeffs = app.add_subcommand("coeffs", "Short-time expansion coefficients");
  add_shape(coeffs);
  coeffs->add_option("--order", o.order, "Highest j")->check(CLI::PositiveNumber);
  add_out(coeffs);

  auto* survival = app.add_subcommand("survival", "Survival probability S(t)");
  add_shape(survival);
  survival->add_option("--method", o.method, "exact (disk) or expansion")->check(CLI::IsMember({"exact", "expansion"}));
  survival->add_option("--times", o.values, "Comma-separated times")->delimiter(',');
  survival->add_option("--order", o.order, "Expansion order")->check(CLI::PositiveNumber);
  survival->add_option("--mode", o.mode, "Series mode")->check(modes);
  add_out(survival);

  auto* tau = app.add_subcommand("tau", "Laplace transform tau(s)");
  add_shape(tau);
  tau->add_option("--method", o.method, "exact (disk) or series")->check(CLI::IsMember({"exact", "series"}));
  tau->add_option("--s", o.values, "Comma-separated s values")->delimiter(',');
  tau->add_option("--order", o.order, "Large-s series order")->check(CLI::PositiveNumber);
  tau->add_option("--mode", o.mode, "Series mode")->check(modes);
  add_out(tau);

  auto* pade = app.add_subcommand("pade", "One Pade fit (solution JSON)");
  add_shape(pade);
  pade->add_option("--n", o.n, "Numerator degree")->check(CLI::PositiveNumber);
  add_solver(pade);
  add_out(pade);

  auto* lambda1 = app.add_subcommand("lambda1", "Closest pole and lambda1 for n = 1..N");
  add_shape(lambda1);
  lambda1->add_option("--n-max", o.n_max, "Highest order")->check(CLI::PositiveNumber);
  add_solver(lambda1);
  add_out(lambda1);

  auto* sweep = app.add_subcommand("sweep", "lambda1 over ellipse eccentricities");
  sweep->add_option("--b", o.b, "Minor semiaxis")->check(CLI::PositiveNumber);
  sweep->add_option("--eps", o.values, "Comma-separated eccentricities")->delimiter(',');
  sweep->add_option("--n", o.n_list, "Comma-separated orders")->delimiter(',');
  add_solver(sweep);
  add_out(sweep);

  auto* mc = app.add_subcommand("mc", "Monte Carlo survival curve");
  add_shape(mc);
  mc->add_option("--walkers", o.walkers, "Number of walkers")->check(CLI::PositiveNumber);
  mc->add_option("--dt", o.dt, "Time step")->check(CLI::PositiveNumber);
  mc->add_option("--times", o.values, "Comma-separated times")->delimiter(',');
  mc->add_option("--seed", o.seed, "RNG seed");
  add_out(mc);

  auto* table1 = app.add_subcommand("table1", "Unit disk Pade rows");
  table1->add_option("--n-max", o.n_max, "Highest order")->check(CLI::PositiveNumber);
  table1->add_option("--seed", o.seed, "Multistart seed");
  table1->add_option("--multistarts", o.multistarts, "Random Newton starts per order")->check(CLI::NonNegativeNumber);
  add_out(table1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << HEATPADE_VERSION << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << app.get_name() << ": " << e.what() << '\n';
    return 2;
  }

  const std::map<CLI::App*, std::string (*)(const Options&)> handlers{
      {coeffs, cmd_coeffs}, {survival, cmd_survival}, {tau, cmd_tau}, {pade, cmd_pade},
      {lambda1, cmd_lambda1}, {sweep, cmd_sweep}, {mc, cmd_mc}, {table1, cmd_table1},
  };
  try {
    for (const auto& [sub, handler] : handlers) {
      if (sub->parsed()) {
        Sink(o.out, out).emit(handler(o));
        return 0;
      }
    }
  } catch (const Error& e) {
    write_error(err, std::string(to_string(e.kind())), e.what());
    return 1;
  } catch (const std::exception& e) {
    write_error(err, "Internal", e.what());
    return 1;
  }
  return 2;
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace heatpade::cli
