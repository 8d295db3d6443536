// Copyright 2026 The wigneg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wigneg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wigneg/errors.hpp"
#include "wigneg/grid.hpp"
#include "wigneg/io.hpp"
#include "wigneg/negativity.hpp"
#include "wigneg/threshold.hpp"
#include "wigneg/verify.hpp"

namespace wigneg {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts plain reals and simple fractions such as "3/7".
double parse_real(const std::string& text) {
  try {
    const auto slash = text.find('/');
    size_t used = 0;
    if (slash == std::string::npos) {
      const double v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return v;
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    const double a = std::stod(num, &used);
    if (used != num.size()) throw std::invalid_argument(text);
    const double b = std::stod(den, &used);
    if (used != den.size() || b == 0.0) throw std::invalid_argument(text);
    return a / b;
  } catch (const std::logic_error&) {
    throw UsageError("cannot parse number '" + text + "'");
  }
}

std::vector<double> parse_reals(const std::vector<std::string>& texts) {
  std::vector<double> values;
  for (const auto& t : texts) values.push_back(parse_real(t));
  return values;
}

void require_range(double value, double lo, const char* name) {
  if (!(value >= lo) || !std::isfinite(value)) {
    throw UsageError(std::string(name) + " must be finite and >= " +
                     format_number(lo));
  }
}

// Destination for results: --out file, or the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : path_(path) {
    if (path_.empty()) {
      stream_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path_, std::ios::binary | std::ios::trunc);
    if (!*file_) throw IoError("cannot open '" + path_ + "' for writing");
    stream_ = file_.get();
  }

  std::ostream& stream() { return *stream_; }

  // Flushes the data file and writes `<out>.json` beside it.
  void finish(const Json& header) {
    stream_->flush();
    if (!*stream_) throw IoError("write to '" + path_ + "' failed");
    if (path_.empty()) return;
    file_->close();
    std::ofstream side(path_ + ".json", std::ios::binary | std::ios::trunc);
    if (!side) throw IoError("cannot open '" + path_ + ".json' for writing");
    side << header.dump(2) << '\n';
    side.flush();
    if (!side) throw IoError("write to '" + path_ + ".json' failed");
  }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

Json header(const std::string& command, const std::string& format) {
  return Json{{"tool", kToolName},
              {"version", kToolVersion},
              {"command", command},
              {"format", format}};
}

struct GridArgs {
  std::string bar_n = "1";
  std::string n = "0.5";
  std::string gamma_t = "0";
  std::optional<double> extent;
  int resolution = int(kDefaultResolution);
  std::string out;
  std::string format = "csv";
};

int cmd_wigner_grid(const GridArgs& args, std::ostream& out) {
  const double bar_n = parse_real(args.bar_n);
  const double n = parse_real(args.n);
  const double gamma_t = parse_real(args.gamma_t);
  require_range(bar_n, 0.0, "--bar-n");
  require_range(n, 0.0, "--n");
  require_range(gamma_t, 0.0, "--gamma-t");
  if (args.resolution < 2) throw UsageError("--resolution must be >= 2");
  const double extent = args.extent.value_or(default_extent(bar_n, n));
  if (!(extent > 0.0) || !std::isfinite(extent)) {
    throw UsageError("--extent must be > 0");
  }

  const ChannelParams channel{n, gamma_t};
  const WignerGrid grid = sample_grid(
      [&](const PhasePointd& pt) {
        return spats_wigner_evolved(pt, channel, bar_n);
      },
      GridExtents::square(extent), args.resolution, args.resolution);

  Sink sink(args.out, out);
  if (args.format == "csv") {
    write_grid_csv(sink.stream(), grid);
  } else {
    write_grid_jsonl(sink.stream(), grid);
  }
  Json h = header("wigner-grid", args.format);
  h["parameters"] = Json{{"bar_n", bar_n},
                         {"n", n},
                         {"gamma_t", gamma_t},
                         {"extent", extent},
                         {"resolution", args.resolution}};
  h["function"] = "evolved single photon-added thermal state";
  h["grid"] = grid_summary(grid);
  h["threshold_gamma_t"] = threshold_spats(n);
  h["columns"] = Json::array({"q", "p", "w"});
  sink.finish(h);
  return kExitOk;
}

struct CurveArgs {
  std::vector<std::string> bar_n = {"0", "3/7", "1"};
  std::string n = "0.5";
  std::string gamma_t = "0.8";
  int steps = 81;
  bool numeric = false;
  std::string out;
  std::string format = "csv";
};

int cmd_pnw_curve(const CurveArgs& args, std::ostream& out) {
  std::vector<double> bar_ns = parse_reals(args.bar_n);
  const double n = parse_real(args.n);
  const double gamma_max = parse_real(args.gamma_t);
  for (double b : bar_ns) require_range(b, 0.0, "--bar-n");
  require_range(n, 0.0, "--n");
  require_range(gamma_max, 0.0, "--gamma-t");
  if (args.steps < 2) throw UsageError("--steps must be >= 2");
  std::sort(bar_ns.begin(), bar_ns.end());
  bar_ns.erase(std::unique(bar_ns.begin(), bar_ns.end()), bar_ns.end());

  constexpr double kNumericTol = 1e-9;
  Sink sink(args.out, out);
  auto& os = sink.stream();
  if (args.format == "csv") os << "gamma_t,bar_n,pnw_analytic,pnw_numeric\n";

  Json zeros = Json::array();
  for (double bar_n : bar_ns) {
    std::optional<double> first_zero;
    for (int k = 0; k < args.steps; ++k) {
      const double gamma_t = gamma_max * double(k) / double(args.steps - 1);
      const ChannelParams channel{n, gamma_t};
      const double analytic = pnw_spats_analytic(channel, bar_n).volume;
      std::optional<double> numeric;
      if (args.numeric) {
        numeric = pnw_numeric(
                      [&](const PhasePointd& pt) {
                        return spats_wigner_evolved(pt, channel, bar_n);
                      },
                      default_extent(bar_n, n), 64, kNumericTol)
                      .volume;
      }
      if (!first_zero && analytic == 0.0) first_zero = gamma_t;
      if (args.format == "csv") {
        os << format_number(gamma_t) << ',' << format_number(bar_n) << ','
           << format_number(analytic) << ','
           << (numeric ? format_number(*numeric) : std::string()) << '\n';
      } else {
        os << Json{{"gamma_t", gamma_t},
                   {"bar_n", bar_n},
                   {"pnw_analytic", analytic},
                   {"pnw_numeric", numeric ? Json(*numeric) : Json()}}
                  .dump()
           << '\n';
      }
    }
    zeros.push_back(Json{{"bar_n", bar_n},
                         {"first_zero_gamma_t",
                          first_zero ? Json(*first_zero) : Json()}});
  }

  Json h = header("pnw-curve", args.format);
  h["parameters"] = Json{{"bar_n", bar_ns},
                         {"n", n},
                         {"gamma_t_max", gamma_max},
                         {"steps", args.steps},
                         {"numeric", args.numeric}};
  h["tolerances"] = Json{{"pnw_numeric_abs_tol", kNumericTol}};
  h["threshold_gamma_t"] = threshold_spats(n);
  h["first_zero"] = zeros;
  h["columns"] = Json::array({"gamma_t", "bar_n", "pnw_analytic", "pnw_numeric"});
  sink.finish(h);
  return kExitOk;
}

struct ThresholdArgs {
  std::vector<std::string> n = {"0", "0.5", "1", "2"};
  std::vector<std::string> bar_n = {"0", "3/7", "1", "10"};
  std::string out;
  std::string format = "jsonl";
};

int cmd_threshold(const ThresholdArgs& args, std::ostream& out) {
  std::vector<double> ns = parse_reals(args.n);
  std::vector<double> bar_ns = parse_reals(args.bar_n);
  for (double v : ns) require_range(v, 0.0, "--n");
  for (double v : bar_ns) require_range(v, 0.0, "--bar-n");
  std::sort(ns.begin(), ns.end());
  std::sort(bar_ns.begin(), bar_ns.end());

  constexpr double kTol = 1e-12;
  Sink sink(args.out, out);
  auto& os = sink.stream();
  if (args.format == "csv") {
    os << "n,bar_n,gamma_t_c_analytic,gamma_t_c_numeric,method,residual\n";
  }
  double worst = 0.0;
  for (double n : ns) {
    for (double bar_n : bar_ns) {
      const ThresholdReport r = threshold_numeric_spats(n, bar_n, kTol);
      worst = std::max(worst, r.residual);
      if (args.format == "csv") {
        os << format_number(r.n) << ',' << format_number(r.bar_n) << ','
           << format_number(r.gamma_t_c_analytic) << ','
           << format_number(r.gamma_t_c_numeric) << ',' << to_string(r.method)
           << ',' << format_number(r.residual) << '\n';
      } else {
        os << to_json(r).dump() << '\n';
      }
    }
  }
  Json h = header("threshold", args.format);
  h["parameters"] = Json{{"n", ns}, {"bar_n", bar_ns}};
  h["tolerances"] = Json{{"bisection", kTol}};
  h["max_residual"] = worst;
  sink.finish(h);
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "jsonl";
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  if (args.format != "jsonl") throw UsageError("verify writes jsonl only");
  std::vector<Json> records;
  Json tolerances;
  if (args.suite == "thresholds") {
    records = verify_thresholds();
    tolerances = Json{{"residual", 1e-8}, {"spread", 1e-8}, {"map", 1e-14}};
  } else if (args.suite == "theorem") {
    records = verify_theorem(args.seed);
    const TheoremTolerances t;
    tolerances = Json{{"origin", t.origin},
                      {"min", t.min},
                      {"q_identity", t.q_identity},
                      {"step_tol", t.step_tol}};
  } else if (args.suite == "oracles") {
    records = verify_oracles();
    tolerances = Json{{"convolution", 1e-8},
                      {"fokker_planck", 1e-3},
                      {"fock_ladder", 1e-6},
                      {"mass_drift", 1e-3}};
  } else {
    throw UsageError("unknown suite '" + args.suite + "'");
  }

  Sink sink(args.out, out);
  long failed = 0;
  for (const auto& r : records) {
    sink.stream() << r.dump() << '\n';
    if (!r.at("passed").get<bool>()) {
      ++failed;
      err << "FAILED: " << r.dump() << '\n';
    }
  }
  Json h = header("verify", args.format);
  h["parameters"] = Json{{"suite", args.suite}, {"seed", args.seed}};
  h["tolerances"] = tolerances;
  h["cases"] = records.size();
  h["failed"] = failed;
  if (args.suite == "theorem") {
    h["scope"] = "Fock-diagonal representatives only; states with coherences are not sampled";
  }
  sink.finish(h);
  return failed == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Wigner negativity of photon-added thermal states in thermal channels"};
  app.name("wigneg");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  const auto formats = CLI::IsMember({"csv", "jsonl"});

  GridArgs grid;
  auto* grid_cmd = app.add_subcommand("wigner-grid", "Sample the evolved SPATS Wigner function");
  grid_cmd->add_option("--bar-n", grid.bar_n, "Seed thermal mean photon number")->capture_default_str();
  grid_cmd->add_option("--n", grid.n, "Channel mean thermal photon number")->capture_default_str();
  grid_cmd->add_option("--gamma-t", grid.gamma_t, "Decay time")->capture_default_str();
  grid_cmd->add_option("--extent", grid.extent, "Half-width of the square grid");
  grid_cmd->add_option("--resolution", grid.resolution, "Points per axis")->capture_default_str();
  grid_cmd->add_option("--out", grid.out, "Output file (sidecar <out>.json)");
  grid_cmd->add_option("--format", grid.format)->check(formats)->capture_default_str();

  CurveArgs curve;
  auto* curve_cmd = app.add_subcommand("pnw-curve", "Negativity volume against decay time");
  curve_cmd->add_option("--bar-n", curve.bar_n, "Seed photon numbers (comma separated, fractions allowed)")
      ->delimiter(',')
      ->capture_default_str();
  curve_cmd->add_option("--n", curve.n, "Channel mean thermal photon number")->capture_default_str();
  curve_cmd->add_option("--gamma-t", curve.gamma_t, "Largest decay time")->capture_default_str();
  curve_cmd->add_option("--steps", curve.steps, "Samples per curve")->capture_default_str();
  curve_cmd->add_flag("--numeric", curve.numeric, "Add the quadrature column");
  curve_cmd->add_option("--out", curve.out, "Output file (sidecar <out>.json)");
  curve_cmd->add_option("--format", curve.format)->check(formats)->capture_default_str();

  ThresholdArgs thr;
  auto* thr_cmd = app.add_subcommand("threshold", "Numeric against analytic threshold decay times");
  thr_cmd->add_option("--n", thr.n, "Channel photon numbers")->delimiter(',')->capture_default_str();
  thr_cmd->add_option("--bar-n", thr.bar_n, "Seed photon numbers")->delimiter(',')->capture_default_str();
  thr_cmd->add_option("--out", thr.out, "Output file (sidecar <out>.json)");
  thr_cmd->add_option("--format", thr.format)->check(formats)->capture_default_str();

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Run a verification suite");
  ver_cmd->add_option("suite,--suite", ver.suite, "oracles | theorem | thresholds")->required();
  ver_cmd->add_option("--seed", ver.seed, "First seed of the random state batch")->capture_default_str();
  ver_cmd->add_option("--out", ver.out, "JSONL report (sidecar <out>.json)");
  ver_cmd->add_option("--format", ver.format)->check(formats)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (grid_cmd->parsed()) return cmd_wigner_grid(grid, out);
    if (curve_cmd->parsed()) return cmd_pnw_curve(curve, out);
    if (thr_cmd->parsed()) return cmd_threshold(thr, out);
    if (ver_cmd->parsed()) return cmd_verify(ver, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace wigneg
