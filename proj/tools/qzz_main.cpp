// Copyright 2026 The qzz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qzz: build, compose, and verify constant-degree quantum expanders from the
// command line. Exit status: 0 success, 1 verification failure, 2 usage or
// I/O error.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <Eigen/Eigenvalues>

#include "qzz/channel.hpp"
#include "qzz/construction.hpp"
#include "qzz/io.hpp"
#include "qzz/linalg.hpp"
#include "qzz/spectral.hpp"
#include "qzz/zigzag.hpp"

namespace {

using qzz::Complex;
using qzz::ComplexMatrix;
using qzz::Index;
using qzz::MixedUnitaryEnsemble;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string fmt_sci(double v) {
  std::ostringstream out;
  out << std::setprecision(3) << std::scientific << v;
  return out.str();
}

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ReportRow {
  std::string operation;
  std::string dim;
  std::uint64_t degree = 0;
  std::optional<double> lambda;
  std::string method;  // exact | power | cert | ""
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RunReport {
  std::string command;
  std::optional<std::uint64_t> seed;
  std::vector<ReportRow> rows;
  std::vector<Check> checks;
  double wall_ms = 0.0;

  void print(std::ostream& out) const {
    if (seed) {
      out << "seed: " << *seed << "\n";
    }
    if (!rows.empty()) {
      out << std::left << std::setw(28) << "operation" << std::setw(12) << "dim"
          << std::setw(8) << "degree" << std::setw(22) << "lambda_or_bound"
          << "method" << "\n";
      for (const ReportRow& r : rows) {
        std::ostringstream lam;
        if (r.lambda) {
          lam << std::setprecision(12) << *r.lambda;
        } else {
          lam << "-";
        }
        out << std::left << std::setw(28) << r.operation << std::setw(12) << r.dim
            << std::setw(8) << r.degree << std::setw(22) << lam.str()
            << (r.method.empty() ? "-" : r.method) << "\n";
      }
    }
    for (const Check& c : checks) {
      out << (c.pass ? "  ok    " : "  FAIL  ") << std::left << std::setw(24)
          << c.name << c.detail << "\n";
    }
    out << "wall time: " << std::fixed << std::setprecision(1) << wall_ms << " ms\n";
  }

  // The machine-readable document deliberately omits wall time so that
  // identical command + seed yields a byte-identical report.
  nlohmann::json to_json() const {
    nlohmann::json doc;
    doc["command"] = command;
    if (seed) {
      doc["seed"] = *seed;
    }
    nlohmann::json rows_json = nlohmann::json::array();
    for (const ReportRow& r : rows) {
      nlohmann::json row;
      row["operation"] = r.operation;
      row["dim"] = r.dim;
      row["degree"] = r.degree;
      if (r.lambda) {
        row["lambda_or_bound"] = *r.lambda;
      }
      row["method"] = r.method;
      rows_json.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows_json);
    if (!checks.empty()) {
      nlohmann::json checks_json = nlohmann::json::array();
      for (const Check& c : checks) {
        checks_json.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      }
      doc["checks"] = std::move(checks_json);
    }
    return doc;
  }
};

void emit(const RunReport& report, const std::string& report_path) {
  report.print(std::cout);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      throw qzz::IoError("cannot open report path " + report_path);
    }
    out << report.to_json().dump(1) << "\n";
  }
}

std::string echo_command(int argc, char** argv) {
  std::ostringstream out;
  for (int i = 0; i < argc; ++i) {
    if (i) {
      out << ' ';
    }
    out << argv[i];
  }
  return out.str();
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> given) {
  if (given) {
    return *given;
  }
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

qzz::Encoding parse_encoding(const std::string& name) {
  if (name == "binary") {
    return qzz::Encoding::kBinary;
  }
  if (name == "text") {
    return qzz::Encoding::kText;
  }
  throw CLI::ValidationError("--encoding must be 'binary' or 'text'");
}

// Spectral estimate through the method chosen on the command line; "auto"
// prefers the exact method when the dimension allows it.
qzz::SpectralEstimate estimate_lambda(const MixedUnitaryEnsemble& g,
                                      const std::string& method, Index exact_cap,
                                      const qzz::PowerOptions& opts) {
  if (method == "exact" || (method == "auto" && g.dim() <= exact_cap)) {
    try {
      return qzz::lambda_exact(g, exact_cap);
    } catch (const qzz::DimensionCapError& e) {
      throw qzz::DimensionCapError(std::string(e.what()) +
                                   " (hint: pass --method power or raise --cap)");
    }
  }
  return qzz::lambda_power(g, opts);
}

ReportRow ensemble_row(const std::string& op, const MixedUnitaryEnsemble& g,
                       std::optional<qzz::SpectralEstimate> est = std::nullopt) {
  ReportRow row;
  row.operation = op;
  row.dim = std::to_string(g.dim());
  row.degree = static_cast<std::uint64_t>(g.degree());
  if (est) {
    row.lambda = est->lambda;
    row.method = qzz::to_string(est->method);
  }
  return row;
}

// ---------------------------------------------------------------------------
// Command configurations

struct CommonOpts {
  std::string report_path;
  std::string encoding = "binary";
  std::string method = "auto";  // auto | exact | power | none
  Index exact_cap = qzz::kDefaultExactDimCap;
  qzz::PowerOptions power;
  std::optional<std::uint64_t> seed;
};

void add_spectral_flags(CLI::App* cmd, CommonOpts& o, bool with_exact_cap = true) {
  cmd->add_option("--method", o.method, "lambda estimator: exact|power|auto|none")
      ->check(CLI::IsMember({"exact", "power", "auto", "none"}));
  if (with_exact_cap) {
    cmd->add_option("--cap", o.exact_cap, "dimension cap for the exact method");
  }
  cmd->add_option("--tol", o.power.tol, "power method stagnation tolerance");
  cmd->add_option("--max-iter", o.power.max_iter, "power method iteration cap per restart");
  cmd->add_option("--restarts", o.power.restarts, "power method restarts");
}

int run_gen_base(const std::string& command, Index dim, Index degree,
                 const std::string& out_path, const std::string& label, CommonOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  report.command = command;
  report.seed = resolve_seed(o.seed);
  o.power.seed = qzz::mix_seed(*report.seed, 0x9);
  MixedUnitaryEnsemble g = qzz::random_base(dim, degree, *report.seed);
  if (!label.empty()) {
    g = MixedUnitaryEnsemble(g.unitaries(), label);
  }
  if (!out_path.empty()) {
    qzz::save_ensemble(g, out_path, parse_encoding(o.encoding));
  }
  std::optional<qzz::SpectralEstimate> est;
  if (o.method != "none") {
    est = estimate_lambda(g, o.method == "auto" ? "auto" : o.method, o.exact_cap, o.power);
  }
  report.rows.push_back(ensemble_row("gen-base", g, est));
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0).count();
  emit(report, o.report_path);
  return kExitOk;
}

int run_compose(const std::string& command, const std::string& op,
                const std::string& g1_path, const std::string& g2_path,
                const std::string& out_path, CommonOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  report.command = command;
  if (o.seed) {
    report.seed = *o.seed;
    o.power.seed = qzz::mix_seed(*o.seed, 0x9);
  }
  const MixedUnitaryEnsemble g1 = qzz::load_ensemble(g1_path);
  std::optional<MixedUnitaryEnsemble> result;
  if (op == "square") {
    result = qzz::square(g1);
  } else {
    const MixedUnitaryEnsemble g2 = qzz::load_ensemble(g2_path);
    if (op == "tensor") {
      result = qzz::tensor_channels(g1, g2);
    } else {
      result = qzz::zigzag(g1, g2);
    }
  }
  if (!out_path.empty()) {
    qzz::save_ensemble(*result, out_path, parse_encoding(o.encoding));
  }
  std::optional<qzz::SpectralEstimate> est;
  if (o.method != "none") {
    est = estimate_lambda(*result, o.method, o.exact_cap, o.power);
  }
  report.rows.push_back(ensemble_row(op, *result, est));
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0).count();
  emit(report, o.report_path);
  return kExitOk;
}

int run_lambda(const std::string& command, const std::string& in_path, CommonOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  report.command = command;
  if (o.method == "power" || o.method == "auto") {
    report.seed = resolve_seed(o.seed);
    o.power.seed = *report.seed;
  }
  const MixedUnitaryEnsemble g = qzz::load_ensemble(in_path);
  const qzz::SpectralEstimate est =
      estimate_lambda(g, o.method == "none" ? "auto" : o.method, o.exact_cap, o.power);
  ReportRow row = ensemble_row("lambda", g, est);
  report.rows.push_back(row);
  if (est.method == qzz::SpectralMethod::kPowerIteration) {
    Check conv;
    conv.name = "power-converged";
    conv.pass = est.converged;
    std::ostringstream detail;
    detail << "iterations=" << est.iterations << " residual=" << est.residual;
    conv.detail = detail.str();
    report.checks.push_back(conv);
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0).count();
  emit(report, o.report_path);
  return kExitOk;
}

int run_net_search(const std::string& command, Index dim, Index degree,
                   const std::string& gens_name, int max_word_length, double accuracy,
                   const std::string& mode, std::uint64_t samples, std::uint64_t budget,
                   const std::string& out_path, CommonOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  report.command = command;
  qzz::NetSearchOptions search;
  if (mode == "sample") {
    search.mode = qzz::SearchMode::kRandomSample;
    report.seed = resolve_seed(o.seed);
    search.seed = *report.seed;
  } else if (o.seed) {
    report.seed = *o.seed;
  }
  search.samples = samples;
  search.budget = budget;
  const qzz::UnitaryNet net =
      qzz::build_net(dim, qzz::named_generator_set(gens_name), max_word_length, accuracy);
  std::cout << "net: " << net.members.size() << " members (words up to length "
            << max_word_length << ", accuracy " << accuracy << ")\n";
  const qzz::NetSearchResult result = qzz::net_search(dim, degree, net, search);
  std::cout << "tuple:";
  for (Index idx : result.tuple) {
    std::cout << " " << net.words[static_cast<std::size_t>(idx)];
  }
  std::cout << "\n";
  if (!out_path.empty()) {
    qzz::save_ensemble(result.channel, out_path, parse_encoding(o.encoding));
  }
  report.rows.push_back(ensemble_row("net-search", result.channel, result.estimate));
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0).count();
  emit(report, o.report_path);
  return kExitOk;
}

int run_construct(const std::string& command, const std::string& base_path, int t,
                  std::uint64_t materialize_cap, double base_lambda_flag, bool measure,
                  const std::string& out_path, CommonOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  report.command = command;
  report.seed = resolve_seed(o.seed);
  o.power.seed = qzz::mix_seed(*report.seed, 0x7);
  const MixedUnitaryEnsemble h = qzz::load_ensemble(base_path);

  double base_lambda = base_lambda_flag;
  if (base_lambda < 0.0) {
    const qzz::SpectralEstimate est = estimate_lambda(h, "auto", o.exact_cap, o.power);
    base_lambda = std::min(1.0, est.lambda);
    report.rows.push_back(ensemble_row("base", h, est));
  } else {
    ReportRow row = ensemble_row("base", h);
    row.lambda = base_lambda;
    row.method = "cert";
    report.rows.push_back(row);
  }

  for (int step = 1; step <= t; ++step) {
    const qzz::GtResult result = qzz::build_Gt(h, base_lambda, step, materialize_cap);
    ReportRow row;
    row.operation = "G" + std::to_string(step);
    row.dim = result.cert->dim().str();
    row.degree = result.cert->degree();
    row.lambda = result.cert->lambda_bound();
    row.method = "cert";
    report.rows.push_back(row);
    if (result.ensemble && measure) {
      const qzz::SpectralEstimate est = estimate_lambda(*result.ensemble, "auto",
                                                        o.exact_cap, o.power);
      report.rows.push_back(
          ensemble_row("G" + std::to_string(step) + " (measured)", *result.ensemble, est));
    }
    if (result.ensemble && step == t && !out_path.empty()) {
      qzz::save_ensemble(*result.ensemble, out_path, parse_encoding(o.encoding));
    }
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0).count();
  emit(report, o.report_path);
  return kExitOk;
}

int run_verify(const std::string& command, const std::string& in_path, CommonOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  report.command = command;
  report.seed = resolve_seed(o.seed);
  o.power.seed = qzz::mix_seed(*report.seed, 0x5);
  const std::uint64_t probe_seed = qzz::mix_seed(*report.seed, 0x11);

  std::optional<MixedUnitaryEnsemble> loaded;
  try {
    loaded = qzz::load_ensemble(in_path);
    report.checks.push_back({"load-unitarity", true, "all Kraus elements unitary"});
  } catch (const qzz::UnitarityError& e) {
    report.checks.push_back({"load-unitarity", false, e.what()});
  }

  if (loaded) {
    const MixedUnitaryEnsemble& g = *loaded;
    const Index n = g.dim();
    const auto ginibre = [&](std::uint64_t salt) {
      std::mt19937_64 rng(qzz::mix_seed(probe_seed, salt));
      std::normal_distribution<double> gauss(0.0, 1.0);
      ComplexMatrix m(n, n);
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
          const double re = gauss(rng);
          const double im = gauss(rng);
          m(i, j) = Complex(re, im);
        }
      }
      return m;
    };

    const double unital = (g.apply(qzz::maximally_mixed(n)) - qzz::maximally_mixed(n)).norm();
    report.checks.push_back({"fixes-mixed-state", unital <= 1e-12,
                             "||G(I~) - I~|| = " + fmt_sci(unital)});

    double worst_trace = 0.0, worst_contract = 0.0, worst_herm = 0.0, worst_adjoint = 0.0;
    for (std::uint64_t k = 0; k < 5; ++k) {
      const ComplexMatrix x = ginibre(10 + k);
      const ComplexMatrix gx = g.apply(x);
      worst_trace = std::max(worst_trace,
                             std::abs(gx.trace() - x.trace()) / qzz::hs_norm(x));
      worst_contract = std::max(worst_contract,
                                qzz::hs_norm(gx) / qzz::hs_norm(x) - 1.0);
      const ComplexMatrix herm = x + ComplexMatrix(x.adjoint());
      const ComplexMatrix gh = g.apply(herm);
      worst_herm = std::max(worst_herm,
                            (gh - ComplexMatrix(gh.adjoint())).norm() / qzz::hs_norm(herm));
      const ComplexMatrix y = ginibre(20 + k);
      const Complex lhs = qzz::hs_inner(gx, y);
      const Complex rhs = qzz::hs_inner(x, qzz::adjoint_channel(g).apply(y));
      worst_adjoint = std::max(worst_adjoint, std::abs(lhs - rhs) /
                                                  (qzz::hs_norm(x) * qzz::hs_norm(y)));
    }
    report.checks.push_back({"trace-preservation", worst_trace <= 1e-12,
                             "max |Tr G(X) - Tr X| / ||X|| = " + fmt_sci(worst_trace)});
    report.checks.push_back({"contractivity", worst_contract <= 1e-12,
                             "max ||G(X)||/||X|| - 1 = " + fmt_sci(worst_contract)});
    report.checks.push_back({"hermiticity", worst_herm <= 1e-12,
                             "max hermitian defect = " + fmt_sci(worst_herm)});
    report.checks.push_back({"adjoint-identity", worst_adjoint <= 1e-12,
                             "max <G X, Y> vs <X, G' Y> gap = " + fmt_sci(worst_adjoint)});

    double min_eig = 0.0;
    for (std::uint64_t k = 0; k < 3; ++k) {
      const ComplexMatrix w = ginibre(30 + k);
      ComplexMatrix rho = w * w.adjoint();
      rho /= rho.trace();
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(g.apply(rho));
      min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
    }
    report.checks.push_back({"positivity", min_eig >= -1e-12,
                             "min output eigenvalue = " + fmt_sci(min_eig)});

    const qzz::SpectralEstimate est = estimate_lambda(g, "auto", o.exact_cap, o.power);
    report.rows.push_back(ensemble_row("verify", g, est));
    report.checks.push_back({"lambda-range",
                             est.lambda >= -1e-12 && est.lambda <= 1.0 + 1e-10,
                             "lambda = " + fmt_sci(est.lambda)});
  }

  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0).count();
  emit(report, o.report_path);
  for (const Check& c : report.checks) {
    if (!c.pass) {
      return kExitVerifyFailed;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum expander construction and spectral verification"};
  app.require_subcommand(1);
  const std::string command = echo_command(argc, argv);

  CommonOpts common;
  std::string in_path, g1_path, g2_path, base_path, out_path, label, report_path;
  std::string gens_name = "ht", mode = "exhaustive";
  Index dim = 2, degree = 2;
  int t = 1, max_word_length = 4;
  double accuracy = 0.5, base_lambda = -1.0;
  std::uint64_t samples = 1000, budget = 2'000'000, materialize_cap = 4096;
  bool measure = false;
  std::optional<std::uint64_t> seed_flag;

  const auto add_common = [&](CLI::App* cmd, bool spectral = true, bool exact_cap = true) {
    cmd->add_option("--report", common.report_path, "write a JSON report here");
    cmd->add_option("--encoding", common.encoding, "output encoding: binary|text")
        ->check(CLI::IsMember({"binary", "text"}));
    cmd->add_option("--seed", seed_flag, "seed for any randomized step");
    if (spectral) {
      add_spectral_flags(cmd, common, exact_cap);
    }
  };

  CLI::App* gen = app.add_subcommand("gen-base", "sample a random base expander");
  gen->add_option("--dim", dim, "Hilbert space dimension")->required();
  gen->add_option("--degree", degree, "number of Haar Kraus unitaries")->required();
  gen->add_option("--out", out_path, "ensemble output path");
  gen->add_option("--label", label, "override the stored label");
  add_common(gen);

  CLI::App* net = app.add_subcommand("net-search", "search a unitary word net for a base");
  net->add_option("--dim", dim, "Hilbert space dimension")->required();
  net->add_option("--degree", degree, "channel degree d (tuple length)")->required();
  net->add_option("--gens", gens_name, "generator set name (ht)");
  net->add_option("--max-word-length", max_word_length, "longest generator word");
  net->add_option("--accuracy", accuracy, "net accuracy parameter");
  net->add_option("--mode", mode, "exhaustive|sample")
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  net->add_option("--samples", samples, "tuples drawn in sample mode");
  net->add_option("--budget", budget, "max tuples in exhaustive mode");
  net->add_option("--out", out_path, "write the best ensemble here");
  add_common(net, false);

  CLI::App* sq = app.add_subcommand("square", "square a stored channel");
  sq->add_option("--in", g1_path, "input ensemble")->required();
  sq->add_option("--out", out_path, "output ensemble");
  add_common(sq);
  CLI::App* tens = app.add_subcommand("tensor", "tensor two stored channels");
  tens->add_option("--g1", g1_path, "first ensemble")->required();
  tens->add_option("--g2", g2_path, "second ensemble")->required();
  tens->add_option("--out", out_path, "output ensemble");
  add_common(tens);
  CLI::App* zz = app.add_subcommand("zigzag", "zig-zag product of two stored channels");
  zz->add_option("--g1", g1_path, "expander ensemble")->required();
  zz->add_option("--g2", g2_path, "seed ensemble on dim = degree(g1)")->required();
  zz->add_option("--out", out_path, "output ensemble");
  add_common(zz);

  CLI::App* lam = app.add_subcommand("lambda", "estimate the expander parameter");
  lam->add_option("--in", in_path, "input ensemble")->required();
  add_common(lam);

  CLI::App* cons = app.add_subcommand("construct", "run the recursive family G_t");
  cons->add_option("--base", base_path, "base expander with dim = degree^8")->required();
  cons->add_option("--t", t, "deepest recursion level")->required();
  cons->add_option("--cap,--materialize-cap", materialize_cap,
                   "materialize ensembles up to this dimension");
  cons->add_option("--base-lambda", base_lambda,
                   "assume this bound for the base instead of estimating");
  cons->add_flag("--measure", measure, "measure materialized levels with the power method");
  cons->add_option("--out", out_path, "write the deepest materialized ensemble here");
  add_common(cons, true, /*exact_cap=*/false);

  CLI::App* ver = app.add_subcommand("verify", "run the invariant suite on a stored ensemble");
  ver->add_option("--in", in_path, "input ensemble")->required();
  add_common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  common.seed = seed_flag;
  try {
    if (gen->parsed()) {
      // Generation does not estimate lambda unless explicitly asked to.
      if (gen->get_option("--method")->count() == 0) {
        common.method = "none";
      }
      return run_gen_base(command, dim, degree, out_path, label, common);
    }
    if (net->parsed()) {
      return run_net_search(command, dim, degree, gens_name, max_word_length, accuracy,
                            mode, samples, budget, out_path, common);
    }
    if (sq->parsed()) {
      return run_compose(command, "square", g1_path, g2_path, out_path, common);
    }
    if (tens->parsed()) {
      return run_compose(command, "tensor", g1_path, g2_path, out_path, common);
    }
    if (zz->parsed()) {
      return run_compose(command, "zigzag", g1_path, g2_path, out_path, common);
    }
    if (lam->parsed()) {
      return run_lambda(command, in_path, common);
    }
    if (cons->parsed()) {
      return run_construct(command, base_path, t, materialize_cap, base_lambda, measure,
                           out_path, common);
    }
    if (ver->parsed()) {
      return run_verify(command, in_path, common);
    }
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const qzz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
