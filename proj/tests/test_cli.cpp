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

// Drives the installed command-line binary end to end through a shell.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "qzz/io.hpp"

using namespace qzz;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

struct CliFixture {
  fs::path dir;
  CliFixture() {
    dir = fs::temp_directory_path() / ("qzz_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~CliFixture() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }

  CliResult run(const std::string& args) const {
    const fs::path log = dir / "out.log";
    const std::string cmd = std::string(QZZ_CLI_PATH) + " " + args + " > " +
                            log.string() + " 2>&1";
    const int raw = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(log);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.output = buf.str();
    return r;
  }

  std::string slurp(const fs::path& p) const {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen-base writes a loadable ensemble and echoes the seed") {
  CliFixture fx;
  const auto file = fx.dir / "g.qmix";
  const CliResult r = fx.run("gen-base --dim 4 --degree 3 --seed 11 --out " + file.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("seed: 11") != std::string::npos);
  const MixedUnitaryEnsemble g = load_ensemble(file);
  CHECK(g.dim() == 4);
  CHECK(g.degree() == 3);
}

TEST_CASE("identical command and seed give byte-identical outputs and reports") {
  CliFixture fx;
  const auto f1 = fx.dir / "a1.qmix", f2 = fx.dir / "a2.qmix";
  const auto r1 = fx.dir / "r1.json", r2 = fx.dir / "r2.json";
  REQUIRE(fx.run("gen-base --dim 3 --degree 2 --seed 5 --out " + f1.string() +
                 " --report " + r1.string()).exit_code == 0);
  REQUIRE(fx.run("gen-base --dim 3 --degree 2 --seed 5 --out " + f2.string() +
                 " --report " + r2.string()).exit_code == 0);
  CHECK(fx.slurp(f1) == fx.slurp(f2));
  // The echoed command differs (paths), so compare everything but it.
  auto j1 = nlohmann::json::parse(fx.slurp(r1));
  auto j2 = nlohmann::json::parse(fx.slurp(r2));
  j1.erase("command");
  j2.erase("command");
  CHECK(j1 == j2);

  const auto rp = fx.dir / "p.json";
  REQUIRE(fx.run("lambda --in " + f1.string() + " --method power --seed 3 --report " +
                 rp.string()).exit_code == 0);
  const std::string first = fx.slurp(rp);
  REQUIRE(fx.run("lambda --in " + f1.string() + " --method power --seed 3 --report " +
                 rp.string()).exit_code == 0);
  CHECK(first == fx.slurp(rp));
}

TEST_CASE("lambda reports the pauli channel as spectrally trivial") {
  CliFixture fx;
  const auto file = fx.dir / "pauli.qmix";
  save_ensemble(pauli_ensemble(), file);
  const auto report = fx.dir / "report.json";
  const CliResult r = fx.run("lambda --in " + file.string() + " --method exact --report " +
                             report.string());
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(fx.slurp(report));
  REQUIRE(doc["rows"].size() == 1);
  CHECK(doc["rows"][0]["lambda_or_bound"].get<double>() <= 1e-12);
  CHECK(doc["rows"][0]["method"] == "exact");
}

TEST_CASE("square multiplies the degree and zigzag checks regularity") {
  CliFixture fx;
  const auto a = fx.dir / "a.qmix";
  const auto b = fx.dir / "b.qmix";
  REQUIRE(fx.run("gen-base --dim 2 --degree 2 --seed 1 --out " + a.string()).exit_code == 0);
  REQUIRE(fx.run("gen-base --dim 3 --degree 2 --seed 2 --out " + b.string()).exit_code == 0);

  const auto sq = fx.dir / "sq.qmix";
  REQUIRE(fx.run("square --in " + a.string() + " --out " + sq.string()).exit_code == 0);
  CHECK(load_ensemble(sq).degree() == 4);

  const CliResult bad = fx.run("zigzag --g1 " + a.string() + " --g2 " + b.string());
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("regular") != std::string::npos);

  // A compatible seed channel: g1 is 2-regular, so g2 must live on dim 2.
  const auto zzout = fx.dir / "zz.qmix";
  REQUIRE(fx.run("zigzag --g1 " + b.string() + " --g2 " + a.string() + " --out " +
                 zzout.string()).exit_code == 0);
  const MixedUnitaryEnsemble zz = load_ensemble(zzout);
  CHECK(zz.dim() == 6);
  CHECK(zz.degree() == 4);
}

TEST_CASE("tensor composes stored ensembles") {
  CliFixture fx;
  const auto a = fx.dir / "a.qmix";
  const auto b = fx.dir / "b.qmix";
  REQUIRE(fx.run("gen-base --dim 2 --degree 2 --seed 1 --out " + a.string()).exit_code == 0);
  REQUIRE(fx.run("gen-base --dim 3 --degree 3 --seed 2 --out " + b.string()).exit_code == 0);
  const auto out = fx.dir / "ab.qmix";
  REQUIRE(fx.run("tensor --g1 " + a.string() + " --g2 " + b.string() + " --out " +
                 out.string()).exit_code == 0);
  const MixedUnitaryEnsemble ab = load_ensemble(out);
  CHECK(ab.dim() == 6);
  CHECK(ab.degree() == 6);
}

TEST_CASE("construct reports certificate rows for the first levels") {
  CliFixture fx;
  const auto h = fx.dir / "h.qmix";
  REQUIRE(fx.run("gen-base --dim 256 --degree 2 --seed 7 --out " + h.string()).exit_code == 0);
  const auto report = fx.dir / "construct.json";
  const CliResult r = fx.run("construct --base " + h.string() +
                             " --t 2 --base-lambda 0.25 --seed 1 --report " + report.string());
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(fx.slurp(report));
  REQUIRE(doc["rows"].size() == 3);  // base, G1, G2
  CHECK(doc["rows"][1]["operation"] == "G1");
  CHECK(doc["rows"][1]["lambda_or_bound"].get<double>() == doctest::Approx(0.0625));
  CHECK(doc["rows"][1]["method"] == "cert");
  CHECK(doc["rows"][1]["degree"] == 4);
  CHECK(doc["rows"][2]["operation"] == "G2");
  CHECK(doc["rows"][2]["lambda_or_bound"].get<double>() == doctest::Approx(0.25));
  CHECK(doc["rows"][2]["dim"] == "65536");
}

TEST_CASE("construct cert bounds dominate measured values") {
  CliFixture fx;
  const auto h = fx.dir / "h.qmix";
  REQUIRE(fx.run("gen-base --dim 256 --degree 2 --seed 3 --out " + h.string()).exit_code == 0);
  const auto report = fx.dir / "measured.json";
  // Short power runs: the measured values only need to stay below the certs.
  const CliResult r = fx.run("construct --base " + h.string() +
                             " --t 1 --measure --max-iter 60 --restarts 1 --seed 2 --report " +
                             report.string());
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(fx.slurp(report));
  double cert = -1.0, measured = -1.0;
  for (const auto& row : doc["rows"]) {
    if (row["operation"] == "G1" && row["method"] == "cert") {
      cert = row["lambda_or_bound"].get<double>();
    }
    if (row["operation"] == "G1 (measured)") {
      measured = row["lambda_or_bound"].get<double>();
    }
  }
  REQUIRE(cert >= 0.0);
  REQUIRE(measured >= 0.0);
  CHECK(cert >= measured - 1e-6);
}

TEST_CASE("construct rejects a base whose dimension is not degree^8") {
  CliFixture fx;
  const auto h = fx.dir / "h.qmix";
  REQUIRE(fx.run("gen-base --dim 16 --degree 2 --seed 7 --out " + h.string()).exit_code == 0);
  const CliResult r = fx.run("construct --base " + h.string() + " --t 1 --base-lambda 0.3");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("degree^8") != std::string::npos);
}

TEST_CASE("verify passes a clean file and fails a perturbed one") {
  CliFixture fx;
  const auto file = fx.dir / "h.qmix";
  REQUIRE(fx.run("gen-base --dim 4 --degree 2 --seed 13 --out " + file.string()).exit_code == 0);
  CHECK(fx.run("verify --in " + file.string() + " --seed 1").exit_code == 0);

  // Perturb one payload double.
  std::string bytes = fx.slurp(file);
  const MixedUnitaryEnsemble g = load_ensemble(file);
  const std::size_t offset = 4 + 1 + 24 + g.label().size() + 16 * 3;
  double v = 0;
  std::memcpy(&v, bytes.data() + offset, 8);
  v += 1e-2;
  std::memcpy(bytes.data() + offset, &v, 8);
  std::ofstream(file, std::ios::binary).write(bytes.data(),
                                              static_cast<std::streamsize>(bytes.size()));
  const CliResult r = fx.run("verify --in " + file.string() + " --seed 1");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("FAIL") != std::string::npos);
}

TEST_CASE("text encoding round-trips through the CLI") {
  CliFixture fx;
  const auto file = fx.dir / "g.json";
  REQUIRE(fx.run("gen-base --dim 3 --degree 2 --seed 21 --encoding text --out " +
                 file.string()).exit_code == 0);
  const CliResult r = fx.run("lambda --in " + file.string() + " --method exact");
  CHECK(r.exit_code == 0);
}

TEST_CASE("usage errors exit with status 2") {
  CliFixture fx;
  CHECK(fx.run("lambda").exit_code == 2);                    // missing --in
  CHECK(fx.run("frobnicate").exit_code == 2);                // unknown subcommand
  CHECK(fx.run("lambda --in /nonexistent.qmix").exit_code == 2);
}

}  // TEST_SUITE
