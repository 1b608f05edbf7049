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

#include "qzz/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <vector>

#include "qzz/construction.hpp"
#include "oracles.hpp"

using namespace qzz;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("qzz_io_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
};

std::vector<unsigned char> slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::vector<unsigned char>((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
}

void spit(const std::filesystem::path& p, const std::vector<unsigned char>& bytes) {
  std::ofstream out(p, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

bool entries_bit_identical(const MixedUnitaryEnsemble& a, const MixedUnitaryEnsemble& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree()) {
    return false;
  }
  for (Index d = 0; d < a.degree(); ++d) {
    const ComplexMatrix& ma = a.unitary(d).matrix();
    const ComplexMatrix& mb = b.unitary(d).matrix();
    if (std::memcmp(ma.data(), mb.data(),
                    sizeof(Complex) * static_cast<std::size_t>(ma.size())) != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("the binary layout of the identity ensemble is byte-exact") {
  TempDir tmp;
  const auto file = tmp.path / "id.qmix";
  save_ensemble(identity_ensemble(2), file, Encoding::kBinary);
  const auto bytes = slurp(file);
  // magic + version + dim + degree + label length ("identity(2)" = 11 bytes)
  // + label + 4 complex entries.
  REQUIRE(bytes.size() == 4 + 1 + 8 + 8 + 8 + 11 + 4 * 16);
  CHECK(std::memcmp(bytes.data(), "QMIX", 4) == 0);
  CHECK(bytes[4] == 1);
  std::uint64_t dim = 0, degree = 0, label_len = 0;
  std::memcpy(&dim, bytes.data() + 5, 8);
  std::memcpy(&degree, bytes.data() + 13, 8);
  std::memcpy(&label_len, bytes.data() + 21, 8);
  CHECK(dim == 2);
  CHECK(degree == 1);
  CHECK(label_len == 11);
  const double expect[8] = {1, 0, 0, 0, 0, 0, 1, 0};  // (1,0),(0,0),(0,0),(1,0)
  double got[8];
  std::memcpy(got, bytes.data() + 29 + 11, sizeof(got));
  for (int i = 0; i < 8; ++i) {
    CHECK(got[i] == expect[i]);
  }
}

TEST_CASE("binary round-trips are bitwise identical") {
  TempDir tmp;
  const auto file = tmp.path / "haar.qmix";
  const MixedUnitaryEnsemble g = random_base(3, 2, 99);
  save_ensemble(g, file, Encoding::kBinary);
  const MixedUnitaryEnsemble back = load_ensemble(file);
  CHECK(entries_bit_identical(g, back));
  CHECK(back.label() == g.label());
}

TEST_CASE("text round-trips recover every entry exactly") {
  TempDir tmp;
  const auto file = tmp.path / "haar.json";
  const MixedUnitaryEnsemble g = random_base(3, 2, 101);
  save_ensemble(g, file, Encoding::kText);
  const MixedUnitaryEnsemble back = load_ensemble(file);
  CHECK(entries_bit_identical(g, back));
  CHECK(back.label() == g.label());
}

TEST_CASE("a corrupted magic header is rejected with the path in the message") {
  TempDir tmp;
  const auto file = tmp.path / "bad_magic.qmix";
  save_ensemble(identity_ensemble(2), file, Encoding::kBinary);
  auto bytes = slurp(file);
  bytes[2] = 'Z';  // "QMZX"
  spit(file, bytes);
  CHECK_THROWS_WITH_AS(load_ensemble(file), doctest::Contains("bad_magic.qmix"), IoError);
}

TEST_CASE("an unknown format version is rejected") {
  TempDir tmp;
  const auto file = tmp.path / "bad_version.qmix";
  save_ensemble(identity_ensemble(2), file, Encoding::kBinary);
  auto bytes = slurp(file);
  bytes[4] = 9;
  spit(file, bytes);
  CHECK_THROWS_WITH_AS(load_ensemble(file), doctest::Contains("version"), IoError);
}

TEST_CASE("a perturbed payload entry fails unitarity with the matrix index") {
  TempDir tmp;
  const auto file = tmp.path / "perturbed.qmix";
  const MixedUnitaryEnsemble g = random_base(3, 2, 103);
  save_ensemble(g, file, Encoding::kBinary);
  auto bytes = slurp(file);
  // Perturb the real part of the first entry of matrix 1.
  const std::size_t label_len = g.label().size();
  const std::size_t offset = 4 + 1 + 8 + 8 + 8 + label_len + 9 * 16;
  double v = 0;
  std::memcpy(&v, bytes.data() + offset, 8);
  v += 1e-3;
  std::memcpy(bytes.data() + offset, &v, 8);
  spit(file, bytes);
  try {
    load_ensemble(file);
    FAIL("expected UnitarityError");
  } catch (const UnitarityError& e) {
    CHECK(e.kraus_index == 1);
    CHECK(std::string(e.what()).find("matrix 1") != std::string::npos);
  }
}

TEST_CASE("loading a missing or malformed file raises IoError") {
  TempDir tmp;
  CHECK_THROWS_AS(load_ensemble(tmp.path / "nope.qmix"), IoError);
  const auto junk = tmp.path / "junk.json";
  std::ofstream(junk) << "{ not json";
  CHECK_THROWS_AS(load_ensemble(junk), IoError);
}

TEST_CASE("truncated binary payloads are rejected") {
  TempDir tmp;
  const auto file = tmp.path / "trunc.qmix";
  save_ensemble(identity_ensemble(2), file, Encoding::kBinary);
  auto bytes = slurp(file);
  bytes.resize(bytes.size() - 8);
  spit(file, bytes);
  CHECK_THROWS_AS(load_ensemble(file), IoError);
}

}  // TEST_SUITE
