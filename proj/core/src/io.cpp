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

#include <bit>
#include <cstring>
#include <fstream>
#include <vector>

#include <json.hpp>

namespace qzz {

static_assert(std::endian::native == std::endian::little,
              "the binary ensemble format is little-endian; big-endian hosts "
              "would need byte swaps here");

namespace {

constexpr char kMagic[4] = {'Q', 'M', 'I', 'X'};

void write_u64(std::ostream& out, std::uint64_t v) {
  char buf[8];
  std::memcpy(buf, &v, 8);
  out.write(buf, 8);
}

std::uint64_t read_u64(std::istream& in) {
  char buf[8];
  in.read(buf, 8);
  std::uint64_t v = 0;
  std::memcpy(&v, buf, 8);
  return v;
}

MixedUnitaryEnsemble assemble(std::vector<ComplexMatrix> mats, std::string label,
                              const std::filesystem::path& path) {
  std::vector<UnitaryMatrix> us;
  us.reserve(mats.size());
  for (std::size_t i = 0; i < mats.size(); ++i) {
    try {
      us.push_back(UnitaryMatrix(std::move(mats[i])));
    } catch (const UnitarityError& e) {
      throw UnitarityError("load_ensemble: matrix " + std::to_string(i) + " of " +
                               path.string() + " is not unitary: " + e.what(),
                           static_cast<Index>(i));
    }
  }
  return MixedUnitaryEnsemble(std::move(us), std::move(label));
}

void save_binary(const MixedUnitaryEnsemble& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("save_ensemble: cannot open " + path.string() + " for writing");
  }
  out.write(kMagic, 4);
  const char version = static_cast<char>(kEnsembleFormatVersion);
  out.write(&version, 1);
  write_u64(out, static_cast<std::uint64_t>(g.dim()));
  write_u64(out, static_cast<std::uint64_t>(g.degree()));
  write_u64(out, g.label().size());
  out.write(g.label().data(), static_cast<std::streamsize>(g.label().size()));
  for (Index d = 0; d < g.degree(); ++d) {
    const ComplexMatrix& u = g.unitary(d).matrix();
    // Row-major storage: (re, im) pairs are already laid out contiguously.
    out.write(reinterpret_cast<const char*>(u.data()),
              static_cast<std::streamsize>(sizeof(Complex) * static_cast<std::size_t>(u.size())));
  }
  if (!out) {
    throw IoError("save_ensemble: write to " + path.string() + " failed");
  }
}

MixedUnitaryEnsemble load_binary(std::ifstream& in, const std::filesystem::path& path) {
  char magic[4];
  in.read(magic, 4);
  char version = 0;
  in.read(&version, 1);
  if (version != kEnsembleFormatVersion) {
    throw IoError("load_ensemble: " + path.string() + " has format version " +
                  std::to_string(static_cast<int>(version)) + ", expected " +
                  std::to_string(kEnsembleFormatVersion));
  }
  const std::uint64_t dim = read_u64(in);
  const std::uint64_t degree = read_u64(in);
  const std::uint64_t label_len = read_u64(in);
  if (!in || dim == 0 || degree == 0 || dim > (1u << 20) || degree > (1u << 20) ||
      label_len > (1u << 20)) {
    throw IoError("load_ensemble: " + path.string() + " has a corrupt header");
  }
  std::string label(label_len, '\0');
  in.read(label.data(), static_cast<std::streamsize>(label_len));
  std::vector<ComplexMatrix> mats;
  mats.reserve(degree);
  for (std::uint64_t d = 0; d < degree; ++d) {
    ComplexMatrix m(static_cast<Index>(dim), static_cast<Index>(dim));
    in.read(reinterpret_cast<char*>(m.data()),
            static_cast<std::streamsize>(sizeof(Complex) * dim * dim));
    if (!in) {
      throw IoError("load_ensemble: " + path.string() + " is truncated");
    }
    mats.push_back(std::move(m));
  }
  return assemble(std::move(mats), std::move(label), path);
}

void save_text(const MixedUnitaryEnsemble& g, const std::filesystem::path& path) {
  nlohmann::json doc;
  doc["version"] = kEnsembleFormatVersion;
  doc["dim"] = g.dim();
  doc["degree"] = g.degree();
  doc["label"] = g.label();
  nlohmann::json unitaries = nlohmann::json::array();
  for (Index d = 0; d < g.degree(); ++d) {
    const ComplexMatrix& u = g.unitary(d).matrix();
    nlohmann::json rows = nlohmann::json::array();
    for (Index i = 0; i < u.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Index j = 0; j < u.cols(); ++j) {
        row.push_back({u(i, j).real(), u(i, j).imag()});
      }
      rows.push_back(std::move(row));
    }
    unitaries.push_back(std::move(rows));
  }
  doc["unitaries"] = std::move(unitaries);
  std::ofstream out(path);
  if (!out) {
    throw IoError("save_ensemble: cannot open " + path.string() + " for writing");
  }
  out << doc.dump(1) << "\n";
  if (!out) {
    throw IoError("save_ensemble: write to " + path.string() + " failed");
  }
}

MixedUnitaryEnsemble load_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("load_ensemble: " + path.string() + " is neither a QMIX binary " +
                  "nor a valid JSON ensemble: " + e.what());
  }
  try {
    if (doc.at("version").get<int>() != kEnsembleFormatVersion) {
      throw IoError("load_ensemble: " + path.string() + " has format version " +
                    std::to_string(doc.at("version").get<int>()) + ", expected " +
                    std::to_string(kEnsembleFormatVersion));
    }
    const Index dim = doc.at("dim").get<Index>();
    const Index degree = doc.at("degree").get<Index>();
    std::string label = doc.value("label", std::string());
    const auto& unitaries = doc.at("unitaries");
    if (static_cast<Index>(unitaries.size()) != degree) {
      throw IoError("load_ensemble: " + path.string() + " lists " +
                    std::to_string(unitaries.size()) + " unitaries, header says " +
                    std::to_string(degree));
    }
    std::vector<ComplexMatrix> mats;
    mats.reserve(static_cast<std::size_t>(degree));
    for (const auto& rows : unitaries) {
      ComplexMatrix m(dim, dim);
      for (Index i = 0; i < dim; ++i) {
        for (Index j = 0; j < dim; ++j) {
          const auto& pair = rows.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
          m(i, j) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
        }
      }
      mats.push_back(std::move(m));
    }
    return assemble(std::move(mats), std::move(label), path);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("load_ensemble: " + path.string() + " is malformed: " + e.what());
  }
}

}  // namespace

void save_ensemble(const MixedUnitaryEnsemble& g, const std::filesystem::path& path,
                   Encoding encoding) {
  if (encoding == Encoding::kBinary) {
    save_binary(g, path);
  } else {
    save_text(g, path);
  }
}

MixedUnitaryEnsemble load_ensemble(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("load_ensemble: cannot open " + path.string());
  }
  char magic[4] = {0, 0, 0, 0};
  in.read(magic, 4);
  if (in && std::memcmp(magic, kMagic, 4) == 0) {
    in.seekg(0);
    return load_binary(in, path);
  }
  // Not a binary ensemble; reparse the whole file as JSON text.
  in.close();
  if (magic[0] == 'Q') {
    throw IoError("load_ensemble: " + path.string() +
                  " has a corrupt magic header (expected QMIX)");
  }
  return load_text(path);
}

}  // namespace qzz
