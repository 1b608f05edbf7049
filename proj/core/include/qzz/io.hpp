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

#ifndef QZZ_IO_HPP
#define QZZ_IO_HPP

#include <filesystem>
#include <string>

#include "qzz/channel.hpp"

namespace qzz {

// Ensemble files come in two encodings.
//
// Binary (.qmix): magic bytes "QMIX", one version byte, dim and degree as
// 8-byte little-endian unsigned integers, the label as an 8-byte
// little-endian length followed by UTF-8 bytes, then degree * dim * dim
// complex entries as little-endian 8-byte IEEE doubles (real, imaginary) in
// row-major matrix order, matrices in ensemble order. Round-trips bit for
// bit.
//
// Text: a JSON document with keys version, dim, degree, label, unitaries,
// where unitaries is a degree-long array of dim x dim arrays of [re, im]
// pairs. Doubles are printed so that parsing recovers them exactly.
//
// Loading validates every matrix; a non-unitary payload is rejected with the
// offending matrix index.

inline constexpr int kEnsembleFormatVersion = 1;

enum class Encoding { kBinary, kText };

void save_ensemble(const MixedUnitaryEnsemble& g, const std::filesystem::path& path,
                   Encoding encoding = Encoding::kBinary);

MixedUnitaryEnsemble load_ensemble(const std::filesystem::path& path);

}  // namespace qzz

#endif  // QZZ_IO_HPP
