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

#ifndef QZZ_CONSTRUCTION_HPP
#define QZZ_CONSTRUCTION_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qzz/channel.hpp"
#include "qzz/linalg.hpp"
#include "qzz/spectral.hpp"

namespace qzz {

/// Exact positive integer kept in factored form, so that dimensions like
/// 2^240 that arise after a few recursion levels stay exact without big
/// integer arithmetic. Values are products of the factorizations of the
/// uint64 inputs they were built from.
class FactoredInt {
 public:
  FactoredInt() = default;  // == 1
  static FactoredInt of(std::uint64_t value);

  FactoredInt operator*(const FactoredInt& other) const;
  FactoredInt pow(int exponent) const;
  bool operator==(const FactoredInt& other) const { return factors_ == other.factors_; }

  bool fits_uint64() const;
  std::uint64_t as_uint64() const;  // throws Error if it does not fit
  double log2() const;

  /// "256", or "2^240" style when the value does not fit a uint64.
  std::string str() const;

 private:
  std::map<std::uint64_t, int> factors_;  // prime -> exponent
};

/// Certified spectral bound for a composed expander. The numeric bound is
/// propagated symbolically through the composition rules; no numerics are
/// attached to nodes whose ensembles were never materialized.
class ExpanderCert {
 public:
  enum class Kind { kBase, kSquare, kTensor, kZigzag };

  using Ptr = std::shared_ptr<const ExpanderCert>;

  static Ptr base(FactoredInt dim, std::uint64_t degree, double lambda_bound,
                  std::string label = "base");
  static Ptr compose(Kind kind, std::vector<Ptr> children, std::string label = "");

  Kind kind() const { return kind_; }
  const FactoredInt& dim() const { return dim_; }
  std::uint64_t degree() const { return degree_; }
  double lambda_bound() const { return lambda_bound_; }
  const std::vector<Ptr>& children() const { return children_; }
  const std::string& label() const { return label_; }

  /// Renders the provenance tree as a one-line expression.
  std::string provenance() const;

 private:
  ExpanderCert(Kind kind, FactoredInt dim, std::uint64_t degree, double bound,
               std::vector<Ptr> children, std::string label);

  Kind kind_;
  FactoredInt dim_;
  std::uint64_t degree_;
  double lambda_bound_;
  std::vector<Ptr> children_;
  std::string label_;
};

/// The composition rules for certified bounds: square -> l^2, tensor ->
/// max(l1, l2), zigzag -> min(1, l1 + l2 + l2^2). Child bounds must lie in
/// [0, 1].
double cert_bound(ExpanderCert::Kind kind, const std::vector<double>& child_bounds);

/// Ensemble of d independent Haar unitaries on dimension n; the random base
/// expander. Deterministic for a fixed seed.
MixedUnitaryEnsemble random_base(Index n, Index d, std::uint64_t seed);

/// A named generator set for word enumeration. `named_generator_set`
/// currently knows "ht": the Hadamard and T gates on dimension 2.
struct GeneratorSet {
  std::string name;
  std::vector<std::string> gate_names;
  std::vector<UnitaryMatrix> gates;
};

GeneratorSet named_generator_set(const std::string& name);

/// Finite net of unitaries with generator-word labels. `accuracy` is the
/// intended covering radius in the conjugation distance; members are kept
/// pairwise more than accuracy/2 apart, which is also the deduplication rule
/// of build_net.
struct UnitaryNet {
  Index dim = 0;
  double accuracy = 0.0;
  std::string generator_set;
  int max_word_length = 0;
  std::vector<UnitaryMatrix> members;
  std::vector<std::string> words;
};

/// Breadth-first enumeration of all generator words of length at most
/// `max_word_length` (the empty word first, then by length, generators in
/// listed order). A candidate joins the net only if its conjugation distance
/// to every present member exceeds accuracy/2.
UnitaryNet build_net(Index dim, const GeneratorSet& gens, int max_word_length,
                     double accuracy);

struct ConjugationDistance {
  double value = 0.0;
  /// False when the dimension cap forced the certified upper bound
  /// 2 min_phi ||U - e^{i phi} V||_2 instead of the exact superoperator norm.
  bool exact = true;
};

/// sup_{||X||=1} ||U X U^dag - V X V^dag||: the largest singular value of the
/// difference of the two conjugation superoperators. Zero exactly when U and
/// V agree up to a global phase. Above `cap` the exact N^2 x N^2 computation
/// is replaced by the flagged upper bound.
ConjugationDistance conjugation_distance(const UnitaryMatrix& u, const UnitaryMatrix& v,
                                         Index cap = kDefaultExactDimCap);

struct DiscretizeResult {
  MixedUnitaryEnsemble channel;
  std::vector<Index> member_indices;    // chosen net member per Kraus element
  std::vector<double> distances;        // conjugation distance of each replacement
  double max_distance = 0.0;
};

/// Replaces every Kraus unitary by its nearest net member under the
/// conjugation distance (ties to the lowest net index). The triangle
/// inequality gives lambda(G') <= lambda(G) + max_distance.
DiscretizeResult discretize(const MixedUnitaryEnsemble& g, const UnitaryNet& net);

enum class SearchMode { kExhaustive, kRandomSample };

struct NetSearchOptions {
  SearchMode mode = SearchMode::kExhaustive;
  std::uint64_t budget = 2'000'000;  // max tuples in exhaustive mode
  std::uint64_t samples = 1000;      // tuples drawn in random-sample mode
  std::uint64_t seed = 1;
};

struct NetSearchResult {
  MixedUnitaryEnsemble channel;
  SpectralEstimate estimate;
  std::vector<Index> tuple;  // net member indices, d entries
};

/// Searches ordered d-tuples of net members (with repetition) for the one
/// minimizing lambda_exact. Ties break lexicographically by member indices.
NetSearchResult net_search(Index n, Index d, const UnitaryNet& net,
                           const NetSearchOptions& opts = {});

struct GtResult {
  ExpanderCert::Ptr cert;
  std::optional<MixedUnitaryEnsemble> ensemble;  // present when the dimension fit the cap
};

/// The recursive family seeded by a base expander H on dim = degree^8:
/// G_1 = H^2, G_2 = H (x) H, and
/// G_t = (G_{ceil((t-1)/2)} (x) G_{floor((t-1)/2)})^2 (z) H for t > 2.
/// Certificates are always produced (dim D^{8t}, degree D^2); the Kraus
/// ensemble of a node is materialized only when its dimension is at most
/// `materialize_cap` and its operands were materialized too. `lambda_h` is
/// the certified (or measured) bound for H used at the leaves.
GtResult build_Gt(const MixedUnitaryEnsemble& h, double lambda_h, int t,
                  std::uint64_t materialize_cap = 4096);

/// Certificate-only variant: no ensembles, any base dimensions allowed as
/// long as dim = degree^8 holds.
ExpanderCert::Ptr build_Gt_cert(const ExpanderCert::Ptr& h, int t);

}  // namespace qzz

#endif  // QZZ_CONSTRUCTION_HPP
