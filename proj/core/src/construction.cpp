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

#include "qzz/construction.hpp"

#include "qzz/zigzag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <utility>

#include <Eigen/Eigenvalues>

namespace qzz {

// ---------------------------------------------------------------------------
// FactoredInt

FactoredInt FactoredInt::of(std::uint64_t value) {
  if (value == 0) {
    throw Error("FactoredInt: zero is not representable");
  }
  FactoredInt out;
  for (std::uint64_t p = 2; p * p <= value; ++p) {
    while (value % p == 0) {
      out.factors_[p] += 1;
      value /= p;
    }
  }
  if (value > 1) {
    out.factors_[value] += 1;
  }
  return out;
}

FactoredInt FactoredInt::operator*(const FactoredInt& other) const {
  FactoredInt out = *this;
  for (const auto& [p, e] : other.factors_) {
    out.factors_[p] += e;
  }
  return out;
}

FactoredInt FactoredInt::pow(int exponent) const {
  if (exponent < 0) {
    throw Error("FactoredInt::pow: negative exponent");
  }
  FactoredInt out;
  if (exponent == 0) {
    return out;
  }
  for (const auto& [p, e] : factors_) {
    out.factors_[p] = e * exponent;
  }
  return out;
}

bool FactoredInt::fits_uint64() const {
  long double acc = 1.0L;
  for (const auto& [p, e] : factors_) {
    for (int i = 0; i < e; ++i) {
      acc *= static_cast<long double>(p);
      if (acc > static_cast<long double>(std::numeric_limits<std::uint64_t>::max())) {
        return false;
      }
    }
  }
  return true;
}

std::uint64_t FactoredInt::as_uint64() const {
  if (!fits_uint64()) {
    throw Error("FactoredInt: value " + str() + " does not fit in 64 bits");
  }
  std::uint64_t acc = 1;
  for (const auto& [p, e] : factors_) {
    for (int i = 0; i < e; ++i) {
      acc *= p;
    }
  }
  return acc;
}

double FactoredInt::log2() const {
  double acc = 0.0;
  for (const auto& [p, e] : factors_) {
    acc += e * std::log2(static_cast<double>(p));
  }
  return acc;
}

std::string FactoredInt::str() const {
  if (fits_uint64()) {
    return std::to_string(as_uint64());
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, e] : factors_) {
    if (!first) {
      out << "*";
    }
    first = false;
    out << p;
    if (e > 1) {
      out << "^" << e;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Certificates

double cert_bound(ExpanderCert::Kind kind, const std::vector<double>& child_bounds) {
  for (double b : child_bounds) {
    if (!(b >= 0.0 && b <= 1.0)) {
      throw Error("cert_bound: child bound " + std::to_string(b) +
                  " outside [0, 1]");
    }
  }
  switch (kind) {
    case ExpanderCert::Kind::kBase:
      if (child_bounds.size() != 1) {
        throw Error("cert_bound: base takes exactly one bound");
      }
      return child_bounds[0];
    case ExpanderCert::Kind::kSquare:
      if (child_bounds.size() != 1) {
        throw Error("cert_bound: square takes exactly one bound");
      }
      return child_bounds[0] * child_bounds[0];
    case ExpanderCert::Kind::kTensor:
      if (child_bounds.size() != 2) {
        throw Error("cert_bound: tensor takes exactly two bounds");
      }
      return std::max(child_bounds[0], child_bounds[1]);
    case ExpanderCert::Kind::kZigzag:
      if (child_bounds.size() != 2) {
        throw Error("cert_bound: zigzag takes exactly two bounds");
      }
      return std::min(1.0, child_bounds[0] + child_bounds[1] + child_bounds[1] * child_bounds[1]);
  }
  throw Error("cert_bound: unknown kind");
}

ExpanderCert::ExpanderCert(Kind kind, FactoredInt dim, std::uint64_t degree,
                           double bound, std::vector<Ptr> children, std::string label)
    : kind_(kind),
      dim_(std::move(dim)),
      degree_(degree),
      lambda_bound_(bound),
      children_(std::move(children)),
      label_(std::move(label)) {}

ExpanderCert::Ptr ExpanderCert::base(FactoredInt dim, std::uint64_t degree,
                                     double lambda_bound, std::string label) {
  if (!(lambda_bound >= 0.0 && lambda_bound <= 1.0)) {
    throw Error("ExpanderCert: base bound outside [0, 1]");
  }
  if (degree < 1) {
    throw Error("ExpanderCert: degree must be >= 1");
  }
  return Ptr(new ExpanderCert(Kind::kBase, std::move(dim), degree, lambda_bound,
                              {}, std::move(label)));
}

ExpanderCert::Ptr ExpanderCert::compose(Kind kind, std::vector<Ptr> children,
                                        std::string label) {
  std::vector<double> bounds;
  bounds.reserve(children.size());
  for (const Ptr& c : children) {
    if (!c) {
      throw Error("ExpanderCert: null child");
    }
    bounds.push_back(c->lambda_bound());
  }
  const double bound = cert_bound(kind, bounds);
  FactoredInt dim;
  std::uint64_t degree = 0;
  switch (kind) {
    case Kind::kBase:
      throw Error("ExpanderCert: base nodes are built with base()");
    case Kind::kSquare:
      dim = children[0]->dim();
      degree = children[0]->degree() * children[0]->degree();
      break;
    case Kind::kTensor:
      dim = children[0]->dim() * children[1]->dim();
      degree = children[0]->degree() * children[1]->degree();
      break;
    case Kind::kZigzag: {
      // G1 must be dim(V2)-regular.
      if (!(FactoredInt::of(children[0]->degree()) == children[1]->dim())) {
        throw DimensionError("ExpanderCert: zigzag needs degree(G1) = " +
                             std::to_string(children[0]->degree()) + " == dim(G2) = " +
                             children[1]->dim().str());
      }
      dim = children[0]->dim() * FactoredInt::of(children[0]->degree());
      degree = children[1]->degree() * children[1]->degree();
      break;
    }
  }
  return Ptr(new ExpanderCert(kind, std::move(dim), degree, bound,
                              std::move(children), std::move(label)));
}

std::string ExpanderCert::provenance() const {
  switch (kind_) {
    case Kind::kBase:
      return label_.empty() ? "base" : label_;
    case Kind::kSquare:
      return "square(" + children_[0]->provenance() + ")";
    case Kind::kTensor:
      return "tensor(" + children_[0]->provenance() + "," + children_[1]->provenance() + ")";
    case Kind::kZigzag:
      return "zigzag(" + children_[0]->provenance() + "," + children_[1]->provenance() + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Random base

MixedUnitaryEnsemble random_base(Index n, Index d, std::uint64_t seed) {
  if (n < 2) {
    throw DimensionError("random_base: n must be >= 2");
  }
  if (d < 1) {
    throw DimensionError("random_base: d must be >= 1");
  }
  std::vector<UnitaryMatrix> us;
  us.reserve(static_cast<std::size_t>(d));
  for (Index k = 0; k < d; ++k) {
    us.push_back(haar_unitary(n, mix_seed(seed, static_cast<std::uint64_t>(k))));
  }
  std::ostringstream label;
  label << "random_base(n=" << n << ",d=" << d << ",seed=" << seed << ")";
  return MixedUnitaryEnsemble(std::move(us), label.str());
}

// ---------------------------------------------------------------------------
// Nets

GeneratorSet named_generator_set(const std::string& name) {
  if (name == "ht") {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix h(2, 2), t(2, 2);
    h << Complex(s, 0), Complex(s, 0), Complex(s, 0), Complex(-s, 0);
    t << Complex(1, 0), Complex(0, 0), Complex(0, 0), std::polar(1.0, M_PI / 4);
    GeneratorSet out;
    out.name = "ht";
    out.gate_names = {"H", "T"};
    out.gates.push_back(UnitaryMatrix(std::move(h)));
    out.gates.push_back(UnitaryMatrix(std::move(t)));
    return out;
  }
  throw Error("named_generator_set: unknown set '" + name + "' (known: ht)");
}

UnitaryNet build_net(Index dim, const GeneratorSet& gens, int max_word_length,
                     double accuracy) {
  if (gens.gates.empty()) {
    throw Error("build_net: empty generator set");
  }
  for (const UnitaryMatrix& g : gens.gates) {
    if (g.dim() != dim) {
      throw DimensionError("build_net: generator dimension " + std::to_string(g.dim()) +
                           " does not match net dimension " + std::to_string(dim));
    }
  }
  if (max_word_length < 0) {
    throw Error("build_net: negative word length");
  }
  if (!(accuracy > 0.0)) {
    throw Error("build_net: accuracy must be positive");
  }

  UnitaryNet net;
  net.dim = dim;
  net.accuracy = accuracy;
  net.generator_set = gens.name;
  net.max_word_length = max_word_length;

  const auto consider = [&](const UnitaryMatrix& candidate, const std::string& word) {
    for (const UnitaryMatrix& member : net.members) {
      if (conjugation_distance(candidate, member).value <= accuracy / 2.0) {
        return;
      }
    }
    net.members.push_back(candidate);
    net.words.push_back(word);
  };

  // Length 0: the identity, always the first member.
  consider(UnitaryMatrix::from_validated(ComplexMatrix::Identity(dim, dim)), "I");

  // All words of each length, in generator order; no subtree pruning, so the
  // result matches a brute-force enumeration with the same dedup rule.
  std::vector<std::pair<UnitaryMatrix, std::string>> frontier;
  frontier.emplace_back(UnitaryMatrix::from_validated(ComplexMatrix::Identity(dim, dim)),
                        std::string());
  for (int len = 1; len <= max_word_length; ++len) {
    std::vector<std::pair<UnitaryMatrix, std::string>> next;
    next.reserve(frontier.size() * gens.gates.size());
    for (const auto& [word_u, word] : frontier) {
      for (std::size_t gi = 0; gi < gens.gates.size(); ++gi) {
        UnitaryMatrix extended = UnitaryMatrix::from_validated(
            gens.gates[gi].matrix() * word_u.matrix());
        const std::string extended_word = word + gens.gate_names[gi];
        consider(extended, extended_word);
        next.emplace_back(std::move(extended), extended_word);
      }
    }
    frontier = std::move(next);
  }
  return net;
}

ConjugationDistance conjugation_distance(const UnitaryMatrix& u, const UnitaryMatrix& v,
                                         Index cap) {
  if (u.dim() != v.dim()) {
    throw DimensionError("conjugation_distance: dimension mismatch");
  }
  const Index n = u.dim();
  ConjugationDistance out;
  if (n <= cap) {
    const ComplexMatrix diff = tensor(u.matrix(), u.matrix().conjugate(), n * n) -
                               tensor(v.matrix(), v.matrix().conjugate(), n * n);
    out.value = largest_singular_value(diff);
    out.exact = true;
    return out;
  }
  // Certified upper bound: 2 min_phi ||U - e^{i phi} V||_2. Since V^dag U is
  // unitary (hence normal), the spectral norm is the farthest eigenvalue from
  // e^{i phi}; the minimax phase centers the shortest arc containing all
  // eigenphases, found via the largest phase gap.
  Eigen::ComplexEigenSolver<ComplexMatrix> es(v.matrix().adjoint() * u.matrix(), false);
  std::vector<double> phases;
  phases.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    phases.push_back(std::arg(es.eigenvalues()(i)));
  }
  std::sort(phases.begin(), phases.end());
  double largest_gap = 2.0 * M_PI - (phases.back() - phases.front());
  for (std::size_t i = 1; i < phases.size(); ++i) {
    largest_gap = std::max(largest_gap, phases[i] - phases[i - 1]);
  }
  const double span = 2.0 * M_PI - largest_gap;
  out.value = 2.0 * (2.0 * std::sin(std::min(span, 2.0 * M_PI) / 4.0));
  out.exact = false;
  return out;
}

DiscretizeResult discretize(const MixedUnitaryEnsemble& g, const UnitaryNet& net) {
  if (net.members.empty()) {
    throw Error("discretize: empty net");
  }
  if (net.dim != g.dim()) {
    throw DimensionError("discretize: net dimension " + std::to_string(net.dim) +
                         " does not match channel dimension " + std::to_string(g.dim()));
  }
  std::vector<UnitaryMatrix> us;
  std::vector<Index> indices;
  std::vector<double> dists;
  us.reserve(static_cast<std::size_t>(g.degree()));
  double max_dist = 0.0;
  for (Index d = 0; d < g.degree(); ++d) {
    Index best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t m = 0; m < net.members.size(); ++m) {
      const double dist = conjugation_distance(g.unitary(d), net.members[m]).value;
      if (dist < best_dist) {  // strict: ties keep the lowest index
        best_dist = dist;
        best = static_cast<Index>(m);
      }
    }
    us.push_back(net.members[static_cast<std::size_t>(best)]);
    indices.push_back(best);
    dists.push_back(best_dist);
    max_dist = std::max(max_dist, best_dist);
  }
  DiscretizeResult out{
      MixedUnitaryEnsemble(std::move(us), "discretize(" + g.label() + ")"),
      std::move(indices), std::move(dists), max_dist};
  return out;
}

namespace {

MixedUnitaryEnsemble tuple_ensemble(const UnitaryNet& net, const std::vector<Index>& tuple) {
  std::vector<UnitaryMatrix> us;
  us.reserve(tuple.size());
  for (Index idx : tuple) {
    us.push_back(net.members[static_cast<std::size_t>(idx)]);
  }
  return MixedUnitaryEnsemble(std::move(us), "net_tuple");
}

}  // namespace

NetSearchResult net_search(Index n, Index d, const UnitaryNet& net,
                           const NetSearchOptions& opts) {
  if (net.members.empty()) {
    throw Error("net_search: empty net");
  }
  if (net.dim != n) {
    throw DimensionError("net_search: net dimension " + std::to_string(net.dim) +
                         " does not match requested dimension " + std::to_string(n));
  }
  if (d < 1) {
    throw DimensionError("net_search: d must be >= 1");
  }
  const std::uint64_t size = net.members.size();

  std::optional<std::vector<Index>> best_tuple;
  double best_lambda = std::numeric_limits<double>::infinity();
  const auto evaluate = [&](const std::vector<Index>& tuple) {
    const double lambda = lambda_exact(tuple_ensemble(net, tuple)).lambda;
    // Strict improvement keeps the lexicographically first tuple on ties,
    // because exhaustive enumeration visits tuples in lexicographic order.
    if (lambda < best_lambda) {
      best_lambda = lambda;
      best_tuple = tuple;
    }
  };

  if (opts.mode == SearchMode::kExhaustive) {
    double total = 1.0;
    for (Index i = 0; i < d; ++i) {
      total *= static_cast<double>(size);
    }
    if (total > static_cast<double>(opts.budget)) {
      throw Error("net_search: |net|^d = " + std::to_string(total) +
                  " exceeds the exhaustive-search budget " + std::to_string(opts.budget));
    }
    std::vector<Index> tuple(static_cast<std::size_t>(d), 0);
    while (true) {
      evaluate(tuple);
      // Odometer increment, most significant digit first => lexicographic order.
      Index pos = d - 1;
      while (pos >= 0) {
        tuple[static_cast<std::size_t>(pos)] += 1;
        if (tuple[static_cast<std::size_t>(pos)] < static_cast<Index>(size)) {
          break;
        }
        tuple[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) {
        break;
      }
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, size - 1);
    for (std::uint64_t s = 0; s < opts.samples; ++s) {
      std::vector<Index> tuple(static_cast<std::size_t>(d));
      for (Index i = 0; i < d; ++i) {
        tuple[static_cast<std::size_t>(i)] = static_cast<Index>(pick(rng));
      }
      evaluate(tuple);
    }
  }

  NetSearchResult out{tuple_ensemble(net, *best_tuple),
                      lambda_exact(tuple_ensemble(net, *best_tuple)), *best_tuple};
  return out;
}

// ---------------------------------------------------------------------------
// The recursion

namespace {

struct GtNode {
  ExpanderCert::Ptr cert;
  std::optional<MixedUnitaryEnsemble> ensemble;
};

class GtBuilder {
 public:
  GtBuilder(const MixedUnitaryEnsemble* h, ExpanderCert::Ptr h_cert,
            std::uint64_t materialize_cap)
      : h_(h), h_cert_(std::move(h_cert)), cap_(materialize_cap) {}

  const GtNode& get(int t) {
    auto it = memo_.find(t);
    if (it != memo_.end()) {
      return it->second;
    }
    GtNode node = build(t);
    return memo_.emplace(t, std::move(node)).first->second;
  }

 private:
  GtNode build(int t) {
    GtNode node;
    if (t == 1) {
      node.cert = ExpanderCert::compose(ExpanderCert::Kind::kSquare, {h_cert_}, "G1");
      if (h_ && fits(node.cert)) {
        node.ensemble = square(*h_);
      }
      return node;
    }
    if (t == 2) {
      node.cert = ExpanderCert::compose(ExpanderCert::Kind::kTensor, {h_cert_, h_cert_}, "G2");
      if (h_ && fits(node.cert)) {
        node.ensemble = tensor_channels(*h_, *h_, static_cast<Index>(cap_));
      }
      return node;
    }
    const GtNode& left = get((t - 1 + 1) / 2);   // ceil((t-1)/2)
    const GtNode& right = get((t - 1) / 2);      // floor((t-1)/2)
    ExpanderCert::Ptr tensor_cert =
        ExpanderCert::compose(ExpanderCert::Kind::kTensor, {left.cert, right.cert});
    ExpanderCert::Ptr square_cert =
        ExpanderCert::compose(ExpanderCert::Kind::kSquare, {tensor_cert});
    node.cert = ExpanderCert::compose(ExpanderCert::Kind::kZigzag, {square_cert, h_cert_},
                                      "G" + std::to_string(t));
    if (h_ && left.ensemble && right.ensemble && fits(node.cert)) {
      const MixedUnitaryEnsemble squared =
          square(tensor_channels(*left.ensemble, *right.ensemble, static_cast<Index>(cap_)));
      node.ensemble = zigzag(squared, *h_, static_cast<Index>(cap_));
    }
    return node;
  }

  bool fits(const ExpanderCert::Ptr& cert) const {
    return cert->dim().fits_uint64() && cert->dim().as_uint64() <= cap_;
  }

  const MixedUnitaryEnsemble* h_;
  ExpanderCert::Ptr h_cert_;
  std::uint64_t cap_;
  std::map<int, GtNode> memo_;
};

void check_base_shape(const FactoredInt& dim, std::uint64_t degree) {
  if (!(FactoredInt::of(degree).pow(8) == dim)) {
    throw DimensionError("build_Gt: base expander must satisfy dim = degree^8 (got dim = " +
                         dim.str() + ", degree = " + std::to_string(degree) + ")");
  }
}

}  // namespace

GtResult build_Gt(const MixedUnitaryEnsemble& h, double lambda_h, int t,
                  std::uint64_t materialize_cap) {
  if (t < 1) {
    throw Error("build_Gt: t must be >= 1");
  }
  const FactoredInt dim = FactoredInt::of(static_cast<std::uint64_t>(h.dim()));
  check_base_shape(dim, static_cast<std::uint64_t>(h.degree()));
  ExpanderCert::Ptr h_cert = ExpanderCert::base(
      dim, static_cast<std::uint64_t>(h.degree()), lambda_h,
      h.label().empty() ? "H" : h.label());
  GtBuilder builder(&h, std::move(h_cert), materialize_cap);
  const GtNode& node = builder.get(t);
  return GtResult{node.cert, node.ensemble};
}

ExpanderCert::Ptr build_Gt_cert(const ExpanderCert::Ptr& h, int t) {
  if (!h) {
    throw Error("build_Gt_cert: null base certificate");
  }
  if (t < 1) {
    throw Error("build_Gt_cert: t must be >= 1");
  }
  check_base_shape(h->dim(), h->degree());
  GtBuilder builder(nullptr, h, 0);
  return builder.get(t).cert;
}

}  // namespace qzz
