// Copyright 2026 The fixgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FIXGRAPH_THEOREMS_HPP_
#define FIXGRAPH_THEOREMS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fixgraph/fixing.hpp"
#include "fixgraph/graph.hpp"
#include "fixgraph/rational.hpp"

namespace fixgraph {

// Closed-form f-set of a similar pair in a path, cycle, complete or complete
// bipartite graph (generated with the numbering of `generate`). For
// K_{m,n} with m != n a cross pair is not similar and the result is empty.
// Throws std::invalid_argument for other families, for u == v, and for path
// pairs that are not mirror images.
std::vector<Vertex> closed_fix_pair(const FamilySpec& spec, Vertex u,
                                    Vertex v);

// Closed-form fixing shares for the fixing set D named by the theorems:
//   Complete(n >= 3): D = {0..n-2}, each share n/2.
//   Path(n >= 2):     D = {0}, share floor(n/2).
//   Cycle(n >= 4):    D = {0, 1} (adjacent, hence not antipodal),
//                     each share C(n,2)/2.
//   SpiderTree:       D = all terminal vertices but the last of each major
//                     vertex, each share (orbit size)/2 where the orbit is
//                     the terminal set of its major vertex.
struct ClosedShare {
  std::vector<Vertex> fixing_set;
  std::map<Vertex, Rational> shares;
  std::optional<Rational> f_sum;
  std::optional<Rational> f_percent;
};

ClosedShare closed_share(const FamilySpec& spec);

struct VerificationInstance {
  std::string parameters;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::string theorem_id;
  std::vector<VerificationInstance> instances;

  bool overall() const;
  std::size_t failures() const;
  void add(std::string parameters, std::string expected, std::string computed,
           bool pass);
};

struct IntRange {
  int first = 0;
  int last = -1;  // inclusive; empty when last < first
};

enum class TheoremId {
  kFixPairClosedForms,        // "fixpair"
  kShareClosedForms,          // "share"
  kDistanceSimilarity,        // fix(u,v) = {u,v} iff distance similar
  kFixingAtMostMetricDim,     // "dim"
};

struct FamilyRanges {
  IntRange path{2, 12};
  IntRange cycle{4, 12};
  IntRange complete{3, 9};
  int bipartite_max = 5;  // K_{m,n} for 1 <= m, n <= bipartite_max
  std::vector<std::vector<SpiderArm>> spiders = {
      {{3, 1}}, {{3, 2}}, {{3, 1}, {4, 1}}};
  int random_graphs = 200;
  int random_max_order = 8;
  std::uint64_t seed = 20260415;
};

// Compares the definitional computation against the closed forms (or, for
// the property theorems, against the brute-force other side) over every
// instance in the ranges. Failures are recorded, never thrown.
VerificationReport verify_family(TheoremId theorem,
                                 const FamilyRanges& ranges = {});

inline constexpr int kGapMaxEnumerableK = 4;

// Det = 2^k - (k+1), dtr = 2^k + k - 4 and gap = 2k - 3 for GapGraph(k),
// plus: every N with max{3, (N+3)/2} <= k gets gap >= N. Throws
// CapacityError for k > kGapMaxEnumerableK.
VerificationReport verify_gap_construction(
    int k, std::size_t cap = AutomorphismGroup::kDefaultCap);

struct CorpusEntry {
  std::string name;
  Graph graph;
};

// Every family graph of order <= max_order followed by `random_count`
// pseudo-random connected graphs of order 2..max_order from `seed`.
std::vector<CorpusEntry> desk_corpus(int random_count = 200,
                                     int max_order = 8,
                                     std::uint64_t seed = 20260415);

// For each similar pair {u,v} and each x with d(u,x) = d(v,x), records
// whether x lies outside fix(u,v). Informational; nothing is asserted.
VerificationReport audit_lemma_equidistant(
    const std::vector<CorpusEntry>& corpus);

std::string format_vertex_set(const std::vector<Vertex>& set);

}  // namespace fixgraph

#endif  // FIXGRAPH_THEOREMS_HPP_
