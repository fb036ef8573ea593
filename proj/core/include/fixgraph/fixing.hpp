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

#ifndef FIXGRAPH_FIXING_HPP_
#define FIXGRAPH_FIXING_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "fixgraph/automorphism.hpp"
#include "fixgraph/graph.hpp"
#include "fixgraph/rational.hpp"

namespace fixgraph {

// f-set of the pair {u, v}: every x such that no automorphism fixing x maps
// u to v or v to u. Empty when u and v are not similar.
std::vector<Vertex> fix_pair(const Graph& g, const AutomorphismGroup& grp,
                             Vertex u, Vertex v);

// Fixed neighborhood F(x): the similar pairs that x fixes.
std::vector<VertexPair> fixed_neighborhood(const Graph& g,
                                           const AutomorphismGroup& grp,
                                           Vertex x);

// Bipartite incidence between S(G) (vertices in non-trivial orbits) and
// V_s(G) (similar pairs): x is joined to {u,v} when x fixes the pair.
struct FixingGraphView {
  std::vector<Vertex> left;
  std::vector<VertexPair> right;
  // fixes[i] lists, sorted, the indices into `right` fixed by left[i].
  std::vector<std::vector<int>> fixes;

  std::int64_t edge_count() const;
  // Index into `left`, or -1 when v is a fixed vertex.
  int left_index(Vertex v) const;
  // Index into `right`, or -1 when the pair is not similar.
  int right_index(VertexPair p) const;
};

FixingGraphView build_fixing_graph(const Graph& g,
                                   const AutomorphismGroup& grp);

struct EdgeBoundCheck {
  bool holds = false;
  std::int64_t edges = 0;
  std::int64_t bound = 0;  // n * (C(n,2) - k + 1)
  std::int64_t slack = 0;  // bound - edges
};

// Checks |E(F(G))| <= n (C(n,2) - k + 1) with k the fixing number.
EdgeBoundCheck verify_edge_bound(const FixingGraphView& view, int k, int n);

// Pointwise stabilizer of d is trivial.
bool is_fixing_set(const AutomorphismGroup& grp, std::span<const Vertex> d);

// Any two elements agreeing on e agree everywhere. Checked directly on pairs
// of elements (bucketed by their restriction to e), not via stabilizers.
bool is_determining_set(const AutomorphismGroup& grp,
                        std::span<const Vertex> e);

struct FixingNumber {
  int size = 0;
  std::vector<Vertex> set;  // lexicographically least optimum, sorted
};

// Exact minimum cover of V_s(G) by fixed neighborhoods. The twin-class bound
// sum(|class| - 1) seeds the search.
FixingNumber fixing_number(const Graph& g, const AutomorphismGroup& grp);

// Every minimum cover of V_s(G), sorted lexicographically. Stops after
// `limit` sets.
std::vector<std::vector<Vertex>> minimum_fixing_sets(
    const Graph& g, const AutomorphismGroup& grp,
    std::size_t limit = 100'000);

// dtr(G): 0 for a trivial group, otherwise one more than the largest fixed
// point set of a non-identity element. A set fails to determine exactly when
// it lies inside Fix(g) for some g != id, since g and h agree on S iff
// h^-1 g fixes S pointwise.
int determined_number(const AutomorphismGroup& grp);

// Smallest k for which every k-subset passes is_determining_set. Exponential;
// limited to degree <= 16.
int determined_number_by_subsets(const AutomorphismGroup& grp);

struct ShareReport {
  std::vector<Vertex> fixing_set;
  std::map<Vertex, Rational> shares;
  // |F(u,v)|: vertices of the fixing set whose fixed neighborhood holds the
  // pair. Only pairs with at least one fixer appear.
  std::map<VertexPair, int> fixer_count;
  std::map<VertexPair, Vertex> sole_fixers;
  // Similar pairs fixed by no vertex of the fixing set.
  std::vector<VertexPair> unfixed_pairs;
  Rational f_sum;
  Rational f_percent;
};

// Shares of a minimum fixing set; the canonical one from fixing_number when
// `d` is not given. Throws std::invalid_argument when the group is trivial or
// `d` is not a minimum fixing set.
ShareReport share_report(const Graph& g, const AutomorphismGroup& grp,
                         std::optional<std::span<const Vertex>> d = {});

inline constexpr int kMetricDimensionMaxOrder = 10;

// Brute force over subsets by increasing size. Requires a connected graph
// of order <= kMetricDimensionMaxOrder.
int metric_dimension(const Graph& g);

}  // namespace fixgraph

#endif  // FIXGRAPH_FIXING_HPP_
