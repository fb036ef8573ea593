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

#ifndef FIXGRAPH_GRAPH_HPP_
#define FIXGRAPH_GRAPH_HPP_

#include <cstdint>
#include <istream>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace fixgraph {

using Vertex = int;

// Unordered vertex pair, always stored with first < second.
struct VertexPair {
  Vertex first = 0;
  Vertex second = 0;

  VertexPair() = default;
  VertexPair(Vertex a, Vertex b)
      : first(a < b ? a : b), second(a < b ? b : a) {}

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// Thrown by parse_edge_list. The message names the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(what + " at line " + std::to_string(line)),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Finite simple undirected graph on vertex ids 0..order-1.
class Graph {
 public:
  explicit Graph(int order);
  Graph(int order, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int order() const { return order_; }
  int edge_count() const { return edge_count_; }

  // Idempotent; rejects self-loops and out-of-range ids.
  void add_edge(Vertex u, Vertex v);

  bool adjacent(Vertex u, Vertex v) const {
    return adjacency_[static_cast<std::size_t>(u) * order_ + v] != 0;
  }
  const std::vector<Vertex>& neighbors(Vertex v) const {
    return neighbors_[v];
  }
  int degree(Vertex v) const { return static_cast<int>(neighbors_[v].size()); }

  // Edges with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.adjacency_ == b.adjacency_;
  }

 private:
  int order_;
  int edge_count_ = 0;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::vector<Vertex>> neighbors_;
};

// Edge-list text: header "n m", then m lines "u v".
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

class DistanceMatrix {
 public:
  static constexpr int kInfinite = std::numeric_limits<int>::max();

  DistanceMatrix(int order, std::vector<int> entries)
      : order_(order), entries_(std::move(entries)) {}

  int order() const { return order_; }
  int operator()(Vertex u, Vertex v) const {
    return entries_[static_cast<std::size_t>(u) * order_ + v];
  }
  // Largest finite entry.
  int diameter() const;

 private:
  int order_;
  std::vector<int> entries_;
};

DistanceMatrix distance_matrix(const Graph& g);

enum class TwinKind { kAdjacent, kNonAdjacent, kSingleton };

std::string_view to_string(TwinKind kind);

struct TwinClass {
  TwinKind kind = TwinKind::kSingleton;
  std::vector<Vertex> vertices;  // Sorted.
};

// Maximal twin classes, ordered by smallest member. Every vertex appears in
// exactly one class.
struct TwinPartition {
  std::vector<TwinClass> classes;
};

TwinPartition twin_classes(const Graph& g);

// True iff d(u,w) = d(v,w) for every w other than u and v. Unreachable
// distances compare equal to each other.
bool are_distance_similar(const DistanceMatrix& dist, Vertex u, Vertex v);
bool are_distance_similar(const Graph& g, Vertex u, Vertex v);

// Graph families. Parameters are validated by the factories.
struct SpiderArm {
  int terminal_degree = 3;
  int leg_length = 1;
};

class FamilySpec {
 public:
  struct Path { int n; };
  struct Cycle { int n; };
  struct Complete { int n; };
  struct CompleteBipartite { int m; int n; };
  struct SpiderTree { std::vector<SpiderArm> arms; };
  struct GapGraph { int k; };
  using Variant =
      std::variant<Path, Cycle, Complete, CompleteBipartite, SpiderTree,
                   GapGraph>;

  static FamilySpec path(int n);
  static FamilySpec cycle(int n);
  static FamilySpec complete(int n);
  static FamilySpec complete_bipartite(int m, int n);
  static FamilySpec spider_tree(std::vector<SpiderArm> arms);
  static FamilySpec gap_graph(int k);

  const Variant& variant() const { return value_; }
  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&value_);
  }

  // Vertex count of the generated graph.
  int order() const;
  std::string to_string() const;

 private:
  explicit FamilySpec(Variant value) : value_(std::move(value)) {}
  Variant value_;
};

// Vertex numbering:
//   Path, Cycle: in order along the path / around the cycle.
//   CompleteBipartite(m, n): part A is 0..m-1, part B is m..m+n-1.
//   SpiderTree: major vertices 0..M-1 joined in a path in listed order; then,
//     per major vertex and per leg, the leg's vertices walking outwards.
//   GapGraph(k): u_j is id j-1 for j = 1..2^k-2, w_i is id 2^k-3+i for
//     i = 1..k-1; u_j ~ w_i iff popcount(j) = i.
Graph generate(const FamilySpec& spec);

// Terminal (leaf) vertex ids of a spider tree, grouped by major vertex.
std::vector<std::vector<Vertex>> spider_terminals(const FamilySpec& spec);

// Uniform G(n, p) sample conditioned on connectivity (rejection).
Graph random_connected_graph(int order, double edge_probability,
                             std::mt19937_64& rng);

}  // namespace fixgraph

#endif  // FIXGRAPH_GRAPH_HPP_
