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

#include "fixgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <sstream>

namespace fixgraph {

Graph::Graph(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("graph order must be at least 1");
  adjacency_.assign(static_cast<std::size_t>(order) * order, 0);
  neighbors_.resize(order);
}

Graph::Graph(int order, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : Graph(order) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= order_ || v >= order_) {
    throw std::invalid_argument("vertex id out of range");
  }
  if (u == v) throw std::invalid_argument("self-loop");
  if (adjacent(u, v)) return;
  adjacency_[static_cast<std::size_t>(u) * order_ + v] = 1;
  adjacency_[static_cast<std::size_t>(v) * order_ + u] = 1;
  auto insert_sorted = [](std::vector<Vertex>& list, Vertex x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(neighbors_[u], v);
  insert_sorted(neighbors_[v], u);
  ++edge_count_;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> result;
  result.reserve(edge_count_);
  for (Vertex u = 0; u < order_; ++u) {
    for (Vertex v : neighbors_[u]) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

bool Graph::is_connected() const {
  std::vector<bool> seen(order_, false);
  std::vector<Vertex> stack = {0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : neighbors_[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == order_;
}

namespace {

// Splits a line into whitespace-separated integer tokens. Returns false on
// any non-integer token.
bool parse_ints(const std::string& line, std::vector<long long>& out) {
  out.clear();
  std::istringstream tokens(line);
  std::string token;
  while (tokens >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      return false;
    }
    if (used != token.size()) return false;
    out.push_back(value);
  }
  return true;
}

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::vector<long long> fields;
  int line_number = 0;

  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  ++line_number;
  if (!parse_ints(line, fields) || fields.size() != 2) {
    throw ParseError(line_number, "malformed header (expected \"n m\")");
  }
  const long long n = fields[0];
  const long long m = fields[1];
  if (n < 1 || n > 1'000'000) throw ParseError(line_number, "invalid order");
  if (m < 0) throw ParseError(line_number, "invalid edge count");

  Graph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    if (!std::getline(in, line)) {
      throw ParseError(line_number + 1, "missing edge line");
    }
    ++line_number;
    if (!parse_ints(line, fields) || fields.size() != 2) {
      throw ParseError(line_number, "malformed edge (expected \"u v\")");
    }
    const long long u = fields[0];
    const long long v = fields[1];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError(line_number, "vertex id out of range");
    }
    if (u == v) throw ParseError(line_number, "self-loop");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  while (std::getline(in, line)) {
    ++line_number;
    if (!is_blank(line)) throw ParseError(line_number, "unexpected content");
  }
  return g;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

int DistanceMatrix::diameter() const {
  int best = 0;
  for (int d : entries_) {
    if (d != kInfinite) best = std::max(best, d);
  }
  return best;
}

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<int> entries(static_cast<std::size_t>(n) * n,
                           DistanceMatrix::kInfinite);
  std::deque<Vertex> queue;
  for (Vertex source = 0; source < n; ++source) {
    int* row = &entries[static_cast<std::size_t>(source) * n];
    row[source] = 0;
    queue.assign(1, source);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbors(u)) {
        if (row[v] == DistanceMatrix::kInfinite) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return DistanceMatrix(n, std::move(entries));
}

std::string_view to_string(TwinKind kind) {
  switch (kind) {
    case TwinKind::kAdjacent:
      return "adjacent";
    case TwinKind::kNonAdjacent:
      return "nonadjacent";
    case TwinKind::kSingleton:
      return "singleton";
  }
  return "unknown";
}

TwinPartition twin_classes(const Graph& g) {
  const int n = g.order();
  auto closed = [&](Vertex v) {
    std::vector<Vertex> nb = g.neighbors(v);
    nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
    return nb;
  };

  // The union of both twin relations is an equivalence whose classes are
  // cliques (adjacent twins) or independent sets (non-adjacent twins).
  std::vector<int> class_of(n, -1);
  TwinPartition partition;
  for (Vertex u = 0; u < n; ++u) {
    if (class_of[u] >= 0) continue;
    TwinClass cls;
    cls.vertices.push_back(u);
    const auto closed_u = closed(u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (class_of[v] >= 0) continue;
      if (g.adjacent(u, v)) {
        if (closed(v) == closed_u) {
          cls.kind = TwinKind::kAdjacent;
          cls.vertices.push_back(v);
        }
      } else if (g.neighbors(v) == g.neighbors(u)) {
        cls.kind = TwinKind::kNonAdjacent;
        cls.vertices.push_back(v);
      }
    }
    for (Vertex v : cls.vertices) {
      class_of[v] = static_cast<int>(partition.classes.size());
    }
    partition.classes.push_back(std::move(cls));
  }
  return partition;
}

bool are_distance_similar(const DistanceMatrix& dist, Vertex u, Vertex v) {
  if (u == v) {
    throw std::invalid_argument("distance similarity needs distinct vertices");
  }
  for (Vertex w = 0; w < dist.order(); ++w) {
    if (w == u || w == v) continue;
    if (dist(u, w) != dist(v, w)) return false;
  }
  return true;
}

bool are_distance_similar(const Graph& g, Vertex u, Vertex v) {
  return are_distance_similar(distance_matrix(g), u, v);
}

FamilySpec FamilySpec::path(int n) {
  if (n < 2) throw std::invalid_argument("path needs n >= 2");
  return FamilySpec(Path{n});
}

FamilySpec FamilySpec::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  return FamilySpec(Cycle{n});
}

FamilySpec FamilySpec::complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  return FamilySpec(Complete{n});
}

FamilySpec FamilySpec::complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("complete bipartite graph needs m, n >= 1");
  }
  return FamilySpec(CompleteBipartite{m, n});
}

FamilySpec FamilySpec::spider_tree(std::vector<SpiderArm> arms) {
  if (arms.empty()) throw std::invalid_argument("spider needs a major vertex");
  std::vector<int> degrees;
  for (const SpiderArm& arm : arms) {
    if (arm.terminal_degree < 3) {
      throw std::invalid_argument("spider terminal degree must be >= 3");
    }
    if (arm.leg_length < 1) {
      throw std::invalid_argument("spider leg length must be >= 1");
    }
    degrees.push_back(arm.terminal_degree);
  }
  std::sort(degrees.begin(), degrees.end());
  if (std::adjacent_find(degrees.begin(), degrees.end()) != degrees.end()) {
    throw std::invalid_argument("spider terminal degrees must be distinct");
  }
  return FamilySpec(SpiderTree{std::move(arms)});
}

FamilySpec FamilySpec::gap_graph(int k) {
  if (k < 3) throw std::invalid_argument("gap graph needs k >= 3");
  if (k > 20) throw std::invalid_argument("gap graph k too large");
  return FamilySpec(GapGraph{k});
}

int FamilySpec::order() const {
  struct Visitor {
    int operator()(const Path& s) const { return s.n; }
    int operator()(const Cycle& s) const { return s.n; }
    int operator()(const Complete& s) const { return s.n; }
    int operator()(const CompleteBipartite& s) const { return s.m + s.n; }
    int operator()(const SpiderTree& s) const {
      int total = static_cast<int>(s.arms.size());
      for (const SpiderArm& arm : s.arms) {
        total += arm.terminal_degree * arm.leg_length;
      }
      return total;
    }
    int operator()(const GapGraph& s) const { return (1 << s.k) + s.k - 3; }
  };
  return std::visit(Visitor{}, value_);
}

std::string FamilySpec::to_string() const {
  struct Visitor {
    std::string operator()(const Path& s) const {
      return "Path(" + std::to_string(s.n) + ")";
    }
    std::string operator()(const Cycle& s) const {
      return "Cycle(" + std::to_string(s.n) + ")";
    }
    std::string operator()(const Complete& s) const {
      return "Complete(" + std::to_string(s.n) + ")";
    }
    std::string operator()(const CompleteBipartite& s) const {
      return "CompleteBipartite(" + std::to_string(s.m) + "," +
             std::to_string(s.n) + ")";
    }
    std::string operator()(const SpiderTree& s) const {
      std::string out = "SpiderTree(";
      for (std::size_t i = 0; i < s.arms.size(); ++i) {
        if (i > 0) out += ",";
        out += "(" + std::to_string(s.arms[i].terminal_degree) + "," +
               std::to_string(s.arms[i].leg_length) + ")";
      }
      return out + ")";
    }
    std::string operator()(const GapGraph& s) const {
      return "GapGraph(" + std::to_string(s.k) + ")";
    }
  };
  return std::visit(Visitor{}, value_);
}

Graph generate(const FamilySpec& spec) {
  Graph g(spec.order());
  const int n = g.order();
  if (spec.get_if<FamilySpec::Path>()) {
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  } else if (spec.get_if<FamilySpec::Cycle>()) {
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  } else if (spec.get_if<FamilySpec::Complete>()) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
  } else if (const auto* kmn = spec.get_if<FamilySpec::CompleteBipartite>()) {
    for (Vertex a = 0; a < kmn->m; ++a) {
      for (Vertex b = 0; b < kmn->n; ++b) g.add_edge(a, kmn->m + b);
    }
  } else if (const auto* spider = spec.get_if<FamilySpec::SpiderTree>()) {
    const int majors = static_cast<int>(spider->arms.size());
    for (Vertex v = 0; v + 1 < majors; ++v) g.add_edge(v, v + 1);
    Vertex next = majors;
    for (Vertex major = 0; major < majors; ++major) {
      const SpiderArm& arm = spider->arms[major];
      for (int leg = 0; leg < arm.terminal_degree; ++leg) {
        Vertex previous = major;
        for (int step = 0; step < arm.leg_length; ++step) {
          g.add_edge(previous, next);
          previous = next++;
        }
      }
    }
  } else if (const auto* gap = spec.get_if<FamilySpec::GapGraph>()) {
    const int u_count = (1 << gap->k) - 2;
    for (int j = 1; j <= u_count; ++j) {
      const int weight = std::popcount(static_cast<unsigned>(j));
      g.add_edge(j - 1, u_count + weight - 1);
    }
  }
  return g;
}

std::vector<std::vector<Vertex>> spider_terminals(const FamilySpec& spec) {
  const auto* spider = spec.get_if<FamilySpec::SpiderTree>();
  if (spider == nullptr) throw std::invalid_argument("not a spider tree");
  std::vector<std::vector<Vertex>> result;
  Vertex next = static_cast<Vertex>(spider->arms.size());
  for (const SpiderArm& arm : spider->arms) {
    std::vector<Vertex> leaves;
    for (int leg = 0; leg < arm.terminal_degree; ++leg) {
      next += arm.leg_length;
      leaves.push_back(next - 1);
    }
    result.push_back(std::move(leaves));
  }
  return result;
}

Graph random_connected_graph(int order, double edge_probability,
                             std::mt19937_64& rng) {
  if (order < 1) throw std::invalid_argument("graph order must be at least 1");
  if (edge_probability <= 0.0 && order > 1) {
    throw std::invalid_argument("edge probability must be positive");
  }
  std::bernoulli_distribution coin(edge_probability);
  for (;;) {
    Graph g(order);
    for (Vertex u = 0; u < order; ++u) {
      for (Vertex v = u + 1; v < order; ++v) {
        if (coin(rng)) g.add_edge(u, v);
      }
    }
    if (g.is_connected()) return g;
  }
}

}  // namespace fixgraph
