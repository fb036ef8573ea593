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

#include "fixgraph/fixing.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include <boost/dynamic_bitset.hpp>
#include <boost/functional/hash.hpp>

namespace fixgraph {

namespace {

using PairMask = boost::dynamic_bitset<>;

void check_vertex(const AutomorphismGroup& grp, Vertex v) {
  if (v < 0 || v >= grp.degree()) {
    throw std::invalid_argument("vertex id out of range");
  }
}

void check_order(const Graph& g, const AutomorphismGroup& grp) {
  if (g.order() != grp.degree()) {
    throw std::invalid_argument("group does not act on this graph");
  }
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

// x fixes {u,v} iff u and v lie in different orbits of the stabilizer of x:
// some h in Stab(x) maps u to v exactly when h^-1 (also in Stab(x)) maps v
// to u.
std::vector<UnionFind> stabilizer_orbits(const AutomorphismGroup& grp,
                                         const std::vector<Vertex>& points) {
  const int n = grp.degree();
  std::vector<int> slot(n, -1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    slot[points[i]] = static_cast<int>(i);
  }
  std::vector<UnionFind> orbits(points.size(), UnionFind(n));
  for (std::size_t e = 1; e < grp.size(); ++e) {
    auto h = grp.element(e);
    for (Vertex x = 0; x < n; ++x) {
      if (h[x] != x || slot[x] < 0) continue;
      UnionFind& uf = orbits[slot[x]];
      for (Vertex v = 0; v < n; ++v) {
        if (h[v] != v) uf.unite(v, h[v]);
      }
    }
  }
  return orbits;
}

}  // namespace

std::vector<Vertex> fix_pair(const Graph& g, const AutomorphismGroup& grp,
                             Vertex u, Vertex v) {
  check_order(g, grp);
  check_vertex(grp, u);
  check_vertex(grp, v);
  if (u == v) throw std::invalid_argument("fix_pair needs distinct vertices");

  bool similar = false;
  for (std::size_t e = 0; e < grp.size() && !similar; ++e) {
    similar = grp.element(e)[u] == v;
  }
  if (!similar) return {};

  std::vector<Vertex> result;
  for (Vertex x = 0; x < grp.degree(); ++x) {
    bool fixes = true;
    for (std::size_t e = 0; e < grp.size() && fixes; ++e) {
      auto h = grp.element(e);
      if (h[x] == x && (h[u] == v || h[v] == u)) fixes = false;
    }
    if (fixes) result.push_back(x);
  }
  return result;
}

std::vector<VertexPair> fixed_neighborhood(const Graph& g,
                                           const AutomorphismGroup& grp,
                                           Vertex x) {
  check_order(g, grp);
  check_vertex(grp, x);
  const OrbitPartition orbits = orbit_partition(grp);
  auto stab = stabilizer_orbits(grp, {x});
  std::vector<VertexPair> result;
  for (const VertexPair& p : similar_pairs(orbits)) {
    if (stab[0].find(p.first) != stab[0].find(p.second)) result.push_back(p);
  }
  return result;
}

std::int64_t FixingGraphView::edge_count() const {
  std::int64_t total = 0;
  for (const auto& row : fixes) total += static_cast<std::int64_t>(row.size());
  return total;
}

int FixingGraphView::left_index(Vertex v) const {
  auto it = std::lower_bound(left.begin(), left.end(), v);
  if (it == left.end() || *it != v) return -1;
  return static_cast<int>(it - left.begin());
}

int FixingGraphView::right_index(VertexPair p) const {
  auto it = std::lower_bound(right.begin(), right.end(), p);
  if (it == right.end() || *it != p) return -1;
  return static_cast<int>(it - right.begin());
}

FixingGraphView build_fixing_graph(const Graph& g,
                                   const AutomorphismGroup& grp) {
  check_order(g, grp);
  const OrbitPartition orbits = orbit_partition(grp);
  FixingGraphView view;
  view.left = nontrivial_orbit_vertices(orbits);
  view.right = similar_pairs(orbits);
  auto stab = stabilizer_orbits(grp, view.left);
  view.fixes.resize(view.left.size());
  for (std::size_t i = 0; i < view.left.size(); ++i) {
    for (std::size_t j = 0; j < view.right.size(); ++j) {
      const VertexPair& p = view.right[j];
      if (stab[i].find(p.first) != stab[i].find(p.second)) {
        view.fixes[i].push_back(static_cast<int>(j));
      }
    }
  }
  return view;
}

EdgeBoundCheck verify_edge_bound(const FixingGraphView& view, int k, int n) {
  EdgeBoundCheck check;
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  check.edges = view.edge_count();
  check.bound = static_cast<std::int64_t>(n) * (pairs - k + 1);
  check.slack = check.bound - check.edges;
  check.holds = check.edges <= check.bound;
  return check;
}

bool is_fixing_set(const AutomorphismGroup& grp, std::span<const Vertex> d) {
  for (Vertex x : d) check_vertex(grp, x);
  for (std::size_t e = 1; e < grp.size(); ++e) {
    auto h = grp.element(e);
    if (std::all_of(d.begin(), d.end(), [&](Vertex x) { return h[x] == x; })) {
      return false;
    }
  }
  return true;
}

bool is_determining_set(const AutomorphismGroup& grp,
                        std::span<const Vertex> e) {
  for (Vertex x : e) check_vertex(grp, x);
  struct RangeHash {
    std::size_t operator()(const std::vector<Vertex>& key) const {
      return boost::hash_range(key.begin(), key.end());
    }
  };
  // Restriction to e -> first element seen with that restriction.
  std::unordered_map<std::vector<Vertex>, std::size_t, RangeHash> seen;
  std::vector<Vertex> key(e.size());
  for (std::size_t i = 0; i < grp.size(); ++i) {
    auto g = grp.element(i);
    for (std::size_t j = 0; j < e.size(); ++j) key[j] = g[e[j]];
    auto [it, inserted] = seen.emplace(key, i);
    if (inserted) continue;
    auto h = grp.element(it->second);
    if (!std::equal(g.begin(), g.end(), h.begin())) return false;
  }
  return true;
}

namespace {

// Minimum cover of the fixing graph's right side.
class CoverSearch {
 public:
  CoverSearch(const Graph& g, const FixingGraphView& view)
      : view_(view), universe_(view.right.size()) {
    for (const auto& row : view.fixes) {
      PairMask mask(universe_);
      for (int j : row) mask.set(j);
      max_mask_ = std::max(max_mask_, mask.count());
      masks_.push_back(std::move(mask));
    }
    // Twin classes of size m need m - 1 members in every fixing set.
    twin_of_.assign(view.left.size(), -1);
    for (const TwinClass& cls : twin_classes(g).classes) {
      if (cls.vertices.size() < 2) continue;
      const int id = static_cast<int>(twin_need_.size());
      twin_need_.push_back(static_cast<int>(cls.vertices.size()) - 1);
      twin_members_.push_back({});
      for (Vertex v : cls.vertices) {
        const int i = view.left_index(v);
        if (i < 0) throw std::logic_error("twin outside a non-trivial orbit");
        twin_of_[i] = id;
        twin_members_.back().push_back(i);
      }
    }
    suffix_.assign(view.left.size() + 1, PairMask(universe_));
    for (std::size_t i = view.left.size(); i-- > 0;) {
      suffix_[i] = suffix_[i + 1] | masks_[i];
    }
  }

  int twin_lower_bound() const {
    return std::accumulate(twin_need_.begin(), twin_need_.end(), 0);
  }

  // Optimum size. Twins may be exchanged by automorphisms, so some optimum
  // contains all but the last member of each twin class.
  int optimum() {
    PairMask covered(universe_);
    int count = 0;
    for (const auto& members : twin_members_) {
      for (std::size_t t = 0; t + 1 < members.size(); ++t) {
        covered |= masks_[members[t]];
        ++count;
      }
    }
    best_ = static_cast<int>(view_.left.size()) + 1;
    branch_on_pairs(covered, count);
    return best_;
  }

  // Sets of exactly `size` left indices covering everything, visited in
  // lexicographic order. `visit` returns false to stop.
  template <typename Visit>
  void enumerate(int size, Visit&& visit) {
    std::vector<int> chosen;
    std::vector<int> twin_count(twin_need_.size(), 0);
    PairMask covered(universe_);
    stop_ = false;
    lex_search(0, size, chosen, twin_count, covered, visit);
  }

 private:
  int cover_lower_bound(const PairMask& covered) const {
    const std::size_t missing = universe_ - covered.count();
    if (missing == 0) return 0;
    return static_cast<int>((missing + max_mask_ - 1) / max_mask_);
  }

  void branch_on_pairs(const PairMask& covered, int count) {
    if (covered.count() == universe_) {
      best_ = std::min(best_, count);
      return;
    }
    if (count + cover_lower_bound(covered) >= best_) return;
    // Uncovered pair with the fewest fixers.
    std::size_t pick = PairMask::npos;
    std::size_t pick_fixers = SIZE_MAX;
    for (std::size_t j = 0; j < universe_; ++j) {
      if (covered.test(j)) continue;
      std::size_t fixers = 0;
      for (const auto& mask : masks_) fixers += mask.test(j) ? 1 : 0;
      if (fixers < pick_fixers) {
        pick = j;
        pick_fixers = fixers;
      }
    }
    for (std::size_t i = 0; i < masks_.size(); ++i) {
      if (masks_[i].test(pick)) branch_on_pairs(covered | masks_[i], count + 1);
    }
  }

  template <typename Visit>
  void lex_search(std::size_t next, int size, std::vector<int>& chosen,
                  std::vector<int>& twin_count, const PairMask& covered,
                  Visit& visit) {
    if (stop_) return;
    const int slots = size - static_cast<int>(chosen.size());
    if (slots == 0) {
      if (covered.count() == universe_) stop_ = !visit(chosen);
      return;
    }
    if (cover_lower_bound(covered) > slots) return;
    PairMask missing = suffix_[next];
    missing.flip();
    if ((missing & ~covered).any()) return;
    int twin_missing = 0;
    for (std::size_t t = 0; t < twin_need_.size(); ++t) {
      twin_missing += std::max(0, twin_need_[t] - twin_count[t]);
    }
    if (twin_missing > slots) return;

    for (std::size_t i = next; i + slots <= masks_.size() && !stop_; ++i) {
      chosen.push_back(static_cast<int>(i));
      if (twin_of_[i] >= 0) ++twin_count[twin_of_[i]];
      lex_search(i + 1, size, chosen, twin_count, covered | masks_[i], visit);
      if (twin_of_[i] >= 0) --twin_count[twin_of_[i]];
      chosen.pop_back();
    }
  }

  const FixingGraphView& view_;
  std::size_t universe_;
  std::vector<PairMask> masks_;
  std::size_t max_mask_ = 1;
  std::vector<PairMask> suffix_;
  std::vector<int> twin_of_;
  std::vector<int> twin_need_;
  std::vector<std::vector<int>> twin_members_;
  int best_ = 0;
  bool stop_ = false;
};

std::vector<Vertex> to_vertices(const FixingGraphView& view,
                                const std::vector<int>& indices) {
  std::vector<Vertex> set;
  for (int i : indices) set.push_back(view.left[i]);
  return set;
}

}  // namespace

FixingNumber fixing_number(const Graph& g, const AutomorphismGroup& grp) {
  check_order(g, grp);
  const FixingGraphView view = build_fixing_graph(g, grp);
  if (view.right.empty()) return {};

  CoverSearch search(g, view);
  FixingNumber result;
  result.size = search.optimum();
  search.enumerate(result.size, [&](const std::vector<int>& chosen) {
    result.set = to_vertices(view, chosen);
    return false;
  });
  if (result.set.empty() || !is_fixing_set(grp, result.set)) {
    throw std::logic_error("minimum cover is not a fixing set");
  }
  return result;
}

std::vector<std::vector<Vertex>> minimum_fixing_sets(
    const Graph& g, const AutomorphismGroup& grp, std::size_t limit) {
  check_order(g, grp);
  const FixingGraphView view = build_fixing_graph(g, grp);
  if (view.right.empty()) return {{}};

  CoverSearch search(g, view);
  const int size = search.optimum();
  std::vector<std::vector<Vertex>> sets;
  search.enumerate(size, [&](const std::vector<int>& chosen) {
    sets.push_back(to_vertices(view, chosen));
    return sets.size() < limit;
  });
  return sets;
}

int determined_number(const AutomorphismGroup& grp) {
  if (grp.is_trivial()) return 0;
  int most_fixed = 0;
  for (std::size_t e = 1; e < grp.size(); ++e) {
    auto h = grp.element(e);
    int fixed = 0;
    for (Vertex v = 0; v < grp.degree(); ++v) fixed += h[v] == v ? 1 : 0;
    most_fixed = std::max(most_fixed, fixed);
  }
  return most_fixed + 1;
}

namespace {

// Calls visit(subset) for every k-subset of 0..n-1 in lexicographic order
// until it returns false. Returns false if stopped early.
template <typename Visit>
bool for_each_subset(int n, int k, Visit&& visit) {
  std::vector<Vertex> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  for (;;) {
    if (!visit(std::span<const Vertex>(subset))) return false;
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) return true;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

}  // namespace

int determined_number_by_subsets(const AutomorphismGroup& grp) {
  const int n = grp.degree();
  if (n > 16) {
    throw std::invalid_argument("subset scan limited to 16 vertices");
  }
  for (int k = 0; k <= n; ++k) {
    const bool all = for_each_subset(n, k, [&](std::span<const Vertex> s) {
      return is_determining_set(grp, s);
    });
    if (all) return k;
  }
  return n;
}

ShareReport share_report(const Graph& g, const AutomorphismGroup& grp,
                         std::optional<std::span<const Vertex>> d) {
  check_order(g, grp);
  if (grp.is_trivial()) {
    throw std::invalid_argument("no similar pairs; share undefined");
  }
  const FixingGraphView view = build_fixing_graph(g, grp);
  const FixingNumber minimum = fixing_number(g, grp);

  ShareReport report;
  if (d.has_value()) {
    report.fixing_set.assign(d->begin(), d->end());
    for (Vertex x : report.fixing_set) check_vertex(grp, x);
    std::sort(report.fixing_set.begin(), report.fixing_set.end());
    report.fixing_set.erase(
        std::unique(report.fixing_set.begin(), report.fixing_set.end()),
        report.fixing_set.end());
    if (static_cast<int>(report.fixing_set.size()) != minimum.size ||
        !is_fixing_set(grp, report.fixing_set)) {
      throw std::invalid_argument("supplied set is not a minimum fixing set");
    }
  } else {
    report.fixing_set = minimum.set;
  }

  std::vector<int> count(view.right.size(), 0);
  std::vector<Vertex> last_fixer(view.right.size(), -1);
  for (Vertex x : report.fixing_set) {
    const int i = view.left_index(x);
    if (i < 0) continue;
    for (int j : view.fixes[i]) {
      ++count[j];
      last_fixer[j] = x;
    }
  }
  for (std::size_t j = 0; j < view.right.size(); ++j) {
    const VertexPair& p = view.right[j];
    if (count[j] == 0) {
      report.unfixed_pairs.push_back(p);
      continue;
    }
    report.fixer_count.emplace(p, count[j]);
    if (count[j] == 1) report.sole_fixers.emplace(p, last_fixer[j]);
  }
  for (Vertex x : report.fixing_set) {
    Rational share = 0;
    const int i = view.left_index(x);
    if (i >= 0) {
      for (int j : view.fixes[i]) share += Rational(1, count[j]);
    }
    report.shares.emplace(x, share);
    report.f_sum += share;
  }
  report.f_percent =
      Rational(static_cast<std::int64_t>(report.fixing_set.size())) /
      report.f_sum;
  return report;
}

int metric_dimension(const Graph& g) {
  const int n = g.order();
  if (n > kMetricDimensionMaxOrder) {
    throw std::invalid_argument("metric dimension limited to order <= " +
                                std::to_string(kMetricDimensionMaxOrder));
  }
  if (!g.is_connected()) {
    throw std::invalid_argument("metric dimension needs a connected graph");
  }
  const DistanceMatrix dist = distance_matrix(g);
  for (int k = 0; k <= n; ++k) {
    bool found = false;
    for_each_subset(n, k, [&](std::span<const Vertex> w) {
      std::set<std::vector<int>> codes;
      for (Vertex v = 0; v < n; ++v) {
        std::vector<int> code;
        for (Vertex anchor : w) code.push_back(dist(v, anchor));
        if (!codes.insert(std::move(code)).second) return true;
      }
      found = true;
      return false;
    });
    if (found) return k;
  }
  return n;
}

}  // namespace fixgraph
