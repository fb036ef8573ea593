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
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace fixgraph {
namespace {

struct Instance {
  Graph graph;
  AutomorphismGroup group;
};

Instance Make(const FamilySpec& spec) {
  Graph g = generate(spec);
  AutomorphismGroup grp = enumerate_automorphisms(g);
  return {std::move(g), std::move(grp)};
}

Graph Star(int leaves) {
  return generate(FamilySpec::complete_bipartite(1, leaves));
}

// Non-rigid members of a small family and random corpus.
std::vector<Instance> Corpus(int random_count, int max_order,
                             std::uint64_t seed) {
  std::vector<Instance> out;
  for (int n = 2; n <= max_order; ++n) {
    out.push_back(Make(FamilySpec::path(n)));
    out.push_back(Make(FamilySpec::complete(n)));
    if (n >= 3) out.push_back(Make(FamilySpec::cycle(n)));
  }
  out.push_back(Make(FamilySpec::complete_bipartite(2, 3)));
  out.push_back(Make(FamilySpec::complete_bipartite(3, 3)));
  out.push_back(Make(FamilySpec::spider_tree({{3, 1}, {4, 1}})));
  out.push_back(Make(FamilySpec::spider_tree({{3, 2}})));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_count; ++i) {
    Graph g = random_connected_graph(3 + i % (max_order - 2), 0.5, rng);
    AutomorphismGroup grp = enumerate_automorphisms(g);
    if (!grp.is_trivial()) out.push_back({std::move(g), std::move(grp)});
  }
  return out;
}

std::vector<Vertex> All(int n) {
  std::vector<Vertex> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

TEST(FixPairTest, Examples) {
  const Instance p5 = Make(FamilySpec::path(5));
  EXPECT_EQ(fix_pair(p5.graph, p5.group, 0, 4), (std::vector<Vertex>{0, 1, 3, 4}));
  EXPECT_TRUE(fix_pair(p5.graph, p5.group, 0, 1).empty());
  const Instance p4 = Make(FamilySpec::path(4));
  EXPECT_EQ(fix_pair(p4.graph, p4.group, 1, 2), All(4));
  const Instance k4 = Make(FamilySpec::complete(4));
  EXPECT_EQ(fix_pair(k4.graph, k4.group, 2, 0), (std::vector<Vertex>{0, 2}));
  const Instance c5 = Make(FamilySpec::cycle(5));
  EXPECT_EQ(fix_pair(c5.graph, c5.group, 0, 1), (std::vector<Vertex>{0, 1, 2, 4}));
  EXPECT_THROW(fix_pair(k4.graph, k4.group, 1, 1), std::invalid_argument);
}

TEST(FixPairTest, MatchesOracle) {
  for (const Instance& in : Corpus(80, 8, 101)) {
    const auto elems = oracle::elements(in.group);
    const int n = in.graph.order();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        ASSERT_EQ(fix_pair(in.graph, in.group, u, v), oracle::fix_set(elems, n, u, v))
            << serialize_edge_list(in.graph) << u << "," << v;
      }
    }
  }
}

TEST(FixedNeighborhoodTest, Examples) {
  const Instance p5 = Make(FamilySpec::path(5));
  EXPECT_EQ(fixed_neighborhood(p5.graph, p5.group, 0),
            (std::vector<VertexPair>{{0, 4}, {1, 3}}));
  EXPECT_TRUE(fixed_neighborhood(p5.graph, p5.group, 2).empty());
  const Instance k4 = Make(FamilySpec::complete(4));
  EXPECT_EQ(fixed_neighborhood(k4.graph, k4.group, 1),
            (std::vector<VertexPair>{{0, 1}, {1, 2}, {1, 3}}));
}

TEST(FixingGraphTest, EdgeCounts) {
  const Instance p4 = Make(FamilySpec::path(4));
  const FixingGraphView view = build_fixing_graph(p4.graph, p4.group);
  EXPECT_EQ(view.left, All(4));
  EXPECT_EQ(view.right.size(), 2u);
  EXPECT_EQ(view.edge_count(), 8);
  EXPECT_EQ(view.left_index(2), 2);
  EXPECT_EQ(view.right_index({1, 2}), 1);
  EXPECT_EQ(view.right_index({0, 1}), -1);

  const Instance k3 = Make(FamilySpec::complete(3));
  EXPECT_EQ(build_fixing_graph(k3.graph, k3.group).edge_count(), 6);

  const Instance p5 = Make(FamilySpec::path(5));
  const FixingGraphView p5view = build_fixing_graph(p5.graph, p5.group);
  EXPECT_EQ(p5view.left_index(2), -1);
  EXPECT_EQ(p5view.edge_count(), 8);

  const Graph rigid = parse_edge_list("7 6\n0 1\n0 2\n2 3\n0 4\n4 5\n5 6\n");
  const FixingGraphView empty = build_fixing_graph(rigid, enumerate_automorphisms(rigid));
  EXPECT_EQ(empty.edge_count(), 0);
  EXPECT_TRUE(empty.left.empty());
}

TEST(FixingGraphTest, EdgeBound) {
  const Instance p4 = Make(FamilySpec::path(4));
  const EdgeBoundCheck p4check =
      verify_edge_bound(build_fixing_graph(p4.graph, p4.group), 1, 4);
  EXPECT_TRUE(p4check.holds);
  EXPECT_EQ(p4check.bound, 24);
  EXPECT_EQ(p4check.slack, 16);
  const Instance k3 = Make(FamilySpec::complete(3));
  const EdgeBoundCheck k3check =
      verify_edge_bound(build_fixing_graph(k3.graph, k3.group), 2, 3);
  EXPECT_TRUE(k3check.holds);
  EXPECT_EQ(k3check.slack, 0);
}

TEST(FixingSetTest, Examples) {
  const Instance k3 = Make(FamilySpec::complete(3));
  const std::vector<Vertex> one{1};
  EXPECT_FALSE(is_fixing_set(k3.group, one));
  EXPECT_FALSE(is_determining_set(k3.group, one));
  const Instance p5 = Make(FamilySpec::path(5));
  const std::vector<Vertex> center{2};
  EXPECT_FALSE(is_fixing_set(p5.group, center));
  EXPECT_FALSE(is_determining_set(p5.group, center));
  const Instance k4 = Make(FamilySpec::complete(4));
  for (Vertex skip = 0; skip < 4; ++skip) {
    std::vector<Vertex> three;
    for (Vertex v = 0; v < 4; ++v) {
      if (v != skip) three.push_back(v);
    }
    EXPECT_TRUE(is_fixing_set(k4.group, three));
    EXPECT_TRUE(is_determining_set(k4.group, three));
  }
  EXPECT_TRUE(is_determining_set(k4.group, All(4)));
  const Graph rigid = parse_edge_list("7 6\n0 1\n0 2\n2 3\n0 4\n4 5\n5 6\n");
  EXPECT_TRUE(is_fixing_set(enumerate_automorphisms(rigid), {}));
}

TEST(FixingNumberTest, Families) {
  for (int n = 2; n <= 9; ++n) {
    const Instance p = Make(FamilySpec::path(n));
    EXPECT_EQ(fixing_number(p.graph, p.group).size, 1) << n;
    EXPECT_EQ(fixing_number(p.graph, p.group).set, std::vector<Vertex>{0});
    const Instance k = Make(FamilySpec::complete(n));
    EXPECT_EQ(fixing_number(k.graph, k.group).size, n - 1) << n;
  }
  for (int n = 4; n <= 10; ++n) {
    const Instance c = Make(FamilySpec::cycle(n));
    EXPECT_EQ(fixing_number(c.graph, c.group).size, 2) << n;
    EXPECT_EQ(fixing_number(c.graph, c.group).set, (std::vector<Vertex>{0, 1}));
  }
  const Instance gap3 = Make(FamilySpec::gap_graph(3));
  EXPECT_EQ(fixing_number(gap3.graph, gap3.group).size, 4);
  const Instance gap4 = Make(FamilySpec::gap_graph(4));
  EXPECT_EQ(fixing_number(gap4.graph, gap4.group).size, 11);
  EXPECT_EQ(fixing_number(Graph(1), enumerate_automorphisms(Graph(1))).size, 0);
}

TEST(DeterminedNumberTest, Examples) {
  const Graph rigid = parse_edge_list("7 6\n0 1\n0 2\n2 3\n0 4\n4 5\n5 6\n");
  EXPECT_EQ(determined_number(enumerate_automorphisms(rigid)), 0);
  EXPECT_EQ(determined_number(Make(FamilySpec::path(4)).group), 1);
  EXPECT_EQ(determined_number(Make(FamilySpec::path(5)).group), 2);
  EXPECT_EQ(determined_number(Make(FamilySpec::gap_graph(3)).group), 7);
  EXPECT_EQ(determined_number(Make(FamilySpec::gap_graph(4)).group), 16);
  EXPECT_EQ(determined_number_by_subsets(Make(FamilySpec::path(5)).group), 2);
}

TEST(DeterminedNumberTest, MatchesOracles) {
  for (const Instance& in : Corpus(60, 7, 103)) {
    if (in.group.size() > 200) continue;
    const int fast = determined_number(in.group);
    EXPECT_EQ(fast, determined_number_by_subsets(in.group));
    EXPECT_EQ(fast, oracle::determined_number(oracle::elements(in.group),
                                              in.graph.order()));
  }
}

TEST(DeterminedNumberTest, Ordering) {
  for (const Instance& in : Corpus(60, 8, 107)) {
    const int det = fixing_number(in.graph, in.group).size;
    const int dtr = determined_number(in.group);
    EXPECT_LE(0, det);
    EXPECT_LE(det, dtr);
    EXPECT_LE(dtr, in.graph.order() - 1);
  }
}

TEST(ShareTest, CompleteFour) {
  const Instance k4 = Make(FamilySpec::complete(4));
  const ShareReport r = share_report(k4.graph, k4.group);
  EXPECT_EQ(r.fixing_set, (std::vector<Vertex>{0, 1, 2}));
  for (Vertex x : r.fixing_set) EXPECT_EQ(r.shares.at(x), Rational(2));
  EXPECT_EQ(r.f_sum, Rational(6));
  EXPECT_EQ(r.f_percent, Rational(1, 2));
  EXPECT_TRUE(r.unfixed_pairs.empty());
  EXPECT_EQ(r.fixer_count.at({0, 1}), 2);
  EXPECT_EQ(r.sole_fixers.at({0, 3}), 0);
}

TEST(ShareTest, PathSix) {
  const Instance p6 = Make(FamilySpec::path(6));
  const ShareReport r = share_report(p6.graph, p6.group);
  EXPECT_EQ(r.shares.at(0), Rational(3));
  EXPECT_EQ(r.f_sum, Rational(3));
  EXPECT_EQ(r.f_percent, Rational(1, 3));
}

TEST(ShareTest, CycleFiveAdjacentPair) {
  const Instance c5 = Make(FamilySpec::cycle(5));
  const std::vector<Vertex> d{0, 1};
  const ShareReport r = share_report(c5.graph, c5.group, std::span<const Vertex>(d));
  EXPECT_EQ(r.shares.at(0), Rational(5));
  EXPECT_EQ(r.shares.at(1), Rational(5));
  EXPECT_EQ(r.f_sum, Rational(10));
  EXPECT_EQ(r.f_percent, Rational(1, 5));
}

TEST(ShareTest, StarLeaves) {
  const Instance star{Star(3), enumerate_automorphisms(Star(3))};
  const ShareReport r = share_report(star.graph, star.group);
  EXPECT_EQ(r.fixing_set, (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(r.shares.at(1), Rational(3, 2));
  EXPECT_EQ(r.shares.at(2), Rational(3, 2));
}

TEST(ShareTest, Errors) {
  const Graph rigid = parse_edge_list("7 6\n0 1\n0 2\n2 3\n0 4\n4 5\n5 6\n");
  try {
    share_report(rigid, enumerate_automorphisms(rigid));
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "no similar pairs; share undefined");
  }
  const Instance k4 = Make(FamilySpec::complete(4));
  const std::vector<Vertex> too_small{0, 1};
  EXPECT_THROW(share_report(k4.graph, k4.group, std::span<const Vertex>(too_small)),
               std::invalid_argument);
  const std::vector<Vertex> too_big{0, 1, 2, 3};
  EXPECT_THROW(share_report(k4.graph, k4.group, std::span<const Vertex>(too_big)),
               std::invalid_argument);
}

TEST(ShareTest, MatchesOracle) {
  for (const Instance& in : Corpus(60, 8, 109)) {
    const ShareReport r = share_report(in.graph, in.group);
    EXPECT_EQ(r.shares, oracle::shares(oracle::elements(in.group),
                                       in.graph.order(), r.fixing_set));
  }
}

TEST(MetricDimensionTest, Examples) {
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(metric_dimension(generate(FamilySpec::path(n))), 1);
    EXPECT_EQ(metric_dimension(generate(FamilySpec::complete(n))), n - 1);
  }
  EXPECT_EQ(metric_dimension(generate(FamilySpec::cycle(6))), 2);
  EXPECT_EQ(metric_dimension(Graph(1)), 0);
  Graph split(4);
  split.add_edge(0, 1);
  EXPECT_THROW(metric_dimension(split), std::invalid_argument);
  EXPECT_THROW(metric_dimension(generate(FamilySpec::path(11))), std::invalid_argument);
}

TEST(MetricDimensionTest, MatchesOracle) {
  std::mt19937_64 rng(113);
  for (int i = 0; i < 60; ++i) {
    const Graph g = random_connected_graph(2 + i % 8, 0.4, rng);
    EXPECT_EQ(metric_dimension(g), oracle::metric_dimension(g));
  }
}

// Properties over a shared corpus.

TEST(FixingProperty, DualityWithStabilizerDefinition) {
  for (const Instance& in : Corpus(80, 8, 127)) {
    const auto elems = oracle::elements(in.group);
    const auto [k, sets] = oracle::minimum_fixing_sets(elems, in.graph.order());
    const FixingNumber fn = fixing_number(in.graph, in.group);
    ASSERT_EQ(fn.size, k) << serialize_edge_list(in.graph);
    EXPECT_EQ(fn.set, sets.front());
    if (in.group.size() <= 5040) {
      EXPECT_EQ(minimum_fixing_sets(in.graph, in.group), sets);
    }
  }
}

TEST(FixingProperty, FixingEqualsDeterminingOnRandomSubsets) {
  std::mt19937_64 rng(131);
  for (const Instance& in : Corpus(60, 8, 137)) {
    const int n = in.graph.order();
    std::uniform_int_distribution<unsigned> mask_dist(0, (1u << n) - 1);
    const auto elems = oracle::elements(in.group);
    for (int t = 0; t < 200; ++t) {
      const std::vector<Vertex> s = oracle::subset_of(mask_dist(rng), n);
      const bool fixing = is_fixing_set(in.group, s);
      ASSERT_EQ(fixing, is_determining_set(in.group, s));
      ASSERT_EQ(fixing, oracle::stabilizer_trivial(elems, s));
    }
  }
}

TEST(FixingProperty, Containment) {
  for (const Instance& in : Corpus(60, 8, 139)) {
    for (const VertexPair& p : similar_pairs(in.group)) {
      const auto f = fix_pair(in.graph, in.group, p.first, p.second);
      EXPECT_TRUE(std::binary_search(f.begin(), f.end(), p.first));
      EXPECT_TRUE(std::binary_search(f.begin(), f.end(), p.second));
      EXPECT_TRUE(std::all_of(f.begin(), f.end(), [&](Vertex x) {
        return x >= 0 && x < in.graph.order();
      }));
    }
  }
}

TEST(FixingProperty, DistanceSimilarCharacterization) {
  for (const Instance& in : Corpus(100, 8, 149)) {
    const DistanceMatrix d = distance_matrix(in.graph);
    for (const VertexPair& p : similar_pairs(in.group)) {
      const auto f = fix_pair(in.graph, in.group, p.first, p.second);
      const bool minimal = f == std::vector<Vertex>{p.first, p.second};
      EXPECT_EQ(minimal, are_distance_similar(d, p.first, p.second))
          << serialize_edge_list(in.graph) << p.first << "," << p.second;
    }
  }
}

TEST(FixingProperty, DegreeAndEdgeBounds) {
  for (const Instance& in : Corpus(80, 8, 151)) {
    const FixingGraphView view = build_fixing_graph(in.graph, in.group);
    const int k = fixing_number(in.graph, in.group).size;
    const int s = static_cast<int>(view.right.size());
    for (const auto& row : view.fixes) {
      EXPECT_LE(static_cast<int>(row.size()), s - k + 1);
    }
    EXPECT_TRUE(verify_edge_bound(view, k, in.graph.order()).holds);
  }
}

TEST(FixingProperty, ShareConservationAndBounds) {
  for (const Instance& in : Corpus(80, 8, 157)) {
    const auto pairs = similar_pairs(in.group);
    const Rational s(static_cast<std::int64_t>(pairs.size()));
    const auto optima = minimum_fixing_sets(in.graph, in.group, 20);
    for (const auto& d : optima) {
      const ShareReport r = share_report(in.graph, in.group, std::span<const Vertex>(d));
      EXPECT_EQ(r.f_sum, s);
      EXPECT_EQ(r.f_percent, Rational(static_cast<std::int64_t>(d.size())) / s);
      EXPECT_TRUE(r.unfixed_pairs.empty());
      if (in.graph.is_connected()) {
        const std::int64_t n = in.graph.order();
        EXPECT_LE(Rational(1), r.f_sum);
        EXPECT_LE(r.f_sum, Rational(n * (n - 1) / 2));
        EXPECT_LE(Rational(2, n * n - n), r.f_percent);
      }
    }
  }
}

TEST(FixingProperty, PercentCanExceedTwoOverN) {
  // P3: |D| = 1 and one similar pair, so F% = 1 > 2/3.
  const Instance p3 = Make(FamilySpec::path(3));
  const ShareReport r = share_report(p3.graph, p3.group);
  EXPECT_EQ(r.f_percent, Rational(1));
  EXPECT_GT(r.f_percent, Rational(2, 3));
}

TEST(FixingProperty, TwinRules) {
  for (const Instance& in : Corpus(80, 8, 163)) {
    const TwinPartition twins = twin_classes(in.graph);
    for (const auto& d : minimum_fixing_sets(in.graph, in.group, 20)) {
      for (const TwinClass& cls : twins.classes) {
        std::vector<Vertex> inside;
        std::vector<Vertex> outside;
        for (Vertex v : cls.vertices) {
          (std::binary_search(d.begin(), d.end(), v) ? inside : outside).push_back(v);
        }
        EXPECT_GE(inside.size() + 1, cls.vertices.size());
        for (Vertex u : inside) {
          for (Vertex v : outside) {
            std::vector<Vertex> swapped = d;
            std::replace(swapped.begin(), swapped.end(), u, v);
            EXPECT_TRUE(is_fixing_set(in.group, swapped));
          }
        }
      }
    }
  }
}

TEST(FixingProperty, FixingAtMostMetricDimension) {
  for (const Instance& in : Corpus(80, 8, 167)) {
    if (!in.graph.is_connected()) continue;
    EXPECT_LE(fixing_number(in.graph, in.group).size, metric_dimension(in.graph));
  }
}

}  // namespace
}  // namespace fixgraph
