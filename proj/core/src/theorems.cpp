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

#include "fixgraph/theorems.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>

namespace fixgraph {

std::string format_vertex_set(const std::vector<Vertex>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(set[i]);
  }
  return out + "}";
}

namespace {

std::vector<Vertex> all_vertices(int n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<Vertex> all_except(int n, const std::vector<Vertex>& removed) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (std::find(removed.begin(), removed.end(), v) == removed.end()) {
      out.push_back(v);
    }
  }
  return out;
}

int cycle_distance(int n, Vertex a, Vertex b) {
  const int d = std::abs(a - b);
  return std::min(d, n - d);
}

std::string format_pair(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::string format_pairs(const std::vector<VertexPair>& pairs) {
  std::string out = "{";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0) out += ",";
    out += format_pair(pairs[i].first, pairs[i].second);
  }
  return out + "}";
}

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

std::vector<Vertex> closed_fix_pair(const FamilySpec& spec, Vertex u,
                                    Vertex v) {
  const int n = spec.order();
  if (u == v) throw std::invalid_argument("closed_fix_pair needs u != v");
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw std::invalid_argument("vertex id out of range");
  }
  if (spec.get_if<FamilySpec::Path>()) {
    if (u + v != n - 1) {
      throw std::invalid_argument("path pair is not similar");
    }
    if (n % 2 == 0) return all_vertices(n);
    return all_except(n, {(n - 1) / 2});
  }
  if (spec.get_if<FamilySpec::Cycle>()) {
    // Every pair of distinct cycle vertices is similar.
    if (n % 2 == 0 && cycle_distance(n, u, v) % 2 == 1) {
      return all_vertices(n);
    }
    std::vector<Vertex> equidistant;
    for (Vertex x = 0; x < n; ++x) {
      if (cycle_distance(n, x, u) == cycle_distance(n, x, v)) {
        equidistant.push_back(x);
      }
    }
    return all_except(n, equidistant);
  }
  if (spec.get_if<FamilySpec::Complete>()) {
    return {std::min(u, v), std::max(u, v)};
  }
  if (const auto* kmn = spec.get_if<FamilySpec::CompleteBipartite>()) {
    const bool same_side = (u < kmn->m) == (v < kmn->m);
    if (same_side) return {std::min(u, v), std::max(u, v)};
    if (kmn->m == kmn->n) return all_vertices(n);
    return {};
  }
  throw std::invalid_argument("no closed-form f-set for " + spec.to_string());
}

ClosedShare closed_share(const FamilySpec& spec) {
  ClosedShare expected;
  if (const auto* complete = spec.get_if<FamilySpec::Complete>()) {
    const int n = complete->n;
    if (n < 3) throw std::invalid_argument("complete share needs n >= 3");
    for (Vertex v = 0; v + 1 < n; ++v) {
      expected.fixing_set.push_back(v);
      expected.shares.emplace(v, Rational(n, 2));
    }
    expected.f_sum = Rational((n - 1) * n, 2);
    expected.f_percent = Rational(2, n);
    return expected;
  }
  if (const auto* path = spec.get_if<FamilySpec::Path>()) {
    const int half = path->n / 2;
    expected.fixing_set = {0};
    expected.shares.emplace(0, Rational(half));
    expected.f_sum = Rational(half);
    expected.f_percent = Rational(1, half);
    return expected;
  }
  if (const auto* cycle = spec.get_if<FamilySpec::Cycle>()) {
    const std::int64_t n = cycle->n;
    if (n < 4) throw std::invalid_argument("cycle share needs n >= 4");
    expected.fixing_set = {0, 1};
    expected.shares.emplace(0, Rational(choose2(n), 2));
    expected.shares.emplace(1, Rational(choose2(n), 2));
    expected.f_sum = Rational(choose2(n));
    expected.f_percent = Rational(4, n * n - n);
    return expected;
  }
  if (const auto* spider = spec.get_if<FamilySpec::SpiderTree>()) {
    const auto terminals = spider_terminals(spec);
    for (std::size_t major = 0; major < terminals.size(); ++major) {
      const auto& leaves = terminals[major];
      const int orbit_size = spider->arms[major].terminal_degree;
      for (std::size_t i = 0; i + 1 < leaves.size(); ++i) {
        expected.fixing_set.push_back(leaves[i]);
        expected.shares.emplace(leaves[i], Rational(orbit_size, 2));
      }
    }
    std::sort(expected.fixing_set.begin(), expected.fixing_set.end());
    return expected;
  }
  throw std::invalid_argument("no closed-form share for " + spec.to_string());
}

bool VerificationReport::overall() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(),
                    [](const VerificationInstance& i) { return !i.pass; }));
}

void VerificationReport::add(std::string parameters, std::string expected,
                             std::string computed, bool pass) {
  instances.push_back({std::move(parameters), std::move(expected),
                       std::move(computed), pass});
}

namespace {

std::vector<FamilySpec> fix_pair_families(const FamilyRanges& ranges) {
  std::vector<FamilySpec> specs;
  for (int n = ranges.path.first; n <= ranges.path.last; ++n) {
    specs.push_back(FamilySpec::path(n));
  }
  for (int n = ranges.cycle.first; n <= ranges.cycle.last; ++n) {
    specs.push_back(FamilySpec::cycle(n));
  }
  for (int n = ranges.complete.first; n <= ranges.complete.last; ++n) {
    specs.push_back(FamilySpec::complete(n));
  }
  for (int m = 1; m <= ranges.bipartite_max; ++m) {
    for (int n = 1; n <= ranges.bipartite_max; ++n) {
      specs.push_back(FamilySpec::complete_bipartite(m, n));
    }
  }
  return specs;
}

// V_s(G) predicted by the closed forms.
std::vector<VertexPair> closed_similar_pairs(const FamilySpec& spec) {
  const int n = spec.order();
  std::vector<VertexPair> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      bool similar = true;
      if (spec.get_if<FamilySpec::Path>()) {
        similar = u + v == n - 1;
      } else if (const auto* kmn =
                     spec.get_if<FamilySpec::CompleteBipartite>()) {
        similar = (u < kmn->m) == (v < kmn->m) || kmn->m == kmn->n;
      }
      if (similar) pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

void verify_fix_pairs(const FamilyRanges& ranges, VerificationReport& report) {
  for (const FamilySpec& spec : fix_pair_families(ranges)) {
    const std::string name = spec.to_string();
    try {
      const Graph g = generate(spec);
      const AutomorphismGroup grp = enumerate_automorphisms(g);
      const auto computed_pairs = similar_pairs(grp);
      const auto expected_pairs = closed_similar_pairs(spec);
      report.add(name + " V_s", format_pairs(expected_pairs),
                 format_pairs(computed_pairs),
                 computed_pairs == expected_pairs);
      const int n = g.order();
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (spec.get_if<FamilySpec::Path>() && u + v != n - 1) continue;
          const auto expected = closed_fix_pair(spec, u, v);
          const auto computed = fix_pair(g, grp, u, v);
          report.add(name + " fix" + format_pair(u, v),
                     format_vertex_set(expected), format_vertex_set(computed),
                     expected == computed);
        }
      }
    } catch (const std::exception& e) {
      report.add(name, "no error", e.what(), false);
    }
  }
}

std::vector<FamilySpec> share_families(const FamilyRanges& ranges) {
  std::vector<FamilySpec> specs;
  for (int n = ranges.complete.first; n <= ranges.complete.last; ++n) {
    specs.push_back(FamilySpec::complete(n));
  }
  for (int n = ranges.path.first; n <= ranges.path.last; ++n) {
    specs.push_back(FamilySpec::path(n));
  }
  for (int n = ranges.cycle.first; n <= ranges.cycle.last; ++n) {
    specs.push_back(FamilySpec::cycle(n));
  }
  for (const auto& arms : ranges.spiders) {
    specs.push_back(FamilySpec::spider_tree(arms));
  }
  return specs;
}

void verify_shares(const FamilyRanges& ranges, VerificationReport& report) {
  for (const FamilySpec& spec : share_families(ranges)) {
    const std::string name = spec.to_string();
    try {
      const ClosedShare expected = closed_share(spec);
      const Graph g = generate(spec);
      const AutomorphismGroup grp = enumerate_automorphisms(g);
      const ShareReport computed =
          share_report(g, grp, std::span<const Vertex>(expected.fixing_set));
      const std::string d = " D=" + format_vertex_set(expected.fixing_set);
      for (const auto& [v, share] : expected.shares) {
        const Rational got = computed.shares.at(v);
        report.add(name + d + " f(" + std::to_string(v) + ")",
                   to_fraction_string(share), to_fraction_string(got),
                   got == share);
      }
      if (expected.f_sum) {
        report.add(name + d + " F_sum", to_fraction_string(*expected.f_sum),
                   to_fraction_string(computed.f_sum),
                   computed.f_sum == *expected.f_sum);
      }
      if (expected.f_percent) {
        report.add(name + d + " F%", to_fraction_string(*expected.f_percent),
                   to_fraction_string(computed.f_percent),
                   computed.f_percent == *expected.f_percent);
      }
    } catch (const std::exception& e) {
      report.add(name, "no error", e.what(), false);
    }
  }
}

std::vector<CorpusEntry> random_corpus(int count, int max_order,
                                       std::uint64_t seed) {
  std::vector<CorpusEntry> corpus;
  if (max_order < 2) return corpus;
  std::mt19937_64 rng(seed);
  constexpr double kDensities[] = {0.3, 0.5, 0.7};
  for (int i = 0; i < count; ++i) {
    const int order = 2 + i % (max_order - 1);
    Graph g = random_connected_graph(order, kDensities[i % 3], rng);
    corpus.push_back({"Random#" + std::to_string(i) + "(n=" +
                          std::to_string(order) + ")",
                      std::move(g)});
  }
  return corpus;
}

void verify_distance_similarity(const FamilyRanges& ranges,
                                VerificationReport& report) {
  for (const CorpusEntry& entry : random_corpus(
           ranges.random_graphs, ranges.random_max_order, ranges.seed)) {
    const Graph& g = entry.graph;
    const AutomorphismGroup grp = enumerate_automorphisms(g);
    const DistanceMatrix dist = distance_matrix(g);
    std::vector<VertexPair> mismatched;
    for (const VertexPair& p : similar_pairs(grp)) {
      const auto fset = fix_pair(g, grp, p.first, p.second);
      const bool minimal = fset == std::vector<Vertex>{p.first, p.second};
      if (minimal != are_distance_similar(dist, p.first, p.second)) {
        mismatched.push_back(p);
      }
    }
    report.add(entry.name, "no mismatched pairs",
               mismatched.empty() ? "no mismatched pairs"
                                  : format_pairs(mismatched),
               mismatched.empty());
  }
}

void verify_fix_at_most_dim(const FamilyRanges& ranges,
                            VerificationReport& report) {
  for (const CorpusEntry& entry : desk_corpus(
           ranges.random_graphs, ranges.random_max_order, ranges.seed)) {
    const Graph& g = entry.graph;
    if (!g.is_connected() || g.order() > kMetricDimensionMaxOrder) continue;
    try {
      const AutomorphismGroup grp = enumerate_automorphisms(g);
      const int fix = fixing_number(g, grp).size;
      const int dim = metric_dimension(g);
      report.add(entry.name, "fix <= dim",
                 "fix=" + std::to_string(fix) + " dim=" + std::to_string(dim),
                 fix <= dim);
    } catch (const std::exception& e) {
      report.add(entry.name, "no error", e.what(), false);
    }
  }
}

}  // namespace

VerificationReport verify_family(TheoremId theorem,
                                 const FamilyRanges& ranges) {
  VerificationReport report;
  switch (theorem) {
    case TheoremId::kFixPairClosedForms:
      report.theorem_id = "fixpair";
      verify_fix_pairs(ranges, report);
      break;
    case TheoremId::kShareClosedForms:
      report.theorem_id = "share";
      verify_shares(ranges, report);
      break;
    case TheoremId::kDistanceSimilarity:
      report.theorem_id = "distance-similar";
      verify_distance_similarity(ranges, report);
      break;
    case TheoremId::kFixingAtMostMetricDim:
      report.theorem_id = "dim";
      verify_fix_at_most_dim(ranges, report);
      break;
  }
  return report;
}

VerificationReport verify_gap_construction(int k, std::size_t cap) {
  if (k > kGapMaxEnumerableK) {
    throw CapacityError("GapGraph(" + std::to_string(k) +
                        ") is beyond exhaustive enumeration (k <= " +
                        std::to_string(kGapMaxEnumerableK) + ")");
  }
  const FamilySpec spec = FamilySpec::gap_graph(k);
  const std::string name = spec.to_string();
  const Graph g = generate(spec);
  const AutomorphismGroup grp = enumerate_automorphisms(g, cap);

  const int det = fixing_number(g, grp).size;
  const int dtr = determined_number(grp);
  const int expected_det = (1 << k) - (k + 1);
  const int expected_dtr = (1 << k) + k - 4;

  VerificationReport report;
  report.theorem_id = "gap";
  report.add(name + " Det", std::to_string(expected_det), std::to_string(det),
             det == expected_det);
  report.add(name + " dtr", std::to_string(expected_dtr), std::to_string(dtr),
             dtr == expected_dtr);
  report.add(name + " dtr-Det", std::to_string(2 * k - 3),
             std::to_string(dtr - det), dtr - det == 2 * k - 3);

  // sum_{i=1}^{k-1} (C(k,i) - 1): the twin-class lower bound.
  int twin_bound = 0;
  for (const TwinClass& cls : twin_classes(g).classes) {
    twin_bound += static_cast<int>(cls.vertices.size()) - 1;
  }
  report.add(name + " twin bound", std::to_string(expected_det),
             std::to_string(twin_bound), twin_bound == expected_det);

  // k >= max{3, (N+3)/2}  <=>  N <= 2k - 3.
  for (int target = 1; 2 * k >= std::max(6, target + 3); ++target) {
    report.add(name + " N=" + std::to_string(target),
               "dtr-Det >= " + std::to_string(target),
               std::to_string(dtr - det), dtr - det >= target);
  }
  return report;
}

std::vector<CorpusEntry> desk_corpus(int random_count, int max_order,
                                     std::uint64_t seed) {
  std::vector<FamilySpec> specs;
  for (int n = 2; n <= max_order; ++n) specs.push_back(FamilySpec::path(n));
  for (int n = 3; n <= max_order; ++n) specs.push_back(FamilySpec::cycle(n));
  for (int n = 1; n <= max_order; ++n) {
    specs.push_back(FamilySpec::complete(n));
  }
  for (int m = 1; m <= max_order; ++m) {
    for (int n = m; m + n <= max_order; ++n) {
      specs.push_back(FamilySpec::complete_bipartite(m, n));
    }
  }
  for (int t = 3; t + 1 <= max_order; ++t) {
    specs.push_back(FamilySpec::spider_tree({{t, 1}}));
  }
  for (const auto& arms : std::vector<std::vector<SpiderArm>>{
           {{3, 2}}, {{3, 1}, {4, 1}}}) {
    FamilySpec spider = FamilySpec::spider_tree(arms);
    if (spider.order() <= max_order) specs.push_back(std::move(spider));
  }
  if (max_order >= 8) specs.push_back(FamilySpec::gap_graph(3));

  std::vector<CorpusEntry> corpus;
  for (const FamilySpec& spec : specs) {
    corpus.push_back({spec.to_string(), generate(spec)});
  }
  for (CorpusEntry& entry : random_corpus(random_count, max_order, seed)) {
    corpus.push_back(std::move(entry));
  }
  return corpus;
}

VerificationReport audit_lemma_equidistant(
    const std::vector<CorpusEntry>& corpus) {
  VerificationReport report;
  report.theorem_id = "lemma";
  for (const CorpusEntry& entry : corpus) {
    const Graph& g = entry.graph;
    const AutomorphismGroup grp = enumerate_automorphisms(g);
    const DistanceMatrix dist = distance_matrix(g);
    for (const VertexPair& p : similar_pairs(grp)) {
      const auto fset = fix_pair(g, grp, p.first, p.second);
      for (Vertex x = 0; x < g.order(); ++x) {
        if (dist(p.first, x) != dist(p.second, x)) continue;
        const bool outside =
            !std::binary_search(fset.begin(), fset.end(), x);
        report.add(entry.name + " " + format_pair(p.first, p.second) +
                       " x=" + std::to_string(x),
                   "x not in fix(u,v)",
                   outside ? "x not in fix(u,v)" : "x in fix(u,v)", outside);
      }
    }
  }
  return report;
}

}  // namespace fixgraph
