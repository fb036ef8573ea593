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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "fixgraph/automorphism.hpp"
#include "fixgraph/fixing.hpp"
#include "fixgraph/graph.hpp"
#include "fixgraph/theorems.hpp"

namespace fixgraph {
namespace {

constexpr double kFixPairBudgetSeconds = 10.0;
constexpr double kGapBudgetSeconds = 60.0;
constexpr int kCorpusRandomGraphs = 200;
constexpr int kCorpusMaxOrder = 8;
constexpr std::uint64_t kCorpusSeed = 20260415;
constexpr int kRandomSubsetsPerGraph = 1000;
constexpr int kExtraOptimaPerGraph = 5;
constexpr std::uint64_t kSamplingSeed = 7;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(std::string what) {
    pass = false;
    if (problems.size() < 10) problems.push_back(std::move(what));
  }
};

void Report(int id, const std::string& title, const Outcome& o) {
  std::cout << "criterion " << id << " [" << title << "]: "
            << (o.pass ? "PASS" : "FAIL") << " (" << o.detail << ")\n";
  for (const std::string& p : o.problems) std::cout << "    " << p << '\n';
}

std::string Seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

void Absorb(const VerificationReport& r, Outcome& o) {
  for (const auto& inst : r.instances) {
    if (!inst.pass) {
      o.fail(r.theorem_id + " " + inst.parameters + ": expected " + inst.expected +
             ", computed " + inst.computed);
    }
  }
}

Outcome FixPairClosedForms() {
  Outcome o;
  FamilyRanges ranges;
  ranges.path = {2, 12};
  ranges.cycle = {4, 12};
  ranges.complete = {3, 9};
  ranges.bipartite_max = 5;
  const Stopwatch clock;
  const VerificationReport r = verify_family(TheoremId::kFixPairClosedForms, ranges);
  const double elapsed = clock.seconds();
  Absorb(r, o);
  if (elapsed >= kFixPairBudgetSeconds) o.fail("runtime " + Seconds(elapsed));
  o.detail = std::to_string(r.instances.size()) + " instances, " +
             std::to_string(r.failures()) + " failed, " + Seconds(elapsed);
  return o;
}

Outcome ShareClosedForms() {
  Outcome o;
  FamilyRanges ranges;
  ranges.path = {2, 12};
  ranges.cycle = {4, 12};
  ranges.complete = {3, 8};
  ranges.spiders = {{{3, 1}}, {{3, 2}}, {{3, 1}, {4, 1}}};
  const VerificationReport r = verify_family(TheoremId::kShareClosedForms, ranges);
  Absorb(r, o);
  o.detail = std::to_string(r.instances.size()) + " instances, " +
             std::to_string(r.failures()) + " failed";
  return o;
}

Outcome GapConstruction() {
  Outcome o;
  const Stopwatch clock;
  struct Expected {
    int k, det, dtr;
  };
  for (const Expected& e : {Expected{3, 4, 7}, Expected{4, 11, 16}}) {
    const Graph g = generate(FamilySpec::gap_graph(e.k));
    try {
      const AutomorphismGroup grp = enumerate_automorphisms(g);
      const int det = fixing_number(g, grp).size;
      const int dtr = determined_number(grp);
      if (det != e.det || dtr != e.dtr || dtr - det != 2 * e.k - 3) {
        o.fail("GapGraph(" + std::to_string(e.k) + "): Det=" + std::to_string(det) +
               " dtr=" + std::to_string(dtr));
      }
      Absorb(verify_gap_construction(e.k), o);
    } catch (const CapacityError& err) {
      o.fail(err.what());
    }
  }
  const double elapsed = clock.seconds();
  if (elapsed >= kGapBudgetSeconds) o.fail("runtime " + Seconds(elapsed));
  o.detail = "k=3,4 " + Seconds(elapsed);
  return o;
}

struct Member {
  const CorpusEntry* entry;
  AutomorphismGroup group;
};

Outcome DeterminedOracle(const std::vector<Member>& corpus) {
  Outcome o;
  for (const Member& m : corpus) {
    const int fast = determined_number(m.group);
    const int naive = determined_number_by_subsets(m.group);
    if (fast != naive) {
      o.fail(m.entry->name + ": fixed-point " + std::to_string(fast) + " vs subsets " +
             std::to_string(naive));
    }
  }
  o.detail = std::to_string(corpus.size()) + " graphs";
  return o;
}

// Smallest k with some k-subset of trivial pointwise stabilizer.
int StabilizerMinimum(const AutomorphismGroup& grp) {
  const int n = grp.degree();
  for (int k = 0; k <= n; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      std::vector<Vertex> d;
      for (int i = 0; i < n; ++i) {
        if (pick[i]) d.push_back(i);
      }
      if (is_fixing_set(grp, d)) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return n;
}

Outcome DualityAndBounds(const std::vector<Member>& corpus) {
  Outcome o;
  std::mt19937_64 rng(kSamplingSeed);
  int connected = 0;
  bool k3_equality = false;
  for (const Member& m : corpus) {
    const Graph& g = m.entry->graph;
    const int n = g.order();
    const int k = fixing_number(g, m.group).size;
    if (k != StabilizerMinimum(m.group)) o.fail(m.entry->name + ": (a) cover optimum");

    std::bernoulli_distribution coin(0.5);
    for (int t = 0; t < kRandomSubsetsPerGraph; ++t) {
      std::vector<Vertex> s;
      for (Vertex v = 0; v < n; ++v) {
        if (coin(rng)) s.push_back(v);
      }
      if (is_fixing_set(m.group, s) != is_determining_set(m.group, s)) {
        o.fail(m.entry->name + ": (b) fixing vs determining");
        break;
      }
    }

    const EdgeBoundCheck bound = verify_edge_bound(build_fixing_graph(g, m.group), k, n);
    if (!bound.holds) o.fail(m.entry->name + ": (c) edge bound");
    if (g == generate(FamilySpec::complete(3)) && bound.slack == 0) k3_equality = true;

    if (g.is_connected()) {
      ++connected;
      if (k > metric_dimension(g)) o.fail(m.entry->name + ": (d) fix > dim");
    }
  }
  if (!k3_equality) o.fail("(c) equality not witnessed on K_3");
  o.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(connected) +
             " connected";
  return o;
}

Outcome ShareConservation(const std::vector<Member>& corpus) {
  Outcome o;
  std::mt19937_64 rng(kSamplingSeed + 1);
  int graphs = 0;
  int sets = 0;
  for (const Member& m : corpus) {
    if (m.group.is_trivial()) continue;
    ++graphs;
    const Graph& g = m.entry->graph;
    const auto pairs = similar_pairs(m.group);
    std::vector<std::vector<Vertex>> tested{fixing_number(g, m.group).set};
    std::vector<std::vector<Vertex>> optima = minimum_fixing_sets(g, m.group);
    std::erase(optima, tested.front());
    std::shuffle(optima.begin(), optima.end(), rng);
    for (int i = 0; i < kExtraOptimaPerGraph && i < static_cast<int>(optima.size()); ++i) {
      tested.push_back(optima[i]);
    }
    for (const auto& d : tested) {
      ++sets;
      const ShareReport r = share_report(g, m.group, std::span<const Vertex>(d));
      if (r.f_sum != Rational(static_cast<std::int64_t>(pairs.size()))) {
        o.fail(m.entry->name + " D=" + format_vertex_set(d) + ": F_sum " +
               to_fraction_string(r.f_sum) + " vs |V_s| " + std::to_string(pairs.size()));
      }
    }
  }
  o.detail = std::to_string(graphs) + " non-rigid graphs, " + std::to_string(sets) +
             " fixing sets";
  return o;
}

struct CliResult {
  int code;
  std::string out;
};

CliResult Cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str()};
}

Outcome CliContract() {
  Outcome o;
  const CliResult gen = Cli({"gen", "gap", "3"});
  const CliResult dtr = Cli({"dtr"}, gen.out);
  if (gen.code != 0 || dtr.code != 0 || dtr.out != "Det=4 dtr=7 gap=3\n") {
    o.fail("gen gap 3 | dtr printed \"" + dtr.out + "\" exit " + std::to_string(dtr.code));
  }
  const CliResult verify = Cli({"verify", "gap", "--k", "3..4"});
  if (verify.code != 0) o.fail("verify gap --k 3..4 exit " + std::to_string(verify.code));
  const CliResult bad = Cli({"analyze"}, "3 1\n0 0\n");
  if (bad.code != 1) o.fail("malformed input exit " + std::to_string(bad.code));
  const CliResult first = Cli({"--json", "analyze"}, gen.out);
  const CliResult second = Cli({"--json", "analyze"}, gen.out);
  if (first.code != 0 || first.out != second.out) o.fail("JSON differs across runs");
  o.detail = "4 checks";
  return o;
}

}  // namespace
}  // namespace fixgraph

int main() {
  using namespace fixgraph;
  bool all = true;
  auto record = [&](int id, const std::string& title, Outcome o) {
    Report(id, title, o);
    all = all && o.pass;
  };

  record(1, "f-set closed forms", FixPairClosedForms());
  record(2, "share closed forms", ShareClosedForms());
  record(3, "gap construction", GapConstruction());

  const std::vector<CorpusEntry> entries =
      desk_corpus(kCorpusRandomGraphs, kCorpusMaxOrder, kCorpusSeed);
  std::vector<Member> corpus;
  corpus.reserve(entries.size());
  for (const CorpusEntry& e : entries) {
    corpus.push_back({&e, enumerate_automorphisms(e.graph)});
  }
  record(4, "dtr oracle equivalence", DeterminedOracle(corpus));
  record(5, "duality and bounds", DualityAndBounds(corpus));
  record(6, "share conservation", ShareConservation(corpus));
  record(7, "CLI contract", CliContract());

  std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << '\n';
  return all ? 0 : 1;
}
