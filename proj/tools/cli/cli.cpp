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

#include "cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "fixgraph/automorphism.hpp"
#include "fixgraph/fixing.hpp"
#include "fixgraph/graph.hpp"
#include "fixgraph/theorems.hpp"

namespace fixgraph::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::size_t cap = AutomorphismGroup::kDefaultCap;
  bool dim = false;

  std::string family;
  std::vector<int> params;
  std::string output;

  std::string file = "-";
  int u = -1;
  int v = -1;
  std::string dot_file;
  std::string fixing_set;

  std::string theorem;
  std::string k_range = "3..4";
  std::string path_range;
  std::string cycle_range;
  std::string complete_range;
  int kmn_max = -1;
  int random_graphs = -1;
  int max_order = -1;
  std::uint64_t seed = FamilyRanges{}.seed;
};

IntRange parse_range(const std::string& text) {
  IntRange range;
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      range.first = range.last = std::stoi(text);
    } else {
      range.first = std::stoi(text.substr(0, dots));
      range.last = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw UsageError("bad range \"" + text + "\" (expected A..B)");
  }
  return range;
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad vertex list \"" + text + "\"");
    }
  }
  return out;
}

Graph load_graph(const std::string& file, std::istream& in) {
  if (file == "-") return parse_edge_list(in);
  std::ifstream stream(file);
  if (!stream) throw InputError("cannot open " + file);
  return parse_edge_list(stream);
}

Json rational_json(const Rational& r) {
  return Json{{"rational", to_fraction_string(r)},
              {"decimal", to_decimal_string(r)}};
}

std::string rational_text(const Rational& r) {
  return to_fraction_string(r) + " (" + to_decimal_string(r) + ")";
}

std::string classes_text(const std::vector<std::vector<Vertex>>& classes) {
  std::string out;
  for (const auto& cls : classes) {
    if (!out.empty()) out += " ";
    out += format_vertex_set(cls);
  }
  return out;
}

std::string pair_node(const VertexPair& p) {
  return "p" + std::to_string(p.first) + "_" + std::to_string(p.second);
}

void write_row(std::ostream& out, const std::string& key,
               const std::string& value) {
  out << key;
  for (std::size_t i = key.size(); i < 30; ++i) out << ' ';
  out << value << '\n';
}

FamilySpec family_from(const Options& opt) {
  const auto& p = opt.params;
  auto need = [&](std::size_t count) {
    if (p.size() != count) {
      throw UsageError("gen " + opt.family + " takes " +
                       std::to_string(count) + " parameter(s)");
    }
  };
  try {
    if (opt.family == "kmn") {
      need(2);
      return FamilySpec::complete_bipartite(p[0], p[1]);
    }
    if (opt.family == "path" || opt.family == "cycle" ||
        opt.family == "complete" || opt.family == "gap") {
      need(1);
      if (opt.family == "path") return FamilySpec::path(p[0]);
      if (opt.family == "cycle") return FamilySpec::cycle(p[0]);
      if (opt.family == "complete") return FamilySpec::complete(p[0]);
      return FamilySpec::gap_graph(p[0]);
    }
    if (opt.family == "spider") {
      if (p.empty() || p.size() % 2 != 0) {
        throw UsageError(
            "gen spider takes pairs: TERMINAL_DEGREE LEG_LENGTH ...");
      }
      std::vector<SpiderArm> arms;
      for (std::size_t i = 0; i < p.size(); i += 2) {
        arms.push_back({p[i], p[i + 1]});
      }
      return FamilySpec::spider_tree(std::move(arms));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown family \"" + opt.family +
                   "\" (path|cycle|complete|kmn|spider|gap)");
}

int cmd_gen(const Options& opt, std::ostream& out) {
  const std::string text = serialize_edge_list(generate(family_from(opt)));
  if (opt.output.empty() || opt.output == "-") {
    out << text;
  } else {
    std::ofstream file(opt.output);
    if (!file) throw InputError("cannot write " + opt.output);
    file << text;
  }
  return kExitOk;
}

int cmd_analyze(const Options& opt, std::istream& in, std::ostream& out,
                std::ostream& err) {
  const Graph g = load_graph(opt.file, in);
  const AutomorphismGroup grp = enumerate_automorphisms(g, opt.cap);
  const OrbitPartition orbits = orbit_partition(grp);
  const auto pairs = similar_pairs(orbits);
  const TwinPartition twins = twin_classes(g);
  const FixingNumber fix = fixing_number(g, grp);
  const int dtr = determined_number(grp);
  std::optional<ShareReport> share;
  if (!grp.is_trivial()) share = share_report(g, grp);
  std::optional<int> dim;
  if (opt.dim) {
    try {
      dim = metric_dimension(g);
    } catch (const std::invalid_argument& e) {
      err << "note: metric dimension skipped: " << e.what() << '\n';
    }
  }

  if (opt.json) {
    Json doc;
    doc["order"] = g.order();
    doc["edge_count"] = g.edge_count();
    doc["group_order"] = grp.size();
    doc["orbit_classes"] = orbits.classes;
    doc["similar_pair_count"] = pairs.size();
    Json twin_json = Json::array();
    for (const TwinClass& cls : twins.classes) {
      twin_json.push_back(
          {{"kind", std::string(to_string(cls.kind))}, {"vertices", cls.vertices}});
    }
    doc["twin_classes"] = twin_json;
    doc["fixing_number"] = fix.size;
    doc["canonical_minimum_fixing_set"] = fix.set;
    doc["determined_number"] = dtr;
    doc["f_sum"] = share ? rational_json(share->f_sum) : Json(nullptr);
    doc["f_percent"] = share ? rational_json(share->f_percent) : Json(nullptr);
    if (opt.dim) doc["metric_dimension"] = dim ? Json(*dim) : Json(nullptr);
    out << doc.dump(2) << '\n';
    return kExitOk;
  }

  write_row(out, "order", std::to_string(g.order()));
  write_row(out, "edge_count", std::to_string(g.edge_count()));
  write_row(out, "group_order", std::to_string(grp.size()));
  write_row(out, "orbit_classes", classes_text(orbits.classes));
  write_row(out, "similar_pair_count", std::to_string(pairs.size()));
  std::string twin_text;
  for (const TwinClass& cls : twins.classes) {
    if (cls.kind == TwinKind::kSingleton) continue;
    if (!twin_text.empty()) twin_text += " ";
    twin_text +=
        std::string(to_string(cls.kind)) + format_vertex_set(cls.vertices);
  }
  write_row(out, "twin_classes", twin_text.empty() ? "none" : twin_text);
  write_row(out, "fixing_number", std::to_string(fix.size));
  write_row(out, "canonical_minimum_fixing_set", format_vertex_set(fix.set));
  write_row(out, "determined_number", std::to_string(dtr));
  write_row(out, "f_sum", share ? rational_text(share->f_sum) : "undefined");
  write_row(out, "f_percent",
            share ? rational_text(share->f_percent) : "undefined");
  if (opt.dim) {
    write_row(out, "metric_dimension",
              dim ? std::to_string(*dim) : "undefined");
  }
  return kExitOk;
}

int cmd_fix_pair(const Options& opt, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(opt.file, in);
  if (opt.u < 0 || opt.v < 0 || opt.u >= g.order() || opt.v >= g.order()) {
    throw UsageError("vertex id out of range");
  }
  if (opt.u == opt.v) throw UsageError("fix-pair needs two distinct vertices");
  const AutomorphismGroup grp = enumerate_automorphisms(g, opt.cap);
  const auto fset = fix_pair(g, grp, opt.u, opt.v);
  if (opt.json) {
    Json doc;
    doc["u"] = opt.u;
    doc["v"] = opt.v;
    doc["similar"] = !fset.empty();
    doc["f_set"] = fset;
    out << doc.dump(2) << '\n';
  } else if (fset.empty()) {
    out << "empty (pair not similar)\n";
  } else {
    for (std::size_t i = 0; i < fset.size(); ++i) {
      out << (i ? " " : "") << fset[i];
    }
    out << '\n';
  }
  return kExitOk;
}

void write_dot(const FixingGraphView& view, const std::string& path) {
  std::ofstream dot(path);
  if (!dot) throw InputError("cannot write " + path);
  dot << "graph fixing_graph {\n";
  dot << "  node [shape=circle];\n";
  for (Vertex x : view.left) dot << "  v" << x << ";\n";
  dot << "  node [shape=box];\n";
  for (const VertexPair& p : view.right) dot << "  " << pair_node(p) << ";\n";
  for (std::size_t i = 0; i < view.left.size(); ++i) {
    for (int j : view.fixes[i]) {
      dot << "  v" << view.left[i] << " -- " << pair_node(view.right[j])
          << ";\n";
    }
  }
  dot << "}\n";
}

int cmd_fixing_graph(const Options& opt, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(opt.file, in);
  const AutomorphismGroup grp = enumerate_automorphisms(g, opt.cap);
  const FixingGraphView view = build_fixing_graph(g, grp);
  const int k = fixing_number(g, grp).size;
  const EdgeBoundCheck bound = verify_edge_bound(view, k, g.order());
  if (!opt.dot_file.empty()) write_dot(view, opt.dot_file);
  if (opt.json) {
    Json doc;
    doc["left_count"] = view.left.size();
    doc["right_count"] = view.right.size();
    doc["edge_count"] = bound.edges;
    doc["fixing_number"] = k;
    doc["edge_bound"] = bound.bound;
    doc["slack"] = bound.slack;
    doc["bound_holds"] = bound.holds;
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  write_row(out, "|S(G)|", std::to_string(view.left.size()));
  write_row(out, "|V_s(G)|", std::to_string(view.right.size()));
  write_row(out, "edges", std::to_string(bound.edges));
  write_row(out, "fixing_number", std::to_string(k));
  write_row(out, "edge_bound", std::to_string(bound.bound));
  write_row(out, "slack", std::to_string(bound.slack));
  return kExitOk;
}

int cmd_share(const Options& opt, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(opt.file, in);
  const AutomorphismGroup grp = enumerate_automorphisms(g, opt.cap);
  std::optional<std::vector<Vertex>> chosen;
  if (!opt.fixing_set.empty()) chosen = parse_vertex_list(opt.fixing_set);
  const ShareReport report =
      chosen ? share_report(g, grp, std::span<const Vertex>(*chosen))
             : share_report(g, grp);

  if (opt.json) {
    Json doc;
    doc["fixing_set"] = report.fixing_set;
    Json shares = Json::array();
    for (const auto& [x, share] : report.shares) {
      shares.push_back({{"vertex", x}, {"share", rational_json(share)}});
    }
    doc["shares"] = shares;
    Json pairs = Json::array();
    for (const auto& [p, count] : report.fixer_count) {
      Json entry = {{"pair", {p.first, p.second}}, {"fixer_count", count}};
      auto sole = report.sole_fixers.find(p);
      entry["sole_fixer"] =
          sole == report.sole_fixers.end() ? Json(nullptr) : Json(sole->second);
      pairs.push_back(entry);
    }
    doc["pairs"] = pairs;
    Json unfixed = Json::array();
    for (const VertexPair& p : report.unfixed_pairs) {
      unfixed.push_back({p.first, p.second});
    }
    doc["unfixed_pairs"] = unfixed;
    doc["f_sum"] = rational_json(report.f_sum);
    doc["f_percent"] = rational_json(report.f_percent);
    out << doc.dump(2) << '\n';
    return kExitOk;
  }

  write_row(out, "fixing_set", format_vertex_set(report.fixing_set));
  for (const auto& [x, share] : report.shares) {
    write_row(out, "f(" + std::to_string(x) + ")", rational_text(share));
  }
  for (const auto& [p, count] : report.fixer_count) {
    std::string line = "fixers=" + std::to_string(count);
    auto sole = report.sole_fixers.find(p);
    if (sole != report.sole_fixers.end()) {
      line += " sole=" + std::to_string(sole->second);
    }
    write_row(out,
              "pair (" + std::to_string(p.first) + "," +
                  std::to_string(p.second) + ")",
              line);
  }
  for (const VertexPair& p : report.unfixed_pairs) {
    write_row(out,
              "pair (" + std::to_string(p.first) + "," +
                  std::to_string(p.second) + ")",
              "fixers=0");
  }
  write_row(out, "F_sum", rational_text(report.f_sum));
  write_row(out, "F%", rational_text(report.f_percent));
  return kExitOk;
}

int cmd_dtr(const Options& opt, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(opt.file, in);
  const AutomorphismGroup grp = enumerate_automorphisms(g, opt.cap);
  const int det = fixing_number(g, grp).size;
  const int dtr = determined_number(grp);
  if (opt.json) {
    Json doc;
    doc["determining_number"] = det;
    doc["determined_number"] = dtr;
    doc["gap"] = dtr - det;
    out << doc.dump(2) << '\n';
  } else {
    out << "Det=" << det << " dtr=" << dtr << " gap=" << dtr - det << '\n';
  }
  return kExitOk;
}

FamilyRanges ranges_from(const Options& opt) {
  FamilyRanges ranges;
  if (opt.theorem == "share") ranges.complete = {3, 8};
  if (!opt.path_range.empty()) ranges.path = parse_range(opt.path_range);
  if (!opt.cycle_range.empty()) ranges.cycle = parse_range(opt.cycle_range);
  if (!opt.complete_range.empty()) {
    ranges.complete = parse_range(opt.complete_range);
  }
  if (opt.kmn_max >= 0) ranges.bipartite_max = opt.kmn_max;
  if (opt.random_graphs >= 0) ranges.random_graphs = opt.random_graphs;
  if (opt.max_order >= 0) ranges.random_max_order = opt.max_order;
  ranges.seed = opt.seed;
  return ranges;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  std::vector<VerificationReport> reports;
  const FamilyRanges ranges = ranges_from(opt);
  try {
    if (opt.theorem == "fixpair") {
      reports.push_back(verify_family(TheoremId::kFixPairClosedForms, ranges));
    } else if (opt.theorem == "share") {
      reports.push_back(verify_family(TheoremId::kShareClosedForms, ranges));
    } else if (opt.theorem == "dim") {
      reports.push_back(
          verify_family(TheoremId::kFixingAtMostMetricDim, ranges));
    } else if (opt.theorem == "lemma") {
      reports.push_back(audit_lemma_equidistant(desk_corpus(
          ranges.random_graphs, ranges.random_max_order, ranges.seed)));
    } else if (opt.theorem == "gap") {
      const IntRange ks = parse_range(opt.k_range);
      if (ks.first > ks.last) throw UsageError("empty --k range");
      for (int k = ks.first; k <= ks.last; ++k) {
        reports.push_back(verify_gap_construction(k, opt.cap));
      }
    } else {
      throw UsageError("unknown theorem \"" + opt.theorem +
                       "\" (fixpair|share|gap|lemma|dim)");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  bool pass = true;
  for (const auto& report : reports) pass = pass && report.overall();

  if (opt.json) {
    Json doc = Json::array();
    for (const auto& report : reports) {
      Json instances = Json::array();
      for (const auto& inst : report.instances) {
        instances.push_back({{"parameters", inst.parameters},
                             {"expected", inst.expected},
                             {"computed", inst.computed},
                             {"pass", inst.pass}});
      }
      doc.push_back({{"theorem_id", report.theorem_id},
                     {"overall", report.overall()},
                     {"instances", instances}});
    }
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& report : reports) {
      out << "verify " << report.theorem_id << ": "
          << report.instances.size() << " instances, " << report.failures()
          << " failed\n";
      for (const auto& inst : report.instances) {
        if (inst.pass) continue;
        out << "  FAIL " << inst.parameters << ": expected " << inst.expected
            << ", computed " << inst.computed << '\n';
      }
    }
    out << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Fixing sets, fixing shares and determined numbers of graphs",
               "fixgraph"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "Machine-readable JSON output");
  app.add_option("--cap", opt.cap, "Automorphism group size cap")
      ->check(CLI::PositiveNumber);
  app.add_flag("--dim", opt.dim, "Include the metric dimension (analyze)");

  auto* gen = app.add_subcommand("gen", "Write a family graph as an edge list");
  gen->add_option("family", opt.family, "path|cycle|complete|kmn|spider|gap")
      ->required();
  gen->add_option("params", opt.params, "Family parameters")->required();
  gen->add_option("-o,--output", opt.output, "Output file (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "Report all parameters");
  analyze->add_option("file", opt.file, "Edge-list file, - for stdin");

  auto* fix = app.add_subcommand("fix-pair", "Print the f-set of a pair");
  fix->add_option("file", opt.file, "Edge-list file, - for stdin")->required();
  fix->add_option("u", opt.u)->required();
  fix->add_option("v", opt.v)->required();

  auto* fgraph =
      app.add_subcommand("fixing-graph", "Summarize the fixing graph");
  fgraph->add_option("file", opt.file, "Edge-list file, - for stdin");
  fgraph->add_option("--dot", opt.dot_file, "Write a Graphviz DOT export");

  auto* share = app.add_subcommand("share", "Fixing shares of a minimum set");
  share->add_option("file", opt.file, "Edge-list file, - for stdin");
  share->add_option("--set", opt.fixing_set,
                    "Comma-separated minimum fixing set (default canonical)");

  auto* dtr = app.add_subcommand("dtr", "Determining and determined numbers");
  dtr->add_option("file", opt.file, "Edge-list file, - for stdin");

  auto* verify = app.add_subcommand("verify", "Check closed forms");
  verify->add_option("theorem", opt.theorem, "fixpair|share|gap|lemma|dim")
      ->required();
  verify->add_option("--k", opt.k_range, "GapGraph k range, e.g. 3..4");
  verify->add_option("--path", opt.path_range, "Path order range");
  verify->add_option("--cycle", opt.cycle_range, "Cycle order range");
  verify->add_option("--complete", opt.complete_range, "Complete order range");
  verify->add_option("--kmn", opt.kmn_max, "Largest K_{m,n} part size");
  verify->add_option("--random", opt.random_graphs, "Random graph count");
  verify->add_option("--max-order", opt.max_order, "Random graph max order");
  verify->add_option("--seed", opt.seed, "Random corpus seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(opt, out);
    if (analyze->parsed()) return cmd_analyze(opt, in, out, err);
    if (fix->parsed()) return cmd_fix_pair(opt, in, out);
    if (fgraph->parsed()) return cmd_fixing_graph(opt, in, out);
    if (share->parsed()) return cmd_share(opt, in, out);
    if (dtr->parsed()) return cmd_dtr(opt, in, out);
    if (verify->parsed()) return cmd_verify(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << " (use --cap)\n";
    return kExitCapacity;
  } catch (const ParseError& e) {
    err << "error: " << (opt.file == "-" ? "<stdin>" : opt.file) << ": "
        << e.what() << '\n';
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitUsage;
}

}  // namespace fixgraph::cli
