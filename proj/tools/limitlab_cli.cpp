// limitlab: exact graph-limit computations from the command line.
//
// Conventions (shared with the library's JSON layer):
//   - success: exit 0, one JSON document on stdout (compact; --pretty indents;
//     `sample report --csv` emits CSV instead);
//   - input errors: exit 2 with {"error": {"code", "message"}};
//   - exact numbers are "num/den" strings; vertices are 1-based;
//   - graph arguments accept a built-in name (K5, Kbar3, C5, P4, Hhat3, C4^2),
//     a file path (JSON graph object or graph6), or a literal graph6 string;
//   - graph lists accept a file of graph6 lines or comma-separated entries;
//   - graphon arguments accept constant:<p>, c4:<level>, half:<k>, or a file
//     with a step-graphon JSON object;
//   - LIMITLAB_BUDGET (or --budget) overrides the vertex/part budget.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "limitlab/aehp.hpp"
#include "limitlab/canonical.hpp"
#include "limitlab/counting.hpp"
#include "limitlab/error.hpp"
#include "limitlab/graph.hpp"
#include "limitlab/graph_io.hpp"
#include "limitlab/graphon.hpp"
#include "limitlab/harness.hpp"
#include "limitlab/json_conv.hpp"
#include "limitlab/limits.hpp"
#include "limitlab/rational.hpp"
#include "limitlab/stability.hpp"
#include "limitlab/structure.hpp"

namespace {

using namespace limitlab;

// ---------------------------------------------------------------------------
// Argument parsing helpers. All failures become Error with a stable code.
// ---------------------------------------------------------------------------

long long parse_integer(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    require(pos == s.size(), "bad-request",
            std::string("not an integer for ") + what + ": " + s);
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error("bad-request", std::string("not an integer for ") + what + ": " + s);
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  for (const std::string& item : split_list(s))
    out.push_back(static_cast<int>(parse_integer(trimmed(item), what)));
  return out;
}

std::vector<long long> parse_ll_list(const std::string& s, const char* what) {
  std::vector<long long> out;
  for (const std::string& item : split_list(s))
    out.push_back(parse_integer(trimmed(item), what));
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  for (const std::string& item : split_list(s))
    out.push_back(Rational::parse(trimmed(item)));
  return out;
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  require(!j.is_discarded(), "parse-error", "invalid JSON in " + origin);
  return j;
}

std::uint64_t resolve_budget(const std::string& flag_value) {
  std::string source = flag_value;
  if (source.empty()) {
    const char* env = std::getenv("LIMITLAB_BUDGET");
    if (env == nullptr) return kDefaultVertexBudget;
    source = env;
  }
  const long long v = parse_integer(trimmed(source), "budget");
  require(v > 0, "bad-request", "budget must be positive");
  return static_cast<std::uint64_t>(v);
}

bool looks_like_path(const std::string& s) {
  return s.find('/') != std::string::npos || s.find('\\') != std::string::npos;
}

/** Built-in family names; returns nothing when the spec is not a name. */
std::optional<Graph> named_graph(const std::string& spec, std::uint64_t budget) {
  static const std::regex blowup_re(R"(^C4\^([0-9]{1,6})$)");
  static const std::regex family_re(R"(^(K|Kbar|C|P|Hhat)([0-9]{1,7})$)");
  std::smatch m;
  if (std::regex_match(spec, m, blowup_re))
    return recursive_blowup(Graph::cycle(4),
                            static_cast<int>(parse_integer(m[1], "level")),
                            budget);
  if (!std::regex_match(spec, m, family_re)) return std::nullopt;
  const std::string family = m[1];
  const long long n = parse_integer(m[2], "graph size");
  require(static_cast<std::uint64_t>(n) <= budget, "budget-exceeded",
          "named graph larger than the vertex budget");
  const int ni = static_cast<int>(n);
  if (family == "K") return Graph::complete(ni);
  if (family == "Kbar") return Graph::empty_graph(ni);
  if (family == "C") return Graph::cycle(ni);
  if (family == "P") return Graph::path(ni);
  return clique_empty_halfgraph(ni);  // Hhat
}

Graph parse_graph_spec(const std::string& raw, std::uint64_t budget) {
  const std::string spec = trimmed(raw);
  require(!spec.empty(), "bad-request", "empty graph argument");
  if (std::optional<Graph> g = named_graph(spec, budget)) return *g;
  if (std::filesystem::exists(spec)) {
    const std::string text = trimmed(read_text_file(spec));
    if (!text.empty() && text[0] == '{')
      return graph_from_json(parse_json_text(text, spec));
    return from_graph6(trimmed(text.substr(0, text.find('\n'))));
  }
  if (looks_like_path(spec))
    throw Error("file-not-found", "no such file: " + spec);
  return from_graph6(spec);  // literal
}

std::vector<Graph> parse_graph_list(const std::string& raw,
                                    std::uint64_t budget) {
  const std::string spec = trimmed(raw);
  require(!spec.empty(), "bad-request", "empty graph list");
  std::vector<Graph> out;
  if (std::filesystem::exists(spec)) {
    const std::string text = read_text_file(spec);
    if (trimmed(text)[0] == '[') {
      for (const Json& g : parse_json_text(text, spec))
        out.push_back(graph_from_json(g));
      return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find('\n', start), text.size());
      const std::string line = trimmed(text.substr(start, end - start));
      if (!line.empty()) out.push_back(from_graph6(line));
      start = end + 1;
    }
    require(!out.empty(), "parse-error", "no graphs in " + spec);
    return out;
  }
  for (const std::string& item : split_list(spec))
    out.push_back(parse_graph_spec(item, budget));
  return out;
}

StepGraphon parse_graphon_spec(const std::string& raw, std::uint64_t budget) {
  const std::string spec = trimmed(raw);
  require(!spec.empty(), "bad-request", "empty graphon argument");
  if (spec.rfind("constant:", 0) == 0)
    return constant_graphon(Rational::parse(spec.substr(9)));
  if (spec.rfind("c4:", 0) == 0)
    return c4_step_approx(
        static_cast<int>(parse_integer(spec.substr(3), "level")), budget);
  if (spec.rfind("half:", 0) == 0)
    return half_graphon_step(
        static_cast<int>(parse_integer(spec.substr(5), "half-graphon k")));
  if (std::filesystem::exists(spec))
    return graphon_from_json(parse_json_text(read_text_file(spec), spec));
  if (looks_like_path(spec))
    throw Error("file-not-found", "no such file: " + spec);
  throw Error("bad-request", "not a graphon description: " + spec);
}

Json graph_payload(const Graph& g) {
  Json out = graph_to_json(g);
  out["edge_count"] = g.edge_count();
  // graph6 strings grow quadratically; skip them for bulky graphs.
  if (g.n() <= 2048) out["graph6"] = to_graph6(g);
  return out;
}

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    default: return "budget-exceeded";
  }
}

int emit_error(const std::string& code, const std::string& message,
               bool pretty) {
  const Json doc{{"error", Json{{"code", code}, {"message", message}}}};
  std::cout << (pretty ? doc.dump(2) : doc.dump()) << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "limitlab: exact induced densities, stability witnesses, recursive "
      "blow-up structure, and sampling harnesses for graph limits"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  bool pretty = false;
  std::string budget_flag;
  app.add_flag("--pretty", pretty, "indent the JSON output");
  app.add_option("--budget", budget_flag,
                 "vertex/part budget (default 1000000; also LIMITLAB_BUDGET)");

  std::function<Json()> action;
  std::optional<std::string> raw_output;  // set when the output is not JSON
  auto group = [&](const char* name, const char* desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    sub->require_subcommand(0, 1);
    return sub;
  };
  auto leaf = [&](CLI::App* parent, const char* name, const char* desc) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };
  const auto budget = [&] { return resolve_budget(budget_flag); };

  // --- density ------------------------------------------------------------
  CLI::App* density = group("density", "exact induced densities");
  std::string den_pattern, den_host;
  bool den_count = false;
  density->add_option("--pattern", den_pattern, "pattern graph");
  density->add_option("--host", den_host, "host graph");
  density->add_flag("--count", den_count, "include the raw embedding count");
  density->callback([&] {
    if (action) return;  // a child subcommand already claimed the run
    action = [&]() -> Json {
      require(!den_pattern.empty() && !den_host.empty(), "bad-request",
              "density needs --pattern and --host");
      const Graph pattern = parse_graph_spec(den_pattern, budget());
      const Graph host = parse_graph_spec(den_host, budget());
      Json out{{"tind", tind(pattern, host).str()},
               {"p", p_density(pattern, host).str()}};
      if (den_count) out["count"] = count_embeddings(pattern, host).str();
      return out;
    };
  });

  CLI::App* den_aut = leaf(density, "aut", "automorphism group order");
  std::string aut_graph;
  den_aut->add_option("--graph", aut_graph, "graph")->required();
  den_aut->callback([&] {
    action = [&]() -> Json {
      return Json{{"aut", aut_order(parse_graph_spec(aut_graph, budget())).str()}};
    };
  });

  CLI::App* den_classes =
      leaf(density, "classes", "isomorphism classes on n vertices");
  int classes_n = 0;
  den_classes->add_option("--n", classes_n, "number of vertices")->required();
  den_classes->callback([&] {
    action = [&]() -> Json {
      Json list = Json::array();
      for (const CanonicalForm& c : enumerate_iso_classes(classes_n))
        list.push_back(to_graph6(c.graph()));
      return Json{{"n", classes_n},
                  {"count", list.size()},
                  {"classes", std::move(list)}};
    };
  });

  CLI::App* den_sum =
      leaf(density, "sum", "sum of p over all iso-classes of one size");
  std::string sum_host;
  int sum_n = 0;
  den_sum->add_option("--host", sum_host, "host graph")->required();
  den_sum->add_option("--n", sum_n, "pattern size")->required();
  den_sum->callback([&] {
    action = [&]() -> Json {
      const Graph host = parse_graph_spec(sum_host, budget());
      Rational total(0);
      for (const Graph& m : enumerate_iso_class_graphs(sum_n))
        total += p_density(m, host);
      return Json{{"n", sum_n}, {"sum", total.str()}};
    };
  });

  CLI::App* den_convert =
      leaf(density, "convert", "convert between graph formats");
  std::string convert_graph;
  den_convert->add_option("--graph", convert_graph, "graph")->required();
  den_convert->callback([&] {
    action = [&]() -> Json {
      const Graph g = parse_graph_spec(convert_graph, budget());
      Json out = graph_payload(g);
      // Canonical relabeling is exhaustive, so offer it only for tiny graphs.
      if (g.n() <= 10)
        out["canonical_graph6"] = to_graph6(canonical_form(g).graph());
      return out;
    };
  });

  // --- stability ----------------------------------------------------------
  CLI::App* stability = group("stability", "half-graph and tree witnesses");

  CLI::App* st_half = leaf(stability, "half-graph", "find a half-graph witness");
  std::string half_graph_arg;
  int half_order = 0;
  bool half_repeats = false;
  std::uint64_t half_budget = kDefaultSearchBudget;
  st_half->add_option("--graph", half_graph_arg, "graph")->required();
  st_half->add_option("--order", half_order, "half-graph order")->required();
  st_half->add_flag("--repeats", half_repeats, "allow repeated vertices");
  st_half->add_option("--search-budget", half_budget, "search node budget");
  st_half->callback([&] {
    action = [&]() -> Json {
      const Graph g = parse_graph_spec(half_graph_arg, budget());
      const auto r = find_half_graph(g, half_order, !half_repeats, half_budget);
      Json out{{"status", status_name(r.status)},
               {"nodes_explored", r.nodes_explored}};
      if (r.witness) out["witness"] = half_graph_to_json(*r.witness);
      return out;
    };
  });

  CLI::App* st_max = leaf(stability, "max-order", "largest half-graph order");
  std::string max_graph_arg;
  bool max_repeats = false;
  std::uint64_t max_budget = kDefaultSearchBudget;
  st_max->add_option("--graph", max_graph_arg, "graph")->required();
  st_max->add_flag("--repeats", max_repeats, "allow repeated vertices");
  st_max->add_option("--search-budget", max_budget, "search node budget");
  st_max->callback([&] {
    action = [&]() -> Json {
      const Graph g = parse_graph_spec(max_graph_arg, budget());
      return Json{{"max_order", max_half_graph_order(g, !max_repeats, max_budget)}};
    };
  });

  CLI::App* st_tree = leaf(stability, "tree", "find a branching-tree witness");
  std::string tree_graph_arg;
  int tree_height = 0;
  bool tree_distinct = false;
  std::uint64_t tree_budget = kDefaultSearchBudget;
  st_tree->add_option("--graph", tree_graph_arg, "graph")->required();
  st_tree->add_option("--height", tree_height, "tree height")->required();
  st_tree->add_flag("--distinct", tree_distinct, "require distinct vertices");
  st_tree->add_option("--search-budget", tree_budget, "search node budget");
  st_tree->callback([&] {
    action = [&]() -> Json {
      const Graph g = parse_graph_spec(tree_graph_arg, budget());
      const auto r = find_tree(g, tree_height, tree_distinct, tree_budget);
      Json out{{"status", status_name(r.status)},
               {"nodes_explored", r.nodes_explored}};
      if (r.witness) out["witness"] = tree_to_json(*r.witness);
      return out;
    };
  });

  CLI::App* st_maxtree = leaf(stability, "max-tree", "largest tree height");
  std::string maxtree_graph_arg;
  bool maxtree_distinct = false;
  std::uint64_t maxtree_budget = kDefaultSearchBudget;
  st_maxtree->add_option("--graph", maxtree_graph_arg, "graph")->required();
  st_maxtree->add_flag("--distinct", maxtree_distinct, "require distinct vertices");
  st_maxtree->add_option("--search-budget", maxtree_budget, "search node budget");
  st_maxtree->callback([&] {
    action = [&]() -> Json {
      const Graph g = parse_graph_spec(maxtree_graph_arg, budget());
      return Json{{"max_height",
                   max_tree_height(g, maxtree_distinct, maxtree_budget)}};
    };
  });

  CLI::App* st_bounds =
      leaf(stability, "bounds", "sufficient bounds linking the two measures");
  int bounds_order = -1, bounds_height = -1;
  st_bounds->add_option("--order", bounds_order,
                        "order whose absence bounds tree height");
  st_bounds->add_option("--height", bounds_height,
                        "height whose absence bounds half-graph order");
  st_bounds->callback([&] {
    action = [&]() -> Json {
      Json out = Json::object();
      require(bounds_order >= 0 || bounds_height >= 0, "bad-request",
              "bounds needs --order and/or --height");
      if (bounds_order >= 0)
        out["no_tree_of_height"] = tree_bound_from_stability(bounds_order);
      if (bounds_height >= 0)
        out["no_half_graph_of_order"] = stability_bound_from_tree(bounds_height);
      return out;
    };
  });

  CLI::App* st_report = leaf(
      stability, "report",
      "summed densities of half-graph-containing patterns along a sequence");
  std::string report_hosts;
  int report_order = 2, report_max_pattern = 4;
  st_report->add_option("--hosts", report_hosts, "host list")->required();
  st_report->add_option("--order", report_order, "half-graph order");
  st_report->add_option("--max-pattern", report_max_pattern,
                        "largest pattern size (<= 7)");
  st_report->callback([&] {
    action = [&]() -> Json {
      const std::vector<Graph> hosts = parse_graph_list(report_hosts, budget());
      Json values = Json::array();
      for (const Rational& v :
           sequence_stability_report(hosts, report_order, report_max_pattern))
        values.push_back(v.str());
      return Json{{"order", report_order},
                  {"max_pattern", report_max_pattern},
                  {"values", std::move(values)}};
    };
  });

  CLI::App* st_verify = leaf(stability, "verify", "check a witness file");
  std::string verify_graph_arg, verify_witness_path;
  st_verify->add_option("--graph", verify_graph_arg, "graph")->required();
  st_verify->add_option("--witness", verify_witness_path,
                        "witness JSON file")->required();
  st_verify->callback([&] {
    action = [&]() -> Json {
      const Graph g = parse_graph_spec(verify_graph_arg, budget());
      const Json doc = parse_json_text(read_text_file(verify_witness_path),
                                       verify_witness_path);
      const auto in_range = [&](const std::vector<int>& vs) {
        for (int v : vs)
          require(v >= 0 && v < g.n(), "invalid-vertex",
                  "witness vertex out of range");
      };
      if (doc.contains("xs")) {
        const HalfGraphWitness w = half_graph_from_json(doc);
        in_range(w.xs);
        in_range(w.ys);
        return Json{{"kind", "half-graph"}, {"valid", verify_half_graph(g, w)}};
      }
      const TreeWitness w = tree_from_json(doc);
      in_range(w.leaves);
      in_range(w.internals);
      return Json{{"kind", "tree"}, {"valid", verify_tree(g, w)}};
    };
  });

  // --- structure ----------------------------------------------------------
  CLI::App* structure = group("structure", "modular structure and blow-ups");

  CLI::App* sx_decompose =
      leaf(structure, "decompose", "modular decomposition tree");
  std::string decompose_graph_arg;
  sx_decompose->add_option("--graph", decompose_graph_arg, "graph")->required();
  sx_decompose->callback([&] {
    action = [&]() -> Json {
      return cograph_tree_to_json(
          modular_decomposition(parse_graph_spec(decompose_graph_arg, budget())));
    };
  });

  CLI::App* sx_cc = leaf(structure, "is-in-cc",
                         "membership in the recursive blow-up class");
  std::string cc_graph_arg;
  sx_cc->add_option("--graph", cc_graph_arg, "graph")->required();
  sx_cc->callback([&] {
    action = [&]() -> Json {
      const CcMembership r = is_in_cc(parse_graph_spec(cc_graph_arg, budget()));
      return Json{{"member", r.member},
                  {"certificate", cograph_tree_to_json(r.certificate)}};
    };
  });

  CLI::App* sx_subst =
      leaf(structure, "substitute", "replace a vertex by a module");
  std::string subst_graph_arg, subst_module_arg;
  int subst_vertex = 0;
  sx_subst->add_option("--graph", subst_graph_arg, "outer graph")->required();
  sx_subst->add_option("--vertex", subst_vertex, "vertex to replace (1-based)")
      ->required();
  sx_subst->add_option("--module", subst_module_arg, "module graph")->required();
  sx_subst->callback([&] {
    action = [&]() -> Json {
      const Graph g = parse_graph_spec(subst_graph_arg, budget());
      const Graph f = parse_graph_spec(subst_module_arg, budget());
      return graph_payload(substitute(g, subst_vertex - 1, f));
    };
  });

  CLI::App* sx_blowup = leaf(structure, "blowup", "recursive blow-up of a base");
  std::string blowup_base_arg;
  int blowup_level = 0;
  bool blowup_with_labels = false;
  sx_blowup->add_option("--base", blowup_base_arg, "base graph")->required();
  sx_blowup->add_option("--level", blowup_level, "blow-up level")->required();
  sx_blowup->add_flag("--labels", blowup_with_labels,
                      "include the coordinate labels");
  sx_blowup->callback([&] {
    action = [&]() -> Json {
      const Graph base = parse_graph_spec(blowup_base_arg, budget());
      Json out = graph_payload(recursive_blowup(base, blowup_level, budget()));
      if (blowup_with_labels) {
        Json labels = Json::array();
        for (const std::string& s : blowup_labels(base.n(), blowup_level))
          labels.push_back(s);
        out["labels"] = std::move(labels);
      }
      return out;
    };
  });

  CLI::App* sx_hhat =
      leaf(structure, "hhat", "clique + independent set with a half-graph between");
  int hhat_n = 0;
  sx_hhat->add_option("--n", hhat_n, "half-graph order")->required();
  sx_hhat->callback([&] {
    action = [&]() -> Json { return graph_payload(clique_empty_halfgraph(hhat_n)); };
  });

  CLI::App* sx_embed =
      leaf(structure, "embed", "embed a class member into a recursive blow-up");
  std::string embed_graph_arg;
  sx_embed->add_option("--graph", embed_graph_arg, "graph")->required();
  sx_embed->callback([&] {
    action = [&]() -> Json {
      return embedding_to_json(
          embed_into_c4(parse_graph_spec(embed_graph_arg, budget())));
    };
  });

  CLI::App* sx_verify = leaf(structure, "verify", "check an embedding file");
  std::string everify_graph_arg, everify_path;
  sx_verify->add_option("--graph", everify_graph_arg, "graph")->required();
  sx_verify->add_option("--embedding", everify_path, "embedding JSON file")
      ->required();
  sx_verify->callback([&] {
    action = [&]() -> Json {
      const Graph g = parse_graph_spec(everify_graph_arg, budget());
      const C4Embedding e = embedding_from_json(
          parse_json_text(read_text_file(everify_path), everify_path));
      return Json{{"valid", verify_embedding(g, e)}};
    };
  });

  // --- aehp ---------------------------------------------------------------
  CLI::App* aehp = group("aehp", "approximate Erdos-Hajnal decision");
  std::string aehp_forbidden;
  aehp->add_option("--forbidden", aehp_forbidden,
                   "forbidden family (file of graph6 lines, or comma-separated "
                   "names/graph6)");
  aehp->callback([&] {
    if (action) return;
    action = [&]() -> Json {
      require(!aehp_forbidden.empty(), "bad-request", "aehp needs --forbidden");
      return aehp_to_json(decide_aehp(parse_graph_list(aehp_forbidden, budget())));
    };
  });

  CLI::App* aehp_member =
      leaf(aehp, "member", "does the graph keep positive density in the limit");
  std::string member_graph_arg;
  aehp_member->add_option("--graph", member_graph_arg, "graph")->required();
  aehp_member->callback([&] {
    action = [&]() -> Json {
      return Json{{"member",
                   persistent_member(parse_graph_spec(member_graph_arg, budget()))}};
    };
  });

  // --- limits -------------------------------------------------------------
  CLI::App* limits = group("limits", "exact limit values and step graphons");

  CLI::App* lm_phi = leaf(limits, "phi-c4",
                          "limiting clique/anticlique densities of the "
                          "recursive 4-cycle blow-up");
  int phi_n = 0;
  lm_phi->add_option("--n", phi_n, "clique size")->required();
  lm_phi->callback([&] {
    action = [&]() -> Json {
      return Json{{"clique", phi_c4_clique(phi_n).str()},
                  {"anticlique", phi_c4_anticlique(phi_n).str()}};
    };
  });

  CLI::App* lm_permuton =
      leaf(limits, "permuton", "agreement-limit clique density 1/n!");
  int permuton_n = 0;
  lm_permuton->add_option("--n", permuton_n, "clique size")->required();
  lm_permuton->callback([&] {
    action = [&]() -> Json {
      return Json{{"density", permuton_agreement_density(permuton_n).str()}};
    };
  });

  CLI::App* lm_decay = leaf(limits, "root-decay", "n-th roots of a value family");
  std::string decay_family, decay_values;
  int decay_max_n = 12;
  lm_decay->add_option("--family", decay_family,
                       "clique | anticlique | permuton");
  lm_decay->add_option("--max-n", decay_max_n, "largest n for --family");
  lm_decay->add_option("--values", decay_values, "explicit value list a/b,c/d,...");
  lm_decay->callback([&] {
    action = [&]() -> Json {
      std::vector<Rational> values;
      if (!decay_values.empty()) {
        values = parse_rational_list(decay_values);
      } else {
        require(!decay_family.empty(), "bad-request",
                "root-decay needs --family or --values");
        require(decay_max_n >= 1, "bad-request", "--max-n must be positive");
        for (int n = 1; n <= decay_max_n; ++n) {
          if (decay_family == "clique") values.push_back(phi_c4_clique(n));
          else if (decay_family == "anticlique") values.push_back(phi_c4_anticlique(n));
          else if (decay_family == "permuton") values.push_back(permuton_agreement_density(n));
          else throw Error("unknown-name", "unknown family: " + decay_family);
        }
      }
      Json roots = Json::array();
      for (double r : root_decay(values)) roots.push_back(r);
      return Json{{"roots", std::move(roots)}};
    };
  });

  CLI::App* lm_tind = leaf(limits, "tind", "exact pattern density in a graphon");
  std::string gtind_pattern, gtind_graphon;
  lm_tind->add_option("--pattern", gtind_pattern, "pattern graph")->required();
  lm_tind->add_option("--graphon", gtind_graphon, "graphon (constant:<p> | c4:<level> | half:<k> | JSON file)")->required();
  lm_tind->callback([&] {
    action = [&]() -> Json {
      const Graph pattern = parse_graph_spec(gtind_pattern, budget());
      const StepGraphon w = parse_graphon_spec(gtind_graphon, budget());
      return Json{{"tind", tind_graphon(pattern, w).str()}};
    };
  });

  CLI::App* lm_c4 =
      leaf(limits, "c4-approx", "level-l step approximation of the blow-up limit");
  int c4_level = 1;
  lm_c4->add_option("--level", c4_level, "level")->required();
  lm_c4->callback([&] {
    action = [&]() -> Json {
      return graphon_to_json(c4_step_approx(c4_level, budget()));
    };
  });

  CLI::App* lm_half = leaf(limits, "half-graphon", "2k-part half-graph step graphon");
  int half_k = 1;
  lm_half->add_option("--k", half_k, "parts per side")->required();
  lm_half->callback([&] {
    action = [&]() -> Json { return graphon_to_json(half_graphon_step(half_k)); };
  });

  CLI::App* lm_refine = leaf(limits, "refine", "split every part into equal halves");
  std::string refine_graphon;
  lm_refine->add_option("--graphon", refine_graphon, "graphon (constant:<p> | c4:<level> | half:<k> | JSON file)")->required();
  lm_refine->callback([&] {
    action = [&]() -> Json {
      return graphon_to_json(refine_halves(parse_graphon_spec(refine_graphon, budget())));
    };
  });

  CLI::App* lm_rescale =
      leaf(limits, "rescale", "reweight parts onto a subgraphon");
  std::string rescale_graphon, rescale_weights;
  lm_rescale->add_option("--graphon", rescale_graphon, "graphon (constant:<p> | c4:<level> | half:<k> | JSON file)")->required();
  lm_rescale->add_option("--weights", rescale_weights,
                         "per-part weights w1,w2,... in [0,1]")->required();
  lm_rescale->callback([&] {
    action = [&]() -> Json {
      const StepGraphon w = parse_graphon_spec(rescale_graphon, budget());
      WeightFunction f{parse_rational_list(rescale_weights)};
      return graphon_to_json(rescale_subgraphon(w, f));
    };
  });

  // --- sample -------------------------------------------------------------
  CLI::App* sample = group("sample", "seeded sampling and convergence reports");

  CLI::App* sm_graph = leaf(sample, "graph", "one W-random graph");
  std::string sample_graphon;
  int sample_n = 0;
  std::uint64_t sample_seed = 0;
  sm_graph->add_option("--graphon", sample_graphon, "graphon (constant:<p> | c4:<level> | half:<k> | JSON file)")->required();
  sm_graph->add_option("--n", sample_n, "vertex count")->required();
  sm_graph->add_option("--seed", sample_seed, "seed")->required();
  sm_graph->callback([&] {
    action = [&]() -> Json {
      const StepGraphon w = parse_graphon_spec(sample_graphon, budget());
      require(static_cast<std::uint64_t>(sample_n) <= budget(),
              "budget-exceeded", "sample size exceeds the vertex budget");
      return graph_payload(sample_graph(w, sample_n, sample_seed));
    };
  });

  CLI::App* sm_report =
      leaf(sample, "report", "empirical densities vs exact graphon values");
  std::string rep_graphon, rep_sizes, rep_patterns;
  int rep_samples = 20;
  std::uint64_t rep_seed = 1;
  bool rep_csv = false;
  sm_report->add_option("--graphon", rep_graphon, "graphon (constant:<p> | c4:<level> | half:<k> | JSON file)")->required();
  sm_report->add_option("--sizes", rep_sizes, "sample sizes n1,n2,...")->required();
  sm_report->add_option("--patterns", rep_patterns, "pattern list")->required();
  sm_report->add_option("--samples", rep_samples, "samples per size");
  sm_report->add_option("--seed", rep_seed, "base seed");
  sm_report->add_flag("--csv", rep_csv, "emit CSV instead of JSON");
  sm_report->callback([&] {
    action = [&]() -> Json {
      const StepGraphon w = parse_graphon_spec(rep_graphon, budget());
      const SampleReport report = convergence_report(
          w, parse_int_list(rep_sizes, "sizes"),
          parse_graph_list(rep_patterns, budget()), rep_samples, rep_seed);
      if (rep_csv) raw_output = sample_report_to_csv(report);
      return sample_report_to_json(report);
    };
  });

  CLI::App* sm_hosts =
      leaf(sample, "hosts", "exact density traces along a host sequence");
  std::string hosts_list, hosts_patterns;
  sm_hosts->add_option("--hosts", hosts_list, "host list")->required();
  sm_hosts->add_option("--patterns", hosts_patterns, "pattern list")->required();
  sm_hosts->callback([&] {
    action = [&]() -> Json {
      return host_report_to_json(
          host_convergence_report(parse_graph_list(hosts_list, budget()),
                                  parse_graph_list(hosts_patterns, budget())));
    };
  });

  // --- extract ------------------------------------------------------------
  CLI::App* extract = group("extract", "almost-uniform set extraction");
  std::string ext_graph_arg, ext_epsilon = "1/4";
  extract->add_option("--graph", ext_graph_arg, "graph");
  extract->add_option("--epsilon", ext_epsilon, "threshold in (0, 1/2)");
  extract->callback([&] {
    if (action) return;
    action = [&]() -> Json {
      require(!ext_graph_arg.empty(), "bad-request", "extract needs --graph");
      return extraction_to_json(
          extract_almost_uniform(parse_graph_spec(ext_graph_arg, budget()),
                                 Rational::parse(ext_epsilon)));
    };
  });

  CLI::App* ext_check = leaf(extract, "check", "is a subset epsilon-good");
  std::string check_graph_arg, check_subset, check_epsilon = "1/4";
  ext_check->add_option("--graph", check_graph_arg, "graph")->required();
  ext_check->add_option("--subset", check_subset, "vertices v1,v2,... (1-based)")
      ->required();
  ext_check->add_option("--epsilon", check_epsilon, "threshold");
  ext_check->callback([&] {
    action = [&]() -> Json {
      const Graph g = parse_graph_spec(check_graph_arg, budget());
      std::vector<int> subset;
      for (int v : parse_int_list(check_subset, "subset")) {
        require(v >= 1 && v <= g.n(), "invalid-vertex",
                "subset vertex out of range");
        subset.push_back(v - 1);
      }
      return Json{{"good",
                   epsilon_good_check(g, subset, Rational::parse(check_epsilon))}};
    };
  });

  // --- glue ---------------------------------------------------------------
  CLI::App* glue = group("glue", "prefix-set gluing along checkpoints");
  std::string glue_checkpoints, glue_sets_path, glue_name;
  glue->add_option("--checkpoints", glue_checkpoints, "sizes n1,n2,...");
  glue->add_option("--sets", glue_sets_path, "JSON file: one array per checkpoint");
  glue->add_option("--name", glue_name,
                   "built-in countable example supplying the prefix sets");
  glue->callback([&] {
    if (action) return;
    action = [&]() -> Json {
      require(!glue_checkpoints.empty(), "bad-request",
              "glue needs --checkpoints");
      const std::vector<long long> cps =
          parse_ll_list(glue_checkpoints, "checkpoints");
      std::vector<std::vector<long long>> sets;
      if (!glue_name.empty()) {
        const PrefixGraphOracle oracle = countable_example_oracle(glue_name);
        for (long long n : cps) sets.push_back(prefix_member_set(oracle, n));
      } else {
        require(!glue_sets_path.empty(), "bad-request",
                "glue needs --sets or --name");
        const Json doc = parse_json_text(read_text_file(glue_sets_path),
                                         glue_sets_path);
        require(doc.is_array(), "parse-error",
                "sets file must be a JSON array of arrays");
        for (const Json& arr : doc) {
          require(arr.is_array(), "parse-error", "each set must be an array");
          sets.emplace_back();
          for (const Json& v : arr) {
            require(v.is_number_integer(), "parse-error",
                    "set elements must be integers");
            sets.back().push_back(v.get<long long>());
          }
        }
      }
      return glue_to_json(glue_prefix_sets(cps, sets));
    };
  });

  CLI::App* glue_density =
      leaf(glue, "density", "exact prefix edge density of a countable example");
  std::string gd_name = "union-of-log-cliques";
  long long gd_n = 0;
  glue_density->add_option("--name", gd_name, "countable example name");
  glue_density->add_option("--n", gd_n, "prefix length")->required();
  glue_density->callback([&] {
    action = [&]() -> Json {
      const PrefixGraphOracle oracle = countable_example_oracle(gd_name);
      return Json{{"n", gd_n},
                  {"members", prefix_member_count(oracle, gd_n)},
                  {"density", prefix_edge_density(oracle, gd_n).str()}};
    };
  });

  // --- run ----------------------------------------------------------------
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error("bad-request", e.what(), pretty);
  } catch (const Error& e) {
    return emit_error(e.code(), e.what(), pretty);
  }

  try {
    require(static_cast<bool>(action), "bad-request",
            "nothing to do; see --help");
    const Json result = action();
    if (raw_output) {
      std::cout << *raw_output;
    } else {
      std::cout << (pretty ? result.dump(2) : result.dump()) << "\n";
    }
    return 0;
  } catch (const Error& e) {
    return emit_error(e.code(), e.what(), pretty);
  } catch (const std::exception& e) {
    return emit_error("internal-error", e.what(), pretty);
  }
}
