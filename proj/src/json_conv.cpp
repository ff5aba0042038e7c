#include "limitlab/json_conv.hpp"

#include <string>

#include "limitlab/error.hpp"
#include "limitlab/graph_io.hpp"

namespace limitlab {

namespace {

long long int_field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key) && j[key].is_number_integer(),
          "parse-error", std::string("expected integer field \"") + key + "\"");
  return j[key].get<long long>();
}

std::string binary_string(int value, int length) {
  std::string s(static_cast<std::size_t>(length), '0');
  for (int b = 0; b < length; ++b)
    if ((value >> (length - 1 - b)) & 1) s[static_cast<std::size_t>(b)] = '1';
  return s;
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return Json{{"n", g.n()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  const long long n = int_field(j, "n");
  require(n >= 0, "parse-error", "vertex count must be nonnegative");
  require(n <= 10'000'000, "size-violation", "graph too large");
  require(j.contains("edges") && j["edges"].is_array(), "parse-error",
          "expected array field \"edges\"");
  Graph g(static_cast<int>(n));
  for (const Json& e : j["edges"]) {
    require(e.is_array() && e.size() == 2 && e[0].is_number_integer() &&
                e[1].is_number_integer(),
            "parse-error", "each edge must be a pair of integers");
    const long long u = e[0].get<long long>(), v = e[1].get<long long>();
    require(u >= 1 && u <= n && v >= 1 && v <= n, "invalid-vertex",
            "edge endpoint out of range");
    require(u != v, "parse-error", "self-loops are not allowed");
    g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  return g;
}

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  require(j.is_string(), "parse-error",
          "expected a \"num/den\" string or an integer");
  return Rational::parse(j.get<std::string>());
}

Json graphon_to_json(const StepGraphon& w) {
  Json parts = Json::array(), values = Json::array();
  for (const Rational& p : w.parts) parts.push_back(p.str());
  for (const auto& row : w.values) {
    Json jrow = Json::array();
    for (const Rational& v : row) jrow.push_back(v.str());
    values.push_back(std::move(jrow));
  }
  return Json{{"parts", std::move(parts)}, {"values", std::move(values)}};
}

StepGraphon graphon_from_json(const Json& j) {
  require(j.is_object() && j.contains("parts") && j["parts"].is_array() &&
              j.contains("values") && j["values"].is_array(),
          "parse-error", "expected {\"parts\": [...], \"values\": [[...]]}");
  StepGraphon w;
  for (const Json& p : j["parts"]) w.parts.push_back(rational_from_json(p));
  for (const Json& row : j["values"]) {
    require(row.is_array(), "parse-error", "values rows must be arrays");
    w.values.emplace_back();
    for (const Json& v : row) w.values.back().push_back(rational_from_json(v));
  }
  w.validate();
  return w;
}

Json half_graph_to_json(const HalfGraphWitness& w) {
  Json xs = Json::array(), ys = Json::array();
  for (int v : w.xs) xs.push_back(v + 1);
  for (int v : w.ys) ys.push_back(v + 1);
  return Json{{"order", w.order},
              {"distinct", w.distinct_mode},
              {"xs", std::move(xs)},
              {"ys", std::move(ys)}};
}

Json tree_to_json(const TreeWitness& w) {
  Json leaves = Json::object(), internals = Json::object();
  for (std::size_t i = 0; i < w.leaves.size(); ++i)
    leaves[binary_string(static_cast<int>(i), w.height)] = w.leaves[i] + 1;
  int level = 0, offset = 0;
  for (std::size_t i = 0; i < w.internals.size(); ++i) {
    if (static_cast<int>(i) - offset == (1 << level)) {
      offset += 1 << level;
      ++level;
    }
    internals[binary_string(static_cast<int>(i) - offset, level)] =
        w.internals[i] + 1;
  }
  return Json{{"height", w.height},
              {"distinct", w.distinct_mode},
              {"leaves", std::move(leaves)},
              {"internals", std::move(internals)}};
}

namespace {

std::vector<int> vertex_list_from_json(const Json& j, const char* what) {
  require(j.is_array(), "parse-error",
          std::string("expected an array of vertices for ") + what);
  std::vector<int> out;
  for (const Json& v : j) {
    require(v.is_number_integer() && v.get<long long>() >= 1, "parse-error",
            std::string("vertices must be positive integers in ") + what);
    out.push_back(static_cast<int>(v.get<long long>() - 1));
  }
  return out;
}

int keyed_vertex(const Json& obj, const std::string& key, const char* what) {
  require(obj.contains(key) && obj[key].is_number_integer() &&
              obj[key].get<long long>() >= 1,
          "parse-error",
          std::string(what) + " is missing branch key \"" + key + "\"");
  return static_cast<int>(obj[key].get<long long>() - 1);
}

}  // namespace

HalfGraphWitness half_graph_from_json(const Json& j) {
  require(j.is_object() && j.contains("xs") && j.contains("ys"), "parse-error",
          "half-graph witness needs \"xs\" and \"ys\"");
  HalfGraphWitness w;
  w.xs = vertex_list_from_json(j["xs"], "xs");
  w.ys = vertex_list_from_json(j["ys"], "ys");
  require(w.xs.size() == w.ys.size(), "parse-error",
          "xs and ys must have the same length");
  w.order = static_cast<int>(w.xs.size());
  w.distinct_mode = j.value("distinct", true);
  return w;
}

TreeWitness tree_from_json(const Json& j) {
  require(j.is_object() && j.contains("height") &&
              j["height"].is_number_integer() && j.contains("leaves") &&
              j["leaves"].is_object() && j.contains("internals") &&
              j["internals"].is_object(),
          "parse-error",
          "tree witness needs \"height\", \"leaves\", \"internals\"");
  TreeWitness w;
  const long long h = j["height"].get<long long>();
  require(h >= 0 && h <= 25, "size-violation", "tree height out of range");
  w.height = static_cast<int>(h);
  w.distinct_mode = j.value("distinct", false);
  w.leaves.resize(static_cast<std::size_t>(1) << w.height);
  for (std::size_t i = 0; i < w.leaves.size(); ++i)
    w.leaves[i] = keyed_vertex(j["leaves"],
                               binary_string(static_cast<int>(i), w.height),
                               "leaves");
  for (int m = 0; m < w.height; ++m)
    for (int v = 0; v < (1 << m); ++v)
      w.internals.push_back(
          keyed_vertex(j["internals"], binary_string(v, m), "internals"));
  return w;
}

Json cograph_tree_to_json(const CographTree& t) {
  Json node = Json::object();
  switch (t.kind) {
    case CographTree::Kind::leaf:
      node["kind"] = "leaf";
      node["vertex"] = t.vertex + 1;
      return node;
    case CographTree::Kind::series:
      node["kind"] = "series";
      break;
    case CographTree::Kind::parallel:
      node["kind"] = "parallel";
      break;
    case CographTree::Kind::prime:
      node["kind"] = "prime";
      node["quotient"] = graph_to_json(t.quotient);
      break;
  }
  Json children = Json::array(), modules = Json::array();
  for (const CographTree& c : t.children) children.push_back(cograph_tree_to_json(c));
  for (const auto& part : t.modules) {
    Json m = Json::array();
    for (int v : part) m.push_back(v + 1);
    modules.push_back(std::move(m));
  }
  node["children"] = std::move(children);
  node["modules"] = std::move(modules);
  return node;
}

Json embedding_to_json(const C4Embedding& e) {
  Json labels = Json::array();
  for (const std::string& s : e.labels) labels.push_back(s);
  return Json{{"height", e.height}, {"labels", std::move(labels)}};
}

C4Embedding embedding_from_json(const Json& j) {
  require(j.is_object() && j.contains("height") &&
              j["height"].is_number_integer() && j.contains("labels") &&
              j["labels"].is_array(),
          "parse-error", "embedding needs \"height\" and \"labels\"");
  C4Embedding e;
  e.height = static_cast<int>(j["height"].get<long long>());
  for (const Json& s : j["labels"]) {
    require(s.is_string(), "parse-error", "labels must be strings");
    e.labels.push_back(s.get<std::string>());
  }
  return e;
}

Json aehp_to_json(const AehpVerdict& v) {
  Json out{{"holds", v.holds}, {"ehp_corollary", v.ehp_corollary}};
  if (v.holds) {
    // 1-based position in the forbidden family, matching the vertex convention.
    out["witness_index"] = *v.witness_index + 1;
    out["witness"] = graph_to_json(*v.witness);
    out["tree"] = cograph_tree_to_json(*v.witness_tree);
    out["embedding"] = embedding_to_json(*v.witness_embedding);
  }
  return out;
}

Json extraction_to_json(const ExtractionResult& r) {
  Json part = Json::array(), trace = Json::array();
  for (int v : r.part) part.push_back(v + 1);
  for (const SplitRecord& s : r.split_trace)
    trace.push_back(Json{{"pivot", s.pivot + 1}, {"side", s.inside ? "in" : "out"}});
  return Json{{"part", std::move(part)},
              {"internal_density", r.internal_density.str()},
              {"homogeneity", r.homogeneity.str()},
              {"epsilon", r.epsilon.str()},
              {"split_trace", std::move(trace)},
              {"total_splits", r.total_splits},
              {"max_depth", r.max_depth}};
}

namespace {

Json pattern_summary_to_json(const PatternSummary& p) {
  return Json{{"pattern", to_graph6(p.pattern)}, {"mean", p.mean},
              {"std_dev", p.std_dev},           {"std_error", p.std_error},
              {"exact", p.exact},               {"flagged", p.flagged}};
}

}  // namespace

Json sample_report_to_json(const SampleReport& r) {
  Json sizes = Json::array();
  for (const SizeSummary& s : r.sizes) {
    Json patterns = Json::array();
    for (const PatternSummary& p : s.patterns)
      patterns.push_back(pattern_summary_to_json(p));
    sizes.push_back(Json{{"size", s.size}, {"patterns", std::move(patterns)}});
  }
  return Json{{"seed", r.seed},
              {"samples", r.samples},
              {"any_flagged", r.any_flagged},
              {"sizes", std::move(sizes)}};
}

std::string sample_report_to_csv(const SampleReport& r) {
  std::string csv = "size,pattern,mean,std_dev,std_error,exact,flagged\n";
  for (const SizeSummary& s : r.sizes)
    for (const PatternSummary& p : s.patterns) {
      csv += std::to_string(s.size) + ',' + to_graph6(p.pattern) + ',';
      csv += Json(p.mean).dump() + ',' + Json(p.std_dev).dump() + ',';
      csv += Json(p.std_error).dump() + ',' + Json(p.exact).dump() + ',';
      csv += p.flagged ? "true\n" : "false\n";
    }
  return csv;
}

Json host_report_to_json(const HostReport& r) {
  Json patterns = Json::array();
  for (const HostPatternTrace& t : r.patterns) {
    Json values = Json::array();
    for (const Rational& v : t.values) values.push_back(v.str());
    patterns.push_back(Json{{"pattern", to_graph6(t.pattern)},
                            {"values", std::move(values)},
                            {"convergent", t.convergent}});
  }
  return Json{{"patterns", std::move(patterns)}};
}

Json glue_to_json(const GlueResult& r) {
  Json glued = Json::array(), checkpoints = Json::array();
  for (long long v : r.glued) glued.push_back(v);
  for (const GlueCheckpoint& c : r.checkpoints)
    checkpoints.push_back(Json{{"m", c.m},
                               {"source_index", c.source_index + 1},
                               {"sym_diff", c.sym_diff},
                               {"weak_bound", c.weak_bound},
                               {"strong_applicable", c.strong_applicable},
                               {"strong_ok", c.strong_ok},
                               {"upper_density", c.upper_density.str()}});
  return Json{{"glued", std::move(glued)}, {"checkpoints", std::move(checkpoints)}};
}

}  // namespace limitlab
