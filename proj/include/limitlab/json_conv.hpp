#pragma once

#include <json.hpp>

#include "limitlab/aehp.hpp"
#include "limitlab/graph.hpp"
#include "limitlab/graphon.hpp"
#include "limitlab/harness.hpp"
#include "limitlab/rational.hpp"
#include "limitlab/stability.hpp"
#include "limitlab/structure.hpp"

namespace limitlab {

using Json = nlohmann::json;

/**
 * JSON conventions used by every serializer here and by the CLI:
 *   - vertices are 1-based;
 *   - exact values are "num/den" strings, never floats;
 *   - graphs are {"n": int, "edges": [[u, v], ...]} with u < v, sorted;
 *   - doubles appear only in sampling reports.
 * Deserializers throw Error("parse-error", ...) on malformed documents and
 * "invalid-vertex" on out-of-range vertices.
 */

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json rational_to_json(const Rational& r);       // "num/den" string
Rational rational_from_json(const Json& j);

Json graphon_to_json(const StepGraphon& w);
StepGraphon graphon_from_json(const Json& j);

/** {"order", "distinct", "xs": [...], "ys": [...]} in the x_i / y_j naming. */
Json half_graph_to_json(const HalfGraphWitness& w);

/**
 * {"height", "distinct", "leaves": {"<sigma>": v}, "internals": {"<tau>": v}}
 * keyed by the branch strings; the root internal has key "".
 */
Json tree_to_json(const TreeWitness& w);

/** Inverse of half_graph_to_json; "distinct" defaults to true. */
HalfGraphWitness half_graph_from_json(const Json& j);

/** Inverse of tree_to_json; "distinct" defaults to false. */
TreeWitness tree_from_json(const Json& j);

/**
 * Recursive {"kind": "leaf"|"series"|"parallel"|"prime", ...} with "vertex"
 * on leaves, "children" + "modules" on internal nodes, and additionally
 * "quotient" on prime nodes.
 */
Json cograph_tree_to_json(const CographTree& t);

/** {"height", "labels": ["<word>", ...]} labels listed in vertex order. */
Json embedding_to_json(const C4Embedding& e);

C4Embedding embedding_from_json(const Json& j);

/** Certificate indices ("witness_index", glue "source_index") are 1-based. */
Json aehp_to_json(const AehpVerdict& v);

Json extraction_to_json(const ExtractionResult& r);

Json sample_report_to_json(const SampleReport& r);

/** Flat CSV of the same report: size,pattern,mean,std_dev,std_error,exact,flagged. */
std::string sample_report_to_csv(const SampleReport& r);

Json host_report_to_json(const HostReport& r);

Json glue_to_json(const GlueResult& r);

}  // namespace limitlab
