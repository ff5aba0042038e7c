#pragma once

#include <string>

#include "limitlab/graph.hpp"

namespace limitlab {

/** Encode in graph6 format (printable ASCII, upper triangle column-major). */
std::string to_graph6(const Graph& g);

/** Decode a graph6 line; an optional ">>graph6<<" header is accepted. */
Graph from_graph6(const std::string& line);

/** Read a whole file as a single graph6 line (surrounding whitespace ignored). */
Graph read_graph6_file(const std::string& path);

/** Read the entire contents of a file; throws "file-not-found" on failure. */
std::string read_text_file(const std::string& path);

}  // namespace limitlab
