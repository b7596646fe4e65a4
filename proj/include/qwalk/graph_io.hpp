#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qwalk/graphs.hpp"

namespace qwalk {

// A parsed graph description: either a circulant on Z_n or a circulant on a
// product of cyclic groups.  The convenience input types (cycle, complete,
// hypercube) normalize into one of these two.
using GraphSpec = std::variant<CirculantSpec, GroupCirculantSpec>;

index_t graph_order(const GraphSpec& spec);
std::vector<index_t> graph_factors(const GraphSpec& spec);

// Parses a JSON graph description.  Accepted forms:
//   {"type":"cycle","n":8}
//   {"type":"complete","n":5}
//   {"type":"circulant","n":12,"connection":[1,3],"weights":[1.0,0.5]}
//   {"type":"hypercube","dimension":4}
//   {"type":"group","factors":[2,4],"connection":[[1,0],[0,1]]}
// "weights" is optional and defaults to all ones.  Throws
// std::invalid_argument naming the offending key or element; syntax errors
// carry the parser's byte/column position.
GraphSpec parse_graph_json(const std::string& text);

// Resolves a --graph argument: inline JSON if it starts with '{', standard
// input if "-", otherwise a path to a JSON file.
GraphSpec load_graph_argument(const std::string& arg);

}  // namespace qwalk
