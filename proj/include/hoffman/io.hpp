#pragma once

#include <string>

#include "json.hpp"

#include "hoffman/hoffman_graph.hpp"
#include "hoffman/representation.hpp"
#include "hoffman/signed_graph.hpp"

namespace hoffman {

using Json = nlohmann::ordered_json;

/// {"n": n, "edges": [[u, v], ...]} with u < v, sorted.
Json to_json(const Graph& g);
/// {"n": n, "plus": [...], "minus": [...]}
Json to_json(const EdgeSignedGraph& s);
/// {"slim": [...], "fat": [...], "edges": [...]}, all sorted.
Json to_json(const HoffmanGraph& h);
/// {"dim": d, "vectors": {"<vertex id>": [...]}} keyed by slim vertex ids.
Json to_json(const HoffmanGraph& h, const ReducedRep& psi);
Json to_json(const FullRep& phi);
Json to_json(const SymmetricIntMatrix& m);

/// Parsers throw std::invalid_argument on malformed or invalid input.
Graph graph_from_json(const Json& j);
EdgeSignedGraph signed_graph_from_json(const Json& j);
HoffmanGraph hoffman_from_json(const Json& j);
ReducedRep reduced_rep_from_json(const HoffmanGraph& h, const Json& j);

/// Reads a Hoffman graph; a plain {"n", "edges"} graph is read as all slim.
HoffmanGraph read_hoffman_file(const std::string& path);

std::string to_dot(const Graph& g);
/// Fat vertices as filled squares, slim vertices as circles.
std::string to_dot(const HoffmanGraph& h);
/// Solid (+)-edges, dashed (-)-edges.
std::string to_dot(const EdgeSignedGraph& s);

}  // namespace hoffman
