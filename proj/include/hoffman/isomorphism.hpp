#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hoffman/graph.hpp"

namespace hoffman {

/// Backtracking search for colour-preserving maps between small graphs.
/// `visit` receives map[v] = image of v and returns false to stop early.
/// Colour spans may be empty (all vertices alike).
using MapVisitor = std::function<bool(std::span<const Vertex>)>;

void for_each_isomorphism(const Graph& a, std::span<const int> colors_a, const Graph& b,
                          std::span<const int> colors_b, const MapVisitor& visit);

bool isomorphic(const Graph& a, std::span<const int> colors_a, const Graph& b, std::span<const int> colors_b);
inline bool isomorphic(const Graph& a, const Graph& b) { return isomorphic(a, {}, b, {}); }

std::vector<std::vector<Vertex>> automorphisms(const Graph& g, std::span<const int> colors = {});

/// Injective colour-preserving maps of `pattern` into `host` that preserve
/// both adjacency and non-adjacency (induced embeddings).
void for_each_induced_embedding(const Graph& pattern, std::span<const int> colors_p, const Graph& host,
                                std::span<const int> colors_h, const MapVisitor& visit);

bool has_induced_embedding(const Graph& pattern, std::span<const int> colors_p, const Graph& host,
                           std::span<const int> colors_h);

}  // namespace hoffman

namespace hoffman {

/// Does tree `pattern` occur as a subgraph of tree `host`? For trees this is
/// the same as an induced embedding. Rooted dynamic programming with
/// bipartite matching of children, polynomial in both sizes. Throws
/// std::invalid_argument unless both are trees.
bool subtree_embeds(const Graph& pattern, const Graph& host);

}  // namespace hoffman
