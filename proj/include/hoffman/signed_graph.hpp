#pragma once

#include <span>
#include <vector>

#include "hoffman/graph.hpp"

namespace hoffman {

/// Graph whose edges carry a sign. signs()[i] belongs to underlying().edges()[i].
class EdgeSignedGraph {
public:
    EdgeSignedGraph() = default;
    /// Throws std::invalid_argument if plus and minus overlap or are invalid edges.
    EdgeSignedGraph(int n, std::vector<Edge> plus, std::vector<Edge> minus);
    EdgeSignedGraph(Graph underlying, std::vector<int> signs);

    const Graph& underlying() const { return g_; }
    const std::vector<int>& signs() const { return signs_; }
    int order() const { return g_.order(); }
    /// +1, -1, or 0 when u and v are not adjacent.
    int sign(Vertex u, Vertex v) const;

    std::vector<Edge> plus_edges() const;
    std::vector<Edge> minus_edges() const;

    friend bool operator==(const EdgeSignedGraph&, const EdgeSignedGraph&) = default;

private:
    Graph g_;
    std::vector<int> signs_;
};

SymmetricIntMatrix signed_adjacency(const EdgeSignedGraph& s);

/// Flips the sign of every edge with exactly one endpoint in `u`.
EdgeSignedGraph switch_at(const EdgeSignedGraph& s, std::span<const Vertex> u);

/// True iff some isomorphism of the underlying graphs maps s1 onto a
/// switching of s2. For a fixed isomorphism the product signing must be
/// balanced, which is checked by 2-colouring (equivalently, cycle sign
/// products agree on a cycle basis).
bool switching_equivalent(const EdgeSignedGraph& s1, const EdgeSignedGraph& s2);

/// Orbit of a set of pairwise non-incident edges under Aut(g).
struct MinusMatchingClass {
    std::vector<Edge> representative;
    int orbit_size = 0;
};

/// All matchings of the tree g (including the empty one) grouped into
/// Aut(g)-orbits. Classes are ordered by matching size, then by their
/// representative (the lexicographically least member of the orbit).
std::vector<MinusMatchingClass> enumerate_minus_matchings(const Graph& g);

/// Number of matchings of g, by brute force over edge subsets.
long long count_matchings(const Graph& g);

}  // namespace hoffman
