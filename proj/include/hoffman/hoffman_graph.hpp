#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hoffman/graph.hpp"
#include "hoffman/signed_graph.hpp"
#include "hoffman/spectral.hpp"

namespace hoffman {

enum class Label : unsigned char { Slim, Fat };

/// A graph whose vertices are labelled slim or fat. Fat vertices are pairwise
/// non-adjacent and each has at least one slim neighbour.
class HoffmanGraph {
public:
    HoffmanGraph() = default;
    /// Throws std::invalid_argument when the Hoffman conditions fail.
    HoffmanGraph(Graph g, std::vector<Label> labels);
    /// Builds from explicit vertex lists; ids must cover 0..n-1 exactly once.
    static HoffmanGraph from_lists(std::span<const Vertex> slims, std::span<const Vertex> fats,
                                   std::vector<Edge> edges);

    const Graph& graph() const { return g_; }
    const std::vector<Label>& labels() const { return labels_; }
    int order() const { return g_.order(); }
    bool is_slim(Vertex v) const { return labels_[v] == Label::Slim; }
    bool is_fat(Vertex v) const { return labels_[v] == Label::Fat; }

    /// Slim vertices in increasing id order; rows of the special matrix follow it.
    const std::vector<Vertex>& slims() const { return slims_; }
    const std::vector<Vertex>& fats() const { return fats_; }
    int slim_count() const { return static_cast<int>(slims_.size()); }
    int fat_count() const { return static_cast<int>(fats_.size()); }
    /// Position of a slim vertex in slims(), -1 for fat vertices.
    int slim_index(Vertex v) const { return slim_pos_[v]; }

    std::vector<Vertex> fat_neighbors(Vertex x) const;
    std::vector<Vertex> slim_neighbors(Vertex x) const;
    int weight(Vertex x) const;  ///< number of fat neighbours
    int common_fat_neighbors(Vertex x, Vertex y) const;

    /// Every slim vertex has a fat neighbour.
    bool is_fat_hoffman() const;
    bool is_tree_like() const { return g_.is_tree(); }
    /// 0 for slim, 1 for fat: colour vector for isomorphism searches.
    std::vector<int> colors() const;

    friend bool operator==(const HoffmanGraph& a, const HoffmanGraph& b) {
        return a.g_ == b.g_ && a.labels_ == b.labels_;
    }

private:
    Graph g_;
    std::vector<Label> labels_;
    std::vector<Vertex> slims_, fats_;
    std::vector<int> slim_pos_;
};

/// Slim block of the adjacency matrix minus C C^T (C = slim-fat incidence).
SymmetricIntMatrix special_matrix(const HoffmanGraph& h);

/// Exact comparison of lambda_min(h) with -3. Throws when h has no slim vertex.
LambdaOrder lambda_min_cmp3(const HoffmanGraph& h);
LambdaOrder lambda_min_cmp(const HoffmanGraph& h, const Rational& r);

/// Subgraph induced on the slim vertices (vertex i is slims()[i]).
Graph slim_graph(const HoffmanGraph& h);

/// Hoffman graph together with where its vertices came from.
struct Embedded {
    HoffmanGraph graph;
    std::vector<Vertex> origin;  ///< origin[v] = vertex of the source graph
};

/// Induced on w and every fat vertex adjacent to some member of w.
/// Throws std::invalid_argument if w contains a fat vertex.
Embedded generated_subgraph(const HoffmanGraph& h, std::span<const Vertex> w);

/// Label-preserving isomorphism (canonical codes for trees, search otherwise).
bool hoffman_isomorphic(const HoffmanGraph& a, const HoffmanGraph& b);

/// Induced Hoffman subgraph test (label-preserving induced embedding).
bool is_induced_hoffman_subgraph(const HoffmanGraph& sub, const HoffmanGraph& h);

/// Canonical string for tree-like Hoffman graphs; equal iff isomorphic.
std::string tree_like_code(const HoffmanGraph& t);

// --- Direct and stripped sums -------------------------------------------

/// A fat vertex of one part in a family of parts.
struct FatRef {
    std::size_t part = 0;
    Vertex fat = 0;
};
/// Fat vertices (from distinct parts) that are the same vertex in the sum.
using SharedFat = std::vector<FatRef>;

struct Assembly {
    HoffmanGraph graph;
    /// part_maps[i][v] = vertex of `graph` for vertex v of part i, or -1 if
    /// it was removed by stripping.
    std::vector<std::vector<Vertex>> part_maps;
};

/// Direct sum: slim sets are disjoint, listed fats are identified, and slims
/// from different parts are adjacent iff they share a fat. Throws
/// std::invalid_argument if two slims from different parts share two or
/// more fats or a shared class names a part twice.
Assembly direct_sum(std::span<const HoffmanGraph> parts, std::span<const SharedFat> shared);
HoffmanGraph direct_sum(const HoffmanGraph& a, const HoffmanGraph& b,
                        std::span<const std::pair<Vertex, Vertex>> shared_fats);

/// Direct sum with every fat shared by two or more parts deleted. A fat shared
/// by three or more parts violates the left-to-right association rule and
/// throws std::invalid_argument.
Assembly stripped_sum(std::span<const HoffmanGraph> parts, std::span<const SharedFat> shared);

struct StrippingCheck {
    bool tree_like = false;
    int violated = 0;  ///< first violated condition, 1..6; 0 when tree-like
    std::string message;
};

/// Decides whether the stripped sum is tree-like, checking in order:
/// (1) connected, (2) every part tree-like, (3) two parts share at most one
/// fat, (4) no fat shared by three parts, (5) a shared fat is a leaf in at
/// least one of its parts, (6) the parts are not glued around a cycle.
StrippingCheck check_tree_like_stripping(std::span<const HoffmanGraph> parts, std::span<const SharedFat> shared);

/// Indecomposable factors: generated subgraphs of the components of the
/// special graph, ordered by smallest slim vertex.
std::vector<Embedded> decompose(const HoffmanGraph& h);
bool is_indecomposable(const HoffmanGraph& h);

/// Direct sum of embedded factors, identifying fats with equal origin.
HoffmanGraph reassemble(std::span<const Embedded> factors);

// --- Fat attachment and saturation ---------------------------------------

/// h plus one new fat vertex (id order()) adjacent exactly to s.
HoffmanGraph attach_fat(const HoffmanGraph& h, std::span<const Vertex> s);

/// No fat vertex can be attached while keeping lambda_min >= -3. Exhaustive
/// over non-empty slim subsets. Throws if lambda_min(h) < -3 or h has more
/// than `max_slims` slims.
bool is_saturated_minus3(const HoffmanGraph& h, int max_slims = 12);

// --- Special graphs --------------------------------------------------------

/// Vertex i is slims()[i]; edge signs are the signs of the special-matrix entries.
EdgeSignedGraph special_graph(const HoffmanGraph& h);
Graph special_minus_graph(const HoffmanGraph& h);

struct WeightedMinusGraph {
    Graph graph;
    std::vector<int> weight;
};
WeightedMinusGraph weighted_minus(const HoffmanGraph& h);

/// +-1 diagonal D (indexed like slims()) with every entry of D Sp D <= 0,
/// or empty when the signs cannot be balanced.
std::vector<int> nonpositive_signing(const HoffmanGraph& h);

}  // namespace hoffman
