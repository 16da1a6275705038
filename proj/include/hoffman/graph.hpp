#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hoffman {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored normalized
/// (u < v) and sorted, so two graphs compare equal iff they have the same
/// labeled edge set.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws std::invalid_argument on loops, duplicate edges or ids out of range.
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const { return matrix_[u * n_ + v] != 0; }

    bool is_connected() const;
    bool is_tree() const;

    /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
    Graph induced(std::span<const Vertex> vertices) const;

    /// Same graph with vertex v renamed to perm[v].
    Graph relabeled(std::span<const Vertex> perm) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint8_t> matrix_;
};

/// Exact integer symmetric matrix, row-major storage.
class SymmetricIntMatrix {
public:
    SymmetricIntMatrix() = default;
    explicit SymmetricIntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
    /// Throws std::invalid_argument if `rows` is not square and symmetric.
    static SymmetricIntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    int dim() const { return n_; }
    std::int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, std::int64_t v) {
        a_[static_cast<std::size_t>(i) * n_ + j] = v;
        a_[static_cast<std::size_t>(j) * n_ + i] = v;
    }

    SymmetricIntMatrix principal(std::span<const int> indices) const;
    SymmetricIntMatrix negated() const;
    std::vector<std::vector<std::int64_t>> rows() const;

    friend bool operator==(const SymmetricIntMatrix&, const SymmetricIntMatrix&) = default;

private:
    int n_ = 0;
    std::vector<std::int64_t> a_;
};

SymmetricIntMatrix adjacency_matrix(const Graph& g);

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

enum class SmithKind { A, D, E6, E7, E8, ATilde, DTilde, E6Tilde, E7Tilde, E8Tilde };

/// Finite Dynkin diagrams A_m (m >= 1), D_m (m >= 4), E6..E8 and the
/// extended ones Ã_m (m >= 2, the (m+1)-cycle), D̃_m (m >= 4), Ẽ6..Ẽ8.
/// The parameter is ignored for the E types. Throws std::invalid_argument
/// when m is out of range.
Graph smith_graph(SmithKind kind, int m = 0);

/// Tree with one centre and legs of the given lengths.
Graph spider(std::span<const int> legs);

/// Each unlabeled tree on n vertices exactly once, in a fixed order.
/// Uses the constant-amortized-time successor rule on canonical level
/// sequences (Wright, Richmond, Odlyzko, McKay).
void for_each_free_tree(int n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_free_trees(int n);

/// Centre-rooted AHU encoding. Equal codes iff isomorphic (as coloured trees
/// when `colors` is given; colours must be in 0..25). Throws
/// std::invalid_argument if `t` is not a tree.
std::string canonical_code(const Graph& t);
std::string canonical_code(const Graph& t, std::span<const int> colors);

std::vector<int> distances_from(const Graph& g, Vertex source);

}  // namespace hoffman
