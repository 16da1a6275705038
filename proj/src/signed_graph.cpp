#include "hoffman/signed_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "hoffman/isomorphism.hpp"

namespace hoffman {

namespace {

Edge normalized(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

int edge_index(const Graph& g, Edge e) {
    e = normalized(e);
    auto it = std::lower_bound(g.edges().begin(), g.edges().end(), e);
    if (it == g.edges().end() || *it != e) return -1;
    return static_cast<int>(it - g.edges().begin());
}

}  // namespace

EdgeSignedGraph::EdgeSignedGraph(int n, std::vector<Edge> plus, std::vector<Edge> minus) {
    std::vector<Edge> all;
    for (auto e : plus) all.push_back(normalized(e));
    for (auto e : minus) all.push_back(normalized(e));
    g_ = Graph(n, all);  // rejects overlaps as duplicate edges
    signs_.assign(g_.size(), 1);
    for (auto e : minus) signs_[edge_index(g_, e)] = -1;
}

EdgeSignedGraph::EdgeSignedGraph(Graph underlying, std::vector<int> signs)
    : g_(std::move(underlying)), signs_(std::move(signs)) {
    if (signs_.size() != g_.size()) throw std::invalid_argument("one sign per edge required");
    for (int s : signs_)
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
}

int EdgeSignedGraph::sign(Vertex u, Vertex v) const {
    int i = edge_index(g_, {u, v});
    return i < 0 ? 0 : signs_[i];
}

std::vector<Edge> EdgeSignedGraph::plus_edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < signs_.size(); ++i)
        if (signs_[i] > 0) out.push_back(g_.edges()[i]);
    return out;
}

std::vector<Edge> EdgeSignedGraph::minus_edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < signs_.size(); ++i)
        if (signs_[i] < 0) out.push_back(g_.edges()[i]);
    return out;
}

SymmetricIntMatrix signed_adjacency(const EdgeSignedGraph& s) {
    SymmetricIntMatrix b(s.order());
    const auto& edges = s.underlying().edges();
    for (std::size_t i = 0; i < edges.size(); ++i) b.set(edges[i].first, edges[i].second, s.signs()[i]);
    return b;
}

EdgeSignedGraph switch_at(const EdgeSignedGraph& s, std::span<const Vertex> u) {
    std::vector<bool> in(s.order(), false);
    for (Vertex v : u) {
        if (v < 0 || v >= s.order()) throw std::invalid_argument("switching set out of range");
        in[v] = true;
    }
    std::vector<int> signs = s.signs();
    const auto& edges = s.underlying().edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (in[edges[i].first] != in[edges[i].second]) signs[i] = -signs[i];
    return EdgeSignedGraph(s.underlying(), std::move(signs));
}

namespace {

// Is there a vertex potential p with p(u) p(v) = s1(u, v) * s2(map u, map v)?
bool balanced_product(const EdgeSignedGraph& s1, const EdgeSignedGraph& s2, std::span<const Vertex> map) {
    const Graph& g = s1.underlying();
    std::vector<int> pot(g.order(), 0);
    for (Vertex root = 0; root < g.order(); ++root) {
        if (pot[root] != 0) continue;
        pot[root] = 1;
        std::queue<Vertex> q;
        q.push(root);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                int want = pot[v] * s1.sign(v, w) * s2.sign(map[v], map[w]);
                if (pot[w] == 0) {
                    pot[w] = want;
                    q.push(w);
                } else if (pot[w] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

bool switching_equivalent(const EdgeSignedGraph& s1, const EdgeSignedGraph& s2) {
    bool found = false;
    for_each_isomorphism(s1.underlying(), {}, s2.underlying(), {}, [&](std::span<const Vertex> map) {
        found = balanced_product(s1, s2, map);
        return !found;
    });
    return found;
}

long long count_matchings(const Graph& g) {
    const auto& edges = g.edges();
    const std::size_t m = edges.size();
    if (m > 30) throw std::invalid_argument("count_matchings is brute force; too many edges");
    long long count = 0;
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
        std::vector<bool> hit(g.order(), false);
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            if (!(mask >> i & 1UL)) continue;
            auto [u, v] = edges[i];
            if (hit[u] || hit[v]) ok = false;
            hit[u] = hit[v] = true;
        }
        count += ok ? 1 : 0;
    }
    return count;
}

std::vector<MinusMatchingClass> enumerate_minus_matchings(const Graph& g) {
    if (!g.is_tree()) throw std::invalid_argument("enumerate_minus_matchings requires a tree");
    const auto& edges = g.edges();
    const auto autos = automorphisms(g);

    // All matchings as sorted edge-index lists, by extension in index order.
    std::vector<std::vector<int>> matchings;
    std::vector<int> current;
    std::vector<bool> hit(g.order(), false);
    auto extend = [&](auto&& self, std::size_t from) -> void {
        matchings.push_back(current);
        for (std::size_t i = from; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            if (hit[u] || hit[v]) continue;
            hit[u] = hit[v] = true;
            current.push_back(static_cast<int>(i));
            self(self, i + 1);
            current.pop_back();
            hit[u] = hit[v] = false;
        }
    };
    extend(extend, 0);

    auto image = [&](const std::vector<int>& m, const std::vector<Vertex>& a) {
        std::vector<Edge> out;
        for (int i : m) out.push_back(normalized({a[edges[i].first], a[edges[i].second]}));
        std::sort(out.begin(), out.end());
        return out;
    };

    std::map<std::pair<std::size_t, std::vector<Edge>>, int> orbits;
    for (const auto& m : matchings) {
        std::vector<Edge> best;
        for (const auto& a : autos) {
            auto img = image(m, a);
            if (best.empty() || img < best) best = std::move(img);
        }
        orbits[{m.size(), best}] += 1;
    }
    std::vector<MinusMatchingClass> out;
    for (auto& [key, size] : orbits) out.push_back({key.second, size});
    return out;
}

}  // namespace hoffman
