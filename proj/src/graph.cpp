#include "hoffman/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace hoffman {

Graph::Graph(int n) : n_(n), adj_(n), matrix_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        matrix_[u * n_ + v] = matrix_[v * n_ + u] = 1;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    auto dist = distances_from(*this, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool Graph::is_tree() const {
    return n_ >= 1 && static_cast<int>(edges_.size()) == n_ - 1 && is_connected();
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    std::vector<int> pos(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> out;
    for (auto [u, v] : edges_)
        if (pos[u] >= 0 && pos[v] >= 0) out.emplace_back(pos[u], pos[v]);
    return Graph(static_cast<int>(vertices.size()), std::move(out));
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (auto [u, v] : edges_) out.emplace_back(perm[u], perm[v]);
    return Graph(n_, std::move(out));
}

SymmetricIntMatrix SymmetricIntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    const int n = static_cast<int>(rows.size());
    SymmetricIntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw std::invalid_argument("matrix is not square");
        for (int j = 0; j < n; ++j) {
            if (rows[i][j] != rows[j][i]) throw std::invalid_argument("matrix is not symmetric");
            m.a_[static_cast<std::size_t>(i) * n + j] = rows[i][j];
        }
    }
    return m;
}

SymmetricIntMatrix SymmetricIntMatrix::principal(std::span<const int> indices) const {
    const int k = static_cast<int>(indices.size());
    SymmetricIntMatrix m(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m.a_[static_cast<std::size_t>(i) * k + j] = (*this)(indices[i], indices[j]);
    return m;
}

SymmetricIntMatrix SymmetricIntMatrix::negated() const {
    SymmetricIntMatrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
}

std::vector<std::vector<std::int64_t>> SymmetricIntMatrix::rows() const {
    std::vector<std::vector<std::int64_t>> out(n_, std::vector<std::int64_t>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

SymmetricIntMatrix adjacency_matrix(const Graph& g) {
    SymmetricIntMatrix a(g.order());
    for (auto [u, v] : g.edges()) a.set(u, v, 1);
    return a;
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
    std::vector<int> dist(g.order(), -1);
    std::queue<Vertex> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : g.neighbors(comp[i]))
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Graph spider(std::span<const int> legs) {
    int n = 1;
    std::vector<Edge> edges;
    for (int len : legs) {
        Vertex prev = 0;
        for (int i = 0; i < len; ++i) {
            edges.emplace_back(prev, n);
            prev = n++;
        }
    }
    return Graph(n, std::move(edges));
}

namespace {

Graph path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

// Path on `n` vertices with two pendant vertices on one end (and on both
// ends when `both`); `n` counts the total number of vertices.
Graph forked_path(int n, bool both) {
    std::vector<Edge> edges{{0, 2}, {1, 2}};
    int last = both ? n - 3 : n - 1;
    for (int i = 2; i < last; ++i) edges.emplace_back(i, i + 1);
    if (both) {
        edges.emplace_back(last, n - 2);
        edges.emplace_back(last, n - 1);
    }
    return Graph(n, std::move(edges));
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph smith_graph(SmithKind kind, int m) {
    switch (kind) {
    case SmithKind::A:
        require(m >= 1, "A_m needs m >= 1");
        return path(m);
    case SmithKind::D:
        require(m >= 4, "D_m needs m >= 4");
        return forked_path(m, false);
    case SmithKind::E6: { const int legs[] = {1, 2, 2}; return spider(legs); }
    case SmithKind::E7: { const int legs[] = {1, 2, 3}; return spider(legs); }
    case SmithKind::E8: { const int legs[] = {1, 2, 4}; return spider(legs); }
    case SmithKind::ATilde: {
        require(m >= 2, "Ã_m needs m >= 2");
        std::vector<Edge> edges;
        for (int i = 0; i <= m; ++i) edges.emplace_back(i, (i + 1) % (m + 1));
        return Graph(m + 1, std::move(edges));
    }
    case SmithKind::DTilde:
        require(m >= 4, "D̃_m needs m >= 4");
        return forked_path(m + 1, true);
    case SmithKind::E6Tilde: { const int legs[] = {2, 2, 2}; return spider(legs); }
    case SmithKind::E7Tilde: { const int legs[] = {1, 3, 3}; return spider(legs); }
    case SmithKind::E8Tilde: { const int legs[] = {1, 2, 5}; return spider(legs); }
    }
    throw std::invalid_argument("unknown Smith graph kind");
}

// ---------------------------------------------------------------------------
// Free tree generation on level sequences. A layout lists the depth of each
// vertex in preorder, root at depth 0.

namespace {

using Layout = std::vector<int>;

bool next_rooted(Layout& layout, int p) {
    if (p == 0) return false;
    int q = p - 1;
    while (layout[q] != layout[p] - 1) --q;
    for (std::size_t i = p; i < layout.size(); ++i) layout[i] = layout[i - p + q];
    return true;
}

bool next_rooted(Layout& layout) {
    int p = static_cast<int>(layout.size()) - 1;
    while (p > 0 && layout[p] == 1) --p;
    return next_rooted(layout, p);
}

// Left subtree of the root (depths shifted up by one) and the rest.
std::pair<Layout, Layout> split(const Layout& layout) {
    std::size_t m = layout.size();
    bool one_found = false;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (layout[i] != 1) continue;
        if (one_found) {
            m = i;
            break;
        }
        one_found = true;
    }
    Layout left, rest{0};
    for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
    for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
    return {left, rest};
}

bool is_centred(const Layout& layout) {
    auto [left, rest] = split(layout);
    int lh = *std::max_element(left.begin(), left.end());
    int rh = *std::max_element(rest.begin(), rest.end());
    if (rh < lh) return false;
    if (rh == lh) {
        if (left.size() > rest.size()) return false;
        if (left.size() == rest.size() && left > rest) return false;
    }
    return true;
}

// Advances to the next layout that encodes a centre-rooted free tree.
bool next_free(Layout& layout) {
    while (!is_centred(layout)) {
        auto [left, rest] = split(layout);
        const int p = static_cast<int>(left.size());
        const int old = layout[p];
        if (!next_rooted(layout, p)) return false;
        if (old > 2) {
            auto [new_left, new_rest] = split(layout);
            int h = *std::max_element(new_left.begin(), new_left.end());
            for (int k = 0; k < h + 1; ++k) layout[layout.size() - (h + 1) + k] = k + 1;
        }
    }
    return true;
}

Graph layout_to_graph(const Layout& layout) {
    std::vector<Edge> edges;
    std::vector<int> stack;
    for (int i = 0; i < static_cast<int>(layout.size()); ++i) {
        while (!stack.empty() && layout[stack.back()] >= layout[i]) stack.pop_back();
        if (!stack.empty()) edges.emplace_back(stack.back(), i);
        stack.push_back(i);
    }
    return Graph(static_cast<int>(layout.size()), std::move(edges));
}

}  // namespace

void for_each_free_tree(int n, const std::function<void(const Graph&)>& visit) {
    if (n < 1) throw std::invalid_argument("tree order must be >= 1");
    if (n == 1) {
        visit(Graph(1));
        return;
    }
    // Path rooted at its centre.
    Layout layout;
    for (int i = 0; i <= n / 2; ++i) layout.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) layout.push_back(i);
    while (next_free(layout)) {
        visit(layout_to_graph(layout));
        if (!next_rooted(layout)) break;
    }
}

std::vector<Graph> enumerate_free_trees(int n) {
    std::vector<Graph> out;
    for_each_free_tree(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Vertex> tree_centres(const Graph& t) {
    const int n = t.order();
    if (n <= 2) {
        std::vector<Vertex> all(n);
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    std::vector<int> deg(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<Vertex> next;
        for (Vertex v : layer)
            for (Vertex w : t.neighbors(v))
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string rooted_code(const Graph& t, std::span<const int> colors, Vertex root) {
    // Iterative post-order to stay clear of deep recursion on long paths.
    const int n = t.order();
    std::vector<Vertex> parent(n, -1), order;
    order.reserve(n);
    std::vector<Vertex> stack{root};
    parent[root] = root;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (Vertex w : t.neighbors(v))
            if (parent[w] < 0) {
                parent[w] = v;
                stack.push_back(w);
            }
    }
    std::vector<std::vector<std::string>> child_codes(n);
    std::vector<std::string> code(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        auto& kids = child_codes[v];
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        s.push_back(static_cast<char>('a' + (colors.empty() ? 0 : colors[v])));
        for (auto& k : kids) s += k;
        s.push_back(')');
        code[v] = std::move(s);
        if (v != root) child_codes[parent[v]].push_back(code[v]);
        kids.clear();
    }
    return code[root];
}

}  // namespace

std::string canonical_code(const Graph& t, std::span<const int> colors) {
    if (!t.is_tree()) throw std::invalid_argument("canonical_code requires a tree");
    if (!colors.empty() && static_cast<int>(colors.size()) != t.order())
        throw std::invalid_argument("colour vector size mismatch");
    for (int c : colors)
        if (c < 0 || c > 25) throw std::invalid_argument("colours must lie in 0..25");
    std::string best;
    for (Vertex c : tree_centres(t)) {
        std::string s = rooted_code(t, colors, c);
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

std::string canonical_code(const Graph& t) { return canonical_code(t, {}); }

}  // namespace hoffman
