#include "hoffman/hoffman_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "hoffman/isomorphism.hpp"

namespace hoffman {

HoffmanGraph::HoffmanGraph(Graph g, std::vector<Label> labels) : g_(std::move(g)), labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) != g_.order()) throw std::invalid_argument("one label per vertex required");
    slim_pos_.assign(g_.order(), -1);
    for (Vertex v = 0; v < g_.order(); ++v) {
        if (is_slim(v)) {
            slim_pos_[v] = static_cast<int>(slims_.size());
            slims_.push_back(v);
        } else {
            fats_.push_back(v);
        }
    }
    for (Vertex f : fats_) {
        bool has_slim = false;
        for (Vertex w : g_.neighbors(f)) {
            if (is_fat(w)) throw std::invalid_argument("fat vertices must be pairwise non-adjacent");
            has_slim = true;
        }
        if (!has_slim) throw std::invalid_argument("every fat vertex needs a slim neighbour");
    }
}

HoffmanGraph HoffmanGraph::from_lists(std::span<const Vertex> slims, std::span<const Vertex> fats,
                                      std::vector<Edge> edges) {
    const int n = static_cast<int>(slims.size() + fats.size());
    std::vector<Label> labels(n, Label::Slim);
    std::vector<bool> seen(n, false);
    auto mark = [&](Vertex v, Label l) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("vertex ids must cover 0..n-1 exactly once");
        seen[v] = true;
        labels[v] = l;
    };
    for (Vertex v : slims) mark(v, Label::Slim);
    for (Vertex v : fats) mark(v, Label::Fat);
    return HoffmanGraph(Graph(n, std::move(edges)), std::move(labels));
}

std::vector<Vertex> HoffmanGraph::fat_neighbors(Vertex x) const {
    std::vector<Vertex> out;
    for (Vertex w : g_.neighbors(x))
        if (is_fat(w)) out.push_back(w);
    return out;
}

std::vector<Vertex> HoffmanGraph::slim_neighbors(Vertex x) const {
    std::vector<Vertex> out;
    for (Vertex w : g_.neighbors(x))
        if (is_slim(w)) out.push_back(w);
    return out;
}

int HoffmanGraph::weight(Vertex x) const {
    int w = 0;
    for (Vertex v : g_.neighbors(x)) w += is_fat(v) ? 1 : 0;
    return w;
}

int HoffmanGraph::common_fat_neighbors(Vertex x, Vertex y) const {
    int c = 0;
    for (Vertex f : g_.neighbors(x))
        if (is_fat(f) && g_.adjacent(f, y)) ++c;
    return c;
}

bool HoffmanGraph::is_fat_hoffman() const {
    return std::all_of(slims_.begin(), slims_.end(), [&](Vertex x) { return weight(x) > 0; });
}

std::vector<int> HoffmanGraph::colors() const {
    std::vector<int> c(labels_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = labels_[i] == Label::Fat ? 1 : 0;
    return c;
}

SymmetricIntMatrix special_matrix(const HoffmanGraph& h) {
    const auto& s = h.slims();
    const int k = static_cast<int>(s.size());
    SymmetricIntMatrix sp(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            sp.set(i, j, (h.graph().adjacent(s[i], s[j]) ? 1 : 0) - h.common_fat_neighbors(s[i], s[j]));
    for (int i = 0; i < k; ++i) sp.set(i, i, -h.weight(s[i]));
    return sp;
}

LambdaOrder lambda_min_cmp(const HoffmanGraph& h, const Rational& r) {
    if (h.slim_count() == 0) throw std::invalid_argument("Hoffman graph has no slim vertices");
    return cmp_lambda_min(special_matrix(h), r);
}

LambdaOrder lambda_min_cmp3(const HoffmanGraph& h) { return lambda_min_cmp(h, Rational(-3)); }

Graph slim_graph(const HoffmanGraph& h) { return h.graph().induced(h.slims()); }

Embedded generated_subgraph(const HoffmanGraph& h, std::span<const Vertex> w) {
    std::vector<bool> keep(h.order(), false);
    for (Vertex x : w) {
        if (x < 0 || x >= h.order()) throw std::invalid_argument("vertex out of range");
        if (!h.is_slim(x)) throw std::invalid_argument("generated_subgraph takes slim vertices only");
        keep[x] = true;
        for (Vertex f : h.fat_neighbors(x)) keep[f] = true;
    }
    Embedded out;
    std::vector<Label> labels;
    for (Vertex v = 0; v < h.order(); ++v)
        if (keep[v]) {
            out.origin.push_back(v);
            labels.push_back(h.labels()[v]);
        }
    out.graph = HoffmanGraph(h.graph().induced(out.origin), std::move(labels));
    return out;
}

std::string tree_like_code(const HoffmanGraph& t) {
    auto c = t.colors();
    return canonical_code(t.graph(), c);
}

bool hoffman_isomorphic(const HoffmanGraph& a, const HoffmanGraph& b) {
    if (a.order() != b.order() || a.slim_count() != b.slim_count()) return false;
    if (a.order() == 0) return true;
    if (a.is_tree_like() && b.is_tree_like()) return tree_like_code(a) == tree_like_code(b);
    auto ca = a.colors(), cb = b.colors();
    return isomorphic(a.graph(), ca, b.graph(), cb);
}

bool is_induced_hoffman_subgraph(const HoffmanGraph& sub, const HoffmanGraph& h) {
    auto cs = sub.colors(), ch = h.colors();
    return has_induced_embedding(sub.graph(), cs, h.graph(), ch);
}

// ---------------------------------------------------------------------------

namespace {

void validate_shared(std::span<const HoffmanGraph> parts, std::span<const SharedFat> shared) {
    std::set<std::pair<std::size_t, Vertex>> seen;
    for (const auto& cls : shared) {
        std::set<std::size_t> parts_in_class;
        for (const auto& r : cls) {
            if (r.part >= parts.size()) throw std::invalid_argument("shared fat names an unknown part");
            const auto& p = parts[r.part];
            if (r.fat < 0 || r.fat >= p.order() || !p.is_fat(r.fat))
                throw std::invalid_argument("shared vertex is not a fat vertex of its part");
            if (!seen.insert({r.part, r.fat}).second)
                throw std::invalid_argument("a fat vertex appears in two shared classes");
            if (!parts_in_class.insert(r.part).second)
                throw std::invalid_argument("a shared class names the same part twice");
        }
    }
}

// Class index of each (part, fat), -1 if unshared.
std::map<std::pair<std::size_t, Vertex>, int> class_index(std::span<const SharedFat> shared) {
    std::map<std::pair<std::size_t, Vertex>, int> out;
    for (std::size_t c = 0; c < shared.size(); ++c)
        if (shared[c].size() >= 2)
            for (const auto& r : shared[c]) out[{r.part, r.fat}] = static_cast<int>(c);
    return out;
}

}  // namespace

Assembly direct_sum(std::span<const HoffmanGraph> parts, std::span<const SharedFat> shared) {
    validate_shared(parts, shared);
    const auto cls = class_index(shared);
    std::vector<Vertex> class_vertex(shared.size(), -1);
    Assembly out;
    std::vector<Label> labels;
    std::vector<std::size_t> owner;  // part of each slim vertex in the sum
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::vector<Vertex> map(parts[i].order());
        for (Vertex v = 0; v < parts[i].order(); ++v) {
            auto it = cls.find({i, v});
            if (it != cls.end() && class_vertex[it->second] >= 0) {
                map[v] = class_vertex[it->second];
                continue;
            }
            map[v] = static_cast<Vertex>(labels.size());
            labels.push_back(parts[i].labels()[v]);
            owner.push_back(i);
            if (it != cls.end()) class_vertex[it->second] = map[v];
        }
        out.part_maps.push_back(std::move(map));
    }
    std::set<Edge> edges;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (auto [u, v] : parts[i].graph().edges()) {
            Vertex a = out.part_maps[i][u], b = out.part_maps[i][v];
            edges.insert({std::min(a, b), std::max(a, b)});
        }
    // Cross slim pairs become adjacent through each shared fat.
    std::map<Edge, int> cross;
    for (std::size_t c = 0; c < shared.size(); ++c) {
        if (shared[c].size() < 2) continue;
        std::vector<std::pair<std::size_t, Vertex>> slims;
        for (const auto& r : shared[c])
            for (Vertex x : parts[r.part].slim_neighbors(r.fat)) slims.push_back({r.part, out.part_maps[r.part][x]});
        for (std::size_t a = 0; a < slims.size(); ++a)
            for (std::size_t b = a + 1; b < slims.size(); ++b) {
                if (slims[a].first == slims[b].first) continue;
                Vertex x = slims[a].second, y = slims[b].second;
                if (++cross[{std::min(x, y), std::max(x, y)}] > 1)
                    throw std::invalid_argument("slims from different parts share two or more fats");
            }
    }
    for (const auto& [e, count] : cross) edges.insert(e);
    const int n = static_cast<int>(labels.size());
    out.graph = HoffmanGraph(Graph(n, {edges.begin(), edges.end()}), std::move(labels));
    return out;
}

HoffmanGraph direct_sum(const HoffmanGraph& a, const HoffmanGraph& b,
                        std::span<const std::pair<Vertex, Vertex>> shared_fats) {
    const HoffmanGraph parts[] = {a, b};
    std::vector<SharedFat> shared;
    for (auto [fa, fb] : shared_fats) shared.push_back({{0, fa}, {1, fb}});
    return direct_sum(parts, shared).graph;
}

Assembly stripped_sum(std::span<const HoffmanGraph> parts, std::span<const SharedFat> shared) {
    for (const auto& cls : shared)
        if (cls.size() >= 3) throw std::invalid_argument("a fat shared by three parts cannot be stripped left to right");
    Assembly sum = direct_sum(parts, shared);
    const auto cls = class_index(shared);
    std::vector<bool> drop(sum.graph.order(), false);
    for (const auto& [ref, c] : cls) drop[sum.part_maps[ref.first][ref.second]] = true;
    std::vector<Vertex> keep, renumber(sum.graph.order(), -1);
    std::vector<Label> labels;
    for (Vertex v = 0; v < sum.graph.order(); ++v)
        if (!drop[v]) {
            renumber[v] = static_cast<Vertex>(keep.size());
            keep.push_back(v);
            labels.push_back(sum.graph.labels()[v]);
        }
    Assembly out;
    out.graph = HoffmanGraph(sum.graph.graph().induced(keep), std::move(labels));
    for (auto& map : sum.part_maps) {
        for (auto& v : map) v = renumber[v];
        out.part_maps.push_back(std::move(map));
    }
    return out;
}

StrippingCheck check_tree_like_stripping(std::span<const HoffmanGraph> parts, std::span<const SharedFat> shared) {
    validate_shared(parts, shared);
    const auto cls = class_index(shared);

    // (1) connectivity of the stripped union, computed without requiring a
    // valid direct sum: union-find over part vertices.
    std::vector<std::size_t> offset{0};
    for (const auto& p : parts) offset.push_back(offset.back() + p.order());
    std::vector<std::size_t> parent(offset.back());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
    auto stripped = [&](std::size_t i, Vertex v) { return cls.count({i, v}) > 0; };
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (auto [u, v] : parts[i].graph().edges())
            if (!stripped(i, u) && !stripped(i, v)) unite(offset[i] + u, offset[i] + v);
    for (const auto& c : shared) {
        if (c.size() < 2) continue;
        std::vector<std::size_t> slims;
        for (const auto& r : c)
            for (Vertex x : parts[r.part].slim_neighbors(r.fat)) slims.push_back(offset[r.part] + x);
        // Only cross-part pairs become adjacent; slims of one part sharing
        // the fat stay linked only through other paths.
        for (std::size_t a = 0; a < c.size(); ++a)
            for (std::size_t b = a + 1; b < c.size(); ++b)
                for (Vertex x : parts[c[a].part].slim_neighbors(c[a].fat))
                    for (Vertex y : parts[c[b].part].slim_neighbors(c[b].fat))
                        unite(offset[c[a].part] + x, offset[c[b].part] + y);
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (Vertex v = 0; v < parts[i].order(); ++v)
            if (!stripped(i, v)) roots.insert(find(offset[i] + v));
    if (roots.size() != 1) return {false, 1, "stripped sum is not connected"};

    for (std::size_t i = 0; i < parts.size(); ++i)
        if (!parts[i].is_tree_like()) return {false, 2, "part " + std::to_string(i) + " is not tree-like"};

    std::map<std::pair<std::size_t, std::size_t>, int> pair_count;
    for (const auto& c : shared)
        for (std::size_t a = 0; a < c.size(); ++a)
            for (std::size_t b = a + 1; b < c.size(); ++b) {
                auto key = std::minmax(c[a].part, c[b].part);
                if (++pair_count[{key.first, key.second}] > 1)
                    return {false, 3,
                            "parts " + std::to_string(key.first) + " and " + std::to_string(key.second) +
                                " share more than one fat"};
            }

    for (const auto& c : shared)
        if (c.size() >= 3) return {false, 4, "a fat vertex is shared by three parts"};

    for (const auto& c : shared) {
        if (c.size() < 2) continue;
        bool leaf = false;
        for (const auto& r : c) leaf = leaf || parts[r.part].graph().degree(r.fat) == 1;
        if (!leaf) return {false, 5, "a shared fat is a leaf in neither part"};
    }

    // Conditions 1-5 still allow parts glued around a cycle (three copies of
    // h^(3) sharing a fat pairwise give a triangle). With 1-5 in force the
    // gluing pattern must be a tree: one shared fat fewer than parts.
    std::size_t glued = 0;
    for (const auto& c : shared) glued += c.size() >= 2 ? 1 : 0;
    if (glued + 1 != parts.size()) return {false, 6, "the parts are glued around a cycle"};
    return {true, 0, "tree-like"};
}

std::vector<Embedded> decompose(const HoffmanGraph& h) {
    std::vector<Embedded> out;
    for (const auto& comp : connected_components(special_graph(h).underlying())) {
        std::vector<Vertex> w;
        for (int i : comp) w.push_back(h.slims()[i]);
        out.push_back(generated_subgraph(h, w));
    }
    return out;
}

bool is_indecomposable(const HoffmanGraph& h) {
    return h.slim_count() > 0 && special_graph(h).underlying().is_connected();
}

HoffmanGraph reassemble(std::span<const Embedded> factors) {
    std::vector<HoffmanGraph> parts;
    std::map<Vertex, SharedFat> by_origin;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        parts.push_back(factors[i].graph);
        for (Vertex f : factors[i].graph.fats()) by_origin[factors[i].origin[f]].push_back({i, f});
    }
    std::vector<SharedFat> shared;
    for (auto& [origin, refs] : by_origin)
        if (refs.size() >= 2) shared.push_back(refs);
    return direct_sum(parts, shared).graph;
}

// ---------------------------------------------------------------------------

HoffmanGraph attach_fat(const HoffmanGraph& h, std::span<const Vertex> s) {
    if (s.empty()) throw std::invalid_argument("attach_fat needs a non-empty slim set");
    const Vertex f = h.order();
    std::vector<Edge> edges = h.graph().edges();
    std::set<Vertex> seen;
    for (Vertex x : s) {
        if (x < 0 || x >= h.order() || !h.is_slim(x)) throw std::invalid_argument("attach_fat takes slim vertices only");
        if (!seen.insert(x).second) throw std::invalid_argument("duplicate vertex in attachment set");
        edges.emplace_back(x, f);
    }
    auto labels = h.labels();
    labels.push_back(Label::Fat);
    return HoffmanGraph(Graph(h.order() + 1, std::move(edges)), std::move(labels));
}

bool is_saturated_minus3(const HoffmanGraph& h, int max_slims) {
    if (lambda_min_cmp3(h) == LambdaOrder::Less) throw std::invalid_argument("saturation needs lambda_min >= -3");
    const int k = h.slim_count();
    if (k > max_slims) throw std::invalid_argument("too many slim vertices for exhaustive saturation test");
    const SymmetricIntMatrix sp = special_matrix(h);
    for (unsigned mask = 1; mask < (1U << k); ++mask) {
        SymmetricIntMatrix m = sp;
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j)
                if ((mask >> i & 1U) && (mask >> j & 1U)) m.set(i, j, m(i, j) - 1);
        if (cmp_lambda_min(m, Rational(-3)) != LambdaOrder::Less) return false;
    }
    return true;
}

EdgeSignedGraph special_graph(const HoffmanGraph& h) {
    const SymmetricIntMatrix sp = special_matrix(h);
    std::vector<Edge> plus, minus;
    for (int i = 0; i < sp.dim(); ++i)
        for (int j = i + 1; j < sp.dim(); ++j) {
            if (sp(i, j) > 0) plus.emplace_back(i, j);
            if (sp(i, j) < 0) minus.emplace_back(i, j);
        }
    return EdgeSignedGraph(sp.dim(), std::move(plus), std::move(minus));
}

Graph special_minus_graph(const HoffmanGraph& h) {
    auto s = special_graph(h);
    return Graph(s.order(), s.minus_edges());
}

WeightedMinusGraph weighted_minus(const HoffmanGraph& h) {
    WeightedMinusGraph w{special_minus_graph(h), {}};
    for (Vertex x : h.slims()) w.weight.push_back(h.weight(x));
    return w;
}

std::vector<int> nonpositive_signing(const HoffmanGraph& h) {
    const SymmetricIntMatrix sp = special_matrix(h);
    const int k = sp.dim();
    std::vector<int> d(k, 0);
    for (int root = 0; root < k; ++root) {
        if (d[root] != 0) continue;
        d[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            for (int j = 0; j < k; ++j) {
                if (j == i || sp(i, j) == 0) continue;
                int want = sp(i, j) > 0 ? -d[i] : d[i];
                if (d[j] == 0) {
                    d[j] = want;
                    q.push(j);
                } else if (d[j] != want) {
                    return {};
                }
            }
        }
    }
    return d;
}

}  // namespace hoffman
