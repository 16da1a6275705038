#include "hoffman/isomorphism.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace hoffman {

namespace {

int color_of(std::span<const int> colors, Vertex v) { return colors.empty() ? 0 : colors[v]; }

// Pattern vertices in an order where each vertex (after the first of its
// component) has an already placed neighbour; constrains candidates early.
std::vector<Vertex> search_order(const Graph& g) {
    std::vector<Vertex> order;
    std::vector<bool> placed(g.order(), false);
    for (int step = 0; step < g.order(); ++step) {
        Vertex best = -1;
        int best_links = -1, best_deg = -1;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (Vertex w : g.neighbors(v)) links += placed[w] ? 1 : 0;
            if (links > best_links || (links == best_links && g.degree(v) > best_deg)) {
                best = v;
                best_links = links;
                best_deg = g.degree(v);
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    return order;
}

struct Matcher {
    const Graph& a;
    std::span<const int> ca;
    const Graph& b;
    std::span<const int> cb;
    bool induced_only;  // false: full isomorphism (degrees must agree)
    const MapVisitor& visit;
    std::vector<Vertex> order;
    std::vector<Vertex> map;
    std::vector<bool> used;
    bool stopped = false;

    bool compatible(Vertex v, Vertex w) const {
        if (color_of(ca, v) != color_of(cb, w)) return false;
        if (induced_only ? a.degree(v) > b.degree(w) : a.degree(v) != b.degree(w)) return false;
        for (Vertex u = 0; u < a.order(); ++u) {
            if (map[u] < 0) continue;
            if (a.adjacent(u, v) != b.adjacent(map[u], w)) return false;
        }
        return true;
    }

    void run(std::size_t depth) {
        if (stopped) return;
        if (depth == order.size()) {
            if (!visit(map)) stopped = true;
            return;
        }
        const Vertex v = order[depth];
        // Prefer images adjacent to the image of an already placed neighbour.
        Vertex anchor = -1;
        for (Vertex u : a.neighbors(v))
            if (map[u] >= 0) {
                anchor = map[u];
                break;
            }
        auto try_image = [&](Vertex w) {
            if (used[w] || !compatible(v, w)) return;
            map[v] = w;
            used[w] = true;
            run(depth + 1);
            used[w] = false;
            map[v] = -1;
        };
        if (anchor >= 0) {
            for (Vertex w : b.neighbors(anchor)) {
                try_image(w);
                if (stopped) return;
            }
        } else {
            for (Vertex w = 0; w < b.order(); ++w) {
                try_image(w);
                if (stopped) return;
            }
        }
    }
};

void search(const Graph& a, std::span<const int> ca, const Graph& b, std::span<const int> cb, bool induced_only,
            const MapVisitor& visit) {
    Matcher m{a, ca, b, cb, induced_only, visit, search_order(a), std::vector<Vertex>(a.order(), -1),
              std::vector<bool>(b.order(), false)};
    m.run(0);
}

}  // namespace

void for_each_isomorphism(const Graph& a, std::span<const int> colors_a, const Graph& b,
                          std::span<const int> colors_b, const MapVisitor& visit) {
    if (a.order() != b.order() || a.size() != b.size()) return;
    std::vector<int> da, db;
    for (Vertex v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v) * 64 + color_of(colors_a, v));
        db.push_back(b.degree(v) * 64 + color_of(colors_b, v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return;
    search(a, colors_a, b, colors_b, false, visit);
}

bool isomorphic(const Graph& a, std::span<const int> colors_a, const Graph& b, std::span<const int> colors_b) {
    bool found = false;
    for_each_isomorphism(a, colors_a, b, colors_b, [&](std::span<const Vertex>) {
        found = true;
        return false;
    });
    return found;
}

std::vector<std::vector<Vertex>> automorphisms(const Graph& g, std::span<const int> colors) {
    std::vector<std::vector<Vertex>> out;
    for_each_isomorphism(g, colors, g, colors, [&](std::span<const Vertex> m) {
        out.emplace_back(m.begin(), m.end());
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_induced_embedding(const Graph& pattern, std::span<const int> colors_p, const Graph& host,
                                std::span<const int> colors_h, const MapVisitor& visit) {
    if (pattern.order() > host.order()) return;
    search(pattern, colors_p, host, colors_h, true, visit);
}

bool has_induced_embedding(const Graph& pattern, std::span<const int> colors_p, const Graph& host,
                           std::span<const int> colors_h) {
    bool found = false;
    for_each_induced_embedding(pattern, colors_p, host, colors_h, [&](std::span<const Vertex>) {
        found = true;
        return false;
    });
    return found;
}

}  // namespace hoffman

namespace hoffman {

namespace {

class SubtreeMatcher {
public:
    SubtreeMatcher(const Graph& p, const Graph& h) : p_(p), h_(h) {}

    // Can pattern vertex t (entered from pt) sit on host vertex v (entered
    // from pv) with its subtree mapped into v's side?
    bool fits(Vertex t, Vertex pt, Vertex v, Vertex pv) {
        const long key = (((static_cast<long>(t) * (p_.order() + 1) + (pt + 1)) * h_.order() + v) * (h_.order() + 1)) + (pv + 1);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<Vertex> kids, slots;
        for (Vertex c : p_.neighbors(t))
            if (c != pt) kids.push_back(c);
        for (Vertex w : h_.neighbors(v))
            if (w != pv) slots.push_back(w);
        bool ok = kids.size() <= slots.size();
        if (ok) {
            std::vector<std::vector<int>> can(kids.size());
            for (std::size_t i = 0; i < kids.size(); ++i)
                for (std::size_t j = 0; j < slots.size(); ++j)
                    if (fits(kids[i], t, slots[j], v)) can[i].push_back(static_cast<int>(j));
            ok = perfect_on_left(can, slots.size());
        }
        memo_[key] = ok;
        return ok;
    }

private:
    static bool perfect_on_left(const std::vector<std::vector<int>>& can, std::size_t right) {
        std::vector<int> owner(right, -1);
        for (std::size_t i = 0; i < can.size(); ++i) {
            std::vector<bool> seen(right, false);
            auto augment = [&](auto&& self, int u) -> bool {
                for (int j : can[u]) {
                    if (seen[j]) continue;
                    seen[j] = true;
                    if (owner[j] < 0 || self(self, owner[j])) {
                        owner[j] = u;
                        return true;
                    }
                }
                return false;
            };
            if (!augment(augment, static_cast<int>(i))) return false;
        }
        return true;
    }

    const Graph& p_;
    const Graph& h_;
    std::unordered_map<long, bool> memo_;
};

}  // namespace

bool subtree_embeds(const Graph& pattern, const Graph& host) {
    if (!pattern.is_tree() || !host.is_tree()) throw std::invalid_argument("subtree_embeds needs two trees");
    if (pattern.order() > host.order()) return false;
    SubtreeMatcher m(pattern, host);
    for (Vertex v = 0; v < host.order(); ++v)
        if (m.fits(0, -1, v, -1)) return true;
    return false;
}

}  // namespace hoffman
