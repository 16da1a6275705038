#include "hoffman/catalog.hpp"

#include <cctype>
#include <stdexcept>

#include "hoffman/isomorphism.hpp"

namespace hoffman {

HoffmanGraph all_slim(const Graph& g) { return HoffmanGraph(g, std::vector<Label>(g.order(), Label::Slim)); }

HoffmanGraph make_h_t(int t) {
    if (t < 1) throw std::invalid_argument("h^(t) needs t >= 1");
    std::vector<Edge> edges;
    for (int f = 1; f <= t; ++f) edges.emplace_back(0, f);
    std::vector<Label> labels(t + 1, Label::Fat);
    labels[0] = Label::Slim;
    return HoffmanGraph(Graph(t + 1, edges), labels);
}

HoffmanGraph make_fat_star(int k) {
    if (k < 1) throw std::invalid_argument("fat star needs k >= 1");
    std::vector<Edge> edges;
    for (int x = 0; x < k; ++x) edges.emplace_back(x, k);
    std::vector<Label> labels(k + 1, Label::Slim);
    labels[k] = Label::Fat;
    return HoffmanGraph(Graph(k + 1, edges), labels);
}

HoffmanGraph make_c(int m) {
    if (m < 2) throw std::invalid_argument("c_m needs m >= 2");
    std::vector<Edge> edges;
    for (int i = 0; i + 2 < m; ++i) edges.emplace_back(i, i + 2);
    const int f1 = m, f12 = m + 1, fm = m + 2;
    edges.emplace_back(0, f1);
    edges.emplace_back(0, f12);
    edges.emplace_back(1, f12);
    edges.emplace_back(m - 1, fm);
    std::vector<Label> labels(m + 3, Label::Slim);
    labels[f1] = labels[f12] = labels[fm] = Label::Fat;
    return HoffmanGraph(Graph(m + 3, edges), labels);
}

ReducedRep make_psi_c(int m) {
    if (m < 2) throw std::invalid_argument("c_m needs m >= 2");
    if (m == 2) return {1, {{1}, {-1}}};
    const int d = m - 1;
    ReducedRep r{d, std::vector<IntVector>(m, IntVector(d, 0))};
    auto e = [&](int y, int i, int v) { r.vectors[y - 1][i - 1] += v; };
    e(1, 1, 1);
    e(2, 1, -1);
    e(2, 2, 1);
    for (int i = 3; i <= m - 1; ++i) {
        e(i, i - 2, 1);
        e(i, i - 1, (i - 1) % 2 == 0 ? 1 : -1);
        e(i, i, 1);
    }
    e(m, m - 2, 1);
    e(m, m - 1, (m - 1) % 2 == 0 ? 1 : -1);
    return r;
}

HoffmanGraph make_third_member() {
    // Found by enumerate_small_tree_like(3): the maximal member that is
    // neither h^(3), the fat star, c_2 nor c_3.
    std::vector<Label> labels{Label::Slim, Label::Slim, Label::Slim, Label::Fat, Label::Fat};
    return HoffmanGraph(Graph(5, {{0, 3}, {0, 4}, {1, 3}, {2, 4}}), labels);
}

Graph extended_e(ExtendedE base) {
    switch (base) {
    case ExtendedE::E6: return smith_graph(SmithKind::E6Tilde);
    case ExtendedE::E7: return smith_graph(SmithKind::E7Tilde);
    case ExtendedE::E8: return smith_graph(SmithKind::E8Tilde);
    }
    throw std::invalid_argument("unknown base");
}

ExtendedE parse_extended_e(const std::string& name) {
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "e6") return ExtendedE::E6;
    if (s == "e7") return ExtendedE::E7;
    if (s == "e8") return ExtendedE::E8;
    throw std::invalid_argument("base must be e6, e7 or e8");
}

HoffmanGraph make_esimilar_seedling(const Graph& base, const std::vector<Edge>& minus_matching) {
    const int n = base.order();
    std::vector<int> partner(n, -1);
    for (auto [u, v] : minus_matching) {
        if (u < 0 || v < 0 || u >= n || v >= n || !base.adjacent(u, v))
            throw std::invalid_argument("matching edge is not an edge of the base graph");
        if (partner[u] >= 0 || partner[v] >= 0) throw std::invalid_argument("edges share an endpoint");
        partner[u] = v;
        partner[v] = u;
    }
    std::vector<Edge> edges;
    for (auto [u, v] : base.edges())
        if (partner[u] != v) edges.emplace_back(u, v);
    int next = n;
    for (Vertex v = 0; v < n; ++v) {
        if (partner[v] < 0) {
            edges.emplace_back(v, next++);
        } else if (v < partner[v]) {
            edges.emplace_back(v, next);
            edges.emplace_back(partner[v], next++);
        }
    }
    std::vector<Label> labels(next, Label::Fat);
    for (Vertex v = 0; v < n; ++v) labels[v] = Label::Slim;
    return HoffmanGraph(Graph(next, edges), labels);
}

std::vector<FamilyFMember> family_F(int max_m) {
    std::vector<FamilyFMember> out;
    out.push_back({make_h_t(3), "F-prime-1", ReducedRep{0, {{}}}});
    out.push_back({make_fat_star(3), "F-prime-2", ReducedRep{3, {{1, 1, 0}, {-1, 0, 1}, {0, -1, -1}}}});
    HoffmanGraph x = make_third_member();
    auto sol = solve_reduced_integral(x);
    out.push_back({x, "F-prime-3", sol.status == SolveStatus::Found ? std::optional(sol.rep) : std::nullopt});
    for (int m = 2; m <= max_m; ++m) out.push_back({make_c(m), "C(" + std::to_string(m) + ")", make_psi_c(m)});
    return out;
}

FamilyFMember catalog_member(const std::string& name) {
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto number = [&](std::size_t from) {
        if (from >= s.size()) throw std::invalid_argument("missing parameter in catalog name: " + name);
        for (std::size_t i = from; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw std::invalid_argument("bad catalog name: " + name);
        return std::stoi(s.substr(from));
    };
    if (s == "x" || s == "f-prime-3") return family_F(2)[2];
    if (s == "e6" || s == "e7" || s == "e8") return {make_esimilar_seedling(extended_e(parse_extended_e(s)), {}), s, {}};
    if (s.rfind("fatstar", 0) == 0) {
        int k = number(7);
        std::optional<ReducedRep> psi;
        if (k == 3) psi = family_F(2)[1].psi;
        return {make_fat_star(k), "fatstar" + std::to_string(k), psi};
    }
    if (s[0] == 'h') {
        int t = number(1);
        return {make_h_t(t), "h" + std::to_string(t), t == 3 ? std::optional(ReducedRep{0, {{}}}) : std::nullopt};
    }
    if (s[0] == 'c') {
        int m = number(1);
        return {make_c(m), "C(" + std::to_string(m) + ")", make_psi_c(m)};
    }
    throw std::invalid_argument("unknown catalog member: " + name);
}

}  // namespace hoffman
