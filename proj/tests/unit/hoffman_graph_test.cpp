#include <stdexcept>
#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "hoffman/catalog.hpp"
#include "hoffman/hoffman_graph.hpp"
#include "hoffman/spectral.hpp"

using namespace hoffman;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

HoffmanGraph relabel(const HoffmanGraph& h, std::mt19937& rng) {
    std::vector<Vertex> p(h.order());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<Label> labels(h.order());
    for (Vertex v = 0; v < h.order(); ++v) labels[p[v]] = h.labels()[v];
    return HoffmanGraph(h.graph().relabeled(p), labels);
}

// two copies of h3 glued at fat 1
Assembly h3_pair_stripped() {
    const HoffmanGraph parts[] = {make_h_t(3), make_h_t(3)};
    const SharedFat shared[] = {{{0, 1}, {1, 1}}};
    return stripped_sum(parts, shared);
}

}  // namespace

TEST_CASE("Hoffman graph validation") {
    // adjacent fats
    CHECK_THROWS_AS(HoffmanGraph(Graph(3, {{0, 1}, {1, 2}}), {Label::Slim, Label::Fat, Label::Fat}), std::invalid_argument);
    // isolated fat
    CHECK_THROWS_AS(HoffmanGraph(Graph(2), {Label::Slim, Label::Fat}), std::invalid_argument);
    const Vertex s[] = {1}, f[] = {0};
    const auto h = HoffmanGraph::from_lists(s, f, {{0, 1}});
    CHECK(h.is_fat(0));
    CHECK(h.slims() == std::vector<Vertex>{1});
    CHECK(h.weight(1) == 1);
}

TEST_CASE("special matrix") {
    CHECK(special_matrix(make_h_t(3)).rows() == Rows{{-3}});
    CHECK(special_matrix(make_fat_star(3)).rows() == Rows{{-1, -1, -1}, {-1, -1, -1}, {-1, -1, -1}});
    CHECK(special_matrix(make_c(2)).rows() == Rows{{-2, -1}, {-1, -2}});
}

TEST_CASE("lambda_min against -3") {
    CHECK(lambda_min_cmp3(make_h_t(3)) == LambdaOrder::Equal);
    for (int m = 2; m <= 12; ++m) CHECK(lambda_min_cmp3(make_c(m)) == LambdaOrder::Equal);
    CHECK(lambda_min_cmp3(make_h_t(1)) == LambdaOrder::Greater);
    CHECK(lambda_min_cmp3(make_h_t(4)) == LambdaOrder::Less);
}

TEST_CASE("slim graphs") {
    CHECK(slim_graph(make_c(2)) == Graph(2));
    CHECK(slim_graph(make_c(3)) == Graph(3, {{0, 2}}));
    CHECK(slim_graph(make_fat_star(3)) == Graph(3));
}

TEST_CASE("generated subgraphs") {
    const auto c3 = make_c(3);
    CHECK(generated_subgraph(c3, c3.slims()).graph == c3);
    const Vertex y1[] = {0};
    const auto g = generated_subgraph(c3, y1);
    CHECK(g.graph.slim_count() == 1);
    CHECK(g.graph.fat_count() == 2);
    std::vector<Vertex> fats;
    for (Vertex f : g.graph.fats()) fats.push_back(g.origin[f]);
    CHECK(fats == std::vector<Vertex>{3, 4});  // f_1 and f_{1,2}
    CHECK(generated_subgraph(c3, std::span<const Vertex>{}).graph.order() == 0);
    const Vertex bad[] = {3};
    CHECK_THROWS_AS(generated_subgraph(c3, bad), std::invalid_argument);
}

TEST_CASE("Hoffman isomorphism") {
    std::mt19937 rng(1);
    CHECK(hoffman_isomorphic(make_c(2), relabel(make_c(2), rng)));
    CHECK(hoffman_isomorphic(make_c(5), relabel(make_c(5), rng)));
    CHECK_FALSE(hoffman_isomorphic(make_h_t(3), make_fat_star(3)));
    // y_3 (id 2) becomes fat, f_m (id 5) slim
    auto labels = make_c(3).labels();
    std::swap(labels[2], labels[5]);
    const HoffmanGraph swapped(make_c(3).graph(), labels);
    CHECK_FALSE(hoffman_isomorphic(make_c(3), swapped));
    CHECK(is_induced_hoffman_subgraph(make_h_t(2), make_h_t(3)));
    CHECK_FALSE(is_induced_hoffman_subgraph(make_h_t(3), make_c(4)));
}

TEST_CASE("direct sums") {
    const std::pair<Vertex, Vertex> one[] = {{1, 1}};
    const auto d = direct_sum(make_h_t(3), make_h_t(3), one);
    CHECK(d.slim_count() == 2);
    CHECK(d.fat_count() == 5);
    CHECK(d.graph().adjacent(d.slims()[0], d.slims()[1]));
    CHECK(special_matrix(d).rows() == Rows{{-3, 0}, {0, -3}});
    const auto e = direct_sum(make_h_t(1), make_h_t(1), std::span<const std::pair<Vertex, Vertex>>{});
    CHECK(special_matrix(e).rows() == Rows{{-1, 0}, {0, -1}});
    CHECK(e.graph().size() == 2);
    const auto mixed = direct_sum(make_h_t(3), make_h_t(1), std::span<const std::pair<Vertex, Vertex>>{});
    CHECK(lambda_min_cmp3(mixed) == LambdaOrder::Equal);
    const std::pair<Vertex, Vertex> two[] = {{1, 1}, {2, 2}};
    CHECK_THROWS_AS(direct_sum(make_h_t(3), make_h_t(3), two), std::invalid_argument);
}

TEST_CASE("decomposition") {
    CHECK(decompose(make_h_t(3)).size() == 1);
    const std::pair<Vertex, Vertex> one[] = {{1, 1}};
    const auto d = direct_sum(make_h_t(3), make_h_t(3), one);
    const auto factors = decompose(d);
    REQUIRE(factors.size() == 2);
    for (const auto& f : factors) CHECK(hoffman_isomorphic(f.graph, make_h_t(3)));
    CHECK(reassemble(factors) == d);
    for (int m = 2; m <= 10; ++m) CHECK(is_indecomposable(make_c(m)));
}

TEST_CASE("decomposition blocks the special matrix") {
    // property: factors partition the slims, Sp is block diagonal along them
    std::mt19937 rng(4);
    const HoffmanGraph pool[] = {make_h_t(1), make_h_t(2), make_fat_star(2), make_c(3), make_third_member()};
    for (int trial = 0; trial < 60; ++trial) {
        const auto& a = pool[rng() % 5];
        const auto& b = pool[rng() % 5];
        std::vector<std::pair<Vertex, Vertex>> sh;
        if (rng() % 2) sh.push_back({a.fats()[rng() % a.fat_count()], b.fats()[rng() % b.fat_count()]});
        HoffmanGraph d;
        try {
            d = direct_sum(a, b, sh);
        } catch (const std::invalid_argument&) {
            continue;
        }
        const auto factors = decompose(d);
        CHECK(factors.size() >= 2);
        CHECK(reassemble(factors) == d);
        const auto sp = special_matrix(d);
        std::vector<int> block(d.order(), -1);
        int covered = 0;
        for (std::size_t i = 0; i < factors.size(); ++i)
            for (Vertex s : factors[i].graph.slims()) {
                block[factors[i].origin[s]] = static_cast<int>(i);
                ++covered;
            }
        CHECK(covered == d.slim_count());
        for (int i = 0; i < sp.dim(); ++i)
            for (int j = 0; j < sp.dim(); ++j)
                if (block[d.slims()[i]] != block[d.slims()[j]]) CHECK(sp(i, j) == 0);
    }
}

TEST_CASE("a slim of weight 3 splits off h^(3) when lambda_min >= -3") {
    std::mt19937 rng(21);
    int seen = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v) edges.push_back({static_cast<int>(rng() % v), v});
        const Graph t(n, edges);
        std::vector<Label> labels(n, Label::Slim);
        for (int v = 0; v < n; ++v) {
            bool free = rng() % 2;
            for (Vertex u : t.neighbors(v)) free = free && labels[u] == Label::Slim;
            if (free) labels[v] = Label::Fat;
        }
        if (std::count(labels.begin(), labels.end(), Label::Slim) == 0) continue;
        const HoffmanGraph h(t, labels);
        if (lambda_min_cmp3(h) == LambdaOrder::Less) continue;
        for (Vertex x : h.slims()) {
            if (h.weight(x) != 3) continue;
            ++seen;
            const auto parts = decompose(h);
            const bool split = std::any_of(parts.begin(), parts.end(), [&](const Embedded& e) {
                return e.graph.slim_count() == 1 && e.origin[e.graph.slims()[0]] == x &&
                       hoffman_isomorphic(e.graph, make_h_t(3));
            });
            CHECK(split);
        }
    }
    CHECK(seen >= 5);
}

TEST_CASE("stripped sums") {
    const auto s = h3_pair_stripped();
    CHECK(s.graph.slim_count() == 2);
    CHECK(s.graph.fat_count() == 4);
    for (Vertex x : s.graph.slims()) CHECK(s.graph.weight(x) == 2);
    CHECK(s.graph.graph().adjacent(s.graph.slims()[0], s.graph.slims()[1]));
    const HoffmanGraph single[] = {make_c(4)};
    CHECK(stripped_sum(single, std::span<const SharedFat>{}).graph == make_c(4));
}

TEST_CASE("chain of h3 gives a tree with internal valency 3") {
    for (int m = 2; m <= 6; ++m) {
        std::vector<HoffmanGraph> parts(m, make_h_t(3));
        std::vector<SharedFat> shared;
        for (int i = 0; i + 1 < m; ++i) shared.push_back({{static_cast<std::size_t>(i), 2}, {static_cast<std::size_t>(i + 1), 1}});
        CHECK(check_tree_like_stripping(parts, shared).tree_like);
        const auto h = stripped_sum(parts, shared).graph;
        CHECK(h.is_tree_like());
        CHECK(slim_graph(h).is_tree());
        for (Vertex v = 0; v < h.order(); ++v) {
            if (h.is_slim(v)) CHECK(h.graph().degree(v) == 3);
            else CHECK(h.graph().degree(v) == 1);
        }
        CHECK(lambda_min_cmp3(h) == LambdaOrder::Equal);
    }
}

TEST_CASE("tree-like stripping diagnostics") {
    const HoffmanGraph two[] = {make_h_t(3), make_h_t(3)};
    const SharedFat one[] = {{{0, 1}, {1, 1}}};
    CHECK(check_tree_like_stripping(two, one).tree_like);
    const SharedFat both[] = {{{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}};
    CHECK(check_tree_like_stripping(two, both).violated == 3);
    CHECK(check_tree_like_stripping(two, std::span<const SharedFat>{}).violated == 1);
    // fat star centre glued to c_3's f_{1,2}: neither is a leaf
    const HoffmanGraph nonleaf[] = {make_fat_star(3), make_c(3)};
    const SharedFat mid[] = {{{0, 3}, {1, 4}}};
    CHECK(check_tree_like_stripping(nonleaf, mid).violated == 5);
    const SharedFat three[] = {{{0, 1}, {1, 1}, {2, 1}}};
    const HoffmanGraph trio[] = {make_h_t(3), make_h_t(3), make_h_t(3)};
    CHECK(check_tree_like_stripping(trio, three).violated == 4);
    // glued around a cycle: the slims would form a triangle
    const SharedFat ring[] = {{{0, 1}, {1, 1}}, {{1, 2}, {2, 2}}, {{2, 3}, {0, 3}}};
    const auto c = check_tree_like_stripping(trio, ring);
    CHECK_FALSE(c.tree_like);
    CHECK(c.violated == 6);
    const HoffmanGraph cyc[] = {make_c(3), make_h_t(3)};
    const SharedFat ok[] = {{{0, 3}, {1, 1}}};
    CHECK(check_tree_like_stripping(cyc, ok).tree_like);
}

TEST_CASE("stripping check agrees with the actual stripped sum") {
    std::mt19937 rng(12);
    const HoffmanGraph pool[] = {make_h_t(2), make_h_t(3), make_fat_star(2), make_fat_star(3), make_c(2), make_c(3), make_third_member()};
    int positives = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int k = 2 + static_cast<int>(rng() % 3);
        std::vector<HoffmanGraph> parts;
        for (int i = 0; i < k; ++i) parts.push_back(pool[rng() % 7]);
        std::vector<SharedFat> shared;
        std::vector<std::vector<bool>> used(k);
        for (int i = 0; i < k; ++i) used[i].assign(parts[i].order(), false);
        const int links = static_cast<int>(rng() % (k + 1));
        for (int l = 0; l < links; ++l) {
            const int i = static_cast<int>(rng() % k), j = static_cast<int>(rng() % k);
            if (i == j) continue;
            const Vertex fi = parts[i].fats()[rng() % parts[i].fat_count()];
            const Vertex fj = parts[j].fats()[rng() % parts[j].fat_count()];
            if (used[i][fi] || used[j][fj]) continue;
            used[i][fi] = used[j][fj] = true;
            shared.push_back({{static_cast<std::size_t>(i), fi}, {static_cast<std::size_t>(j), fj}});
        }
        const auto check = check_tree_like_stripping(parts, shared);
        if (!check.tree_like) continue;
        ++positives;
        const auto h = stripped_sum(parts, shared).graph;
        CHECK(h.is_tree_like());
    }
    CHECK(positives > 20);
}

TEST_CASE("fat attachment") {
    const auto edge = all_slim(Graph(2, {{0, 1}}));
    const Vertex first[] = {0}, both[] = {0, 1};
    const auto a = attach_fat(edge, first);
    CHECK(a.weight(0) == 1);
    CHECK(a.weight(1) == 0);
    CHECK(special_matrix(attach_fat(edge, both)).rows() == Rows{{-1, 0}, {0, -1}});
    const auto h4 = attach_fat(make_h_t(3), first);
    CHECK(special_matrix(h4).rows() == Rows{{-4}});
    CHECK(lambda_min_cmp3(h4) == LambdaOrder::Less);
}

TEST_CASE("saturation test") {
    CHECK(is_saturated_minus3(make_fat_star(3)));
    CHECK(is_saturated_minus3(make_h_t(3)));
    CHECK_FALSE(is_saturated_minus3(make_h_t(1)));
    CHECK_THROWS(is_saturated_minus3(make_h_t(4)));
}

TEST_CASE("special graphs") {
    const auto c2 = special_graph(make_c(2));
    CHECK(c2.minus_edges() == std::vector<Edge>{{0, 1}});
    CHECK(c2.plus_edges().empty());
    const auto star = special_graph(make_fat_star(3));
    CHECK(star.minus_edges().size() == 3);
    const Vertex s[] = {0, 1}, f[] = {2};
    const auto common = HoffmanGraph::from_lists(s, f, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(special_graph(common).underlying().size() == 0);
    const auto w = weighted_minus(make_c(3));
    CHECK(w.weight == std::vector<int>{2, 1, 1});
    CHECK(special_minus_graph(make_fat_star(3)).size() == 3);
}

TEST_CASE("nonpositive signing on c_m") {
    for (int m = 2; m <= 10; ++m) {
        const auto h = make_c(m);
        const auto d = nonpositive_signing(h);
        REQUIRE(static_cast<int>(d.size()) == m);
        const auto sp = special_matrix(h);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j) CHECK(d[i] * sp(i, j) * d[j] <= 0);
    }
    // an unbalanced triangle of (+)-edges cannot be signed
    CHECK(nonpositive_signing(all_slim(Graph(3, {{0, 1}, {0, 2}, {1, 2}}))).empty());
}

TEST_CASE("special graph of c_5 is connected") {
    CHECK(connected_components(special_graph(make_c(5)).underlying()).size() == 1);
}
