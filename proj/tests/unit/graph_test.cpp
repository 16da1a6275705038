#include <stdexcept>
#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"

#include "hoffman/graph.hpp"
#include "hoffman/isomorphism.hpp"
#include "hoffman/spectral.hpp"

using namespace hoffman;

namespace {

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, e);
}

Graph star(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return Graph(leaves + 1, e);
}

Graph random_relabel(const Graph& g, std::mt19937& rng) {
    std::vector<Vertex> p(g.order());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return g.relabeled(p);
}

// labeled trees via Pruefer codes, deduplicated by brute-force isomorphism
int brute_force_tree_count(int n) {
    if (n <= 2) return 1;
    std::vector<Graph> reps;
    std::vector<int> code(n - 2, 0);
    for (;;) {
        std::vector<int> deg(n, 1);
        for (int x : code) ++deg[x];
        std::vector<Edge> edges;
        for (int x : code) {
            int leaf = 0;
            while (deg[leaf] != 1) ++leaf;
            edges.push_back({std::min(leaf, x), std::max(leaf, x)});
            --deg[leaf];
            --deg[x];
        }
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1) rest.push_back(v);
        edges.push_back({rest[0], rest[1]});
        Graph t(n, edges);
        if (std::none_of(reps.begin(), reps.end(), [&](const Graph& r) { return isomorphic(r, t); }))
            reps.push_back(t);
        int i = 0;
        while (i < n - 2 && ++code[i] == n) code[i++] = 0;
        if (i == n - 2) break;
    }
    return static_cast<int>(reps.size());
}

}  // namespace

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    Graph g(3, {{2, 1}, {0, 1}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(g.is_tree());
}

TEST_CASE("adjacency matrix") {
    CHECK(adjacency_matrix(path(3)).rows() == std::vector<std::vector<std::int64_t>>{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    CHECK(adjacency_matrix(Graph(1)).rows() == std::vector<std::vector<std::int64_t>>{{0}});
    const auto tri = adjacency_matrix(Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(tri(i, j) == (i == j ? 0 : 1));
}

TEST_CASE("connected components") {
    CHECK(connected_components(path(2)).size() == 1);
    CHECK(connected_components(Graph(2)).size() == 2);
    const auto comps = connected_components(Graph(5, {{3, 4}, {0, 2}}));
    CHECK(comps == std::vector<std::vector<Vertex>>{{0, 2}, {1}, {3, 4}});
}

TEST_CASE("smith graphs") {
    const auto a2 = smith_graph(SmithKind::ATilde, 2);
    CHECK(a2.order() == 3);
    CHECK(a2.size() == 3);
    CHECK(cmp_lambda_max(adjacency_matrix(a2), 2) == LambdaOrder::Equal);
    const auto e8 = smith_graph(SmithKind::E8Tilde);
    CHECK(e8.order() == 9);
    CHECK(e8.is_tree());
    CHECK(cmp_lambda_max(adjacency_matrix(e8), 2) == LambdaOrder::Equal);
    CHECK(cmp_lambda_max(adjacency_matrix(smith_graph(SmithKind::A, 3)), 2) == LambdaOrder::Less);
    CHECK(smith_graph(SmithKind::DTilde, 4).order() == 5);
    CHECK(smith_graph(SmithKind::E6Tilde).order() == 7);
    CHECK(smith_graph(SmithKind::E7Tilde).order() == 8);
    for (auto k : {SmithKind::E6, SmithKind::E7, SmithKind::E8, SmithKind::D})
        CHECK(cmp_lambda_max(adjacency_matrix(smith_graph(k, 6)), 2) == LambdaOrder::Less);
    CHECK_THROWS_AS(smith_graph(SmithKind::ATilde, 1), std::invalid_argument);
    CHECK_THROWS_AS(smith_graph(SmithKind::D, 3), std::invalid_argument);
}

TEST_CASE("free tree counts") {
    const int known[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int n = 1; n <= 12; ++n) CHECK(static_cast<int>(enumerate_free_trees(n).size()) == known[n]);
}

TEST_CASE("free tree enumeration matches a brute-force oracle") {
    for (int n = 1; n <= 8; ++n) {
        const auto trees = enumerate_free_trees(n);
        CHECK(static_cast<int>(trees.size()) == brute_force_tree_count(n));
        std::set<std::string> codes;
        for (const auto& t : trees) {
            CHECK(t.is_tree());
            CHECK(t.order() == n);
            codes.insert(canonical_code(t));
        }
        CHECK(codes.size() == trees.size());
    }
}

TEST_CASE("canonical codes") {
    std::mt19937 rng(7);
    CHECK(canonical_code(path(4)) == canonical_code(random_relabel(path(4), rng)));
    CHECK(canonical_code(path(4)) != canonical_code(star(3)));
    for (const auto& t : enumerate_free_trees(7)) {
        const auto a = random_relabel(t, rng), b = random_relabel(t, rng);
        CHECK(canonical_code(a) == canonical_code(b));
        CHECK(isomorphic(a, b));
    }
    CHECK_THROWS_AS(canonical_code(Graph(3, {{0, 1}})), std::invalid_argument);
    // coloured codes distinguish colourings
    const std::vector<int> c1 = {1, 0, 0, 0}, c2 = {0, 1, 0, 0};
    CHECK(canonical_code(path(4), c1) != canonical_code(path(4), c2));
}

TEST_CASE("spider and distances") {
    const int legs[] = {2, 2, 2};
    const auto s = spider(legs);
    CHECK(s.order() == 7);
    CHECK(isomorphic(s, smith_graph(SmithKind::E6Tilde)));
    const auto d = distances_from(Graph(3, {{0, 1}}), 0);
    CHECK(d == std::vector<int>{0, 1, -1});
}

TEST_CASE("induced and subtree embeddings agree on trees") {
    const auto small = enumerate_free_trees(5);
    const auto big = enumerate_free_trees(7);
    for (const auto& p : small)
        for (const auto& h : big) CHECK(subtree_embeds(p, h) == has_induced_embedding(p, {}, h, {}));
    CHECK(subtree_embeds(path(5), path(7)));
    CHECK_FALSE(subtree_embeds(star(4), path(9)));
}

TEST_CASE("automorphism counts") {
    CHECK(automorphisms(star(3)).size() == 6);
    CHECK(automorphisms(path(4)).size() == 2);
    CHECK(automorphisms(smith_graph(SmithKind::E6Tilde)).size() == 6);
}
