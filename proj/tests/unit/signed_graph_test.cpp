#include <stdexcept>
#include <random>

#include "doctest.h"

#include "hoffman/graph.hpp"
#include "hoffman/signed_graph.hpp"
#include "hoffman/spectral.hpp"

using namespace hoffman;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

EdgeSignedGraph random_signing(const Graph& g, std::mt19937& rng) {
    std::vector<int> s(g.size());
    for (int& x : s) x = rng() % 2 ? 1 : -1;
    return EdgeSignedGraph(g, s);
}

}  // namespace

TEST_CASE("signed adjacency") {
    CHECK(signed_adjacency(EdgeSignedGraph(2, {{0, 1}}, {})).rows() == Rows{{0, 1}, {1, 0}});
    CHECK(signed_adjacency(EdgeSignedGraph(2, {}, {{0, 1}})).rows() == Rows{{0, -1}, {-1, 0}});
    CHECK(signed_adjacency(EdgeSignedGraph(3, {{0, 1}}, {{1, 2}})).rows() == Rows{{0, 1, 0}, {1, 0, -1}, {0, -1, 0}});
    CHECK_THROWS_AS(EdgeSignedGraph(2, {{0, 1}}, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("switching") {
    const EdgeSignedGraph p3(3, {{0, 1}}, {{1, 2}});
    CHECK(switch_at(p3, std::vector<Vertex>{}) == p3);
    const EdgeSignedGraph minus(2, {}, {{0, 1}});
    CHECK(switch_at(minus, std::vector<Vertex>{0}) == EdgeSignedGraph(2, {{0, 1}}, {}));
    const EdgeSignedGraph plus3(3, {{0, 1}, {1, 2}}, {});
    CHECK(switch_at(plus3, std::vector<Vertex>{1}) == EdgeSignedGraph(3, {}, {{0, 1}, {1, 2}}));
}

TEST_CASE("switching equivalence examples") {
    CHECK(switching_equivalent(EdgeSignedGraph(3, {{0, 1}}, {{1, 2}}), EdgeSignedGraph(3, {}, {{0, 1}, {1, 2}})));
    const std::vector<Edge> tri = {{0, 1}, {0, 2}, {1, 2}};
    CHECK_FALSE(switching_equivalent(EdgeSignedGraph(3, tri, {}), EdgeSignedGraph(3, {}, tri)));
    std::mt19937 rng(3);
    for (const auto& t : enumerate_free_trees(7)) {
        const auto s = random_signing(t, rng);
        CHECK(switching_equivalent(s, EdgeSignedGraph(t, std::vector<int>(t.size(), 1))));
    }
}

TEST_CASE("switching preserves the spectrum and is an equivalence") {
    std::mt19937 rng(9);
    const Graph g(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = random_signing(g, rng);
        std::vector<Vertex> u;
        for (int v = 0; v < 5; ++v)
            if (rng() % 2) u.push_back(v);
        const auto t = switch_at(s, u);
        const auto es = eigenvalues_float(signed_adjacency(s)), et = eigenvalues_float(signed_adjacency(t));
        for (std::size_t i = 0; i < es.size(); ++i) CHECK(es[i] == doctest::Approx(et[i]));
        CHECK(switching_equivalent(s, t));
        CHECK(switching_equivalent(t, s));
        CHECK(switching_equivalent(s, s));
        CHECK(switch_at(t, u) == s);
        const auto w = random_signing(g, rng);
        if (switching_equivalent(s, t) && switching_equivalent(t, w)) CHECK(switching_equivalent(s, w));
    }
}

TEST_CASE("minus matchings") {
    CHECK(enumerate_minus_matchings(Graph(2, {{0, 1}})).size() == 2);
    CHECK(enumerate_minus_matchings(Graph(3, {{0, 1}, {1, 2}})).size() == 2);
    CHECK(enumerate_minus_matchings(smith_graph(SmithKind::E6Tilde)).size() == 7);
    CHECK(enumerate_minus_matchings(smith_graph(SmithKind::E7Tilde)).size() == 18);
    CHECK(enumerate_minus_matchings(smith_graph(SmithKind::E8Tilde)).size() == 50);
}

TEST_CASE("matching orbits partition all matchings") {
    for (int n = 2; n <= 8; ++n)
        for (const auto& t : enumerate_free_trees(n)) {
            long long total = 0;
            for (const auto& c : enumerate_minus_matchings(t)) total += c.orbit_size;
            CHECK(total == count_matchings(t));
        }
}
