#include <stdexcept>
#include <algorithm>
#include <set>

#include "doctest.h"

#include "hoffman/catalog.hpp"
#include "hoffman/classify.hpp"
#include "hoffman/hoffman_graph.hpp"
#include "hoffman/isomorphism.hpp"
#include "hoffman/spectral.hpp"

using namespace hoffman;

namespace {

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, e);
}

}  // namespace

TEST_CASE("census on small trees") {
    const auto c4 = brute_force_ir_trees(4);
    CHECK(c4.size() == 5);  // orders 1 to 4
    for (const auto& e : c4) CHECK(e.representable == Verdict::Yes);
    const auto c5 = brute_force_ir_trees(5);
    CHECK(c5.size() == 8);
    CHECK(std::all_of(c5.begin(), c5.end(), [](const TreeCensusEntry& e) { return e.representable == Verdict::Yes; }));
}

TEST_CASE("census soundness") {
    const auto census = brute_force_ir_trees(12);
    CHECK(census.size() == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106 + 235 + 551);
    int negative = 0;
    for (const auto& e : census) {
        CHECK(e.representable != Verdict::Inconclusive);
        if (e.representable == Verdict::Yes) {
            CHECK(e.lambda_vs_minus3 != LambdaOrder::Less);
            REQUIRE(e.witness.has_value());
            CHECK(verify_reduced(all_slim(e.tree), *e.witness));
        } else {
            ++negative;
        }
        // bipartite: lambda_min = -3 iff the spectral radius is 3
        CHECK((e.lambda_vs_minus3 == LambdaOrder::Equal) ==
              (cmp_lambda_max(adjacency_matrix(e.tree), 3) == LambdaOrder::Equal));
        CHECK(e.code == canonical_code(e.tree));
    }
    // every tree on at most 10 vertices is representable; the first failures have 11
    for (const auto& e : census)
        if (e.n <= 10) CHECK(e.representable == Verdict::Yes);
    CHECK(negative == 8);
}

TEST_CASE("construction lies inside the census") {
    const auto built = construct_ir_trees_from_F(14);
    const auto census = brute_force_ir_trees(14);
    std::set<std::string> radius3;
    for (const auto& e : census)
        if (e.representable == Verdict::Yes && e.lambda_vs_minus3 == LambdaOrder::Equal) radius3.insert(e.code);
    CHECK(std::set<std::string>(built.begin(), built.end()) == radius3);
    CHECK(built.size() == 2);
    for (const auto& g : construct_ir_tree_graphs(20)) CHECK(cmp_lambda_min(adjacency_matrix(g), -3) == LambdaOrder::Equal);
}

TEST_CASE("gluing two h3 at all three fats is rejected") {
    const HoffmanGraph parts[] = {make_h_t(3), make_h_t(3)};
    const SharedFat all3[] = {{{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}, {{0, 3}, {1, 3}}};
    CHECK_FALSE(check_tree_like_stripping(parts, all3).tree_like);
    CHECK_THROWS_AS(stripped_sum(parts, all3), std::invalid_argument);
}

TEST_CASE("completion to spectral radius 3") {
    const std::vector<HoffmanGraph> h3 = {make_h_t(3)};
    const auto k19 = complete_to_radius3(Graph(1), h3, {});
    CHECK(k19.order() == 10);
    CHECK(cmp_lambda_min(adjacency_matrix(k19), -3) == LambdaOrder::Equal);
    int max_deg = 0;
    for (Vertex v = 0; v < k19.order(); ++v) max_deg = std::max(max_deg, k19.degree(v));
    CHECK(max_deg == 9);

    // an all-slim result is returned unchanged
    const std::vector<HoffmanGraph> pair = {make_h_t(3), make_h_t(3)};
    const std::vector<SharedFat> one = {{{0, 1}, {1, 1}}};
    const auto t = slim_graph(stripped_sum(pair, one).graph);
    const auto done = complete_to_radius3(t, pair, one);
    CHECK(done.is_tree());
    CHECK(subtree_embeds(t, done));
    CHECK(cmp_lambda_min(adjacency_matrix(done), -3) == LambdaOrder::Equal);

    // c_3 has a non-leaf leftover fat
    const std::vector<HoffmanGraph> c3 = {make_c(3)};
    const auto g = complete_to_radius3(slim_graph(make_c(3)), c3, {});
    CHECK(has_induced_embedding(slim_graph(make_c(3)), {}, g, {}));
    CHECK(cmp_lambda_min(adjacency_matrix(g), -3) == LambdaOrder::Equal);

    CHECK_THROWS_AS(complete_to_radius3(path(3), h3, {}), std::invalid_argument);
    const std::vector<HoffmanGraph> weak = {make_h_t(2)};
    CHECK_THROWS_AS(complete_to_radius3(Graph(1), weak, {}), std::invalid_argument);
}

TEST_CASE("census and construction agree at n_max = 8") {
    const auto r = verify_main_theorem(8);
    CHECK(r.equality());
    CHECK(r.ok());
    CHECK(r.smaller_trees + r.census_radius3 == r.census_trees);
}

TEST_CASE("paths embed into constructed trees") {
    const auto hosts = construct_ir_tree_graphs(26);
    for (int n = 2; n <= 14; ++n) {
        const auto p = path(n);
        CHECK(std::any_of(hosts.begin(), hosts.end(), [&](const Graph& h) { return subtree_embeds(p, h); }));
    }
}

TEST_CASE("fat 3-seedling counts") {
    CHECK(enumerate_fat_3_seedlings(ExtendedE::E6).size() == 7);
    CHECK(enumerate_fat_3_seedlings(ExtendedE::E7).size() == 18);
    CHECK(enumerate_fat_3_seedlings(ExtendedE::E8).size() == 50);
}

TEST_CASE("bounded reducibility") {
    const auto edge = all_slim(Graph(2, {{0, 1}}));
    const auto v = is_reducible_bounded(edge, 1);
    REQUIRE(v.kind == ReducibilityVerdict::Kind::Reducible);
    REQUIRE(v.attachments.size() == 1);
    CHECK(v.attachments[0] == std::vector<Vertex>{0, 1});
    CHECK(v.factors.size() == 2);
    for (int m = 2; m <= 5; ++m)
        CHECK(is_reducible_bounded(make_c(m), 2).kind == ReducibilityVerdict::Kind::NoWitnessWithinBudget);
    CHECK(is_reducible_bounded(make_fat_star(3), 2).kind == ReducibilityVerdict::Kind::NoWitnessWithinBudget);
    CHECK_THROWS_AS(is_reducible_bounded(make_h_t(4)), std::invalid_argument);
    CHECK(is_reducible_bounded(make_c(4), 2, 1).kind == ReducibilityVerdict::Kind::BudgetExceeded);
}

TEST_CASE("reducibility witnesses are valid") {
    for (const auto& h : {all_slim(Graph(2, {{0, 1}})), all_slim(path(3)), make_h_t(1), make_fat_star(2)}) {
        const auto v = is_reducible_bounded(h);
        if (v.kind != ReducibilityVerdict::Kind::Reducible) continue;
        HoffmanGraph g = h;
        for (const auto& s : v.attachments) g = attach_fat(g, s);
        CHECK(lambda_min_cmp3(g) != LambdaOrder::Less);
        const auto parts = decompose(g);
        CHECK(parts.size() >= 2);
        for (const auto& p : parts) CHECK(p.graph.slim_count() > 0);
    }
}

TEST_CASE("seedling semi-decision") {
    CHECK(is_seedling_bounded(make_c(4)) == Verdict::Yes);
    CHECK(is_seedling_bounded(catalog_member("e6").graph) == Verdict::Yes);
    // c_4 without f_m (id 6) extends back to c_4
    const auto c4 = make_c(4);
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < c4.order(); ++v)
        if (v != 6) keep.push_back(v);
    std::vector<Label> labels;
    for (Vertex v : keep) labels.push_back(c4.labels()[v]);
    const HoffmanGraph cut(c4.graph().induced(keep), labels);
    CHECK(is_seedling_bounded(cut) == Verdict::No);
    CHECK(to_string(Verdict::No) == "no");
}

TEST_CASE("small tree-like graphs") {
    const auto one = enumerate_small_tree_like(1);
    std::vector<HoffmanGraph> maximal;
    for (const auto& m : one)
        if (m.maximal) maximal.push_back(m.graph);
    REQUIRE(maximal.size() == 1);
    CHECK(hoffman_isomorphic(maximal[0], make_h_t(3)));
    for (const auto& m : enumerate_small_tree_like(3)) {
        CHECK(lambda_min_cmp3(m.graph) != LambdaOrder::Less);
        CHECK(eigen_multiplicity_at(special_matrix(m.graph), 0) >= 0);
        CHECK(lambda_min_cluster(special_matrix(m.graph)).count == 1);
    }
    CHECK_THROWS_AS(enumerate_small_tree_like(5), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_small_tree_like(0), std::invalid_argument);
}

TEST_CASE("lattice minus graphs") {
    CHECK(is_lattice_minus_graph(path(5)));
    CHECK(is_lattice_minus_graph(smith_graph(SmithKind::D, 5)));
    CHECK(is_lattice_minus_graph(smith_graph(SmithKind::ATilde, 4)));
    CHECK(is_lattice_minus_graph(smith_graph(SmithKind::DTilde, 5)));
    CHECK_FALSE(is_lattice_minus_graph(smith_graph(SmithKind::E6)));
    CHECK_FALSE(is_lattice_minus_graph(Graph(3, {{0, 1}})));
}

TEST_CASE("parallel_for covers every index once") {
    std::vector<int> hits(1000, 0);
    parallel_for(1000, [&](int i) { hits[i] += 1; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int x) { return x == 1; }));
    CHECK_THROWS(parallel_for(10, [](int i) {
        if (i == 3) throw std::runtime_error("boom");
    }));
    CHECK(worker_count() >= 1);
}
