#include "hoffman/random.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hoffman/catalog.hpp"
#include "hoffman/spectral.hpp"

namespace hoffman {

Graph random_tree(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("a tree needs a vertex");
    if (n == 1) return Graph(1);
    if (n == 2) return Graph(2, {{0, 1}});
    std::vector<int> code(n - 2), deg(n, 1);
    for (int& x : code) ++deg[x = static_cast<int>(rng() % n)];
    std::vector<Edge> edges;
    for (int x : code) {
        int leaf = 0;
        while (deg[leaf] != 1) ++leaf;
        edges.push_back({std::min(leaf, x), std::max(leaf, x)});
        --deg[leaf];
        --deg[x];
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) last.push_back(v);
    edges.push_back({last[0], last[1]});
    return Graph(n, edges);
}

HoffmanGraph random_tree_like(int max_slims, Rng& rng) {
    if (max_slims < 1) throw std::invalid_argument("max_slims >= 1 required");
    for (;;) {
        const int n = 1 + static_cast<int>(rng() % (max_slims + 6));
        const Graph t = random_tree(n, rng);
        std::vector<Label> labels(n, Label::Slim);
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::shuffle(order.begin(), order.end(), rng);
        for (int v : order) {
            if (rng() % 5 >= 2) continue;
            bool free = true;
            for (Vertex u : t.neighbors(v)) free = free && labels[u] == Label::Slim;
            if (free) labels[v] = Label::Fat;
        }
        const auto slims = std::count(labels.begin(), labels.end(), Label::Slim);
        if (slims == 0 || slims > max_slims) continue;
        return HoffmanGraph(t, labels);
    }
}

namespace {

int integer_lambda_min(const SymmetricIntMatrix& m) {
    for (int r = 0; r >= -2 * m.dim() - 3; --r)
        if (cmp_lambda_min(m, r) == LambdaOrder::Equal) return r;
    throw std::logic_error("lambda_min is not an integer");
}

struct PoolItem {
    HoffmanGraph graph;
    int lambda;
};

const std::vector<PoolItem>& pool() {
    static const std::vector<PoolItem> items = [] {
        std::vector<HoffmanGraph> gs;
        for (int t = 1; t <= 3; ++t) gs.push_back(make_h_t(t));
        for (int k = 2; k <= 3; ++k) gs.push_back(make_fat_star(k));
        gs.push_back(make_third_member());
        for (int m = 2; m <= 6; ++m) gs.push_back(make_c(m));
        std::vector<PoolItem> out;
        for (auto& g : gs) out.push_back({g, integer_lambda_min(special_matrix(g))});
        return out;
    }();
    return items;
}

}  // namespace

RandomStrippedSum random_stripped_sum(int max_parts, Rng& rng) {
    if (max_parts < 1) throw std::invalid_argument("max_parts >= 1 required");
    const auto& items = pool();
    for (;;) {
        RandomStrippedSum r;
        const int k = 1 + static_cast<int>(rng() % max_parts);
        std::vector<std::vector<bool>> used;
        bool stuck = false;
        for (int i = 0; i < k && !stuck; ++i) {
            const auto& item = items[rng() % items.size()];
            r.parts.push_back(item.graph);
            r.part_lambda.push_back(item.lambda);
            used.emplace_back(item.graph.order(), false);
            if (i == 0) continue;
            const int j = static_cast<int>(rng() % i);
            std::vector<Vertex> open;
            for (Vertex f : r.parts[j].fats())
                if (!used[j][f]) open.push_back(f);
            if (open.empty()) {
                stuck = true;
                break;
            }
            const Vertex fj = open[rng() % open.size()];
            const Vertex fi = item.graph.fats()[rng() % item.graph.fat_count()];
            used[j][fj] = used[i][fi] = true;
            r.shared.push_back({{static_cast<std::size_t>(j), fj}, {static_cast<std::size_t>(i), fi}});
        }
        if (stuck || !check_tree_like_stripping(r.parts, r.shared).tree_like) continue;
        r.sum = stripped_sum(r.parts, r.shared).graph;
        return r;
    }
}

PropertyReport run_property_suite(std::uint64_t seed, int cases) {
    PropertyReport rep;
    Rng rng(seed);
    auto fail = [&](const std::string& what) {
        if (rep.failures.size() < 20) rep.failures.push_back(what);
    };
    for (int c = 0; c < cases; ++c) {
        const auto s = random_stripped_sum(5, rng);
        ++rep.sandwich_cases;
        const auto sp = special_matrix(s.sum);
        const int lo = *std::min_element(s.part_lambda.begin(), s.part_lambda.end());
        const int hi = *std::max_element(s.part_lambda.begin(), s.part_lambda.end());
        if (cmp_lambda_min(sp, lo) == LambdaOrder::Less) fail("stripped sum below its smallest part");
        if (cmp_lambda_min(sp, hi) == LambdaOrder::Greater) fail("stripped sum above its largest part");
        const bool all3 = std::all_of(s.part_lambda.begin(), s.part_lambda.end(), [](int x) { return x == -3; });
        if (all3 != (cmp_lambda_min(sp, -3) == LambdaOrder::Equal)) fail("-3 equivalence fails");
    }
    for (int found = 0, tries = 0; found < cases && tries < 1000 * cases; ++tries) {
        const auto h = random_tree_like(10, rng);
        if (lambda_min_cmp3(h) == LambdaOrder::Less) continue;
        ++found;
        ++rep.signing_cases;
        const auto sp = special_matrix(h);
        if (lambda_min_cluster(sp).count != 1) fail("lambda_min not simple");
        const auto d = nonpositive_signing(h);
        if (static_cast<int>(d.size()) != sp.dim()) {
            fail("no nonpositive signing");
            continue;
        }
        for (int i = 0; i < sp.dim(); ++i)
            for (int j = 0; j < sp.dim(); ++j)
                if (i != j && d[i] * sp(i, j) * d[j] > 0) fail("D Sp D has a positive entry");
    }
    return rep;
}

}  // namespace hoffman
