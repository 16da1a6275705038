#include "hoffman/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "hoffman/isomorphism.hpp"
#include "hoffman/signed_graph.hpp"

namespace hoffman {

int worker_count() {
    if (const char* env = std::getenv("HOFFMAN_WORKERS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min(v, 256L));
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    const int w = std::min(worker_count(), n);
    if (w <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex m;
    std::vector<std::thread> pool;
    for (int t = 0; t < w; ++t)
        pool.emplace_back([&] {
            for (int i; (i = next++) < n;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(m);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

// ---------------------------------------------------------------------------

std::vector<TreeCensusEntry> brute_force_ir_trees(int n_max, const SolveOptions& opts) {
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
    std::vector<TreeCensusEntry> out;
    for (int n = 1; n <= n_max; ++n)
        for_each_free_tree(n, [&](const Graph& t) {
            TreeCensusEntry e;
            e.tree = t;
            e.n = n;
            out.push_back(std::move(e));
        });
    parallel_for(static_cast<int>(out.size()), [&](int i) {
        auto& e = out[i];
        e.code = canonical_code(e.tree);
        e.lambda_vs_minus3 = cmp_lambda_min(adjacency_matrix(e.tree), Rational(-3));
        auto sol = solve_reduced_integral(all_slim(e.tree), opts);
        switch (sol.status) {
        case SolveStatus::Found:
            e.representable = Verdict::Yes;
            e.witness = std::move(sol.rep);
            break;
        case SolveStatus::NotRepresentable: e.representable = Verdict::No; break;
        case SolveStatus::BudgetExceeded: e.representable = Verdict::Inconclusive; break;
        }
    });
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::map<std::string, Graph> construct_map(int n_max) {
    std::map<std::string, Graph> done;
    if (n_max < 2) return done;
    std::vector<HoffmanGraph> members;
    int min_close = n_max + 1;
    for (auto& m : family_F(n_max)) {
        if (m.graph.slim_count() > n_max) continue;
        if (m.graph.fat_count() == 1) min_close = std::min(min_close, m.graph.slim_count());
        members.push_back(std::move(m.graph));
    }
    std::set<std::string> seen;
    std::deque<HoffmanGraph> queue;
    for (const auto& m : members)
        if (seen.insert(tree_like_code(m)).second) queue.push_back(m);
    while (!queue.empty()) {
        HoffmanGraph g = std::move(queue.front());
        queue.pop_front();
        if (g.fat_count() == 0) {
            Graph t = slim_graph(g);
            done.emplace(canonical_code(t), std::move(t));
            continue;
        }
        // Every assembly is reachable by always closing the first open fat.
        const Vertex f = g.fats().front();
        const bool f_leaf = g.graph().degree(f) == 1;
        const int open_after_base = g.fat_count() - 1;
        for (const auto& p : members) {
            const int open_after = open_after_base + p.fat_count() - 1;
            if (g.slim_count() + p.slim_count() + min_close * open_after > n_max) continue;
            for (Vertex q : p.fats()) {
                if (!f_leaf && p.graph().degree(q) != 1) continue;
                const HoffmanGraph parts[] = {g, p};
                const SharedFat shared[] = {{{0, f}, {1, q}}};
                HoffmanGraph next = stripped_sum(parts, shared).graph;
                if (!next.is_tree_like()) continue;
                if (seen.insert(tree_like_code(next)).second) queue.push_back(std::move(next));
            }
        }
    }
    return done;
}

}  // namespace

std::vector<std::string> construct_ir_trees_from_F(int n_max) {
    std::vector<std::string> out;
    for (auto& [code, g] : construct_map(n_max)) out.push_back(code);
    return out;
}

std::vector<Graph> construct_ir_tree_graphs(int n_max) {
    std::vector<Graph> out;
    for (auto& [code, g] : construct_map(n_max)) out.push_back(std::move(g));
    return out;
}

Graph complete_to_radius3(const Graph& t, const std::vector<HoffmanGraph>& parts,
                          const std::vector<SharedFat>& shared) {
    auto check = check_tree_like_stripping(parts, shared);
    if (!check.tree_like) throw std::invalid_argument("decomposition invalid: " + check.message);
    for (const auto& p : parts)
        if (lambda_min_cmp3(p) != LambdaOrder::Equal)
            throw std::invalid_argument("decomposition invalid: every part needs lambda_min = -3");
    HoffmanGraph g = stripped_sum(parts, shared).graph;
    if (!isomorphic(slim_graph(g), t)) throw std::invalid_argument("decomposition does not produce the given tree");
    const HoffmanGraph star = make_fat_star(3);
    const HoffmanGraph h3 = make_h_t(3);
    while (g.fat_count() > 0) {
        const Vertex f = g.fats().front();
        const bool leaf = g.graph().degree(f) == 1;
        const HoffmanGraph pair[] = {g, leaf ? star : h3};
        const SharedFat glue[] = {{{0, f}, {1, leaf ? Vertex{3} : Vertex{1}}}};
        g = stripped_sum(pair, glue).graph;
    }
    return g.graph();
}

MainTheoremReport verify_main_theorem(int n_max, int slack, const SolveOptions& opts) {
    if (n_max < 1 || slack < 0) throw std::invalid_argument("n_max >= 1 and slack >= 0 required");
    MainTheoremReport r;
    r.n_max = n_max;
    r.slack = slack;
    const auto census = brute_force_ir_trees(n_max, opts);
    r.census_trees = census.size();
    std::set<std::string> radius3;
    std::vector<const TreeCensusEntry*> smaller;
    for (const auto& e : census) {
        if (e.representable == Verdict::Inconclusive) r.inconclusive.push_back(e.code);
        if (e.representable != Verdict::Yes) continue;
        if (e.lambda_vs_minus3 == LambdaOrder::Equal) radius3.insert(e.code);
        if (e.lambda_vs_minus3 == LambdaOrder::Greater) smaller.push_back(&e);
    }
    r.census_radius3 = radius3.size();
    const auto built = construct_ir_trees_from_F(n_max);
    r.constructed = built.size();
    const std::set<std::string> built_set(built.begin(), built.end());
    std::set_difference(radius3.begin(), radius3.end(), built_set.begin(), built_set.end(),
                        std::back_inserter(r.only_in_census));
    std::set_difference(built_set.begin(), built_set.end(), radius3.begin(), radius3.end(),
                        std::back_inserter(r.only_constructed));

    r.smaller_trees = smaller.size();
    auto hosts = construct_ir_tree_graphs(2 * n_max + slack);
    std::stable_sort(hosts.begin(), hosts.end(), [](const Graph& a, const Graph& b) { return a.order() < b.order(); });
    std::vector<int> used(smaller.size(), -1);
    parallel_for(static_cast<int>(smaller.size()), [&](int i) {
        const Graph& t = smaller[i]->tree;
        int max_deg = 0;
        for (Vertex v = 0; v < t.order(); ++v) max_deg = std::max(max_deg, t.degree(v));
        for (const auto& h : hosts) {
            if (h.order() < t.order()) continue;
            int host_deg = 0;
            for (Vertex v = 0; v < h.order(); ++v) host_deg = std::max(host_deg, h.degree(v));
            if (host_deg < max_deg) continue;
            if (subtree_embeds(t, h)) {
                used[i] = h.order();
                return;
            }
        }
    });
    for (std::size_t i = 0; i < smaller.size(); ++i) {
        if (used[i] < 0) r.not_embedded.push_back(smaller[i]->code);
        if (used[i] > n_max + slack) ++r.beyond_short_slack;
        r.largest_host = std::max(r.largest_host, used[i]);
    }
    return r;
}

// ---------------------------------------------------------------------------

std::vector<HoffmanGraph> enumerate_fat_3_seedlings(ExtendedE base) {
    const Graph g = extended_e(base);
    std::vector<HoffmanGraph> out;
    for (const auto& cls : enumerate_minus_matchings(g)) out.push_back(make_esimilar_seedling(g, cls.representative));
    return out;
}

namespace {

struct BudgetOut {};

bool special_connected(const SymmetricIntMatrix& sp, std::vector<std::vector<Vertex>>* comps) {
    std::vector<Edge> edges;
    for (int i = 0; i < sp.dim(); ++i)
        for (int j = i + 1; j < sp.dim(); ++j)
            if (sp(i, j) != 0) edges.emplace_back(i, j);
    Graph g(sp.dim(), edges);
    if (comps) *comps = connected_components(g);
    return g.is_connected();
}

SymmetricIntMatrix attached(const SymmetricIntMatrix& sp, unsigned mask) {
    SymmetricIntMatrix m = sp;
    for (int i = 0; i < sp.dim(); ++i) {
        if (!(mask >> i & 1U)) continue;
        for (int j = i; j < sp.dim(); ++j)
            if (mask >> j & 1U) m.set(i, j, m(i, j) - 1);
    }
    return m;
}

}  // namespace

ReducibilityVerdict is_reducible_bounded(const HoffmanGraph& h, int fat_budget, std::int64_t node_budget) {
    const int k = h.slim_count();
    if (k == 0) throw std::invalid_argument("reducibility needs a slim vertex");
    if (k > 20) throw std::invalid_argument("too many slim vertices for the bounded search");
    const SymmetricIntMatrix sp = special_matrix(h);
    if (cmp_lambda_min(sp, Rational(-3)) == LambdaOrder::Less) throw std::invalid_argument("lambda_min(h) < -3");
    ReducibilityVerdict v;
    v.fat_budget = fat_budget < 0 ? k : fat_budget;
    if (k < 2) return v;
    std::vector<unsigned> stack;
    std::int64_t nodes = 0;
    auto witness = [&](const SymmetricIntMatrix& m) {
        std::vector<std::vector<Vertex>> comps;
        if (special_connected(m, &comps)) return false;
        v.kind = ReducibilityVerdict::Kind::Reducible;
        for (unsigned mask : stack) {
            std::vector<Vertex> s;
            for (int i = 0; i < k; ++i)
                if (mask >> i & 1U) s.push_back(h.slims()[i]);
            v.attachments.push_back(std::move(s));
        }
        for (const auto& c : comps) {
            std::vector<Vertex> s;
            for (int i : c) s.push_back(h.slims()[i]);
            v.factors.push_back(std::move(s));
        }
        return true;
    };
    // Attachment sets in non-decreasing mask order; an attachment never
    // raises lambda_min, so a set that falls below -3 is dropped for good.
    auto dfs = [&](auto&& self, const SymmetricIntMatrix& m, unsigned from) -> bool {
        if (static_cast<int>(stack.size()) == v.fat_budget) return false;
        for (unsigned mask = from; mask < (1U << k); ++mask) {
            if (++nodes > node_budget) throw BudgetOut{};
            SymmetricIntMatrix next = attached(m, mask);
            if (cmp_lambda_min(next, Rational(-3)) == LambdaOrder::Less) continue;
            stack.push_back(mask);
            if (witness(next) || self(self, next, mask)) return true;
            stack.pop_back();
        }
        return false;
    };
    try {
        if (witness(sp)) return v;
        dfs(dfs, sp, 1U);
    } catch (const BudgetOut&) {
        v.kind = ReducibilityVerdict::Kind::BudgetExceeded;
    }
    return v;
}

Verdict is_seedling_bounded(const HoffmanGraph& t, const SeedlingBudgets& budgets) {
    if (!t.is_tree_like()) throw std::invalid_argument("seedling test needs a tree-like Hoffman graph");
    using Kind = ReducibilityVerdict::Kind;
    const auto self = is_reducible_bounded(t, budgets.fat_budget, budgets.node_budget);
    if (self.kind == Kind::Reducible) return Verdict::No;
    if (self.kind == Kind::BudgetExceeded) return Verdict::Inconclusive;
    if (lambda_min_cmp3(t) == LambdaOrder::Equal) return Verdict::Yes;

    bool inconclusive = false;
    std::set<std::string> tried;
    for (Vertex v = 0; v < t.order(); ++v)
        for (Label add : {Label::Slim, Label::Fat}) {
            if (add == Label::Fat && t.is_fat(v)) continue;
            std::vector<Edge> edges = t.graph().edges();
            edges.emplace_back(v, t.order());
            auto labels = t.labels();
            labels.push_back(add);
            HoffmanGraph ext(Graph(t.order() + 1, edges), labels);
            if (!tried.insert(tree_like_code(ext)).second) continue;
            if (lambda_min_cmp3(ext) == LambdaOrder::Less) continue;
            auto r = is_reducible_bounded(ext, budgets.fat_budget, budgets.node_budget);
            if (r.kind == Kind::NoWitnessWithinBudget) return Verdict::No;
            if (r.kind == Kind::BudgetExceeded) inconclusive = true;
        }
    return inconclusive ? Verdict::Inconclusive : Verdict::Yes;
}

// ---------------------------------------------------------------------------

std::optional<HoffmanGraph> decomposable_fat_supergraph(const HoffmanGraph& h) {
    const int k = h.slim_count();
    if (k == 0 || k > 8) throw std::invalid_argument("decomposable_fat_supergraph handles 1..8 slims");
    if (is_integrally_representable(h) != Verdict::Yes) return std::nullopt;
    if (!is_indecomposable(h)) return h;
    // Representability is inherited by induced subgraphs, so every prefix of
    // a successful attachment sequence is representable as well.
    auto dfs = [&](auto&& self, const HoffmanGraph& g, unsigned from) -> std::optional<HoffmanGraph> {
        const SymmetricIntMatrix sp = special_matrix(g);
        for (unsigned mask = from; mask < (1U << k); ++mask) {
            if (cmp_lambda_min(attached(sp, mask), Rational(-3)) == LambdaOrder::Less) continue;
            std::vector<Vertex> s;
            for (int i = 0; i < k; ++i)
                if (mask >> i & 1U) s.push_back(g.slims()[i]);
            HoffmanGraph next = attach_fat(g, s);
            if (is_integrally_representable(next) != Verdict::Yes) continue;
            if (!is_indecomposable(next)) return next;
            if (auto r = self(self, next, mask)) return r;
        }
        return std::nullopt;
    };
    return dfs(dfs, h, 1U);
}

std::vector<SmallTreeLike> enumerate_small_tree_like(int max_slim) {
    if (max_slim < 1 || max_slim > 4) throw std::invalid_argument("max_slim must be between 1 and 4");
    auto admissible = [](const HoffmanGraph& g) {
        for (Vertex x : g.slims())
            if (g.weight(x) > 3) return false;
        return lambda_min_cmp3(g) != LambdaOrder::Less && is_integrally_representable(g) == Verdict::Yes;
    };
    // Grow trees leaf by leaf from one slim vertex; both eigenvalue bound and
    // representability pass to induced subgraphs, so pruning is safe.
    std::map<std::string, HoffmanGraph> found;
    std::deque<HoffmanGraph> queue;
    HoffmanGraph root(Graph(1), {Label::Slim});
    found.emplace(tree_like_code(root), root);
    queue.push_back(root);
    while (!queue.empty()) {
        HoffmanGraph g = std::move(queue.front());
        queue.pop_front();
        for (Vertex v = 0; v < g.order(); ++v)
            for (Label add : {Label::Slim, Label::Fat}) {
                if (add == Label::Fat && g.is_fat(v)) continue;
                if (add == Label::Slim && g.slim_count() == max_slim) continue;
                std::vector<Edge> edges = g.graph().edges();
                edges.emplace_back(v, g.order());
                auto labels = g.labels();
                labels.push_back(add);
                HoffmanGraph next(Graph(g.order() + 1, edges), labels);
                std::string code = tree_like_code(next);
                if (found.count(code) || !admissible(next)) continue;
                found.emplace(code, next);
                queue.push_back(std::move(next));
            }
    }
    std::vector<SmallTreeLike> out;
    for (auto& [code, g] : found) out.push_back({g, !decomposable_fat_supergraph(g).has_value(), false});
    std::stable_sort(out.begin(), out.end(), [](const SmallTreeLike& a, const SmallTreeLike& b) {
        return std::pair{a.graph.slim_count(), a.graph.order()} < std::pair{b.graph.slim_count(), b.graph.order()};
    });
    for (auto& a : out) {
        if (!a.condition_ii) continue;
        a.maximal = true;
        for (const auto& b : out)
            if (&a != &b && b.condition_ii && b.graph.order() > a.graph.order() &&
                is_induced_hoffman_subgraph(a.graph, b.graph)) {
                a.maximal = false;
                break;
            }
    }
    return out;
}

bool is_lattice_minus_graph(const Graph& g) {
    const int m = g.order();
    if (m < 1) return false;
    std::vector<Graph> shapes{smith_graph(SmithKind::A, m)};
    if (m >= 4) shapes.push_back(smith_graph(SmithKind::D, m));
    if (m >= 3) shapes.push_back(smith_graph(SmithKind::ATilde, m - 1));
    if (m >= 5) shapes.push_back(smith_graph(SmithKind::DTilde, m - 1));
    return std::any_of(shapes.begin(), shapes.end(), [&](const Graph& s) { return isomorphic(s, g); });
}

}  // namespace hoffman
