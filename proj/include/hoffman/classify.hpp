#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hoffman/catalog.hpp"
#include "hoffman/hoffman_graph.hpp"
#include "hoffman/representation.hpp"

namespace hoffman {

/// Worker count from HOFFMAN_WORKERS (default: hardware threads, at least 1).
int worker_count();

/// Runs fn(0..n-1) on worker_count() threads. Results are written by index,
/// so output order never depends on scheduling.
void parallel_for(int n, const std::function<void(int)>& fn);

// --- Tree census ---------------------------------------------------------

struct TreeCensusEntry {
    std::string code;
    Graph tree;
    int n = 0;
    LambdaOrder lambda_vs_minus3 = LambdaOrder::Greater;
    Verdict representable = Verdict::Inconclusive;
    std::optional<ReducedRep> witness;
};

/// Every unlabeled tree on 1..n_max vertices, in enumeration order.
std::vector<TreeCensusEntry> brute_force_ir_trees(int n_max, const SolveOptions& opts = {});

// --- Construction from the family ---------------------------------------

/// Slim trees of stripped sums of family members in which every fat vertex is
/// shared by exactly two parts, with at most n_max vertices. Parts are added
/// one at a time, each glued at one fat of the current assembly, and states
/// are deduplicated by canonical code. Sorted codes.
std::vector<std::string> construct_ir_trees_from_F(int n_max);

/// Same, returning one representative tree per code (sorted by code).
std::vector<Graph> construct_ir_tree_graphs(int n_max);

/// Glues a fat star on 3 slims at every leftover leaf fat of the stripped
/// sum (a non-leaf leftover fat first receives an h^(3)). The result is an
/// all-slim tree with lambda_min = -3 containing the slim graph of the sum.
/// Throws std::invalid_argument if the stripped sum is not tree-like, its
/// slim graph is not isomorphic to t, or a part has lambda_min != -3.
Graph complete_to_radius3(const Graph& t, const std::vector<HoffmanGraph>& parts,
                          const std::vector<SharedFat>& shared);

struct MainTheoremReport {
    int n_max = 0;
    int slack = 0;
    std::size_t census_trees = 0;
    std::size_t census_radius3 = 0;  ///< representable with lambda_min = -3
    std::size_t constructed = 0;
    std::vector<std::string> only_in_census;
    std::vector<std::string> only_constructed;
    std::size_t smaller_trees = 0;  ///< representable with lambda_min > -3
    std::vector<std::string> not_embedded;
    int largest_host = 0;  ///< vertices of the largest host actually needed
    /// trees whose smallest host has more than n_max + slack vertices
    std::size_t beyond_short_slack = 0;
    std::vector<std::string> inconclusive;
    bool equality() const { return only_in_census.empty() && only_constructed.empty(); }
    bool ok() const { return equality() && not_embedded.empty() && inconclusive.empty(); }
};

/// Compares the census with the construction and embeds every smaller
/// representable tree into a constructed tree. Hosts may have n_max + slack
/// vertices more than n_max, i.e. at most 2 n_max + slack vertices.
MainTheoremReport verify_main_theorem(int n_max, int slack = 6, const SolveOptions& opts = {});

// --- Seedlings ---------------------------------------------------------------

/// One fat 3-seedling per orbit of minus-matchings of the extended E graph.
std::vector<HoffmanGraph> enumerate_fat_3_seedlings(ExtendedE base);

struct ReducibilityVerdict {
    enum class Kind { Reducible, NoWitnessWithinBudget, BudgetExceeded } kind = Kind::NoWitnessWithinBudget;
    std::vector<std::vector<Vertex>> attachments;  ///< slim sets of the added fats
    std::vector<std::vector<Vertex>> factors;      ///< slim vertices of each factor
    int fat_budget = 0;
};

/// Searches fat attachments (at most fat_budget fats, each on a non-empty slim
/// set) keeping lambda_min >= -3 for one that makes the graph decomposable.
/// fat_budget < 0 means the slim count. Throws std::invalid_argument if
/// lambda_min(h) < -3.
ReducibilityVerdict is_reducible_bounded(const HoffmanGraph& h, int fat_budget = -1,
                                         std::int64_t node_budget = 2'000'000);

struct SeedlingBudgets {
    int fat_budget = -1;
    std::int64_t node_budget = 2'000'000;
};

/// Yes when bounded-irreducible with lambda_min = -3. Otherwise No if h is
/// reducible or some one-vertex tree-like extension (slim leaf or fat leaf)
/// with lambda_min >= -3 is bounded-irreducible, Yes if none is, and
/// Inconclusive when a search runs out of nodes.
Verdict is_seedling_bounded(const HoffmanGraph& t, const SeedlingBudgets& budgets = {});

struct SmallTreeLike {
    HoffmanGraph graph;
    bool condition_ii = false;  ///< no representable decomposable fat supergraph
    bool maximal = false;       ///< condition_ii and not inside another such member
};

/// Tree-like, integrally representable Hoffman graphs with 1..max_slim slims
/// (each slim has at most 3 fats), up to isomorphism. max_slim must be 1..4.
std::vector<SmallTreeLike> enumerate_small_tree_like(int max_slim);

/// A representable decomposable graph obtained from h by attaching fats, if any.
std::optional<HoffmanGraph> decomposable_fat_supergraph(const HoffmanGraph& h);

/// Is g isomorphic to A_m, D_m, the m-cycle or D̃_{m-1} (m = order)?
bool is_lattice_minus_graph(const Graph& g);

}  // namespace hoffman
