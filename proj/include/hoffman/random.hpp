#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hoffman/hoffman_graph.hpp"

namespace hoffman {

using Rng = std::mt19937_64;

/// Uniform labelled tree on n vertices (Pruefer code).
Graph random_tree(int n, Rng& rng);

/// Random tree whose fat vertices form an independent set, with 1..max_slims
/// slims. At most max_slims + 6 vertices.
HoffmanGraph random_tree_like(int max_slims, Rng& rng);

struct RandomStrippedSum {
    std::vector<HoffmanGraph> parts;
    std::vector<SharedFat> shared;
    std::vector<int> part_lambda;  ///< lambda_min of each part (an integer)
    HoffmanGraph sum;
};

/// 1..max_parts catalog members (h^(t), fat stars up to 3 slims, the third
/// member, c_2..c_6) glued along a random tree of single shared fats, redrawn
/// until the stripping is tree-like.
RandomStrippedSum random_stripped_sum(int max_parts, Rng& rng);

struct PropertyReport {
    int sandwich_cases = 0;
    int signing_cases = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Eigenvalue sandwich on random stripped sums, and simple lambda_min plus a
/// nonpositive signing on random tree-like graphs with lambda_min >= -3.
PropertyReport run_property_suite(std::uint64_t seed, int cases = 200);

}  // namespace hoffman
