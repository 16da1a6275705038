#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hoffman/hoffman_graph.hpp"

namespace hoffman {

using IntVector = std::vector<int>;

/// psi on slim vertices; vectors[i] belongs to h.slims()[i].
struct ReducedRep {
    int dim = 0;
    std::vector<IntVector> vectors;
    friend bool operator==(const ReducedRep&, const ReducedRep&) = default;
};

/// phi on all vertices; vectors[v] belongs to vertex v.
struct FullRep {
    int dim = 0;
    std::vector<IntVector> vectors;
    friend bool operator==(const FullRep&, const FullRep&) = default;
};

/// Throws std::invalid_argument on an index or length mismatch.
bool verify_reduced(const HoffmanGraph& h, const ReducedRep& psi, int t = 3);
bool verify_full(const HoffmanGraph& h, const FullRep& phi, int t = 3);

/// Gram matrix of a list of vectors.
SymmetricIntMatrix gram_matrix(const std::vector<IntVector>& vectors);

/// Appends one coordinate per fat vertex (in fats() order) after the psi
/// coordinates. Slim x gets psi(x) plus the unit vectors of its fats.
FullRep full_from_reduced(const HoffmanGraph& h, const ReducedRep& psi);

/// Inverse of full_from_reduced. phi must map fats to distinct standard unit
/// vectors and every slim x to a vector whose fat coordinates are 1 exactly on
/// its fat neighbours; otherwise std::invalid_argument.
ReducedRep reduced_from_full(const HoffmanGraph& h, const FullRep& phi);

enum class SolveStatus { Found, NotRepresentable, BudgetExceeded };
std::string to_string(SolveStatus s);

struct SolveOptions {
    int t = 3;
    int dim_cap = -1;                       ///< -1: 3 * slim count
    std::int64_t node_budget = 10'000'000;  ///< search nodes over all components
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::NotRepresentable;
    ReducedRep rep;  ///< set when Found
    std::int64_t nodes = 0;
};

/// Exhaustive search for an integral reduced representation with entries in
/// {0, +-1} (t <= 3). Components of the special graph are solved separately
/// on disjoint coordinates. Slims are placed in breadth-first order from a
/// maximum-weight slim; each new vector reuses some active coordinates and
/// opens fresh ones with entry +1. Identical active columns are kept in
/// non-increasing order (+1 > -1 > 0). An exact eigenvalue test below -t
/// answers NotRepresentable without search.
SolveOutcome solve_reduced_integral(const HoffmanGraph& h, const SolveOptions& opts = {});

enum class Verdict { Yes, No, Inconclusive };
std::string to_string(Verdict v);

/// Yes iff the solver finds psi; Inconclusive when the budget runs out.
Verdict is_integrally_representable(const HoffmanGraph& h, const SolveOptions& opts = {});

struct LatticeInvariants {
    int rank = 0;
    std::string gram_det;  ///< decimal; "1" for the zero lattice
    friend bool operator==(const LatticeInvariants&, const LatticeInvariants&) = default;
};

/// Rank of the lattice spanned by the vectors and the Gram determinant of a
/// basis, via Hermite reduction of the generator rows.
LatticeInvariants lattice_invariants(const std::vector<IntVector>& generators);
inline LatticeInvariants lattice_invariants(const ReducedRep& r) { return lattice_invariants(r.vectors); }
inline LatticeInvariants lattice_invariants(const FullRep& r) { return lattice_invariants(r.vectors); }

struct ExtendCheck {
    bool pairing = true;   ///< every used coordinate has a +1 and a -1 entry
    bool distance = true;  ///< opposite-sign pairs are at distance <= 2 in S^-
    std::string message;
};
/// Coordinate pairing structure of integral representations of fat,
/// (-3)-saturated Hoffman graphs.
ExtendCheck check_extend_structure(const HoffmanGraph& h, const ReducedRep& psi);

/// psi' = psi with coordinates permuted and signs flipped, as a canonical form
/// under those operations (lexicographically largest sorted column set).
/// Two representations are equivalent iff their canonical forms agree.
ReducedRep canonical_rep(const ReducedRep& psi);

/// All reduced representations up to coordinate permutation and sign change.
/// Stops after `limit` classes. Budget overruns throw std::runtime_error.
std::vector<ReducedRep> enumerate_reduced_reps(const HoffmanGraph& h, int limit = 16,
                                               std::int64_t node_budget = 10'000'000);

}  // namespace hoffman
