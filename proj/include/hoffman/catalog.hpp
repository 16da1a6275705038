#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hoffman/hoffman_graph.hpp"
#include "hoffman/representation.hpp"

namespace hoffman {

/// Every vertex slim.
HoffmanGraph all_slim(const Graph& g);

/// One slim vertex (id 0) with t fat neighbours (ids 1..t).
HoffmanGraph make_h_t(int t);

/// k pairwise non-adjacent slims (ids 0..k-1) sharing one fat vertex (id k).
HoffmanGraph make_fat_star(int k);

/// c_m: slims y_1..y_m are ids 0..m-1 with y_i ~ y_{i+2}; fats f_1 (id m),
/// f_{1,2} (id m+1) and f_m (id m+2) with f_1 ~ y_1, f_{1,2} ~ y_1, y_2 and
/// f_m ~ y_m.
HoffmanGraph make_c(int m);

/// Explicit integral reduced representation of c_m in dimension m-1.
ReducedRep make_psi_c(int m);

/// The third small member: slims 0, 1, 2 and fats 3, 4 with 3 ~ 0, 1 and
/// 4 ~ 0, 2. No slim edges; Sp = [[-2,-1,-1],[-1,-1,0],[-1,0,-1]].
HoffmanGraph make_third_member();

enum class ExtendedE { E6, E7, E8 };
Graph extended_e(ExtendedE base);
/// Throws std::invalid_argument for an unknown name ("e6", "e7", "e8").
ExtendedE parse_extended_e(const std::string& name);

/// Slims are the base vertices. Every base vertex outside the matching gets a
/// private fat leaf; the endpoints of each matching edge lose their edge and
/// share one fat instead. Fat ids follow the smallest incident base vertex.
/// Throws std::invalid_argument if `minus_matching` is not a matching of base.
HoffmanGraph make_esimilar_seedling(const Graph& base, const std::vector<Edge>& minus_matching);

struct FamilyFMember {
    HoffmanGraph graph;
    std::string tag;  ///< "F-prime-1", "F-prime-2", "F-prime-3" or "C(m)"
    std::optional<ReducedRep> psi;
};

/// The three small members followed by c_2 .. c_{max_m}.
std::vector<FamilyFMember> family_F(int max_m);

/// Catalog lookup by name: "h3", "h<t>", "fatstar<k>", "c<m>", "x", "e6", ...
/// The E names give the all-(+) seedling. Throws std::invalid_argument.
FamilyFMember catalog_member(const std::string& name);

}  // namespace hoffman
