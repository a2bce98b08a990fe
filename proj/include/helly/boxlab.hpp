#pragma once

#include "helly/geometry.hpp"
#include "helly/hypergraph.hpp"
#include "helly/limits.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace helly {

// 2d total orders on box indices: per coordinate, one by the lo threshold and
// one by the hi threshold; ties broken by box index.
struct BoxOrderings {
    int d = 0;
    // orders[2*j] sorts by lo[j], orders[2*j+1] by hi[j].
    std::vector<std::vector<int>> orders;
};

BoxOrderings box_orderings(std::span<const Box> boxes);

// Pairwise-intersection graph of the boxes (q = 2 nerve for k = 0).
Hypergraph pairwise_intersection_graph(std::span<const Box> boxes);

struct BoxClique {
    int value = 0;
    Point witness;             // a point of maximum containment depth
    std::vector<int> members;  // the boxes through the witness
};

// Maximum number of boxes sharing a point, via the canonical lo-grid; equal to
// the clique number of the intersection graph because boxes obey Helly per
// coordinate.
BoxClique box_clique_number(std::span<const Box> boxes, const Limits& limits = {});

struct FracHellyReport {
    int n = 0;
    Rat alpha;         // pairwise intersection density
    int clique = 0;    // omega
    bool applicable = false;  // alpha > 1 - 1/d^2
    bool bound_holds = false; // omega/n >= 1 - d*sqrt(1-alpha), exact squared test
};

FracHellyReport frac_helly_box_check(std::span<const Box> boxes, const Limits& limits = {});

struct Claim17Report {
    int s = 0, t = 0, d = 0;
    std::vector<Box> boxes;          // s*t boxes, family-major order
    Rat alpha;                       // measured pair density
    Rat alpha_lower;                 // (s-1)/(s - 1/t)
    bool alpha_ok = false;           // alpha >= alpha_lower, exact
    bool clique_bound_exceeds_s = false;  // d^2 (1-alpha_lower) < (1-1/t)^2
    bool same_family_pair_found = false;
    int pair_family = -1;
    std::array<int, 2> pair{-1, -1};  // indices within the family
};

// Generates s families of t boxes with every cross-family pair intersecting
// (separated slab families on each axis, spanning families beyond), then runs
// the density and same-family checks.
Claim17Report claim17_experiment(int s, int t, int d, std::uint64_t seed,
                                 const Limits& limits = {});

struct ConsistentTriple {
    int first = -1, middle = -1, last = -1;
    bool containment_verified = false;  // B_first cap B_last inside B_middle
};

// A triple sorted identically (up to reversal) by all 2d orders; the shared
// middle then contains the intersection of the two extremes.
std::optional<ConsistentTriple> consistent_triple(std::span<const Box> boxes,
                                                  const Limits& limits = {});

// matrix[i][j] true iff B_i cap B_j keeps a point outside every other box;
// decided exactly on the endpoint-grid cell decomposition.
std::vector<std::vector<bool>> private_point_matrix(std::span<const Box> boxes,
                                                    const Limits& limits = {});

struct DirectionReduction {
    std::vector<int> directions;  // the k coordinates spanned by W
    std::vector<int> subfamily;   // boxes whose pairs a translate of W stabs
    std::vector<Box> projected;   // subfamily with the W coordinates deleted
};

// Largest subfamily whose every pair is stabbable by a translate of a single
// axis-parallel k-flat direction; exhaustive over the C(d, k) direction sets.
std::optional<DirectionReduction> direction_reduction(std::span<const Box> boxes, int k,
                                                      int min_size = 1,
                                                      const Limits& limits = {});

}  // namespace helly
