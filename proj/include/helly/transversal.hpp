#pragma once

#include "helly/geometry.hpp"
#include "helly/hypergraph.hpp"
#include "helly/limits.hpp"
#include "helly/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace helly {

// Non-uniform edge system; the dual side of a cover instance lives here
// (vertices are candidate transversals, one edge per covered object).
struct EdgeSystem {
    std::vector<std::string> vertex_labels;
    std::vector<std::vector<int>> edges;  // each sorted ascending
    int num_vertices() const { return static_cast<int>(vertex_labels.size()); }
};

// Things to be hit, candidate transversal objects, and their incidence.
// Construction rejects instances with an unhittable target.
struct CoverInstance {
    std::vector<std::string> targets;
    std::vector<std::string> candidates;
    std::vector<std::vector<bool>> hits;  // hits[candidate][target]

    static CoverInstance make(std::vector<std::string> targets,
                              std::vector<std::string> candidates,
                              std::vector<std::vector<bool>> hits);

    int num_targets() const { return static_cast<int>(targets.size()); }
    int num_candidates() const { return static_cast<int>(candidates.size()); }
};

struct PiercingCertificate {
    int value = 0;
    std::vector<int> chosen;  // candidate indices, sorted
};

bool verify_certificate(const CoverInstance& inst, const PiercingCertificate& cert);

// --- candidate canonicalization ---------------------------------------------

// The grid {(v_1..v_d) : v_j in {lo_i[j]}}. Any piercing point slides down
// per coordinate onto this grid without losing the boxes it pierces.
std::vector<Point> candidate_points_boxes(std::span<const Box> boxes,
                                          const Limits& limits = {});

// Per (d-k)-coordinate subset, all flats with fixed values drawn from the
// boxes' lo thresholds; same slide-down completeness per fixed coordinate.
std::vector<AxisFlat> candidate_axisflats(std::span<const Box> boxes, int k,
                                          const Limits& limits = {});

// Deduplicated integer points of the targets' bounding boxes.
std::vector<std::vector<BigInt>> candidate_lattice_points(std::span<const GeomObject> objects,
                                                          const Limits& limits = {});

CoverInstance cover_boxes_by_points(std::span<const Box> boxes, const Limits& limits = {});
CoverInstance cover_boxes_by_axisflats(std::span<const Box> boxes, int k,
                                       const Limits& limits = {});
CoverInstance cover_objects_by_lattice_points(std::span<const GeomObject> objects,
                                              const Limits& limits = {});
CoverInstance cover_polygons_by_lines(std::span<const VPolytope> polys,
                                      const Limits& limits = {});

// --- exact optimization ------------------------------------------------------

// Exact minimum hitting set (tau) by branch and bound with an LP root bound.
PiercingCertificate min_hitting_set(const CoverInstance& inst, const Limits& limits = {});

struct FractionalTransversal {
    Rat value;                 // tau* = nu*
    std::vector<Rat> primal;   // per candidate, covers every target
    std::vector<Rat> dual;     // per target, packs every candidate
};

// Exact rational LP; primal and dual optima are recomputed and compared, not
// assumed equal.
FractionalTransversal fractional_transversal(const CoverInstance& inst,
                                             const Limits& limits = {});

// Maximum number of pairwise-disjoint edges.
SetWitness matching_number(const EdgeSystem& sys, const Limits& limits = {});
SetWitness matching_number(const CoverInstance& inst, const Limits& limits = {});
SetWitness matching_number(const Hypergraph& h, const Limits& limits = {});

struct LambdaWitness {
    int value = 0;
    std::vector<int> edges;  // edge indices, sorted
};

// Maximum s with edges E_1..E_s such that every pair keeps a common vertex
// outside all other chosen edges.
LambdaWitness lambda_dsw(const EdgeSystem& sys, const Limits& limits = {});

// Vertices = candidate axis-parallel k-flats, one edge per box (the flats
// stabbing it).
EdgeSystem dual_box_flat_hypergraph(std::span<const Box> boxes, int k,
                                    const Limits& limits = {});

EdgeSystem dual_system(const CoverInstance& inst);

}  // namespace helly
