#pragma once

#include "helly/geometry.hpp"
#include "helly/hypergraph.hpp"
#include "helly/limits.hpp"

#include <span>
#include <string>
#include <vector>

namespace helly {

enum class NerveKind { ConvexPoint, BoxAxisFlat, BallKFlat, Lattice, PolygonLine };

std::string to_string(NerveKind kind);
NerveKind nerve_kind_from_string(const std::string& name);

// Which q-uniform nerve to materialize. The (kind, d, k, q) combinations are
// pinned to the transversal predicate each nerve represents.
struct NerveSpec {
    NerveKind kind = NerveKind::ConvexPoint;
    int d = 1;
    int k = 0;
    int q = 2;

    static NerveSpec convex_point(int d);        // q = d+1, common point
    static NerveSpec box_axisflat(int d, int k); // q = 2, axis-parallel k-flat
    static NerveSpec ball_kflat(int d, int k);   // q = k+2, arbitrary k-flat
    static NerveSpec lattice(int d);             // q = d+1, common lattice point
    static NerveSpec polygon_line(int q);        // d = 2, common line

    void validate() const;
};

struct NerveResult {
    Hypergraph hypergraph;
    // q-subsets whose numeric predicate landed inside the tolerance band; they
    // are included as edges and flagged here.
    std::vector<std::vector<int>> inconclusive;
};

// Vertex per object, labeled by its index; a q-subset is an edge iff the
// spec's transversal predicate accepts it. Enumeration is by lexicographic
// q-subset order.
NerveResult build_nerve(std::span<const GeomObject> family, const NerveSpec& spec,
                        const Limits& limits = {});

struct PqResult {
    bool holds = false;
    SetWitness independence;
    std::vector<int> violating;  // an independent p-set when the condition fails
};

// (p,q)-condition: independence_number(H) < p.
PqResult pq_condition(const Hypergraph& h, int p, const Limits& limits = {});

struct GrowthRow {
    int prefix_size = 0;
    int independence = 0;
};

// Independence number of the nerve on growing prefixes of the family.
std::vector<GrowthRow> truncation_growth_report(std::span<const GeomObject> family,
                                                const NerveSpec& spec,
                                                std::span<const int> prefixes,
                                                const Limits& limits = {});

}  // namespace helly
