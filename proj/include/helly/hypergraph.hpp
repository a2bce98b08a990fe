#pragma once

#include "helly/limits.hpp"
#include "helly/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace helly {

// Finite q-uniform hypergraph. Vertex identifiers are opaque labels mapped to
// dense indices at construction; edges are kept canonical: each edge a sorted
// index tuple, the edge list sorted lexicographically, duplicates removed.
// Instances are immutable after construction.
class Hypergraph {
public:
    Hypergraph(int q, std::vector<std::string> vertex_labels,
               const std::vector<std::vector<std::string>>& edges);

    static Hypergraph from_indices(int q, std::vector<std::string> vertex_labels,
                                   std::vector<std::vector<int>> edges);
    // Vertices labeled "0".."n-1".
    static Hypergraph from_indices(int q, int num_vertices, std::vector<std::vector<int>> edges);

    int q() const { return q_; }
    int num_vertices() const { return static_cast<int>(labels_.size()); }
    long long num_edges() const { return static_cast<long long>(edges_.size()); }
    const std::vector<std::string>& vertex_labels() const { return labels_; }
    const std::vector<std::vector<int>>& edges() const { return edges_; }

    int index_of(const std::string& label) const;  // SchemaError on unknown label

    // `edge` must be sorted ascending.
    bool has_edge(std::span<const int> edge) const;

    // True iff some edge lies entirely inside `sorted_vertices`.
    bool spans_edge(const std::vector<int>& sorted_vertices) const;

    // All q-subsets of V that are not edges. Guarded by C(n, q) <= limit.
    Hypergraph complement(long long subset_limit = Limits{}.enumeration) const;

    std::vector<std::string> labels_of(const std::vector<int>& indices) const;

private:
    Hypergraph() = default;
    void finalize();

    int q_ = 2;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> edges_;
    // Bitmask lookup, populated when n <= 64.
    std::unordered_set<std::uint64_t> edge_masks_;
    bool use_masks_ = false;
};

struct SetWitness {
    int value = 0;
    std::vector<int> witness;  // vertex indices, sorted
};

// Subhypergraph spanned by S: edges of `h` contained entirely in S. Vertex
// order of the result follows the host's order.
Hypergraph induced_sub(const Hypergraph& h, const std::vector<int>& s);
Hypergraph induced_sub(const Hypergraph& h, const std::vector<std::string>& s);

// Maximum S with no edge inside S, plus one maximizing S. Exact branch-and-bound.
SetWitness independence_number(const Hypergraph& h, const Limits& limits = {});

// Maximum S with every q-subset of S an edge, plus one maximizing S.
SetWitness clique_number(const Hypergraph& h, const Limits& limits = {});

// e(H) / C(|V|, q) as an exact rational. Requires |V| >= q.
Rat edge_density(const Hypergraph& h);

// s parts of t vertices each: parts independent, every q-tuple with vertices in
// pairwise distinct parts an edge, mixed edges unconstrained.
struct MPatternWitness {
    int s = 0;
    int t = 0;
    std::vector<std::vector<int>> parts;  // each sorted; parts ordered by minimum
};

std::optional<MPatternWitness> find_m_pattern(const Hypergraph& h, int s, int t,
                                              const Limits& limits = {});

// Semantics for the colorful condition. Subsequence: one vertex from each of p
// families chosen with strictly increasing indices. OnePerFamilyPrefix: exactly
// one vertex from each of the first p families.
enum class HeteroMode { Subsequence, OnePerFamilyPrefix };

struct HeteroResult {
    bool ok = true;
    std::vector<int> violating_vertices;  // empty when ok
    std::vector<int> violating_families;
};

HeteroResult heterochromatic_check(const Hypergraph& h,
                                   const std::vector<std::vector<int>>& families, int p,
                                   HeteroMode mode = HeteroMode::Subsequence,
                                   const Limits& limits = {});

}  // namespace helly
