#pragma once

#include "helly/geometry.hpp"
#include "helly/hypergraph.hpp"

#include <cstdint>
#include <vector>

namespace helly {

// splitmix64; fixed algorithm so every seeded run replays bit-identically on
// any platform (std:: distributions are not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static constexpr const char* kAlgorithm = "splitmix64";

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish in [0, bound); modulo bias is irrelevant for instance
    // generation and keeps the stream portable.
    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Rational in [lo, hi] with the given denominator.
    Rat rational(long long lo, long long hi, long long denom) {
        return Rat(range(lo * denom, hi * denom), denom);
    }

private:
    std::uint64_t state_;
};

// Independent per-trial stream derived from (seed, stream index).
Rng derive_rng(std::uint64_t seed, std::uint64_t stream);

// d = 1 boxes with gaps; piercing number equals the count.
std::vector<Box> gen_disjoint_intervals(int n, Rng& rng);

// Strictly nested boxes, outermost first.
std::vector<Box> gen_nested_boxes(int n, int d, Rng& rng);

struct Counterexample1d {
    std::vector<GeomObject> objects;       // outer intervals first, then inner families
    std::vector<std::vector<int>> families;  // families[0] = outer family
};

// The d = 1 colorful counterexample: disjoint outer intervals, each hosting a
// family of disjoint inner intervals.
Counterexample1d gen_counterexample_1d(int n_outer, int n_inner);

std::vector<Box> gen_random_boxes(int n, int d, Rng& rng, long long center_max = 16,
                                  long long halfwidth_min = 2, long long halfwidth_max = 12);

std::vector<VPolytope> gen_random_polytopes(int n, int d, int points_per, Rng& rng,
                                            long long coord_max = 12);

// Complement of a perfect matching on 2m vertices (q = 2).
Hypergraph gen_matching_complement(int m);

// s families of t boxes, all cross-family pairs intersecting: one separated
// slab family per axis, spanning families beyond.
std::vector<Box> claim17_family(int s, int t, int d, Rng& rng);

// Boxes that all contain one common lattice point (so every subfamily shares
// it), with random extents around it.
std::vector<Box> gen_lattice_hub_boxes(int n, int d, Rng& rng);

// Corners of a box as a polytope (d small).
VPolytope box_to_polytope(const Box& b);

}  // namespace helly
