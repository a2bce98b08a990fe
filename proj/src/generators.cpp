#include "helly/generators.hpp"

#include "helly/errors.hpp"

#include <algorithm>

namespace helly {

Rng derive_rng(std::uint64_t seed, std::uint64_t stream) {
    Rng mixer(seed ^ (0x94d049bb133111ebULL * (stream + 1)));
    return Rng(mixer.next());
}

std::vector<Box> gen_disjoint_intervals(int n, Rng& rng) {
    if (n < 1) throw PreconditionError("gen_disjoint_intervals requires n >= 1");
    std::vector<Box> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        Rat lo = Rat(3 * i) + Rat(rng.range(0, 4), 8);
        Rat hi = Rat(3 * i + 2) + Rat(rng.range(0, 4), 8);
        out.push_back(Box{{lo}, {hi}});
    }
    return out;
}

std::vector<Box> gen_nested_boxes(int n, int d, Rng& rng) {
    if (n < 1 || d < 1) throw PreconditionError("gen_nested_boxes requires n, d >= 1");
    std::vector<Box> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        // outermost first; jitter stays below the 2-unit shrink per level
        Box b;
        for (int j = 0; j < d; ++j) {
            Rat slack = Rat(rng.range(0, 4), 8);
            b.lo.push_back(Rat(-2 * (n - i)) + slack);
            b.hi.push_back(Rat(2 * (n - i)) - Rat(rng.range(0, 4), 8));
        }
        out.push_back(std::move(b));
    }
    return out;
}

Counterexample1d gen_counterexample_1d(int n_outer, int n_inner) {
    if (n_outer < 1 || n_inner < 1)
        throw PreconditionError("gen_counterexample_1d requires positive family sizes");
    Counterexample1d out;
    std::vector<int> outer_family;
    for (int i = 0; i < n_outer; ++i) {
        Rat lo = Rat(10 * i);
        Rat hi = Rat(10 * i + 9);
        outer_family.push_back(static_cast<int>(out.objects.size()));
        out.objects.emplace_back(Box{{lo}, {hi}});
    }
    out.families.push_back(outer_family);
    for (int i = 0; i < n_outer; ++i) {
        std::vector<int> family;
        Rat width = Rat(9, n_inner);
        for (int j = 0; j < n_inner; ++j) {
            Rat base = Rat(10 * i) + width * j;
            family.push_back(static_cast<int>(out.objects.size()));
            out.objects.emplace_back(Box{{base + width / 8}, {base + width * 7 / 8}});
        }
        out.families.push_back(std::move(family));
    }
    return out;
}

std::vector<Box> gen_random_boxes(int n, int d, Rng& rng, long long center_max,
                                  long long halfwidth_min, long long halfwidth_max) {
    if (n < 1 || d < 1) throw PreconditionError("gen_random_boxes requires n, d >= 1");
    std::vector<Box> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        Box b;
        for (int j = 0; j < d; ++j) {
            Rat center = rng.rational(0, center_max, 4);
            Rat half = rng.rational(halfwidth_min, halfwidth_max, 4);
            b.lo.push_back(center - half);
            b.hi.push_back(center + half);
        }
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<VPolytope> gen_random_polytopes(int n, int d, int points_per, Rng& rng,
                                            long long coord_max) {
    if (n < 1 || d < 1 || points_per < 1)
        throw PreconditionError("gen_random_polytopes requires positive parameters");
    std::vector<VPolytope> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        VPolytope p;
        for (int v = 0; v < points_per; ++v) {
            Point pt;
            for (int j = 0; j < d; ++j) pt.push_back(rng.rational(0, coord_max, 4));
            p.points.push_back(std::move(pt));
        }
        out.push_back(std::move(p));
    }
    return out;
}

Hypergraph gen_matching_complement(int m) {
    if (m < 1) throw PreconditionError("gen_matching_complement requires m >= 1");
    int n = 2 * m;
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(j == i + 1 && i % 2 == 0)) edges.push_back({i, j});
    return Hypergraph::from_indices(2, n, std::move(edges));
}

std::vector<Box> claim17_family(int s, int t, int d, Rng& rng) {
    if (s < 2 || t < 2 || d < 1) throw PreconditionError("claim17_family requires s, t >= 2");
    const long long gap = 8;
    const long long span = gap * (t + 2);  // wide axes cover every slot
    std::vector<Box> out;
    out.reserve(static_cast<std::size_t>(s) * t);
    int separated = std::min(s, d);
    for (int f = 0; f < s; ++f) {
        for (int m = 0; m < t; ++m) {
            Box b;
            for (int j = 0; j < d; ++j) {
                if (f < separated && j == f) {
                    // family f owns axis f: disjoint slots along it
                    Rat lo = Rat(gap * m) + Rat(rng.range(0, 15), 16);
                    Rat hi = Rat(gap * m + gap / 2 + 1) + Rat(rng.range(0, 15), 16);
                    b.lo.push_back(lo);
                    b.hi.push_back(hi);
                } else if (f < separated) {
                    b.lo.push_back(Rat(-span) - Rat(rng.range(0, 15), 16));
                    b.hi.push_back(Rat(span) + Rat(rng.range(0, 15), 16));
                } else {
                    // spanning family: covers all slots on every axis
                    b.lo.push_back(Rat(-span + 1) + Rat(rng.range(0, 15), 16));
                    b.hi.push_back(Rat(span - 2) + Rat(rng.range(0, 15), 16));
                }
            }
            out.push_back(std::move(b));
        }
    }
    return out;
}

std::vector<Box> gen_lattice_hub_boxes(int n, int d, Rng& rng) {
    if (n < 1 || d < 1) throw PreconditionError("gen_lattice_hub_boxes requires n, d >= 1");
    std::vector<long long> hub(d);
    for (int j = 0; j < d; ++j) hub[j] = rng.range(0, 6);
    std::vector<Box> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        Box b;
        for (int j = 0; j < d; ++j) {
            b.lo.push_back(Rat(hub[j]) - rng.rational(0, 4, 4));
            b.hi.push_back(Rat(hub[j]) + rng.rational(0, 4, 4));
        }
        out.push_back(std::move(b));
    }
    return out;
}

VPolytope box_to_polytope(const Box& b) {
    validate(b);
    int d = b.dim();
    if (d > 10) throw PreconditionError("box_to_polytope supports small dimensions only");
    VPolytope p;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        Point pt(d);
        for (int j = 0; j < d; ++j) pt[j] = (mask >> j & 1) ? b.hi[j] : b.lo[j];
        p.points.push_back(std::move(pt));
    }
    return p;
}

}  // namespace helly
