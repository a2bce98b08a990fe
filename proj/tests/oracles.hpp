// Test-only reference implementations, independent of the library's search and
// solver paths: plain all-subsets enumeration and dense numeric sweeps.
#pragma once

#include "helly/geometry.hpp"
#include "helly/hypergraph.hpp"
#include "helly/transversal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <vector>

namespace oracle {

using helly::Box;
using helly::CoverInstance;
using helly::EdgeSystem;
using helly::Hypergraph;
using helly::Point;
using helly::Rat;
using helly::VPolytope;

inline std::vector<std::set<int>> edge_sets(const Hypergraph& h) {
    std::vector<std::set<int>> out;
    for (const auto& e : h.edges()) out.emplace_back(e.begin(), e.end());
    return out;
}

// Largest S spanning no edge, by scanning all 2^n subsets.
inline int naive_independence(const Hypergraph& h) {
    auto edges = edge_sets(h);
    int n = h.num_vertices();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size <= best) continue;
        bool ok = true;
        for (const auto& e : edges) {
            bool inside = true;
            for (int v : e)
                if (!(mask >> v & 1)) {
                    inside = false;
                    break;
                }
            if (inside) {
                ok = false;
                break;
            }
        }
        if (ok) best = size;
    }
    return best;
}

// Largest S whose every q-subset is an edge.
inline int naive_clique(const Hypergraph& h) {
    auto edges = edge_sets(h);
    auto is_edge = [&](const std::set<int>& s) {
        return std::find(edges.begin(), edges.end(), s) != edges.end();
    };
    int n = h.num_vertices();
    int q = h.q();
    int best = std::min(n, q - 1);  // any q-1 vertices form a clique vacuously
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size <= best || size < q) continue;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) verts.push_back(v);
        // every q-subset must be an edge
        std::vector<int> comb(q);
        for (int i = 0; i < q; ++i) comb[i] = i;
        bool ok = true;
        while (ok) {
            std::set<int> sub;
            for (int i = 0; i < q; ++i) sub.insert(verts[comb[i]]);
            if (!is_edge(sub)) ok = false;
            int i = q - 1;
            while (i >= 0 && comb[i] == size - q + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < q; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (ok) best = size;
    }
    return best;
}

// Minimum cover size by subsets of increasing cardinality.
inline int naive_hitting(const CoverInstance& inst) {
    int nc = inst.num_candidates();
    int nt = inst.num_targets();
    int best = nc + 1;
    for (std::uint32_t mask = 0; mask < (1u << nc); ++mask) {
        int size = std::popcount(mask);
        if (size >= best) continue;
        bool covers = true;
        for (int t = 0; t < nt && covers; ++t) {
            bool hit = false;
            for (int c = 0; c < nc && !hit; ++c)
                if ((mask >> c & 1) && inst.hits[c][t]) hit = true;
            covers = hit;
        }
        if (covers) best = size;
    }
    return best;
}

inline int naive_matching(const EdgeSystem& sys) {
    int m = static_cast<int>(sys.edges.size());
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        int size = std::popcount(mask);
        if (size <= best) continue;
        std::vector<char> used(sys.num_vertices(), 0);
        bool ok = true;
        for (int e = 0; e < m && ok; ++e) {
            if (!(mask >> e & 1)) continue;
            for (int v : sys.edges[e]) {
                if (used[v]) {
                    ok = false;
                    break;
                }
                used[v] = 1;
            }
        }
        if (ok) best = size;
    }
    return best;
}

// Largest edge subset where every pair keeps a common vertex outside the rest.
inline int naive_lambda(const EdgeSystem& sys) {
    int m = static_cast<int>(sys.edges.size());
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        int size = std::popcount(mask);
        if (size <= best) continue;
        std::vector<int> chosen;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) chosen.push_back(e);
        bool ok = true;
        for (std::size_t a = 0; a < chosen.size() && ok; ++a) {
            for (std::size_t b = a + 1; b < chosen.size() && ok; ++b) {
                bool has_private = false;
                for (int v : sys.edges[chosen[a]]) {
                    bool in_b = std::find(sys.edges[chosen[b]].begin(),
                                          sys.edges[chosen[b]].end(),
                                          v) != sys.edges[chosen[b]].end();
                    if (!in_b) continue;
                    bool outside = true;
                    for (std::size_t c = 0; c < chosen.size() && outside; ++c) {
                        if (c == a || c == b) continue;
                        outside = std::find(sys.edges[chosen[c]].begin(),
                                            sys.edges[chosen[c]].end(),
                                            v) == sys.edges[chosen[c]].end();
                    }
                    if (outside) {
                        has_private = true;
                        break;
                    }
                }
                ok = has_private;
            }
        }
        if (ok) best = size;
    }
    return best;
}

// Exact membership in a convex polygon via orientation signs; an LP-free route.
inline bool point_in_convex_polygon(const Point& p, const VPolytope& poly) {
    // gift-wrap the hull first so the vertex order does not matter
    std::vector<Point> pts = poly.points;
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto cross = [](const Point& o, const Point& a, const Point& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    if (pts.size() == 1) return p == pts[0];
    std::vector<Point> hull;
    for (int pass = 0; pass < 2; ++pass) {
        std::size_t start = hull.size();
        for (const auto& pt : pts) {
            while (hull.size() >= start + 2 &&
                   cross(hull[hull.size() - 2], hull[hull.size() - 1], pt) <= 0)
                hull.pop_back();
            hull.push_back(pt);
        }
        hull.pop_back();
        std::reverse(pts.begin(), pts.end());
    }
    if (hull.size() == 2) {  // segment: p collinear and inside the bounding box
        if (cross(hull[0], hull[1], p) != 0) return false;
        for (int j = 0; j < 2; ++j) {
            Rat lo = std::min(hull[0][j], hull[1][j]);
            Rat hi = std::max(hull[0][j], hull[1][j]);
            if (p[j] < lo || p[j] > hi) return false;
        }
        return true;
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point& a = hull[i];
        const Point& b = hull[(i + 1) % hull.size()];
        if (cross(a, b, p) < 0) return false;  // hull is counterclockwise
    }
    return true;
}

// Minimum over sampled directions of the transversal gap; <= 0 means some line
// meets every polygon at that angle.
inline double sweep_line_gap(std::span<const VPolytope> polys, int samples = 4000) {
    double best = std::numeric_limits<double>::infinity();
    const double pi = std::acos(-1.0);
    for (int i = 0; i < samples; ++i) {
        double theta = pi * i / samples;
        double nx = std::cos(theta), ny = std::sin(theta);
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        for (const auto& poly : polys) {
            double pmin = std::numeric_limits<double>::infinity();
            double pmax = -std::numeric_limits<double>::infinity();
            for (const auto& v : poly.points) {
                double proj = nx * helly::to_double(v[0]) + ny * helly::to_double(v[1]);
                pmin = std::min(pmin, proj);
                pmax = std::max(pmax, proj);
            }
            lo = std::max(lo, pmin);
            hi = std::min(hi, pmax);
        }
        best = std::min(best, lo - hi);
    }
    return best;
}

// Scans every multiple of 1/denom inside B_i cap B_j for a point outside all
// other boxes. Exact when all box endpoints are multiples of 2/denom: every
// arrangement cell then contains a sample.
inline bool dense_private_point(std::span<const Box> boxes, int i, int j,
                                long long denom = 16) {
    const Box& a = boxes[i];
    const Box& b = boxes[j];
    int d = a.dim();
    std::vector<helly::BigInt> lo(d), hi(d);
    for (int c = 0; c < d; ++c) {
        Rat l = std::max(a.lo[c], b.lo[c]);
        Rat h = std::min(a.hi[c], b.hi[c]);
        if (l > h) return false;
        lo[c] = helly::ceil_rat(l * denom);
        hi[c] = helly::floor_rat(h * denom);
    }
    std::vector<helly::BigInt> at = lo;
    while (true) {
        Point p(d);
        for (int c = 0; c < d; ++c) p[c] = Rat(at[c], denom);
        bool outside_rest = true;
        for (std::size_t other = 0; other < boxes.size() && outside_rest; ++other) {
            if (static_cast<int>(other) == i || static_cast<int>(other) == j) continue;
            outside_rest = !boxes[other].contains(p);
        }
        if (outside_rest) return true;
        int c = d - 1;
        while (c >= 0 && at[c] == hi[c]) {
            at[c] = lo[c];
            --c;
        }
        if (c < 0) break;
        ++at[c];
    }
    return false;
}

}  // namespace oracle
