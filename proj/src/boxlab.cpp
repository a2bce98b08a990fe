#include "helly/boxlab.hpp"

#include "helly/errors.hpp"
#include "helly/generators.hpp"
#include "helly/transversal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace helly {

namespace {

void require_boxes(std::span<const Box> boxes, std::size_t at_least) {
    if (boxes.size() < at_least)
        throw PreconditionError("operation needs at least " + std::to_string(at_least) +
                                " boxes");
    int d = boxes.front().dim();
    for (const auto& b : boxes) {
        validate(b);
        if (b.dim() != d) throw PreconditionError("dimension mismatch");
    }
}

}  // namespace

BoxOrderings box_orderings(std::span<const Box> boxes) {
    require_boxes(boxes, 1);
    int d = boxes.front().dim();
    int n = static_cast<int>(boxes.size());
    BoxOrderings out;
    out.d = d;
    out.orders.resize(2 * static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        std::vector<int> by_lo(n), by_hi(n);
        std::iota(by_lo.begin(), by_lo.end(), 0);
        std::iota(by_hi.begin(), by_hi.end(), 0);
        std::sort(by_lo.begin(), by_lo.end(), [&](int a, int b) {
            if (boxes[a].lo[j] != boxes[b].lo[j]) return boxes[a].lo[j] < boxes[b].lo[j];
            return a < b;
        });
        std::sort(by_hi.begin(), by_hi.end(), [&](int a, int b) {
            if (boxes[a].hi[j] != boxes[b].hi[j]) return boxes[a].hi[j] < boxes[b].hi[j];
            return a < b;
        });
        out.orders[2 * j] = std::move(by_lo);
        out.orders[2 * j + 1] = std::move(by_hi);
    }
    return out;
}

Hypergraph pairwise_intersection_graph(std::span<const Box> boxes) {
    require_boxes(boxes, 1);
    int n = static_cast<int>(boxes.size());
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Box pair_arr[] = {boxes[i], boxes[j]};
            if (boxes_intersect(pair_arr)) edges.push_back({i, j});
        }
    return Hypergraph::from_indices(2, n, std::move(edges));
}

BoxClique box_clique_number(std::span<const Box> boxes, const Limits& limits) {
    require_boxes(boxes, 1);
    auto grid = candidate_points_boxes(boxes, limits);
    BoxClique best;
    for (const auto& p : grid) {
        std::vector<int> members;
        for (std::size_t i = 0; i < boxes.size(); ++i)
            if (boxes[i].contains(p)) members.push_back(static_cast<int>(i));
        if (static_cast<int>(members.size()) > best.value) {
            best.value = static_cast<int>(members.size());
            best.witness = p;
            best.members = std::move(members);
        }
    }
    return best;
}

FracHellyReport frac_helly_box_check(std::span<const Box> boxes, const Limits& limits) {
    require_boxes(boxes, 2);
    FracHellyReport report;
    report.n = static_cast<int>(boxes.size());
    Hypergraph graph = pairwise_intersection_graph(boxes);
    report.alpha = edge_density(graph);
    report.clique = box_clique_number(boxes, limits).value;

    int d = boxes.front().dim();
    Rat threshold = Rat(1) - Rat(1, static_cast<long long>(d) * d);
    report.applicable = report.alpha > threshold;

    // omega/n >= 1 - d*sqrt(1-alpha)  <=>  1 - omega/n <= 0, or
    // d^2 (1-alpha) >= (1 - omega/n)^2, all rational.
    Rat gap = Rat(1) - Rat(report.clique, report.n);
    if (gap <= 0) {
        report.bound_holds = true;
    } else {
        report.bound_holds =
            Rat(static_cast<long long>(d) * d) * (Rat(1) - report.alpha) >= gap * gap;
    }
    return report;
}

Claim17Report claim17_experiment(int s, int t, int d, std::uint64_t seed,
                                 const Limits& limits) {
    if (s < 2 || t < 2 || d < 1) throw PreconditionError("claim17 requires s, t >= 2, d >= 1");
    if (static_cast<long long>(s) * t > limits.hitting_targets)
        throw LimitError("claim17 family exceeds cap", static_cast<long long>(s) * t,
                         limits.hitting_targets);
    Claim17Report report;
    report.s = s;
    report.t = t;
    report.d = d;
    Rng rng(seed);
    report.boxes = claim17_family(s, t, d, rng);

    // Every cross-family pair must intersect by construction.
    auto family_of = [t](int idx) { return idx / t; };
    int n = s * t;
    long long intersecting = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Box pair_arr[] = {report.boxes[i], report.boxes[j]};
            bool meet = boxes_intersect(pair_arr);
            if (family_of(i) != family_of(j) && !meet)
                throw std::logic_error("claim17 generator produced a non-intersecting cross pair");
            if (meet) {
                ++intersecting;
                if (family_of(i) == family_of(j) && !report.same_family_pair_found) {
                    report.same_family_pair_found = true;
                    report.pair_family = family_of(i);
                    report.pair = {i % t, j % t};
                }
            }
        }
    report.alpha = Rat(intersecting, binomial(n, 2));
    report.alpha_lower = Rat(static_cast<long long>(s) - 1) /
                         (Rat(s) - Rat(1, static_cast<long long>(t)));
    report.alpha_ok = report.alpha >= report.alpha_lower;
    // (1 - d sqrt(1-alpha_lower)) * st > s  <=>  d^2 (1-alpha_lower) < (1 - 1/t)^2
    Rat margin = Rat(1) - Rat(1, static_cast<long long>(t));
    report.clique_bound_exceeds_s =
        Rat(static_cast<long long>(d) * d) * (Rat(1) - report.alpha_lower) < margin * margin;
    return report;
}

namespace {

// Middle element of {a,b,c} under (key, index) order.
int middle_of_triple(const std::vector<Rat>& key, int a, int b, int c) {
    auto less = [&](int x, int y) { return key[x] != key[y] ? key[x] < key[y] : x < y; };
    int lo = a, mid = b, hi = c;
    if (less(mid, lo)) std::swap(lo, mid);
    if (less(hi, mid)) {
        std::swap(mid, hi);
        if (less(mid, lo)) std::swap(lo, mid);
    }
    return mid;
}

bool box_contains_box_intersection(const Box& outer_a, const Box& outer_b, const Box& mid) {
    for (int j = 0; j < mid.dim(); ++j) {
        Rat lo = outer_a.lo[j] > outer_b.lo[j] ? outer_a.lo[j] : outer_b.lo[j];
        Rat hi = outer_a.hi[j] < outer_b.hi[j] ? outer_a.hi[j] : outer_b.hi[j];
        if (lo > hi) return true;  // empty intersection is contained in anything
        if (lo < mid.lo[j] || hi > mid.hi[j]) return false;
    }
    return true;
}

}  // namespace

std::optional<ConsistentTriple> consistent_triple(std::span<const Box> boxes,
                                                  const Limits& limits) {
    require_boxes(boxes, 3);
    int n = static_cast<int>(boxes.size());
    int d = boxes.front().dim();
    long long triples = static_cast<long long>(n) * n * n;
    if (triples > limits.enumeration)
        throw LimitError("consistent triple scan exceeds cap", triples, limits.enumeration);

    // Threshold keys per ordering.
    std::vector<std::vector<Rat>> keys;
    for (int j = 0; j < d; ++j) {
        std::vector<Rat> lo(n), hi(n);
        for (int i = 0; i < n; ++i) {
            lo[i] = boxes[i].lo[j];
            hi[i] = boxes[i].hi[j];
        }
        keys.push_back(std::move(lo));
        keys.push_back(std::move(hi));
    }

    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                int mid = middle_of_triple(keys[0], a, b, c);
                bool consistent = true;
                for (std::size_t o = 1; o < keys.size() && consistent; ++o)
                    consistent = middle_of_triple(keys[o], a, b, c) == mid;
                if (!consistent) continue;
                ConsistentTriple triple;
                triple.middle = mid;
                // extremes ordered by the first ordering
                auto less0 = [&](int x, int y) {
                    return keys[0][x] != keys[0][y] ? keys[0][x] < keys[0][y] : x < y;
                };
                int u = a == mid ? b : a;
                int v = c == mid ? b : c;
                triple.first = less0(u, v) ? u : v;
                triple.last = less0(u, v) ? v : u;
                triple.containment_verified = box_contains_box_intersection(
                    boxes[triple.first], boxes[triple.last], boxes[triple.middle]);
                if (!triple.containment_verified)
                    throw std::logic_error(
                        "consistent triple failed its containment certificate");
                return triple;
            }
        }
    }
    return std::nullopt;
}

std::vector<std::vector<bool>> private_point_matrix(std::span<const Box> boxes,
                                                    const Limits& limits) {
    require_boxes(boxes, 1);
    int n = static_cast<int>(boxes.size());
    int d = boxes.front().dim();

    // Sample values per coordinate: every box endpoint plus the midpoints of
    // consecutive distinct endpoints; each arrangement cell owns one sample.
    std::vector<std::vector<Rat>> samples(d);
    BigInt cells = 1;
    for (int j = 0; j < d; ++j) {
        std::set<Rat> endpoints;
        for (const auto& b : boxes) {
            endpoints.insert(b.lo[j]);
            endpoints.insert(b.hi[j]);
        }
        std::vector<Rat> vals(endpoints.begin(), endpoints.end());
        std::vector<Rat> with_mids;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            with_mids.push_back(vals[i]);
            if (i + 1 < vals.size()) with_mids.push_back((vals[i] + vals[i + 1]) / 2);
        }
        cells *= static_cast<long long>(with_mids.size());
        samples[j] = std::move(with_mids);
    }
    if (cells > limits.enumeration)
        throw LimitError("private point cell scan exceeds cap", cells.convert_to<long long>(),
                         limits.enumeration);

    std::vector<std::vector<bool>> matrix(n, std::vector<bool>(n, false));
    std::vector<std::size_t> at(d, 0);
    Point p(d);
    while (true) {
        for (int j = 0; j < d; ++j) p[j] = samples[j][at[j]];
        int first = -1, second = -1, count = 0;
        for (int i = 0; i < n && count <= 2; ++i) {
            if (boxes[i].contains(p)) {
                ++count;
                if (first < 0) first = i;
                else if (second < 0) second = i;
            }
        }
        if (count == 2) {
            matrix[first][second] = true;
            matrix[second][first] = true;
        }
        int j = d - 1;
        while (j >= 0 && at[j] + 1 == samples[j].size()) at[j--] = 0;
        if (j < 0) break;
        ++at[j];
    }
    return matrix;
}

std::optional<DirectionReduction> direction_reduction(std::span<const Box> boxes, int k,
                                                      int min_size, const Limits& limits) {
    require_boxes(boxes, 1);
    int d = boxes.front().dim();
    int n = static_cast<int>(boxes.size());
    if (k < 0 || k >= d) throw PreconditionError("direction_reduction requires 0 <= k < d");

    auto pair_stabbable = [&](const std::vector<int>& dirs, int i, int j) {
        // A translate of the k-flat spanning dirs stabs both boxes iff their
        // projections onto the fixed coordinates intersect.
        std::size_t di = 0;
        for (int coord = 0; coord < d; ++coord) {
            if (di < dirs.size() && dirs[di] == coord) {
                ++di;
                continue;
            }
            Rat lo = boxes[i].lo[coord] > boxes[j].lo[coord] ? boxes[i].lo[coord]
                                                             : boxes[j].lo[coord];
            Rat hi = boxes[i].hi[coord] < boxes[j].hi[coord] ? boxes[i].hi[coord]
                                                             : boxes[j].hi[coord];
            if (lo > hi) return false;
        }
        return true;
    };

    std::optional<DirectionReduction> best;
    std::vector<int> dirs(k);
    std::iota(dirs.begin(), dirs.end(), 0);
    while (true) {
        std::vector<std::vector<int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (pair_stabbable(dirs, i, j)) edges.push_back({i, j});
        Hypergraph graph = Hypergraph::from_indices(2, n, std::move(edges));
        SetWitness clique = clique_number(graph, limits);
        if (!best || clique.value > static_cast<int>(best->subfamily.size())) {
            DirectionReduction red;
            red.directions = dirs;
            red.subfamily = clique.witness;
            for (int i : red.subfamily) {
                Box proj;
                std::size_t di = 0;
                for (int coord = 0; coord < d; ++coord) {
                    if (di < dirs.size() && dirs[di] == coord) {
                        ++di;
                        continue;
                    }
                    proj.lo.push_back(boxes[i].lo[coord]);
                    proj.hi.push_back(boxes[i].hi[coord]);
                }
                red.projected.push_back(std::move(proj));
            }
            best = std::move(red);
        }
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && dirs[i] == d - k + i) --i;
        if (i < 0) break;
        ++dirs[i];
        for (int j = i + 1; j < k; ++j) dirs[j] = dirs[j - 1] + 1;
    }
    if (!best || static_cast<int>(best->subfamily.size()) < min_size) return std::nullopt;
    return best;
}

}  // namespace helly
