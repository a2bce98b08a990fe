#include "helly/transversal.hpp"

#include "helly/errors.hpp"
#include "helly/lp.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace helly {

namespace {

std::string point_label(const Point& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (j) os << ",";
        os << rational_to_string(p[j]);
    }
    os << ")";
    return os.str();
}

std::string flat_label(const AxisFlat& f) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [j, v] : f.fixed) {
        if (!first) os << ",";
        os << "x" << j << "=" << rational_to_string(v);
        first = false;
    }
    return os.str();
}

std::string lattice_label(const std::vector<BigInt>& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (j) os << ",";
        os << p[j].str();
    }
    os << ")";
    return os.str();
}

}  // namespace

CoverInstance CoverInstance::make(std::vector<std::string> targets,
                                  std::vector<std::string> candidates,
                                  std::vector<std::vector<bool>> hits) {
    CoverInstance inst;
    inst.targets = std::move(targets);
    inst.candidates = std::move(candidates);
    inst.hits = std::move(hits);
    if (inst.hits.size() != inst.candidates.size())
        throw SchemaError("cover instance: hits rows must match candidate count");
    for (const auto& row : inst.hits)
        if (row.size() != inst.targets.size())
            throw SchemaError("cover instance: hits row width must match target count");
    for (int t = 0; t < inst.num_targets(); ++t) {
        bool hit = false;
        for (int c = 0; c < inst.num_candidates() && !hit; ++c) hit = inst.hits[c][t];
        if (!hit)
            throw InfeasibleError("cover instance: target '" + inst.targets[t] +
                                  "' is hit by no candidate");
    }
    return inst;
}

bool verify_certificate(const CoverInstance& inst, const PiercingCertificate& cert) {
    if (static_cast<int>(cert.chosen.size()) != cert.value) return false;
    for (int t = 0; t < inst.num_targets(); ++t) {
        bool hit = false;
        for (int c : cert.chosen) {
            if (c < 0 || c >= inst.num_candidates()) return false;
            if (inst.hits[c][t]) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

std::vector<Point> candidate_points_boxes(std::span<const Box> boxes, const Limits& limits) {
    if (boxes.empty()) throw PreconditionError("candidate_points_boxes needs boxes");
    int d = boxes.front().dim();
    for (const auto& b : boxes)
        if (b.dim() != d) throw PreconditionError("dimension mismatch");
    std::vector<std::vector<Rat>> values(d);
    for (int j = 0; j < d; ++j) {
        std::set<Rat> vals;
        for (const auto& b : boxes) vals.insert(b.lo[j]);
        values[j].assign(vals.begin(), vals.end());
    }
    BigInt count = 1;
    for (int j = 0; j < d; ++j) count *= static_cast<long long>(values[j].size());
    if (count > limits.enumeration)
        throw LimitError("candidate point grid exceeds cap", count.convert_to<long long>(),
                         limits.enumeration);
    std::vector<Point> grid;
    std::vector<std::size_t> at(d, 0);
    while (true) {
        Point p(d);
        for (int j = 0; j < d; ++j) p[j] = values[j][at[j]];
        grid.push_back(std::move(p));
        int j = d - 1;
        while (j >= 0 && at[j] + 1 == values[j].size()) at[j--] = 0;
        if (j < 0) break;
        ++at[j];
    }
    return grid;
}

std::vector<AxisFlat> candidate_axisflats(std::span<const Box> boxes, int k,
                                          const Limits& limits) {
    if (boxes.empty()) throw PreconditionError("candidate_axisflats needs boxes");
    int d = boxes.front().dim();
    for (const auto& b : boxes)
        if (b.dim() != d) throw PreconditionError("dimension mismatch");
    if (k < 0 || k >= d) throw PreconditionError("candidate_axisflats requires 0 <= k < d");
    int fix = d - k;

    std::vector<std::vector<Rat>> values(d);
    for (int j = 0; j < d; ++j) {
        std::set<Rat> vals;
        for (const auto& b : boxes) vals.insert(b.lo[j]);
        values[j].assign(vals.begin(), vals.end());
    }

    // Count before materializing.
    BigInt count = 0;
    {
        std::vector<int> comb(fix);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            BigInt prod = 1;
            for (int j : comb) prod *= static_cast<long long>(values[j].size());
            count += prod;
            int i = fix - 1;
            while (i >= 0 && comb[i] == d - fix + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j2 = i + 1; j2 < fix; ++j2) comb[j2] = comb[j2 - 1] + 1;
        }
    }
    if (count > limits.enumeration)
        throw LimitError("candidate flat grid exceeds cap", count.convert_to<long long>(),
                         limits.enumeration);

    std::vector<AxisFlat> flats;
    std::vector<int> comb(fix);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        std::vector<std::size_t> at(fix, 0);
        while (true) {
            AxisFlat f;
            f.dim = d;
            for (int i = 0; i < fix; ++i) f.fixed.emplace(comb[i], values[comb[i]][at[i]]);
            flats.push_back(std::move(f));
            int i = fix - 1;
            while (i >= 0 && at[i] + 1 == values[comb[i]].size()) at[i--] = 0;
            if (i < 0) break;
            ++at[i];
        }
        int i = fix - 1;
        while (i >= 0 && comb[i] == d - fix + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j2 = i + 1; j2 < fix; ++j2) comb[j2] = comb[j2 - 1] + 1;
    }
    return flats;
}

std::vector<std::vector<BigInt>> candidate_lattice_points(std::span<const GeomObject> objects,
                                                          const Limits& limits) {
    if (objects.empty()) throw PreconditionError("candidate_lattice_points needs objects");
    int d = dim_of(objects.front());
    std::set<std::vector<BigInt>> seen;
    long long total = 0;
    for (const auto& g : objects) {
        if (dim_of(g) != d) throw PreconditionError("dimension mismatch");
        // Integer points of this object's own bounding box.
        std::vector<BigInt> lo(d), hi(d);
        {
            const Box* b = std::get_if<Box>(&g);
            const VPolytope* p = std::get_if<VPolytope>(&g);
            for (int j = 0; j < d; ++j) {
                Rat rlo, rhi;
                if (b) {
                    rlo = b->lo[j];
                    rhi = b->hi[j];
                } else if (p) {
                    rlo = rhi = p->points.front()[j];
                    for (const auto& pt : p->points) {
                        if (pt[j] < rlo) rlo = pt[j];
                        if (pt[j] > rhi) rhi = pt[j];
                    }
                } else {
                    const Ball& ball = std::get<Ball>(g);
                    rlo = ball.center[j] - ball.radius;
                    rhi = ball.center[j] + ball.radius;
                }
                lo[j] = ceil_rat(rlo);
                hi[j] = floor_rat(rhi);
            }
        }
        bool empty = false;
        BigInt count = 1;
        for (int j = 0; j < d; ++j) {
            if (lo[j] > hi[j]) {
                empty = true;
                break;
            }
            count *= hi[j] - lo[j] + 1;
        }
        if (empty) continue;
        total += count.convert_to<long long>();
        if (total > limits.enumeration)
            throw LimitError("lattice candidate enumeration exceeds cap", total,
                             limits.enumeration);
        std::vector<BigInt> p = lo;
        while (true) {
            seen.insert(p);
            int j = d - 1;
            while (j >= 0 && p[j] == hi[j]) {
                p[j] = lo[j];
                --j;
            }
            if (j < 0) break;
            ++p[j];
        }
    }
    return {seen.begin(), seen.end()};
}

CoverInstance cover_boxes_by_points(std::span<const Box> boxes, const Limits& limits) {
    auto points = candidate_points_boxes(boxes, limits);
    std::vector<std::string> targets, candidates;
    for (std::size_t i = 0; i < boxes.size(); ++i) targets.push_back("box" + std::to_string(i));
    std::vector<std::vector<bool>> hits(points.size(), std::vector<bool>(boxes.size(), false));
    for (std::size_t c = 0; c < points.size(); ++c) {
        candidates.push_back(point_label(points[c]));
        for (std::size_t t = 0; t < boxes.size(); ++t) hits[c][t] = boxes[t].contains(points[c]);
    }
    return CoverInstance::make(std::move(targets), std::move(candidates), std::move(hits));
}

CoverInstance cover_boxes_by_axisflats(std::span<const Box> boxes, int k, const Limits& limits) {
    auto flats = candidate_axisflats(boxes, k, limits);
    std::vector<std::string> targets, candidates;
    for (std::size_t i = 0; i < boxes.size(); ++i) targets.push_back("box" + std::to_string(i));
    std::vector<std::vector<bool>> hits(flats.size(), std::vector<bool>(boxes.size(), false));
    for (std::size_t c = 0; c < flats.size(); ++c) {
        candidates.push_back(flat_label(flats[c]));
        for (std::size_t t = 0; t < boxes.size(); ++t)
            hits[c][t] = axisflat_stabs_box(flats[c], boxes[t]);
    }
    return CoverInstance::make(std::move(targets), std::move(candidates), std::move(hits));
}

CoverInstance cover_objects_by_lattice_points(std::span<const GeomObject> objects,
                                              const Limits& limits) {
    auto points = candidate_lattice_points(objects, limits);
    std::vector<std::string> targets, candidates;
    for (std::size_t i = 0; i < objects.size(); ++i) targets.push_back("obj" + std::to_string(i));
    std::vector<std::vector<bool>> hits(points.size(), std::vector<bool>(objects.size(), false));
    for (std::size_t c = 0; c < points.size(); ++c) {
        candidates.push_back(lattice_label(points[c]));
        Point q;
        q.reserve(points[c].size());
        for (const auto& v : points[c]) q.push_back(Rat(v));
        for (std::size_t t = 0; t < objects.size(); ++t) {
            const GeomObject& g = objects[t];
            if (const Box* b = std::get_if<Box>(&g)) {
                hits[c][t] = b->contains(q);
            } else if (const VPolytope* poly = std::get_if<VPolytope>(&g)) {
                hits[c][t] = point_in_polytope(q, *poly, limits);
            } else {
                const Ball& ball = std::get<Ball>(g);
                Rat dist2 = 0;
                for (std::size_t j = 0; j < q.size(); ++j) {
                    Rat diff = q[j] - ball.center[j];
                    dist2 += diff * diff;
                }
                hits[c][t] = dist2 <= ball.radius * ball.radius;
            }
        }
    }
    return CoverInstance::make(std::move(targets), std::move(candidates), std::move(hits));
}

CoverInstance cover_polygons_by_lines(std::span<const VPolytope> polys, const Limits& limits) {
    for (const auto& p : polys) {
        validate(p);
        if (p.dim() != 2) throw PreconditionError("cover_polygons_by_lines requires d = 2");
    }
    std::vector<Point> vertices;
    for (const auto& p : polys)
        for (const auto& v : p.points) vertices.push_back(v);

    // Normalize (nx, ny, c) so the first nonzero normal coordinate is 1.
    std::map<std::array<Rat, 3>, Line2> lines;
    auto add_line = [&](Line2 line) {
        Rat scale = line.nx != 0 ? line.nx : line.ny;
        if (scale == 0) return;
        std::array<Rat, 3> key{line.nx / scale, line.ny / scale, line.c / scale};
        lines.emplace(key, line);
    };
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            Rat dx = vertices[b][0] - vertices[a][0];
            Rat dy = vertices[b][1] - vertices[a][1];
            if (dx == 0 && dy == 0) continue;
            add_line({-dy, dx, -dy * vertices[a][0] + dx * vertices[a][1]});
        }
        add_line({Rat(1), Rat(0), vertices[a][0]});
    }
    if (static_cast<long long>(lines.size()) * static_cast<long long>(polys.size()) >
        limits.enumeration)
        throw LimitError("line candidate set exceeds cap",
                         static_cast<long long>(lines.size()) *
                             static_cast<long long>(polys.size()),
                         limits.enumeration);

    std::vector<std::string> targets, candidates;
    for (std::size_t i = 0; i < polys.size(); ++i) targets.push_back("poly" + std::to_string(i));
    std::vector<std::vector<bool>> hits;
    for (const auto& [key, line] : lines) {
        (void)key;
        std::ostringstream os;
        os << rational_to_string(line.nx) << "x+" << rational_to_string(line.ny)
           << "y=" << rational_to_string(line.c);
        candidates.push_back(os.str());
        std::vector<bool> row(polys.size(), false);
        for (std::size_t t = 0; t < polys.size(); ++t) row[t] = line_meets_polytope(line, polys[t]);
        hits.push_back(std::move(row));
    }
    return CoverInstance::make(std::move(targets), std::move(candidates), std::move(hits));
}

namespace {

struct HittingSearch {
    const CoverInstance* inst;
    std::vector<std::vector<int>> coverers;  // per target: candidates hitting it
    std::vector<std::vector<int>> covers;    // per candidate: targets it hits
    std::vector<int> cover_count;            // per target: times covered by chosen
    int uncovered;
    std::vector<int> chosen;
    std::vector<int> best;

    void choose(int c) {
        chosen.push_back(c);
        for (int t : covers[c])
            if (cover_count[t]++ == 0) --uncovered;
    }
    void unchoose(int c) {
        chosen.pop_back();
        for (int t : covers[c])
            if (--cover_count[t] == 0) ++uncovered;
    }

    // Pairwise-candidate-disjoint uncovered targets lower-bound the picks left.
    int packing_bound() const {
        std::vector<char> blocked(inst->num_candidates(), 0);
        int bound = 0;
        for (int t = 0; t < inst->num_targets(); ++t) {
            if (cover_count[t] > 0) continue;
            bool free = true;
            for (int c : coverers[t])
                if (blocked[c]) {
                    free = false;
                    break;
                }
            if (!free) continue;
            ++bound;
            for (int c : coverers[t]) blocked[c] = 1;
        }
        return bound;
    }

    void run() {
        if (uncovered == 0) {
            if (best.empty() || chosen.size() < best.size()) best = chosen;
            return;
        }
        if (!best.empty() && chosen.size() + static_cast<std::size_t>(packing_bound()) >= best.size())
            return;
        // fail-first: uncovered target with the fewest coverers
        int pick = -1;
        for (int t = 0; t < inst->num_targets(); ++t) {
            if (cover_count[t] > 0) continue;
            if (pick < 0 || coverers[t].size() < coverers[pick].size()) pick = t;
        }
        for (int c : coverers[pick]) {
            choose(c);
            run();
            unchoose(c);
        }
    }
};

}  // namespace

PiercingCertificate min_hitting_set(const CoverInstance& inst, const Limits& limits) {
    if (inst.num_candidates() > limits.hitting_candidates)
        throw LimitError("hitting set candidate cap", inst.num_candidates(),
                         limits.hitting_candidates);
    if (inst.num_targets() > limits.hitting_targets)
        throw LimitError("hitting set target cap", inst.num_targets(), limits.hitting_targets);

    HittingSearch search;
    search.inst = &inst;
    search.coverers.resize(inst.num_targets());
    search.covers.resize(inst.num_candidates());
    for (int c = 0; c < inst.num_candidates(); ++c)
        for (int t = 0; t < inst.num_targets(); ++t)
            if (inst.hits[c][t]) {
                search.coverers[t].push_back(c);
                search.covers[c].push_back(t);
            }
    for (int t = 0; t < inst.num_targets(); ++t)
        if (search.coverers[t].empty())
            throw InfeasibleError("min_hitting_set: target '" + inst.targets[t] + "' unhittable");
    search.cover_count.assign(inst.num_targets(), 0);
    search.uncovered = inst.num_targets();

    // Greedy incumbent: most new coverage, ties to the least index.
    {
        std::vector<int> greedy;
        while (search.uncovered > 0) {
            int pick = -1, gain = -1;
            for (int c = 0; c < inst.num_candidates(); ++c) {
                int g = 0;
                for (int t : search.covers[c])
                    if (search.cover_count[t] == 0) ++g;
                if (g > gain) {
                    gain = g;
                    pick = c;
                }
            }
            search.choose(pick);
            greedy.push_back(pick);
        }
        search.best = greedy;
        for (auto it = greedy.rbegin(); it != greedy.rend(); ++it) search.unchoose(*it);
    }

    search.run();
    PiercingCertificate cert;
    cert.chosen = search.best;
    std::sort(cert.chosen.begin(), cert.chosen.end());
    cert.value = static_cast<int>(cert.chosen.size());
    if (!verify_certificate(inst, cert))
        throw std::logic_error("min_hitting_set produced an invalid certificate");
    return cert;
}

FractionalTransversal fractional_transversal(const CoverInstance& inst, const Limits& limits) {
    // Solve the packing side max sum(y), one <=1 row per candidate; the
    // covering optimum falls out of the slack reduced costs.
    std::vector<LpConstraint> cons;
    cons.reserve(inst.num_candidates());
    for (int c = 0; c < inst.num_candidates(); ++c) {
        LpConstraint row;
        row.coeffs.assign(inst.num_targets(), Rat(0));
        for (int t = 0; t < inst.num_targets(); ++t)
            if (inst.hits[c][t]) row.coeffs[t] = 1;
        row.rel = Rel::LE;
        row.rhs = 1;
        cons.push_back(std::move(row));
    }
    std::vector<Rat> ones(inst.num_targets(), Rat(1));
    LpSolution sol = solve_lp(cons, ones, limits.enumeration * 8);
    if (sol.status != LpSolution::Status::Optimal)
        throw InfeasibleError("fractional transversal LP did not reach an optimum");

    FractionalTransversal out;
    out.value = sol.objective;
    out.dual = sol.x;      // fractional matching over targets
    out.primal = sol.duals;  // fractional transversal over candidates

    // Strong duality is checked, not assumed.
    Rat primal_value = 0;
    for (const Rat& v : out.primal) {
        if (v < 0) throw std::logic_error("fractional transversal: negative primal weight");
        primal_value += v;
    }
    if (primal_value != out.value)
        throw std::logic_error("fractional transversal: primal and dual optima differ");
    for (int t = 0; t < inst.num_targets(); ++t) {
        Rat coverage = 0;
        for (int c = 0; c < inst.num_candidates(); ++c)
            if (inst.hits[c][t]) coverage += out.primal[c];
        if (coverage < 1)
            throw std::logic_error("fractional transversal: primal does not cover target");
    }
    for (int c = 0; c < inst.num_candidates(); ++c) {
        Rat load = 0;
        for (int t = 0; t < inst.num_targets(); ++t)
            if (inst.hits[c][t]) load += out.dual[t];
        if (load > 1) throw std::logic_error("fractional transversal: dual overpacks candidate");
    }
    return out;
}

EdgeSystem dual_system(const CoverInstance& inst) {
    EdgeSystem sys;
    sys.vertex_labels = inst.candidates;
    sys.edges.resize(inst.num_targets());
    for (int t = 0; t < inst.num_targets(); ++t)
        for (int c = 0; c < inst.num_candidates(); ++c)
            if (inst.hits[c][t]) sys.edges[t].push_back(c);
    return sys;
}

namespace {

SetWitness max_disjoint_edges(const std::vector<std::vector<int>>& edges, int num_vertices,
                              const Limits& limits) {
    if (static_cast<long long>(edges.size()) > limits.hitting_targets)
        throw LimitError("matching search edge cap", static_cast<long long>(edges.size()),
                         limits.hitting_targets);
    std::vector<char> occupied(num_vertices, 0);
    std::vector<int> chosen;
    SetWitness best;
    best.value = 0;

    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(chosen.size()) > best.value) {
            best.value = static_cast<int>(chosen.size());
            best.witness = chosen;
        }
        if (chosen.size() + (edges.size() - from) <= static_cast<std::size_t>(best.value)) return;
        for (std::size_t e = from; e < edges.size(); ++e) {
            bool free = true;
            for (int v : edges[e])
                if (occupied[v]) {
                    free = false;
                    break;
                }
            if (!free) continue;
            for (int v : edges[e]) occupied[v] = 1;
            chosen.push_back(static_cast<int>(e));
            rec(e + 1);
            chosen.pop_back();
            for (int v : edges[e]) occupied[v] = 0;
        }
    };
    rec(0);
    std::sort(best.witness.begin(), best.witness.end());
    return best;
}

}  // namespace

SetWitness matching_number(const EdgeSystem& sys, const Limits& limits) {
    return max_disjoint_edges(sys.edges, sys.num_vertices(), limits);
}

SetWitness matching_number(const CoverInstance& inst, const Limits& limits) {
    return matching_number(dual_system(inst), limits);
}

SetWitness matching_number(const Hypergraph& h, const Limits& limits) {
    return max_disjoint_edges(h.edges(), h.num_vertices(), limits);
}

namespace {

struct LambdaSearch {
    const std::vector<std::vector<int>>* edges;
    std::vector<std::vector<std::vector<int>>> inter;  // pairwise sorted intersections
    std::vector<int> cover_count;                      // per vertex over chosen edges
    std::vector<int> chosen;
    LambdaWitness best;

    bool pair_private(int i, int j) const {
        for (int v : inter[i][j])
            if (cover_count[v] == 2) return true;
        return false;
    }

    bool all_pairs_ok() const {
        for (std::size_t a = 0; a < chosen.size(); ++a)
            for (std::size_t b = a + 1; b < chosen.size(); ++b)
                if (!pair_private(chosen[a], chosen[b])) return false;
        return true;
    }

    void rec(std::size_t from) {
        if (static_cast<int>(chosen.size()) > best.value) {
            best.value = static_cast<int>(chosen.size());
            best.edges = chosen;
        }
        std::size_t m = edges->size();
        if (chosen.size() + (m - from) <= static_cast<std::size_t>(best.value)) return;
        for (std::size_t e = from; e < m; ++e) {
            for (int v : (*edges)[e]) ++cover_count[v];
            chosen.push_back(static_cast<int>(e));
            if (all_pairs_ok()) rec(e + 1);
            chosen.pop_back();
            for (int v : (*edges)[e]) --cover_count[v];
        }
    }
};

}  // namespace

LambdaWitness lambda_dsw(const EdgeSystem& sys, const Limits& limits) {
    int m = static_cast<int>(sys.edges.size());
    if (m > limits.lambda_edges)
        throw LimitError("lambda search edge cap", m, limits.lambda_edges);
    LambdaSearch search;
    search.edges = &sys.edges;
    search.inter.assign(m, std::vector<std::vector<int>>(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            std::vector<int> common;
            std::set_intersection(sys.edges[i].begin(), sys.edges[i].end(),
                                  sys.edges[j].begin(), sys.edges[j].end(),
                                  std::back_inserter(common));
            search.inter[i][j] = common;
            search.inter[j][i] = std::move(common);
        }
    search.cover_count.assign(sys.num_vertices(), 0);
    search.rec(0);
    std::sort(search.best.edges.begin(), search.best.edges.end());
    return search.best;
}

EdgeSystem dual_box_flat_hypergraph(std::span<const Box> boxes, int k, const Limits& limits) {
    auto flats = candidate_axisflats(boxes, k, limits);
    EdgeSystem sys;
    sys.vertex_labels.reserve(flats.size());
    for (const auto& f : flats) sys.vertex_labels.push_back(flat_label(f));
    sys.edges.resize(boxes.size());
    for (std::size_t b = 0; b < boxes.size(); ++b)
        for (std::size_t c = 0; c < flats.size(); ++c)
            if (axisflat_stabs_box(flats[c], boxes[b])) sys.edges[b].push_back(static_cast<int>(c));
    return sys;
}

}  // namespace helly
