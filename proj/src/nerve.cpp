#include "helly/nerve.hpp"

#include "helly/errors.hpp"
#include "helly/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace helly {

std::string to_string(NerveKind kind) {
    switch (kind) {
        case NerveKind::ConvexPoint: return "convex";
        case NerveKind::BoxAxisFlat: return "boxflat";
        case NerveKind::BallKFlat: return "ballflat";
        case NerveKind::Lattice: return "lattice";
        case NerveKind::PolygonLine: return "polygonline";
    }
    return "?";
}

NerveKind nerve_kind_from_string(const std::string& name) {
    if (name == "convex") return NerveKind::ConvexPoint;
    if (name == "boxflat") return NerveKind::BoxAxisFlat;
    if (name == "ballflat") return NerveKind::BallKFlat;
    if (name == "lattice") return NerveKind::Lattice;
    if (name == "polygonline") return NerveKind::PolygonLine;
    throw SchemaError("unknown nerve kind: " + name);
}

NerveSpec NerveSpec::convex_point(int d) { return {NerveKind::ConvexPoint, d, 0, d + 1}; }
NerveSpec NerveSpec::box_axisflat(int d, int k) { return {NerveKind::BoxAxisFlat, d, k, 2}; }
NerveSpec NerveSpec::ball_kflat(int d, int k) { return {NerveKind::BallKFlat, d, k, k + 2}; }
NerveSpec NerveSpec::lattice(int d) { return {NerveKind::Lattice, d, 0, d + 1}; }
NerveSpec NerveSpec::polygon_line(int q) { return {NerveKind::PolygonLine, 2, 0, q}; }

void NerveSpec::validate() const {
    if (q < 2) throw SchemaError("nerve spec: q must be at least 2");
    if (d < 1) throw SchemaError("nerve spec: d must be at least 1");
    switch (kind) {
        case NerveKind::ConvexPoint:
            if (q != d + 1) throw SchemaError("convex nerve requires q = d+1");
            break;
        case NerveKind::BoxAxisFlat:
            if (q != 2) throw SchemaError("box/flat nerve requires q = 2");
            if (k < 0 || k >= d) throw SchemaError("box/flat nerve requires 0 <= k < d");
            break;
        case NerveKind::BallKFlat:
            if (q != k + 2) throw SchemaError("ball/flat nerve requires q = k+2");
            if (k < 0 || k >= d) throw SchemaError("ball/flat nerve requires 0 <= k < d");
            if (k != 0 && !(d == 2 && k == 1))
                throw SchemaError("ball/flat nerve supports k = 0, or d = 2 with k = 1");
            break;
        case NerveKind::Lattice:
            if (q != d + 1) throw SchemaError("lattice nerve requires q = d+1");
            break;
        case NerveKind::PolygonLine:
            if (d != 2) throw SchemaError("polygon/line nerve requires d = 2");
            break;
    }
}

namespace {

enum class Verdict { Edge, NonEdge, EdgeInconclusive };

template <typename T>
std::vector<T> expect_all(std::span<const GeomObject> family, const char* what) {
    std::vector<T> out;
    out.reserve(family.size());
    for (const auto& g : family) {
        const T* t = std::get_if<T>(&g);
        if (!t) throw SchemaError(std::string("nerve objects must all be ") + what);
        out.push_back(*t);
    }
    return out;
}

// Convex-set nerves accept boxes too, as their corner polytopes.
std::vector<VPolytope> as_polytopes(std::span<const GeomObject> family) {
    std::vector<VPolytope> out;
    out.reserve(family.size());
    for (const auto& g : family) {
        if (const VPolytope* p = std::get_if<VPolytope>(&g)) out.push_back(*p);
        else if (const Box* b = std::get_if<Box>(&g)) out.push_back(box_to_polytope(*b));
        else throw SchemaError("nerve objects must be polytopes or boxes");
    }
    return out;
}

struct NervePredicate {
    const NerveSpec& spec;
    const Limits& limits;
    std::vector<VPolytope> polys;
    std::vector<Box> boxes;
    std::vector<Ball> balls;
    std::vector<GeomObject> objects;

    NervePredicate(std::span<const GeomObject> family, const NerveSpec& s, const Limits& l)
        : spec(s), limits(l) {
        switch (spec.kind) {
            case NerveKind::ConvexPoint:
            case NerveKind::PolygonLine:
                polys = as_polytopes(family);
                for (const auto& p : polys) {
                    validate(p);
                    if (p.dim() != spec.d) throw SchemaError("nerve object dimension mismatch");
                }
                break;
            case NerveKind::BoxAxisFlat:
                boxes = expect_all<Box>(family, "boxes");
                for (const auto& b : boxes) {
                    validate(b);
                    if (b.dim() != spec.d) throw SchemaError("nerve object dimension mismatch");
                }
                break;
            case NerveKind::BallKFlat:
                balls = expect_all<Ball>(family, "balls");
                for (const auto& b : balls) {
                    validate(b);
                    if (b.dim() != spec.d) throw SchemaError("nerve object dimension mismatch");
                }
                break;
            case NerveKind::Lattice:
                objects.assign(family.begin(), family.end());
                for (const auto& g : objects) {
                    if (std::holds_alternative<Ball>(g))
                        throw SchemaError("lattice nerve supports boxes and polytopes");
                    if (dim_of(g) != spec.d) throw SchemaError("nerve object dimension mismatch");
                }
                break;
        }
    }

    Verdict evaluate(const std::vector<int>& subset) const {
        switch (spec.kind) {
            case NerveKind::ConvexPoint: {
                std::vector<VPolytope> sel;
                for (int i : subset) sel.push_back(polys[i]);
                return polytopes_intersect(sel, limits).intersects ? Verdict::Edge
                                                                   : Verdict::NonEdge;
            }
            case NerveKind::BoxAxisFlat: {
                std::vector<Box> sel;
                for (int i : subset) sel.push_back(boxes[i]);
                return axisflat_transversal(sel, spec.k).has_value() ? Verdict::Edge
                                                                     : Verdict::NonEdge;
            }
            case NerveKind::BallKFlat: {
                std::vector<Ball> sel;
                for (int i : subset) sel.push_back(balls[i]);
                if (spec.k == 0) {
                    return balls_intersect_pair(sel[0], sel[1]) ? Verdict::Edge
                                                                : Verdict::NonEdge;
                }
                NumericTransversal r = line_transversal_balls(sel);
                if (r.status == NumericStatus::Inconclusive) return Verdict::EdgeInconclusive;
                return r.accepted() ? Verdict::Edge : Verdict::NonEdge;
            }
            case NerveKind::Lattice: {
                std::vector<GeomObject> sel;
                for (int i : subset) sel.push_back(objects[i]);
                return lattice_point_in_intersection(sel, limits).has_value()
                           ? Verdict::Edge
                           : Verdict::NonEdge;
            }
            case NerveKind::PolygonLine: {
                std::vector<VPolytope> sel;
                for (int i : subset) sel.push_back(polys[i]);
                return line_transversal_polygons(sel).has_value() ? Verdict::Edge
                                                                  : Verdict::NonEdge;
            }
        }
        return Verdict::NonEdge;
    }
};

NerveResult build_with_cache(std::span<const GeomObject> family, const NerveSpec& spec,
                             const Limits& limits, std::map<std::vector<int>, Verdict>* cache) {
    spec.validate();
    NervePredicate pred(family, spec, limits);
    int n = static_cast<int>(family.size());
    int q = spec.q;
    BigInt count = binomial(n, q);
    if (count > limits.enumeration)
        throw LimitError("nerve enumeration exceeds cap", count.convert_to<long long>(),
                         limits.enumeration);

    std::vector<std::vector<int>> edges;
    std::vector<std::vector<int>> inconclusive;
    if (n >= q) {
        std::vector<int> comb(q);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            Verdict v;
            if (cache) {
                auto it = cache->find(comb);
                if (it != cache->end()) {
                    v = it->second;
                } else {
                    v = pred.evaluate(comb);
                    cache->emplace(comb, v);
                }
            } else {
                v = pred.evaluate(comb);
            }
            if (v != Verdict::NonEdge) edges.push_back(comb);
            if (v == Verdict::EdgeInconclusive) inconclusive.push_back(comb);
            int i = q - 1;
            while (i >= 0 && comb[i] == n - q + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < q; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    NerveResult out{Hypergraph::from_indices(q, std::move(labels), std::move(edges)),
                    std::move(inconclusive)};
    return out;
}

}  // namespace

NerveResult build_nerve(std::span<const GeomObject> family, const NerveSpec& spec,
                        const Limits& limits) {
    return build_with_cache(family, spec, limits, nullptr);
}

PqResult pq_condition(const Hypergraph& h, int p, const Limits& limits) {
    if (p < 1) throw PreconditionError("pq_condition requires p >= 1");
    PqResult out;
    out.independence = independence_number(h, limits);
    out.holds = out.independence.value < p;
    if (!out.holds)
        out.violating.assign(out.independence.witness.begin(),
                             out.independence.witness.begin() + p);
    return out;
}

std::vector<GrowthRow> truncation_growth_report(std::span<const GeomObject> family,
                                                const NerveSpec& spec,
                                                std::span<const int> prefixes,
                                                const Limits& limits) {
    std::map<std::vector<int>, Verdict> cache;
    std::vector<GrowthRow> rows;
    for (int prefix : prefixes) {
        if (prefix < 0 || prefix > static_cast<int>(family.size()))
            throw PreconditionError("truncation prefix out of range");
        auto sub = family.first(static_cast<std::size_t>(prefix));
        NerveResult nerve = build_with_cache(sub, spec, limits, &cache);
        SetWitness ind = independence_number(nerve.hypergraph, limits);
        rows.push_back({prefix, ind.value});
    }
    return rows;
}

}  // namespace helly
