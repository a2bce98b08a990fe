#include "helly/geometry.hpp"

#include "helly/errors.hpp"
#include "helly/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

namespace helly {

namespace {

void require_same_dim(int a, int b) {
    if (a != b) throw PreconditionError("dimension mismatch");
}

}  // namespace

void validate(const Box& b) {
    if (b.lo.size() != b.hi.size() || b.lo.empty())
        throw SchemaError("box lo/hi dimension mismatch");
    for (std::size_t j = 0; j < b.lo.size(); ++j)
        if (b.lo[j] > b.hi[j]) throw SchemaError("box has lo > hi");
}

void validate(const VPolytope& p) {
    if (p.points.empty()) throw SchemaError("polytope needs at least one point");
    for (const auto& pt : p.points)
        if (static_cast<int>(pt.size()) != p.dim())
            throw SchemaError("polytope points have mixed dimensions");
}

void validate(const Ball& b) {
    if (b.center.empty()) throw SchemaError("ball center is empty");
    if (b.radius < 0) throw SchemaError("ball has negative radius");
}

void validate(const AxisFlat& f) {
    if (f.dim <= 0) throw SchemaError("axis flat has nonpositive dimension");
    for (const auto& [j, v] : f.fixed) {
        (void)v;
        if (j < 0 || j >= f.dim) throw SchemaError("axis flat fixes an out-of-range coordinate");
    }
    if (static_cast<int>(f.fixed.size()) > f.dim)
        throw SchemaError("axis flat fixes more coordinates than the dimension");
}

int dim_of(const GeomObject& g) {
    return std::visit([](const auto& o) { return o.dim(); }, g);
}

bool Box::contains(const Point& p) const {
    if (p.size() != lo.size()) throw PreconditionError("dimension mismatch");
    for (std::size_t j = 0; j < lo.size(); ++j)
        if (p[j] < lo[j] || p[j] > hi[j]) return false;
    return true;
}

bool boxes_intersect(std::span<const Box> boxes) {
    if (boxes.empty()) throw PreconditionError("boxes_intersect needs at least one box");
    int d = boxes.front().dim();
    for (const auto& b : boxes) require_same_dim(d, b.dim());
    for (int j = 0; j < d; ++j) {
        Rat lo = boxes.front().lo[j];
        Rat hi = boxes.front().hi[j];
        for (const auto& b : boxes.subspan(1)) {
            if (b.lo[j] > lo) lo = b.lo[j];
            if (b.hi[j] < hi) hi = b.hi[j];
        }
        if (lo > hi) return false;
    }
    return true;
}

bool axisflat_stabs_box(const AxisFlat& f, const Box& b) {
    require_same_dim(f.dim, b.dim());
    for (const auto& [j, value] : f.fixed)
        if (value < b.lo[j] || value > b.hi[j]) return false;
    return true;
}

std::optional<AxisFlat> axisflat_transversal(std::span<const Box> boxes, int k) {
    if (boxes.empty()) throw PreconditionError("axisflat_transversal needs at least one box");
    int d = boxes.front().dim();
    for (const auto& b : boxes) require_same_dim(d, b.dim());
    if (k < 0 || k >= d) throw PreconditionError("axisflat_transversal requires 0 <= k < d");
    int fix = d - k;

    // Per coordinate: do all projections overlap, and if so at which max-lo value?
    std::vector<char> ok(d, 0);
    std::vector<Rat> at(d);
    for (int j = 0; j < d; ++j) {
        Rat lo = boxes.front().lo[j];
        Rat hi = boxes.front().hi[j];
        for (const auto& b : boxes.subspan(1)) {
            if (b.lo[j] > lo) lo = b.lo[j];
            if (b.hi[j] < hi) hi = b.hi[j];
        }
        if (lo <= hi) {
            ok[j] = 1;
            at[j] = lo;
        }
    }
    // Lexicographically least (d-k)-subset of usable coordinates.
    AxisFlat f;
    f.dim = d;
    for (int j = 0; j < d && static_cast<int>(f.fixed.size()) < fix; ++j)
        if (ok[j]) f.fixed.emplace(j, at[j]);
    if (static_cast<int>(f.fixed.size()) < fix) return std::nullopt;
    return f;
}

PolytopeMeet polytopes_intersect(std::span<const VPolytope> polys, const Limits& limits) {
    if (polys.empty()) throw PreconditionError("polytopes_intersect needs at least one polytope");
    int d = polys.front().dim();
    std::size_t total_vertices = 0;
    for (const auto& p : polys) {
        validate(p);
        require_same_dim(d, p.dim());
        total_vertices += p.points.size();
    }

    if (polys.size() == 1) return {true, polys.front().points.front()};

    // Variables: one convex weight per polytope vertex.
    std::vector<std::size_t> offset(polys.size());
    {
        std::size_t at = 0;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            offset[i] = at;
            at += polys[i].points.size();
        }
    }
    std::vector<LpConstraint> cons;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        LpConstraint c;
        c.coeffs.assign(total_vertices, Rat(0));
        for (std::size_t p = 0; p < polys[i].points.size(); ++p) c.coeffs[offset[i] + p] = 1;
        c.rel = Rel::EQ;
        c.rhs = 1;
        cons.push_back(std::move(c));
    }
    for (std::size_t i = 1; i < polys.size(); ++i) {
        for (int j = 0; j < d; ++j) {
            LpConstraint c;
            c.coeffs.assign(total_vertices, Rat(0));
            for (std::size_t p = 0; p < polys[0].points.size(); ++p)
                c.coeffs[offset[0] + p] = polys[0].points[p][j];
            for (std::size_t p = 0; p < polys[i].points.size(); ++p)
                c.coeffs[offset[i] + p] -= polys[i].points[p][j];
            c.rel = Rel::EQ;
            c.rhs = 0;
            cons.push_back(std::move(c));
        }
    }
    std::vector<Rat> zero(total_vertices, Rat(0));
    LpSolution sol = solve_lp(cons, zero, limits.enumeration * 4);
    if (sol.status != LpSolution::Status::Optimal) return {false, std::nullopt};

    Point witness(d, Rat(0));
    for (std::size_t p = 0; p < polys[0].points.size(); ++p)
        for (int j = 0; j < d; ++j) witness[j] += sol.x[offset[0] + p] * polys[0].points[p][j];
    return {true, witness};
}

bool point_in_polytope(const Point& p, const VPolytope& poly, const Limits& limits) {
    validate(poly);
    require_same_dim(static_cast<int>(p.size()), poly.dim());
    std::size_t m = poly.points.size();
    std::vector<LpConstraint> cons;
    LpConstraint norm;
    norm.coeffs.assign(m, Rat(1));
    norm.rel = Rel::EQ;
    norm.rhs = 1;
    cons.push_back(std::move(norm));
    for (int j = 0; j < poly.dim(); ++j) {
        LpConstraint c;
        c.coeffs.reserve(m);
        for (std::size_t i = 0; i < m; ++i) c.coeffs.push_back(poly.points[i][j]);
        c.rel = Rel::EQ;
        c.rhs = p[j];
        cons.push_back(std::move(c));
    }
    std::vector<Rat> zero(m, Rat(0));
    return solve_lp(cons, zero, limits.enumeration * 4).status == LpSolution::Status::Optimal;
}

namespace {

struct CoordRange {
    Rat lo;
    Rat hi;
};

std::vector<CoordRange> bounding_ranges(const GeomObject& g) {
    std::vector<CoordRange> out;
    if (const Box* b = std::get_if<Box>(&g)) {
        for (int j = 0; j < b->dim(); ++j) out.push_back({b->lo[j], b->hi[j]});
    } else if (const VPolytope* p = std::get_if<VPolytope>(&g)) {
        for (int j = 0; j < p->dim(); ++j) {
            Rat lo = p->points.front()[j];
            Rat hi = lo;
            for (const auto& pt : p->points) {
                if (pt[j] < lo) lo = pt[j];
                if (pt[j] > hi) hi = pt[j];
            }
            out.push_back({lo, hi});
        }
    } else {
        const Ball& ball = std::get<Ball>(g);
        for (int j = 0; j < ball.dim(); ++j)
            out.push_back({ball.center[j] - ball.radius, ball.center[j] + ball.radius});
    }
    return out;
}

bool object_contains_integer_point(const GeomObject& g, const std::vector<BigInt>& p,
                                   const Limits& limits) {
    Point q;
    q.reserve(p.size());
    for (const auto& v : p) q.push_back(Rat(v));
    if (const Box* b = std::get_if<Box>(&g)) return b->contains(q);
    if (const VPolytope* poly = std::get_if<VPolytope>(&g))
        return point_in_polytope(q, *poly, limits);
    const Ball& ball = std::get<Ball>(g);
    Rat dist2 = 0;
    for (std::size_t j = 0; j < q.size(); ++j) {
        Rat diff = q[j] - ball.center[j];
        dist2 += diff * diff;
    }
    return dist2 <= ball.radius * ball.radius;
}

}  // namespace

std::optional<std::vector<BigInt>> lattice_point_in_intersection(
    std::span<const GeomObject> objects, const Limits& limits) {
    if (objects.empty())
        throw PreconditionError("lattice_point_in_intersection needs at least one object");
    int d = dim_of(objects.front());
    for (const auto& g : objects) require_same_dim(d, dim_of(g));

    std::vector<BigInt> lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
        Rat rlo, rhi;
        bool first = true;
        for (const auto& g : objects) {
            auto ranges = bounding_ranges(g);
            if (first) {
                rlo = ranges[j].lo;
                rhi = ranges[j].hi;
                first = false;
            } else {
                if (ranges[j].lo > rlo) rlo = ranges[j].lo;
                if (ranges[j].hi < rhi) rhi = ranges[j].hi;
            }
        }
        if (rlo > rhi) return std::nullopt;
        lo[j] = ceil_rat(rlo);
        hi[j] = floor_rat(rhi);
        if (lo[j] > hi[j]) return std::nullopt;
    }
    BigInt count = 1;
    for (int j = 0; j < d; ++j) count *= hi[j] - lo[j] + 1;
    if (count > limits.enumeration)
        throw LimitError("lattice enumeration exceeds cap", count.convert_to<long long>(),
                         limits.enumeration);

    std::vector<BigInt> p = lo;
    while (true) {
        bool inside = true;
        for (const auto& g : objects)
            if (!object_contains_integer_point(g, p, limits)) {
                inside = false;
                break;
            }
        if (inside) return p;
        int j = d - 1;
        while (j >= 0 && p[j] == hi[j]) {
            p[j] = lo[j];
            --j;
        }
        if (j < 0) break;
        ++p[j];
    }
    return std::nullopt;
}

bool line_meets_polytope(const Line2& line, const VPolytope& poly) {
    if (poly.dim() != 2) throw PreconditionError("line predicates require dimension 2");
    Rat lo, hi;
    bool first = true;
    for (const auto& p : poly.points) {
        Rat v = line.nx * p[0] + line.ny * p[1];
        if (first) {
            lo = hi = v;
            first = false;
        } else {
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
    }
    return lo <= line.c && line.c <= hi;
}

std::optional<Line2> line_transversal_polygons(std::span<const VPolytope> polys) {
    if (polys.empty()) throw PreconditionError("line_transversal_polygons needs polygons");
    for (const auto& p : polys) {
        validate(p);
        if (p.dim() != 2) throw PreconditionError("line_transversal_polygons requires d = 2");
    }
    std::vector<Point> vertices;
    for (const auto& p : polys)
        for (const auto& v : p.points) vertices.push_back(v);

    auto feasible = [&](const Line2& line) {
        for (const auto& p : polys)
            if (!line_meets_polytope(line, p)) return false;
        return true;
    };

    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            Rat dx = vertices[b][0] - vertices[a][0];
            Rat dy = vertices[b][1] - vertices[a][1];
            if (dx == 0 && dy == 0) continue;
            Line2 line{-dy, dx, -dy * vertices[a][0] + dx * vertices[a][1]};
            if (feasible(line)) return line;
        }
    }
    for (const auto& v : vertices) {
        Line2 line{Rat(1), Rat(0), v[0]};
        if (feasible(line)) return line;
    }
    return std::nullopt;
}

bool kflat_stabs_ball(const AxisFlat& f, const Ball& ball) {
    require_same_dim(f.dim, ball.dim());
    Rat dist2 = 0;
    for (const auto& [j, value] : f.fixed) {
        Rat diff = value - ball.center[j];
        dist2 += diff * diff;
    }
    return dist2 <= ball.radius * ball.radius;
}

bool balls_intersect_pair(const Ball& a, const Ball& b) {
    require_same_dim(a.dim(), b.dim());
    Rat dist2 = 0;
    for (int j = 0; j < a.dim(); ++j) {
        Rat diff = a.center[j] - b.center[j];
        dist2 += diff * diff;
    }
    Rat rsum = a.radius + b.radius;
    return dist2 <= rsum * rsum;
}

namespace {

double ball_margin(std::span<const Ball> balls, const std::vector<double>& x) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& b : balls) {
        double dist2 = 0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            double diff = x[j] - to_double(b.center[j]);
            dist2 += diff * diff;
        }
        worst = std::max(worst, std::sqrt(dist2) - to_double(b.radius));
    }
    return worst;
}

double coordinate_scale(std::span<const Ball> balls) {
    double scale = 1.0;
    for (const auto& b : balls) {
        for (const auto& c : b.center) scale = std::max(scale, std::fabs(to_double(c)));
        scale = std::max(scale, std::fabs(to_double(b.radius)));
    }
    return scale;
}

NumericStatus classify(double value, double tol) {
    if (value <= -tol) return NumericStatus::Hit;
    if (value >= tol) return NumericStatus::Miss;
    return NumericStatus::Inconclusive;
}

}  // namespace

NumericTransversal ball_point_transversal(std::span<const Ball> balls) {
    if (balls.empty()) throw PreconditionError("ball_point_transversal needs at least one ball");
    int d = balls.front().dim();
    for (const auto& b : balls) require_same_dim(d, b.dim());
    if (d > 3) throw PreconditionError("ball_point_transversal supports d <= 3");

    std::vector<double> x(d, 0.0);
    for (const auto& b : balls)
        for (int j = 0; j < d; ++j) x[j] += to_double(b.center[j]) / static_cast<double>(balls.size());

    // Compass descent over the {-1,0,1}^d direction fan. g is convex, so
    // shrinking steps converge well past the acceptance tolerance.
    std::vector<std::vector<double>> dirs;
    std::vector<int> idx(d, -1);
    while (true) {
        bool nonzero = std::any_of(idx.begin(), idx.end(), [](int v) { return v != 0; });
        if (nonzero) dirs.emplace_back(idx.begin(), idx.end());
        int j = d - 1;
        while (j >= 0 && idx[j] == 1) idx[j--] = -1;
        if (j < 0) break;
        ++idx[j];
    }

    const double scale = coordinate_scale(balls);
    const double tol = 1e-9 * scale;
    double step = scale;
    double current = ball_margin(balls, x);
    std::vector<double> probe(d);
    while (step > tol * 1e-4) {
        bool improved = false;
        for (const auto& dir : dirs) {
            for (int j = 0; j < d; ++j) probe[j] = x[j] + step * dir[j];
            double v = ball_margin(balls, probe);
            if (v < current) {
                current = v;
                x = probe;
                improved = true;
                break;
            }
        }
        if (!improved) step *= 0.5;
    }

    NumericTransversal out;
    out.point = x;
    out.value = current;
    out.tolerance = tol;
    out.status = classify(current, tol);
    return out;
}

NumericTransversal line_transversal_balls(std::span<const Ball> balls) {
    if (balls.empty()) throw PreconditionError("line_transversal_balls needs at least one ball");
    for (const auto& b : balls) require_same_dim(2, b.dim());

    // For direction angle theta with unit normal n, a transversal line exists
    // iff max(c.n - r) <= min(c.n + r); h(theta) is that gap.
    auto gap = [&](double theta) {
        double nx = std::cos(theta), ny = std::sin(theta);
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        for (const auto& b : balls) {
            double proj = nx * to_double(b.center[0]) + ny * to_double(b.center[1]);
            double r = to_double(b.radius);
            lo = std::max(lo, proj - r);
            hi = std::min(hi, proj + r);
        }
        return lo - hi;
    };

    const int samples = 1440;
    const double pi = std::acos(-1.0);
    double best_theta = 0.0;
    double best = gap(0.0);
    for (int i = 1; i < samples; ++i) {
        double theta = pi * static_cast<double>(i) / samples;
        double v = gap(theta);
        if (v < best) {
            best = v;
            best_theta = theta;
        }
    }
    // Golden-section polish around the best sample.
    double a = best_theta - pi / samples, b = best_theta + pi / samples;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), e = a + gr * (b - a);
    for (int it = 0; it < 200; ++it) {
        if (gap(c) < gap(e)) b = e; else a = c;
        c = b - gr * (b - a);
        e = a + gr * (b - a);
    }
    double theta = (a + b) / 2;
    double value = gap(theta);
    if (best < value) {
        theta = best_theta;
        value = best;
    }

    const double scale = coordinate_scale(balls);
    const double tol = 1e-9 * scale;

    double nx = std::cos(theta), ny = std::sin(theta);
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (const auto& ball : balls) {
        double proj = nx * to_double(ball.center[0]) + ny * to_double(ball.center[1]);
        double r = to_double(ball.radius);
        lo = std::max(lo, proj - r);
        hi = std::min(hi, proj + r);
    }

    NumericTransversal out;
    out.point = {theta, (lo + hi) / 2};
    out.value = value;
    out.tolerance = tol;
    out.status = classify(value, tol);
    return out;
}

}  // namespace helly
