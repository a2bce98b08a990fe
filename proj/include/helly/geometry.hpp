#pragma once

#include "helly/limits.hpp"
#include "helly/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace helly {

using Point = std::vector<Rat>;

// Axis-parallel box [lo, hi], possibly degenerate (lo[j] == hi[j] models points
// and segments used by the counterexample generators).
struct Box {
    Point lo;
    Point hi;
    int dim() const { return static_cast<int>(lo.size()); }
    bool contains(const Point& p) const;
};

// Convex hull of a nonempty point list.
struct VPolytope {
    std::vector<Point> points;
    int dim() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }
};

struct Ball {
    Point center;
    Rat radius;
    int dim() const { return static_cast<int>(center.size()); }
};

// Axis-parallel k-flat in R^d: fixes d-k coordinates, k = dim - |fixed|.
struct AxisFlat {
    int dim = 0;
    std::map<int, Rat> fixed;
    int k() const { return dim - static_cast<int>(fixed.size()); }
};

using GeomObject = std::variant<Box, VPolytope, Ball>;

void validate(const Box& b);
void validate(const VPolytope& p);
void validate(const Ball& b);
void validate(const AxisFlat& f);
int dim_of(const GeomObject& g);

// --- exact predicates -------------------------------------------------------

// max lo <= min hi per coordinate.
bool boxes_intersect(std::span<const Box> boxes);

bool axisflat_stabs_box(const AxisFlat& f, const Box& b);

// Some (d-k)-subset of coordinates where all boxes' projections share a point;
// the returned flat fixes each such coordinate at max_i lo_i[j].
std::optional<AxisFlat> axisflat_transversal(std::span<const Box> boxes, int k);

struct PolytopeMeet {
    bool intersects = false;
    std::optional<Point> witness;
};

// Exact rational LP feasibility: one convex-weight block per polytope, shared
// coordinates eliminated by pairwise equality rows.
PolytopeMeet polytopes_intersect(std::span<const VPolytope> polys,
                                 const Limits& limits = {});

// Exact membership p in conv(points) via LP feasibility.
bool point_in_polytope(const Point& p, const VPolytope& poly, const Limits& limits = {});

// Integer point in the common intersection, by enumerating the integer points
// of the intersection of bounding boxes and testing exact membership.
std::optional<std::vector<BigInt>> lattice_point_in_intersection(
    std::span<const GeomObject> objects, const Limits& limits = {});

// Line {p : nx*x + ny*y = c} in the plane.
struct Line2 {
    Rat nx;
    Rat ny;
    Rat c;
};

bool line_meets_polytope(const Line2& line, const VPolytope& poly);

// Candidate enumeration: every line through two polygon vertices across the
// family, plus vertical lines through each vertex; first feasible wins.
std::optional<Line2> line_transversal_polygons(std::span<const VPolytope> polys);

// sum over fixed coordinates of (f_j - c_j)^2 <= r^2, exact.
bool kflat_stabs_ball(const AxisFlat& f, const Ball& ball);

// Balls intersect pairwise iff |c1-c2|^2 <= (r1+r2)^2; exact.
bool balls_intersect_pair(const Ball& a, const Ball& b);

// --- numeric predicates (balls vs non-axis-parallel transversals) -----------

enum class NumericStatus { Hit, Miss, Inconclusive };

struct NumericTransversal {
    NumericStatus status = NumericStatus::Miss;
    std::vector<double> point;  // witness point (or [theta, offset] for lines)
    double value = 0.0;         // optimized max-margin g(x*)
    double tolerance = 0.0;
    bool accepted() const { return status != NumericStatus::Miss; }
};

// Minimizes g(x) = max_i (|x - c_i| - r_i) by deterministic compass descent;
// d <= 3. Hit when g <= -tol, Miss when g >= tol, Inconclusive in between.
NumericTransversal ball_point_transversal(std::span<const Ball> balls);

// Line transversal of disks in the plane via angular sweep plus refinement.
NumericTransversal line_transversal_balls(std::span<const Ball> balls);

}  // namespace helly
