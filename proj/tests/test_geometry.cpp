#include "helly/geometry.hpp"

#include "helly/errors.hpp"
#include "helly/generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace helly;

namespace {

Rat r(long long num, long long den = 1) { return Rat(num, den); }

VPolytope triangle(Point a, Point b, Point c) { return VPolytope{{a, b, c}}; }

}  // namespace

TEST_CASE("boxes_intersect") {
    Box unit{{r(0), r(0)}, {r(1), r(1)}};
    Box far{{r(2), r(0)}, {r(3), r(1)}};
    CHECK_FALSE(boxes_intersect(std::vector<Box>{unit, far}));
    CHECK(boxes_intersect(std::vector<Box>{unit}));
    Box a{{r(0), r(0)}, {r(2), r(2)}};
    Box b{{r(1), r(1)}, {r(3), r(3)}};
    Box c{{r(3, 2), r(3, 2)}, {r(5, 2), r(5, 2)}};
    CHECK(boxes_intersect(std::vector<Box>{a, b, c}));
    CHECK_THROWS_AS(boxes_intersect(std::vector<Box>{unit, Box{{r(0)}, {r(1)}}}),
                    PreconditionError);

    SUBCASE("pairwise intersection gives a common point at the max-lo corner") {
        Rng rng(21);
        for (int trial = 0; trial < 50; ++trial) {
            auto boxes = gen_random_boxes(4, 2, rng);
            bool pairwise = true;
            for (std::size_t i = 0; i < boxes.size() && pairwise; ++i)
                for (std::size_t j = i + 1; j < boxes.size() && pairwise; ++j)
                    pairwise = boxes_intersect(std::vector<Box>{boxes[i], boxes[j]});
            if (!pairwise) continue;
            Point corner(2);
            for (int jj = 0; jj < 2; ++jj) {
                corner[jj] = boxes[0].lo[jj];
                for (const auto& bb : boxes) corner[jj] = std::max(corner[jj], bb.lo[jj]);
            }
            bool all = true;
            for (const auto& bb : boxes) all = all && bb.contains(corner);
            CHECK(all);
            CHECK(boxes_intersect(boxes));
        }
    }
}

TEST_CASE("axisflat_stabs_box") {
    Box unit{{r(0), r(0)}, {r(1), r(1)}};
    AxisFlat inside{2, {{1, r(3, 4)}}};
    AxisFlat outside{2, {{1, r(2)}}};
    CHECK(axisflat_stabs_box(inside, unit));
    CHECK_FALSE(axisflat_stabs_box(outside, unit));
    Box b3{{r(-1), r(0), r(4)}, {r(1), r(9), r(6)}};
    AxisFlat line3{3, {{0, r(0)}, {2, r(5)}}};
    CHECK(axisflat_stabs_box(line3, b3));
}

TEST_CASE("axisflat_transversal") {
    SUBCASE("overlapping y-projections give a horizontal line") {
        Box a{{r(0), r(0)}, {r(1), r(1)}};
        Box b{{r(2), r(1, 2)}, {r(3), r(2)}};
        auto flat = axisflat_transversal(std::vector<Box>{a, b}, 1);
        REQUIRE(flat.has_value());
        CHECK(flat->fixed.size() == 1);
        CHECK(flat->fixed.count(1) == 1);
        CHECK(flat->fixed.at(1) == r(1, 2));
        CHECK(axisflat_stabs_box(*flat, a));
        CHECK(axisflat_stabs_box(*flat, b));
    }
    SUBCASE("disjoint intervals admit no point transversal") {
        Rng rng(3);
        auto intervals = gen_disjoint_intervals(3, rng);
        CHECK_FALSE(axisflat_transversal(intervals, 0).has_value());
    }
    SUBCASE("single box always stabbed") {
        Box b{{r(0), r(0), r(0)}, {r(1), r(1), r(1)}};
        for (int k = 0; k < 3; ++k) CHECK(axisflat_transversal(std::vector<Box>{b}, k).has_value());
    }
    SUBCASE("returned flat re-verified against every box") {
        Rng rng(22);
        for (int trial = 0; trial < 60; ++trial) {
            auto boxes = gen_random_boxes(5, 2, rng);
            for (int k = 0; k < 2; ++k) {
                auto flat = axisflat_transversal(boxes, k);
                if (!flat) continue;
                for (const auto& b : boxes) CHECK(axisflat_stabs_box(*flat, b));
            }
        }
    }
}

TEST_CASE("polytopes_intersect") {
    SUBCASE("three pairwise-intersecting intervals share a point") {
        VPolytope i1{{{r(0)}, {r(2)}}};
        VPolytope i2{{{r(1)}, {r(3)}}};
        VPolytope i3{{{r(3, 2)}, {r(5, 2)}}};
        CHECK(polytopes_intersect(std::vector<VPolytope>{i1, i2, i3}).intersects);
    }
    SUBCASE("disjoint segments in the plane") {
        VPolytope s1{{{r(0), r(0)}, {r(1), r(0)}}};
        VPolytope s2{{{r(0), r(1)}, {r(1), r(1)}}};
        CHECK_FALSE(polytopes_intersect(std::vector<VPolytope>{s1, s2}).intersects);
    }
    SUBCASE("three triangles with common point (1,1), certified") {
        auto t1 = triangle({r(0), r(0)}, {r(2), r(0)}, {r(0), r(2)});
        auto t2 = triangle({r(1), r(1)}, {r(3), r(1)}, {r(1), r(3)});
        auto t3 = triangle({r(0), r(2)}, {r(2), r(0)}, {r(2), r(2)});
        auto meet = polytopes_intersect(std::vector<VPolytope>{t1, t2, t3});
        REQUIRE(meet.intersects);
        REQUIRE(meet.witness.has_value());
        // certify the witness with the orientation-based membership oracle
        CHECK(oracle::point_in_convex_polygon(*meet.witness, t1));
        CHECK(oracle::point_in_convex_polygon(*meet.witness, t2));
        CHECK(oracle::point_in_convex_polygon(*meet.witness, t3));
        // and the hand point (1,1) is indeed inside all three
        Point p{r(1), r(1)};
        CHECK(oracle::point_in_convex_polygon(p, t1));
        CHECK(oracle::point_in_convex_polygon(p, t2));
        CHECK(oracle::point_in_convex_polygon(p, t3));
    }
    SUBCASE("LP membership agrees with the orientation oracle") {
        Rng rng(23);
        for (int trial = 0; trial < 40; ++trial) {
            auto polys = gen_random_polytopes(1, 2, 4, rng);
            Point p{rng.rational(0, 12, 4), rng.rational(0, 12, 4)};
            CHECK(point_in_polytope(p, polys[0]) ==
                  oracle::point_in_convex_polygon(p, polys[0]));
        }
    }
}

TEST_CASE("lattice_point_in_intersection") {
    SUBCASE("two boxes around (1,1)") {
        GeomObject a = Box{{r(1, 2), r(1, 2)}, {r(3, 2), r(3, 2)}};
        GeomObject b = Box{{r(9, 10), r(9, 10)}, {r(21, 10), r(21, 10)}};
        auto p = lattice_point_in_intersection(std::vector<GeomObject>{a, b});
        REQUIRE(p.has_value());
        CHECK((*p)[0] == 1);
        CHECK((*p)[1] == 1);
    }
    SUBCASE("open-cell segment has no integer point") {
        GeomObject seg = VPolytope{{{r(1, 4), r(1, 4)}, {r(3, 4), r(3, 4)}}};
        CHECK_FALSE(lattice_point_in_intersection(std::vector<GeomObject>{seg}).has_value());
    }
    SUBCASE("unit box contains the origin") {
        GeomObject b = Box{{r(0), r(0), r(0)}, {r(1), r(1), r(1)}};
        auto p = lattice_point_in_intersection(std::vector<GeomObject>{b});
        REQUIRE(p.has_value());
        for (const auto& c : *p) CHECK(c == 0);
    }
    SUBCASE("membership of the result is exact in every object") {
        Rng rng(24);
        for (int trial = 0; trial < 30; ++trial) {
            auto boxes = gen_lattice_hub_boxes(3, 2, rng);
            std::vector<GeomObject> objs(boxes.begin(), boxes.end());
            auto p = lattice_point_in_intersection(objs);
            REQUIRE(p.has_value());
            Point q{Rat((*p)[0]), Rat((*p)[1])};
            for (const auto& b : boxes) CHECK(b.contains(q));
        }
    }
    SUBCASE("enumeration limit error") {
        GeomObject big = Box{{r(0), r(0)}, {r(100000), r(100000)}};
        CHECK_THROWS_AS(lattice_point_in_intersection(std::vector<GeomObject>{big}),
                        LimitError);
    }
}

TEST_CASE("line transversals of polygons") {
    SUBCASE("three unit-square translates along x") {
        std::vector<VPolytope> squares;
        for (int i = 0; i < 3; ++i)
            squares.push_back(VPolytope{{{r(3 * i), r(0)},
                                         {r(3 * i + 1), r(0)},
                                         {r(3 * i + 1), r(1)},
                                         {r(3 * i), r(1)}}});
        auto line = line_transversal_polygons(squares);
        REQUIRE(line.has_value());
        for (const auto& s : squares) CHECK(line_meets_polytope(*line, s));
    }
    SUBCASE("staircase without a common transversal") {
        // any line through the outer segments crosses y = 1 inside [0, 1],
        // far from the middle segment's window [10, 11]
        std::vector<VPolytope> steps;
        steps.push_back(VPolytope{{{r(0), r(0)}, {r(1), r(0)}}});
        steps.push_back(VPolytope{{{r(10), r(1)}, {r(11), r(1)}}});
        steps.push_back(VPolytope{{{r(0), r(2)}, {r(1), r(2)}}});
        // pairwise transversals exist (a line through one point of each)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                CHECK(line_transversal_polygons(
                          std::vector<VPolytope>{steps[i], steps[j]})
                          .has_value());
        CHECK_FALSE(line_transversal_polygons(steps).has_value());
    }
    SUBCASE("single polygon") {
        auto t = triangle({r(0), r(0)}, {r(1), r(0)}, {r(0), r(1)});
        CHECK(line_transversal_polygons(std::vector<VPolytope>{t}).has_value());
        VPolytope point{{{r(5), r(7)}}};
        CHECK(line_transversal_polygons(std::vector<VPolytope>{point}).has_value());
    }
    SUBCASE("agrees with the dense angular sweep on random instances") {
        Rng rng(25);
        int disagreements = 0;
        for (int trial = 0; trial < 200; ++trial) {
            int n = 3 + static_cast<int>(rng.below(3));
            auto polys = gen_random_polytopes(n, 2, 3, rng);
            bool exact = line_transversal_polygons(polys).has_value();
            double gap = oracle::sweep_line_gap(polys);
            // tolerance band absorbs the sweep discretization
            if (exact && gap > 0.05) ++disagreements;
            if (!exact && gap < -0.05) ++disagreements;
        }
        CHECK(disagreements == 0);
    }
    SUBCASE("dimension must be 2") {
        VPolytope seg1{{{r(0)}, {r(1)}}};
        CHECK_THROWS_AS(line_transversal_polygons(std::vector<VPolytope>{seg1}),
                        PreconditionError);
    }
}

TEST_CASE("kflat_stabs_ball") {
    Ball b1{{r(5), r(3)}, r(3)};
    AxisFlat x_axis{2, {{1, r(0)}}};
    CHECK(kflat_stabs_ball(x_axis, b1));  // distance exactly 3
    Ball b2{{r(0), r(4)}, r(3)};
    CHECK_FALSE(kflat_stabs_ball(x_axis, b2));
    Ball b3{{r(2), r(7)}, r(0)};
    AxisFlat at_center{2, {{0, r(2)}, {1, r(7)}}};
    CHECK(kflat_stabs_ball(at_center, b3));
}

TEST_CASE("ball_point_transversal") {
    SUBCASE("two tangent disks") {
        std::vector<Ball> balls{{{r(0), r(0)}, r(1)}, {{r(2), r(0)}, r(1)}};
        auto res = ball_point_transversal(balls);
        CHECK(res.accepted());
        CHECK(std::abs(res.point[0] - 1.0) < 1e-6);
        CHECK(std::abs(res.point[1]) < 1e-6);
    }
    SUBCASE("gap of one unit") {
        std::vector<Ball> balls{{{r(0), r(0)}, r(1)}, {{r(3), r(0)}, r(1)}};
        auto res = ball_point_transversal(balls);
        CHECK(res.status == NumericStatus::Miss);
        CHECK(res.value > 0.4);
    }
    SUBCASE("three unit disks on an equilateral triangle of side 1") {
        // circumradius 1/sqrt(3) < 1
        std::vector<Ball> balls{{{r(0), r(0)}, r(1)},
                                {{r(1), r(0)}, r(1)},
                                {{r(1, 2), r(7, 8)}, r(1)}};
        auto res = ball_point_transversal(balls);
        CHECK(res.status == NumericStatus::Hit);
    }
    SUBCASE("dimension cap") {
        std::vector<Ball> balls{{{r(0), r(0), r(0), r(0)}, r(1)}};
        CHECK_THROWS_AS(ball_point_transversal(balls), PreconditionError);
    }
}

TEST_CASE("ball pair and line predicates") {
    Ball a{{r(0), r(0)}, r(1)};
    Ball b{{r(2), r(0)}, r(1)};
    Ball c{{r(3), r(0)}, r(1)};
    CHECK(balls_intersect_pair(a, b));
    CHECK_FALSE(balls_intersect_pair(a, c));

    SUBCASE("collinear centers admit a line transversal") {
        std::vector<Ball> balls{{{r(0), r(0)}, r(1)},
                                {{r(5), r(0)}, r(1)},
                                {{r(10), r(0)}, r(1)}};
        CHECK(line_transversal_balls(balls).accepted());
    }
    SUBCASE("spread-out disks admit none") {
        std::vector<Ball> balls{{{r(0), r(0)}, r(1)},
                                {{r(20), r(0)}, r(1)},
                                {{r(10), r(30)}, r(1)}};
        auto res = line_transversal_balls(balls);
        CHECK(res.status == NumericStatus::Miss);
    }
}

TEST_CASE("degenerate boxes model points and segments") {
    Box point{{r(1), r(1)}, {r(1), r(1)}};
    Box seg{{r(0), r(1)}, {r(2), r(1)}};
    CHECK(boxes_intersect(std::vector<Box>{point, seg}));
    CHECK_THROWS_AS(validate(Box{{r(1)}, {r(0)}}), SchemaError);
}

TEST_CASE("exact predicates repeat bit-identically") {
    Rng rng(26);
    auto boxes = gen_random_boxes(6, 2, rng);
    bool first = boxes_intersect(boxes);
    for (int i = 0; i < 5; ++i) CHECK(boxes_intersect(boxes) == first);
    auto flat = axisflat_transversal(boxes, 1);
    for (int i = 0; i < 5; ++i)
        CHECK(axisflat_transversal(boxes, 1).has_value() == flat.has_value());
}
