#include <numeric>

#include "corpus.hpp"
#include "oracles.hpp"
#include "curveb/lattice.hpp"
#include "doctest.h"

using namespace curveb;

using testing::brute_class;
using testing::brute_triangle;

TEST_CASE("hull examples") {
    auto c = convex_hull({{0, 0}, {2, 0}, {0, 2}});
    CHECK(c.hull == std::vector<LatticePoint>{{0, 0}, {0, 2}, {2, 0}});
    REQUIRE(c.segments.size() == 6);
    std::vector<std::pair<LatticePoint, LatticePoint>> want = {{{0, 0}, {0, 1}}, {{0, 1}, {0, 2}}, {{0, 2}, {1, 1}},
                                                               {{1, 1}, {2, 0}}, {{2, 0}, {1, 0}}, {{1, 0}, {0, 0}}};
    for (size_t k = 0; k < want.size(); ++k) {
        CHECK(c.segments[k].from == want[k].first);
        CHECK(c.segments[k].to == want[k].second);
    }
    CHECK(c.interior.empty());

    auto seg = convex_hull({{0, 1}, {1, 0}});
    CHECK(seg.shape == HullShape::Segment);
    CHECK(seg.interior.empty());
    CHECK(seg.segments.size() == 2);

    CHECK(convex_hull({{0, 0}, {5, 0}, {0, 2}}).interior == std::set<LatticePoint>{{1, 1}, {2, 1}});
    CHECK(convex_hull({{0, 0}, {3, 0}, {0, 4}}).interior == std::set<LatticePoint>{{1, 1}, {1, 2}, {2, 1}});
    CHECK(convex_hull({{0, 0}, {2, 0}, {2, 2}, {0, 2}}).segments.size() == 8);
    CHECK(convex_hull({{3, 3}}).shape == HullShape::Point);
    CHECK_THROWS_AS(convex_hull({}), InputError);
    CHECK_THROWS_AS(minimal_boundary_segments(convex_hull({{3, 3}})), InputError);
}

TEST_CASE("support lines") {
    auto c = convex_hull({{0, 0}, {2, 0}, {0, 2}});
    auto l = support_line(c, 1, 1);
    CHECK(l.m == 2);
    CHECK(l.touching == std::set<LatticePoint>{{2, 0}, {0, 2}});
    auto l2 = support_line(c, -1, 0);
    CHECK(l2.m == 0);
    CHECK(l2.touching == std::set<LatticePoint>{{0, 0}, {0, 2}});
    CHECK_THROWS_AS(support_line(c, 0, 0), InputError);
}

TEST_CASE("point class examples") {
    auto c = convex_hull({{0, 0}, {2, 0}, {0, 2}});
    CHECK(point_class(c, 1, 1) == PointClass::Boundary);
    CHECK(point_class(c, 1, 0) == PointClass::Boundary);
    CHECK(point_class(c, 3, 3) == PointClass::Exterior);
}

TEST_CASE("triangle examples") {
    CHECK(triangle_lattice_points({2, 0}, {0, 2}, {2, 2}) ==
          std::set<LatticePoint>{{2, 0}, {0, 2}, {2, 2}, {1, 1}, {1, 2}, {2, 1}});
    CHECK(triangle_lattice_points({0, 0}, {0, 0}, {0, 0}) == std::set<LatticePoint>{{0, 0}});
    CHECK(triangle_lattice_points({3, 0}, {0, 4}, {3, 4}) == brute_triangle({3, 0}, {0, 4}, {3, 4}));
}

TEST_CASE("randomized polygon invariants") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        auto pts = testing::random_points(rng, 3 + t % 8, -6, 6);
        auto poly = convex_hull(pts);
        // Every support point inside or on the hull.
        for (const auto& p : pts) CHECK(point_class(poly, p.i, p.j) != PointClass::Exterior);
        // Strictly convex clockwise turns.
        if (poly.shape == HullShape::Polygon) {
            size_t n = poly.hull.size();
            for (size_t k = 0; k < n; ++k) CHECK(cross(poly.hull[k], poly.hull[(k + 1) % n], poly.hull[(k + 2) % n]) < 0);
            CHECK(poly.hull.front() == *std::min_element(poly.hull.begin(), poly.hull.end()));
        }
        // Segments: minimal, Bezout, chained, right-hand interior.
        if (poly.shape != HullShape::Point) {
            for (size_t k = 0; k < poly.segments.size(); ++k) {
                const auto& s = poly.segments[k];
                CHECK(std::gcd(std::abs(s.di()), std::abs(s.dj())) == 1);
                CHECK(s.beta * s.dj() + s.beta_t * (s.from.i - s.to.i) == 1);
                CHECK(s.to == poly.segments[(k + 1) % poly.segments.size()].from);
                for (const auto& p : pts) CHECK(cross(s.from, s.to, p) <= 0);
            }
            // Segment count equals the number of boundary lattice points.
            if (poly.shape == HullShape::Polygon)
                CHECK(static_cast<long>(poly.segments.size()) == boundary_lattice_count(poly));
        }
        // Brute-force classification over the bounding box.
        std::set<LatticePoint> interior;
        long boundary = 0;
        for (int i = -8; i <= 8; ++i)
            for (int j = -8; j <= 8; ++j) {
                PointClass want = brute_class(pts, {i, j});
                CHECK(point_class(poly, i, j) == want);
                if (want == PointClass::Interior) interior.insert({i, j});
                if (want == PointClass::Boundary) ++boundary;
            }
        CHECK(poly.interior == interior);
        // Pick: 2A = 2I + B - 2.
        if (poly.shape == HullShape::Polygon) {
            CHECK(boundary_lattice_count(poly) == boundary);
            CHECK(twice_area(poly) == 2 * static_cast<long>(interior.size()) + boundary - 2);
        }
    }
}

TEST_CASE("randomized triangles against a bounding-box scan") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-10, 10);
    for (int t = 0; t < 100; ++t) {
        LatticePoint a{d(rng), d(rng)}, b{d(rng), d(rng)}, c{d(rng), d(rng)};
        if (t % 10 == 0) c = LatticePoint{2 * b.i - a.i, 2 * b.j - a.j};  // collinear case
        CHECK(triangle_lattice_points(a, b, c) == brute_triangle(a, b, c));
    }
}
