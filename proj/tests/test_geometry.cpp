#include "beacon/geometry.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <set>

using namespace beacon;

namespace {

std::vector<Point> square(long s) { return {Point(0, 0), Point(s, 0), Point(s, s), Point(0, s)}; }

std::vector<Point> l_shape() {
    return {Point(0, 0), Point(4, 0), Point(4, 2), Point(2, 2), Point(2, 4), Point(0, 4)};
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST(Polygon, SquareValidates) {
    OrthoPolygon p = validate_polygon(square(4));
    EXPECT_EQ(p.size(), 4u);
    EXPECT_EQ(p.reflex_count(), 0u);
    EXPECT_EQ(p.signed_area_twice(), 32);
}

TEST(Polygon, ClockwiseInputIsReoriented) {
    std::vector<Point> cw = l_shape();
    std::reverse(cw.begin(), cw.end());
    OrthoPolygon p = validate_polygon(cw);
    EXPECT_GT(sgn(p.signed_area_twice()), 0);
    EXPECT_EQ(p.reflex_count(), 1u);
}

TEST(Polygon, ReflexVertexOfLShape) {
    OrthoPolygon p = validate_polygon(l_shape());
    auto i = p.vertex_index(Point(2, 2));
    ASSERT_TRUE(i.has_value());
    EXPECT_TRUE(p.is_reflex(*i));
    for (size_t k = 0; k < p.size(); ++k)
        if (k != *i) EXPECT_FALSE(p.is_reflex(k));
}

TEST(Polygon, RejectsBadInput) {
    EXPECT_EQ(code_of([] { validate_polygon({Point(0, 0), Point(1, 0), Point(1, 1)}); }), ErrorCode::TooFewVertices);
    EXPECT_EQ(code_of([] { validate_polygon({Point(0, 0), Point(2, 0), Point(2, 2), Point(1, 3)}); }),
              ErrorCode::NotOrthogonal);
    // Consecutive collinear edges do not alternate.
    EXPECT_EQ(code_of([] { validate_polygon({Point(0, 0), Point(1, 0), Point(2, 0), Point(2, 2), Point(0, 2)}); }),
              ErrorCode::NotOrthogonal);
    // Bow-tie made of axis-parallel edges.
    EXPECT_EQ(code_of([] {
                  validate_polygon({Point(0, 0), Point(4, 0), Point(4, 2), Point(1, 2), Point(1, -1), Point(3, -1),
                                    Point(3, 3), Point(0, 3)});
              }),
              ErrorCode::NotSimple);
    // U-shape whose two arms end at the same height.
    EXPECT_EQ(code_of([] {
                  validate_polygon({Point(0, 0), Point(6, 0), Point(6, 4), Point(4, 4), Point(4, 2), Point(2, 2),
                                    Point(2, 4), Point(0, 4)});
              }),
              ErrorCode::GeneralPositionViolation);
}

TEST(Polygon, OrthogonalCheckAllowsDegenerateInput) {
    std::vector<Point> u = {Point(0, 0), Point(6, 0), Point(6, 4), Point(4, 4),
                            Point(4, 2), Point(2, 2), Point(2, 4), Point(0, 4)};
    EXPECT_NO_THROW(validate_orthogonal(u));
}

TEST(Perturbation, RestoresGeneralPosition) {
    std::vector<Point> u = {Point(0, 0), Point(6, 0), Point(6, 4), Point(4, 4),
                            Point(4, 2), Point(2, 2), Point(2, 4), Point(0, 4)};
    std::vector<Point> moved = perturb_to_general_position(u);
    OrthoPolygon p = validate_polygon(moved);
    EXPECT_EQ(p.size(), 8u);
    // delta = 2 / (4 * 8); only the second arm top moves, inward.
    EXPECT_EQ(default_perturbation_delta(u), Coord(1, 16));
    std::set<Coord> ys;
    for (const Point& v : p.vertices()) ys.insert(v.y);
    EXPECT_TRUE(ys.count(Coord(4)) == 1);
    EXPECT_TRUE(ys.count(Coord(63, 16)) == 1);
}

TEST(Perturbation, GeneralPositionInputIsUnchanged) {
    EXPECT_EQ(perturb_to_general_position(l_shape()), l_shape());
}

TEST(Perturbation, OversizedDeltaFails) {
    std::vector<Point> u = {Point(0, 0), Point(6, 0), Point(6, 4), Point(4, 4),
                            Point(4, 2), Point(2, 2), Point(2, 4), Point(0, 4)};
    EXPECT_EQ(code_of([&] { perturb_with_delta(u, Coord(2)); }), ErrorCode::PerturbationFailure);
}

TEST(Epsilon, Square) {
    // Arrangement of a square: four corners and the center; nearest pair is corner-center.
    EXPECT_EQ(compute_epsilon(validate_polygon(square(4))), 1);
}

TEST(Epsilon, LShape) {
    OrthoPolygon p = validate_polygon(l_shape());
    EXPECT_EQ(compute_epsilon(p), compute_epsilon_reference(p));
    EXPECT_GT(sgn(compute_epsilon(p)), 0);
}

TEST(Epsilon, FastPathMatchesReference) {
    for (uint64_t s = 0; s < 24; ++s) {
        OrthoPolygon p = generate_random_orthogonal(6 + 2 * static_cast<int>(s % 7), s);
        EXPECT_EQ(compute_epsilon(p), compute_epsilon_reference(p)) << "seed " << s;
    }
}

TEST(Epsilon, HugeCoordinatesUseExactFallback) {
    Coord big = Coord(mpz_class(1) << 60);
    std::vector<Point> v = {Point(0, 0), Point(big, 0), Point(big, Coord(2)), Point(Coord(1), Coord(2)),
                            Point(Coord(1), big), Point(0, big)};
    OrthoPolygon p = validate_polygon(v);
    EXPECT_EQ(compute_epsilon(p), compute_epsilon_reference(p));
}

TEST(Containment, LShapeRegions) {
    OrthoPolygon p = validate_polygon(l_shape());
    EXPECT_EQ(contains_point(p, Point(1, 1)), Containment::Interior);
    EXPECT_EQ(contains_point(p, Point(3, 1)), Containment::Interior);
    EXPECT_EQ(contains_point(p, Point(3, 3)), Containment::Exterior);
    EXPECT_EQ(contains_point(p, Point(2, 2)), Containment::Boundary);
    EXPECT_EQ(contains_point(p, Point(3, 2)), Containment::Boundary);
    EXPECT_EQ(contains_point(p, Point(Coord(1, 2), Coord(4))), Containment::Boundary);
    EXPECT_EQ(contains_point(p, Point(-1, 1)), Containment::Exterior);
    EXPECT_EQ(contains_point(p, Point(5, 2)), Containment::Exterior);
}

TEST(Containment, AgreesWithWindingOracle) {
    OrthoPolygon p = generate_random_orthogonal(20, 11);
    Rect box = p.bounding_box();
    for (long i = -1; i <= 41; ++i)
        for (long j = -1; j <= 41; ++j) {
            Point q(Coord(box.lo.x + box.width() * Coord(i, 40)), Coord(box.lo.y + box.height() * Coord(j, 40)));
            EXPECT_EQ(contains_point(p, q), oracle::winding_contains(p.vertices(), q));
        }
}

TEST(Boundary, LocatesVerticesAndEdges) {
    OrthoPolygon p = validate_polygon(l_shape());
    auto v = locate_on_boundary(p, Point(2, 2));
    ASSERT_TRUE(v && v->vertex);
    EXPECT_EQ(p.vertex(*v->vertex), Point(2, 2));
    auto e = locate_on_boundary(p, Point(3, 0));
    ASSERT_TRUE(e && e->edge);
    EXPECT_TRUE(p.edge(*e->edge).horizontal);
    EXPECT_FALSE(locate_on_boundary(p, Point(1, 1)).has_value());
}

TEST(Hull, Kinds) {
    std::vector<Point> one = {Point(1, 1)};
    EXPECT_EQ(rectangular_hull(one).kind, HullKind::Point);
    std::vector<Point> h = {Point(0, 1), Point(3, 1)};
    EXPECT_EQ(rectangular_hull(h).kind, HullKind::HorizontalSegment);
    std::vector<Point> vseg = {Point(2, 0), Point(2, 5)};
    EXPECT_EQ(rectangular_hull(vseg).kind, HullKind::VerticalSegment);
    std::vector<Point> r = {Point(0, 0), Point(2, 5), Point(1, 1)};
    Hull hr = rectangular_hull(r);
    EXPECT_EQ(hr.kind, HullKind::Rectangle);
    EXPECT_EQ(hr.box.lo, Point(0, 0));
    EXPECT_EQ(hr.box.hi, Point(2, 5));
}

TEST(RectInPolygon, LShape) {
    OrthoPolygon p = validate_polygon(l_shape());
    EXPECT_TRUE(rect_in_polygon(p, Rect{Point(0, 0), Point(4, 2)}));
    EXPECT_TRUE(rect_in_polygon(p, Rect{Point(0, 0), Point(2, 4)}));
    EXPECT_FALSE(rect_in_polygon(p, Rect{Point(1, 1), Point(3, 3)}));
    EXPECT_TRUE(rect_in_polygon(p, Rect{Point(2, 2), Point(2, 2)}));
    EXPECT_TRUE(rect_in_polygon(p, Rect{Point(2, 0), Point(2, 4)}));
    EXPECT_FALSE(rect_in_polygon(p, Rect{Point(3, 1), Point(3, 3)}));
}

TEST(SegmentOnBoundary, LShape) {
    OrthoPolygon p = validate_polygon(l_shape());
    EXPECT_TRUE(segment_on_boundary(p, Point(0, 0), Point(4, 0)));
    EXPECT_TRUE(segment_on_boundary(p, Point(2, 3), Point(2, 2)));
    EXPECT_FALSE(segment_on_boundary(p, Point(2, 1), Point(2, 3)));
}

TEST(Generator, ExactSizeGeneralPositionAndDeterminism) {
    for (int n : {4, 6, 8, 14, 26, 40}) {
        OrthoPolygon a = generate_random_orthogonal(n, 99);
        OrthoPolygon b = generate_random_orthogonal(n, 99);
        EXPECT_EQ(a.size(), static_cast<size_t>(n));
        EXPECT_EQ(a.vertices(), b.vertices());
        EXPECT_NO_THROW(validate_polygon(a.vertices()));
    }
    EXPECT_THROW(generate_random_orthogonal(7, 1), Error);
}

TEST(Generator, CorpusCyclesThroughSizes) {
    auto corpus = generate_corpus(6, 3, 8, 12);
    ASSERT_EQ(corpus.size(), 6u);
    std::vector<int> ns;
    for (const auto& e : corpus) {
        ns.push_back(e.n);
        EXPECT_EQ(e.polygon.size(), static_cast<size_t>(e.n));
    }
    EXPECT_EQ(ns, (std::vector<int>{8, 10, 12, 8, 10, 12}));
}
