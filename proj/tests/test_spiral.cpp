#include "beacon/spiral.hpp"
#include "beacon/synthesis.hpp"
#include "beacon/verifier.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace beacon;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InternalInconsistency;
}

SpiralSpec spec_of(std::vector<long> ls) {
    SpiralSpec s;
    s.r = static_cast<int>((ls.size() - 1) / 3);
    for (long l : ls) s.lengths.emplace_back(l);
    return s;
}

}  // namespace

TEST(SpiralLengths, DefaultSchedule) {
    std::vector<mpz_class> l = default_lengths(2);
    ASSERT_EQ(l.size(), 7u);
    EXPECT_EQ(l[0], 2);
    EXPECT_EQ(l[1], 16);
    EXPECT_EQ(l[2], 512);
    EXPECT_EQ(l[3], 65536);
    EXPECT_EQ(l[6], mpz_class(1) << 49);
    EXPECT_TRUE(spiral_condition_holds(default_spiral(3)));
    EXPECT_TRUE(check_length_inequality(default_spiral(3)).all());
    EXPECT_TRUE(exponent_law_holds(40));
}

TEST(SpiralLengths, InequalityCheckedPerSection) {
    // 65536 * 2 > 4 * 512 * 17, but 1000 * 2 is not.
    EXPECT_TRUE(check_length_inequality(spec_of({2, 16, 512, 65536})).all());
    LengthReport bad = check_length_inequality(spec_of({2, 16, 512, 1000}));
    ASSERT_EQ(bad.holds.size(), 1u);
    EXPECT_FALSE(bad.holds[0]);
}

TEST(SpiralLengths, ConditionViolations) {
    EXPECT_FALSE(spiral_condition_holds(spec_of({2, 16, 4, 65536})));
    EXPECT_EQ(code_of([] { generate_spiral(spec_of({2, 16, 4, 65536})); }), ErrorCode::SpecInvariantViolated);
    EXPECT_EQ(code_of([] { generate_spiral(spec_of({2, 16, 512, 1000})); }), ErrorCode::SpecInvariantViolated);
    EXPECT_EQ(code_of([] { generate_spiral(spec_of({2, 0, 512, 65536})); }), ErrorCode::SpecInvariantViolated);
    SpiralSpec short_list = spec_of({2, 16, 512, 65536});
    short_list.lengths.pop_back();
    EXPECT_EQ(code_of([&] { generate_spiral(short_list); }), ErrorCode::SpecInvariantViolated);
}

TEST(SpiralGeometry, OneSectionVertices) {
    SpiralGeometry g = generate_spiral(default_spiral(1));
    std::vector<Point> expect = {Point(-2, 0),      Point(0, 0),       Point(0, -16),  Point(-512, -16),
                                 Point(-512, 65520), Point(-513, 65520), Point(-513, -17), Point(1, -17),
                                 Point(1, 1),       Point(-2, 1)};
    EXPECT_EQ(g.polygon.vertices(), expect);
    EXPECT_EQ(g.polygon.size(), 10u);
    EXPECT_EQ(g.polygon.reflex_count(), 3u);
}

TEST(SpiralGeometry, SizesAndSectionParts) {
    for (int r : {1, 2, 3}) {
        SpiralGeometry g = generate_spiral(default_spiral(r));
        EXPECT_EQ(g.polygon.size(), static_cast<size_t>(6 * r + 4));
        EXPECT_EQ(g.polygon.reflex_count(), static_cast<size_t>(3 * r));
        ASSERT_EQ(g.sections.size(), static_cast<size_t>(r));
        for (int k = 1; k <= 3 * r; ++k) {
            const Rect& c = g.corner[static_cast<size_t>(k)];
            EXPECT_EQ(c.width(), 1);
            EXPECT_EQ(c.height(), 1);
            EXPECT_TRUE(c.contains(g.r[static_cast<size_t>(k)]));
            EXPECT_TRUE(c.contains(g.c[static_cast<size_t>(k)]));
        }
        for (int k = 1; k <= 3 * r + 1; ++k) {
            const Rect& h = g.hallway[static_cast<size_t>(k)];
            Coord lk(g.spec.lengths[static_cast<size_t>(k - 1)]);
            EXPECT_TRUE((h.width() == 1 && h.height() == lk) || (h.height() == 1 && h.width() == lk));
            const Rect& hp = g.h_plus[static_cast<size_t>(k)];
            const Rect& hm = g.h_minus[static_cast<size_t>(k)];
            EXPECT_TRUE(hp.contains(g.m_in[static_cast<size_t>(k)]));
            EXPECT_TRUE(hp.contains(g.m_out[static_cast<size_t>(k)]));
            EXPECT_EQ(hp.width() * hp.height() + hm.width() * hm.height(), h.width() * h.height());
            EXPECT_FALSE(hm.contains_interior(hp.center()));
        }
        for (const SectionGeometry& s : g.sections) {
            EXPECT_EQ(s.corners.size(), 3u);
            EXPECT_EQ(s.hallways.size(), 2u);
            EXPECT_EQ(s.reflex[1], g.r[static_cast<size_t>(3 * s.index - 1)]);
        }
    }
}

TEST(SpiralWitness, EverySectionOfTwo) {
    SpiralGeometry g = generate_spiral(default_spiral(2));
    for (int i = 1; i <= 2; ++i) {
        RegionResult region = region_between_lines(g, i);
        EXPECT_TRUE(region.single_point);
        ASSERT_EQ(region.vertices.size(), 1u);
        EXPECT_EQ(region.vertices[0], g.r[static_cast<size_t>(3 * i - 1)]);
        AttractionPath below = witness_stuck(g, i, true);
        EXPECT_TRUE(below.terminal.kind == TerminalKind::StuckPerpendicular ||
                    below.terminal.kind == TerminalKind::StuckConvexVertex);
        EXPECT_TRUE(witness_stuck(g, i, false).reached());
        EXPECT_EQ(witness_indeterminate(g, i).kind, TerminalKind::Indeterminate);
        EXPECT_TRUE(g.corner[static_cast<size_t>(3 * i - 1)].contains_interior(witness_probe(g, i, true)));
    }
    EXPECT_EQ(code_of([&] { region_between_lines(g, 0); }), ErrorCode::SectionOutOfRange);
    EXPECT_EQ(code_of([&] { witness_stuck(g, 3, true); }), ErrorCode::SectionOutOfRange);
}

TEST(SpiralWitness, OneSectionRegionIsReflexVertex) {
    SpiralGeometry g = generate_spiral(default_spiral(1));
    RegionResult region = region_between_lines(g, 1);
    ASSERT_TRUE(region.single_point);
    EXPECT_EQ(region.vertices[0], Point(0, -16));
    EXPECT_EQ(witness_stuck(g, 1, true).terminal.kind, TerminalKind::StuckConvexVertex);
}

TEST(SpiralTightness, SynthesisUsesTwoPerSection) {
    for (int r : {1, 2}) {
        SpiralGeometry g = generate_spiral(default_spiral(r));
        Decomposition d = vertical_decomposition(g.polygon);
        EXPECT_EQ(d.rect_count(), static_cast<size_t>(3 * r + 1));
        SynthesisResult res = synthesize(g.polygon);
        EXPECT_EQ(res.beacons.size(), static_cast<size_t>(2 * r));
        EXPECT_EQ(static_cast<long>(res.beacons.size()), (static_cast<long>(g.polygon.size()) - 4) / 3);
        VerificationReport rep = verify_routing_set(d, res.beacons.points(), sample_points(d, 1, 20, res.epsilon), true);
        EXPECT_TRUE(rep.failures.empty());
    }
}

TEST(Clip, HalfPlaneAndCentroid) {
    std::vector<Point> sq = {Point(0, 0), Point(2, 0), Point(2, 2), Point(0, 2)};
    std::vector<Point> half = clip_half_plane(sq, Point(0, 0), Point(2, 2), Point(2, 0));
    EXPECT_EQ(half.size(), 3u);
    EXPECT_EQ(polygon_centroid(half), Point(Coord(4, 3), Coord(2, 3)));
    EXPECT_EQ(polygon_centroid(sq), Point(1, 1));
    // The line only touches the square at a corner.
    std::vector<Point> corner = clip_half_plane(sq, Point(0, 4), Point(4, 0), Point(0, 0));
    EXPECT_EQ(corner.size(), 4u);
}
