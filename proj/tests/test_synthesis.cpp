#include "beacon/synthesis.hpp"
#include "beacon/spiral.hpp"
#include "beacon/verifier.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace beacon;

namespace {

size_t bound(size_t n) { return (n - 4) / 3; }

bool trace_has(const std::vector<ReductionStep>& trace, CaseId id) {
    return std::any_of(trace.begin(), trace.end(), [&](const ReductionStep& s) { return s.case_id == id; });
}

ReductionStep fake_step(CaseId id, size_t removed, size_t placed) {
    ReductionStep s;
    s.case_id = id;
    for (size_t i = 0; i < removed; ++i) s.removed.push_back(static_cast<int>(i));
    for (size_t i = 0; i < placed; ++i) s.placed.push_back(Placement{Point(0, 0), Role::Cover, {}});
    return s;
}

}  // namespace

class FixtureSynthesis : public ::testing::TestWithParam<fixtures::Fixture> {};

TEST_P(FixtureSynthesis, BudgetCaseAndRouting) {
    const fixtures::Fixture& f = GetParam();
    OrthoPolygon p = validate_polygon(f.vertices);
    Decomposition d = vertical_decomposition(p);
    SynthesisResult res = synthesize(p);
    EXPECT_LE(res.beacons.size(), bound(p.size()));
    if (f.exact_beacons >= 0) EXPECT_EQ(res.beacons.size(), static_cast<size_t>(f.exact_beacons));
    if (f.exercises) EXPECT_TRUE(trace_has(res.trace, *f.exercises)) << case_name(*f.exercises);
    BudgetReport b = check_budget(res.trace, p.size());
    EXPECT_TRUE(b.ok());
    for (const ReductionStep& st : res.trace) EXPECT_TRUE(step_connectivity_holds(d, st));
    for (const Point& q : res.beacons.points()) EXPECT_NE(contains_point(p, q), Containment::Exterior);
    VerificationReport rep = verify_routing_set(d, res.beacons.points(), sample_points(d, 5, 20, res.epsilon), true);
    EXPECT_TRUE(rep.failures.empty()) << rep.failures.size() << " failures";
}

INSTANTIATE_TEST_SUITE_P(Hand, FixtureSynthesis, ::testing::ValuesIn(fixtures::hand_fixtures()),
                         [](const auto& info) {
                             std::string s = info.param.name;
                             std::replace(s.begin(), s.end(), '-', '_');
                             return s;
                         });

TEST(Synthesis, FixturesReachEveryCase) {
    std::vector<bool> hit(static_cast<size_t>(CaseId::BasisAllShort) + 1, false);
    for (const fixtures::Fixture& f : fixtures::hand_fixtures())
        for (const ReductionStep& st : synthesize(validate_polygon(f.vertices)).trace)
            hit[static_cast<size_t>(st.case_id)] = true;
    for (size_t i = 0; i < hit.size(); ++i) EXPECT_TRUE(hit[i]) << case_name(static_cast<CaseId>(i));
}

TEST(Synthesis, TraceRemovesEveryRectangleOnce) {
    for (uint64_t s = 0; s < 20; ++s) {
        OrthoPolygon p = generate_random_orthogonal(10 + 2 * static_cast<int>(s), 900 + s);
        Decomposition d = vertical_decomposition(p);
        SynthesisResult res = synthesize(p);
        std::vector<int> seen;
        for (const ReductionStep& st : res.trace) seen.insert(seen.end(), st.removed.begin(), st.removed.end());
        std::sort(seen.begin(), seen.end());
        std::vector<int> all(d.rect_count());
        for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        EXPECT_EQ(seen, all);
        EXPECT_TRUE(is_basis(res.trace.back().case_id));
        size_t placed = 0;
        for (const ReductionStep& st : res.trace) placed += st.placed.size();
        EXPECT_EQ(placed, res.beacons.size());
        EXPECT_TRUE(check_budget(res.trace, p.size()).ok());
    }
}

TEST(Synthesis, Deterministic) {
    OrthoPolygon p = generate_random_orthogonal(30, 4);
    EXPECT_EQ(synthesize(p).beacons.points(), synthesize(p).beacons.points());
}

TEST(Synthesis, BasisFromDepthTwoFork) {
    Decomposition d = vertical_decomposition(validate_polygon(fixtures::fixture("basis-fork-10").vertices));
    SynthesisState st(d, Coord(1, 4));
    EXPECT_EQ(st.live_height(), 2);
    EXPECT_THROW(apply_reduction(st), Error);
    std::vector<Point> b = basis_case(st);
    ASSERT_EQ(b.size(), 2u);
    // One beacon just inside the corner facing the root, one just inside the far corner between the two kids.
    std::sort(b.begin(), b.end());
    EXPECT_EQ(b[0], Point(Coord(2), Coord(1, 4)));
    EXPECT_EQ(b[1], Point(Coord(6), Coord(10) - Coord(1, 4)));
    EXPECT_EQ(st.live_count(), 0);
}

TEST(Synthesis, BasisRejectsDeepTree) {
    SpiralGeometry g = generate_spiral(default_spiral(2));
    Decomposition d = vertical_decomposition(g.polygon);
    SynthesisState st(d, Coord(1, 8));
    try {
        basis_case(st);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DepthTooLarge);
    }
}

TEST(Budget, PerStepAndGlobalBounds) {
    std::vector<ReductionStep> ok = {fake_step(CaseId::TwoSoloOne, 2, 1), fake_step(CaseId::BasisTrivial, 1, 0)};
    BudgetReport a = check_budget(ok, 10);
    EXPECT_TRUE(a.ok());
    EXPECT_EQ(a.total, 1u);
    EXPECT_EQ(a.bound, 2u);
    EXPECT_EQ(a.histogram["TwoSoloOne"], 1);

    // Three beacons for three rectangles exceeds floor(2s/3) = 2.
    std::vector<ReductionStep> bad = {fake_step(CaseId::TypeIICase3, 3, 3)};
    BudgetReport b = check_budget(bad, 40);
    EXPECT_EQ(b.violating_steps, (std::vector<size_t>{0}));
    EXPECT_FALSE(b.ok());

    std::vector<ReductionStep> over = {fake_step(CaseId::TwoPairedTwo, 3, 2), fake_step(CaseId::BasisAllShort, 4, 2)};
    BudgetReport c = check_budget(over, 12);
    EXPECT_TRUE(c.violating_steps.empty());
    EXPECT_FALSE(c.global_ok);
}

TEST(Repair, PositionAndPairedCuts) {
    Decomposition d = vertical_decomposition(validate_polygon(fixtures::fixture("basis-fork-10").vertices));
    std::vector<bool> live(d.rect_count(), true);
    auto cuts = paired_cuts(d, live, {3});
    ASSERT_EQ(cuts.size(), 1u);
    EXPECT_EQ(cuts[0].attachment, 1);
    EXPECT_EQ(cuts[0].side, Side::Right);
    EXPECT_EQ(cuts[0].detached, 3);
    EXPECT_TRUE(paired_cuts(d, live, {2, 3}).empty());

    SynthesisState st(d, Coord(1, 10));
    ReductionStep kill;
    kill.case_id = CaseId::TwoSoloOne;
    kill.removed = {3};
    st.commit(kill);
    EXPECT_EQ(repair_position(st, 1, Side::Right), Point(Coord(6) - Coord(1, 10), Coord(6)));
    try {
        repair_position(st, 1, Side::Left);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPairedCut);
    }
}
