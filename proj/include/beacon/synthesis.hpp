#pragma once

#include "beacon/decomposition.hpp"

#include <map>
#include <string>
#include <vector>

namespace beacon {

enum class CaseId {
    TwoTallTwoKids,
    LowerLeft,
    UpperLeft,
    TwoSoloTwo,
    TwoSoloOne,
    TwoPairedThree,
    TwoPairedTwo,
    TypeIICase1,
    TypeIICase2,
    TypeIICase3,
    TypeIICase4,
    TypeIV,
    AllTypeI,
    TwoTypeIOneTypeIII,
    OneThreeBothLeft,
    OneThreeTypeIIIRight,
    OneThreeTypeIRight,
    OneThreeThreeTypeILeft,
    OneThreeThreeTypeIRight,
    BasisTrivial,
    BasisRightChild,
    BasisLeftChild,
    BasisTallCenter,
    BasisAllShort,
};
const char* case_name(CaseId c);
bool is_basis(CaseId c);

enum class Role { Cover, Connector, Repair };
const char* role_name(Role r);

enum class Symmetry { Identity, FlipX, FlipY, FlipBoth };
const char* symmetry_name(Symmetry s);

struct Placement {
    Point point;
    Role role;
    std::vector<int> covers;  // rectangles this beacon is claimed to cover in P_k
};

struct ReductionStep {
    CaseId case_id;
    std::vector<int> removed;
    std::vector<Placement> placed;
    Symmetry symmetry = Symmetry::Identity;
    std::vector<bool> live_before;
};

struct PlacedBeacon {
    Point point;
    int step;
    Role role;
};

struct BeaconSet {
    std::vector<PlacedBeacon> beacons;
    std::vector<Point> points() const;
    size_t size() const { return beacons.size(); }
};

class SynthesisState {
public:
    SynthesisState(const Decomposition& d, Coord epsilon);

    const Decomposition& decomposition() const { return *d_; }
    const RootedDualTree& tree() const { return tree_; }
    const std::vector<bool>& live() const { return live_; }
    const Coord& epsilon() const { return eps_; }
    const BeaconSet& beacons() const { return beacons_; }
    const std::vector<ReductionStep>& trace() const { return trace_; }

    bool is_live(int r) const { return live_[static_cast<size_t>(r)]; }
    int live_count() const;
    int live_height() const;
    std::vector<int> live_children(int r) const;
    int parent(int r) const { return tree_.parent[static_cast<size_t>(r)]; }
    std::string dump() const;

    // Applies a step: kills removed rectangles, appends beacons and trace entry.
    void commit(ReductionStep step);

private:
    const Decomposition* d_;
    RootedDualTree tree_;
    std::vector<bool> live_;
    Coord eps_;
    BeaconSet beacons_;
    std::vector<ReductionStep> trace_;
};

struct SynthesisResult {
    BeaconSet beacons;
    std::vector<ReductionStep> trace;
    Coord epsilon;
};

SynthesisResult synthesize(const OrthoPolygon& poly);
SynthesisResult synthesize(const Decomposition& d, const Coord& epsilon);

// One reduction on a state whose live tree has height >= 3.
ReductionStep apply_reduction(SynthesisState& state);
// Basis placement for live height <= 2.
std::vector<Point> basis_case(SynthesisState& state);

// Shared reflex vertex of the removed member of `attachment`'s paired set on
// cut_side, offset by +eps x (left cut) or -eps x (right cut).
Point repair_position(const SynthesisState& state, int attachment, Side cut_side);

struct PairedCut {
    int attachment;
    Side side;
    int detached;
};
// Rectangles that keep exactly one member of a paired neighbor set after `removed`.
std::vector<PairedCut> paired_cuts(const Decomposition& d, const std::vector<bool>& live_before,
                                   const std::vector<int>& removed);

struct BudgetReport {
    std::vector<size_t> violating_steps;
    size_t total = 0;
    size_t bound = 0;
    bool global_ok = true;
    std::map<std::string, int> histogram;
    bool ok() const { return violating_steps.empty() && global_ok; }
};
BudgetReport check_budget(const std::vector<ReductionStep>& trace, size_t n);

}  // namespace beacon
