#include "beacon/synthesis.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace beacon {

const char* case_name(CaseId c) {
    switch (c) {
        case CaseId::TwoTallTwoKids: return "TwoTallTwoKids";
        case CaseId::LowerLeft: return "LowerLeft";
        case CaseId::UpperLeft: return "UpperLeft";
        case CaseId::TwoSoloTwo: return "TwoSoloTwo";
        case CaseId::TwoSoloOne: return "TwoSoloOne";
        case CaseId::TwoPairedThree: return "TwoPairedThree";
        case CaseId::TwoPairedTwo: return "TwoPairedTwo";
        case CaseId::TypeIICase1: return "TypeIICase1";
        case CaseId::TypeIICase2: return "TypeIICase2";
        case CaseId::TypeIICase3: return "TypeIICase3";
        case CaseId::TypeIICase4: return "TypeIICase4";
        case CaseId::TypeIV: return "TypeIV";
        case CaseId::AllTypeI: return "AllTypeI";
        case CaseId::TwoTypeIOneTypeIII: return "TwoTypeIOneTypeIII";
        case CaseId::OneThreeBothLeft: return "OneThreeBothLeft";
        case CaseId::OneThreeTypeIIIRight: return "OneThreeTypeIIIRight";
        case CaseId::OneThreeTypeIRight: return "OneThreeTypeIRight";
        case CaseId::OneThreeThreeTypeILeft: return "OneThreeThreeTypeILeft";
        case CaseId::OneThreeThreeTypeIRight: return "OneThreeThreeTypeIRight";
        case CaseId::BasisTrivial: return "BasisTrivial";
        case CaseId::BasisRightChild: return "BasisRightChild";
        case CaseId::BasisLeftChild: return "BasisLeftChild";
        case CaseId::BasisTallCenter: return "BasisTallCenter";
        case CaseId::BasisAllShort: return "BasisAllShort";
    }
    return "?";
}

bool is_basis(CaseId c) {
    return c == CaseId::BasisTrivial || c == CaseId::BasisRightChild || c == CaseId::BasisLeftChild ||
           c == CaseId::BasisTallCenter || c == CaseId::BasisAllShort;
}

const char* role_name(Role r) {
    switch (r) {
        case Role::Cover: return "Cover";
        case Role::Connector: return "Connector";
        case Role::Repair: return "Repair";
    }
    return "?";
}

const char* symmetry_name(Symmetry s) {
    switch (s) {
        case Symmetry::Identity: return "Identity";
        case Symmetry::FlipX: return "FlipX";
        case Symmetry::FlipY: return "FlipY";
        case Symmetry::FlipBoth: return "FlipBoth";
    }
    return "?";
}

std::vector<Point> BeaconSet::points() const {
    std::vector<Point> out;
    out.reserve(beacons.size());
    for (const auto& b : beacons) out.push_back(b.point);
    return out;
}

SynthesisState::SynthesisState(const Decomposition& d, Coord epsilon)
    : d_(&d), tree_(root_at_leaf(d)), live_(d.rect_count(), true), eps_(std::move(epsilon)) {}

int SynthesisState::live_count() const { return static_cast<int>(std::count(live_.begin(), live_.end(), true)); }

int SynthesisState::live_height() const {
    int h = 0;
    for (size_t i = 0; i < live_.size(); ++i)
        if (live_[i]) h = std::max(h, tree_.depth[i]);
    return h;
}

std::vector<int> SynthesisState::live_children(int r) const {
    std::vector<int> out;
    for (int c : tree_.children[static_cast<size_t>(r)])
        if (live_[static_cast<size_t>(c)]) out.push_back(c);
    return out;
}

std::string SynthesisState::dump() const {
    std::ostringstream os;
    os << "epsilon=" << to_string(eps_) << "\n";
    for (size_t i = 0; i < live_.size(); ++i) {
        const Rect& r = d_->rect(static_cast<int>(i));
        os << "rect " << i << (live_[i] ? " live" : " dead") << " depth=" << tree_.depth[i]
           << " parent=" << tree_.parent[i] << " lo=" << to_string(r.lo) << " hi=" << to_string(r.hi) << "\n";
    }
    os << "beacons=" << beacons_.size() << " steps=" << trace_.size() << "\n";
    return os.str();
}

void SynthesisState::commit(ReductionStep step) {
    step.live_before = live_;
    for (int r : step.removed) {
        if (!live_[static_cast<size_t>(r)]) throw Error(ErrorCode::InternalInconsistency, "removing dead rectangle " + std::to_string(r));
        live_[static_cast<size_t>(r)] = false;
    }
    if (!is_basis(step.case_id) && !live_[static_cast<size_t>(tree_.root)])
        throw Error(ErrorCode::InternalInconsistency, "reduction removed the root");
    // Live set must stay a rooted subtree.
    for (size_t i = 0; i < live_.size(); ++i) {
        if (!live_[i] || static_cast<int>(i) == tree_.root) continue;
        if (!live_[static_cast<size_t>(tree_.parent[i])])
            throw Error(ErrorCode::InternalInconsistency, "live rectangle " + std::to_string(i) + " lost its parent");
    }
    int idx = static_cast<int>(trace_.size());
    for (const Placement& p : step.placed) beacons_.beacons.push_back(PlacedBeacon{p.point, idx, p.role});
    trace_.push_back(std::move(step));
}

namespace {

struct Frame {
    bool fx = false;
    bool fy = false;

    Point map(const Point& p) const { return Point(fx ? Coord(-p.x) : p.x, fy ? Coord(-p.y) : p.y); }
    Rect map(const Rect& r) const {
        Point a = map(r.lo), b = map(r.hi);
        return Rect{Point(a.x < b.x ? a.x : b.x, a.y < b.y ? a.y : b.y), Point(a.x < b.x ? b.x : a.x, a.y < b.y ? b.y : a.y)};
    }
    Symmetry symmetry() const {
        if (fx && fy) return Symmetry::FlipBoth;
        if (fx) return Symmetry::FlipX;
        if (fy) return Symmetry::FlipY;
        return Symmetry::Identity;
    }
};

struct Rel {
    Side side;
    VPos vpos;
    Size size;
    Point reflex;  // frame coordinates
};

// Local view of the live configuration under a reflection.
class View {
public:
    View(const SynthesisState& s, Frame f) : s_(s), f_(f) {}

    const Frame& frame() const { return f_; }
    Rect rect(int id) const { return f_.map(s_.decomposition().rect(id)); }
    Point world(const Point& p) const { return f_.map(p); }

    // Relation of S as a neighbor of R.
    Rel rel(int R, int S) const {
        Rect r = rect(R), s = rect(S);
        Rel out;
        out.side = s.lo.x == r.hi.x ? Side::Right : Side::Left;
        out.vpos = s.hi.y == r.hi.y ? VPos::Top : VPos::Bottom;
        if (s.lo.y < r.lo.y || s.hi.y > r.hi.y) out.size = Size::Tall;
        else out.size = count_side(R, out.side) >= 2 ? Size::Paired : Size::Solo;
        int v = s_.decomposition().vertical_between(R, S);
        if (v < 0) throw Error(ErrorCode::InternalInconsistency, "relation between non-adjacent rectangles");
        out.reflex = f_.map(s_.decomposition().verticals()[static_cast<size_t>(v)].reflex_vertex);
        return out;
    }

    int count_side(int R, Side side) const {
        Rect r = rect(R);
        int c = 0;
        for (int t : s_.decomposition().neighbors(R)) {
            if (!s_.is_live(t)) continue;
            Rect q = rect(t);
            bool right = q.lo.x == r.hi.x;
            if ((side == Side::Right) == right) ++c;
        }
        return c;
    }

    Point vertical_mid(int a, int b) const {
        int v = s_.decomposition().vertical_between(a, b);
        return s_.decomposition().verticals()[static_cast<size_t>(v)].midpoint();
    }

    Point dx(const Point& p, int sign) const { return Point(Coord(p.x + sign * s_.epsilon()), p.y); }
    Point dy(const Point& p, int sign) const { return Point(p.x, Coord(p.y + sign * s_.epsilon())); }

    // Placement from a frame point.
    Placement place(const Point& frame_pt, Role role, std::vector<int> covers) const {
        return Placement{world(frame_pt), role, std::move(covers)};
    }
    Placement place_world(const Point& world_pt, Role role, std::vector<int> covers) const {
        return Placement{world_pt, role, std::move(covers)};
    }

private:
    const SynthesisState& s_;
    Frame f_;
};

// Frame in which `upper` is a top-right neighbor of `base`.
Frame frame_for(const SynthesisState& s, int base, int upper) {
    NeighborRelation rel = classify_neighbor(s.decomposition(), base, upper, &s.live());
    Frame f;
    f.fx = rel.side == Side::Left;
    f.fy = rel.vertical_pos == VPos::Bottom;
    return f;
}

ReductionStep make_step(CaseId id, std::vector<int> removed, std::vector<Placement> placed, const Frame& f) {
    ReductionStep st;
    st.case_id = id;
    std::sort(removed.begin(), removed.end());
    st.removed = std::move(removed);
    st.placed = std::move(placed);
    st.symmetry = f.symmetry();
    return st;
}

std::optional<ReductionStep> try_two_level(const SynthesisState& s, int A1, int A2) {
    std::vector<int> kids = s.live_children(A1);
    if (kids.empty()) return std::nullopt;
    for (int k : kids)
        if (!s.live_children(k).empty()) return std::nullopt;
    View v(s, frame_for(s, A1, A2));
    Rel a2 = v.rel(A1, A2);
    const Point& r12 = a2.reflex;
    Rect a1 = v.rect(A1);
    std::vector<int> removed = kids;
    removed.push_back(A1);

    if (a2.size == Size::Tall) {
        bool paired = v.count_side(A2, Side::Left) >= 2;
        if (kids.size() == 2) {
            int upper = v.rel(A1, kids[0]).vpos == VPos::Top ? kids[0] : kids[1];
            Point r1 = v.rel(A1, upper).reflex;
            std::vector<Placement> placed{
                v.place(v.dx(r1, +1), Role::Cover, {kids[0], kids[1], A1}),
                v.place(v.dx(r12, +1), paired ? Role::Repair : Role::Connector, {}),
            };
            return make_step(CaseId::TwoTallTwoKids, removed, placed, v.frame());
        }
        Rel k = v.rel(A1, kids[0]);
        CaseId id;
        if (k.vpos == VPos::Bottom) id = CaseId::LowerLeft;
        else if (k.size != Size::Tall) id = CaseId::UpperLeft;
        else return std::nullopt;  // tall upper-left child: Type I
        std::vector<Placement> placed{v.place(v.dx(r12, +1), paired ? Role::Repair : Role::Cover, {kids[0], A1})};
        return make_step(id, removed, placed, v.frame());
    }
    if (a2.size == Size::Solo) {
        if (kids.size() == 2) {
            int upper = v.rel(A1, kids[0]).vpos == VPos::Top ? kids[0] : kids[1];
            Point r1 = v.rel(A1, upper).reflex;
            std::vector<Placement> placed{
                v.place(v.dx(r1, +1), Role::Cover, {kids[0], kids[1], A1}),
                v.place(v.dy(r12, +1), Role::Connector, {}),
            };
            return make_step(CaseId::TwoSoloTwo, removed, placed, v.frame());
        }
        std::vector<Placement> placed{v.place(v.dy(r12, +1), Role::Cover, {kids[0], A1})};
        return make_step(CaseId::TwoSoloOne, removed, placed, v.frame());
    }
    // Paired: the other right neighbor of A1 is a leaf child.
    if (kids.size() == 1) return std::nullopt;  // Type II
    Point t = a1.lo, u = a1.hi;
    std::vector<int> low{A1}, high;
    for (int k : kids) {
        Rel rk = v.rel(A1, k);
        if (rk.side == Side::Right || rk.vpos == VPos::Bottom || rk.size == Size::Tall) low.push_back(k);
        else high.push_back(k);
    }
    std::vector<Placement> placed{
        v.place(v.dy(t, +1), Role::Cover, low),
        v.place(v.dy(u, -1), high.empty() ? Role::Connector : Role::Cover, high),
    };
    return make_step(kids.size() == 3 ? CaseId::TwoPairedThree : CaseId::TwoPairedTwo, removed, placed, v.frame());
}

enum class SubType { I, II, III, IV };

struct Sub {
    int a;      // child of A2
    int leaf;   // leaf below a, or a itself
    SubType type;
    Rel rel;    // of a relative to A2, frame of A3
};

std::optional<ReductionStep> three_level(const SynthesisState& s, int A2, int A3) {
    View v(s, frame_for(s, A2, A3));
    std::vector<Sub> subs;
    for (int c : s.live_children(A2)) {
        Sub sub{c, c, SubType::III, v.rel(A2, c)};
        std::vector<int> kk = s.live_children(c);
        if (kk.empty()) {
            sub.type = sub.rel.size == Size::Tall ? SubType::IV : SubType::III;
        } else {
            if (kk.size() != 1) return std::nullopt;
            sub.leaf = kk[0];
            View vc(s, frame_for(s, c, A2));
            Rel up = vc.rel(c, A2);
            if (up.size == Size::Tall) sub.type = SubType::I;
            else if (up.size == Size::Paired) sub.type = SubType::II;
            else return std::nullopt;
        }
        subs.push_back(sub);
    }
    Rect a2 = v.rect(A2);
    Point s_pt(a2.lo.x, a2.hi.y), q_pt = a2.lo, t_pt(a2.hi.x, a2.lo.y), u_pt = a2.hi;
    Rel a3 = v.rel(A2, A3);
    const Point& r23 = a3.reflex;
    bool a3_pairs_a2 = a3.size == Size::Tall && v.count_side(A3, Side::Left) >= 2;

    auto find = [&](SubType t) -> const Sub* {
        for (const Sub& x : subs)
            if (x.type == t) return &x;
        return nullptr;
    };
    const Sub* lower_right = nullptr;
    for (const Sub& x : subs)
        if (x.rel.side == Side::Right) lower_right = &x;

    if (const Sub* t2 = find(SubType::II)) {
        Point r12 = t2->rel.reflex;
        Placement b1 = v.place(v.dx(r12, -1), Role::Cover, {t2->leaf, t2->a, A2});
        if (!lower_right) {
            if (a3.size == Size::Tall) {
                Placement b2 = v.place(v.dx(r23, +1), a3_pairs_a2 ? Role::Repair : Role::Connector, {});
                return make_step(CaseId::TypeIICase2, {t2->leaf, t2->a, A2}, {b1, b2}, v.frame());
            }
            Placement b2 = v.place(v.dy(u_pt, -1), Role::Connector, {});
            return make_step(CaseId::TypeIICase1, {t2->leaf, t2->a, A2}, {b1, b2}, v.frame());
        }
        if (lower_right->type == SubType::I) {
            b1.covers = {t2->leaf, t2->a};
            Placement b2 = v.place(v.dy(u_pt, -1), Role::Cover, {A2});
            Placement b3 = v.place_world(v.vertical_mid(lower_right->a, A2), Role::Cover, {lower_right->a, lower_right->leaf});
            return make_step(CaseId::TypeIICase3, {t2->leaf, t2->a, lower_right->leaf, lower_right->a, A2}, {b1, b2, b3},
                             v.frame());
        }
        if (lower_right->type == SubType::III) {
            b1.covers = {t2->leaf, t2->a};
            Placement b2 = v.place(v.dx(lower_right->rel.reflex, -1), Role::Repair, {lower_right->a});
            return make_step(CaseId::TypeIICase4, {t2->leaf, t2->a, lower_right->a}, {b1, b2}, v.frame());
        }
        return std::nullopt;
    }
    if (const Sub* t4 = find(SubType::IV)) {
        if (!lower_right || lower_right->type != SubType::I) return std::nullopt;
        Placement b1 = v.place_world(v.vertical_mid(lower_right->a, A2), Role::Cover, {lower_right->a, lower_right->leaf});
        Placement b2 = v.place_world(v.vertical_mid(A2, A3), Role::Cover, {t4->a, A2});
        return make_step(CaseId::TypeIV, {lower_right->leaf, lower_right->a, t4->a, A2}, {b1, b2}, v.frame());
    }
    std::vector<const Sub*> ones, threes;
    for (const Sub& x : subs) (x.type == SubType::I ? ones : threes).push_back(&x);
    if (ones.empty()) return std::nullopt;
    if (threes.empty()) {
        std::vector<Placement> placed;
        std::vector<int> removed{A2};
        for (const Sub* x : ones) {
            placed.push_back(v.place_world(v.vertical_mid(x->a, A2), Role::Cover, {x->a, x->leaf}));
            removed.push_back(x->a);
            removed.push_back(x->leaf);
        }
        if (a3_pairs_a2) placed.push_back(v.place(v.dx(r23, +1), Role::Repair, {A2}));
        else placed.push_back(v.place_world(v.vertical_mid(A2, A3), Role::Cover, {A2}));
        return make_step(CaseId::AllTypeI, removed, placed, v.frame());
    }
    if (ones.size() == 2 && threes.size() == 1) {
        std::vector<Placement> placed;
        std::vector<int> removed{A2};
        for (const Sub* x : ones) {
            placed.push_back(v.place_world(v.vertical_mid(x->a, A2), Role::Cover, {x->a, x->leaf}));
            removed.push_back(x->a);
            removed.push_back(x->leaf);
        }
        placed.push_back(v.place_world(v.vertical_mid(threes[0]->a, A2), Role::Cover, {threes[0]->a}));
        removed.push_back(threes[0]->a);
        placed.push_back(v.place_world(v.vertical_mid(A2, A3), Role::Cover, {A2}));
        return make_step(CaseId::TwoTypeIOneTypeIII, removed, placed, v.frame());
    }
    if (ones.size() != 1 || threes.size() > 2) return std::nullopt;
    const Sub* one = ones[0];
    // Both left children: corner beacons just inside A2's left corners.
    auto both_left = [&](const Sub* a, const Sub* b, CaseId id) {
        const Sub* top = a->rel.vpos == VPos::Top ? a : b;
        const Sub* bottom = top == a ? b : a;
        auto cov = [](const Sub* x) {
            std::vector<int> c{x->a};
            if (x->leaf != x->a) c.push_back(x->leaf);
            return c;
        };
        Placement b1 = v.place(v.dy(s_pt, -1), Role::Cover, cov(top));
        Placement b2 = v.place(v.dy(q_pt, +1), Role::Cover, cov(bottom));
        std::vector<int> removed{one->a, one->leaf};
        for (const Sub* x : {a, b})
            if (x != one) removed.push_back(x->a);
        return make_step(id, removed, {b1, b2}, v.frame());
    };
    if (one->rel.side == Side::Right) {
        std::vector<int> low{A2, one->a, one->leaf}, high;
        std::vector<int> removed{A2, one->a, one->leaf};
        for (const Sub* x : threes) {
            (x->rel.vpos == VPos::Bottom ? low : high).push_back(x->a);
            removed.push_back(x->a);
        }
        Placement b1 = v.place(v.dy(t_pt, +1), Role::Cover, low);
        Placement b2 = v.place(v.dy(u_pt, -1), high.empty() ? Role::Connector : Role::Cover, high);
        return make_step(threes.size() == 1 ? CaseId::OneThreeTypeIRight : CaseId::OneThreeThreeTypeIRight, removed,
                         {b1, b2}, v.frame());
    }
    // Type I on the left.
    const Sub* left_three = nullptr;
    const Sub* right_three = nullptr;
    for (const Sub* x : threes) (x->rel.side == Side::Left ? left_three : right_three) = x;
    if (left_three) return both_left(one, left_three, threes.size() == 1 ? CaseId::OneThreeBothLeft : CaseId::OneThreeThreeTypeILeft);
    if (right_three && threes.size() == 1) {
        Placement b1 = v.place_world(v.vertical_mid(one->a, A2), Role::Cover, {one->a, one->leaf});
        Placement b2 = v.place(v.dx(right_three->rel.reflex, -1), Role::Repair, {right_three->a});
        return make_step(CaseId::OneThreeTypeIIIRight, {one->a, one->leaf, right_three->a}, {b1, b2}, v.frame());
    }
    return std::nullopt;
}

}  // namespace

ReductionStep apply_reduction(SynthesisState& state) {
    int H = state.live_height();
    if (H < 3) throw Error(ErrorCode::InternalInconsistency, "apply_reduction needs live height >= 3");
    int L = -1;
    for (int i = 0; i < static_cast<int>(state.decomposition().rect_count()); ++i)
        if (state.is_live(i) && state.tree().depth[static_cast<size_t>(i)] == H) {
            L = i;
            break;
        }
    int A1 = state.parent(L), A2 = state.parent(A1);
    std::optional<ReductionStep> step = try_two_level(state, A1, A2);
    if (!step) {
        for (int c : state.live_children(A2)) {
            if (c == A1 || state.live_children(c).empty()) continue;
            step = try_two_level(state, c, A2);
            if (step) break;
        }
    }
    if (!step) step = three_level(state, A2, state.parent(A2));
    if (!step)
        throw Error(ErrorCode::NoCaseMatched, "no reduction at L=" + std::to_string(L) + " A1=" + std::to_string(A1) +
                                                  " A2=" + std::to_string(A2) + "\n" + state.dump());
    state.commit(*step);
    return state.trace().back();
}

std::vector<Point> basis_case(SynthesisState& state) {
    int H = state.live_height();
    if (H > 2) throw Error(ErrorCode::DepthTooLarge, "basis case needs live height <= 2, got " + std::to_string(H));
    std::vector<int> all;
    for (int i = 0; i < static_cast<int>(state.decomposition().rect_count()); ++i)
        if (state.is_live(i)) all.push_back(i);
    if (H <= 1) {
        state.commit(make_step(CaseId::BasisTrivial, all, {}, Frame{}));
        return {};
    }
    int A2 = state.tree().root;
    int A1 = state.live_children(A2).at(0);
    View v(state, frame_for(state, A1, A2));
    std::vector<int> kids = state.live_children(A1);
    Rel a2 = v.rel(A1, A2);
    Rect a1 = v.rect(A1);
    ReductionStep step;
    if (kids.size() == 1) {
        Rel k = v.rel(A1, kids[0]);
        if (k.side == Side::Right)
            step = make_step(CaseId::BasisRightChild, all, {v.place(v.dx(a2.reflex, -1), Role::Cover, all)}, v.frame());
        else
            step = make_step(CaseId::BasisLeftChild, all, {v.place_world(v.vertical_mid(A1, A2), Role::Cover, all)}, v.frame());
    } else {
        std::vector<Rel> rels;
        for (int k : kids) rels.push_back(v.rel(A1, k));
        bool kid_tall = std::any_of(rels.begin(), rels.end(), [](const Rel& r) { return r.size == Size::Tall; });
        if (a2.size == Size::Tall) {
            Point r1;
            for (const Rel& r : rels)
                if (r.vpos == VPos::Top) r1 = r.reflex;
            step = make_step(CaseId::BasisTallCenter, all, {v.place(v.dx(r1, +1), Role::Cover, all)}, v.frame());
        } else if (kid_tall) {
            step = make_step(CaseId::BasisTallCenter, all, {v.place(v.dx(a2.reflex, -1), Role::Cover, all)}, v.frame());
        } else {
            std::vector<int> top{A1, A2}, bottom;
            bool bottom_left = false, bottom_right = false;
            for (size_t i = 0; i < kids.size(); ++i) {
                if (rels[i].vpos == VPos::Top) top.push_back(kids[i]);
                else {
                    bottom.push_back(kids[i]);
                    (rels[i].side == Side::Left ? bottom_left : bottom_right) = true;
                }
            }
            Point w = bottom_left ? a1.lo : Point(a1.hi.x, a1.lo.y);
            if (!bottom_left && !bottom_right) throw Error(ErrorCode::InternalInconsistency, "depth-2 basis without a lower neighbor");
            step = make_step(CaseId::BasisAllShort, all,
                             {v.place(v.dy(a1.hi, -1), Role::Cover, top), v.place(v.dy(w, +1), Role::Cover, bottom)},
                             v.frame());
        }
    }
    std::vector<Point> out;
    for (const Placement& p : step.placed) out.push_back(p.point);
    state.commit(std::move(step));
    return out;
}

SynthesisResult synthesize(const Decomposition& d, const Coord& epsilon) {
    SynthesisState state(d, epsilon);
    while (state.live_height() >= 3) apply_reduction(state);
    basis_case(state);
    return SynthesisResult{state.beacons(), state.trace(), epsilon};
}

SynthesisResult synthesize(const OrthoPolygon& poly) {
    Decomposition d = vertical_decomposition(poly);
    return synthesize(d, compute_epsilon(poly));
}

Point repair_position(const SynthesisState& state, int attachment, Side cut_side) {
    const Decomposition& d = state.decomposition();
    const Rect& a = d.rect(attachment);
    int dead = -1, count = 0, alive = 0;
    for (int t : d.neighbors(attachment)) {
        const Rect& r = d.rect(t);
        bool left = r.hi.x == a.lo.x;
        if ((cut_side == Side::Left) != left) continue;
        ++count;
        if (state.is_live(t)) ++alive;
        else dead = t;
    }
    if (count != 2 || alive != 1 || dead < 0 || !state.is_live(attachment))
        throw Error(ErrorCode::NotPairedCut, "rectangle " + std::to_string(attachment) + " has no paired cut on the " + side_name(cut_side));
    const Point& r = d.verticals()[static_cast<size_t>(d.vertical_between(attachment, dead))].reflex_vertex;
    int sign = cut_side == Side::Left ? 1 : -1;
    return Point(Coord(r.x + sign * state.epsilon()), r.y);
}

std::vector<PairedCut> paired_cuts(const Decomposition& d, const std::vector<bool>& live_before,
                                   const std::vector<int>& removed) {
    std::vector<bool> after = live_before;
    for (int r : removed) after[static_cast<size_t>(r)] = false;
    std::vector<PairedCut> out;
    for (int a = 0; a < static_cast<int>(d.rect_count()); ++a) {
        if (!after[static_cast<size_t>(a)]) continue;
        const Rect& ra = d.rect(a);
        for (Side side : {Side::Left, Side::Right}) {
            std::vector<int> members;
            for (int t : d.neighbors(a)) {
                if (!live_before[static_cast<size_t>(t)]) continue;
                bool left = d.rect(t).hi.x == ra.lo.x;
                if ((side == Side::Left) == left) members.push_back(t);
            }
            if (members.size() != 2) continue;
            int gone = 0, which = -1;
            for (int m : members)
                if (!after[static_cast<size_t>(m)]) {
                    ++gone;
                    which = m;
                }
            if (gone == 1) out.push_back(PairedCut{a, side, which});
        }
    }
    return out;
}

BudgetReport check_budget(const std::vector<ReductionStep>& trace, size_t n) {
    BudgetReport rep;
    rep.bound = n >= 4 ? (n - 4) / 3 : 0;
    for (size_t i = 0; i < trace.size(); ++i) {
        const ReductionStep& st = trace[i];
        size_t b = st.placed.size(), s = st.removed.size();
        rep.total += b;
        rep.histogram[case_name(st.case_id)]++;
        size_t limit;
        if (is_basis(st.case_id)) {
            size_t nk = 2 * s + 2;
            limit = nk >= 4 ? (nk - 4) / 3 : 0;
        } else {
            limit = (2 * s) / 3;
        }
        if (b > limit) rep.violating_steps.push_back(i);
    }
    rep.global_ok = rep.total <= rep.bound;
    return rep;
}

}  // namespace beacon
