#include "beacon/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace beacon {

const char* side_name(Side s) { return s == Side::Left ? "Left" : "Right"; }
const char* vpos_name(VPos v) { return v == VPos::Top ? "Top" : "Bottom"; }
const char* size_name(Size s) {
    switch (s) {
        case Size::Tall: return "Tall";
        case Size::Solo: return "Solo";
        case Size::Paired: return "Paired";
    }
    return "?";
}

int Decomposition::vertical_between(int a, int b) const {
    const auto& adj = adjacency_[static_cast<size_t>(a)];
    for (size_t i = 0; i < adj.size(); ++i)
        if (adj[i] == b) return vertical_of_[static_cast<size_t>(a)][i];
    return -1;
}

std::vector<int> Decomposition::rects_containing(const Point& p) const {
    std::vector<int> out;
    for (size_t i = 0; i < rects_.size(); ++i)
        if (rects_[i].contains(p)) out.push_back(static_cast<int>(i));
    return out;
}

Decomposition vertical_decomposition(const OrthoPolygon& poly) {
    Decomposition d;
    d.poly_ = poly;
    std::vector<Coord> xs;
    for (const Point& v : poly.vertices()) xs.push_back(v.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    struct Open {
        Coord start;
    };
    std::map<std::pair<Coord, Coord>, Coord> open;
    std::vector<Rect> rects;
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        Coord mid = (xs[i] + xs[i + 1]) / 2;
        std::vector<Coord> ys;
        for (const Edge& e : poly.edges())
            if (e.horizontal && e.lo < mid && mid < e.hi) ys.push_back(e.fixed);
        std::sort(ys.begin(), ys.end());
        std::map<std::pair<Coord, Coord>, Coord> next;
        for (size_t k = 0; k + 1 < ys.size(); k += 2) {
            std::pair<Coord, Coord> key{ys[k], ys[k + 1]};
            auto it = open.find(key);
            if (it != open.end()) {
                next.emplace(key, it->second);
                open.erase(it);
            } else {
                next.emplace(key, xs[i]);
            }
        }
        for (auto& [key, start] : open) rects.push_back(Rect{Point(start, key.first), Point(xs[i], key.second)});
        open = std::move(next);
    }
    for (auto& [key, start] : open) rects.push_back(Rect{Point(start, key.first), Point(xs.back(), key.second)});
    std::sort(rects.begin(), rects.end(), [](const Rect& a, const Rect& b) { return a.lo < b.lo; });
    d.rects_ = std::move(rects);

    size_t m = d.rects_.size();
    d.adjacency_.assign(m, {});
    d.vertical_of_.assign(m, {});
    for (size_t a = 0; a < m; ++a) {
        for (size_t b = 0; b < m; ++b) {
            const Rect& L = d.rects_[a];
            const Rect& R = d.rects_[b];
            if (L.hi.x != R.lo.x) continue;
            Coord lo = L.lo.y < R.lo.y ? R.lo.y : L.lo.y;
            Coord hi = L.hi.y < R.hi.y ? L.hi.y : R.hi.y;
            if (!(lo < hi)) continue;
            Vertical v;
            v.x = L.hi.x;
            v.y_lo = lo;
            v.y_hi = hi;
            v.left_rect = static_cast<int>(a);
            v.right_rect = static_cast<int>(b);
            Point lo_pt(v.x, lo), hi_pt(v.x, hi);
            auto li = poly.vertex_index(lo_pt);
            auto hi_i = poly.vertex_index(hi_pt);
            bool lo_reflex = li && poly.is_reflex(*li);
            bool hi_reflex = hi_i && poly.is_reflex(*hi_i);
            if (lo_reflex == hi_reflex)
                throw Error(ErrorCode::InternalInconsistency,
                            "vertical at x=" + to_string(v.x) + " does not have exactly one reflex endpoint");
            v.reflex_vertex = lo_reflex ? lo_pt : hi_pt;
            int vid = static_cast<int>(d.verticals_.size());
            d.verticals_.push_back(v);
            d.adjacency_[a].push_back(static_cast<int>(b));
            d.vertical_of_[a].push_back(vid);
            d.adjacency_[b].push_back(static_cast<int>(a));
            d.vertical_of_[b].push_back(vid);
        }
    }
    for (size_t a = 0; a < m; ++a) {
        std::vector<std::pair<int, int>> zipped;
        for (size_t k = 0; k < d.adjacency_[a].size(); ++k) zipped.emplace_back(d.adjacency_[a][k], d.vertical_of_[a][k]);
        std::sort(zipped.begin(), zipped.end());
        for (size_t k = 0; k < zipped.size(); ++k) {
            d.adjacency_[a][k] = zipped[k].first;
            d.vertical_of_[a][k] = zipped[k].second;
        }
    }
    size_t n = poly.size();
    if (d.verticals_.size() * 2 + 4 != n || m * 2 + 2 != n)
        throw Error(ErrorCode::InternalInconsistency, "decomposition counts do not match n=" + std::to_string(n));
    return d;
}

DualTree dual_tree(const Decomposition& d) {
    DualTree t;
    size_t m = d.rect_count();
    t.adjacency.resize(m);
    for (size_t a = 0; a < m; ++a) {
        t.adjacency[a] = d.neighbors(static_cast<int>(a));
        for (int b : t.adjacency[a])
            if (static_cast<int>(a) < b) t.edges.emplace_back(static_cast<int>(a), b);
    }
    if (t.edges.size() + 1 != m)
        throw Error(ErrorCode::InternalInconsistency, "dual graph has " + std::to_string(t.edges.size()) + " edges for " +
                                                          std::to_string(m) + " rectangles");
    std::vector<bool> seen(m, false);
    std::deque<int> queue{0};
    seen[0] = true;
    size_t count = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : t.adjacency[static_cast<size_t>(u)])
            if (!seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = true;
                ++count;
                queue.push_back(v);
            }
    }
    if (count != m) throw Error(ErrorCode::InternalInconsistency, "dual graph is disconnected");
    return t;
}

int RootedDualTree::height() const { return depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end()); }

RootedDualTree root_at_leaf(const Decomposition& d) {
    DualTree t = dual_tree(d);
    size_t m = d.rect_count();
    RootedDualTree r;
    r.root = 0;
    // Ids follow lexicographic (lo.x, lo.y), so the first leaf is the smallest.
    for (size_t i = 0; i < m; ++i)
        if (t.adjacency[i].size() <= 1) {
            r.root = static_cast<int>(i);
            break;
        }
    r.parent.assign(m, -1);
    r.children.assign(m, {});
    r.depth.assign(m, 0);
    std::vector<bool> seen(m, false);
    std::deque<int> queue{r.root};
    seen[static_cast<size_t>(r.root)] = true;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : t.adjacency[static_cast<size_t>(u)]) {
            if (seen[static_cast<size_t>(v)]) continue;
            seen[static_cast<size_t>(v)] = true;
            r.parent[static_cast<size_t>(v)] = u;
            r.depth[static_cast<size_t>(v)] = r.depth[static_cast<size_t>(u)] + 1;
            r.children[static_cast<size_t>(u)].push_back(v);
            queue.push_back(v);
        }
    }
    for (auto& c : r.children) std::sort(c.begin(), c.end());
    return r;
}

namespace {

Side side_of(const Rect& R, const Rect& S) { return S.lo.x == R.hi.x ? Side::Right : Side::Left; }

}  // namespace

NeighborRelation classify_neighbor(const Decomposition& d, int R, int S, const std::vector<bool>* live) {
    int vid = d.vertical_between(R, S);
    if (vid < 0) throw Error(ErrorCode::NotAdjacent, "rectangles " + std::to_string(R) + " and " + std::to_string(S) + " are not adjacent");
    const Rect& r = d.rect(R);
    const Rect& s = d.rect(S);
    NeighborRelation rel;
    rel.side = side_of(r, s);
    rel.shared_vertical = vid;
    rel.shared_reflex = d.verticals()[static_cast<size_t>(vid)].reflex_vertex;
    if (s.hi.y == r.hi.y) rel.vertical_pos = VPos::Top;
    else if (s.lo.y == r.lo.y) rel.vertical_pos = VPos::Bottom;
    else throw Error(ErrorCode::InternalInconsistency, "neighbors share neither top nor bottom edge");
    if (s.lo.y < r.lo.y || s.hi.y > r.hi.y) {
        rel.size = Size::Tall;
    } else {
        int count = 0;
        for (int t : d.neighbors(R)) {
            if (live && !(*live)[static_cast<size_t>(t)]) continue;
            if (side_of(r, d.rect(t)) == rel.side) ++count;
        }
        rel.size = count >= 2 ? Size::Paired : Size::Solo;
    }
    return rel;
}

CurlVertex curl_vertex(const Decomposition& d, int S, int R) {
    NeighborRelation rel = classify_neighbor(d, R, S);
    if (rel.size == Size::Tall)
        throw Error(ErrorCode::NotShortNeighbor, "rectangle " + std::to_string(S) + " is a tall neighbor of " + std::to_string(R));
    const Rect& s = d.rect(S);
    Coord far_x = rel.side == Side::Left ? s.lo.x : s.hi.x;
    Point c(far_x, rel.shared_reflex.y);
    auto idx = d.polygon().vertex_index(c);
    return CurlVertex{c, idx.has_value() && d.polygon().is_reflex(*idx)};
}

bool PuncturedRect::contains(const Point& p) const {
    if (!rect.contains(p)) return false;
    for (const Point& e : excluded)
        if (e == p) return false;
    return true;
}

PuncturedRect s_star(const Decomposition& d, int S, int R) {
    CurlVertex c = curl_vertex(d, S, R);
    PuncturedRect out{d.rect(S), {}};
    if (c.is_reflex) out.excluded.push_back(c.point);
    return out;
}

PuncturedRect modified_center(const Decomposition& d, int R, Side side, const std::vector<bool>* live) {
    const Rect& r = d.rect(R);
    std::vector<int> on_side;
    for (int t : d.neighbors(R)) {
        if (live && !(*live)[static_cast<size_t>(t)]) continue;
        if (side_of(r, d.rect(t)) == side) on_side.push_back(t);
    }
    if (on_side.size() != 2)
        throw Error(ErrorCode::NotPaired, "rectangle " + std::to_string(R) + " has no paired neighbors on the " + side_name(side));
    Point r1, r2;
    for (int t : on_side) {
        NeighborRelation rel = classify_neighbor(d, R, t, live);
        if (rel.vertical_pos == VPos::Top) r1 = rel.shared_reflex;
        else r2 = rel.shared_reflex;
    }
    PuncturedRect out;
    out.rect = Rect{Point(r.lo.x, r2.y), Point(r.hi.x, r1.y)};
    out.excluded = {r1, r2};
    return out;
}

OrthoPolygon union_polygon(const Decomposition& d, const std::vector<bool>& live) {
    // Directed CCW boundary pieces keyed by start point.
    std::map<Point, Point> next;
    auto add = [&](const Point& a, const Point& b) {
        if (a != b) next[a] = b;
    };
    for (size_t i = 0; i < d.rect_count(); ++i) {
        if (!live[i]) continue;
        const Rect& r = d.rect(static_cast<int>(i));
        add(r.lo, Point(r.hi.x, r.lo.y));
        add(r.hi, Point(r.lo.x, r.hi.y));
        // Vertical sides minus spans shared with live neighbors.
        for (Side side : {Side::Left, Side::Right}) {
            Coord x = side == Side::Left ? r.lo.x : r.hi.x;
            std::vector<std::pair<Coord, Coord>> covered;
            for (int t : d.neighbors(static_cast<int>(i))) {
                if (!live[static_cast<size_t>(t)]) continue;
                const Rect& s = d.rect(t);
                bool on_side = side == Side::Left ? s.hi.x == r.lo.x : s.lo.x == r.hi.x;
                if (!on_side) continue;
                const Vertical& v = d.verticals()[static_cast<size_t>(d.vertical_between(static_cast<int>(i), t))];
                covered.emplace_back(v.y_lo, v.y_hi);
            }
            std::sort(covered.begin(), covered.end());
            std::vector<std::pair<Coord, Coord>> free;
            Coord cur = r.lo.y;
            for (auto& [a, b] : covered) {
                if (cur < a) free.emplace_back(cur, a);
                if (cur < b) cur = b;
            }
            if (cur < r.hi.y) free.emplace_back(cur, r.hi.y);
            for (auto& [a, b] : free) {
                if (side == Side::Right) add(Point(x, a), Point(x, b));
                else add(Point(x, b), Point(x, a));
            }
        }
    }
    if (next.empty()) throw Error(ErrorCode::EmptyInput, "no live rectangles");
    std::vector<Point> chain;
    Point start = next.begin()->first;
    Point cur = start;
    size_t guard = 0;
    do {
        chain.push_back(cur);
        auto it = next.find(cur);
        if (it == next.end()) throw Error(ErrorCode::InternalInconsistency, "open boundary chain in union polygon");
        cur = it->second;
        if (++guard > next.size() + 1) throw Error(ErrorCode::InternalInconsistency, "boundary chain does not close");
    } while (cur != start);
    if (chain.size() != next.size()) throw Error(ErrorCode::InternalInconsistency, "union of live rectangles is not a single cycle");
    // Drop vertices where the direction does not change.
    std::vector<Point> verts;
    size_t k = chain.size();
    for (size_t i = 0; i < k; ++i) {
        const Point& a = chain[(i + k - 1) % k];
        const Point& b = chain[i];
        const Point& c = chain[(i + 1) % k];
        if (sgn(cross(b - a, c - b)) != 0) verts.push_back(b);
    }
    return OrthoPolygon::from_trusted(std::move(verts));
}

}  // namespace beacon
