#include "beacon/attraction.hpp"

#include <algorithm>

namespace beacon {

const char* terminal_name(TerminalKind k) {
    switch (k) {
        case TerminalKind::Reached: return "Reached";
        case TerminalKind::StuckPerpendicular: return "StuckPerpendicular";
        case TerminalKind::StuckConvexVertex: return "StuckConvexVertex";
        case TerminalKind::Indeterminate: return "Indeterminate";
    }
    return "?";
}

std::vector<Point> AttractionPath::polyline() const {
    std::vector<Point> out;
    out.reserve(events.size() + 1);
    out.push_back(start);
    for (const PathEvent& e : events) out.push_back(e.point);
    return out;
}

namespace {

bool within(const Coord& v, const Coord& a, const Coord& b) {
    return a <= b ? (a <= v && v <= b) : (b <= v && v <= a);
}

}  // namespace

Coord straight_extent(const OrthoPolygon& poly, const Point& p, const Point& q) {
    if (p == q) return 1;
    Coord dx = q.x - p.x, dy = q.y - p.y;
    const Coord& minx = p.x < q.x ? p.x : q.x;
    const Coord& maxx = p.x < q.x ? q.x : p.x;
    const Coord& miny = p.y < q.y ? p.y : q.y;
    const Coord& maxy = p.y < q.y ? q.y : p.y;
    std::vector<Coord> ts;
    ts.emplace_back(1);
    Coord t, c;
    for (const Edge& e : poly.edges()) {
        if (e.horizontal) {
            if (e.fixed < miny || e.fixed > maxy || e.hi < minx || e.lo > maxx) continue;
            if (sgn(dy) == 0) {
                // Collinear overlap: breakpoints at the edge ends.
                for (const Coord* x : {&e.lo, &e.hi}) {
                    t = (*x - p.x) / dx;
                    if (sgn(t) > 0 && t < 1) ts.push_back(t);
                }
            } else {
                t = (e.fixed - p.y) / dy;
                if (sgn(t) <= 0) continue;
                c = p.x + t * dx;
                if (e.lo <= c && c <= e.hi) ts.push_back(t);
            }
        } else {
            if (e.fixed < minx || e.fixed > maxx || e.hi < miny || e.lo > maxy) continue;
            if (sgn(dx) == 0) {
                for (const Coord* y : {&e.lo, &e.hi}) {
                    t = (*y - p.y) / dy;
                    if (sgn(t) > 0 && t < 1) ts.push_back(t);
                }
            } else {
                t = (e.fixed - p.x) / dx;
                if (sgn(t) <= 0) continue;
                c = p.y + t * dy;
                if (e.lo <= c && c <= e.hi) ts.push_back(t);
            }
        }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    Coord prev = 0, mid;
    for (const Coord& tk : ts) {
        if (tk > 1) break;
        mid = (prev + tk) / 2;
        Point m(Coord(p.x + mid * dx), Coord(p.y + mid * dy));
        if (!inside_closed(poly, m)) return prev;
        prev = tk;
    }
    return 1;
}

namespace {

Point unit_toward(const Point& from, const Point& to) {
    return Point(Coord(sgn(to.x - from.x)), Coord(sgn(to.y - from.y)));
}

// Slide from pos along edge index `ei` in `dir` (+1 toward edge.b, -1 toward edge.a).
// Returns the stop point; sets stuck when stopping at the perpendicular foot.
Point slide_target(const Edge& e, int dir, const Point& pos, const Point& q, bool& stuck) {
    const Point& end = dir > 0 ? e.b : e.a;
    stuck = false;
    if (e.horizontal) {
        // Foot of the perpendicular from q is at x = q.x.
        if (within(q.x, pos.x, end.x) && q.x != end.x) {
            stuck = true;
            return Point(q.x, e.fixed);
        }
    } else {
        if (within(q.y, pos.y, end.y) && q.y != end.y) {
            stuck = true;
            return Point(e.fixed, q.y);
        }
    }
    return end;
}

}  // namespace

AttractionPath attraction_path(const OrthoPolygon& poly, const Point& p, const Point& q) {
    if (!inside_closed(poly, p)) throw Error(ErrorCode::PointOutsidePolygon, "robot " + to_string(p) + " is outside the polygon");
    if (!inside_closed(poly, q)) throw Error(ErrorCode::PointOutsidePolygon, "beacon " + to_string(q) + " is outside the polygon");
    AttractionPath path;
    path.start = p;
    path.beacon = q;
    Point pos = p;
    const size_t n = poly.size();
    const size_t guard = 4 * n + 8;
    while (true) {
        if (pos == q) {
            path.terminal = TerminalStatus{TerminalKind::Reached, pos};
            return path;
        }
        if (path.events.size() > guard)
            throw Error(ErrorCode::InternalInconsistency, "attraction path from " + to_string(p) + " exceeds event bound");
        Coord t = straight_extent(poly, pos, q);
        if (sgn(t) > 0) {
            Point next = t == 1 ? q : Point(Coord(pos.x + t * (q.x - pos.x)), Coord(pos.y + t * (q.y - pos.y)));
            path.events.push_back(PathEvent{next, MoveKind::StraightTowardBeacon});
            pos = next;
            continue;
        }
        // Blocked at a boundary point.
        auto loc = locate_on_boundary(poly, pos);
        if (!loc) throw Error(ErrorCode::InternalInconsistency, "blocked at non-boundary point " + to_string(pos));
        Point d = q - pos;
        int ei;
        int dir;
        if (loc->edge) {
            ei = static_cast<int>(*loc->edge);
            const Edge& e = poly.edge(*loc->edge);
            int s = sgn(dot(unit_toward(e.a, e.b), d));
            if (s == 0) {
                path.terminal = TerminalStatus{TerminalKind::StuckPerpendicular, pos};
                return path;
            }
            dir = s;
        } else {
            size_t vi = *loc->vertex;
            const Point& prev = poly.vertex(vi + n - 1);
            const Point& next = poly.vertex(vi + 1);
            if (poly.is_reflex(vi)) {
                // Straight motion is blocked only for directions inside the open exterior quadrant.
                Point a_in = unit_toward(prev, pos), b_out = unit_toward(pos, next);
                if (!(sgn(dot(d, a_in)) < 0 && sgn(dot(d, b_out)) > 0))
                    throw Error(ErrorCode::InternalInconsistency, "blocked at reflex vertex " + to_string(pos) + " toward interior");
                path.terminal = TerminalStatus{TerminalKind::Indeterminate, pos};
                return path;
            }
            int db = sgn(dot(unit_toward(pos, next), d));
            int da = sgn(dot(unit_toward(pos, prev), d));
            if (da > 0 && db > 0)
                throw Error(ErrorCode::InternalInconsistency, "both edges decrease distance at convex vertex " + to_string(pos));
            if (db > 0) {
                ei = static_cast<int>(vi);
                dir = 1;
            } else if (da > 0) {
                ei = static_cast<int>((vi + n - 1) % n);
                dir = -1;
            } else {
                path.terminal = TerminalStatus{TerminalKind::StuckConvexVertex, pos};
                return path;
            }
        }
        bool stuck = false;
        Point target = slide_target(poly.edge(static_cast<size_t>(ei)), dir, pos, q, stuck);
        path.events.push_back(PathEvent{target, MoveKind::SlideAlongEdge, ei, dir});
        pos = target;
        if (stuck) {
            path.terminal = TerminalStatus{TerminalKind::StuckPerpendicular, pos};
            return path;
        }
    }
}

bool attracts(const OrthoPolygon& poly, const Point& beacon, const Point& p) {
    return attraction_path(poly, p, beacon).reached();
}

bool covers(const OrthoPolygon& poly, const Point& p, const Point& q) {
    return attracts(poly, p, q) && attracts(poly, q, p);
}

bool is_visible(const OrthoPolygon& poly, const Point& p, const Point& q) {
    if (!inside_closed(poly, p) || !inside_closed(poly, q)) return false;
    return straight_extent(poly, p, q) == 1;
}

StaircaseGrid::StaircaseGrid(const OrthoPolygon& poly) : poly_(&poly) {
    for (const Point& v : poly.vertices()) {
        xs_.push_back(v.x);
        ys_.push_back(v.y);
    }
    for (auto* v : {&xs_, &ys_}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    w_ = 2 * static_cast<long>(xs_.size()) - 1;
    h_ = 2 * static_cast<long>(ys_.size()) - 1;
    table_.assign(static_cast<size_t>(w_ * h_), 0);
    for (long cx = 0; cx < w_; ++cx) {
        Coord x = (cx % 2 == 0) ? xs_[cx / 2] : Coord((xs_[cx / 2] + xs_[cx / 2 + 1]) / 2);
        for (long cy = 0; cy < h_; ++cy) {
            Coord y = (cy % 2 == 0) ? ys_[cy / 2] : Coord((ys_[cy / 2] + ys_[cy / 2 + 1]) / 2);
            table_[static_cast<size_t>(cx * h_ + cy)] = inside_closed(poly, Point(x, y)) ? 1 : 0;
        }
    }
}

long StaircaseGrid::code(const std::vector<Coord>& lines, const Coord& v) const {
    auto it = std::lower_bound(lines.begin(), lines.end(), v);
    long i = it - lines.begin();
    if (it != lines.end() && *it == v) return 2 * i;
    return 2 * i - 1;
}

bool StaircaseGrid::inside(long cx, long cy) const {
    if (cx < 0 || cy < 0 || cx >= w_ || cy >= h_) return false;
    return table_[static_cast<size_t>(cx * h_ + cy)] != 0;
}

bool StaircaseGrid::visible(const Point& p, const Point& q) const {
    long px = code(xs_, p.x), py = code(ys_, p.y), qx = code(xs_, q.x), qy = code(ys_, q.y);
    if (!inside(px, py) || !inside(qx, qy)) throw Error(ErrorCode::PointOutsidePolygon, "staircase query outside polygon");
    if (p == q) return true;
    if (p.x == q.x || p.y == q.y) return is_visible(*poly_, p, q);
    // Fine grid: doubled codes of all lines between p and q, plus the query lines.
    auto fine = [](long a, long b) {
        std::vector<long> out;
        long lo = std::min(a, b), hi = std::max(a, b);
        out.push_back(lo);
        long first_even = (lo % 2 == 0) ? lo + 2 : lo + 1;
        for (long c = first_even; c < hi; c += 2) out.push_back(c);
        if (hi != lo) out.push_back(hi);
        if (a > b) std::reverse(out.begin(), out.end());
        return out;
    };
    std::vector<long> fx = fine(px, qx), fy = fine(py, qy);
    // Open span between consecutive fine lines maps to one odd code.
    auto between = [](long a, long b) {
        long lo = std::min(a, b);
        return lo % 2 == 0 ? lo + 1 : lo;
    };
    size_t W = fx.size(), H = fy.size();
    std::vector<char> reach(W * H, 0);
    for (size_t i = 0; i < W; ++i) {
        for (size_t j = 0; j < H; ++j) {
            if (!inside(fx[i], fy[j])) continue;
            bool r = false;
            if (i == 0 && j == 0) r = true;
            if (!r && i > 0 && reach[(i - 1) * H + j] && inside(between(fx[i - 1], fx[i]), fy[j])) r = true;
            if (!r && j > 0 && reach[i * H + j - 1] && inside(fx[i], between(fy[j - 1], fy[j]))) r = true;
            reach[i * H + j] = r ? 1 : 0;
        }
    }
    return reach[W * H - 1] != 0;
}

bool staircase_visible(const OrthoPolygon& poly, const Point& p, const Point& q) {
    return StaircaseGrid(poly).visible(p, q);
}

namespace {

// Parameter range [t0, t1] of segment a->b inside closed r; false when empty.
bool clip(const Point& a, const Point& b, const Rect& r, Coord& t0, Coord& t1) {
    t0 = 0;
    t1 = 1;
    Coord lo, hi;
    for (int axis = 0; axis < 2; ++axis) {
        const Coord& s = axis == 0 ? a.x : a.y;
        const Coord& e = axis == 0 ? b.x : b.y;
        const Coord& rl = axis == 0 ? r.lo.x : r.lo.y;
        const Coord& rh = axis == 0 ? r.hi.x : r.hi.y;
        Coord dlt = e - s;
        if (sgn(dlt) == 0) {
            if (s < rl || s > rh) return false;
            continue;
        }
        lo = (rl - s) / dlt;
        hi = (rh - s) / dlt;
        if (hi < lo) std::swap(lo, hi);
        if (lo > t0) t0 = lo;
        if (hi < t1) t1 = hi;
        if (t1 < t0) return false;
    }
    return true;
}

}  // namespace

std::vector<int> path_rect_support(const AttractionPath& path, const Decomposition& d) {
    std::vector<Point> pts = path.polyline();
    std::vector<int> out;
    Coord t0, t1;
    for (size_t r = 0; r < d.rect_count(); ++r) {
        const Rect& rect = d.rect(static_cast<int>(r));
        bool in = false;
        std::optional<Point> touch;
        if (pts.size() == 1) {
            // A path with no motion touches at most one point.
            continue;
        }
        for (size_t i = 0; i + 1 < pts.size() && !in; ++i) {
            const Point& a = pts[i];
            const Point& b = pts[i + 1];
            // Cheap bounding-box rejection.
            if ((a.x < rect.lo.x && b.x < rect.lo.x) || (a.x > rect.hi.x && b.x > rect.hi.x) ||
                (a.y < rect.lo.y && b.y < rect.lo.y) || (a.y > rect.hi.y && b.y > rect.hi.y))
                continue;
            if (!clip(a, b, rect, t0, t1)) continue;
            if (t0 < t1) {
                in = true;
                break;
            }
            Point pt(Coord(a.x + t0 * (b.x - a.x)), Coord(a.y + t0 * (b.y - a.y)));
            if (touch && *touch != pt) in = true;
            else touch = pt;
        }
        if (in) out.push_back(static_cast<int>(r));
    }
    return out;
}

bool is_local(const AttractionPath& path, const Decomposition& d) { return path_rect_support(path, d).size() <= 3; }

}  // namespace beacon
