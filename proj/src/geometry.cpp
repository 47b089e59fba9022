#include "beacon/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace beacon {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotOrthogonal: return "NotOrthogonal";
        case ErrorCode::NotSimple: return "NotSimple";
        case ErrorCode::GeneralPositionViolation: return "GeneralPositionViolation";
        case ErrorCode::TooFewVertices: return "TooFewVertices";
        case ErrorCode::PerturbationFailure: return "PerturbationFailure";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::GenerationFailure: return "GenerationFailure";
        case ErrorCode::NotAdjacent: return "NotAdjacent";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::NotShortNeighbor: return "NotShortNeighbor";
        case ErrorCode::NotPaired: return "NotPaired";
        case ErrorCode::PointOutsidePolygon: return "PointOutsidePolygon";
        case ErrorCode::NoCaseMatched: return "NoCaseMatched";
        case ErrorCode::NotPairedCut: return "NotPairedCut";
        case ErrorCode::DepthTooLarge: return "DepthTooLarge";
        case ErrorCode::SpecInvariantViolated: return "SpecInvariantViolated";
        case ErrorCode::SectionOutOfRange: return "SectionOutOfRange";
        case ErrorCode::CoordinateTooLarge: return "CoordinateTooLarge";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

std::string to_string(const Coord& c) { return c.get_str(); }

std::string to_string(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

double to_double(const Coord& c) { return c.get_d(); }

size_t bit_length(const Point& p) {
    size_t b = 0;
    for (const Coord* c : {&p.x, &p.y}) {
        b = std::max(b, mpz_sizeinbase(c->get_num_mpz_t(), 2));
        b = std::max(b, mpz_sizeinbase(c->get_den_mpz_t(), 2));
    }
    return b;
}

namespace {

Edge make_edge(const Point& a, const Point& b) {
    Edge e;
    e.a = a;
    e.b = b;
    e.horizontal = (a.y == b.y);
    if (e.horizontal) {
        e.fixed = a.y;
        bool forward = a.x < b.x;
        e.lo = forward ? a.x : b.x;
        e.hi = forward ? b.x : a.x;
        // CCW: interior to the left of travel direction.
        e.inward = forward ? 1 : -1;
    } else {
        e.fixed = a.x;
        bool up = a.y < b.y;
        e.lo = up ? a.y : b.y;
        e.hi = up ? b.y : a.y;
        e.inward = up ? -1 : 1;
    }
    return e;
}

Coord signed_area2(const std::vector<Point>& v) {
    Coord s = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        s += a.x * b.y - b.x * a.y;
    }
    return s;
}

// Closed axis-parallel segments intersect?
bool axis_segments_intersect(const Edge& e, const Edge& f) {
    if (e.horizontal == f.horizontal) {
        if (e.fixed != f.fixed) return false;
        return !(e.hi < f.lo || f.hi < e.lo);
    }
    const Edge& h = e.horizontal ? e : f;
    const Edge& v = e.horizontal ? f : e;
    return h.lo <= v.fixed && v.fixed <= h.hi && v.lo <= h.fixed && h.fixed <= v.hi;
}

}  // namespace

OrthoPolygon OrthoPolygon::from_trusted(std::vector<Point> ccw_vertices) {
    OrthoPolygon p;
    p.vertices_ = std::move(ccw_vertices);
    size_t n = p.vertices_.size();
    p.edges_.reserve(n);
    for (size_t i = 0; i < n; ++i) p.edges_.push_back(make_edge(p.vertices_[i], p.vertices_[(i + 1) % n]));
    p.reflex_.assign(n, false);
    for (size_t i = 0; i < n; ++i) {
        const Point& prev = p.vertices_[(i + n - 1) % n];
        const Point& cur = p.vertices_[i];
        const Point& next = p.vertices_[(i + 1) % n];
        p.reflex_[i] = sgn(cross(cur - prev, next - cur)) < 0;
    }
    if (n > 0) {
        Coord minx = p.vertices_[0].x, maxx = minx, miny = p.vertices_[0].y, maxy = miny;
        for (const Point& v : p.vertices_) {
            if (v.x < minx) minx = v.x;
            if (v.x > maxx) maxx = v.x;
            if (v.y < miny) miny = v.y;
            if (v.y > maxy) maxy = v.y;
        }
        p.bbox_ = Rect{Point(minx, miny), Point(maxx, maxy)};
    }
    return p;
}

size_t OrthoPolygon::reflex_count() const { return std::count(reflex_.begin(), reflex_.end(), true); }

std::optional<size_t> OrthoPolygon::vertex_index(const Point& p) const {
    for (size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == p) return i;
    return std::nullopt;
}

Coord OrthoPolygon::signed_area_twice() const { return signed_area2(vertices_); }

OrthoPolygon validate_orthogonal(std::vector<Point> v) {
    size_t n = v.size();
    if (n < 4) throw Error(ErrorCode::TooFewVertices, "polygon has " + std::to_string(n) + " vertices, need at least 4");
    for (size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        if (a == b) throw Error(ErrorCode::NotSimple, "repeated vertex at indices " + std::to_string(i) + " and " + std::to_string((i + 1) % n));
        bool h = a.y == b.y, vert = a.x == b.x;
        if (!h && !vert) throw Error(ErrorCode::NotOrthogonal, "edge " + std::to_string(i) + " is neither horizontal nor vertical");
    }
    for (size_t i = 0; i < n; ++i) {
        bool h1 = v[i].y == v[(i + 1) % n].y;
        bool h2 = v[(i + 1) % n].y == v[(i + 2) % n].y;
        if (h1 == h2)
            throw Error(ErrorCode::NotOrthogonal, "edges " + std::to_string(i) + " and " + std::to_string((i + 1) % n) +
                                                      " do not alternate at vertex " + std::to_string((i + 1) % n));
    }
    std::vector<Edge> edges;
    edges.reserve(n);
    for (size_t i = 0; i < n; ++i) edges.push_back(make_edge(v[i], v[(i + 1) % n]));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (axis_segments_intersect(edges[i], edges[j]))
                throw Error(ErrorCode::NotSimple, "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
        }
    }
    Coord a2 = signed_area2(v);
    if (sgn(a2) < 0) std::reverse(v.begin(), v.end());
    return OrthoPolygon::from_trusted(std::move(v));
}

OrthoPolygon validate_polygon(std::vector<Point> vertices) {
    OrthoPolygon p = validate_orthogonal(std::move(vertices));
    size_t n = p.size();
    std::map<Coord, size_t> hy, vx;
    for (size_t i = 0; i < n; ++i) {
        const Edge& e = p.edge(i);
        auto& m = e.horizontal ? hy : vx;
        auto [it, inserted] = m.emplace(e.fixed, i);
        if (!inserted)
            throw Error(ErrorCode::GeneralPositionViolation,
                        std::string(e.horizontal ? "horizontal" : "vertical") + " edges " + std::to_string(it->second) +
                            " and " + std::to_string(i) + " share coordinate " + to_string(e.fixed));
    }
    if (p.reflex_count() * 2 + 4 != n)
        throw Error(ErrorCode::InternalInconsistency, "reflex count does not equal (n-4)/2");
    return p;
}

namespace {

Coord min_positive_gap(std::vector<Coord> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    Coord best = 0;
    bool have = false;
    for (size_t i = 1; i < values.size(); ++i) {
        Coord g = values[i] - values[i - 1];
        if (!have || g < best) {
            best = g;
            have = true;
        }
    }
    return have ? best : Coord(1);
}

}  // namespace

Coord default_perturbation_delta(const std::vector<Point>& vertices) {
    std::vector<Coord> xs, ys;
    for (const Point& p : vertices) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    Coord gx = min_positive_gap(xs), gy = min_positive_gap(ys);
    Coord g = gx < gy ? gx : gy;
    return g / Coord(4 * static_cast<long>(vertices.size()));
}

std::vector<Point> perturb_with_delta(std::vector<Point> vertices, const Coord& delta) {
    OrthoPolygon p = validate_orthogonal(std::move(vertices));
    size_t n = p.size();
    // Class key: orientation + line coordinate; members in edge order.
    std::map<std::pair<bool, Coord>, std::vector<size_t>> classes;
    for (size_t i = 0; i < n; ++i) classes[{p.edge(i).horizontal, p.edge(i).fixed}].push_back(i);
    std::vector<Coord> line(n);
    for (size_t i = 0; i < n; ++i) line[i] = p.edge(i).fixed;
    for (auto& [key, members] : classes) {
        for (size_t k = 1; k < members.size(); ++k) {
            size_t e = members[k];
            line[e] += Coord(static_cast<long>(k) * p.edge(e).inward) * delta;
        }
    }
    std::vector<Point> out(n);
    for (size_t i = 0; i < n; ++i) {
        size_t prev = (i + n - 1) % n;
        const Edge& ep = p.edge(prev);
        const Edge& ei = p.edge(i);
        const Coord& xs = ep.horizontal ? line[i] : line[prev];
        const Coord& ys = ep.horizontal ? line[prev] : line[i];
        (void)ei;
        out[i] = Point(xs, ys);
    }
    for (size_t i = 0; i < n; ++i) {
        if (out[i] == out[(i + 1) % n])
            throw Error(ErrorCode::PerturbationFailure, "edge " + std::to_string(i) + " collapses to zero length");
        // Direction of each edge must be preserved.
        const Edge& orig = p.edge(i);
        const Point& a = out[i];
        const Point& b = out[(i + 1) % n];
        int s0 = orig.horizontal ? cmp(orig.b.x, orig.a.x) : cmp(orig.b.y, orig.a.y);
        int s1 = orig.horizontal ? cmp(b.x, a.x) : cmp(b.y, a.y);
        if (s0 != s1) throw Error(ErrorCode::PerturbationFailure, "edge " + std::to_string(i) + " reverses direction");
    }
    try {
        validate_orthogonal(out);
    } catch (const Error& e) {
        throw Error(ErrorCode::PerturbationFailure, std::string("perturbed polygon invalid: ") + e.what());
    }
    return out;
}

std::vector<Point> perturb_to_general_position(std::vector<Point> vertices) {
    Coord delta = default_perturbation_delta(vertices);
    return perturb_with_delta(std::move(vertices), delta);
}

namespace {

struct Line {
    // a x + b y = c, normalized so the first nonzero of (a, b) equals 1.
    Coord a, b, c;
};

bool line_less(const Line& l, const Line& m) {
    int c = cmp(l.a, m.a);
    if (c) return c < 0;
    c = cmp(l.b, m.b);
    if (c) return c < 0;
    return l.c < m.c;
}

bool line_eq(const Line& l, const Line& m) { return l.a == m.a && l.b == m.b && l.c == m.c; }

}  // namespace

Coord compute_epsilon_reference(const OrthoPolygon& poly) {
    const auto& v = poly.vertices();
    size_t n = v.size();
    std::vector<Line> lines;
    lines.reserve(n * (n - 1) / 2);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            Line l;
            l.a = v[j].y - v[i].y;
            l.b = v[i].x - v[j].x;
            if (sgn(l.a) != 0) {
                l.b /= l.a;
                l.a = 1;
            } else {
                l.b = 1;
            }
            l.c = l.a * v[i].x + l.b * v[i].y;
            lines.push_back(std::move(l));
        }
    }
    std::sort(lines.begin(), lines.end(), line_less);
    lines.erase(std::unique(lines.begin(), lines.end(), line_eq), lines.end());

    std::vector<Point> pts;
    pts.reserve(lines.size() * (lines.size() - 1) / 2);
    Coord det, x, y;
    for (size_t i = 0; i < lines.size(); ++i) {
        for (size_t j = i + 1; j < lines.size(); ++j) {
            const Line& l = lines[i];
            const Line& m = lines[j];
            det = l.a * m.b - m.a * l.b;
            if (sgn(det) == 0) continue;
            x = (l.c * m.b - m.c * l.b) / det;
            y = (l.a * m.c - m.a * l.c) / det;
            pts.emplace_back(x, y);
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Coord best = -1;
    Coord dx, dy;
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            dx = pts[j].x - pts[i].x;
            if (sgn(best) > 0 && dx >= best) break;
            dy = abs_coord(Coord(pts[j].y - pts[i].y));
            const Coord& d = dx < dy ? dy : dx;
            if (sgn(best) < 0 || d < best) best = d;
        }
    }
    return best / 2;
}

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

int ctz128(u128 v) {
    uint64_t lo = static_cast<uint64_t>(v);
    if (lo != 0) return __builtin_ctzll(lo);
    return 64 + __builtin_ctzll(static_cast<uint64_t>(v >> 64));
}

u128 gcd128(u128 a, u128 b) {
    if ((a >> 64) == 0 && (b >> 64) == 0) return std::gcd(static_cast<uint64_t>(a), static_cast<uint64_t>(b));
    if (a == 0) return b;
    if (b == 0) return a;
    int shift = ctz128(a | b);
    a >>= ctz128(a);
    do {
        b >>= ctz128(b);
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

mpz_class to_mpz(i128 v) {
    u128 m = abs128(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(m >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(m)));
    mpz_class r = (hi << 64) + lo;
    return v < 0 ? mpz_class(-r) : r;
}

struct ILine {
    int64_t a, b;
    i128 c;
    bool operator<(const ILine& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
    bool operator==(const ILine& o) const { return a == o.a && b == o.b && c == o.c; }
};

// Intersection X/D, Y/D in lowest terms, D > 0.
struct IPt {
    i128 X, Y, D;
    long double xd, yd;
};

Coord exact_linf(const IPt& p, const IPt& q) {
    mpz_class dp = to_mpz(p.D), dq = to_mpz(q.D);
    mpq_class dx(to_mpz(p.X) * dq - to_mpz(q.X) * dp, dp * dq);
    mpq_class dy(to_mpz(p.Y) * dq - to_mpz(q.Y) * dp, dp * dq);
    dx.canonicalize();
    dy.canonicalize();
    dx = abs(dx);
    dy = abs(dy);
    return dx < dy ? dy : dx;
}

// Same quantity as the reference when every scaled coordinate fits in 40 bits.
std::optional<Coord> epsilon_integer(const std::vector<Point>& v) {
    mpz_class L = 1;
    for (const Point& p : v) {
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), p.x.get_den_mpz_t());
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), p.y.get_den_mpz_t());
    }
    const mpz_class lim = mpz_class(1) << 40;
    std::vector<std::pair<int64_t, int64_t>> P;
    for (const Point& p : v) {
        mpz_class x = p.x.get_num() * (L / p.x.get_den());
        mpz_class y = p.y.get_num() * (L / p.y.get_den());
        if (abs(x) >= lim || abs(y) >= lim) return std::nullopt;
        P.emplace_back(x.get_si(), y.get_si());
    }
    size_t n = P.size();
    std::vector<ILine> lines;
    lines.reserve(n * (n - 1) / 2);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            int64_t a = P[j].second - P[i].second;
            int64_t b = P[i].first - P[j].first;
            int64_t g = std::gcd(a, b);
            a /= g;
            b /= g;
            if (a < 0 || (a == 0 && b < 0)) {
                a = -a;
                b = -b;
            }
            lines.push_back(ILine{a, b, static_cast<i128>(a) * P[i].first + static_cast<i128>(b) * P[i].second});
        }
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

    std::vector<IPt> pts;
    pts.reserve(lines.size() * (lines.size() - 1) / 2);
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j) {
            const ILine& l = lines[i];
            const ILine& m = lines[j];
            i128 D = static_cast<i128>(l.a) * m.b - static_cast<i128>(m.a) * l.b;
            if (D == 0) continue;
            i128 X = l.c * m.b - m.c * l.b;
            i128 Y = m.c * l.a - l.c * m.a;
            if (D < 0) {
                D = -D;
                X = -X;
                Y = -Y;
            }
            u128 g = gcd128(gcd128(abs128(X), abs128(Y)), static_cast<u128>(D));
            X /= static_cast<i128>(g);
            Y /= static_cast<i128>(g);
            D /= static_cast<i128>(g);
            pts.push_back(IPt{X, Y, D, 0, 0});
        }
    std::sort(pts.begin(), pts.end(), [](const IPt& p, const IPt& q) {
        if (p.X != q.X) return p.X < q.X;
        if (p.Y != q.Y) return p.Y < q.Y;
        return p.D < q.D;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const IPt& p, const IPt& q) { return p.X == q.X && p.Y == q.Y && p.D == q.D; }),
              pts.end());
    if (pts.size() < 2) return std::nullopt;
    for (IPt& p : pts) {
        long double d = static_cast<long double>(p.D);
        p.xd = static_cast<long double>(p.X) / d;
        p.yd = static_cast<long double>(p.Y) / d;
    }
    std::sort(pts.begin(), pts.end(), [](const IPt& p, const IPt& q) { return p.xd < q.xd; });

    // Strip sweep on long double approximations, which are within REL * |value| of
    // the truth; every candidate pair is settled exactly.
    const long double REL = 1e-17L;
    Coord best = exact_linf(pts[0], pts[1]);
    auto upper = [](const Coord& d) { return static_cast<long double>(d.get_d()) * (1 + 1e-12L) + 1e-300L; };
    long double best_ub = upper(best);
    std::set<std::pair<long double, size_t>> active;
    size_t front = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        const IPt& p = pts[i];
        long double px_lo = p.xd - REL * std::fabs(p.xd);
        while (front < i) {
            const IPt& f = pts[front];
            if (f.xd + REL * std::fabs(f.xd) >= px_lo - best_ub) break;
            active.erase({f.yd, front});
            ++front;
        }
        long double slack = best_ub + 2 * REL * (2 * std::fabs(p.yd) + best_ub) + 1e-300L;
        for (auto it = active.lower_bound({p.yd - slack, 0}); it != active.end() && it->first <= p.yd + slack; ++it) {
            const IPt& q = pts[it->second];
            long double ex = REL * (std::fabs(p.xd) + std::fabs(q.xd));
            long double ey = REL * (std::fabs(p.yd) + std::fabs(q.yd));
            if (std::max(p.xd - q.xd - ex, std::fabs(q.yd - p.yd) - ey) > best_ub) continue;
            Coord d = exact_linf(p, q);
            if (d < best) {
                best = d;
                best_ub = upper(best);
            }
        }
        active.insert({p.yd, i});
    }
    return Coord(best / L) / 2;
}

}  // namespace

Coord compute_epsilon(const OrthoPolygon& poly) {
    if (auto fast = epsilon_integer(poly.vertices())) return *fast;
    return compute_epsilon_reference(poly);
}

Containment contains_point(const OrthoPolygon& poly, const Point& p) {
    bool inside = false;
    for (const Edge& e : poly.edges()) {
        if (e.horizontal) {
            if (e.fixed == p.y && e.lo <= p.x && p.x <= e.hi) return Containment::Boundary;
        } else {
            int c = cmp(e.fixed, p.x);
            if (c == 0) {
                if (e.lo <= p.y && p.y <= e.hi) return Containment::Boundary;
            } else if (c > 0 && e.lo <= p.y && p.y < e.hi) {
                inside = !inside;
            }
        }
    }
    return inside ? Containment::Interior : Containment::Exterior;
}

std::optional<BoundaryLocation> locate_on_boundary(const OrthoPolygon& poly, const Point& p) {
    for (size_t i = 0; i < poly.size(); ++i) {
        if (poly.vertex(i) == p) return BoundaryLocation{std::nullopt, i};
    }
    for (size_t i = 0; i < poly.size(); ++i) {
        const Edge& e = poly.edge(i);
        const Coord& fixed = e.horizontal ? p.y : p.x;
        const Coord& free = e.horizontal ? p.x : p.y;
        if (fixed == e.fixed && e.lo < free && free < e.hi) return BoundaryLocation{i, std::nullopt};
    }
    return std::nullopt;
}

Hull rectangular_hull(std::span<const Point> points) {
    if (points.empty()) throw Error(ErrorCode::EmptyInput, "rectangular hull of empty set");
    Coord minx = points[0].x, maxx = minx, miny = points[0].y, maxy = miny;
    for (const Point& p : points) {
        if (p.x < minx) minx = p.x;
        if (p.x > maxx) maxx = p.x;
        if (p.y < miny) miny = p.y;
        if (p.y > maxy) maxy = p.y;
    }
    Hull h;
    h.box = Rect{Point(minx, miny), Point(maxx, maxy)};
    bool flat_x = minx == maxx, flat_y = miny == maxy;
    if (flat_x && flat_y) h.kind = HullKind::Point;
    else if (flat_x) h.kind = HullKind::VerticalSegment;
    else if (flat_y) h.kind = HullKind::HorizontalSegment;
    else h.kind = HullKind::Rectangle;
    return h;
}

bool rect_in_polygon(const OrthoPolygon& poly, const Rect& r) {
    // No boundary edge may meet the open rectangle; then one interior sample decides.
    for (const Edge& e : poly.edges()) {
        if (e.horizontal) {
            if (r.lo.y < e.fixed && e.fixed < r.hi.y && e.lo < r.hi.x && r.lo.x < e.hi) return false;
        } else {
            if (r.lo.x < e.fixed && e.fixed < r.hi.x && e.lo < r.hi.y && r.lo.y < e.hi) return false;
        }
    }
    if (r.lo.x == r.hi.x || r.lo.y == r.hi.y) {
        // Degenerate: every point of the segment must be in the closed polygon.
        // Check endpoints, midpoint and every edge crossing along it.
        std::vector<Coord> ts;
        bool vertical = r.lo.x == r.hi.x;
        const Coord& a = vertical ? r.lo.y : r.lo.x;
        const Coord& b = vertical ? r.hi.y : r.hi.x;
        ts.push_back(a);
        ts.push_back(b);
        for (const Point& v : poly.vertices()) {
            const Coord& t = vertical ? v.y : v.x;
            if (a < t && t < b) ts.push_back(t);
        }
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        for (size_t i = 0; i < ts.size(); ++i) {
            Point p = vertical ? Point(r.lo.x, ts[i]) : Point(ts[i], r.lo.y);
            if (!inside_closed(poly, p)) return false;
            if (i + 1 < ts.size()) {
                Coord m = (ts[i] + ts[i + 1]) / 2;
                Point q = vertical ? Point(r.lo.x, m) : Point(m, r.lo.y);
                if (!inside_closed(poly, q)) return false;
            }
        }
        return true;
    }
    return inside_closed(poly, r.center());
}

bool segment_on_boundary(const OrthoPolygon& poly, const Point& a, const Point& b) {
    if (a == b) return contains_point(poly, a) == Containment::Boundary;
    bool horizontal = a.y == b.y;
    const Coord& fixed = horizontal ? a.y : a.x;
    Coord lo = horizontal ? a.x : a.y, hi = horizontal ? b.x : b.y;
    if (hi < lo) std::swap(lo, hi);
    // Union of collinear overlapping edges must cover [lo, hi].
    std::vector<std::pair<Coord, Coord>> spans;
    for (const Edge& e : poly.edges()) {
        if (e.horizontal != horizontal || e.fixed != fixed) continue;
        spans.emplace_back(e.lo, e.hi);
    }
    std::sort(spans.begin(), spans.end());
    Coord reach = lo;
    for (const auto& [s, t] : spans) {
        if (s > reach) break;
        if (t > reach) reach = t;
    }
    return reach >= hi;
}

namespace {

using IPoint = std::pair<long, long>;

bool try_validate(const std::vector<IPoint>& v) {
    std::vector<Point> pts;
    pts.reserve(v.size());
    for (auto [x, y] : v) pts.emplace_back(x, y);
    try {
        validate_orthogonal(pts);
        return true;
    } catch (const Error&) {
        return false;
    }
}

// Inward-left normal of the CCW travel direction (dx, dy).
std::pair<long, long> unit_dir(IPoint a, IPoint b) {
    long dx = (b.first > a.first) - (b.first < a.first);
    long dy = (b.second > a.second) - (b.second < a.second);
    return {dx, dy};
}

long edge_length(IPoint a, IPoint b) { return std::labs(b.first - a.first) + std::labs(b.second - a.second); }

bool is_convex_int(const std::vector<IPoint>& v, size_t i) {
    size_t n = v.size();
    IPoint p = v[(i + n - 1) % n], c = v[i], q = v[(i + 1) % n];
    long cr = (c.first - p.first) * (q.second - c.second) - (c.second - p.second) * (q.first - c.first);
    return cr > 0;
}

}  // namespace

OrthoPolygon generate_random_orthogonal(int n_target, uint64_t seed) {
    if (n_target < 4 || n_target % 2 != 0)
        throw Error(ErrorCode::GenerationFailure, "n_target must be even and at least 4");
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<uint64_t>(attempt) * 0xD1B54A32D192ED03ULL + 1);
        const long side = 64L * n_target;
        std::vector<IPoint> v = {{0, 0}, {side, 0}, {side, side}, {0, side}};
        int failures = 0;
        while (static_cast<int>(v.size()) < n_target && failures < 400) {
            int remaining = n_target - static_cast<int>(v.size());
            bool notch = remaining >= 4 && (rng() % 2 == 0);
            size_t n = v.size();
            std::vector<IPoint> cand;
            if (notch) {
                size_t i = rng() % n;
                IPoint a = v[i], b = v[(i + 1) % n];
                long len = edge_length(a, b);
                if (len < 4) {
                    ++failures;
                    continue;
                }
                long s1 = 1 + static_cast<long>(rng() % (len - 2));
                long s2 = 1 + static_cast<long>(rng() % (len - 2));
                if (s1 == s2) {
                    ++failures;
                    continue;
                }
                if (s1 > s2) std::swap(s1, s2);
                auto [ux, uy] = unit_dir(a, b);
                long nx = -uy, ny = ux;
                long depth = 1 + static_cast<long>(rng() % std::max<long>(1, side / 3));
                IPoint p1{a.first + ux * s1, a.second + uy * s1};
                IPoint p2{p1.first + nx * depth, p1.second + ny * depth};
                IPoint p4{a.first + ux * s2, a.second + uy * s2};
                IPoint p3{p4.first + nx * depth, p4.second + ny * depth};
                cand = v;
                cand.insert(cand.begin() + static_cast<long>(i) + 1, {p1, p2, p3, p4});
            } else {
                std::vector<size_t> convex;
                for (size_t i = 0; i < n; ++i)
                    if (is_convex_int(v, i)) convex.push_back(i);
                size_t i = convex[rng() % convex.size()];
                IPoint prev = v[(i + n - 1) % n], c = v[i], next = v[(i + 1) % n];
                long la = edge_length(prev, c), lb = edge_length(c, next);
                if (la < 2 || lb < 2) {
                    ++failures;
                    continue;
                }
                long s = 1 + static_cast<long>(rng() % (la - 1));
                long t = 1 + static_cast<long>(rng() % (lb - 1));
                auto [ax, ay] = unit_dir(c, prev);
                auto [bx, by] = unit_dir(c, next);
                IPoint v1{c.first + ax * s, c.second + ay * s};
                IPoint v2{v1.first + bx * t, v1.second + by * t};
                IPoint v3{c.first + bx * t, c.second + by * t};
                cand = v;
                cand[i] = v1;
                cand.insert(cand.begin() + static_cast<long>(i) + 1, {v2, v3});
            }
            if (try_validate(cand)) {
                v = std::move(cand);
            } else {
                ++failures;
            }
        }
        if (static_cast<int>(v.size()) != n_target) continue;
        std::vector<Point> pts;
        for (auto [x, y] : v) pts.emplace_back(x, y);
        try {
            return validate_polygon(perturb_to_general_position(pts));
        } catch (const Error&) {
            continue;
        }
    }
    throw Error(ErrorCode::GenerationFailure, "no valid polygon after 64 re-seeds");
}

std::vector<CorpusEntry> generate_corpus(size_t count, uint64_t seed, int min_n, int max_n) {
    if (min_n < 4 || min_n % 2 != 0 || max_n < min_n)
        throw Error(ErrorCode::GenerationFailure, "bad corpus size range");
    size_t sizes = static_cast<size_t>((max_n - min_n) / 2 + 1);
    std::vector<CorpusEntry> out;
    for (size_t i = 0; i < count; ++i) {
        int n = min_n + 2 * static_cast<int>(i % sizes);
        uint64_t s = seed * 1000003ULL + i;
        out.push_back(CorpusEntry{s, n, generate_random_orthogonal(n, s)});
    }
    return out;
}

}  // namespace beacon
