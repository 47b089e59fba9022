#include "beacon/spiral.hpp"

#include "beacon/errors.hpp"

#include <algorithm>

namespace beacon {

namespace {

// Travel direction of hallway k (r_{k-1} -> r_k): east, south, west, north, repeating.
Point direction(int k) {
    switch ((k - 1) % 4) {
    case 0: return Point(1, 0);
    case 1: return Point(0, -1);
    case 2: return Point(-1, 0);
    default: return Point(0, 1);
    }
}

// Corridor side of hallway k: left of travel.
Point normal(int k) {
    Point d = direction(k);
    return Point(Coord(-d.y), d.x);
}

Rect bbox(std::initializer_list<Point> pts) {
    Rect r{*pts.begin(), *pts.begin()};
    for (const Point& p : pts) {
        if (p.x < r.lo.x) r.lo.x = p.x;
        if (p.y < r.lo.y) r.lo.y = p.y;
        if (p.x > r.hi.x) r.hi.x = p.x;
        if (p.y > r.hi.y) r.hi.y = p.y;
    }
    return r;
}

Point axis_unit(const Point& v) { return Point(Coord(sgn(v.x)), Coord(sgn(v.y))); }

void check_section(const SpiralGeometry& g, int i) {
    if (i < 1 || i > g.spec.r)
        throw Error(ErrorCode::SectionOutOfRange,
                    "section " + std::to_string(i) + " outside 1.." + std::to_string(g.spec.r));
}

std::vector<Point> rect_poly(const Rect& r) {
    return {r.lo, Point(r.hi.x, r.lo.y), r.hi, Point(r.lo.x, r.hi.y)};
}

Coord side_of(const Point& a, const Point& b, const Point& p) { return cross(b - a, p - a); }

}  // namespace

std::vector<mpz_class> default_lengths(int r) {
    std::vector<mpz_class> out;
    for (int k = 1; k <= 3 * r + 1; ++k) {
        mpz_class v;
        mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(k) * static_cast<unsigned long>(k));
        out.push_back(v);
    }
    return out;
}

SpiralSpec default_spiral(int r) { return SpiralSpec{r, default_lengths(r)}; }

bool spiral_condition_holds(const SpiralSpec& spec) {
    for (int j = 3; j <= 3 * spec.r; ++j)
        if (!(spec.lengths[static_cast<size_t>(j - 1)] > spec.lengths[static_cast<size_t>(j - 3)] + 2)) return false;
    return true;
}

bool LengthReport::all() const {
    return std::all_of(holds.begin(), holds.end(), [](bool b) { return b; });
}

LengthReport check_length_inequality(const SpiralSpec& spec) {
    LengthReport rep;
    auto l = [&](int k) -> const mpz_class& { return spec.lengths[static_cast<size_t>(k - 1)]; };
    for (int i = 1; i <= spec.r; ++i) {
        // l_{3i+1} > 4 l_{3i} (l_{3i-1} + 1) / l_{3i-2}, cross-multiplied.
        mpz_class lhs = l(3 * i + 1) * l(3 * i - 2);
        mpz_class rhs = 4 * l(3 * i) * (l(3 * i - 1) + 1);
        rep.holds.push_back(lhs > rhs);
    }
    return rep;
}

bool exponent_law_holds(int k_max) {
    for (long k = 4; k <= k_max; ++k) {
        auto m = [](long j) { return j * j; };
        if (m(k) < 3 + m(k - 1) + m(k - 2) - m(k - 3)) return false;
    }
    return true;
}

SpiralGeometry generate_spiral(const SpiralSpec& spec, bool check_spec) {
    if (spec.r < 1) throw Error(ErrorCode::SpecInvariantViolated, "spiral needs r >= 1");
    if (spec.lengths.size() != static_cast<size_t>(3 * spec.r + 1))
        throw Error(ErrorCode::SpecInvariantViolated,
                    "expected " + std::to_string(3 * spec.r + 1) + " lengths, got " + std::to_string(spec.lengths.size()));
    for (const mpz_class& l : spec.lengths)
        if (l <= 0) throw Error(ErrorCode::SpecInvariantViolated, "lengths must be positive");
    if (check_spec) {
        if (!spiral_condition_holds(spec))
            throw Error(ErrorCode::SpecInvariantViolated, "lengths violate l_j > l_{j-2} + 2");
        LengthReport rep = check_length_inequality(spec);
        for (size_t i = 0; i < rep.holds.size(); ++i)
            if (!rep.holds[i])
                throw Error(ErrorCode::SpecInvariantViolated,
                            "length inequality fails for section " + std::to_string(i + 1));
    }
    SpiralGeometry g;
    g.spec = spec;
    int K = 3 * spec.r + 1;  // hallways 1..K, reflex r_1..r_{K-1}
    auto len = [&](int k) { return Coord(spec.lengths[static_cast<size_t>(k - 1)]); };

    g.r.resize(static_cast<size_t>(K + 1));
    g.r[1] = Point(0, 0);
    g.r[0] = g.r[1] - scale(direction(1), len(1));
    for (int k = 2; k <= K; ++k) g.r[static_cast<size_t>(k)] = g.r[static_cast<size_t>(k - 1)] + scale(direction(k), len(k));
    g.c.resize(static_cast<size_t>(K + 1));
    g.c[0] = g.r[0] + normal(1);
    for (int k = 1; k < K; ++k) g.c[static_cast<size_t>(k)] = g.r[static_cast<size_t>(k)] + normal(k) + direction(k);
    g.c[static_cast<size_t>(K)] = g.r[static_cast<size_t>(K)] + normal(K);

    std::vector<Point> verts(g.r.begin(), g.r.end());
    for (int k = K; k >= 0; --k) verts.push_back(g.c[static_cast<size_t>(k)]);
    g.polygon = validate_polygon(verts);

    g.corner.assign(static_cast<size_t>(K), Rect{});
    for (int k = 1; k < K; ++k) g.corner[static_cast<size_t>(k)] = bbox({g.r[static_cast<size_t>(k)], g.c[static_cast<size_t>(k)]});
    g.hallway.assign(static_cast<size_t>(K + 1), Rect{});
    g.h_plus = g.hallway;
    g.h_minus = g.hallway;
    g.m_in.assign(static_cast<size_t>(K + 1), Point());
    g.m_out = g.m_in;
    for (int k = 1; k <= K; ++k) {
        size_t u = static_cast<size_t>(k);
        const Point& a = g.r[u - 1];
        const Point& b = g.r[u];
        Point nk = normal(k);
        g.hallway[u] = bbox({a, b, a + nk, b + nk});
        g.m_in[u] = midpoint(a, b);
        // Across the bisector from m_in; equals the outer-edge midpoint for inner hallways.
        g.m_out[u] = g.m_in[u] + nk;
        g.h_plus[u] = bbox({g.m_in[u], b, g.m_out[u], b + nk});
        g.h_minus[u] = bbox({a, g.m_in[u], a + nk, g.m_out[u]});
    }
    for (int i = 1; i <= spec.r; ++i) {
        SectionGeometry s;
        s.index = i;
        for (int k = 3 * i - 2; k <= 3 * i; ++k) {
            s.corners.push_back(g.corner[static_cast<size_t>(k)]);
            s.reflex.push_back(g.r[static_cast<size_t>(k)]);
            s.convex.push_back(g.c[static_cast<size_t>(k)]);
        }
        s.hallways = {g.hallway[static_cast<size_t>(3 * i - 1)], g.hallway[static_cast<size_t>(3 * i)]};
        s.h_plus_first = g.h_plus[static_cast<size_t>(3 * i - 2)];
        s.h_minus_last = g.h_minus[static_cast<size_t>(3 * i + 1)];
        s.m_in_first = g.m_in[static_cast<size_t>(3 * i - 2)];
        s.m_out_first = g.m_out[static_cast<size_t>(3 * i - 2)];
        s.m_in_last = g.m_in[static_cast<size_t>(3 * i + 1)];
        s.m_out_last = g.m_out[static_cast<size_t>(3 * i + 1)];
        g.sections.push_back(std::move(s));
    }
    return g;
}

std::vector<Point> clip_half_plane(const std::vector<Point>& poly, const Point& a, const Point& b, const Point& side) {
    int want = sgn(side_of(a, b, side));
    if (want == 0) throw Error(ErrorCode::InternalInconsistency, "reference point lies on the clip line");
    std::vector<Point> out;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % n];
        Coord sp = side_of(a, b, p) * want;
        Coord sq = side_of(a, b, q) * want;
        if (sgn(sp) >= 0) out.push_back(p);
        if ((sgn(sp) > 0 && sgn(sq) < 0) || (sgn(sp) < 0 && sgn(sq) > 0)) {
            Coord t = sp / (sp - sq);
            out.push_back(p + scale(q - p, t));
        }
    }
    std::vector<Point> dedup;
    for (const Point& p : out)
        if (dedup.empty() || dedup.back() != p) dedup.push_back(p);
    while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    return dedup;
}

Point polygon_centroid(const std::vector<Point>& poly) {
    Coord a2 = 0, cx = 0, cy = 0;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % n];
        Coord w = cross(p, q);
        a2 += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    if (sgn(a2) == 0) throw Error(ErrorCode::InternalInconsistency, "centroid of a degenerate polygon");
    return Point(Coord(cx / (3 * a2)), Coord(cy / (3 * a2)));
}

Point witness_probe(const SpiralGeometry& g, int i, bool robot_below_line) {
    check_section(g, i);
    size_t k = static_cast<size_t>(3 * i - 1);
    const Point& rk = g.r[k];
    const Point& beacon = g.m_out[k + 2];
    // The side of the line whose rays pass the corner and continue into the next hallway.
    Point good = rk + axis_unit(rk - g.r[k - 1]);
    Point bad = rk + axis_unit(g.r[k - 1] - rk) + axis_unit(g.c[k] - rk);
    std::vector<Point> region = clip_half_plane(rect_poly(g.corner[k]), rk, beacon, robot_below_line ? bad : good);
    return polygon_centroid(region);
}

AttractionPath witness_stuck(const SpiralGeometry& g, int i, bool robot_below_line) {
    Point probe = witness_probe(g, i, robot_below_line);
    return attraction_path(g.polygon, probe, g.m_out[static_cast<size_t>(3 * i + 1)]);
}

TerminalStatus witness_indeterminate(const SpiralGeometry& g, int i) {
    check_section(g, i);
    return attraction_path(g.polygon, g.r[static_cast<size_t>(3 * i - 1)], g.m_out[static_cast<size_t>(3 * i + 1)]).terminal;
}

RegionResult region_between_lines(const SpiralGeometry& g, int i) {
    check_section(g, i);
    size_t k = static_cast<size_t>(3 * i - 1);
    const Point& rk = g.r[k];
    std::vector<Point> region = rect_poly(g.corner[k]);
    region = clip_half_plane(region, rk, g.m_out[k + 2], rk + axis_unit(rk - g.r[k - 1]));
    if (!region.empty()) region = clip_half_plane(region, rk, g.m_out[k - 1], rk + axis_unit(rk - g.r[k + 1]));
    RegionResult res;
    res.vertices = region;
    res.single_point = region.size() == 1 && region.front() == rk;
    return res;
}

}  // namespace beacon
