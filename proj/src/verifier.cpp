#include "beacon/verifier.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>

namespace beacon {

AttractionDigraph build_attraction_digraph(const OrthoPolygon& poly, const std::vector<Point>& points) {
    AttractionDigraph g;
    g.nodes = points;
    size_t k = points.size();
    g.edge.assign(k, std::vector<char>(k, 0));
    for (size_t u = 0; u < k; ++u)
        for (size_t v = 0; v < k; ++v) g.edge[u][v] = (u == v || attracts(poly, points[v], points[u])) ? 1 : 0;
    return g;
}

std::vector<std::vector<int>> strongly_connected_components(const AttractionDigraph& g) {
    // Mutual reachability via transitive closure; node counts are small.
    size_t k = g.nodes.size();
    std::vector<std::vector<char>> reach = g.edge;
    for (size_t m = 0; m < k; ++m)
        for (size_t i = 0; i < k; ++i)
            if (reach[i][m])
                for (size_t j = 0; j < k; ++j)
                    if (reach[m][j]) reach[i][j] = 1;
    std::vector<int> comp(k, -1);
    std::vector<std::vector<int>> out;
    for (size_t i = 0; i < k; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> c;
        for (size_t j = 0; j < k; ++j)
            if (comp[j] < 0 && reach[i][j] && reach[j][i]) {
                comp[j] = static_cast<int>(out.size());
                c.push_back(static_cast<int>(j));
            }
        out.push_back(c);
    }
    return out;
}

namespace {

bool usable(const AttractionPath& path, const Decomposition& d, bool require_local) {
    return path.reached() && (!require_local || is_local(path, d));
}

}  // namespace

std::optional<RoutingPlan> find_routing(const Decomposition& d, const std::vector<Point>& beacons, const Point& p,
                                        const Point& q, bool require_local) {
    const OrthoPolygon& poly = d.polygon();
    RoutingPlan plan;
    plan.source = p;
    plan.target = q;
    AttractionPath direct = attraction_path(poly, p, q);
    if (usable(direct, d, require_local)) {
        plan.hops.push_back(direct);
        return plan;
    }
    size_t k = beacons.size();
    // BFS over beacons; node k stands for the source.
    std::vector<int> parent(k, -2);
    std::vector<std::optional<AttractionPath>> hop_in(k);
    std::deque<int> queue;
    for (size_t b = 0; b < k; ++b) {
        AttractionPath path = attraction_path(poly, p, beacons[b]);
        if (usable(path, d, require_local)) {
            parent[b] = -1;
            hop_in[b] = std::move(path);
            queue.push_back(static_cast<int>(b));
        }
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        AttractionPath last = attraction_path(poly, beacons[static_cast<size_t>(u)], q);
        if (usable(last, d, require_local)) {
            std::vector<int> chain;
            for (int x = u; x >= 0; x = parent[static_cast<size_t>(x)]) chain.push_back(x);
            std::reverse(chain.begin(), chain.end());
            plan.beacon_indices = chain;
            for (int x : chain) plan.hops.push_back(*hop_in[static_cast<size_t>(x)]);
            plan.hops.push_back(last);
            return plan;
        }
        for (size_t b = 0; b < k; ++b) {
            if (parent[b] != -2) continue;
            AttractionPath path = attraction_path(poly, beacons[static_cast<size_t>(u)], beacons[b]);
            if (usable(path, d, require_local)) {
                parent[b] = u;
                hop_in[b] = std::move(path);
                queue.push_back(static_cast<int>(b));
            }
        }
    }
    return std::nullopt;
}

namespace {

using Bits = std::vector<uint64_t>;

void set_bit(Bits& b, size_t i) { b[i / 64] |= (uint64_t{1} << (i % 64)); }
bool get_bit(const Bits& b, size_t i) { return (b[i / 64] >> (i % 64)) & 1; }
void or_into(Bits& a, const Bits& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
}

// Edge status: 0 none, 1 reached but non-local, 2 reached and local.
char edge_status(const OrthoPolygon& poly, const Decomposition& d, const Point& from, const Point& to, size_t& sims) {
    ++sims;
    AttractionPath path = attraction_path(poly, from, to);
    if (!path.reached()) return 0;
    return is_local(path, d) ? 2 : 1;
}

}  // namespace

VerificationReport verify_routing_set(const Decomposition& d, const std::vector<Point>& beacons,
                                      const std::vector<Point>& samples, bool require_local) {
    const OrthoPolygon& poly = d.polygon();
    VerificationReport rep;
    size_t S = samples.size(), K = beacons.size();
    for (const Point& p : samples)
        if (!inside_closed(poly, p)) throw Error(ErrorCode::PointOutsidePolygon, "sample " + to_string(p) + " outside polygon");
    for (const Point& b : beacons)
        if (!inside_closed(poly, b)) throw Error(ErrorCode::PointOutsidePolygon, "beacon " + to_string(b) + " outside polygon");

    std::vector<std::vector<char>> to_beacon(S, std::vector<char>(K)), from_beacon(K, std::vector<char>(S)),
        between(K, std::vector<char>(K));
    for (size_t i = 0; i < S; ++i)
        for (size_t b = 0; b < K; ++b) to_beacon[i][b] = edge_status(poly, d, samples[i], beacons[b], rep.simulations);
    for (size_t b = 0; b < K; ++b)
        for (size_t j = 0; j < S; ++j) from_beacon[b][j] = edge_status(poly, d, beacons[b], samples[j], rep.simulations);
    for (size_t a = 0; a < K; ++a)
        for (size_t b = 0; b < K; ++b) between[a][b] = a == b ? 2 : edge_status(poly, d, beacons[a], beacons[b], rep.simulations);

    // level 2: local edges only; level 1: any reached edge.
    auto closure = [&](char level) {
        std::vector<Bits> reach(K, Bits((K + 63) / 64, 0));
        for (size_t a = 0; a < K; ++a) {
            std::deque<size_t> queue{a};
            set_bit(reach[a], a);
            while (!queue.empty()) {
                size_t u = queue.front();
                queue.pop_front();
                for (size_t b = 0; b < K; ++b)
                    if (!get_bit(reach[a], b) && between[u][b] >= level) {
                        set_bit(reach[a], b);
                        queue.push_back(b);
                    }
            }
        }
        return reach;
    };
    std::vector<Bits> reach_local = closure(2), reach_any = closure(1);
    size_t words = (S + 63) / 64;
    auto targets_of = [&](size_t i, char level, const std::vector<Bits>& reach) {
        Bits via(words, 0);
        Bits beacon_set((K + 63) / 64, 0);
        for (size_t b = 0; b < K; ++b)
            if (to_beacon[i][b] >= level) or_into(beacon_set, reach[b]);
        for (size_t b = 0; b < K; ++b) {
            if (!get_bit(beacon_set, b)) continue;
            for (size_t j = 0; j < S; ++j)
                if (from_beacon[b][j] >= level) set_bit(via, j);
        }
        return via;
    };
    for (size_t i = 0; i < S; ++i) {
        Bits local_targets = targets_of(i, 2, reach_local);
        Bits any_targets;
        bool any_computed = false;
        for (size_t j = 0; j < S; ++j) {
            if (i == j) continue;
            ++rep.pairs_checked;
            if (get_bit(local_targets, j)) continue;
            ++rep.simulations;
            AttractionPath direct = attraction_path(poly, samples[i], samples[j]);
            if (direct.reached() && is_local(direct, d)) continue;
            // No local route.
            if (!any_computed) {
                any_targets = targets_of(i, 1, reach_any);
                any_computed = true;
            }
            bool any_route = direct.reached() || get_bit(any_targets, j);
            if (any_route) {
                rep.all_local = false;
                if (!require_local) continue;
            }
            rep.failures.push_back(RoutingFailure{i, j, samples[i], samples[j],
                                                  any_route ? "only non-local routes" : "no route", direct});
        }
    }
    return rep;
}

Point random_point_in(const Rect& r, uint64_t& state) {
    std::mt19937_64 rng(state);
    state = rng();
    const long den = 1L << 20;
    long kx = 1 + static_cast<long>(rng() % static_cast<uint64_t>(den - 1));
    long ky = 1 + static_cast<long>(rng() % static_cast<uint64_t>(den - 1));
    Coord fx(kx, den), fy(ky, den);
    fx.canonicalize();
    fy.canonicalize();
    return Point(Coord(r.lo.x + r.width() * fx), Coord(r.lo.y + r.height() * fy));
}

std::vector<Point> sample_points(const Decomposition& d, uint64_t seed, size_t count, const Coord& eps) {
    const OrthoPolygon& poly = d.polygon();
    std::vector<Point> out;
    for (const Rect& r : d.rectangles()) out.push_back(r.center());
    size_t n = poly.size();
    Coord half = eps / 2;
    for (size_t i = 0; i < n; ++i) {
        const Point& prev = poly.vertex(i + n - 1);
        const Point& v = poly.vertex(i);
        const Point& next = poly.vertex(i + 1);
        Point a(Coord(sgn(v.x - prev.x)), Coord(sgn(v.y - prev.y)));
        Point b(Coord(sgn(next.x - v.x)), Coord(sgn(next.y - v.y)));
        Point dir = poly.is_reflex(i) ? a - b : b - a;
        out.push_back(v + scale(dir, half));
    }
    for (const Vertical& v : d.verticals()) out.push_back(v.midpoint());
    // Random rectangle, then a random point in it; thin spirals defeat bounding-box rejection.
    std::mt19937_64 rng(seed);
    size_t added = 0;
    while (added < count) {
        uint64_t st = rng();
        const Rect& r = d.rect(static_cast<int>(rng() % d.rect_count()));
        Point p = random_point_in(r, st);
        if (contains_point(poly, p) != Containment::Interior) continue;
        out.push_back(p);
        ++added;
    }
    std::vector<Point> unique;
    for (const Point& p : out)
        if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(p);
    return unique;
}

std::vector<Point> sample_points(const Decomposition& d, uint64_t seed, size_t count) {
    return sample_points(d, seed, count, compute_epsilon(d.polygon()));
}

bool step_connectivity_holds(const Decomposition& d, const ReductionStep& step) {
    if (is_basis(step.case_id) || step.placed.empty()) return true;
    OrthoPolygon pk = union_polygon(d, step.live_before);
    std::vector<bool> after = step.live_before;
    for (int r : step.removed) after[static_cast<size_t>(r)] = false;
    OrthoPolygon pk1 = union_polygon(d, after);
    std::vector<Point> pts;
    for (const Placement& p : step.placed) pts.push_back(p.point);
    AttractionDigraph g = build_attraction_digraph(pk, pts);
    for (const auto& comp : strongly_connected_components(g)) {
        bool meets = false;
        for (int i : comp)
            if (inside_closed(pk1, pts[static_cast<size_t>(i)])) meets = true;
        if (!meets) return false;
    }
    return true;
}

}  // namespace beacon
