#pragma once

#include "beacon/attraction.hpp"
#include "beacon/synthesis.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace beacon {

struct AttractionDigraph {
    std::vector<Point> nodes;
    // edge[u][v]: a beacon at nodes[v] attracts a robot at nodes[u].
    std::vector<std::vector<char>> edge;
};

AttractionDigraph build_attraction_digraph(const OrthoPolygon& poly, const std::vector<Point>& points);
std::vector<std::vector<int>> strongly_connected_components(const AttractionDigraph& g);

struct RoutingPlan {
    Point source;
    Point target;
    std::vector<int> beacon_indices;  // activation order
    std::vector<AttractionPath> hops;
};

std::optional<RoutingPlan> find_routing(const Decomposition& d, const std::vector<Point>& beacons, const Point& p,
                                        const Point& q, bool require_local = false);

struct RoutingFailure {
    size_t source;
    size_t target;
    Point p;
    Point q;
    std::string reason;
    AttractionPath direct;  // the zero-beacon attempt
};

struct VerificationReport {
    size_t pairs_checked = 0;
    std::vector<RoutingFailure> failures;
    bool all_local = true;
    size_t simulations = 0;
};

VerificationReport verify_routing_set(const Decomposition& d, const std::vector<Point>& beacons,
                                      const std::vector<Point>& samples, bool require_local);

// Rectangle centers, vertices pushed eps/2 inward along the diagonal, vertical
// midpoints, then `count` seeded random interior points.
std::vector<Point> sample_points(const Decomposition& d, uint64_t seed, size_t count, const Coord& eps);
std::vector<Point> sample_points(const Decomposition& d, uint64_t seed, size_t count);

// Uniform-ish random rational point strictly inside r.
Point random_point_in(const Rect& r, uint64_t& state);

// Each strongly connected component of the step's beacons (in P_k) meets P_{k+1}.
bool step_connectivity_holds(const Decomposition& d, const ReductionStep& step);

}  // namespace beacon
