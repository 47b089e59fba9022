#pragma once

#include "beacon/coord.hpp"
#include "beacon/errors.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace beacon {

// Closed axis-parallel rectangle, lo <= hi componentwise.
struct Rect {
    Point lo;
    Point hi;

    Coord width() const { return hi.x - lo.x; }
    Coord height() const { return hi.y - lo.y; }
    Point center() const { return midpoint(lo, hi); }
    bool contains(const Point& p) const {
        return lo.x <= p.x && p.x <= hi.x && lo.y <= p.y && p.y <= hi.y;
    }
    bool contains_interior(const Point& p) const {
        return lo.x < p.x && p.x < hi.x && lo.y < p.y && p.y < hi.y;
    }
    friend bool operator==(const Rect& a, const Rect& b) { return a.lo == b.lo && a.hi == b.hi; }
};

// Axis-parallel boundary edge from vertex `from` to vertex `to`.
struct Edge {
    Point a;
    Point b;
    bool horizontal;  // otherwise vertical
    Coord fixed;      // y for horizontal, x for vertical
    Coord lo;         // range along the free axis
    Coord hi;
    // +1 if the interior lies on the positive side of the supporting line
    // (above a horizontal edge, right of a vertical edge), -1 otherwise.
    int inward;
};

enum class Containment { Interior, Boundary, Exterior };

// Counter-clockwise simple orthogonal polygon with alternating edge directions.
class OrthoPolygon {
public:
    OrthoPolygon() = default;

    // Builds without validation; caller guarantees a CCW simple orthogonal cycle.
    static OrthoPolygon from_trusted(std::vector<Point> ccw_vertices);

    const std::vector<Point>& vertices() const { return vertices_; }
    size_t size() const { return vertices_.size(); }
    const Point& vertex(size_t i) const { return vertices_[i % vertices_.size()]; }
    // Edge i runs from vertex i to vertex i+1.
    const Edge& edge(size_t i) const { return edges_[i % edges_.size()]; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool is_reflex(size_t i) const { return reflex_[i % reflex_.size()]; }
    size_t reflex_count() const;
    std::optional<size_t> vertex_index(const Point& p) const;
    const Rect& bounding_box() const { return bbox_; }
    Coord signed_area_twice() const;

private:
    std::vector<Point> vertices_;
    std::vector<Edge> edges_;
    std::vector<bool> reflex_;
    Rect bbox_;
};

// Checks orthogonality, alternation and simplicity; reorients to CCW.
// General position is not required.
OrthoPolygon validate_orthogonal(std::vector<Point> vertices);

// validate_orthogonal plus the general-position requirement.
OrthoPolygon validate_polygon(std::vector<Point> vertices);

// Shifts co-linear edges inward by distinct multiples of
// delta = (min positive coordinate gap) / (4 n).
std::vector<Point> perturb_to_general_position(std::vector<Point> vertices);
std::vector<Point> perturb_with_delta(std::vector<Point> vertices, const Coord& delta);
Coord default_perturbation_delta(const std::vector<Point>& vertices);

// Half the minimum L-infinity distance between distinct intersection points
// of the lines spanned by vertex pairs.
Coord compute_epsilon(const OrthoPolygon& poly);
// Straightforward exact version of compute_epsilon.
Coord compute_epsilon_reference(const OrthoPolygon& poly);

Containment contains_point(const OrthoPolygon& poly, const Point& p);
inline bool inside_closed(const OrthoPolygon& poly, const Point& p) {
    return contains_point(poly, p) != Containment::Exterior;
}

// Point p on the boundary: the edge index whose relative interior contains p,
// or the vertex index. Exactly one of the two is set.
struct BoundaryLocation {
    std::optional<size_t> edge;
    std::optional<size_t> vertex;
};
std::optional<BoundaryLocation> locate_on_boundary(const OrthoPolygon& poly, const Point& p);

enum class HullKind { Point, HorizontalSegment, VerticalSegment, Rectangle };
struct Hull {
    HullKind kind;
    Rect box;
};
Hull rectangular_hull(std::span<const Point> points);

// True iff the closed rectangle lies in the closed polygon.
bool rect_in_polygon(const OrthoPolygon& poly, const Rect& r);
// True iff the closed axis-parallel segment lies on the polygon boundary.
bool segment_on_boundary(const OrthoPolygon& poly, const Point& a, const Point& b);

// Inflate-cut random polygon in general position with exactly n_target vertices.
OrthoPolygon generate_random_orthogonal(int n_target, uint64_t seed);

struct CorpusEntry {
    uint64_t seed;
    int n;
    OrthoPolygon polygon;
};
// Polygon i has n = min_n + 2 (i mod k), cycling through every even size in [min_n, max_n].
std::vector<CorpusEntry> generate_corpus(size_t count, uint64_t seed, int min_n, int max_n);

}  // namespace beacon
