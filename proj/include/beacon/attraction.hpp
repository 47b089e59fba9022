#pragma once

#include "beacon/decomposition.hpp"
#include "beacon/geometry.hpp"

#include <vector>

namespace beacon {

enum class MoveKind { StraightTowardBeacon, SlideAlongEdge };

struct PathEvent {
    Point point;
    MoveKind kind;
    int edge = -1;      // slides only
    int direction = 0;  // +1 along the edge's CCW orientation, -1 against it
};

enum class TerminalKind { Reached, StuckPerpendicular, StuckConvexVertex, Indeterminate };
const char* terminal_name(TerminalKind k);

struct TerminalStatus {
    TerminalKind kind;
    Point at;
};

struct AttractionPath {
    Point start;
    Point beacon;
    std::vector<PathEvent> events;
    TerminalStatus terminal;

    bool reached() const { return terminal.kind == TerminalKind::Reached; }
    // start followed by every event point
    std::vector<Point> polyline() const;
};

AttractionPath attraction_path(const OrthoPolygon& poly, const Point& p, const Point& beacon);
inline AttractionPath attraction_path(const Decomposition& d, const Point& p, const Point& beacon) {
    return attraction_path(d.polygon(), p, beacon);
}

// Beacon attracts p.
bool attracts(const OrthoPolygon& poly, const Point& beacon, const Point& p);
bool covers(const OrthoPolygon& poly, const Point& p, const Point& q);
bool is_visible(const OrthoPolygon& poly, const Point& p, const Point& q);

// Largest t in [0,1] with segment [p, p + t (q - p)] inside the closed polygon.
Coord straight_extent(const OrthoPolygon& poly, const Point& p, const Point& q);

// Inside/outside table over the grid spanned by the polygon's vertex coordinates;
// answers monotone-path queries by dynamic programming.
class StaircaseGrid {
public:
    explicit StaircaseGrid(const OrthoPolygon& poly);
    bool visible(const Point& p, const Point& q) const;

private:
    // Doubled index: 2i on line i, 2i+1 strictly between lines i and i+1.
    // -1 / 2n-1 outside the grid span.
    long code(const std::vector<Coord>& lines, const Coord& v) const;
    bool inside(long cx, long cy) const;

    const OrthoPolygon* poly_;
    std::vector<Coord> xs_, ys_;
    std::vector<char> table_;
    long w_ = 0, h_ = 0;
};

bool staircase_visible(const OrthoPolygon& poly, const Point& p, const Point& q);

// Rectangles meeting the path in more than a single point.
std::vector<int> path_rect_support(const AttractionPath& path, const Decomposition& d);
bool is_local(const AttractionPath& path, const Decomposition& d);

}  // namespace beacon
