#pragma once

#include "beacon/geometry.hpp"

#include <functional>
#include <vector>

namespace beacon {

struct Vertical {
    Coord x;
    Coord y_lo;
    Coord y_hi;
    Point reflex_vertex;
    int left_rect = -1;
    int right_rect = -1;

    Point midpoint() const { return Point(x, Coord((y_lo + y_hi) / 2)); }
};

class Decomposition {
public:
    const OrthoPolygon& polygon() const { return poly_; }
    const std::vector<Rect>& rectangles() const { return rects_; }
    const Rect& rect(int id) const { return rects_[static_cast<size_t>(id)]; }
    size_t rect_count() const { return rects_.size(); }
    const std::vector<Vertical>& verticals() const { return verticals_; }
    const std::vector<int>& neighbors(int id) const { return adjacency_[static_cast<size_t>(id)]; }
    // Index of the vertical shared by two adjacent rectangles, or -1.
    int vertical_between(int a, int b) const;
    // All closed rectangles containing p (two when p lies on a vertical).
    std::vector<int> rects_containing(const Point& p) const;

    friend Decomposition vertical_decomposition(const OrthoPolygon& poly);

private:
    OrthoPolygon poly_;
    std::vector<Rect> rects_;
    std::vector<Vertical> verticals_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::vector<int>> vertical_of_;  // parallel to adjacency_
};

Decomposition vertical_decomposition(const OrthoPolygon& poly);

struct DualTree {
    std::vector<std::pair<int, int>> edges;  // (a, b) with a < b
    std::vector<std::vector<int>> adjacency;
};
DualTree dual_tree(const Decomposition& d);

struct RootedDualTree {
    int root = 0;
    std::vector<int> parent;                 // -1 for root
    std::vector<std::vector<int>> children;  // ascending ids
    std::vector<int> depth;
    int height() const;
};
RootedDualTree root_at_leaf(const Decomposition& d);

enum class Side { Left, Right };
enum class VPos { Top, Bottom };
enum class Size { Tall, Solo, Paired };

const char* side_name(Side s);
const char* vpos_name(VPos v);
const char* size_name(Size s);

struct NeighborRelation {
    Side side;
    VPos vertical_pos;
    Size size;
    int shared_vertical;
    Point shared_reflex;
};

// Relation of S as a neighbor of R. `live` restricts which neighbors of R count
// toward the solo/paired distinction (nullptr: all).
NeighborRelation classify_neighbor(const Decomposition& d, int R, int S,
                                   const std::vector<bool>* live = nullptr);

struct CurlVertex {
    Point point;
    bool is_reflex;
};
CurlVertex curl_vertex(const Decomposition& d, int S, int R);

// S, or S with its curl vertex removed.
struct PuncturedRect {
    Rect rect;
    std::vector<Point> excluded;
    bool contains(const Point& p) const;
};
PuncturedRect s_star(const Decomposition& d, int S, int R);

// Full-width strip of R spanning the polygon wall between its two paired
// neighbors on `side`, with the two side corners excluded.
PuncturedRect modified_center(const Decomposition& d, int R, Side side,
                              const std::vector<bool>* live = nullptr);

// Union boundary of a connected set of rectangles (CCW, collinear runs merged).
OrthoPolygon union_polygon(const Decomposition& d, const std::vector<bool>& live);

}  // namespace beacon
