#pragma once

#include "beacon/attraction.hpp"
#include "beacon/geometry.hpp"

#include <vector>

namespace beacon {

struct SpiralSpec {
    int r = 1;
    std::vector<mpz_class> lengths;  // l_1 .. l_{3r+1}
};

// l_k = 2^(k^2) for k = 1..3r+1.
std::vector<mpz_class> default_lengths(int r);
SpiralSpec default_spiral(int r);

// l_j > l_{j-2} + 2 for 3 <= j <= 3r.
bool spiral_condition_holds(const SpiralSpec& spec);

struct LengthReport {
    std::vector<bool> holds;  // per section i = 1..r
    bool all() const;
};
LengthReport check_length_inequality(const SpiralSpec& spec);

// m_k = k^2 satisfies m_k >= 3 + m_{k-1} + m_{k-2} - m_{k-3} for 4 <= k <= k_max.
bool exponent_law_holds(int k_max);

struct SectionGeometry {
    int index = 0;                 // i, 1-based
    std::vector<Rect> corners;     // C_{3i-2}, C_{3i-1}, C_{3i}
    std::vector<Rect> hallways;    // H_{3i-1}, H_{3i}
    Rect h_plus_first;             // H+_{3i-2}
    Rect h_minus_last;             // H-_{3i+1}
    Point m_in_first, m_out_first; // k = 3i-2
    Point m_in_last, m_out_last;   // k = 3i+1
    std::vector<Point> reflex;     // r_{3i-2}, r_{3i-1}, r_{3i}
    std::vector<Point> convex;     // c_{3i-2}, c_{3i-1}, c_{3i}
};

struct SpiralGeometry {
    SpiralSpec spec;
    OrthoPolygon polygon;
    std::vector<Point> r;        // r_0 .. r_{3r+1}; r_1..r_{3r} reflex
    std::vector<Point> c;        // c_0 .. c_{3r+1}
    std::vector<Rect> corner;    // index k = 1..3r (index 0 unused)
    std::vector<Rect> hallway;   // index k = 1..3r+1
    std::vector<Rect> h_plus;    // half of H_k adjoining C_k, bisector included
    std::vector<Rect> h_minus;
    std::vector<Point> m_in;     // index k = 1..3r+1
    std::vector<Point> m_out;
    std::vector<SectionGeometry> sections;
};

// Width-1 clockwise spiral anchored with r_1 at the origin and H_1 along +x.
SpiralGeometry generate_spiral(const SpiralSpec& spec, bool check_spec = true);

// Probe strictly below (or above) the line m_out_{3i+1} r_{3i-1} inside C_{3i-1},
// attracted by a beacon at m_out_{3i+1}.
AttractionPath witness_stuck(const SpiralGeometry& g, int i, bool robot_below_line);
Point witness_probe(const SpiralGeometry& g, int i, bool robot_below_line);

// Robot at r_{3i-1}, beacon at m_out_{3i+1}.
TerminalStatus witness_indeterminate(const SpiralGeometry& g, int i);

struct RegionResult {
    bool single_point = false;
    std::vector<Point> vertices;  // clipped region of C_{3i-1}
};
RegionResult region_between_lines(const SpiralGeometry& g, int i);

// Exact polygon clipping against the closed half-plane of the line through a, b
// that contains `side`.
std::vector<Point> clip_half_plane(const std::vector<Point>& poly, const Point& a, const Point& b, const Point& side);
Point polygon_centroid(const std::vector<Point>& poly);

}  // namespace beacon
