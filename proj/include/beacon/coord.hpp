#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace beacon {

// Exact rational coordinate.
using Coord = mpq_class;

struct Point {
    Coord x;
    Coord y;

    Point() = default;
    Point(Coord x_, Coord y_) : x(std::move(x_)), y(std::move(y_)) {}
    Point(long x_, long y_) : x(x_), y(y_) {}

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    // Lexicographic (x, y).
    friend bool operator<(const Point& a, const Point& b) {
        int c = cmp(a.x, b.x);
        return c < 0 || (c == 0 && a.y < b.y);
    }

    Point operator+(const Point& o) const { return Point(Coord(x + o.x), Coord(y + o.y)); }
    Point operator-(const Point& o) const { return Point(Coord(x - o.x), Coord(y - o.y)); }
};

inline Point scale(const Point& p, const Coord& s) { return Point(Coord(p.x * s), Coord(p.y * s)); }
inline Coord dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Coord cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Coord dist2(const Point& a, const Point& b) {
    Coord dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}
inline Coord abs_coord(const Coord& c) { return sgn(c) < 0 ? Coord(-c) : c; }
inline Coord linf(const Point& a, const Point& b) {
    Coord dx = abs_coord(Coord(a.x - b.x)), dy = abs_coord(Coord(a.y - b.y));
    return dx < dy ? dy : dx;
}
inline Point midpoint(const Point& a, const Point& b) {
    return Point(Coord((a.x + b.x) / 2), Coord((a.y + b.y) / 2));
}

std::string to_string(const Coord& c);
std::string to_string(const Point& p);
double to_double(const Coord& c);
// Largest bit length over numerator and denominator of both coordinates.
size_t bit_length(const Point& p);

}  // namespace beacon
