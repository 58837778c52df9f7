#pragma once

#include "jacpair/poly.hpp"

#include <map>
#include <vector>

namespace jacpair {

struct Point {
    long x = 0;
    long y = 0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(Point a, Point b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
};

inline long cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

struct QPoint {
    Rat x;
    Rat y;

    QPoint() : x(0), y(0) {}
    QPoint(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
    QPoint(Point p) : x(p.x), y(p.y) {}

    friend QPoint operator+(const QPoint& a, const QPoint& b) { return {a.x + b.x, a.y + b.y}; }
    friend QPoint operator-(const QPoint& a, const QPoint& b) { return {a.x - b.x, a.y - b.y}; }
    friend QPoint operator*(const Rat& c, const QPoint& p) { return {c * p.x, c * p.y}; }
    friend bool operator==(const QPoint& a, const QPoint& b) { return a.x == b.x && a.y == b.y; }
};

inline Rat cross(const QPoint& a, const QPoint& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const QPoint& a, const QPoint& b) { return a.x * b.x + a.y * b.y; }

// Is p a lattice point (and which one)?
bool is_lattice(const QPoint& p);
Point to_lattice(const QPoint& p); // requires is_lattice

// Exact point-on-segment test, endpoints included.
bool on_segment(const QPoint& p, const QPoint& a, const QPoint& b);

// Primitive grading direction (u, v): u > 0 or v > 0 and gcd(|u|,|v|) = 1.
struct Direction {
    long u;
    long v;
    Direction(long du, long dv);

    friend bool operator==(Direction a, Direction b) { return a.u == b.u && a.v == b.v; }
    std::string str() const;
};

inline long w_value(Direction w, Point p) { return w.u * p.x + w.v * p.y; }
inline Rat w_value(Direction w, const QPoint& p) { return Rat(w.u) * p.x + Rat(w.v) * p.y; }

// Exponent support, sorted.
std::vector<Point> support(const LaurentPoly& f);

// Convex hull of the support; vertices counterclockwise starting at the
// lexicographically smallest. Degenerate hulls (point, segment) keep the
// two-or-one vertex form.
class NewtonPolygon {
public:
    NewtonPolygon() = default;
    explicit NewtonPolygon(std::vector<Point> ccw_vertices) : verts_(std::move(ccw_vertices)) {}

    const std::vector<Point>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }

    bool contains(Point p) const;
    bool contains(const QPoint& p) const;
    int vertex_index(Point p) const; // -1 when p is not a vertex

    friend bool operator==(const NewtonPolygon& a, const NewtonPolygon& b) {
        return a.verts_ == b.verts_;
    }

private:
    std::vector<Point> verts_;
};

NewtonPolygon convex_hull(std::vector<Point> pts);
NewtonPolygon newton_polygon(const LaurentPoly& f); // throws zero_polynomial

long w_deg(const LaurentPoly& f, Direction w);           // throws zero_polynomial
LaurentPoly leading_form(const LaurentPoly& f, Direction w);

// Full w-homogeneous decomposition; components reassemble to the input.
struct WDecomp {
    Direction w;
    std::map<long, LaurentPoly> components; // degree -> nonzero homogeneous part
    LaurentPoly component(long n) const;    // zero when absent
};
WDecomp decompose(const LaurentPoly& f, Direction w);

bool is_w_homogeneous(const LaurentPoly& f, Direction w);

// One less than the number of lattice points on the support segment of a
// nonzero w-homogeneous h; a monomial has length 0.
long lattice_len(const LaurentPoly& h, Direction w); // throws not_homogeneous

// (b/a) * N(F) == N(G) as rational vertex sets.
bool similar_with_ratio(const NewtonPolygon& nf, const NewtonPolygon& ng, long a, long b);

// A vertex no other vertex dominates coordinatewise; lexicographically
// largest such vertex for determinism.
Point northeastern_vertex(const NewtonPolygon& n);

// Outward primitive edge normals that are directions (u > 0 or v > 0).
std::vector<Direction> edge_normals(const NewtonPolygon& n);

std::vector<Point> lattice_points(const NewtonPolygon& n);

// Exact shoelace area of a simple polygon (absolute value).
Rat polygon_area(const std::vector<QPoint>& poly);

// Intersection of two convex polygons via half-plane clipping; the clip
// polygon must be counterclockwise. Result vertices are unsorted raw clip
// output; use classify_overlap to canonicalize.
std::vector<QPoint> convex_clip(std::vector<QPoint> subject, const std::vector<QPoint>& clip_ccw);

struct Overlap {
    enum class Kind { empty, point, segment, polygon } kind = Kind::empty;
    std::vector<QPoint> pts; // point: 1; segment: 2 endpoints; polygon: CCW hull
};
Overlap classify_overlap(const std::vector<QPoint>& pts);

std::vector<QPoint> ccw_oriented(std::vector<QPoint> poly);

} // namespace jacpair
