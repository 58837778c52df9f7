#pragma once

#include "jacpair/newton.hpp"

#include <optional>
#include <vector>

namespace jacpair {

enum class Side { A, B };
const char* side_name(Side s);

// One parallelogram cell with corners at chain midpoints. The edge names
// follow the construction's west/north/east/south convention:
// west = M(i-1,j-1)M(i,j-1), north = M(i,j-1)M(i,j), east = M(i,j)M(i-1,j),
// south = M(i-1,j)M(i-1,j-1).
struct Cell {
    int i = 0;
    int j = 0; // 1 <= i < j <= chain length
    QPoint sw, nw, ne, se;

    std::pair<QPoint, QPoint> west() const { return {sw, nw}; }
    std::pair<QPoint, QPoint> north() const { return {nw, ne}; }
    std::pair<QPoint, QPoint> east() const { return {ne, se}; }
    std::pair<QPoint, QPoint> south() const { return {se, sw}; }
    std::vector<QPoint> corners() const { return {sw, nw, ne, se}; }
};

// Midpoint scaffolding along one boundary chain O = V_0, ..., V_n = C.
struct ChainDecomp {
    Side side = Side::A;
    std::vector<Point> verts;
    std::vector<Cell> cells; // (i, j) lexicographic

    int length() const { return static_cast<int>(verts.size()) - 1; }
    QPoint mid(int i, int j) const; // (V_i + V_j)/2
    QPoint step(int k) const;       // (V_k - V_{k-1})/2, 1-based
    const Cell& cell(int i, int j) const;
};

struct ParallelogramDecomp {
    NewtonPolygon polygon;
    Point C;
    QPoint C_half;
    ChainDecomp a_side; // clockwise boundary chain from O to C
    ChainDecomp b_side; // counterclockwise boundary chain from O to C
    bool chains_swapped = false; // set when the clockwise chain had length 1
    std::vector<QPoint> n_prime;  // N'  = (1/2) N(F), CCW
    std::vector<QPoint> n_dprime; // N'' = N' + (1/2) OC, CCW

    const ChainDecomp& chain(Side s) const { return s == Side::A ? a_side : b_side; }
};

// Requires: O and C vertices of a nondegenerate polygon, C != O.
ParallelogramDecomp build_decomposition(const NewtonPolygon& n, Point c);

struct BrokenLine {
    QPoint anchor; // D, on segment OC
    Side side = Side::A;
    std::vector<QPoint> vertices; // D = vertices[0], last vertex on the boundary
    std::vector<int> seg_edge;    // chain edge index each segment is parallel to

    int segments() const { return static_cast<int>(vertices.size()) - 1; }
};

bool on_broken_line(const BrokenLine& t, const QPoint& p);

// The broken line anchored at D in segment OC \ {O}: for D beyond the
// midpoint C' it marches across the cells parallel to the chain edges; for
// D in OC' it is the rescaled boundary chain through D.
BrokenLine broken_line(const ParallelogramDecomp& d, const QPoint& D, Side side);

// The unique broken line of the given side through a point z off the
// segment OC; nullopt when z is outside the side's swept region.
std::optional<BrokenLine> line_through(const ParallelogramDecomp& d, Side side, const QPoint& z);

// The finite sweep family: the unique line through every lattice point of
// N(F) off OC, plus an A-side line anchored at every listed support point
// on OC \ {O}; sorted by decreasing distance from O to the anchor, A-side
// before B-side at equal anchors.
std::vector<BrokenLine> enumerate_broken_lines(const ParallelogramDecomp& d,
                                               const std::vector<Point>& f_support);

} // namespace jacpair
