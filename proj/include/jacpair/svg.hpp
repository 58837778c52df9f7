#pragma once

#include "jacpair/decomp.hpp"
#include "jacpair/newton.hpp"

#include <string>
#include <vector>

namespace jacpair {

// Minimal deterministic SVG builder over lattice coordinates: fixed scale,
// y axis pointing up, light gridlines over the integer lattice.
class SvgBuilder {
public:
    SvgBuilder(Point lo, Point hi);

    void polygon(const std::vector<QPoint>& pts, const std::string& stroke,
                 const std::string& fill, double width = 1.5);
    void polyline(const std::vector<QPoint>& pts, const std::string& stroke, double width = 1.5);
    void dot(const QPoint& p, const std::string& fill, double radius = 3.0);
    void label(const QPoint& p, const std::string& text);

    std::string finish() const;

private:
    std::string sx(const Rat& x) const;
    std::string sy(const Rat& y) const;

    Point lo_, hi_;
    std::string body_;
};

// Newton polygon with its support dots.
std::string svg_newton(const LaurentPoly& f);

// N(F), N', N'' and the parallelogram cells.
std::string svg_decomp(const ParallelogramDecomp& d);

// Sweep overlay: decomposition plus the broken lines.
std::string svg_sweep(const ParallelogramDecomp& d, const std::vector<BrokenLine>& lines);

} // namespace jacpair
