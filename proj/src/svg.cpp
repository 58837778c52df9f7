#include "jacpair/svg.hpp"

#include <sstream>

namespace jacpair {

namespace {

constexpr long kScale = 40; // px per lattice unit
constexpr long kPad = 20;

// Exact rendering of scale * q with up to three decimals, trailing zeros
// trimmed; deterministic for identical inputs.
std::string coord(const Rat& q) {
    Rat v = Rat(kScale) * q;
    Int scaled;
    mpz_tdiv_q(scaled.get_mpz_t(), Int(v.get_num() * 1000).get_mpz_t(), v.get_den().get_mpz_t());
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    Int whole = scaled / 1000, frac = scaled % 1000;
    std::string out = (neg ? "-" : "") + whole.get_str();
    if (frac != 0) {
        std::string f = frac.get_str();
        while (f.size() < 3) f.insert(f.begin(), '0');
        while (!f.empty() && f.back() == '0') f.pop_back();
        out += "." + f;
    }
    return out;
}

} // namespace

SvgBuilder::SvgBuilder(Point lo, Point hi) : lo_(lo), hi_(hi) {
    std::ostringstream os;
    for (long x = lo_.x; x <= hi_.x; ++x) {
        os << "<line x1=\"" << sx(Rat(x)) << "\" y1=\"" << sy(Rat(lo_.y)) << "\" x2=\""
           << sx(Rat(x)) << "\" y2=\"" << sy(Rat(hi_.y))
           << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    }
    for (long y = lo_.y; y <= hi_.y; ++y) {
        os << "<line x1=\"" << sx(Rat(lo_.x)) << "\" y1=\"" << sy(Rat(y)) << "\" x2=\""
           << sx(Rat(hi_.x)) << "\" y2=\"" << sy(Rat(y))
           << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    }
    body_ = os.str();
}

std::string SvgBuilder::sx(const Rat& x) const { return coord(x - Rat(lo_.x) + Rat(kPad) / kScale); }

std::string SvgBuilder::sy(const Rat& y) const { return coord(Rat(hi_.y) - y + Rat(kPad) / kScale); }

void SvgBuilder::polygon(const std::vector<QPoint>& pts, const std::string& stroke,
                         const std::string& fill, double width) {
    std::ostringstream os;
    os << "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) os << " ";
        os << sx(pts[i].x) << "," << sy(pts[i].y);
    }
    os << "\" stroke=\"" << stroke << "\" fill=\"" << fill << "\" stroke-width=\"" << width
       << "\"/>\n";
    body_ += os.str();
}

void SvgBuilder::polyline(const std::vector<QPoint>& pts, const std::string& stroke, double width) {
    std::ostringstream os;
    os << "<polyline points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) os << " ";
        os << sx(pts[i].x) << "," << sy(pts[i].y);
    }
    os << "\" stroke=\"" << stroke << "\" fill=\"none\" stroke-width=\"" << width << "\"/>\n";
    body_ += os.str();
}

void SvgBuilder::dot(const QPoint& p, const std::string& fill, double radius) {
    std::ostringstream os;
    os << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"" << radius
       << "\" fill=\"" << fill << "\"/>\n";
    body_ += os.str();
}

void SvgBuilder::label(const QPoint& p, const std::string& text) {
    std::ostringstream os;
    os << "<text x=\"" << sx(p.x) << "\" y=\"" << sy(p.y) << "\" font-size=\"11\">" << text
       << "</text>\n";
    body_ += os.str();
}

std::string SvgBuilder::finish() const {
    long w = (hi_.x - lo_.x) * kScale + 2 * kPad;
    long h = (hi_.y - lo_.y) * kScale + 2 * kPad;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << w << " "
       << h << "\" width=\"" << w << "\" height=\"" << h << "\">\n"
       << body_ << "</svg>\n";
    return os.str();
}

namespace {

Point bounds_lo(const NewtonPolygon& n) {
    Point lo = n.vertices().front();
    for (Point v : n.vertices()) {
        lo.x = std::min(lo.x, v.x);
        lo.y = std::min(lo.y, v.y);
    }
    return lo;
}

Point bounds_hi(const NewtonPolygon& n) {
    Point hi = n.vertices().front();
    for (Point v : n.vertices()) {
        hi.x = std::max(hi.x, v.x);
        hi.y = std::max(hi.y, v.y);
    }
    return hi;
}

std::vector<QPoint> to_q(const std::vector<Point>& pts) {
    std::vector<QPoint> out;
    out.reserve(pts.size());
    for (Point p : pts) out.push_back(QPoint(p));
    return out;
}

} // namespace

std::string svg_newton(const LaurentPoly& f) {
    NewtonPolygon n = newton_polygon(f);
    SvgBuilder svg(bounds_lo(n), bounds_hi(n));
    svg.polygon(to_q(n.vertices()), "black", "#f2f2f2");
    for (Point p : support(f)) svg.dot(QPoint(p), "black");
    return svg.finish();
}

std::string svg_decomp(const ParallelogramDecomp& d) {
    SvgBuilder svg(bounds_lo(d.polygon), bounds_hi(d.polygon));
    svg.polygon(to_q(d.polygon.vertices()), "black", "none");
    svg.polygon(d.n_prime, "black", "#eeeeee");
    svg.polygon(d.n_dprime, "black", "#eeeeee");
    for (const ChainDecomp* ch : {&d.a_side, &d.b_side})
        for (const Cell& cell : ch->cells) svg.polygon(cell.corners(), "#555555", "none", 1.0);
    svg.polyline({QPoint(Point{0, 0}), QPoint(d.C)}, "#888888", 1.0);
    return svg.finish();
}

std::string svg_sweep(const ParallelogramDecomp& d, const std::vector<BrokenLine>& lines) {
    SvgBuilder svg(bounds_lo(d.polygon), bounds_hi(d.polygon));
    svg.polygon(to_q(d.polygon.vertices()), "black", "none");
    svg.polygon(d.n_prime, "#999999", "none", 1.0);
    svg.polygon(d.n_dprime, "#999999", "none", 1.0);
    svg.polyline({QPoint(Point{0, 0}), QPoint(d.C)}, "#888888", 1.0);
    for (const BrokenLine& t : lines) {
        svg.polyline(t.vertices, t.side == Side::A ? "red" : "blue", 1.2);
        svg.dot(t.anchor, t.side == Side::A ? "red" : "blue", 2.0);
    }
    return svg.finish();
}

} // namespace jacpair
