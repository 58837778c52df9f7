#include "jacpair/newton.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace jacpair {

bool is_lattice(const QPoint& p) { return rat_is_integer(p.x) && rat_is_integer(p.y); }

Point to_lattice(const QPoint& p) {
    return {static_cast<long>(p.x.get_num().get_si()), static_cast<long>(p.y.get_num().get_si())};
}

bool on_segment(const QPoint& p, const QPoint& a, const QPoint& b) {
    if (cross(b - a, p - a) != 0) return false;
    Rat d = dot(p - a, b - a);
    return d >= 0 && d <= dot(b - a, b - a);
}

Direction::Direction(long du, long dv) : u(du), v(dv) {
    if (!(u > 0 || v > 0)) fail(errc::precondition_violated, "direction needs u>0 or v>0");
    long g = std::gcd(std::abs(u), std::abs(v));
    if (g != 1) fail(errc::precondition_violated, "direction must be primitive");
}

std::string Direction::str() const {
    std::ostringstream os;
    os << "(" << u << "," << v << ")";
    return os.str();
}

std::vector<Point> support(const LaurentPoly& f) {
    std::vector<Point> pts;
    pts.reserve(f.term_count());
    for (const auto& [e, c] : f.terms()) {
        (void)c;
        pts.push_back({e.i, e.j});
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

NewtonPolygon convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return NewtonPolygon(std::move(pts));

    // Monotone chain, strict turns so collinear boundary points are dropped.
    std::vector<Point> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) { // lower hull
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) { // upper hull
        while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    // Monotone chain starts at the lexicographic minimum and runs CCW already.
    return NewtonPolygon(std::move(hull));
}

NewtonPolygon newton_polygon(const LaurentPoly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "Newton polygon of 0");
    return convex_hull(support(f));
}

bool NewtonPolygon::contains(Point p) const { return contains(QPoint(p)); }

bool NewtonPolygon::contains(const QPoint& p) const {
    const std::size_t n = verts_.size();
    if (n == 0) return false;
    if (n == 1) return p == QPoint(verts_[0]);
    if (n == 2) return on_segment(p, QPoint(verts_[0]), QPoint(verts_[1]));
    for (std::size_t i = 0; i < n; ++i) {
        QPoint a(verts_[i]), b(verts_[(i + 1) % n]);
        if (cross(b - a, p - a) < 0) return false;
    }
    return true;
}

int NewtonPolygon::vertex_index(Point p) const {
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (verts_[i] == p) return static_cast<int>(i);
    return -1;
}

long w_deg(const LaurentPoly& f, Direction w) {
    if (f.is_zero()) fail(errc::zero_polynomial, "w-degree of 0");
    bool first = true;
    long best = 0;
    for (const auto& [e, c] : f.terms()) {
        (void)c;
        long val = w.u * e.i + w.v * e.j;
        if (first || val > best) best = val;
        first = false;
    }
    return best;
}

LaurentPoly leading_form(const LaurentPoly& f, Direction w) {
    long d = w_deg(f, w);
    LaurentPoly out;
    for (const auto& [e, c] : f.terms())
        if (w.u * e.i + w.v * e.j == d) out.add_term(e, c);
    return out;
}

LaurentPoly WDecomp::component(long n) const {
    auto it = components.find(n);
    return it == components.end() ? LaurentPoly{} : it->second;
}

WDecomp decompose(const LaurentPoly& f, Direction w) {
    WDecomp out{w, {}};
    for (const auto& [e, c] : f.terms())
        out.components[w.u * e.i + w.v * e.j].add_term(e, c);
    return out;
}

bool is_w_homogeneous(const LaurentPoly& f, Direction w) {
    if (f.is_zero()) return false;
    return decompose(f, w).components.size() == 1;
}

long lattice_len(const LaurentPoly& h, Direction w) {
    if (!is_w_homogeneous(h, w))
        fail(errc::not_homogeneous, "lattice_len needs a nonzero w-homogeneous input");
    // Support lies on a line with primitive step (v, -u); the length is the
    // spread of the step parameter.
    auto pts = support(h);
    Point base = pts.front();
    long smin = 0, smax = 0;
    for (const Point& p : pts) {
        long s = (w.v != 0) ? (p.x - base.x) / w.v : (base.y - p.y) / w.u;
        smin = std::min(smin, s);
        smax = std::max(smax, s);
    }
    return smax - smin;
}

bool similar_with_ratio(const NewtonPolygon& nf, const NewtonPolygon& ng, long a, long b) {
    if (nf.size() != ng.size()) return false;
    const Rat ratio = rat(b, a);
    for (std::size_t i = 0; i < nf.size(); ++i) {
        QPoint scaled = ratio * QPoint(nf.vertices()[i]);
        if (!(scaled == QPoint(ng.vertices()[i]))) return false;
    }
    return true;
}

Point northeastern_vertex(const NewtonPolygon& n) {
    if (n.size() == 0) fail(errc::zero_polynomial, "northeastern vertex of an empty polygon");
    Point best{0, 0};
    bool found = false;
    for (Point c : n.vertices()) {
        bool dominated = false;
        for (Point v : n.vertices()) {
            if (v == c) continue;
            if (v.x >= c.x && v.y >= c.y) {
                dominated = true;
                break;
            }
        }
        if (!dominated && (!found || best < c)) {
            best = c;
            found = true;
        }
    }
    return best;
}

std::vector<Direction> edge_normals(const NewtonPolygon& n) {
    std::vector<Direction> out;
    const auto& vs = n.vertices();
    const std::size_t sz = vs.size();
    if (sz < 2) return out;
    const std::size_t edge_count = (sz == 2) ? 1 : sz;
    for (std::size_t i = 0; i < edge_count; ++i) {
        Point e = vs[(i + 1) % sz] - vs[i];
        // CCW boundary: outward normal is the edge rotated by -90 degrees.
        long u = e.y, v = -e.x;
        long g = std::gcd(std::abs(u), std::abs(v));
        u /= g;
        v /= g;
        if (u > 0 || v > 0) out.push_back(Direction(u, v));
        if (sz == 2) { // a segment supports both normals
            if (-u > 0 || -v > 0) out.push_back(Direction(-u, -v));
        }
    }
    return out;
}

std::vector<Point> lattice_points(const NewtonPolygon& n) {
    std::vector<Point> out;
    if (n.size() == 0) return out;
    long xmin = n.vertices()[0].x, xmax = xmin, ymin = n.vertices()[0].y, ymax = ymin;
    for (Point v : n.vertices()) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    for (long x = xmin; x <= xmax; ++x)
        for (long y = ymin; y <= ymax; ++y)
            if (n.contains(Point{x, y})) out.push_back({x, y});
    return out;
}

Rat polygon_area(const std::vector<QPoint>& poly) {
    Rat twice(0);
    const std::size_t n = poly.size();
    if (n < 3) return Rat(0);
    for (std::size_t i = 0; i < n; ++i) twice += cross(poly[i], poly[(i + 1) % n]);
    return abs(twice) / 2;
}

std::vector<QPoint> convex_clip(std::vector<QPoint> subject, const std::vector<QPoint>& clip_ccw) {
    const std::size_t n = clip_ccw.size();
    for (std::size_t i = 0; i < n && !subject.empty(); ++i) {
        const QPoint& a = clip_ccw[i];
        const QPoint& b = clip_ccw[(i + 1) % n];
        QPoint edge = b - a;
        std::vector<QPoint> kept;
        const std::size_t m = subject.size();
        for (std::size_t k = 0; k < m; ++k) {
            const QPoint& p = subject[k];
            const QPoint& q = subject[(k + 1) % m];
            Rat sp = cross(edge, p - a);
            Rat sq = cross(edge, q - a);
            if (sp >= 0) kept.push_back(p);
            if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
                Rat t = sp / (sp - sq);
                kept.push_back(p + t * (q - p));
            }
        }
        subject = std::move(kept);
    }
    return subject;
}

std::vector<QPoint> ccw_oriented(std::vector<QPoint> poly) {
    Rat twice(0);
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) twice += cross(poly[i], poly[(i + 1) % n]);
    if (twice < 0) std::reverse(poly.begin(), poly.end());
    return poly;
}

Overlap classify_overlap(const std::vector<QPoint>& pts) {
    // Dedupe.
    std::vector<QPoint> uniq;
    for (const QPoint& p : pts) {
        bool seen = false;
        for (const QPoint& q : uniq)
            if (p == q) {
                seen = true;
                break;
            }
        if (!seen) uniq.push_back(p);
    }
    Overlap out;
    if (uniq.empty()) return out;
    if (uniq.size() == 1) {
        out.kind = Overlap::Kind::point;
        out.pts = uniq;
        return out;
    }
    // Collinear?
    bool collinear = true;
    for (std::size_t k = 2; k < uniq.size(); ++k)
        if (cross(uniq[1] - uniq[0], uniq[k] - uniq[0]) != 0) {
            collinear = false;
            break;
        }
    if (collinear) {
        // Extremes along the carrier line.
        QPoint dir = uniq[1] - uniq[0];
        QPoint lo = uniq[0], hi = uniq[0];
        Rat lo_t(0), hi_t(0);
        for (const QPoint& p : uniq) {
            Rat t = dot(p - uniq[0], dir);
            if (t < lo_t) {
                lo_t = t;
                lo = p;
            }
            if (t > hi_t) {
                hi_t = t;
                hi = p;
            }
        }
        out.kind = Overlap::Kind::segment;
        out.pts = {lo, hi};
        return out;
    }
    out.kind = Overlap::Kind::polygon;
    out.pts = ccw_oriented(uniq);
    return out;
}

} // namespace jacpair
