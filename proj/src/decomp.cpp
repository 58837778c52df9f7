#include "jacpair/decomp.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace jacpair {

const char* side_name(Side s) { return s == Side::A ? "A" : "B"; }

QPoint ChainDecomp::mid(int i, int j) const {
    QPoint a(verts[static_cast<std::size_t>(i)]), b(verts[static_cast<std::size_t>(j)]);
    return rat(1, 2) * (a + b);
}

QPoint ChainDecomp::step(int k) const {
    QPoint a(verts[static_cast<std::size_t>(k - 1)]), b(verts[static_cast<std::size_t>(k)]);
    return rat(1, 2) * (b - a);
}

const Cell& ChainDecomp::cell(int i, int j) const {
    for (const Cell& c : cells)
        if (c.i == i && c.j == j) return c;
    fail(errc::precondition_violated, "no such cell");
}

namespace {

ChainDecomp make_chain(Side side, std::vector<Point> verts) {
    ChainDecomp c;
    c.side = side;
    c.verts = std::move(verts);
    const int n = c.length();
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            c.cells.push_back(Cell{i, j, c.mid(i - 1, j - 1), c.mid(i, j - 1), c.mid(i, j),
                                   c.mid(i - 1, j)});
    return c;
}

// Parameter of a point on the segment OC, nullopt when off the line.
std::optional<Rat> oc_param(const QPoint& p, Point c) {
    QPoint qc(c);
    if (cross(p, qc) != 0) return std::nullopt;
    Rat t = dot(p, qc) / dot(qc, qc);
    if (t < 0 || t > 1) return std::nullopt;
    return t;
}

} // namespace

ParallelogramDecomp build_decomposition(const NewtonPolygon& n, Point c) {
    if (n.size() < 3)
        fail(errc::precondition_violated, "decomposition needs a nondegenerate polygon");
    if (n.vertex_index(Point{0, 0}) != 0)
        fail(errc::precondition_violated, "the origin must be a vertex of the polygon");
    int ci = n.vertex_index(c);
    if (ci < 0) fail(errc::not_a_vertex, "C is not a vertex of the polygon");
    if (ci == 0) fail(errc::not_a_vertex, "C must differ from the origin");

    const auto& vs = n.vertices();
    std::vector<Point> ccw(vs.begin(), vs.begin() + ci + 1); // O counterclockwise to C
    std::vector<Point> cw;                                   // O clockwise to C
    cw.push_back(vs[0]);
    for (std::size_t k = vs.size(); k-- > static_cast<std::size_t>(ci);) cw.push_back(vs[k]);

    ParallelogramDecomp d;
    d.polygon = n;
    d.C = c;
    d.C_half = rat(1, 2) * QPoint(c);

    // Clockwise chain is the A side, counterclockwise the B side; swap when
    // the A side would degenerate to a single edge.
    bool swap = (static_cast<int>(cw.size()) - 1 == 1) && (static_cast<int>(ccw.size()) - 1 > 1);
    d.chains_swapped = swap;
    d.a_side = make_chain(Side::A, swap ? std::move(ccw) : std::move(cw));
    d.b_side = make_chain(Side::B, swap ? std::move(cw) : std::move(ccw));

    for (Point v : vs) d.n_prime.push_back(rat(1, 2) * QPoint(v));
    for (const QPoint& p : d.n_prime) d.n_dprime.push_back(p + d.C_half);
    return d;
}

bool on_broken_line(const BrokenLine& t, const QPoint& p) {
    if (t.vertices.size() == 1) return p == t.vertices[0];
    for (std::size_t k = 0; k + 1 < t.vertices.size(); ++k)
        if (on_segment(p, t.vertices[k], t.vertices[k + 1])) return true;
    return false;
}

namespace {

struct Landing {
    int seg = 0; // 1-based index into the west polyline
    Rat s;       // position on that polyline segment, in (0, 1]
    Rat tau;     // ray travel
};

// First hit of the ray D + tau * dir on the west polyline W_k = mid(k, n-1),
// k = 0..n-1. At a shared polyline vertex the lower segment (s = 1) wins,
// which realizes the north-edge branch of the construction.
std::optional<Landing> first_west_hit(const ChainDecomp& chain, const QPoint& D,
                                      const QPoint& dir) {
    const int n = chain.length();
    std::optional<Landing> best;
    for (int k = 1; k <= n - 1; ++k) {
        QPoint w0 = chain.mid(k - 1, n - 1);
        QPoint sk = chain.step(k);
        Rat det = cross(sk, dir);
        if (det == 0) continue; // distinct chain edges are never parallel
        QPoint rel = D - w0;
        Rat s = cross(rel, dir) / det;
        Rat tau = cross(rel, sk) / det;
        if (tau <= 0 || s < 0 || s > 1) continue;
        if (!best || tau < best->tau || (tau == best->tau && k < best->seg))
            best = Landing{k, s, tau};
    }
    return best;
}

BrokenLine march(const ChainDecomp& chain, const QPoint& D, Side side) {
    const int n = chain.length();
    BrokenLine out{D, side, {D}, {}};
    if (n == 1) return out; // degenerate side: the line is the point D

    auto hit = first_west_hit(chain, D, QPoint{} - chain.step(n));
    if (!hit) fail(errc::anchor_out_of_range, "broken line failed to reach the west boundary");
    assert(hit->s > 0);

    QPoint p = chain.mid(hit->seg - 1, n - 1) + hit->s * chain.step(hit->seg);
    out.vertices.push_back(p);
    out.seg_edge.push_back(n);
    for (int j = n - 1; j >= hit->seg + 1; --j) {
        p = p - chain.step(j);
        out.vertices.push_back(p);
        out.seg_edge.push_back(j);
    }
    return out;
}

} // namespace

BrokenLine broken_line(const ParallelogramDecomp& d, const QPoint& D, Side side) {
    auto t = oc_param(D, d.C);
    if (!t || *t == 0) fail(errc::anchor_out_of_range, "anchor must lie on OC minus the origin");
    const ChainDecomp& chain = d.chain(side);
    const int n = chain.length();
    if (*t * 2 <= 1) {
        // Rescaled boundary chain through D.
        BrokenLine out{D, side, {}, {}};
        for (int k = n; k >= 1; --k) {
            out.vertices.push_back(*t * QPoint(chain.verts[static_cast<std::size_t>(k)]));
            if (k >= 2) out.seg_edge.push_back(k);
        }
        return out;
    }
    return march(chain, D, side);
}

std::optional<BrokenLine> line_through(const ParallelogramDecomp& d, Side side, const QPoint& z) {
    const ChainDecomp& chain = d.chain(side);
    const int n = chain.length();
    if (n < 1) return std::nullopt;
    const Rat half = rat(1, 2);

    // Rescaled-chain region (q * boundary chain for q <= 1/2).
    for (int j = n; j >= 2; --j) {
        QPoint vj(chain.verts[static_cast<std::size_t>(j)]);
        QPoint vj1(chain.verts[static_cast<std::size_t>(j - 1)]);
        Rat det = cross(vj, vj1);
        if (det == 0) continue;
        Rat lam = cross(z, vj1) / det;
        Rat mu = cross(vj, z) / det;
        if (lam >= 0 && mu >= 0) {
            Rat q = lam + mu;
            if (q > 0 && q <= half) {
                BrokenLine bl = broken_line(d, q * QPoint(d.C), side);
                assert(on_broken_line(bl, z));
                return bl;
            }
        }
    }

    // Cell interiors and their west/north edges.
    for (const Cell& cell : chain.cells) {
        QPoint sr = chain.step(cell.i);
        QPoint sj = chain.step(cell.j);
        Rat det = cross(sr, sj);
        if (det == 0) continue;
        QPoint rel = z - cell.sw;
        Rat s = cross(rel, sj) / det;
        Rat sig = cross(sr, rel) / det;
        if (s > 0 && s <= 1 && sig >= 0 && sig <= 1) {
            QPoint landing = chain.mid(cell.i - 1, n - 1) + s * sr;
            Rat denom = cross(chain.step(n), QPoint(d.C));
            assert(denom != 0);
            Rat tau = -cross(landing, QPoint(d.C)) / denom;
            QPoint D = landing + tau * chain.step(n);
            BrokenLine bl = broken_line(d, D, side);
            assert(on_broken_line(bl, z));
            return bl;
        }
    }

    // N'' wedge on this chain's side of OC: project back to the anchor along
    // the last chain step.
    if (n >= 2) {
        QPoint qc(d.C);
        int side_sign = sgn(cross(qc, QPoint(chain.verts[1])));
        int z_sign = sgn(cross(qc, z));
        if (z_sign == side_sign && z_sign != 0) {
            bool inside = true;
            const std::size_t m = d.n_dprime.size();
            for (std::size_t k = 0; k < m && inside; ++k) {
                const QPoint& a = d.n_dprime[k];
                const QPoint& b = d.n_dprime[(k + 1) % m];
                if (cross(b - a, z - a) < 0) inside = false;
            }
            if (inside) {
                Rat denom = cross(chain.step(n), qc);
                if (denom != 0) {
                    Rat tau = -cross(z, qc) / denom;
                    QPoint D = z + tau * chain.step(n);
                    auto t = oc_param(D, d.C);
                    if (tau >= 0 && t && *t * 2 > 1 && *t <= 1) {
                        BrokenLine bl = broken_line(d, D, side);
                        if (on_broken_line(bl, z)) return bl;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<BrokenLine> enumerate_broken_lines(const ParallelogramDecomp& d,
                                               const std::vector<Point>& f_support) {
    // Key: (-anchor parameter, side) so iteration order is decreasing
    // distance with A before B.
    std::map<std::pair<Rat, int>, BrokenLine> acc;
    auto add = [&](BrokenLine bl) {
        auto t = oc_param(bl.anchor, d.C);
        assert(t);
        acc.emplace(std::make_pair(-*t, bl.side == Side::A ? 0 : 1), std::move(bl));
    };

    const QPoint origin;
    for (Point z : lattice_points(d.polygon)) {
        QPoint qz(z);
        if (qz == origin) continue;
        if (on_segment(qz, origin, QPoint(d.C))) continue;
        auto la = line_through(d, Side::A, qz);
        auto lb = line_through(d, Side::B, qz);
        assert(la.has_value() != lb.has_value());
        add(la ? std::move(*la) : std::move(*lb));
    }
    for (Point z : f_support) {
        QPoint qz(z);
        if (qz == origin) continue;
        if (!on_segment(qz, origin, QPoint(d.C))) continue;
        add(broken_line(d, qz, Side::A));
    }

    std::vector<BrokenLine> out;
    out.reserve(acc.size());
    for (auto& [key, bl] : acc) out.push_back(std::move(bl));
    return out;
}

} // namespace jacpair
