#include "jacpair/square.hpp"

#include "jacpair/hypothesis.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace jacpair {

namespace {

// Strict outward key at the vertex C: the sum of the two adjacent primitive
// edge normals lies in the open normal cone, so alpha*x + beta*y is
// maximized over N(F) at C alone. This emulates the irrational-slope
// supporting line with exact integers.
Point normal_key_at(const NewtonPolygon& n, int ci) {
    const auto& vs = n.vertices();
    const std::size_t sz = vs.size();
    Point c = vs[static_cast<std::size_t>(ci)];
    Point prev = vs[(static_cast<std::size_t>(ci) + sz - 1) % sz];
    Point next = vs[(static_cast<std::size_t>(ci) + 1) % sz];
    auto primitive_normal = [](Point e) {
        long u = e.y, v = -e.x;
        long g = std::gcd(std::abs(u), std::abs(v));
        return Point{u / g, v / g};
    };
    Point n1 = primitive_normal(c - prev);
    Point n2 = primitive_normal(next - c);
    return n1 + n2;
}

} // namespace

SquareCompletion complete_square(const LaurentPoly& f, Point c) {
    if (f.is_zero()) fail(errc::zero_polynomial, "cannot complete the square of 0");
    if (!f.is_polynomial())
        fail(errc::precondition_violated, "square completion needs a polynomial");
    NewtonPolygon n = newton_polygon(f);
    for (Point v : n.vertices())
        if (v.x % 2 != 0 || v.y % 2 != 0)
            fail(errc::odd_vertex, "vertex outside (2Z)^2");
    int ci = n.vertex_index(c);
    if (ci < 0) fail(errc::not_a_vertex, "C is not a vertex of N(F)");
    if (c == Point{0, 0}) fail(errc::not_a_vertex, "C must differ from the origin");

    // Lattice points of N' = (1/2)N(F), ordered by decreasing key with ties
    // broken by larger x then larger y; z_1 = C/2 is the unique maximum.
    Point key{1, 1};
    if (n.size() >= 3)
        key = normal_key_at(n, ci);
    else if (n.size() == 2)
        key = c - n.vertices()[ci == 0 ? 1 : 0];
    std::vector<Point> zs;
    {
        long xmin = 0, xmax = 0, ymin = 0, ymax = 0;
        for (Point v : n.vertices()) {
            xmin = std::min(xmin, v.x);
            xmax = std::max(xmax, v.x);
            ymin = std::min(ymin, v.y);
            ymax = std::max(ymax, v.y);
        }
        for (long x = xmin / 2; x <= xmax / 2 + 1; ++x)
            for (long y = ymin / 2; y <= ymax / 2 + 1; ++y)
                if (n.contains(Point{2 * x, 2 * y})) zs.push_back({x, y});
    }
    std::sort(zs.begin(), zs.end(), [&](Point a, Point b) {
        long ka = key.x * a.x + key.y * a.y, kb = key.x * b.x + key.y * b.y;
        if (ka != kb) return ka > kb;
        if (a.x != b.x) return a.x > b.x;
        return a.y > b.y;
    });

    assert(!zs.empty());
    const Point z1 = zs.front();
    assert(z1 + z1 == c);

    Rat lead = f.coeff(c.x, c.y);
    auto p1 = rat_sqrt(lead);
    if (!p1 || *p1 == 0)
        fail(errc::non_square_leading,
             "coefficient " + lead.get_str() + " at the vertex is not a nonzero rational square");

    SquareCompletion out;
    out.C = c;
    out.solve_order = zs;
    out.P = LaurentPoly::monomial(*p1, z1.x, z1.y);
    LaurentPoly psq = out.P * out.P;

    const Rat denom = 2 * *p1;
    for (std::size_t kth = 1; kth < zs.size(); ++kth) {
        Point zk = zs[kth];
        Point target = z1 + zk;
        Rat val = (f.coeff(target.x, target.y) - psq.coeff(target.x, target.y)) / denom;
        if (val == 0) continue;
        LaurentPoly mono = LaurentPoly::monomial(val, zk.x, zk.y);
        psq += Rat(2) * (mono * out.P);
        psq += mono * mono;
        out.P += mono;
    }

    out.R = f - out.P * out.P;
    assert(out.R == f - psq);

    // Support exclusion: every lattice point of N'' is z_1 + z_k for some k,
    // and the recursion cleared exactly those coefficients. A point e lies
    // in N'' iff 2e - C lies in N(F).
    for (const auto& [e, cc] : out.R.terms()) {
        (void)cc;
        if (n.contains(Point{2 * e.i - c.x, 2 * e.j - c.y}))
            fail(errc::precondition_violated, "square completion left support inside N''");
    }
    return out;
}

LaurentPoly membership_step(const LaurentPoly& f, const LaurentPoly& p, const LaurentPoly& r,
                            Direction w, long h, long k) {
    if (f.is_zero() || p.is_zero()) fail(errc::zero_polynomial, "F and P must be nonzero");
    if (k < 1) fail(errc::precondition_violated, "k must be positive");
    const long d = w_deg(f, w);
    const long m = w_deg(p, w);
    if (d != 2 * m) fail(errc::precondition_violated, "w-deg(F) must equal 2*w-deg(P)");
    const LaurentPoly p_m = leading_form(p, w);
    if (leading_form(f, w) != p_m * p_m)
        fail(errc::precondition_violated, "F_d must equal P_m^2");
    if (h < 1 || h > 2 * m - 1) fail(errc::precondition_violated, "h outside [1, 2m-1]");
    const long e = (2 * k + 1) * m;
    if (h * (k + 1) > d + e - w.u - w.v - 1)
        fail(errc::precondition_violated, "level bound h(k+1) <= d+e-u-v-1 violated");

    const WDecomp rdec = decompose(r, w);
    for (long l = 0; l < h; ++l)
        if (!rdec.component(d - l).is_zero())
            fail(errc::precondition_violated,
                 "R component at w-degree " + std::to_string(d - l) + " is nonzero");

    LaurentPoly r_dh = rdec.component(d - h);
    if (r_dh.is_zero()) return LaurentPoly{};
    auto q = try_divide(r_dh, p_m, DivMode::laurent);
    if (!q)
        fail(errc::membership_failed,
             "P_m does not divide R_{d-h} at h = " + std::to_string(h));
    return *q;
}

LenVerdict len_vanish_step(const LaurentPoly& r_dh, const LaurentPoly& p_m, Direction w) {
    if (p_m.is_zero() || !is_w_homogeneous(p_m, w))
        fail(errc::not_homogeneous, "P_m must be nonzero w-homogeneous");
    if (r_dh.is_zero()) return LenVerdict::zero;
    if (!is_w_homogeneous(r_dh, w))
        fail(errc::not_homogeneous, "R_{d-h} must be w-homogeneous");
    if (lattice_len(r_dh, w) >= lattice_len(p_m, w)) return LenVerdict::inconclusive;
    // A nonzero Laurent multiple of P_m has at least len(P_m); membership
    // plus the strict bound can only mean the component vanishes.
    fail(errc::membership_failed, "nonzero component shorter than P_m contradicts membership");
}

namespace {

struct HypGate {
    bool ok = false;
    long b = 0;
    std::string detail;
    PairHypotheses hyp;
};

// Shared hypothesis phase: derive b from the total degrees, require it odd
// (coprime with a = 2), and check generic boundaries.
HypGate gate(const LaurentPoly& f, const LaurentPoly& g) {
    HypGate out;
    if (f.is_zero() || g.is_zero()) {
        out.detail = "zero polynomial";
        return out;
    }
    const Direction one{1, 1};
    long df = w_deg(f, one), dg = w_deg(g, one);
    if (df <= 0 || (2 * dg) % df != 0) {
        out.detail = "degree ratio is not 2 : b for an integer b";
        return out;
    }
    out.b = 2 * dg / df;
    if (out.b % 2 == 0) {
        out.detail = "b = " + std::to_string(out.b) +
                     " is even; a and b are not coprime and the membership steps are unavailable";
        return out;
    }
    if (out.b < 3) {
        out.detail = "min(a, b) >= 2 fails for b = " + std::to_string(out.b);
        return out;
    }
    out.hyp = generic_boundaries(f, g, 2, out.b);
    if (!out.hyp.generic_boundaries_ok) {
        out.detail = "generic boundaries fail";
        return out;
    }
    out.ok = true;
    return out;
}

void finish_constant(PipelineVerdict& v, const LaurentPoly& f, const LaurentPoly& g) {
    v.conclusion = PipelineVerdict::Conclusion::r_constant;
    v.u0 = v.R.constant_term();
    LaurentPoly br = bracket(f, g);
    v.bracket_zero = br.is_zero();
    // F = P^2 + u0 makes [F,G] = 2P[P,G]; recheck the identity directly.
    assert(br == Rat(2) * (v.P * bracket(v.P, g)));
}

} // namespace

PipelineVerdict rectangle_pipeline(const LaurentPoly& f, const LaurentPoly& g) {
    PipelineVerdict v;
    HypGate gt = gate(f, g);
    v.b = gt.b;
    if (!gt.ok) {
        v.detail = gt.detail;
        return v;
    }

    NewtonPolygon n = newton_polygon(f);
    if (n.size() != 4) {
        v.detail = "N(F) is not a rectangle";
        return v;
    }
    Point c{0, 0};
    for (Point p : n.vertices()) c = std::max(c, p, [](Point a, Point b) { return a < b; });
    long mp2 = c.x, m2 = c.y;
    NewtonPolygon rect(
        {Point{0, 0}, Point{mp2, 0}, Point{mp2, m2}, Point{0, m2}});
    if (!(n == rect) || mp2 <= 0 || m2 <= 0) {
        v.detail = "N(F) is not a rectangle [0,2m']x[0,2m]";
        return v;
    }
    v.generic_ok = true;

    SquareCompletion sq = complete_square(f, c);
    v.P = sq.P;
    v.R = sq.R;
    const long k = (gt.b - 1) / 2;

    for (Direction w : {Direction{0, 1}, Direction{1, 0}}) {
        const long d = w_deg(f, w);
        const LaurentPoly p_m = leading_form(v.P, w);
        const WDecomp rdec = decompose(v.R, w);
        for (long h = 0; h <= d - 1; ++h) {
            std::ostringstream label;
            label << "w=" << w.str() << " h=" << h;
            bool ok;
            if (h == 0) {
                ok = leading_form(f, w) == p_m * p_m;
            } else {
                LaurentPoly comp = rdec.component(d - h);
                ok = comp.is_zero();
                if (ok) {
                    LaurentPoly q = membership_step(f, v.P, v.R, w, h, k);
                    ok = q.is_zero() &&
                         len_vanish_step(comp, p_m, w) == LenVerdict::zero;
                }
            }
            v.swept.push_back({label.str(), ok});
            if (!ok) {
                v.conclusion = PipelineVerdict::Conclusion::violation;
                v.violation_index = static_cast<int>(v.swept.size()) - 1;
                v.detail = "nonzero R component at " + label.str();
                return v;
            }
        }
    }

    if (!v.R.is_constant()) {
        v.conclusion = PipelineVerdict::Conclusion::violation;
        v.detail = "R has support off the origin after the axis sweeps";
        return v;
    }
    finish_constant(v, f, g);
    return v;
}

namespace {

// Outward primitive normal of the polygon edge a chain edge runs along.
Direction chain_edge_normal(const ChainDecomp& chain, int edge) {
    Point e = chain.verts[static_cast<std::size_t>(edge)] -
              chain.verts[static_cast<std::size_t>(edge - 1)];
    long u, vv;
    if (chain.side == Side::A) { // clockwise chain: reverse for CCW boundary
        u = -e.y;
        vv = e.x;
    } else {
        u = e.y;
        vv = -e.x;
    }
    long gg = std::gcd(std::abs(u), std::abs(vv));
    return Direction(u / gg, vv / gg);
}

} // namespace

PipelineVerdict theorem_pipeline(const LaurentPoly& f, const LaurentPoly& g) {
    PipelineVerdict v;
    HypGate gt = gate(f, g);
    v.b = gt.b;
    if (!gt.ok) {
        v.detail = gt.detail;
        return v;
    }
    v.generic_ok = true;

    NewtonPolygon n = newton_polygon(f);
    Point c = northeastern_vertex(n);
    SquareCompletion sq = complete_square(f, c);
    v.P = sq.P;
    v.R = sq.R;
    const long k = (gt.b - 1) / 2;

    ParallelogramDecomp dec = build_decomposition(n, c);
    v.chains_swapped = dec.chains_swapped;

    std::vector<Point> sweep_support = support(f);
    for (Point p : support(v.R)) sweep_support.push_back(p);
    std::vector<BrokenLine> lines = enumerate_broken_lines(dec, sweep_support);

    const std::vector<Point> r_support = support(v.R);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const BrokenLine& t = lines[i];
        std::ostringstream label;
        label << "T_" << i + 1 << " " << side_name(t.side) << " D=(" << t.anchor.x.get_str()
              << "," << t.anchor.y.get_str() << ")";

        std::optional<Point> bad;
        for (Point p : r_support) {
            if (p == Point{0, 0}) continue;
            if (on_broken_line(t, QPoint(p))) {
                bad = p;
                break;
            }
        }

        bool ok = !bad.has_value();
        if (ok) {
            // Exercise the membership/length mechanism on each segment whose
            // w-level is integral; the conclusive check above was direct.
            const ChainDecomp& chain = dec.chain(t.side);
            for (int s = 0; s < t.segments() && ok; ++s) {
                Direction w = chain_edge_normal(chain, t.seg_edge[static_cast<std::size_t>(s)]);
                Rat level = w_value(w, t.vertices[static_cast<std::size_t>(s)]);
                assert(level == w_value(w, t.vertices[static_cast<std::size_t>(s) + 1]));
                if (!rat_is_integer(level)) continue; // no lattice point on this segment
                const long d = w_deg(f, w);
                const long m = w_deg(v.P, w);
                const long h = d - static_cast<long>(level.get_num().get_si());
                if (h == 0) {
                    LaurentPoly p_m = leading_form(v.P, w);
                    ok = leading_form(f, w) == p_m * p_m;
                } else if (h >= 1 && h <= 2 * m - 1) {
                    try {
                        LaurentPoly q = membership_step(f, v.P, v.R, w, h, k);
                        ok = q.is_zero() &&
                             len_vanish_step(decompose(v.R, w).component(d - h),
                                             leading_form(v.P, w), w) == LenVerdict::zero;
                    } catch (const error& err) {
                        v.detail = err.what();
                        ok = false;
                    }
                }
            }
        } else {
            v.detail = "R support point on the swept line";
        }

        v.swept.push_back({label.str(), ok});
        if (!ok) {
            v.conclusion = PipelineVerdict::Conclusion::violation;
            v.violation_index = static_cast<int>(i);
            v.offending = bad;
            return v;
        }
    }

    if (!v.R.is_constant()) {
        v.conclusion = PipelineVerdict::Conclusion::violation;
        v.detail = "R has support off the origin after the sweep";
        return v;
    }
    finish_constant(v, f, g);
    return v;
}

} // namespace jacpair
