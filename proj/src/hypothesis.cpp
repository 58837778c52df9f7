#include "jacpair/hypothesis.hpp"

#include "jacpair/univariate.hpp"

#include <numeric>
#include <random>

namespace jacpair {

PairHypotheses check_conjectureA_preconditions(const LaurentPoly& f, const LaurentPoly& g,
                                               long a, long b) {
    PairHypotheses out;
    out.a = a;
    out.b = b;
    out.coprime_ok = a > 0 && b > 0 && std::gcd(a, b) == 1;
    out.min_ok = std::min(a, b) >= 2;
    if (f.is_zero() || g.is_zero()) return out;

    LaurentPoly br = bracket(f, g);
    if (br.is_constant()) out.bracket_value = br.constant_term();

    NewtonPolygon nf = newton_polygon(f), ng = newton_polygon(g);
    out.similarity_ok = similar_with_ratio(nf, ng, a, b);
    const Point corners[] = {{1, 0}, {0, 1}, {0, 0}};
    out.corner_points_ok = true;
    for (Point p : corners)
        if (!nf.contains(p) || !ng.contains(p)) out.corner_points_ok = false;
    return out;
}

PairHypotheses generic_boundaries(const LaurentPoly& f, const LaurentPoly& g, long a, long b) {
    PairHypotheses out = check_conjectureA_preconditions(f, g, a, b);
    if (f.is_zero() || g.is_zero()) return out;

    NewtonPolygon nf = newton_polygon(f);
    out.vertex_divisibility_ok = true;
    for (Point v : nf.vertices())
        if (v.x % a != 0 || v.y % a != 0) out.vertex_divisibility_ok = false;

    bool all_ok = true;
    for (Direction w : edge_normals(nf)) {
        LaurentPoly lf = leading_form(f, w);
        if (lf.is_monomial()) continue; // the condition is vacuous off segments
        DirectionCheck dc{w, false, false};
        RootData root = root_extract(lf, w);
        if (root.r % a == 0) {
            dc.root_exists = true;
            // a-th root of F_+ is H^{r/a} up to scalar; its non-monomial part
            // is the segment polynomial of H raised to r/a.
            UniPoly chi = segment_poly(root.H, w).pow(static_cast<unsigned long>(root.r / a));
            dc.squarefree_ok = is_squarefree(chi);
        }
        if (!dc.root_exists || !dc.squarefree_ok) all_ok = false;
        out.directions.push_back(dc);
    }
    out.generic_boundaries_ok =
        out.conditions12_ok() && out.coprime_ok && out.vertex_divisibility_ok && all_ok;
    return out;
}

namespace {

// Seeded helpers; plain modulo keeps the stream portable across platforms.
long rnd_range(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat rnd_nonzero_coeff(std::mt19937_64& rng) {
    long v = rnd_range(rng, -3, 3);
    if (v == 0) v = 1;
    return Rat(v);
}

LaurentPoly rnd_unipoly_in(std::mt19937_64& rng, const LaurentPoly& base, long max_deg) {
    // p(base) with random small coefficients, degree in [1, max_deg]
    long deg = rnd_range(rng, 1, max_deg);
    LaurentPoly out;
    LaurentPoly pw = base;
    for (long i = 1; i <= deg; ++i) {
        long cv = rnd_range(rng, -2, 2);
        if (i == deg && cv == 0) cv = 1;
        if (cv != 0) out += Rat(cv) * pw;
        if (i < deg) pw = pw * base;
    }
    return out;
}

} // namespace

std::pair<LaurentPoly, LaurentPoly> gen_jacobian_pair(std::uint64_t seed, int steps,
                                                      long degree_bound) {
    std::mt19937_64 rng(seed);
    const Direction one{1, 1};
    LaurentPoly f = LaurentPoly::x(), g = LaurentPoly::y();
    auto deg = [&](const LaurentPoly& p) { return p.is_zero() ? 0 : w_deg(p, one); };

    int done = 0;
    int guard = 0;
    while (done < steps && guard < 8 * steps + 32) {
        ++guard;
        switch (rng() % 3) {
            case 0: { // G += p(F)
                long cap = std::max(1L, std::min(3L, degree_bound / std::max(1L, deg(f))));
                LaurentPoly cand = g + rnd_unipoly_in(rng, f, cap);
                if (!cand.is_zero() && deg(cand) <= degree_bound) {
                    g = cand;
                    ++done;
                }
                break;
            }
            case 1: { // F += q(G)
                long cap = std::max(1L, std::min(3L, degree_bound / std::max(1L, deg(g))));
                LaurentPoly cand = f + rnd_unipoly_in(rng, g, cap);
                if (!cand.is_zero() && deg(cand) <= degree_bound) {
                    f = cand;
                    ++done;
                }
                break;
            }
            default: { // unimodular shear or swap
                if (rng() % 2 == 0) {
                    LaurentPoly cand = f + rnd_nonzero_coeff(rng) * g;
                    if (deg(cand) <= degree_bound) f = cand;
                } else {
                    std::swap(f, g);
                }
                break;
            }
        }
    }
    // keep both images genuinely nonlinear when the bound allows it
    if (deg(f) < 2 && 2 * deg(g) <= degree_bound) f += g * g;
    if (deg(g) < 2 && 2 * deg(f) <= degree_bound) g += f * f;
    return {f, g};
}

namespace {

PowerPair gen_power_pair_impl(std::uint64_t seed, const std::vector<Point>& shape, long k,
                              const std::optional<Rat>& fixed_u0) {
    if (k < 1) fail(errc::precondition_violated, "k must be positive");
    std::mt19937_64 rng(seed);
    NewtonPolygon hull = convex_hull(shape);
    std::vector<Point> pts = lattice_points(hull);

    for (int attempt = 0; attempt < 200; ++attempt) {
        LaurentPoly p;
        for (Point z : pts) {
            bool pinned = hull.vertex_index(z) >= 0 || z == Point{0, 0};
            long cv = pinned ? 0 : rnd_range(rng, -2, 2);
            if (pinned) {
                cv = rnd_range(rng, 1, 3);
                if (rng() % 2 == 0 && !(z == Point{0, 0})) cv = -cv;
            }
            if (cv != 0) p.add_term(Exp{z.x, z.y}, Rat(cv));
        }
        Rat u0 = fixed_u0 ? *fixed_u0 : Rat(rnd_range(rng, 1, 5));
        LaurentPoly f = p * p + LaurentPoly::constant(u0);
        LaurentPoly fk = f.pow(static_cast<unsigned long>(k));
        LaurentPoly g = p * fk;
        if (generic_boundaries(f, g, 2, 2 * k + 1).generic_boundaries_ok)
            return PowerPair{f, g, p, u0, k};
    }
    fail(errc::generator_exhausted, "no generic power pair found for this shape");
}

} // namespace

PowerPair gen_power_pair(std::uint64_t seed, const std::vector<Point>& shape, long k) {
    return gen_power_pair_impl(seed, shape, k, std::nullopt);
}

PowerPair gen_power_pair(std::uint64_t seed, const std::vector<Point>& shape, long k,
                         const Rat& u0) {
    return gen_power_pair_impl(seed, shape, k, u0);
}

} // namespace jacpair
