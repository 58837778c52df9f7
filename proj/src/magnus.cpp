#include "jacpair/magnus.hpp"

#include <cassert>

namespace jacpair {

namespace {

Rat constant_bracket(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly br = bracket(f, g);
    if (!br.is_constant())
        fail(errc::non_constant_jacobian, "[F,G] = " + br.str() + " is not a constant");
    return br.constant_term();
}

TruncSeries series_truncate(const TruncSeries& s, long n) {
    TruncSeries out = TruncSeries::zero(n);
    for (long i = 0; i <= n && i <= s.order; ++i) out.at(i) = s.at(i);
    return out;
}

} // namespace

Proportionality proportional_to_power(const HFrac& g, const LaurentPoly& f, Direction w) {
    if (g.is_zero()) fail(errc::precondition_violated, "g must be nonzero");
    if (!is_w_homogeneous(g.num, w))
        fail(errc::not_homogeneous, "g must be w-homogeneous");
    if (f.is_zero() || !is_w_homogeneous(f, w))
        fail(errc::not_homogeneous, "f must be a nonzero w-homogeneous polynomial");
    long df = w_deg(f, w);
    if (df <= 0) fail(errc::precondition_violated, "w-degree of f must be positive");

    RootData root = root_extract(f, w);
    if (!hf_bracket(g, HFrac(f), root.H).is_zero())
        fail(errc::not_commuting, "[g, f] != 0");

    long dg = w_deg(g.num, w) - g.k * root.h_deg;
    if ((root.r * dg) % df != 0)
        fail(errc::not_proportional, "s = r*d_g/d_f is not an integer");
    long s = root.r * dg / df;

    long hpow = g.k + s;
    std::optional<LaurentPoly> c;
    if (hpow >= 0)
        c = try_divide(g.num, root.H.pow(static_cast<unsigned long>(hpow)), DivMode::laurent);
    else
        c = g.num * root.H.pow(static_cast<unsigned long>(-hpow));
    if (!c || !c->is_constant())
        fail(errc::not_proportional, "g is not a constant multiple of H^" + std::to_string(s));
    return {c->constant_term(), s};
}

Proportionality proportional_to_power(const LaurentPoly& g, const LaurentPoly& f, Direction w) {
    return proportional_to_power(HFrac(g), f, w);
}

MagnusCoeffs magnus_solve(const LaurentPoly& f, const LaurentPoly& g, Direction w) {
    if (f.is_zero() || g.is_zero()) fail(errc::zero_polynomial, "F and G must be nonzero");
    long mu_max = w_deg(f, w) + w_deg(g, w) - w.u - w.v - 1;
    return magnus_solve(f, g, w, mu_max);
}

MagnusCoeffs magnus_solve(const LaurentPoly& f, const LaurentPoly& g, Direction w, long mu_max) {
    if (f.is_zero() || g.is_zero()) fail(errc::zero_polynomial, "F and G must be nonzero");
    constant_bracket(f, g);

    MagnusCoeffs out;
    out.w = w;
    out.d = w_deg(f, w);
    out.e = w_deg(g, w);
    if (out.d <= 0) fail(errc::precondition_violated, "w-degree of F must be positive");
    if (mu_max > out.d + out.e - w.u - w.v - 1)
        fail(errc::precondition_violated, "mu_max exceeds d+e-u-v-1");
    out.mu_max = mu_max;
    out.root = root_extract(leading_form(f, w), w);
    if (mu_max < 0) return out;

    const LaurentPoly& H = out.root.H;
    const WDecomp gdec = decompose(g, w);
    const TruncSeries fs = series_from(f, w, mu_max);

    out.coeffs.assign(static_cast<std::size_t>(mu_max) + 1, Rat(0));
    out.forced_zero.assign(static_cast<std::size_t>(mu_max) + 1, false);
    std::vector<TruncSeries> powers(static_cast<std::size_t>(mu_max) + 1);

    for (long mu = 0; mu <= mu_max; ++mu) {
        const bool integral = (out.root.r * (out.e - mu)) % out.d == 0;
        out.forced_zero[static_cast<std::size_t>(mu)] = !integral;

        HFrac residual(gdec.component(out.e - mu));
        for (long gamma = 0; gamma < mu; ++gamma) {
            const Rat& c = out.coeffs[static_cast<std::size_t>(gamma)];
            if (c == 0) continue;
            residual = hf_sub(residual,
                              hf_scale(c, powers[static_cast<std::size_t>(gamma)].at(mu - gamma)),
                              H);
        }
        hf_reduce(residual, H);

        if (residual.is_zero()) {
            // unique choice is c'_mu = 0
        } else if (!integral) {
            fail(errc::fractional_exponent_residual,
                 "nonzero residual at level " + std::to_string(mu) +
                     " where r(e-mu)/d is not an integer");
        } else {
            Proportionality pr;
            try {
                pr = proportional_to_power(residual, leading_form(f, w), w);
            } catch (const error& err) {
                if (err.code() == errc::not_proportional || err.code() == errc::not_commuting)
                    fail(errc::residual_not_proportional,
                         "level " + std::to_string(mu) + ": " + err.what());
                throw;
            }
            assert(pr.s == out.root.r * (out.e - mu) / out.d);
            out.coeffs[static_cast<std::size_t>(mu)] = pr.c;
        }

        if (out.coeffs[static_cast<std::size_t>(mu)] != 0 && mu < mu_max)
            powers[static_cast<std::size_t>(mu)] =
                series_power(series_truncate(fs, mu_max - mu), rat(out.e - mu, out.d), out.root);
    }
    return out;
}

MagnusReport verify_magnus(const LaurentPoly& f, const LaurentPoly& g, Direction w) {
    MagnusReport rep;
    rep.coeffs = magnus_solve(f, g, w);
    const MagnusCoeffs& mc = rep.coeffs;
    const LaurentPoly& H = mc.root.H;

    if (mc.mu_max < 0) {
        rep.all_pass = true;
        return rep;
    }

    for (long gamma = 0; gamma <= mc.mu_max; ++gamma)
        if (mc.forced_zero[static_cast<std::size_t>(gamma)] &&
            mc.coeffs[static_cast<std::size_t>(gamma)] != 0)
            rep.vanishing_ok = false;

    // Fresh power series, each validated against the defining relation
    // rather than trusted from the recurrence.
    const TruncSeries fs = series_from(f, w, mc.mu_max);
    std::vector<TruncSeries> powers(static_cast<std::size_t>(mc.mu_max) + 1);
    std::vector<bool> have(static_cast<std::size_t>(mc.mu_max) + 1, false);
    for (long gamma = 0; gamma <= mc.mu_max; ++gamma) {
        if (mc.coeffs[static_cast<std::size_t>(gamma)] == 0) continue;
        Rat a = rat(mc.e - gamma, mc.d);
        TruncSeries base = series_truncate(fs, mc.mu_max - gamma);
        TruncSeries p = series_power(base, a, mc.root);
        if (!is_power_series_of(base, a, p, mc.root)) rep.powers_ok = false;
        powers[static_cast<std::size_t>(gamma)] = std::move(p);
        have[static_cast<std::size_t>(gamma)] = true;
    }

    const WDecomp gdec = decompose(g, w);
    rep.all_pass = rep.powers_ok && rep.vanishing_ok;
    for (long mu = 0; mu <= mc.mu_max; ++mu) {
        HFrac rhs;
        for (long gamma = 0; gamma <= mu; ++gamma) {
            if (!have[static_cast<std::size_t>(gamma)]) continue;
            rhs = hf_add(rhs,
                         hf_scale(mc.coeffs[static_cast<std::size_t>(gamma)],
                                  powers[static_cast<std::size_t>(gamma)].at(mu - gamma)),
                         H);
        }
        bool pass = hf_equal(rhs, HFrac(gdec.component(mc.e - mu)), H);
        if (!pass) rep.all_pass = false;
        rep.levels.push_back({mu, pass});
    }
    return rep;
}

} // namespace jacpair
