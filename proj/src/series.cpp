#include "jacpair/series.hpp"

#include "jacpair/univariate.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace jacpair {

namespace {

// Associated one-variable polynomial of a w-homogeneous form: the form is
// x^b y^c * phi(x^v y^-u) with phi(0) != 0, where (b, c) is the support
// endpoint with the smallest parameter along the primitive step (v, -u).
struct SegmentForm {
    long b = 0, c = 0;
    UniPoly phi;
};

SegmentForm segment_form(const LaurentPoly& f, Direction w) {
    auto pts = support(f);
    Point base = pts.front();
    long smin = 0, smax = 0;
    auto param = [&](Point p) {
        return (w.v != 0) ? (p.x - base.x) / w.v : (base.y - p.y) / w.u;
    };
    for (const Point& p : pts) {
        long s = param(p);
        smin = std::min(smin, s);
        smax = std::max(smax, s);
    }
    SegmentForm out;
    out.b = base.x + smin * w.v;
    out.c = base.y - smin * w.u;
    std::vector<Rat> coeffs(static_cast<std::size_t>(smax - smin) + 1, Rat(0));
    for (const Point& p : pts)
        coeffs[static_cast<std::size_t>(param(p) - smin)] = f.coeff(p.x, p.y);
    out.phi = UniPoly(std::move(coeffs));
    return out;
}

LaurentPoly from_segment(long b, long c, const UniPoly& psi, Direction w) {
    LaurentPoly out;
    for (int s = 0; s <= psi.degree(); ++s)
        out.add_term(Exp{b + s * w.v, c - s * w.u}, psi[s]);
    return out;
}

Rat poly_content(const LaurentPoly& p) {
    // gcd of numerators over lcm of denominators; positive.
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        (void)e;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return rat(num_gcd, den_lcm);
}

} // namespace

UniPoly segment_poly(const LaurentPoly& h, Direction w) {
    if (!is_w_homogeneous(h, w))
        fail(errc::not_homogeneous, "segment polynomial needs a w-homogeneous form");
    return segment_form(h, w).phi;
}

RootData root_extract(const LaurentPoly& f_d, Direction w) {
    if (!is_w_homogeneous(f_d, w))
        fail(errc::not_homogeneous, "root extraction needs a w-homogeneous form");
    if (!f_d.is_polynomial())
        fail(errc::precondition_violated, "root extraction needs a polynomial form");

    SegmentForm seg = segment_form(f_d, w);
    SquarefreeDecomp dec = squarefree_decompose(seg.phi);

    long r = std::gcd(std::abs(seg.b), std::abs(seg.c));
    for (const auto& [a, m] : dec.factors) {
        (void)a;
        r = std::gcd(r, static_cast<long>(m));
    }
    if (r == 0) r = 1; // constant form

    UniPoly psi = UniPoly::constant(1);
    for (const auto& [a, m] : dec.factors)
        psi = psi * a.pow(static_cast<unsigned long>(m / r));

    RootData root;
    root.w = w;
    root.r = r;
    root.H = from_segment(seg.b / r, seg.c / r, psi, w);

    Rat content = poly_content(root.H);
    root.H = (Rat(1) / content) * root.H;
    if (sgn(root.H.leading_term().second) < 0) root.H = -root.H;

    root.rho = f_d.leading_term().second / rat_pow(root.H.leading_term().second, r);
    root.h_deg = w_deg(root.H, w);
    assert(root.rho * root.H.pow(static_cast<unsigned long>(r)) == f_d);
    assert(root.H.is_polynomial());
    return root;
}

HFrac hf_add(const HFrac& a, const HFrac& b, const LaurentPoly& H) {
    long k = std::max(a.k, b.k);
    LaurentPoly num = a.num * H.pow(static_cast<unsigned long>(k - a.k)) +
                      b.num * H.pow(static_cast<unsigned long>(k - b.k));
    return HFrac(std::move(num), k);
}

HFrac hf_sub(const HFrac& a, const HFrac& b, const LaurentPoly& H) {
    return hf_add(a, hf_neg(b), H);
}

HFrac hf_mul(const HFrac& a, const HFrac& b) { return HFrac(a.num * b.num, a.k + b.k); }

HFrac hf_scale(const Rat& c, const HFrac& a) { return HFrac(c * a.num, a.k); }

HFrac hf_neg(const HFrac& a) { return HFrac(-a.num, a.k); }

bool hf_equal(const HFrac& a, const HFrac& b, const LaurentPoly& H) {
    if (a.k == b.k) return a.num == b.num;
    return a.num * H.pow(static_cast<unsigned long>(b.k)) ==
           b.num * H.pow(static_cast<unsigned long>(a.k));
}

void hf_reduce(HFrac& a, const LaurentPoly& H) {
    if (a.is_zero()) {
        a.k = 0;
        return;
    }
    while (a.k > 0) {
        auto q = try_divide(a.num, H, DivMode::laurent);
        if (!q) break;
        a.num = std::move(*q);
        --a.k;
    }
}

HFrac hf_dx(const HFrac& a, const LaurentPoly& H) {
    if (a.k == 0) return HFrac(dx(a.num));
    LaurentPoly num = dx(a.num) * H - Rat(a.k) * (a.num * dx(H));
    return HFrac(std::move(num), a.k + 1);
}

HFrac hf_dy(const HFrac& a, const LaurentPoly& H) {
    if (a.k == 0) return HFrac(dy(a.num));
    LaurentPoly num = dy(a.num) * H - Rat(a.k) * (a.num * dy(H));
    return HFrac(std::move(num), a.k + 1);
}

HFrac hf_bracket(const HFrac& a, const HFrac& b, const LaurentPoly& H) {
    HFrac out = hf_sub(hf_mul(hf_dx(a, H), hf_dy(b, H)), hf_mul(hf_dx(b, H), hf_dy(a, H)), H);
    hf_reduce(out, H);
    return out;
}

std::optional<LaurentPoly> hf_to_laurent(const HFrac& a, const LaurentPoly& H) {
    HFrac r = a;
    hf_reduce(r, H);
    if (r.k == 0) return r.num;
    return std::nullopt;
}

std::string hf_str(const HFrac& a) {
    if (a.k == 0) return a.num.str();
    std::ostringstream os;
    os << "(" << a.num.str() << ")/H^" << a.k;
    return os.str();
}

TruncSeries series_from(const LaurentPoly& f, Direction w, long n) {
    TruncSeries out = TruncSeries::zero(n);
    if (f.is_zero()) return out;
    WDecomp dec = decompose(f, w);
    long d = dec.components.rbegin()->first;
    for (long i = 0; i <= n; ++i) out.at(i) = HFrac(dec.component(d - i));
    return out;
}

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b, const LaurentPoly& H) {
    long n = std::min(a.order, b.order);
    TruncSeries out = TruncSeries::zero(n);
    for (long i = 0; i <= n; ++i) out.at(i) = hf_add(a.at(i), b.at(i), H);
    return out;
}

TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b, const LaurentPoly& H) {
    long n = std::min(a.order, b.order);
    TruncSeries out = TruncSeries::zero(n);
    for (long i = 0; i <= n; ++i) out.at(i) = hf_sub(a.at(i), b.at(i), H);
    return out;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b, const LaurentPoly& H) {
    long n = std::min(a.order, b.order);
    TruncSeries out = TruncSeries::zero(n);
    for (long i = 0; i <= n; ++i)
        for (long j = 0; i + j <= n && j <= b.order; ++j)
            out.at(i + j) = hf_add(out.at(i + j), hf_mul(a.at(i), b.at(j)), H);
    for (auto& c : out.coeffs) hf_reduce(c, H);
    return out;
}

bool series_equal(const TruncSeries& a, const TruncSeries& b, const LaurentPoly& H) {
    long n = std::min(a.order, b.order);
    for (long i = 0; i <= n; ++i)
        if (!hf_equal(a.at(i), b.at(i), H)) return false;
    return true;
}

namespace {

// H^e as an HFrac (negative exponents go to the denominator).
HFrac h_power(const LaurentPoly& H, long e) {
    if (e >= 0) return HFrac(H.pow(static_cast<unsigned long>(e)));
    return HFrac(LaurentPoly::constant(1), -e);
}

// H-exponent of the leading coefficient of the normalized power: B = r*A.
long leading_h_exponent(const Rat& a, const RootData& root) {
    if (root.H.is_constant()) return 0;
    Rat ra(Rat(root.r) * a);
    return static_cast<long>(ra.get_num().get_si());
}

void check_power_pre(const TruncSeries& s, const Rat& a, const RootData& root) {
    if (s.coeffs.empty() || s.at(0).is_zero())
        fail(errc::zero_leading, "series power needs an invertible leading coefficient");
    Rat ra = Rat(root.r) * a;
    if (!root.H.is_constant() && !rat_is_integer(ra))
        fail(errc::non_integral_root_power,
             "r*A = " + ra.get_str() + " is not an integer");
    HFrac lead = s.at(0);
    if (lead.k != 0 ||
        lead.num != root.rho * root.H.pow(static_cast<unsigned long>(root.r)))
        fail(errc::leading_mismatch, "leading coefficient is not rho*H^r");
}

} // namespace

TruncSeries series_power(const TruncSeries& s, const Rat& a, const RootData& root) {
    check_power_pre(s, a, root);
    const LaurentPoly& H = root.H;
    const long n = s.order;
    // B = r*A is the H-exponent of the leading coefficient of the result.
    long b_exp = leading_h_exponent(a, root);

    TruncSeries p = TruncSeries::zero(n);
    p.at(0) = h_power(H, b_exp);

    // Leading coefficient of S as an invertible HFrac: 1/(rho H^r).
    HFrac s0_inv(LaurentPoly::constant(Rat(1) / root.rho), root.r);

    // From S * P' = A * S' * P, coefficient mu:
    //   sum_{i<=mu} S_i (mu-i+1) P_{mu-i+1} = A sum_{i<=mu} (i+1) S_{i+1} P_{mu-i}
    // solved for P_{mu+1}.
    for (long mu = 0; mu < n; ++mu) {
        HFrac rhs;
        for (long i = 0; i <= mu && i + 1 <= n; ++i)
            rhs = hf_add(rhs, hf_scale(a * Rat(i + 1), hf_mul(s.at(i + 1), p.at(mu - i))), H);
        for (long i = 1; i <= mu; ++i)
            rhs = hf_sub(rhs, hf_scale(Rat(mu - i + 1), hf_mul(s.at(i), p.at(mu - i + 1))), H);
        HFrac next = hf_scale(Rat(1, mu + 1), hf_mul(rhs, s0_inv));
        hf_reduce(next, H);
        p.at(mu + 1) = std::move(next);
    }
    return p;
}

TruncSeries multinomial_expand(const std::vector<LaurentPoly>& xs, const Rat& a, long n,
                               const RootData& root) {
    if (xs.empty()) fail(errc::zero_leading, "empty coefficient list");
    TruncSeries s = TruncSeries::zero(n);
    for (std::size_t i = 0; i < xs.size() && static_cast<long>(i) <= n; ++i)
        s.at(static_cast<long>(i)) = HFrac(xs[i]);
    check_power_pre(s, a, root);

    const LaurentPoly& H = root.H;
    long b_exp = leading_h_exponent(a, root);
    TruncSeries out = TruncSeries::zero(n);

    // Cached powers of each x_i.
    std::vector<std::vector<LaurentPoly>> pows(xs.size());

    auto x_pow = [&](std::size_t i, long e) -> const LaurentPoly& {
        auto& cache = pows[i];
        if (cache.empty()) cache.push_back(LaurentPoly::constant(1));
        while (static_cast<long>(cache.size()) <= e) cache.push_back(cache.back() * xs[i]);
        return cache[static_cast<std::size_t>(e)];
    };

    // Enumerate exponent tuples (v_1..v_m) with sum i*v_i <= n.
    const long m = static_cast<long>(xs.size()) - 1;
    std::vector<long> v(static_cast<std::size_t>(m) + 1, 0);
    auto emit = [&]() {
        long weight = 0, total = 0;
        for (long i = 1; i <= m; ++i) {
            weight += i * v[static_cast<std::size_t>(i)];
            total += v[static_cast<std::size_t>(i)];
        }
        // falling factorial A (A-1) ... (A-total+1) / prod v_i!
        Rat coef(1);
        for (long t = 0; t < total; ++t) coef *= a - Rat(t);
        for (long i = 1; i <= m; ++i)
            for (long t = 2; t <= v[static_cast<std::size_t>(i)]; ++t) coef /= Rat(t);
        if (coef == 0) return;
        // rho^{-A} x_0^{A-total} = rho^{-total} H^{B - r*total}
        coef *= rat_pow(Rat(1) / root.rho, total);
        LaurentPoly term = LaurentPoly::constant(coef);
        for (long i = 1; i <= m; ++i)
            if (v[static_cast<std::size_t>(i)] > 0)
                term = term * x_pow(static_cast<std::size_t>(i), v[static_cast<std::size_t>(i)]);
        HFrac contrib = hf_mul(HFrac(std::move(term)), h_power(H, b_exp - root.r * total));
        out.at(weight) = hf_add(out.at(weight), contrib, H);
    };

    // Depth-first over positions; prune by remaining weight; skip zero x_i.
    auto rec = [&](auto&& self, long pos, long weight_left) -> void {
        if (pos > m) {
            emit();
            return;
        }
        self(self, pos + 1, weight_left);
        if (!xs[static_cast<std::size_t>(pos)].is_zero()) {
            for (long cnt = 1; cnt * pos <= weight_left; ++cnt) {
                v[static_cast<std::size_t>(pos)] = cnt;
                self(self, pos + 1, weight_left - cnt * pos);
            }
            v[static_cast<std::size_t>(pos)] = 0;
        }
    };
    rec(rec, 1, n);

    for (auto& c : out.coeffs) hf_reduce(c, H);
    return out;
}

TruncSeries series_bracket(const TruncSeries& fs, const TruncSeries& gs, const LaurentPoly& H) {
    long n = std::min(fs.order, gs.order);
    TruncSeries out = TruncSeries::zero(n);
    for (long i = 0; i <= n; ++i)
        for (long j = 0; i + j <= n; ++j)
            out.at(i + j) = hf_add(out.at(i + j), hf_bracket(fs.at(i), gs.at(j), H), H);
    for (auto& c : out.coeffs) hf_reduce(c, H);
    return out;
}

bool is_power_series_of(const TruncSeries& s, const Rat& a, const TruncSeries& p,
                        const RootData& root) {
    const LaurentPoly& H = root.H;
    long b_exp = leading_h_exponent(a, root);
    if (!hf_equal(p.at(0), h_power(H, b_exp), H)) return false;

    const long n = std::min(s.order, p.order);
    // S * P' == A * S' * P, coefficient by coefficient through t^{n-1}.
    for (long mu = 0; mu + 1 <= n; ++mu) {
        HFrac lhs, rhs;
        for (long i = 0; i <= mu; ++i) {
            lhs = hf_add(lhs, hf_scale(Rat(mu - i + 1), hf_mul(s.at(i), p.at(mu - i + 1))), H);
            rhs = hf_add(rhs, hf_scale(a * Rat(i + 1), hf_mul(s.at(i + 1), p.at(mu - i))), H);
        }
        if (!hf_equal(lhs, rhs, H)) return false;
    }
    return true;
}

std::string series_str(const TruncSeries& s) {
    std::ostringstream os;
    bool any = false;
    for (long i = 0; i <= s.order; ++i) {
        if (s.at(i).is_zero()) continue;
        if (any) os << " + ";
        if (i == 0)
            os << hf_str(s.at(i));
        else
            os << "(" << hf_str(s.at(i)) << ")*t" << (i == 1 ? "" : "^" + std::to_string(i));
        any = true;
    }
    if (any) os << " + ";
    os << "O(t^" << s.order + 1 << ")";
    return os.str();
}

} // namespace jacpair
