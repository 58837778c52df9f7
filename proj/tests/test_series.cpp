#include "jacpair/series.hpp"

#include "jacpair/hypothesis.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace jacpair;
using namespace jacpair::testutil;

namespace {

TruncSeries make_series(std::vector<LaurentPoly> coeffs, long n) {
    TruncSeries s = TruncSeries::zero(n);
    for (std::size_t i = 0; i < coeffs.size() && static_cast<long>(i) <= n; ++i)
        s.at(static_cast<long>(i)) = HFrac(coeffs[i]);
    return s;
}

// Random normalized-leading series for the equivalence tests: the leading
// coefficient is rho * H^r by construction.
struct RandomPowerInput {
    std::vector<LaurentPoly> xs;
    RootData root;
};

RandomPowerInput random_power_input(std::mt19937_64& rng, long max_terms) {
    RandomPowerInput out;
    Direction w{1, 1};
    LaurentPoly h;
    switch (rng() % 3) {
        case 0: h = P("x*y"); break;
        case 1: h = P("x") + Rat(rnd_range(rng, 1, 3)) * P("y"); break;
        default: h = P("x^2") + Rat(rnd_range(rng, 1, 2)) * P("x*y"); break;
    }
    long r = 2;
    Rat rho(rnd_range(rng, 1, 4));
    out.root = RootData{w, r, rho, h, w_deg(h, w)};
    out.xs.push_back(rho * h.pow(static_cast<unsigned long>(r)));
    long extra = rnd_range(rng, 1, max_terms - 1);
    for (long t = 0; t < extra; ++t) out.xs.push_back(random_poly(rng, 3, 3));
    return out;
}

} // namespace

TEST_CASE("root extraction") {
    RootData r1 = root_extract(P("x^2*y^2"), Direction{1, 1});
    CHECK(r1.r == 2);
    CHECK(r1.rho == 1);
    CHECK(r1.H == P("x*y"));

    RootData r2 = root_extract(P("x^3+y^3"), Direction{1, 1});
    CHECK(r2.r == 1);
    CHECK(r2.rho == 1);
    CHECK(r2.H == P("x^3+y^3"));

    // squarefree-decomposition oracle case: 4 x^2 (x+y)^2
    RootData r3 = root_extract(P("4*x^2*(x+y)^2"), Direction{1, 1});
    CHECK(r3.r == 2);
    CHECK(r3.rho == 4);
    CHECK(r3.H == P("x*(x+y)"));
    CHECK(r3.rho * r3.H.pow(2) == P("4*x^2*(x+y)^2"));

    RootData r4 = root_extract(P("x^3*y"), Direction{1, 1});
    CHECK(r4.r == 1);
    CHECK(r4.H == P("x^3*y"));

    CHECK_THROWS_AS(root_extract(P("x + y^2"), Direction{1, 1}), error);
}

TEST_CASE("root extraction postcondition on random forms") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 30; ++it) {
        // random w-homogeneous form: monomial * small power of a binomial
        Direction w{1, 1};
        LaurentPoly h = P("x") + Rat(rnd_range(rng, 1, 3)) * P("y");
        long e1 = rnd_range(rng, 0, 2), e2 = rnd_range(rng, 0, 2), pw = rnd_range(rng, 1, 4);
        LaurentPoly f = LaurentPoly::monomial(Rat(rnd_range(rng, 1, 9)), e1, e2) *
                        h.pow(static_cast<unsigned long>(pw));
        RootData root = root_extract(f, w);
        CHECK(root.rho * root.H.pow(static_cast<unsigned long>(root.r)) == f);
        CHECK(root.H.is_polynomial());
        CHECK(sgn(root.H.leading_term().second) > 0);
    }
}

TEST_CASE("hfrac arithmetic and reduction") {
    LaurentPoly H = P("x*y");
    HFrac a(P("x^2*y^2"), 1); // x^2 y^2 / H
    hf_reduce(a, H);
    CHECK(a.k == 0);
    CHECK(a.num == P("x*y"));

    HFrac b(P("x"), 1), c(P("y"), 2);
    HFrac sum = hf_add(b, c, H);
    CHECK(hf_equal(sum, HFrac(P("x^2*y + y"), 2), H));
    CHECK(hf_equal(hf_mul(b, c), HFrac(P("x*y"), 3), H));

    // cross-multiplied equality without reduction
    CHECK(hf_equal(HFrac(P("x^2*y"), 1), HFrac(P("x"), 0), H));
}

TEST_CASE("binomial series (1+t)^(1/2)") {
    RootData root = root_extract(P("1"), Direction{1, 1});
    TruncSeries s = make_series({P("1"), P("1")}, 2);
    TruncSeries p = series_power(s, rat(1, 2), root);
    CHECK(hf_equal(p.at(0), HFrac(P("1")), root.H));
    CHECK(hf_equal(p.at(1), HFrac(P("1/2")), root.H));
    CHECK(hf_equal(p.at(2), HFrac(parse_poly("0-1/8", false)), root.H));
}

TEST_CASE("normalized square root with H bookkeeping") {
    RootData root = root_extract(P("x^2*y^2"), Direction{1, 1});
    TruncSeries s = make_series({P("x^2*y^2"), P("1")}, 1);
    TruncSeries p = series_power(s, rat(1, 2), root);
    CHECK(hf_equal(p.at(0), HFrac(P("x*y")), root.H));
    CHECK(hf_equal(p.at(1), HFrac(P("1/2"), 1), root.H)); // t/(2xy)
}

TEST_CASE("exact square root terminates") {
    Direction w{0, 1};
    LaurentPoly f = P("(x*y+x)^2");
    RootData root = root_extract(leading_form(f, w), w);
    TruncSeries s = series_from(f, w, 2);
    TruncSeries p = series_power(s, rat(1, 2), root);
    CHECK(hf_equal(p.at(0), HFrac(P("x*y")), root.H));
    CHECK(hf_equal(p.at(1), HFrac(P("x")), root.H));
    CHECK(p.at(2).is_zero());
}

TEST_CASE("series power preconditions") {
    RootData root = root_extract(P("x^2*y^2"), Direction{1, 1});
    TruncSeries s = make_series({P("x^2*y^2"), P("1")}, 1);
    CHECK_THROWS_AS(series_power(s, rat(1, 3), root), error);        // r*A not integral
    TruncSeries zl = make_series({P("0"), P("1")}, 1);
    CHECK_THROWS_AS(series_power(zl, rat(1, 2), root), error);       // zero leading
    TruncSeries wrong = make_series({P("x*y"), P("1")}, 1);
    CHECK_THROWS_AS(series_power(wrong, rat(1, 2), root), error);    // leading mismatch
}

TEST_CASE("multinomial expansion cross-checks") {
    RootData unit_root = root_extract(P("1"), Direction{1, 1});
    TruncSeries via_rec = series_power(make_series({P("1"), P("1")}, 6), rat(1, 2), unit_root);
    TruncSeries via_multi = multinomial_expand({P("1"), P("1")}, rat(1, 2), 6, unit_root);
    CHECK(series_equal(via_rec, via_multi, unit_root.H));

    // integer exponent reduces to the truncated ring power (up to the rho
    // normalization factor)
    std::mt19937_64 rng(8);
    for (int it = 0; it < 10; ++it) {
        RandomPowerInput in = random_power_input(rng, 3);
        long n = 4;
        TruncSeries multi = multinomial_expand(in.xs, Rat(3), n, in.root);
        TruncSeries base = make_series(in.xs, n);
        TruncSeries cube = series_mul(series_mul(base, base, in.root.H), base, in.root.H);
        Rat scale = rat_pow(in.root.rho, 3);
        for (long i = 0; i <= n; ++i)
            CHECK(hf_equal(multi.at(i), hf_scale(Rat(1) / scale, cube.at(i)), in.root.H));
    }
}

TEST_CASE("recurrence agrees with the multinomial oracle (Lemma-2.1-style equivalence)") {
    std::mt19937_64 rng(1234);
    const Rat exponents[] = {rat(1, 2), rat(-1, 2), rat(3, 2), rat(-3, 2), rat(2), rat(5, 2)};
    for (int it = 0; it < 60; ++it) {
        RandomPowerInput in = random_power_input(rng, 3);
        Rat a = exponents[rng() % 6];
        long n = rnd_range(rng, 1, 4);
        TruncSeries s = make_series(in.xs, n);
        TruncSeries rec = series_power(s, a, in.root);
        TruncSeries multi = multinomial_expand(in.xs, a, n, in.root);
        CHECK(series_equal(rec, multi, in.root.H));
        CHECK(is_power_series_of(s, a, rec, in.root));
    }
}

TEST_CASE("power-series group laws") {
    std::mt19937_64 rng(555);
    for (int it = 0; it < 25; ++it) {
        RandomPowerInput in = random_power_input(rng, 3);
        long n = rnd_range(rng, 1, 4);
        TruncSeries s = make_series(in.xs, n);

        TruncSeries plus = series_power(s, rat(1, 2), in.root);
        TruncSeries minus = series_power(s, rat(-1, 2), in.root);
        TruncSeries prod = series_mul(plus, minus, in.root.H);
        CHECK(hf_equal(prod.at(0), HFrac(P("1")), in.root.H));
        for (long i = 1; i <= n; ++i) CHECK(prod.at(i).is_zero());

        // A + B law: (1/2) + (3/2) = 2, and S^2 is the plain ring square
        TruncSeries a = series_power(s, rat(1, 2), in.root);
        TruncSeries b = series_power(s, rat(3, 2), in.root);
        TruncSeries ab = series_mul(a, b, in.root.H);
        TruncSeries direct = series_power(s, rat(2), in.root);
        CHECK(series_equal(ab, direct, in.root.H));
    }
}

TEST_CASE("series bracket basics") {
    Direction w{1, 1};
    LaurentPoly f = P("(x*y+x+1)^2");
    long n = 4;
    TruncSeries fs = series_from(f, w, n);
    RootData root = root_extract(leading_form(f, w), w);

    TruncSeries self = series_bracket(fs, fs, root.H);
    for (long i = 0; i <= n; ++i) CHECK(self.at(i).is_zero());

    // chain rule: [F~, F~^(3/2)] = 0 through the truncation order
    TruncSeries p32 = series_power(fs, rat(3, 2), root);
    TruncSeries br = series_bracket(fs, p32, root.H);
    for (long i = 0; i <= n; ++i) CHECK(br.at(i).is_zero());
}

TEST_CASE("series bracket coefficients equal graded bracket components") {
    std::mt19937_64 rng(909);
    Direction w{1, 1};
    for (int it = 0; it < 20; ++it) {
        LaurentPoly f = random_poly(rng, 5, 3);
        LaurentPoly g = random_poly(rng, 5, 3);
        if (f.is_zero() || g.is_zero()) continue;
        long d = w_deg(f, w), e = w_deg(g, w);
        long n = 4;
        TruncSeries br = series_bracket(series_from(f, w, n), series_from(g, w, n), P("1"));
        WDecomp bdec = decompose(bracket(f, g), w);
        for (long mu = 0; mu <= n; ++mu) {
            auto lhs = hf_to_laurent(br.at(mu), P("1"));
            REQUIRE(lhs.has_value());
            CHECK(*lhs == bdec.component(d + e - w.u - w.v - mu));
        }
    }
}

TEST_CASE("series printing") {
    RootData root = root_extract(P("x^2*y^2"), Direction{1, 1});
    TruncSeries s = make_series({P("x^2*y^2"), P("1")}, 1);
    TruncSeries p = series_power(s, rat(1, 2), root);
    // the monomial H cancels fully into Laurent exponents
    CHECK(series_str(p) == "x*y + (1/2*x^-1*y^-1)*t + O(t^2)");
    CHECK(series_str(TruncSeries::zero(2)) == "O(t^3)");
}

TEST_CASE("sum-vanishing identity for generated Jacobian pairs") {
    const Direction dirs[] = {{1, 1}, {1, 2}, {2, 1}};
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto [f, g] = gen_jacobian_pair(seed, 3, 8);
        for (Direction w : dirs) {
            long d = w_deg(f, w), e = w_deg(g, w);
            long n = d + e - w.u - w.v - 1;
            if (n < 0) continue;
            TruncSeries br = series_bracket(series_from(f, w, n), series_from(g, w, n), P("1"));
            for (long mu = 0; mu <= n; ++mu) CHECK(br.at(mu).is_zero());
        }
    }
}
