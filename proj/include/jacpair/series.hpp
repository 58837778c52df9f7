#pragma once

#include "jacpair/newton.hpp"
#include "jacpair/poly.hpp"
#include "jacpair/univariate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jacpair {

// Root data of a w-homogeneous form F_d: the largest r with a polynomial
// r-th root over the algebraic closure, realized rationally as
// F_d = rho * H^r with H a content-1 polynomial with positive leading
// coefficient. rho itself need not be an r-th power in Q; downstream code
// works with rho-normalized quantities so everything stays rational.
struct RootData {
    Direction w{1, 1};
    long r = 1;
    Rat rho;
    LaurentPoly H;
    long h_deg = 0; // w-deg(H)
};

RootData root_extract(const LaurentPoly& f_d, Direction w);

// Associated one-variable polynomial of a w-homogeneous form along its
// support segment (the non-monomial content of the form).
UniPoly segment_poly(const LaurentPoly& h, Direction w);

// num / H^k for a contextual H. Lazily reduced; equality is decided by
// cross-multiplication.
struct HFrac {
    LaurentPoly num;
    long k = 0;

    HFrac() = default;
    explicit HFrac(LaurentPoly n, long kk = 0) : num(std::move(n)), k(kk) {
        if (num.is_zero()) k = 0;
    }

    bool is_zero() const { return num.is_zero(); }
};

HFrac hf_add(const HFrac& a, const HFrac& b, const LaurentPoly& H);
HFrac hf_sub(const HFrac& a, const HFrac& b, const LaurentPoly& H);
HFrac hf_mul(const HFrac& a, const HFrac& b);
HFrac hf_scale(const Rat& c, const HFrac& a);
HFrac hf_neg(const HFrac& a);
bool hf_equal(const HFrac& a, const HFrac& b, const LaurentPoly& H);
void hf_reduce(HFrac& a, const LaurentPoly& H);

HFrac hf_dx(const HFrac& a, const LaurentPoly& H);
HFrac hf_dy(const HFrac& a, const LaurentPoly& H);
HFrac hf_bracket(const HFrac& a, const HFrac& b, const LaurentPoly& H);

// Exact polynomial/Laurent value when the fraction reduces completely.
std::optional<LaurentPoly> hf_to_laurent(const HFrac& a, const LaurentPoly& H);

std::string hf_str(const HFrac& a);

// Truncated series sum c_i t^i + O(t^{N+1}); arithmetic never consults
// coefficients beyond the order.
struct TruncSeries {
    long order = 0;
    std::vector<HFrac> coeffs; // size order + 1

    static TruncSeries zero(long n) { return TruncSeries{n, std::vector<HFrac>(static_cast<std::size_t>(n) + 1)}; }
    const HFrac& at(long i) const { return coeffs[static_cast<std::size_t>(i)]; }
    HFrac& at(long i) { return coeffs[static_cast<std::size_t>(i)]; }
};

// F_d + F_{d-1} t + ... + F_{d-N} t^N from the w-decomposition of f.
TruncSeries series_from(const LaurentPoly& f, Direction w, long n);

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b, const LaurentPoly& H);
TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b, const LaurentPoly& H);
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b, const LaurentPoly& H);
bool series_equal(const TruncSeries& a, const TruncSeries& b, const LaurentPoly& H);

// rho^{-A} * S^A truncated at the order of S, where the leading coefficient
// of S must equal rho * H^r. Computed by the first-order recurrence obtained
// from S * (S^A)' = A * S' * S^A; all coefficients stay rational.
TruncSeries series_power(const TruncSeries& s, const Rat& a, const RootData& root);

// The literal nested-sum expansion of (x_0 + x_1 t + ... + x_n t^n)^A,
// rho-normalized the same way; the brute-force oracle for the recurrence.
TruncSeries multinomial_expand(const std::vector<LaurentPoly>& xs, const Rat& a, long n,
                               const RootData& root);

// Coefficientwise Jacobian bracket of two series.
TruncSeries series_bracket(const TruncSeries& fs, const TruncSeries& gs, const LaurentPoly& H);

// Substitution check that P solves the defining relation of the normalized
// power S^A: S * P' == A * S' * P through the common order, with the
// required leading coefficient. Used as the independent verification path.
bool is_power_series_of(const TruncSeries& s, const Rat& a, const TruncSeries& p,
                        const RootData& root);

std::string series_str(const TruncSeries& s);

} // namespace jacpair
