#pragma once

#include "jacpair/error.hpp"
#include "jacpair/rat.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace jacpair {

// Exponent pair of a bivariate (Laurent) monomial x^i y^j.
struct Exp {
    long i = 0;
    long j = 0;

    long grade() const { return i + j; }

    friend Exp operator+(Exp a, Exp b) { return {a.i + b.i, a.j + b.j}; }
    friend Exp operator-(Exp a, Exp b) { return {a.i - b.i, a.j - b.j}; }
    friend bool operator==(Exp a, Exp b) { return a.i == b.i && a.j == b.j; }
};

// Graded order, ties broken by the y-exponent (so x^2*y > x^3). Total on
// exponent pairs and compatible with addition, which makes leading terms
// multiplicative; that is what the division loop relies on.
struct GradedLess {
    bool operator()(const Exp& a, const Exp& b) const {
        if (a.grade() != b.grade()) return a.grade() < b.grade();
        return a.j < b.j;
    }
};

// Sparse exact bivariate Laurent polynomial over Rat. Terms are kept in
// canonical graded-lex order with no stored zero coefficients; printing and
// hashing are deterministic. Plain polynomials are the subset with
// nonnegative exponents (is_polynomial()).
class LaurentPoly {
public:
    using TermMap = std::map<Exp, Rat, GradedLess>;

    LaurentPoly() = default;

    static LaurentPoly constant(const Rat& c);
    static LaurentPoly monomial(const Rat& c, long i, long j);
    static LaurentPoly x() { return monomial(1, 1, 0); }
    static LaurentPoly y() { return monomial(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_polynomial() const;

    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rat coeff(long i, long j) const;
    Rat coeff(Exp e) const { return coeff(e.i, e.j); }
    Rat constant_term() const { return coeff(0, 0); }

    // Highest term in the graded order; requires a nonzero polynomial.
    std::pair<Exp, Rat> leading_term() const;

    // Adds c to the coefficient at (i, j), dropping the term if it cancels.
    void add_term(Exp e, const Rat& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Rat& c, const LaurentPoly& p);

    LaurentPoly pow(unsigned long e) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Canonical text form: terms descending graded-lex, "p/q" coefficients,
    // e.g. "x^2*y^2 + 2*x^2*y - 1/2*x^3".
    std::string str() const;

private:
    TermMap terms_;
};

LaurentPoly dx(const LaurentPoly& f);
LaurentPoly dy(const LaurentPoly& f);
std::pair<LaurentPoly, LaurentPoly> partials(const LaurentPoly& f);

// Jacobian bracket f_x*g_y - g_x*f_y.
LaurentPoly bracket(const LaurentPoly& f, const LaurentPoly& g);

enum class DivMode { laurent, poly };

// Exact division f/g; nullopt when the quotient does not exist in the
// requested ring. Throws zero_divisor when g == 0.
std::optional<LaurentPoly> try_divide(const LaurentPoly& f, const LaurentPoly& g,
                                      DivMode mode = DivMode::laurent);

// Same, but throws not_divisible instead of returning nullopt.
LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g,
                         DivMode mode = DivMode::laurent);

inline bool is_laurent_multiple(const LaurentPoly& f, const LaurentPoly& g) {
    return try_divide(f, g, DivMode::laurent).has_value();
}

} // namespace jacpair
