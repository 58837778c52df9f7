#include "jacpair/poly.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace jacpair {

const char* errc_name(errc c) {
    switch (c) {
        case errc::zero_divisor: return "ZeroDivisor";
        case errc::not_divisible: return "NotDivisible";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::not_homogeneous: return "NotHomogeneous";
        case errc::not_a_vertex: return "NotAVertex";
        case errc::anchor_out_of_range: return "AnchorOutOfRange";
        case errc::non_integral_root_power: return "NonIntegralRootPower";
        case errc::zero_leading: return "ZeroLeading";
        case errc::leading_mismatch: return "LeadingMismatch";
        case errc::not_commuting: return "NotCommuting";
        case errc::not_proportional: return "NotProportional";
        case errc::non_constant_jacobian: return "NonConstantJacobian";
        case errc::residual_not_proportional: return "ResidualNotProportional";
        case errc::fractional_exponent_residual: return "FractionalExponentResidual";
        case errc::odd_vertex: return "OddVertex";
        case errc::non_square_leading: return "NonSquareLeading";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::membership_failed: return "MembershipFailed";
        case errc::hypothesis_failed: return "HypothesisFailed";
        case errc::sweep_violation: return "SweepViolation";
        case errc::syntax_error: return "SyntaxError";
        case errc::negative_exponent: return "NegativeExponent";
        case errc::generator_exhausted: return "GeneratorExhausted";
    }
    return "Unknown";
}

Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    bool neg = e < 0;
    unsigned long n = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), n);
    if (neg) {
        if (q == 0) fail(errc::zero_divisor, "0 raised to a negative power");
        mpq_inv(out.get_mpq_t(), out.get_mpq_t());
    }
    return out;
}

std::optional<Rat> rat_sqrt(const Rat& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (q == 0) return Rat(0);
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return std::nullopt;
    Rat root;
    mpz_sqrt(root.get_num_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(root.get_den_mpz_t(), q.get_den_mpz_t());
    return root;
}

LaurentPoly LaurentPoly::constant(const Rat& c) { return monomial(c, 0, 0); }

LaurentPoly LaurentPoly::monomial(const Rat& c, long i, long j) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(Exp{i, j}, c);
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exp{0, 0};
}

bool LaurentPoly::is_polynomial() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.i >= 0 && t.first.j >= 0; });
}

Rat LaurentPoly::coeff(long i, long j) const {
    auto it = terms_.find(Exp{i, j});
    return it == terms_.end() ? Rat(0) : it->second;
}

std::pair<Exp, Rat> LaurentPoly::leading_term() const {
    if (terms_.empty()) fail(errc::zero_polynomial, "leading term of 0");
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
}

void LaurentPoly::add_term(Exp e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly operator*(const Rat& c, const LaurentPoly& p) {
    LaurentPoly out;
    if (c == 0) return out;
    for (const auto& [e, pc] : p.terms()) out.add_term(e, c * pc);
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
    LaurentPoly acc = constant(1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

namespace {

void append_monomial(std::ostringstream& os, const Rat& c, Exp e) {
    Rat a = abs(c);
    bool unit = (a == 1) && !(e == Exp{0, 0});
    if (!unit) os << a.get_str();
    bool need_star = !unit;
    if (e.i != 0) {
        if (need_star) os << "*";
        os << "x";
        if (e.i != 1) os << "^" << e.i;
        need_star = true;
    }
    if (e.j != 0) {
        if (need_star) os << "*";
        os << "y";
        if (e.j != 1) os << "^" << e.j;
    }
}

} // namespace

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        append_monomial(os, c, e);
    }
    return os.str();
}

LaurentPoly dx(const LaurentPoly& f) {
    LaurentPoly out;
    for (const auto& [e, c] : f.terms())
        if (e.i != 0) out.add_term(Exp{e.i - 1, e.j}, Rat(e.i) * c);
    return out;
}

LaurentPoly dy(const LaurentPoly& f) {
    LaurentPoly out;
    for (const auto& [e, c] : f.terms())
        if (e.j != 0) out.add_term(Exp{e.i, e.j - 1}, Rat(e.j) * c);
    return out;
}

std::pair<LaurentPoly, LaurentPoly> partials(const LaurentPoly& f) { return {dx(f), dy(f)}; }

LaurentPoly bracket(const LaurentPoly& f, const LaurentPoly& g) {
    return dx(f) * dy(g) - dx(g) * dy(f);
}

std::optional<LaurentPoly> try_divide(const LaurentPoly& f, const LaurentPoly& g, DivMode mode) {
    if (g.is_zero()) fail(errc::zero_divisor, "division by the zero polynomial");
    if (f.is_zero()) return LaurentPoly{};

    // Any exact quotient q satisfies N(f) = N(q) + N(g) (Minkowski), so its
    // exponents live in the coordinatewise difference box. A candidate term
    // outside the box proves non-divisibility, and the box also bounds the
    // reduction loop.
    auto bounds = [](const LaurentPoly& p) {
        long imin = 0, imax = 0, jmin = 0, jmax = 0;
        bool first = true;
        for (const auto& [e, c] : p.terms()) {
            (void)c;
            if (first) {
                imin = imax = e.i;
                jmin = jmax = e.j;
                first = false;
            } else {
                imin = std::min(imin, e.i);
                imax = std::max(imax, e.i);
                jmin = std::min(jmin, e.j);
                jmax = std::max(jmax, e.j);
            }
        }
        return std::array<long, 4>{imin, imax, jmin, jmax};
    };
    auto bf = bounds(f), bg = bounds(g);
    const long qi_min = bf[0] - bg[0], qi_max = bf[1] - bg[1];
    const long qj_min = bf[2] - bg[2], qj_max = bf[3] - bg[3];
    if (qi_min > qi_max || qj_min > qj_max) return std::nullopt;

    const auto [ge, gc] = g.leading_term();
    LaurentPoly r = f, q;
    while (!r.is_zero()) {
        const auto [re, rc] = r.leading_term();
        Exp te = re - ge;
        if (te.i < qi_min || te.i > qi_max || te.j < qj_min || te.j > qj_max)
            return std::nullopt;
        Rat tc = rc / gc;
        q.add_term(te, tc);
        r -= LaurentPoly::monomial(tc, te.i, te.j) * g;
    }
    if (mode == DivMode::poly && !q.is_polynomial()) return std::nullopt;
    return q;
}

LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g, DivMode mode) {
    auto q = try_divide(f, g, mode);
    if (!q) fail(errc::not_divisible, "no exact quotient " + f.str() + " / " + g.str());
    return *q;
}

} // namespace jacpair
