#include "jacpair/univariate.hpp"

#include "jacpair/error.hpp"

#include <cassert>

namespace jacpair {

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly{};
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(out));
}

UniPoly operator*(const Rat& c, const UniPoly& p) {
    if (c == 0) return UniPoly{};
    std::vector<Rat> out = p.coeffs_;
    for (auto& x : out) x *= c;
    return UniPoly(std::move(out));
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly{};
    std::vector<Rat> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = Rat(static_cast<long>(k)) * coeffs_[k];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return (Rat(1) / leading()) * *this;
}

UniPoly UniPoly::pow(unsigned long e) const {
    UniPoly acc = UniPoly::constant(1);
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) fail(errc::zero_divisor, "univariate division by zero");
    std::vector<Rat> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly{}, a};
    std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
    for (int k = a.degree(); k >= db; --k) {
        Rat c = rem[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rat q = c / b.leading();
        quo[static_cast<std::size_t>(k - db)] = q;
        for (int t = 0; t <= db; ++t) rem[static_cast<std::size_t>(k - db + t)] -= q * b[t];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
        auto [q, r] = divmod(f, g);
        (void)q;
        f = g;
        g = r.monic(); // keeps coefficient growth down
    }
    return f.monic();
}

bool is_squarefree(const UniPoly& f) {
    if (f.is_zero()) return false;
    if (f.is_constant()) return true;
    return gcd(f, f.derivative()).is_constant();
}

SquarefreeDecomp squarefree_decompose(const UniPoly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "squarefree decomposition of 0");
    SquarefreeDecomp out;
    out.content = f.leading();
    UniPoly fm = f.monic();
    if (fm.is_constant()) return out;

    // Yun's algorithm on the monic part.
    UniPoly fp = fm.derivative();
    UniPoly g = gcd(fm, fp);
    UniPoly w = divmod(fm, g).first;
    UniPoly y = divmod(fp, g).first;
    int m = 1;
    while (!w.is_constant()) {
        UniPoly z = y - w.derivative();
        UniPoly am = gcd(w, z);
        if (!am.is_constant()) out.factors.emplace_back(am, m);
        w = divmod(w, am).first;
        y = divmod(z, am).first;
        ++m;
    }

    // Monic factors absorb nothing: the product of A_m^m is monic, so the
    // content is exactly the leading coefficient. Double-check exactly.
    UniPoly check = UniPoly::constant(out.content);
    for (const auto& [a, mult] : out.factors) check = check * a.pow(static_cast<unsigned long>(mult));
    assert(check == f);
    return out;
}

} // namespace jacpair
