#pragma once

#include "jacpair/rat.hpp"

#include <utility>
#include <vector>

namespace jacpair {

// Dense univariate polynomial over Rat. Only used for the segment
// polynomials of w-homogeneous forms (root extraction and the squarefree
// checks of the generic-boundary condition), so degrees stay small.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);

    static UniPoly constant(const Rat& c) { return UniPoly({c}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const Rat& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& leading() const { return coeffs_.back(); }

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rat& c, const UniPoly& p);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly pow(unsigned long e) const;

private:
    void trim();
    std::vector<Rat> coeffs_; // c0 + c1 z + ... ; no trailing zeros
};

// Quotient and remainder of a by b (b != 0).
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

bool is_squarefree(const UniPoly& f);

// Yun decomposition f = content * prod A_m^m with the A_m monic, squarefree,
// pairwise coprime and nonconstant.
struct SquarefreeDecomp {
    Rat content;
    std::vector<std::pair<UniPoly, int>> factors;
};
SquarefreeDecomp squarefree_decompose(const UniPoly& f);

} // namespace jacpair
