#pragma once

#include "jacpair/series.hpp"

#include <vector>

namespace jacpair {

// Unique (c, s) with g = c * H^s for the root data of f; c is reported
// rho-absorbed so it stays rational. Requires [g, f] = 0.
struct Proportionality {
    Rat c;
    long s = 0;
};
Proportionality proportional_to_power(const HFrac& g, const LaurentPoly& f, Direction w);
Proportionality proportional_to_power(const LaurentPoly& g, const LaurentPoly& f, Direction w);

// The solved normalized coefficients c'_0..c'_{mu_max}. The unnormalized
// constants are c_gamma = c'_gamma * rho^{-(e-gamma)/d}.
struct MagnusCoeffs {
    Direction w{1, 1};
    long d = 0;
    long e = 0;
    RootData root;
    long mu_max = -1;
    std::vector<Rat> coeffs;
    std::vector<bool> forced_zero; // r(e-gamma)/d not an integer
};

MagnusCoeffs magnus_solve(const LaurentPoly& f, const LaurentPoly& g, Direction w, long mu_max);
// Default range: mu_max = d + e - u - v - 1.
MagnusCoeffs magnus_solve(const LaurentPoly& f, const LaurentPoly& g, Direction w);

struct MagnusLevel {
    long mu = 0;
    bool pass = false;
};

struct MagnusReport {
    MagnusCoeffs coeffs;
    std::vector<MagnusLevel> levels;
    bool powers_ok = true;    // every used fractional power passed the substitution check
    bool vanishing_ok = true; // forced-zero indices all have c' = 0
    bool all_pass = false;
};

// Solves over the full range, then re-derives the right side of the degree
// relation independently of the solving recursion and compares each level
// with the matching component of g by exact HFrac equality.
MagnusReport verify_magnus(const LaurentPoly& f, const LaurentPoly& g, Direction w);

} // namespace jacpair
