#pragma once

#include "jacpair/decomp.hpp"
#include "jacpair/magnus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jacpair {

// Result of completing the square at a vertex C: the unique-up-to-sign P
// with supp(F - P^2) disjoint from N'' = (1/2)N(F) + (1/2)OC, sign fixed by
// a positive coefficient at C/2.
struct SquareCompletion {
    LaurentPoly P;
    LaurentPoly R; // F - P^2
    Point C;
    std::vector<Point> solve_order; // z_1 .. z_n, the lattice points of N'
};

SquareCompletion complete_square(const LaurentPoly& f, Point c);

// Quotient R_{d-h} / P_m as a Laurent polynomial, with the hypothesis chain
// validated (h range, vanishing of higher components, F_d = P_m^2 and the
// level bound h(k+1) <= d + e - u - v - 1 with e = (2k+1)m).
LaurentPoly membership_step(const LaurentPoly& f, const LaurentPoly& p, const LaurentPoly& r,
                            Direction w, long h, long k);

enum class LenVerdict { zero, inconclusive };

// Zero when the component is zero (in particular whenever the length bound
// len(R_{d-h}) < len(P_m) applies under membership); inconclusive when the
// bound does not apply.
LenVerdict len_vanish_step(const LaurentPoly& r_dh, const LaurentPoly& p_m, Direction w);

struct SweepEntry {
    std::string label;
    bool ok = false;
};

struct PipelineVerdict {
    enum class Conclusion { r_constant, violation, declined };

    bool generic_ok = false;
    long a = 2;
    long b = 0;
    std::string detail;
    LaurentPoly P;
    LaurentPoly R;
    Rat u0;
    std::vector<SweepEntry> swept;
    Conclusion conclusion = Conclusion::declined;
    int violation_index = -1;
    std::optional<Point> offending;
    bool bracket_zero = false;
    bool chains_swapped = false;
};

// Rectangle-shaped N(F): complete the square at (2m', 2m) and verify every
// graded component of R vanishes in both axis gradings.
PipelineVerdict rectangle_pipeline(const LaurentPoly& f, const LaurentPoly& g);

// Arbitrary N(F): complete the square at a northeastern vertex and sweep
// the enumerated broken lines, checking supp(R) misses each one.
PipelineVerdict theorem_pipeline(const LaurentPoly& f, const LaurentPoly& g);

} // namespace jacpair
