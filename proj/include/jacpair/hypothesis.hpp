#pragma once

#include "jacpair/newton.hpp"
#include "jacpair/series.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace jacpair {

struct DirectionCheck {
    Direction w{1, 1};
    bool root_exists = false;   // a divides r
    bool squarefree_ok = false; // a-th root has squarefree non-monomial part
};

struct PairHypotheses {
    long a = 0;
    long b = 0;
    bool coprime_ok = false;
    bool min_ok = false;                   // min(a, b) >= 2
    std::optional<Rat> bracket_value;      // nullopt when [F,G] is not constant
    bool similarity_ok = false;            // (b/a) N(F) == N(G)
    bool corner_points_ok = false;         // {(1,0),(0,1),(0,0)} in both polygons
    bool vertex_divisibility_ok = false;   // vertices of N(F) in (aZ)^2
    std::vector<DirectionCheck> directions;
    bool generic_boundaries_ok = false;

    bool conditions12_ok() const {
        return bracket_value.has_value() && similarity_ok && corner_points_ok;
    }
};

// Conditions (1)-(3): constant bracket, similar polygons with the corner
// points, min(a,b) >= 2 with a, b coprime. Report-style, never throws on
// condition failures.
PairHypotheses check_conjectureA_preconditions(const LaurentPoly& f, const LaurentPoly& g,
                                               long a, long b);

// Conditions (1)-(2) plus the boundary-genericity condition: along every
// outward edge normal of N(F) with a non-monomial leading form, the a-th
// root of F_+ exists and has a squarefree non-monomial part.
PairHypotheses generic_boundaries(const LaurentPoly& f, const LaurentPoly& g, long a, long b);

// Images of (x, y) under a seeded random composition of triangular
// automorphisms and unimodular linear maps; the bracket is exactly +/-1.
std::pair<LaurentPoly, LaurentPoly> gen_jacobian_pair(std::uint64_t seed, int steps,
                                                      long degree_bound);

// Ground-truth pair F = P^2 + u0, G = P * F^k with N(P) the given shape;
// coefficients resampled until the generic-boundary check passes.
struct PowerPair {
    LaurentPoly F;
    LaurentPoly G;
    LaurentPoly P;
    Rat u0;
    long k = 1;
};
PowerPair gen_power_pair(std::uint64_t seed, const std::vector<Point>& shape, long k);
PowerPair gen_power_pair(std::uint64_t seed, const std::vector<Point>& shape, long k,
                         const Rat& u0);

} // namespace jacpair
