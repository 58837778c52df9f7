#pragma once

#include "jacpair/parse.hpp"
#include "jacpair/poly.hpp"

#include <random>
#include <vector>

namespace jacpair::testutil {

inline LaurentPoly P(const std::string& text) { return parse_poly(text); }
inline LaurentPoly PL(const std::string& text) { return parse_poly(text, true); }

// Independent convolution oracle for multiplication: plain nested loops over
// term vectors, no shared code with operator*.
inline LaurentPoly naive_mul(const LaurentPoly& a, const LaurentPoly& b) {
    std::vector<std::pair<Exp, Rat>> ta(a.terms().begin(), a.terms().end());
    std::vector<std::pair<Exp, Rat>> tb(b.terms().begin(), b.terms().end());
    LaurentPoly out;
    for (const auto& [ea, ca] : ta)
        for (const auto& [eb, cb] : tb) out.add_term(Exp{ea.i + eb.i, ea.j + eb.j}, ca * cb);
    return out;
}

inline long rnd_range(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Random small Laurent/plain polynomial for property tests.
inline LaurentPoly random_poly(std::mt19937_64& rng, int max_terms, long max_exp,
                               bool laurent = false) {
    LaurentPoly out;
    int terms = static_cast<int>(rnd_range(rng, 1, max_terms));
    for (int t = 0; t < terms; ++t) {
        long i = rnd_range(rng, laurent ? -max_exp : 0, max_exp);
        long j = rnd_range(rng, laurent ? -max_exp : 0, max_exp);
        long c = rnd_range(rng, -4, 4);
        if (c != 0) out.add_term(Exp{i, j}, Rat(c));
    }
    if (out.is_zero()) out = LaurentPoly::constant(1);
    return out;
}

} // namespace jacpair::testutil
