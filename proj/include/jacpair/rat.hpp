#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace jacpair {

using Int = mpz_class;

// Exact rational; mpq_class keeps the canonical form (positive denominator,
// reduced fraction) under arithmetic. Values built from raw num/den pairs go
// through rat() so they get canonicalized once.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

// q^e for integer e (negative allowed when q != 0).
Rat rat_pow(const Rat& q, long e);

// Exact square root when q is a square of a rational, nullopt otherwise.
std::optional<Rat> rat_sqrt(const Rat& q);

inline bool rat_is_square(const Rat& q) { return rat_sqrt(q).has_value(); }

} // namespace jacpair
