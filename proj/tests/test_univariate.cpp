#include "jacpair/univariate.hpp"

#include <doctest.h>

using namespace jacpair;

namespace {

UniPoly U(std::vector<long> cs) {
    std::vector<Rat> out;
    out.reserve(cs.size());
    for (long c : cs) out.emplace_back(c);
    return UniPoly(std::move(out));
}

} // namespace

TEST_CASE("division and gcd") {
    auto [q, r] = divmod(U({-1, 0, 1}), U({1, 1})); // (z^2-1)/(z+1)
    CHECK(q == U({-1, 1}));
    CHECK(r.is_zero());

    CHECK(gcd(U({-1, 0, 1}), U({1, 1})) == U({1, 1}));
    CHECK(gcd(U({0, 1}), U({1})).is_constant());
    CHECK(gcd(UniPoly{}, UniPoly{}).is_zero());
}

TEST_CASE("squarefree detection") {
    CHECK(is_squarefree(U({1, 1})));
    CHECK(is_squarefree(U({1, 0, 1})));
    CHECK_FALSE(is_squarefree(U({1, 2, 1}))); // (z+1)^2
}

TEST_CASE("Yun decomposition") {
    // z^2 (z+1)^3
    UniPoly f = U({0, 0, 1}) * U({1, 1}).pow(3);
    auto dec = squarefree_decompose(f);
    REQUIRE(dec.factors.size() == 2);
    CHECK(dec.content == 1);
    CHECK(dec.factors[0].first == U({0, 1}));
    CHECK(dec.factors[0].second == 2);
    CHECK(dec.factors[1].first == U({1, 1}));
    CHECK(dec.factors[1].second == 3);

    auto dec2 = squarefree_decompose(Rat(6) * U({1, 2, 1}));
    CHECK(dec2.content == 6);
    REQUIRE(dec2.factors.size() == 1);
    CHECK(dec2.factors[0].first == U({1, 1}));
    CHECK(dec2.factors[0].second == 2);
}
