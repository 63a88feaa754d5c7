#include "widthone/eulerian.hpp"

#include "doctest.h"

#include <stdexcept>
#include <vector>

using namespace widthone;

namespace {

IntPoly poly(std::vector<long long> coeffs) {
    std::vector<BigInt> c(coeffs.begin(), coeffs.end());
    return IntPoly(std::move(c));
}

} // namespace

TEST_CASE("descent polynomial degree bound") {
    CHECK(eulerian_degree({1, 1, 1}) == 2);
    CHECK(eulerian_degree({2, 3}) == 2);
    CHECK(eulerian_degree({5}) == 0);
    CHECK(eulerian_degree({0, 0}) == 0);
    CHECK_THROWS_AS(eulerian_degree({}), std::domain_error);
}

TEST_CASE("classical Eulerian polynomial for distinct letters") {
    // permutations of three distinct letters: 1 + 4t + t^2
    CHECK(eulerian_poly_closed({1, 1, 1}) == poly({1, 4, 1}));
    CHECK(eulerian_poly_brute({1, 1, 1}) == poly({1, 4, 1}));
}

TEST_CASE("repeated letters") {
    CHECK(eulerian_poly_closed({2, 2}) == poly({1, 4, 1}));
    CHECK(eulerian_poly_closed({2, 1}) == poly({1, 2}));
    CHECK(eulerian_poly_closed({2, 1}).coeff(1) == 2);
    CHECK(eulerian_poly_closed({5}) == poly({1}));
}

TEST_CASE("zero multiplicities do not change the polynomial") {
    CHECK(eulerian_poly_closed({0}) == poly({1}));
    CHECK(eulerian_poly_closed({0, 0, 0}) == poly({1}));
    CHECK(eulerian_poly_closed({0, 2, 0, 1}) == eulerian_poly_closed({2, 1}));
}

TEST_CASE("closed form matches enumeration beyond the frozen cases") {
    for (const std::vector<int>& p :
         {std::vector<int>{3, 2}, {2, 2, 1}, {1, 1, 1, 1}, {4, 1}, {2, 2, 2}}) {
        CAPTURE(p);
        CHECK(eulerian_poly_brute(p) == eulerian_poly_closed(p));
    }
}

TEST_CASE("coefficients count all words") {
    CHECK(eulerian_poly_closed({2, 2, 1}).coeff_sum() == multinomial({2, 2, 1}));
    CHECK(eulerian_poly_closed({3, 3}).coeff_sum() == binomial(6, 3));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(eulerian_poly_closed({}), std::domain_error);
    CHECK_THROWS_AS(eulerian_poly_closed({-1}), std::domain_error);
    CHECK_THROWS_AS(eulerian_poly_brute({7, 7}), GuardError);
}

TEST_CASE("series expansion against the multiset count") {
    CHECK(macmahon_check({1, 1}, 8));
    CHECK(macmahon_check({2, 1}, 8));
    CHECK(macmahon_check({3, 2, 1}, 6));
    CHECK(macmahon_check({0}, 6));
}
