#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "qcw/eta.hpp"
#include "qcw/expr.hpp"
#include "qcw/oracle.hpp"

using namespace qcw;
using qcw::testing::naive_pochhammer;

TEST_CASE("pochhammer(1, 13) coefficients") {
    // pentagonal number theorem: 1 - q - q^2 + q^5 + q^7 - q^12 - ...
    const std::vector<Int> expect = {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1};
    CHECK(pochhammer(1, 13).coeffs() == expect);
    CHECK(pochhammer(1, 13) == Series(naive_pochhammer(1, 13)));
}

TEST_CASE("pochhammer rejects r = 0") {
    CHECK_THROWS_AS(pochhammer(0, 10), std::invalid_argument);
}

TEST_CASE("pochhammer(2, N) = substitute_power(pochhammer(1, N), 2)") {
    const int N = 80;
    CHECK(pochhammer(2, N) == substitute_power(pochhammer(1, N), 2));
}

TEST_CASE("pochhammer inverse contract") {
    const int N = 60;
    CHECK(mul(pochhammer(1, N), invert(pochhammer(1, N))) == Series::one(N));
}

TEST_CASE("pochhammer matches naive product for several r") {
    for (int r : {1, 2, 3, 6, 9, 12, 18, 36}) {
        CHECK(pochhammer(r, 120) == Series(naive_pochhammer(r, 120)));
    }
}

TEST_CASE("pentagonal support bound") {
    for (int r : {1, 2, 3, 5}) {
        const int N = 400;
        const Series p = pochhammer(r, N);
        const auto sup = p.support();
        const int bound =
            2 * static_cast<int>(std::ceil(std::sqrt(2.0 * N / (3.0 * r)))) + 1;
        CHECK(static_cast<int>(sup.size()) <= bound);
        for (int i : sup) CHECK((p[i] == 1 || p[i] == -1));
    }
}

TEST_CASE("eta_quotient 1/f1 is the partition series") {
    const int N = 60;
    const EtaQuotient t{1, 0, {{1, -1}}};
    CHECK(eta_quotient(t, N) == counts_series(builtin_spec("partitions"), N));
}

TEST_CASE("eta_quotient pond generating function matches oracle") {
    const int N = 60;
    const EtaQuotient pond{1, 0, {{4, 1}, {6, 2}, {2, -2}, {3, -1}, {12, -1}}};
    CHECK(eta_quotient(pond, N) == counts_series(builtin_spec("pond"), N));
}

TEST_CASE("eta_quotient pend generating function matches oracle") {
    const int N = 60;
    const EtaQuotient pend{1, 0, {{2, 1}, {12, 1}, {1, -1}, {4, -1}, {6, -1}}};
    CHECK(eta_quotient(pend, N) == counts_series(builtin_spec("pend"), N));
}

TEST_CASE("eta_quotient factor merging") {
    const int N = 50;
    const Series twice = mul(eta_quotient({1, 0, {{2, 1}}}, N),
                             eta_quotient({1, 0, {{2, 1}}}, N));
    CHECK(twice == eta_quotient({1, 0, {{2, 2}}}, N));
}

TEST_CASE("eta_quotient residue-ring homomorphism") {
    const int N = 120;
    const EtaQuotient t{2, 1, {{4, 1}, {12, 3}, {1, -1}, {2, -4}}};
    CHECK(eta_quotient(t, N, Int(3)) == reduce_mod(eta_quotient(t, N), 3));
    CHECK(eta_quotient(t, N, Int(7)) == reduce_mod(eta_quotient(t, N), 7));
}

TEST_CASE("eta_quotient rejects zero exponent and bad subscript") {
    CHECK_THROWS_AS(eta_quotient({1, 0, {{2, 0}}}, 10), std::invalid_argument);
    CHECK_THROWS_AS(eta_quotient({1, 0, {{0, 1}}}, 10), std::invalid_argument);
    CHECK_THROWS_AS(eta_quotient({1, -1, {}}, 10), std::domain_error);
}

TEST_CASE("overpartition counts from f2/f1^2") {
    const int N = 40;
    const EtaQuotient t{1, 0, {{2, 1}, {1, -2}}};
    CHECK(eta_quotient(t, N) == counts_series(builtin_spec("overpartitions"), N));
}

TEST_CASE("ped counts from f4/f1") {
    const int N = 40;
    const EtaQuotient t{1, 0, {{4, 1}, {1, -1}}};
    CHECK(eta_quotient(t, N) == counts_series(builtin_spec("ped"), N));
}

TEST_CASE("pochhammer_general specializations") {
    const int N = 200;
    CHECK(pochhammer_general(-1, 3, 3, N) == pochhammer(3, N));
    // (-q^3; q^6) = f6^2 / (f3 f12)
    CHECK(pochhammer_general(1, 3, 6, N) ==
          eta_quotient({1, 0, {{6, 2}, {3, -1}, {12, -1}}}, N));
    // (q^2; q^4)(-q^2; q^4) = (q^4; q^8)
    CHECK(mul(pochhammer_general(-1, 2, 4, N), pochhammer_general(1, 2, 4, N)) ==
          pochhammer_general(-1, 4, 8, N));
}

TEST_CASE("pond generating function derivation from general products") {
    // 1/f2 * (-q^3; q^6) / (q^2; q^4)
    const int N = 150;
    const Series via_products = divide(
        mul(invert(pochhammer(2, N)), pochhammer_general(1, 3, 6, N)),
        pochhammer_general(-1, 2, 4, N));
    CHECK(via_products == counts_series(builtin_spec("pond"), N));
}
