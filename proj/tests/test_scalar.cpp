#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "yw/scalar.hpp"

using namespace yw;

TEST_CASE("ring arithmetic") {
    Scalar a = Scalar::h(1).scaled(Rat(1, 2)) + Scalar::eps();  // h/2 + e
    Scalar sq = a * a;
    Scalar expect = Scalar::h(2).scaled(Rat(1, 4)) + Scalar::h(1) * Scalar::eps() +
                    Scalar::eps() * Scalar::eps();
    CHECK(sq == expect);
    CHECK((a - a).is_zero());
    CHECK((Scalar::h(-1) * Scalar::h(1)) == Scalar::one());
    CHECK((-a) + a == Scalar::zero());
}

TEST_CASE("printing") {
    Scalar s = Scalar::monomial(Rat(3, 2), -1, 2, 1);
    CHECK(s.str() == "3/2*h^-1*e^2*k");
    CHECK(Scalar::zero().str() == "0");
    CHECK(Scalar::one().str() == "1");
    Scalar t = Scalar::integer(2) - Scalar::k();
    CHECK(t.str() == "2 - k");
}

TEST_CASE("substituting e -> h(k + c)") {
    // e^2 with c = 2 becomes h^2 (k+2)^2 = h^2 k^2 + 4 h^2 k + 4 h^2.
    Scalar e2 = Scalar::eps() * Scalar::eps();
    Scalar got = e2.subst_eps(2);
    Scalar expect = Scalar::monomial(Rat(1), 2, 0, 2) + Scalar::monomial(Rat(4), 2, 0, 1) +
                    Scalar::monomial(Rat(4), 2, 0, 0);
    CHECK(got == expect);
    // Substitution is a ring map: (a b)|_c = a|_c b|_c on a sample.
    Scalar a = Scalar::eps() + Scalar::h(1).scaled(Rat(1, 3));
    Scalar b = Scalar::eps() * Scalar::k() - Scalar::h(-1);
    CHECK((a * b).subst_eps(-5) == a.subst_eps(-5) * b.subst_eps(-5));
    // c = 0 sends e to h k.
    CHECK(Scalar::eps().subst_eps(0) == Scalar::h(1) * Scalar::k());
}
