#include <doctest.h>

#include "yw/algebra.hpp"

using namespace yw;

// Bracket as a signed sum for easy comparison.
static std::map<Gen, int> br(const SlotCtx& s, const Gen& a, const Gen& b) {
    std::map<Gen, int> m;
    for (const auto& t : bracket(s, a, b)) {
        m[t.g] += t.sign;
        if (m[t.g] == 0) m.erase(t.g);
    }
    return m;
}

TEST_CASE("pyramid geometry: two equal columns") {
    Pyramid p({3, 3}, 1);
    CHECK(p.N == 6);
    CHECK(p.qMax == 3);
    CHECK(p.qMin == 3);
    CHECK(p.col(3) == 1);
    CHECK(p.col(4) == 2);
    CHECK(p.row(4) == 1);
    CHECK(p.row(6) == 3);
    CHECK(p.hat(1) == 4);
    CHECK(p.tilde(4) == 1);
    CHECK(p.hat(4) == 0);   // no third column
    CHECK(p.tilde(1) == 0);  // no zeroth column
    CHECK(p.valid_e(4, 1));
    CHECK(!p.valid_psi(1, 4));
    CHECK(p.valid_psi(4, 1));
    CHECK(!p.valid_psi(2, 1));  // same column
    CHECK(p.valid_e(2, 1));
}

TEST_CASE("pyramid geometry: unequal columns") {
    Pyramid p({4, 3}, 1);
    CHECK(p.N == 7);
    CHECK(p.qMax == 4);
    CHECK(p.qMin == 3);
    // Column 2 occupies rows (4-3, 4] = {2, 3, 4}.
    CHECK(p.col(5) == 2);
    CHECK(p.row(5) == 2);
    CHECK(p.row(7) == 4);
    CHECK(p.hat(2) == 5);
    CHECK(p.hat(1) == 0);  // row 1 missing in column 2
    CHECK(p.tilde(5) == 2);
    // alpha_s = k + N - q_s and gamma sums the later alphas.
    CHECK(p.alpha(1) == Scalar::k() + Scalar::integer(3));
    CHECK(p.alpha(2) == Scalar::k() + Scalar::integer(4));
    CHECK(p.gamma(1) == Scalar::k() + Scalar::integer(4));
    CHECK(p.gamma(2) == Scalar::zero());
}

TEST_CASE("loop slot bracket and pairing") {
    SlotCtx s = SlotCtx::loop_gl(3, Scalar::k());
    auto m = br(s, Gen::E(1, 2), Gen::E(2, 1));
    CHECK(m == std::map<Gen, int>{{Gen::E(1, 1), 1}, {Gen::E(2, 2), -1}});
    CHECK(br(s, Gen::E(1, 2), Gen::E(1, 2)).empty());
    // Antisymmetry on all pairs.
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int p = 1; p <= 3; ++p)
                for (int q = 1; q <= 3; ++q) {
                    auto ab = br(s, Gen::E(i, j), Gen::E(p, q));
                    auto ba = br(s, Gen::E(p, q), Gen::E(i, j));
                    for (auto& [g, c] : ba) c = -c;
                    CHECK(ab == ba);
                }
    CHECK(central_pair(s, Gen::E(1, 2), Gen::E(2, 1)) == Scalar::k());
    CHECK(central_pair(s, Gen::E(1, 1), Gen::E(1, 1)) == Scalar::k() + Scalar::one());
    CHECK(central_pair(s, Gen::E(1, 1), Gen::E(2, 2)) == Scalar::one());
    CHECK(central_pair(s, Gen::E(1, 2), Gen::E(1, 2)).is_zero());
}

TEST_CASE("super slot bracket") {
    SlotCtx s = SlotCtx::super_a(Pyramid({3, 3}, 1));
    // [e_{1,2}, psi_{4,1}] = -psi_{4,2} (only the -delta_{i,q} term fires).
    auto m = br(s, Gen::E(1, 2), Gen::Psi(4, 1));
    CHECK(m == std::map<Gen, int>{{Gen::Psi(4, 2), -1}});
    // [psi_{4,1}, e_{1,2}] = psi_{4,2}: odd-even brackets are antisymmetric.
    auto m2 = br(s, Gen::Psi(4, 1), Gen::E(1, 2));
    CHECK(m2 == std::map<Gen, int>{{Gen::Psi(4, 2), 1}});
    // Odd-odd brackets vanish.
    CHECK(br(s, Gen::Psi(4, 1), Gen::Psi(5, 2)).empty());
    // Results outside the lower-triangular block algebra are dropped:
    // [e_{1,4}, ...] is not even a valid input, and brackets never produce
    // strictly upper-triangular labels from valid ones.
    for (const auto& t : bracket(s, Gen::E(4, 1), Gen::E(2, 1))) CHECK(s.valid(t.g));
    // Pairing ignores odd generators.
    CHECK(central_pair(s, Gen::Psi(4, 1), Gen::Psi(1, 4)).is_zero());
}

TEST_CASE("loop slot Jacobi identity") {
    SlotCtx s = SlotCtx::loop_gl(3, Scalar::k());
    auto gens = std::vector<Gen>{Gen::E(1, 2), Gen::E(2, 3), Gen::E(3, 1), Gen::E(2, 2)};
    for (const auto& a : gens)
        for (const auto& b : gens)
            for (const auto& c : gens) {
                std::map<Gen, int> acc;
                auto add = [&](const Gen& x, const Gen& y, const Gen& z, int sg) {
                    for (const auto& t1 : bracket(s, y, z))
                        for (const auto& t2 : bracket(s, x, t1.g)) {
                            acc[t2.g] += sg * t1.sign * t2.sign;
                            if (acc[t2.g] == 0) acc.erase(t2.g);
                        }
                };
                add(a, b, c, 1);
                add(b, c, a, 1);
                add(c, a, b, 1);
                CHECK(acc.empty());
            }
}
