/**
 * @file test_jacobian.cpp
 * @brief Divisor class group arithmetic on smooth plane curves.
 */
#include "doctest.h"
#include "helpers.hpp"
#include "rr/jacobian.hpp"

using namespace rr;
using testutil::P;

namespace {

// On small fields a class may have no affine effective representative of
// degree g (its reduction meets the line at infinity); such draws raise
// AssumptionViolatedError and are redrawn, which is part of the contract.
template <typename Fn>
int with_redraws(Fn&& fn, int wanted, int budget) {
    int done = 0;
    for (int i = 0; i < budget && done < wanted; ++i) {
        try {
            fn();
            ++done;
        } catch (const AssumptionViolatedError&) {
        } catch (const RetryExhaustedError&) {
        }
    }
    return done;
}

}  // namespace

TEST_CASE("make_jacobian validates its inputs") {
    Rng rng(61);
    RandomConfig cfg;
    // genus 0 has a trivial group
    Curve conic = testutil::conic(7);
    auto Pc = point_divisor(conic, 2, 2, 2);
    REQUIRE(Pc.has_value());
    CHECK_THROWS_AS(make_jacobian(conic, *Pc), ValidationError);
    // nodal curves are not supported by the group layer
    Curve quartic = testutil::node_quartic(7, rng, cfg);
    auto Pq = point_divisor(quartic, 6, 6, 1);
    REQUIRE(Pq.has_value());
    CHECK_THROWS_AS(make_jacobian(quartic, *Pq), ValidationError);
    // base point must have degree one
    Curve cubic = testutil::fermat_cubic(7);
    auto O = point_divisor(cubic, 0, 3, 1);
    REQUIRE(O.has_value());
    SmoothDivisor two = n_fold_point(cubic, *O, 2);
    CHECK_THROWS_AS(make_jacobian(cubic, two), ValidationError);
    CHECK_NOTHROW(make_jacobian(cubic, *O));
}

TEST_CASE("neutral element behaves as identity") {
    for (std::uint64_t p : {7ull, 65521ull}) {
        Curve C = testutil::fermat_cubic(p);
        auto O = point_divisor(C, 0, p == 7 ? 3ull : 65520ull, 1);
        REQUIRE(O.has_value());
        JacobianContext J = make_jacobian(C, *O);
        Rng rng(62);
        RandomConfig cfg;
        JacobianElement e = jac_neutral(J);
        // [kO - kO] = 0 for every k
        for (int k = 1; k <= 3; ++k) {
            JacobianElement z = jac_reduce(J, n_fold_point(C, *O, k), rng, cfg);
            CHECK(jac_equals(J, z, e, rng, cfg));
        }
        int done = with_redraws(
            [&] {
                JacobianElement A = jac_random(J, rng, cfg);
                JacobianElement Ae = jac_add(J, A, e, rng, cfg);
                if (!jac_equals(J, Ae, A, rng, cfg))
                    throw Error("identity law failed");
            },
            3, 20);
        CHECK(done == 3);
    }
}

TEST_CASE("group axioms on the Fermat cubic over F_7") {
    Curve C = testutil::fermat_cubic(7);
    auto O = point_divisor(C, 0, 3, 1);
    REQUIRE(O.has_value());
    JacobianContext J = make_jacobian(C, *O);
    Rng rng(63);
    RandomConfig cfg;
    JacobianElement e = jac_neutral(J);

    SUBCASE("commutativity") {
        int done = with_redraws(
            [&] {
                JacobianElement A = jac_random(J, rng, cfg);
                JacobianElement B = jac_random(J, rng, cfg);
                JacobianElement AB = jac_add(J, A, B, rng, cfg);
                JacobianElement BA = jac_add(J, B, A, rng, cfg);
                if (!jac_equals(J, AB, BA, rng, cfg))
                    throw Error("commutativity failed");
            },
            5, 40);
        CHECK(done == 5);
    }
    SUBCASE("associativity") {
        int done = with_redraws(
            [&] {
                JacobianElement A = jac_random(J, rng, cfg);
                JacobianElement B = jac_random(J, rng, cfg);
                JacobianElement Cc = jac_random(J, rng, cfg);
                JacobianElement l =
                    jac_add(J, jac_add(J, A, B, rng, cfg), Cc, rng, cfg);
                JacobianElement r =
                    jac_add(J, A, jac_add(J, B, Cc, rng, cfg), rng, cfg);
                if (!jac_equals(J, l, r, rng, cfg))
                    throw Error("associativity failed");
            },
            3, 40);
        CHECK(done == 3);
    }
    SUBCASE("inverses") {
        int done = with_redraws(
            [&] {
                JacobianElement A = jac_random(J, rng, cfg);
                JacobianElement nA = jac_neg(J, A, rng, cfg);
                JacobianElement z = jac_add(J, A, nA, rng, cfg);
                if (!jac_equals(J, z, e, rng, cfg))
                    throw Error("inverse law failed");
            },
            3, 40);
        CHECK(done == 3);
    }
}

TEST_CASE("the F_7 Fermat cubic group has exponent three") {
    // The curve has nine rational points, and the nine classes [P - O] form
    // Z/3 x Z/3, so 3A = 0 for every element A.
    Curve C = testutil::fermat_cubic(7);
    auto O = point_divisor(C, 0, 3, 1);
    REQUIRE(O.has_value());
    JacobianContext J = make_jacobian(C, *O);
    Rng rng(64);
    RandomConfig cfg;
    JacobianElement e = jac_neutral(J);
    const std::uint64_t pts[6][2] = {{0, 3}, {0, 5}, {0, 6},
                                     {3, 0}, {5, 0}, {6, 0}};
    int verified = 0;
    for (const auto& pt : pts) {
        std::optional<SmoothDivisor> Pd;
        for (std::uint64_t lam = 1; lam < 7 && !Pd; ++lam)
            Pd = point_divisor(C, pt[0], pt[1], lam);
        REQUIRE(Pd.has_value());
        try {
            JacobianElement A = jac_make(J, *Pd);
            JacobianElement A3 =
                jac_add(J, jac_add(J, A, A, rng, cfg), A, rng, cfg);
            CHECK(jac_equals(J, A3, e, rng, cfg));
            ++verified;
        } catch (const AssumptionViolatedError&) {
            // some intermediate class has its representative at infinity
        }
    }
    CHECK(verified >= 2);
}

TEST_CASE("group axioms on the Fermat cubic over F_65521") {
    Curve C = testutil::fermat_cubic(65521);
    auto O = point_divisor(C, 0, 65520, 1);
    REQUIRE(O.has_value());
    JacobianContext J = make_jacobian(C, *O);
    Rng rng(65);
    RandomConfig cfg;
    JacobianElement e = jac_neutral(J);
    for (int t = 0; t < 3; ++t) {
        JacobianElement A = jac_random(J, rng, cfg);
        JacobianElement B = jac_random(J, rng, cfg);
        JacobianElement AB = jac_add(J, A, B, rng, cfg);
        JacobianElement BA = jac_add(J, B, A, rng, cfg);
        CHECK(jac_equals(J, AB, BA, rng, cfg));
        JacobianElement nA = jac_neg(J, A, rng, cfg);
        CHECK(jac_equals(J, jac_add(J, A, nA, rng, cfg), e, rng, cfg));
        CHECK(!jac_equals(J, A, B, rng, cfg));  // random classes differ a.s.
    }
}

TEST_CASE("jac_reduce maps any effective divisor to its class") {
    Curve C = testutil::fermat_cubic(65521);
    auto O = point_divisor(C, 0, 65520, 1);
    REQUIRE(O.has_value());
    JacobianContext J = make_jacobian(C, *O);
    Rng rng(66);
    RandomConfig cfg;
    SmoothDivisor D = random_smooth_divisor(C, 2, rng, cfg);
    REQUIRE(divisor_degree(D) == 3);
    JacobianElement A = jac_reduce(J, D, rng, cfg);
    CHECK(divisor_degree(A.D) == 1);  // genus-1 representatives are points
    // reducing the already-reduced representative is a fixed point up to
    // class equality
    JacobianElement A2 = jac_reduce(J, A.D, rng, cfg);
    CHECK(jac_equals(J, A, A2, rng, cfg));
    // jac_reduce of k*O is neutral for any k
    CHECK(jac_equals(J, jac_reduce(J, n_fold_point(C, *O, 4), rng, cfg),
                     jac_neutral(J), rng, cfg));
}

TEST_CASE("higher-genus curves reduce to genus-degree representatives") {
    // quintic x^5 + y^5 + 1 has genus 6; exercise a g > 1 ladder where the
    // representative degree equals the genus
    Curve C = testutil::fermat_quintic(65521);
    // x = 0: y^5 = -1 has the root y = -1
    auto O = point_divisor(C, 0, 65520, 1);
    REQUIRE(O.has_value());
    JacobianContext J = make_jacobian(C, *O);
    Rng rng(67);
    RandomConfig cfg;
    JacobianElement A = jac_random(J, rng, cfg);
    CHECK(divisor_degree(A.D) == 6);
    JacobianElement nA = jac_neg(J, A, rng, cfg);
    CHECK(jac_equals(J, jac_add(J, A, nA, rng, cfg), jac_neutral(J), rng, cfg));
}
