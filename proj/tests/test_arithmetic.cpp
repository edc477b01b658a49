#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nda/arithmetic.hpp"
#include "nda/errors.hpp"
#include "oracles.hpp"

#include <random>
#include <vector>

using nda::Nat;
using nda::ProjectiveArithmetic;

namespace {

ProjectiveArithmetic make(const char* text, unsigned long vbound = 1000) {
    return ProjectiveArithmetic::make(nda::parse_generator_spec(text), Nat(vbound));
}

}  // namespace

TEST_CASE("square arithmetic: the worked addition and multiplication tables") {
    auto A = make("power:2");
    CHECK(A.is_arithmetic());

    CHECK(A.add(Nat(2u), Nat(2u)) == Nat(2u));    // two plus two is only two
    CHECK(A.add(Nat(2u), Nat(3u)) == Nat(3u));
    CHECK(A.add(Nat(10u), Nat(11u)) == Nat(14u));
    CHECK(A.add(Nat(2u), Nat(11u)) == Nat(11u));
    CHECK(A.add(Nat(3u), Nat(11u)) == Nat(11u));
    CHECK(A.add(Nat(4u), Nat(11u)) == Nat(11u));
    CHECK(A.add(Nat(5u), Nat(11u)) == Nat(12u));
    CHECK(A.add(Nat(6u), Nat(11u)) == Nat(12u));
    CHECK(A.add(Nat(7u), Nat(11u)) == Nat(13u));
    CHECK(A.add(Nat(11u), Nat(11u)) == Nat(15u));

    CHECK(A.mul(Nat(2u), Nat(2u)) == Nat(4u));    // two times two is still four
    CHECK(A.mul(Nat(2u), Nat(3u)) == Nat(6u));

    // every cell agrees with the floor-sqrt oracle
    for (unsigned long a = 0; a <= 60; ++a)
        for (unsigned long b = 0; b <= 60; ++b) {
            CHECK(A.add(Nat(a), Nat(b)) == oracle::sq_add(Nat(a), Nat(b)));
            CHECK(A.mul(Nat(a), Nat(b)) == oracle::sq_mul(Nat(a), Nat(b)));
        }
}

TEST_CASE("square arithmetic: multiplication is conventional") {
    auto A = make("power:2");
    for (unsigned long n = 0; n <= 50; ++n)
        for (unsigned long m = 0; m <= 50; ++m)
            CHECK(A.mul(Nat(n), Nat(m)) == Nat(n * m));
}

TEST_CASE("tenfold arithmetic: addition conventional, multiplication tenfold") {
    auto A = make("linear:10");
    CHECK(A.is_arithmetic());
    CHECK(A.add(Nat(2u), Nat(2u)) == Nat(4u));
    CHECK(A.add(Nat(2u), Nat(3u)) == Nat(5u));
    CHECK(A.mul(Nat(2u), Nat(2u)) == Nat(40u));   // two times two is forty
    CHECK(A.mul(Nat(2u), Nat(3u)) == Nat(60u));
    for (unsigned long n = 0; n <= 100; ++n)
        for (unsigned long m = 0; m <= 100; ++m) {
            CHECK(A.add(Nat(n), Nat(m)) == Nat(n + m));
            CHECK(A.mul(Nat(n), Nat(m)) == Nat(10 * n * m));
        }
}

TEST_CASE("identity generator recovers the conventional arithmetic exhaustively") {
    auto A = make("identity");
    for (unsigned long a = 0; a <= 1000; ++a)
        for (unsigned long b = 0; b <= 1000; ++b) {
            if (A.add(Nat(a), Nat(b)) != Nat(a + b)) {
                FAIL("add mismatch at ", a, ",", b);
            }
            if (A.mul(Nat(a), Nat(b)) != Nat(a * b)) {
                FAIL("mul mismatch at ", a, ",", b);
            }
        }
    CHECK(A.sum_n({Nat(3u), Nat(4u), Nat(5u)}) == Nat(12u));
    CHECK(A.prod_n({Nat(3u), Nat(4u)}) == Nat(12u));
}

TEST_CASE("n-ary operations: worked values and divergence from the fold") {
    auto A = make("power:2");
    CHECK(A.sum_n({Nat(2u), Nat(2u), Nat(2u)}) == Nat(3u));
    CHECK(A.sum_n({Nat(2u), Nat(2u), Nat(3u)}) == Nat(4u));
    CHECK(A.sum_n({Nat(1u), Nat(1u), Nat(1u), Nat(1u), Nat(1u), Nat(3u)}) == Nat(3u));
    CHECK(A.prod_n({Nat(2u), Nat(5u), Nat(8u)}) == Nat(80u));

    // n-ary sum is one coprojection, not the fold of the binary op
    std::vector<Nat> xs = {Nat(2u), Nat(2u), Nat(2u)};
    CHECK(A.sum_n(xs) == Nat(3u));
    CHECK(oracle::fold_add(A, xs) == Nat(2u));
    CHECK(A.sum_n(xs) == oracle::sq_sum(xs));

    // square generator: n-ary product is conventional
    for (unsigned long n = 0; n <= 50; ++n)
        for (unsigned long m = 0; m <= 50; ++m)
            CHECK(A.prod_n({Nat(n), Nat(m)}) == Nat(n * m));

    CHECK_THROWS_AS(A.sum_n(std::span<const Nat>{}), std::invalid_argument);
    CHECK_THROWS_AS(A.prod_n(std::span<const Nat>{}), std::invalid_argument);
}

TEST_CASE("sum_n degenerate forms") {
    for (const char* text : {"identity", "power:2", "linear:10", "exp:2"}) {
        auto A = make(text, 64);
        for (unsigned long a = 0; a <= 40; ++a) {
            // singleton: one projection down and back
            CHECK(A.sum_n({Nat(a)}) == A.generator().coprojector(A.generator().projector(Nat(a))));
            for (unsigned long b = 0; b <= 40; ++b)
                CHECK(A.sum_n({Nat(a), Nat(b)}) == A.add(Nat(a), Nat(b)));
        }
    }
}

TEST_CASE("much-less relation") {
    auto sq = make("power:2");
    CHECK(sq.much_less(Nat(1u), Nat(5u)));        // 5 (+) 1 = floor(sqrt 26) = 5
    CHECK(!sq.much_less(Nat(11u), Nat(11u)));     // 11 (+) 11 = 15
    CHECK(sq.much_less(Nat(2u), Nat(11u)));
    CHECK(!sq.much_less(Nat(5u), Nat(11u)));

    auto id = make("identity");
    for (unsigned long a = 1; a <= 30; ++a)
        for (unsigned long b = 0; b <= 30; ++b) CHECK(!id.much_less(Nat(a), Nat(b)));
    for (unsigned long b = 0; b <= 30; ++b) CHECK(id.much_less(Nat(0u), Nat(b)));
}

TEST_CASE("much-less group relation") {
    auto sq = make("power:2");
    // sum of ones against 3: f^T(1+1+1+9) = floor(sqrt 12) = 3
    CHECK(sq.much_less_group({Nat(1u), Nat(1u), Nat(1u)}, Nat(3u)));
    CHECK(!sq.much_less_group({Nat(2u), Nat(2u)}, Nat(2u)));  // sum_n(2,2,2) = 3
    CHECK_THROWS_AS(sq.much_less_group(std::span<const Nat>{}, Nat(3u)),
                    std::invalid_argument);
}

TEST_CASE("much-much-less relation") {
    auto id = make("identity");
    for (unsigned long b = 0; b <= 30; ++b) CHECK(id.much_much_less(Nat(1u), Nat(b)));

    auto sq = make("power:2");
    CHECK(!sq.much_much_less(Nat(2u), Nat(3u)));  // 3 (*) 2 = 6

    auto de = ProjectiveArithmetic::make(nda::parse_generator_spec("dblexp"), Nat(12u));
    // f_T(3) * f_T(2) = 2^8 * 2^4 = 2^12 < 2^16 = f_T(4), so 3 (*) 2 = 3
    CHECK(de.much_much_less(Nat(2u), Nat(3u)));
    CHECK(de.mul(Nat(3u), Nat(2u)) == Nat(3u));

    CHECK(!sq.much_much_less_group({Nat(2u), Nat(5u)}, Nat(8u)));  // prod_n = 80
    CHECK(id.much_much_less_group({Nat(1u), Nat(1u)}, Nat(7u)));
    // dblexp: direct big-integer evaluation decides the group relation
    bool expected = de.prod_n({Nat(1u), Nat(2u), Nat(4u)}) == Nat(4u);
    CHECK(de.much_much_less_group({Nat(1u), Nat(2u)}, Nat(4u)) == expected);
}

TEST_CASE("successor is the conventional one") {
    auto A = make("power:2");
    CHECK(A.successor(Nat(0u)) == Nat(1u));
    CHECK(A.successor(Nat(41u)) == Nat(42u));

    // successor absorption is the coprojector bracket in disguise:
    // Sa (+) a = Sa exactly when f_T(Sa) + f_T(a) < f_T(SSa)
    const auto& g = A.generator();
    for (unsigned long a = 0; a <= 50; ++a) {
        Nat sa = A.successor(Nat(a));
        bool absorbed = A.add(sa, Nat(a)) == sa;
        bool strict_gap = g.projector(sa) + g.projector(Nat(a)) < g.projector(A.successor(sa));
        CHECK(absorbed == strict_gap);
    }
}

TEST_CASE("structural properties: commutativity, dominance, monotonicity") {
    for (const char* text : {"identity", "linear:10", "power:2", "linear:7/3"}) {
        auto A = make(text);
        for (unsigned long a = 0; a <= 35; ++a)
            for (unsigned long b = a; b <= 35; ++b) {
                Nat na(a), nb(b);
                CHECK(A.add(na, nb) == A.add(nb, na));
                CHECK(A.mul(na, nb) == A.mul(nb, na));
                if (A.generator().projector(Nat(0u)).is_zero()) {
                    CHECK(A.add(na, nb) >= nb);  // dominance over max
                }
                // monotone in each argument
                if (a > 0) {
                    CHECK(A.add(Nat(a - 1), nb) <= A.add(na, nb));
                    CHECK(A.mul(Nat(a - 1), nb) <= A.mul(na, nb));
                }
            }
    }
}

TEST_CASE("operations stay available in prearithmetic mode") {
    // cond2 fails for ceil(n/2), but the operations are still defined
    auto A = make("linear:1/2");
    CHECK(!A.is_arithmetic());
    CHECK(!A.validation().cond2_strict);
    CHECK(A.add(Nat(3u), Nat(4u)) == A.add(Nat(4u), Nat(3u)));
    // f_T(3)=2, f_T(4)=2, sum 4, f^T(4) = max{m : ceil(m/2) <= 4} = 8
    CHECK(A.add(Nat(3u), Nat(4u)) == Nat(8u));
}

TEST_CASE("element display convention") {
    CHECK(nda::format_element(Nat(2u)) == "2_u");
    CHECK(nda::format_element(Nat(2u), true) == "2_μ");
    for (unsigned long n : {0ul, 7ul, 123456789ul}) {
        CHECK(nda::parse_element(nda::format_element(Nat(n))) == Nat(n));
        CHECK(nda::parse_element(nda::format_element(Nat(n), true)) == Nat(n));
    }
    CHECK(nda::parse_element("17") == Nat(17u));
    CHECK_THROWS_AS(nda::parse_element("17_x"), nda::ParseError);
    CHECK_THROWS_AS(nda::parse_element(""), nda::ParseError);
}
