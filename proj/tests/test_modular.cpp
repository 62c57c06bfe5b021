// Multiplicative functions, genus formulas, certified pi^2 comparisons.

#include <catch2/catch_amalgamated.hpp>

#include <ellsurf/modular.hpp>

using namespace ellsurf;

TEST_CASE("s, u, t on prime powers") {
    CHECK(s_func(1) == Rat(1));
    CHECK(s_func(2) == Rat(3, 4));
    CHECK(s_func(8) == Rat(3, 4));
    CHECK(u_func(2) == Rat(2));
    CHECK(u_func(4) == Rat(5));
    CHECK(t_func(2) == Rat(2, 3));
    CHECK(t_func(4) == Rat(5, 12));
    CHECK(t_func(9) == Rat(2, 9));
    CHECK_THROWS_AS(t_func(1), Error);
    CHECK_THROWS_AS(s_func(0), Error);
}

TEST_CASE("genus of the principal congruence curve") {
    CHECK(genus_g(3) == 0);
    CHECK(genus_g(5) == 0);
    CHECK(genus_g(7) == 3);
    CHECK(genus_g(11) == 26);
    CHECK_THROWS_AS(genus_g(2), Error);
}

TEST_CASE("genus formula domain") {
    CHECK(genus_g1(5) == 0);
    CHECK(genus_g1(10) == 0);
    CHECK(genus_g1(11) == 1);
    CHECK(genus_g1(23) == 12);
    CHECK_THROWS_AS(genus_g1(4), Error);
}

TEST_CASE("certified pi^2 comparisons stay on the safe side") {
    // pi^2 = 9.8696...: both sides comfortably away
    CHECK(less_than_pi_sq_multiple(Rat(9), Rat(1)) == Verdict::True);
    CHECK(less_than_pi_sq_multiple(Rat(10), Rat(1)) == Verdict::False);
    // closer calls still resolved by the second-level interval
    CHECK(less_than_pi_sq_multiple(Rat(98696, 10000), Rat(1)) == Verdict::True);
    CHECK(less_than_pi_sq_multiple(Rat(98697, 10000), Rat(1)) == Verdict::False);
    // 12 pi^2 = 118.43...
    CHECK(less_than_pi_sq_multiple(Rat(118), Rat(12)) == Verdict::True);
    CHECK(less_than_pi_sq_multiple(Rat(119), Rat(12)) == Verdict::False);
}

TEST_CASE("torsion bounds by base genus") {
    CHECK(mw_torsion_bound(0, false).bound >= 25);
    CHECK(*mw_torsion_bound(0, false).sharp == 25);
    CHECK(*mw_torsion_bound(4, false).sharp == 50);
    CHECK(mw_torsion_bound(7, true).bound == 4);
    CHECK_FALSE(mw_torsion_bound(5, false).sharp.has_value());
    CHECK_THROWS_AS(mw_torsion_bound(-1, false), Error);
}

TEST_CASE("prime conditions for a single Z/p factor") {
    // p = 7: p_g >= 48/12 - 3 = 1, chi divisible by 2
    PrimeConditionReport ok = prime_conditions(7, 2, 1, false);
    CHECK(ok.pass);
    PrimeConditionReport bad_chi = prime_conditions(7, 3, 1, false);
    CHECK_FALSE(bad_chi.pass);
    PrimeConditionReport bad_pg = prime_conditions(7, 2, 0, false);
    CHECK_FALSE(bad_pg.pass);
    // small primes impose nothing
    CHECK(prime_conditions(5, 1, 0, false).pass);
    CHECK(prime_conditions(2, 1, 0, false).pass);
}

TEST_CASE("prime conditions for a (Z/p)^2 factor") {
    // p = 3: p_g >= 0 and chi divisible by 1
    CHECK(prime_conditions(3, 1, 0, true).pass);
    // p = 5: p_g >= 4, chi divisible by 5
    CHECK_FALSE(prime_conditions(5, 5, 0, true).pass);
    CHECK(prime_conditions(5, 5, 4, true).pass);
    CHECK_THROWS_AS(prime_conditions(2, 1, 0, true), Error);
    CHECK_THROWS_AS(prime_conditions(6, 1, 0, false), Error);
}
