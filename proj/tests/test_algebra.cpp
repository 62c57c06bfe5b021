// Rationals, polynomials, places, valuations, and the cyclotomic rings.

#include <catch2/catch_amalgamated.hpp>

#include <ellsurf/cyclotomic.hpp>
#include <ellsurf/ratfunc.hpp>

using namespace ellsurf;

TEST_CASE("rational parsing") {
    CHECK(parse_rat("3/4") == Rat(3, 4));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK(parse_rat("6/4") == Rat(3, 2));
    CHECK_THROWS_AS(parse_rat(""), Error);
    CHECK_THROWS_AS(parse_rat("x"), Error);
}

TEST_CASE("polynomial arithmetic and printing") {
    Poly f = Poly::t() * Poly::t() - Poly::constant(Rat(1));  // t^2 - 1
    Poly g = Poly::t() + Poly::one();
    CHECK(f.deg() == 2);
    CHECK((f * g).deg() == 3);
    CHECK(poly_str(g) == "t + 1");
    CHECK(poly_str(Poly::zero()) == "0");

    auto [q, r] = poly_divmod(f, g);
    CHECK(q == Poly::t() - Poly::one());
    CHECK(r.is_zero());

    CHECK(poly_gcd(f, g) == monic(g));
    CHECK(derivative(f) == Rat(2) * Poly::t());
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(poly_divmod(Poly::t(), Poly::zero()), Error);
}

TEST_CASE("places and valuations") {
    Poly f = poly_pow(Poly::t(), 3) * (Poly::t() - Poly::one());  // t^3 (t - 1)
    CHECK(valuation(f, place_root(Rat(0))).v == 3);
    CHECK(valuation(f, place_root(Rat(1))).v == 1);
    CHECK(valuation(f, place_root(Rat(2))).v == 0);
    CHECK(valuation(f, place_infinity()).v == -4);
    CHECK(valuation(Poly::zero(), place_root(Rat(0))).infinite);

    Place p = place_finite(Poly({Rat(2), Rat(0), Rat(1)}));  // t^2 + 2
    CHECK(p.label() == "t^2 + 2");
    CHECK(p.degree() == 2);
    CHECK(place_infinity().label() == "inf");

    // non-monic input is normalized, constants are rejected
    Place q = place_finite(Poly({Rat(2), Rat(2)}));
    CHECK(q.label() == "t + 1");
    CHECK_THROWS_AS(place_finite(Poly::one()), Error);
}

TEST_CASE("finite places of a polynomial") {
    Poly f = Poly::t() * (Poly::t() - Poly::one()) * Poly({Rat(1), Rat(0), Rat(1)});
    auto places = finite_places_of(f);
    REQUIRE(places.size() == 3);
    long total_degree = 0;
    for (const auto& p : places) total_degree += p.first.degree() * p.second;
    CHECK(total_degree == 4);
}

TEST_CASE("torsion points on the cyclotomic rings") {
    Ring g = Ring::Gaussian;
    TorsionPoint a = tp(g, Rat(1, 2), Rat(1, 2));
    CHECK(tp_order(a) == 2);
    CHECK(tp_add(a, a).is_zero());
    CHECK(tp_order(tp(g, Rat(1, 3), Rat(0))) == 3);

    // multiplication by i permutes the 2-torsion
    TorsionPoint b = tp_mul_root(tp(g, Rat(1, 2), Rat(0)), 1);
    CHECK(tp_order(b) == 2);
}

TEST_CASE("fixed points of rotations") {
    // z -> i z on C/Z[i] fixes norm(1 - i) = 2 points
    auto fx4 = solve_fixed_points(Ring::Gaussian, 1, tp(Ring::Gaussian, Rat(0), Rat(0)));
    CHECK_FALSE(fx4.all_fixed);
    CHECK(fx4.points.size() == 2);

    // z -> zeta_6 z on the Eisenstein curve fixes only the origin
    auto fx6 = solve_fixed_points(Ring::Eisenstein, 1, tp(Ring::Eisenstein, Rat(0), Rat(0)));
    CHECK(fx6.points.size() == 1);

    // z -> zeta_6^2 z fixes the 3-torsion in Z[zeta_6] direction: norm(1 - zeta_3) = 3
    auto fx3 = solve_fixed_points(Ring::Eisenstein, 2, tp(Ring::Eisenstein, Rat(0), Rat(0)));
    CHECK(fx3.points.size() == 3);

    // z -> -z fixes the four 2-torsion points
    auto fx2 = solve_fixed_points(Ring::Eisenstein, 3, tp(Ring::Eisenstein, Rat(0), Rat(0)));
    CHECK(fx2.points.size() == 4);

    // a pure translation has no fixed point unless trivial
    auto tr = solve_fixed_points(Ring::Gaussian, 0, tp(Ring::Gaussian, Rat(1, 2), Rat(0)));
    CHECK_FALSE(tr.all_fixed);
    CHECK(tr.points.empty());
    auto id = solve_fixed_points(Ring::Gaussian, 0, tp(Ring::Gaussian, Rat(0), Rat(0)));
    CHECK(id.all_fixed);
}
