// Factorization over Q: squarefree split, irreducibility, recombination.

#include <catch2/catch_amalgamated.hpp>

#include <ellsurf/factor.hpp>

using namespace ellsurf;

namespace {

Poly rebuild(const Factorization& f) {
    Poly p = Poly::constant(f.lead);
    for (const auto& [q, e] : f.parts) p = p * poly_pow(q, static_cast<unsigned>(e));
    return p;
}

}  // namespace

TEST_CASE("factor a squarefree product") {
    // t (t - 1) (t + 1) (t^2 + 1)
    Poly f = Poly::t() * (Poly::t() - Poly::one()) * (Poly::t() + Poly::one()) *
             Poly({Rat(1), Rat(0), Rat(1)});
    Factorization fac = factor_poly(f);
    CHECK(fac.parts.size() == 4);
    for (const auto& [q, e] : fac.parts) CHECK(e == 1);
    CHECK(rebuild(fac) == f);
}

TEST_CASE("factor with multiplicities and a rational lead") {
    // (3/2) (t - 1)^3 (t + 2)^2
    Poly f = Rat(3, 2) * poly_pow(Poly::t() - Poly::one(), 3) *
             poly_pow(Poly::t() + Poly::constant(Rat(2)), 2);
    Factorization fac = factor_poly(f);
    CHECK(fac.lead == Rat(3, 2));
    REQUIRE(fac.parts.size() == 2);
    CHECK(rebuild(fac) == f);
    long emax = 0;
    for (const auto& [q, e] : fac.parts) emax = std::max(emax, static_cast<long>(e));
    CHECK(emax == 3);
}

TEST_CASE("irreducible quartics stay whole") {
    Poly f = Poly({Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)});  // t^4 + 1
    Factorization fac = factor_poly(f);
    REQUIRE(fac.parts.size() == 1);
    CHECK(fac.parts[0].first.deg() == 4);
}

TEST_CASE("Sophie Germain quartic splits into two quadratics") {
    Poly f = Poly({Rat(4), Rat(0), Rat(0), Rat(0), Rat(1)});  // t^4 + 4
    Factorization fac = factor_poly(f);
    REQUIRE(fac.parts.size() == 2);
    for (const auto& [q, e] : fac.parts) {
        CHECK(q.deg() == 2);
        CHECK(e == 1);
    }
    CHECK(rebuild(fac) == f);
}

TEST_CASE("rational coefficients are handled exactly") {
    // (t/2 + 1/3)(t - 5) = (1/2)(t + 2/3)(t - 5)
    Poly f = (Rat(1, 2) * Poly::t() + Poly::constant(Rat(1, 3))) *
             (Poly::t() - Poly::constant(Rat(5)));
    Factorization fac = factor_poly(f);
    CHECK(fac.lead == Rat(1, 2));
    CHECK(fac.parts.size() == 2);
    CHECK(rebuild(fac) == f);
}

TEST_CASE("constants and zero") {
    Factorization fac = factor_poly(Poly::constant(Rat(7, 3)));
    CHECK(fac.lead == Rat(7, 3));
    CHECK(fac.parts.empty());
    CHECK_THROWS_AS(factor_poly(Poly::zero()), Error);
}

TEST_CASE("a degree-24 stress product") {
    Poly f = Poly::one();
    for (int a = -3; a <= 3; ++a) f = f * (Poly::t() - Poly::constant(Rat(a)));
    f = f * poly_pow(Poly({Rat(1), Rat(1), Rat(1)}), 2);              // (t^2+t+1)^2
    f = f * Poly({Rat(2), Rat(0), Rat(0), Rat(1)});                   // t^3 + 2
    f = f * Poly({Rat(-2), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});  // t^5 - 2
    f = f * Poly({Rat(1), Rat(3)});                                   // 3t + 1
    Factorization fac = factor_poly(f);
    CHECK(rebuild(fac) == f);
    CHECK(fac.parts.size() == 11);
}
