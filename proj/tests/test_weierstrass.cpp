// Weierstrass invariants, minimalization, and Kodaira classification.

#include <catch2/catch_amalgamated.hpp>

#include <ellsurf/kodaira.hpp>

using namespace ellsurf;

TEST_CASE("c4^3 - c6^2 = 1728 Delta") {
    WeierstrassModel w;
    w.a1 = Poly::t();
    w.a2 = Poly::one();
    w.a3 = Poly({Rat(1), Rat(2)});
    w.a4 = Poly({Rat(0), Rat(0), Rat(3)});
    w.a6 = Poly({Rat(1), Rat(0), Rat(0), Rat(-1)});
    ReducedInvariants inv = reduce_invariants(w);
    Poly lhs = inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6;
    CHECK(lhs == Rat(1728) * inv.delta);
}

TEST_CASE("a singular generic fiber is rejected") {
    WeierstrassModel w;  // y^2 = x^3
    CHECK_THROWS_AS(classify_all(w), Error);
    try {
        classify_all(w);
    } catch (const Error& e) {
        CHECK(e.code == "singular-generic-fiber");
    }
}

TEST_CASE("the III / III* pair") {
    WeierstrassModel w;
    w.a4 = Poly::t();  // y^2 = x^3 + t x
    SurfaceData s = classify_all(w);
    REQUIRE(s.fibers.size() == 2);
    CHECK(ktype_str(s.fibers[0].type) == "III");
    CHECK(s.fibers[0].place.label() == "t");
    CHECK(ktype_str(s.fibers[1].type) == "III*");
    CHECK(s.fibers[1].place.at_infinity);
    CHECK(s.e == 12);
    CHECK(s.chi == 1);
    CHECK(s.p_g == 0);
    CHECK(s.b2 == 10);
    CHECK(s.triv_rank == 2 + 1 + 7);  // U part + A1 + E7
}

TEST_CASE("the II / II* pair") {
    WeierstrassModel w;
    w.a6 = Poly::t();  // y^2 = x^3 + t
    SurfaceData s = classify_all(w);
    REQUIRE(s.fibers.size() == 2);
    CHECK(ktype_str(s.fibers[0].type) == "II");
    CHECK(ktype_str(s.fibers[1].type) == "II*");
    CHECK(s.fibers[1].dynkin == "E8");
    CHECK(s.e == 12);
}

TEST_CASE("semistable fibers over places of higher degree") {
    WeierstrassModel w;  // y^2 = x(x^2 + 2t^2 x + 1)
    w.a2 = Poly({Rat(0), Rat(0), Rat(2)});
    w.a4 = Poly::one();
    SurfaceData s = classify_all(w);
    long e_sum = 0;
    int deg2 = 0;
    for (const auto& f : s.fibers) {
        e_sum += f.degree * f.euler;
        if (f.degree == 2) ++deg2;
        CHECK_FALSE(f.additive);
    }
    CHECK(e_sum == 12);
    CHECK(deg2 == 1);  // the conjugate pair t^2 + 1
}

TEST_CASE("Kodaira type tables") {
    CHECK(euler_number(KodairaType{KTag::I, 5}) == 5);
    CHECK(euler_number(KodairaType{KTag::Istar, 0}) == 6);
    CHECK(euler_number(KodairaType{KTag::IIstar, 0}) == 10);
    CHECK(component_count(KodairaType{KTag::I, 9}) == 9);
    CHECK(component_count(KodairaType{KTag::IVstar, 0}) == 7);
    CHECK(dynkin_label(KodairaType{KTag::IIIstar, 0}) == "E7");
    CHECK(component_group(KodairaType{KTag::I, 8}) == std::make_pair(8L, 1L));
    CHECK(component_group(KodairaType{KTag::Istar, 2}) == std::make_pair(2L, 2L));
    CHECK(component_group(KodairaType{KTag::Istar, 1}) == std::make_pair(4L, 1L));
    CHECK(ktype_additive(KodairaType{KTag::II, 0}));
    CHECK_FALSE(ktype_additive(KodairaType{KTag::I, 3}));
}

TEST_CASE("kodaira_from_valuations minimalizes non-minimal data") {
    // v(c4) = 4, v(c6) = 6, v(Delta) = 13: one unimodular rescaling off I1
    KodairaType t = kodaira_from_valuations(4, 6, 13);
    CHECK(ktype_str(t) == "I1");
    CHECK(ktype_str(kodaira_from_valuations(2, 3, 7)) == "I1*");
}

TEST_CASE("I0* from a quadratic twist of a smooth fiber") {
    CHECK(ktype_str(kodaira_from_valuations(2, 3, 6)) == "I0*");
    CHECK(ktype_str(kodaira_from_valuations(3, 4, 8)) == "IV*");
    CHECK(ktype_str(kodaira_from_valuations(1, 2, 3)) == "III");
}

TEST_CASE("an inconsistent ledger is rejected") {
    std::vector<FiberRecord> fibers;
    FiberRecord f;
    f.place = place_root(Rat(0));
    f.type = KodairaType{KTag::I, 5};
    f.degree = 1;
    f.euler = 5;
    f.components = 5;
    f.additive = false;
    f.comp_group = {5, 1};
    fibers.push_back(f);  // Euler sum 5, not divisible by 12
    CHECK_THROWS_AS(surface_from_fibers(fibers, 0), Error);
}
