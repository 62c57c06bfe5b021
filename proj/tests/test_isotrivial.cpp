#include <catch2/catch_amalgamated.hpp>

#include <ellsurf/ellsurf.hpp>

#include <string>
#include <vector>

using namespace ellsurf;
using verify_detail::iso_r3;
using verify_detail::iso_r4;
using verify_detail::iso_r6;

namespace {

std::string error_code(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code;
    }
    return "";
}

IsotrivialData base_r4() {
    IsotrivialData d;
    d.r = 4;
    Ring ring = ring_for_r(4);
    d.T_gens = {tp(ring, Rat(1, 2), Rat(1, 2))};
    return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

TEST_CASE("isotrivial validation rejects malformed actions") {
    // unsupported rotation order
    IsotrivialData bad_r;
    bad_r.r = 5;
    bad_r.monodromies = {{1, tp(Ring::Gaussian, Rat(0), Rat(0))}};
    CHECK(error_code([&] { iso_validate(bad_r); }) == "bad-argument");

    // rotation exponent outside {0, 1, r-1}
    IsotrivialData bad_shape;
    bad_shape.r = 6;
    Ring eis = ring_for_r(6);
    bad_shape.monodromies = {{2, tp(eis, Rat(0), Rat(0))},
                             {4, tp(eis, Rat(0), Rat(0))}};
    CHECK(error_code([&] { iso_validate(bad_shape); }) == "unsupported-monodromy-shape");

    // T must be stable under the rotation: <(1/3, 0)> is not for r = 4
    IsotrivialData bad_T;
    bad_T.r = 4;
    Ring gau = ring_for_r(4);
    bad_T.T_gens = {tp(gau, Rat(1, 3), Rat(0))};
    bad_T.monodromies = {{1, tp(gau, Rat(0), Rat(0))}, {3, tp(gau, Rat(0), Rat(0))}};
    CHECK(error_code([&] { iso_validate(bad_T); }) == "T-not-normalized");

    // a translation part outside T
    IsotrivialData outside;
    outside.r = 4;
    outside.monodromies = {{0, tp(gau, Rat(1, 2), Rat(1, 2))},
                           {0, tp(gau, Rat(1, 2), Rat(1, 2))}};
    CHECK(error_code([&] { iso_validate(outside); }) == "monodromy-outside-G");

    // trivial local monodromy
    IsotrivialData trivial = base_r4();
    trivial.monodromies = {{0, tp(ring_for_r(4), Rat(0), Rat(0))},
                           {1, tp(ring_for_r(4), Rat(0), Rat(0))},
                           {3, tp(ring_for_r(4), Rat(0), Rat(0))}};
    CHECK(error_code([&] { iso_validate(trivial); }) == "bad-argument");

    // product of the local monodromies must be the identity
    IsotrivialData bad_prod;
    bad_prod.r = 3;
    bad_prod.monodromies = {{1, tp(eis, Rat(0), Rat(0))}, {1, tp(eis, Rat(0), Rat(0))}};
    CHECK(error_code([&] { iso_validate(bad_prod); }) == "monodromy-product-not-identity");

    // rotations alone do not generate mu_r x T when T is nontrivial
    IsotrivialData bad_gen = base_r4();
    bad_gen.monodromies = {{1, tp(ring_for_r(4), Rat(0), Rat(0))},
                           {3, tp(ring_for_r(4), Rat(0), Rat(0))}};
    CHECK(error_code([&] { iso_validate(bad_gen); }) == "monodromies-do-not-generate");
}

TEST_CASE("the three elliptic-base examples validate") {
    CHECK(iso_validate(iso_r3()).order() == 9);
    CHECK(iso_validate(iso_r4()).order() == 8);
    CHECK(iso_validate(iso_r6()).order() == 18);
}

// ---------------------------------------------------------------------------
// Genera of the covering curves
// ---------------------------------------------------------------------------

TEST_CASE("genera of C and D") {
    GenusReport r3 = iso_genera(iso_validate(iso_r3()));
    CHECK(r3.g_C == 10);
    CHECK(r3.g_D == 0);
    CHECK(r3.elliptic_count == 2);
    CHECK(r3.criterion);

    GenusReport r4 = iso_genera(iso_validate(iso_r4()));
    CHECK(r4.g_C == 3);
    CHECK(r4.g_D == 0);
    CHECK(r4.criterion);

    GenusReport r6 = iso_genera(iso_validate(iso_r6()));
    CHECK(r6.g_C == 16);
    CHECK(r6.g_D == 0);
    CHECK(r6.criterion);
}

// ---------------------------------------------------------------------------
// Hirzebruch-Jung chains
// ---------------------------------------------------------------------------

TEST_CASE("Hirzebruch-Jung continued fractions") {
    CHECK(hj_chain(12, 5) == std::vector<long>({-3, -2, -3}));
    CHECK(hj_chain(7, 3) == std::vector<long>({-3, -2, -2}));
    CHECK(hj_chain(2, 1) == std::vector<long>({-2}));
    CHECK(hj_chain(4, 1) == std::vector<long>({-4}));
    CHECK(hj_chain(4, 3) == std::vector<long>({-2, -2, -2}));

    CHECK(error_code([] { hj_chain(4, 0); }) == "bad-argument");
    CHECK(error_code([] { hj_chain(4, 4); }) == "bad-argument");
    CHECK(error_code([] { hj_chain(4, 2); }) == "bad-argument");
    CHECK(error_code([] { hj_chain(1, 1); }) == "bad-argument");
}

// ---------------------------------------------------------------------------
// Quotient singularities
// ---------------------------------------------------------------------------

TEST_CASE("singularities of the order-8 Gaussian action") {
    IsoGroup g = iso_validate(iso_r4());
    std::vector<SingularPoint> sing = singularity_analysis(g);

    // branch 0 carries z -> i z: two 1/4(1,1) points and one A_1 from the
    // exchanged 2-torsion pair; branch 1 carries the inverse rotation.
    int quarter = 0, a1 = 0, inv4 = 0;
    for (const auto& sp : sing) {
        if (sp.m == 4 && sp.k == 1) {
            ++quarter;
            CHECK(sp.branch == 0);
            CHECK(sp.chain == std::vector<long>({-4}));
        } else if (sp.m == 4 && sp.k == 3) {
            ++inv4;
            CHECK(sp.branch == 1);
            CHECK(sp.chain == std::vector<long>({-2, -2, -2}));
        } else {
            ++a1;
            CHECK(sp.m == 2);
            CHECK(sp.chain == std::vector<long>({-2}));
        }
    }
    CHECK(quarter == 2);
    CHECK(inv4 == 2);
    CHECK(a1 == 2);
    CHECK(sing.size() == 6);
}

// ---------------------------------------------------------------------------
// Fibers, invariants, center
// ---------------------------------------------------------------------------

TEST_CASE("fiber ledger and invariants for r = 4") {
    IsoGroup g = iso_validate(iso_r4());
    std::vector<IsoFiber> fibers = assemble_fibers(g);
    REQUIRE(fibers.size() == 4);
    CHECK(ktype_str(fibers[0].type) == "III");
    CHECK(ktype_str(fibers[1].type) == "III*");
    CHECK(fibers[2].multiple);
    CHECK(fibers[2].multiplicity == 2);
    CHECK(fibers[3].multiple);

    IsoInvariants inv = iso_invariants(g, fibers);
    CHECK(inv.e == 12);
    CHECK(inv.chi == 1);
    CHECK(inv.q == 0);
    CHECK(inv.p_g == 0);
    CHECK(inv.b2 == 10);
    CHECK(inv.s == 2);
}

TEST_CASE("center orders") {
    // mu_4 acts trivially on T = E[1+i], so the order-8 group is abelian;
    // for r = 6 only the even rotations commute with the translations.
    CHECK(iso_center_order(iso_validate(iso_r4())) == 8);
    CHECK(iso_center_order(iso_validate(iso_r3())) == 9);
    CHECK(iso_center_order(iso_validate(iso_r6())) == 3);
}

TEST_CASE("a translation candidate against a star fiber is never trivial") {
    IsoGroup g = iso_validate(iso_r4());
    std::vector<IsoFiber> fibers = assemble_fibers(g);

    IsoMonodromy psi{0, tp(g.ring, Rat(1, 2), Rat(1, 2))};
    NumReport rep = center_and_num(g, psi, fibers);
    CHECK(rep.star_override);
    CHECK(rep.verdict ==
          "not numerically trivial: a translation permutes the components of the star fiber");

    // the rotation candidate passes the lattice-side conditions instead
    NumReport rot = center_and_num(g, IsoMonodromy{1, tp(g.ring, Rat(0), Rat(0))}, fibers);
    CHECK(rot.lambda_ok);
    CHECK(rot.num_ok);
    CHECK(rot.shortcut_ok);
    CHECK_FALSE(rot.star_override);
}

TEST_CASE("full reports and automorphism caps") {
    IsotrivialReport r3 = isotrivial_report(iso_r3());
    CHECK(r3.bounds.autz_cap == 1);
    CHECK(r3.bounds.autq_cap == 12);
    CHECK(r3.invariants.s == 4);

    IsotrivialReport r4 = isotrivial_report(iso_r4());
    CHECK(r4.bounds.autz_cap == 2);
    CHECK(r4.bounds.autq_cap == 8);
    CHECK(r4.center_order == 8);

    IsotrivialReport r6 = isotrivial_report(iso_r6());
    CHECK(r6.bounds.autz_cap == 3);
    CHECK(r6.bounds.autq_cap == 9);
    CHECK(r6.invariants.s == 3);
    CHECK(r6.zs_log == std::vector<long>({2, 10, 0, 0, 0}));
}
