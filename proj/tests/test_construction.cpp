// The logarithmic-transform engine: group validation, splitting,
// fiber transformation, quotient invariants, and the bound audit.

#include <catch2/catch_amalgamated.hpp>

#include <ellsurf/catalog.hpp>
#include <ellsurf/construction.hpp>

using namespace ellsurf;

namespace {

ConstructionInput from_catalog(const std::string& name, SubgroupChoice g,
                               std::vector<BranchDatum> branch) {
    CatalogSurface cs = catalog_get(name);
    ConstructionInput in;
    in.catalog_name = cs.entry.name;
    in.rotation_order = cs.entry.rotation_order;
    if (cs.entry.has_model) {
        in.has_model = true;
        in.model = cs.entry.model;
    } else {
        in.fibers = cs.entry.fibers;
    }
    in.group = std::move(g);
    in.branch = std::move(branch);
    return in;
}

std::string error_code(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code;
    }
    return "";
}

}  // namespace

TEST_CASE("build_group validates the subgroup choice") {
    SurfaceData s = catalog_get("X8211").surface;
    CHECK_NOTHROW(build_group(s, SubgroupChoice{4, 1, {{"inf", {2}}, {"t", {1}}}}, false));
    // N' must divide N
    CHECK(error_code([&] {
              build_group(s, SubgroupChoice{4, 3, {{"inf", {2}}, {"t", {1}}}}, false);
          }) == "bad-subgroup");
    // component index out of range
    CHECK(error_code([&] {
              build_group(s, SubgroupChoice{4, 1, {{"inf", {9}}, {"t", {1}}}}, false);
          }) == "invalid-component");
    // a generator violating the contribution identity
    CHECK(error_code([&] {
              build_group(s, SubgroupChoice{4, 1, {{"inf", {1}}, {"t", {1}}}}, false);
          }) == "bad-subgroup");
}

TEST_CASE("splitting brute force and the valuation criterion") {
    SurfaceData s = catalog_get("X8211").surface;
    GroupData g4 = build_group(s, SubgroupChoice{4, 1, {{"inf", {2}}, {"t", {1}}}}, false);
    auto res = check_splitting_all(g4);
    int splits = 0, fails = 0;
    for (const auto& r : res) {
        (r.splits ? splits : fails) += 1;
        if (r.splits) {
            REQUIRE(r.witness.has_value());
        }
    }
    CHECK(fails >= 1);  // the I2 obstructs Z/4

    GroupData g2 = build_group(s, SubgroupChoice{2, 1, {{"inf", {4}}}}, false);
    for (const auto& r : check_splitting_all(g2)) CHECK(r.splits);

    CHECK(check_splitting_valuations(2, 1));
    CHECK(check_splitting_valuations(4, 2));
    CHECK(check_splitting_valuations(3, 3));
    CHECK_FALSE(check_splitting_valuations(4, 1));
    CHECK_FALSE(check_splitting_valuations(9, 1));
}

TEST_CASE("construct_report refuses a non-splitting group") {
    ConstructionInput in = from_catalog("X8211", SubgroupChoice{4, 1, {{"inf", {2}}, {"t", {1}}}},
                                        {{"inf", {1}}, {"0", {3}}});
    CHECK(error_code([&] { construct_report(in); }) == "does-not-split");
}

TEST_CASE("freeness precondition: unbranched semistable fibers with rotation") {
    // Branch only at two smooth points: the I9 at infinity keeps a nonzero
    // rotation but is not in the branch locus.
    ConstructionInput in = from_catalog("SEC10", SubgroupChoice{3, 1, {{"inf", {3}}}},
                                        {{"0", {1}}, {"1", {2}}});
    CHECK(error_code([&] { construct_report(in); }) == "non-free-action");
}

TEST_CASE("freeness precondition: wrong monodromy order at a branched fiber") {
    // The X8211 I2 sees only a rotation of order 2 from a monodromy of order 4,
    // so the generator has fixed points on that fiber.  construct_report would
    // reject this group earlier (the I2 does not even split), so drive the
    // transform directly.
    CatalogSurface cs = catalog_get("X8211");
    GroupData gd = build_group(cs.surface, SubgroupChoice{4, 1, {{"inf", {2}}, {"t", {1}}}}, false);
    CHECK(error_code([&] { transform_fibers(gd, {{"t", {1}}, {"0", {3}}}); }) == "non-free-action");
}

TEST_CASE("monodromy bookkeeping errors") {
    // sum != 0
    ConstructionInput bad_sum = from_catalog("SEC10", SubgroupChoice{3, 1, {{"inf", {3}}}},
                                             {{"inf", {1}}, {"0", {1}}});
    CHECK(error_code([&] { construct_report(bad_sum); }) == "monodromy-sum");
    // monodromies fail to generate G: both X11 fibers are additive, so the
    // freeness checks stay quiet and the closure test is what fires.
    ConstructionInput bad_gen =
        from_catalog("X11", SubgroupChoice{2, 2, {{"t", {1, 2}}, {"inf", {1, 2}}}},
                     {{"1", {1, 0}}, {"2", {1, 0}}});
    CHECK(error_code([&] { construct_report(bad_gen); }) == "monodromy-generation");
    // duplicate branch points
    ConstructionInput dup = from_catalog("SEC10", SubgroupChoice{3, 1, {{"inf", {3}}}},
                                         {{"inf", {1}}, {"inf", {2}}});
    CHECK(error_code([&] { construct_report(dup); }) == "bad-branch-point");
}

TEST_CASE("the I9 quotient in detail") {
    ConstructionInput in = from_catalog("SEC10", SubgroupChoice{3, 1, {{"inf", {3}}}},
                                        {{"inf", {1}}, {"0", {2}}});
    ConstructionReport r = construct_report(in);
    CHECK(r.transform.cover_degree == 3);
    REQUIRE(r.transform.multiple.size() == 2);
    long mult_product = 1;
    bool smooth_seen = false, fiber_seen = false;
    for (const auto& m : r.transform.multiple) {
        mult_product *= m.multiplicity;
        if (m.smooth_support) smooth_seen = true;
        if (ktype_str(m.reduced) == "I9") fiber_seen = true;
    }
    CHECK(mult_product == 9);
    CHECK(smooth_seen);
    CHECK(fiber_seen);
    // the cover carries I27 over the branched I9 point
    bool i27 = false;
    for (const auto& u : r.transform.upstairs)
        if (ktype_str(u.type) == "I27") i27 = true;
    CHECK(i27);
    CHECK(r.invariants.e == 12);
    CHECK(r.invariants.chi == 1);
    CHECK(r.invariants.kod == 1);
    CHECK(r.invariants.P2.has_value());
    CHECK(*r.invariants.P2 == 1);
    CHECK(r.audit.all_pass);
}

TEST_CASE("the Enriques member of the I8 family") {
    ConstructionInput in = from_catalog("SEC9", SubgroupChoice{2, 1, {{"inf", {4}}}},
                                        {{"inf", {1}}, {"0", {1}}});
    ConstructionReport r = construct_report(in);
    CHECK(r.invariants.kod == 0);
    CHECK(r.invariants.enriques);
    CHECK(r.invariants.q == 0);
    CHECK(r.invariants.p_g == 0);
    REQUIRE(r.invariants.P2.has_value());
    CHECK(*r.invariants.P2 == 1);
}

TEST_CASE("unbranched additive fibers pass through the quotient") {
    // X33 with two smooth double points: III and III* survive on S
    ConstructionInput in = from_catalog("X33", SubgroupChoice{2, 1, {{"t", {1}}, {"inf", {1}}}},
                                        {{"1", {1}}, {"2", {1}}});
    ConstructionReport r = construct_report(in);
    int iii = 0;
    for (const auto& f : r.transform.s_fibers)
        if (ktype_str(f.type) == "III" || ktype_str(f.type) == "III*") ++iii;
    CHECK(iii == 2);
    CHECK(r.autq.relation == "exact-order");
    CHECK(r.autq.order == 8);
    CHECK(r.autq.order_exact);
}

TEST_CASE("additive fibers cannot be branch points") {
    ConstructionInput in = from_catalog("X33", SubgroupChoice{2, 1, {{"t", {1}}, {"inf", {1}}}},
                                        {{"t", {1}}, {"1", {1}}});
    CHECK(error_code([&] { construct_report(in); }) == "bad-branch-point");
}
