#include <catch2/catch_amalgamated.hpp>

#include <ellsurf/ellsurf.hpp>

#include <fstream>
#include <string>

using namespace ellsurf;

#ifndef ELLSURF_DATA_DIR
#define ELLSURF_DATA_DIR "data"
#endif

namespace {

json load(const std::string& name) {
    std::ifstream in(std::string(ELLSURF_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    return json::parse(in);
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

// ---------------------------------------------------------------------------
// Scalar and polynomial round trips
// ---------------------------------------------------------------------------

TEST_CASE("rational parsing from JSON") {
    CHECK(rat_from_json(json(5)) == Rat(5));
    CHECK(rat_from_json(json("3/4")) == Rat(3, 4));
    CHECK(rat_from_json(json("-7/2")) == Rat(-7, 2));
    CHECK(error_code([] { rat_from_json(json(true)); }) == "bad-json");
    CHECK(error_code([] { rat_from_json(json::array()); }) == "bad-json");
    CHECK(error_code([] { rat_from_json(json("3//4")); }) == "bad-rational");
    CHECK(error_code([] { rat_from_json(json("")); }) == "bad-rational");
}

TEST_CASE("polynomial and place round trips") {
    Poly f = Poly::monomial(Rat(1), 3) - Rat(1, 2) * Poly::t() + Poly::constant(Rat(2, 3));
    CHECK(poly_from_json(poly_to_json(f)) == f);
    CHECK(poly_from_json(poly_to_json(Poly::zero())) == Poly::zero());
    CHECK(error_code([] { poly_from_json(json{{"a", 1}}); }) == "bad-json");

    Place inf = place_infinity();
    Place quad = place_finite(Poly::monomial(Rat(1), 2) + Poly::constant(Rat(2)));
    CHECK(place_from_json(place_to_json(inf)) == inf);
    CHECK(place_from_json(place_to_json(quad)) == quad);
    CHECK(error_code([] { place_from_json(json{{"kind", "mystery"}}); }) == "bad-json");
    CHECK(error_code([] { place_from_json(json(3)); }) == "bad-json");
}

TEST_CASE("model round trip preserves coefficients") {
    WeierstrassModel m;
    m.a2 = Poly::t();
    m.a4 = Poly::monomial(Rat(2), 2);
    WeierstrassModel back = model_from_json(model_to_json(m));
    CHECK(back.a1 == m.a1);
    CHECK(back.a2 == m.a2);
    CHECK(back.a3 == m.a3);
    CHECK(back.a4 == m.a4);
    CHECK(back.a6 == m.a6);
    CHECK(back.base_genus == 0);

    // omitted coefficients default to zero
    WeierstrassModel sparse = model_from_json(json{{"a3", {1}}});
    CHECK(sparse.a3 == Poly::one());
    CHECK(sparse.a1 == Poly::zero());
}

TEST_CASE("Gram matrices from JSON") {
    MatZ m = gram_from_json(json::parse("[[0,1],[1,-3]]"));
    CHECK(m[1][1] == Int(-3));
    // big entries may be given as strings
    MatZ big = gram_from_json(json::parse(R"([["12345678901234567890"]])"));
    CHECK(big[0][0] == Int("12345678901234567890"));
    CHECK(error_code([] { gram_from_json(json::parse("[[1,2],[3]]")); }) == "bad-json");
    CHECK(error_code([] { gram_from_json(json::parse("[[1,2]]")); }) == "bad-json");
    CHECK(error_code([] { gram_from_json(json::parse("[[0.5]]")); }) == "bad-json");
}

// ---------------------------------------------------------------------------
// Input files shipped under data/
// ---------------------------------------------------------------------------

TEST_CASE("shipped model files classify") {
    for (const char* name : {"x33.json", "x44.json", "x11.json", "x22.json", "sec9.json",
                             "sec10.json", "x8211.json"}) {
        WeierstrassModel m = model_from_json(load(name));
        SurfaceData s = classify_all(m);
        CHECK(s.chi == 1);
        CHECK(s.e == 12);
    }
}

TEST_CASE("shipped construction files run end to end") {
    ConstructionInput sec10 = construction_from_json(load("c_sec10.json"));
    CHECK(sec10.catalog_name == "SEC10");
    CHECK(sec10.group.N == 3);
    REQUIRE(sec10.branch.size() == 2);
    CHECK(sec10.branch[0].point == "inf");
    ConstructionReport r = construct_report(sec10);
    CHECK(r.audit.all_pass);

    ConstructionInput x3333 = construction_from_json(load("c_x3333.json"));
    CHECK_FALSE(x3333.has_model);
    CHECK(x3333.group.Nprime == 3);
    CHECK(construct_report(x3333).autq.relation == "equals");
}

TEST_CASE("shipped isotrivial files load") {
    IsotrivialData d = isotrivial_from_json(load("iso_r4.json"));
    CHECK(d.r == 4);
    CHECK(d.T_gens.size() == 1);
    CHECK(d.monodromies.size() == 4);
    CHECK(isotrivial_report(d).invariants.b2 == 10);

    CHECK(isotrivial_from_json(load("iso_r3.json")).monodromies.size() == 6);
    CHECK(isotrivial_from_json(load("iso_r6.json")).r == 6);
}

TEST_CASE("construction JSON validation") {
    json j = load("c_sec10.json");
    j["jacobian"] = "sec10";  // missing catalog: prefix
    CHECK(error_code([&] { construction_from_json(j); }) == "bad-json");
    j["jacobian"] = "catalog:NOPE";
    CHECK(error_code([&] { construction_from_json(j); }) == "unknown-catalog-name");
}

// ---------------------------------------------------------------------------
// Report serialization
// ---------------------------------------------------------------------------

TEST_CASE("surface and torsion reports serialize with stable keys") {
    CatalogSurface cs = catalog_get("X33");
    json s = surface_to_json(cs.surface);
    CHECK(s.at("chi") == 1);
    CHECK(s.at("fibers").size() == 2);
    CHECK(s.at("extremal") == true);
    std::string types;
    for (const auto& f : s.at("fibers")) types += f.at("type").get<std::string>() + " ";
    CHECK(types.find("III*") != std::string::npos);

    json t = torsion_to_json(cs.torsion);
    CHECK(t.at("structure") == "Z/2");
    CHECK(t.at("order") == 2);

    json t3333 = torsion_to_json(catalog_get("X3333").torsion);
    CHECK(t3333.at("structure") == "Z/3 x Z/3");
}

TEST_CASE("lattice reports serialize") {
    IntegralLattice L = root_lattice("A8");
    json d = disc_to_json(disc_group(L));
    CHECK(d.at("order") == 9);
    CHECK(d.at("invariants") == json::array({9}));

    auto overs = enumerate_overlattices(L, false);
    bool saw_proper = false;
    for (const auto& o : overs) {
        json jo = overlattice_to_json(o);
        if (jo.at("index") == 3) {
            saw_proper = true;
            CHECK(jo.at("det") == "1");
        }
    }
    CHECK(saw_proper);
}

TEST_CASE("error serialization carries code and context") {
    Error e("bad-subgroup", "element violates the torsion contribution identity",
            {{"element", "1,0"}});
    json j = error_to_json(e);
    CHECK(j.at("error").at("code") == "bad-subgroup");
    CHECK(j.at("error").at("context").at("element") == "1,0");
    CHECK(j.at("error").at("detail").get<std::string>().find("identity") != std::string::npos);
}
