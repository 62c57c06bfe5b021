// Torsion sections: contribution tables, candidate filtering, gluing.

#include <catch2/catch_amalgamated.hpp>

#include <ellsurf/catalog.hpp>
#include <ellsurf/torsion.hpp>

using namespace ellsurf;

TEST_CASE("component arithmetic in Z/d1 x Z/d2") {
    std::pair<long, long> cyc{8, 1};
    CHECK(comp_add(cyc, 5, 6) == 3);
    CHECK(comp_order(cyc, 4) == 2);
    std::pair<long, long> klein{2, 2};
    CHECK(comp_add(klein, 1, 3) == 2);
    CHECK(comp_order(klein, 3) == 2);
}

namespace {
Rat contr(const KodairaType& t, long idx) { return contribution(t, component_group(t), idx); }
}  // namespace

TEST_CASE("contribution values at I_n fibers") {
    CHECK(contr(KodairaType{KTag::I, 8}, 3) == Rat(15, 8));  // 3*5/8
    CHECK(contr(KodairaType{KTag::I, 9}, 3) == Rat(2));      // 3*6/9
    CHECK(contr(KodairaType{KTag::I, 4}, 0) == Rat(0));
}

TEST_CASE("contribution values at additive fibers") {
    CHECK(contr(KodairaType{KTag::III, 0}, 1) == Rat(1, 2));
    CHECK(contr(KodairaType{KTag::IV, 0}, 2) == Rat(2, 3));
    CHECK(contr(KodairaType{KTag::IVstar, 0}, 1) == Rat(4, 3));
    CHECK(contr(KodairaType{KTag::IIIstar, 0}, 1) == Rat(3, 2));
    // I_n*: the 2-elementary component group
    CHECK(contr(KodairaType{KTag::Istar, 4}, 1) == Rat(1));
    CHECK(contr(KodairaType{KTag::Istar, 4}, 2) == Rat(2));  // 1 + n/4
    // II has a trivial component group: nonzero indices are invalid
    CHECK_THROWS_AS(contr(KodairaType{KTag::II, 0}, 1), Error);
}

TEST_CASE("torsion of the catalog jacobians") {
    struct Row {
        const char* name;
        long N, Nprime;
    };
    const Row rows[] = {{"X33", 2, 1},  {"X44", 3, 1},   {"X11", 2, 2},
                        {"X22", 1, 1},  {"SEC9", 2, 1},  {"SEC10", 3, 1},
                        {"X8211", 4, 1}, {"X3333", 3, 3}};
    for (const auto& r : rows) {
        CatalogSurface cs = catalog_get(r.name);
        TorsionGroup t = torsion_group(cs.surface);
        INFO(r.name);
        CHECK(t.N == r.N);
        CHECK(t.Nprime == r.Nprime);
        CHECK(t.order() == r.N * r.Nprime);
    }
}

TEST_CASE("II and II* fibers force trivial torsion") {
    CatalogSurface cs = catalog_get("X22");
    TorsionGroup t = torsion_group(cs.surface);
    CHECK(t.N == 1);
    CHECK(t.elements.size() == 1);
}

TEST_CASE("torsion elements satisfy the contribution identity") {
    CatalogSurface cs = catalog_get("X8211");
    TorsionGroup t = torsion_group(cs.surface);
    for (const auto& el : t.elements) {
        bool zero = true;
        for (long x : el) zero = zero && x == 0;
        if (zero) continue;
        Rat sum(0);
        for (size_t j = 0; j < t.slots.size(); ++j)
            sum += contribution(t.slots[j].type, t.slots[j].group, el[j]);
        CHECK(sum == Rat(2) * Rat(cs.surface.chi));
    }
}

TEST_CASE("unknown catalog names are rejected") {
    CHECK_THROWS_AS(catalog_get("X_NOT_THERE"), Error);
    try {
        catalog_get("X_NOT_THERE");
    } catch (const Error& e) {
        CHECK(e.code == "unknown-catalog-name");
    }
}
