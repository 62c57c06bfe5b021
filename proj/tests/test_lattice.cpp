// Integer matrices, root lattices, discriminant forms, overlattices.

#include <catch2/catch_amalgamated.hpp>

#include <ellsurf/lattice.hpp>

using namespace ellsurf;

TEST_CASE("Bareiss determinants") {
    CHECK(det_bareiss({{Int(5)}}) == 5);
    CHECK(det_bareiss({{Int(1), Int(2)}, {Int(3), Int(4)}}) == -2);
    CHECK(det_bareiss({{Int(2), Int(0), Int(0)},
                       {Int(0), Int(3), Int(0)},
                       {Int(0), Int(0), Int(4)}}) == 24);
    // a singular matrix
    CHECK(det_bareiss({{Int(1), Int(2)}, {Int(2), Int(4)}}) == 0);
}

TEST_CASE("Smith normal form diagonal") {
    MatZ m{{Int(2), Int(4), Int(4)}, {Int(-6), Int(6), Int(12)}, {Int(10), Int(-4), Int(-16)}};
    SmithForm s = smith_normal_form(m);
    CHECK(s.D[0][0] == 2);
    CHECK(s.D[1][1] == 6);
    CHECK(s.D[2][2] == 12);
    // U m V = D
    MatZ lhs = matz_mul(matz_mul(s.U, m), s.V);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) CHECK(lhs[i][j] == s.D[i][j]);
}

TEST_CASE("root lattice determinants") {
    CHECK(lattice_det(root_lattice("A1")) == -2);
    CHECK(lattice_det(root_lattice("A2")) == 3);
    CHECK(lattice_det(root_lattice("A8")) == 9);
    CHECK(lattice_det(root_lattice("D4")) == 4);
    CHECK(lattice_det(root_lattice("E6")) == 3);
    CHECK(lattice_det(root_lattice("E7")) == -2);
    CHECK(lattice_det(root_lattice("E8")) == 1);
    CHECK(lattice_det(hyperbolic_u()) == -1);
    CHECK_THROWS_AS(root_lattice("F4"), Error);
    CHECK_THROWS_AS(root_lattice("D3"), Error);
}

TEST_CASE("dual vector norms") {
    CHECK(dual_vector("A1", 1).norm == Rat(-1, 2));
    CHECK(dual_vector("A2", 2).norm == Rat(-2, 3));
    CHECK(dual_vector("A8", 3).norm == Rat(-2));
    CHECK(dual_vector("D4", 4).norm == Rat(-1));
    CHECK(dual_vector("E6", 1).norm == Rat(-4, 3));
    CHECK(dual_vector("E6", 6).norm == Rat(-2));
    CHECK(dual_vector("E7", 6).norm == Rat(-3, 2));
    CHECK(dual_vector("E7", 7).norm == Rat(-7, 2));
    CHECK_THROWS_AS(dual_vector("A2", 3), Error);  // node out of range
}

TEST_CASE("discriminant group of a root lattice") {
    DiscGroup d = disc_group(root_lattice("A1"));
    REQUIRE(d.orders == std::vector<long>{2});
    CHECK(d.q_value({1}) == Rat(3, 2));  // -1/2 mod 2Z, reduced to [0, 2)

    DiscGroup e = disc_group(root_lattice("E8"));
    CHECK(e.orders.empty());
    CHECK(e.order() == 1);

    DiscGroup a2 = disc_group(root_lattice("A2"));
    REQUIRE(a2.orders == std::vector<long>{3});
    // q = -2/3 mod 2Z on a generator, reduced to [0, 2)
    CHECK(a2.q_value({1}) == Rat(4, 3));
    CHECK(a2.q_value({2}) == a2.q_value({1}));  // q(-x) = q(x)
}

TEST_CASE("the unimodular lattice has only itself as overlattice") {
    auto over = enumerate_overlattices(hyperbolic_u(), true);
    REQUIRE(over.size() == 1);
    CHECK(over[0].index == 1);
}

TEST_CASE("A1 + A1 has one odd overlattice and no even one") {
    IntegralLattice L = direct_sum(root_lattice("A1"), root_lattice("A1"));
    auto even = enumerate_overlattices(L, true);
    REQUIRE(even.size() == 1);  // only L itself
    auto all = enumerate_overlattices(L, false);
    REQUIRE(all.size() == 2);
    const Overlattice* proper = nullptr;
    for (const auto& o : all)
        if (o.index == 2) proper = &o;
    REQUIRE(proper != nullptr);
    CHECK(proper->det == 1);  // rank 2, negative definite: positive determinant
    CHECK_FALSE(proper->even);
}

TEST_CASE("disc_class recognizes dual vectors") {
    IntegralLattice L = root_lattice("A2");
    DiscGroup d = disc_group(L);
    DualVector v = dual_vector("A2", 2);
    auto cls = disc_class(d, v.coords);
    REQUIRE(cls.has_value());
    CHECK(d.q_value(*cls) == Rat(4, 3));
    // an honest lattice vector maps to the identity class
    auto zero_cls = disc_class(d, {Rat(1), Rat(0)});
    REQUIRE(zero_cls.has_value());
    for (long x : *zero_cls) CHECK(x == 0);
    // a vector outside the dual lattice has no class
    CHECK_FALSE(disc_class(d, {Rat(1, 2), Rat(0)}).has_value());
}

TEST_CASE("glue from A2 + E6 to the even unimodular overlattice checks out") {
    IntegralLattice L = direct_sum(direct_sum(hyperbolic_u(), root_lattice("A2")),
                                   root_lattice("E6"));
    DiscGroup d = disc_group(L);
    REQUIRE(d.orders == (std::vector<long>{3, 3}));
    // both generators have q = -2/3 or -4/3; isotropic combinations exist
    auto over = enumerate_overlattices(L, true);
    int proper = 0;
    for (const auto& o : over)
        if (o.index == 3) ++proper;
    CHECK(proper == 2);
}

TEST_CASE("rejecting bad input") {
    CHECK_THROWS_AS(make_lattice(MatZ{{Int(0), Int(1)}, {Int(1), Int(0)}, {Int(0), Int(0)}}),
                    Error);
    // non-symmetric
    CHECK_THROWS_AS(make_lattice(MatZ{{Int(0), Int(1)}, {Int(2), Int(0)}}), Error);
    // degenerate lattices have no discriminant group
    CHECK_THROWS_AS(disc_group(make_lattice(MatZ{{Int(1), Int(2)}, {Int(2), Int(4)}})), Error);
}
