// Weierstrass models y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with
// polynomial coefficients over Q(t), their standard quantities b2..b8,
// c4, c6, Delta, and the homogenization weight ("twist exponent") that turns
// the affine data into sections of line bundles on P^1.
#pragma once

#include <ellsurf/ratfunc.hpp>

namespace ellsurf {

struct WeierstrassModel {
    Poly a1, a2, a3, a4, a6;
    int base_genus = 0;  // genus of the base curve; 0 for all explicit models
};

struct ReducedInvariants {
    Poly c4, c6, delta;
    int twist_k = 0;  // c4, c6, Delta are sections of O(4k), O(6k), O(12k)
};

inline ReducedInvariants reduce_invariants(const WeierstrassModel& w) {
    Poly b2 = w.a1 * w.a1 + Rat(4) * w.a2;
    Poly b4 = Rat(2) * w.a4 + w.a1 * w.a3;
    Poly b6 = w.a3 * w.a3 + Rat(4) * w.a6;
    // 4 b8 = b2 b6 - b4^2 is an identity, so the division is exact
    Poly b8 = Rat(1, 4) * (b2 * b6 - b4 * b4);

    ReducedInvariants r;
    r.c4 = b2 * b2 - Rat(24) * b4;
    r.c6 = -(b2 * b2 * b2) + Rat(36) * (b2 * b4) - Rat(216) * b6;
    r.delta = -(b2 * b2) * b8 - Rat(8) * (b4 * b4 * b4) - Rat(27) * (b6 * b6) +
              Rat(9) * (b2 * b4 * b6);

    if (r.delta.is_zero())
        throw Error("singular-generic-fiber",
                    "discriminant vanishes identically: the generic fiber is singular");

    // sanity identity c4^3 - c6^2 = 1728 Delta
    Poly check = r.c4 * r.c4 * r.c4 - r.c6 * r.c6 - Rat(1728) * r.delta;
    if (!check.is_zero()) throw Error("internal", "c4/c6/Delta identity failed");

    // smallest k with deg c4 <= 4k, deg c6 <= 6k, deg Delta <= 12k
    auto fit = [](const Poly& f, int weight) {
        if (f.is_zero()) return 0;
        return (f.deg() + weight - 1) / weight;
    };
    r.twist_k = std::max({fit(r.c4, 4), fit(r.c6, 6), fit(r.delta, 12)});
    return r;
}

}  // namespace ellsurf
