// Rational functions on P^1 over Q, places of the function field Q(t), and
// valuations.  A finite place is a monic irreducible polynomial (a closed
// point of degree = deg of the polynomial); the place at infinity is kept as
// a separate case and measured through degrees.
#pragma once

#include <ellsurf/factor.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ellsurf {

struct RatFunc {
    Poly num, den;  // den monic, gcd(num, den) = 1; zero is 0/1
};

inline RatFunc make_ratfunc(Poly n, Poly d) {
    if (d.is_zero()) throw Error("division-by-zero", "rational function with zero denominator");
    if (n.is_zero()) return RatFunc{Poly::zero(), Poly::one()};
    Poly g = poly_gcd(n, d);
    n = poly_div_exact(n, g);
    d = poly_div_exact(d, g);
    Rat l = d.lead();
    return RatFunc{(Rat(1) / l) * n, monic(d)};
}

// ----- places -----

struct Place {
    bool at_infinity = false;
    Poly poly;  // monic irreducible; meaningful only when finite

    int degree() const { return at_infinity ? 1 : poly.deg(); }

    std::string label() const { return at_infinity ? "inf" : poly_str(poly); }

    bool operator==(const Place& o) const {
        return at_infinity == o.at_infinity && (at_infinity || poly == o.poly);
    }
};

inline Place place_infinity() { return Place{true, Poly::zero()}; }

inline Place place_finite(Poly monic_irred) {
    if (monic_irred.deg() < 1) throw Error("bad-place", "a finite place needs positive degree");
    return Place{false, monic(std::move(monic_irred))};
}

// the place of a rational point t = a
inline Place place_root(const Rat& a) { return place_finite(Poly::t() - Poly::constant(a)); }

// Canonical order: finite places first (by degree, then coefficients), then infinity.
inline bool place_less(const Place& a, const Place& b) {
    if (a.at_infinity != b.at_infinity) return !a.at_infinity;
    if (a.at_infinity) return false;
    return poly_less(a.poly, b.poly);
}

// ----- valuations -----

// The valuation of the zero element is +infinity; we carry that as a flag so
// callers cannot misread a sentinel integer.
struct Valuation {
    bool infinite = false;
    long v = 0;
};

inline Valuation valuation(const Poly& f, const Place& p) {
    if (f.is_zero()) return Valuation{true, 0};
    if (p.at_infinity) return Valuation{false, -f.deg()};
    long v = 0;
    Poly g = f;
    for (;;) {
        auto [q, r] = poly_divmod(g, p.poly);
        if (!r.is_zero()) break;
        ++v;
        g = q;
    }
    return Valuation{false, v};
}

inline Valuation valuation(const RatFunc& f, const Place& p) {
    if (f.num.is_zero()) return Valuation{true, 0};
    return Valuation{false, valuation(f.num, p).v - valuation(f.den, p).v};
}

// All finite places where f vanishes, with multiplicities, canonically sorted.
inline std::vector<std::pair<Place, int>> finite_places_of(const Poly& f) {
    Factorization fac = factor_poly(f);
    std::vector<std::pair<Place, int>> out;
    for (const auto& [g, m] : fac.parts) out.emplace_back(place_finite(g), m);
    return out;  // factor_poly already sorts canonically
}

}  // namespace ellsurf
