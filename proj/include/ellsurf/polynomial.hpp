// Dense univariate polynomials over Q in the coordinate t of the base curve.
// Coefficient index equals degree; the zero polynomial has empty coefficient
// vector and degree -1 (sentinel).  All arithmetic is exact.
#pragma once

#include <ellsurf/rational.hpp>

#include <algorithm>
#include <utility>
#include <vector>

namespace ellsurf {

struct Poly {
    std::vector<Rat> c;  // c[i] multiplies t^i; no trailing zeros

    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly{}; }
    static Poly one() { return constant(Rat(1)); }
    static Poly constant(const Rat& a) {
        Poly p;
        if (a != 0) p.c.push_back(a);
        return p;
    }
    // the coordinate itself
    static Poly t() { return Poly({Rat(0), Rat(1)}); }
    // a*t^k
    static Poly monomial(const Rat& a, int k) {
        Poly p;
        if (a != 0) {
            p.c.assign(k + 1, Rat(0));
            p.c[k] = a;
        }
        return p;
    }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }


    const Rat& lead() const {
        if (is_zero()) throw Error("zero-poly", "leading coefficient of zero polynomial");
        return c.back();
    }

    Rat coeff(int i) const {
        if (i < 0 || i > deg()) return Rat(0);
        return c[i];
    }

    Rat eval(const Rat& x) const {  // Horner
        Rat acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
};

// ----- ring operations -----

inline Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.normalize();
    return r;
}

inline Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

inline Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

inline Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.normalize();
    return r;
}

inline Poly operator*(const Rat& s, const Poly& a) {
    if (s == 0) return Poly::zero();
    Poly r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

inline Poly operator*(const Poly& a, const Rat& s) { return s * a; }

inline Poly poly_pow(const Poly& a, unsigned e) {
    Poly acc = Poly::one(), base = a;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("division-by-zero", "polynomial division by zero");
    Poly q, r = a;
    if (r.deg() >= b.deg()) q.c.assign(r.deg() - b.deg() + 1, Rat(0));
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int k = r.deg() - b.deg();
        Rat f = r.lead() / b.lead();
        q.c[k] += f;
        // r -= f * t^k * b, done in place
        for (int i = 0; i <= b.deg(); ++i) r.c[i + k] -= f * b.c[i];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

inline Poly poly_div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw Error("inexact-division", "polynomial division left a remainder");
    return q;
}

inline Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

inline Poly monic(const Poly& a) {
    if (a.is_zero()) return a;
    return (Rat(1) / a.lead()) * a;
}

// gcd, returned monic (or zero when both inputs are zero)
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline Poly derivative(const Poly& a) {
    Poly r;
    for (int i = 1; i <= a.deg(); ++i) r.c.push_back(Rat(i) * a.c[i]);
    r.normalize();
    return r;
}

// s^k * a(1/s): coefficient reversal against a weight k >= deg a.  This is
// the local coordinate change used at the place at infinity.
inline Poly poly_reverse(const Poly& a, int k) {
    if (a.is_zero()) return a;
    if (k < a.deg()) throw Error("internal", "reverse weight below degree");
    Poly r;
    r.c.assign(k + 1, Rat(0));
    for (int i = 0; i <= a.deg(); ++i) r.c[k - i] = a.c[i];
    r.normalize();
    return r;
}

// ----- ordering and printing -----

// Canonical order: by degree, then lexicographic on coefficients from the top.
inline bool poly_less(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = a.deg(); i >= 0; --i) {
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    }
    return false;
}

inline std::string poly_str(const Poly& p, const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.deg(); i >= 0; --i) {
        const Rat& a = p.c[i];
        if (a == 0) continue;
        Rat mag = a > 0 ? a : Rat(-a);
        std::string term;
        if (i == 0) {
            term = rat_str(mag);
        } else {
            std::string pow = (i == 1) ? var : var + "^" + std::to_string(i);
            term = (mag == 1) ? pow : rat_str(mag) + "*" + pow;
        }
        if (out.empty())
            out = (a < 0 ? "-" : "") + term;
        else
            out += (a < 0 ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace ellsurf
