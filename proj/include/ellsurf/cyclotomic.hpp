// Torsion points of an elliptic curve with extra automorphisms, presented
// through the lattice bases used for the three relevant curves:
//   Generic2:   any curve, basis (e1, e2),        mu = -1        (order 2)
//   Gaussian:   E_i = C/Z[i], basis (1, i),       mu = i         (order 4)
//   Eisenstein: E_rho = C/Z[omega], basis (1, omega), mu = zeta6 (order 6)
// A torsion point is a pair of rationals mod 1 in that basis; the primitive
// root mu acts by an integer 2x2 matrix.  Fixed points of mu^k composed with
// a translation are found exactly by solving (1 - mu^k) z = c mod Z^2.
#pragma once

#include <ellsurf/rational.hpp>

#include <array>
#include <vector>

namespace ellsurf {

enum class Ring { Generic2, Gaussian, Eisenstein };

inline int ring_root_order(Ring r) {
    switch (r) {
        case Ring::Generic2: return 2;
        case Ring::Gaussian: return 4;
        case Ring::Eisenstein: return 6;
    }
    throw Error("internal", "unknown ring tag");
}

inline std::string ring_name(Ring r) {
    switch (r) {
        case Ring::Generic2: return "generic";
        case Ring::Gaussian: return "gaussian";
        case Ring::Eisenstein: return "eisenstein";
    }
    throw Error("internal", "unknown ring tag");
}

// Matrix of multiplication by mu on column coordinates in the stated basis.
//   Generic2:  -1 -> -I
//   Gaussian:   i * (a + b i)      = -b + a i
//   Eisenstein: zeta6 * (a + b w)  = (a - b) + a w   (zeta6 = 1 + w, w^2 = -1 - w)
using Mat2 = std::array<std::array<long, 2>, 2>;

inline Mat2 root_matrix(Ring r) {
    switch (r) {
        case Ring::Generic2: return {{{-1, 0}, {0, -1}}};
        case Ring::Gaussian: return {{{0, -1}, {1, 0}}};
        case Ring::Eisenstein: return {{{1, -1}, {1, 0}}};
    }
    throw Error("internal", "unknown ring tag");
}

inline Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

inline Mat2 root_matrix_pow(Ring ring, int k) {
    int r = ring_root_order(ring);
    k = ((k % r) + r) % r;
    Mat2 acc{{{1, 0}, {0, 1}}};
    Mat2 m = root_matrix(ring);
    while (k--) acc = mat2_mul(acc, m);
    return acc;
}

// ----- torsion points -----

struct TorsionPoint {
    Ring ring = Ring::Generic2;
    Rat a, b;  // coordinates mod 1, normalized to [0, 1)

    bool operator==(const TorsionPoint& o) const {
        return ring == o.ring && a == o.a && b == o.b;
    }
    bool is_zero() const { return a == 0 && b == 0; }
};

inline TorsionPoint tp(Ring ring, const Rat& a, const Rat& b) {
    return TorsionPoint{ring, mod1(a), mod1(b)};
}

inline bool tp_less(const TorsionPoint& x, const TorsionPoint& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
}

inline TorsionPoint tp_add(const TorsionPoint& x, const TorsionPoint& y) {
    return tp(x.ring, x.a + y.a, x.b + y.b);
}

inline TorsionPoint tp_neg(const TorsionPoint& x) { return tp(x.ring, -x.a, -x.b); }

inline TorsionPoint tp_sub(const TorsionPoint& x, const TorsionPoint& y) {
    return tp_add(x, tp_neg(y));
}

// multiplication by mu^k
inline TorsionPoint tp_mul_root(const TorsionPoint& x, int k) {
    Mat2 m = root_matrix_pow(x.ring, k);
    return tp(x.ring, Rat(m[0][0]) * x.a + Rat(m[0][1]) * x.b,
              Rat(m[1][0]) * x.a + Rat(m[1][1]) * x.b);
}

// order in the torsion group = lcm of coordinate denominators
inline long tp_order(const TorsionPoint& x) {
    return lcm_long(int_to_long(rat_den(x.a)), int_to_long(rat_den(x.b)));
}

inline std::string tp_str(const TorsionPoint& x) {
    return "(" + rat_str(x.a) + ", " + rat_str(x.b) + ")";
}

// ----- fixed points of z -> mu^k z + c on the torsion of E -----

struct FixedPoints {
    bool all_fixed = false;            // the map is the identity
    std::vector<TorsionPoint> points;  // sorted; empty if no solution
};

// |N(1 - mu^k)| = |det(I - M^k)|: the number of fixed points when nonzero.
inline long one_minus_root_norm(Ring ring, int k) {
    Mat2 m = root_matrix_pow(ring, k);
    long a = 1 - m[0][0], b = -m[0][1], c = -m[1][0], d = 1 - m[1][1];
    long det = a * d - b * c;
    return det < 0 ? -det : det;
}

inline FixedPoints solve_fixed_points(Ring ring, int k, const TorsionPoint& c) {
    int r = ring_root_order(ring);
    k = ((k % r) + r) % r;
    if (k == 0) {
        // translation: fixed points exist only for the identity
        if (c.is_zero()) return FixedPoints{true, {}};
        return FixedPoints{false, {}};
    }
    // Solve A z = c mod Z^2 with A = I - M^k (det != 0 since mu^k != 1).
    Mat2 m = root_matrix_pow(ring, k);
    long A[2][2] = {{1 - m[0][0], -m[0][1]}, {-m[1][0], 1 - m[1][1]}};
    long det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
    long adet = det < 0 ? -det : det;
    // z = A^{-1}(c + m) for m in Z^2; the image of A^{-1} Z^2 in (Q/Z)^2 is
    // covered by m ranging over [0, |det|)^2, with duplicates removed.
    std::vector<TorsionPoint> sols;
    for (long m0 = 0; m0 < adet; ++m0) {
        for (long m1 = 0; m1 < adet; ++m1) {
            Rat c0 = c.a + m0, c1 = c.b + m1;
            Rat z0 = (Rat(A[1][1]) * c0 - Rat(A[0][1]) * c1) / det;
            Rat z1 = (Rat(-A[1][0]) * c0 + Rat(A[0][0]) * c1) / det;
            TorsionPoint z = tp(ring, z0, z1);
            bool seen = false;
            for (const auto& s : sols)
                if (s == z) { seen = true; break; }
            if (!seen) sols.push_back(z);
        }
    }
    std::sort(sols.begin(), sols.end(), tp_less);
    return FixedPoints{false, sols};
}

}  // namespace ellsurf
