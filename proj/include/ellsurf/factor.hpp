// Factorization of univariate polynomials over Q, exact and deterministic in
// its results.  Strategy: Yun squarefree decomposition, then for each
// squarefree primitive integer part a single-prime Zassenhaus round: pick one
// prime P exceeding twice the Mignotte coefficient bound, factor mod P
// (distinct-degree + Cantor-Zassenhaus splitting), and recombine factor
// subsets by trial division over Z.  Degrees in this library stay small
// (discriminants of low-degree models), so no Hensel lifting is needed.
#pragma once

#include <ellsurf/polynomial.hpp>

#include <utility>
#include <vector>

namespace ellsurf {

struct Factorization {
    Rat lead;                                 // overall constant
    std::vector<std::pair<Poly, int>> parts;  // (monic irreducible, multiplicity), sorted
};

namespace detail {

// ----- integer polynomials (index = degree, no trailing zeros) -----

using ZPoly = std::vector<Int>;

inline void zp_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int zp_deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly zp_to_poly(const ZPoly& a) {
    std::vector<Rat> c;
    c.reserve(a.size());
    for (const auto& x : a) c.emplace_back(x);
    return Poly(std::move(c));
}

inline Int zp_content(const ZPoly& a) {
    Int g(0);
    for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;  // zero only for the zero polynomial
}

// primitive part with positive leading coefficient
inline ZPoly zp_primitive(ZPoly a) {
    zp_trim(a);
    if (a.empty()) return a;
    Int g = zp_content(a);
    if (a.back() < 0) g = -g;
    for (auto& x : a) x /= g;
    return a;
}

// Clear denominators of a rational polynomial; result is primitive with
// positive leading coefficient and the same roots.
inline ZPoly zp_from_poly(const Poly& p) {
    Int l(1);
    for (const auto& c : p.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly a;
    a.reserve(p.c.size());
    for (const auto& c : p.c) a.push_back(Int(c.get_num() * (l / c.get_den())));
    return zp_primitive(std::move(a));
}

// ----- arithmetic mod an odd prime p -----

inline Int md(const Int& x, const Int& p) {
    Int r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    return r;
}

inline ZPoly mp_reduce(ZPoly a, const Int& p) {
    for (auto& x : a) x = md(x, p);
    zp_trim(a);
    return a;
}

inline ZPoly mp_sub(const ZPoly& a, const ZPoly& b, const Int& p) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = md(r[i] - b[i], p);
    for (size_t i = b.size(); i < r.size(); ++i) r[i] = md(r[i], p);
    zp_trim(r);
    return r;
}

inline ZPoly mp_mul(const ZPoly& a, const ZPoly& b, const Int& p) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (auto& x : r) x = md(x, p);
    zp_trim(r);
    return r;
}

inline Int mp_inv(const Int& x, const Int& p) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()) == 0)
        throw Error("internal", "non-invertible residue during modular factorization");
    return r;
}

inline ZPoly mp_monic(ZPoly a, const Int& p) {
    if (a.empty()) return a;
    Int inv = mp_inv(a.back(), p);
    for (auto& x : a) x = md(x * inv, p);
    return a;
}

// division with remainder; b must be monic mod p
inline std::pair<ZPoly, ZPoly> mp_divmod(ZPoly a, const ZPoly& b, const Int& p) {
    ZPoly q;
    if (zp_deg(a) >= zp_deg(b)) q.assign(zp_deg(a) - zp_deg(b) + 1, Int(0));
    while (zp_deg(a) >= zp_deg(b)) {
        int k = zp_deg(a) - zp_deg(b);
        Int f = a.back();
        q[k] = f;
        for (int i = 0; i <= zp_deg(b); ++i) a[i + k] = md(a[i + k] - f * b[i], p);
        zp_trim(a);
    }
    zp_trim(q);
    return {q, a};
}

inline ZPoly mp_mod(const ZPoly& a, const ZPoly& b, const Int& p) {
    return mp_divmod(a, b, p).second;
}

inline ZPoly mp_gcd(ZPoly a, ZPoly b, const Int& p) {
    a = mp_monic(std::move(a), p);
    b = mp_monic(std::move(b), p);
    while (!b.empty()) {
        ZPoly r = mp_mod(a, b, p);
        a = std::move(b);
        b = mp_monic(std::move(r), p);
    }
    return a;
}

inline ZPoly mp_powmod(const ZPoly& base, const Int& e, const ZPoly& f, const Int& p) {
    ZPoly acc{Int(1)};
    ZPoly b = mp_mod(base, f, p);
    size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = nbits; i-- > 0;) {
        acc = mp_mod(mp_mul(acc, acc, p), f, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = mp_mod(mp_mul(acc, b, p), f, p);
    }
    return acc;
}

inline ZPoly mp_derivative(const ZPoly& a, const Int& p) {
    ZPoly r;
    for (int i = 1; i <= zp_deg(a); ++i) r.push_back(md(Int(i) * a[i], p));
    zp_trim(r);
    return r;
}

// ----- factorization mod p of a monic squarefree polynomial -----

struct ModRng {
    gmp_randclass state{gmp_randinit_default};
    explicit ModRng(unsigned long seed) { state.seed(seed); }
    ZPoly poly_below(int degree, const Int& p) {
        ZPoly r(degree, Int(0));
        for (auto& x : r) x = state.get_z_range(p);
        zp_trim(r);
        return r;
    }
};

inline void mp_equal_degree_split(const ZPoly& f, int d, const Int& p, ModRng& rng,
                                  std::vector<ZPoly>& out) {
    if (zp_deg(f) == d) {
        out.push_back(f);
        return;
    }
    // Cantor-Zassenhaus: gcd(a^((p^d-1)/2) - 1, f) splits with probability ~1/2
    Int e;
    mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    for (;;) {
        ZPoly a = rng.poly_below(zp_deg(f), p);
        if (zp_deg(a) < 1) continue;
        ZPoly g = mp_gcd(a, f, p);
        if (zp_deg(g) <= 0) {
            ZPoly b = mp_powmod(a, e, f, p);
            b = mp_sub(b, ZPoly{Int(1)}, p);
            g = mp_gcd(b, f, p);
        }
        if (zp_deg(g) > 0 && zp_deg(g) < zp_deg(f)) {
            mp_equal_degree_split(g, d, p, rng, out);
            mp_equal_degree_split(mp_divmod(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

inline std::vector<ZPoly> mp_factor_squarefree(ZPoly f, const Int& p, ModRng& rng) {
    std::vector<ZPoly> out;
    f = mp_monic(std::move(f), p);
    ZPoly x{Int(0), Int(1)};
    ZPoly h = x;  // will hold x^(p^d) mod f
    int d = 0;
    while (zp_deg(f) >= 2 * (d + 1)) {
        ++d;
        h = mp_powmod(h, p, f, p);
        ZPoly g = mp_gcd(mp_sub(h, x, p), f, p);
        if (zp_deg(g) > 0) {
            mp_equal_degree_split(g, d, p, rng, out);
            f = mp_divmod(f, g, p).first;
            h = mp_mod(h, f, p);
        }
    }
    if (zp_deg(f) > 0) out.push_back(f);
    return out;
}

// ----- Zassenhaus over Z for a primitive squarefree polynomial -----

// Coefficient bound: any irreducible factor h of G, rescaled by lc(G),
// satisfies ||lc(G) h||_inf <= lc(G) * 2^n * ||G||_2 (Mignotte); we round up
// generously since the prime is cheap.
inline Int zassenhaus_bound(const ZPoly& g) {
    Int norm2sq(0);
    for (const auto& x : g) norm2sq += x * x;
    Int norm2 = sqrt(norm2sq) + 1;
    Int b = g.back() * norm2 * (zp_deg(g) + 1);
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(zp_deg(g) + 1));
    return b;
}

inline Int symmetric_rep(const Int& x, const Int& p) {
    return (x * 2 > p) ? Int(x - p) : x;
}

inline void zassenhaus_squarefree(ZPoly g, std::vector<ZPoly>& out) {
    zp_trim(g);
    if (zp_deg(g) < 1) return;
    if (zp_deg(g) == 1) {
        out.push_back(zp_primitive(std::move(g)));
        return;
    }
    // choose a prime beyond the recombination bound, not dividing lc or disc
    Int p = zassenhaus_bound(g) * 2 + 1;
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (md(g.back(), p) == 0) continue;
        ZPoly f = mp_reduce(g, p);
        if (zp_deg(mp_gcd(f, mp_derivative(f, p), p)) == 0) break;
    }

    ModRng rng(20260819);  // fixed seed: results are canonical regardless
    std::vector<ZPoly> mods = mp_factor_squarefree(mp_reduce(g, p), p, rng);

    // subset recombination by increasing cardinality
    Poly current = zp_to_poly(g);
    std::vector<int> live(mods.size());
    for (size_t i = 0; i < mods.size(); ++i) live[i] = static_cast<int>(i);

    auto try_subset = [&](const std::vector<int>& subset) -> bool {
        ZPoly cand{Int(md(Int(current.lead().get_num()), p))};
        for (int idx : subset) cand = mp_mul(cand, mods[idx], p);
        for (auto& x : cand) x = symmetric_rep(x, p);
        zp_trim(cand);
        ZPoly h = zp_primitive(std::move(cand));
        if (zp_deg(h) < 1) return false;
        Poly hq = zp_to_poly(h);
        auto [q, r] = poly_divmod(current, hq);
        if (!r.is_zero()) return false;
        out.push_back(std::move(h));
        current = q;
        return true;
    };

    size_t size = 1;
    while (2 * size <= live.size()) {
        // iterate over subsets of `live` of the given cardinality
        std::vector<int> pick(size);
        bool found = false;
        std::vector<int> chosen;
        auto rec = [&](auto&& self, size_t from, size_t depth) -> bool {
            if (depth == size) {
                std::vector<int> subset;
                for (size_t k = 0; k < size; ++k) subset.push_back(live[pick[k]]);
                if (try_subset(subset)) {
                    chosen = pick;
                    return true;
                }
                return false;
            }
            for (size_t i = from; i + (size - depth) <= live.size(); ++i) {
                pick[depth] = static_cast<int>(i);
                if (self(self, i + 1, depth + 1)) return true;
            }
            return false;
        };
        found = rec(rec, 0, 0);
        if (found) {
            for (auto it = chosen.rbegin(); it != chosen.rend(); ++it)
                live.erase(live.begin() + *it);
        } else {
            ++size;
        }
    }
    if (current.deg() > 0) out.push_back(zp_from_poly(current));
}

}  // namespace detail

// ----- public entry point -----

inline Factorization factor_poly(const Poly& input) {
    if (input.is_zero()) throw Error("factor-zero", "cannot factor the zero polynomial");
    Factorization fac;
    fac.lead = input.lead();
    Poly a = monic(input);
    if (a.deg() == 0) return fac;

    // Yun squarefree decomposition: a = prod_i part_i^i with part_i squarefree
    std::vector<std::pair<Poly, int>> squarefree;
    {
        Poly da = derivative(a);
        Poly g = poly_gcd(a, da);
        Poly b = poly_div_exact(a, g);
        Poly c = poly_div_exact(da, g);
        Poly d = c - derivative(b);
        int i = 1;
        while (b.deg() > 0) {
            Poly h = poly_gcd(b, d);
            if (h.deg() > 0) squarefree.emplace_back(h, i);
            b = poly_div_exact(b, h);
            c = poly_div_exact(d, h);
            d = c - derivative(b);
            ++i;
        }
    }

    for (const auto& [part, mult] : squarefree) {
        std::vector<detail::ZPoly> irr;
        detail::zassenhaus_squarefree(detail::zp_from_poly(part), irr);
        for (const auto& h : irr) fac.parts.emplace_back(monic(detail::zp_to_poly(h)), mult);
    }

    std::sort(fac.parts.begin(), fac.parts.end(),
              [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });

    // exactness audit: the factorization must re-expand to the input
    Poly check = Poly::constant(fac.lead);
    for (const auto& [f, m] : fac.parts) check = check * poly_pow(f, static_cast<unsigned>(m));
    if (check != input) throw Error("internal", "factor recombination mismatch");
    return fac;
}

}  // namespace ellsurf
