// Genus counts for the modular curves X_1(N) and X(N) via the standard
// multiplicative index functions, and the derived torsion-order bounds.
// Inequalities against pi^2 are decided by certified rational interval
// enclosures with a two-level precision escalation; they never round.
#pragma once

#include <ellsurf/rational.hpp>

#include <optional>
#include <vector>

namespace ellsurf {

inline std::vector<std::pair<long, int>> factorize(long n) {
    if (n <= 0) throw Error("bad-argument", "factorization needs a positive integer");
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// ----- the multiplicative building blocks -----

// s(N) = prod over p | N of (1 - 1/p^2); s(N) N^2 = |SL_2(Z/N)| / N  up to
// the usual normalizations.
inline Rat s_func(long N) {
    if (N < 1) throw Error("bad-argument", "s(N) needs N >= 1");
    Rat s(1);
    for (const auto& [p, e] : factorize(N)) {
        (void)e;
        s *= Rat(p * p - 1, p * p);
    }
    return s;
}

// u(N): multiplicative with u(p^n) = p^(n-2) (p-1) ((n+1)p - n + 1); counts
// the weighted cusps entering the genus formula for X_1(N).
inline Rat u_func(long N) {
    if (N < 1) throw Error("bad-argument", "u(N) needs N >= 1");
    Rat u(1);
    for (const auto& [p, e] : factorize(N)) {
        Rat pn = rat_pow(Rat(p), static_cast<unsigned long>(e));
        Rat val = pn / Rat(p * p) * Rat(p - 1) * Rat((e + 1) * p - e + 1);
        u *= val;
    }
    return u;
}

// t(N) = u(N) / (s(N) N^2); for prime powers t(p^n) = ((n+1)p-(n-1)) / (p^n (p+1)).
inline Rat t_func(long N) {
    if (N < 2) throw Error("bad-argument", "t(N) needs N >= 2");
    return u_func(N) / (s_func(N) * Rat(N) * Rat(N));
}

// ----- genus formulas -----

// genus of X(N) for N >= 3: g = 1 + s(N) N^2 (N - 6) / 24
inline long genus_g(long N) {
    if (N < 3) throw Error("bad-argument", "genus of X(N) implemented for N >= 3");
    Rat g = Rat(1) + s_func(N) * Rat(N) * Rat(N) * Rat(N - 6) / Rat(24);
    return rat_to_long(g);
}

// genus of X_1(N): g1 = 1 + s(N) N^2 / 24 - u(N) / 4, valid for N >= 5
inline long genus_g1(long N) {
    if (N < 5) throw Error("bad-argument", "formula valid for N >= 5 only");
    Rat g = Rat(1) + s_func(N) * Rat(N) * Rat(N) / Rat(24) - u_func(N) / Rat(4);
    if (!rat_is_int(g))
        throw Error("internal", "genus formula produced a non-integer");
    return rat_to_long(g);
}

// ----- certified comparisons against pi^2 -----

// Two nested rational enclosures of pi^2; the second is used only when the
// first cannot separate the inequality.
struct PiSqInterval {
    Rat lo, hi;
};

inline const std::vector<PiSqInterval>& pi_sq_levels() {
    static const std::vector<PiSqInterval> levels = {
        {rat_frac(Int(9869604), Int(1000000)), rat_frac(Int(9869605), Int(1000000))},
        {rat_frac(Int("9869604401089358"), Int("1000000000000000")),
         rat_frac(Int("9869604401089359"), Int("1000000000000000"))},
    };
    return levels;
}

enum class Verdict { True, False, Indeterminate };

// decide  a < c * pi^2  for rationals a, c with c > 0
inline Verdict less_than_pi_sq_multiple(const Rat& a, const Rat& c) {
    for (const auto& lvl : pi_sq_levels()) {
        if (a < c * lvl.lo) return Verdict::True;
        if (a >= c * lvl.hi) return Verdict::False;
    }
    return Verdict::Indeterminate;
}

// g1(N) > N^2 / (12 pi^2) - 2, i.e. N^2 < 12 (g1(N) + 2) pi^2
inline bool check_g1_lower(long N) {
    long g1 = genus_g1(N);
    Rat lhs = Rat(N) * Rat(N);
    Rat c = Rat(12) * Rat(g1 + 2);
    switch (less_than_pi_sq_multiple(lhs, c)) {
        case Verdict::True: return true;
        case Verdict::False: return false;
        case Verdict::Indeterminate:
            throw Error("indeterminate", "indeterminate — tighten interval",
                        {{"N", std::to_string(N)}});
    }
    throw Error("internal", "unreachable");
}

// ----- torsion-order bounds -----

struct TorsionBound {
    long bound = 0;               // largest order consistent with the bound
    bool isotrivial = false;
    std::optional<long> sharp;    // known sharp value, when tabulated
};

// Largest integer strictly below 12 pi^2 (g + 2); isotrivial fibrations are
// capped at 4 outright.  Sharp values are tabulated for small genus.
inline TorsionBound mw_torsion_bound(long g, bool isotrivial) {
    if (g < 0) throw Error("bad-argument", "genus must be >= 0");
    TorsionBound tb;
    tb.isotrivial = isotrivial;
    if (isotrivial) {
        tb.bound = 4;
        return tb;
    }
    Rat c = Rat(12) * Rat(g + 2);
    for (const auto& lvl : pi_sq_levels()) {
        Int m = rat_floor(c * lvl.hi);
        // certify m < c pi^2 <= m + 1
        Rat mr{m}, mr1{m + 1};
        if (mr < c * lvl.lo && mr1 >= c * lvl.hi) {
            tb.bound = int_to_long(m);
            static const long sharp_table[] = {25, 36, 36, 49, 50};
            if (g <= 4) tb.sharp = sharp_table[g];
            return tb;
        }
    }
    throw Error("indeterminate", "indeterminate — tighten interval",
                {{"g", std::to_string(g)}});
}

// ----- per-prime necessary conditions for torsion of an elliptic surface -----

struct PrimeConditionReport {
    bool pass = true;
    std::vector<std::string> checks;      // human-readable lines
    std::vector<std::string> violations;  // subset that failed
};

// For a single factor Z/p (p > 5):  p_g >= (p^2-1)/12 - (p-1)/2  and
// (p^2-1)/24 | chi.  For (Z/p)^2 (p >= 3):  p_g >= (p-3)(p^2-1)/12 and
// p (p^2-1)/24 | chi.  Primes 2, 3, 5 impose nothing in the single case.
inline PrimeConditionReport prime_conditions(long p, long chi, long p_g, bool square) {
    if (p < 2 || factorize(p).size() != 1 || factorize(p)[0].second != 1)
        throw Error("bad-argument", "p must be prime");
    PrimeConditionReport r;
    auto check = [&](bool ok, const std::string& text) {
        r.checks.push_back(text + (ok ? "  [ok]" : "  [violated]"));
        if (!ok) {
            r.pass = false;
            r.violations.push_back(text);
        }
    };
    if (!square) {
        if (p <= 5) {
            r.checks.push_back("Z/" + std::to_string(p) + ": no constraint for p <= 5");
            return r;
        }
        Rat pg_min = rat_frac(Int(p * p - 1), Int(12)) - rat_frac(Int(p - 1), Int(2));
        check(Rat(p_g) >= pg_min,
              "p_g >= (p^2-1)/12 - (p-1)/2 = " + rat_str(pg_min));
        Rat step = rat_frac(Int(p * p - 1), Int(24));
        check(rat_is_int(Rat(chi) / step),
              "chi divisible by (p^2-1)/24 = " + rat_str(step));
    } else {
        if (p < 3) throw Error("bad-argument", "(Z/p)^2 condition needs p >= 3");
        Rat pg_min = rat_frac(Int((p - 3) * (p * p - 1)), Int(12));
        check(Rat(p_g) >= pg_min,
              "p_g >= (p-3)(p^2-1)/12 = " + rat_str(pg_min));
        Rat step = rat_frac(Int(p * (p * p - 1)), Int(24));
        check(rat_is_int(Rat(chi) / step),
              "chi divisible by p(p^2-1)/24 = " + rat_str(step));
    }
    return r;
}

}  // namespace ellsurf
