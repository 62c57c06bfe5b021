// Kodaira fiber types from valuations of (c4, c6, Delta) in residue
// characteristic zero, with the per-type ledger (Euler number, component
// count, root-lattice label, component group) and the surface-level
// invariants they determine through e = 12 chi.
#pragma once

#include <ellsurf/weierstrass.hpp>

#include <string>
#include <vector>

namespace ellsurf {

enum class KTag { I, Istar, II, III, IV, IVstar, IIIstar, IIstar };

struct KodairaType {
    KTag tag = KTag::I;
    int n = 0;  // the index for I_n / I_n*; 0 otherwise

    bool operator==(const KodairaType& o) const { return tag == o.tag && n == o.n; }
};

inline std::string ktype_str(const KodairaType& k) {
    switch (k.tag) {
        case KTag::I: return "I" + std::to_string(k.n);
        case KTag::Istar: return "I" + std::to_string(k.n) + "*";
        case KTag::II: return "II";
        case KTag::III: return "III";
        case KTag::IV: return "IV";
        case KTag::IVstar: return "IV*";
        case KTag::IIIstar: return "III*";
        case KTag::IIstar: return "II*";
    }
    throw Error("internal", "unknown Kodaira tag");
}

inline bool ktype_additive(const KodairaType& k) { return k.tag != KTag::I; }

inline int euler_number(const KodairaType& k) {
    switch (k.tag) {
        case KTag::I: return k.n;
        case KTag::Istar: return k.n + 6;
        case KTag::II: return 2;
        case KTag::III: return 3;
        case KTag::IV: return 4;
        case KTag::IVstar: return 8;
        case KTag::IIIstar: return 9;
        case KTag::IIstar: return 10;
    }
    throw Error("internal", "unknown Kodaira tag");
}

inline int component_count(const KodairaType& k) {
    switch (k.tag) {
        case KTag::I: return k.n == 0 ? 1 : k.n;
        case KTag::Istar: return k.n + 5;
        case KTag::II: return 1;
        case KTag::III: return 2;
        case KTag::IV: return 3;
        case KTag::IVstar: return 7;
        case KTag::IIIstar: return 8;
        case KTag::IIstar: return 9;
    }
    throw Error("internal", "unknown Kodaira tag");
}

// Root lattice spanned by the non-identity components ("" when irreducible).
inline std::string dynkin_label(const KodairaType& k) {
    switch (k.tag) {
        case KTag::I: return k.n <= 1 ? (k.n == 1 ? "A0" : "") : "A" + std::to_string(k.n - 1);
        case KTag::Istar: return "D" + std::to_string(k.n + 4);
        case KTag::II: return "A0";
        case KTag::III: return "A1";
        case KTag::IV: return "A2";
        case KTag::IVstar: return "E6";
        case KTag::IIIstar: return "E7";
        case KTag::IIstar: return "E8";
    }
    throw Error("internal", "unknown Kodaira tag");
}

// Component group of the smooth locus, as invariant factors (d1, d2) with
// d2 | d1; (1, 1) means trivial.
inline std::pair<long, long> component_group(const KodairaType& k) {
    switch (k.tag) {
        case KTag::I: return {k.n == 0 ? 1 : k.n, 1};
        case KTag::Istar: return (k.n % 2 == 0) ? std::pair<long, long>{2, 2}
                                                : std::pair<long, long>{4, 1};
        case KTag::II: return {1, 1};
        case KTag::III: return {2, 1};
        case KTag::IV: return {3, 1};
        case KTag::IVstar: return {3, 1};
        case KTag::IIIstar: return {2, 1};
        case KTag::IIstar: return {1, 1};
    }
    throw Error("internal", "unknown Kodaira tag");
}

// ----- classification at one place -----

struct FiberRecord {
    Place place;
    KodairaType type;
    int degree = 1;        // degree of the place (number of geometric points)
    int euler = 0;         // per geometric point
    int components = 0;    // per geometric point
    std::string dynkin;
    std::pair<long, long> comp_group{1, 1};
    bool additive = false;
    long v_c4 = 0, v_c6 = 0, v_delta = 0;  // minimal valuations (−1: section is zero)
};

namespace detail {

// valuation triples with "+infinity" encoded as a large sentinel internally
constexpr long kValInf = 1L << 40;

struct ValTriple {
    long c4, c6, delta;
};

}  // namespace detail

inline KodairaType kodaira_from_valuations(long vc4, long vc6, long vdelta,
                                           long* out_shift = nullptr) {
    // minimalize: strip the largest twist by (4, 6, 12) that keeps all
    // valuations non-negative
    auto floordiv = [](long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    long m = floordiv(vdelta, 12);
    if (vc4 < detail::kValInf) m = std::min(m, floordiv(vc4, 4));
    if (vc6 < detail::kValInf) m = std::min(m, floordiv(vc6, 6));
    if (m > 0) {
        if (vc4 < detail::kValInf) vc4 -= 4 * m;
        if (vc6 < detail::kValInf) vc6 -= 6 * m;
        vdelta -= 12 * m;
    }
    if (out_shift) *out_shift = m > 0 ? m : 0;

    // residue characteristic zero: the valuation triple decides everything
    if (vdelta == 0) return KodairaType{KTag::I, 0};
    if (vc4 == 0) return KodairaType{KTag::I, static_cast<int>(vdelta)};
    // additive types
    if (vdelta == 2) return KodairaType{KTag::II, 0};
    if (vdelta == 3) return KodairaType{KTag::III, 0};
    if (vdelta == 4) return KodairaType{KTag::IV, 0};
    if (vdelta == 6 && vc4 >= 2 && vc6 >= 3) return KodairaType{KTag::Istar, 0};
    if (vc4 == 2 && vc6 == 3 && vdelta >= 7)
        return KodairaType{KTag::Istar, static_cast<int>(vdelta - 6)};
    if (vdelta == 8) return KodairaType{KTag::IVstar, 0};
    if (vdelta == 9) return KodairaType{KTag::IIIstar, 0};
    if (vdelta == 10) return KodairaType{KTag::IIstar, 0};
    throw Error("internal", "non-minimal residual valuation triple");
}

inline FiberRecord classify_fiber(const ReducedInvariants& inv, const Place& p) {
    detail::ValTriple raw{};
    auto take = [&](const Poly& f, int weight) -> long {
        if (f.is_zero()) return detail::kValInf;
        if (p.at_infinity) return static_cast<long>(weight) * inv.twist_k - f.deg();
        return valuation(f, p).v;
    };
    raw.c4 = take(inv.c4, 4);
    raw.c6 = take(inv.c6, 6);
    raw.delta = take(inv.delta, 12);

    long shift = 0;
    KodairaType type = kodaira_from_valuations(raw.c4, raw.c6, raw.delta, &shift);

    FiberRecord f;
    f.place = p;
    f.type = type;
    f.degree = p.degree();
    f.euler = euler_number(type);
    f.components = component_count(type);
    f.dynkin = dynkin_label(type);
    f.comp_group = component_group(type);
    f.additive = (type.tag != KTag::I);
    f.v_c4 = raw.c4 >= detail::kValInf ? -1 : raw.c4 - 4 * shift;
    f.v_c6 = raw.c6 >= detail::kValInf ? -1 : raw.c6 - 6 * shift;
    f.v_delta = raw.delta - 12 * shift;
    return f;
}

// ----- whole-surface classification -----

struct SurfaceData {
    std::vector<FiberRecord> fibers;  // singular fibers only, canonically ordered
    int base_genus = 0;
    long e = 0;    // topological Euler number
    long chi = 0;  // holomorphic Euler characteristic, e = 12 chi
    long q = 0, p_g = 0, b2 = 0, h11 = 0;
    long triv_rank = 0;  // rank of the trivial part of the Neron-Severi group
    bool product_case = false;  // chi = 0: no singular fibers at all
};

// Assemble the global invariants from a list of singular fibers.  Shared by
// the Weierstrass classifier and by surfaces given directly as fiber data.
inline SurfaceData surface_from_fibers(std::vector<FiberRecord> fibers, int base_genus) {
    SurfaceData s;
    s.base_genus = base_genus;
    std::sort(fibers.begin(), fibers.end(),
              [](const FiberRecord& a, const FiberRecord& b) { return place_less(a.place, b.place); });
    s.fibers = std::move(fibers);

    for (const auto& f : s.fibers) s.e += static_cast<long>(f.degree) * f.euler;
    if (s.e % 12 != 0)
        throw Error("inconsistent-fiber-ledger",
                    "total Euler number " + std::to_string(s.e) + " is not divisible by 12");
    s.chi = s.e / 12;

    long g = s.base_genus;
    if (s.chi > 0) {
        s.q = g;
        s.p_g = s.chi - 1 + s.q;
        s.b2 = 12 * s.chi - 2 + 4 * s.q;
        s.h11 = s.b2 - 2 * s.p_g;
    } else {
        // chi = 0 forces a smooth isotrivial family: the product of the base
        // with the generic fiber (no singular fibers exist)
        s.product_case = true;
        s.q = g + 1;
        s.p_g = g;
        s.b2 = 4 * g + 2;
        s.h11 = 2 * g + 2;
    }

    s.triv_rank = 2;
    for (const auto& f : s.fibers) s.triv_rank += static_cast<long>(f.degree) * (f.components - 1);
    if (s.triv_rank > s.h11)
        throw Error("inconsistent-fiber-data",
                    "trivial lattice rank exceeds h^{1,1}");
    return s;
}

inline SurfaceData classify_all(const WeierstrassModel& w) {
    ReducedInvariants inv = reduce_invariants(w);

    std::vector<FiberRecord> fibers;
    for (const auto& [pl, mult] : finite_places_of(inv.delta)) {
        (void)mult;
        FiberRecord f = classify_fiber(inv, pl);
        if (!(f.type.tag == KTag::I && f.type.n == 0)) fibers.push_back(f);
    }
    {
        FiberRecord f = classify_fiber(inv, place_infinity());
        if (!(f.type.tag == KTag::I && f.type.n == 0)) fibers.push_back(f);
    }
    return surface_from_fibers(std::move(fibers), w.base_genus);
}

// Shioda-Tate bookkeeping: rank of the trivial lattice, the induced lower
// bound for the Picard number, and extremality (no room left for a positive
// Mordell-Weil rank).
struct ShiodaTate {
    long triv_rank = 0;
    long rho_lower = 0;
    bool extremal = false;
};

inline ShiodaTate shioda_tate(const SurfaceData& s, long mw_rank_hint = 0) {
    if (mw_rank_hint < 0) throw Error("bad-rank-hint", "Mordell-Weil rank hint must be >= 0");
    ShiodaTate r;
    r.triv_rank = s.triv_rank;
    r.rho_lower = s.triv_rank + mw_rank_hint;
    if (r.rho_lower > s.h11)
        throw Error("inconsistent-fiber-data", "Picard bound exceeds h^{1,1}");
    r.extremal = (s.chi > 0) && (r.triv_rank == s.h11);
    return r;
}

}  // namespace ellsurf
