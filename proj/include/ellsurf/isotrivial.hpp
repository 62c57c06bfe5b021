// Isotrivial elliptic surfaces S ~ (C x E)/G with G = T ⋊ mu_r acting by
// z |-> eps z + t on an elliptic curve with extra automorphisms.  The engine
// validates monodromy data for the G-cover C -> P^1, computes the genera of C
// and of D = C/T, analyzes the cyclic quotient singularities of (C x E)/G
// with their Hirzebruch-Jung resolutions, assembles the fiber list of the
// relatively minimal model, and evaluates the center/normalizer conditions
// and automorphism bounds.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <ellsurf/cyclotomic.hpp>
#include <ellsurf/kodaira.hpp>
#include <ellsurf/rational.hpp>

namespace ellsurf {

// ---------------------------------------------------------------------------
// Data and group elements
// ---------------------------------------------------------------------------

// One local monodromy (eps_r^lam, c): lam is the rotation exponent with
// respect to the primitive r-th root of minimal argument, c a torsion point.
struct IsoMonodromy {
    long lam = 0;
    TorsionPoint c;
};

struct IsotrivialData {
    int r = 2;  // 2, 3, 4 or 6
    std::vector<TorsionPoint> T_gens;
    int base_genus = 0;
    std::vector<IsoMonodromy> monodromies;
};

inline Ring ring_for_r(int r) {
    switch (r) {
        case 2: return Ring::Generic2;
        case 4: return Ring::Gaussian;
        case 3:
        case 6: return Ring::Eisenstein;
    }
    throw Error("bad-argument", "the rotation order r must be one of 2, 3, 4, 6");
}

struct IsoElem {
    long lam = 0;  // 0..r-1
    TorsionPoint c;
};

inline bool iso_elem_less(const IsoElem& x, const IsoElem& y) {
    if (x.lam != y.lam) return x.lam < y.lam;
    return tp_less(x.c, y.c);
}

inline bool iso_elem_eq(const IsoElem& x, const IsoElem& y) {
    return x.lam == y.lam && x.c == y.c;
}

// The validated group G = T ⋊ mu_r with its element table.
struct IsoGroup {
    int r = 2;
    Ring ring = Ring::Generic2;
    int base_genus = 0;
    std::vector<TorsionPoint> T;   // sorted element list of T
    std::vector<IsoElem> elements; // sorted element list of G
    std::vector<IsoMonodromy> monodromies;  // normalized

    long order() const { return static_cast<long>(elements.size()); }

    // rotation by eps_r^j
    TorsionPoint rot(const TorsionPoint& x, long j) const {
        int R = ring_root_order(ring);
        long jj = ((j % r) + r) % r;
        return tp_mul_root(x, static_cast<int>(jj) * (R / r));
    }

    // (eps^a, c) o (eps^a', c') = (eps^{a+a'}, eps^a c' + c)
    IsoElem compose(const IsoElem& x, const IsoElem& y) const {
        return IsoElem{(x.lam + y.lam) % r, tp_add(rot(y.c, x.lam), x.c)};
    }

    IsoElem power(const IsoElem& x, long k) const {
        IsoElem acc{0, tp(ring, Rat(0), Rat(0))};
        for (long i = 0; i < k; ++i) acc = compose(acc, x);
        return acc;
    }

    long elem_order(const IsoElem& x) const {
        IsoElem acc = x;
        long k = 1;
        long guard = r * static_cast<long>(T.size()) + 1;
        while (!(acc.lam == 0 && acc.c.is_zero())) {
            acc = compose(acc, x);
            if (++k > guard) throw Error("internal", "element order exceeds |G|");
        }
        return k;
    }

    bool in_T(const TorsionPoint& x) const {
        return std::binary_search(T.begin(), T.end(), x, tp_less);
    }
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

inline IsoGroup iso_validate(const IsotrivialData& data) {
    IsoGroup g;
    g.r = data.r;
    g.ring = ring_for_r(data.r);
    if (data.base_genus < 0)
        throw Error("bad-argument", "the base genus must be >= 0");
    g.base_genus = data.base_genus;

    // T: additive closure of the generators
    {
        std::set<TorsionPoint, bool (*)(const TorsionPoint&, const TorsionPoint&)> seen(tp_less);
        seen.insert(tp(g.ring, Rat(0), Rat(0)));
        std::vector<TorsionPoint> frontier(seen.begin(), seen.end());
        while (!frontier.empty()) {
            TorsionPoint x = frontier.back();
            frontier.pop_back();
            for (const auto& t : data.T_gens) {
                if (t.ring != g.ring)
                    throw Error("bad-argument", "torsion point written over the wrong ring");
                TorsionPoint nxt = tp_add(x, t);
                if (seen.insert(nxt).second) frontier.push_back(nxt);
            }
        }
        g.T.assign(seen.begin(), seen.end());
    }

    // mu_r must normalize T
    for (const auto& t : g.T)
        if (!g.in_T(g.rot(t, 1)))
            throw Error("T-not-normalized", "mu_r does not normalize T",
                        {{"point", tp_str(t)}});

    if (data.monodromies.empty())
        throw Error("bad-argument", "at least one local monodromy is required");

    // monodromy shapes: translations and eps^{+-1} rotations only
    for (const auto& m : data.monodromies) {
        long lam = ((m.lam % g.r) + g.r) % g.r;
        if (!(lam == 0 || lam == 1 || lam == g.r - 1))
            throw Error("unsupported-monodromy-shape", "unsupported monodromy shape",
                        {{"lambda", std::to_string(m.lam)}});
        if (m.c.ring != g.ring)
            throw Error("bad-argument", "torsion point written over the wrong ring");
        if (!g.in_T(m.c))
            throw Error("monodromy-outside-G",
                        "the translation part of a monodromy must lie in T",
                        {{"point", tp_str(m.c)}});
        if (lam == 0 && m.c.is_zero())
            throw Error("bad-argument", "trivial local monodromy at a branch point");
        g.monodromies.push_back(IsoMonodromy{lam, m.c});
    }

    // product of the local monodromies must be the identity
    {
        IsoElem acc{0, tp(g.ring, Rat(0), Rat(0))};
        for (const auto& m : g.monodromies) acc = g.compose(acc, IsoElem{m.lam, m.c});
        if (!(acc.lam == 0 && acc.c.is_zero()))
            throw Error("monodromy-product-not-identity",
                        "the product of the local monodromies must be the identity");
    }

    // element table of G = T ⋊ mu_r
    for (long j = 0; j < g.r; ++j)
        for (const auto& t : g.T) g.elements.push_back(IsoElem{j, t});
    std::sort(g.elements.begin(), g.elements.end(), iso_elem_less);

    // the monodromies must generate G
    {
        std::vector<IsoElem> closure{IsoElem{0, tp(g.ring, Rat(0), Rat(0))}};
        auto contains = [&](const IsoElem& e) {
            return std::binary_search(closure.begin(), closure.end(), e, iso_elem_less);
        };
        std::vector<IsoElem> frontier = closure;
        while (!frontier.empty()) {
            IsoElem x = frontier.back();
            frontier.pop_back();
            for (const auto& m : g.monodromies) {
                IsoElem nxt = g.compose(x, IsoElem{m.lam, m.c});
                if (!contains(nxt)) {
                    closure.insert(std::upper_bound(closure.begin(), closure.end(), nxt,
                                                    iso_elem_less),
                                   nxt);
                    frontier.push_back(nxt);
                }
            }
        }
        if (closure.size() != g.elements.size())
            throw Error("monodromies-do-not-generate",
                        "the local monodromies must generate T ⋊ mu_r",
                        {{"closure", std::to_string(closure.size())},
                         {"expected", std::to_string(g.elements.size())}});
    }
    return g;
}

// ---------------------------------------------------------------------------
// Genera
// ---------------------------------------------------------------------------

struct GenusReport {
    long g_C = 0;  // genus of the G-cover C -> B
    long g_D = 0;  // genus of D = C/T under the induced mu_r-cover
    int elliptic_count = 0;
    bool criterion = false;  // base rational with exactly two eps, eps^{-1} points
    std::string factorization;
};

inline GenusReport iso_genera(const IsoGroup& g) {
    GenusReport rep;
    long n = g.order();
    long g0 = g.base_genus;

    // Riemann-Hurwitz for C -> B with ramification index = monodromy order
    long rh = n * (2 * g0 - 2);
    for (const auto& m : g.monodromies) {
        long d = g.elem_order(IsoElem{m.lam, m.c});
        rh += (n / d) * (d - 1);
        if (m.lam != 0) ++rep.elliptic_count;
    }
    if (rh % 2 != 0) throw Error("internal", "Riemann-Hurwitz parity failure");
    rep.g_C = rh / 2 + 1;

    // induced mu_r-cover D -> B: rotations keep full order r, translations die
    long rhD = g.r * (2 * g0 - 2) + static_cast<long>(rep.elliptic_count) * (g.r - 1);
    if (rhD % 2 != 0) throw Error("internal", "Riemann-Hurwitz parity failure");
    rep.g_D = rhD / 2 + 1;

    rep.criterion = (g0 == 0 && rep.elliptic_count == 2);
    if (rep.g_D == 0) {
        rep.factorization = "D is rational: branched in two points with local monodromies "
                            "eps, eps^{-1} composed with translations";
    } else if (g.r == 6 && rep.g_D >= 2) {
        rep.factorization = "g_D = " + std::to_string(rep.g_D) +
                            ": factorization undecided by this tool";
    } else {
        rep.factorization = "g_D = " + std::to_string(rep.g_D) + ": D is not rational";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Singularities and Hirzebruch-Jung chains
// ---------------------------------------------------------------------------

// Continued-fraction chain for the cyclic quotient singularity 1/m(1,k):
// m/k = b1 - 1/(b2 - ...), reported as self-intersections [-b1, ..., -bl].
inline std::vector<long> hj_chain(long m, long k) {
    if (!(0 < k && k < m) || gcd_long(m, k) != 1)
        throw Error("bad-argument", "invalid cyclic quotient type 1/m(1,k)",
                    {{"m", std::to_string(m)}, {"k", std::to_string(k)}});
    std::vector<long> chain;
    long a = m, b = k;
    while (b > 0) {
        long q = (a + b - 1) / b;
        chain.push_back(-q);
        long nb = q * b - a;
        a = b;
        b = nb;
    }
    return chain;
}

struct SingularPoint {
    size_t branch = 0;   // index into the monodromy list
    TorsionPoint rep;    // representative fixed point on E
    long m = 1, k = 1;   // local type 1/m(1,k)
    std::vector<long> chain;
};

// Cyclic quotient singularities of (C x E)/G over each rotation branch point:
// points of E with stabilizer of order m' inside <g> yield orbits of size
// r/m', each contributing one singularity of type 1/m'(1, lam mod m').
inline std::vector<SingularPoint> singularity_analysis(const IsoGroup& g) {
    std::vector<SingularPoint> out;
    int R = ring_root_order(g.ring);
    for (size_t i = 0; i < g.monodromies.size(); ++i) {
        const auto& m = g.monodromies[i];
        if (m.lam == 0) continue;
        IsoElem gen{m.lam, m.c};

        // fixed-point sets of the powers g^{r/m'}, m' | r
        std::map<long, std::vector<TorsionPoint>> fix;  // m' -> Fix(g^{r/m'})
        for (long mp = 2; mp <= g.r; ++mp) {
            if (g.r % mp != 0) continue;
            IsoElem h = g.power(gen, g.r / mp);
            FixedPoints f = solve_fixed_points(g.ring, static_cast<int>(h.lam) * (R / g.r), h.c);
            if (f.all_fixed)
                throw Error("internal", "a nontrivial power of a rotation fixes all of E");
            fix[mp] = f.points;
        }

        for (long mp = g.r; mp >= 2; --mp) {
            if (g.r % mp != 0) continue;
            // points with stabilizer of order exactly m'
            std::vector<TorsionPoint> exact;
            for (const auto& z : fix[mp]) {
                bool higher = false;
                for (long mq = 2 * mp; mq <= g.r && !higher; mq += mp)
                    if (g.r % mq == 0 && fix.count(mq)) {
                        for (const auto& w : fix[mq])
                            if (w == z) { higher = true; break; }
                    }
                if (!higher) exact.push_back(z);
            }
            if (exact.empty()) continue;

            // group into orbits under z |-> eps^lam z + c  (orbit size r/m')
            std::vector<TorsionPoint> pool = exact;
            while (!pool.empty()) {
                TorsionPoint z = pool.front();
                // collect the orbit of z
                std::vector<TorsionPoint> orbit{z};
                TorsionPoint cur = z;
                for (long s = 1; s < g.r / mp; ++s) {
                    cur = tp_add(g.rot(cur, m.lam), m.c);
                    orbit.push_back(cur);
                }
                TorsionPoint rep = *std::min_element(orbit.begin(), orbit.end(), tp_less);
                std::vector<TorsionPoint> rest;
                for (const auto& w : pool) {
                    bool in_orbit = false;
                    for (const auto& o : orbit)
                        if (o == w) { in_orbit = true; break; }
                    if (!in_orbit) rest.push_back(w);
                }
                if (pool.size() - rest.size() != static_cast<size_t>(g.r / mp))
                    throw Error("internal", "orbit size mismatch in singularity analysis");
                pool = std::move(rest);

                SingularPoint sp;
                sp.branch = i;
                sp.rep = rep;
                sp.m = mp;
                sp.k = ((m.lam % mp) + mp) % mp;
                sp.chain = hj_chain(sp.m, sp.k);
                out.push_back(sp);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fiber assembly
// ---------------------------------------------------------------------------

struct IsoFiber {
    size_t branch = 0;
    std::string point;         // positional label "b1", "b2", ...
    bool multiple = false;
    long multiplicity = 1;
    KodairaType type;          // I0 for multiple smooth fibers
};

// Fiber types over the branch points: translations give multiple smooth
// fibers m I0; a rotation by the minimal-argument root eps gives the reduced
// additive fiber (equal local eigenvalues, singularities 1/m(1,1)); the
// inverse rotation gives the star fiber via the A-type chains.
inline std::vector<IsoFiber> assemble_fibers(const IsoGroup& g) {
    std::vector<IsoFiber> out;
    for (size_t i = 0; i < g.monodromies.size(); ++i) {
        const auto& m = g.monodromies[i];
        IsoFiber f;
        f.branch = i;
        f.point = "b" + std::to_string(i + 1);
        if (m.lam == 0) {
            f.multiple = true;
            f.multiplicity = tp_order(m.c);
            f.type = KodairaType{KTag::I, 0};
        } else if (m.lam == 1 && g.r > 2) {
            switch (g.r) {
                case 3: f.type = KodairaType{KTag::IV}; break;
                case 4: f.type = KodairaType{KTag::III}; break;
                default: f.type = KodairaType{KTag::II}; break;
            }
        } else if (m.lam == g.r - 1) {
            switch (g.r) {
                case 2: f.type = KodairaType{KTag::Istar, 0}; break;
                case 3: f.type = KodairaType{KTag::IVstar}; break;
                case 4: f.type = KodairaType{KTag::IIIstar}; break;
                default: f.type = KodairaType{KTag::IIstar}; break;
            }
        } else {
            throw Error("internal", "unclassifiable monodromy shape",
                        {{"branch", f.point}});
        }
        out.push_back(f);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Invariants
// ---------------------------------------------------------------------------

struct IsoInvariants {
    long e = 0, chi = 0, q = 0, p_g = 0, b2 = 0;
    long s = 0;  // number of multiple fibers
};

inline IsoInvariants iso_invariants(const IsoGroup& g, const std::vector<IsoFiber>& fibers) {
    IsoInvariants inv;
    for (const auto& f : fibers) {
        if (f.multiple)
            ++inv.s;  // smooth support: no Euler contribution
        else
            inv.e += euler_number(f.type);
    }
    if (inv.e % 12 != 0)
        throw Error("inconsistent-fiber-ledger",
                    "total Euler number " + std::to_string(inv.e) + " is not divisible by 12");
    inv.chi = inv.e / 12;
    inv.q = g.base_genus;  // q(S) = genus of C/G
    inv.p_g = inv.chi - 1 + inv.q;
    inv.b2 = 12 * inv.chi - 2 + 4 * inv.q;
    return inv;
}

// ---------------------------------------------------------------------------
// Center and the numerical-triviality condition
// ---------------------------------------------------------------------------

struct NumReport {
    bool lambda_ok = false;     // lambda T = T
    bool num_ok = false;        // (1 - eps) c in T for all eps in mu_r
    bool shortcut_ok = false;   // equivalent single condition per curve type
    bool star_override = false; // translation candidate against a star fiber
    long center_order = 1;
    std::string verdict;
};

// |Z(G)| by brute force; N_{GxG}(Delta_G)/Delta_G is isomorphic to Z(G).
inline long iso_center_order(const IsoGroup& g) {
    long n = 0;
    for (const auto& x : g.elements) {
        bool central = true;
        for (const auto& y : g.elements) {
            if (!iso_elem_eq(g.compose(x, y), g.compose(y, x))) {
                central = false;
                break;
            }
        }
        if (central) ++n;
    }
    return n;
}

inline NumReport center_and_num(const IsoGroup& g, const IsoMonodromy& psi2,
                                const std::vector<IsoFiber>& fibers) {
    NumReport rep;
    long lam = ((psi2.lam % g.r) + g.r) % g.r;
    const TorsionPoint& c = psi2.c;

    rep.lambda_ok = true;
    for (const auto& t : g.T)
        if (!g.in_T(g.rot(t, lam))) rep.lambda_ok = false;

    rep.num_ok = true;
    for (long j = 0; j < g.r; ++j)
        if (!g.in_T(tp_sub(c, g.rot(c, j)))) rep.num_ok = false;

    TorsionPoint twoc = tp_add(c, c);
    switch (g.r) {
        case 2:
        case 4: rep.shortcut_ok = g.in_T(twoc); break;
        case 3: rep.shortcut_ok = g.in_T(tp_add(twoc, c)); break;
        default: rep.shortcut_ok = g.in_T(c); break;  // r = 6
    }

    rep.center_order = iso_center_order(g);

    bool star = false;
    for (const auto& f : fibers)
        if (!f.multiple && (f.type.tag == KTag::Istar || f.type.tag == KTag::IVstar ||
                            f.type.tag == KTag::IIIstar || f.type.tag == KTag::IIstar))
            star = true;
    if (lam == 0 && !c.is_zero() && star) {
        rep.star_override = true;
        rep.verdict = "not numerically trivial: a translation permutes the components "
                      "of the star fiber";
    } else if (rep.lambda_ok && rep.num_ok) {
        rep.verdict = "numerically trivial candidate: center/normalizer conditions hold";
    } else {
        rep.verdict = "not numerically trivial: center/normalizer conditions fail";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Automorphism bounds
// ---------------------------------------------------------------------------

struct AutBounds {
    long autz_cap = 3;
    long autq_cap = 0;
    std::string autz_rule;
    std::string autq_rule;
};

inline AutBounds aut_bounds(int r, const IsoInvariants& inv) {
    AutBounds b;
    switch (r) {
        case 6: b.autz_cap = 3; b.autz_rule = "cap 3 for r = 6"; break;
        case 4: b.autz_cap = 2; b.autz_rule = "cap 2 for r = 4"; break;
        case 3: b.autz_cap = 1; b.autz_rule = "trivial group for r = 3"; break;
        default: b.autz_cap = 2; b.autz_rule = "cap r for r = 2"; break;
    }
    long rq = (r == 6) ? 3 : r;
    if (inv.q == 0 && inv.p_g == 0) {
        b.autq_cap = rq * inv.s;
        b.autq_rule = "r * s bound (3s for r = 6) for q = p_g = 0, s = " + std::to_string(inv.s);
    } else {
        b.autq_cap = rq;
        b.autq_rule = "bound r (3 for r = 6) when q + p_g > 0";
    }
    return b;
}

// ---------------------------------------------------------------------------
// Orchestration
// ---------------------------------------------------------------------------

struct IsotrivialReport {
    IsoGroup group;
    GenusReport genera;
    std::vector<SingularPoint> singularities;
    std::vector<IsoFiber> fibers;
    IsoInvariants invariants;
    long center_order = 1;
    AutBounds bounds;
    // Zeuthen-Segre side log: a monodromy eps^h z + t contributes 2h.  Kept
    // for cross-checking only; fiber assembly never reads it.
    std::vector<long> zs_log;
};

inline IsotrivialReport isotrivial_report(const IsotrivialData& data) {
    IsotrivialReport rep;
    rep.group = iso_validate(data);
    rep.genera = iso_genera(rep.group);
    rep.singularities = singularity_analysis(rep.group);
    rep.fibers = assemble_fibers(rep.group);
    rep.invariants = iso_invariants(rep.group, rep.fibers);
    rep.center_order = iso_center_order(rep.group);
    rep.bounds = aut_bounds(rep.group.r, rep.invariants);
    for (const auto& m : rep.group.monodromies) rep.zs_log.push_back(2 * m.lam);
    return rep;
}

}  // namespace ellsurf
