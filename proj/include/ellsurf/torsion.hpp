// Mordell-Weil torsion via component gluing: a torsion section disjoint from
// the zero section contributes local correction terms summing to 2*chi, maps
// injectively into the component group of every additive fiber, and cannot
// exist at all next to a fiber of type II or II*.  The candidate group is
// found by brute force over the direct sum of all component groups.
#pragma once

#include <ellsurf/kodaira.hpp>

#include <set>
#include <vector>

namespace ellsurf {

// Elements of a component group A_F = Z/d1 x Z/d2 are referred to by a
// single index: idx = x + d1 * y for (x, y).  For cyclic groups (d2 = 1)
// the index is just the component number, matching the Theta_i labels.
inline long comp_order(const std::pair<long, long>& g, long idx) {
    long x = idx % g.first, y = idx / g.first;
    long ox = x == 0 ? 1 : g.first / gcd_long(g.first, x);
    long oy = y == 0 ? 1 : g.second / gcd_long(g.second, y);
    return lcm_long(ox, oy);
}

inline long comp_add(const std::pair<long, long>& g, long i, long j) {
    long x = (i % g.first + j % g.first) % g.first;
    long y = (i / g.first + j / g.first) % g.second;
    return x + g.first * y;
}

// Local correction term of a section meeting the given component.
inline Rat contribution(const KodairaType& type, const std::pair<long, long>& group, long idx) {
    if (idx == 0) return Rat(0);
    switch (type.tag) {
        case KTag::I: {
            long n = type.n;
            if (n == 0 || idx <= 0 || idx >= n)
                throw Error("invalid-component", "component index out of range for " + ktype_str(type));
            return rat_frac(Int(idx * (n - idx)), Int(n));
        }
        case KTag::Istar: {
            long n = type.n;
            Rat far = Rat(1) + rat_frac(Int(n), Int(4));
            if (n % 2 == 0) {
                // A_F = Z/2 x Z/2: (1,0) is the near component
                if (idx == 1) return Rat(1);
                if (idx == 2 || idx == 3) return far;
            } else {
                // A_F = Z/4: the generators (odd indices) are far
                if (idx == 2) return Rat(1);
                if (idx == 1 || idx == 3) return far;
            }
            throw Error("invalid-component", "component index out of range for " + ktype_str(type));
        }
        case KTag::III: return Rat(1, 2);
        case KTag::IV: return Rat(2, 3);
        case KTag::IVstar: return Rat(4, 3);
        case KTag::IIIstar: return Rat(3, 2);
        case KTag::II:
        case KTag::IIstar:
            throw Error("invalid-component",
                        "fibers of type II/II* have trivial component group");
    }
    (void)group;
    throw Error("internal", "unknown Kodaira tag");
}

// One geometric fiber: a place of degree d contributes d identical slots.
struct GeomFiber {
    Place place;
    int copy = 0;  // 0..degree-1
    KodairaType type;
    std::pair<long, long> group{1, 1};
    bool additive = false;
};

struct TorsionGroup {
    long N = 1, Nprime = 1;  // invariant factors, Nprime | N
    std::vector<GeomFiber> slots;
    std::vector<std::vector<long>> elements;  // component indices per slot, sorted
    std::vector<std::vector<long>> gens;      // one or two generators

    long order() const { return static_cast<long>(elements.size()); }
};

inline std::vector<GeomFiber> geometric_fibers(const SurfaceData& s) {
    std::vector<GeomFiber> out;
    for (const auto& f : s.fibers)
        for (int c = 0; c < f.degree; ++c)
            out.push_back(GeomFiber{f.place, c, f.type, f.comp_group, f.additive});
    return out;
}

inline TorsionGroup torsion_group(const SurfaceData& s) {
    TorsionGroup tg;
    tg.slots = geometric_fibers(s);
    size_t m = tg.slots.size();
    tg.elements.push_back(std::vector<long>(m, 0));
    tg.gens.clear();

    if (s.chi <= 0)
        throw Error("bad-surface", "torsion gluing needs chi > 0");

    // a fiber of type II or II* forces triviality outright
    for (const auto& f : tg.slots)
        if (f.type.tag == KTag::II || f.type.tag == KTag::IIstar) return tg;

    // enumerate the direct sum of the nontrivial component groups
    std::vector<size_t> live;  // slots with |A_F| > 1
    long total = 1;
    for (size_t i = 0; i < m; ++i) {
        long sz = tg.slots[i].group.first * tg.slots[i].group.second;
        if (sz > 1) {
            live.push_back(i);
            if (total > (2'000'000L / sz) + 1) throw Error("search-too-large",
                "component-group direct sum too large for brute-force search");
            total *= sz;
        }
    }

    Rat target = Rat(2 * s.chi);
    std::vector<std::vector<long>> candidates;  // full-length vectors, zero first
    candidates.push_back(std::vector<long>(m, 0));

    std::vector<long> counter(live.size(), 0);
    for (long step = 1; step < total; ++step) {
        // mixed-radix increment
        for (size_t i = 0; i < live.size(); ++i) {
            const auto& g = tg.slots[live[i]].group;
            if (++counter[i] < g.first * g.second) break;
            counter[i] = 0;
        }
        Rat sum(0);
        bool ok = true;
        for (size_t i = 0; i < live.size() && ok; ++i) {
            const auto& f = tg.slots[live[i]];
            if (counter[i] == 0) {
                if (f.additive) ok = false;  // must inject into every additive A_F
                continue;
            }
            sum += contribution(f.type, f.group, counter[i]);
        }
        // slots outside `live` are additive only if irreducible additive (II
        // handled above; III/IV/I0* etc. all have |A_F|>1, so nothing to check)
        if (!ok || sum != target) continue;
        std::vector<long> full(m, 0);
        for (size_t i = 0; i < live.size(); ++i) full[live[i]] = counter[i];
        candidates.push_back(std::move(full));
    }

    std::set<std::vector<long>> cand_set(candidates.begin(), candidates.end());

    auto add_elems = [&](const std::vector<long>& a, const std::vector<long>& b) {
        std::vector<long> r(m);
        for (size_t i = 0; i < m; ++i) r[i] = comp_add(tg.slots[i].group, a[i], b[i]);
        return r;
    };
    auto span = [&](const std::vector<long>& a, const std::vector<long>& b,
                    std::set<std::vector<long>>& out) -> bool {
        out.clear();
        out.insert(std::vector<long>(m, 0));
        std::vector<std::vector<long>> frontier{a, b};
        while (!frontier.empty()) {
            auto e = frontier.back();
            frontier.pop_back();
            if (out.count(e)) continue;
            if (!cand_set.count(e)) return false;  // left the candidate set
            out.insert(e);
            std::vector<std::vector<long>> snapshot(out.begin(), out.end());
            for (const auto& x : snapshot) frontier.push_back(add_elems(e, x));
        }
        return true;
    };

    // largest subgroup generated by at most two candidates whose closure
    // stays inside the candidate set (Mordell-Weil torsion is 2-generated)
    std::set<std::vector<long>> best;
    best.insert(std::vector<long>(m, 0));
    std::set<std::vector<long>> trial;
    for (size_t i = 0; i < candidates.size(); ++i) {
        for (size_t j = i; j < candidates.size(); ++j) {
            if (!span(candidates[i], candidates[j], trial)) continue;
            if (trial.size() > best.size()) best = trial;
        }
    }

    tg.elements.assign(best.begin(), best.end());

    // invariant factors: N = exponent, N' = |G| / N
    auto elem_order = [&](const std::vector<long>& e) {
        long o = 1;
        for (size_t i = 0; i < m; ++i) o = lcm_long(o, comp_order(tg.slots[i].group, e[i]));
        return o;
    };
    long expo = 1;
    for (const auto& e : tg.elements) expo = std::max(expo, elem_order(e));
    tg.N = expo;
    tg.Nprime = static_cast<long>(tg.elements.size()) / expo;

    // canonical generators: first element of maximal order, then (if needed)
    // the first element completing the span
    if (tg.N > 1) {
        std::vector<long> a;
        for (const auto& e : tg.elements)
            if (elem_order(e) == tg.N) { a = e; break; }
        tg.gens.push_back(a);
        if (tg.Nprime > 1) {
            for (const auto& e : tg.elements) {
                std::set<std::vector<long>> sp;
                if (!span(a, e, sp)) continue;
                if (sp.size() == tg.elements.size()) { tg.gens.push_back(e); break; }
            }
        }
    }
    return tg;
}

}  // namespace ellsurf
