// Integral lattices given by Gram matrices: determinants, discriminant
// groups with their torsion forms (q mod 2Z, b mod Z), dual vectors of root
// lattices, and enumeration of isotropic subgroups = integral overlattices.
// Sign conventions follow the geometry: root lattices are negative definite
// (diagonal -2), determinants are signed, discriminant-group orders use the
// absolute value.
#pragma once

#include <ellsurf/matrixz.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ellsurf {

struct IntegralLattice {
    MatZ gram;                        // symmetric, nondegenerate
    std::vector<std::string> labels;  // basis names, for reports

    int rank() const { return static_cast<int>(gram.size()); }

    bool is_even() const {
        for (size_t i = 0; i < gram.size(); ++i)
            if (gram[i][i] % 2 != 0) return false;
        return true;
    }
};

inline IntegralLattice make_lattice(MatZ gram, std::vector<std::string> labels = {}) {
    size_t n = gram.size();
    for (const auto& row : gram)
        if (row.size() != n) throw Error("bad-gram", "Gram matrix must be square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < i; ++j)
            if (gram[i][j] != gram[j][i]) throw Error("bad-gram", "Gram matrix must be symmetric");
    if (labels.empty())
        for (size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
    IntegralLattice L{std::move(gram), std::move(labels)};
    if (det_bareiss(L.gram) == 0) throw Error("bad-gram", "Gram matrix is degenerate");
    return L;
}

inline Int lattice_det(const IntegralLattice& L) { return det_bareiss(L.gram); }

inline IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b) {
    size_t n = a.gram.size(), m = b.gram.size();
    MatZ g(n + m, std::vector<Int>(n + m, Int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) g[i][j] = a.gram[i][j];
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) g[n + i][n + j] = b.gram[i][j];
    std::vector<std::string> labels = a.labels;
    labels.insert(labels.end(), b.labels.begin(), b.labels.end());
    return IntegralLattice{std::move(g), std::move(labels)};
}

// ----- ADE root lattices, negative definite -----

// Node numbering: A_n and the first n-1 nodes of D_n/E_n form a chain
// 0-1-...; D_n attaches node n-1 to node n-3 (fork at the end); E_n attaches
// node n-1 to node 2 (the standard E_8 shape restricted to n = 6, 7, 8).
inline IntegralLattice root_lattice(const std::string& name) {
    if (name.size() < 2) throw Error("bad-lattice-name", "unknown root lattice '" + name + "'");
    char family = name[0];
    int n = 0;
    try {
        n = std::stoi(name.substr(1));
    } catch (...) {
        throw Error("bad-lattice-name", "unknown root lattice '" + name + "'");
    }
    bool ok = (family == 'A' && n >= 1) || (family == 'D' && n >= 4) ||
              (family == 'E' && n >= 6 && n <= 8);
    if (!ok) throw Error("bad-lattice-name", "unknown root lattice '" + name + "'");

    MatZ g(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) g[i][i] = -2;
    auto join = [&](int i, int j) { g[i][j] = 1; g[j][i] = 1; };
    int chain = (family == 'A') ? n : n - 1;
    for (int i = 0; i + 1 < chain; ++i) join(i, i + 1);
    if (family == 'D') join(n - 1, n - 3);
    if (family == 'E') join(n - 1, 2);

    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(name + "." + std::to_string(i));
    return IntegralLattice{std::move(g), std::move(labels)};
}

// The hyperbolic plane U and its twists are handy for fixtures.
inline IntegralLattice hyperbolic_u() {
    return make_lattice({{Int(0), Int(1)}, {Int(1), Int(0)}}, {"f", "g"});
}

// ----- dual vectors -----

struct DualVector {
    std::vector<Rat> coords;  // in the lattice basis
    Rat norm;                 // self-pairing
};

// The dual basis vector attached to one node (1-indexed, matching the
// component labels Theta_1, Theta_2, ...): the column of G^{-1}.  Its norm is
// the corresponding diagonal entry of G^{-1}.
inline DualVector dual_vector(const IntegralLattice& L, int node) {
    int n = L.rank();
    if (node < 1 || node > n) throw Error("bad-node", "node index out of range (1.." +
                                          std::to_string(n) + ")");
    int j = node - 1;
    MatQ inv = matq_inverse(matq_from(L.gram));
    DualVector d;
    d.coords.reserve(n);
    for (int i = 0; i < n; ++i) d.coords.push_back(inv[i][j]);
    d.norm = inv[j][j];
    return d;
}

inline DualVector dual_vector(const std::string& lattice_name, int node) {
    return dual_vector(root_lattice(lattice_name), node);
}

inline Rat pairing(const MatZ& gram, const std::vector<Rat>& x, const std::vector<Rat>& y) {
    Rat s(0);
    for (size_t i = 0; i < gram.size(); ++i)
        for (size_t j = 0; j < gram.size(); ++j)
            if (gram[i][j] != 0) s += x[i] * Rat(gram[i][j]) * y[j];
    return s;
}

// ----- discriminant group with torsion form -----

struct DiscGroup {
    IntegralLattice L;
    std::vector<long> orders;               // invariant factors > 1 (divisibility chain)
    std::vector<std::vector<Rat>> gens;     // representatives in L tensor Q
    MatQ gram_q;                            // cached rational Gram
    std::vector<long> all_orders;           // full diagonal of the Smith form
    MatZ uinv;                              // inverse of the Smith row transform
    MatZ u;                                 // the Smith row transform itself
    std::vector<size_t> gen_slots;          // positions of nontrivial invariant factors

    long order() const {
        long o = 1;
        for (long d : orders) o *= d;
        return o;
    }

    // canonical representative vector of a class given by exponents
    std::vector<Rat> rep(const std::vector<long>& e) const {
        std::vector<Rat> v(L.rank(), Rat(0));
        for (size_t k = 0; k < orders.size(); ++k) {
            long c = ((e[k] % orders[k]) + orders[k]) % orders[k];
            for (int i = 0; i < L.rank(); ++i) v[i] += Rat(c) * gens[k][i];
        }
        return v;
    }

    // quadratic form q(x) = x.x mod 2Z, value in [0, 2)
    Rat q_value(const std::vector<long>& e) const {
        auto v = rep(e);
        return mod2(pairing(L.gram, v, v));
    }

    // bilinear form b(x, y) = x.y mod Z, value in [0, 1)
    Rat b_value(const std::vector<long>& e1, const std::vector<long>& e2) const {
        return mod1(pairing(L.gram, rep(e1), rep(e2)));
    }
};

// Discriminant group L^dual / L: Smith form of the Gram matrix.  With
// U G V = D, the class of a dual vector w is read off from U (G w) mod D.
inline DiscGroup disc_group(const IntegralLattice& L) {
    DiscGroup d;
    d.L = L;
    d.gram_q = matq_from(L.gram);
    SmithForm s = smith_normal_form(L.gram);
    size_t n = L.gram.size();
    d.u = s.U;
    MatQ uinv_q = matq_inverse(matq_from(s.U));
    MatQ ginv = matq_inverse(d.gram_q);
    d.uinv = MatZ(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (!rat_is_int(uinv_q[i][j])) throw Error("internal", "non-unimodular Smith transform");
            d.uinv[i][j] = rat_num(uinv_q[i][j]);
        }
    for (size_t i = 0; i < n; ++i) d.all_orders.push_back(int_to_long(s.D[i][i]));
    for (size_t i = 0; i < n; ++i) {
        if (d.all_orders[i] <= 1) continue;
        d.orders.push_back(d.all_orders[i]);
        d.gen_slots.push_back(i);
        // generator: G^{-1} U^{-1} e_i
        std::vector<Rat> col(n, Rat(0));
        for (size_t r = 0; r < n; ++r) col[r] = Rat(d.uinv[r][i]);
        d.gens.push_back(matq_apply(ginv, col));
    }
    return d;
}

// Class of a vector w in L tensor Q: defined when w lies in the dual lattice
// (all pairings with L integral); nullopt otherwise.
inline std::optional<std::vector<long>> disc_class(const DiscGroup& d, const std::vector<Rat>& w) {
    size_t n = d.L.gram.size();
    std::vector<Rat> gw = matq_apply(d.gram_q, w);
    for (const auto& x : gw)
        if (!rat_is_int(x)) return std::nullopt;
    // exponents = (U * Gw) mod invariant factors
    std::vector<long> e;
    for (size_t k = 0; k < d.gen_slots.size(); ++k) {
        size_t i = d.gen_slots[k];
        Rat acc(0);
        for (size_t j = 0; j < n; ++j) acc += Rat(d.u[i][j]) * gw[j];
        long m = d.orders[k];
        long v = int_to_long(rat_num(acc)) % m;
        e.push_back(((v % m) + m) % m);
    }
    return e;
}

// ----- overlattices = isotropic subgroups of the discriminant group -----

struct Overlattice {
    std::vector<std::vector<long>> subgroup;  // all elements, sorted, identity first
    long index = 1;                           // = |subgroup|
    Int det;                                  // det of the overlattice
    bool even = false;                        // q vanishes identically on the subgroup
};

namespace detail {

inline std::vector<long> elem_add(const std::vector<long>& a, const std::vector<long>& b,
                                  const std::vector<long>& orders) {
    std::vector<long> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % orders[i];
    return r;
}

}  // namespace detail

// Enumerate subgroups H of the discriminant group on which the torsion
// bilinear form vanishes (b|_H = 0 mod Z); such H correspond exactly to the
// integral overlattices of index |H|, with det(L_H) = det(L) / |H|^2.
// With even_only set and L even, additionally require q|_H = 0 mod 2Z so the
// overlattice is again even.  (For odd L the refinement is vacuous: an odd
// lattice always admits vectors of both parities in each dual class, so
// integrality is the only condition; callers get plain b-isotropy.)
inline std::vector<Overlattice> enumerate_overlattices(const IntegralLattice& L, bool even_only) {
    DiscGroup d = disc_group(L);
    size_t k = d.orders.size();
    bool use_q = even_only && L.is_even();

    // all elements of the discriminant group
    std::vector<std::vector<long>> elems;
    {
        std::vector<long> cur(k, 0);
        for (;;) {
            elems.push_back(cur);
            size_t i = 0;
            while (i < k && ++cur[i] == d.orders[i]) cur[i++] = 0;
            if (i == k) break;
            if (k == 0) break;
        }
        if (k == 0) elems.assign(1, std::vector<long>{});
    }

    auto isotropic_pair = [&](const std::vector<long>& x, const std::vector<long>& y) {
        return d.b_value(x, y) == 0;
    };
    auto isotropic_elem = [&](const std::vector<long>& x) {
        if (use_q && d.q_value(x) != 0) return false;
        return isotropic_pair(x, x);
    };

    // grow subgroups: closure of compatible generators stays isotropic
    std::set<std::vector<std::vector<long>>> seen;
    std::vector<std::vector<std::vector<long>>> work;
    std::vector<std::vector<long>> trivial{std::vector<long>(k, 0)};
    seen.insert(trivial);
    work.push_back(trivial);

    std::vector<Overlattice> out;
    Int base_det = lattice_det(L);
    while (!work.empty()) {
        auto h = work.back();
        work.pop_back();
        Overlattice o;
        o.subgroup = h;
        o.index = static_cast<long>(h.size());
        o.det = base_det / Int(o.index) / Int(o.index);
        o.even = L.is_even();
        for (const auto& x : h)
            if (d.q_value(x) != 0) o.even = false;
        out.push_back(o);

        for (const auto& g : elems) {
            bool inside = std::binary_search(h.begin(), h.end(), g);
            if (inside || !isotropic_elem(g)) continue;
            bool compat = true;
            for (const auto& x : h)
                if (!isotropic_pair(g, x)) { compat = false; break; }
            if (!compat) continue;
            // close under addition
            std::set<std::vector<long>> closure(h.begin(), h.end());
            std::vector<std::vector<long>> frontier{g};
            while (!frontier.empty()) {
                auto e = frontier.back();
                frontier.pop_back();
                if (!closure.insert(e).second) continue;
                for (const auto& x : closure) {
                    auto sum = detail::elem_add(e, x, d.orders);
                    if (!closure.count(sum)) frontier.push_back(sum);
                }
            }
            std::vector<std::vector<long>> ext(closure.begin(), closure.end());
            if (seen.insert(ext).second) work.push_back(ext);
        }
    }

    std::sort(out.begin(), out.end(), [](const Overlattice& a, const Overlattice& b) {
        if (a.index != b.index) return a.index < b.index;
        return a.subgroup < b.subgroup;
    });
    return out;
}

}  // namespace ellsurf
