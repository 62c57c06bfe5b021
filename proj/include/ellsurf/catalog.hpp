// Built-in catalog of jacobian elliptic surfaces used throughout: the
// extremal rational surfaces X33, X44, X11(2), X22, the semistable families
// SEC9 / SEC10 / X8211, and the fiber data of the four-I3 surface X3333.
// Every entry carrying an equation is re-classified at load time and
// cross-checked against its stored fiber list and torsion group.

#pragma once

#include <map>
#include <string>
#include <vector>

#include <ellsurf/kodaira.hpp>
#include <ellsurf/torsion.hpp>
#include <ellsurf/weierstrass.hpp>

namespace ellsurf {

struct CatalogEntry {
    std::string name;
    std::string equation;  // display form; empty for fiber-data-only entries
    bool has_model = false;
    WeierstrassModel model;
    std::vector<FiberRecord> fibers;  // stored fiber data
    long torsion_N = 1, torsion_Nprime = 1;
    std::map<std::string, std::vector<long>> incidence;  // place -> generator components
    long rotation_order = 2;  // order of the fiberwise rotation group mu_r
    std::string notes;
};

namespace detail {

// Synthetic fiber record from tabulated data (for entries without equations).
inline FiberRecord make_fiber(const Place& place, const KodairaType& type, int degree = 1) {
    FiberRecord f;
    f.place = place;
    f.type = type;
    f.degree = degree;
    f.euler = euler_number(type);
    f.components = component_count(type);
    f.dynkin = dynkin_label(type);
    f.comp_group = component_group(type);
    f.additive = ktype_additive(type);
    // representative minimal valuations for the type
    switch (type.tag) {
        case KTag::I: f.v_c4 = 0; f.v_c6 = 0; f.v_delta = type.n; break;
        case KTag::II: f.v_c4 = 1; f.v_c6 = 1; f.v_delta = 2; break;
        case KTag::III: f.v_c4 = 1; f.v_c6 = 2; f.v_delta = 3; break;
        case KTag::IV: f.v_c4 = 2; f.v_c6 = 2; f.v_delta = 4; break;
        case KTag::Istar: f.v_c4 = 2; f.v_c6 = 3; f.v_delta = 6 + type.n; break;
        case KTag::IVstar: f.v_c4 = 3; f.v_c6 = 4; f.v_delta = 8; break;
        case KTag::IIIstar: f.v_c4 = 3; f.v_c6 = 5; f.v_delta = 9; break;
        case KTag::IIstar: f.v_c4 = 4; f.v_c6 = 5; f.v_delta = 10; break;
    }
    return f;
}

inline Poly tpow(int n) {
    Poly p = Poly::constant(Rat(1));
    for (int i = 0; i < n; ++i) p = p * Poly::t();
    return p;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> table = [] {
        std::vector<CatalogEntry> v;

        {  // X33: the III + III* surface, MW = Z/2, j = 1728
            CatalogEntry e;
            e.name = "X33";
            e.equation = "y^2 = x^3 + t*x";
            e.has_model = true;
            e.model.a4 = Poly::t();
            e.fibers = {detail::make_fiber(place_root(Rat(0)), KodairaType{KTag::III}),
                        detail::make_fiber(place_infinity(), KodairaType{KTag::IIIstar})};
            e.torsion_N = 2;
            e.incidence = {{"t", {1}}, {"inf", {1}}};
            e.rotation_order = 4;
            e.notes = "extremal rational; fiberwise mu_4 action";
            v.push_back(std::move(e));
        }

        {  // X44: the IV + IV* surface, MW = Z/3, j = 0
            CatalogEntry e;
            e.name = "X44";
            e.equation = "y^2 + t*y = x^3";
            e.has_model = true;
            e.model.a3 = Poly::t();
            e.fibers = {detail::make_fiber(place_root(Rat(0)), KodairaType{KTag::IV}),
                        detail::make_fiber(place_infinity(), KodairaType{KTag::IVstar})};
            e.torsion_N = 3;
            e.incidence = {{"t", {1}}, {"inf", {1}}};
            e.rotation_order = 3;
            e.notes = "extremal rational; fiberwise mu_3 action";
            v.push_back(std::move(e));
        }

        {  // X11(2): two I0* fibers, MW = (Z/2)^2 geometrically
            CatalogEntry e;
            e.name = "X11";
            e.equation = "y^2 = x^3 + t*x^2 + 2*t^2*x";
            e.has_model = true;
            e.model.a2 = Poly::t();
            e.model.a4 = Rat(2) * detail::tpow(2);
            e.fibers = {detail::make_fiber(place_root(Rat(0)), KodairaType{KTag::Istar, 0}),
                        detail::make_fiber(place_infinity(), KodairaType{KTag::Istar, 0})};
            e.torsion_N = 2;
            e.torsion_Nprime = 2;
            e.incidence = {{"t", {1, 2}}, {"inf", {1, 2}}};
            e.rotation_order = 2;
            e.notes = "lambda = 2 member of the isotrivial I0* + I0* pencil";
            v.push_back(std::move(e));
        }

        {  // X22: II + II*, trivial MW, j = 0
            CatalogEntry e;
            e.name = "X22";
            e.equation = "y^2 = x^3 + t";
            e.has_model = true;
            e.model.a6 = Poly::t();
            e.fibers = {detail::make_fiber(place_root(Rat(0)), KodairaType{KTag::II}),
                        detail::make_fiber(place_infinity(), KodairaType{KTag::IIstar})};
            e.rotation_order = 6;
            e.notes = "extremal rational; fiberwise mu_6 action";
            v.push_back(std::move(e));
        }

        {  // SEC9: I8 + 4 I1, MW torsion Z/2 meeting component 4 of the I8
            CatalogEntry e;
            e.name = "SEC9";
            e.equation = "y^2 = x*(x^2 + 2*t^2*x + 1)";
            e.has_model = true;
            e.model.a2 = Rat(2) * detail::tpow(2);
            e.model.a4 = Poly::constant(Rat(1));
            e.fibers = {
                detail::make_fiber(place_finite(Poly::t() - Poly::constant(Rat(1))),
                                   KodairaType{KTag::I, 1}),
                detail::make_fiber(place_finite(Poly::t() + Poly::constant(Rat(1))),
                                   KodairaType{KTag::I, 1}),
                detail::make_fiber(place_finite(detail::tpow(2) + Poly::constant(Rat(1))),
                                   KodairaType{KTag::I, 1}, 2),
                detail::make_fiber(place_infinity(), KodairaType{KTag::I, 8})};
            e.torsion_N = 2;
            e.incidence = {{"inf", {4}}};
            e.rotation_order = 2;
            e.notes = "semistable; the 2-torsion section meets the far component of the I8";
            v.push_back(std::move(e));
        }

        {  // SEC10: I9 + 3 I1, MW torsion Z/3 meeting component 3 of the I9
            CatalogEntry e;
            e.name = "SEC10";
            e.equation = "y^2 + t*x*y + y = x^3";
            e.has_model = true;
            e.model.a1 = Poly::t();
            e.model.a3 = Poly::constant(Rat(1));
            e.fibers = {
                detail::make_fiber(place_finite(Poly::t() - Poly::constant(Rat(3))),
                                   KodairaType{KTag::I, 1}),
                detail::make_fiber(place_finite(detail::tpow(2) + Rat(3) * Poly::t() +
                                                Poly::constant(Rat(9))),
                                   KodairaType{KTag::I, 1}, 2),
                detail::make_fiber(place_infinity(), KodairaType{KTag::I, 9})};
            e.torsion_N = 3;
            e.incidence = {{"inf", {3}}};
            e.rotation_order = 2;
            e.notes = "semistable; 3-torsion along Theta_3 of the I9";
            v.push_back(std::move(e));
        }

        {  // X8211: I8 + I2 + 2 I1, MW torsion Z/4
            CatalogEntry e;
            e.name = "X8211";
            e.equation = "y^2 = x*(x^2 + 2*(t^2+1)*x + 1)";
            e.has_model = true;
            e.model.a2 = Rat(2) * (detail::tpow(2) + Poly::constant(Rat(1)));
            e.model.a4 = Poly::constant(Rat(1));
            e.fibers = {
                detail::make_fiber(place_root(Rat(0)), KodairaType{KTag::I, 2}),
                detail::make_fiber(place_finite(detail::tpow(2) + Poly::constant(Rat(2))),
                                   KodairaType{KTag::I, 1}, 2),
                detail::make_fiber(place_infinity(), KodairaType{KTag::I, 8})};
            e.torsion_N = 4;
            e.incidence = {{"inf", {2}}, {"t", {1}}};
            e.rotation_order = 2;
            e.notes = "semistable; Z/4 does not split at the I2";
            v.push_back(std::move(e));
        }

        {  // X3333: four I3 fibers, MW torsion (Z/3)^2 (fiber data only)
            CatalogEntry e;
            e.name = "X3333";
            e.fibers = {detail::make_fiber(place_root(Rat(0)), KodairaType{KTag::I, 3}),
                        detail::make_fiber(place_root(Rat(1)), KodairaType{KTag::I, 3}),
                        detail::make_fiber(place_root(Rat(-1)), KodairaType{KTag::I, 3}),
                        detail::make_fiber(place_infinity(), KodairaType{KTag::I, 3})};
            e.torsion_N = 3;
            e.torsion_Nprime = 3;
            e.incidence = {{"t", {1, 0}}, {"t - 1", {1, 1}}, {"t + 1", {1, 2}}, {"inf", {0, 1}}};
            e.rotation_order = 2;
            e.notes = "the semistable surface with full 3-torsion; stored as fiber data";
            v.push_back(std::move(e));
        }

        return v;
    }();
    return table;
}

inline std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& e : catalog_entries()) names.push_back(e.name);
    return names;
}

// Materialized catalog entry: the entry plus its classified surface data.
struct CatalogSurface {
    CatalogEntry entry;
    SurfaceData surface;
    TorsionGroup torsion;
};

inline CatalogSurface catalog_get(const std::string& name) {
    for (const auto& e : catalog_entries()) {
        if (e.name != name) continue;
        CatalogSurface out;
        out.entry = e;
        if (e.has_model) {
            out.surface = classify_all(e.model);
            // cross-check the freshly classified fibers against the stored list
            if (out.surface.fibers.size() != e.fibers.size())
                throw VerificationError("catalog entry " + name +
                                        ": fiber count differs from stored data");
            for (const auto& stored : e.fibers) {
                bool found = false;
                for (const auto& f : out.surface.fibers) {
                    if (f.place.label() == stored.place.label() &&
                        f.type == stored.type && f.degree == stored.degree) {
                        found = true;
                        break;
                    }
                }
                if (!found)
                    throw VerificationError("catalog entry " + name + ": stored fiber " +
                                            ktype_str(stored.type) + " at " +
                                            stored.place.label() +
                                            " not reproduced by classification");
            }
        } else {
            out.surface = surface_from_fibers(e.fibers, 0);
        }
        out.torsion = torsion_group(out.surface);
        if (out.torsion.N != e.torsion_N || out.torsion.Nprime != e.torsion_Nprime)
            throw VerificationError(
                "catalog entry " + name + ": computed torsion Z/" +
                std::to_string(out.torsion.N) + " x Z/" + std::to_string(out.torsion.Nprime) +
                " differs from stored Z/" + std::to_string(e.torsion_N) + " x Z/" +
                std::to_string(e.torsion_Nprime));
        return out;
    }
    throw Error("unknown-catalog-name", "no catalog entry named '" + name + "'",
                {{"name", name}});
}

}  // namespace ellsurf
