// JSON (de)serialization for every CLI-facing schema: polynomials as arrays
// of rational strings (index = degree), places, Weierstrass models, Gram
// matrices, construction inputs, isotrivial datasets, and the report types.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <ellsurf/catalog.hpp>
#include <ellsurf/construction.hpp>
#include <ellsurf/isotrivial.hpp>
#include <ellsurf/lattice.hpp>
#include <ellsurf/modular.hpp>
#include <ellsurf/torsion.hpp>

namespace ellsurf {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

inline Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw Error("bad-json", "expected a rational as integer or \"p/q\" string");
}

inline Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw Error("bad-json", "expected a polynomial as a coefficient array");
    std::vector<Rat> coeffs;
    for (const auto& c : j) coeffs.push_back(rat_from_json(c));
    return Poly(std::move(coeffs));
}

inline json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (int i = 0; i <= p.deg(); ++i) arr.push_back(rat_str(p.c[i]));
    if (p.is_zero()) arr.push_back("0");
    return arr;
}

inline Place place_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw Error("bad-json", "expected a place as {\"kind\": ...}");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "infinity") return place_infinity();
    if (kind == "finite") return place_finite(poly_from_json(j.at("poly")));
    throw Error("bad-json", "unknown place kind '" + kind + "'");
}

inline json place_to_json(const Place& p) {
    if (p.at_infinity) return json{{"kind", "infinity"}};
    return json{{"kind", "finite"}, {"poly", poly_to_json(p.poly)}};
}

inline WeierstrassModel model_from_json(const json& j) {
    if (!j.is_object()) throw Error("bad-json", "expected a model object");
    WeierstrassModel w;
    auto get = [&](const char* key) {
        return j.contains(key) ? poly_from_json(j.at(key)) : Poly::zero();
    };
    w.a1 = get("a1");
    w.a2 = get("a2");
    w.a3 = get("a3");
    w.a4 = get("a4");
    w.a6 = get("a6");
    if (j.contains("base_genus")) w.base_genus = j.at("base_genus").get<int>();
    return w;
}

inline json model_to_json(const WeierstrassModel& w) {
    return json{{"a1", poly_to_json(w.a1)}, {"a2", poly_to_json(w.a2)},
                {"a3", poly_to_json(w.a3)}, {"a4", poly_to_json(w.a4)},
                {"a6", poly_to_json(w.a6)}, {"base_genus", w.base_genus}};
}

inline MatZ gram_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw Error("bad-json", "expected a Gram matrix as an array of integer rows");
    MatZ m;
    for (const auto& row : j) {
        if (!row.is_array()) throw Error("bad-json", "Gram matrix rows must be arrays");
        std::vector<Int> r;
        for (const auto& x : row) {
            if (x.is_number_integer())
                r.push_back(Int(x.get<long>()));
            else if (x.is_string())
                r.push_back(Int(x.get<std::string>()));
            else
                throw Error("bad-json", "Gram entries must be integers");
        }
        m.push_back(std::move(r));
    }
    for (const auto& r : m)
        if (r.size() != m.size())
            throw Error("bad-json", "Gram matrix must be square");
    return m;
}

// construction input: {"jacobian": "catalog:NAME" | {model...},
//   "group": {"N":..,"Nprime":..,"incidence":{"label":[i1,i2],...}},
//   "branch": [{"point":"inf","monodromy":[a] or [a,b]}, ...]}
inline ConstructionInput construction_from_json(const json& j) {
    if (!j.is_object()) throw Error("bad-json", "expected a construction object");
    ConstructionInput in;

    const json& jac = j.at("jacobian");
    if (jac.is_string()) {
        std::string ref = jac.get<std::string>();
        const std::string prefix = "catalog:";
        if (ref.rfind(prefix, 0) != 0)
            throw Error("bad-json", "jacobian string must be \"catalog:NAME\"");
        CatalogSurface cs = catalog_get(ref.substr(prefix.size()));
        in.catalog_name = cs.entry.name;
        in.rotation_order = cs.entry.rotation_order;
        if (cs.entry.has_model) {
            in.has_model = true;
            in.model = cs.entry.model;
        } else {
            in.fibers = cs.entry.fibers;
            in.base_genus = 0;
        }
    } else {
        in.has_model = true;
        in.model = model_from_json(jac);
        if (j.contains("rotation_order")) in.rotation_order = j.at("rotation_order").get<long>();
    }

    const json& grp = j.at("group");
    in.group.N = grp.at("N").get<long>();
    in.group.Nprime = grp.contains("Nprime") ? grp.at("Nprime").get<long>() : 1;
    if (grp.contains("incidence"))
        for (auto it = grp.at("incidence").begin(); it != grp.at("incidence").end(); ++it) {
            std::vector<long> idx;
            for (const auto& x : it.value()) idx.push_back(x.get<long>());
            in.group.incidence[it.key()] = std::move(idx);
        }

    for (const auto& b : j.at("branch")) {
        BranchDatum bd;
        bd.point = b.at("point").get<std::string>();
        for (const auto& m : b.at("monodromy")) bd.monodromy.push_back(m.get<long>());
        in.branch.push_back(std::move(bd));
    }
    return in;
}

// isotrivial input: {"r":4, "T":[["1/2","1/2"]], "base_genus":0,
//   "monodromies":[{"lambda":1,"c":["0","0"]}, ...]}
inline IsotrivialData isotrivial_from_json(const json& j) {
    if (!j.is_object()) throw Error("bad-json", "expected an isotrivial dataset object");
    IsotrivialData d;
    d.r = j.at("r").get<int>();
    Ring ring = ring_for_r(d.r);
    if (j.contains("T"))
        for (const auto& g : j.at("T")) {
            if (!g.is_array() || g.size() != 2)
                throw Error("bad-json", "torsion points are coordinate pairs");
            d.T_gens.push_back(tp(ring, rat_from_json(g[0]), rat_from_json(g[1])));
        }
    if (j.contains("base_genus")) d.base_genus = j.at("base_genus").get<int>();
    for (const auto& m : j.at("monodromies")) {
        IsoMonodromy im;
        im.lam = m.at("lambda").get<long>();
        const json& c = m.at("c");
        if (!c.is_array() || c.size() != 2)
            throw Error("bad-json", "torsion points are coordinate pairs");
        im.c = tp(ring, rat_from_json(c[0]), rat_from_json(c[1]));
        d.monodromies.push_back(im);
    }
    return d;
}

// ---------------------------------------------------------------------------
// Report serialization
// ---------------------------------------------------------------------------

inline json fiber_to_json(const FiberRecord& f) {
    return json{{"place", f.place.label()},
                {"type", ktype_str(f.type)},
                {"degree", f.degree},
                {"euler", f.euler},
                {"components", f.components},
                {"dynkin", f.dynkin},
                {"component_group", {f.comp_group.first, f.comp_group.second}},
                {"additive", f.additive}};
}

inline json surface_to_json(const SurfaceData& s) {
    json fibers = json::array();
    for (const auto& f : s.fibers) fibers.push_back(fiber_to_json(f));
    return json{{"fibers", fibers},
                {"e", s.e},
                {"chi", s.chi},
                {"q", s.q},
                {"p_g", s.p_g},
                {"b2", s.b2},
                {"h11", s.h11},
                {"trivial_rank", s.triv_rank},
                {"extremal", s.chi > 0 && s.triv_rank == s.h11}};
}

inline json torsion_to_json(const TorsionGroup& t) {
    json slots = json::array();
    for (const auto& s : t.slots)
        slots.push_back(json{{"place", s.place.label()},
                             {"copy", s.copy},
                             {"type", ktype_str(s.type)},
                             {"component_group", {s.group.first, s.group.second}}});
    json gens = json::array();
    for (const auto& g : t.gens) gens.push_back(g);
    return json{{"N", t.N},
                {"Nprime", t.Nprime},
                {"order", t.order()},
                {"structure", t.N <= 1 ? "trivial"
                                       : (t.Nprime <= 1 ? "Z/" + std::to_string(t.N)
                                                        : "Z/" + std::to_string(t.N) + " x Z/" +
                                                              std::to_string(t.Nprime))},
                {"slots", slots},
                {"generators", gens}};
}

inline json disc_to_json(const DiscGroup& d) {
    json inv = json::array();
    for (long x : d.orders) inv.push_back(x);
    json gens = json::array();
    json qvals = json::array();
    for (size_t k = 0; k < d.orders.size(); ++k) {
        json coords = json::array();
        for (const auto& c : d.gens[k]) coords.push_back(rat_str(c));
        gens.push_back(coords);
        std::vector<long> e(d.orders.size(), 0);
        e[k] = 1;
        qvals.push_back(rat_str(d.q_value(e)));
    }
    return json{{"order", d.order()},
                {"invariants", inv},
                {"generators", gens},
                {"q_diagonal", qvals}};
}

inline json overlattice_to_json(const Overlattice& o) {
    json elems = json::array();
    for (const auto& g : o.subgroup) elems.push_back(g);
    return json{{"index", o.index},
                {"glue_subgroup", elems},
                {"det", o.det.get_str()},
                {"even", o.even}};
}

inline json split_to_json(const SplitResult& s) {
    json j{{"place", s.place.label()}, {"copy", s.copy}, {"n", s.n}, {"splits", s.splits}};
    if (s.witness)
        j["witness"] = json{{"P", {s.witness->Pa, s.witness->Pb}},
                            {"Pprime", {s.witness->Qa, s.witness->Qb}}};
    return j;
}

inline json construction_to_json(const ConstructionReport& r) {
    json splitting = json::array();
    for (const auto& s : r.splitting) splitting.push_back(split_to_json(s));

    json branches = json::array();
    for (const auto& b : r.transform.branches)
        branches.push_back(json{{"point", b.point},
                                {"element", {b.a, b.b}},
                                {"order", b.order},
                                {"at_singular_fiber", b.at_fiber}});
    json multiple = json::array();
    for (const auto& m : r.transform.multiple)
        multiple.push_back(json{{"point", m.point},
                                {"multiplicity", m.multiplicity},
                                {"reduced_type", ktype_str(m.reduced)},
                                {"smooth_support", m.smooth_support}});
    json sfibers = json::array();
    for (const auto& f : r.transform.s_fibers) sfibers.push_back(fiber_to_json(f));
    json upstairs = json::array();
    for (const auto& u : r.transform.upstairs)
        upstairs.push_back(
            json{{"point", u.point}, {"type", ktype_str(u.type)}, {"count", u.count}});

    json audit = json::array();
    for (const auto& a : r.audit.lines)
        audit.push_back(json{{"name", a.name}, {"detail", a.detail}, {"pass", a.pass}});

    json inv{{"e", r.invariants.e},
             {"chi", r.invariants.chi},
             {"q", r.invariants.q},
             {"p_g", r.invariants.p_g},
             {"kodaira_dimension", r.invariants.kod},
             {"enriques", r.invariants.enriques},
             {"canonical_degree", rat_str(r.invariants.canonical_degree)}};
    if (r.invariants.P2) inv["P2"] = *r.invariants.P2;
    if (!r.invariants.p2_note.empty()) inv["P2_note"] = r.invariants.p2_note;

    json autq{{"relation", r.autq.relation},
              {"group", r.autq.group},
              {"order", r.autq.order},
              {"order_exact", r.autq.order_exact},
              {"notes", r.autq.notes}};

    return json{{"group", group_name(r.group.N, r.group.Nprime)},
                {"group_order", r.group.order()},
                {"splitting", splitting},
                {"valuation_criterion", r.valuation_criterion},
                {"cover_degree", r.transform.cover_degree},
                {"branches", branches},
                {"multiple_fibers", multiple},
                {"singular_fibers", sfibers},
                {"cover_fibers", upstairs},
                {"invariants", inv},
                {"autq", autq},
                {"audit", audit},
                {"audit_pass", r.audit.all_pass}};
}

inline json isotrivial_to_json(const IsotrivialReport& r) {
    json T = json::array();
    for (const auto& t : r.group.T) T.push_back(tp_str(t));
    json sing = json::array();
    for (const auto& s : r.singularities) {
        json chain = json::array();
        for (long b : s.chain) chain.push_back(b);
        sing.push_back(json{{"branch", s.branch + 1},
                            {"representative", tp_str(s.rep)},
                            {"type", "1/" + std::to_string(s.m) + "(1," + std::to_string(s.k) + ")"},
                            {"hj_chain", chain}});
    }
    json fibers = json::array();
    for (const auto& f : r.fibers) {
        json e{{"point", f.point}};
        if (f.multiple) {
            e["multiple"] = true;
            e["multiplicity"] = f.multiplicity;
            e["type"] = std::to_string(f.multiplicity) + "I0";
        } else {
            e["multiple"] = false;
            e["type"] = ktype_str(f.type);
        }
        fibers.push_back(e);
    }
    return json{{"r", r.group.r},
                {"ring", ring_name(r.group.ring)},
                {"group_order", r.group.order()},
                {"T", T},
                {"g_C", r.genera.g_C},
                {"g_D", r.genera.g_D},
                {"factorization", r.genera.factorization},
                {"singularities", sing},
                {"fibers", fibers},
                {"invariants",
                 {{"e", r.invariants.e},
                  {"chi", r.invariants.chi},
                  {"q", r.invariants.q},
                  {"p_g", r.invariants.p_g},
                  {"b2", r.invariants.b2},
                  {"multiple_fibers", r.invariants.s}}},
                {"center_order", r.center_order},
                {"zs_log", r.zs_log},
                {"bounds",
                 {{"autz_cap", r.bounds.autz_cap},
                  {"autz_rule", r.bounds.autz_rule},
                  {"autq_cap", r.bounds.autq_cap},
                  {"autq_rule", r.bounds.autq_rule}}}};
}

inline json numreport_to_json(const NumReport& n) {
    return json{{"lambda_ok", n.lambda_ok},       {"num_ok", n.num_ok},
                {"shortcut_ok", n.shortcut_ok},   {"star_override", n.star_override},
                {"center_order", n.center_order}, {"verdict", n.verdict}};
}

inline json error_to_json(const Error& e) {
    json ctx = json::object();
    for (const auto& [k, v] : e.context) ctx[k] = v;
    return json{{"error", {{"code", e.code}, {"detail", e.what()}, {"context", ctx}}}};
}

}  // namespace ellsurf
