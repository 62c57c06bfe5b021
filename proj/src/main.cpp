// Command-line front end: classification, torsion, lattices, modular
// bounds, the two construction engines, the built-in catalog, and the
// verify-paper regression command.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <ellsurf/ellsurf.hpp>

namespace {

using namespace ellsurf;

bool color_enabled() {
    const char* v = std::getenv("ELLSURF_COLOR");
    return v == nullptr || std::string(v) != "0";
}

std::string paint(const std::string& s, const char* code) {
    if (!color_enabled()) return s;
    return std::string("\033[") + code + "m" + s + "\033[0m";
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot open file", {{"path", path}});
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error("bad-json", e.what(), {{"path", path}});
    }
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ----- classify -----

void print_surface_table(const SurfaceData& s) {
    std::cout << std::left << std::setw(14) << "place" << std::setw(6) << "deg"
              << std::setw(8) << "type" << std::setw(4) << "e" << std::setw(6) << "comps"
              << std::setw(8) << "dynkin" << std::setw(12) << "comp group"
              << "v(c4) v(c6) v(D)\n";
    for (const auto& f : s.fibers) {
        std::string grp = f.comp_group.second > 1
                              ? "Z/" + std::to_string(f.comp_group.first) + " x Z/" +
                                    std::to_string(f.comp_group.second)
                              : (f.comp_group.first > 1
                                     ? "Z/" + std::to_string(f.comp_group.first)
                                     : "0");
        auto vs = [](long v) { return v >= (1L << 40) ? std::string("inf") : std::to_string(v); };
        std::cout << std::left << std::setw(14) << f.place.label() << std::setw(6) << f.degree
                  << std::setw(8) << ktype_str(f.type) << std::setw(4) << f.euler
                  << std::setw(6) << f.components << std::setw(8)
                  << (f.dynkin.empty() ? "-" : f.dynkin) << std::setw(12) << grp << vs(f.v_c4)
                  << "    " << vs(f.v_c6) << "    " << vs(f.v_delta) << "\n";
    }
    std::cout << "\n"
              << "e = " << s.e << "  chi = " << s.chi << "  q = " << s.q
              << "  p_g = " << s.p_g << "  b2 = " << s.b2 << "  h11 = " << s.h11
              << "  rank Triv = " << s.triv_rank << "\n";
    ShiodaTate st = shioda_tate(s);
    std::cout << "rho >= " << st.rho_lower << (st.extremal ? "  (extremal)" : "") << "\n";
}

int cmd_classify(const std::string& model_path, bool as_json) {
    WeierstrassModel w = model_from_json(load_json_file(model_path));
    SurfaceData s = classify_all(w);
    if (as_json)
        print_json(surface_to_json(s));
    else
        print_surface_table(s);
    return 0;
}

// ----- torsion -----

int cmd_torsion(const std::string& model_path, const std::string& catalog_name, bool as_json) {
    SurfaceData s;
    if (!catalog_name.empty()) {
        s = catalog_get(catalog_name).surface;
    } else {
        s = classify_all(model_from_json(load_json_file(model_path)));
    }
    TorsionGroup t = torsion_group(s);
    if (as_json) {
        print_json(torsion_to_json(t));
        return 0;
    }
    if (t.N <= 1) {
        std::cout << "torsion: trivial\n";
        return 0;
    }
    std::cout << "torsion: Z/" << t.N;
    if (t.Nprime > 1) std::cout << " x Z/" << t.Nprime;
    std::cout << "  (order " << t.order() << ")\n";
    for (size_t g = 0; g < t.gens.size(); ++g) {
        std::cout << "  generator " << g + 1 << ": ";
        for (size_t j = 0; j < t.slots.size(); ++j) {
            if (j) std::cout << ", ";
            std::cout << t.slots[j].place.label();
            if (t.slots[j].copy) std::cout << "#" << t.slots[j].copy + 1;
            std::cout << " -> " << t.gens[g][j];
        }
        std::cout << "\n";
    }
    return 0;
}

// ----- lattice -----

int cmd_lattice(const std::string& gram_path, bool overlattices, bool even_only, bool as_json) {
    MatZ g = gram_from_json(load_json_file(gram_path));
    IntegralLattice L = make_lattice(std::move(g));
    DiscGroup d = disc_group(L);
    json out;
    out["rank"] = L.rank();
    out["det"] = lattice_det(L).get_str();
    out["even"] = L.is_even();
    out["disc"] = disc_to_json(d);
    if (overlattices) {
        auto over = enumerate_overlattices(L, even_only);
        out["overlattices"] = json::array();
        for (const auto& o : over) out["overlattices"].push_back(overlattice_to_json(o));
    }
    if (as_json) {
        print_json(out);
        return 0;
    }
    std::cout << "rank " << L.rank() << ", det " << lattice_det(L).get_str() << ", "
              << (L.is_even() ? "even" : "odd") << "\n";
    std::cout << "disc group: ";
    if (d.orders.empty()) {
        std::cout << "trivial\n";
    } else {
        for (size_t i = 0; i < d.orders.size(); ++i)
            std::cout << (i ? " x " : "") << "Z/" << d.orders[i];
        std::cout << "\n";
        for (size_t i = 0; i < d.orders.size(); ++i) {
            std::vector<long> e(d.orders.size(), 0);
            e[i] = 1;
            std::cout << "  q(g" << i + 1 << ") = " << rat_str(d.q_value(e)) << "  (mod 2Z)\n";
        }
    }
    if (overlattices) {
        auto over = enumerate_overlattices(L, even_only);
        std::cout << (even_only ? "even " : "") << "overlattices: " << over.size() << "\n";
        for (const auto& o : over) {
            std::cout << "  index " << o.index << ", det " << o.det.get_str() << ", "
                      << (o.even ? "even" : "odd") << ", glue {";
            for (size_t i = 0; i < o.subgroup.size(); ++i) {
                if (i) std::cout << ", ";
                std::cout << "(";
                for (size_t j = 0; j < o.subgroup[i].size(); ++j)
                    std::cout << (j ? "," : "") << o.subgroup[i][j];
                std::cout << ")";
            }
            std::cout << "}\n";
        }
    }
    return 0;
}

// ----- modular -----

int cmd_modular(const std::string& range, long N, long genus, bool isotrivial, bool as_json) {
    if (!range.empty()) {
        auto dots = range.find("..");
        if (dots == std::string::npos)
            throw Error("bad-argument", "range must look like 11..25", {{"range", range}});
        long lo = std::stol(range.substr(0, dots));
        long hi = std::stol(range.substr(dots + 2));
        if (lo > hi || lo < 5)
            throw Error("bad-argument", "range must satisfy 5 <= lo <= hi");
        if (as_json) {
            json rows = json::array();
            for (long n = lo; n <= hi; ++n)
                rows.push_back({{"N", n},
                                {"g1", genus_g1(n)},
                                {"s", rat_str(s_func(n))},
                                {"u", rat_str(u_func(n))},
                                {"t", rat_str(t_func(n))}});
            print_json(rows);
            return 0;
        }
        std::cout << std::left << std::setw(6) << "N" << std::setw(6) << "g1" << std::setw(12)
                  << "s" << std::setw(14) << "u" << "t\n";
        for (long n = lo; n <= hi; ++n)
            std::cout << std::left << std::setw(6) << n << std::setw(6) << genus_g1(n)
                      << std::setw(12) << rat_str(s_func(n)) << std::setw(14)
                      << rat_str(u_func(n)) << rat_str(t_func(n)) << "\n";
        return 0;
    }
    if (N > 0) {
        json out{{"N", N},
                 {"s", rat_str(s_func(N))},
                 {"u", rat_str(u_func(N))},
                 {"t", rat_str(t_func(N))}};
        if (N >= 5) {
            out["g1"] = genus_g1(N);
            out["g1_lower_bound_certified"] = check_g1_lower(N);
        }
        if (as_json)
            print_json(out);
        else {
            std::cout << "N = " << N << ": s = " << rat_str(s_func(N))
                      << ", u = " << rat_str(u_func(N)) << ", t = " << rat_str(t_func(N));
            if (N >= 5)
                std::cout << ", g1 = " << genus_g1(N) << " (lower bound "
                          << (check_g1_lower(N) ? "certified" : "not certified") << ")";
            std::cout << "\n";
        }
        return 0;
    }
    if (genus >= 0) {
        TorsionBound b = mw_torsion_bound(genus, isotrivial);
        json out{{"genus", genus}, {"isotrivial", b.isotrivial}, {"bound", b.bound}};
        if (b.sharp) out["sharp"] = *b.sharp;
        if (as_json)
            print_json(out);
        else {
            std::cout << "torsion order bound at genus " << genus
                      << (isotrivial ? " (isotrivial)" : "") << ": " << b.bound;
            if (b.sharp) std::cout << "  (sharp: " << *b.sharp << ")";
            std::cout << "\n";
        }
        return 0;
    }
    throw Error("bad-argument", "nothing to do: pass --table, --N, or --bound");
}

// ----- construct / isotrivial -----

void print_audit(const BoundAudit& audit) {
    for (const auto& a : audit.lines)
        std::cout << "  " << (a.pass ? paint("ok  ", "32") : paint("FAIL", "31")) << " "
                  << std::left << std::setw(26) << a.name << " " << a.detail << "\n";
}

int cmd_construct(const std::string& input_path, bool as_json) {
    ConstructionInput in = construction_from_json(load_json_file(input_path));
    ConstructionReport r = construct_report(in);
    if (as_json) {
        print_json(construction_to_json(r));
        return r.audit.all_pass ? 0 : 2;
    }
    std::cout << "group G = " << group_name(r.group.N, r.group.Nprime) << " (order "
              << r.group.order() << ")\n";
    std::cout << "valuation criterion: " << (r.valuation_criterion ? "applies" : "not conclusive")
              << "; brute-force splitting verified at " << r.splitting.size()
              << " semistable fiber(s)\n";
    std::cout << "cover degree " << r.transform.cover_degree << ", branch points:";
    for (const auto& b : r.transform.branches)
        std::cout << " " << b.point << "(order " << b.order << ")";
    std::cout << "\nmultiple fibers:";
    for (const auto& m : r.transform.multiple)
        std::cout << " " << m.multiplicity << ktype_str(m.reduced) << "@" << m.point;
    std::cout << "\ninvariants: e = " << r.invariants.e << ", chi = " << r.invariants.chi
              << ", q = " << r.invariants.q << ", p_g = " << r.invariants.p_g
              << ", kod = " << r.invariants.kod
              << (r.invariants.enriques ? " (Enriques)" : "") << "\n";
    if (r.invariants.P2)
        std::cout << "P2 = " << *r.invariants.P2
                  << (r.invariants.p2_note.empty() ? "" : "  [" + r.invariants.p2_note + "]")
                  << "\n";
    std::cout << "Aut_Q: " << r.autq.relation << " " << r.autq.group;
    if (r.autq.order > 0)
        std::cout << ", order " << (r.autq.order_exact ? "= " : ">= ") << r.autq.order;
    std::cout << "\n";
    for (const auto& n : r.autq.notes) std::cout << "  note: " << n << "\n";
    std::cout << "bound audit:\n";
    print_audit(r.audit);
    return r.audit.all_pass ? 0 : 2;
}

int cmd_isotrivial(const std::string& input_path, bool as_json) {
    IsotrivialData d = isotrivial_from_json(load_json_file(input_path));
    IsotrivialReport r = isotrivial_report(d);
    if (as_json) {
        print_json(isotrivial_to_json(r));
        return 0;
    }
    std::cout << "G = T x| mu_" << r.group.r << " of order " << r.group.order() << " over "
              << ring_name(r.group.ring) << "\n";
    std::cout << "genera: g(C) = " << r.genera.g_C << ", g(D) = " << r.genera.g_D
              << "; elliptic branch count " << r.genera.elliptic_count << "\n";
    std::cout << "  " << r.genera.factorization << "\n";
    std::cout << "fibers:";
    for (const auto& f : r.fibers) {
        std::cout << " ";
        if (f.multiple) std::cout << f.multiplicity;
        std::cout << ktype_str(f.type) << "@" << f.point;
    }
    std::cout << "\nsingular points of C x E / G:\n";
    for (const auto& s : r.singularities) {
        std::cout << "  1/" << s.m << "(1," << s.k << ") at branch " << s.branch + 1
                  << ", chain [";
        for (size_t i = 0; i < s.chain.size(); ++i)
            std::cout << (i ? ", " : "") << s.chain[i];
        std::cout << "]\n";
    }
    std::cout << "invariants: e = " << r.invariants.e << ", chi = " << r.invariants.chi
              << ", q = " << r.invariants.q << ", p_g = " << r.invariants.p_g
              << ", b2 = " << r.invariants.b2 << ", multiple fibers s = " << r.invariants.s
              << "\n";
    std::cout << "center |Z(G)| = " << r.center_order << "\n";
    std::cout << "Aut_Z cap " << r.bounds.autz_cap << " (" << r.bounds.autz_rule << ")\n";
    std::cout << "Aut_Q cap " << r.bounds.autq_cap << " (" << r.bounds.autq_rule << ")\n";
    return 0;
}

// ----- catalog -----

int cmd_catalog(const std::string& name, bool as_json) {
    if (name.empty()) {
        if (as_json) {
            json out = json::array();
            for (const auto& n : catalog_names()) {
                const CatalogEntry* e = nullptr;
                for (const auto& c : catalog_entries())
                    if (c.name == n) e = &c;
                out.push_back({{"name", n}, {"equation", e ? e->equation : ""}});
            }
            print_json(out);
            return 0;
        }
        std::cout << std::left << std::setw(10) << "name" << "equation\n";
        for (const auto& e : catalog_entries())
            std::cout << std::left << std::setw(10) << e.name
                      << (e.has_model ? e.equation : "(fiber data only)") << "\n";
        return 0;
    }
    CatalogSurface cs = catalog_get(name);
    if (as_json) {
        json out{{"name", cs.entry.name},
                 {"equation", cs.entry.equation},
                 {"notes", cs.entry.notes},
                 {"surface", surface_to_json(cs.surface)},
                 {"torsion", torsion_to_json(cs.torsion)}};
        print_json(out);
        return 0;
    }
    std::cout << cs.entry.name << ": "
              << (cs.entry.has_model ? cs.entry.equation : "(fiber data only)") << "\n";
    if (!cs.entry.notes.empty()) std::cout << cs.entry.notes << "\n";
    print_surface_table(cs.surface);
    std::cout << "torsion: Z/" << cs.torsion.N;
    if (cs.torsion.Nprime > 1) std::cout << " x Z/" << cs.torsion.Nprime;
    std::cout << "\n";
    return 0;
}

// ----- verify-paper -----

int cmd_verify(unsigned long seed, const std::string& pattern, bool as_json) {
    int failures = 0;
    json rows = json::array();
    int ran = 0;
    for (const auto& c : verify_cases()) {
        if (!pattern.empty() && !glob_match(pattern, c.id)) continue;
        ++ran;
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            c.run(seed);
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        if (!ok) ++failures;
        if (as_json) {
            json row{{"id", c.id},     {"criterion", c.criterion}, {"kind", c.kind},
                     {"source", c.source}, {"status", ok ? "pass" : "fail"}, {"ms", ms}};
            if (!ok) row["detail"] = detail;
            rows.push_back(row);
        } else {
            std::ostringstream line;
            line << (ok ? paint("PASS", "32") : paint("FAIL", "31")) << "  " << std::left
                 << std::setw(36) << c.id << " [" << c.kind << ", " << c.source << "]";
            std::cout << line.str();
            if (!ok) std::cout << "\n      " << detail;
            std::cout << "\n";
        }
    }
    if (ran == 0 && !pattern.empty())
        std::cerr << "note: no cases match '" << pattern << "'\n";
    if (as_json)
        print_json(json{{"cases", rows}, {"failures", failures}});
    else
        std::cout << "failures: " << failures << "\n";
    return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants, fiber types, torsion, and bound audits for elliptic "
                 "surfaces"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");
    bool as_table = false;
    app.add_flag("--table", as_table, "aligned text output (default)");

    std::string model_path, catalog_name, gram_path, input_path, range, cases_glob, cat_query;
    long modN = 0, bound_genus = -1;
    bool overlattices = false, even_only = false, isotrivial_flag = false;
    unsigned long seed = 20260819UL;

    auto* classify = app.add_subcommand("classify", "Kodaira fiber types of a model");
    classify->add_option("--model", model_path, "model JSON file")->required();

    auto* torsion = app.add_subcommand("torsion", "Mordell-Weil torsion of a jacobian");
    torsion->add_option("--model", model_path, "model JSON file");
    torsion->add_option("--catalog", catalog_name, "catalog entry name");

    auto* lattice = app.add_subcommand("lattice", "discriminant groups and overlattices");
    lattice->add_option("--gram", gram_path, "Gram matrix JSON file")->required();
    lattice->add_flag("--overlattices", overlattices, "enumerate integral overlattices");
    lattice->add_flag("--even", even_only, "restrict to even overlattices");

    auto* modular = app.add_subcommand("modular", "modular-curve genus and torsion bounds");
    modular->add_option("--range", range, "print a table over N = lo..hi");
    modular->add_option("--N", modN, "single level N");
    modular->add_option("--bound", bound_genus, "torsion order bound at this base genus");
    modular->add_flag("--isotrivial", isotrivial_flag, "use the isotrivial cap");

    auto* construct = app.add_subcommand("construct", "run the logarithmic-transform engine");
    construct->add_option("--input", input_path, "construction JSON file")->required();

    auto* isotrivial = app.add_subcommand("isotrivial", "analyze an isotrivial quotient datum");
    isotrivial->add_option("--input", input_path, "isotrivial JSON file")->required();

    auto* catalog = app.add_subcommand("catalog", "list or show built-in surfaces");
    catalog->add_option("name", cat_query, "entry name");

    auto* verify = app.add_subcommand("verify-paper", "run the regression case registry");
    verify->add_option("--seed", seed, "seed for the randomized property suites");
    verify->add_option("--cases", cases_glob, "glob filter on case ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (*classify) return cmd_classify(model_path, as_json);
        if (*torsion) {
            if (model_path.empty() && catalog_name.empty())
                throw Error("bad-argument", "pass --model or --catalog");
            return cmd_torsion(model_path, catalog_name, as_json);
        }
        if (*lattice) return cmd_lattice(gram_path, overlattices, even_only, as_json);
        if (*modular) return cmd_modular(range, modN, bound_genus, isotrivial_flag, as_json);
        if (*construct) return cmd_construct(input_path, as_json);
        if (*isotrivial) return cmd_isotrivial(input_path, as_json);
        if (*catalog) return cmd_catalog(cat_query, as_json);
        if (*verify) return cmd_verify(seed, cases_glob, as_json);
    } catch (const VerificationError& e) {
        std::cerr << paint("verification failure", "31") << ": " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        if (as_json)
            std::cout << error_to_json(e).dump(2) << "\n";
        else
            std::cerr << paint("error", "31") << " [" << e.code << "] " << e.what() << "\n";
        return 1;
    }
    return 64;
}
