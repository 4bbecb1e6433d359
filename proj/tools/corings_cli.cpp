#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "corings/galois.hpp"
#include "corings/io.hpp"

using namespace corings;

namespace {

struct Options {
    bool json = false;
    bool verbose = false;
    std::string field_name = "Q";
};

StructureFile load(const std::string& path, const Options& opt) {
    if (path.rfind("demo:", 0) == 0) {
        const std::string name = path.substr(5);
        try {
            return from_demo(make_demo(name, parse_field_name(opt.field_name)));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return parse_structure(j);
}

template <typename T>
const T& need(const std::optional<T>& s, const char* what) {
    if (!s) throw ParseError(std::string("input has no ") + what + " section");
    return *s;
}

WeakBialgebra bialgebra_of(const StructureFile& s) {
    const FinAlgebra& a = need(s.algebra, "algebra");
    const FinCoalgebra& c = need(s.coalgebra, "coalgebra");
    if (a.dim != c.dim) throw ParseError("algebra and coalgebra dimensions differ");
    return {a, c};
}

WeakHopf hopf_of(const StructureFile& s) {
    WeakHopf h;
    static_cast<WeakBialgebra&>(h) = bialgebra_of(s);
    h.antipode = need(s.antipode, "antipode");
    return h;
}

WeakEntwiningRR entwining_rr_of(const StructureFile& s) {
    return {need(s.algebra, "algebra"), need(s.coalgebra, "coalgebra"), need(s.psi_r, "psiR")};
}

InvertibleWeakEntwining invertible_of(const StructureFile& s) {
    return {need(s.algebra, "algebra"), need(s.coalgebra, "coalgebra"), need(s.psi_r, "psiR"),
            need(s.psi_l, "psiL")};
}

int emit(const Report& rep, const Options& opt, json extra = json::object()) {
    if (opt.json) {
        json out = report_to_json(rep);
        for (auto& [k, v] : extra.items()) out[k] = v;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << rep.title << ": " << rep.status() << "\n";
        if (rep.not_applicable) std::cout << "  hypothesis failed: " << rep.hypothesis_failed << "\n";
        for (const auto& c : rep.checks) {
            if (c.ok && !opt.verbose) continue;
            std::cout << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name;
            if (!c.ok && !c.witness.empty()) std::cout << ": " << c.witness;
            std::cout << "\n";
        }
        if (opt.verbose)
            for (const auto& [k, v] : rep.dims) std::cout << "  dim " << k << " = " << v << "\n";
    }
    return rep.pass() ? 0 : 1;
}

Report run_check(const std::string& what, const StructureFile& s) {
    if (what == "algebra") return check_algebra(need(s.algebra, "algebra"));
    if (what == "coalgebra") return check_coalgebra(need(s.coalgebra, "coalgebra"));
    if (what == "weak-entwining-rr") return check_weak_entwining_rr(entwining_rr_of(s));
    if (what == "weak-entwining-ll")
        return check_weak_entwining_ll({need(s.algebra, "algebra"), need(s.coalgebra, "coalgebra"),
                                        need(s.psi_l, "psiL")});
    if (what == "invertible") return check_invertible_weak_entwining(invertible_of(s));
    if (what == "weak-bialgebra") return check_weak_bialgebra(bialgebra_of(s));
    if (what == "weak-hopf") return check_weak_hopf(hopf_of(s));
    if (what == "comodule-algebra")
        return check_comodule_algebra(bialgebra_of(s),
                                      {need(s.algebra, "algebra"), need(s.coaction, "coaction")});
    if (what == "module-coalgebra")
        return check_module_coalgebra(bialgebra_of(s),
                                      {need(s.coalgebra, "coalgebra"), need(s.action, "action")});
    if (what == "entwined-module") {
        WeakEntwiningRR w = entwining_rr_of(s);
        RightModule m{w.A.dim, w.A, w.A.mul};
        RightComodule co{w.A.dim, w.C, need(s.coaction, "coaction")};
        return check_entwined_module_rr(w, m, co);
    }
    throw CLI::ValidationError("--what", "unknown target " + what);
}

json coring_to_json(const ACoring& c) {
    json out;
    out["dim"] = c.dim();
    out["inclusion"] = io_detail::dump_matrix(c.incl);
    out["counit"] = io_detail::dump_matrix(c.counit);
    out["leftAction"] = io_detail::dump_matrix(c.left_act);
    out["rightAction"] = io_detail::dump_matrix(c.right_act);
    out["coproduct"] = io_detail::dump_matrix(c.coproduct_raw);
    return out;
}

Report run_galois(const std::string& route, const StructureFile& s) {
    if (route == "direct") return galois_direct(entwining_rr_of(s), need(s.coaction, "coaction"));
    if (route == "coseparable") return coseparable_pipeline(invertible_of(s), need(s.coaction, "coaction"));
    if (route == "projective") return projective_pipeline(invertible_of(s), need(s.coaction, "coaction"));
    if (route == "kreimer-takeuchi") {
        WeakHopf h = hopf_of(s);
        return finite_hopf_pipeline(h, {h.algebra, need(s.coaction, "coaction")});
    }
    if (route == "subalgebra")
        return comodule_subalgebra_pipeline(hopf_of(s), need(s.subalgebra, "subalgebra")).rep;
    throw CLI::ValidationError("--route", "unknown route " + route);
}

json galois_extras(const Report& rep) {
    json extra = json::object();
    for (const auto& c : rep.checks) {
        const std::string& n = c.name;
        if (n == "bijective" || (n.size() > 11 && n.compare(n.size() - 11, 11, ": bijective") == 0)) {
            extra["canBijective"] = c.ok;
            break;
        }
    }
    return extra;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for entwining structures, corings, and coalgebra-Galois extensions"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "machine-readable report on stdout");
    app.add_flag("--verbose", opt.verbose, "include passing checks, witnesses, and dimensions");
    app.add_option("--field", opt.field_name, "field for demo inputs: Q or Fp:<p>")->capture_default_str();

    std::string path, what, side = "rr", route = "direct", out_path, demo_name;

    auto* cmd_check = app.add_subcommand("check", "verify one axiom system");
    cmd_check->fallthrough();
    cmd_check->add_option("--what", what, "structure to verify")->required();
    cmd_check->add_option("path", path, "input file or demo:<name>")->required();

    auto* cmd_coring = app.add_subcommand("coring", "build the induced coring and verify its laws");
    cmd_coring->fallthrough();
    cmd_coring->add_option("path", path)->required();
    cmd_coring->add_option("--side", side)->check(CLI::IsMember({"rr", "ll"}));
    cmd_coring->add_option("--out", out_path, "write the coring data as JSON");

    auto* cmd_galois = app.add_subcommand("galois", "run a Galois-extension verification route");
    cmd_galois->fallthrough();
    cmd_galois->add_option("path", path)->required();
    cmd_galois->add_option("--route", route)
        ->check(CLI::IsMember({"direct", "coseparable", "projective", "kreimer-takeuchi", "subalgebra"}));

    auto* cmd_coint = app.add_subcommand("cointegral", "solve for a cointegral of the coalgebra");
    cmd_coint->fallthrough();
    cmd_coint->add_option("path", path)->required();

    auto* cmd_demo = app.add_subcommand("demo", "print a named built-in structure file");
    cmd_demo->fallthrough();
    cmd_demo->add_option("name", demo_name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_check) return emit(run_check(what, load(path, opt)), opt);
        if (*cmd_coring) {
            StructureFile s = load(path, opt);
            ACoring c = side == "rr"
                            ? build_coring_rr(entwining_rr_of(s))
                            : build_coring_ll({need(s.algebra, "algebra"), need(s.coalgebra, "coalgebra"),
                                               need(s.psi_l, "psiL")});
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out) throw ParseError(out_path + ": cannot open for writing");
                out << coring_to_json(c).dump(2) << "\n";
            }
            return emit(verify_coring(c), opt);
        }
        if (*cmd_galois) {
            Report rep = run_galois(route, load(path, opt));
            return emit(rep, opt, galois_extras(rep));
        }
        if (*cmd_coint) {
            StructureFile s = load(path, opt);
            const FinCoalgebra& c = need(s.coalgebra, "coalgebra");
            auto delta = find_cointegral(c);
            if (!delta) {
                Report rep{"cointegral"};
                rep.add("cointegral exists", false, "the defining linear system has no solution");
                return emit(rep, opt);
            }
            json extra = json::object();
            if (opt.json) extra["cointegral"] = io_detail::dump_matrix(*delta);
            return emit(check_cointegral(c, *delta), opt, std::move(extra));
        }
        if (*cmd_demo) {
            StructureFile s = load("demo:" + demo_name, opt);
            std::cout << serialize(s).dump(2) << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const TheoremViolation& e) {
        std::cerr << "guaranteed conclusion failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
