// Acceptance gate: twelve independently reported criteria, all exact.
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "corings/demos.hpp"
#include "corings/galois.hpp"
#include "corings/io.hpp"

using namespace corings;

static const FieldSpec Q = FieldSpec::rationals();

static WeakEntwiningRR rr_of(const DemoStructures& d) { return {*d.algebra, *d.coalgebra, *d.psi_r}; }
static InvertibleWeakEntwining inv_of(const DemoStructures& d) {
    return {*d.algebra, *d.coalgebra, *d.psi_r, *d.psi_l};
}
static WeakHopf hopf_of(const DemoStructures& d) {
    WeakHopf h;
    h.algebra = *d.algebra;
    h.coalgebra = *d.coalgebra;
    h.antipode = *d.antipode;
    return h;
}

static const std::vector<std::string> hopf_demos = {"k", "kz2", "diag2", "diag3", "pairgroupoid2"};

struct Criterion {
    std::ostringstream log;
    bool ok = true;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "    " << what << "\n";
        }
    }
    void require(const Report& rep, const std::string& what) {
        if (!rep.pass()) {
            ok = false;
            log << "    " << what << " [" << rep.title << ": " << rep.status() << "]\n";
            for (const auto& c : rep.checks)
                if (!c.ok) log << "      " << c.name << ": " << c.witness << "\n";
            if (rep.not_applicable) log << "      hypothesis failed: " << rep.hypothesis_failed << "\n";
        }
    }
};

// 1. Axiom suites on the demo catalog, with genuine-weakness certificates.
static void criterion1(Criterion& c) {
    for (const char* name : {"k", "kz2", "diag2", "diag3", "pairgroupoid2", "matrixco2"}) {
        auto d = make_demo(name, Q);
        if (d.algebra) c.require(check_algebra(*d.algebra), std::string(name) + ": algebra");
        if (d.coalgebra) c.require(check_coalgebra(*d.coalgebra), std::string(name) + ": coalgebra");
        if (d.algebra && d.coalgebra && d.antipode) {
            WeakHopf h = hopf_of(d);
            c.require(check_weak_bialgebra(h), std::string(name) + ": weak bialgebra");
            c.require(check_weak_hopf(h), std::string(name) + ": weak Hopf");
            c.require(check_comodule_algebra(h, regular_comodule_algebra(h)),
                      std::string(name) + ": comodule algebra");
            c.require(check_module_coalgebra(h, regular_module_coalgebra(h)),
                      std::string(name) + ": module coalgebra");
        }
    }
    for (const char* name : {"diag2", "pairgroupoid2"}) {
        auto d = make_demo(name, Q);
        auto d1 = compose(d.coalgebra->comul, d.algebra->unit).col_vector(0);
        auto unit2 = kron_vec(d.algebra->unit_vec(), d.algebra->unit_vec(), Q);
        c.require(d1 != unit2, std::string(name) + ": comultiplied unit must differ from the unit square");
    }
}

// 2. Projection laws as exact matrix identities.
static void criterion2(Criterion& c) {
    for (const auto& name : hopf_demos) {
        auto d = make_demo(name, Q);
        InvertibleWeakEntwining w = inv_of(d);
        const LinMap pr = projection_pr(w.right());
        const LinMap pl = projection_pl(w.left());
        c.require(compose(pr, pr) == pr, name + ": right projection idempotent");
        c.require(compose(pl, pl) == pl, name + ": left projection idempotent");
        c.require(compose(w.psi_r, w.psi_l) == pr, name + ": right after left is the right projection");
        c.require(compose(w.psi_l, w.psi_r) == pl, name + ": left after right is the left projection");
        c.require(compose(w.psi_r, pl) == w.psi_r, name + ": right map absorbs the left projection");
        c.require(compose(w.psi_l, pr) == w.psi_l, name + ": left map absorbs the right projection");
    }
}

// 3. Bijective entwining maps are strict, over the catalog and randomized
// valid entwinings over F_2 and F_3 with dimensions at most 3.
static void criterion3(Criterion& c) {
    auto vacuous_or_pass = [&](const Report& r, const std::string& what) {
        // a singular entwining map satisfies the implication vacuously
        c.require(r.pass() || r.not_applicable, what);
    };
    for (const auto& name : hopf_demos)
        vacuous_or_pass(check_bijective_implies_strict(rr_of(make_demo(name, Q))), name + ": catalog case");

    std::mt19937 rng(20240817);
    long found = 0, attempts = 0;
    const long wanted = 100, cap = 400000;
    while (found < wanted && attempts < cap) {
        ++attempts;
        const FieldSpec f = FieldSpec::prime(rng() % 2 ? 2 : 3);
        const long da = 1 + rng() % 3, dc = 1 + rng() % 3;
        auto d = make_demo(da == 1 ? "k" : (da == 2 ? "diag2" : "diag3"), f);
        FinAlgebra A = *d.algebra;
        FinCoalgebra C =
            *make_demo(dc == 1 ? "k" : (dc == 2 ? "diag2" : "diag3"), f).coalgebra;  // grouplikes
        LinMap psi(Shape{da, dc}, Shape{dc, da}, f);
        for (long i = 0; i < psi.rows(); ++i)
            for (long j = 0; j < psi.cols(); ++j)
                if (rng() % 3 == 0) psi.at(i, j) = Scalar::from_long(f, static_cast<long>(rng() % f.p));
        WeakEntwiningRR w{A, C, psi};
        if (!check_weak_entwining_rr(w).pass()) continue;
        ++found;
        vacuous_or_pass(check_bijective_implies_strict(w),
                        "random case " + std::to_string(found) + " (attempt " + std::to_string(attempts) + ")");
    }
    c.require(found == wanted,
              "collected " + std::to_string(found) + " random valid entwinings; wanted 100");
}

// 4. Coring laws with the frozen carriers and the diagonal grouplike.
static void criterion4(Criterion& c) {
    for (const auto& name : hopf_demos) {
        auto d = make_demo(name, Q);
        ACoring co = build_coring_rr(rr_of(d));
        c.require(verify_coring(co), name + ": coring laws");
        if (name == "kz2") c.require(co.dim() == 4, "kz2: carrier must be all of the ambient space");
        if (name == "diag2") {
            c.require(co.dim() == 2, "diag2: carrier dimension must be 2");
            std::vector<Scalar> g(4, Scalar::zero(Q));
            g[0] = Scalar::one(Q);
            g[3] = Scalar::one(Q);
            c.require(co.incl.apply(co.proj.apply(g)) == g, "diag2: diagonal element must lie in the carrier");
            c.require(check_grouplike(co, co.proj.apply(g)), "diag2: diagonal grouplike laws");
        }
    }
}

// 5. The restricted entwining maps are mutually inverse coring isomorphisms.
static void criterion5(Criterion& c) {
    for (const auto& name : hopf_demos)
        c.require(check_coring_isomorphism(inv_of(make_demo(name, Q))), name + ": coring isomorphism");
}

// 6. Extension verdicts with identified coinvariants, plus the negative control.
static void criterion6(Criterion& c) {
    struct Case {
        const char* name;
        std::function<Subspace(const DemoStructures&)> expected_B;
    };
    const std::vector<Case> cases = {
        {"kz2", [](const DemoStructures& d) { return span_of_units(Q, d.algebra->dim, {0}); }},
        {"diag2", [](const DemoStructures& d) { return Subspace::full(d.algebra->shape(), Q); }},
        {"pairgroupoid2", [](const DemoStructures& d) { return image(pi_right_bar(hopf_of(d))); }}};
    for (const auto& cs : cases) {
        auto d = make_demo(cs.name, Q);
        GaloisContext g = build_galois_context(rr_of(d), *d.coaction);
        Report ctx = check_galois_context(g);
        c.require(ctx, std::string(cs.name) + ": context checks (coinvariant cross-check)");
        c.require(g.B == cs.expected_B(d), std::string(cs.name) + ": coinvariants match the expected subalgebra");
        c.require(g.tensor_over_B.dim() == g.coring.dim(),
                  std::string(cs.name) + ": balanced tensor square dimension equals the coring dimension");
        c.require(canonical_map(g), std::string(cs.name) + ": canonical map bijective");
    }
    {
        auto d = make_demo("pairgroupoid2", Q);
        c.require(image(pi_right_bar(hopf_of(d))) == *make_demo("pairgroupoid2diag", Q).subalgebra,
                  "pairgroupoid2: projected image is the span of the two idempotent units");
    }
    auto neg = make_demo("trivialcoaction", Q);
    GaloisContext g = build_galois_context(rr_of(neg), *neg.coaction);
    Report cm = canonical_map(g);
    c.require(!cm.find("surjective")->ok, "negative control: canonical map must not be surjective");
    c.require(!galois_direct(rr_of(neg), *neg.coaction).pass(), "negative control: verdict must be non-Galois");
}

// 7. The coseparable route: cointegral, sections, colinear splitting, and the
// coaction exchange for two independent sections.
static void criterion7(Criterion& c) {
    for (const char* name : {"kz2", "diag2"}) {
        auto d = make_demo(name, Q);
        InvertibleGaloisContext g = build_invertible_galois_context(inv_of(d), *d.coaction);
        auto delta = find_cointegral(*d.coalgebra);
        c.require(delta.has_value(), std::string(name) + ": cointegral exists");
        if (!delta) continue;
        c.require(check_cointegral(*d.coalgebra, *delta), std::string(name) + ": cointegral laws");
        auto tau = find_section_tau(g.ctx);
        c.require(tau.has_value(), std::string(name) + ": linear section exists");
        if (!tau) continue;
        c.require(check_section_coactions(g, tau->particular), std::string(name) + ": coaction exchange");
        // a second, independent section when the solution space has positive dimension
        if (!tau->nullspace.empty())
            c.require(check_section_coactions(g, tau->particular + tau->nullspace.front()),
                      std::string(name) + ": coaction exchange for an independent section");
        KappaMaps k = build_kappa(g, *delta, tau->particular);
        c.require(k.rep, std::string(name) + ": colinear splitting of the canonical map");
        Report route = coseparable_pipeline(inv_of(d), *d.coaction);
        c.require(route, std::string(name) + ": route report");
        c.require(route.pass() == galois_direct(rr_of(d), *d.coaction).pass(),
                  std::string(name) + ": route verdict matches the direct oracle");
        CoinvariantAlgebra cb = coinvariant_algebra(*d.algebra, g.ctx.B);
        auto sigt = find_linear_splitting_left(*d.algebra, cb);
        c.require(sigt.has_value(), std::string(name) + ": linear splitting of the multiplication exists");
        if (sigt)
            c.require(check_equivariant_section(g.ctx, cb, equivariant_section(g.ctx, cb, *delta, *sigt)),
                      std::string(name) + ": equivariant section laws");
    }
}

// 8. The projective route: projectivity witness, invariant tensor square
// factorization, colinear unit section, and a colinear splitting.
static void criterion8(Criterion& c) {
    for (const char* name : {"diag2", "pairgroupoid2"}) {
        auto d = make_demo(name, Q);
        ComoduleProjectivity proj = comodule_projectivity(*d.coalgebra);
        c.require(proj.projective, std::string(name) + ": coalgebra projective as a comodule");
        c.require(proj.rep, std::string(name) + ": lifting witness");
        InvertibleGaloisContext g = build_invertible_galois_context(inv_of(d), *d.coaction);
        c.require(check_coinvariant_tensor_factorization(g.ctx),
                  std::string(name) + ": invariant tensor square factors through the coinvariants");
        const LinMap leftco = coring_left_coaction(g);
        c.require(compose(leftco, g.ell_coords) ==
                      compose(tensor(d.coalgebra->id(), g.ell_coords), d.coalgebra->comul),
                  std::string(name) + ": unit section left colinear");
        Report route = projective_pipeline(inv_of(d), *d.coaction);
        c.require(route, std::string(name) + ": route report (colinear section found and splitting)");
        c.require(route.pass() == galois_direct(rr_of(d), *d.coaction).pass(),
                  std::string(name) + ": route verdict matches the direct oracle");
    }
}

// 9. Finite-dimensional route with two-sided splittings for every demo.
static void criterion9(Criterion& c) {
    for (const auto& name : hopf_demos) {
        WeakHopf h = hopf_of(make_demo(name, Q));
        Report route = finite_hopf_pipeline(h, regular_comodule_algebra(h));
        c.require(route, name + ": finite route with both splittings");
        c.require(route.find("left splitting: splits multiplication") != nullptr &&
                      route.find("right splitting: splits multiplication") != nullptr,
                  name + ": both splittings reported");
    }
}

// 10. Subalgebra quotient cases end to end, including preimage independence
// when the ideal is nonzero.
static void criterion10(Criterion& c) {
    struct Row {
        const char* name;
        long gen, ideal, quot, literal;
    };
    for (Row r : {Row{"kz2sub1", 0, 0, 2, 1}, Row{"kz2subh", 1, 1, 1, 1}, Row{"pairgroupoid2diag", 0, 0, 4, 2}}) {
        auto d = make_demo(r.name, Q);
        SubalgebraPipeline p = comodule_subalgebra_pipeline(hopf_of(d), *d.subalgebra);
        c.require(p.rep, std::string(r.name) + ": pipeline report");
        c.require(p.generators.rank() == r.gen && p.ideal.rank() == r.ideal && p.quot.dim() == r.quot &&
                      p.literal_reading.rank() == r.literal,
                  std::string(r.name) + ": frozen dimensions");
        for (const char* check : {"ideal counit vanishes", "coideal", "section rebuilds the entwining"})
            c.require(p.rep.find(check) != nullptr && p.rep.find(check)->ok,
                      std::string(r.name) + ": " + check);
        if (r.ideal > 0)
            for (const char* check : {"entwining preimage independence", "section preimage independence"})
                c.require(p.rep.find(check) != nullptr && p.rep.find(check)->ok,
                          std::string(r.name) + ": " + check);
    }
}

// 11. Cointegral oracle on the 2x2 matrix coalgebra: the solver's solution and
// the independent hand candidate both pass at every basis pair.
static void criterion11(Criterion& c) {
    auto d = make_demo("matrixco2", Q);
    const FinCoalgebra& co = *d.coalgebra;
    auto delta = find_cointegral(co);
    c.require(delta.has_value(), "solver cointegral exists");
    if (delta) c.require(check_cointegral(co, *delta), "solver cointegral laws at all basis pairs");
    LinMap hand(Shape::scalar(), Shape{4, 4}, Q);
    const Scalar half = Scalar::from_rational(Q, 1, 2);
    auto idx = [](long i, long j) { return i * 2 + j; };
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j) hand.at(0, idx(i, j) * 4 + idx(j, i)) = half;
    c.require(check_cointegral(co, hand), "hand candidate laws at all basis pairs");
}

// 12. Command-line contract via subprocesses.
struct CmdResult {
    int code = -1;
    std::string out;
};

static CmdResult run_cmd(const std::string& cmd) {
    CmdResult r;
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

static void criterion12(Criterion& c) {
    const char* cli = std::getenv("CORINGS_CLI");
    if (!cli) {
        c.require(false, "CORINGS_CLI is not set; cannot locate the executable");
        return;
    }
    const std::string exe = cli;
    CmdResult kt = run_cmd(exe + " galois --route kreimer-takeuchi demo:pairgroupoid2 --json");
    c.require(kt.code == 0, "finite route on the pair groupoid must exit 0");
    c.require(kt.out.find("\"status\": \"pass\"") != std::string::npos, "finite route report status must be pass");
    CmdResult again = run_cmd(exe + " galois --route kreimer-takeuchi demo:pairgroupoid2 --json");
    c.require(kt.out == again.out && !kt.out.empty(), "reports must be byte identical across runs");

    CmdResult neg = run_cmd(exe + " check --what weak-entwining-rr demo:swapcontrol --json");
    c.require(neg.code == 1, "the negative control must exit 1");
    c.require(neg.out.find("unit compatibility") != std::string::npos,
              "the negative control report must name the unit compatibility axiom");

    const std::string bad = "/tmp/corings-acceptance-bad.json";
    {
        std::ofstream f(bad);
        f << R"({"field":"Q","coalgebra":{"dim":1,"comul":[[[0,0,"1/0"]]],"counit":["1"]}})";
    }
    CmdResult parse = run_cmd(exe + " check --what coalgebra " + bad);
    c.require(parse.code == 2, "a malformed scalar must exit 2");
    std::remove(bad.c_str());
}

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
        {"axiom suites on the demo catalog", criterion1},
        {"projection identities", criterion2},
        {"bijective entwinings are strict (catalog + randomized)", criterion3},
        {"coring construction and grouplike", criterion4},
        {"restricted maps are coring isomorphisms", criterion5},
        {"extension verdicts and coinvariants", criterion6},
        {"coseparable route with sections and splittings", criterion7},
        {"projective route with factorization and lifting", criterion8},
        {"finite route with two-sided splittings", criterion9},
        {"subalgebra quotient cases", criterion10},
        {"cointegral solver and hand oracle", criterion11},
        {"command-line contract", criterion12},
    };
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << (i + 1) << " (" << criteria[i].first << "): "
                  << (c.ok ? "PASS" : "FAIL") << "\n";
        if (!c.ok) {
            std::cout << c.log.str();
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
