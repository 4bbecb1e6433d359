#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corings/demos.hpp"

using namespace corings;

static const FieldSpec Q = FieldSpec::rationals();

static WeakHopf hopf_of(const DemoStructures& d) {
    WeakHopf h;
    h.algebra = *d.algebra;
    h.coalgebra = *d.coalgebra;
    h.antipode = *d.antipode;
    return h;
}

static const std::vector<std::string> hopf_demos = {"k", "kz2", "diag2", "diag3", "pairgroupoid2"};

TEST_CASE("demo structures satisfy the weak bialgebra and weak Hopf laws") {
    for (const auto& name : hopf_demos) {
        WeakHopf h = hopf_of(make_demo(name, Q));
        INFO(name);
        CHECK(check_weak_bialgebra(h).pass());
        CHECK(check_weak_hopf(h).pass());
    }
}

TEST_CASE("split algebras are genuinely weak: the unit is not grouplike") {
    for (const auto& name : hopf_demos) {
        WeakHopf h = hopf_of(make_demo(name, Q));
        auto d1 = compose(h.coalgebra.comul, h.algebra.unit).col_vector(0);
        auto unit2 = kron_vec(h.algebra.unit_vec(), h.algebra.unit_vec(), h.field());
        const bool weak = name == "diag2" || name == "diag3" || name == "pairgroupoid2";
        INFO(name);
        CHECK((d1 != unit2) == weak);
    }
}

TEST_CASE("target and source projections are idempotent and counital") {
    for (const auto& name : hopf_demos) {
        WeakHopf h = hopf_of(make_demo(name, Q));
        for (const LinMap& pi : {pi_left(h), pi_right(h), pi_left_bar(h), pi_right_bar(h)}) {
            INFO(name);
            CHECK(compose(pi, pi) == pi);
            CHECK(pi.apply(h.algebra.unit_vec()) == h.algebra.unit_vec());
        }
    }
}

TEST_CASE("the antipode is invertible with the expected projection exchange") {
    for (const auto& name : hopf_demos) {
        WeakHopf h = hopf_of(make_demo(name, Q));
        INFO(name);
        CHECK(antipode_inverse(h).has_value());
        CHECK(check_antipode_inverse_projections(h).pass());
    }
}

TEST_CASE("comultiplication makes the algebra a comodule algebra over itself") {
    for (const auto& name : hopf_demos) {
        WeakHopf h = hopf_of(make_demo(name, Q));
        INFO(name);
        CHECK(check_comodule_algebra(h, regular_comodule_algebra(h)).pass());
        CHECK(check_module_coalgebra(h, regular_module_coalgebra(h)).pass());
    }
}

TEST_CASE("a broken coaction fails the comodule algebra laws") {
    WeakHopf h = hopf_of(make_demo("kz2", Q));
    ComoduleAlgebra ca = regular_comodule_algebra(h);
    ca.coaction.at(0, 0) += Scalar::one(Q);
    CHECK(!check_comodule_algebra(h, ca).pass());
}

TEST_CASE("the induced entwining agrees with the stored demo entwining") {
    for (const auto& name : hopf_demos) {
        auto d = make_demo(name, Q);
        WeakHopf h = hopf_of(d);
        auto ent = induced_invertible_entwining(h, regular_comodule_algebra(h), regular_module_coalgebra(h));
        REQUIRE(ent);
        INFO(name);
        CHECK(ent->psi_r == *d.psi_r);
        CHECK(ent->psi_l == *d.psi_l);
        CHECK(check_invertible_weak_entwining(*ent).pass());
    }
}

TEST_CASE("the coring of the regular coaction carries the canonical grouplike") {
    auto d = make_demo("pairgroupoid2", Q);
    WeakHopf h = hopf_of(d);
    GrouplikeCoring gc = build_comodule_algebra_coring(h, regular_comodule_algebra(h));
    CHECK(check_grouplike(gc.coring, gc.grouplike).pass());
}

TEST_CASE("weak Hopf laws hold over prime fields") {
    for (long p : {2L, 5L}) {
        WeakHopf h = hopf_of(make_demo("pairgroupoid2", FieldSpec::prime(p)));
        INFO(p);
        CHECK(check_weak_hopf(h).pass());
    }
}
