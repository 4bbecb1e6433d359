#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corings/demos.hpp"

using namespace corings;

static const FieldSpec Q = FieldSpec::rationals();

TEST_CASE("demo algebras satisfy associativity and unit laws") {
    for (const char* name : {"k", "kz2", "diag2", "diag3", "pairgroupoid2"}) {
        auto d = make_demo(name, Q);
        REQUIRE(d.algebra);
        Report r = check_algebra(*d.algebra);
        INFO(name);
        CHECK(r.pass());
    }
}

TEST_CASE("demo coalgebras satisfy coassociativity and counit laws") {
    for (const char* name : {"k", "kz2", "diag2", "diag3", "pairgroupoid2", "matrixco2"}) {
        auto d = make_demo(name, Q);
        REQUIRE(d.coalgebra);
        Report r = check_coalgebra(*d.coalgebra);
        INFO(name);
        CHECK(r.pass());
    }
}

TEST_CASE("a broken multiplication table is rejected with a witness") {
    auto d = make_demo("kz2", Q);
    FinAlgebra a = *d.algebra;
    a.mul.at(0, 1) = Scalar::one(Q);  // 1*g picks up a spurious term, breaking the unit law
    Report r = check_algebra(a);
    CHECK(!r.pass());
    bool named = false;
    for (const auto& c : r.checks)
        if (!c.ok && !c.witness.empty()) named = true;
    CHECK(named);
}

TEST_CASE("regular comodule and module structures verify") {
    auto d = make_demo("kz2", Q);
    RightComodule rc{d.coalgebra->dim, *d.coalgebra, d.coalgebra->comul};
    CHECK(check_right_comodule(rc).pass());
    RightModule rm{d.algebra->dim, *d.algebra, d.algebra->mul};
    CHECK(check_right_module(rm).pass());
}

TEST_CASE("dual algebra of a coalgebra is a unital associative algebra") {
    for (const char* name : {"kz2", "diag2", "matrixco2"}) {
        auto d = make_demo(name, Q);
        FinAlgebra dual = dual_algebra(*d.coalgebra);
        INFO(name);
        CHECK(check_algebra(dual).pass());
    }
}

TEST_CASE("a left comodule becomes a right module over the dual algebra") {
    auto d = make_demo("matrixco2", Q);
    const FinCoalgebra& c = *d.coalgebra;
    LeftComodule lc{c.dim, c, c.comul};
    RightModule m = left_comodule_to_right_dual_module(lc);
    CHECK(check_right_module(m).pass());
}

TEST_CASE("groupoid tables validate") {
    CHECK(check_groupoid(GroupoidSpec::pair_groupoid(2)).pass());
    CHECK(check_groupoid(GroupoidSpec::discrete(3)).pass());
}

TEST_CASE("structure constants work identically over a prime field") {
    FieldSpec f3 = FieldSpec::prime(3);
    auto d = make_demo("pairgroupoid2", f3);
    CHECK(check_algebra(*d.algebra).pass());
    CHECK(check_coalgebra(*d.coalgebra).pass());
}
