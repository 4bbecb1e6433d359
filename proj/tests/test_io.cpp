#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corings/io.hpp"

using namespace corings;

TEST_CASE("a minimal coalgebra file parses") {
    json j = json::parse(R"({"field":"Q","coalgebra":{"dim":1,"comul":[[[0,0,"1"]]],"counit":["1"]}})");
    StructureFile s = parse_structure(j);
    REQUIRE(s.coalgebra);
    CHECK(s.coalgebra->dim == 1);
    CHECK(check_coalgebra(*s.coalgebra).pass());
}

TEST_CASE("field validation") {
    CHECK(parse_field(json("Q")).kind == FieldSpec::Kind::Rationals);
    CHECK(parse_field(json::parse(R"({"Fp":7})")).p == 7);
    CHECK_THROWS_AS(parse_field(json::parse(R"({"Fp":4})")), ParseError);
    CHECK_THROWS_AS(parse_field(json("R")), ParseError);
    CHECK(parse_field_name("Fp:3").p == 3);
    CHECK_THROWS_AS(parse_field_name("Fp:6"), ParseError);
}

TEST_CASE("malformed scalars are parse errors naming the path") {
    json j = json::parse(R"({"field":"Q","coalgebra":{"dim":1,"comul":[[[0,0,"1/0"]]],"counit":["1"]}})");
    try {
        parse_structure(j);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("coalgebra.comul[0]") != std::string::npos);
    }
}

TEST_CASE("dimension mismatches are parse errors") {
    json j = json::parse(R"({"field":"Q","coalgebra":{"dim":2,"comul":[[[0,0,"1"]]],"counit":["1","0"]}})");
    CHECK_THROWS_AS(parse_structure(j), ParseError);
    json k = json::parse(R"({"field":"Q","coalgebra":{"dim":1,"comul":[[[0,5,"1"]]],"counit":["1"]}})");
    CHECK_THROWS_AS(parse_structure(k), ParseError);
}

TEST_CASE("matrix sections must match the declared algebra and coalgebra shapes") {
    auto d = from_demo(make_demo("kz2", FieldSpec::rationals()));
    json j = serialize(d);
    j["psiR"]["domain"] = json::array({2, 3});
    CHECK_THROWS_AS(parse_structure(j), ParseError);
}

TEST_CASE("serialize then parse is the identity on every demo") {
    for (const auto& name : demo_names()) {
        StructureFile s = from_demo(make_demo(name, FieldSpec::rationals()));
        json j = serialize(s);
        StructureFile back = parse_structure(j);
        INFO(name);
        CHECK(serialize(back) == j);
        CHECK(back.algebra.has_value() == s.algebra.has_value());
        if (s.algebra) {
            CHECK(back.algebra->mul == s.algebra->mul);
            CHECK(back.algebra->unit == s.algebra->unit);
        }
        if (s.coalgebra) CHECK(back.coalgebra->comul == s.coalgebra->comul);
        if (s.psi_r) CHECK(*back.psi_r == *s.psi_r);
        if (s.subalgebra) CHECK(*back.subalgebra == *s.subalgebra);
    }
}

TEST_CASE("serialization is byte deterministic") {
    StructureFile s = from_demo(make_demo("pairgroupoid2", FieldSpec::prime(5)));
    CHECK(serialize(s).dump(2) == serialize(s).dump(2));
    StructureFile again = from_demo(make_demo("pairgroupoid2", FieldSpec::prime(5)));
    CHECK(serialize(s).dump(2) == serialize(again).dump(2));
}

TEST_CASE("reports serialize with status, checks, and dimensions") {
    Report r{"example"};
    r.add("works", true);
    r.add("breaks", false, "a witness");
    r.dims["size"] = 3;
    json j = report_to_json(r);
    CHECK(j["status"] == "fail");
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][1]["witness"] == "a witness");
    CHECK(j["dims"]["size"] == 3);
}

TEST_CASE("rational scalars round trip through their string form") {
    FieldSpec Q = FieldSpec::rationals();
    for (const char* t : {"3/2", "-7", "0", "22/7", "-5/3"}) {
        Scalar s = Scalar::parse(Q, t);
        CHECK(Scalar::parse(Q, s.str()) == s);
    }
}
