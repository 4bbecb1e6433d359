#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corings/rref.hpp"
#include "corings/solver.hpp"

using namespace corings;

static const FieldSpec Q = FieldSpec::rationals();

TEST_CASE("rational scalars are exact") {
    Scalar a = Scalar::parse(Q, "3/2");
    Scalar b = Scalar::parse(Q, "-1/3");
    CHECK((a * b).str() == "-1/2");
    CHECK((a + b).str() == "7/6");
    CHECK((a / a).str() == "1");
    CHECK(Scalar::parse(Q, "4/6").str() == "2/3");
    CHECK_THROWS(Scalar::parse(Q, "1/0"));
    CHECK_THROWS(Scalar::parse(Q, "abc"));
}

TEST_CASE("prime field scalars reduce mod p") {
    FieldSpec f5 = FieldSpec::prime(5);
    Scalar a = Scalar::parse(f5, "7");
    CHECK(a.str() == "2");
    CHECK((a * Scalar::from_long(f5, 3)).str() == "1");
    CHECK((Scalar::one(f5) / a).str() == "3");
    CHECK_THROWS(FieldSpec::prime(4));
    CHECK_THROWS(FieldSpec::prime(1));
}

TEST_CASE("shape indexing is row-major over tensor legs") {
    Shape s{2, 3};
    CHECK(s.dim() == 6);
    LinMap id = LinMap::identity(s, Q);
    CHECK(id.at(5, 5) == Scalar::one(Q));
    CHECK(Shape::vec(4).dim() == 4);
    CHECK(Shape::scalar().dim() == 1);
}

TEST_CASE("compose and tensor satisfy the interchange law") {
    LinMap a(Shape::vec(2), Shape::vec(2), Q);
    a.at(0, 1) = Scalar::one(Q);
    a.at(1, 0) = Scalar::from_long(Q, 2);
    LinMap b(Shape::vec(2), Shape::vec(2), Q);
    b.at(0, 0) = Scalar::from_long(Q, 3);
    b.at(1, 1) = Scalar::from_long(Q, -1);
    CHECK(tensor(compose(a, b), compose(b, a)) == compose(tensor(a, b), tensor(b, a)));
}

TEST_CASE("swap map is an involution") {
    LinMap s = swap_map(2, 3, Q);
    CHECK(compose(swap_map(3, 2, Q), s) == LinMap::identity(Shape{2, 3}, Q));
}

TEST_CASE("perm map permutes tensor legs") {
    // output leg k reads input leg perm[k]
    LinMap p = perm_map(Shape{2, 2, 2}, {2, 0, 1}, Q);
    std::vector<Scalar> v(8, Scalar::zero(Q));
    v[0b011] = Scalar::one(Q);  // e0 x e1 x e1
    auto w = p.apply(v);
    CHECK(w[0b101] == Scalar::one(Q));  // legs rearranged to e1 x e0 x e1
}

TEST_CASE("rref computes rank, kernel, image, inverse") {
    LinMap m(Shape::vec(3), Shape::vec(3), Q);
    m.at(0, 0) = Scalar::one(Q);
    m.at(1, 1) = Scalar::one(Q);
    m.at(0, 2) = Scalar::one(Q);
    m.at(1, 2) = Scalar::one(Q);
    CHECK(rank(m) == 2);
    Subspace k = kernel(m);
    CHECK(k.rank() == 1);
    CHECK(m.apply(k.basis[0]) == std::vector<Scalar>(3, Scalar::zero(Q)));
    CHECK(image(m).rank() == 2);
    CHECK(!is_bijective(m));

    LinMap inv2(Shape::vec(2), Shape::vec(2), Q);
    inv2.at(0, 0) = Scalar::from_long(Q, 2);
    inv2.at(0, 1) = Scalar::one(Q);
    inv2.at(1, 1) = Scalar::one(Q);
    auto iv = inverse(inv2);
    REQUIRE(iv);
    CHECK(compose(*iv, inv2) == LinMap::identity(Shape::vec(2), Q));
}

TEST_CASE("subspaces compare by canonical basis") {
    Row a{Scalar::one(Q), Scalar::one(Q)};
    Row b{Scalar::from_long(Q, 2), Scalar::from_long(Q, 2)};
    Subspace u = Subspace::span(Shape::vec(2), Q, {a});
    Subspace w = Subspace::span(Shape::vec(2), Q, {b});
    CHECK(u == w);
    CHECK(u.contains(b));
    CHECK(u.sum(Subspace::span(Shape::vec(2), Q, {{Scalar::one(Q), Scalar::zero(Q)}})) ==
          Subspace::full(Shape::vec(2), Q));
}

TEST_CASE("quotient projection and section are mutually inverse on coordinates") {
    Subspace rel = Subspace::span(Shape::vec(3), Q,
                                  {{Scalar::one(Q), Scalar::from_long(Q, -1), Scalar::zero(Q)}});
    QuotientSpace q = quotient(Shape::vec(3), rel);
    CHECK(q.dim() == 2);
    CHECK(compose(q.proj, q.sect) == LinMap::identity(Shape::vec(2), Q));
    CHECK(q.proj.apply(rel.basis[0]) == std::vector<Scalar>(2, Scalar::zero(Q)));
}

TEST_CASE("zero-dimensional relator spaces give the identity quotient") {
    QuotientSpace q = quotient(Shape::vec(2), Subspace::zero(Shape::vec(2), Q));
    CHECK(q.dim() == 2);
    CHECK(compose(q.sect, q.proj) == LinMap::identity(Shape::vec(2), Q));
}

TEST_CASE("constrained solver finds a one-sided inverse") {
    LinMap m(Shape::vec(2), Shape::vec(3), Q);  // surjective 2x3
    m.at(0, 0) = Scalar::one(Q);
    m.at(1, 1) = Scalar::one(Q);
    m.at(1, 2) = Scalar::one(Q);
    Constraint c;
    c.terms.push_back(term_lr(m, LinMap::identity(Shape::vec(2), Q)));
    c.target = LinMap::identity(Shape::vec(2), Q);
    auto sol = solve_constrained_map(Shape::vec(3), Shape::vec(2), Q, {c});
    REQUIRE(sol);
    CHECK(compose(m, sol->particular) == LinMap::identity(Shape::vec(2), Q));
    CHECK(sol->nullspace.size() == 2);  // kernel of m is 1-dim, section has 2 free columns
    for (const auto& h : sol->nullspace)
        CHECK(compose(m, h) == LinMap::zero(Shape::vec(2), Shape::vec(2), Q));
}

TEST_CASE("constrained solver reports no solution") {
    LinMap z = LinMap::zero(Shape::vec(2), Shape::vec(2), Q);
    Constraint c;
    c.terms.push_back(term_lr(z, LinMap::identity(Shape::vec(2), Q)));
    c.target = LinMap::identity(Shape::vec(2), Q);
    CHECK(!solve_constrained_map(Shape::vec(2), Shape::vec(2), Q, {c}));
}
