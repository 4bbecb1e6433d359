#pragma once

#include "corings/report.hpp"
#include "corings/rref.hpp"

namespace corings {

/// Finite-dimensional associative unital algebra by structure constants.
struct FinAlgebra {
    long dim = 0;
    LinMap mul;   // A⊗A -> A
    LinMap unit;  // k -> A

    const FieldSpec& field() const { return mul.field(); }
    Shape shape() const { return Shape::vec(dim); }

    std::vector<Scalar> unit_vec() const { return unit.col_vector(0); }

    LinMap id() const { return LinMap::identity(shape(), field()); }

    /// Left multiplication by a fixed element, as a map A -> A.
    LinMap left_mult(const std::vector<Scalar>& a) const {
        return compose(mul, tensor(LinMap::column(shape(), field(), a), id()));
    }

    LinMap right_mult(const std::vector<Scalar>& a) const {
        return compose(mul, tensor(id(), LinMap::column(shape(), field(), a)));
    }

    static FinAlgebra ground(const FieldSpec& f) {
        FinAlgebra a;
        a.dim = 1;
        a.mul = LinMap(Shape::vec(1), Shape{1, 1}, f);
        a.mul.at(0, 0) = Scalar::one(f);
        a.unit = LinMap(Shape::vec(1), Shape::scalar(), f);
        a.unit.at(0, 0) = Scalar::one(f);
        return a;
    }
};

/// Finite-dimensional coassociative counital coalgebra.
struct FinCoalgebra {
    long dim = 0;
    LinMap comul;   // C -> C⊗C
    LinMap counit;  // C -> k

    const FieldSpec& field() const { return comul.field(); }
    Shape shape() const { return Shape::vec(dim); }
    LinMap id() const { return LinMap::identity(shape(), field()); }

    static FinCoalgebra ground(const FieldSpec& f) {
        FinCoalgebra c;
        c.dim = 1;
        c.comul = LinMap(Shape{1, 1}, Shape::vec(1), f);
        c.comul.at(0, 0) = Scalar::one(f);
        c.counit = LinMap(Shape::scalar(), Shape::vec(1), f);
        c.counit.at(0, 0) = Scalar::one(f);
        return c;
    }
};

struct RightComodule {
    long dim = 0;
    FinCoalgebra over;
    LinMap coaction;  // M -> M⊗C
    Shape shape() const { return Shape::vec(dim); }
};

struct LeftComodule {
    long dim = 0;
    FinCoalgebra over;
    LinMap coaction;  // M -> C⊗M
    Shape shape() const { return Shape::vec(dim); }
};

struct RightModule {
    long dim = 0;
    FinAlgebra over;
    LinMap action;  // M⊗A -> M
    Shape shape() const { return Shape::vec(dim); }
};

inline Report check_algebra(const FinAlgebra& a) {
    Report rep{"algebra"};
    rep.dims["dim"] = a.dim;
    const auto idA = a.id();
    check_maps_equal(rep, "associativity", compose(a.mul, tensor(a.mul, idA)), compose(a.mul, tensor(idA, a.mul)));
    check_maps_equal(rep, "left unit", compose(a.mul, tensor(a.unit, idA)), idA);
    check_maps_equal(rep, "right unit", compose(a.mul, tensor(idA, a.unit)), idA);
    return rep;
}

inline Report check_coalgebra(const FinCoalgebra& c) {
    Report rep{"coalgebra"};
    rep.dims["dim"] = c.dim;
    const auto idC = c.id();
    check_maps_equal(rep, "coassociativity", compose(tensor(c.comul, idC), c.comul),
                     compose(tensor(idC, c.comul), c.comul));
    check_maps_equal(rep, "left counit", compose(tensor(c.counit, idC), c.comul), idC);
    check_maps_equal(rep, "right counit", compose(tensor(idC, c.counit), c.comul), idC);
    return rep;
}

inline Report check_right_comodule(const RightComodule& m) {
    Report rep{"right comodule"};
    const auto idM = LinMap::identity(m.shape(), m.over.field());
    check_maps_equal(rep, "coassociativity", compose(tensor(m.coaction, m.over.id()), m.coaction),
                     compose(tensor(idM, m.over.comul), m.coaction));
    check_maps_equal(rep, "counit", compose(tensor(idM, m.over.counit), m.coaction), idM);
    return rep;
}

inline Report check_left_comodule(const LeftComodule& m) {
    Report rep{"left comodule"};
    const auto idM = LinMap::identity(m.shape(), m.over.field());
    check_maps_equal(rep, "coassociativity", compose(tensor(m.over.comul, idM), m.coaction),
                     compose(tensor(m.over.id(), m.coaction), m.coaction));
    check_maps_equal(rep, "counit", compose(tensor(m.over.counit, idM), m.coaction), idM);
    return rep;
}

inline Report check_right_module(const RightModule& m) {
    Report rep{"right module"};
    const auto idM = LinMap::identity(m.shape(), m.over.field());
    check_maps_equal(rep, "associativity", compose(m.action, tensor(m.action, m.over.id())),
                     compose(m.action, tensor(idM, m.over.mul)));
    check_maps_equal(rep, "unit action", compose(m.action, tensor(idM, m.over.unit)), idM);
    return rep;
}

/// Convolution algebra C*: (f*g)(x) = Σ f(x_(1)) g(x_(2)), unit ε.
inline FinAlgebra dual_algebra(const FinCoalgebra& c) {
    const FieldSpec f = c.field();
    FinAlgebra a;
    a.dim = c.dim;
    a.mul = LinMap(Shape::vec(c.dim), Shape{c.dim, c.dim}, f);
    for (long k = 0; k < c.dim; ++k)
        for (long i = 0; i < c.dim; ++i)
            for (long j = 0; j < c.dim; ++j)
                // coefficient of e_i⊗e_j in Δ(e_k)
                a.mul.at(k, i * c.dim + j) = c.comul.at(i * c.dim + j, k);
    a.unit = LinMap(Shape::vec(c.dim), Shape::scalar(), f);
    for (long k = 0; k < c.dim; ++k) a.unit.at(k, 0) = c.counit.at(0, k);
    return a;
}

/// Conversion convention: n·f = Σ f(n_(-1)) n_(0), a right module over C*.
inline RightModule left_comodule_to_right_dual_module(const LeftComodule& n) {
    Report comod = check_left_comodule(n);
    if (!comod.pass()) throw std::invalid_argument("left_comodule_to_right_dual_module: input fails comodule laws");
    const FieldSpec f = n.over.field();
    const long nc = n.over.dim, nm = n.dim;
    RightModule m;
    m.dim = nm;
    m.over = dual_algebra(n.over);
    m.action = LinMap(Shape::vec(nm), Shape{nm, nc}, f);
    for (long j = 0; j < nm; ++j)
        for (long i = 0; i < nc; ++i)
            for (long jp = 0; jp < nm; ++jp)
                // coefficient of e_i⊗e_{jp} in coaction(e_j)
                m.action.at(jp, j * nc + i) = n.coaction.at(i * nm + jp, j);
    return m;
}

}  // namespace corings
