#pragma once

#include "corings/structures.hpp"

namespace corings {

/// Mixed distributive law C⊗A -> A⊗C over an algebra A and coalgebra C,
/// subject to the weak compatibility laws checked below.
struct WeakEntwiningRR {
    FinAlgebra A;
    FinCoalgebra C;
    LinMap psi;  // C⊗A -> A⊗C
};

/// Mirror datum A⊗C -> C⊗A.
struct WeakEntwiningLL {
    FinAlgebra A;
    FinCoalgebra C;
    LinMap psi;  // A⊗C -> C⊗A
};

/// psi(- ⊗ 1): C -> A⊗C.
inline LinMap unit_image_rr(const WeakEntwiningRR& w) { return compose(w.psi, tensor(w.C.id(), w.A.unit)); }

/// psi(1 ⊗ -): C -> C⊗A.
inline LinMap unit_image_ll(const WeakEntwiningLL& w) { return compose(w.psi, tensor(w.A.unit, w.C.id())); }

/// (A⊗ε) ∘ psi(- ⊗ 1): C -> A.
inline LinMap counit_defect_rr(const WeakEntwiningRR& w) {
    return compose(tensor(w.A.id(), w.C.counit), unit_image_rr(w));
}

inline LinMap counit_defect_ll(const WeakEntwiningLL& w) {
    return compose(tensor(w.C.counit, w.A.id()), unit_image_ll(w));
}

/// Idempotent a⊗c -> a·psi(c⊗1) on A⊗C.
inline LinMap projection_pr(const WeakEntwiningRR& w) {
    return compose(tensor(w.A.mul, w.C.id()), tensor(w.A.id(), unit_image_rr(w)));
}

/// Idempotent c⊗a -> psi(1⊗c)·a on C⊗A.
inline LinMap projection_pl(const WeakEntwiningLL& w) {
    return compose(tensor(w.C.id(), w.A.mul), tensor(unit_image_ll(w), w.A.id()));
}

inline Report check_weak_entwining_rr(const WeakEntwiningRR& w) {
    Report rep{"weak entwining (right)"};
    rep.merge(check_algebra(w.A), "algebra: ");
    rep.merge(check_coalgebra(w.C), "coalgebra: ");
    rep.dims["psi rows"] = w.psi.rows();
    rep.dims["psi cols"] = w.psi.cols();
    if (w.psi.rows() != w.A.dim * w.C.dim || w.psi.cols() != w.C.dim * w.A.dim) {
        rep.add("carrier dimensions", false, "psi must be a (dimA*dimC) x (dimC*dimA) matrix");
        return rep;
    }
    rep.add("carrier dimensions", true);
    const auto idA = w.A.id(), idC = w.C.id();
    const auto e = counit_defect_rr(w);
    check_maps_equal(rep, "multiplication compatibility", compose(w.psi, tensor(idC, w.A.mul)),
                     compose(tensor(w.A.mul, idC), tensor(idA, w.psi), tensor(w.psi, idA)));
    check_maps_equal(rep, "counit compatibility", compose(tensor(idA, w.C.counit), w.psi),
                     compose(w.A.mul, tensor(e, idA)));
    check_maps_equal(rep, "comultiplication compatibility", compose(tensor(idA, w.C.comul), w.psi),
                     compose(tensor(w.psi, idC), tensor(idC, w.psi), tensor(w.C.comul, idA)));
    check_maps_equal(rep, "unit compatibility", unit_image_rr(w), compose(tensor(e, idC), w.C.comul));
    check_maps_equal(rep, "projection idempotent", compose(projection_pr(w), projection_pr(w)), projection_pr(w));
    return rep;
}

inline Report check_weak_entwining_ll(const WeakEntwiningLL& w) {
    Report rep{"weak entwining (left)"};
    rep.merge(check_algebra(w.A), "algebra: ");
    rep.merge(check_coalgebra(w.C), "coalgebra: ");
    rep.dims["psi rows"] = w.psi.rows();
    rep.dims["psi cols"] = w.psi.cols();
    if (w.psi.rows() != w.C.dim * w.A.dim || w.psi.cols() != w.A.dim * w.C.dim) {
        rep.add("carrier dimensions", false, "psi must be a (dimC*dimA) x (dimA*dimC) matrix");
        return rep;
    }
    rep.add("carrier dimensions", true);
    const auto idA = w.A.id(), idC = w.C.id();
    const auto e = counit_defect_ll(w);
    check_maps_equal(rep, "multiplication compatibility", compose(w.psi, tensor(w.A.mul, idC)),
                     compose(tensor(idC, w.A.mul), tensor(w.psi, idA), tensor(idA, w.psi)));
    check_maps_equal(rep, "counit compatibility", compose(tensor(w.C.counit, idA), w.psi),
                     compose(w.A.mul, tensor(idA, e)));
    check_maps_equal(rep, "comultiplication compatibility", compose(tensor(w.C.comul, idA), w.psi),
                     compose(tensor(idC, w.psi), tensor(w.psi, idC), tensor(idA, w.C.comul)));
    check_maps_equal(rep, "unit compatibility", unit_image_ll(w), compose(tensor(idC, e), w.C.comul));
    check_maps_equal(rep, "projection idempotent", compose(projection_pl(w), projection_pl(w)), projection_pl(w));
    return rep;
}

/// Strictness: the counit defect collapses to ε(-)1 and psi fixes 1⊗c.
inline Report check_strict_rr(const WeakEntwiningRR& w) {
    Report rep{"strict entwining (right)"};
    const auto idA = w.A.id(), idC = w.C.id();
    check_maps_equal(rep, "strict counit law", compose(tensor(idA, w.C.counit), w.psi), tensor(w.C.counit, idA));
    check_maps_equal(rep, "strict unit law", unit_image_rr(w), tensor(w.A.unit, idC));
    return rep;
}

inline bool is_strict_rr(const WeakEntwiningRR& w) { return check_strict_rr(w).pass(); }

/// Tensor product of a right module and a left module over the same algebra,
/// balanced in the middle.
inline QuotientSpace balanced_tensor(const FinAlgebra& A, const LinMap& right_act, const LinMap& left_act) {
    const FieldSpec f = A.field();
    long dx = right_act.rows(), dy = left_act.rows();
    LinMap idX = LinMap::identity(Shape::vec(dx), f), idY = LinMap::identity(Shape::vec(dy), f);
    LinMap diff = tensor(right_act, idY) - tensor(idX, left_act);
    return quotient(Shape{dx, dy}, image(diff));
}

/// Threefold balanced tensor X ⊗_A Y ⊗_A Z.
inline QuotientSpace balanced_tensor3(const FinAlgebra& A, const LinMap& rx, const LinMap& ly, const LinMap& ry,
                                      const LinMap& lz) {
    const FieldSpec f = A.field();
    long dx = rx.rows(), dy = ly.rows(), dz = lz.rows();
    LinMap idX = LinMap::identity(Shape::vec(dx), f), idY = LinMap::identity(Shape::vec(dy), f),
           idZ = LinMap::identity(Shape::vec(dz), f);
    LinMap d1 = tensor(rx, idY, idZ) - tensor(idX, ly, idZ);
    LinMap d2 = tensor(idX, ry, idZ) - tensor(idX, idY, lz);
    return quotient(Shape{dx, dy, dz}, image(d1).sum(image(d2)));
}

/// A-coring presented in coordinates on the image of the associated
/// idempotent; the comultiplication lands in the balanced tensor square.
struct ACoring {
    FinAlgebra A;
    Shape ambient;          // containing tensor space
    Subspace carrier;
    LinMap incl;            // coordinates -> ambient
    LinMap proj;            // ambient -> coordinates (projection then coords)
    LinMap left_act;        // A ⊗ X -> X
    LinMap right_act;       // X ⊗ A -> X
    LinMap counit;          // X -> A
    LinMap coproduct_raw;   // X -> X ⊗ X, a chosen representative
    QuotientSpace balanced; // X ⊗_A X
    LinMap coproduct;       // X -> balanced coordinates

    long dim() const { return carrier.rank(); }
    Shape shape() const { return Shape::vec(dim()); }
};

inline ACoring build_coring_rr(const WeakEntwiningRR& w) {
    const FieldSpec f = w.A.field();
    ACoring c;
    c.A = w.A;
    c.ambient = Shape{w.A.dim, w.C.dim};
    const LinMap pr = projection_pr(w);
    c.carrier = image(pr);
    c.incl = c.carrier.inclusion();
    c.proj = compose(c.carrier.pivot_coords(), pr);
    const auto idA = w.A.id(), idC = w.C.id();
    c.left_act = compose(c.proj, tensor(w.A.mul, idC), tensor(idA, c.incl));
    c.right_act = compose(c.proj, tensor(w.A.mul, idC), tensor(idA, w.psi), tensor(c.incl, idA));
    c.counit = compose(tensor(idA, w.C.counit), c.incl);
    c.coproduct_raw =
        compose(tensor(c.proj, c.proj), tensor(pr, unit_image_rr(w)), tensor(idA, w.C.comul), c.incl);
    c.balanced = balanced_tensor(w.A, c.right_act, c.left_act);
    c.coproduct = compose(c.balanced.proj, c.coproduct_raw);
    return c;
}

inline ACoring build_coring_ll(const WeakEntwiningLL& w) {
    ACoring c;
    c.A = w.A;
    c.ambient = Shape{w.C.dim, w.A.dim};
    const LinMap pl = projection_pl(w);
    c.carrier = image(pl);
    c.incl = c.carrier.inclusion();
    c.proj = compose(c.carrier.pivot_coords(), pl);
    const auto idA = w.A.id(), idC = w.C.id();
    c.left_act = compose(c.proj, tensor(idC, w.A.mul), tensor(w.psi, idA), tensor(idA, c.incl));
    c.right_act = compose(c.proj, tensor(idC, w.A.mul), tensor(c.incl, idA));
    c.counit = compose(tensor(w.C.counit, idA), c.incl);
    c.coproduct_raw =
        compose(tensor(c.proj, c.proj), tensor(unit_image_ll(w), pl), tensor(w.C.comul, idA), c.incl);
    c.balanced = balanced_tensor(w.A, c.right_act, c.left_act);
    c.coproduct = compose(c.balanced.proj, c.coproduct_raw);
    return c;
}

inline Report verify_coring(const ACoring& c) {
    Report rep{"coring laws"};
    rep.dims["carrier dim"] = c.dim();
    rep.dims["balanced square dim"] = c.balanced.dim();
    const FieldSpec f = c.A.field();
    const auto idX = LinMap::identity(c.shape(), f);
    const auto idA = c.A.id();
    check_maps_equal(rep, "coordinate retraction", compose(c.proj, c.incl), idX);
    check_maps_equal(rep, "left action associative", compose(c.left_act, tensor(c.A.mul, idX)),
                     compose(c.left_act, tensor(idA, c.left_act)));
    check_maps_equal(rep, "left action unital", compose(c.left_act, tensor(c.A.unit, idX)), idX);
    check_maps_equal(rep, "right action associative", compose(c.right_act, tensor(c.right_act, idA)),
                     compose(c.right_act, tensor(idX, c.A.mul)));
    check_maps_equal(rep, "right action unital", compose(c.right_act, tensor(idX, c.A.unit)), idX);
    check_maps_equal(rep, "actions commute", compose(c.left_act, tensor(idA, c.right_act)),
                     compose(c.right_act, tensor(c.left_act, idA)));
    check_maps_equal(rep, "counit left linear", compose(c.counit, c.left_act), compose(c.A.mul, tensor(idA, c.counit)));
    check_maps_equal(rep, "counit right linear", compose(c.counit, c.right_act),
                     compose(c.A.mul, tensor(c.counit, idA)));
    check_maps_equal(rep, "coproduct left linear", compose(c.coproduct, c.left_act),
                     compose(c.balanced.proj, tensor(c.left_act, idX), tensor(idA, c.coproduct_raw)));
    check_maps_equal(rep, "coproduct right linear", compose(c.coproduct, c.right_act),
                     compose(c.balanced.proj, tensor(idX, c.right_act), tensor(c.coproduct_raw, idA)));

    const LinMap m_left = compose(c.left_act, tensor(c.counit, idX));
    const LinMap m_right = compose(c.right_act, tensor(idX, c.counit));
    const LinMap rel_incl = c.balanced.relators.inclusion();
    check_maps_equal(rep, "left counit contraction balanced",
                     compose(m_left, rel_incl), LinMap::zero(c.shape(), rel_incl.domain(), f));
    check_maps_equal(rep, "right counit contraction balanced",
                     compose(m_right, rel_incl), LinMap::zero(c.shape(), rel_incl.domain(), f));
    check_maps_equal(rep, "left counit law", compose(m_left, c.coproduct_raw), idX);
    check_maps_equal(rep, "right counit law", compose(m_right, c.coproduct_raw), idX);

    QuotientSpace q3 = balanced_tensor3(c.A, c.right_act, c.left_act, c.right_act, c.left_act);
    check_maps_equal(rep, "coassociativity",
                     compose(q3.proj, tensor(c.coproduct_raw, idX), c.coproduct_raw),
                     compose(q3.proj, tensor(idX, c.coproduct_raw), c.coproduct_raw));
    return rep;
}

/// Entwined module condition for a right module / right comodule pair:
/// the coaction of an acted element routes the algebra factor through psi.
inline Report check_entwined_module_rr(const WeakEntwiningRR& w, const RightModule& m, const RightComodule& co) {
    Report rep{"entwined module (right)"};
    rep.merge(check_right_module(m), "module: ");
    rep.merge(check_right_comodule(co), "comodule: ");
    const auto idM = LinMap::identity(m.shape(), w.A.field());
    check_maps_equal(rep, "entwined compatibility", compose(co.coaction, m.action),
                     compose(tensor(m.action, w.C.id()), tensor(idM, w.psi), tensor(co.coaction, w.A.id())));
    return rep;
}

/// Mirror condition for a left module / left comodule pair.
inline Report check_entwined_module_ll(const WeakEntwiningLL& w, const LinMap& left_act, const LeftComodule& co) {
    Report rep{"entwined module (left)"};
    rep.merge(check_left_comodule(co), "comodule: ");
    const auto idM = LinMap::identity(co.shape(), w.A.field());
    check_maps_equal(rep, "left action associative", compose(left_act, tensor(w.A.mul, idM)),
                     compose(left_act, tensor(w.A.id(), left_act)));
    check_maps_equal(rep, "left action unital", compose(left_act, tensor(w.A.unit, idM)), idM);
    check_maps_equal(rep, "entwined compatibility", compose(co.coaction, left_act),
                     compose(tensor(w.C.id(), left_act), tensor(w.psi, idM), tensor(w.A.id(), co.coaction)));
    return rep;
}

/// A matched pair of entwining data where each map inverts the other up to
/// the canonical idempotents.
struct InvertibleWeakEntwining {
    FinAlgebra A;
    FinCoalgebra C;
    LinMap psi_r;  // C⊗A -> A⊗C
    LinMap psi_l;  // A⊗C -> C⊗A

    WeakEntwiningRR right() const { return {A, C, psi_r}; }
    WeakEntwiningLL left() const { return {A, C, psi_l}; }
};

inline Report check_invertible_weak_entwining(const InvertibleWeakEntwining& w) {
    Report rep{"invertible weak entwining"};
    rep.merge(check_weak_entwining_rr(w.right()), "right: ");
    rep.merge(check_weak_entwining_ll(w.left()), "left: ");
    if (!rep.pass()) return rep;
    const LinMap pr = projection_pr(w.right()), pl = projection_pl(w.left());
    check_maps_equal(rep, "right after left is right projection", compose(w.psi_r, w.psi_l), pr);
    check_maps_equal(rep, "left after right is left projection", compose(w.psi_l, w.psi_r), pl);
    check_maps_equal(rep, "counit defects agree", counit_defect_rr(w.right()), counit_defect_ll(w.left()));
    // consequences of the axioms above; failures here indicate a bug
    check_maps_equal(rep, "right map absorbs left projection", compose(w.psi_r, pl), w.psi_r);
    check_maps_equal(rep, "left map absorbs right projection", compose(w.psi_l, pr), w.psi_l);
    return rep;
}

/// A bijective weak entwining map is automatically strict. Reported as
/// not-applicable when the map is singular; a failure on a bijective valid
/// weak entwining is impossible and raised as a defect.
inline Report check_bijective_implies_strict(const WeakEntwiningRR& w) {
    Report rep{"bijective implies strict"};
    Report ax = check_weak_entwining_rr(w);
    if (!ax.pass()) {
        rep.not_applicable = true;
        rep.hypothesis_failed = "weak entwining laws do not hold";
        return rep;
    }
    if (!is_bijective(w.psi)) {
        rep.not_applicable = true;
        rep.hypothesis_failed = "entwining map is singular";
        return rep;
    }
    rep.merge(check_strict_rr(w));
    if (!rep.pass()) throw TheoremViolation("bijective weak entwining map failed strictness");
    return rep;
}

/// For an invertible weak entwining, the right map restricts to an
/// isomorphism between the two canonical corings.
inline Report check_coring_isomorphism(const InvertibleWeakEntwining& w) {
    Report rep{"coring isomorphism"};
    Report inv = check_invertible_weak_entwining(w);
    if (!inv.pass()) {
        rep.not_applicable = true;
        rep.hypothesis_failed = "invertibility laws do not hold";
        return rep;
    }
    const FieldSpec f = w.A.field();
    ACoring cr = build_coring_rr(w.right());
    ACoring cl = build_coring_ll(w.left());
    rep.dims["right coring dim"] = cr.dim();
    rep.dims["left coring dim"] = cl.dim();
    const LinMap phi = compose(cr.proj, w.psi_r, cl.incl);
    rep.add("bijective", is_bijective(phi), "restricted map is singular");
    const auto idA = w.A.id();
    check_maps_equal(rep, "left action compatible", compose(phi, cl.left_act),
                     compose(cr.left_act, tensor(idA, phi)));
    check_maps_equal(rep, "right action compatible", compose(phi, cl.right_act),
                     compose(cr.right_act, tensor(phi, idA)));
    check_maps_equal(rep, "counit compatible", compose(cr.counit, phi), cl.counit);
    const LinMap phi2 = compose(cr.balanced.proj, tensor(phi, phi));
    const LinMap rel_incl = cl.balanced.relators.inclusion();
    check_maps_equal(rep, "square map balanced", compose(phi2, rel_incl),
                     LinMap::zero(Shape::vec(cr.balanced.dim()), rel_incl.domain(), f));
    check_maps_equal(rep, "coproduct compatible", compose(phi2, cl.coproduct_raw), compose(cr.coproduct, phi));
    return rep;
}

}  // namespace corings
