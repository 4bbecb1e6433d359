#pragma once

#include "corings/weak_entwining.hpp"

namespace corings {

/// Algebra and coalgebra on one carrier, compatible only in the weak sense
/// checked by check_weak_bialgebra.
struct WeakBialgebra {
    FinAlgebra algebra;
    FinCoalgebra coalgebra;

    long dim() const { return algebra.dim; }
    const FieldSpec& field() const { return algebra.field(); }
    Shape shape() const { return algebra.shape(); }
    LinMap id() const { return algebra.id(); }
};

struct WeakHopf : WeakBialgebra {
    LinMap antipode;  // H -> H
};

namespace detail {
/// h -> 1_(1) ⊗ h ⊗ 1_(2), then a chosen leg permutation, then one
/// counit-of-product contraction. Shared by the four target projections.
inline LinMap unit_sandwich(const WeakBialgebra& h, const std::vector<size_t>& perm, bool contract_front) {
    const long n = h.dim();
    const FieldSpec f = h.field();
    const LinMap t = compose(h.coalgebra.comul, h.algebra.unit);  // k -> H⊗H
    const LinMap epsmul = compose(h.coalgebra.counit, h.algebra.mul);
    const LinMap arrange = compose(perm_map(Shape{n, n, n}, perm, f), tensor(t, h.id()));
    return contract_front ? compose(tensor(epsmul, h.id()), arrange) : compose(tensor(h.id(), epsmul), arrange);
}
}  // namespace detail

/// h -> Σ ε(1_(1) h) 1_(2).
inline LinMap pi_left(const WeakBialgebra& h) { return detail::unit_sandwich(h, {0, 2, 1}, true); }

/// h -> Σ ε(1_(2) h) 1_(1).
inline LinMap pi_left_bar(const WeakBialgebra& h) { return detail::unit_sandwich(h, {1, 2, 0}, true); }

/// h -> Σ 1_(1) ε(h 1_(2)).
inline LinMap pi_right(const WeakBialgebra& h) { return detail::unit_sandwich(h, {0, 2, 1}, false); }

/// h -> Σ 1_(2) ε(h 1_(1)).
inline LinMap pi_right_bar(const WeakBialgebra& h) { return detail::unit_sandwich(h, {1, 2, 0}, false); }

inline Report check_weak_bialgebra(const WeakBialgebra& h) {
    Report rep{"weak bialgebra"};
    rep.dims["dim"] = h.dim();
    rep.merge(check_algebra(h.algebra), "algebra: ");
    rep.merge(check_coalgebra(h.coalgebra), "coalgebra: ");
    const long n = h.dim();
    const FieldSpec f = h.field();
    const auto idH = h.id();
    const auto& mul = h.algebra.mul;
    const auto& comul = h.coalgebra.comul;

    check_maps_equal(rep, "comultiplication multiplicative", compose(comul, mul),
                     compose(tensor(mul, mul), perm_map(Shape{n, n, n, n}, {0, 2, 1, 3}, f), tensor(comul, comul)));

    const LinMap t = compose(comul, h.algebra.unit);
    const LinMap t2 = compose(tensor(comul, idH), t);
    const LinMap a = tensor(t, h.algebra.unit);  // k -> H⊗H⊗H, Δ(1)⊗1
    const LinMap b = tensor(h.algebra.unit, t);  // 1⊗Δ(1)
    const LinMap mul3 =
        compose(tensor(mul, mul, mul), perm_map(Shape{n, n, n, n, n, n}, {0, 3, 1, 4, 2, 5}, f));
    check_maps_equal(rep, "unit comultiplied (ordered)", compose(mul3, tensor(a, b)), t2);
    check_maps_equal(rep, "unit comultiplied (reversed)", compose(mul3, tensor(b, a)), t2);

    const LinMap epsmul = compose(h.coalgebra.counit, mul);
    const LinMap eps3 = compose(epsmul, tensor(mul, idH));
    check_maps_equal(rep, "counit multiplied (ordered)",
                     compose(tensor(epsmul, epsmul), tensor(idH, comul, idH)), eps3);
    check_maps_equal(rep, "counit multiplied (reversed)",
                     compose(tensor(epsmul, epsmul), perm_map(Shape{n, n, n, n}, {0, 2, 1, 3}, f),
                             tensor(idH, comul, idH)),
                     eps3);
    return rep;
}

inline Report check_weak_hopf(const WeakHopf& h) {
    Report rep{"weak Hopf algebra"};
    rep.merge(check_weak_bialgebra(h));
    const long n = h.dim();
    const FieldSpec f = h.field();
    const auto idH = h.id();
    const auto& mul = h.algebra.mul;
    const auto& comul = h.coalgebra.comul;
    const auto& s = h.antipode;

    check_maps_equal(rep, "antipode right convolution", compose(mul, tensor(idH, s), comul), pi_left(h));
    check_maps_equal(rep, "antipode left convolution", compose(mul, tensor(s, idH), comul), pi_right(h));
    check_maps_equal(rep, "antipode threefold convolution",
                     compose(mul, tensor(mul, idH), tensor(s, idH, s), tensor(comul, idH), comul), s);

    // consequences of the axioms; failures indicate corrupted data
    check_maps_equal(rep, "antipode anti-multiplicative", compose(s, mul),
                     compose(mul, tensor(s, s), swap_map(n, n, f)));
    check_maps_equal(rep, "antipode preserves unit", compose(s, h.algebra.unit), h.algebra.unit);
    check_maps_equal(rep, "antipode anti-comultiplicative", compose(comul, s),
                     compose(swap_map(n, n, f), tensor(s, s), comul));
    check_maps_equal(rep, "antipode preserves counit", compose(h.coalgebra.counit, s), h.coalgebra.counit);
    check_maps_equal(rep, "left projection via antipode", pi_left(h), compose(pi_right_bar(h), s));
    check_maps_equal(rep, "right projection via antipode", pi_right(h), compose(pi_left_bar(h), s));
    check_maps_equal(rep, "antipode after left projection", compose(s, pi_left(h)), compose(pi_right(h), s));
    check_maps_equal(rep, "antipode after right projection", compose(s, pi_right(h)), compose(pi_left(h), s));
    return rep;
}

inline std::optional<LinMap> antipode_inverse(const WeakHopf& h) { return inverse(h.antipode); }

/// With a bijective antipode the inverse exchanges the target projections:
/// S^{-1} ∘ Π^R = Π^L ∘ S^{-1} = the bar right projection.
inline Report check_antipode_inverse_projections(const WeakHopf& h) {
    Report rep{"antipode inverse projections"};
    auto sinv = antipode_inverse(h);
    if (!sinv) {
        rep.not_applicable = true;
        rep.hypothesis_failed = "antipode is singular";
        return rep;
    }
    check_maps_equal(rep, "inverse after right projection", compose(*sinv, pi_right(h)), pi_right_bar(h));
    check_maps_equal(rep, "left projection after inverse", compose(pi_left(h), *sinv), pi_right_bar(h));
    return rep;
}

/// Algebra with a coaction A -> A⊗H subject to the weak unit condition.
struct ComoduleAlgebra {
    FinAlgebra A;
    LinMap coaction;  // A -> A⊗H

    std::vector<Scalar> unit_image() const { return compose(coaction, A.unit).col_vector(0); }
};

inline Report check_comodule_algebra(const WeakBialgebra& h, const ComoduleAlgebra& ca) {
    Report rep{"comodule algebra"};
    rep.dims["dim"] = ca.A.dim;
    rep.merge(check_algebra(ca.A), "algebra: ");
    rep.merge(check_right_comodule(RightComodule{ca.A.dim, h.coalgebra, ca.coaction}), "comodule: ");
    const long m = ca.A.dim, n = h.dim();
    const FieldSpec f = h.field();
    const auto idA = ca.A.id(), idH = h.id();
    const auto& rho = ca.coaction;

    check_maps_equal(rep, "coaction multiplicative", compose(rho, ca.A.mul),
                     compose(tensor(ca.A.mul, h.algebra.mul), perm_map(Shape{m, n, m, n}, {0, 2, 1, 3}, f),
                             tensor(rho, rho)));
    bool mult_ok = rep.checks.back().ok;

    const LinMap rho1 = compose(rho, ca.A.unit);  // k -> A⊗H
    // a -> Σ 1_(0) a ⊗ 1_(1)
    const LinMap left_by_unit_image =
        compose(tensor(ca.A.mul, idH), perm_map(Shape{m, n, m}, {0, 2, 1}, f), tensor(rho1, idA));
    check_maps_equal(rep, "unit condition", compose(tensor(idA, pi_left(h)), rho), left_by_unit_image);
    bool main_ok = rep.checks.back().ok;

    // equivalent reformulations of the unit condition
    const LinMap rho2_one = compose(tensor(rho, idH), rho1);
    const LinMap t = compose(h.coalgebra.comul, h.algebra.unit);
    check_maps_equal(rep, "unit condition (iterated, ordered)", rho2_one,
                     compose(tensor(idA, h.algebra.mul, idH), tensor(rho1, t)));
    bool eq1 = rep.checks.back().ok;
    check_maps_equal(rep, "unit condition (iterated, reversed)", rho2_one,
                     compose(tensor(idA, h.algebra.mul, idH), perm_map(Shape{m, n, n, n}, {0, 2, 1, 3}, f),
                             tensor(rho1, t)));
    bool eq2 = rep.checks.back().ok;
    check_maps_equal(rep, "unit condition (bar projection)", compose(tensor(idA, pi_right_bar(h)), rho),
                     compose(tensor(ca.A.mul, idH), tensor(idA, rho1)));
    bool eq3 = rep.checks.back().ok;
    check_maps_equal(rep, "unit condition (bar projection at one)", compose(tensor(idA, pi_right_bar(h)), rho1),
                     rho1);
    bool eq4 = rep.checks.back().ok;
    check_maps_equal(rep, "unit condition (projection at one)", compose(tensor(idA, pi_left(h)), rho1), rho1);
    bool eq5 = rep.checks.back().ok;

    if (mult_ok && rep.find("comodule: coassociativity")->ok && rep.find("comodule: counit")->ok) {
        bool agree = (eq1 == main_ok) && (eq2 == main_ok) && (eq3 == main_ok) && (eq4 == main_ok) &&
                     (eq5 == main_ok);
        if (!agree) throw TheoremViolation("equivalent comodule algebra unit conditions disagree");
        rep.add("unit condition reformulations agree", true);
    }
    return rep;
}

/// Coalgebra with an action C⊗H -> C that is comultiplicative and weakly
/// counital.
struct ModuleCoalgebra {
    FinCoalgebra C;
    LinMap action;  // C⊗H -> C
};

inline Report check_module_coalgebra(const WeakBialgebra& h, const ModuleCoalgebra& mc) {
    Report rep{"module coalgebra"};
    rep.dims["dim"] = mc.C.dim;
    rep.merge(check_coalgebra(mc.C), "coalgebra: ");
    rep.merge(check_right_module(RightModule{mc.C.dim, h.algebra, mc.action}), "module: ");
    const long m = mc.C.dim, n = h.dim();
    const FieldSpec f = h.field();
    const auto idC = mc.C.id(), idH = h.id();

    check_maps_equal(rep, "action comultiplicative", compose(mc.C.comul, mc.action),
                     compose(tensor(mc.action, mc.action), perm_map(Shape{m, m, n, n}, {0, 2, 1, 3}, f),
                             tensor(mc.C.comul, h.coalgebra.comul)));
    const LinMap eps_act = compose(mc.C.counit, mc.action);
    const LinMap epsmul = compose(h.coalgebra.counit, h.algebra.mul);
    check_maps_equal(rep, "action weakly counital", compose(eps_act, tensor(mc.action, idH)),
                     compose(tensor(eps_act, epsmul), perm_map(Shape{m, n, n, n}, {0, 2, 1, 3}, f),
                             tensor(idC, h.coalgebra.comul, idH)));
    return rep;
}

/// c⊗a -> Σ a_(0) ⊗ c·a_(1), the entwining induced by a coaction on the
/// algebra and an action on the coalgebra.
inline WeakEntwiningRR induced_entwining_rr(const WeakBialgebra& h, const ComoduleAlgebra& ca,
                                            const ModuleCoalgebra& mc) {
    const long m = ca.A.dim, n = h.dim(), q = mc.C.dim;
    const FieldSpec f = h.field();
    LinMap psi = compose(tensor(ca.A.id(), mc.action), perm_map(Shape{q, m, n}, {1, 0, 2}, f),
                         tensor(mc.C.id(), ca.coaction));
    return {ca.A, mc.C, psi};
}

/// a⊗c -> Σ c·S^{-1}(a_(1)) ⊗ a_(0); with the induced right map this forms an
/// invertible weak entwining when the antipode is bijective.
inline std::optional<InvertibleWeakEntwining> induced_invertible_entwining(const WeakHopf& h,
                                                                           const ComoduleAlgebra& ca,
                                                                           const ModuleCoalgebra& mc) {
    auto sinv = antipode_inverse(h);
    if (!sinv) return std::nullopt;
    const long m = ca.A.dim, n = h.dim(), q = mc.C.dim;
    const FieldSpec f = h.field();
    LinMap psi_l = compose(tensor(mc.action, ca.A.id()), perm_map(Shape{m, n, q}, {2, 1, 0}, f),
                           tensor(ca.A.id(), *sinv, mc.C.id()), tensor(ca.coaction, mc.C.id()));
    WeakEntwiningRR rr = induced_entwining_rr(h, ca, mc);
    return InvertibleWeakEntwining{ca.A, mc.C, rr.psi, psi_l};
}

/// H acting on itself by multiplication.
inline ModuleCoalgebra regular_module_coalgebra(const WeakBialgebra& h) {
    return {h.coalgebra, h.algebra.mul};
}

/// H coacting on itself by comultiplication.
inline ComoduleAlgebra regular_comodule_algebra(const WeakBialgebra& h) {
    return {h.algebra, h.coalgebra.comul};
}

struct GrouplikeCoring {
    ACoring coring;
    std::vector<Scalar> grouplike;  // coordinates in the carrier
};

/// The canonical coring on the image of a⊗h -> Σ a1_(0) ⊗ h1_(1), with the
/// coaction of 1 as its grouplike element.
inline GrouplikeCoring build_comodule_algebra_coring(const WeakBialgebra& h, const ComoduleAlgebra& ca) {
    WeakEntwiningRR w = induced_entwining_rr(h, ca, regular_module_coalgebra(h));
    GrouplikeCoring g;
    g.coring = build_coring_rr(w);
    g.grouplike = g.coring.proj.apply(ca.unit_image());
    return g;
}

inline std::vector<Scalar> kron_vec(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                    const FieldSpec& f) {
    std::vector<Scalar> out(a.size() * b.size(), Scalar::zero(f));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

inline Report check_grouplike(const ACoring& c, const std::vector<Scalar>& g) {
    Report rep{"grouplike element"};
    const FieldSpec f = c.A.field();
    auto lhs = c.coproduct.apply(g);
    auto rhs = c.balanced.proj.apply(kron_vec(g, g, f));
    rep.add("coproduct grouplike", lhs == rhs, "coproduct of the element is not its balanced square");
    rep.add("counit grouplike", c.counit.apply(g) == c.A.unit_vec(), "counit of the element is not the unit");
    return rep;
}

}  // namespace corings
