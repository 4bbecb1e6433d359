#pragma once

#include "corings/solver.hpp"
#include "corings/weak_hopf.hpp"

namespace corings {

/// {v in the leading leg : D ∘ (v ⊗ id_rest) = 0}, a universally quantified
/// kernel over the first tensor factor of the domain of D.
inline Subspace kernel_first_leg(const LinMap& d, long first_dim) {
    const FieldSpec f = d.field();
    if (first_dim <= 0 || d.cols() % first_dim != 0)
        throw std::invalid_argument("kernel_first_leg: leg does not divide domain");
    const long rest = d.cols() / first_dim;
    LinMap m(Shape::vec(d.rows() * rest), Shape::vec(first_dim), f);
    for (long r = 0; r < d.rows(); ++r)
        for (long s = 0; s < rest; ++s)
            for (long b = 0; b < first_dim; ++b) m.at(r * rest + s, b) = d.at(r, b * rest + s);
    return kernel(m);
}

inline Subspace subspace_intersection(const Subspace& u, const Subspace& w) {
    QuotientSpace q = quotient(u.ambient, w);
    Subspace inside = kernel(compose(q.proj, u.inclusion()));
    std::vector<Row> rows;
    const LinMap incl = u.inclusion();
    for (const auto& coords : inside.basis) rows.push_back(incl.apply(coords));
    return Subspace::span(u.ambient, u.field, std::move(rows));
}

/// Elements b with ρ(b a) = b ρ(a) for every a.
inline Subspace coinvariants_ambient(const FinAlgebra& a, const FinCoalgebra& c, const LinMap& rho) {
    const LinMap d = compose(rho, a.mul) - compose(tensor(a.mul, c.id()), tensor(a.id(), rho));
    return kernel_first_leg(d, a.dim);
}

/// Elements b of the base algebra commuting with a grouplike element of the
/// coring: b·g = g·b.
inline Subspace coinvariants_grouplike(const ACoring& c, const std::vector<Scalar>& g) {
    const FieldSpec f = c.A.field();
    const LinMap gcol = LinMap::column(c.shape(), f, g);
    const LinMap left = compose(c.left_act, tensor(c.A.id(), gcol));    // b -> b·g
    const LinMap right = compose(c.right_act, tensor(gcol, c.A.id()));  // b -> g·b
    return kernel(left - right);
}

/// Data of a coaction-equipped algebra together with its canonical coring,
/// coinvariants and balanced tensor square.
struct GaloisContext {
    FinAlgebra A;
    FinCoalgebra C;
    LinMap psi;   // C⊗A -> A⊗C
    LinMap rho;   // A -> A⊗C
    ACoring coring;
    std::vector<Scalar> grouplike;  // carrier coordinates of rho(1)
    Subspace B;                     // coinvariants inside A
    QuotientSpace tensor_over_B;    // A ⊗_B A
    LinMap tcan;                    // A⊗A -> carrier coordinates, a⊗a' -> a·rho(a')
};

inline GaloisContext build_galois_context(const WeakEntwiningRR& w, const LinMap& rho) {
    GaloisContext g;
    g.A = w.A;
    g.C = w.C;
    g.psi = w.psi;
    g.rho = rho;
    g.coring = build_coring_rr(w);
    g.grouplike = g.coring.proj.apply(compose(rho, w.A.unit).col_vector(0));
    g.B = coinvariants_ambient(w.A, w.C, rho);
    const auto idA = w.A.id();
    const LinMap mdiff = tensor(w.A.mul, idA) - tensor(idA, w.A.mul);
    const LinMap rel = compose(mdiff, tensor(idA, g.B.inclusion(), idA));
    g.tensor_over_B = quotient(Shape{w.A.dim, w.A.dim}, image(rel));
    g.tcan = compose(g.coring.proj, tensor(w.A.mul, w.C.id()), tensor(idA, rho));
    return g;
}

inline Report check_galois_context(const GaloisContext& g) {
    Report rep{"extension context"};
    rep.dims["coring dim"] = g.coring.dim();
    rep.dims["coinvariants dim"] = g.B.rank();
    rep.dims["tensor square dim"] = g.tensor_over_B.dim();
    const LinMap raw = compose(tensor(g.A.mul, g.C.id()), tensor(g.A.id(), g.rho));
    check_maps_equal(rep, "canonical map lands in the coring", compose(g.coring.incl, g.tcan), raw);
    rep.add("coinvariant descriptions agree", g.B == coinvariants_grouplike(g.coring, g.grouplike),
            "elementwise and grouplike coinvariants differ");
    rep.merge(check_grouplike(g.coring, g.grouplike), "grouplike: ");
    return rep;
}

/// Honest verdict on the canonical map induced on the balanced tensor square.
inline Report canonical_map(const GaloisContext& g) {
    Report rep{"canonical map"};
    rep.dims["coring dim"] = g.coring.dim();
    rep.dims["tensor square dim"] = g.tensor_over_B.dim();
    const FieldSpec f = g.A.field();
    const LinMap rel_incl = g.tensor_over_B.relators.inclusion();
    check_maps_equal(rep, "balanced well defined", compose(g.tcan, rel_incl),
                     LinMap::zero(g.coring.shape(), rel_incl.domain(), f));
    rep.add("surjective", rank(g.tcan) == g.coring.dim(), "canonical map does not reach the whole coring");
    const LinMap induced = compose(g.tcan, g.tensor_over_B.sect);
    rep.add("bijective", rep.checks.back().ok && rep.checks.front().ok && is_bijective(induced),
            "induced map on the balanced tensor square is not invertible");
    return rep;
}

/// Full direct-route report: structure laws, context consistency, verdict.
inline Report galois_direct(const WeakEntwiningRR& w, const LinMap& rho) {
    Report rep{"coalgebra extension (direct)"};
    Report ax = check_weak_entwining_rr(w);
    if (!ax.pass()) {
        rep.not_applicable = true;
        rep.hypothesis_failed = "weak entwining laws do not hold";
        return rep;
    }
    Report em = check_entwined_module_rr(w, RightModule{w.A.dim, w.A, w.A.mul}, RightComodule{w.A.dim, w.C, rho});
    if (!em.pass()) {
        rep.not_applicable = true;
        rep.hypothesis_failed = "the algebra is not an entwined module";
        return rep;
    }
    GaloisContext g = build_galois_context(w, rho);
    rep.merge(check_galois_context(g), "context: ");
    rep.merge(canonical_map(g), "canonical: ");
    return rep;
}

/// Cointegral of a coalgebra: δ: C⊗C -> k with Σ c_(1) δ(c_(2)⊗c') =
/// Σ δ(c⊗c'_(1)) c'_(2) and δ∘Δ = ε. Exists iff C is coseparable.
inline std::optional<LinMap> find_cointegral(const FinCoalgebra& c) {
    const FieldSpec f = c.field();
    const long n = c.dim;
    const Shape dom{n, n};
    const LinMap idC = c.id();
    Constraint colin;
    colin.terms.push_back({idC, tensor(c.comul, idC), n, 1});
    colin.terms.push_back({idC.scaled(-Scalar::one(f)), tensor(idC, c.comul), 1, n});
    colin.target = LinMap::zero(c.shape(), dom, f);
    Constraint counital;
    counital.terms.push_back(term_lr(LinMap::identity(Shape::scalar(), f), c.comul));
    counital.target = c.counit;
    auto sol = solve_constrained_map(Shape::scalar(), dom, f, {colin, counital});
    if (!sol) return std::nullopt;
    return sol->particular;
}

inline Report check_cointegral(const FinCoalgebra& c, const LinMap& delta) {
    Report rep{"cointegral"};
    const LinMap idC = c.id();
    check_maps_equal(rep, "colinearity", compose(tensor(idC, delta), tensor(c.comul, idC)),
                     compose(tensor(delta, idC), tensor(idC, c.comul)));
    check_maps_equal(rep, "counital", compose(delta, c.comul), c.counit);
    return rep;
}

/// Context refined by the inverse entwining direction; carries the induced
/// left coaction on A and the coordinates of c -> Σ 1_α ⊗ c^α.
struct InvertibleGaloisContext {
    InvertibleWeakEntwining ent;
    GaloisContext ctx;
    LinMap left_coaction;  // A -> C⊗A, a -> psi_l(Σ a1_(0) ⊗ 1_(1))
    LinMap ell_coords;     // C -> carrier coordinates
};

inline InvertibleGaloisContext build_invertible_galois_context(const InvertibleWeakEntwining& ent,
                                                               const LinMap& rho) {
    InvertibleGaloisContext g{ent, build_galois_context(ent.right(), rho), LinMap(), LinMap()};
    const LinMap rho1 = compose(rho, ent.A.unit);
    g.left_coaction = compose(ent.psi_l, tensor(ent.A.mul, ent.C.id()), tensor(ent.A.id(), rho1));
    g.ell_coords = compose(g.ctx.coring.proj, unit_image_rr(ent.right()));
    return g;
}

/// f(Σ a1_α ⊗ c^α) = Σ a1_α · fhat(c^α): a left-colinear coring map from a
/// hat map on the structure coalgebra.
inline LinMap hat_to_colinear(const InvertibleGaloisContext& g, const LinMap& fhat) {
    return compose(tensor(g.ctx.A.mul, g.ctx.A.id()), tensor(g.ctx.A.id(), fhat), g.ctx.coring.incl);
}

inline LinMap colinear_to_hat(const InvertibleGaloisContext& g, const LinMap& f) {
    return compose(f, g.ell_coords);
}

/// The correspondence between colinear coring maps to A⊗A and hat maps on C
/// subject to the projected-colinearity condition.
inline Report check_colinear_correspondence(const InvertibleGaloisContext& g, const LinMap& fhat) {
    Report rep{"colinear correspondence"};
    const FinAlgebra& A = g.ctx.A;
    const FinCoalgebra& C = g.ctx.C;
    const ACoring& c = g.ctx.coring;
    const auto idA = A.id(), idC = C.id();
    const LinMap pl = projection_pl(g.ent.left());
    check_maps_equal(rep, "hat colinearity", compose(tensor(g.left_coaction, idA), fhat),
                     compose(tensor(pl, idA), tensor(idC, fhat), C.comul));
    const LinMap f = hat_to_colinear(g, fhat);
    const LinMap rho1 = compose(g.ctx.rho, A.unit);
    const LinMap coact_a = compose(c.proj, tensor(A.mul, idC), tensor(idA, rho1));  // A -> carrier
    const LinMap idX = LinMap::identity(c.shape(), A.field());
    check_maps_equal(rep, "induced map colinear", compose(tensor(coact_a, idA), f),
                     compose(tensor(c.right_act, idA), tensor(idX, f), c.coproduct_raw));
    check_maps_equal(rep, "hat recovered from induced map", colinear_to_hat(g, f), fhat);
    return rep;
}

/// Linear section of the canonical map A⊗A -> coring, with the full solution
/// space for exploring alternative sections.
inline std::optional<ConstrainedSolution> find_section_tau(const GaloisContext& g) {
    const FieldSpec f = g.A.field();
    Constraint section;
    section.terms.push_back(term_lr(g.tcan, LinMap::identity(g.coring.shape(), f)));
    section.target = LinMap::identity(g.coring.shape(), f);
    return solve_constrained_map(Shape{g.A.dim, g.A.dim}, g.coring.shape(), f, {section});
}

/// Exchange of the two coactions along a hat section: applying both coactions
/// to the legs of tau-hat reproduces the entwining at the unit.
inline Report check_section_coactions(const InvertibleGaloisContext& g, const LinMap& tau) {
    Report rep{"section coactions"};
    const FinAlgebra& A = g.ctx.A;
    const FinCoalgebra& C = g.ctx.C;
    const auto idC = C.id();
    const LinMap tauhat = compose(tau, g.ell_coords);
    check_maps_equal(rep, "coaction exchange",
                     compose(tensor(idC, A.mul, idC), tensor(g.left_coaction, g.ctx.rho), tauhat),
                     compose(tensor(idC, g.ctx.psi), tensor(idC, idC, A.unit), C.comul));
    return rep;
}

struct KappaMaps {
    LinMap kappa_hat;  // C -> A⊗A
    LinMap kappa;      // carrier coordinates -> A⊗A
    Report rep;
};

/// Colinear splitting of the canonical map built from a cointegral and a
/// linear section.
inline KappaMaps build_kappa(const InvertibleGaloisContext& g, const LinMap& delta, const LinMap& tau) {
    const FinAlgebra& A = g.ctx.A;
    const FinCoalgebra& C = g.ctx.C;
    const auto idA = A.id(), idC = C.id();
    const LinMap tauhat = compose(tau, g.ell_coords);
    KappaMaps k{LinMap(), LinMap(), Report{"colinear splitting"}};
    k.kappa_hat = compose(tensor(delta, idA, idA), tensor(idC, g.left_coaction, idA), tensor(idC, tauhat),
                          C.comul);
    k.kappa = hat_to_colinear(g, k.kappa_hat);
    k.rep.merge(check_colinear_correspondence(g, k.kappa_hat));
    check_maps_equal(k.rep, "splits the canonical map", compose(g.ctx.tcan, k.kappa),
                     LinMap::identity(g.ctx.coring.shape(), A.field()));
    return k;
}

/// The coinvariants as an algebra in their own coordinates. Closure under
/// multiplication is a structural guarantee; its failure is raised.
struct CoinvariantAlgebra {
    Subspace B;
    LinMap incl;    // coordinates -> A
    LinMap coords;  // A -> coordinates, exact on B
    FinAlgebra alg;
};

inline CoinvariantAlgebra coinvariant_algebra(const FinAlgebra& a, const Subspace& b) {
    CoinvariantAlgebra cb{b, b.inclusion(), b.pivot_coords(), FinAlgebra{}};
    const LinMap prod = compose(a.mul, tensor(cb.incl, cb.incl));
    if (compose(cb.incl, cb.coords, prod) != prod)
        throw TheoremViolation("coinvariants are not closed under multiplication");
    if (!b.contains(a.unit_vec())) throw TheoremViolation("coinvariants do not contain the unit");
    cb.alg.dim = b.rank();
    cb.alg.mul = compose(cb.coords, prod);
    cb.alg.unit = compose(cb.coords, a.unit);
    return cb;
}

/// B-linear splitting of the multiplication B⊗A -> A.
inline std::optional<LinMap> find_linear_splitting_left(const FinAlgebra& a, const CoinvariantAlgebra& cb) {
    const FieldSpec f = a.field();
    const long m = a.dim, b = cb.alg.dim;
    const auto idA = a.id();
    const LinMap idBA = LinMap::identity(Shape{b, m}, f);
    const LinMap act = compose(a.mul, tensor(cb.incl, idA));  // B⊗A -> A
    Constraint splits;
    splits.terms.push_back(term_lr(act, idA));
    splits.target = idA;
    Constraint linear;
    linear.terms.push_back(term_lr(idBA, act));
    linear.terms.push_back({tensor(cb.alg.mul, idA).scaled(-Scalar::one(f)), idBA, b, 1});
    linear.target = LinMap::zero(Shape{b, m}, Shape{b, m}, f);
    auto sol = solve_constrained_map(Shape{b, m}, a.shape(), f, {splits, linear});
    if (!sol) return std::nullopt;
    return sol->particular;
}

/// B-linear splitting of the multiplication A⊗B -> A.
inline std::optional<LinMap> find_linear_splitting_right(const FinAlgebra& a, const CoinvariantAlgebra& cb) {
    const FieldSpec f = a.field();
    const long m = a.dim, b = cb.alg.dim;
    const auto idA = a.id();
    const LinMap idAB = LinMap::identity(Shape{m, b}, f);
    const LinMap act = compose(a.mul, tensor(idA, cb.incl));  // A⊗B -> A
    Constraint splits;
    splits.terms.push_back(term_lr(act, idA));
    splits.target = idA;
    Constraint linear;
    linear.terms.push_back(term_lr(idAB, act));
    linear.terms.push_back({tensor(idA, cb.alg.mul).scaled(-Scalar::one(f)), idAB, 1, b});
    linear.target = LinMap::zero(Shape{m, b}, Shape{m, b}, f);
    auto sol = solve_constrained_map(Shape{m, b}, a.shape(), f, {splits, linear});
    if (!sol) return std::nullopt;
    return sol->particular;
}

inline Report check_splitting_left(const FinAlgebra& a, const CoinvariantAlgebra& cb, const LinMap& sigt) {
    Report rep{"left splitting"};
    const auto idA = a.id();
    const LinMap idB = LinMap::identity(cb.alg.shape(), a.field());
    const LinMap act = compose(a.mul, tensor(cb.incl, idA));
    check_maps_equal(rep, "splits multiplication", compose(act, sigt), idA);
    check_maps_equal(rep, "linear over coinvariants", compose(sigt, act),
                     compose(tensor(cb.alg.mul, idA), tensor(idB, sigt)));
    return rep;
}

inline Report check_splitting_right(const FinAlgebra& a, const CoinvariantAlgebra& cb, const LinMap& sigt) {
    Report rep{"right splitting"};
    const auto idA = a.id();
    const LinMap idB = LinMap::identity(cb.alg.shape(), a.field());
    const LinMap act = compose(a.mul, tensor(idA, cb.incl));
    check_maps_equal(rep, "splits multiplication", compose(act, sigt), idA);
    check_maps_equal(rep, "linear over coinvariants", compose(sigt, act),
                     compose(tensor(idA, cb.alg.mul), tensor(sigt, idB)));
    return rep;
}

/// Colinear refinement of a plain linear splitting, averaged through the
/// cointegral: (B⊗A⊗δ) ∘ (B⊗ρ⊗C) ∘ (sigt⊗C) ∘ ρ.
inline LinMap equivariant_section(const GaloisContext& g, const CoinvariantAlgebra& cb, const LinMap& delta,
                                  const LinMap& sigt) {
    const auto idA = g.A.id(), idC = g.C.id();
    const LinMap idB = LinMap::identity(cb.alg.shape(), g.A.field());
    return compose(tensor(idB, idA, delta), tensor(idB, g.rho, idC), tensor(sigt, idC), g.rho);
}

inline Report check_equivariant_section(const GaloisContext& g, const CoinvariantAlgebra& cb,
                                        const LinMap& sigma) {
    Report rep{"equivariant section"};
    const auto idA = g.A.id(), idC = g.C.id();
    const LinMap idB = LinMap::identity(cb.alg.shape(), g.A.field());
    const LinMap act = compose(g.A.mul, tensor(cb.incl, idA));
    check_maps_equal(rep, "splits multiplication", compose(act, sigma), idA);
    check_maps_equal(rep, "linear over coinvariants", compose(sigma, act),
                     compose(tensor(cb.alg.mul, idA), tensor(idB, sigma)));
    check_maps_equal(rep, "colinear", compose(tensor(idB, g.rho), sigma), compose(tensor(sigma, idC), g.rho));
    return rep;
}

/// Section of the lifted canonical map A⊗C -> A⊗_B A that is left A-linear
/// and right C-colinear; its existence rebuilds the entwining from the
/// extension data alone.
inline std::optional<LinMap> find_split_section_sigma(const GaloisContext& g) {
    const FieldSpec f = g.A.field();
    const long m = g.A.dim, n = g.C.dim;
    const QuotientSpace& q = g.tensor_over_B;
    const long qd = q.dim();
    const auto idA = g.A.id(), idC = g.C.id();
    const Shape dom{m, n};
    const LinMap idQ = LinMap::identity(Shape::vec(qd), f);
    const LinMap lact_q = compose(q.proj, tensor(g.A.mul, idA), tensor(idA, q.sect));   // A⊗Q -> Q
    const LinMap rho_q = compose(tensor(q.proj, idC), tensor(idA, g.rho), q.sect);      // Q -> Q⊗C
    const LinMap canbar = compose(tensor(g.A.mul, idC), tensor(idA, g.rho), q.sect);    // Q -> A⊗C

    Constraint linear;  // X∘(μ⊗C) = lact_q∘(A⊗X)
    linear.terms.push_back(term_lr(idQ, tensor(g.A.mul, idC)));
    linear.terms.push_back({lact_q.scaled(-Scalar::one(f)), LinMap::identity(Shape{m, m, n}, f), m, 1});
    linear.target = LinMap::zero(Shape::vec(qd), Shape{m, m, n}, f);

    Constraint colinear;  // rho_q∘X = (X⊗C)∘(A⊗Δ)
    colinear.terms.push_back(term_lr(rho_q, LinMap::identity(dom, f)));
    colinear.terms.push_back({LinMap::identity(Shape{qd, n}, f).scaled(-Scalar::one(f)),
                              tensor(idA, g.C.comul), 1, n});
    colinear.target = LinMap::zero(Shape{qd, n}, dom, f);

    Constraint splits;  // X∘canbar = id
    splits.terms.push_back(term_lr(idQ, canbar));
    splits.target = idQ;

    auto sol = solve_constrained_map(Shape::vec(qd), dom, f, {linear, colinear, splits});
    if (!sol) return std::nullopt;
    return sol->particular;
}

inline Report check_split_section(const GaloisContext& g, const LinMap& sigma) {
    Report rep{"split section"};
    const FieldSpec f = g.A.field();
    const QuotientSpace& q = g.tensor_over_B;
    const auto idA = g.A.id(), idC = g.C.id();
    const LinMap idQ = LinMap::identity(Shape::vec(q.dim()), f);
    const LinMap lact_q = compose(q.proj, tensor(g.A.mul, idA), tensor(idA, q.sect));
    const LinMap rho_q = compose(tensor(q.proj, idC), tensor(idA, g.rho), q.sect);
    const LinMap canbar = compose(tensor(g.A.mul, idC), tensor(idA, g.rho), q.sect);
    check_maps_equal(rep, "left linear", compose(sigma, tensor(g.A.mul, idC)),
                     compose(lact_q, tensor(idA, sigma)));
    check_maps_equal(rep, "right colinear", compose(rho_q, sigma),
                     compose(tensor(sigma, idC), tensor(idA, g.C.comul)));
    check_maps_equal(rep, "splits the lifted canonical map", compose(sigma, canbar), idQ);
    return rep;
}

/// The entwining reconstructed from a split section: evaluation of the lifted
/// canonical map after multiplying into the section of the coaction leg.
inline WeakEntwiningRR canonical_entwining_from_section(const GaloisContext& g, const LinMap& sigma) {
    const QuotientSpace& q = g.tensor_over_B;
    const auto idA = g.A.id(), idC = g.C.id();
    const LinMap tau_q = compose(sigma, tensor(g.A.unit, idC));                       // C -> Q
    const LinMap mul_q = compose(q.proj, tensor(idA, g.A.mul), tensor(q.sect, idA));  // Q⊗A -> Q
    const LinMap canbar = compose(tensor(g.A.mul, idC), tensor(idA, g.rho), q.sect);  // Q -> A⊗C
    return {g.A, g.C, compose(canbar, mul_q, tensor(tau_q, idA))};
}

/// Projectivity of a coalgebra as a left comodule over itself, decided by
/// solving for a module-linear section of the free cover over the dual
/// algebra.
struct ComoduleProjectivity {
    bool projective = false;
    Report rep{"comodule projectivity"};
};

inline ComoduleProjectivity comodule_projectivity(const FinCoalgebra& c) {
    ComoduleProjectivity out;
    const FieldSpec f = c.field();
    RightModule m = left_comodule_to_right_dual_module(LeftComodule{c.dim, c, c.comul});
    const long nm = m.dim, nr = m.over.dim;
    const LinMap idM = LinMap::identity(m.shape(), f);
    const LinMap idMR = LinMap::identity(Shape{nm, nr}, f);
    Constraint splits;  // π∘h = id for the free cover π = action
    splits.terms.push_back(term_lr(m.action, idM));
    splits.target = idM;
    Constraint linear;  // h∘action = (M⊗mul)∘(h⊗R)
    linear.terms.push_back(term_lr(idMR, m.action));
    linear.terms.push_back({tensor(idM, m.over.mul).scaled(-Scalar::one(f)), idMR, 1, nr});
    linear.target = LinMap::zero(Shape{nm, nr}, Shape{nm, nr}, f);
    auto sol = solve_constrained_map(Shape{nm, nr}, m.shape(), f, {splits, linear});
    out.projective = sol.has_value();
    out.rep.add("module-linear section of the free cover exists", out.projective,
                "no section solves the lifting problem");
    if (sol) {
        check_maps_equal(out.rep, "section splits the cover", compose(m.action, sol->particular), idM);
        check_maps_equal(out.rep, "section is module linear", compose(sol->particular, m.action),
                         compose(tensor(idM, m.over.mul), tensor(sol->particular, LinMap::identity(m.over.shape(), f))));
    }
    return out;
}

/// Left structure-coalgebra coaction on the coring carrier, routed through
/// the inverse entwining direction.
inline LinMap coring_left_coaction(const InvertibleGaloisContext& g) {
    const ACoring& c = g.ctx.coring;
    const LinMap idX = LinMap::identity(c.shape(), g.ctx.A.field());
    return compose(tensor(g.ctx.C.id(), c.left_act), tensor(g.ent.psi_l, idX), tensor(c.incl, idX),
                   c.coproduct_raw);
}

/// The coinvariant description of the invariant part of A⊗A: vectors whose
/// second leg commutes with the grouplike element, compared with A⊗B.
inline Report check_coinvariant_tensor_factorization(const GaloisContext& g) {
    Report rep{"tensor square coinvariants"};
    const FieldSpec f = g.A.field();
    const ACoring& c = g.coring;
    const LinMap gcol = LinMap::column(c.shape(), f, g.grouplike);
    const LinMap dmap = compose(c.left_act, tensor(g.A.id(), gcol)) -
                        compose(c.right_act, tensor(gcol, g.A.id()));
    Subspace lhs = kernel(tensor(g.A.id(), dmap));
    std::vector<Row> rows;
    for (long i = 0; i < g.A.dim; ++i)
        for (const auto& b : g.B.basis) {
            Row row(g.A.dim * g.A.dim, Scalar::zero(f));
            for (long t = 0; t < g.A.dim; ++t) row[i * g.A.dim + t] = b[t];
            rows.push_back(std::move(row));
        }
    Subspace rhs = Subspace::span(Shape{g.A.dim, g.A.dim}, f, std::move(rows));
    rep.dims["invariant part dim"] = lhs.rank();
    rep.dims["factored dim"] = rhs.rank();
    rep.add("invariant part factors through coinvariants", lhs == rhs,
            "the invariant part of the tensor square is not A tensored with the coinvariants");
    return rep;
}

namespace detail {
inline bool gate(Report& rep, const Report& sub, const std::string& reason) {
    if (sub.pass()) return true;
    rep.not_applicable = true;
    rep.hypothesis_failed = reason;
    return false;
}
}  // namespace detail

/// Route through a coseparable structure coalgebra: a cointegral plus any
/// linear section of the canonical map produce a colinear splitting, hence a
/// bijective canonical map and an equivariant splitting of the multiplication.
inline Report coseparable_pipeline(const InvertibleWeakEntwining& ent, const LinMap& rho) {
    Report rep{"coseparable route"};
    if (!detail::gate(rep, check_invertible_weak_entwining(ent), "invertibility laws do not hold")) return rep;
    Report em = check_entwined_module_rr(ent.right(), RightModule{ent.A.dim, ent.A, ent.A.mul},
                                         RightComodule{ent.A.dim, ent.C, rho});
    if (!detail::gate(rep, em, "the algebra is not an entwined module")) return rep;
    auto delta = find_cointegral(ent.C);
    if (!delta) {
        rep.not_applicable = true;
        rep.hypothesis_failed = "no cointegral exists";
        return rep;
    }
    InvertibleGaloisContext g = build_invertible_galois_context(ent, rho);
    Report cm = canonical_map(g.ctx);
    if (!cm.find("surjective")->ok || !cm.find("balanced well defined")->ok) {
        rep.not_applicable = true;
        rep.hypothesis_failed = "canonical map is not surjective onto the coring";
        return rep;
    }
    rep.merge(check_galois_context(g.ctx), "context: ");
    rep.merge(check_cointegral(ent.C, *delta), "cointegral: ");
    rep.merge(check_entwined_module_ll(ent.left(), ent.A.mul, LeftComodule{ent.A.dim, ent.C, g.left_coaction}),
              "left structure: ");
    auto tau = find_section_tau(g.ctx);
    if (!tau) throw TheoremViolation("surjective canonical map has no linear section");
    rep.merge(check_section_coactions(g, tau->particular), "section: ");
    KappaMaps k = build_kappa(g, *delta, tau->particular);
    rep.merge(k.rep, "splitting: ");
    rep.merge(cm, "canonical: ");
    CoinvariantAlgebra cb = coinvariant_algebra(ent.A, g.ctx.B);
    auto sigt = find_linear_splitting_left(ent.A, cb);
    if (!sigt) throw TheoremViolation("no linear splitting of the multiplication exists");
    rep.merge(check_splitting_left(ent.A, cb, *sigt), "plain splitting: ");
    rep.merge(check_equivariant_section(g.ctx, cb, equivariant_section(g.ctx, cb, *delta, *sigt)),
              "equivariant: ");
    require_pass(rep, "coseparable route");
    return rep;
}

/// Route through comodule projectivity of the structure coalgebra and the
/// factorization of the invariant tensor square.
inline Report projective_pipeline(const InvertibleWeakEntwining& ent, const LinMap& rho) {
    Report rep{"projective route"};
    if (!detail::gate(rep, check_invertible_weak_entwining(ent), "invertibility laws do not hold")) return rep;
    Report em = check_entwined_module_rr(ent.right(), RightModule{ent.A.dim, ent.A, ent.A.mul},
                                         RightComodule{ent.A.dim, ent.C, rho});
    if (!detail::gate(rep, em, "the algebra is not an entwined module")) return rep;
    ComoduleProjectivity proj = comodule_projectivity(ent.C);
    if (!proj.projective) {
        rep.not_applicable = true;
        rep.hypothesis_failed = "the coalgebra is not projective as a comodule over itself";
        return rep;
    }
    InvertibleGaloisContext g = build_invertible_galois_context(ent, rho);
    Report fact = check_coinvariant_tensor_factorization(g.ctx);
    if (!detail::gate(rep, fact, "the invariant tensor square does not factor through the coinvariants"))
        return rep;
    Report cm = canonical_map(g.ctx);
    if (!cm.find("surjective")->ok || !cm.find("balanced well defined")->ok) {
        rep.not_applicable = true;
        rep.hypothesis_failed = "canonical map is not surjective onto the coring";
        return rep;
    }
    rep.merge(check_galois_context(g.ctx), "context: ");
    rep.merge(proj.rep, "projectivity: ");
    rep.merge(fact, "factorization: ");

    const FieldSpec f = ent.A.field();
    const FinAlgebra& A = ent.A;
    const FinCoalgebra& C = ent.C;
    const LinMap leftco = coring_left_coaction(g);
    check_maps_equal(rep, "unit section colinear", compose(leftco, g.ell_coords),
                     compose(tensor(C.id(), g.ell_coords), C.comul));

    // left C-colinear hat map through which the unit section factors
    Constraint onto;
    onto.terms.push_back(term_lr(g.ctx.tcan, C.id()));
    onto.target = g.ell_coords;
    Constraint colin;
    colin.terms.push_back(term_lr(tensor(g.left_coaction, A.id()), C.id()));
    colin.terms.push_back({LinMap::identity(Shape{C.dim, A.dim, A.dim}, f).scaled(-Scalar::one(f)), C.comul,
                           C.dim, 1});
    colin.target = LinMap::zero(Shape{C.dim, A.dim, A.dim}, C.shape(), f);
    auto fhat = solve_constrained_map(Shape{A.dim, A.dim}, C.shape(), f, {onto, colin});
    if (!fhat) throw TheoremViolation("no colinear hat section of the canonical map exists");
    rep.merge(check_colinear_correspondence(g, fhat->particular), "hat section: ");
    const LinMap fmap = hat_to_colinear(g, fhat->particular);
    check_maps_equal(rep, "colinear section splits the canonical map", compose(g.ctx.tcan, fmap),
                     LinMap::identity(g.ctx.coring.shape(), f));
    rep.merge(cm, "canonical: ");
    CoinvariantAlgebra cb = coinvariant_algebra(A, g.ctx.B);
    auto sigt = find_linear_splitting_left(A, cb);
    if (!sigt) throw TheoremViolation("no linear splitting of the multiplication exists");
    rep.merge(check_splitting_left(A, cb, *sigt), "plain splitting: ");
    require_pass(rep, "projective route");
    return rep;
}

/// Finite-dimensional route: for a weak Hopf structure coalgebra acting and
/// coacting regularly, surjectivity of the canonical map already forces
/// bijectivity and two-sided projectivity over the coinvariants.
inline Report finite_hopf_pipeline(const WeakHopf& h, const ComoduleAlgebra& ca) {
    Report rep{"finite weak Hopf route"};
    if (!detail::gate(rep, check_weak_hopf(h), "weak Hopf laws do not hold")) return rep;
    if (!detail::gate(rep, check_comodule_algebra(h, ca), "comodule algebra laws do not hold")) return rep;
    auto ent = induced_invertible_entwining(h, ca, regular_module_coalgebra(h));
    if (!ent) {
        rep.not_applicable = true;
        rep.hypothesis_failed = "antipode is singular";
        return rep;
    }
    rep.merge(check_invertible_weak_entwining(*ent), "entwining: ");
    InvertibleGaloisContext g = build_invertible_galois_context(*ent, ca.coaction);
    rep.merge(check_entwined_module_rr(ent->right(), RightModule{ca.A.dim, ca.A, ca.A.mul},
                                       RightComodule{ca.A.dim, h.coalgebra, ca.coaction}),
              "entwined module: ");
    require_pass(rep, "finite weak Hopf route hypotheses");
    Report cm = canonical_map(g.ctx);
    if (!cm.find("surjective")->ok || !cm.find("balanced well defined")->ok) {
        rep.not_applicable = true;
        rep.hypothesis_failed = "canonical map is not surjective onto the coring";
        return rep;
    }
    rep.merge(check_galois_context(g.ctx), "context: ");
    ComoduleProjectivity proj = comodule_projectivity(h.coalgebra);
    rep.merge(proj.rep, "projectivity: ");
    rep.merge(cm, "canonical: ");
    CoinvariantAlgebra cb = coinvariant_algebra(ca.A, g.ctx.B);
    auto sl = find_linear_splitting_left(ca.A, cb);
    if (!sl) throw TheoremViolation("no left linear splitting of the multiplication exists");
    rep.merge(check_splitting_left(ca.A, cb, *sl), "left splitting: ");
    auto sr = find_linear_splitting_right(ca.A, cb);
    if (!sr) throw TheoremViolation("no right linear splitting of the multiplication exists");
    rep.merge(check_splitting_right(ca.A, cb, *sr), "right splitting: ");
    require_pass(rep, "finite weak Hopf route");
    return rep;
}

/// Quotient data of a left comodule subalgebra A of a weak Hopf algebra H:
/// the coideal it generates, the quotient coalgebra, the homogeneous
/// entwining and the split section recovering it.
struct SubalgebraPipeline {
    Report rep{"comodule subalgebra route"};
    FinCoalgebra C;
    QuotientSpace quot;
    Subspace generators;       // span of a - Π-bar-R(a)
    Subspace literal_reading;  // Im Π-bar-R intersected with A
    Subspace ideal;            // generators · H
    LinMap psi;                // C⊗H -> H⊗C
    LinMap rhoH;               // H -> H⊗C
    std::optional<GaloisContext> ctx;
};

inline SubalgebraPipeline comodule_subalgebra_pipeline(const WeakHopf& h, const Subspace& a_sub) {
    SubalgebraPipeline out;
    Report& rep = out.rep;
    const FieldSpec f = h.field();
    const long n = h.dim();
    const auto idH = h.id();
    const LinMap a_incl = a_sub.inclusion();

    if (!detail::gate(rep, check_weak_hopf(h), "weak Hopf laws do not hold")) return out;
    Report sub{"subalgebra"};
    sub.add("contains the unit", a_sub.contains(h.algebra.unit_vec()), "unit lies outside the subspace");
    const LinMap prod = compose(h.algebra.mul, tensor(a_incl, a_incl));
    sub.add("closed under multiplication", a_sub.contains(image(prod)),
            "a product of basis elements leaves the subspace");
    {
        std::vector<Row> rows;
        for (long i = 0; i < n; ++i)
            for (const auto& a : a_sub.basis) {
                Row row(n * n, Scalar::zero(f));
                for (long t = 0; t < n; ++t) row[i * n + t] = a[t];
                rows.push_back(std::move(row));
            }
        Subspace ha = Subspace::span(Shape{n, n}, f, std::move(rows));
        sub.add("left comodule", ha.contains(image(compose(h.coalgebra.comul, a_incl))),
                "comultiplication leaves H tensor A");
    }
    if (!detail::gate(rep, sub, "the subspace is not a left comodule subalgebra")) return out;
    rep.merge(sub, "subalgebra: ");

    const LinMap gen_map = compose(idH - pi_right_bar(h), a_incl);
    out.generators = image(gen_map);
    out.literal_reading = subspace_intersection(image(pi_right_bar(h)), a_sub);
    rep.dims["generators dim"] = out.generators.rank();
    rep.dims["literal reading dim"] = out.literal_reading.rank();

    out.ideal = image(compose(h.algebra.mul, tensor(out.generators.inclusion(), idH)));
    rep.dims["ideal dim"] = out.ideal.rank();
    const LinMap j_incl = out.ideal.inclusion();
    const LinMap zero_from_j = LinMap::zero(Shape::scalar(), j_incl.domain(), f);
    check_maps_equal(rep, "ideal counit vanishes", compose(h.coalgebra.counit, j_incl), zero_from_j);
    {
        std::vector<Row> rows;
        for (long i = 0; i < n; ++i)
            for (const auto& j : out.ideal.basis) {
                Row a(n * n, Scalar::zero(f)), b(n * n, Scalar::zero(f));
                for (long t = 0; t < n; ++t) {
                    a[i * n + t] = j[t];  // H ⊗ J
                    b[t * n + i] = j[t];  // J ⊗ H
                }
                rows.push_back(std::move(a));
                rows.push_back(std::move(b));
            }
        Subspace mixed = Subspace::span(Shape{n, n}, f, std::move(rows));
        rep.add("coideal", mixed.contains(image(compose(h.coalgebra.comul, j_incl))),
                "comultiplication of the ideal escapes H⊗J + J⊗H");
    }
    rep.add("right ideal", out.ideal.contains(image(compose(h.algebra.mul, tensor(j_incl, idH)))),
            "the ideal is not stable under right multiplication");

    out.quot = quotient(h.shape(), out.ideal);
    const long q = out.quot.dim();
    rep.dims["quotient dim"] = q;
    const LinMap& pi = out.quot.proj;
    const LinMap& sect = out.quot.sect;
    out.C.dim = q;
    out.C.comul = compose(tensor(pi, pi), h.coalgebra.comul, sect);
    out.C.counit = compose(h.coalgebra.counit, sect);
    check_maps_equal(rep, "quotient comultiplication well defined",
                     compose(tensor(pi, pi), h.coalgebra.comul, j_incl),
                     LinMap::zero(Shape{q, q}, j_incl.domain(), f));
    rep.merge(check_coalgebra(out.C), "quotient coalgebra: ");

    const LinMap pimul = compose(pi, h.algebra.mul);
    const LinMap act = compose(pimul, tensor(sect, idH));
    check_maps_equal(rep, "action well defined", compose(pimul, tensor(j_incl, idH)),
                     LinMap::zero(out.C.shape(), Shape{out.ideal.rank(), n}, f));
    rep.merge(check_module_coalgebra(h, ModuleCoalgebra{out.C, act}), "module coalgebra: ");

    out.psi = compose(tensor(idH, pimul), perm_map(Shape{n, n, n}, {1, 0, 2}, f), tensor(sect, h.coalgebra.comul));
    check_maps_equal(rep, "entwining preimage independence",
                     compose(tensor(idH, pimul), perm_map(Shape{n, n, n}, {1, 0, 2}, f),
                             tensor(j_incl, h.coalgebra.comul)),
                     LinMap::zero(Shape{n, q}, Shape{out.ideal.rank(), n}, f));
    WeakEntwiningRR went{h.algebra, out.C, out.psi};
    rep.merge(check_weak_entwining_rr(went), "entwining: ");

    out.rhoH = compose(tensor(idH, pi), h.coalgebra.comul);
    rep.merge(check_entwined_module_rr(went, RightModule{n, h.algebra, h.algebra.mul},
                                       RightComodule{n, out.C, out.rhoH}),
              "entwined module: ");

    out.ctx = build_galois_context(went, out.rhoH);
    rep.merge(check_galois_context(*out.ctx), "context: ");
    rep.dims["coinvariants dim"] = out.ctx->B.rank();
    rep.add("subalgebra inside coinvariants", out.ctx->B.contains(a_sub),
            "the subalgebra is not contained in the coinvariants");

    const QuotientSpace& tq = out.ctx->tensor_over_B;
    const LinMap sigma = compose(tq.proj, tensor(h.algebra.mul, idH), tensor(idH, h.antipode, idH),
                                 tensor(idH, h.coalgebra.comul), tensor(idH, sect));
    check_maps_equal(rep, "section preimage independence",
                     compose(tq.proj, tensor(h.algebra.mul, idH), tensor(idH, h.antipode, idH),
                             tensor(idH, h.coalgebra.comul), tensor(idH, j_incl)),
                     LinMap::zero(Shape::vec(tq.dim()), Shape{n, out.ideal.rank()}, f));
    rep.merge(check_split_section(*out.ctx, sigma), "section: ");
    WeakEntwiningRR rebuilt = canonical_entwining_from_section(*out.ctx, sigma);
    check_maps_equal(rep, "section rebuilds the entwining", rebuilt.psi, out.psi);
    rep.merge(canonical_map(*out.ctx), "canonical: ");
    return out;
}

}  // namespace corings
