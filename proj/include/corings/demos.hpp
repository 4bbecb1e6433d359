#pragma once

#include <functional>
#include <map>

#include "corings/galois.hpp"

namespace corings {

/// A finite groupoid by tables: morphism lists with a partial composition.
/// comp[i][j] is defined (>= 0) exactly when target[i] == source[j].
struct GroupoidSpec {
    long objects = 0;
    std::vector<long> source, target;
    std::vector<long> identity;  // per object
    std::vector<long> inverse;   // per morphism
    std::vector<std::vector<long>> comp;

    long size() const { return static_cast<long>(source.size()); }

    static GroupoidSpec discrete(long n) {
        GroupoidSpec g;
        g.objects = n;
        for (long i = 0; i < n; ++i) {
            g.source.push_back(i);
            g.target.push_back(i);
            g.identity.push_back(i);
            g.inverse.push_back(i);
        }
        g.comp.assign(n, std::vector<long>(n, -1));
        for (long i = 0; i < n; ++i) g.comp[i][i] = i;
        return g;
    }

    static GroupoidSpec pair_groupoid(long n) {
        GroupoidSpec g;
        g.objects = n;
        auto idx = [n](long i, long j) { return i * n + j; };
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                g.source.push_back(i);
                g.target.push_back(j);
                g.inverse.push_back(idx(j, i));
            }
        for (long i = 0; i < n; ++i) g.identity.push_back(idx(i, i));
        g.comp.assign(n * n, std::vector<long>(n * n, -1));
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                for (long k = 0; k < n; ++k) g.comp[idx(i, j)][idx(j, k)] = idx(i, k);
        return g;
    }

    /// One object whose morphisms form the group given by the table.
    static GroupoidSpec group(const std::vector<std::vector<long>>& table) {
        GroupoidSpec g;
        const long n = static_cast<long>(table.size());
        g.objects = 1;
        g.comp = table;
        long unit = -1;
        for (long e = 0; e < n; ++e) {
            bool ok = true;
            for (long x = 0; x < n; ++x) ok = ok && table[e][x] == x && table[x][e] == x;
            if (ok) unit = e;
        }
        if (unit < 0) throw std::invalid_argument("GroupoidSpec::group: no unit in the table");
        g.identity.push_back(unit);
        for (long x = 0; x < n; ++x) {
            g.source.push_back(0);
            g.target.push_back(0);
            long inv = -1;
            for (long y = 0; y < n; ++y)
                if (table[x][y] == unit && table[y][x] == unit) inv = y;
            if (inv < 0) throw std::invalid_argument("GroupoidSpec::group: missing inverse");
            g.inverse.push_back(inv);
        }
        return g;
    }
};

inline Report check_groupoid(const GroupoidSpec& g) {
    Report rep{"groupoid"};
    const long n = g.size();
    bool shape_ok = static_cast<long>(g.target.size()) == n && static_cast<long>(g.inverse.size()) == n &&
                    static_cast<long>(g.identity.size()) == g.objects &&
                    static_cast<long>(g.comp.size()) == n;
    rep.add("table shapes", shape_ok);
    if (!shape_ok) return rep;
    bool dom_ok = true, id_ok = true, inv_ok = true, assoc_ok = true;
    for (long i = 0; i < n && dom_ok; ++i)
        for (long j = 0; j < n && dom_ok; ++j) {
            long c = g.comp[i][j];
            bool defined = g.target[i] == g.source[j];
            if (defined != (c >= 0)) dom_ok = false;
            if (c >= 0 && (g.source[c] != g.source[i] || g.target[c] != g.target[j])) dom_ok = false;
        }
    rep.add("composition domains", dom_ok);
    for (long x = 0; x < g.objects; ++x) {
        long e = g.identity[x];
        if (g.source[e] != x || g.target[e] != x) id_ok = false;
    }
    for (long i = 0; i < n; ++i) {
        if (g.comp[g.identity[g.source[i]]][i] != i || g.comp[i][g.identity[g.target[i]]] != i) id_ok = false;
        long v = g.inverse[i];
        if (g.comp[i][v] != g.identity[g.source[i]] || g.comp[v][i] != g.identity[g.target[i]]) inv_ok = false;
    }
    rep.add("identities", id_ok);
    rep.add("inverses", inv_ok);
    for (long i = 0; i < n && assoc_ok; ++i)
        for (long j = 0; j < n && assoc_ok; ++j)
            for (long k = 0; k < n && assoc_ok; ++k) {
                if (g.comp[i][j] < 0 || g.comp[j][k] < 0) continue;
                if (g.comp[g.comp[i][j]][k] != g.comp[i][g.comp[j][k]]) assoc_ok = false;
            }
    rep.add("associativity", assoc_ok);
    return rep;
}

/// Groupoid algebra with the morphism-diagonal coalgebra structure and the
/// inverse map as antipode.
inline WeakHopf groupoid_algebra(const GroupoidSpec& g, const FieldSpec& f) {
    require_pass(check_groupoid(g), "groupoid_algebra");
    const long n = g.size();
    WeakHopf h;
    h.algebra.dim = n;
    h.algebra.mul = LinMap(Shape::vec(n), Shape{n, n}, f);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (g.comp[i][j] >= 0) h.algebra.mul.at(g.comp[i][j], i * n + j) = Scalar::one(f);
    h.algebra.unit = LinMap(Shape::vec(n), Shape::scalar(), f);
    for (long e : g.identity) h.algebra.unit.at(e, 0) = Scalar::one(f);
    h.coalgebra.dim = n;
    h.coalgebra.comul = LinMap(Shape{n, n}, Shape::vec(n), f);
    for (long i = 0; i < n; ++i) h.coalgebra.comul.at(i * n + i, i) = Scalar::one(f);
    h.coalgebra.counit = LinMap(Shape::scalar(), Shape::vec(n), f);
    for (long i = 0; i < n; ++i) h.coalgebra.counit.at(0, i) = Scalar::one(f);
    h.antipode = LinMap(Shape::vec(n), Shape::vec(n), f);
    for (long i = 0; i < n; ++i) h.antipode.at(g.inverse[i], i) = Scalar::one(f);
    return h;
}

inline WeakHopf group_algebra(const std::vector<std::vector<long>>& table, const FieldSpec& f) {
    return groupoid_algebra(GroupoidSpec::group(table), f);
}

/// Comatrix coalgebra: Δ(e_ij) = Σ_k e_ik ⊗ e_kj, ε(e_ij) = [i=j].
inline FinCoalgebra matrix_coalgebra(long n, const FieldSpec& f) {
    FinCoalgebra c;
    c.dim = n * n;
    c.comul = LinMap(Shape{n * n, n * n}, Shape::vec(n * n), f);
    c.counit = LinMap(Shape::scalar(), Shape::vec(n * n), f);
    auto idx = [n](long i, long j) { return i * n + j; };
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            for (long k = 0; k < n; ++k) c.comul.at(idx(i, k) * n * n + idx(k, j), idx(i, j)) = Scalar::one(f);
            if (i == j) c.counit.at(0, idx(i, j)) = Scalar::one(f);
        }
    return c;
}

/// Named bundle of structure data used by the command line and the tests.
struct DemoStructures {
    std::string name;
    FieldSpec field = FieldSpec::rationals();
    std::optional<FinAlgebra> algebra;
    std::optional<FinCoalgebra> coalgebra;
    std::optional<LinMap> psi_r, psi_l, coaction, action, antipode;
    std::optional<Subspace> subalgebra;
};

inline DemoStructures bundle_from_weak_hopf(const std::string& name, const WeakHopf& h) {
    DemoStructures d;
    d.name = name;
    d.field = h.field();
    d.algebra = h.algebra;
    d.coalgebra = h.coalgebra;
    d.antipode = h.antipode;
    d.coaction = h.coalgebra.comul;
    d.action = h.algebra.mul;
    auto ent = induced_invertible_entwining(h, regular_comodule_algebra(h), regular_module_coalgebra(h));
    if (!ent) throw std::logic_error("bundle_from_weak_hopf: antipode is singular");
    d.psi_r = ent->psi_r;
    d.psi_l = ent->psi_l;
    return d;
}

/// Two grouplikes over a split algebra; the entwining pairs each algebra
/// component with the matching grouplike, breaking only unit compatibility.
inline DemoStructures unit_defect_control(const FieldSpec& f) {
    DemoStructures d;
    d.name = "swapcontrol";
    d.field = f;
    WeakHopf diag = groupoid_algebra(GroupoidSpec::discrete(2), f);
    WeakHopf grp = group_algebra({{0, 1}, {1, 0}}, f);
    d.algebra = diag.algebra;
    d.coalgebra = grp.coalgebra;
    LinMap psi(Shape{2, 2}, Shape{2, 2}, f);
    for (long i = 0; i < 2; ++i)
        for (long k = 0; k < 2; ++k) psi.at(k * 2 + k, i * 2 + k) = Scalar::one(f);
    d.psi_r = psi;
    return d;
}

/// Valid flip entwining with the coaction through a single grouplike; the
/// canonical map misses most of the coring.
inline DemoStructures trivial_coaction_control(const FieldSpec& f) {
    DemoStructures d;
    d.name = "trivialcoaction";
    d.field = f;
    WeakHopf diag = groupoid_algebra(GroupoidSpec::discrete(2), f);
    WeakHopf grp = group_algebra({{0, 1}, {1, 0}}, f);
    d.algebra = diag.algebra;
    d.coalgebra = grp.coalgebra;
    d.psi_r = swap_map(2, 2, f);
    LinMap rho(Shape{2, 2}, Shape::vec(2), f);
    rho.at(0 * 2 + 0, 0) = Scalar::one(f);
    rho.at(1 * 2 + 0, 1) = Scalar::one(f);
    d.coaction = rho;
    return d;
}

inline Subspace span_of_units(const FieldSpec& f, long dim, const std::vector<long>& idxs) {
    std::vector<Row> rows;
    for (long i : idxs) {
        Row row(dim, Scalar::zero(f));
        row[i] = Scalar::one(f);
        rows.push_back(std::move(row));
    }
    return Subspace::span(Shape::vec(dim), f, std::move(rows));
}

inline std::vector<std::string> demo_names() {
    return {"k",      "kz2",          "diag2",       "diag3",          "pairgroupoid2",   "matrixco2",
            "swapcontrol", "trivialcoaction", "kz2sub1", "kz2subh", "pairgroupoid2diag"};
}

inline DemoStructures make_demo(const std::string& name, const FieldSpec& f) {
    if (name == "k") return bundle_from_weak_hopf(name, groupoid_algebra(GroupoidSpec::discrete(1), f));
    if (name == "kz2") return bundle_from_weak_hopf(name, group_algebra({{0, 1}, {1, 0}}, f));
    if (name == "diag2") return bundle_from_weak_hopf(name, groupoid_algebra(GroupoidSpec::discrete(2), f));
    if (name == "diag3") return bundle_from_weak_hopf(name, groupoid_algebra(GroupoidSpec::discrete(3), f));
    if (name == "pairgroupoid2")
        return bundle_from_weak_hopf(name, groupoid_algebra(GroupoidSpec::pair_groupoid(2), f));
    if (name == "matrixco2") {
        DemoStructures d;
        d.name = name;
        d.field = f;
        d.coalgebra = matrix_coalgebra(2, f);
        return d;
    }
    if (name == "swapcontrol") return unit_defect_control(f);
    if (name == "trivialcoaction") return trivial_coaction_control(f);
    if (name == "kz2sub1") {
        DemoStructures d = make_demo("kz2", f);
        d.name = name;
        d.subalgebra = span_of_units(f, 2, {0});
        return d;
    }
    if (name == "kz2subh") {
        DemoStructures d = make_demo("kz2", f);
        d.name = name;
        d.subalgebra = Subspace::full(Shape::vec(2), f);
        return d;
    }
    if (name == "pairgroupoid2diag") {
        DemoStructures d = make_demo("pairgroupoid2", f);
        d.name = name;
        d.subalgebra = span_of_units(f, 4, {0, 3});
        return d;
    }
    throw std::invalid_argument("unknown demo: " + name);
}

}  // namespace corings
