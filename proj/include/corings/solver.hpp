#pragma once

#include <optional>
#include <vector>

#include "corings/rref.hpp"

namespace corings {

/// One affine term L ∘ (I_left ⊗ X ⊗ I_right) ∘ R of a linear condition on an
/// unknown map X. Plain L ∘ X ∘ R is the left = right = 1 case.
struct ConstraintTerm {
    LinMap left;   // codomain side
    LinMap right;  // domain side
    long id_left = 1;
    long id_right = 1;
};

/// Σ terms(X) = target.
struct Constraint {
    std::vector<ConstraintTerm> terms;
    LinMap target;
};

inline ConstraintTerm term_lr(LinMap left, LinMap right) { return {std::move(left), std::move(right), 1, 1}; }

inline ConstraintTerm term_l(LinMap left, const Shape& dom_x, const FieldSpec& f) {
    return {std::move(left), LinMap::identity(dom_x, f), 1, 1};
}

inline ConstraintTerm term_r(const Shape& cod_x, LinMap right, const FieldSpec& f) {
    return {LinMap::identity(cod_x, f), std::move(right), 1, 1};
}

struct ConstrainedSolution {
    LinMap particular;            // free variables zero
    std::vector<LinMap> nullspace;  // basis of the homogeneous solution space
};

/// Flattens X (row-major over codomain x domain) into one exact linear system
/// and solves it. NoSolution is reported as nullopt.
inline std::optional<ConstrainedSolution> solve_constrained_map(const Shape& codomain, const Shape& domain,
                                                                const FieldSpec& f,
                                                                const std::vector<Constraint>& constraints) {
    const long cx = codomain.dim(), dx = domain.dim();
    const long nunk = cx * dx;
    std::vector<Row> rows;

    for (const auto& con : constraints) {
        const long out_rows = con.target.rows(), out_cols = con.target.cols();
        for (const auto& t : con.terms) {
            if (t.left.cols() != t.id_left * cx * t.id_right)
                throw std::invalid_argument("solve_constrained_map: term left-factor domain mismatch");
            if (t.right.rows() != t.id_left * dx * t.id_right)
                throw std::invalid_argument("solve_constrained_map: term right-factor codomain mismatch");
            if (t.left.rows() != out_rows || t.right.cols() != out_cols)
                throw std::invalid_argument("solve_constrained_map: term/target dims mismatch");
        }
        for (long i = 0; i < out_rows; ++i)
            for (long j = 0; j < out_cols; ++j) {
                Row row(nunk + 1, Scalar::zero(f));
                for (const auto& t : con.terms) {
                    // coefficient of X_{uv}: sum over the identity legs p, q of
                    // L_{i,(p,u,q)} R_{(p,v,q),j}
                    for (long p = 0; p < t.id_left; ++p)
                        for (long u = 0; u < cx; ++u)
                            for (long q = 0; q < t.id_right; ++q) {
                                const Scalar& lc = t.left.at(i, (p * cx + u) * t.id_right + q);
                                if (lc.is_zero()) continue;
                                for (long v = 0; v < dx; ++v) {
                                    const Scalar& rc = t.right.at((p * dx + v) * t.id_right + q, j);
                                    if (rc.is_zero()) continue;
                                    row[u * dx + v] += lc * rc;
                                }
                            }
                }
                row[nunk] = con.target.at(i, j);
                rows.push_back(std::move(row));
            }
    }

    auto pivots = rref_rows(rows);
    if (!pivots.empty() && pivots.back() == nunk) return std::nullopt;

    LinMap x(codomain, domain, f);
    for (size_t i = 0; i < pivots.size(); ++i) x.at(pivots[i] / dx, pivots[i] % dx) = rows[i][nunk];

    ConstrainedSolution sol{std::move(x), {}};
    std::vector<bool> is_pivot(nunk, false);
    for (long p : pivots) is_pivot[p] = true;
    for (long c = 0; c < nunk; ++c) {
        if (is_pivot[c]) continue;
        LinMap h(codomain, domain, f);
        h.at(c / dx, c % dx) = Scalar::one(f);
        for (size_t i = 0; i < pivots.size(); ++i)
            h.at(pivots[i] / dx, pivots[i] % dx) = -rows[i][c];
        sol.nullspace.push_back(std::move(h));
    }
    return sol;
}

}  // namespace corings
