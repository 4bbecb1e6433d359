#pragma once

#include <optional>
#include <vector>

#include "corings/linmap.hpp"

namespace corings {

using Row = std::vector<Scalar>;

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<long> rref_rows(std::vector<Row>& rows) {
    std::vector<long> pivots;
    if (rows.empty()) return pivots;
    long ncols = static_cast<long>(rows[0].size());
    size_t r = 0;
    for (long c = 0; c < ncols && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Scalar inv = rows[r][c].inv();
        for (long j = c; j < ncols; ++j) rows[r][j] *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Scalar factor = rows[i][c];
            for (long j = c; j < ncols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r, Row{});
    return pivots;
}

/// A subspace of a tensor-shaped ambient space, stored as an RREF row basis.
struct Subspace {
    Shape ambient;
    FieldSpec field;
    std::vector<Row> basis;    // RREF rows
    std::vector<long> pivots;  // strictly increasing

    static Subspace span(const Shape& ambient, const FieldSpec& f, std::vector<Row> rows) {
        for (const auto& row : rows)
            if (static_cast<long>(row.size()) != ambient.dim()) throw std::invalid_argument("Subspace::span: row size");
        auto piv = rref_rows(rows);
        return Subspace{ambient, f, std::move(rows), std::move(piv)};
    }

    static Subspace zero(const Shape& ambient, const FieldSpec& f) { return Subspace{ambient, f, {}, {}}; }

    static Subspace full(const Shape& ambient, const FieldSpec& f) {
        std::vector<Row> rows;
        for (long i = 0; i < ambient.dim(); ++i) {
            Row row(ambient.dim(), Scalar::zero(f));
            row[i] = Scalar::one(f);
            rows.push_back(std::move(row));
        }
        std::vector<long> piv(ambient.dim());
        for (long i = 0; i < ambient.dim(); ++i) piv[i] = i;
        return Subspace{ambient, f, std::move(rows), std::move(piv)};
    }

    long rank() const { return static_cast<long>(basis.size()); }

    /// Residue of v after reduction against the basis; zero iff v lies in the span.
    Row reduce(Row v) const {
        for (size_t i = 0; i < basis.size(); ++i) {
            Scalar c = v[pivots[i]];
            if (c.is_zero()) continue;
            for (long j = 0; j < ambient.dim(); ++j) v[j] -= c * basis[i][j];
        }
        return v;
    }

    bool contains(const Row& v) const {
        Row r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
    }

    bool contains(const Subspace& o) const {
        return std::all_of(o.basis.begin(), o.basis.end(), [&](const Row& v) { return contains(v); });
    }

    bool operator==(const Subspace& o) const {
        return ambient.dim() == o.ambient.dim() && basis == o.basis;
    }

    Subspace sum(const Subspace& o) const {
        std::vector<Row> rows = basis;
        rows.insert(rows.end(), o.basis.begin(), o.basis.end());
        return span(ambient, field, std::move(rows));
    }

    /// Inclusion map: coordinate space (dim = rank) -> ambient, basis rows as columns.
    LinMap inclusion() const {
        LinMap m(ambient, Shape::vec(std::max<long>(rank(), 0)), field);
        for (long j = 0; j < rank(); ++j)
            for (long i = 0; i < ambient.dim(); ++i) m.at(i, j) = basis[j][i];
        return m;
    }

    /// Coordinates by pivot-column extraction; exact on vectors inside the span.
    LinMap pivot_coords() const {
        LinMap m(Shape::vec(std::max<long>(rank(), 0)), ambient, field);
        for (long i = 0; i < rank(); ++i) m.at(i, pivots[i]) = Scalar::one(field);
        return m;
    }
};

inline std::vector<Row> map_rows(const LinMap& f) {
    std::vector<Row> rows;
    rows.reserve(f.rows());
    for (long i = 0; i < f.rows(); ++i) {
        Row row(f.cols(), Scalar::zero(f.field()));
        for (long j = 0; j < f.cols(); ++j) row[j] = f.at(i, j);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<Row> map_cols(const LinMap& f) {
    std::vector<Row> cols;
    cols.reserve(f.cols());
    for (long j = 0; j < f.cols(); ++j) cols.push_back(f.col_vector(j));
    return cols;
}

inline long rank(const LinMap& f) {
    auto rows = map_rows(f);
    return static_cast<long>(rref_rows(rows).size());
}

/// Kernel as an RREF subspace of the domain.
inline Subspace kernel(const LinMap& f) {
    auto rows = map_rows(f);
    auto pivots = rref_rows(rows);
    long n = f.cols();
    std::vector<bool> is_pivot(n, false);
    for (long p : pivots) is_pivot[p] = true;
    std::vector<Row> null_rows;
    for (long c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Row v(n, Scalar::zero(f.field()));
        v[c] = Scalar::one(f.field());
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][c];
        null_rows.push_back(std::move(v));
    }
    return Subspace::span(f.domain(), f.field(), std::move(null_rows));
}

/// Image (column space) as an RREF subspace of the codomain.
inline Subspace image(const LinMap& f) {
    return Subspace::span(f.codomain(), f.field(), map_cols(f));
}

inline bool is_bijective(const LinMap& f) { return f.rows() == f.cols() && rank(f) == f.rows(); }

inline std::optional<LinMap> inverse(const LinMap& f) {
    if (f.rows() != f.cols()) return std::nullopt;
    long n = f.rows();
    // [f | I] row reduction
    std::vector<Row> aug;
    for (long i = 0; i < n; ++i) {
        Row row(2 * n, Scalar::zero(f.field()));
        for (long j = 0; j < n; ++j) row[j] = f.at(i, j);
        row[n + i] = Scalar::one(f.field());
        aug.push_back(std::move(row));
    }
    auto pivots = rref_rows(aug);
    if (static_cast<long>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
    LinMap inv(f.domain(), f.codomain(), f.field());
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) inv.at(i, j) = aug[i][n + j];
    return inv;
}

/// A quotient of `ambient` by the span of `relators`, with the canonical
/// section through the non-pivot coordinates; proj ∘ sect = id.
struct QuotientSpace {
    Shape ambient;
    Subspace relators;
    LinMap proj;  // ambient -> quotient coordinates
    LinMap sect;  // quotient coordinates -> ambient representatives
    long dim() const { return proj.rows(); }
};

inline QuotientSpace quotient(const Shape& ambient, const Subspace& relators) {
    if (relators.ambient.dim() != ambient.dim()) throw std::invalid_argument("quotient: ambient mismatch");
    const FieldSpec f = relators.field;
    long n = ambient.dim();
    std::vector<bool> is_pivot(n, false);
    for (long p : relators.pivots) is_pivot[p] = true;
    std::vector<long> free_cols;
    for (long c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    long q = static_cast<long>(free_cols.size());

    LinMap proj(Shape::vec(q), ambient, f);
    for (long c = 0; c < n; ++c) {
        // e_c reduced modulo the relator span, then restricted to free coords
        Row v(n, Scalar::zero(f));
        v[c] = Scalar::one(f);
        v = relators.reduce(std::move(v));
        for (long k = 0; k < q; ++k) proj.at(k, c) = v[free_cols[k]];
    }
    LinMap sect(ambient, Shape::vec(q), f);
    for (long k = 0; k < q; ++k) sect.at(free_cols[k], k) = Scalar::one(f);
    return QuotientSpace{ambient, relators, std::move(proj), std::move(sect)};
}

/// Particular solution of f x = b with free variables set to zero.
inline std::optional<std::vector<Scalar>> solve(const LinMap& f, const std::vector<Scalar>& b) {
    if (static_cast<long>(b.size()) != f.rows()) throw std::invalid_argument("solve: rhs size");
    long n = f.cols();
    std::vector<Row> aug;
    for (long i = 0; i < f.rows(); ++i) {
        Row row(n + 1, Scalar::zero(f.field()));
        for (long j = 0; j < n; ++j) row[j] = f.at(i, j);
        row[n] = b[i];
        aug.push_back(std::move(row));
    }
    auto pivots = rref_rows(aug);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // inconsistent
    std::vector<Scalar> x(n, Scalar::zero(f.field()));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
    return x;
}

}  // namespace corings
