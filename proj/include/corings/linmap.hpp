#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "corings/scalar.hpp"

namespace corings {

/// Tensor-factored dimension bookkeeping. The basis vector
/// e_{i1} ⊗ ... ⊗ e_{ik} has the mixed-radix index with the leftmost factor
/// most significant (row-major).
struct Shape {
    std::vector<long> factors;

    Shape() = default;
    Shape(std::initializer_list<long> fs) : factors(fs) { validate(); }
    explicit Shape(std::vector<long> fs) : factors(std::move(fs)) { validate(); }

    static Shape scalar() { return Shape{}; }
    static Shape vec(long n) { return Shape{n}; }

    long dim() const {
        long d = 1;
        for (long f : factors) d *= f;
        return d;
    }

    Shape tensor(const Shape& o) const {
        Shape s = *this;
        s.factors.insert(s.factors.end(), o.factors.begin(), o.factors.end());
        return s;
    }

    long index(std::span<const long> multi) const {
        if (multi.size() != factors.size()) throw std::invalid_argument("Shape::index: arity mismatch");
        long idx = 0;
        for (size_t k = 0; k < factors.size(); ++k) {
            if (multi[k] < 0 || multi[k] >= factors[k]) throw std::out_of_range("Shape::index");
            idx = idx * factors[k] + multi[k];
        }
        return idx;
    }

    std::vector<long> multi(long idx) const {
        std::vector<long> m(factors.size());
        for (size_t k = factors.size(); k-- > 0;) {
            m[k] = idx % factors[k];
            idx /= factors[k];
        }
        return m;
    }

    bool operator==(const Shape&) const = default;

private:
    void validate() const {
        for (long f : factors)
            if (f < 0) throw std::invalid_argument("Shape: factors must be non-negative");
    }
};

/// Dense exact matrix with tensor-factored domain and codomain.
class LinMap {
public:
    LinMap() : field_(FieldSpec::rationals()) {}

    LinMap(Shape codomain, Shape domain, FieldSpec field)
        : cod_(std::move(codomain)),
          dom_(std::move(domain)),
          field_(field),
          a_(static_cast<size_t>(cod_.dim()) * dom_.dim(), Scalar::zero(field)) {}

    static LinMap identity(const Shape& s, const FieldSpec& f) {
        LinMap m(s, s, f);
        for (long i = 0; i < s.dim(); ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    static LinMap zero(const Shape& cod, const Shape& dom, const FieldSpec& f) { return LinMap(cod, dom, f); }

    /// Column vector k -> cod with the given entries.
    static LinMap column(const Shape& cod, const FieldSpec& f, const std::vector<Scalar>& v) {
        if (static_cast<long>(v.size()) != cod.dim()) throw std::invalid_argument("LinMap::column: size mismatch");
        LinMap m(cod, Shape::scalar(), f);
        for (long i = 0; i < cod.dim(); ++i) m.at(i, 0) = v[i];
        return m;
    }

    const Shape& domain() const { return dom_; }
    const Shape& codomain() const { return cod_; }
    const FieldSpec& field() const { return field_; }
    long rows() const { return cod_.dim(); }
    long cols() const { return dom_.dim(); }

    Scalar& at(long r, long c) { return a_[static_cast<size_t>(r) * cols() + c]; }
    const Scalar& at(long r, long c) const { return a_[static_cast<size_t>(r) * cols() + c]; }

    /// Same matrix with re-declared tensor factorizations (total dims must agree).
    LinMap reshaped(Shape cod, Shape dom) const {
        if (cod.dim() != rows() || dom.dim() != cols()) throw std::invalid_argument("LinMap::reshaped: dim mismatch");
        LinMap m = *this;
        m.cod_ = std::move(cod);
        m.dom_ = std::move(dom);
        return m;
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
        if (static_cast<long>(v.size()) != cols()) throw std::invalid_argument("LinMap::apply: size mismatch");
        std::vector<Scalar> out(rows(), Scalar::zero(field_));
        for (long i = 0; i < rows(); ++i)
            for (long j = 0; j < cols(); ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
        return out;
    }

    std::vector<Scalar> col_vector(long c) const {
        std::vector<Scalar> v(rows(), Scalar::zero(field_));
        for (long i = 0; i < rows(); ++i) v[i] = at(i, c);
        return v;
    }

    LinMap operator+(const LinMap& o) const {
        require_dims(o);
        LinMap m = *this;
        for (size_t k = 0; k < a_.size(); ++k) m.a_[k] += o.a_[k];
        return m;
    }

    LinMap operator-(const LinMap& o) const {
        require_dims(o);
        LinMap m = *this;
        for (size_t k = 0; k < a_.size(); ++k) m.a_[k] -= o.a_[k];
        return m;
    }

    LinMap scaled(const Scalar& s) const {
        LinMap m = *this;
        for (auto& x : m.a_) x *= s;
        return m;
    }

    bool is_zero_map() const {
        return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
    }

    /// Entrywise equality; factorizations are ignored, total dims must match.
    bool operator==(const LinMap& o) const {
        return rows() == o.rows() && cols() == o.cols() && a_ == o.a_;
    }
    bool operator!=(const LinMap& o) const { return !(*this == o); }

private:
    void require_dims(const LinMap& o) const {
        if (rows() != o.rows() || cols() != o.cols()) throw std::invalid_argument("LinMap: dimension mismatch");
    }

    Shape cod_, dom_;
    FieldSpec field_;
    std::vector<Scalar> a_;
};

/// Matrix product f ∘ g; codomain of f and domain of g are carried through.
inline LinMap compose(const LinMap& f, const LinMap& g) {
    if (f.cols() != g.rows())
        throw std::invalid_argument("compose: domain dim " + std::to_string(f.cols()) + " != codomain dim " +
                                    std::to_string(g.rows()));
    LinMap m(f.codomain(), g.domain(), f.field());
    for (long i = 0; i < f.rows(); ++i)
        for (long k = 0; k < f.cols(); ++k) {
            if (f.at(i, k).is_zero()) continue;
            for (long j = 0; j < g.cols(); ++j)
                if (!g.at(k, j).is_zero()) m.at(i, j) += f.at(i, k) * g.at(k, j);
        }
    return m;
}

template <typename... Ms>
LinMap compose(const LinMap& f, const LinMap& g, const Ms&... rest) {
    return compose(compose(f, g), rest...);
}

/// Kronecker product consistent with the row-major index convention;
/// shapes concatenate.
inline LinMap tensor(const LinMap& f, const LinMap& g) {
    LinMap m(f.codomain().tensor(g.codomain()), f.domain().tensor(g.domain()), f.field());
    for (long i1 = 0; i1 < f.rows(); ++i1)
        for (long j1 = 0; j1 < f.cols(); ++j1) {
            if (f.at(i1, j1).is_zero()) continue;
            for (long i2 = 0; i2 < g.rows(); ++i2)
                for (long j2 = 0; j2 < g.cols(); ++j2)
                    m.at(i1 * g.rows() + i2, j1 * g.cols() + j2) = f.at(i1, j1) * g.at(i2, j2);
        }
    return m;
}

template <typename... Ms>
LinMap tensor(const LinMap& f, const LinMap& g, const Ms&... rest) {
    return tensor(tensor(f, g), rest...);
}

/// Permutation of tensor legs: output leg k is input leg perm[k].
inline LinMap perm_map(const Shape& in, const std::vector<size_t>& perm, const FieldSpec& f) {
    if (perm.size() != in.factors.size()) throw std::invalid_argument("perm_map: arity mismatch");
    Shape out;
    for (size_t k : perm) out.factors.push_back(in.factors[k]);
    LinMap m(out, in, f);
    for (long j = 0; j < in.dim(); ++j) {
        auto mi = in.multi(j);
        std::vector<long> mo(perm.size());
        for (size_t k = 0; k < perm.size(); ++k) mo[k] = mi[perm[k]];
        m.at(out.index(mo), j) = Scalar::one(f);
    }
    return m;
}

/// The flip s ⊗ t -> t ⊗ s on single-factor shapes.
inline LinMap swap_map(long d1, long d2, const FieldSpec& f) {
    return perm_map(Shape{d1, d2}, {1, 0}, f);
}

}  // namespace corings
