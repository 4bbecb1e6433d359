#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace corings {

/// Ground field: the rationals, or a prime field F_p.
struct FieldSpec {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    long p = 0;

    static FieldSpec rationals() { return {Kind::Rationals, 0}; }

    static FieldSpec prime(long p) {
        if (!is_prime(p)) throw std::invalid_argument("FieldSpec: " + std::to_string(p) + " is not prime");
        return {Kind::Prime, p};
    }

    static bool is_prime(long n) {
        if (n < 2) return false;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    bool operator==(const FieldSpec&) const = default;

    std::string name() const {
        return kind == Kind::Rationals ? std::string("Q") : "F" + std::to_string(p);
    }
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator (mpq_class canonical form); residues are reduced to 0..p-1.
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()), q_(0) {}

    static Scalar zero(const FieldSpec& f) { return Scalar(f); }

    static Scalar one(const FieldSpec& f) {
        Scalar s(f);
        if (f.kind == FieldSpec::Kind::Rationals)
            s.q_ = 1;
        else
            s.r_ = 1 % f.p;
        return s;
    }

    static Scalar from_long(const FieldSpec& f, long v) {
        Scalar s(f);
        if (f.kind == FieldSpec::Kind::Rationals) {
            s.q_ = v;
        } else {
            long r = v % f.p;
            if (r < 0) r += f.p;
            s.r_ = r;
        }
        return s;
    }

    static Scalar from_rational(const FieldSpec& f, long num, long den) {
        if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
        if (f.kind == FieldSpec::Kind::Rationals) {
            Scalar s(f);
            s.q_ = mpq_class(num, den);
            s.q_.canonicalize();
            return s;
        }
        return from_long(f, num) / from_long(f, den);
    }

    /// Accepts "a", "-a" or "a/b"; residues must be plain integers for F_p.
    static Scalar parse(const FieldSpec& f, const std::string& text) {
        auto slash = text.find('/');
        if (f.kind == FieldSpec::Kind::Rationals) {
            Scalar s(f);
            mpq_class q;
            if (q.set_str(text, 10) != 0) throw std::invalid_argument("Scalar: cannot parse '" + text + "'");
            if (q.get_den() == 0) throw std::invalid_argument("Scalar: zero denominator in '" + text + "'");
            q.canonicalize();
            s.q_ = q;
            return s;
        }
        if (slash != std::string::npos) {
            Scalar num = parse(f, text.substr(0, slash));
            Scalar den = parse(f, text.substr(slash + 1));
            return num / den;
        }
        try {
            size_t pos = 0;
            long v = std::stol(text, &pos);
            if (pos != text.size()) throw std::invalid_argument("");
            return from_long(f, v);
        } catch (const std::exception&) {
            throw std::invalid_argument("Scalar: cannot parse '" + text + "'");
        }
    }

    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return field_.kind == FieldSpec::Kind::Rationals ? q_ == 0 : r_ == 0; }
    bool is_one() const { return *this == one(field_); }

    std::string str() const {
        if (field_.kind == FieldSpec::Kind::Rationals) return q_.get_str();
        return std::to_string(r_);
    }

    Scalar operator+(const Scalar& o) const {
        require_same(o);
        Scalar s(field_);
        if (rational())
            s.q_ = q_ + o.q_;
        else
            s.r_ = (r_ + o.r_) % field_.p;
        return s;
    }

    Scalar operator-(const Scalar& o) const {
        require_same(o);
        Scalar s(field_);
        if (rational())
            s.q_ = q_ - o.q_;
        else
            s.r_ = ((r_ - o.r_) % field_.p + field_.p) % field_.p;
        return s;
    }

    Scalar operator-() const { return zero(field_) - *this; }

    Scalar operator*(const Scalar& o) const {
        require_same(o);
        Scalar s(field_);
        if (rational())
            s.q_ = q_ * o.q_;
        else
            s.r_ = static_cast<long>((static_cast<__int128>(r_) * o.r_) % field_.p);
        return s;
    }

    Scalar inv() const {
        if (is_zero()) throw std::domain_error("Scalar: division by zero");
        Scalar s(field_);
        if (rational()) {
            s.q_ = 1 / q_;
        } else {
            // extended Euclid
            long a = r_, m = field_.p, x0 = 0, x1 = 1;
            long b = m;
            while (a > 1) {
                long q = a / b;
                long t = b;
                b = a % b;
                a = t;
                t = x0;
                x0 = x1 - q * x0;
                x1 = t;
            }
            // here a == gcd == 1 and x1 inverts the original residue mod p
            s.r_ = ((x1 % m) + m) % m;
        }
        return s;
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const {
        if (field_ != o.field_) return false;
        return rational() ? q_ == o.q_ : r_ == o.r_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
    explicit Scalar(const FieldSpec& f) : field_(f), q_(0), r_(0) {}

    bool rational() const { return field_.kind == FieldSpec::Kind::Rationals; }

    void require_same(const Scalar& o) const {
        if (field_ != o.field_)
            throw std::invalid_argument("Scalar: mixing fields " + field_.name() + " and " + o.field_.name());
    }

    FieldSpec field_;
    mpq_class q_;
    long r_ = 0;
};

}  // namespace corings
