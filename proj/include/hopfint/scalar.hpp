/**
 * @file scalar.hpp
 * @brief Exact scalars over the rationals and over prime fields.
 *
 * A Scalar carries its Field descriptor. Rationals are GMP-backed and kept in
 * lowest terms with a positive denominator; prime-field values are residues in
 * [0, p). Arithmetic between scalars of different fields throws invalid_input.
 */
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/gmp.hpp>

#include "hopfint/errors.hpp"

namespace hopfint {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d <= p / d; d += 2)
        if (p % d == 0) return false;
    return true;
}

/// Ground field descriptor: Q, or F_p for a prime p.
class Field {
public:
    enum class Kind { rational, prime };

    static Field rationals() { return Field(Kind::rational, 0); }

    static Field prime(std::uint64_t p) {
        if (!is_prime(p)) throw invalid_input("F_p requires a prime modulus, got " + std::to_string(p));
        if (p >= (std::uint64_t{1} << 62)) throw invalid_input("prime modulus too large");
        return Field(Kind::prime, p);
    }

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::rational; }
    std::uint64_t modulus() const { return p_; }
    std::uint64_t characteristic() const { return p_; }

    std::string name() const { return is_rational() ? std::string("Q") : "F" + std::to_string(p_); }

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}

    Kind kind_ = Kind::rational;
    std::uint64_t p_ = 0;
};

class Scalar {
public:
    Scalar() : field_(Field::rationals()), value_(Rational(0)) {}

    static Scalar zero(const Field& f) { return from_int(f, 0); }
    static Scalar one(const Field& f) { return from_int(f, 1); }

    static Scalar from_int(const Field& f, std::int64_t v) {
        if (f.is_rational()) return Scalar(f, Rational(v));
        return Scalar(f, reduce(v, f.modulus()));
    }

    static Scalar from_rational(const Field& f, const Rational& q) {
        if (f.is_rational()) return Scalar(f, q);
        const std::uint64_t p = f.modulus();
        Integer num = boost::multiprecision::numerator(q);
        Integer den = boost::multiprecision::denominator(q);
        Integer pm(p);
        std::uint64_t d = static_cast<std::uint64_t>(Integer(((den % pm) + pm) % pm));
        if (d == 0) throw invalid_input("denominator vanishes modulo " + std::to_string(p));
        std::uint64_t n = static_cast<std::uint64_t>(Integer(((num % pm) + pm) % pm));
        return Scalar(f, mulmod(n, invmod(d, p), p));
    }

    /// Parses "a", "-a" or "a/b". Over F_p the fraction is reduced mod p.
    static Scalar parse(const Field& f, std::string_view text) {
        std::string s(text);
        if (s.empty()) throw invalid_input("empty scalar");
        Rational q;
        try {
            const auto slash = s.find('/');
            if (slash == std::string::npos) {
                q = Rational(Integer(s));
            } else {
                Integer num(s.substr(0, slash));
                Integer den(s.substr(slash + 1));
                if (den == 0) throw invalid_input("zero denominator in scalar '" + s + "'");
                q = Rational(num, den);
            }
        } catch (const invalid_input&) {
            throw;
        } catch (const std::exception&) {
            throw invalid_input("cannot parse scalar '" + s + "'");
        }
        return from_rational(f, q);
    }

    const Field& field() const { return field_; }

    bool is_zero() const {
        if (auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
        return std::get<Rational>(value_) == 0;
    }
    bool is_one() const {
        if (auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
        return std::get<Rational>(value_) == 1;
    }

    /// Residue in [0, p); only meaningful over F_p.
    std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
    const Rational& rational() const { return std::get<Rational>(value_); }

    std::string to_string() const {
        if (auto* r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
        return std::get<Rational>(value_).str();
    }

    Scalar operator-() const {
        if (auto* r = std::get_if<std::uint64_t>(&value_))
            return Scalar(field_, *r == 0 ? 0 : field_.modulus() - *r);
        return Scalar(field_, Rational(-std::get<Rational>(value_)));
    }

    Scalar& operator+=(const Scalar& o) {
        check(o);
        if (auto* r = std::get_if<std::uint64_t>(&value_)) {
            std::uint64_t s = *r + o.residue();
            if (s >= field_.modulus()) s -= field_.modulus();
            *r = s;
        } else {
            std::get<Rational>(value_) += o.rational();
        }
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        check(o);
        if (auto* r = std::get_if<std::uint64_t>(&value_)) {
            const std::uint64_t b = o.residue();
            *r = *r >= b ? *r - b : *r + field_.modulus() - b;
        } else {
            std::get<Rational>(value_) -= o.rational();
        }
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        check(o);
        if (auto* r = std::get_if<std::uint64_t>(&value_))
            *r = mulmod(*r, o.residue(), field_.modulus());
        else
            std::get<Rational>(value_) *= o.rational();
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const {
        if (is_zero()) throw invalid_input("division by zero");
        if (auto* r = std::get_if<std::uint64_t>(&value_))
            return Scalar(field_, invmod(*r, field_.modulus()));
        return Scalar(field_, Rational(1 / std::get<Rational>(value_)));
    }

    Scalar pow(std::int64_t e) const {
        Scalar base = e < 0 ? inverse() : *this;
        std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
        Scalar acc = one(field_);
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    /// Fused acc += a*b, the hot path of every contraction.
    friend void add_product(Scalar& acc, const Scalar& a, const Scalar& b) {
        acc.check(a);
        acc.check(b);
        if (auto* r = std::get_if<std::uint64_t>(&acc.value_)) {
            const std::uint64_t p = acc.field_.modulus();
            std::uint64_t s = *r + mulmod(a.residue(), b.residue(), p);
            if (s >= p) s -= p;
            *r = s;
        } else {
            std::get<Rational>(acc.value_) += a.rational() * b.rational();
        }
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    Scalar(const Field& f, Rational q) : field_(f), value_(std::move(q)) {}
    Scalar(const Field& f, std::uint64_t r) : field_(f), value_(r) {}

    void check(const Scalar& o) const {
        if (!(field_ == o.field_))
            throw invalid_input("mixed fields: " + field_.name() + " and " + o.field_.name());
    }

    static std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
        const auto sp = static_cast<__int128>(p);
        __int128 r = static_cast<__int128>(v) % sp;
        if (r < 0) r += sp;
        return static_cast<std::uint64_t>(r);
    }
    static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
    }
    static std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
        // Fermat: a^(p-2)
        std::uint64_t acc = 1, base = a % p, e = p - 2;
        while (e) {
            if (e & 1) acc = mulmod(acc, base, p);
            base = mulmod(base, base, p);
            e >>= 1;
        }
        return acc;
    }

    Field field_;
    std::variant<Rational, std::uint64_t> value_;
};

} // namespace hopfint
