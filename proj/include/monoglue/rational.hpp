#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "monoglue/errors.hpp"

namespace monoglue {

/// Exact rational number. Always kept in lowest terms with positive
/// denominator; arithmetic never rounds. Backed by GMP, so numerator and
/// denominator are arbitrary-precision integers.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) { normalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) { normalize(); }
    explicit Rational(const mpq_class& q) : v_(q) { normalize(); }

    /// Parses "p" or "p/q" with p a (possibly signed) decimal integer and q a
    /// positive decimal integer. Anything else is Malformed.
    static Rational parse(std::string_view s) {
        if (!looks_like_rational(s))
            throw error(errc::malformed, "invalid rational literal '" + std::string(s) + "'");
        mpq_class q;
        if (q.set_str(std::string(s), 10) != 0)
            throw error(errc::malformed, "invalid rational literal '" + std::string(s) + "'");
        if (q.get_den() == 0)
            throw error(errc::malformed, "zero denominator in '" + std::string(s) + "'");
        q.canonicalize();
        Rational r;
        r.v_ = q;
        return r;
    }

    std::string str() const { return v_.get_str(); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return wrap(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw error(errc::singular, "division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational inverse() const {
        if (is_zero()) throw error(errc::singular, "inverse of zero rational");
        return wrap(1 / v_);
    }

    const mpq_class& raw() const { return v_; }

private:
    // mpq_class does not canonicalize two-argument construction on its own.
    void normalize() {
        if (v_.get_den() == 0) throw error(errc::malformed, "zero denominator");
        v_.canonicalize();
    }

    static Rational wrap(const mpq_class& q) {
        Rational r;
        r.v_ = q; // arithmetic on canonical operands stays canonical
        return r;
    }

    static bool looks_like_rational(std::string_view s) {
        std::size_t i = 0;
        auto digits = [&](bool allow_sign) {
            if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
            std::size_t start = i;
            while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
            return i > start;
        };
        if (!digits(true)) return false;
        if (i == s.size()) return true;
        if (s[i] != '/') return false;
        ++i;
        if (!digits(false)) return false;
        return i == s.size();
    }

    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace monoglue
