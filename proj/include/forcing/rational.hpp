#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace forcing {

// Exact rational number in lowest terms with a positive denominator.
// Zero is stored as 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(int value) : value_(value) {}
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool isZero() const { return sgn(value_) == 0; }
    bool isOne() const { return value_ == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    // Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational inverse() const { return Rational(1) / *this; }

    // "n" for integers, "n/d" otherwise.
    std::string toString() const { return value_.get_str(); }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_{0};
};

} // namespace forcing
