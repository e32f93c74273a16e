#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace twochild {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction with arbitrary-precision integer parts.
///
/// Canonical form: gcd(|num|, den) == 1, den > 0, zero is 0/1.
/// Values are immutable after construction; all arithmetic is exact.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const;
    Rational reciprocal() const;
    Rational abs() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "p/q", or just "p" when the value is an integer.
    std::string str() const;

    /// Fixed-point decimal with round-half-even at `digits` places.
    /// The exact value is rounded once; no floating point is involved.
    std::string decimal(int digits) const;

    /// Nearest integer under round-half-even.
    BigInt round_half_even() const;

    double to_double() const;

    /// Accepts "p", "p/q" and exact decimal literals like "0.25" or "-1.5".
    static std::optional<Rational> parse(std::string_view text);

private:
    BigInt num_;
    BigInt den_;

    void normalize();
};

}  // namespace twochild
