#pragma once

#include "twochild/polynomial.hpp"
#include "twochild/rational.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace twochild {

/// Exact ratio of two polynomials in r; the value type for every probability.
///
/// Canonical form: numerator and denominator share no polynomial factor and
/// the denominator is monic, so equality is a structural comparison.
class RationalFunction {
public:
    RationalFunction() : den_(Rational(1)) {}
    RationalFunction(Rational constant) : num_(std::move(constant)), den_(Rational(1)) {}
    RationalFunction(long long constant) : RationalFunction(Rational(constant)) {}
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}
    RationalFunction(Polynomial num, Polynomial den);

    /// The identity function r.
    static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Exact value as a rational constant, if the function is constant.
    std::optional<Rational> as_constant() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    bool operator==(const RationalFunction& other) const {
        return num_ == other.num_ && den_ == other.den_;
    }

    bool has_pole_at(const Rational& r0) const { return den_.eval(r0).is_zero(); }

    /// Exact value at r = r0; throws std::domain_error on a pole.
    Rational eval(const Rational& r0) const;

    /// Human-readable form with integer coefficients, e.g. "(2 - r)/(4 - r)".
    std::string str() const;

    /// Parses integers, fractions "p/q" and the polynomial syntax produced by
    /// str(); general +,-,*,/ expressions in r are accepted.
    /// Throws std::invalid_argument with a description on malformed input.
    static RationalFunction parse(std::string_view text);
    static std::optional<RationalFunction> try_parse(std::string_view text);

private:
    Polynomial num_;
    Polynomial den_;

    void canonicalize();
};

}  // namespace twochild
