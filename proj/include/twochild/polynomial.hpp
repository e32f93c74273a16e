#pragma once

#include "twochild/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace twochild {

/// Dense univariate polynomial in the prevalence parameter r,
/// with exact rational coefficients.
///
/// Canonical form: the highest-degree coefficient is nonzero; the zero
/// polynomial has an empty coefficient vector and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Rational constant);
    Polynomial(long long constant) : Polynomial(Rational(constant)) {}
    explicit Polynomial(std::vector<Rational> coefficients);

    /// The monomial r.
    static Polynomial variable();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of r^power (zero beyond the degree).
    const Rational& coefficient(int power) const;
    const Rational& leading_coefficient() const;

    Rational eval(const Rational& x) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

    /// Euclidean division: a = q*b + rem with deg(rem) < deg(b); returns
    /// {quotient, remainder}. Requires b != 0.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

    /// Monic greatest common divisor; gcd(0, 0) == 0.
    static Polynomial gcd(Polynomial a, Polynomial b);

    Polynomial monic() const;

    /// Ascending powers, e.g. "2 - r", "r^2", "(1/2)r". Zero prints "0".
    std::string str() const;

private:
    std::vector<Rational> coeffs_;

    void trim();
};

}  // namespace twochild
