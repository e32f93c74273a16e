#include "twochild/polynomial.hpp"

#include <stdexcept>

namespace twochild {

namespace {
const Rational kZero{};
}

Polynomial::Polynomial(Rational constant) {
    if (!constant.is_zero()) {
        coeffs_.push_back(std::move(constant));
    }
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

Polynomial Polynomial::variable() {
    return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

const Rational& Polynomial::coefficient(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) {
        return kZero;
    }
    return coeffs_[static_cast<size_t>(power)];
}

const Rational& Polynomial::leading_coefficient() const {
    if (coeffs_.empty()) {
        throw std::domain_error("polynomial: zero polynomial has no leading coefficient");
    }
    return coeffs_.back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = a.coefficient(static_cast<int>(i)) + b.coefficient(static_cast<int>(i));
    }
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c.is_zero()) return {};
    Polynomial out = p;
    for (auto& k : out.coeffs_) k *= c;
    return out;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) {
        throw std::domain_error("polynomial: division by zero polynomial");
    }
    Polynomial rem = a;
    std::vector<Rational> q;
    if (a.degree() >= b.degree()) {
        q.resize(static_cast<size_t>(a.degree() - b.degree()) + 1);
    }
    const Rational lead_inv = b.leading_coefficient().reciprocal();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational factor = rem.leading_coefficient() * lead_inv;
        q[static_cast<size_t>(shift)] = factor;
        std::vector<Rational> sub(static_cast<size_t>(shift), Rational(0));
        for (const auto& c : b.coeffs_) sub.push_back(factor * c);
        rem = rem - Polynomial(std::move(sub));
    }
    return {Polynomial(std::move(q)), std::move(rem)};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Polynomial Polynomial::monic() const {
    if (is_zero()) {
        throw std::domain_error("polynomial: cannot normalize the zero polynomial");
    }
    return leading_coefficient().reciprocal() * *this;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        bool unit = mag == Rational(1);
        if (k == 0 || !unit) {
            std::string m = mag.str();
            if (k > 0 && !mag.is_integer()) m = "(" + m + ")";
            out += m;
        }
        if (k >= 1) {
            out += "r";
            if (k >= 2) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace twochild
