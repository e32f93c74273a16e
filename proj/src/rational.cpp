#include "twochild/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace twochild {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Rational::normalize() {
    if (den_ == 0) {
        throw std::domain_error("rational: zero denominator");
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = mp::gcd(mp::abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) {
        throw std::domain_error("rational: reciprocal of zero");
    }
    return Rational(den_, num_);
}

Rational Rational::abs() const { return num_ < 0 ? -*this : *this; }

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) {
        throw std::domain_error("rational: division by zero");
    }
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += "/";
        s += den_.str();
    }
    return s;
}

namespace {

BigInt pow10(int n) {
    BigInt p = 1;
    for (int i = 0; i < n; ++i) p *= 10;
    return p;
}

// Round |num|/den scaled by 10^digits to an integer, half to even.
BigInt scaled_half_even(const BigInt& num, const BigInt& den, int digits) {
    BigInt scaled = num * pow10(digits);
    BigInt q = scaled / den;
    BigInt rem = scaled % den;
    BigInt twice = rem * 2;
    if (twice > den || (twice == den && (q & 1) == 1)) {
        ++q;
    }
    return q;
}

}  // namespace

std::string Rational::decimal(int digits) const {
    if (digits < 0) {
        throw std::invalid_argument("rational: negative digit count");
    }
    bool negative = num_ < 0;
    BigInt q = scaled_half_even(mp::abs(num_), den_, digits);
    std::string body;
    if (digits == 0) {
        body = q.str();
    } else {
        BigInt scale = pow10(digits);
        BigInt whole = q / scale;
        BigInt frac = q % scale;
        std::string fs = frac.str();
        body = whole.str() + "." + std::string(digits - fs.size(), '0') + fs;
    }
    if (negative && q != 0) {
        body.insert(body.begin(), '-');
    }
    return body;
}

BigInt Rational::round_half_even() const {
    BigInt q = scaled_half_even(mp::abs(num_), den_, 0);
    return num_ < 0 ? BigInt(-q) : q;
}

double Rational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

std::optional<Rational> Rational::parse(std::string_view text) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    auto read_digits = [&]() -> std::optional<BigInt> {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) return std::nullopt;
        return BigInt(std::string(text.substr(start, i - start)));
    };
    auto whole = read_digits();
    if (!whole) return std::nullopt;
    BigInt num = *whole;
    BigInt den = 1;
    if (i < text.size() && text[i] == '.') {
        ++i;
        size_t start = i;
        auto frac = read_digits();
        if (!frac) return std::nullopt;
        int places = static_cast<int>(i - start);
        den = pow10(places);
        num = num * den + *frac;
    } else if (i < text.size() && text[i] == '/') {
        ++i;
        auto d = read_digits();
        if (!d || *d == 0) return std::nullopt;
        den = *d;
    }
    skip_ws();
    if (i != text.size()) return std::nullopt;
    if (negative) num = -num;
    return Rational(std::move(num), std::move(den));
}

}  // namespace twochild
