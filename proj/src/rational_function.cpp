#include "twochild/rational_function.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace twochild {

namespace mp = boost::multiprecision;

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (den_.is_zero()) {
        throw std::domain_error("rational function: zero denominator");
    }
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Polynomial::divmod(num_, g).first;
        den_ = Polynomial::divmod(den_, g).first;
    }
    Rational scale = den_.leading_coefficient().reciprocal();
    den_ = scale * den_;
    num_ = scale * num_;
}

std::optional<Rational> RationalFunction::as_constant() const {
    if (num_.degree() > 0 || den_.degree() > 0) return std::nullopt;
    if (num_.is_zero()) return Rational(0);
    return num_.coefficient(0) / den_.coefficient(0);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) {
        throw std::domain_error("rational function: division by zero");
    }
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

Rational RationalFunction::eval(const Rational& r0) const {
    Rational d = den_.eval(r0);
    if (d.is_zero()) {
        throw std::domain_error("rational function: pole at r = " + r0.str());
    }
    return num_.eval(r0) / d;
}

namespace {

// Scale num/den to integer coefficients with joint content 1 and the
// denominator's lowest-order coefficient positive. Display only; the
// canonical internal form keeps the denominator monic.
void display_normalize(Polynomial& num, Polynomial& den) {
    BigInt lcm_den = 1;
    BigInt gcd_num = 0;
    auto scan = [&](const Polynomial& p) {
        for (int k = 0; k <= p.degree(); ++k) {
            const Rational& c = p.coefficient(k);
            if (c.is_zero()) continue;
            lcm_den = mp::lcm(lcm_den, c.denominator());
        }
    };
    scan(num);
    scan(den);
    auto scan_gcd = [&](const Polynomial& p) {
        for (int k = 0; k <= p.degree(); ++k) {
            const Rational& c = p.coefficient(k);
            if (c.is_zero()) continue;
            BigInt scaled = mp::abs(c.numerator()) * (lcm_den / c.denominator());
            gcd_num = mp::gcd(gcd_num, scaled);
        }
    };
    scan_gcd(num);
    scan_gcd(den);
    if (gcd_num == 0) gcd_num = 1;
    Rational scale{lcm_den, gcd_num};
    num = scale * num;
    den = scale * den;
    for (int k = 0; k <= den.degree(); ++k) {
        if (den.coefficient(k).is_zero()) continue;
        if (den.coefficient(k).sign() < 0) {
            num = -num;
            den = -den;
        }
        break;
    }
}

bool single_term(const Polynomial& p) {
    int nonzero = 0;
    for (int k = 0; k <= p.degree(); ++k) {
        if (!p.coefficient(k).is_zero()) ++nonzero;
    }
    return nonzero <= 1;
}

std::string wrapped(const Polynomial& p) {
    std::string s = p.str();
    return single_term(p) ? s : "(" + s + ")";
}

// A denominator prints bare only when re-parsing cannot split it: a constant
// ("15") or a unit-coefficient power ("r", "r^2"). "5r" must become "(5r)".
bool unambiguous_denominator(const Polynomial& p) {
    if (p.degree() == 0) return true;
    if (!single_term(p)) return false;
    return p.leading_coefficient() == Rational(1);
}

}  // namespace

std::string RationalFunction::str() const {
    if (is_zero()) return "0";
    Polynomial num = num_;
    Polynomial den = den_;
    display_normalize(num, den);
    if (den.degree() == 0 && den.coefficient(0) == Rational(1)) {
        return num.str();
    }
    std::string den_str = unambiguous_denominator(den) ? den.str() : "(" + den.str() + ")";
    return wrapped(num) + "/" + den_str;
}

// ---------------------------------------------------------------------------
// Expression parser for the printed syntax: numbers, fractions, the variable
// r, parentheses, + - * / ^, and implicit multiplication ("2r", "r(1 - r)").

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    RationalFunction run() {
        RationalFunction v = sum();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return v;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("cannot parse \"" + std::string(text_) + "\": " + why +
                                    " at offset " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    RationalFunction sum() {
        skip_ws();
        bool negate = false;
        if (eat('-')) negate = true;
        else eat('+');
        RationalFunction acc = product();
        if (negate) acc = -acc;
        while (true) {
            if (eat('+')) acc += product();
            else if (eat('-')) acc -= product();
            else break;
        }
        return acc;
    }

    RationalFunction product() {
        RationalFunction acc = power();
        while (true) {
            if (eat('*')) {
                acc *= power();
            } else if (eat('/')) {
                RationalFunction d = power();
                if (d.is_zero()) fail("division by zero");
                acc = acc / d;
            } else {
                char c = peek();
                if (c == 'r' || c == '(') {
                    acc *= power();  // implicit multiplication
                } else {
                    break;
                }
            }
        }
        return acc;
    }

    RationalFunction power() {
        RationalFunction base = atom();
        if (eat('^')) {
            long exp = integer();
            if (exp < 0) fail("negative exponent");
            RationalFunction acc{Rational(1)};
            for (long i = 0; i < exp; ++i) acc *= base;
            return acc;
        }
        return base;
    }

    RationalFunction atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RationalFunction inner = sum();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'r') {
            ++pos_;
            return RationalFunction::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return RationalFunction(number());
        }
        if (c == '-') {
            ++pos_;
            return -atom();
        }
        fail("expected a number, 'r' or '('");
    }

    long integer() {
        skip_ws();
        bool neg = eat('-');
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    // Digits with an optional exact decimal part ("0.25" -> 1/4).
    Rational number() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        BigInt whole{std::string(text_.substr(start, pos_ - start))};
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            size_t fs = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == fs) fail("expected digits after '.'");
            BigInt frac{std::string(text_.substr(fs, pos_ - fs))};
            BigInt scale = 1;
            for (size_t i = fs; i < pos_; ++i) scale *= 10;
            return Rational(whole * scale + frac, scale);
        }
        return Rational(whole);
    }
};

}  // namespace

RationalFunction RationalFunction::parse(std::string_view text) {
    return ExprParser(text).run();
}

std::optional<RationalFunction> RationalFunction::try_parse(std::string_view text) {
    try {
        return parse(text);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace twochild
