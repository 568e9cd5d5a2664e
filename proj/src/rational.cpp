#include "skewsign/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace skewsign {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational denominator must be nonzero");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational denominator must be nonzero");
    v_ = mpq_class(num) / mpq_class(den);
}

Rational Rational::parse(const std::string& text) {
    // strict grammar: [-]digits[/digits], no whitespace, no '+'
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) throw std::invalid_argument("malformed rational '" + text + "'");
    mpz_class num(text.substr(0, i));
    mpz_class den(1);
    if (i < text.size()) {
        if (text[i] != '/') throw std::invalid_argument("malformed rational '" + text + "'");
        std::size_t den_begin = ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin || i != text.size())
            throw std::invalid_argument("malformed rational '" + text + "'");
        den = mpz_class(text.substr(den_begin));
        if (den == 0) throw std::invalid_argument("malformed rational '" + text + "': zero denominator");
    }
    return Rational(num, den);
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

std::string Rational::str() const {
    return is_integer() ? num().get_str() : num().get_str() + "/" + den().get_str();
}

Rational Rational::operator-() const {
    Rational r(*this);
    r.v_ = -r.v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace skewsign
