#include "scheme_atlas/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace atlas {

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole)
{
    std::string digits(text);
    std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
    if (start == digits.size()) {
        throw std::invalid_argument("Rational::parse: malformed '" + std::string(whole) + "'");
    }
    for (std::size_t i = start; i < digits.size(); ++i) {
        if (digits[i] < '0' || digits[i] > '9') {
            throw std::invalid_argument("Rational::parse: malformed '" + std::string(whole) + "'");
        }
    }
    if (digits[0] == '+') {
        digits.erase(0, 1);
    }
    return Integer(digits, 10);
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    const Integer num = parse_integer(text.substr(0, slash), text);
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw std::invalid_argument("Rational::parse: signed denominator in '" + std::string(text) + "'");
    }
    const Integer den = parse_integer(den_text, text);
    if (den == 0) {
        throw std::invalid_argument("Rational::parse: zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string Rational::str() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& x)
{
    os << x.value_.get_num();
    if (x.value_.get_den() != 1) {
        os << '/' << x.value_.get_den();
    }
    return os;
}

Rational abs(const Rational& x)
{
    return x.sign() < 0 ? -x : x;
}

Rational quotient_or_zero(const Rational& num, const Rational& den)
{
    if (num.is_zero()) {
        return 0;
    }
    return num / den;
}

Rational pow(const Rational& x, long e)
{
    if (e < 0) {
        if (x.is_zero()) {
            throw std::domain_error("pow: zero to a negative power");
        }
        return pow(reciprocal(x), -e);
    }
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), x.gmp().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), x.gmp().get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

} // namespace atlas
