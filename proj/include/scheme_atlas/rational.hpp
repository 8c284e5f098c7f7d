#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <gmpxx.h>

namespace atlas {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Equality is structural on the reduced form.
class Rational {
public:
    Rational() = default;
    Rational(int value) : value_(value) {}
    Rational(long value) : value_(value) {}
    Rational(long long value) : value_(static_cast<long>(value)) {}
    Rational(const Integer& value) : value_(value) {}

    /// Throws std::domain_error when `den` is zero.
    Rational(const Integer& num, const Integer& den);

    /// Parses "a/b" or "a" (optional leading sign). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    [[nodiscard]] Integer num() const { return value_.get_num(); }
    [[nodiscard]] Integer den() const { return value_.get_den(); }

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    /// Always "num/den", e.g. "3/1", "-1/2".
    [[nodiscard]] std::string str() const;

    [[nodiscard]] double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x) { Rational r; r.value_ = -x.value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x);

    [[nodiscard]] const mpq_class& gmp() const { return value_; }

private:
    mpq_class value_;
};

[[nodiscard]] Rational abs(const Rational& x);

/// x^e for any integer exponent; throws std::domain_error for 0^e with e < 0.
[[nodiscard]] Rational pow(const Rational& x, long e);

[[nodiscard]] inline Rational reciprocal(const Rational& x) { return Rational(1) / x; }

/// num/den, except that a zero numerator yields 0 even over a zero denominator.
/// Throws std::domain_error for nonzero/0.
[[nodiscard]] Rational quotient_or_zero(const Rational& num, const Rational& den);

} // namespace atlas

namespace Eigen {

template <>
struct NumTraits<atlas::Rational> : GenericNumTraits<atlas::Rational> {
    using Real = atlas::Rational;
    using NonInteger = atlas::Rational;
    using Literal = atlas::Rational;
    using Nested = atlas::Rational;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32
    };

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline Real highest() { return 0; }
    static inline Real lowest() { return 0; }
    static inline int digits10() { return 0; }
};

} // namespace Eigen
