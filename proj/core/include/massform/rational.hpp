#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace massform {

using BigInt = mpz_class;

/// Exact rational number kept in lowest terms with a positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    BigRational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    /// Throws DivisionByZeroError when `den` is zero.
    BigRational(const BigInt& num, const BigInt& den);

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& rhs);
    BigRational& operator-=(const BigRational& rhs);
    BigRational& operator*=(const BigRational& rhs);
    /// Throws DivisionByZeroError.
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "num/den", or "num" when the denominator is 1.
    std::string to_string() const;
    /// Inverse of to_string(); also accepts non-reduced input such as "4/6".
    static BigRational parse(std::string_view text);

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_{0};
};

BigRational pow(const BigRational& base, long exponent);
BigInt ipow(const BigInt& base, unsigned long exponent);
std::ostream& operator<<(std::ostream& os, const BigRational& x);

}  // namespace massform
