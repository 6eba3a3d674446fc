#include "massform/rational.hpp"

#include <ostream>

#include "massform/errors.hpp"

namespace massform {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw DivisionByZeroError("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.value_ = -value_;
    return r;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
    if (rhs.is_zero()) {
        throw DivisionByZeroError("division by zero rational");
    }
    value_ /= rhs.value_;
    return *this;
}

std::string BigRational::to_string() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational BigRational::parse(std::string_view text) {
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view part) {
        std::string s(part);
        if (!s.empty() && s.front() == '+') {
            s.erase(0, 1);
        }
        BigInt v;
        if (s.empty() || v.set_str(s, 10) != 0) {
            throw ParseError("malformed rational: '" + std::string(text) + "'");
        }
        return v;
    };
    if (slash == std::string_view::npos) {
        return BigRational(parse_int(text));
    }
    const BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return BigRational(parse_int(text.substr(0, slash)), den);
}

BigRational pow(const BigRational& base, long exponent) {
    if (exponent < 0) {
        return BigRational(1) / pow(base, -exponent);
    }
    BigInt n;
    BigInt d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
    return BigRational(n, d);
}

BigInt ipow(const BigInt& base, unsigned long exponent) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigRational& x) { return os << x.to_string(); }

}  // namespace massform
