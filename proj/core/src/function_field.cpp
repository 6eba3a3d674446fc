#include "massform/function_field.hpp"

#include <string>

#include "massform/arith.hpp"
#include "massform/errors.hpp"

namespace massform {

namespace {

BigInt places_of_degree_unchecked(const FunctionFieldData& field, int n, bool* integral) {
    BigInt sum = 0;
    for (auto d : divisors(n)) {
        sum += mobius(n / d) * field.rational_points(static_cast<int>(d));
    }
    *integral = mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(n)) != 0;
    return sum / n;
}

}  // namespace

FunctionFieldData::FunctionFieldData(std::int64_t q, int genus, std::vector<BigInt> l_poly, int deg_inf,
                                     int sanity_bound)
    : q_(q), genus_(genus), l_coeffs_(std::move(l_poly)), deg_inf_(deg_inf) {
    if (!factor_prime_power(q_)) {
        throw InvalidFieldError("q = " + std::to_string(q_) + " is not a prime power");
    }
    if (genus_ < 0) {
        throw InvalidFieldError("genus must be non-negative");
    }
    if (deg_inf_ < 1) {
        throw InvalidFieldError("deg_inf must be positive");
    }
    while (!l_coeffs_.empty() && l_coeffs_.back() == 0) {
        l_coeffs_.pop_back();
    }
    if (static_cast<int>(l_coeffs_.size()) != 2 * genus_ + 1) {
        throw InvalidFieldError("L-polynomial must have degree 2g = " + std::to_string(2 * genus_));
    }
    if (l_coeffs_[0] != 1) {
        throw InvalidFieldError("L-polynomial must satisfy P(0) = 1");
    }
    for (int i = 0; i <= genus_; ++i) {
        const BigInt& high = l_coeffs_[static_cast<std::size_t>(2 * genus_ - i)];
        const BigInt low = big_pow(q_, static_cast<unsigned long>(genus_ - i)) * l_coeffs_[static_cast<std::size_t>(i)];
        if (high != low) {
            throw InvalidFieldError("L-polynomial violates a_{2g-i} = q^{g-i} a_i at i = " + std::to_string(i));
        }
    }
    for (int n = 1; n <= sanity_bound; ++n) {
        bool integral = false;
        const BigInt b = places_of_degree_unchecked(*this, n, &integral);
        if (!integral || b < 0) {
            throw InvalidFieldError("L-polynomial yields an invalid count of degree-" + std::to_string(n) +
                                    " places");
        }
    }
    bool integral = false;
    if (places_of_degree_unchecked(*this, deg_inf_, &integral) < 1 || !integral) {
        throw InvalidFieldError("no place of degree deg_inf = " + std::to_string(deg_inf_));
    }
}

FunctionFieldData FunctionFieldData::rational(std::int64_t q, int deg_inf) {
    return FunctionFieldData(q, 0, {BigInt(1)}, deg_inf);
}

BigInt FunctionFieldData::power_sum(int m) const {
    // s_m = -m a_m - sum_{i=1}^{m-1} a_i s_{m-i}
    std::vector<BigInt> s(static_cast<std::size_t>(m) + 1);
    auto a = [&](int i) -> BigInt {
        return i < static_cast<int>(l_coeffs_.size()) ? l_coeffs_[static_cast<std::size_t>(i)] : BigInt(0);
    };
    for (int k = 1; k <= m; ++k) {
        BigInt acc = -k * a(k);
        for (int i = 1; i < k; ++i) {
            acc -= a(i) * s[static_cast<std::size_t>(k - i)];
        }
        s[static_cast<std::size_t>(k)] = acc;
    }
    return s[static_cast<std::size_t>(m)];
}

BigInt FunctionFieldData::rational_points(int m) const {
    return big_pow(q_, static_cast<unsigned long>(m)) + 1 - power_sum(m);
}

RationalFunctionQ zeta_K(const FunctionFieldData& field) {
    const BigRational q(static_cast<long>(field.q()));
    const PolyQ den = PolyQ{1, -1} * PolyQ{1, -q};
    return RationalFunctionQ(field.l_poly(), den);
}

BigRational zeta_special_value(const FunctionFieldData& field, int i) {
    if (i < 1) {
        throw ValidationError("special values are taken at negative integers -i, i >= 1");
    }
    const BigInt qi = big_pow(field.q(), static_cast<unsigned long>(i));
    const BigRational value = field.l_poly()(BigRational(qi));
    return value / (BigRational(1 - qi) * BigRational(1 - qi * field.q()));
}

BigInt class_number_A(const FunctionFieldData& field) {
    BigInt p1 = 0;
    for (const auto& c : field.l_coeffs()) {
        p1 += c;
    }
    if (p1 <= 0) {
        throw InvalidFieldError("P(1) = " + p1.get_str() + " is not positive");
    }
    return field.deg_inf() * p1;
}

BigInt places_of_degree(const FunctionFieldData& field, int n) {
    if (n < 1) {
        throw ValidationError("place degree must be positive");
    }
    bool integral = false;
    BigInt b = places_of_degree_unchecked(field, n, &integral);
    if (!integral || b < 0) {
        throw InvalidFieldError("invalid count of degree-" + std::to_string(n) + " places");
    }
    return b;
}

BigInt finite_places_of_degree(const FunctionFieldData& field, int n) {
    BigInt b = places_of_degree(field, n);
    if (n == field.deg_inf()) {
        b -= 1;
    }
    return b;
}

RationalFunctionQ zeta_A(const FunctionFieldData& field) {
    const PolyQ euler_inf = PolyQ::constant(1) - PolyQ::monomial(1, static_cast<std::size_t>(field.deg_inf()));
    return RationalFunctionQ(euler_inf) * zeta_K(field);
}

}  // namespace massform
