#pragma once

#include <string>

#include "massform/poly.hpp"

namespace massform {

/// num/den over Q, kept fully cancelled with a monic denominator. Every
/// arithmetic operation re-normalizes, so equality is structural.
class RationalFunctionQ {
public:
    RationalFunctionQ() : num_(), den_(PolyQ::constant(1)) {}
    RationalFunctionQ(const PolyQ& poly)  // NOLINT(google-explicit-constructor)
        : num_(poly), den_(PolyQ::constant(1)) {}
    /// Throws DivisionByZeroError when `den` is zero.
    RationalFunctionQ(const PolyQ& num, const PolyQ& den);

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b);
    /// Throws DivisionByZeroError.
    friend RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b) = default;

    std::string to_string(const std::string& var = "u") const;

private:
    struct Normalized {};
    RationalFunctionQ(PolyQ num, PolyQ den, Normalized);

    PolyQ num_;
    PolyQ den_;
};

/// Exact value at x; throws PoleError when the cancelled denominator vanishes.
BigRational ratfun_eval(const RationalFunctionQ& f, const BigRational& x);

}  // namespace massform
