#include "massform/ratfun.hpp"

#include "massform/errors.hpp"

namespace massform {

namespace {

PolyQ exact_quotient(const PolyQ& a, const PolyQ& b) { return poly_divmod(a, b).first; }

}  // namespace

RationalFunctionQ::RationalFunctionQ(const PolyQ& num, const PolyQ& den) {
    if (den.is_zero()) {
        throw DivisionByZeroError("rational function with zero denominator");
    }
    if (num.is_zero()) {
        num_ = PolyQ{};
        den_ = PolyQ::constant(1);
        return;
    }
    const PolyQ g = poly_gcd(num, den);
    PolyQ n = exact_quotient(num, g);
    PolyQ d = exact_quotient(den, g);
    const BigRational lc = d.leading();
    num_ = (BigRational(1) / lc) * n;
    den_ = d.monic();
}

RationalFunctionQ::RationalFunctionQ(PolyQ num, PolyQ den, Normalized)
    : num_(std::move(num)), den_(std::move(den)) {}

RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    if (a.den_ == b.den_) {
        return RationalFunctionQ(a.num_ + b.num_, a.den_);
    }
    return RationalFunctionQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return a + RationalFunctionQ(-b.num_, b.den_, RationalFunctionQ::Normalized{});
}

RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    // Both inputs are reduced, so cross-cancellation suffices.
    const PolyQ g1 = poly_gcd(a.num_, b.den_);
    const PolyQ g2 = poly_gcd(b.num_, a.den_);
    PolyQ num = exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2);
    PolyQ den = exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1);
    const BigRational lc = den.leading();
    return RationalFunctionQ((BigRational(1) / lc) * num, den.monic(), RationalFunctionQ::Normalized{});
}

RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    if (b.is_zero()) {
        throw DivisionByZeroError("division by the zero rational function");
    }
    const BigRational lc = b.num_.leading();
    const RationalFunctionQ inv((BigRational(1) / lc) * b.den_, b.num_.monic(), RationalFunctionQ::Normalized{});
    return a * inv;
}

std::string RationalFunctionQ::to_string(const std::string& var) const {
    if (den_ == PolyQ::constant(1)) {
        return num_.to_string(var);
    }
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

BigRational ratfun_eval(const RationalFunctionQ& f, const BigRational& x) {
    const BigRational d = f.den()(x);
    if (d.is_zero()) {
        throw PoleError("rational function has a pole at " + x.to_string());
    }
    return f.num()(x) / d;
}

}  // namespace massform
