#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "massform/rational.hpp"

namespace massform {

/// Dense univariate polynomial over Q, lowest degree first. The zero
/// polynomial has no coefficients; otherwise the top coefficient is nonzero.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<BigRational> coeffs);
    PolyQ(std::initializer_list<BigRational> coeffs);

    static PolyQ constant(const BigRational& c);
    /// c * u^k
    static PolyQ monomial(const BigRational& c, std::size_t k);
    static PolyQ from_integers(const std::vector<BigInt>& coeffs);

    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of u^k (zero beyond the degree).
    BigRational coeff(std::size_t k) const;
    BigRational leading() const;

    BigRational operator()(const BigRational& x) const;

    PolyQ monic() const;
    /// p(c*u)
    PolyQ scale_variable(const BigRational& c) const;

    PolyQ operator-() const;
    friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const BigRational& c, const PolyQ& p);
    friend bool operator==(const PolyQ& a, const PolyQ& b) = default;

    std::string to_string(const std::string& var = "u") const;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

/// Quotient and remainder; throws DivisionByZeroError for a zero divisor.
std::pair<PolyQ, PolyQ> poly_divmod(const PolyQ& a, const PolyQ& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
PolyQ poly_gcd(const PolyQ& a, const PolyQ& b);

}  // namespace massform
