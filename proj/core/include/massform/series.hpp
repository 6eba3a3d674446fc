#pragma once

#include <cstddef>
#include <vector>

#include "massform/ratfun.hpp"

namespace massform {

/// Power series in u truncated after u^order; always holds order + 1
/// coefficients.
class TruncatedSeriesQ {
public:
    explicit TruncatedSeriesQ(std::size_t order);
    /// Throws OrderMismatchError unless coeffs.size() == order + 1.
    TruncatedSeriesQ(std::size_t order, std::vector<BigRational> coeffs);

    static TruncatedSeriesQ one(std::size_t order);
    /// Embeds a polynomial, dropping terms beyond `order`.
    static TruncatedSeriesQ from_poly(const PolyQ& p, std::size_t order);

    std::size_t order() const { return order_; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    const BigRational& operator[](std::size_t k) const { return coeffs_[k]; }

    /// Throws OrderMismatchError when the orders differ.
    friend TruncatedSeriesQ operator+(const TruncatedSeriesQ& a, const TruncatedSeriesQ& b);
    friend TruncatedSeriesQ operator*(const TruncatedSeriesQ& a, const TruncatedSeriesQ& b);
    friend bool operator==(const TruncatedSeriesQ& a, const TruncatedSeriesQ& b) = default;

    TruncatedSeriesQ pow(const BigInt& exponent) const;

private:
    std::size_t order_;
    std::vector<BigRational> coeffs_;
};

/// Taylor expansion of f at u = 0 through u^order by exact long division.
/// Throws NotExpandableError when den(0) = 0.
TruncatedSeriesQ series_from_ratfun(const RationalFunctionQ& f, std::size_t order);

/// Cauchy product truncated at the common order; throws OrderMismatchError.
TruncatedSeriesQ series_mul(const TruncatedSeriesQ& a, const TruncatedSeriesQ& b);

}  // namespace massform
