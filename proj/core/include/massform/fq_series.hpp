#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "massform/finite_field.hpp"

namespace massform {

/// Element of F_q[[pi]] / (pi^N): coefficients of pi^0 ... pi^{N-1}.
/// Binary operations require identical field and precision.
class TruncatedSeriesFq {
public:
    TruncatedSeriesFq(std::shared_ptr<const FqField> field, std::size_t precision);
    TruncatedSeriesFq(std::shared_ptr<const FqField> field, std::size_t precision,
                      std::vector<std::uint32_t> coeffs);

    static TruncatedSeriesFq constant(std::shared_ptr<const FqField> field, std::size_t precision, FqElem c);
    /// pi^k; zero when k >= precision.
    static TruncatedSeriesFq pi_power(std::shared_ptr<const FqField> field, std::size_t precision, std::size_t k);

    const std::shared_ptr<const FqField>& field_ptr() const { return field_; }
    const FqField& field() const { return *field_; }
    std::size_t precision() const { return coeffs_.size(); }
    FqElem coeff(std::size_t k) const { return {field_.get(), coeffs_[k]}; }
    const std::vector<std::uint32_t>& codes() const { return coeffs_; }

    bool is_zero() const;
    /// pi-adic valuation; precision() for the zero series.
    std::size_t valuation() const;

    TruncatedSeriesFq operator-() const;
    friend TruncatedSeriesFq operator+(const TruncatedSeriesFq& a, const TruncatedSeriesFq& b);
    friend TruncatedSeriesFq operator-(const TruncatedSeriesFq& a, const TruncatedSeriesFq& b);
    friend TruncatedSeriesFq operator*(const TruncatedSeriesFq& a, const TruncatedSeriesFq& b);
    friend bool operator==(const TruncatedSeriesFq& a, const TruncatedSeriesFq& b);

    /// Multiplication by pi^k (digits beyond the precision are dropped).
    TruncatedSeriesFq shifted(std::size_t k) const;
    /// Coefficientwise x -> x^{base_q}, iterated `times` times.
    TruncatedSeriesFq frobenius(std::int64_t base_q, std::uint64_t times = 1) const;

private:
    std::shared_ptr<const FqField> field_;
    std::vector<std::uint32_t> coeffs_;
};

/// b with a*b = 1 + O(pi^N). Throws NotAUnitError when a(0) = 0.
TruncatedSeriesFq series_invert(const TruncatedSeriesFq& a);

}  // namespace massform
