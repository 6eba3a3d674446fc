#include "massform/fq_series.hpp"

#include <algorithm>
#include <string>

#include "massform/errors.hpp"

namespace massform {

namespace {

void require_compatible(const TruncatedSeriesFq& a, const TruncatedSeriesFq& b) {
    if (a.field_ptr() != b.field_ptr()) {
        throw ValidationError("series over different coefficient fields");
    }
    if (a.precision() != b.precision()) {
        throw PrecisionMismatchError("series precisions differ: " + std::to_string(a.precision()) + " vs " +
                                     std::to_string(b.precision()));
    }
}

}  // namespace

TruncatedSeriesFq::TruncatedSeriesFq(std::shared_ptr<const FqField> field, std::size_t precision)
    : field_(std::move(field)), coeffs_(precision, 0) {
    if (precision == 0) {
        throw PrecisionExhaustedError("series precision must be at least 1");
    }
}

TruncatedSeriesFq::TruncatedSeriesFq(std::shared_ptr<const FqField> field, std::size_t precision,
                                     std::vector<std::uint32_t> coeffs)
    : TruncatedSeriesFq(std::move(field), precision) {
    if (coeffs.size() > precision) {
        throw PrecisionMismatchError("more coefficients than the precision allows");
    }
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        coeffs_[k] = field_->element(coeffs[k]).code;
    }
}

TruncatedSeriesFq TruncatedSeriesFq::constant(std::shared_ptr<const FqField> field, std::size_t precision,
                                              FqElem c) {
    if (c.field != field.get()) {
        throw ValidationError("constant from a different field");
    }
    TruncatedSeriesFq s(std::move(field), precision);
    s.coeffs_[0] = c.code;
    return s;
}

TruncatedSeriesFq TruncatedSeriesFq::pi_power(std::shared_ptr<const FqField> field, std::size_t precision,
                                              std::size_t k) {
    TruncatedSeriesFq s(std::move(field), precision);
    if (k < precision) {
        s.coeffs_[k] = 1;
    }
    return s;
}

bool TruncatedSeriesFq::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

std::size_t TruncatedSeriesFq::valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != 0) {
            return k;
        }
    }
    return coeffs_.size();
}

TruncatedSeriesFq TruncatedSeriesFq::operator-() const {
    TruncatedSeriesFq r = *this;
    for (auto& c : r.coeffs_) {
        c = field_->neg(c);
    }
    return r;
}

TruncatedSeriesFq operator+(const TruncatedSeriesFq& a, const TruncatedSeriesFq& b) {
    require_compatible(a, b);
    TruncatedSeriesFq r = a;
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) {
        r.coeffs_[k] = a.field_->add(a.coeffs_[k], b.coeffs_[k]);
    }
    return r;
}

TruncatedSeriesFq operator-(const TruncatedSeriesFq& a, const TruncatedSeriesFq& b) {
    require_compatible(a, b);
    TruncatedSeriesFq r = a;
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) {
        r.coeffs_[k] = a.field_->sub(a.coeffs_[k], b.coeffs_[k]);
    }
    return r;
}

TruncatedSeriesFq operator*(const TruncatedSeriesFq& a, const TruncatedSeriesFq& b) {
    require_compatible(a, b);
    const FqField& f = *a.field_;
    const std::size_t n = a.coeffs_.size();
    TruncatedSeriesFq r(a.field_, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            r.coeffs_[i + j] = f.add(r.coeffs_[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    return r;
}

bool operator==(const TruncatedSeriesFq& a, const TruncatedSeriesFq& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

TruncatedSeriesFq TruncatedSeriesFq::shifted(std::size_t k) const {
    TruncatedSeriesFq r(field_, coeffs_.size());
    for (std::size_t i = 0; i + k < coeffs_.size(); ++i) {
        r.coeffs_[i + k] = coeffs_[i];
    }
    return r;
}

TruncatedSeriesFq TruncatedSeriesFq::frobenius(std::int64_t base_q, std::uint64_t times) const {
    TruncatedSeriesFq r = *this;
    for (std::uint64_t t = 0; t < times; ++t) {
        for (auto& c : r.coeffs_) {
            c = field_->pow(c, static_cast<std::uint64_t>(base_q));
        }
    }
    return r;
}

TruncatedSeriesFq series_invert(const TruncatedSeriesFq& a) {
    if (a.coeff(0).is_zero()) {
        throw NotAUnitError("series with zero constant term is not invertible");
    }
    const FqField& f = a.field();
    const std::size_t n = a.precision();
    const std::uint32_t a0_inv = f.inv(a.codes()[0]);
    std::vector<std::uint32_t> b(n, 0);
    b[0] = a0_inv;
    for (std::size_t k = 1; k < n; ++k) {
        std::uint32_t acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            acc = f.add(acc, f.mul(a.codes()[j], b[k - j]));
        }
        b[k] = f.neg(f.mul(a0_inv, acc));
    }
    return TruncatedSeriesFq(a.field_ptr(), n, std::move(b));
}

}  // namespace massform
