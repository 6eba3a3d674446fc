#include "massform/series.hpp"

#include <algorithm>
#include <string>

#include "massform/errors.hpp"

namespace massform {

namespace {

void require_same_order(const TruncatedSeriesQ& a, const TruncatedSeriesQ& b) {
    if (a.order() != b.order()) {
        throw OrderMismatchError("series orders differ: " + std::to_string(a.order()) + " vs " +
                                 std::to_string(b.order()));
    }
}

}  // namespace

TruncatedSeriesQ::TruncatedSeriesQ(std::size_t order) : order_(order), coeffs_(order + 1) {}

TruncatedSeriesQ::TruncatedSeriesQ(std::size_t order, std::vector<BigRational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != order_ + 1) {
        throw OrderMismatchError("series of order " + std::to_string(order_) + " needs " +
                                 std::to_string(order_ + 1) + " coefficients, got " +
                                 std::to_string(coeffs_.size()));
    }
}

TruncatedSeriesQ TruncatedSeriesQ::one(std::size_t order) {
    TruncatedSeriesQ s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeriesQ TruncatedSeriesQ::from_poly(const PolyQ& p, std::size_t order) {
    TruncatedSeriesQ s(order);
    for (std::size_t k = 0; k <= order; ++k) {
        s.coeffs_[k] = p.coeff(k);
    }
    return s;
}

TruncatedSeriesQ operator+(const TruncatedSeriesQ& a, const TruncatedSeriesQ& b) {
    require_same_order(a, b);
    TruncatedSeriesQ r(a.order_);
    for (std::size_t k = 0; k <= a.order_; ++k) {
        r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    }
    return r;
}

TruncatedSeriesQ operator*(const TruncatedSeriesQ& a, const TruncatedSeriesQ& b) {
    require_same_order(a, b);
    const std::size_t n = a.order_;
    std::vector<mpq_class> acc(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (!b.coeffs_[j].is_zero()) {
                acc[i + j] += a.coeffs_[i].raw() * b.coeffs_[j].raw();
            }
        }
    }
    TruncatedSeriesQ r(n);
    for (std::size_t k = 0; k <= n; ++k) {
        acc[k].canonicalize();
        r.coeffs_[k] = BigRational(acc[k].get_num(), acc[k].get_den());
    }
    return r;
}

TruncatedSeriesQ TruncatedSeriesQ::pow(const BigInt& exponent) const {
    if (exponent < 0) {
        throw ValidationError("negative series exponent");
    }
    TruncatedSeriesQ result = one(order_);
    TruncatedSeriesQ base = *this;
    BigInt e = exponent;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()) != 0) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

TruncatedSeriesQ series_from_ratfun(const RationalFunctionQ& f, std::size_t order) {
    const PolyQ& den = f.den();
    const BigRational d0 = den.coeff(0);
    if (d0.is_zero()) {
        throw NotExpandableError("denominator vanishes at u = 0: " + den.to_string());
    }
    // c_k = (n_k - sum_{j=1..k} d_j c_{k-j}) / d_0
    std::vector<BigRational> c(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        BigRational acc = f.num().coeff(k);
        const std::size_t top = std::min<std::size_t>(k, static_cast<std::size_t>(den.degree()));
        for (std::size_t j = 1; j <= top; ++j) {
            acc -= den.coeffs()[j] * c[k - j];
        }
        c[k] = acc / d0;
    }
    return TruncatedSeriesQ(order, std::move(c));
}

TruncatedSeriesQ series_mul(const TruncatedSeriesQ& a, const TruncatedSeriesQ& b) { return a * b; }

}  // namespace massform
