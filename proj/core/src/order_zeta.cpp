#include "massform/order_zeta.hpp"

#include <map>
#include <string>

#include "massform/arith.hpp"
#include "massform/errors.hpp"

namespace massform {

namespace {

void require_definite(const RamificationData& data) {
    require_valid(data);
    if (!is_definite(data)) {
        throw NotDefiniteError("zeta_R is modelled only for definite algebras (d_inf = r)");
    }
}

void enumerate_compositions(const BigInt& base, int parts_left, int position, int remaining, long exponent,
                            BigInt& total) {
    if (parts_left == 1) {
        // The last part takes everything that is left.
        total += ipow(base, static_cast<unsigned long>(exponent + static_cast<long>(remaining) * (position - 1)));
        return;
    }
    for (int li = 0; li <= remaining; ++li) {
        enumerate_compositions(base, parts_left - 1, position + 1, remaining - li,
                               exponent + static_cast<long>(li) * (position - 1), total);
    }
}

/// a * b where b is supported on multiples of `step`.
TruncatedSeriesQ mul_sparse(const TruncatedSeriesQ& a, const TruncatedSeriesQ& b, std::size_t step) {
    const std::size_t n = a.order();
    std::vector<BigRational> out(n + 1);
    for (std::size_t j = 0; j <= n; j += step) {
        if (b[j].is_zero()) {
            continue;
        }
        for (std::size_t i = 0; i + j <= n; ++i) {
            if (!a[i].is_zero()) {
                out[i + j] += a[i] * b[j];
            }
        }
    }
    return TruncatedSeriesQ(n, std::move(out));
}

constexpr long kPlaceByPlaceLimit = 256;

/// f^k = sum_j C(k, j) (f - 1)^j for f = 1 + O(u^step); only j <= order/step contribute.
TruncatedSeriesQ binomial_power(const TruncatedSeriesQ& f, const BigInt& k, std::size_t step) {
    const std::size_t n = f.order();
    std::vector<BigRational> g_coeffs = f.coeffs();
    g_coeffs[0] = BigRational(0);
    const TruncatedSeriesQ g(n, std::move(g_coeffs));
    TruncatedSeriesQ result = TruncatedSeriesQ::one(n);
    TruncatedSeriesQ g_power = TruncatedSeriesQ::one(n);
    BigInt binom = 1;
    for (std::size_t j = 1; j * step <= n; ++j) {
        g_power = mul_sparse(g_power, g, step);
        binom = binom * (k - static_cast<long>(j - 1)) / static_cast<long>(j);
        std::vector<BigRational> terms = g_power.coeffs();
        for (auto& t : terms) {
            t *= BigRational(binom);
        }
        result = result + TruncatedSeriesQ(n, std::move(terms));
    }
    return result;
}

std::map<int, long> ramified_finite_counts(const RamificationData& data) {
    std::map<int, long> counts;
    for (const auto& p : data.places) {
        if (!p.is_infinity) {
            ++counts[p.degree];
        }
    }
    return counts;
}

BigInt unramified_multiplicity(const RamificationData& data, const std::map<int, long>& ramified, int degree) {
    BigInt mult = finite_places_of_degree(data.field, degree);
    if (auto it = ramified.find(degree); it != ramified.end()) {
        mult -= it->second;
    }
    if (mult < 0) {
        throw NegativeMultiplicityError("more ramified places of degree " + std::to_string(degree) +
                                        " than the field has");
    }
    return mult;
}

PolyQ one_minus(const BigRational& c, std::size_t k) { return PolyQ::constant(1) - PolyQ::monomial(c, k); }

}  // namespace

OrderZetaClosedForm order_zeta_closed_form(const RamificationData& data) {
    require_definite(data);
    const std::int64_t q = data.field.q();
    const int r = data.rank;
    OrderZetaClosedForm out;

    out.assembled_from.push_back({"zeta_A(s)", zeta_A(data.field)});
    const PolyQ l_poly = data.field.l_poly();
    for (int i = 1; i <= r - 1; ++i) {
        const BigRational qi(big_pow(q, static_cast<unsigned long>(i)));
        const BigRational qi1(big_pow(q, static_cast<unsigned long>(i + 1)));
        RationalFunctionQ shifted(l_poly.scale_variable(qi), one_minus(qi, 1) * one_minus(qi1, 1));
        out.assembled_from.push_back({"zeta_K(s-" + std::to_string(i) + ")", std::move(shifted)});
    }
    for (const auto& place : data.places) {
        PolyQ correction = PolyQ::constant(1);
        const auto deg = static_cast<std::size_t>(place.degree);
        for (int i = 1; i <= r - 1; ++i) {
            if (i % place.inv_den != 0) {
                const BigRational coeff(big_pow(q, static_cast<unsigned long>(i) * deg));
                correction = correction * one_minus(coeff, deg);
            }
        }
        out.assembled_from.push_back({"correction[" + place.shorthand() + "]", RationalFunctionQ(correction)});
    }

    RationalFunctionQ product(PolyQ::constant(1));
    for (const auto& f : out.assembled_from) {
        product = product * f.value;
    }
    out.ratfun = std::move(product);

    if (out.ratfun.den()(BigRational(1)).is_zero()) {
        throw InternalConsistencyError("closed form of zeta_R has a pole at s = 0");
    }
    const BigRational pole(BigInt(1), big_pow(q, static_cast<unsigned long>(r)));
    if (!out.ratfun.den()(pole).is_zero()) {
        throw InternalConsistencyError("closed form of zeta_R lacks the pole at s = r");
    }
    return out;
}

BigRational order_zeta_at_zero(const RamificationData& data) {
    const OrderZetaClosedForm closed = order_zeta_closed_form(data);
    try {
        return ratfun_eval(closed.ratfun, BigRational(1));
    } catch (const PoleError& e) {
        throw InternalConsistencyError(std::string("zeta_R(0): ") + e.what());
    }
}

BigInt local_ideal_count(const BigInt& norm, int m, int d, int ell) {
    if (m < 1 || d < 1 || ell < 0) {
        throw ValidationError("local_ideal_count needs m, d >= 1 and ell >= 0");
    }
    const BigInt base = ipow(norm, static_cast<unsigned long>(d));
    BigInt total = 0;
    enumerate_compositions(base, m, 1, ell, 0, total);
    return total;
}

TruncatedSeriesQ local_euler_series(std::int64_t q, int place_degree, int m, int d, std::size_t order) {
    const BigInt norm = big_pow(q, static_cast<unsigned long>(place_degree));
    const auto step = static_cast<std::size_t>(place_degree);
    std::vector<BigRational> coeffs(order + 1);
    for (std::size_t k = 0, ell = 0; k <= order; k += step, ++ell) {
        coeffs[k] = BigRational(local_ideal_count(norm, m, d, static_cast<int>(ell)));
    }
    return TruncatedSeriesQ(order, std::move(coeffs));
}

TruncatedSeriesQ order_zeta_series(const RamificationData& data, std::size_t order) {
    require_definite(data);
    const std::int64_t q = data.field.q();
    const auto ramified = ramified_finite_counts(data);
    TruncatedSeriesQ result = TruncatedSeriesQ::one(order);
    for (std::size_t n = 1; n <= order; ++n) {
        const int degree = static_cast<int>(n);
        const BigInt mult = unramified_multiplicity(data, ramified, degree);
        if (mult == 0) {
            continue;
        }
        const TruncatedSeriesQ factor = local_euler_series(q, degree, data.rank, 1, order);
        result = result * factor.pow(mult);
    }
    for (const auto& place : data.places) {
        if (place.is_infinity || static_cast<std::size_t>(place.degree) > order) {
            continue;
        }
        result = result * local_euler_series(q, place.degree, data.local_matrix_size(place),
                                             static_cast<int>(place.inv_den), order);
    }
    return result;
}

bool coefficient_multiplicativity_check(const RamificationData& data, std::size_t order) {
    const TruncatedSeriesQ by_degree = order_zeta_series(data, order);
    const std::int64_t q = data.field.q();
    const auto ramified = ramified_finite_counts(data);

    TruncatedSeriesQ by_place = TruncatedSeriesQ::one(order);
    for (const auto& place : data.places) {
        if (place.is_infinity || static_cast<std::size_t>(place.degree) > order) {
            continue;
        }
        const auto factor = local_euler_series(q, place.degree, data.local_matrix_size(place),
                                               static_cast<int>(place.inv_den), order);
        by_place = mul_sparse(by_place, factor, static_cast<std::size_t>(place.degree));
    }
    for (std::size_t n = order; n >= 1; --n) {
        const int degree = static_cast<int>(n);
        const BigInt mult = unramified_multiplicity(data, ramified, degree);
        if (mult == 0) {
            continue;
        }
        const auto factor = local_euler_series(q, degree, data.rank, 1, order);
        if (mult <= kPlaceByPlaceLimit) {
            for (BigInt k = 0; k < mult; ++k) {
                by_place = mul_sparse(by_place, factor, n);
            }
        } else {
            by_place = mul_sparse(by_place, binomial_power(factor, mult, n), n);
        }
    }
    return by_place == by_degree;
}

void validate_partial_zeta(const PartialZetaData& data) {
    if (data.unit_order < 1) {
        throw InvalidPartialDataError("#R_i^x must be positive");
    }
    if (data.rank < 1 || data.deg_inf < 1 || data.ell_i < 0 || !factor_prime_power(data.q)) {
        throw InvalidPartialDataError("partial zeta data needs r, deg_inf >= 1, ell_i >= 0 and a prime power q");
    }
    BigInt sum = 0;
    for (const auto& [ell, a] : data.head) {
        if (ell < 0 || ell > data.ell_i) {
            throw InvalidPartialDataError("head index " + std::to_string(ell) + " outside [0, ell_i]");
        }
        if (a != 0 && mod_floor(ell - data.ell_i, data.deg_inf) != 0) {
            throw InvalidPartialDataError("a_i(" + std::to_string(ell) +
                                          ") must vanish: ell is not congruent to ell_i mod deg_inf");
        }
        if (a < 0) {
            throw InvalidPartialDataError("head coefficients count elements and cannot be negative");
        }
        sum += a;
    }
    if (data.C != 1 + sum) {
        throw InvalidPartialDataError("C = " + data.C.get_str() + " but 1 + sum a_i(ell) = " +
                                      BigInt(1 + sum).get_str());
    }
}

RationalFunctionQ partial_zeta_continuation(const PartialZetaData& data) {
    validate_partial_zeta(data);
    std::vector<BigRational> head(static_cast<std::size_t>(data.ell_i) + 1);
    for (const auto& [ell, a] : data.head) {
        head[static_cast<std::size_t>(ell)] += BigRational(a);
    }
    const BigInt norm_inf = big_pow(data.q, static_cast<unsigned long>(data.deg_inf));
    const BigInt nr = ipow(norm_inf, static_cast<unsigned long>(data.rank));
    const auto step = static_cast<std::size_t>(data.deg_inf);
    const BigRational scale = BigRational(data.C) * BigRational(BigInt(nr - 1), nr);
    // C u^{ell_i} ((N^r-1)/N^r) * N^r u^{deg_inf} / (1 - N^r u^{deg_inf})
    const RationalFunctionQ tail(PolyQ::monomial(scale * BigRational(nr), static_cast<std::size_t>(data.ell_i) + step),
                                 one_minus(BigRational(nr), step));
    return RationalFunctionQ(PolyQ(std::move(head))) + tail;
}

BigRational partial_zeta_value(const PartialZetaData& data) {
    const RationalFunctionQ cont = partial_zeta_continuation(data);
    return ratfun_eval(cont, BigRational(1)) / BigRational(data.unit_order);
}

bool partial_zeta_tail_check(const PartialZetaData& data, int steps) {
    const RationalFunctionQ cont = partial_zeta_continuation(data);
    const BigInt norm_inf = big_pow(data.q, static_cast<unsigned long>(data.deg_inf));
    const BigInt nr = ipow(norm_inf, static_cast<unsigned long>(data.rank));
    const auto top = static_cast<std::size_t>(data.ell_i + steps * data.deg_inf);
    const TruncatedSeriesQ expansion = series_from_ratfun(cont, top);
    for (int mu = 1; mu <= steps; ++mu) {
        const auto umu = static_cast<unsigned long>(mu);
        const BigInt formula = (nr - 1) * ipow(nr, umu - 1) * data.C;
        const BigInt shell = data.C * ipow(nr, umu) - data.C * ipow(nr, umu - 1);
        const auto k = static_cast<std::size_t>(data.ell_i + mu * data.deg_inf);
        if (formula != shell || expansion[k] != BigRational(formula)) {
            return false;
        }
    }
    return true;
}

}  // namespace massform
