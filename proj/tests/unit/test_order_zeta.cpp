#include <gtest/gtest.h>

#include <random>

#include "massform/arith.hpp"
#include "massform/battery.hpp"
#include "massform/errors.hpp"
#include "massform/mass.hpp"
#include "massform/order_zeta.hpp"
#include "oracles.hpp"

using namespace massform;

namespace {

BigRational R(long n, long d = 1) { return BigRational(BigInt(n), BigInt(d)); }

RamificationData data(int r, std::vector<RamifiedPlace> places, FunctionFieldData field = FunctionFieldData::rational(2)) {
    return RamificationData{std::move(field), r, std::move(places)};
}

RamifiedPlace inf(std::int64_t b, std::int64_t d) { return RamifiedPlace::make(1, b, d, true); }
RamifiedPlace fin(std::int64_t b, std::int64_t d, int degree = 1) { return RamifiedPlace::make(degree, b, d); }

const RamificationData kRank2 = data(2, {inf(1, 2), fin(1, 2)});
const RamificationData kRank3 = data(3, {inf(-1, 3), fin(1, 3)});

// 1 / (1 - c u^step) through u^order.
TruncatedSeriesQ geometric(const BigInt& c, std::size_t step, std::size_t order) {
    std::vector<BigRational> coeffs(order + 1);
    BigInt power = 1;
    for (std::size_t k = 0; k <= order; k += step) {
        coeffs[k] = BigRational(power);
        power *= c;
    }
    return TruncatedSeriesQ(order, std::move(coeffs));
}

}  // namespace

TEST(OrderZetaAtZero, Examples) {
    EXPECT_EQ(order_zeta_at_zero(kRank2), R(-1, 3));
    EXPECT_EQ(order_zeta_at_zero(kRank3), R(-1, 7));
    EXPECT_EQ(order_zeta_at_zero(data(2, {inf(1, 2), fin(1, 2)}, elliptic_field_q2())), R(-44, 3));
}

TEST(OrderZetaAtZero, RankOneIsZetaA) {
    for (const auto& field : standard_fields()) {
        EXPECT_EQ(order_zeta_at_zero(data(1, {}, field)),
                  -BigRational(class_number_A(field), BigInt(static_cast<long>(field.q() - 1))));
    }
}

TEST(OrderZetaClosedForm, RejectsIndefiniteData) {
    EXPECT_THROW(order_zeta_closed_form(data(2, {fin(1, 2), fin(1, 2)})), NotDefiniteError);
    EXPECT_THROW(order_zeta_series(data(2, {fin(1, 2), fin(1, 2)}), 4), NotDefiniteError);
}

TEST(OrderZetaClosedForm, RecordsItsFactors) {
    const auto closed = order_zeta_closed_form(kRank3);
    EXPECT_FALSE(closed.assembled_from.empty());
    RationalFunctionQ product(PolyQ{BigRational(1)});
    for (const auto& factor : closed.assembled_from) {
        product = product * factor.value;
    }
    EXPECT_EQ(product, closed.ratfun);
}

TEST(OrderZetaAtZero, EqualsMinusMassOnRandomData) {
    std::mt19937_64 rng(5);
    const auto fields = standard_fields();
    for (int t = 0; t < 120; ++t) {
        const auto& field = fields[static_cast<std::size_t>(t) % fields.size()];
        const auto d = random_definite_data(rng, field, 1 + t % 6, 3, 3);
        EXPECT_EQ(order_zeta_at_zero(d), -mass(d).mass) << d.shorthand();
    }
}

TEST(LocalIdealCount, Examples) {
    for (long n : {2, 3, 4, 5}) {
        EXPECT_EQ(local_ideal_count(BigInt(n), 2, 1, 1), 1 + n);
        EXPECT_EQ(local_ideal_count(BigInt(n), 1, 3, 5), 1);
    }
    EXPECT_EQ(local_ideal_count(BigInt(2), 2, 1, 2), 7);
    EXPECT_EQ(local_ideal_count(BigInt(2), 3, 2, 0), 1);
}

TEST(LocalEulerSeries, IsProductOfGeometricSeries) {
    const std::size_t order = 8;
    for (std::int64_t q : {2, 3}) {
        for (int deg : {1, 2}) {
            for (int m = 1; m <= 3; ++m) {
                for (int d = 1; d <= 3; ++d) {
                    const BigInt norm = big_pow(q, static_cast<unsigned long>(deg));
                    TruncatedSeriesQ expected = TruncatedSeriesQ::one(order);
                    for (int i = 1; i <= m; ++i) {
                        const BigInt c = ipow(norm, static_cast<unsigned long>((i - 1) * d));
                        expected = expected * geometric(c, static_cast<std::size_t>(deg), order);
                    }
                    EXPECT_EQ(local_euler_series(q, deg, m, d, order), expected)
                        << "q=" << q << " deg=" << deg << " m=" << m << " d=" << d;
                }
            }
        }
    }
}

TEST(OrderZetaSeries, Examples) {
    const auto s = order_zeta_series(kRank2, 4);
    EXPECT_EQ(s[0], R(1));
    EXPECT_EQ(s[1], R(4));
    EXPECT_THROW(order_zeta_series(data(2, {fin(1, 2, 2), fin(1, 2, 2)}), 4), NegativeMultiplicityError);
}

TEST(OrderZetaSeries, MatchesClosedFormExpansion) {
    std::vector<RamificationData> cases = {kRank2, kRank3, data(1, {}),
                                           data(2, {inf(1, 2), fin(1, 2)}, elliptic_field_q2()),
                                           data(4, {inf(1, 4), fin(1, 2), fin(1, 4, 2)}),
                                           data(3, {inf(1, 3), fin(-1, 3, 2)}, FunctionFieldData::rational(3))};
    for (const auto& d : cases) {
        const std::size_t order = 9;
        EXPECT_EQ(order_zeta_series(d, order), series_from_ratfun(order_zeta_closed_form(d).ratfun, order))
            << d.shorthand();
        EXPECT_EQ(order_zeta_series(d, order).coeffs(),
                  oracle::taylor_by_interpolation(order_zeta_closed_form(d).ratfun, order))
            << d.shorthand();
    }
}

TEST(CoefficientMultiplicativity, Examples) {
    EXPECT_TRUE(coefficient_multiplicativity_check(kRank2, 8));
    EXPECT_TRUE(coefficient_multiplicativity_check(data(1, {}), 8));
    EXPECT_TRUE(coefficient_multiplicativity_check(kRank3, 6));
    EXPECT_TRUE(coefficient_multiplicativity_check(data(2, {inf(1, 2), fin(1, 2, 2)}, elliptic_field_q2()), 7));
    // F_5(t) has thousands of places of degree 8, exercising the binomial path.
    EXPECT_TRUE(coefficient_multiplicativity_check(data(2, {inf(1, 2), fin(1, 2)}, FunctionFieldData::rational(5)), 8));
}

TEST(OrderZetaSeries, CoefficientsAreNonNegativeIntegers) {
    std::mt19937_64 rng(12);
    const auto fields = standard_fields();
    for (int t = 0; t < 60; ++t) {
        const auto& field = fields[static_cast<std::size_t>(t) % fields.size()];
        const auto d = random_definite_data(rng, field, 1 + t % 4, 2, 2);
        const auto series = order_zeta_series(d, 6);
        for (const auto& c : series.coeffs()) {
            EXPECT_TRUE(c.is_integer()) << c.to_string();
            EXPECT_GE(c, R(0));
        }
    }
}

TEST(PartialZeta, ValueAtZeroExamples) {
    for (long a : {0, 1, 7, 100}) {
        PartialZetaData d;
        d.unit_order = 24;
        d.head = {{0, BigInt(a)}};
        d.C = 1 + a;
        EXPECT_EQ(partial_zeta_value(d), R(-1, 24));
    }
    PartialZetaData trivial;
    EXPECT_EQ(partial_zeta_value(trivial), R(-1));
}

TEST(PartialZeta, ValidationRejectsInconsistentHeads) {
    PartialZetaData d;
    d.head = {{0, BigInt(2)}};
    d.C = 2;
    EXPECT_THROW(partial_zeta_value(d), InvalidPartialDataError);
    d.C = 3;
    EXPECT_NO_THROW(validate_partial_zeta(d));
    d.unit_order = 0;
    EXPECT_THROW(validate_partial_zeta(d), InvalidPartialDataError);

    PartialZetaData off_class;
    off_class.deg_inf = 2;
    off_class.ell_i = 2;
    off_class.head = {{1, BigInt(1)}};
    off_class.C = 2;
    EXPECT_THROW(validate_partial_zeta(off_class), InvalidPartialDataError);
    off_class.head = {{0, BigInt(1)}};
    EXPECT_NO_THROW(validate_partial_zeta(off_class));
}

TEST(PartialZeta, TailRecursionHolds) {
    for (std::int64_t q : {2, 3}) {
        for (int r = 1; r <= 3; ++r) {
            for (int deg_inf = 1; deg_inf <= 2; ++deg_inf) {
                PartialZetaData d;
                d.q = q;
                d.rank = r;
                d.deg_inf = deg_inf;
                d.unit_order = q - 1;
                d.ell_i = 2 * deg_inf;
                d.head = {{0, BigInt(3)}, {deg_inf, BigInt(5)}, {2 * deg_inf, BigInt(1)}};
                d.C = 10;
                EXPECT_TRUE(partial_zeta_tail_check(d, 3));
                EXPECT_EQ(partial_zeta_value(d), BigRational(BigInt(-1), BigInt(static_cast<long>(q - 1))));
            }
        }
    }
}
