#include <gtest/gtest.h>

#include <random>

#include "massform/arith.hpp"
#include "massform/battery.hpp"
#include "massform/errors.hpp"
#include "massform/function_field.hpp"
#include "oracles.hpp"

using namespace massform;

namespace {

BigRational R(long n, long d = 1) { return BigRational(BigInt(n), BigInt(d)); }

PolyQ P(std::initializer_list<long> c) {
    std::vector<BigRational> v;
    for (long x : c) {
        v.emplace_back(x);
    }
    return PolyQ(std::move(v));
}

const FunctionFieldData kRational2 = FunctionFieldData::rational(2);
const FunctionFieldData kElliptic = elliptic_field_q2();

}  // namespace

TEST(FunctionFieldData, RejectsInvalidInput) {
    EXPECT_THROW(FunctionFieldData(6, 0, {BigInt(1)}, 1), InvalidFieldError);
    EXPECT_THROW(FunctionFieldData(2, -1, {BigInt(1)}, 1), InvalidFieldError);
    EXPECT_THROW(FunctionFieldData(2, 0, {BigInt(1)}, 0), InvalidFieldError);
    EXPECT_THROW(FunctionFieldData(2, 1, {BigInt(1), BigInt(1)}, 1), InvalidFieldError);
    EXPECT_THROW(FunctionFieldData(2, 1, {BigInt(2), BigInt(1), BigInt(4)}, 1), InvalidFieldError);
    // a_2 must equal q * a_0.
    EXPECT_THROW(FunctionFieldData(2, 1, {BigInt(1), BigInt(1), BigInt(3)}, 1), InvalidFieldError);
    // |a_1| > 2 sqrt(q) makes b_1 negative.
    EXPECT_THROW(FunctionFieldData(2, 1, {BigInt(1), BigInt(4), BigInt(2)}, 1), InvalidFieldError);
    EXPECT_NO_THROW(FunctionFieldData(2, 1, {BigInt(1), BigInt(-2), BigInt(2)}, 1));
}

TEST(ZetaK, Examples) {
    EXPECT_EQ(zeta_K(kRational2), RationalFunctionQ(P({1}), P({1, -1}) * P({1, -2})));
    EXPECT_EQ(zeta_K(kElliptic), RationalFunctionQ(P({1, 1, 2}), P({1, -1}) * P({1, -2})));
    EXPECT_EQ(zeta_K(FunctionFieldData::rational(3)), RationalFunctionQ(P({1}), P({1, -1}) * P({1, -3})));
}

TEST(ZetaSpecialValue, Examples) {
    EXPECT_EQ(zeta_special_value(kRational2, 1), R(1, 3));
    EXPECT_EQ(zeta_special_value(kRational2, 2), R(1, 21));
    EXPECT_EQ(zeta_special_value(kElliptic, 1), R(11, 3));
}

TEST(ZetaSpecialValue, AgreesWithClosedFormEvaluation) {
    for (const auto& field : standard_fields()) {
        for (int i = 1; i <= 5; ++i) {
            const BigRational qi(big_pow(field.q(), static_cast<unsigned long>(i)));
            EXPECT_EQ(zeta_special_value(field, i), ratfun_eval(zeta_K(field), qi));
        }
    }
}

TEST(ClassNumberA, Examples) {
    for (std::int64_t q : {2, 3, 4, 5, 7}) {
        EXPECT_EQ(class_number_A(FunctionFieldData::rational(q)), 1);
    }
    EXPECT_EQ(class_number_A(kElliptic), 4);
    EXPECT_EQ(class_number_A(FunctionFieldData::rational(2, 3)), 3);
}

TEST(PlacesOfDegree, Examples) {
    EXPECT_EQ(places_of_degree(kRational2, 1), 3);
    EXPECT_EQ(places_of_degree(kRational2, 2), 1);
    EXPECT_EQ(places_of_degree(kElliptic, 1), 4);
    EXPECT_EQ(finite_places_of_degree(kRational2, 1), 2);
    EXPECT_EQ(finite_places_of_degree(FunctionFieldData::rational(2, 2), 2), 0);
}

TEST(PlacesOfDegree, RationalFieldMatchesIrreducibleEnumeration) {
    for (std::int64_t q : {2, 3, 4, 5}) {
        const auto field = FunctionFieldData::rational(q);
        for (int n = 1; n <= 6; ++n) {
            const auto irreducibles = static_cast<long>(enumerate_monic_irreducibles(q, n).size());
            EXPECT_EQ(places_of_degree(field, n), irreducibles + (n == 1 ? 1 : 0)) << "q=" << q << " n=" << n;
        }
    }
}

TEST(PlacesOfDegree, EllipticFieldMatchesPointCounts) {
    // y^2 + xy = x^3 + 1 over F_2 has 4 rational points: P(T) = 1 + T + 2T^2.
    for (int m = 1; m <= 6; ++m) {
        const auto f = FqField::make(2, m);
        EXPECT_EQ(kElliptic.rational_points(m), oracle::count_points_y2_xy_x3_1(*f)) << "m=" << m;
    }
}

TEST(PlacesOfDegree, MobiusInversionIsConsistent) {
    std::mt19937_64 rng(2);
    int checked = 0;
    while (checked < 30) {
        std::uniform_int_distribution<int> pick_q(0, 3);
        const std::int64_t qs[] = {2, 3, 4, 5};
        const auto field = random_weil_field(rng, qs[pick_q(rng)], 1 + checked % 3);
        if (!field) {
            continue;
        }
        ++checked;
        for (int n = 1; n <= 8; ++n) {
            BigInt total = 0;
            for (const auto d : divisors(n)) {
                total += BigInt(static_cast<long>(d)) * places_of_degree(*field, static_cast<int>(d));
            }
            EXPECT_EQ(total, field->rational_points(n));
        }
    }
}

TEST(ZetaA, ValueAtZero) {
    EXPECT_EQ(ratfun_eval(zeta_A(kRational2), BigRational(1)), R(-1));
    EXPECT_EQ(ratfun_eval(zeta_A(kElliptic), BigRational(1)), R(-4));
    EXPECT_EQ(ratfun_eval(zeta_A(FunctionFieldData::rational(3)), BigRational(1)), R(-1, 2));
    const auto deg3 = FunctionFieldData::rational(2, 3);
    EXPECT_EQ(ratfun_eval(zeta_A(deg3), BigRational(1)), R(-3));
}

TEST(FunctionFieldData, SymmetryHoldsForAcceptedFields) {
    std::mt19937_64 rng(9);
    const std::int64_t qs[] = {2, 3, 4, 5, 7};
    for (int t = 0; t < 60; ++t) {
        const auto field = random_weil_field(rng, qs[t % 5], t % 4);
        if (!field) {
            continue;
        }
        const auto& a = field->l_coeffs();
        const int g = field->genus();
        for (int i = 0; i <= g; ++i) {
            EXPECT_EQ(a[static_cast<std::size_t>(2 * g - i)],
                      big_pow(field->q(), static_cast<unsigned long>(g - i)) * a[static_cast<std::size_t>(i)]);
        }
    }
}
