#include <gtest/gtest.h>

#include <random>

#include "massform/arith.hpp"
#include "massform/battery.hpp"
#include "massform/errors.hpp"
#include "massform/mass.hpp"

using namespace massform;

namespace {

BigRational R(long n, long d = 1) { return BigRational(BigInt(n), BigInt(d)); }

RamificationData data(int r, std::vector<RamifiedPlace> places, FunctionFieldData field = FunctionFieldData::rational(2)) {
    return RamificationData{std::move(field), r, std::move(places)};
}

RamifiedPlace inf(std::int64_t b, std::int64_t d) { return RamifiedPlace::make(1, b, d, true); }
RamifiedPlace fin(std::int64_t b, std::int64_t d, int degree = 1) { return RamifiedPlace::make(degree, b, d); }

// (q^deg - 1) / ((q - 1)(q^2 - 1)) for genus 0, r = 2.
BigRational rank2_drinfeld_formula(std::int64_t q, int p_degree) {
    return BigRational(big_pow(q, static_cast<unsigned long>(p_degree)) - 1, BigInt(static_cast<long>((q - 1) * (q * q - 1))));
}

}  // namespace

TEST(Mass, Examples) {
    EXPECT_EQ(mass(data(2, {inf(1, 2), fin(1, 2)})).mass, R(1, 3));
    EXPECT_EQ(mass(data(3, {inf(-1, 3), fin(1, 3)})).mass, R(1, 7));
    EXPECT_EQ(mass(data(2, {inf(1, 2), fin(1, 2)}, elliptic_field_q2())).mass, R(44, 3));
}

TEST(Mass, ReportCarriesFactors) {
    const auto report = mass(data(3, {inf(-1, 3), fin(1, 3)}));
    EXPECT_EQ(report.class_number_factor, R(1));
    EXPECT_EQ(report.zeta_factors, (std::vector<BigRational>{R(1, 3), R(1, 21)}));
    ASSERT_EQ(report.lambda_factors.size(), 2U);
    EXPECT_EQ(report.lambda_factors[0].second, 3);
    EXPECT_EQ(report.lambda_factors[1].second, 3);
    EXPECT_TRUE(report.definite);
    EXPECT_TRUE(report.drinfeld_type);
    EXPECT_FALSE(report.degenerate);
    EXPECT_EQ(report.recompute(), report.mass);
}

TEST(Mass, RankOneIsClassNumberOverUnits) {
    for (const auto& field : standard_fields()) {
        const auto report = mass(data(1, {}, field));
        EXPECT_TRUE(report.degenerate);
        EXPECT_EQ(report.mass, BigRational(class_number_A(field), BigInt(static_cast<long>(field.q() - 1))));
    }
}

TEST(Mass, RejectsIndefiniteAndInvalidData) {
    EXPECT_THROW(mass(data(2, {fin(1, 2), fin(1, 2)})), NotDefiniteError);
    EXPECT_THROW(mass(data(2, {inf(1, 2)})), InvalidRamificationError);
}

TEST(DrinfeldMass, Examples) {
    const auto f2 = FunctionFieldData::rational(2);
    EXPECT_EQ(drinfeld_mass(f2, 2, 1), R(1, 3));
    EXPECT_EQ(drinfeld_mass(f2, 2, 2), R(1));
    EXPECT_EQ(drinfeld_mass(f2, 2, 3), R(7, 3));
    EXPECT_EQ(drinfeld_mass(FunctionFieldData::rational(3), 2, 1), R(1, 8));
    EXPECT_THROW(drinfeld_mass(FunctionFieldData::rational(2, 2), 2, 2), NoSuchPlaceError);
}

TEST(DrinfeldMass, GenusZeroRankTwoFormula) {
    for (std::int64_t q : {2, 3, 4, 5, 7}) {
        for (int deg = 1; deg <= 4; ++deg) {
            EXPECT_EQ(drinfeld_mass(FunctionFieldData::rational(q), 2, deg), rank2_drinfeld_formula(q, deg));
        }
    }
}

TEST(DrinfeldMass, AgreesWithGeneralMass) {
    for (const auto& field : standard_fields()) {
        for (int r = 2; r <= 4; ++r) {
            for (int deg = 1; deg <= 3; ++deg) {
                if (finite_places_of_degree(field, deg) == 0) {
                    EXPECT_THROW(drinfeld_mass(field, r, deg), NoSuchPlaceError);
                    continue;
                }
                EXPECT_EQ(drinfeld_mass(field, r, deg), mass(drinfeld_data(field, r, deg)).mass)
                    << "q=" << field.q() << " g=" << field.genus() << " r=" << r << " deg=" << deg;
            }
        }
    }
}

TEST(IndefiniteClassNumber, Examples) {
    EXPECT_EQ(indefinite_class_number(data(2, {fin(1, 2), fin(1, 2)})), 1);
    EXPECT_EQ(indefinite_class_number(data(2, {fin(1, 2), fin(1, 2)}, elliptic_field_q2())), 4);
    EXPECT_EQ(indefinite_class_number(data(4, {inf(1, 2), fin(1, 4), fin(1, 4, 2)})), 1);
    EXPECT_THROW(indefinite_class_number(data(2, {inf(1, 2), fin(1, 2)})), DefiniteError);
}

TEST(Mass, PositiveAndEqualToItsFactorsOnRandomData) {
    std::mt19937_64 rng(101);
    const auto fields = standard_fields();
    for (int t = 0; t < 300; ++t) {
        const auto& field = fields[static_cast<std::size_t>(t) % fields.size()];
        const auto d = random_definite_data(rng, field, 1 + t % 6, 3, 3);
        const auto report = mass(d);
        EXPECT_GT(report.mass, R(0)) << d.shorthand();
        EXPECT_EQ(report.recompute(), report.mass);
        EXPECT_EQ(report.zeta_factors.size(), static_cast<std::size_t>(d.rank - 1));
        EXPECT_EQ(report.lambda_factors.size(), d.places.size());
    }
}
