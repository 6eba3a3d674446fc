#include <gtest/gtest.h>

#include <random>

#include "massform/arith.hpp"
#include "massform/battery.hpp"
#include "massform/errors.hpp"
#include "massform/ramification.hpp"

using namespace massform;

namespace {

RamifiedPlace inf(std::int64_t b, std::int64_t d, int degree = 1) { return RamifiedPlace::make(degree, b, d, true); }
RamifiedPlace fin(std::int64_t b, std::int64_t d, int degree = 1) { return RamifiedPlace::make(degree, b, d); }

RamificationData data(int r, std::vector<RamifiedPlace> places, FunctionFieldData field = FunctionFieldData::rational(2)) {
    return RamificationData{std::move(field), r, std::move(places)};
}

}  // namespace

TEST(RamifiedPlace, MakeRejectsTrivialOrNonCoprimeInvariants) {
    EXPECT_THROW(RamifiedPlace::make(1, 1, 1), InvalidRamificationError);
    EXPECT_THROW(RamifiedPlace::make(1, 2, 4), InvalidRamificationError);
    EXPECT_THROW(RamifiedPlace::make(0, 1, 2), InvalidRamificationError);
    EXPECT_EQ(RamifiedPlace::make(1, -1, 3).reduced_num(), 2);
    EXPECT_EQ(inf(-1, 3).shorthand(), "inf:-1/3");
    EXPECT_EQ(fin(1, 2, 2).shorthand(), "2:1/2");
}

TEST(Validate, Examples) {
    EXPECT_TRUE(validate(data(2, {inf(1, 2), fin(1, 2)})).ok());
    EXPECT_FALSE(validate(data(2, {inf(1, 2)})).ok());
    EXPECT_TRUE(validate(data(3, {inf(-1, 3), fin(1, 3)})).ok());
}

TEST(Validate, ReportsEachStructuralFailure) {
    // d_v must divide r.
    EXPECT_FALSE(validate(data(4, {inf(-1, 3), fin(1, 3)})).ok());
    // lcm of d_v must equal r.
    EXPECT_FALSE(validate(data(4, {inf(1, 2), fin(1, 2)})).ok());
    // Two infinity entries.
    EXPECT_FALSE(validate(data(2, {inf(1, 2), inf(1, 2)})).ok());
    // Infinity with the wrong degree.
    EXPECT_FALSE(validate(data(2, {inf(1, 2, 2), fin(1, 2)})).ok());
    // F_2(t) has a single finite place of degree 2.
    const auto shortage = validate(data(2, {fin(1, 2, 2), fin(1, 2, 2)}));
    EXPECT_FALSE(shortage.ok());
    EXPECT_TRUE(shortage.place_shortage);
    EXPECT_THROW(require_valid(data(2, {fin(1, 2, 2), fin(1, 2, 2)})), NegativeMultiplicityError);
    EXPECT_THROW(require_valid(data(2, {inf(1, 2)})), InvalidRamificationError);
    EXPECT_TRUE(validate(data(1, {})).ok());
}

TEST(IsDefinite, Examples) {
    EXPECT_TRUE(is_definite(data(2, {inf(1, 2), fin(1, 2)})));
    EXPECT_FALSE(is_definite(data(4, {inf(1, 2), fin(1, 4), fin(1, 4, 2)})));
    EXPECT_FALSE(is_definite(data(2, {fin(1, 2), fin(1, 2)})));
    EXPECT_TRUE(is_definite(data(1, {})));
}

TEST(IsDrinfeldType, Examples) {
    EXPECT_TRUE(is_drinfeld_type(data(3, {inf(-1, 3), fin(1, 3)})));
    EXPECT_TRUE(is_drinfeld_type(data(2, {inf(1, 2), fin(1, 2)})));
    EXPECT_FALSE(is_drinfeld_type(data(3, {inf(1, 3), fin(-1, 3)})));
    EXPECT_FALSE(is_drinfeld_type(data(2, {inf(1, 2), fin(1, 2), fin(1, 2, 2), fin(1, 2, 3)})));
}

TEST(LambdaV, Examples) {
    EXPECT_EQ(lambda_v(fin(1, 2), 2, 2), 1);
    EXPECT_EQ(lambda_v(fin(1, 3), 3, 2), 3);
    EXPECT_EQ(lambda_v(fin(1, 2), 4, 3), 52);
    // N(v) = q^{deg v}: degree 2 over F_2 behaves like N = 4.
    EXPECT_EQ(lambda_v(fin(1, 3, 2), 3, 2), lambda_v(fin(1, 3), 3, 4));
}

TEST(LambdaV, MatchesProductDefinition) {
    for (std::int64_t q : {2, 3, 5}) {
        for (int r = 1; r <= 6; ++r) {
            for (const auto d : divisors(r)) {
                if (d < 2) {
                    continue;
                }
                BigInt expected = 1;
                for (int i = 1; i < r; ++i) {
                    if (i % d != 0) {
                        expected *= big_pow(q, static_cast<unsigned long>(i)) - 1;
                    }
                }
                EXPECT_EQ(lambda_v(fin(1, d), r, q), expected);
            }
        }
    }
}

TEST(ParityCheck, Examples) {
    EXPECT_TRUE(parity_check(data(2, {inf(1, 2), fin(1, 2)})));
    EXPECT_TRUE(parity_check(data(3, {inf(-1, 3), fin(1, 3)})));
    EXPECT_TRUE(parity_check(data(1, {})));
}

TEST(ParityCheck, HoldsForRandomValidData) {
    std::mt19937_64 rng(77);
    const auto fields = standard_fields();
    for (int t = 0; t < 300; ++t) {
        const auto& field = fields[static_cast<std::size_t>(t) % fields.size()];
        const int r = 1 + t % 6;
        const auto d = random_definite_data(rng, field, r, 3, 3);
        ASSERT_TRUE(validate(d).ok()) << d.shorthand();
        EXPECT_TRUE(is_definite(d));
        EXPECT_TRUE(parity_check(d)) << "r=" << r << " S=" << d.shorthand();
    }
}
