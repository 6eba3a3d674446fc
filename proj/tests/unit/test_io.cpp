#include <gtest/gtest.h>

#include <random>

#include "massform/battery.hpp"
#include "massform/errors.hpp"
#include "massform/io.hpp"

using namespace massform;

TEST(IoRational, RoundTrip) {
    for (const char* text : {"0", "7", "-2/3", "-5/123456789012345678901234567891"}) {
        const auto x = BigRational::parse(text);
        EXPECT_EQ(to_json(x), Json(text));
        EXPECT_EQ(rational_from_json(to_json(x)), x);
    }
    EXPECT_EQ(rational_from_json(Json(3)), BigRational(3));
    EXPECT_THROW(rational_from_json(Json(1.5)), ParseError);
    EXPECT_THROW(rational_from_json(Json("1/x")), ParseError);
}

TEST(IoField, RoundTripAndDefaults) {
    for (const auto& field : standard_fields()) {
        EXPECT_EQ(field_from_json(to_json(field)), field);
    }
    EXPECT_EQ(to_json(elliptic_field_q2()).dump(), R"({"q":2,"genus":1,"l_poly":[1,1,2],"deg_inf":1})");
    EXPECT_EQ(field_from_json(Json::parse(R"({"q":3,"genus":0})")), FunctionFieldData::rational(3));
    EXPECT_THROW(field_from_json(Json::parse(R"({"q":2,"genus":1})")), ParseError);
    EXPECT_THROW(field_from_json(Json::parse(R"({"genus":0})")), ParseError);
    EXPECT_THROW(field_from_json(Json::parse(R"({"q":6,"genus":0})")), InvalidFieldError);
}

TEST(IoRamification, ShorthandParsing) {
    const auto places = parse_ramification_shorthand("inf:-1/3, 1:1/3 ,2:1/2", 1);
    ASSERT_EQ(places.size(), 3U);
    EXPECT_EQ(places[0], RamifiedPlace::make(1, -1, 3, true));
    EXPECT_EQ(places[1], RamifiedPlace::make(1, 1, 3));
    EXPECT_EQ(places[2], RamifiedPlace::make(2, 1, 2));
    EXPECT_EQ(parse_ramification_shorthand("inf:1/2", 3)[0].degree, 3);
    EXPECT_TRUE(parse_ramification_shorthand("", 1).empty());
    EXPECT_THROW(parse_ramification_shorthand("1-1/2", 1), ParseError);
    EXPECT_THROW(parse_ramification_shorthand("1:1", 1), ParseError);
    EXPECT_THROW(parse_ramification_shorthand("1:2/4", 1), InvalidRamificationError);
    EXPECT_EQ(parse_integer_list("1, -1,2"), (std::vector<BigInt>{1, -1, 2}));
    EXPECT_THROW(parse_integer_list("1,x"), ParseError);
}

TEST(IoRamification, RoundTrip) {
    std::mt19937_64 rng(4);
    const auto fields = standard_fields();
    for (int t = 0; t < 50; ++t) {
        const auto& field = fields[static_cast<std::size_t>(t) % fields.size()];
        const auto data = random_definite_data(rng, field, 1 + t % 6, 3, 3);
        const auto back = ramification_from_json(to_json(data), field);
        EXPECT_EQ(back.rank, data.rank);
        EXPECT_EQ(back.places, data.places);
        EXPECT_EQ(parse_ramification_shorthand(data.shorthand(), field.deg_inf()), data.places);
    }
}

TEST(IoMassReport, RoundTrip) {
    std::mt19937_64 rng(6);
    const auto fields = standard_fields();
    for (int t = 0; t < 30; ++t) {
        const auto& field = fields[static_cast<std::size_t>(t) % fields.size()];
        const auto report = mass(random_definite_data(rng, field, 1 + t % 4, 2, 2));
        const auto back = mass_report_from_json(to_json(report));
        EXPECT_EQ(back.mass, report.mass);
        EXPECT_EQ(back.class_number_factor, report.class_number_factor);
        EXPECT_EQ(back.zeta_factors, report.zeta_factors);
        EXPECT_EQ(back.lambda_factors, report.lambda_factors);
        EXPECT_EQ(back.definite, report.definite);
        EXPECT_EQ(back.drinfeld_type, report.drinfeld_type);
        EXPECT_EQ(back.degenerate, report.degenerate);
    }
}

TEST(IoRatfunAndSeries, RoundTrip) {
    const auto f = zeta_A(elliptic_field_q2());
    EXPECT_EQ(ratfun_from_json(to_json(f)), f);
    const auto s = series_from_ratfun(f, 6);
    EXPECT_EQ(series_from_json(to_json(s)), s);
    EXPECT_EQ(to_json(s)["order"], 6);
    EXPECT_THROW(series_from_json(Json::parse(R"({"order":2,"coeffs":["1"]})")), OrderMismatchError);
}
