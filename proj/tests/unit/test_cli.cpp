#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace massform;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;

    Json json() const { return Json::parse(out); }
};

Outcome run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    return lines;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(CliMass, Examples) {
    const auto r = run_cli({"mass", "--q", "2", "--genus", "0", "--deg-inf", "1", "--rank", "2", "--ram", "inf:1/2,1:1/2"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.out << r.err;
    EXPECT_EQ(r.json()["mass"], "1/3");
    EXPECT_EQ(r.json()["definite"], true);

    const auto g1 = run_cli({"mass", "--q", "2", "--genus", "1", "--l-poly", "1,1,2", "--rank", "2", "--ram", "inf:1/2,1:1/2"});
    EXPECT_EQ(g1.json()["mass"], "44/3");

    const auto csv = run_cli({"mass", "--q", "2", "--rank", "3", "--ram", "inf:-1/3,1:1/3", "--format", "csv"});
    EXPECT_EQ(split_lines(csv.out),
              (std::vector<std::string>{"q,genus,deg_inf,r,ramification,mass_num,mass_den", "2,0,1,3,\"inf:-1/3,1:1/3\",1,7"}));
}

TEST(CliMass, ErrorsMapToExitCodes) {
    const auto indefinite = run_cli({"mass", "--q", "2", "--rank", "2", "--ram", "1:1/2,1:1/2"});
    EXPECT_EQ(indefinite.code, cli::kExitValidation);
    EXPECT_EQ(indefinite.json()["error"]["type"], "NotDefiniteError");

    const auto bad_field = run_cli({"mass", "--q", "6", "--rank", "1"});
    EXPECT_EQ(bad_field.code, cli::kExitValidation);

    EXPECT_EQ(run_cli({"mass", "--rank", "2"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"mass", "--q", "2"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"nonsense"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"mass", "--q", "two", "--rank", "2"}).code, cli::kExitUsage);
}

TEST(CliDrinfeldMass, Examples) {
    const auto r = run_cli({"drinfeld-mass", "--q", "3", "--rank", "2", "--p-degree", "1"});
    ASSERT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.json()["mass"], "1/8");
    const auto none = run_cli({"drinfeld-mass", "--q", "2", "--deg-inf", "2", "--rank", "2", "--p-degree", "2"});
    EXPECT_EQ(none.code, cli::kExitValidation);
    EXPECT_EQ(none.json()["error"]["type"], "NoSuchPlaceError");
}

TEST(CliClassNumber, Examples) {
    const auto r = run_cli({"class-number", "--q", "2", "--genus", "1", "--l-poly", "1,1,2", "--deg-inf", "1"});
    ASSERT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.json(), Json::parse(R"({"h_A":"4"})"));
    const auto b = run_cli({"class-number", "--q", "2", "--rank", "2", "--ram", "1:1/2,1:1/2"});
    EXPECT_EQ(b.json()["h_B"], "1");
    EXPECT_EQ(b.json()["definite"], false);
}

TEST(CliZeta, Output) {
    const auto r = run_cli({"zeta", "--q", "2", "--genus", "1", "--l-poly", "1,1,2", "--max-i", "2", "--max-degree", "3"});
    ASSERT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.json()["zeta_A_at_0"], "-4");
    EXPECT_EQ(r.json()["zeta_K_at_minus_i"][0], "11/3");
    EXPECT_EQ(r.json()["places_of_degree"], Json::parse(R"(["4","2","0"])"));
}

TEST(CliOrderZeta, Output) {
    const auto r = run_cli({"order-zeta", "--q", "2", "--rank", "2", "--ram", "inf:1/2,1:1/2", "--series-order", "3"});
    ASSERT_EQ(r.code, cli::kExitOk);
    const auto j = r.json();
    EXPECT_EQ(j["at_zero"], "-1/3");
    EXPECT_EQ(j["mass"], "1/3");
    EXPECT_EQ(j["series"]["order"], 3);
    EXPECT_EQ(j["series"]["coeffs"][1], "4");
    EXPECT_TRUE(j["closed_form"].contains("num"));
    EXPECT_EQ(run_cli({"order-zeta", "--q", "2", "--rank", "2", "--ram", "inf:1/2,1:1/2", "--series-order", "-1"}).code,
              cli::kExitUsage);
}

TEST(CliOrderZeta, SeriesOrderDefaultsFromEnvironment) {
    ::setenv("MASSFORM_SERIES_ORDER", "5", 1);
    const auto r = run_cli({"order-zeta", "--q", "2", "--rank", "2", "--ram", "inf:1/2,1:1/2"});
    ::unsetenv("MASSFORM_SERIES_ORDER");
    ASSERT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.json()["series"]["order"], 5);
    EXPECT_EQ(cli::default_series_order(), 10U);
}

TEST(CliLocal, Subcommands) {
    const auto vol = run_cli({"local", "volumes", "--qv", "3", "--r", "2", "--d", "2"});
    ASSERT_EQ(vol.code, cli::kExitOk);
    EXPECT_EQ(vol.json()["vol_G"], "16/27");
    EXPECT_EQ(vol.json()["ratio"], "2");

    const auto lam = run_cli({"local", "lambda", "--qv", "3", "--r", "4", "--d", "2"});
    EXPECT_EQ(lam.json()["lambda"], "52");
    EXPECT_EQ(run_cli({"local", "lambda", "--qv", "3", "--r", "4", "--d", "3"}).code, cli::kExitValidation);

    const auto iw = run_cli({"local", "iw-index", "--qv", "2", "--d", "2", "--brute"});
    EXPECT_EQ(iw.json()["index"], "4");

    const auto model = run_cli({"local", "model-check", "--qv", "2", "--d", "3", "--b", "2", "--trials", "10"});
    EXPECT_EQ(model.code, cli::kExitOk) << model.out;
}

TEST(CliTable, DrinfeldRows) {
    const auto r = run_cli({"table", "--q-list", "2", "--ranks", "1,2", "--kind", "drinfeld", "--p-degrees", "1,2,3"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.out << r.err;
    const auto lines = split_lines(r.out);
    ASSERT_EQ(lines.size(), 5U);
    EXPECT_EQ(lines[0], "q,genus,deg_inf,r,ramification,mass_num,mass_den");
    EXPECT_EQ(lines[1], "2,0,1,1,\"\",1,1");
    EXPECT_EQ(lines[2], "2,0,1,2,\"inf:-1/2,1:1/2\",1,3");
    EXPECT_EQ(lines[3], "2,0,1,2,\"inf:-1/2,2:1/2\",1,1");
    EXPECT_EQ(lines[4], "2,0,1,2,\"inf:-1/2,3:1/2\",7,3");
}

TEST(CliTable, EmptyRangeIsHeaderOnly) {
    const auto r = run_cli({"table", "--q-list", "", "--ranks", "2", "--kind", "drinfeld", "--p-degrees", "1"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.out << r.err;
    EXPECT_EQ(r.out, "q,genus,deg_inf,r,ramification,mass_num,mass_den\n");
}

TEST(CliTable, IsDeterministic) {
    const std::vector<std::string> args = {"table", "--q-list", "3,2", "--ranks", "2,3", "--kind", "definite",
                                           "--max-degree", "2", "--max-places", "3", "--format", "json"};
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    ASSERT_EQ(a.code, cli::kExitOk);
    EXPECT_EQ(a.out, b.out);
    const auto rows = a.json()["rows"];
    ASSERT_FALSE(rows.empty());
    EXPECT_EQ(rows.front()["q"], 2);
    EXPECT_EQ(rows.back()["q"], 3);
}

TEST(CliFieldFile, InlineFlagsWinWithWarning) {
    const auto path = write_temp("massform_cli_field.json", R"({"q":2,"genus":1,"l_poly":[1,1,2],"deg_inf":1})");
    const auto from_file = run_cli({"class-number", "--field-file", path.string()});
    EXPECT_EQ(from_file.json()["h_A"], "4");
    EXPECT_TRUE(from_file.err.empty());

    const auto overridden = run_cli({"class-number", "--field-file", path.string(), "--genus", "0", "--l-poly", "1"});
    EXPECT_EQ(overridden.json()["h_A"], "1");
    EXPECT_NE(overridden.err.find("warning:"), std::string::npos);

    EXPECT_EQ(run_cli({"class-number", "--field-file", "/nonexistent/field.json"}).code, cli::kExitValidation);
    std::filesystem::remove(path);
}

TEST(CliVerify, SuitesPass) {
    const auto r = run_cli({"verify", "--suite", "theorem62", "--max-rank", "4", "--series-order", "10"});
    EXPECT_EQ(r.code, cli::kExitOk) << r.out;
    EXPECT_EQ(r.json()["passed"], true);
    for (const auto& name : {"zeta-a", "parity", "lambda", "local-model"}) {
        const auto s = run_cli({"verify", "--suite", name, "--max-rank", "3", "--trials", "50"});
        EXPECT_EQ(s.code, cli::kExitOk) << name << ": " << s.out;
    }
    EXPECT_EQ(run_cli({"verify", "--suite", "nope"}).code, cli::kExitValidation);
}
