#include "massform/io.hpp"

#include <charconv>

#include "massform/errors.hpp"

namespace massform {

namespace {

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing key \"") + key + "\"");
    }
    return j.at(key);
}

template <typename T>
T integer_member(const Json& j, const char* key) {
    const Json& v = member(j, key);
    if (!v.is_number_integer()) {
        throw ParseError(std::string("\"") + key + "\" must be an integer");
    }
    return v.get<T>();
}

BigInt big_from_json(const Json& v) {
    if (v.is_number_integer()) {
        return BigInt(v.get<long>());
    }
    if (v.is_string()) {
        const BigRational x = BigRational::parse(v.get<std::string>());
        if (!x.is_integer()) {
            throw ParseError("expected an integer, got " + x.to_string());
        }
        return x.num();
    }
    throw ParseError("expected an integer");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

std::int64_t parse_int64(std::string_view s, const char* what) {
    std::int64_t value = 0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    if (!s.empty() && s.front() == '+') {
        ++begin;
    }
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || begin == end) {
        throw ParseError(std::string("bad ") + what + " \"" + std::string(s) + "\"");
    }
    return value;
}

/// "b/d" -> (b, d), no reduction.
std::pair<std::int64_t, std::int64_t> parse_invariant(std::string_view s) {
    const std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) {
        throw ParseError("invariant \"" + std::string(s) + "\" must be written b/d");
    }
    return {parse_int64(trim(s.substr(0, slash)), "invariant numerator"),
            parse_int64(trim(s.substr(slash + 1)), "invariant denominator")};
}

Json coeff_array(const std::vector<BigRational>& coeffs) {
    Json out = Json::array();
    for (const auto& c : coeffs) {
        out.push_back(to_json(c));
    }
    return out;
}

std::vector<BigRational> coeffs_from_json(const Json& j) {
    if (!j.is_array()) {
        throw ParseError("expected an array of rationals");
    }
    std::vector<BigRational> out;
    for (const auto& v : j) {
        out.push_back(rational_from_json(v));
    }
    return out;
}

}  // namespace

Json to_json(const BigRational& x) { return x.to_string(); }

BigRational rational_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return BigRational(j.get<long>());
    }
    if (!j.is_string()) {
        throw ParseError("rationals are encoded as \"num/den\" strings");
    }
    return BigRational::parse(j.get<std::string>());
}

Json to_json(const FunctionFieldData& field) {
    Json l_poly = Json::array();
    for (const auto& c : field.l_coeffs()) {
        if (c.fits_slong_p()) {
            l_poly.push_back(c.get_si());
        } else {
            l_poly.push_back(c.get_str());
        }
    }
    return Json{{"q", field.q()}, {"genus", field.genus()}, {"l_poly", std::move(l_poly)}, {"deg_inf", field.deg_inf()}};
}

FunctionFieldData field_from_json(const Json& j) {
    const auto q = integer_member<std::int64_t>(j, "q");
    const auto genus = integer_member<int>(j, "genus");
    const auto deg_inf = j.contains("deg_inf") ? integer_member<int>(j, "deg_inf") : 1;
    std::vector<BigInt> l_poly;
    if (j.contains("l_poly")) {
        const Json& arr = j.at("l_poly");
        if (!arr.is_array()) {
            throw ParseError("\"l_poly\" must be an array");
        }
        for (const auto& c : arr) {
            l_poly.push_back(big_from_json(c));
        }
    } else if (genus == 0) {
        l_poly = {BigInt(1)};
    } else {
        throw ParseError("\"l_poly\" is required for genus > 0");
    }
    return FunctionFieldData(q, genus, std::move(l_poly), deg_inf);
}

Json to_json(const RamifiedPlace& place) {
    return Json{{"deg", place.degree},
                {"inv", std::to_string(place.inv_num) + "/" + std::to_string(place.inv_den)},
                {"inf", place.is_infinity}};
}

RamifiedPlace place_from_json(const Json& j) {
    const auto degree = integer_member<int>(j, "deg");
    const Json& inv = member(j, "inv");
    if (!inv.is_string()) {
        throw ParseError("\"inv\" must be a \"b/d\" string");
    }
    const auto [b, d] = parse_invariant(inv.get<std::string>());
    bool is_inf = false;
    if (j.contains("inf")) {
        if (!j.at("inf").is_boolean()) {
            throw ParseError("\"inf\" must be a boolean");
        }
        is_inf = j.at("inf").get<bool>();
    }
    return RamifiedPlace::make(degree, b, d, is_inf);
}

Json to_json(const RamificationData& data) {
    Json places = Json::array();
    for (const auto& p : data.places) {
        places.push_back(to_json(p));
    }
    return Json{{"rank", data.rank}, {"places", std::move(places)}};
}

RamificationData ramification_from_json(const Json& j, const FunctionFieldData& field) {
    RamificationData data{field, integer_member<int>(j, "rank"), {}};
    const Json& places = member(j, "places");
    if (!places.is_array()) {
        throw ParseError("\"places\" must be an array");
    }
    for (const auto& p : places) {
        data.places.push_back(place_from_json(p));
    }
    return data;
}

std::vector<RamifiedPlace> parse_ramification_shorthand(std::string_view text, int deg_inf) {
    std::vector<RamifiedPlace> out;
    if (trim(text).empty()) {
        return out;
    }
    for (const std::string_view token : split(text, ',')) {
        const std::size_t colon = token.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError("ramification token \"" + std::string(token) + "\" must look like <deg|inf>:<b>/<d>");
        }
        const std::string_view head = trim(token.substr(0, colon));
        const auto [b, d] = parse_invariant(trim(token.substr(colon + 1)));
        if (head == "inf") {
            out.push_back(RamifiedPlace::make(deg_inf, b, d, true));
        } else {
            const std::int64_t degree = parse_int64(head, "place degree");
            if (degree < 1 || degree > 1'000'000) {
                throw ParseError("place degree " + std::string(head) + " out of range");
            }
            out.push_back(RamifiedPlace::make(static_cast<int>(degree), b, d, false));
        }
    }
    return out;
}

std::vector<BigInt> parse_integer_list(std::string_view text) {
    std::vector<BigInt> out;
    if (trim(text).empty()) {
        throw ParseError("empty integer list");
    }
    for (const std::string_view token : split(text, ',')) {
        const BigRational x = BigRational::parse(token);
        if (!x.is_integer()) {
            throw ParseError("\"" + std::string(token) + "\" is not an integer");
        }
        out.push_back(x.num());
    }
    return out;
}

Json to_json(const MassReport& report) {
    Json zetas = Json::array();
    for (const auto& z : report.zeta_factors) {
        zetas.push_back(to_json(z));
    }
    Json lambdas = Json::array();
    for (const auto& [place, lambda] : report.lambda_factors) {
        Json entry = to_json(place);
        entry["lambda"] = lambda.get_str();
        lambdas.push_back(std::move(entry));
    }
    return Json{{"mass", to_json(report.mass)},
                {"class_number_factor", to_json(report.class_number_factor)},
                {"zeta_factors", std::move(zetas)},
                {"lambda_factors", std::move(lambdas)},
                {"definite", report.definite},
                {"drinfeld_type", report.drinfeld_type},
                {"degenerate", report.degenerate}};
}

MassReport mass_report_from_json(const Json& j) {
    MassReport report;
    report.mass = rational_from_json(member(j, "mass"));
    report.class_number_factor = rational_from_json(member(j, "class_number_factor"));
    report.zeta_factors = coeffs_from_json(member(j, "zeta_factors"));
    const Json& lambdas = member(j, "lambda_factors");
    if (!lambdas.is_array()) {
        throw ParseError("\"lambda_factors\" must be an array");
    }
    for (const auto& entry : lambdas) {
        report.lambda_factors.emplace_back(place_from_json(entry), big_from_json(member(entry, "lambda")));
    }
    auto flag = [&](const char* key) {
        const Json& v = member(j, key);
        if (!v.is_boolean()) {
            throw ParseError(std::string("\"") + key + "\" must be a boolean");
        }
        return v.get<bool>();
    };
    report.definite = flag("definite");
    report.drinfeld_type = flag("drinfeld_type");
    report.degenerate = flag("degenerate");
    return report;
}

Json to_json(const RationalFunctionQ& f) {
    return Json{{"num", coeff_array(f.num().coeffs())}, {"den", coeff_array(f.den().coeffs())}};
}

RationalFunctionQ ratfun_from_json(const Json& j) {
    return RationalFunctionQ(PolyQ(coeffs_from_json(member(j, "num"))), PolyQ(coeffs_from_json(member(j, "den"))));
}

Json to_json(const TruncatedSeriesQ& s) {
    return Json{{"order", s.order()}, {"coeffs", coeff_array(s.coeffs())}};
}

TruncatedSeriesQ series_from_json(const Json& j) {
    const auto order = integer_member<std::size_t>(j, "order");
    return TruncatedSeriesQ(order, coeffs_from_json(member(j, "coeffs")));
}

Json to_json(const ModelCheckReport& r) {
    return Json{{"q_v", r.q_v},
                {"d", r.d},
                {"b", r.b},
                {"precision", r.precision},
                {"multiplicativity", {{"trials", r.multiplicativity_trials}, {"failures", r.multiplicativity_failures}}},
                {"pi_power_relation", r.pi_power_relation},
                {"presentation_relation", r.presentation_relation},
                {"optimal_embedding", {{"trials", r.embedding_trials}, {"failures", r.embedding_failures}}},
                {"non_integral_rejection", {{"trials", r.non_integral_trials}, {"failures", r.non_integral_failures}}},
                {"passed", r.passed()}};
}

}  // namespace massform
