#include "massform/battery.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "massform/arith.hpp"
#include "massform/errors.hpp"

namespace massform {

namespace {

auto place_key(const RamifiedPlace& p) { return std::make_tuple(p.degree, p.inv_den, p.inv_num); }

std::vector<RamifiedPlace> finite_places_of_index(int d, int max_degree) {
    std::vector<RamifiedPlace> out;
    for (int degree = 1; degree <= max_degree; ++degree) {
        for (std::int64_t b = 1; b < d; ++b) {
            if (gcd64(b, d) == 1) {
                out.push_back(RamifiedPlace::make(degree, b, d));
            }
        }
    }
    return out;
}

}  // namespace

FunctionFieldData elliptic_field_q2() { return FunctionFieldData(2, 1, {BigInt(1), BigInt(1), BigInt(2)}, 1); }

std::vector<FunctionFieldData> standard_fields() {
    std::vector<FunctionFieldData> out;
    for (std::int64_t q : {2, 3, 4, 5}) {
        out.push_back(FunctionFieldData::rational(q));
    }
    out.push_back(elliptic_field_q2());
    return out;
}

std::vector<RamifiedPlace> finite_place_candidates(int r, int max_degree) {
    std::vector<RamifiedPlace> out;
    for (const std::int64_t d : divisors(r)) {
        if (d >= 2) {
            auto block = finite_places_of_index(static_cast<int>(d), max_degree);
            out.insert(out.end(), block.begin(), block.end());
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return place_key(a) < place_key(b); });
    return out;
}

std::vector<RamificationData> definite_configurations(const FunctionFieldData& field, int r, int max_degree,
                                                      std::size_t min_places, std::size_t max_places) {
    if (r < 2 || max_places > 3) {
        throw ValidationError("definite_configurations needs r >= 2 and at most 3 places");
    }
    const auto candidates = finite_place_candidates(r, max_degree);
    std::vector<RamificationData> out;
    auto consider = [&](RamificationData data) {
        if (data.places.size() >= min_places && data.places.size() <= max_places && validate(data).ok()) {
            out.push_back(std::move(data));
        }
    };
    for (std::int64_t b = 1; b < r; ++b) {
        if (gcd64(b, r) != 1) {
            continue;
        }
        const RamifiedPlace inf = RamifiedPlace::make(field.deg_inf(), b, r, true);
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            consider(RamificationData{field, r, {inf, candidates[i]}});
            for (std::size_t j = i; j < candidates.size(); ++j) {
                consider(RamificationData{field, r, {inf, candidates[i], candidates[j]}});
            }
        }
    }
    return out;
}

std::vector<RamificationData> theorem_battery() {
    std::vector<RamificationData> out;
    for (const auto& field : standard_fields()) {
        for (int r : {2, 3, 4, 6}) {
            auto block = definite_configurations(field, r, 3, 2, 3);
            out.insert(out.end(), block.begin(), block.end());
        }
    }
    return out;
}

RamificationData drinfeld_data(const FunctionFieldData& field, int r, int p_degree) {
    return RamificationData{field,
                            r,
                            {RamifiedPlace::make(field.deg_inf(), -1, r, true), RamifiedPlace::make(p_degree, 1, r)}};
}

std::optional<FunctionFieldData> random_weil_field(std::mt19937_64& rng, std::int64_t q, int genus) {
    const auto bound = static_cast<std::int64_t>(std::floor(2.0 * std::sqrt(static_cast<double>(q))));
    std::uniform_int_distribution<std::int64_t> pick(-bound, bound);
    PolyQ product = PolyQ::constant(1);
    for (int k = 0; k < genus; ++k) {
        product = product * PolyQ{BigRational(1), BigRational(pick(rng)), BigRational(q)};
    }
    std::vector<BigInt> coeffs;
    for (const auto& c : product.coeffs()) {
        coeffs.push_back(c.num());
    }
    for (int deg_inf = 1; deg_inf <= 4; ++deg_inf) {
        try {
            return FunctionFieldData(q, genus, coeffs, deg_inf);
        } catch (const InvalidFieldError&) {
        }
    }
    return std::nullopt;
}

RamificationData random_definite_data(std::mt19937_64& rng, const FunctionFieldData& field, int r, int max_degree,
                                      int max_finite) {
    RamificationData data{field, r, {}};
    if (r == 1) {
        return data;
    }
    std::vector<std::int64_t> units;
    for (std::int64_t b = 1; b < r; ++b) {
        if (gcd64(b, r) == 1) {
            units.push_back(b);
        }
    }
    const auto candidates = finite_place_candidates(r, max_degree);
    std::uniform_int_distribution<std::size_t> pick_unit(0, units.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_place(0, candidates.size() - 1);
    std::uniform_int_distribution<int> pick_count(0, std::max(0, max_finite - 1));
    std::uniform_int_distribution<int> pick_degree(1, max_degree);

    // Random finite places, then one closing place that makes the invariants sum to 0.
    for (int attempt = 0; attempt < 1000; ++attempt) {
        data.places = {RamifiedPlace::make(field.deg_inf(), units[pick_unit(rng)], r, true)};
        const int extra = pick_count(rng);
        for (int k = 0; k < extra; ++k) {
            data.places.push_back(candidates[pick_place(rng)]);
        }
        std::int64_t sum_over_r = 0;
        for (const auto& p : data.places) {
            sum_over_r += p.inv_num * (r / p.inv_den);
        }
        const std::int64_t closing = mod_floor(-sum_over_r, r);
        if (closing != 0) {
            const std::int64_t g = gcd64(closing, r);
            data.places.push_back(RamifiedPlace::make(pick_degree(rng), closing / g, r / g));
        }
        if (validate(data).ok()) {
            return data;
        }
    }
    throw InternalConsistencyError("no valid definite data found for r = " + std::to_string(r));
}

}  // namespace massform
