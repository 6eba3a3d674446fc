#include <cstdint>
#include <functional>
#include <map>
#include <random>

#include "cli.hpp"
#include "massform/arith.hpp"
#include "massform/battery.hpp"
#include "massform/errors.hpp"
#include "massform/local_volumes.hpp"

namespace massform::cli {

namespace {

constexpr std::size_t kKeptFailures = 10;

std::string describe(const RamificationData& data) {
    return "q=" + std::to_string(data.field.q()) + " g=" + std::to_string(data.field.genus()) +
           " r=" + std::to_string(data.rank) + " S=" + data.shorthand();
}

void theorem_equivalence(SuiteResult& res, const SuiteOptions&) {
    for (const auto& data : theorem_battery()) {
        ++res.checks;
        const BigRational at_zero = order_zeta_at_zero(data);
        const BigRational m = mass(data).mass;
        if (at_zero != -m) {
            res.fail(describe(data) + ": zeta_R(0) = " + at_zero.to_string() + ", mass = " + m.to_string());
        }
    }
}

void theorem62(SuiteResult& res, const SuiteOptions& opt) {
    for (const auto& field : standard_fields()) {
        for (int r = 2; r <= opt.max_rank; ++r) {
            for (const auto& data : definite_configurations(field, r, 2, 2, 3)) {
                ++res.checks;
                const auto by_places = order_zeta_series(data, opt.series_order);
                const auto closed = series_from_ratfun(order_zeta_closed_form(data).ratfun, opt.series_order);
                if (!(by_places == closed)) {
                    res.fail(describe(data) + ": Euler product and closed form differ");
                } else if (!coefficient_multiplicativity_check(data, opt.series_order)) {
                    res.fail(describe(data) + ": place-by-place product differs");
                }
            }
        }
    }
}

void drinfeld(SuiteResult& res, const SuiteOptions&) {
    for (std::int64_t q : {2, 3, 4}) {
        const auto field = FunctionFieldData::rational(q);
        for (int r : {2, 3, 4}) {
            for (int p : {1, 2, 3}) {
                ++res.checks;
                const BigRational direct = drinfeld_mass(field, r, p);
                const BigRational general = mass(drinfeld_data(field, r, p)).mass;
                if (direct != general) {
                    res.fail("q=" + std::to_string(q) + " r=" + std::to_string(r) + " deg p=" + std::to_string(p) +
                             ": " + direct.to_string() + " vs " + general.to_string());
                }
            }
        }
    }
}

void lambda(SuiteResult& res, const SuiteOptions&) {
    for (std::int64_t qv : {2, 3, 4, 5, 8, 9}) {
        for (int r = 1; r <= 8; ++r) {
            for (const std::int64_t d : divisors(r)) {
                ++res.checks;
                const RamifiedPlace place{1, 1, d, false};
                const BigInt closed = lambda_v(place, r, qv);
                const BigInt volumes = lambda_from_volumes(qv, r, static_cast<int>(d));
                if (closed != volumes) {
                    res.fail("q_v=" + std::to_string(qv) + " r=" + std::to_string(r) + " d=" + std::to_string(d) +
                             ": " + closed.get_str() + " vs " + volumes.get_str());
                }
            }
        }
    }
}

void local_oracles(SuiteResult& res, const SuiteOptions&) {
    for (const auto& [q, r] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
        ++res.checks;
        if (gl_count_bruteforce(q, r) != gl_order(q, r)) {
            res.fail("#GL_" + std::to_string(r) + "(F_" + std::to_string(q) + ") brute force disagrees");
        }
        ++res.checks;
        try {
            iwahori_index(q, r, true);
        } catch (const InternalConsistencyError& e) {
            res.fail(e.what());
        }
    }
    for (int ell = 0; ell <= 2; ++ell) {
        ++res.checks;
        if (sublattice_count_bruteforce(2, 2, ell) != local_ideal_count(2, 2, 1, ell)) {
            res.fail("sublattices of index 2^" + std::to_string(ell) + " disagree");
        }
    }
}

void local_model(SuiteResult& res, const SuiteOptions& opt) {
    for (std::int64_t qv : {2, 3}) {
        for (int d = 1; d <= 4; ++d) {
            for (std::int64_t b = 0; b < std::max(d, 1); ++b) {
                if (gcd64(b, d) != 1) {
                    continue;
                }
                ++res.checks;
                const auto report = run_model_checks(LocalModel::make(qv, d, b), 100, opt.seed);
                if (!report.passed()) {
                    res.fail(to_json(report).dump());
                }
            }
        }
    }
}

void parity(SuiteResult& res, const SuiteOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    const auto fields = standard_fields();
    std::uniform_int_distribution<std::size_t> pick_field(0, fields.size() - 1);
    std::uniform_int_distribution<int> pick_rank(1, 6);
    for (int t = 0; t < opt.random_trials; ++t) {
        const auto data = random_definite_data(rng, fields[pick_field(rng)], pick_rank(rng), 3, 3);
        ++res.checks;
        if (!parity_check(data)) {
            res.fail(describe(data) + ": parity");
            continue;
        }
        const BigRational m = mass(data).mass;
        if (m.sign() <= 0) {
            res.fail(describe(data) + ": mass " + m.to_string());
            continue;
        }
        const auto series = order_zeta_series(data, opt.series_order);
        for (const auto& c : series.coeffs()) {
            if (!c.is_integer() || c.sign() < 0) {
                res.fail(describe(data) + ": coefficient " + c.to_string());
                break;
            }
        }
    }
}

void zeta_a(SuiteResult& res, const SuiteOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> pick_q(0, 4);
    std::uniform_int_distribution<int> pick_genus(0, 3);
    const std::int64_t qs[] = {2, 3, 4, 5, 7};
    while (res.checks < 50) {
        const auto field = random_weil_field(rng, qs[pick_q(rng)], pick_genus(rng));
        if (!field) {
            continue;
        }
        ++res.checks;
        const BigRational at_zero = ratfun_eval(zeta_A(*field), BigRational(1));
        const BigRational expected = -BigRational(class_number_A(*field), BigInt(field->q() - 1));
        if (at_zero != expected) {
            res.fail("P=" + field->l_poly().to_string("T") + ": " + at_zero.to_string());
        }
    }
}

using SuiteFn = std::function<void(SuiteResult&, const SuiteOptions&)>;

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> suites = {
        {"theorem-equivalence", theorem_equivalence},
        {"theorem62", theorem62},
        {"drinfeld", drinfeld},
        {"lambda", lambda},
        {"local-oracles", local_oracles},
        {"local-model", local_model},
        {"parity", parity},
        {"zeta-a", zeta_a},
    };
    return suites;
}

}  // namespace

void SuiteResult::fail(std::string what) {
    ++failure_count;
    if (failures.size() < kKeptFailures) {
        failures.push_back(std::move(what));
    }
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
    const auto it = registry().find(name);
    if (it == registry().end()) {
        throw ValidationError("unknown suite \"" + name + "\"");
    }
    SuiteResult res;
    res.name = name;
    it->second(res, options);
    return res;
}

Json to_json(const SuiteResult& result) {
    return Json{{"suite", result.name},
                {"checks", result.checks},
                {"failure_count", result.failure_count},
                {"failures", result.failures},
                {"passed", result.passed()}};
}

}  // namespace massform::cli
