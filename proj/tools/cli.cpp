#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "massform/battery.hpp"
#include "massform/errors.hpp"
#include "massform/local_volumes.hpp"

namespace massform::cli {

namespace {

constexpr std::size_t kFallbackSeriesOrder = 10;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FieldFlags {
    std::optional<std::int64_t> q;
    std::optional<int> genus;
    std::optional<std::string> l_poly;
    std::optional<int> deg_inf;
    std::optional<std::string> field_file;
};

struct RamFlags {
    std::optional<int> rank;
    std::string ram;
};

enum class Format { json, csv };

struct Common {
    std::string format = "json";
    Format fmt() const { return format == "csv" ? Format::csv : Format::json; }
};

void add_field_flags(CLI::App* sub, FieldFlags& f) {
    sub->add_option("--q", f.q, "size of the constant field");
    sub->add_option("--genus", f.genus, "genus of K");
    sub->add_option("--l-poly", f.l_poly, "comma-separated L-polynomial coefficients, constant term first");
    sub->add_option("--deg-inf", f.deg_inf, "degree of the place at infinity");
    sub->add_option("--field-file", f.field_file, "JSON field spec");
}

void add_ram_flags(CLI::App* sub, RamFlags& r) {
    sub->add_option("--rank", r.rank, "degree r of the division algebra");
    sub->add_option("--ram", r.ram, "ramification shorthand, e.g. inf:1/2,1:1/2");
}

void add_format(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

template <typename T>
void merge_key(Json& spec, const char* key, const std::optional<T>& inline_value, const char* flag, bool from_file,
               std::ostream& err) {
    if (!inline_value) {
        return;
    }
    Json value = *inline_value;
    if (from_file && spec.contains(key) && spec.at(key) != value) {
        err << "warning: " << flag << " overrides the field file value " << spec.at(key).dump() << "\n";
    }
    spec[key] = std::move(value);
}

FunctionFieldData resolve_field(const FieldFlags& f, std::ostream& err) {
    Json spec = Json::object();
    const bool from_file = f.field_file.has_value();
    if (from_file) {
        spec = read_json_file(*f.field_file);
        if (!spec.is_object()) {
            throw ParseError("field file must hold a JSON object");
        }
    } else if (!f.q) {
        throw UsageError("a field is required: pass --q (with --genus/--l-poly/--deg-inf) or --field-file");
    }
    merge_key(spec, "q", f.q, "--q", from_file, err);
    merge_key(spec, "genus", f.genus, "--genus", from_file, err);
    merge_key(spec, "deg_inf", f.deg_inf, "--deg-inf", from_file, err);
    if (f.l_poly) {
        Json coeffs = Json::array();
        for (const auto& c : parse_integer_list(*f.l_poly)) {
            if (c.fits_slong_p()) {
                coeffs.push_back(c.get_si());
            } else {
                coeffs.push_back(c.get_str());
            }
        }
        merge_key(spec, "l_poly", std::optional<Json>(coeffs), "--l-poly", from_file, err);
    }
    if (!spec.contains("genus")) {
        spec["genus"] = 0;
    }
    return field_from_json(spec);
}

RamificationData resolve_ramification(const FunctionFieldData& field, const RamFlags& r) {
    if (!r.rank) {
        throw UsageError("--rank is required");
    }
    return RamificationData{field, *r.rank, parse_ramification_shorthand(r.ram, field.deg_inf())};
}

std::string csv_header() { return "q,genus,deg_inf,r,ramification,mass_num,mass_den\n"; }

std::string csv_row(const FunctionFieldData& field, int r, const std::string& ram, const BigRational& mass) {
    std::ostringstream os;
    os << field.q() << ',' << field.genus() << ',' << field.deg_inf() << ',' << r << ",\"" << ram << "\","
       << mass.num().get_str() << ',' << mass.den().get_str() << '\n';
    return os.str();
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::size_t parse_order(const std::string& text, const char* source) {
    try {
        std::size_t used = 0;
        const long value = std::stol(text, &used);
        if (used != text.size() || value < 0 || value > 10000) {
            throw std::out_of_range(text);
        }
        return static_cast<std::size_t>(value);
    } catch (const std::logic_error&) {
        throw UsageError(std::string(source) + " must be an integer in [0, 10000], got \"" + text + "\"");
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) {
        return out;
    }
    for (const auto& x : parse_integer_list(text)) {
        if (!x.fits_sint_p()) {
            throw ParseError("list entry " + x.get_str() + " out of range");
        }
        out.push_back(static_cast<int>(x.get_si()));
    }
    return out;
}

struct TableRow {
    std::int64_t q;
    int genus;
    int r;
    std::string ram;
    FunctionFieldData field;
    BigRational mass;
};

}  // namespace

std::size_t default_series_order() {
    const char* env = std::getenv("MASSFORM_SERIES_ORDER");
    if (env == nullptr || *env == '\0') {
        return kFallbackSeriesOrder;
    }
    return parse_order(env, "MASSFORM_SERIES_ORDER");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mass formulas and zeta functions of orders in division algebras over function fields", "massform"};
    app.require_subcommand(1);

    FieldFlags field_flags;
    RamFlags ram_flags;
    Common common;

    auto* mass_cmd = app.add_subcommand("mass", "mass of a definite maximal order");
    add_field_flags(mass_cmd, field_flags);
    add_ram_flags(mass_cmd, ram_flags);
    add_format(mass_cmd, common);

    int p_degree = 1;
    auto* drinfeld_cmd = app.add_subcommand("drinfeld-mass", "mass for invariants -1/r at infinity and 1/r at p");
    add_field_flags(drinfeld_cmd, field_flags);
    drinfeld_cmd->add_option("--rank", ram_flags.rank, "r")->required();
    drinfeld_cmd->add_option("--p-degree", p_degree, "degree of the finite ramified place")->required();
    add_format(drinfeld_cmd, common);

    auto* class_cmd = app.add_subcommand("class-number", "h(A), and h(B) for indefinite data");
    add_field_flags(class_cmd, field_flags);
    add_ram_flags(class_cmd, ram_flags);

    int max_i = 3;
    int max_degree = 6;
    auto* zeta_cmd = app.add_subcommand("zeta", "zeta_K, zeta_A, special values and place counts");
    add_field_flags(zeta_cmd, field_flags);
    zeta_cmd->add_option("--max-i", max_i, "largest i for zeta_K(-i)")->check(CLI::Range(0, 64));
    zeta_cmd->add_option("--max-degree", max_degree, "largest place degree to count")->check(CLI::Range(1, 64));

    std::optional<std::string> order_text;
    auto* oz_cmd = app.add_subcommand("order-zeta", "zeta_R: closed form, value at 0 and Dirichlet series");
    add_field_flags(oz_cmd, field_flags);
    add_ram_flags(oz_cmd, ram_flags);
    oz_cmd->add_option("--series-order", order_text, "truncation order D");

    auto* local_cmd = app.add_subcommand("local", "local volumes, lambda_v and matrix models");
    local_cmd->require_subcommand(1);
    std::int64_t qv = 2;
    int r_local = 1;
    int d_local = 1;
    std::int64_t b_local = 1;
    std::size_t prec = LocalModel::kDefaultPrecision;
    bool brute = false;
    int trials = 100;
    std::uint64_t seed = 1;
    auto* volumes_cmd = local_cmd->add_subcommand("volumes", "vol_G, vol_G' and their ratio");
    auto* lambda_cmd = local_cmd->add_subcommand("lambda", "lambda_v by closed form and by volumes");
    for (auto* sub : {volumes_cmd, lambda_cmd}) {
        sub->add_option("--qv", qv, "residue field size")->required();
        sub->add_option("--r", r_local, "rank")->required();
        sub->add_option("--d", d_local, "local index")->required();
    }
    auto* iw_cmd = local_cmd->add_subcommand("iw-index", "[Mat_d(O_L) : Iw]");
    iw_cmd->add_option("--qv", qv, "residue field size")->required();
    iw_cmd->add_option("--d", d_local, "local index")->required();
    iw_cmd->add_flag("--brute", brute, "also count by enumeration");
    auto* model_cmd = local_cmd->add_subcommand("model-check", "relation suite of the local matrix model");
    model_cmd->add_option("--qv", qv, "residue field size")->required();
    model_cmd->add_option("--d", d_local, "local index")->required();
    model_cmd->add_option("--b", b_local, "invariant numerator")->required();
    model_cmd->add_option("--prec", prec, "pi-adic precision");
    model_cmd->add_option("--trials", trials, "random samples per relation")->check(CLI::Range(1, 100000));
    model_cmd->add_option("--seed", seed, "random seed");

    std::string table_q = "2";
    std::string table_ranks = "2";
    std::string table_p_degrees;
    std::string table_kind = "drinfeld";
    int table_max_degree = 1;
    std::size_t table_max_places = 2;
    auto* table_cmd = app.add_subcommand("table", "mass table over a parameter grid");
    table_cmd->add_option("--q-list", table_q, "comma-separated q values (rational fields)");
    table_cmd->add_option("--field-file", field_flags.field_file, "JSON field spec (replaces --q-list)");
    table_cmd->add_option("--ranks", table_ranks, "comma-separated ranks");
    table_cmd->add_option("--kind", table_kind, "drinfeld or definite")->check(CLI::IsMember({"drinfeld", "definite"}));
    table_cmd->add_option("--p-degrees", table_p_degrees, "finite place degrees (drinfeld kind)");
    table_cmd->add_option("--max-degree", table_max_degree, "largest finite place degree (definite kind)")
        ->check(CLI::Range(1, 6));
    table_cmd->add_option("--max-places", table_max_places, "largest |S| (definite kind)")->check(CLI::Range(2, 3));
    std::string table_format = "csv";
    table_cmd->add_option("--format", table_format, "output format")->check(CLI::IsMember({"json", "csv"}));

    SuiteOptions suite_opts;
    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite, "suite name or all");
    verify_cmd->add_option("--max-rank", suite_opts.max_rank, "largest rank")->check(CLI::Range(2, 8));
    verify_cmd->add_option("--series-order", order_text, "truncation order D");
    verify_cmd->add_option("--seed", suite_opts.seed, "random seed");
    verify_cmd->add_option("--trials", suite_opts.random_trials, "random data sets")->check(CLI::Range(1, 1000000));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*mass_cmd) {
            const auto field = resolve_field(field_flags, err);
            const auto data = resolve_ramification(field, ram_flags);
            const MassReport report = mass(data);
            if (common.fmt() == Format::csv) {
                out << csv_header() << csv_row(field, data.rank, data.shorthand(), report.mass);
                return kExitOk;
            }
            Json j = to_json(report);
            j["field"] = to_json(field);
            j["ramification"] = to_json(data);
            emit(out, j);
        } else if (*drinfeld_cmd) {
            const auto field = resolve_field(field_flags, err);
            const BigRational m = drinfeld_mass(field, *ram_flags.rank, p_degree);
            if (common.fmt() == Format::csv) {
                const auto data = drinfeld_data(field, *ram_flags.rank, p_degree);
                out << csv_header() << csv_row(field, data.rank, data.shorthand(), m);
                return kExitOk;
            }
            emit(out, Json{{"mass", to_json(m)},
                           {"rank", *ram_flags.rank},
                           {"p_degree", p_degree},
                           {"field", to_json(field)}});
        } else if (*class_cmd) {
            const auto field = resolve_field(field_flags, err);
            Json j{{"h_A", class_number_A(field).get_str()}};
            if (ram_flags.rank) {
                const auto data = resolve_ramification(field, ram_flags);
                require_valid(data);
                j["definite"] = is_definite(data);
                if (!is_definite(data)) {
                    j["h_B"] = indefinite_class_number(data).get_str();
                }
            }
            emit(out, j);
        } else if (*zeta_cmd) {
            const auto field = resolve_field(field_flags, err);
            Json special = Json::array();
            for (int i = 1; i <= max_i; ++i) {
                special.push_back(to_json(zeta_special_value(field, i)));
            }
            Json places = Json::array();
            for (int n = 1; n <= max_degree; ++n) {
                places.push_back(places_of_degree(field, n).get_str());
            }
            emit(out, Json{{"field", to_json(field)},
                           {"zeta_K", to_json(zeta_K(field))},
                           {"zeta_A", to_json(zeta_A(field))},
                           {"zeta_A_at_0", to_json(ratfun_eval(zeta_A(field), BigRational(1)))},
                           {"h_A", class_number_A(field).get_str()},
                           {"zeta_K_at_minus_i", std::move(special)},
                           {"places_of_degree", std::move(places)}});
        } else if (*oz_cmd) {
            const std::size_t order = order_text ? parse_order(*order_text, "--series-order") : default_series_order();
            const auto field = resolve_field(field_flags, err);
            const auto data = resolve_ramification(field, ram_flags);
            const auto closed = order_zeta_closed_form(data);
            Json factors = Json::array();
            for (const auto& f : closed.assembled_from) {
                factors.push_back(Json{{"label", f.label}, {"value", to_json(f.value)}});
            }
            emit(out, Json{{"closed_form", to_json(closed.ratfun)},
                           {"at_zero", to_json(order_zeta_at_zero(data))},
                           {"mass", to_json(mass(data).mass)},
                           {"series", to_json(order_zeta_series(data, order))},
                           {"factors", std::move(factors)},
                           {"field", to_json(field)},
                           {"ramification", to_json(data)}});
        } else if (*local_cmd) {
            if (*volumes_cmd) {
                const auto g = vol_G(qv, r_local);
                if (d_local < 1 || r_local % d_local != 0) {
                    throw NotDivisibleError("d must divide r");
                }
                const auto gp = vol_Gprime(qv, r_local / d_local, d_local);
                emit(out, Json{{"vol_G", to_json(g)},
                               {"vol_Gprime", to_json(gp.value())},
                               {"lattice_factor", to_json(gp.lattice_factor)},
                               {"residue_factor", to_json(gp.residue_factor)},
                               {"ratio", to_json(g / gp.value())}});
            } else if (*lambda_cmd) {
                const BigInt from_volumes = lambda_from_volumes(qv, r_local, d_local);
                const RamifiedPlace place{1, 1, d_local, false};
                const BigInt closed = lambda_v(place, r_local, qv);
                if (closed != from_volumes) {
                    throw InternalConsistencyError("lambda_v closed form " + closed.get_str() + " != volume ratio " +
                                                   from_volumes.get_str());
                }
                emit(out, Json{{"lambda", closed.get_str()}, {"from_volumes", from_volumes.get_str()}});
            } else if (*iw_cmd) {
                emit(out, Json{{"index", iwahori_index(qv, d_local, brute).get_str()}, {"brute_force", brute}});
            } else if (*model_cmd) {
                const auto report = run_model_checks(LocalModel::make(qv, d_local, b_local, prec), trials, seed);
                emit(out, to_json(report));
                return report.passed() ? kExitOk : kExitInternal;
            }
        } else if (*table_cmd) {
            std::vector<FunctionFieldData> fields;
            if (field_flags.field_file) {
                fields.push_back(field_from_json(read_json_file(*field_flags.field_file)));
            } else {
                for (int q : parse_int_list(table_q)) {
                    fields.push_back(FunctionFieldData::rational(q));
                }
            }
            const auto ranks = parse_int_list(table_ranks);
            std::vector<TableRow> rows;
            for (const auto& field : fields) {
                for (int r : ranks) {
                    if (r == 1) {
                        const RamificationData data{field, 1, {}};
                        rows.push_back({field.q(), field.genus(), 1, "", field, mass(data).mass});
                        continue;
                    }
                    if (table_kind == "drinfeld") {
                        for (int p : parse_int_list(table_p_degrees)) {
                            const auto data = drinfeld_data(field, r, p);
                            rows.push_back({field.q(), field.genus(), r, data.shorthand(), field,
                                            drinfeld_mass(field, r, p)});
                        }
                    } else {
                        for (const auto& data : definite_configurations(field, r, table_max_degree, 2,
                                                                        table_max_places)) {
                            rows.push_back({field.q(), field.genus(), r, data.shorthand(), field, mass(data).mass});
                        }
                    }
                }
            }
            std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
                return std::tie(a.q, a.genus, a.r, a.ram) < std::tie(b.q, b.genus, b.r, b.ram);
            });
            if (table_format == "csv") {
                out << csv_header();
                for (const auto& row : rows) {
                    out << csv_row(row.field, row.r, row.ram, row.mass);
                }
            } else {
                Json arr = Json::array();
                for (const auto& row : rows) {
                    arr.push_back(Json{{"q", row.q},
                                       {"genus", row.genus},
                                       {"deg_inf", row.field.deg_inf()},
                                       {"r", row.r},
                                       {"ramification", row.ram},
                                       {"mass", to_json(row.mass)}});
                }
                emit(out, Json{{"rows", std::move(arr)}});
            }
        } else if (*verify_cmd) {
            suite_opts.series_order = order_text ? parse_order(*order_text, "--series-order") : default_series_order();
            std::vector<std::string> names;
            if (suite == "all") {
                names = suite_names();
            } else {
                names.push_back(suite);
            }
            Json results = Json::array();
            bool passed = true;
            for (const auto& name : names) {
                const SuiteResult res = run_suite(name, suite_opts);
                passed = passed && res.passed();
                results.push_back(to_json(res));
            }
            emit(out, Json{{"suite", suite}, {"results", std::move(results)}, {"passed", passed}});
            return passed ? kExitOk : kExitInternal;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InternalConsistencyError& e) {
        emit(out, Json{{"error", {{"type", e.name()}, {"message", e.what()}}}});
        return kExitInternal;
    } catch (const Error& e) {
        emit(out, Json{{"error", {{"type", e.name()}, {"message", e.what()}}}});
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace massform::cli
