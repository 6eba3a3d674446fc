#include "massform/mass.hpp"

#include <string>

#include "massform/arith.hpp"
#include "massform/errors.hpp"

namespace massform {

namespace {

BigRational class_number_factor(const FunctionFieldData& field) {
    return BigRational(class_number_A(field), BigInt(static_cast<long>(field.q() - 1)));
}

}  // namespace

BigRational MassReport::recompute() const {
    BigRational product = class_number_factor;
    for (const auto& z : zeta_factors) {
        product *= z;
    }
    for (const auto& [place, lambda] : lambda_factors) {
        product *= BigRational(lambda);
    }
    return product;
}

MassReport mass(const RamificationData& data) {
    require_valid(data);
    if (!is_definite(data)) {
        throw NotDefiniteError("the mass is defined only for definite algebras (d_inf = r)");
    }
    MassReport report;
    report.definite = true;
    report.drinfeld_type = is_drinfeld_type(data);
    report.degenerate = data.rank == 1;
    report.class_number_factor = class_number_factor(data.field);
    for (int i = 1; i <= data.rank - 1; ++i) {
        report.zeta_factors.push_back(zeta_special_value(data.field, i));
    }
    for (const auto& place : data.places) {
        report.lambda_factors.emplace_back(place, lambda_v(place, data.rank, data.field.q()));
    }
    report.mass = report.recompute();
    return report;
}

BigRational drinfeld_mass(const FunctionFieldData& field, int r, int p_degree) {
    if (r < 2) {
        throw ValidationError("Drinfeld-type algebras need rank r >= 2");
    }
    if (p_degree < 1 || finite_places_of_degree(field, p_degree) < 1) {
        throw NoSuchPlaceError("the field has no finite place of degree " + std::to_string(p_degree));
    }
    const BigInt norm_inf = big_pow(field.q(), static_cast<unsigned long>(field.deg_inf()));
    const BigInt norm_p = big_pow(field.q(), static_cast<unsigned long>(p_degree));
    BigRational result = class_number_factor(field);
    for (int i = 1; i <= r - 1; ++i) {
        const auto ui = static_cast<unsigned long>(i);
        const BigInt euler_inf = 1 - ipow(norm_inf, ui);
        const BigInt euler_p = 1 - ipow(norm_p, ui);
        result *= zeta_special_value(field, i) * BigRational(euler_inf) * BigRational(euler_p);
    }
    return result;
}

BigInt indefinite_class_number(const RamificationData& data) {
    require_valid(data);
    if (is_definite(data)) {
        throw DefiniteError("definite algebras need ideal-class enumeration for h(B)");
    }
    return class_number_A(data.field);
}

}  // namespace massform
