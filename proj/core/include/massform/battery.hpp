#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "massform/ramification.hpp"

namespace massform {

/// The elliptic function field over F_2 with P(T) = 1 + T + 2T^2.
FunctionFieldData elliptic_field_q2();

/// Rational fields for q in {2, 3, 4, 5} followed by elliptic_field_q2().
std::vector<FunctionFieldData> standard_fields();

/// Finite ramified places (degree <= max_degree, local index d | r, d >= 2)
/// in canonical order.
std::vector<RamifiedPlace> finite_place_candidates(int r, int max_degree);

/// Every valid definite (r, S) over `field` with infinity ramified of index r,
/// min_places <= |S| <= max_places (infinity included, max_places <= 3) and
/// finite place degrees <= max_degree. Finite places are listed in canonical
/// order, so each configuration appears once.
std::vector<RamificationData> definite_configurations(const FunctionFieldData& field, int r, int max_degree,
                                                      std::size_t min_places, std::size_t max_places);

/// standard_fields() x r in {2, 3, 4, 6} x definite_configurations(.., 3, 2, 3).
std::vector<RamificationData> theorem_battery();

/// Invariant -1/r at infinity and 1/r at one finite place of degree p_degree.
RamificationData drinfeld_data(const FunctionFieldData& field, int r, int p_degree);

/// Product of `genus` Weil factors 1 + a T + q T^2 (|a| <= 2 sqrt q), with
/// deg_inf the least degree that carries a place. Empty if the product
/// fails the field checks.
std::optional<FunctionFieldData> random_weil_field(std::mt19937_64& rng, std::int64_t q, int genus);

/// A random valid definite (r, S) over `field`: infinity of index r and up
/// to `max_finite` finite places of degree <= max_degree; r = 1 gives S = {}.
RamificationData random_definite_data(std::mt19937_64& rng, const FunctionFieldData& field, int r, int max_degree,
                                      int max_finite);

}  // namespace massform
