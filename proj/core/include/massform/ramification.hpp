#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "massform/function_field.hpp"

namespace massform {

/// A ramified place of a central simple algebra: its degree and local
/// Brauer invariant b/d. The invariant is stored as given; only equality
/// tests reduce it modulo 1.
struct RamifiedPlace {
    int degree = 1;
    std::int64_t inv_num = 0;
    std::int64_t inv_den = 1;
    bool is_infinity = false;

    /// Validating factory: throws InvalidRamificationError unless degree >= 1,
    /// d >= 2 and gcd(b, d) = 1.
    static RamifiedPlace make(int degree, std::int64_t b, std::int64_t d, bool is_infinity = false);

    /// b mod d in [0, d).
    std::int64_t reduced_num() const;
    /// "inf:b/d" or "<deg>:b/d".
    std::string shorthand() const;

    friend bool operator==(const RamifiedPlace&, const RamifiedPlace&) = default;
};

struct RamificationData {
    FunctionFieldData field;
    int rank = 1;
    std::vector<RamifiedPlace> places;

    /// The entry marked as infinity, or nullptr when infinity is split.
    const RamifiedPlace* infinity() const;
    /// m_v = r / d_v.
    int local_matrix_size(const RamifiedPlace& place) const;
    /// Comma-joined shorthand of all places in stored order.
    std::string shorthand() const;
};

struct ValidationReport {
    std::vector<std::string> failures;
    /// Some degree has more ramified finite places than the field provides.
    bool place_shortage = false;

    bool ok() const { return failures.empty(); }
};

/// Checks every structural constraint on (r, S): well-formed invariants,
/// a single infinity entry of degree deg_inf, d_v | r, invariants summing to
/// zero mod 1, lcm of the d_v equal to r, and enough places of each degree.
ValidationReport validate(const RamificationData& data);

/// Throws NegativeMultiplicityError on a place shortage, otherwise
/// InvalidRamificationError listing the failures.
void require_valid(const RamificationData& data);

/// d_inf = r, where an unramified infinity has d_inf = 1.
bool is_definite(const RamificationData& data);
/// Invariant -1/r at infinity and exactly one further (finite) ramified place.
bool is_drinfeld_type(const RamificationData& data);

/// prod_{1 <= i <= r-1, d_v does not divide i} (N(v)^i - 1), N(v) = q^{deg v}.
BigInt lambda_v(const RamifiedPlace& place, int r, std::int64_t q);

/// sum_{v in S} (r - m_v) is even.
bool parity_check(const RamificationData& data);

}  // namespace massform
