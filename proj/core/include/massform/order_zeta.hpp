#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "massform/ramification.hpp"
#include "massform/series.hpp"

namespace massform {

/// zeta_R of a maximal order in a definite algebra, as a rational function
/// of u = q^{-s}, plus the factors it was multiplied from.
struct OrderZetaClosedForm {
    struct Factor {
        std::string label;
        RationalFunctionQ value;
    };

    RationalFunctionQ ratfun;
    std::vector<Factor> assembled_from;
};

/// zeta_A(u) * prod_{i=1}^{r-1} zeta_K(q^i u) * prod_{v in S} prod_{d_v !| i} (1 - q^{i deg v} u^{deg v}).
/// Throws NotDefiniteError; InternalConsistencyError if the result has a
/// pole at u = 1 or lacks the pole at u = q^{-r}.
OrderZetaClosedForm order_zeta_closed_form(const RamificationData& data);

/// zeta_R(0): the closed form at u = 1.
BigRational order_zeta_at_zero(const RamificationData& data);

/// Number of right ideals of norm p_v^ell in a local maximal order of
/// Mat_m(Delta), Delta of index d, residue size `norm`:
///   sum over compositions l_1 + ... + l_m = ell of prod_i norm^{d l_i (i-1)}.
BigInt local_ideal_count(const BigInt& norm, int m, int d, int ell);

/// Local Euler factor sum_ell local_ideal_count(N, m, d, ell) u^{deg * ell}
/// with N = q^deg, truncated at `order`.
TruncatedSeriesQ local_euler_series(std::int64_t q, int place_degree, int m, int d, std::size_t order);

/// Dirichlet series of zeta_R in u through u^order, multiplied degree by
/// degree (ascending), ramified finite places last. Infinity contributes
/// no factor. Throws NotDefiniteError, NegativeMultiplicityError.
TruncatedSeriesQ order_zeta_series(const RamificationData& data, std::size_t order);

/// Re-derives the series one place at a time (ramified places first, then
/// unramified places by descending degree) and compares with
/// order_zeta_series. A degree carrying more than 256 unramified places
/// contributes its factor power by binomial expansion instead.
bool coefficient_multiplicativity_check(const RamificationData& data, std::size_t order);

/// Head data of one partial zeta function zeta_i.
struct PartialZetaData {
    std::int64_t q = 2;
    int rank = 1;
    int deg_inf = 1;
    BigInt unit_order = 1;
    /// (ell, a_i(ell)) for 0 <= ell <= ell_i; missing ell means a_i(ell) = 0.
    std::vector<std::pair<int, BigInt>> head;
    BigInt C = 1;
    int ell_i = 0;
};

/// Throws InvalidPartialDataError unless unit_order >= 1, every head entry
/// lies in [0, ell_i] with a_i(ell) = 0 off the class ell = ell_i mod deg_inf,
/// and C = 1 + sum a_i(ell).
void validate_partial_zeta(const PartialZetaData& data);

/// #R_i^x * zeta_i as a rational function of u = q^{-s}:
///   sum a_i(ell) u^ell + C u^{ell_i} ((N^r - 1)/N^r) N^r u^{deg_inf} / (1 - N^r u^{deg_inf}),
/// N = q^{deg_inf}.
RationalFunctionQ partial_zeta_continuation(const PartialZetaData& data);

/// zeta_i(0) from the continuation.
BigRational partial_zeta_value(const PartialZetaData& data);

/// a_i(ell_i + mu deg_inf) = (N^r - 1) N^{r(mu-1)} C checked for mu = 1..steps
/// three ways: the closed formula, successive differences of the lattice
/// counts C N^{r mu}, and the Taylor coefficients of the continuation.
bool partial_zeta_tail_check(const PartialZetaData& data, int steps);

}  // namespace massform
