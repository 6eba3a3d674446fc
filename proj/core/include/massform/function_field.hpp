#pragma once

#include <cstdint>
#include <vector>

#include "massform/ratfun.hpp"

namespace massform {

/// An abstract global function field with constant field F_q, described by
/// the numerator P(T) of its zeta function and the degree of a fixed place
/// at infinity. No curve model is stored.
///
/// Construction enforces:
///   - q a prime power, genus >= 0, deg_inf >= 1
///   - deg P = 2g, P(0) = 1, a_{2g-i} = q^{g-i} a_i
///   - place counts b_n are non-negative integers for n <= sanity_bound
///   - at least one place of degree deg_inf
/// and throws InvalidFieldError otherwise.
class FunctionFieldData {
public:
    static constexpr int kDefaultSanityBound = 8;

    FunctionFieldData(std::int64_t q, int genus, std::vector<BigInt> l_poly, int deg_inf,
                      int sanity_bound = kDefaultSanityBound);

    /// F_q(t) with a degree-`deg_inf` place at infinity.
    static FunctionFieldData rational(std::int64_t q, int deg_inf = 1);

    std::int64_t q() const { return q_; }
    int genus() const { return genus_; }
    int deg_inf() const { return deg_inf_; }
    const std::vector<BigInt>& l_coeffs() const { return l_coeffs_; }
    PolyQ l_poly() const { return PolyQ::from_integers(l_coeffs_); }

    /// N_m = #{places of degree dividing m, weighted by degree}, i.e. q^m + 1 - s_m.
    BigInt rational_points(int m) const;
    /// Power sum s_m of the inverse roots of P, by Newton's identities.
    BigInt power_sum(int m) const;

    friend bool operator==(const FunctionFieldData&, const FunctionFieldData&) = default;

private:
    std::int64_t q_;
    int genus_;
    std::vector<BigInt> l_coeffs_;
    int deg_inf_;
};

/// P(u) / ((1 - u)(1 - q u)).
RationalFunctionQ zeta_K(const FunctionFieldData& field);
/// zeta_K(-i) = P(q^i) / ((1 - q^i)(1 - q^{i+1})), i >= 1.
BigRational zeta_special_value(const FunctionFieldData& field, int i);
/// h(A) = deg_inf * P(1); throws InvalidFieldError if P(1) <= 0.
BigInt class_number_A(const FunctionFieldData& field);
/// Number of places of degree n, by Moebius inversion of N_m. Throws
/// InvalidFieldError when the result is negative or non-integral.
BigInt places_of_degree(const FunctionFieldData& field, int n);
/// Places of degree n other than the place at infinity.
BigInt finite_places_of_degree(const FunctionFieldData& field, int n);
/// (1 - u^{deg_inf}) zeta_K(u); regular at u = 1.
RationalFunctionQ zeta_A(const FunctionFieldData& field);

}  // namespace massform
