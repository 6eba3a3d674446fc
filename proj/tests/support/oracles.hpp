#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "massform/finite_field.hpp"
#include "massform/ratfun.hpp"

namespace massform::oracle {

/// Solves A x = b over Q by Gauss-Jordan elimination; A must be square and
/// invertible.
std::vector<BigRational> solve_linear(std::vector<std::vector<BigRational>> a, std::vector<BigRational> b);

/// Taylor coefficients s_0..s_D of num/den, found by evaluating num and den
/// at distinct integer points and solving
///   den(x) S(x) - x^{D+1} R(x) = num(x)
/// for the unknown polynomials S (degree <= D) and R.
std::vector<BigRational> taylor_by_interpolation(const RationalFunctionQ& f, std::size_t order);

/// Naive Cauchy product truncated at `order`.
std::vector<BigRational> convolve(const std::vector<BigRational>& a, const std::vector<BigRational>& b,
                                  std::size_t order);

/// Monic irreducibles of degree n over F_p (p prime) as coefficient lists
/// (lowest first, leading 1 included): all monic polynomials minus all
/// products of two monic polynomials of positive degree.
std::set<std::vector<std::uint32_t>> monic_irreducibles_mod_p(std::uint32_t p, int n);

/// Affine plus projective points of y^2 + x y = x^3 + 1 over `field`
/// (characteristic 2).
std::int64_t count_points_y2_xy_x3_1(const FqField& field);

/// #GL_r(F_q) as prod_{i<r} (q^r - q^i).
BigInt gl_order_by_rows(std::int64_t q, int r);

}  // namespace massform::oracle
