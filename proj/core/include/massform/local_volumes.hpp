#pragma once

#include <cstdint>

#include "massform/rational.hpp"

namespace massform {

/// #GL_r(F_q) = q^{r(r-1)/2} prod_{i=1}^r (q^i - 1).
BigInt gl_order(std::int64_t q, int r);

/// Counts invertible r x r matrices over F_q by Gaussian elimination on
/// every matrix. Throws BruteForceTooLargeError for q^{r^2} > 2^20.
BigInt gl_count_bruteforce(std::int64_t q, int r);

/// Number of O_v-sublattices of O_v^r of index q_v^ell, by enumerating the
/// submodules of (F_{q_v}[pi]/pi^ell)^r generated by r elements. Throws
/// BruteForceTooLargeError for q_v^{r^2 ell} > 2^22.
BigInt sublattice_count_bruteforce(std::int64_t q_v, int r, int ell);

/// vol(GL_r(O_v)) = prod_{i=1}^r (N^i - 1) / N^{r(r+1)/2}.
BigRational vol_G(std::int64_t norm, int r);

/// Haar volume of O_{D_v}^x for D_v = Mat_m(Delta), Delta of index d:
/// lattice factor N^{-m^2 d(d-1)/2} times residue factor
/// prod_{i=1}^m (N^{id} - 1) / N^{dm(m+1)/2}.
struct VolumeGPrime {
    BigRational lattice_factor;
    BigRational residue_factor;

    BigRational value() const { return lattice_factor * residue_factor; }
};
VolumeGPrime vol_Gprime(std::int64_t norm, int m, int d);

/// vol_G(r) / vol_G'(m, d) for r = m d. Throws NotDivisibleError unless
/// d | r; InternalConsistencyError if the quotient is not an integer.
BigInt lambda_from_volumes(std::int64_t norm, int r, int d);

}  // namespace massform
