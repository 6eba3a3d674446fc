#pragma once

#include <utility>
#include <vector>

#include "massform/ramification.hpp"

namespace massform {

/// Mass of a definite maximal order together with every factor it was
/// assembled from. `mass` equals the product of the parts.
struct MassReport {
    BigRational mass;
    /// h(A) / (q - 1)
    BigRational class_number_factor;
    /// zeta_K(-1), ..., zeta_K(-(r-1))
    std::vector<BigRational> zeta_factors;
    std::vector<std::pair<RamifiedPlace, BigInt>> lambda_factors;
    bool definite = true;
    bool drinfeld_type = false;
    /// r = 1: B = K, empty products.
    bool degenerate = false;

    /// Product of the stored factors.
    BigRational recompute() const;
};

/// (h(A)/(q-1)) * prod_{i=1}^{r-1} zeta_K(-i) * prod_{v in S} lambda_v, with
/// infinity included in S. Throws NotDefiniteError for indefinite data.
MassReport mass(const RamificationData& data);

/// Drinfeld-type mass from the degree of the finite ramified place alone:
/// (h(A)/(q-1)) prod_{i=1}^{r-1} zeta_K(-i) (1 - N(inf)^i)(1 - N(p)^i).
/// Throws NoSuchPlaceError when the field has no finite place of that degree.
BigRational drinfeld_mass(const FunctionFieldData& field, int r, int p_degree);

/// h(B) = h(A) for indefinite B. Throws DefiniteError for definite data.
BigInt indefinite_class_number(const RamificationData& data);

}  // namespace massform
