#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "massform/rational.hpp"

namespace massform {

/// q = p^e with p prime.
struct PrimePower {
    std::int64_t p = 0;
    int e = 0;
    std::int64_t q() const;
};

bool is_prime(std::int64_t n);
/// Empty when n is not a prime power (n >= 2).
std::optional<PrimePower> factor_prime_power(std::int64_t n);

int mobius(std::int64_t n);
/// Positive divisors in ascending order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Non-negative gcd / lcm on machine integers.
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
/// Representative of a mod m in [0, m).
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

/// q^k as a big integer.
BigInt big_pow(std::int64_t q, unsigned long k);

}  // namespace massform
