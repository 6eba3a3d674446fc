#include "massform/arith.hpp"

#include <numeric>

namespace massform {

std::int64_t PrimePower::q() const {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        r *= p;
    }
    return r;
}

bool is_prime(std::int64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::optional<PrimePower> factor_prime_power(std::int64_t n) {
    if (n < 2) {
        return std::nullopt;
    }
    std::int64_t p = 0;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) {
        return PrimePower{n, 1};
    }
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (n != 1) {
        return std::nullopt;
    }
    return PrimePower{p, e};
}

int mobius(std::int64_t n) {
    int result = 1;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) {
                return 0;
            }
            result = -result;
        }
    }
    if (n > 1) {
        result = -result;
    }
    return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> small;
    std::vector<std::int64_t> large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

BigInt big_pow(std::int64_t q, unsigned long k) { return ipow(BigInt(static_cast<long>(q)), k); }

}  // namespace massform
