#include "massform/local_volumes.hpp"

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "massform/arith.hpp"
#include "massform/errors.hpp"
#include "massform/finite_field.hpp"

namespace massform {

namespace {

void require_positive(std::int64_t norm, int r) {
    if (norm < 2 || r < 1) {
        throw ValidationError("need N >= 2 and r >= 1");
    }
}

bool is_invertible(const FqField& f, std::vector<std::uint32_t> a, std::size_t n) {
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot * n + col] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return false;
        }
        if (pivot != col) {
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(a[pivot * n + k], a[col * n + k]);
            }
        }
        const std::uint32_t inv = f.inv(a[col * n + col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            const std::uint32_t factor = f.mul(a[row * n + col], inv);
            if (factor == 0) {
                continue;
            }
            for (std::size_t k = col; k < n; ++k) {
                a[row * n + k] = f.sub(a[row * n + k], f.mul(factor, a[col * n + k]));
            }
        }
    }
    return true;
}

/// (F_q[pi]/pi^ell)^r with elements packed as r*ell base-q digits,
/// digit coord*ell + k holding the pi^k coefficient of that coordinate.
class TruncatedModule {
public:
    TruncatedModule(std::shared_ptr<const FqField> field, int r, int ell)
        : field_(std::move(field)), r_(static_cast<std::size_t>(r)), ell_(static_cast<std::size_t>(ell)) {
        const auto q = static_cast<std::uint64_t>(field_->q());
        for (std::size_t k = 0; k < r_ * ell_; ++k) {
            size_ *= q;
        }
        for (std::size_t k = 0; k < ell_; ++k) {
            ring_size_ *= q;
        }
    }

    std::uint64_t size() const { return size_; }
    std::uint64_t ring_size() const { return ring_size_; }

    std::vector<std::uint32_t> unpack(std::uint64_t code) const {
        std::vector<std::uint32_t> out(r_ * ell_);
        const auto q = static_cast<std::uint64_t>(field_->q());
        for (auto& d : out) {
            d = static_cast<std::uint32_t>(code % q);
            code /= q;
        }
        return out;
    }

    std::uint64_t pack(const std::vector<std::uint32_t>& digits) const {
        std::uint64_t code = 0;
        const auto q = static_cast<std::uint64_t>(field_->q());
        for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
            code = code * q + *it;
        }
        return code;
    }

    /// c * pi^k * g over all k < ell and c in F_q^x: an F_q-spanning set of R g.
    std::vector<std::vector<std::uint32_t>> scaled_shifts(std::uint64_t g) const {
        const auto gs = unpack(g);
        std::vector<std::vector<std::uint32_t>> out;
        for (std::size_t k = 0; k < ell_; ++k) {
            for (std::uint32_t c = 1; c < static_cast<std::uint32_t>(field_->q()); ++c) {
                std::vector<std::uint32_t> v(r_ * ell_, 0);
                for (std::size_t coord = 0; coord < r_; ++coord) {
                    for (std::size_t j = 0; j + k < ell_; ++j) {
                        v[coord * ell_ + j + k] = field_->mul(c, gs[coord * ell_ + j]);
                    }
                }
                out.push_back(std::move(v));
            }
        }
        return out;
    }

    std::uint64_t add(std::uint64_t x, const std::vector<std::uint32_t>& v) const {
        auto xs = unpack(x);
        for (std::size_t k = 0; k < xs.size(); ++k) {
            xs[k] = field_->add(xs[k], v[k]);
        }
        return pack(xs);
    }

private:
    std::shared_ptr<const FqField> field_;
    std::size_t r_;
    std::size_t ell_;
    std::uint64_t size_ = 1;
    std::uint64_t ring_size_ = 1;
};

}  // namespace

BigInt gl_order(std::int64_t q, int r) {
    require_positive(q, r);
    BigInt out = big_pow(q, static_cast<unsigned long>(r) * static_cast<unsigned long>(r - 1) / 2);
    for (int i = 1; i <= r; ++i) {
        out *= big_pow(q, static_cast<unsigned long>(i)) - 1;
    }
    return out;
}

BigInt gl_count_bruteforce(std::int64_t q, int r) {
    require_positive(q, r);
    const BigInt total = big_pow(q, static_cast<unsigned long>(r) * static_cast<unsigned long>(r));
    if (total > (BigInt(1) << 20)) {
        throw BruteForceTooLargeError("q^{r^2} = " + total.get_str() + " exceeds 2^20");
    }
    const auto field = FqField::make_q(q);
    const auto n = static_cast<std::size_t>(r);
    std::vector<std::uint32_t> entries(n * n, 0);
    const auto uq = static_cast<std::uint32_t>(q);
    BigInt count = 0;
    for (unsigned long index = 0; index < total.get_ui(); ++index) {
        if (is_invertible(*field, entries, n)) {
            ++count;
        }
        for (auto& e : entries) {
            if (++e < uq) {
                break;
            }
            e = 0;
        }
    }
    return count;
}

BigInt sublattice_count_bruteforce(std::int64_t q_v, int r, int ell) {
    if (r < 1 || ell < 0) {
        throw ValidationError("need r >= 1 and ell >= 0");
    }
    const auto field = FqField::make_q(q_v);
    const BigInt tuples = big_pow(q_v, static_cast<unsigned long>(r) * static_cast<unsigned long>(r) *
                                            static_cast<unsigned long>(ell));
    if (tuples > (BigInt(1) << 22)) {
        throw BruteForceTooLargeError("q_v^{r^2 ell} = " + tuples.get_str() + " exceeds 2^22");
    }
    if (ell == 0) {
        return 1;
    }
    const TruncatedModule module(field, r, ell);
    const std::uint64_t target = module.size() / module.ring_size();
    const std::size_t words = static_cast<std::size_t>((module.size() + 63) / 64);

    std::set<std::vector<std::uint64_t>> found;
    std::vector<std::uint64_t> gens(static_cast<std::size_t>(r), 0);
    for (std::uint64_t index = 0; index < tuples.get_ui(); ++index) {
        std::vector<std::uint64_t> members{0};
        std::vector<std::uint64_t> bits(words, 0);
        bits[0] = 1;
        for (const std::uint64_t g : gens) {
            const std::size_t q_minus_1 = static_cast<std::size_t>(q_v - 1);
            const auto shifts = module.scaled_shifts(g);
            // shifts come in blocks of q-1 scalar multiples of pi^k g.
            for (std::size_t s = 0; s < shifts.size(); s += q_minus_1) {
                if ((bits[module.pack(shifts[s]) / 64] >> (module.pack(shifts[s]) % 64) & 1U) != 0) {
                    continue;
                }
                const std::size_t before = members.size();
                for (std::size_t k = 0; k < before; ++k) {
                    for (std::size_t c = 0; c < q_minus_1; ++c) {
                        const std::uint64_t y = module.add(members[k], shifts[s + c]);
                        if ((bits[y / 64] >> (y % 64) & 1U) == 0) {
                            bits[y / 64] |= std::uint64_t{1} << (y % 64);
                            members.push_back(y);
                        }
                    }
                }
            }
        }
        if (members.size() == target) {
            found.insert(std::move(bits));
        }
        for (auto& g : gens) {
            if (++g < module.size()) {
                break;
            }
            g = 0;
        }
    }
    return BigInt(static_cast<unsigned long>(found.size()));
}

BigRational vol_G(std::int64_t norm, int r) {
    require_positive(norm, r);
    BigInt num = 1;
    for (int i = 1; i <= r; ++i) {
        num *= big_pow(norm, static_cast<unsigned long>(i)) - 1;
    }
    return BigRational(num, big_pow(norm, static_cast<unsigned long>(r) * static_cast<unsigned long>(r + 1) / 2));
}

VolumeGPrime vol_Gprime(std::int64_t norm, int m, int d) {
    require_positive(norm, m);
    if (d < 1) {
        throw ValidationError("local index d must be positive");
    }
    const auto um = static_cast<unsigned long>(m);
    const auto ud = static_cast<unsigned long>(d);
    VolumeGPrime out;
    out.lattice_factor = BigRational(BigInt(1), big_pow(norm, um * um * ud * (ud - 1) / 2));
    BigInt num = 1;
    for (unsigned long i = 1; i <= um; ++i) {
        num *= big_pow(norm, i * ud) - 1;
    }
    out.residue_factor = BigRational(num, big_pow(norm, ud * um * (um + 1) / 2));
    return out;
}

BigInt lambda_from_volumes(std::int64_t norm, int r, int d) {
    require_positive(norm, r);
    if (d < 1 || r % d != 0) {
        throw NotDivisibleError("local index " + std::to_string(d) + " does not divide r = " + std::to_string(r));
    }
    const BigRational ratio = vol_G(norm, r) / vol_Gprime(norm, r / d, d).value();
    if (!ratio.is_integer()) {
        throw InternalConsistencyError("vol_G / vol_G' = " + ratio.to_string() + " is not an integer");
    }
    return ratio.num();
}

}  // namespace massform
