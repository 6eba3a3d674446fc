#include "massform/local_model.hpp"

#include <utility>

#include "massform/arith.hpp"
#include "massform/errors.hpp"

namespace massform {

LocalMatrix::LocalMatrix(std::size_t size, const TruncatedSeriesFq& zero) : size_(size), entries_(size * size, zero) {}

LocalMatrix LocalMatrix::identity(std::size_t size, const TruncatedSeriesFq& one) { return scalar(size, one); }

LocalMatrix LocalMatrix::scalar(std::size_t size, const TruncatedSeriesFq& value) {
    LocalMatrix out(size, TruncatedSeriesFq(value.field_ptr(), value.precision()));
    for (std::size_t i = 0; i < size; ++i) {
        out.at(i, i) = value;
    }
    return out;
}

LocalMatrix operator+(const LocalMatrix& a, const LocalMatrix& b) {
    if (a.size_ != b.size_) {
        throw ValidationError("matrix sizes differ");
    }
    LocalMatrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) {
        out.entries_[k] = a.entries_[k] + b.entries_[k];
    }
    return out;
}

LocalMatrix operator-(const LocalMatrix& a, const LocalMatrix& b) {
    if (a.size_ != b.size_) {
        throw ValidationError("matrix sizes differ");
    }
    LocalMatrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) {
        out.entries_[k] = a.entries_[k] - b.entries_[k];
    }
    return out;
}

LocalMatrix operator*(const LocalMatrix& a, const LocalMatrix& b) {
    if (a.size_ != b.size_) {
        throw ValidationError("matrix sizes differ");
    }
    const std::size_t n = a.size_;
    const TruncatedSeriesFq zero(a.entries_.front().field_ptr(), a.entries_.front().precision());
    LocalMatrix out(n, zero);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            TruncatedSeriesFq acc = zero;
            for (std::size_t k = 0; k < n; ++k) {
                acc = acc + a.at(i, k) * b.at(k, j);
            }
            out.at(i, j) = std::move(acc);
        }
    }
    return out;
}

bool operator==(const LocalMatrix& a, const LocalMatrix& b) { return a.size_ == b.size_ && a.entries_ == b.entries_; }

LocalMatrix LocalMatrix::pow(unsigned n) const {
    const auto& e = entries_.front();
    LocalMatrix result = identity(size_, TruncatedSeriesFq::constant(e.field_ptr(), e.precision(), e.field().one()));
    LocalMatrix base = *this;
    while (n > 0) {
        if ((n & 1U) != 0) {
            result = result * base;
        }
        n >>= 1U;
        if (n > 0) {
            base = base * base;
        }
    }
    return result;
}

LocalModel::LocalModel(std::int64_t q_v, int d, std::int64_t b, std::int64_t m, std::int64_t mprime,
                       std::size_t precision, std::shared_ptr<const FqField> base,
                       std::shared_ptr<const FqField> residue)
    : q_v_(q_v),
      d_(d),
      b_(b),
      m_(m),
      mprime_(mprime),
      precision_(precision),
      base_(base),
      residue_(residue),
      embedding_(std::move(base), std::move(residue)) {}

LocalModel LocalModel::make(std::int64_t q_v, int d, std::int64_t b, std::size_t precision) {
    if (d < 1) {
        throw ValidationError("local index d must be positive");
    }
    if (gcd64(b, d) != 1) {
        throw ValidationError("invariant " + std::to_string(b) + "/" + std::to_string(d) + " is not in lowest terms");
    }
    if (precision < 2) {
        throw PrecisionExhaustedError("local model needs precision >= 2");
    }
    const auto pp = factor_prime_power(q_v);
    if (!pp) {
        throw InvalidFieldDefinitionError(std::to_string(q_v) + " is not a prime power");
    }
    BigInt residue_order = big_pow(q_v, static_cast<unsigned long>(d));
    if (residue_order > FqField::kMaxOrder) {
        throw InvalidFieldDefinitionError("residue field of order " + residue_order.get_str() + " is too large");
    }
    // b m + d m' = 1 with 1 <= m <= d.
    std::int64_t b_red = mod_floor(b, d);
    std::int64_t m = 1;
    if (d == 1) {
        b_red = 1;
    } else {
        while (mod_floor(b_red * m, d) != 1) {
            ++m;
        }
    }
    const std::int64_t mprime = (1 - b_red * m) / d;
    auto base = FqField::make(pp->p, pp->e);
    auto residue = FqField::make(pp->p, pp->e * d);
    return LocalModel(q_v, d, b_red, m, mprime, precision, std::move(base), std::move(residue));
}

TruncatedSeriesFq LocalModel::zero() const { return TruncatedSeriesFq(residue_, precision_); }

TruncatedSeriesFq LocalModel::one() const { return TruncatedSeriesFq::constant(residue_, precision_, residue_->one()); }

TruncatedSeriesFq LocalModel::pi() const { return TruncatedSeriesFq::pi_power(residue_, precision_, 1); }

TruncatedSeriesFq LocalModel::constant(FqElem c) const {
    return TruncatedSeriesFq::constant(residue_, precision_, c);
}

TruncatedSeriesFq LocalModel::random_integer(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(residue_->q() - 1));
    std::vector<std::uint32_t> coeffs(precision_);
    for (auto& c : coeffs) {
        c = pick(rng);
    }
    return TruncatedSeriesFq(residue_, precision_, std::move(coeffs));
}

TruncatedSeriesFq LocalModel::random_unit(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint32_t> pick_unit(1, static_cast<std::uint32_t>(residue_->q() - 1));
    TruncatedSeriesFq a = random_integer(rng);
    std::vector<std::uint32_t> coeffs = a.codes();
    coeffs[0] = pick_unit(rng);
    return TruncatedSeriesFq(residue_, precision_, std::move(coeffs));
}

TruncatedSeriesFq LocalModel::sigma(const TruncatedSeriesFq& a, std::int64_t times) const {
    const auto reduced = static_cast<std::uint64_t>(mod_floor(times, d_));
    return reduced == 0 ? a : a.frobenius(q_v_, reduced);
}

TruncatedSeriesFq LocalModel::tau(const TruncatedSeriesFq& a, std::int64_t times) const {
    return sigma(a, mod_floor(m_ * mod_floor(times, d_), d_));
}

DeltaElement LocalModel::scalar(const TruncatedSeriesFq& a) const {
    DeltaElement x{std::vector<TruncatedSeriesFq>(static_cast<std::size_t>(d_), zero())};
    x.coeffs[0] = a;
    return x;
}

DeltaElement LocalModel::uniformizer_power(unsigned k) const {
    const auto d = static_cast<unsigned>(d_);
    DeltaElement x{std::vector<TruncatedSeriesFq>(d, zero())};
    x.coeffs[k % d] = TruncatedSeriesFq::pi_power(residue_, precision_, k / d);
    return x;
}

DeltaElement LocalModel::random_element(std::mt19937_64& rng) const {
    DeltaElement x;
    for (int i = 0; i < d_; ++i) {
        x.coeffs.push_back(random_integer(rng));
    }
    return x;
}

DeltaElement LocalModel::multiply(const DeltaElement& x, const DeltaElement& y) const {
    const auto d = static_cast<std::size_t>(d_);
    DeltaElement out{std::vector<TruncatedSeriesFq>(d, zero())};
    // Pi^i a Pi^j b = Pi^{i+j} tau^j(a) b, and Pi^{i+j} = pi Pi^{i+j-d} past d.
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            TruncatedSeriesFq term = tau(x.coeffs[i], static_cast<std::int64_t>(j)) * y.coeffs[j];
            if (i + j >= d) {
                term = term.shifted(1);
            }
            auto& slot = out.coeffs[(i + j) % d];
            slot = slot + term;
        }
    }
    return out;
}

LocalMatrix LocalModel::phi_of_scalar(const TruncatedSeriesFq& a0) const {
    const auto d = static_cast<std::size_t>(d_);
    LocalMatrix out(d, zero());
    for (std::size_t j = 0; j < d; ++j) {
        out.at(j, j) = tau(a0, static_cast<std::int64_t>(j));
    }
    return out;
}

LocalMatrix LocalModel::phi_of_pi() const {
    const auto d = static_cast<std::size_t>(d_);
    LocalMatrix out(d, zero());
    out.at(0, d - 1) = pi();
    for (std::size_t i = 0; i + 1 < d; ++i) {
        out.at(i + 1, i) = one();
    }
    return out;
}

LocalMatrix LocalModel::phi(const DeltaElement& x) const {
    const auto d = static_cast<std::size_t>(d_);
    if (x.coeffs.size() != d) {
        throw ValidationError("element has " + std::to_string(x.coeffs.size()) + " coordinates, expected " +
                              std::to_string(d));
    }
    // Pi^i a_i * Pi^j = Pi^{i+j} tau^j(a_i): column j collects these.
    LocalMatrix out(d, zero());
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            TruncatedSeriesFq entry = tau(x.coeffs[i], static_cast<std::int64_t>(j));
            if (i + j >= d) {
                entry = entry.shifted(1);
            }
            out.at((i + j) % d, j) = std::move(entry);
        }
    }
    return out;
}

bool in_iwahori(const LocalMatrix& m, int pi_shift) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const TruncatedSeriesFq& e = m.at(i, j);
            const long required = (j > i ? 1 : 0) - pi_shift;
            if (required <= 0) {
                continue;
            }
            const auto need = static_cast<std::size_t>(required);
            if (e.is_zero()) {
                if (need > e.precision()) {
                    throw PrecisionExhaustedError("membership needs " + std::to_string(need) +
                                                  " pi-digits but entries carry " + std::to_string(e.precision()));
                }
                continue;
            }
            if (e.valuation() < need) {
                return false;
            }
        }
    }
    return true;
}

BigInt iwahori_index(std::int64_t q_v, int d, bool brute_force) {
    if (d < 1) {
        throw ValidationError("matrix size must be positive");
    }
    if (!factor_prime_power(q_v)) {
        throw InvalidFieldDefinitionError(std::to_string(q_v) + " is not a prime power");
    }
    const auto upper = static_cast<unsigned long>(d) * static_cast<unsigned long>(d - 1) / 2;
    const BigInt formula = big_pow(q_v, static_cast<unsigned long>(d) * upper);
    if (!brute_force) {
        return formula;
    }
    if (formula > (BigInt(1) << 20)) {
        throw BruteForceTooLargeError("q_v^{d^2(d-1)/2} = " + formula.get_str() + " exceeds 2^20");
    }
    if (d == 1) {
        return formula;
    }

    const LocalModel model = LocalModel::make(q_v, d, 1, 2);
    const auto residue = model.residue_field();
    const auto big_q = static_cast<std::uint64_t>(residue->q());
    const auto size = static_cast<std::size_t>(d);
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
            slots.emplace_back(i, j);
        }
    }

    // Strictly upper residue patterns form a group P; [Mat : Iw] = |P| / |P cap Iw|
    // once P + Iw = Mat_d(O_L).
    const std::uint64_t patterns = formula.get_ui();
    std::uint64_t inside = 0;
    std::vector<std::uint32_t> digits(slots.size(), 0);
    for (std::uint64_t index = 0; index < patterns; ++index) {
        LocalMatrix e(size, model.zero());
        for (std::size_t s = 0; s < slots.size(); ++s) {
            e.at(slots[s].first, slots[s].second) = model.constant(residue->element(digits[s]));
        }
        if (in_iwahori(e)) {
            ++inside;
        }
        for (auto& digit : digits) {
            if (++digit < big_q) {
                break;
            }
            digit = 0;
        }
    }

    // Cover: each residue matrix unit c e_ij minus its upper pattern lies in Iw.
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            for (std::uint32_t c = 1; c < big_q; ++c) {
                LocalMatrix unit(size, model.zero());
                unit.at(i, j) = model.constant(residue->element(c));
                LocalMatrix pattern(size, model.zero());
                if (j > i) {
                    pattern.at(i, j) = unit.at(i, j);
                }
                if (!in_iwahori(unit - pattern)) {
                    throw InternalConsistencyError("upper patterns do not cover Mat_d(O_L)/Iw");
                }
            }
        }
    }

    if (inside == 0 || patterns % inside != 0 || BigInt(static_cast<unsigned long>(patterns / inside)) != formula) {
        throw InternalConsistencyError("brute-force Iwahori index " + std::to_string(patterns) + "/" +
                                       std::to_string(inside) + " disagrees with " + formula.get_str());
    }
    return formula;
}

bool ModelCheckReport::passed() const {
    return multiplicativity_failures == 0 && pi_power_relation && presentation_relation && embedding_failures == 0 &&
           non_integral_failures == 0;
}

ModelCheckReport run_model_checks(const LocalModel& model, int trials, std::uint64_t seed) {
    ModelCheckReport report;
    report.q_v = model.q_v();
    report.d = model.index();
    report.b = model.invariant_num();
    report.precision = model.precision();
    std::mt19937_64 rng(seed);
    const auto d = static_cast<std::size_t>(model.index());

    for (int t = 0; t < trials; ++t) {
        const DeltaElement x = model.random_element(rng);
        const DeltaElement y = model.random_element(rng);
        ++report.multiplicativity_trials;
        if (!(model.phi(model.multiply(x, y)) == model.phi(x) * model.phi(y))) {
            ++report.multiplicativity_failures;
        }
    }

    const LocalMatrix phi_pi = model.phi_of_pi();
    const auto pi_scalar = LocalMatrix::scalar(d, model.pi());
    report.pi_power_relation = phi_pi.pow(static_cast<unsigned>(d)) == pi_scalar &&
                               model.phi(model.uniformizer_power(1)) == phi_pi;

    // Pi' = Pi^b: Pi'^d = pi^b and c Pi' = Pi' sigma(c).
    const auto b = static_cast<unsigned>(model.invariant_num());
    const LocalMatrix phi_pi_prime = model.phi(model.uniformizer_power(b));
    bool presentation = phi_pi_prime == phi_pi.pow(b) &&
                        phi_pi_prime.pow(static_cast<unsigned>(d)) ==
                            LocalMatrix::scalar(d, TruncatedSeriesFq::pi_power(model.residue_field(),
                                                                               model.precision(), b));
    for (int t = 0; t < trials && presentation; ++t) {
        const TruncatedSeriesFq c = model.random_integer(rng);
        presentation = model.phi_of_scalar(c) * phi_pi_prime == phi_pi_prime * model.phi_of_scalar(model.sigma(c));
    }
    report.presentation_relation = presentation;

    std::uniform_int_distribution<std::size_t> pick_coord(0, d - 1);
    for (int t = 0; t < trials; ++t) {
        ++report.embedding_trials;
        if (!in_iwahori(model.phi(model.random_element(rng)))) {
            ++report.embedding_failures;
        }
        // pi^{-1} y with y integral and one unit coordinate is not integral.
        DeltaElement y = model.random_element(rng);
        y.coeffs[pick_coord(rng)] = model.random_unit(rng);
        ++report.non_integral_trials;
        if (in_iwahori(model.phi(y), -1)) {
            ++report.non_integral_failures;
        }
    }
    return report;
}

}  // namespace massform
