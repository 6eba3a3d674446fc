#include "massform/finite_field.hpp"

#include <string>

#include "massform/arith.hpp"
#include "massform/errors.hpp"

namespace massform {

namespace {

void trim(FqPoly& a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

FqPoly poly_mul(const FqField& f, const FqPoly& a, const FqPoly& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    FqPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
        }
    }
    trim(r);
    return r;
}

/// Remainder of a modulo b (b nonzero).
FqPoly poly_rem(const FqField& f, FqPoly a, const FqPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lc_inv = f.inv(b.back());
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const std::uint32_t factor = f.mul(a.back(), lc_inv);
        for (std::size_t j = 0; j <= db; ++j) {
            a[shift + j] = f.sub(a[shift + j], f.mul(factor, b[j]));
        }
        trim(a);
    }
    return a;
}

/// Monic polynomial of degree n whose lower coefficients are the base-q
/// digits of `index`.
FqPoly monic_from_index(std::int64_t q, int n, std::int64_t index) {
    FqPoly p(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        p[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(index % q);
        index /= q;
    }
    p[static_cast<std::size_t>(n)] = 1;
    return p;
}

std::int64_t checked_power(std::int64_t q, int n, std::int64_t limit) {
    std::int64_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > limit / q) {
            return -1;
        }
        r *= q;
    }
    return r;
}

std::shared_ptr<const FqField> prime_field(std::int64_t p) { return FqField::with_modulus(p, {0, 1}); }

}  // namespace

// ---------------------------------------------------------------------------
// FqElem

std::vector<std::uint32_t> FqElem::repr() const { return field->digits(code); }

FqElem FqElem::operator-() const { return {field, field->neg(code)}; }

static void require_same_field(const FqElem& a, const FqElem& b) {
    if (a.field != b.field) {
        throw ValidationError("finite field elements from different fields");
    }
}

FqElem operator+(FqElem a, FqElem b) {
    require_same_field(a, b);
    return {a.field, a.field->add(a.code, b.code)};
}

FqElem operator-(FqElem a, FqElem b) {
    require_same_field(a, b);
    return {a.field, a.field->sub(a.code, b.code)};
}

FqElem operator*(FqElem a, FqElem b) {
    require_same_field(a, b);
    return {a.field, a.field->mul(a.code, b.code)};
}

FqElem operator/(FqElem a, FqElem b) { return a * b.inverse(); }

FqElem FqElem::pow(std::uint64_t n) const { return {field, field->pow(code, n)}; }

FqElem FqElem::inverse() const { return {field, field->inv(code)}; }

// ---------------------------------------------------------------------------
// FqField

FqField::FqField(std::int64_t p, std::vector<std::uint32_t> modulus)
    : p_(p), e_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)) {
    if (e_ < 1 || modulus_.back() != 1) {
        throw InvalidFieldDefinitionError("field modulus must be monic of degree >= 1");
    }
    q_ = checked_power(p_, e_, kMaxOrder);
    if (q_ < 0) {
        throw InvalidFieldDefinitionError("field order exceeds " + std::to_string(kMaxOrder));
    }
    const auto order = static_cast<std::uint64_t>(q_ - 1);
    std::vector<std::uint64_t> prime_factors;
    {
        std::uint64_t n = order;
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                prime_factors.push_back(d);
                while (n % d == 0) {
                    n /= d;
                }
            }
        }
        if (n > 1) {
            prime_factors.push_back(n);
        }
    }
    auto pow_slow = [&](std::uint32_t a, std::uint64_t n) {
        std::uint32_t r = 1;
        while (n > 0) {
            if ((n & 1U) != 0) {
                r = mul_slow(r, a);
            }
            a = mul_slow(a, a);
            n >>= 1U;
        }
        return r;
    };
    std::uint32_t g = 0;
    for (std::uint32_t cand = 1; cand < static_cast<std::uint32_t>(q_); ++cand) {
        bool primitive = true;
        for (auto l : prime_factors) {
            if (pow_slow(cand, order / l) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            g = cand;
            break;
        }
    }
    if (g == 0) {
        throw InvalidFieldDefinitionError("modulus does not define a field");
    }
    exp_.assign(2 * order, 0);
    log_.assign(static_cast<std::size_t>(q_), 0);
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
        exp_[i] = x;
        exp_[i + order] = x;
        log_[x] = static_cast<std::uint32_t>(i);
        x = mul_slow(x, g);
    }
}

std::shared_ptr<const FqField> FqField::with_modulus(std::int64_t p, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) {
        throw InvalidFieldDefinitionError("characteristic " + std::to_string(p) + " is not prime");
    }
    for (auto& c : modulus) {
        c %= static_cast<std::uint32_t>(p);
    }
    trim(modulus);
    if (modulus.size() < 2 || modulus.back() != 1) {
        throw InvalidFieldDefinitionError("modulus must be monic of degree >= 1");
    }
    if (modulus.size() > 2) {
        const auto fp = prime_field(p);
        if (!is_irreducible(*fp, modulus)) {
            throw InvalidFieldDefinitionError("modulus is reducible over F_" + std::to_string(p));
        }
    }
    return std::make_shared<const FqField>(p, std::move(modulus));
}

std::shared_ptr<const FqField> FqField::make(std::int64_t p, int e) {
    if (!is_prime(p) || e < 1) {
        throw InvalidFieldDefinitionError("F_q needs a prime p and e >= 1");
    }
    if (e == 1) {
        return with_modulus(p, {0, 1});
    }
    const std::int64_t count = checked_power(p, e, kMaxOrder);
    if (count < 0) {
        throw InvalidFieldDefinitionError("field order exceeds " + std::to_string(kMaxOrder));
    }
    const auto fp = prime_field(p);
    for (std::int64_t index = 0; index < count; ++index) {
        FqPoly cand = monic_from_index(p, e, index);
        if (is_irreducible(*fp, cand)) {
            return std::make_shared<const FqField>(p, std::move(cand));
        }
    }
    throw InvalidFieldDefinitionError("no irreducible polynomial found");
}

std::shared_ptr<const FqField> FqField::make_q(std::int64_t q) {
    const auto pp = factor_prime_power(q);
    if (!pp) {
        throw InvalidFieldDefinitionError(std::to_string(q) + " is not a prime power");
    }
    return make(pp->p, pp->e);
}

FqElem FqField::element(std::uint32_t code) const {
    if (code >= static_cast<std::uint64_t>(q_)) {
        throw ValidationError("element code " + std::to_string(code) + " out of range for F_" +
                              std::to_string(q_));
    }
    return {this, code};
}

FqElem FqField::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    // Reduce modulo the (monic) modulus.
    std::vector<std::uint64_t> a(coeffs.begin(), coeffs.end());
    const auto pp = static_cast<std::uint64_t>(p_);
    for (auto& c : a) {
        c %= pp;
    }
    for (std::size_t top = a.size(); top-- > static_cast<std::size_t>(e_);) {
        const std::uint64_t c = a[top];
        if (c == 0) {
            continue;
        }
        const std::size_t shift = top - static_cast<std::size_t>(e_);
        for (int j = 0; j <= e_; ++j) {
            const std::size_t idx = shift + static_cast<std::size_t>(j);
            a[idx] = (a[idx] + (pp - c) * modulus_[static_cast<std::size_t>(j)]) % pp;
        }
    }
    a.resize(static_cast<std::size_t>(e_), 0);
    return {this, encode(std::vector<std::uint32_t>(a.begin(), a.end()))};
}

FqElem FqField::generator() const { return from_coeffs({0, 1}); }

std::vector<std::uint32_t> FqField::digits(std::uint32_t code) const {
    std::vector<std::uint32_t> d(static_cast<std::size_t>(e_), 0);
    for (auto& x : d) {
        x = static_cast<std::uint32_t>(code % static_cast<std::uint32_t>(p_));
        code /= static_cast<std::uint32_t>(p_);
    }
    return d;
}

std::uint32_t FqField::encode(const std::vector<std::uint32_t>& digits) const {
    std::uint32_t code = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        code = code * static_cast<std::uint32_t>(p_) + digits[i];
    }
    return code;
}

std::uint32_t FqField::add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) {
        return a ^ b;
    }
    const auto p = static_cast<std::uint32_t>(p_);
    std::uint32_t r = 0;
    std::uint32_t place = 1;
    while (a != 0 || b != 0) {
        r += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    return r;
}

std::uint32_t FqField::neg(std::uint32_t a) const {
    if (p_ == 2) {
        return a;
    }
    const auto p = static_cast<std::uint32_t>(p_);
    std::uint32_t r = 0;
    std::uint32_t place = 1;
    while (a != 0) {
        r += ((p - a % p) % p) * place;
        a /= p;
        place *= p;
    }
    return r;
}

std::uint32_t FqField::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) {
        return 0;
    }
    return exp_[log_[a] + log_[b]];
}

std::uint32_t FqField::inv(std::uint32_t a) const {
    if (a == 0) {
        throw NotAUnitError("zero has no inverse in F_" + std::to_string(q_));
    }
    const auto order = static_cast<std::uint32_t>(q_ - 1);
    return exp_[(order - log_[a]) % order];
}

std::uint32_t FqField::pow(std::uint32_t a, std::uint64_t n) const {
    if (n == 0) {
        return 1;
    }
    if (a == 0) {
        return 0;
    }
    const auto order = static_cast<std::uint64_t>(q_ - 1);
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (n % order)) % order];
}

std::uint32_t FqField::mul_slow(std::uint32_t a, std::uint32_t b) const {
    const auto da = digits(a);
    const auto db = digits(b);
    const auto pp = static_cast<std::uint64_t>(p_);
    std::vector<std::uint32_t> prod(2 * static_cast<std::size_t>(e_), 0);
    for (std::size_t i = 0; i < da.size(); ++i) {
        for (std::size_t j = 0; j < db.size(); ++j) {
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % pp);
        }
    }
    return from_coeffs(prod).code;
}

// ---------------------------------------------------------------------------

FqElem frobenius(FqElem x, std::int64_t base_q) { return x.pow(static_cast<std::uint64_t>(base_q)); }

bool is_irreducible(const FqField& field, const FqPoly& poly_in) {
    FqPoly poly = poly_in;
    trim(poly);
    if (poly.size() < 2) {
        throw ValidationError("irreducibility test needs degree >= 1");
    }
    const int n = static_cast<int>(poly.size()) - 1;
    for (int k = 1; 2 * k <= n; ++k) {
        const std::int64_t count = checked_power(field.q(), k, std::int64_t{1} << 40);
        for (std::int64_t index = 0; index < count; ++index) {
            if (poly_rem(field, poly, monic_from_index(field.q(), k, index)).empty()) {
                return false;
            }
        }
    }
    return true;
}

std::vector<FqPoly> enumerate_monic_irreducibles(const FqField& field, int n) {
    if (n < 1) {
        throw ValidationError("irreducible polynomials need degree >= 1");
    }
    const std::int64_t q = field.q();
    const std::int64_t total = checked_power(q, n, std::int64_t{1} << 28);
    if (total < 0) {
        throw ValidationError("q^n too large to enumerate");
    }
    std::vector<char> reducible(static_cast<std::size_t>(total), 0);
    for (int k = 1; 2 * k <= n; ++k) {
        const auto factors = enumerate_monic_irreducibles(field, k);
        const std::int64_t cofactors = checked_power(q, n - k, total);
        for (const auto& a : factors) {
            for (std::int64_t j = 0; j < cofactors; ++j) {
                const FqPoly prod = poly_mul(field, a, monic_from_index(q, n - k, j));
                std::int64_t index = 0;
                for (int i = n - 1; i >= 0; --i) {
                    index = index * q + prod[static_cast<std::size_t>(i)];
                }
                reducible[static_cast<std::size_t>(index)] = 1;
            }
        }
    }
    std::vector<FqPoly> out;
    for (std::int64_t index = 0; index < total; ++index) {
        if (reducible[static_cast<std::size_t>(index)] == 0) {
            out.push_back(monic_from_index(q, n, index));
        }
    }
    return out;
}

std::vector<FqPoly> enumerate_monic_irreducibles(std::int64_t q, int n) {
    const auto field = FqField::make_q(q);
    return enumerate_monic_irreducibles(*field, n);
}

std::int64_t count_monic_irreducibles(std::int64_t q, int n) {
    std::int64_t sum = 0;
    for (auto d : divisors(n)) {
        std::int64_t qd = 1;
        for (std::int64_t i = 0; i < d; ++i) {
            qd *= q;
        }
        sum += mobius(n / d) * qd;
    }
    return sum / n;
}

// ---------------------------------------------------------------------------

FieldEmbedding::FieldEmbedding(std::shared_ptr<const FqField> sub, std::shared_ptr<const FqField> ext)
    : sub_(std::move(sub)), ext_(std::move(ext)) {
    if (sub_->p() != ext_->p() || ext_->degree() % sub_->degree() != 0) {
        throw InvalidFieldDefinitionError("F_" + std::to_string(sub_->q()) + " is not a subfield of F_" +
                                          std::to_string(ext_->q()));
    }
    // Prime-field constants have the same code in every field of characteristic p.
    const auto& mod = sub_->modulus();
    std::int64_t root = -1;
    for (std::int64_t x = 0; x < ext_->q() && root < 0; ++x) {
        std::uint32_t acc = 0;
        for (std::size_t i = mod.size(); i-- > 0;) {
            acc = ext_->add(ext_->mul(acc, static_cast<std::uint32_t>(x)), mod[i]);
        }
        if (acc == 0) {
            root = x;
        }
    }
    if (root < 0) {
        throw InternalConsistencyError("subfield modulus has no root in the extension");
    }
    image_.resize(static_cast<std::size_t>(sub_->q()));
    for (std::uint32_t code = 0; code < image_.size(); ++code) {
        const auto d = sub_->digits(code);
        std::uint32_t acc = 0;
        for (std::size_t i = d.size(); i-- > 0;) {
            acc = ext_->add(ext_->mul(acc, static_cast<std::uint32_t>(root)), d[i]);
        }
        image_[code] = acc;
    }
}

FqElem FieldEmbedding::operator()(FqElem x) const {
    if (x.field != sub_.get()) {
        throw ValidationError("element does not belong to the embedding's source field");
    }
    return {ext_.get(), image_[x.code]};
}

}  // namespace massform
