#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace massform {

class FqField;

/// Element of F_q. Non-owning: the field must outlive the element. Elements
/// are encoded by `code` = sum c_i p^i where sum c_i t^i is the reduced
/// representative modulo the field's defining polynomial.
struct FqElem {
    const FqField* field = nullptr;
    std::uint32_t code = 0;

    bool is_zero() const { return code == 0; }
    /// Representative coefficients over F_p, lowest degree first, length e.
    std::vector<std::uint32_t> repr() const;

    FqElem operator-() const;
    friend FqElem operator+(FqElem a, FqElem b);
    friend FqElem operator-(FqElem a, FqElem b);
    friend FqElem operator*(FqElem a, FqElem b);
    /// Throws NotAUnitError for b = 0.
    friend FqElem operator/(FqElem a, FqElem b);
    friend bool operator==(FqElem a, FqElem b) { return a.field == b.field && a.code == b.code; }

    FqElem pow(std::uint64_t n) const;
    FqElem inverse() const;
};

/// Monic or general polynomial over a fixed F_q as element codes, lowest
/// degree first.
using FqPoly = std::vector<std::uint32_t>;

/// The finite field F_p[t]/(modulus), q = p^e. Immutable once built; share
/// it through the shared_ptr returned by the factories.
class FqField {
public:
    /// Largest field order supported (arithmetic uses log tables).
    static constexpr std::int64_t kMaxOrder = std::int64_t{1} << 20;

    /// Uses the lexicographically least monic irreducible of degree e.
    static std::shared_ptr<const FqField> make(std::int64_t p, int e);
    /// Throws InvalidFieldDefinitionError unless q is a prime power.
    static std::shared_ptr<const FqField> make_q(std::int64_t q);
    /// Throws InvalidFieldDefinitionError if `modulus` (monic, over F_p) is
    /// reducible; checked by trial division.
    static std::shared_ptr<const FqField> with_modulus(std::int64_t p, std::vector<std::uint32_t> modulus);

    std::int64_t p() const { return p_; }
    int degree() const { return e_; }
    std::int64_t q() const { return q_; }
    /// Defining polynomial over F_p, lowest degree first, monic of degree e.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FqElem zero() const { return {this, 0}; }
    FqElem one() const { return {this, 1}; }
    /// Throws ValidationError for code >= q.
    FqElem element(std::uint32_t code) const;
    /// Element with the given F_p coefficients (reduced mod p; length <= e).
    FqElem from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
    /// The class of t.
    FqElem generator() const;
    /// A generator of the multiplicative group.
    FqElem primitive() const { return {this, exp_[1]}; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t n) const;
    std::vector<std::uint32_t> digits(std::uint32_t code) const;
    std::uint32_t encode(const std::vector<std::uint32_t>& digits) const;

    FqField(std::int64_t p, std::vector<std::uint32_t> modulus);

private:
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

    std::int64_t p_;
    int e_;
    std::int64_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

/// x^base_q. For x in an extension of F_{base_q} this is the Frobenius
/// automorphism over F_{base_q}.
FqElem frobenius(FqElem x, std::int64_t base_q);

/// True iff the polynomial (degree >= 1) has no monic factor of degree
/// 1..deg/2; trial division.
bool is_irreducible(const FqField& field, const FqPoly& poly);

/// All monic irreducibles of exact degree n, ordered by (c_{n-1}, ..., c_0)
/// lexicographically on element codes. Each entry includes the leading 1.
std::vector<FqPoly> enumerate_monic_irreducibles(const FqField& field, int n);
std::vector<FqPoly> enumerate_monic_irreducibles(std::int64_t q, int n);

/// Necklace count (1/n) sum_{d | n} mu(n/d) q^d.
std::int64_t count_monic_irreducibles(std::int64_t q, int n);

/// Embedding of a subfield into an extension of the same characteristic,
/// sending the subfield's generator to the least root (by code) of its
/// modulus found by exhaustive search.
class FieldEmbedding {
public:
    /// Throws InvalidFieldDefinitionError unless sub.degree() | ext.degree()
    /// and both have the same characteristic.
    FieldEmbedding(std::shared_ptr<const FqField> sub, std::shared_ptr<const FqField> ext);

    FqElem operator()(FqElem x) const;
    const FqField& source() const { return *sub_; }
    const FqField& target() const { return *ext_; }

private:
    std::shared_ptr<const FqField> sub_;
    std::shared_ptr<const FqField> ext_;
    std::vector<std::uint32_t> image_;
};

}  // namespace massform
