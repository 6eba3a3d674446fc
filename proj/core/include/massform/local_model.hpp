#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "massform/fq_series.hpp"
#include "massform/rational.hpp"

namespace massform {

/// Square matrix over O_L / pi^N, row-major.
class LocalMatrix {
public:
    LocalMatrix(std::size_t size, const TruncatedSeriesFq& zero);

    static LocalMatrix identity(std::size_t size, const TruncatedSeriesFq& one);
    static LocalMatrix scalar(std::size_t size, const TruncatedSeriesFq& value);

    std::size_t size() const { return size_; }
    const TruncatedSeriesFq& at(std::size_t row, std::size_t col) const { return entries_[row * size_ + col]; }
    TruncatedSeriesFq& at(std::size_t row, std::size_t col) { return entries_[row * size_ + col]; }

    friend LocalMatrix operator+(const LocalMatrix& a, const LocalMatrix& b);
    friend LocalMatrix operator-(const LocalMatrix& a, const LocalMatrix& b);
    friend LocalMatrix operator*(const LocalMatrix& a, const LocalMatrix& b);
    friend bool operator==(const LocalMatrix& a, const LocalMatrix& b);

    LocalMatrix pow(unsigned n) const;

private:
    std::size_t size_;
    std::vector<TruncatedSeriesFq> entries_;
};

/// x = sum_{i<d} Pi^i a_i with a_i in O_L / pi^N.
struct DeltaElement {
    std::vector<TruncatedSeriesFq> coeffs;
};

/// Local central division algebra Delta of index d and invariant b/d over
/// K_v = F_{q_v}((pi)), presented as O_L[Pi] with Pi^d = pi and
/// Pi^{-1} c Pi = tau(c), tau = sigma^m, where b m + d m' = 1 and
/// 1 <= m <= d. L is the degree-d unramified extension; everything is
/// computed modulo pi^N.
class LocalModel {
public:
    static constexpr std::size_t kDefaultPrecision = 6;

    /// Throws ValidationError for d < 1 or gcd(b, d) != 1,
    /// InvalidFieldDefinitionError for a bad q_v and PrecisionExhaustedError
    /// for precision < 2 (pi would vanish).
    static LocalModel make(std::int64_t q_v, int d, std::int64_t b, std::size_t precision = kDefaultPrecision);

    std::int64_t q_v() const { return q_v_; }
    int index() const { return d_; }
    /// b reduced into [1, d] (b = 1 when d = 1).
    std::int64_t invariant_num() const { return b_; }
    std::int64_t bezout_m() const { return m_; }
    std::int64_t bezout_mprime() const { return mprime_; }
    std::size_t precision() const { return precision_; }

    const std::shared_ptr<const FqField>& base_field() const { return base_; }
    const std::shared_ptr<const FqField>& residue_field() const { return residue_; }
    /// F_{q_v} inside the residue field of L.
    FqElem embed_base(FqElem x) const { return embedding_(x); }

    TruncatedSeriesFq zero() const;
    TruncatedSeriesFq one() const;
    TruncatedSeriesFq pi() const;
    TruncatedSeriesFq constant(FqElem c) const;
    TruncatedSeriesFq random_integer(std::mt19937_64& rng) const;
    /// Random element of O_L^x.
    TruncatedSeriesFq random_unit(std::mt19937_64& rng) const;

    /// Arithmetic Frobenius of L/K_v, iterated `times` times.
    TruncatedSeriesFq sigma(const TruncatedSeriesFq& a, std::int64_t times = 1) const;
    /// tau^times = sigma^{m * times}.
    TruncatedSeriesFq tau(const TruncatedSeriesFq& a, std::int64_t times = 1) const;

    DeltaElement scalar(const TruncatedSeriesFq& a) const;
    /// Pi^k as an element (k >= 0).
    DeltaElement uniformizer_power(unsigned k) const;
    DeltaElement random_element(std::mt19937_64& rng) const;
    /// Product in Delta via a Pi^j = Pi^j tau^j(a) and Pi^d = pi.
    DeltaElement multiply(const DeltaElement& x, const DeltaElement& y) const;

    /// diag(a0, tau(a0), ..., tau^{d-1}(a0)).
    LocalMatrix phi_of_scalar(const TruncatedSeriesFq& a0) const;
    /// pi in the top-right corner, ones on the subdiagonal.
    LocalMatrix phi_of_pi() const;
    /// Left translation by x on the right L-basis 1, Pi, ..., Pi^{d-1}.
    LocalMatrix phi(const DeltaElement& x) const;

private:
    LocalModel(std::int64_t q_v, int d, std::int64_t b, std::int64_t m, std::int64_t mprime, std::size_t precision,
               std::shared_ptr<const FqField> base, std::shared_ptr<const FqField> residue);

    std::int64_t q_v_;
    int d_;
    std::int64_t b_;
    std::int64_t m_;
    std::int64_t mprime_;
    std::size_t precision_;
    std::shared_ptr<const FqField> base_;
    std::shared_ptr<const FqField> residue_;
    FieldEmbedding embedding_;
};

/// Whether pi^{pi_shift} * M lies in Iw = {entries in O_L, entries above the
/// diagonal in pi O_L}. Throws PrecisionExhaustedError when a negative
/// shift asks for more pi-digits than M carries.
bool in_iwahori(const LocalMatrix& m, int pi_shift = 0);

/// [Mat_d(O_L) : Iw] = q_v^{d^2(d-1)/2}. With `brute_force`, additionally
/// enumerates the strictly-upper-triangular residue patterns, counts those
/// lying in Iw, checks the patterns cover Mat_d(O_L)/Iw, and throws
/// InternalConsistencyError on disagreement. Brute force is limited to
/// q_v^{d^2(d-1)/2} <= 2^20 (BruteForceTooLargeError).
BigInt iwahori_index(std::int64_t q_v, int d, bool brute_force = false);

/// Result of the relation suite for one model.
struct ModelCheckReport {
    std::int64_t q_v = 0;
    int d = 0;
    std::int64_t b = 0;
    std::size_t precision = 0;
    int multiplicativity_failures = 0;
    int multiplicativity_trials = 0;
    bool pi_power_relation = false;
    bool presentation_relation = false;
    int embedding_failures = 0;
    int embedding_trials = 0;
    int non_integral_failures = 0;
    int non_integral_trials = 0;

    bool passed() const;
};

/// Phi(xy) = Phi(x)Phi(y) on random pairs, Phi(Pi)^d = pi I, the original
/// presentation Pi' = Pi^b with Pi'^d = pi^b and Pi'^{-1} c Pi' = sigma(c),
/// and optimal embedding: Phi(O_Delta) in Iw while pi^{-1} y is rejected
/// whenever y has a unit coordinate.
ModelCheckReport run_model_checks(const LocalModel& model, int trials, std::uint64_t seed);

}  // namespace massform
