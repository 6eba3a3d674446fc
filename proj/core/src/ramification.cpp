#include "massform/ramification.hpp"

#include <map>
#include <sstream>

#include "massform/arith.hpp"
#include "massform/errors.hpp"

namespace massform {

RamifiedPlace RamifiedPlace::make(int degree, std::int64_t b, std::int64_t d, bool is_infinity) {
    if (degree < 1) {
        throw InvalidRamificationError("place degree must be positive");
    }
    if (d < 2) {
        throw InvalidRamificationError("a ramified place needs local index d >= 2");
    }
    if (gcd64(b, d) != 1) {
        throw InvalidRamificationError("invariant " + std::to_string(b) + "/" + std::to_string(d) +
                                       " is not in lowest terms");
    }
    return RamifiedPlace{degree, b, d, is_infinity};
}

std::int64_t RamifiedPlace::reduced_num() const { return mod_floor(inv_num, inv_den); }

std::string RamifiedPlace::shorthand() const {
    std::ostringstream os;
    if (is_infinity) {
        os << "inf";
    } else {
        os << degree;
    }
    os << ':' << inv_num << '/' << inv_den;
    return os.str();
}

const RamifiedPlace* RamificationData::infinity() const {
    for (const auto& p : places) {
        if (p.is_infinity) {
            return &p;
        }
    }
    return nullptr;
}

int RamificationData::local_matrix_size(const RamifiedPlace& place) const {
    return static_cast<int>(rank / place.inv_den);
}

std::string RamificationData::shorthand() const {
    std::string out;
    for (const auto& p : places) {
        if (!out.empty()) {
            out += ',';
        }
        out += p.shorthand();
    }
    return out;
}

ValidationReport validate(const RamificationData& data) {
    ValidationReport report;
    auto fail = [&](std::string msg) { report.failures.push_back(std::move(msg)); };

    if (data.rank < 1) {
        fail("rank must be at least 1");
        return report;
    }
    int infinity_entries = 0;
    bool places_well_formed = true;
    for (const auto& p : data.places) {
        const std::string tag = p.shorthand();
        if (p.degree < 1) {
            fail(tag + ": place degree must be positive");
            places_well_formed = false;
        }
        if (p.inv_den < 2) {
            fail(tag + ": local index must be at least 2");
            places_well_formed = false;
            continue;
        }
        if (gcd64(p.inv_num, p.inv_den) != 1) {
            fail(tag + ": invariant not in lowest terms");
            places_well_formed = false;
        }
        if (data.rank % p.inv_den != 0) {
            fail(tag + ": local index does not divide the rank " + std::to_string(data.rank));
            places_well_formed = false;
        }
        if (p.is_infinity) {
            ++infinity_entries;
            if (p.degree != data.field.deg_inf()) {
                fail(tag + ": infinity has degree " + std::to_string(data.field.deg_inf()));
            }
        }
    }
    if (infinity_entries > 1) {
        fail("more than one entry marked as infinity");
    }
    if (!places_well_formed) {
        return report;
    }

    BigRational total;
    std::int64_t index_lcm = 1;
    for (const auto& p : data.places) {
        total += BigRational(BigInt(static_cast<long>(p.inv_num)), BigInt(static_cast<long>(p.inv_den)));
        index_lcm = lcm64(index_lcm, p.inv_den);
    }
    if (!total.is_integer()) {
        fail("invariants sum to " + total.to_string() + ", not an integer");
    }
    if (index_lcm != data.rank) {
        fail("lcm of local indices is " + std::to_string(index_lcm) + ", not the rank " +
             std::to_string(data.rank));
    }

    std::map<int, long> finite_by_degree;
    for (const auto& p : data.places) {
        if (!p.is_infinity) {
            ++finite_by_degree[p.degree];
        }
    }
    for (const auto& [degree, count] : finite_by_degree) {
        const BigInt available = finite_places_of_degree(data.field, degree);
        if (available < count) {
            fail(std::to_string(count) + " ramified finite places of degree " + std::to_string(degree) +
                 " but the field has only " + available.get_str());
            report.place_shortage = true;
        }
    }
    return report;
}

void require_valid(const RamificationData& data) {
    const ValidationReport report = validate(data);
    if (report.ok()) {
        return;
    }
    std::string msg = "invalid ramification data";
    for (const auto& f : report.failures) {
        msg += "; " + f;
    }
    if (report.place_shortage) {
        throw NegativeMultiplicityError(msg);
    }
    throw InvalidRamificationError(msg);
}

bool is_definite(const RamificationData& data) {
    // An unramified infinity has local index 1, so r = 1 counts as definite.
    const RamifiedPlace* inf = data.infinity();
    const std::int64_t index_inf = inf != nullptr ? inf->inv_den : 1;
    return index_inf == data.rank;
}

bool is_drinfeld_type(const RamificationData& data) {
    const RamifiedPlace* inf = data.infinity();
    if (inf == nullptr || data.places.size() != 2 || inf->inv_den != data.rank) {
        return false;
    }
    return inf->reduced_num() == data.rank - 1;
}

BigInt lambda_v(const RamifiedPlace& place, int r, std::int64_t q) {
    const BigInt norm = big_pow(q, static_cast<unsigned long>(place.degree));
    BigInt product = 1;
    BigInt power = 1;
    for (int i = 1; i <= r - 1; ++i) {
        power *= norm;
        if (i % place.inv_den != 0) {
            product *= power - 1;
        }
    }
    return product;
}

bool parity_check(const RamificationData& data) {
    long total = 0;
    for (const auto& p : data.places) {
        total += data.rank - data.local_matrix_size(p);
    }
    return total % 2 == 0;
}

}  // namespace massform
