#include "massform/poly.hpp"

#include <algorithm>
#include <sstream>

#include "massform/errors.hpp"

namespace massform {

PolyQ::PolyQ(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyQ::PolyQ(std::initializer_list<BigRational> coeffs) : coeffs_(coeffs) { trim(); }

PolyQ PolyQ::constant(const BigRational& c) { return PolyQ({c}); }

PolyQ PolyQ::monomial(const BigRational& c, std::size_t k) {
    std::vector<BigRational> v(k + 1);
    v[k] = c;
    return PolyQ(std::move(v));
}

PolyQ PolyQ::from_integers(const std::vector<BigInt>& coeffs) {
    std::vector<BigRational> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        v.emplace_back(c);
    }
    return PolyQ(std::move(v));
}

void PolyQ::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

BigRational PolyQ::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigRational(0); }

BigRational PolyQ::leading() const { return coeffs_.empty() ? BigRational(0) : coeffs_.back(); }

BigRational PolyQ::operator()(const BigRational& x) const {
    BigRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

PolyQ PolyQ::monic() const {
    if (is_zero()) {
        return *this;
    }
    const BigRational lc = leading();
    std::vector<BigRational> v(coeffs_);
    for (auto& c : v) {
        c /= lc;
    }
    return PolyQ(std::move(v));
}

PolyQ PolyQ::scale_variable(const BigRational& c) const {
    std::vector<BigRational> v(coeffs_);
    BigRational power(1);
    for (auto& coeff : v) {
        coeff *= power;
        power *= c;
    }
    return PolyQ(std::move(v));
}

PolyQ PolyQ::operator-() const {
    std::vector<BigRational> v(coeffs_);
    for (auto& c : v) {
        c = -c;
    }
    return PolyQ(std::move(v));
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    std::vector<BigRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = a.coeff(i) + b.coeff(i);
    }
    return PolyQ(std::move(v));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) { return a + (-b); }

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<mpq_class> acc(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            acc[i + j] += a.coeffs_[i].raw() * b.coeffs_[j].raw();
        }
    }
    std::vector<BigRational> v;
    v.reserve(acc.size());
    for (auto& c : acc) {
        c.canonicalize();
        v.emplace_back(c.get_num(), c.get_den());
    }
    return PolyQ(std::move(v));
}

PolyQ operator*(const BigRational& c, const PolyQ& p) {
    if (c.is_zero()) {
        return {};
    }
    std::vector<BigRational> v(p.coeffs_);
    for (auto& x : v) {
        x *= c;
    }
    return PolyQ(std::move(v));
}

std::string PolyQ::to_string(const std::string& var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const auto& c = coeffs_[k];
        if (c.is_zero()) {
            continue;
        }
        if (!first) {
            os << (c.sign() < 0 ? " - " : " + ");
        } else if (c.sign() < 0) {
            os << "-";
        }
        const BigRational mag = c.sign() < 0 ? -c : c;
        const bool unit = mag == BigRational(1);
        if (k == 0 || !unit) {
            os << mag;
        }
        if (k >= 1) {
            os << (unit ? "" : "*") << var;
            if (k > 1) {
                os << "^" << k;
            }
        }
        first = false;
    }
    return os.str();
}

std::pair<PolyQ, PolyQ> poly_divmod(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) {
        throw DivisionByZeroError("polynomial division by zero");
    }
    if (a.degree() < b.degree()) {
        return {PolyQ{}, a};
    }
    std::vector<BigRational> rem(a.coeffs());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<BigRational> quot(rem.size() - db);
    const BigRational lc = b.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const BigRational factor = rem[k + db] / lc;
        quot[k] = factor;
        if (factor.is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j <= db; ++j) {
            rem[k + j] -= factor * b.coeffs()[j];
        }
    }
    rem.resize(db);
    return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ poly_gcd(const PolyQ& a, const PolyQ& b) {
    PolyQ x = a;
    PolyQ y = b;
    while (!y.is_zero()) {
        PolyQ r = poly_divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

}  // namespace massform
