#include "oracles.hpp"

#include <stdexcept>

namespace massform::oracle {

std::vector<BigRational> solve_linear(std::vector<std::vector<BigRational>> a, std::vector<BigRational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            throw std::runtime_error("singular system");
        }
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        const BigRational inv = BigRational(1) / a[col][col];
        for (std::size_t k = col; k < n; ++k) {
            a[col][k] *= inv;
        }
        b[col] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) {
                continue;
            }
            const BigRational factor = a[row][col];
            for (std::size_t k = col; k < n; ++k) {
                a[row][k] -= factor * a[col][k];
            }
            b[row] -= factor * b[col];
        }
    }
    return b;
}

std::vector<BigRational> taylor_by_interpolation(const RationalFunctionQ& f, std::size_t order) {
    const auto deg_num = static_cast<std::size_t>(std::max<long>(f.num().degree(), 0));
    const auto deg_den = static_cast<std::size_t>(f.den().degree());
    // den*S has degree <= D + deg_den; R takes whatever exceeds u^D.
    const std::size_t top = std::max(order + deg_den, deg_num);
    const std::size_t r_terms = top >= order + 1 ? top - order : 0;
    const std::size_t unknowns = order + 1 + r_terms;

    std::vector<std::vector<BigRational>> rows;
    std::vector<BigRational> rhs;
    for (std::size_t j = 0; j < unknowns; ++j) {
        const BigRational x(static_cast<long>(j) + 1);
        const BigRational den_x = f.den()(x);
        std::vector<BigRational> row;
        BigRational xp(1);
        for (std::size_t k = 0; k <= order; ++k) {
            row.push_back(den_x * xp);
            xp *= x;
        }
        for (std::size_t k = 0; k < r_terms; ++k) {
            row.push_back(-xp);
            xp *= x;
        }
        rows.push_back(std::move(row));
        rhs.push_back(f.num()(x));
    }
    auto solution = solve_linear(std::move(rows), std::move(rhs));
    solution.resize(order + 1);
    return solution;
}

std::vector<BigRational> convolve(const std::vector<BigRational>& a, const std::vector<BigRational>& b,
                                  std::size_t order) {
    std::vector<BigRational> out(order + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

namespace {

std::vector<std::vector<std::uint32_t>> all_monic(std::uint32_t p, int n) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> c(static_cast<std::size_t>(n), 0);
    while (true) {
        auto poly = c;
        poly.push_back(1);
        out.push_back(std::move(poly));
        std::size_t k = 0;
        while (k < c.size() && ++c[k] == p) {
            c[k++] = 0;
        }
        if (k == c.size()) {
            return out;
        }
    }
}

std::vector<std::uint32_t> mul_mod_p(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                     std::uint32_t p) {
    std::vector<std::uint32_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    return out;
}

}  // namespace

std::set<std::vector<std::uint32_t>> monic_irreducibles_mod_p(std::uint32_t p, int n) {
    const auto everything = all_monic(p, n);
    std::set<std::vector<std::uint32_t>> result(everything.begin(), everything.end());
    for (int a = 1; a <= n / 2; ++a) {
        for (const auto& f : all_monic(p, a)) {
            for (const auto& g : all_monic(p, n - a)) {
                result.erase(mul_mod_p(f, g, p));
            }
        }
    }
    return result;
}

std::int64_t count_points_y2_xy_x3_1(const FqField& field) {
    std::int64_t count = 1;
    for (std::uint32_t xc = 0; xc < static_cast<std::uint32_t>(field.q()); ++xc) {
        for (std::uint32_t yc = 0; yc < static_cast<std::uint32_t>(field.q()); ++yc) {
            const FqElem x = field.element(xc);
            const FqElem y = field.element(yc);
            if (y * y + x * y == x * x * x + field.one()) {
                ++count;
            }
        }
    }
    return count;
}

BigInt gl_order_by_rows(std::int64_t q, int r) {
    BigInt qr = 1;
    for (int k = 0; k < r; ++k) {
        qr *= q;
    }
    BigInt out = 1;
    BigInt qi = 1;
    for (int i = 0; i < r; ++i) {
        out *= qr - qi;
        qi *= q;
    }
    return out;
}

}  // namespace massform::oracle
