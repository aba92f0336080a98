#include "qzeta/power_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qzeta {

PowerSeries PowerSeries::monomial(std::size_t k, const Rational& c, std::size_t order) {
    PowerSeries s(order);
    if (k <= order) s.coeffs_[k] = c;
    return s;
}

const Rational& PowerSeries::coeff(std::size_t k) const {
    if (k >= coeffs_.size()) throw std::out_of_range("coefficient index exceeds series order");
    return coeffs_[k];
}

void PowerSeries::set_coeff(std::size_t k, Rational c) {
    if (k >= coeffs_.size()) throw std::out_of_range("coefficient index exceeds series order");
    coeffs_[k] = std::move(c);
}

void PowerSeries::add_to_coeff(std::size_t k, const Rational& c) {
    if (k >= coeffs_.size()) throw std::out_of_range("coefficient index exceeds series order");
    coeffs_[k] += c;
}

bool PowerSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

PowerSeries PowerSeries::truncated(std::size_t new_order) const {
    if (new_order >= coeffs_.size()) throw std::invalid_argument("truncation cannot raise the order");
    PowerSeries s(new_order);
    std::copy(coeffs_.begin(), coeffs_.begin() + new_order + 1, s.coeffs_.begin());
    return s;
}

PowerSeries PowerSeries::shifted(std::size_t k) const {
    PowerSeries s(order());
    for (std::size_t i = 0; i + k <= order(); ++i) s.coeffs_[i + k] = coeffs_[i];
    return s;
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries s(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) s.coeffs_[i] = -coeffs_[i];
    return s;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
    if (rhs.order() < order()) coeffs_.resize(rhs.order() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
    if (rhs.order() < order()) coeffs_.resize(rhs.order() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries s(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return s;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries s(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) s.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return s;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    return mul_truncated(a, b, std::min(a.order(), b.order()));
}

PowerSeries operator*(const Rational& c, const PowerSeries& a) {
    PowerSeries s(a);
    s *= c;
    return s;
}

PowerSeries mul_truncated(const PowerSeries& a, const PowerSeries& b, std::size_t order) {
    if (order > a.order() || order > b.order())
        throw std::invalid_argument("mul_truncated order exceeds an operand order");
    PowerSeries s(order);
    mpq_class t;
    for (std::size_t i = 0; i <= order; ++i) {
        const Rational& ai = a.coeff(i);
        if (ai == 0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            const Rational& bj = b.coeff(j);
            if (bj == 0) continue;
            t = ai * bj;
            s.add_to_coeff(i + j, t);
        }
    }
    return s;
}

void add_scaled_shifted(PowerSeries& dst, const PowerSeries& src, const Rational& c,
                        std::size_t shift) {
    if (c == 0) return;
    mpq_class t;
    for (std::size_t i = 0; i + shift <= dst.order() && i <= src.order(); ++i) {
        const Rational& si = src.coeff(i);
        if (si == 0) continue;
        t = c * si;
        dst.add_to_coeff(i + shift, t);
    }
}

PowerSeries inverse(const PowerSeries& a) {
    if (a.coeff(0) == 0) throw std::domain_error("non-unit series: constant term is zero");
    const std::size_t n = a.order();
    PowerSeries b(n);
    Rational c0inv = 1 / a.coeff(0);
    b.set_coeff(0, c0inv);
    // b_k = -1/a_0 * sum_{j=1}^{k} a_j b_{k-j}
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (a.coeff(j) == 0) continue;
            acc += a.coeff(j) * b.coeff(k - j);
        }
        b.set_coeff(k, -c0inv * acc);
    }
    return b;
}

PowerSeries int_pow(const PowerSeries& a, long e) {
    if (e < 0) return int_pow(inverse(a), -e);
    PowerSeries acc = PowerSeries::one(a.order());
    PowerSeries base = a;
    unsigned long r = static_cast<unsigned long>(e);
    while (r > 0) {
        if (r & 1u) acc = acc * base;
        r >>= 1u;
        if (r > 0) base = base * base;
    }
    return acc;
}

PowerSeries euler_product(std::size_t order) {
    PowerSeries p = PowerSeries::one(order);
    for (std::size_t i = 1; i <= order; ++i) {
        // multiply by (1 - q^i) in place
        PowerSeries next(p);
        add_scaled_shifted(next, p, Rational(-1), i);
        p = std::move(next);
    }
    return p;
}

PowerSeries q_derivative(const PowerSeries& a) {
    PowerSeries s(a.order());
    for (std::size_t k = 1; k <= a.order(); ++k) {
        if (a.coeff(k) == 0) continue;
        s.set_coeff(k, Rational(static_cast<long>(k)) * a.coeff(k));
    }
    return s;
}

PowerSeries geometric_inv_pow(std::size_t n, unsigned e, std::size_t order) {
    if (n == 0) throw std::invalid_argument("geometric_inv_pow requires n >= 1");
    PowerSeries s(order);
    if (e == 0) {
        s.set_coeff(0, Rational(1));
        return s;
    }
    // (1 - x)^{-e} = sum_d C(d+e-1, e-1) x^d with x = q^n
    for (std::size_t d = 0; n * d <= order; ++d) {
        s.set_coeff(n * d, Rational(binomial(d + e - 1, e - 1)));
    }
    return s;
}

bool equal_to_order(const PowerSeries& a, const PowerSeries& b, std::size_t n) {
    return first_difference(a, b, n) < 0;
}

long first_difference(const PowerSeries& a, const PowerSeries& b, std::size_t n) {
    if (a.order() < n || b.order() < n)
        throw std::invalid_argument("comparison order exceeds a series order");
    for (std::size_t k = 0; k <= n; ++k)
        if (a.coeff(k) != b.coeff(k)) return static_cast<long>(k);
    return -1;
}

std::string to_string(const PowerSeries& s) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k <= s.order(); ++k) {
        const Rational& c = s.coeff(k);
        if (c == 0) continue;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unit = (abs_c == 1);
        if (k == 0) {
            out << rational_to_string(abs_c);
        } else {
            if (!unit) out << rational_to_string(abs_c) << "*";
            out << "q";
            if (k > 1) out << "^" << k;
        }
    }
    if (first) out << "0";
    out << " + O(q^" << s.order() + 1 << ")";
    return out.str();
}

}  // namespace qzeta
