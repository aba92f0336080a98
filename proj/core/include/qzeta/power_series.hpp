#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qzeta/rational.hpp"

namespace qzeta {

/// Truncated formal power series in q over the rationals.
///
/// A series of order N stores the N+1 coefficients of q^0 .. q^N exactly.
/// Binary operations truncate to the smaller operand order, so the result
/// order always states how far the value is trustworthy. Two series are
/// only ever compared through equal_to_order(), which makes the comparison
/// order explicit.
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}

    static PowerSeries constant(const Rational& c, std::size_t order) {
        PowerSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    static PowerSeries one(std::size_t order) { return constant(Rational(1), order); }

    static PowerSeries monomial(std::size_t k, const Rational& c, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }

    const Rational& coeff(std::size_t k) const;
    void set_coeff(std::size_t k, Rational c);
    void add_to_coeff(std::size_t k, const Rational& c);

    bool is_zero() const;

    /// Copy truncated to a smaller (or equal) order.
    PowerSeries truncated(std::size_t new_order) const;

    /// Multiplication by q^k; coefficients beyond the order are dropped.
    PowerSeries shifted(std::size_t k) const;

    PowerSeries operator-() const;
    PowerSeries& operator+=(const PowerSeries& rhs);
    PowerSeries& operator-=(const PowerSeries& rhs);
    PowerSeries& operator*=(const Rational& c);

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const Rational& c, const PowerSeries& a);

private:
    std::vector<Rational> coeffs_;
};

/// Cauchy product truncated at `order` (which must not exceed either input).
PowerSeries mul_truncated(const PowerSeries& a, const PowerSeries& b, std::size_t order);

/// dst += c * q^shift * src, in place; coefficients beyond dst's order drop.
void add_scaled_shifted(PowerSeries& dst, const PowerSeries& src, const Rational& c,
                        std::size_t shift);

/// Multiplicative inverse; requires a nonzero constant term.
PowerSeries inverse(const PowerSeries& a);

/// Integer power, negative exponents via inverse(). f^0 == 1.
PowerSeries int_pow(const PowerSeries& a, long e);

/// prod_{i=1}^{N} (1 - q^i) at order N; factors with i > N cannot matter.
PowerSeries euler_product(std::size_t order);

/// The operator q d/dq: c_k -> k c_k.
PowerSeries q_derivative(const PowerSeries& a);

/// 1 / (1 - q^n)^e at the given order, expanded directly from binomials.
PowerSeries geometric_inv_pow(std::size_t n, unsigned e, std::size_t order);

/// Coefficientwise equality of q^0 .. q^N; both operands must have order >= N.
bool equal_to_order(const PowerSeries& a, const PowerSeries& b, std::size_t n);

/// Index of the first coefficient (<= N) where the two differ, or -1 if none.
long first_difference(const PowerSeries& a, const PowerSeries& b, std::size_t n);

/// Human-readable rendering, e.g. "1 - q + 2*q^3 + O(q^6)".
std::string to_string(const PowerSeries& s);

}  // namespace qzeta
