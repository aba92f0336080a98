#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qzeta/power_series.hpp"
#include "qzeta/rational.hpp"

namespace qzeta {

/// Univariate polynomial in t over the rationals, dense, trailing zeros
/// trimmed so degree() is well-defined for nonzero polynomials.
class PolynomialQ {
public:
    PolynomialQ() = default;
    explicit PolynomialQ(std::vector<Rational> coeffs);

    static PolynomialQ zero() { return PolynomialQ(); }
    static PolynomialQ monomial(std::size_t k, const Rational& c);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of a nonzero polynomial; calling this on zero is an error.
    std::size_t degree() const;
    Rational coeff(std::size_t k) const;  // zero beyond the stored degree

    Rational eval(const Rational& t) const;

    /// Substitute t = q^n, truncated at `order`.
    PowerSeries eval_at_qn(std::size_t n, std::size_t order) const;

    PolynomialQ& operator*=(const Rational& c);
    friend PolynomialQ operator+(const PolynomialQ& a, const PolynomialQ& b);
    friend PolynomialQ operator*(const PolynomialQ& a, const PolynomialQ& b);
    friend bool operator==(const PolynomialQ& a, const PolynomialQ& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim();
    std::vector<Rational> coeffs_;  // coeffs_[k] multiplies t^k
};

std::string to_string(const PolynomialQ& p);

}  // namespace qzeta
