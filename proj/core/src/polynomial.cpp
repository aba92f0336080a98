#include "qzeta/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace qzeta {

PolynomialQ::PolynomialQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolynomialQ PolynomialQ::monomial(std::size_t k, const Rational& c) {
    if (c == 0) return PolynomialQ();
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return PolynomialQ(std::move(v));
}

std::size_t PolynomialQ::degree() const {
    if (coeffs_.empty()) throw std::domain_error("degree of the zero polynomial");
    return coeffs_.size() - 1;
}

Rational PolynomialQ::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational PolynomialQ::eval(const Rational& t) const {
    Rational acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k];
    return acc;
}

PowerSeries PolynomialQ::eval_at_qn(std::size_t n, std::size_t order) const {
    PowerSeries s(order);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        const std::size_t e = n * k;
        if (e > order) break;
        s.add_to_coeff(e, coeffs_[k]);
    }
    return s;
}

PolynomialQ& PolynomialQ::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

PolynomialQ operator+(const PolynomialQ& a, const PolynomialQ& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
    return PolynomialQ(std::move(v));
}

PolynomialQ operator*(const PolynomialQ& a, const PolynomialQ& b) {
    if (a.is_zero() || b.is_zero()) return PolynomialQ();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PolynomialQ(std::move(v));
}

void PolynomialQ::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string to_string(const PolynomialQ& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k <= p.degree(); ++k) {
        Rational c = p.coeff(k);
        if (c == 0) continue;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << rational_to_string(abs_c);
        } else {
            if (abs_c != 1) out << rational_to_string(abs_c) << "*";
            out << "t";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

}  // namespace qzeta
