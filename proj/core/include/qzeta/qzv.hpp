#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qzeta/polynomial.hpp"
#include "qzeta/power_series.hpp"

namespace qzeta {

/// Index (s_1, ..., s_l) of a multiple q-zeta value or bracket series.
/// The empty composition is allowed and indexes the constant series 1.
using Composition = std::vector<int>;

long weight(const Composition& comp);

/// Orders compositions by weight, then lexicographically; keeps the term
/// order of combinations (and their serialized form) deterministic.
struct CompositionOrder {
    bool operator()(const Composition& a, const Composition& b) const {
        const long wa = weight(a), wb = weight(b);
        if (wa != wb) return wa < wb;
        return a < b;
    }
};

/// Numerator polynomial t P_{s-1}(t) of the generating identity
/// t P_{s-1}(t) / (1-t)^s = sum_{d>=1} d^{s-1} t^d, obtained by multiplying
/// the truncated right side by (1-t)^s; the product is exact up to degree s.
PolynomialQ eulerian_numerator(int s);

enum class QFamily { Eulerian, Okounkov };

/// Q_s^E(t) = t P_{s-1}(t) / (s-1)!   (s >= 1), or
/// Q_s^O(t) = t^{s/2} for even s >= 2, t^{(s-1)/2} (t+1) for odd s >= 3.
PolynomialQ q_poly(QFamily family, int s);

/// The nested sum over n_1 > ... > n_l >= 1 of prod Q_{s_i}(q^{n_i}) / (1-q^{n_i})^{s_i},
/// truncated at `order`. Requires Q_s(0) = 0 so that every term with n_1 > order
/// vanishes; the empty composition yields 1.
PowerSeries z_generic(const std::function<PolynomialQ(int)>& family, const Composition& comp,
                      std::size_t order);

/// Bracket series built from the Eulerian family (all s_i >= 1). Every call
/// also evaluates the equivalent multi-index divisor sum and verifies the
/// two code paths agree before returning.
PowerSeries bracket(const Composition& comp, std::size_t order);

/// The multi-index form: 1/prod (s_i-1)! * sum over n_1 > ... > n_l >= 1 and
/// d_i >= 1 of prod d_i^{s_i - 1} q^{sum n_i d_i}. Pure integer enumeration,
/// no series multiplication; exposed so tests can exercise it directly.
PowerSeries bracket_multi_index(const Composition& comp, std::size_t order);

/// Okounkov's multiple q-zeta value Z(s_1, ..., s_l); every s_i must be >= 2.
PowerSeries okounkov_z(const Composition& comp, std::size_t order);

/// Eisenstein series G_{2k} = 1/(2k-1)! * ( -B_{2k}/(4k) + sum_n sigma_{2k-1}(n) q^n ).
PowerSeries eisenstein(int two_k, std::size_t order);

/// Finite rational combination  constant + sum_i c_i Z(comp_i)  of Okounkov
/// series; every stored composition obeys the s_i >= 2 constraint.
class QZetaCombination {
public:
    QZetaCombination() = default;
    explicit QZetaCombination(Rational constant) : constant_(std::move(constant)) {}

    static QZetaCombination z(const Composition& comp, const Rational& c = Rational(1));
    /// Z(2)^2 expressed in the composition basis: Z(4) + 2 Z(2,2).
    static QZetaCombination z2_squared(const Rational& c = Rational(1));

    QZetaCombination& add_constant(const Rational& c);
    QZetaCombination& add_term(const Composition& comp, const Rational& c);

    const Rational& constant() const { return constant_; }
    const std::map<Composition, Rational, CompositionOrder>& terms() const { return terms_; }
    bool is_zero() const { return constant_ == 0 && terms_.empty(); }

    PowerSeries eval(std::size_t order) const;

    QZetaCombination& operator+=(const QZetaCombination& rhs);
    QZetaCombination& operator*=(const Rational& c);
    friend QZetaCombination operator+(QZetaCombination a, const QZetaCombination& b) {
        a += b;
        return a;
    }
    friend QZetaCombination operator*(const Rational& c, QZetaCombination a) {
        a *= c;
        return a;
    }
    friend bool operator==(const QZetaCombination& a, const QZetaCombination& b) {
        return a.constant_ == b.constant_ && a.terms_ == b.terms_;
    }

private:
    std::map<Composition, Rational, CompositionOrder> terms_;
    Rational constant_ = 0;
};

std::string to_string(const QZetaCombination& c);

}  // namespace qzeta
