#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qzeta/power_series.hpp"
#include "qzeta/qzv.hpp"

namespace qzeta {

/// Exponent triple (a, b, c) of a monomial Z(2)^a Z(4)^b Z(6)^c.
using QMMonomial = std::array<unsigned, 3>;

inline long qm_weight(const QMMonomial& m) { return 2L * m[0] + 4L * m[1] + 6L * m[2]; }

/// Orders monomials by weight, then lexicographically on (a, b, c).
struct QMMonomialOrder {
    bool operator()(const QMMonomial& x, const QMMonomial& y) const {
        const long wx = qm_weight(x), wy = qm_weight(y);
        if (wx != wy) return wx < wy;
        return x < y;
    }
};

/// Element of the polynomial ring in Z(2), Z(4), Z(6): a finite rational
/// combination of exponent triples. The (0,0,0) entry is the constant term.
/// Zero coefficients are never stored.
class QMExpression {
public:
    QMExpression() = default;

    QMExpression& add_term(const QMMonomial& m, const Rational& c);
    Rational coeff(const QMMonomial& m) const;
    const std::map<QMMonomial, Rational, QMMonomialOrder>& terms() const { return terms_; }
    Rational constant() const { return coeff({0, 0, 0}); }
    bool is_zero() const { return terms_.empty(); }

    /// Largest monomial weight present (0 for the zero or constant expression).
    long weight() const;

    PowerSeries eval(std::size_t order) const;

    QMExpression& operator+=(const QMExpression& rhs);
    QMExpression& operator*=(const Rational& c);
    friend QMExpression operator*(const QMExpression& a, const QMExpression& b);
    friend bool operator==(const QMExpression& a, const QMExpression& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<QMMonomial, Rational, QMMonomialOrder> terms_;
};

std::string to_string(const QMExpression& e);

/// All monomials Z(2)^a Z(4)^b Z(6)^c of weight 2a+4b+6c <= weight_bound,
/// each expanded at `order`, in the deterministic graded-lex order.
std::vector<std::pair<QMMonomial, PowerSeries>> qm_basis(long weight_bound, std::size_t order);

struct RecognitionResult {
    enum class Status { Ok, Mismatch, Ambiguous };
    Status status = Status::Ok;
    std::optional<QMExpression> expression;  // present iff status == Ok
    /// For Mismatch: the first coefficient index where the best candidate
    /// disagrees with the input.
    std::size_t mismatch_index = 0;
    std::string message;
};

/// Fit an exact linear combination of the weight-bounded monomial basis
/// against coefficients q^0 .. q^{fit_count-1} of f, then verify the fit on
/// the next verify_count coefficients. A consistent but underdetermined fit
/// reports Ambiguous rather than picking a representative.
RecognitionResult qm_recognize(const PowerSeries& f, long weight_bound, std::size_t fit_count,
                               std::size_t verify_count);

/// Same solver against an explicit basis; qm_recognize() wraps this with
/// qm_basis(). Exposed for tests that need a degenerate basis.
RecognitionResult qm_recognize_with_basis(
    const PowerSeries& f, const std::vector<std::pair<QMMonomial, PowerSeries>>& basis,
    std::size_t fit_count, std::size_t verify_count);

}  // namespace qzeta
