#include "qzeta/quasimodular.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qzeta {

QMExpression& QMExpression::add_term(const QMMonomial& m, const Rational& c) {
    if (c == 0) return *this;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

Rational QMExpression::coeff(const QMMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

long QMExpression::weight() const {
    long w = 0;
    for (const auto& [m, c] : terms_) w = std::max(w, qm_weight(m));
    return w;
}

PowerSeries QMExpression::eval(std::size_t order) const {
    PowerSeries out(order);
    if (terms_.empty()) return out;
    const PowerSeries z2 = okounkov_z({2}, order);
    const PowerSeries z4 = okounkov_z({4}, order);
    const PowerSeries z6 = okounkov_z({6}, order);
    for (const auto& [m, c] : terms_) {
        PowerSeries mono = PowerSeries::one(order);
        for (unsigned i = 0; i < m[0]; ++i) mono = mono * z2;
        for (unsigned i = 0; i < m[1]; ++i) mono = mono * z4;
        for (unsigned i = 0; i < m[2]; ++i) mono = mono * z6;
        add_scaled_shifted(out, mono, c, 0);
    }
    return out;
}

QMExpression& QMExpression::operator+=(const QMExpression& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

QMExpression& QMExpression::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

QMExpression operator*(const QMExpression& a, const QMExpression& b) {
    QMExpression out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
    return out;
}

std::string to_string(const QMExpression& e) {
    if (e.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::ostringstream sym;
        const unsigned gens[3] = {2, 4, 6};
        for (int i = 0; i < 3; ++i) {
            if (m[i] == 0) continue;
            if (sym.tellp() > 0) sym << "*";
            sym << "Z(" << gens[i] << ")";
            if (m[i] > 1) sym << "^" << m[i];
        }
        std::string symbol = sym.str();
        if (symbol.empty()) {
            out << rational_to_string(abs_c);
        } else {
            if (abs_c != 1) out << rational_to_string(abs_c) << "*";
            out << symbol;
        }
    }
    return out.str();
}

std::vector<std::pair<QMMonomial, PowerSeries>> qm_basis(long weight_bound, std::size_t order) {
    std::vector<QMMonomial> monomials;
    for (unsigned a = 0; 2L * a <= weight_bound; ++a)
        for (unsigned b = 0; 2L * a + 4L * b <= weight_bound; ++b)
            for (unsigned c = 0; 2L * a + 4L * b + 6L * c <= weight_bound; ++c)
                monomials.push_back({a, b, c});
    std::sort(monomials.begin(), monomials.end(), QMMonomialOrder{});

    const PowerSeries z2 = okounkov_z({2}, order);
    const PowerSeries z4 = okounkov_z({4}, order);
    const PowerSeries z6 = okounkov_z({6}, order);
    std::vector<std::pair<QMMonomial, PowerSeries>> out;
    out.reserve(monomials.size());
    for (const QMMonomial& m : monomials) {
        PowerSeries mono = PowerSeries::one(order);
        for (unsigned i = 0; i < m[0]; ++i) mono = mono * z2;
        for (unsigned i = 0; i < m[1]; ++i) mono = mono * z4;
        for (unsigned i = 0; i < m[2]; ++i) mono = mono * z6;
        out.emplace_back(m, std::move(mono));
    }
    return out;
}

RecognitionResult qm_recognize_with_basis(
    const PowerSeries& f, const std::vector<std::pair<QMMonomial, PowerSeries>>& basis,
    std::size_t fit_count, std::size_t verify_count) {
    const std::size_t m = basis.size();
    if (fit_count < m)
        throw std::invalid_argument("fit_count must be at least the number of basis monomials");
    const std::size_t window = fit_count + verify_count;
    if (f.order() + 1 < window || window == 0)
        throw std::invalid_argument("series order too small for fit + verify windows");
    for (const auto& [mono, series] : basis)
        if (series.order() + 1 < window)
            throw std::invalid_argument("basis series order too small for fit + verify windows");

    // Row-reduce the fit_count x m system A x = f over the rationals.
    std::vector<std::vector<Rational>> rows(fit_count, std::vector<Rational>(m + 1));
    for (std::size_t r = 0; r < fit_count; ++r) {
        for (std::size_t c = 0; c < m; ++c) rows[r][c] = basis[c].second.coeff(r);
        rows[r][m] = f.coeff(r);
    }
    std::vector<long> pivot_of_col(m, -1);
    bool inconsistent = false;
    std::size_t rank = 0;
    for (std::size_t r = 0; r < fit_count; ++r) {
        // eliminate known pivots
        for (std::size_t c = 0; c < m; ++c) {
            if (pivot_of_col[c] < 0 || rows[r][c] == 0) continue;
            const auto& p = rows[static_cast<std::size_t>(pivot_of_col[c])];
            Rational factor = rows[r][c];
            for (std::size_t k = c; k <= m; ++k) rows[r][k] -= factor * p[k];
        }
        std::size_t lead = 0;
        while (lead < m && rows[r][lead] == 0) ++lead;
        if (lead == m) {
            if (rows[r][m] != 0) inconsistent = true;
            continue;
        }
        // normalize
        Rational inv = 1 / rows[r][lead];
        for (std::size_t k = lead; k <= m; ++k) rows[r][k] *= inv;
        pivot_of_col[lead] = static_cast<long>(r);
        ++rank;
    }

    if (!inconsistent && rank < m) {
        RecognitionResult res;
        res.status = RecognitionResult::Status::Ambiguous;
        res.message = "ambiguous - increase fit_count";
        return res;
    }

    // Back-substitute; free columns (only possible here when inconsistent) get 0.
    std::vector<Rational> x(m);
    for (std::size_t c = m; c-- > 0;) {
        if (pivot_of_col[c] < 0) continue;
        const auto& p = rows[static_cast<std::size_t>(pivot_of_col[c])];
        Rational v = p[m];
        for (std::size_t k = c + 1; k < m; ++k)
            if (p[k] != 0) v -= p[k] * x[k];
        x[c] = v;
    }

    // Verify the candidate over the whole fit + verify window.
    for (std::size_t k = 0; k < window; ++k) {
        Rational lhs = 0;
        for (std::size_t c = 0; c < m; ++c) {
            if (x[c] == 0) continue;
            lhs += x[c] * basis[c].second.coeff(k);
        }
        if (lhs != f.coeff(k)) {
            RecognitionResult res;
            res.status = RecognitionResult::Status::Mismatch;
            res.mismatch_index = k;
            std::ostringstream msg;
            msg << "no combination matches: first mismatch at q^" << k;
            res.message = msg.str();
            return res;
        }
    }

    QMExpression expr;
    for (std::size_t c = 0; c < m; ++c) expr.add_term(basis[c].first, x[c]);
    RecognitionResult res;
    res.status = RecognitionResult::Status::Ok;
    res.expression = std::move(expr);
    return res;
}

RecognitionResult qm_recognize(const PowerSeries& f, long weight_bound, std::size_t fit_count,
                               std::size_t verify_count) {
    if (f.order() < fit_count + verify_count)
        throw std::invalid_argument("series order must be at least fit_count + verify_count");
    return qm_recognize_with_basis(f, qm_basis(weight_bound, fit_count + verify_count - 1),
                                   fit_count, verify_count);
}

}  // namespace qzeta
