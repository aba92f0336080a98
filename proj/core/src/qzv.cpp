#include "qzeta/qzv.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qzeta/bernoulli.hpp"

namespace qzeta {

long weight(const Composition& comp) {
    long w = 0;
    for (int s : comp) w += s;
    return w;
}

PolynomialQ eulerian_numerator(int s) {
    if (s < 1) throw std::invalid_argument("eulerian_numerator requires s >= 1");
    const std::size_t deg = static_cast<std::size_t>(s);
    // (1 - t)^s, exact
    std::vector<Rational> one_minus_t_pow(deg + 1);
    for (std::size_t j = 0; j <= deg; ++j) {
        Rational c(binomial(deg, j));
        if (j % 2 == 1) c = -c;
        one_minus_t_pow[j] = c;
    }
    // sum_{d=1}^{s} d^{s-1} t^d; terms with d > s only touch degrees > s
    std::vector<Rational> rhs(deg + 1);
    for (std::size_t d = 1; d <= deg; ++d) rhs[d] = Rational(int_pow(static_cast<long>(d), deg - 1));
    std::vector<Rational> prod(deg + 1);
    for (std::size_t i = 0; i <= deg; ++i) {
        if (one_minus_t_pow[i] == 0) continue;
        for (std::size_t j = 0; i + j <= deg; ++j) prod[i + j] += one_minus_t_pow[i] * rhs[j];
    }
    PolynomialQ r{std::move(prod)};
    if (r.is_zero() || r.coeff(0) != 0) throw std::logic_error("eulerian numerator must vanish at t=0");
    return r;
}

PolynomialQ q_poly(QFamily family, int s) {
    if (family == QFamily::Eulerian) {
        if (s < 1) throw std::invalid_argument("Eulerian family requires s >= 1");
        PolynomialQ p = eulerian_numerator(s);
        p *= Rational(1) / Rational(factorial(static_cast<unsigned long>(s - 1)));
        return p;
    }
    if (s < 2) throw std::invalid_argument("Okounkov family requires s >= 2");
    if (s % 2 == 0) return PolynomialQ::monomial(static_cast<std::size_t>(s / 2), Rational(1));
    // t^{(s-1)/2} (t + 1)
    PolynomialQ t_plus_1({Rational(1), Rational(1)});
    return PolynomialQ::monomial(static_cast<std::size_t>((s - 1) / 2), Rational(1)) * t_plus_1;
}

PowerSeries z_generic(const std::function<PolynomialQ(int)>& family, const Composition& comp,
                      std::size_t order) {
    PowerSeries result(order);
    const std::size_t l = comp.size();
    if (l == 0) {
        result.set_coeff(0, Rational(1));
        return result;
    }
    std::vector<PolynomialQ> polys;
    std::vector<std::size_t> low_power;
    polys.reserve(l);
    for (int s : comp) {
        if (s < 1) throw std::invalid_argument("nested-sum entries must be positive");
        PolynomialQ p = family(s);
        if (p.is_zero() || p.coeff(0) != 0)
            throw std::domain_error("z_generic requires Q_s(0) = 0 for every entry");
        std::size_t low = 1;
        while (p.coeff(low) == 0) ++low;
        polys.push_back(std::move(p));
        low_power.push_back(low);
    }

    std::map<std::pair<std::size_t, std::size_t>, PowerSeries> cache;
    auto reduced_factor = [&](std::size_t i, std::size_t n) -> const PowerSeries& {
        auto key = std::make_pair(i, n);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        // Q_{s_i}(q^n) / (1-q^n)^{s_i}, divided by q^{n*low_i}, at full order.
        const PolynomialQ& poly = polys[i];
        const std::size_t v = n * low_power[i];
        PowerSeries numer(order);
        for (std::size_t k = low_power[i]; k <= poly.degree(); ++k) {
            if (poly.coeff(k) == 0) continue;
            const std::size_t e = n * k - v;
            if (e > order) break;
            numer.add_to_coeff(e, poly.coeff(k));
        }
        PowerSeries factor =
            numer * geometric_inv_pow(n, static_cast<unsigned>(comp[i]), order);
        return cache.emplace(key, std::move(factor)).first->second;
    };

    // Minimal total valuation of positions i..l-1 when position i-1 chose n:
    // the n_j are strictly decreasing, so position i can contribute at least
    // low_power[i] * (remaining chain minimum).
    std::vector<std::size_t> min_tail(l + 1, 0);
    for (std::size_t i = l; i-- > 0;) {
        // chain minimum for position i when every later position also takes its minimum:
        // n_i >= l - i.
        min_tail[i] = min_tail[i + 1] + low_power[i] * (l - i);
    }

    // Depth-first over decreasing chains, carrying the partial product divided
    // by q^{val_so_far}.
    std::function<void(std::size_t, std::size_t, std::size_t, const PowerSeries*)> descend =
        [&](std::size_t i, std::size_t prev_n, std::size_t val_so_far, const PowerSeries* partial) {
            const std::size_t remaining_after = min_tail[i + 1];
            for (std::size_t n = l - i; n < prev_n; ++n) {
                const std::size_t v = n * low_power[i];
                if (val_so_far + v + remaining_after > order) break;
                const std::size_t val_next = val_so_far + v;
                const PowerSeries& f = reduced_factor(i, n);
                if (i + 1 == l) {
                    if (partial == nullptr) {
                        add_scaled_shifted(result, f, Rational(1), val_next);
                    } else {
                        PowerSeries term = mul_truncated(*partial, f, order - val_next);
                        add_scaled_shifted(result, term, Rational(1), val_next);
                    }
                } else {
                    PowerSeries next =
                        partial == nullptr
                            ? f.truncated(order - val_next)
                            : mul_truncated(*partial, f, order - val_next);
                    descend(i + 1, n, val_next, &next);
                }
            }
        };
    descend(0, order + 1, 0, nullptr);
    return result;
}

PowerSeries bracket_multi_index(const Composition& comp, std::size_t order) {
    for (int s : comp)
        if (s < 1) throw std::invalid_argument("bracket requires every s_i >= 1");
    const std::size_t l = comp.size();
    PowerSeries result(order);
    if (l == 0) {
        result.set_coeff(0, Rational(1));
        return result;
    }
    // Integer accumulation of sum prod d_i^{s_i-1} q^{sum n_i d_i}; the
    // rational prefactor 1/prod (s_i-1)! is applied once at the end.
    std::vector<Integer> acc(order + 1);
    // Minimal exponent the tail i..l-1 must still spend: n_i d_i >= n_i >= l-i.
    std::vector<std::size_t> tail_min(l + 1, 0);
    for (std::size_t i = l; i-- > 0;) tail_min[i] = tail_min[i + 1] + (l - i);

    std::function<void(std::size_t, std::size_t, std::size_t, const Integer&)> descend =
        [&](std::size_t i, std::size_t prev_n, std::size_t exp_so_far, const Integer& prod) {
            for (std::size_t n = l - i; n < prev_n; ++n) {
                if (exp_so_far + n + tail_min[i + 1] > order) break;
                for (std::size_t d = 1; exp_so_far + n * d + tail_min[i + 1] <= order; ++d) {
                    Integer next = prod * int_pow(static_cast<long>(d),
                                                  static_cast<unsigned long>(comp[i] - 1));
                    const std::size_t e = exp_so_far + n * d;
                    if (i + 1 == l) {
                        acc[e] += next;
                    } else {
                        descend(i + 1, n, e, next);
                    }
                }
            }
        };
    descend(0, order + 1, 0, Integer(1));

    Integer denom(1);
    for (int s : comp) denom *= factorial(static_cast<unsigned long>(s - 1));
    for (std::size_t k = 0; k <= order; ++k) {
        if (acc[k] == 0) continue;
        Rational c(acc[k], denom);
        c.canonicalize();
        result.set_coeff(k, c);
    }
    return result;
}

PowerSeries bracket(const Composition& comp, std::size_t order) {
    for (int s : comp)
        if (s < 1) throw std::invalid_argument("bracket requires every s_i >= 1");
    PowerSeries by_polys =
        z_generic([](int s) { return q_poly(QFamily::Eulerian, s); }, comp, order);
    PowerSeries by_divisors = bracket_multi_index(comp, order);
    long diff = first_difference(by_polys, by_divisors, order);
    if (diff >= 0) {
        std::ostringstream msg;
        msg << "bracket self-check failed at q^" << diff << " for composition (";
        for (std::size_t i = 0; i < comp.size(); ++i) msg << (i ? "," : "") << comp[i];
        msg << ")";
        throw std::logic_error(msg.str());
    }
    return by_polys;
}

PowerSeries okounkov_z(const Composition& comp, std::size_t order) {
    for (int s : comp)
        if (s < 2) throw std::invalid_argument("Okounkov series requires every s_i >= 2");
    return z_generic([](int s) { return q_poly(QFamily::Okounkov, s); }, comp, order);
}

PowerSeries eisenstein(int two_k, std::size_t order) {
    if (two_k < 2 || two_k % 2 != 0)
        throw std::invalid_argument("Eisenstein index must be a positive even integer");
    const std::size_t k = static_cast<std::size_t>(two_k) / 2;
    std::vector<Rational> b = bernoulli_numbers(static_cast<std::size_t>(two_k));
    PowerSeries s(order);
    s.set_coeff(0, -b[static_cast<std::size_t>(two_k)] / Rational(static_cast<long>(4 * k)));
    // sigma_{2k-1}(n) summed as sum_{m, d >= 1, md <= order} d^{2k-1} q^{md}
    for (std::size_t d = 1; d <= order; ++d) {
        Rational dk(int_pow(static_cast<long>(d), static_cast<unsigned long>(two_k - 1)));
        for (std::size_t m = 1; m * d <= order; ++m) s.add_to_coeff(m * d, dk);
    }
    Rational pre = Rational(1) / Rational(factorial(static_cast<unsigned long>(two_k - 1)));
    s *= pre;
    return s;
}

QZetaCombination QZetaCombination::z(const Composition& comp, const Rational& c) {
    QZetaCombination r;
    r.add_term(comp, c);
    return r;
}

QZetaCombination QZetaCombination::z2_squared(const Rational& c) {
    QZetaCombination r;
    r.add_term({4}, c);
    r.add_term({2, 2}, Rational(2) * c);
    return r;
}

QZetaCombination& QZetaCombination::add_constant(const Rational& c) {
    constant_ += c;
    return *this;
}

QZetaCombination& QZetaCombination::add_term(const Composition& comp, const Rational& c) {
    if (comp.empty()) return add_constant(c);
    for (int s : comp)
        if (s < 2) throw std::invalid_argument("combination terms must have every s_i >= 2");
    auto it = terms_.find(comp);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(comp, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

PowerSeries QZetaCombination::eval(std::size_t order) const {
    PowerSeries s = PowerSeries::constant(constant_, order);
    for (const auto& [comp, c] : terms_) {
        PowerSeries z = okounkov_z(comp, order);
        add_scaled_shifted(s, z, c, 0);
    }
    return s;
}

QZetaCombination& QZetaCombination::operator+=(const QZetaCombination& rhs) {
    constant_ += rhs.constant_;
    for (const auto& [comp, c] : rhs.terms_) add_term(comp, c);
    return *this;
}

QZetaCombination& QZetaCombination::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        constant_ = 0;
        return *this;
    }
    constant_ *= c;
    for (auto& [comp, coeff] : terms_) coeff *= c;
    return *this;
}

std::string to_string(const QZetaCombination& comb) {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const Rational& c, const std::string& symbol) {
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (symbol.empty()) {
            out << rational_to_string(abs_c);
        } else {
            if (abs_c != 1) out << rational_to_string(abs_c) << "*";
            out << symbol;
        }
    };
    if (comb.constant() != 0) emit(comb.constant(), "");
    for (const auto& [comp, c] : comb.terms()) {
        std::ostringstream sym;
        sym << "Z(";
        for (std::size_t i = 0; i < comp.size(); ++i) sym << (i ? "," : "") << comp[i];
        sym << ")";
        emit(c, sym.str());
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace qzeta
