#include "qzeta/hilbert.hpp"

#include <sstream>
#include <stdexcept>

namespace qzeta {

namespace {

/// Lazily filled table of 1/(1-q^n)^e at a fixed order.
class InvPowTable {
public:
    explicit InvPowTable(std::size_t order) : order_(order) {}

    const PowerSeries& get(std::size_t n, unsigned e) {
        auto key = std::make_pair(n, e);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(key, geometric_inv_pow(n, e, order_)).first->second;
    }

    std::size_t order() const { return order_; }

private:
    std::size_t order_;
    std::map<std::pair<std::size_t, unsigned>, PowerSeries> cache_;
};

// Accumulate c * q^shift * prod_i 1/(1-q^{n_i})^{e_i} into dst, multiplying
// only up to the order that survives the shift.
void add_term(PowerSeries& dst, InvPowTable& table, const Rational& c, std::size_t shift,
              std::initializer_list<std::pair<std::size_t, unsigned>> factors) {
    if (c == 0 || shift > dst.order()) return;
    const std::size_t t = dst.order() - shift;
    PowerSeries acc = PowerSeries::one(t);
    for (const auto& [n, e] : factors) {
        if (e == 0) continue;
        acc = mul_truncated(acc, table.get(n, e), t);
    }
    add_scaled_shifted(dst, acc, c, shift);
}

PowerSeries s_n2_impl(InvPowTable& tab) {
    const std::size_t N = tab.order();
    PowerSeries out(N);
    for (std::size_t n = 1; n <= N; ++n)
        add_term(out, tab, rat(static_cast<long>(n * n) - 1, 12), n, {{n, 2}});
    return out;
}

PowerSeries s_2n1_impl(InvPowTable& tab) {
    const std::size_t N = tab.order();
    PowerSeries out(N);
    for (std::size_t n = 1; n <= N; ++n) {
        const long ln = static_cast<long>(n);
        add_term(out, tab, rat((ln - 1) * (2 * ln - 1), 12), n, {{n, 2}});
    }
    return out;
}

PowerSeries s_ij_impl(InvPowTable& tab) {
    const std::size_t N = tab.order();
    PowerSeries out(N);
    for (std::size_t i = 1; i + 1 <= N; ++i)
        for (std::size_t j = 1; i + j <= N; ++j)
            add_term(out, tab, rat(static_cast<long>(i + j) - 1, 2), i + j,
                     {{i, 1}, {j, 1}, {i + j, 1}});
    return out;
}

PowerSeries t_111_impl(InvPowTable& tab) {
    const std::size_t N = tab.order();
    PowerSeries out(N);
    for (std::size_t i = 1; i + 2 <= N; ++i)
        for (std::size_t j = 1; i + j + 1 <= N; ++j)
            for (std::size_t k = 1; i + j + k <= N; ++k)
                add_term(out, tab, Rational(1), i + j + k,
                         {{i, 1}, {j, 1}, {k, 1}, {i + j + k, 1}});
    return out;
}

PowerSeries t_22_impl(InvPowTable& tab) {
    const std::size_t N = tab.order();
    PowerSeries out(N);
    for (std::size_t s = 2; s <= N; ++s) {
        const std::size_t t = N - s;
        // sum over i+j = s of 1/((1-q^i)(1-q^j)), shared by both index pairs
        PowerSeries pair_sum(t);
        for (std::size_t i = 1; i < s; ++i) {
            PowerSeries prod = mul_truncated(tab.get(i, 1).truncated(t), tab.get(s - i, 1), t);
            pair_sum += prod;
        }
        add_scaled_shifted(out, mul_truncated(pair_sum, pair_sum, t), Rational(1), s);
    }
    return out;
}

PowerSeries e_mix_impl(InvPowTable& tab) {
    const std::size_t N = tab.order();
    PowerSeries out(N);
    for (std::size_t i = 2; i <= N; ++i)
        for (std::size_t j = 1; j < i && i + j <= N; ++j) {
            add_term(out, tab, Rational(static_cast<long>(i)), i + j, {{i, 1}, {j, 2}});
            add_term(out, tab, Rational(static_cast<long>(j)), i + j, {{j, 1}, {i, 2}});
        }
    for (std::size_t i = 1; 2 * i <= N; ++i)
        add_term(out, tab, Rational(static_cast<long>(i)), 2 * i, {{i, 3}});
    return out;
}

PowerSeries nm_impl(InvPowTable& tab) {
    const std::size_t N = tab.order();
    PowerSeries out(N);
    for (std::size_t n = 2; n <= N; ++n)
        for (std::size_t m = 1; m < n; ++m)
            add_term(out, tab, Rational(static_cast<long>(n)), n, {{n, 2}, {m, 1}});
    return out;
}

PowerSeries d1_impl(InvPowTable& tab) {
    const std::size_t N = tab.order();
    PowerSeries b1(N);
    for (std::size_t n = 1; n <= N; ++n) add_term(b1, tab, Rational(1), n, {{n, 1}});
    return q_derivative(b1);
}

}  // namespace

SumFamily sum_family_from_name(const std::string& name) {
    for (std::size_t i = 0; i < sum_family_names().size(); ++i)
        if (sum_family_names()[i] == name) return static_cast<SumFamily>(i);
    throw std::invalid_argument("unknown sum family: " + name);
}

const std::vector<std::string>& sum_family_names() {
    static const std::vector<std::string> names = {"S_n2", "S_2n1", "S_ij",  "T_111",
                                                   "T_22", "E_mix", "NM",    "D1"};
    return names;
}

PowerSeries sum_family(SumFamily which, std::size_t order) {
    if (order < 1) throw std::invalid_argument("sum_family requires order >= 1");
    InvPowTable tab(order);
    switch (which) {
        case SumFamily::S_n2: return s_n2_impl(tab);
        case SumFamily::S_2n1: return s_2n1_impl(tab);
        case SumFamily::S_ij: return s_ij_impl(tab);
        case SumFamily::T_111: return t_111_impl(tab);
        case SumFamily::T_22: return t_22_impl(tab);
        case SumFamily::E_mix: return e_mix_impl(tab);
        case SumFamily::NM: return nm_impl(tab);
        case SumFamily::D1: return d1_impl(tab);
    }
    throw std::invalid_argument("unknown sum family");
}

SumFamilyTable SumFamilyTable::compute(std::size_t order) {
    InvPowTable tab(order);
    return SumFamilyTable{s_n2_impl(tab), s_2n1_impl(tab), s_ij_impl(tab), t_111_impl(tab),
                          t_22_impl(tab), e_mix_impl(tab), nm_impl(tab),   d1_impl(tab)};
}

PowerSeries theta2(std::size_t order) {
    if (order < 2) throw std::invalid_argument("theta2 requires order >= 2");
    InvPowTable tab(order);
    PowerSeries out = rat(-1, 3) * t_111_impl(tab);
    add_scaled_shifted(out, t_22_impl(tab), rat(1, 4), 0);
    return out;
}

PowerSeries ordered_triple_sum(std::size_t order) {
    InvPowTable tab(order);
    PowerSeries out(order);
    for (std::size_t i = 1; i <= order; ++i)
        for (std::size_t j = 1; j <= i; ++j)
            for (std::size_t k = 1; k <= j && i + j + k <= order; ++k) {
                int reps = (i == j && j == k) ? 6 : ((i == j || j == k) ? 2 : 1);
                add_term(out, tab, rat(1, reps), i + j + k,
                         {{i, 1}, {j, 1}, {k, 1}, {i + j + k, 1}});
            }
    return out;
}

PowerSeries ordered_quadruple_sum(std::size_t order) {
    InvPowTable tab(order);
    PowerSeries out(order);
    for (std::size_t s = 2; s <= order; ++s)
        for (std::size_t j = 1; 2 * j <= s; ++j)       // i >= j, i + j = s
            for (std::size_t l = 1; 2 * l <= s; ++l) {  // k >= l, k + l = s
                const std::size_t i = s - j, k = s - l;
                int reps = (i == j ? 2 : 1) * (k == l ? 2 : 1);
                add_term(out, tab, rat(1, reps), s, {{i, 1}, {j, 1}, {k, 1}, {l, 1}});
            }
    return out;
}

PowerSeries goettsche_series(long chi, std::size_t order) {
    return int_pow(euler_product(order), -chi);
}

namespace {

/// <(1_X - K_X)^p, alpha> with classes above degree four vanishing.
Rational unit_minus_canonical_power_pairing(long p, const SurfacePairings& sp) {
    Rational acc = 0;
    for (long j = 0; j <= std::min(p, 2L); ++j) {
        Rational c(binomial(static_cast<unsigned long>(p), static_cast<unsigned long>(j)));
        if (j % 2 == 1) c = -c;
        const Rational& pairing = (j == 0 ? sp.pair_1 : (j == 1 ? sp.pair_K : sp.pair_K2));
        acc += c * pairing;
    }
    return acc;
}

}  // namespace

PowerSeries trace_closed_form_reduced(const GenPartition& lambda, const SurfacePairings& sp,
                                      std::size_t order) {
    if (order < 1) throw std::invalid_argument("trace_closed_form_reduced requires order >= 1");
    PowerSeries out(order);
    if (lambda.multiplicities().empty()) {
        out.set_coeff(0, sp.pair_1);
        return out;
    }
    InvPowTable tab(order);

    // Modes n with m_n = multiplicity of +n, mt_n = multiplicity of -n.
    std::vector<std::pair<std::size_t, std::pair<int, int>>> modes;  // (n, (m_n, mt_n))
    long positive_count = 0;
    for (const auto& [part, mult] : lambda.multiplicities()) {
        const std::size_t n = static_cast<std::size_t>(part < 0 ? -part : part);
        bool found = false;
        for (auto& [mn, ms] : modes)
            if (mn == n) {
                (part > 0 ? ms.first : ms.second) += mult;
                found = true;
            }
        if (!found) {
            modes.push_back({n, {part > 0 ? mult : 0, part < 0 ? mult : 0}});
        }
        if (part > 0) positive_count += mult;
    }

    // One normalized product term: prod_n (-1)^{m_n}/(m_n! mt_n!) q^{n m_n} (1-q^n)^{-(m_n+mt_n)}.
    auto product_term = [&](const std::vector<std::pair<std::size_t, std::pair<int, int>>>& mm)
        -> std::pair<Rational, PowerSeries> {
        Rational coeff = 1;
        std::size_t shift = 0;
        for (const auto& [n, ms] : mm) {
            const auto [m, mt] = ms;
            if (m % 2 == 1) coeff = -coeff;
            coeff /= Rational(factorial(static_cast<unsigned long>(m)) *
                              factorial(static_cast<unsigned long>(mt)));
            shift += n * static_cast<std::size_t>(m);
        }
        PowerSeries prod(order);
        if (shift <= order) {
            const std::size_t t = order - shift;
            PowerSeries acc = PowerSeries::one(t);
            for (const auto& [n, ms] : mm) {
                const unsigned e = static_cast<unsigned>(ms.first + ms.second);
                if (e == 0) continue;
                acc = mul_truncated(acc, tab.get(n, e), t);
            }
            add_scaled_shifted(prod, acc, Rational(1), shift);
        }
        return {coeff, std::move(prod)};
    };

    auto [c1, p1] = product_term(modes);
    add_scaled_shifted(out, p1, c1 * unit_minus_canonical_power_pairing(positive_count, sp), 0);

    if (sp.pair_e != 0) {
        for (std::size_t idx = 0; idx < modes.size(); ++idx) {
            const auto [n1, ms] = modes[idx];
            if (ms.first < 1 || ms.second < 1) continue;
            auto reduced = modes;
            reduced[idx].second.first -= 1;
            reduced[idx].second.second -= 1;
            auto [c2, p2] = product_term(reduced);
            // extra factor (-n1) q^{n1} / (1 - q^{n1})
            PowerSeries extra(order);
            add_term(extra, tab, Rational(-static_cast<long>(n1)), n1, {{n1, 1}});
            PowerSeries piece = extra * p2;
            add_scaled_shifted(out, piece, c2 * sp.pair_e, 0);
        }
    }
    return out;
}

PowerSeries f2_reduced_direct(const SurfacePairings& sp, std::size_t order) {
    if (order < 1) throw std::invalid_argument("f2_reduced_direct requires order >= 1");
    InvPowTable tab(order);
    PowerSeries out(order);

    add_scaled_shifted(out, s_n2_impl(tab), -sp.pair_e, 0);
    add_scaled_shifted(out, s_2n1_impl(tab), sp.pair_K2, 0);
    add_scaled_shifted(out, s_ij_impl(tab), sp.pair_K2 / 2, 0);

    const PowerSeries t111 = t_111_impl(tab);
    add_scaled_shifted(out, t111, rat(1, 6) * unit_minus_canonical_power_pairing(1, sp), 0);
    add_scaled_shifted(out, t111, rat(1, 6) * unit_minus_canonical_power_pairing(3, sp), 0);
    add_scaled_shifted(out, t_22_impl(tab),
                       rat(-1, 4) * unit_minus_canonical_power_pairing(2, sp), 0);
    add_scaled_shifted(out, e_mix_impl(tab), -sp.pair_e, 0);
    return out;
}

namespace {

/// c4 Z(4) + c22 Z(2)^2 + c3 Z(3) + c2 Z(2), with Z(2)^2 in the composition basis.
QZetaCombination coefficient_line(const Rational& c4, const Rational& c22, const Rational& c3,
                                  const Rational& c2) {
    QZetaCombination out;
    out.add_term({4}, c4);
    out += QZetaCombination::z2_squared(c22);
    out.add_term({3}, c3);
    out.add_term({2}, c2);
    return out;
}

}  // namespace

QZetaCombination f2_reduced_symbolic(const SurfacePairings& sp) {
    // The Euler-class line carries -(5/12) Z(4) - (5/6) Z(2)^2: this is the
    // value the direct sums and the Fock trace both produce; see
    // variant_e_line() for the rejected alternative.
    QZetaCombination out;
    out += sp.pair_e * coefficient_line(rat(-5, 12), rat(-5, 6), Rational(0), Rational(0));
    out += sp.pair_1 * coefficient_line(rat(1, 12), rat(-1, 3), Rational(0), Rational(0));
    out += sp.pair_K * coefficient_line(rat(-1, 6), rat(2, 3), Rational(0), Rational(0));
    out += sp.pair_K2 * coefficient_line(rat(13, 12), rat(-1, 3), rat(-1, 4), rat(1, 4));
    return out;
}

QZetaCombination variant_e_line() {
    return coefficient_line(rat(-7, 24), rat(-23, 24), Rational(0), Rational(0));
}

QZetaCombination f0_reduced(const SurfacePairings& sp) {
    return QZetaCombination::z({2}, sp.pair_1 - sp.pair_K + sp.pair_e);
}

QZetaCombination f1_reduced(const SurfacePairings& sp) {
    const Rational c = (sp.pair_K - sp.pair_K2) / 2;
    QZetaCombination out;
    out.add_term({3}, c);
    out.add_term({2}, -c);
    return out;
}

PowerSeries f1_middle_line_direct(std::size_t order) {
    InvPowTable tab(order);
    PowerSeries out(order);
    for (std::size_t m = 1; m <= order; ++m)
        add_term(out, tab, Rational(static_cast<long>(m) - 1), m, {{m, 2}});
    for (std::size_t m1 = 1; m1 + 1 <= order; ++m1)
        for (std::size_t m2 = 1; m1 + m2 <= order; ++m2)
            add_term(out, tab, Rational(1), m1 + m2, {{m1, 1}, {m2, 1}, {m1 + m2, 1}});
    return out;
}

QZetaCombination ch1_reduced(const SurfacePairings& surface) {
    if (!surface.K2 || !surface.KL)
        throw std::invalid_argument("ch1_reduced requires K2 and KL");
    QZetaCombination out = f1_reduced(SurfacePairings::alpha_unit(surface.chi, *surface.K2));
    out += f0_reduced(SurfacePairings::alpha_line(*surface.KL));
    return out;
}

QZetaCombination ch2_closed_form(long chi, long K2, long KL, long L2) {
    QZetaCombination out;
    out += Rational(chi) * coefficient_line(rat(-5, 12), rat(-5, 6), Rational(0), Rational(0));
    out.add_term({3}, rat(KL, 2));
    out.add_term({2}, rat(-KL, 2));
    out += Rational(K2) * coefficient_line(rat(13, 12), rat(-1, 3), rat(-1, 4), rat(1, 4));
    out.add_term({2}, rat(L2, 2));
    return out;
}

QZetaCombination ch2_reduced(const SurfacePairings& surface) {
    if (!surface.K2 || !surface.KL || !surface.L2)
        throw std::invalid_argument("ch2_reduced requires chi, K2, KL and L2");
    QZetaCombination assembled =
        f2_reduced_symbolic(SurfacePairings::alpha_unit(surface.chi, *surface.K2));
    assembled += f1_reduced(SurfacePairings::alpha_line(*surface.KL));
    assembled += f0_reduced(SurfacePairings::alpha_half_line_square(*surface.L2));

    QZetaCombination closed = ch2_closed_form(surface.chi, *surface.K2, *surface.KL, *surface.L2);
    if (!(assembled == closed))
        throw std::logic_error("ch2 assembly disagrees with its closed form");
    return assembled;
}

}  // namespace qzeta
