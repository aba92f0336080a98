#include "qzeta/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "qzeta/fock.hpp"
#include "qzeta/hilbert.hpp"
#include "qzeta/power_series.hpp"
#include "qzeta/quasimodular.hpp"
#include "qzeta/qzv.hpp"

namespace qzeta {

namespace {

class Suite {
public:
    explicit Suite(const VerifyOptions& opts) : opts_(opts) {}

    void series_equal(const std::string& name, const PowerSeries& lhs, const PowerSeries& rhs,
                      std::size_t order, const std::string& detail = "") {
        PowerSeries probe = lhs;
        if (name == opts_.inject_fault) {
            const std::size_t k = std::min<std::size_t>(2, order);
            probe.add_to_coeff(k, Rational(1));
        }
        CheckResult r;
        r.name = name;
        r.first_fail_index = first_difference(probe, rhs, order);
        r.pass = r.first_fail_index < 0;
        r.detail = detail;
        if (!r.pass && detail.empty()) {
            std::ostringstream msg;
            msg << "differs at q^" << r.first_fail_index;
            r.detail = msg.str();
        }
        results_.push_back(std::move(r));
    }

    void flag(const std::string& name, bool pass, const std::string& detail,
              long fail_index = -1) {
        if (name == opts_.inject_fault) pass = false;
        results_.push_back(CheckResult{name, pass, fail_index, detail});
    }

    std::vector<CheckResult> take() {
        std::sort(results_.begin(), results_.end(),
                  [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
        return std::move(results_);
    }

    const VerifyOptions& opts() const { return opts_; }

private:
    const VerifyOptions& opts_;
    std::vector<CheckResult> results_;
};

// sum_{n >= 1} c(n) q^{a n} / (1-q^n)^e
PowerSeries weighted_geometric_sum(std::size_t order, unsigned e, unsigned a,
                                   const std::function<Rational(long)>& c) {
    PowerSeries out(order);
    for (std::size_t n = 1; a * n <= order && n <= order; ++n) {
        Rational cn = c(static_cast<long>(n));
        if (cn == 0) continue;
        add_scaled_shifted(out, geometric_inv_pow(n, e, order - a * n), cn, a * n);
    }
    return out;
}

std::vector<Composition> all_compositions_up_to_weight(int max_weight) {
    std::vector<Composition> out;
    std::function<void(Composition&, int)> descend = [&](Composition& prefix, int remaining) {
        if (!prefix.empty()) out.push_back(prefix);
        for (int s = 1; s <= remaining; ++s) {
            prefix.push_back(s);
            descend(prefix, remaining - s);
            prefix.pop_back();
        }
    };
    Composition prefix;
    descend(prefix, max_weight);
    return out;
}

}  // namespace

std::vector<CheckResult> verify_qzeta(const VerifyOptions& opts) {
    Suite suite(opts);
    const std::size_t N = opts.scalar_order;

    const PowerSeries z2 = okounkov_z({2}, N);
    const PowerSeries z3 = okounkov_z({3}, N);
    const PowerSeries z4 = okounkov_z({4}, N);
    const PowerSeries z6 = okounkov_z({6}, N);
    const PowerSeries z2_sq = z2 * z2;

    suite.series_equal("qzeta/z2-eq-bracket2", z2, bracket({2}, N), N);
    suite.series_equal("qzeta/z3-eq-twice-bracket3", z3, Rational(2) * bracket({3}, N), N);
    suite.series_equal("qzeta/z4-bracket-relation", z4,
                       bracket({4}, N) - rat(1, 6) * bracket({2}, N), N);

    suite.series_equal("qzeta/eisenstein-g2", eisenstein(2, N),
                       PowerSeries::constant(rat(-1, 24), N) + z2, N);
    {
        // Two candidate affine forms for G_4 differing by a coefficient swap;
        // exactly one matches the divisor-sum definition.
        const PowerSeries g4 = eisenstein(4, N);
        PowerSeries cand_a = PowerSeries::constant(rat(1, 1440), N);
        cand_a += rat(1, 6) * z2;
        cand_a += z4;
        PowerSeries cand_b = PowerSeries::constant(rat(1, 1440), N);
        cand_b += z2;
        cand_b += rat(1, 6) * z4;
        const long diff_a = first_difference(g4, cand_a, N);
        const long diff_b = first_difference(g4, cand_b, N);
        std::ostringstream detail;
        if (diff_a < 0 && diff_b >= 0)
            detail << "G4 = 1/1440 + 1/6*Z(2) + Z(4); swapped variant fails at q^" << diff_b;
        else if (diff_b < 0 && diff_a >= 0)
            detail << "G4 = 1/1440 + Z(2) + 1/6*Z(4); swapped variant fails at q^" << diff_a;
        else
            detail << "neither candidate matches";
        suite.flag("qzeta/eisenstein-g4-form", diff_a < 0 && diff_b >= 0, detail.str(),
                   diff_a >= 0 ? diff_a : -1);
    }
    {
        PowerSeries rhs = PowerSeries::constant(rat(-1, 60480), N);
        rhs += rat(1, 120) * z2;
        rhs += rat(1, 4) * z4;
        rhs += z6;
        suite.series_equal("qzeta/eisenstein-g6", eisenstein(6, N), rhs, N);
    }

    suite.series_equal("qzeta/z22-from-z2-square", okounkov_z({2, 2}, N),
                       rat(-1, 2) * z4 + rat(1, 2) * z2_sq, N);
    suite.series_equal("qzeta/z44-from-z4-square", okounkov_z({4, 4}, N),
                       rat(-1, 2) * okounkov_z({8}, N) + rat(1, 2) * (z4 * z4), N);

    // q d/dq Z(2) closed form: the verified combination is 5 Z(4) - 2 Z(2)^2
    // + Z(2); the (7/2, -1/2, 1) variant differs from q^3 on and is checked
    // to fail so the coefficient question stays pinned.
    const PowerSeries qdq_closed = Rational(5) * z4 - Rational(2) * z2_sq + z2;
    suite.series_equal(
        "qzeta/weighted-divisor-sum-z2",
        weighted_geometric_sum(N, 1, 1, [](long n) { return Rational(n); }), z2, N);
    suite.series_equal(
        "qzeta/square-weighted-sum-closed-form",
        weighted_geometric_sum(N, 2, 1, [](long n) { return Rational(n * n); }), qdq_closed, N);
    {
        PowerSeries lhs = weighted_geometric_sum(N, 3, 2, [](long n) { return Rational(n); });
        lhs += weighted_geometric_sum(N, 3, 1, [](long n) { return Rational(n); });
        suite.series_equal("qzeta/cubic-denominator-weighted-sum", lhs, qdq_closed, N);
    }
    suite.series_equal("qzeta/qdq-z2-closed-form", q_derivative(z2), qdq_closed, N);
    {
        PowerSeries variant = rat(7, 2) * z4 - rat(1, 2) * z2_sq + z2;
        long diff = first_difference(q_derivative(z2), variant, N);
        std::ostringstream detail;
        if (diff >= 0)
            detail << "variant (7/2)Z(4) - (1/2)Z(2)^2 + Z(2) correctly rejected at q^" << diff;
        else
            detail << "variant unexpectedly matches";
        suite.flag("qzeta/qdq-z2-variant-rejected", N < 3 || diff == 3, detail.str());
    }

    {
        // Eulerian-polynomial route vs pure divisor enumeration, every
        // composition of weight <= 8.
        const std::size_t dual_order = std::min<std::size_t>(N, 30);
        long fail_index = -1;
        std::string failing;
        for (const Composition& comp : all_compositions_up_to_weight(8)) {
            PowerSeries by_polys = z_generic(
                [](int s) { return q_poly(QFamily::Eulerian, s); }, comp, dual_order);
            PowerSeries by_divisors = bracket_multi_index(comp, dual_order);
            long diff = first_difference(by_polys, by_divisors, dual_order);
            if (diff >= 0) {
                fail_index = diff;
                std::ostringstream name;
                name << "(";
                for (std::size_t i = 0; i < comp.size(); ++i) name << (i ? "," : "") << comp[i];
                name << ")";
                failing = name.str();
                break;
            }
        }
        suite.flag("qzeta/bracket-dual-path", fail_index < 0,
                   fail_index < 0 ? "all compositions of weight <= 8 agree"
                                  : "composition " + failing + " disagrees",
                   fail_index);
    }

    {
        std::mt19937 rng(12345);
        auto basis = qm_basis(8, 0).size();  // count only
        const std::size_t fit = basis;
        const std::size_t verify_cnt = 20;
        const std::size_t order = fit + verify_cnt;
        auto monomials = qm_basis(8, 0);
        bool ok = true;
        std::string detail = "10 random weight-8 expressions recovered";
        for (int trial = 0; trial < 10 && ok; ++trial) {
            QMExpression expr;
            std::uniform_int_distribution<int> num(-9, 9);
            std::uniform_int_distribution<int> den(1, 4);
            for (const auto& [mono, unused] : monomials) {
                if (num(rng) > 3) continue;  // keep expressions sparse
                Rational c = rat(num(rng), den(rng));
                expr.add_term(mono, c);
            }
            RecognitionResult res = qm_recognize(expr.eval(order), 8, fit, verify_cnt);
            if (res.status != RecognitionResult::Status::Ok || !(*res.expression == expr)) {
                ok = false;
                detail = "round trip failed on a random expression";
            }
        }
        suite.flag("qzeta/recognize-roundtrip", ok, detail);
    }
    {
        RecognitionResult res = qm_recognize(okounkov_z({3}, 30), 4, 4, 20);
        std::ostringstream detail;
        if (res.status == RecognitionResult::Status::Mismatch)
            detail << "rejected with first mismatch at q^" << res.mismatch_index;
        else
            detail << "was not rejected";
        suite.flag("qzeta/recognize-rejects-z3",
                   res.status == RecognitionResult::Status::Mismatch, detail.str());
    }
    return suite.take();
}

std::vector<CheckResult> verify_hilbert(const VerifyOptions& opts) {
    Suite suite(opts);
    const std::size_t N = std::max<std::size_t>(opts.sum_order, 5);
    const SumFamilyTable fam = SumFamilyTable::compute(N);

    const PowerSeries z2 = okounkov_z({2}, N);
    const PowerSeries z3 = okounkov_z({3}, N);
    const PowerSeries z4 = okounkov_z({4}, N);
    const PowerSeries z2_sq = z2 * z2;

    {
        PowerSeries th = rat(-1, 3) * fam.t_111 + rat(1, 4) * fam.t_22;
        PowerSeries expected(N);
        expected.set_coeff(2, rat(1, 4));
        expected.set_coeff(3, rat(5, 3));
        expected.set_coeff(4, rat(19, 4));
        expected.set_coeff(5, Rational(11));
        suite.series_equal("hilbert/theta2-initial-coefficients", th.truncated(5),
                           expected.truncated(5), 5);
        suite.series_equal("hilbert/theta2-quasimodular-form", th,
                           rat(1, 3) * z2_sq - rat(1, 12) * z4, N);
    }

    {
        // free double sums with and without the (i+j) weight
        PowerSeries dsum(N), wsum(N);
        for (std::size_t i = 1; i + 1 <= N; ++i)
            for (std::size_t j = 1; i + j <= N; ++j) {
                const std::size_t s = i + j;
                PowerSeries prod = mul_truncated(
                    mul_truncated(geometric_inv_pow(i, 1, N - s), geometric_inv_pow(j, 1, N - s),
                                  N - s),
                    geometric_inv_pow(s, 1, N - s), N - s);
                add_scaled_shifted(dsum, prod, Rational(1), s);
                add_scaled_shifted(wsum, prod, Rational(static_cast<long>(s)), s);
            }
        suite.series_equal("hilbert/double-sum-z3-identity", dsum, z3 - fam.d1, N);
        PowerSeries rhs = Rational(2) * fam.nm + fam.d1;
        rhs -= Rational(5) * z4;
        rhs += Rational(2) * z2_sq;
        rhs -= z2;
        suite.series_equal("hilbert/weighted-double-sum-identity", wsum, rhs, N);
    }

    {
        // coefficient of the Euler-class pairing, recomputed from raw sums
        PowerSeries bracket2_series =
            weighted_geometric_sum(N, 1, 1, [](long n) { return Rational(n); });
        PowerSeries lhs = -fam.s_n2 - bracket2_series * z2;
        PowerSeries rhs = rat(-5, 12) * z4 - rat(5, 6) * z2_sq;
        suite.series_equal("hilbert/e-pairing-coefficient-closed-form", lhs, rhs, N);
        {
            PowerSeries variant = variant_e_line().eval(N);
            long diff = first_difference(lhs, variant, N);
            std::ostringstream detail;
            if (diff >= 0)
                detail << "variant -(7/24)Z(4) - (23/24)Z(2)^2 correctly rejected at q^" << diff;
            else
                detail << "variant unexpectedly matches";
            suite.flag("hilbert/e-pairing-variant-rejected", N < 3 || diff == 3, detail.str());
        }

        PowerSeries free_mix(N);
        for (std::size_t i = 1; i + 1 <= N; ++i)
            for (std::size_t j = 1; i + j <= N; ++j) {
                PowerSeries prod =
                    mul_truncated(geometric_inv_pow(i, 1, N - i - j),
                                  geometric_inv_pow(j, 2, N - i - j), N - i - j);
                add_scaled_shifted(free_mix, prod, Rational(static_cast<long>(i)), i + j);
            }
        suite.series_equal("hilbert/emix-equals-free-double-sum", fam.e_mix, free_mix, N);
    }

    suite.series_equal("hilbert/constrained-quadruple-sum-reduction", fam.t_22,
                       rat(4, 3) * z2_sq - rat(1, 3) * z4 + rat(4, 3) * fam.t_111, N);
    {
        PowerSeries rhs = Rational(-3) * fam.nm - rat(3, 2) * fam.d1;
        rhs += rat(17, 2) * z4;
        rhs -= z2_sq;
        rhs += rat(3, 2) * z2;
        suite.series_equal("hilbert/triple-sum-closed-form", fam.t_111, rhs, N);
    }

    {
        PowerSeries chain2(N), chain3(N);
        for (std::size_t n1 = 2; n1 <= N; ++n1)
            for (std::size_t n2 = 1; n2 < n1; ++n2) {
                PowerSeries prod = mul_truncated(geometric_inv_pow(n1, 2, N - n1),
                                                 geometric_inv_pow(n2, 1, N - n1), N - n1);
                add_scaled_shifted(chain2, prod, Rational(1), n1);
                for (std::size_t n3 = 1; n3 < n2; ++n3) {
                    PowerSeries prod3 = mul_truncated(prod, geometric_inv_pow(n3, 1, N - n1),
                                                      N - n1);
                    add_scaled_shifted(chain3, prod3, Rational(1), n1);
                }
            }
        suite.series_equal("hilbert/nested-chain-collapse-double", chain2,
                           weighted_geometric_sum(N, 3, 2, [](long) { return Rational(1); }), N);
        suite.series_equal("hilbert/nested-chain-collapse-triple", chain3,
                           weighted_geometric_sum(N, 4, 3, [](long) { return Rational(1); }), N);
    }

    {
        PowerSeries lhs = fam.s_2n1 + rat(1, 2) * fam.s_ij;
        lhs += rat(1, 2) * fam.t_111;
        lhs -= rat(1, 4) * fam.t_22;
        PowerSeries rhs = rat(13, 12) * z4 - rat(1, 3) * z2_sq;
        rhs -= rat(1, 4) * z3;
        rhs += rat(1, 4) * z2;
        suite.series_equal("hilbert/k2-pairing-coefficient-closed-form", lhs, rhs, N);
    }

    {
        const std::size_t M = std::min<std::size_t>(N, 25);
        suite.series_equal("hilbert/symmetrized-triple-sum", ordered_triple_sum(M),
                           rat(1, 6) * fam.t_111.truncated(M), M);
        suite.series_equal("hilbert/symmetrized-quadruple-sum", ordered_quadruple_sum(M),
                           rat(1, 4) * fam.t_22.truncated(M), M);
    }

    {
        const std::size_t M = std::min<std::size_t>(N, 30);
        const char* names[4] = {"hilbert/f2-direct-vs-symbolic-e", "hilbert/f2-direct-vs-symbolic-one",
                                "hilbert/f2-direct-vs-symbolic-k", "hilbert/f2-direct-vs-symbolic-k2"};
        for (int unit = 0; unit < 4; ++unit) {
            SurfacePairings sp;
            (unit == 0 ? sp.pair_e : unit == 1 ? sp.pair_1 : unit == 2 ? sp.pair_K : sp.pair_K2) =
                1;
            suite.series_equal(names[unit], f2_reduced_direct(sp, M),
                               f2_reduced_symbolic(sp).eval(M), M);
        }
    }

    suite.series_equal("hilbert/f1-dual-path", f1_middle_line_direct(N), z3 - z2, N);

    {
        // ch1 on a generic surface equals its closed form
        SurfacePairings surf;
        surf.chi = 3;
        surf.K2 = 9;
        surf.KL = -3;
        surf.L2 = 1;
        QZetaCombination expected;
        expected.add_term({2}, rat(*surf.K2, 2) - Rational(*surf.KL));
        expected.add_term({3}, rat(-*surf.K2, 2));
        suite.flag("hilbert/ch1-closed-form", ch1_reduced(surf) == expected,
                   "ch1 matches (Z(2)-Z(3))/2 K^2 - Z(2) K.L");
    }
    {
        bool ok = true;
        std::string detail = "assembly equals the closed form on unit and generic data";
        const long tuples[5][4] = {
            {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {3, 9, -3, 1}};
        for (const auto& t : tuples) {
            SurfacePairings surf;
            surf.chi = t[0];
            surf.K2 = t[1];
            surf.KL = t[2];
            surf.L2 = t[3];
            try {
                QZetaCombination got = ch2_reduced(surf);
                if (!(got == ch2_closed_form(t[0], t[1], t[2], t[3]))) ok = false;
            } catch (const std::exception&) {
                ok = false;
                detail = "assembly check threw";
            }
        }
        suite.flag("hilbert/ch2-assembly-identity", ok, detail);
    }
    {
        // K numerically trivial: the result lies in the ring generated by
        // Z(2) and Z(4) with weight at most 4.
        SurfacePairings surf;
        surf.chi = 24;
        surf.K2 = 0;
        surf.KL = 0;
        surf.L2 = 4;
        QZetaCombination comb = ch2_reduced(surf);
        RecognitionResult res = qm_recognize(comb.eval(24), 4, 4, 20);
        bool ok = res.status == RecognitionResult::Status::Ok && res.expression->weight() <= 4;
        if (ok)
            for (const auto& [m, c] : res.expression->terms())
                if (m[2] != 0) ok = false;
        suite.flag("hilbert/ch2-k-trivial-quasimodular", ok,
                   ok ? "recognized as " + to_string(*res.expression) : "recognition failed");
    }

    {
        // partition-series sanity for the reduced-series prefactor
        const std::size_t M = std::min<std::size_t>(N, 30);
        bool integral = true;
        for (long chi : {1L, 2L, 3L, 24L}) {
            PowerSeries g = goettsche_series(chi, M);
            for (std::size_t k = 0; k <= M && integral; ++k) {
                const Rational& c = g.coeff(k);
                if (c.get_den() != 1 || c < 0) integral = false;
            }
        }
        suite.flag("hilbert/goettsche-integrality", integral,
                   "coefficients are nonnegative integers for chi in {1,2,3,24}");

        // chi = 1 equals brute-force partition counts
        PowerSeries g1 = goettsche_series(1, M);
        std::vector<std::vector<Integer>> dp(M + 1, std::vector<Integer>(M + 1));
        for (std::size_t parts = 0; parts <= M; ++parts) dp[parts][0] = 1;
        for (std::size_t largest = 1; largest <= M; ++largest)
            for (std::size_t n = 1; n <= M; ++n) {
                dp[largest][n] = dp[largest - 1][n];
                if (n >= largest) dp[largest][n] += dp[largest][n - largest];
            }
        PowerSeries pc(M);
        for (std::size_t n = 0; n <= M; ++n) pc.set_coeff(n, Rational(dp[M][n]));
        suite.series_equal("hilbert/goettsche-partition-match", g1, pc, M);
    }
    return suite.take();
}

namespace {

PowerSeries reduced_to_full(const PowerSeries& reduced, long chi, std::size_t order) {
    return goettsche_series(chi, order) * reduced.truncated(order);
}

void commutator_check_for_model(Suite& suite, const std::string& tag, const FrobeniusRing& ring,
                                int depth) {
    {
        // commutation relations on degree blocks <= depth, applied vector by
        // vector inside a window wide enough to avoid truncation
        const int reach = 5;
        FockSpace wide(ring, depth + reach);
        // all elements of degree <= depth are indexed below this bound
        const int checked = wide.degree_block(depth).second;
        bool ok = true;
        std::string detail = "identities hold for |m|,|n| <= 5 on blocks <= depth";
        for (int m = -reach; m <= reach && ok; ++m) {
            if (m == 0) continue;
            for (int n = -reach; n <= reach && ok; ++n) {
                if (n == 0) continue;
                for (int a = 0; a < ring.dim() && ok; ++a) {
                    const FrobeniusRing::Element alpha = ring.basis(a);
                    for (int b = 0; b < ring.dim() && ok; ++b) {
                        const FrobeniusRing::Element beta = ring.basis(b);
                        const Rational scalar =
                            m == -n ? Rational(-m) * ring.pair(alpha, beta) : Rational(0);
                        for (int v = 0; v < checked && ok; ++v) {
                            SparseVector unit{{v, Rational(1)}};
                            SparseVector lhs = heisenberg_apply(
                                wide, m, alpha, heisenberg_apply(wide, n, beta, unit));
                            SparseVector rhs_v = heisenberg_apply(
                                wide, n, beta, heisenberg_apply(wide, m, alpha, unit));
                            auto subtract = [&](int i, const Rational& c) {
                                auto it = lhs.find(i);
                                if (it == lhs.end()) {
                                    if (c != 0) lhs.emplace(i, -c);
                                } else {
                                    it->second -= c;
                                    if (it->second == 0) lhs.erase(it);
                                }
                            };
                            for (const auto& [i, c] : rhs_v) subtract(i, c);
                            subtract(v, scalar);
                            if (!lhs.empty()) {
                                ok = false;
                                detail = "commutator mismatch";
                            }
                        }
                    }
                }
            }
        }
        suite.flag("oracle/commutation-relations-" + tag, ok, detail);
    }
}

void oracle_checks_for_model(Suite& suite, const std::string& tag, const FrobeniusRing& ring,
                             int depth) {
    const long chi = ring.chi();

    commutator_check_for_model(suite, tag, ring, depth);

    {
        bool ok = true;
        for (int i = 0; i < ring.dim() && ok; ++i) {
            FrobeniusRing::Element x = ring.basis(i);
            auto terms = ring.comultiply(x, 2);
            FrobeniusRing::Element recovered = ring.zero();
            for (const auto& [c, legs] : terms) {
                Rational integral = ring.pair(ring.basis(legs[0]), ring.unit());
                if (integral == 0) continue;
                const auto second = ring.basis(legs[1]);
                for (std::size_t u = 0; u < recovered.size(); ++u)
                    recovered[u] += c * integral * second[u];
            }
            if (recovered != x) ok = false;
        }
        suite.flag("oracle/comultiplication-frobenius-" + tag, ok,
                   "(integral (x) id) o tau_2 = id on the basis");
    }

    VertexTraceContext ctx(ring, depth);
    const std::size_t D = static_cast<std::size_t>(depth);

    suite.series_equal("oracle/goettsche-trace-" + tag, ctx.trace_q_w(),
                       goettsche_series(chi, D), D);

    {
        long fail = -1;
        std::string failing;
        std::vector<GenPartition> lambdas;
        lambdas.push_back(GenPartition{});
        for (int len = 2; len <= 4; ++len)
            for (const GenPartition& lam : balanced_partitions(len, 3)) lambdas.push_back(lam);
        for (const GenPartition& lam : lambdas) {
            for (int a = 0; a < ring.dim(); ++a) {
                const FrobeniusRing::Element alpha = ring.basis(a);
                FockOperator m = a_lambda(ctx.space(), lam, alpha);
                m *= Rational(1) / Rational(lam.factorial());
                PowerSeries lhs = ctx.trace_q_w(m);
                PowerSeries closed = trace_closed_form_reduced(lam, ring.pairings_of(alpha), D);
                PowerSeries rhs = reduced_to_full(closed, chi, D);
                long diff = first_difference(lhs, rhs, D);
                if (diff >= 0) {
                    fail = diff;
                    failing = to_string(lam) + " with basis class " + std::to_string(a);
                    break;
                }
            }
            if (fail >= 0) break;
        }
        suite.flag("oracle/closed-form-trace-crosscheck-" + tag, fail < 0,
                   fail < 0 ? "all balanced partitions of length <= 4, parts <= 3"
                            : "mismatch for " + failing,
                   fail);
    }

    {
        FockOperator g2 = g2_operator(ctx.space(), ring.unit());
        PowerSeries lhs = ctx.trace_q_w(g2);
        SurfacePairings sp = ring.pairings_of(ring.unit());
        PowerSeries rhs = reduced_to_full(f2_reduced_direct(sp, D), chi, D);
        suite.series_equal("oracle/chern-ch2-trace-crosscheck-" + tag, lhs, rhs, D);
    }
}

}  // namespace

std::vector<CheckResult> verify_oracle(const VerifyOptions& opts) {
    Suite suite(opts);
    const int depth = opts.oracle_depth;
    oracle_checks_for_model(suite, "p2", projective_plane_model(), depth);
    oracle_checks_for_model(suite, "k3small", k3_like_small_model(), depth);
    return suite.take();
}

std::vector<CheckResult> verify_oracle_commutators(const VerifyOptions& opts) {
    Suite suite(opts);
    commutator_check_for_model(suite, "p2", projective_plane_model(), opts.oracle_depth);
    commutator_check_for_model(suite, "k3small", k3_like_small_model(), opts.oracle_depth);
    return suite.take();
}

std::vector<CheckResult> verify_all(const VerifyOptions& opts) {
    std::vector<CheckResult> out = verify_qzeta(opts);
    for (auto& r : verify_hilbert(opts)) out.push_back(std::move(r));
    for (auto& r : verify_oracle(opts)) out.push_back(std::move(r));
    std::sort(out.begin(), out.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace qzeta
