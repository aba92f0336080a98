#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qzeta/partitions.hpp"
#include "qzeta/power_series.hpp"
#include "qzeta/qzv.hpp"
#include "qzeta/surface.hpp"

namespace qzeta {

/// Named nested-sum families, all truncated exactly at the requested order
/// by bounding every index tuple through the q-adic valuation of its term.
///
///   S_n2   sum_n ((n^2-1)/12) q^n/(1-q^n)^2
///   S_2n1  sum_n ((n-1)(2n-1)/12) q^n/(1-q^n)^2
///   S_ij   sum_{i,j} ((i+j-1)/2) q^{i+j} / ((1-q^i)(1-q^j)(1-q^{i+j}))
///   T_111  sum_{i,j,k} q^{i+j+k} / ((1-q^i)(1-q^j)(1-q^k)(1-q^{i+j+k}))
///   T_22   sum_{i+j=k+l} q^{i+j} / ((1-q^i)(1-q^j)(1-q^k)(1-q^l))
///   E_mix  sum_{i>j} [ i q^i/(1-q^i) * q^j/(1-q^j)^2 + j q^j/(1-q^j) * q^i/(1-q^i)^2 ]
///          + sum_i i q^{2i}/(1-q^i)^3
///   NM     sum_{n>m} n q^n / ((1-q^n)^2 (1-q^m))
///   D1     q d/dq of sum_n q^n/(1-q^n)
enum class SumFamily { S_n2, S_2n1, S_ij, T_111, T_22, E_mix, NM, D1 };

SumFamily sum_family_from_name(const std::string& name);
const std::vector<std::string>& sum_family_names();

PowerSeries sum_family(SumFamily which, std::size_t order);

/// All eight families at once, sharing one inverse-power table.
struct SumFamilyTable {
    PowerSeries s_n2, s_2n1, s_ij, t_111, t_22, e_mix, nm, d1;
    static SumFamilyTable compute(std::size_t order);
};

/// Theta_2 = -(1/3) T_111 + (1/4) T_22, a weight-4 quasimodular form.
PowerSeries theta2(std::size_t order);

/// The ordered variants, summed over i >= j >= k (resp. the constrained
/// quadruples) with 1/lambda^! weights; equal to (1/6) T_111 and (1/4) T_22.
PowerSeries ordered_triple_sum(std::size_t order);
PowerSeries ordered_quadruple_sum(std::size_t order);

/// Partition-function series (q;q)_infty^{-chi}.
PowerSeries goettsche_series(long chi, std::size_t order);

/// Reduced q-trace of the vertex operator against a normalized Heisenberg
/// monomial a_lambda(alpha)/lambda^!, i.e. the closed two-part formula with
/// the (q;q)_infty^{-chi} prefactor removed and the degree-shift variable
/// specialized to 1. The empty partition yields the constant <1_X, alpha>.
PowerSeries trace_closed_form_reduced(const GenPartition& lambda, const SurfacePairings& p,
                                      std::size_t order);

/// The reduced series (q;q)^chi F_2^alpha by direct nested summation: the
/// combination of the eight families weighted by binomial pairings
/// <(1_X - K_X)^p, alpha>, with <K^j, alpha> = 0 for j > 2.
PowerSeries f2_reduced_direct(const SurfacePairings& p, std::size_t order);

/// The same series in closed form:
///   (-5/12 Z(4) - 5/6 Z(2)^2) <e,a> + (1/12 Z(4) - 1/3 Z(2)^2) <1,a>
/// + (-1/6 Z(4) + 2/3 Z(2)^2) <K,a>
/// + (13/12 Z(4) - 1/3 Z(2)^2 - 1/4 Z(3) + 1/4 Z(2)) <K^2,a>.
QZetaCombination f2_reduced_symbolic(const SurfacePairings& p);

/// The rejected alternative Euler-class line -7/24 Z(4) - 23/24 Z(2)^2: it
/// agrees with f2_reduced_direct only through q^2 and differs from q^3 on
/// (the difference is (1/8)(Z(2)^2 - Z(4))). Kept so the suites can verify
/// the rejection explicitly.
QZetaCombination variant_e_line();

/// (q;q)^chi F_0^alpha = <1_X - K_X + e_X, alpha> * Z(2).
QZetaCombination f0_reduced(const SurfacePairings& p);

/// (q;q)^chi F_1^alpha = <K_X - K_X^2, alpha>/2 * (Z(3) - Z(2)).
QZetaCombination f1_reduced(const SurfacePairings& p);

/// Direct-sum form of the series behind f1_reduced:
///   sum_m (m-1) q^m/(1-q^m)^2
/// + sum_{m1,m2} q^{m1+m2} / ((1-q^{m1})(1-q^{m2})(1-q^{m1+m2})),
/// which must equal Z(3) - Z(2); kept as an independent code path.
PowerSeries f1_middle_line_direct(std::size_t order);

/// First tautological Chern character series: (Z(2)-Z(3))/2 * K^2 - Z(2) * K.L,
/// assembled from f1 at alpha = 1_X and f0 at alpha = L. Requires K2 and KL.
QZetaCombination ch1_reduced(const SurfacePairings& surface);

/// Second tautological Chern character series, assembled from
/// f2(1_X) + f1(L) + f0(L^2/2) and checked against its closed form
///   (-5/12 Z(4) - 5/6 Z(2)^2) chi + (Z(3)-Z(2))/2 * K.L
/// + (13/12 Z(4) - 1/3 Z(2)^2 - 1/4 Z(3) + 1/4 Z(2)) K^2 + 1/2 Z(2) L^2.
/// Requires chi, K2, KL and L2.
QZetaCombination ch2_reduced(const SurfacePairings& surface);

/// The closed form of ch2_reduced built directly from the display above;
/// ch2_reduced asserts it agrees with the assembled value.
QZetaCombination ch2_closed_form(long chi, long K2, long KL, long L2);

}  // namespace qzeta
