#pragma once

#include <optional>
#include <string>

#include "qzeta/rational.hpp"

namespace qzeta {

/// Numerical data of a class alpha on a model surface: its pairings against
/// the Euler class, the fundamental class, the canonical class and its
/// square, together with the intersection numbers of an optional line
/// bundle. For alpha = 1_X the pairings are (chi, 0, 0, K^2).
struct SurfacePairings {
    Rational pair_e = 0;   // <e_X, alpha>
    Rational pair_1 = 0;   // <1_X, alpha>
    Rational pair_K = 0;   // <K_X, alpha>
    Rational pair_K2 = 0;  // <K_X^2, alpha>

    long chi = 0;
    std::optional<long> K2;
    std::optional<long> KL;
    std::optional<long> L2;

    static SurfacePairings alpha_unit(long chi, long K2);     // alpha = 1_X
    static SurfacePairings alpha_line(long KL);               // alpha = c_1(L)
    static SurfacePairings alpha_half_line_square(long L2);   // alpha = L^2 / 2

    /// Parses {"chi": int, "K2": int, "KL": int, "L2": int} with an optional
    /// {"pairings": {"e": .., "1": .., "K": .., "K2": ..}} block.
    static SurfacePairings from_json_string(const std::string& text);
    std::string to_json_string() const;
};

}  // namespace qzeta
