#pragma once

#include <iosfwd>
#include <string>

#include "qzeta/power_series.hpp"
#include "qzeta/quasimodular.hpp"
#include "qzeta/qzv.hpp"

namespace qzeta {

/// JSON array of exact coefficient strings: ["1", "-1/2", ...]; index k is
/// the coefficient of q^k and the array length fixes the order.
std::string series_to_json(const PowerSeries& s);
PowerSeries series_from_json(const std::string& text);

/// CSV with the header "k,numerator,denominator", one row per coefficient.
void series_to_csv(const PowerSeries& s, std::ostream& out);
PowerSeries series_from_csv(std::istream& in);

/// {"constant": "c", "terms": [{"monomial": [a,b,c], "coeff": "r"}, ...]},
/// terms in graded-lex order, constant kept out of the term list.
std::string qm_expression_to_json(const QMExpression& e);
QMExpression qm_expression_from_json(const std::string& text);

/// {"constant": "c", "terms": [{"composition": [s1,...], "coeff": "r"}, ...]}
std::string qzeta_combination_to_json(const QZetaCombination& c);
QZetaCombination qzeta_combination_from_json(const std::string& text);

/// Coefficient list from "k value" lines (missing indices read as zero) or
/// from a JSON array as in series_from_json.
PowerSeries coefficients_from_text(const std::string& text);

}  // namespace qzeta
