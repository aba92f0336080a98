#include "qzeta/series_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qzeta {

using nlohmann::json;

std::string series_to_json(const PowerSeries& s) {
    json arr = json::array();
    for (std::size_t k = 0; k <= s.order(); ++k) arr.push_back(rational_to_string(s.coeff(k)));
    return arr.dump();
}

PowerSeries series_from_json(const std::string& text) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("series JSON parse error: ") + e.what());
    }
    if (!arr.is_array() || arr.empty())
        throw std::invalid_argument("series JSON must be a nonempty array");
    PowerSeries s(arr.size() - 1);
    for (std::size_t k = 0; k < arr.size(); ++k) {
        if (arr[k].is_string())
            s.set_coeff(k, rational_from_string(arr[k].get<std::string>()));
        else if (arr[k].is_number_integer())
            s.set_coeff(k, Rational(arr[k].get<long>()));
        else
            throw std::invalid_argument("series coefficients must be strings or integers");
    }
    return s;
}

void series_to_csv(const PowerSeries& s, std::ostream& out) {
    out << "k,numerator,denominator\n";
    for (std::size_t k = 0; k <= s.order(); ++k) {
        const Rational& c = s.coeff(k);
        out << k << "," << c.get_num().get_str() << "," << c.get_den().get_str() << "\n";
    }
}

PowerSeries series_from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty CSV input");
    std::vector<std::pair<std::size_t, Rational>> entries;
    std::size_t max_k = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string k_str, num_str, den_str;
        if (!std::getline(row, k_str, ',') || !std::getline(row, num_str, ',') ||
            !std::getline(row, den_str))
            throw std::invalid_argument("malformed CSV row: " + line);
        const std::size_t k = std::stoul(k_str);
        Integer den(den_str);
        if (den == 0) throw std::invalid_argument("zero denominator in CSV row: " + line);
        Rational c(Integer(num_str), den);
        c.canonicalize();
        entries.emplace_back(k, std::move(c));
        max_k = std::max(max_k, k);
    }
    if (entries.empty()) throw std::invalid_argument("CSV input has no coefficient rows");
    PowerSeries s(max_k);
    for (auto& [k, c] : entries) s.set_coeff(k, std::move(c));
    return s;
}

std::string qm_expression_to_json(const QMExpression& e) {
    json j;
    j["constant"] = rational_to_string(e.constant());
    json terms = json::array();
    for (const auto& [m, c] : e.terms()) {
        if (m == QMMonomial{0, 0, 0}) continue;
        terms.push_back({{"monomial", {m[0], m[1], m[2]}}, {"coeff", rational_to_string(c)}});
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

QMExpression qm_expression_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("expression JSON parse error: ") + e.what());
    }
    QMExpression e;
    if (j.contains("constant"))
        e.add_term({0, 0, 0}, rational_from_string(j["constant"].get<std::string>()));
    if (j.contains("terms"))
        for (const auto& t : j["terms"]) {
            auto m = t.at("monomial").get<std::vector<unsigned>>();
            if (m.size() != 3) throw std::invalid_argument("monomial must have three exponents");
            e.add_term({m[0], m[1], m[2]}, rational_from_string(t.at("coeff").get<std::string>()));
        }
    return e;
}

std::string qzeta_combination_to_json(const QZetaCombination& c) {
    json j;
    j["constant"] = rational_to_string(c.constant());
    json terms = json::array();
    for (const auto& [comp, coeff] : c.terms())
        terms.push_back({{"composition", comp}, {"coeff", rational_to_string(coeff)}});
    j["terms"] = std::move(terms);
    return j.dump();
}

QZetaCombination qzeta_combination_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("combination JSON parse error: ") + e.what());
    }
    QZetaCombination c;
    if (j.contains("constant"))
        c.add_constant(rational_from_string(j["constant"].get<std::string>()));
    if (j.contains("terms"))
        for (const auto& t : j["terms"]) {
            c.add_term(t.at("composition").get<Composition>(),
                       rational_from_string(t.at("coeff").get<std::string>()));
        }
    return c;
}

PowerSeries coefficients_from_text(const std::string& text) {
    // skip leading whitespace to sniff the format
    std::size_t pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) throw std::invalid_argument("empty coefficient input");
    if (text[pos] == '[') return series_from_json(text);

    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<std::size_t, Rational>> entries;
    std::size_t max_k = 0;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string k_str, value;
        if (!(row >> k_str)) continue;  // blank line
        if (k_str[0] == '#') continue;
        if (!(row >> value)) throw std::invalid_argument("expected 'k value' on line: " + line);
        const std::size_t k = std::stoul(k_str);
        entries.emplace_back(k, rational_from_string(value));
        max_k = std::max(max_k, k);
    }
    if (entries.empty()) throw std::invalid_argument("no coefficient lines found");
    PowerSeries s(max_k);
    for (auto& [k, c] : entries) s.set_coeff(k, std::move(c));
    return s;
}

}  // namespace qzeta
