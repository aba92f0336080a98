#include "qzeta/surface.hpp"

#include <stdexcept>

#include <json.hpp>

namespace qzeta {

using nlohmann::json;

SurfacePairings SurfacePairings::alpha_unit(long chi, long K2) {
    SurfacePairings p;
    p.pair_e = chi;
    p.pair_1 = 0;
    p.pair_K = 0;
    p.pair_K2 = K2;
    p.chi = chi;
    p.K2 = K2;
    return p;
}

SurfacePairings SurfacePairings::alpha_line(long KL) {
    SurfacePairings p;
    p.pair_K = KL;
    return p;
}

SurfacePairings SurfacePairings::alpha_half_line_square(long L2) {
    SurfacePairings p;
    p.pair_1 = rat(L2, 2);
    return p;
}

SurfacePairings SurfacePairings::from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("surface JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("surface JSON must be an object");
    SurfacePairings p;
    auto read_long = [&](const char* key) -> std::optional<long> {
        if (!j.contains(key)) return std::nullopt;
        if (!j[key].is_number_integer())
            throw std::invalid_argument(std::string("surface field must be an integer: ") + key);
        return j[key].get<long>();
    };
    if (auto v = read_long("chi")) p.chi = *v;
    p.K2 = read_long("K2");
    p.KL = read_long("KL");
    p.L2 = read_long("L2");
    if (j.contains("pairings")) {
        const json& q = j["pairings"];
        if (!q.is_object()) throw std::invalid_argument("pairings block must be an object");
        auto read_rat = [&](const char* key, Rational& dst) {
            if (!q.contains(key)) return;
            if (q[key].is_number_integer())
                dst = Rational(q[key].get<long>());
            else if (q[key].is_string())
                dst = rational_from_string(q[key].get<std::string>());
            else
                throw std::invalid_argument(std::string("pairing must be int or string: ") + key);
        };
        read_rat("e", p.pair_e);
        read_rat("1", p.pair_1);
        read_rat("K", p.pair_K);
        read_rat("K2", p.pair_K2);
    } else {
        // Default to alpha = 1_X when only intersection numbers are given.
        p.pair_e = p.chi;
        p.pair_K2 = p.K2.value_or(0);
    }
    return p;
}

std::string SurfacePairings::to_json_string() const {
    json j;
    j["chi"] = chi;
    if (K2) j["K2"] = *K2;
    if (KL) j["KL"] = *KL;
    if (L2) j["L2"] = *L2;
    j["pairings"] = {{"e", rational_to_string(pair_e)},
                     {"1", rational_to_string(pair_1)},
                     {"K", rational_to_string(pair_K)},
                     {"K2", rational_to_string(pair_K2)}};
    return j.dump();
}

}  // namespace qzeta
