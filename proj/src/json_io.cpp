#include "bezout/json_io.hpp"

#include "bezout/bezoutiant.hpp"

namespace bezout {

using nlohmann::json;

json form_to_json(const BinaryForm& f) {
    json j;
    j["order"] = f.order();
    json coeffs = json::array();
    for (int i = 0; i <= f.order(); ++i)
        coeffs.push_back(rational_str(f.coeff(i)));
    j["coeffs"] = coeffs;
    return j;
}

BinaryForm form_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw ParseError("form JSON needs {\"order\", \"coeffs\"}");
    int order = j.at("order").get<int>();
    if (order < 0)
        return BinaryForm(order);
    const auto& arr = j.at("coeffs");
    if (!arr.is_array() || arr.size() != static_cast<size_t>(order) + 1)
        throw ParseError("form JSON coeffs length must be order+1");
    std::vector<Rational> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& c : arr)
        coeffs.push_back(parse_rational(c.get<std::string>()));
    return BinaryForm(order, std::move(coeffs));
}

json biform_to_json(const BiForm& f) {
    json j;
    j["xorder"] = f.xorder();
    j["yorder"] = f.yorder();
    json rows = json::array();
    for (int i = 0; i <= f.xorder(); ++i) {
        json row = json::array();
        for (int k = 0; k <= f.yorder(); ++k)
            row.push_back(rational_str(f.coeff(i, k)));
        rows.push_back(row);
    }
    j["coeffs"] = rows;
    return j;
}

BiForm biform_from_json(const json& j) {
    if (!j.is_object() || !j.contains("xorder") || !j.contains("yorder") || !j.contains("coeffs"))
        throw ParseError("biform JSON needs {\"xorder\", \"yorder\", \"coeffs\"}");
    int m = j.at("xorder").get<int>();
    int n = j.at("yorder").get<int>();
    if (m < 0 || n < 0)
        return BiForm();
    const auto& rows = j.at("coeffs");
    if (!rows.is_array() || rows.size() != static_cast<size_t>(m) + 1)
        throw ParseError("biform JSON needs xorder+1 rows");
    BiForm f(m, n);
    for (int i = 0; i <= m; ++i) {
        const auto& row = rows.at(static_cast<size_t>(i));
        if (!row.is_array() || row.size() != static_cast<size_t>(n) + 1)
            throw ParseError("biform JSON row length must be yorder+1");
        for (int k = 0; k <= n; ++k)
            f.set_coeff(i, k, parse_rational(row.at(static_cast<size_t>(k)).get<std::string>()));
    }
    return f;
}

json series_to_json(const TransvectantSeries& s) {
    json j;
    j["d"] = s.d;
    json terms = json::array();
    for (const auto& t : s.terms)
        terms.push_back(form_to_json(t));
    j["terms"] = terms;
    return j;
}

TransvectantSeries series_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("terms"))
        throw ParseError("series JSON needs {\"d\", \"terms\"}");
    int d = j.at("d").get<int>();
    std::vector<BinaryForm> terms;
    for (const auto& t : j.at("terms"))
        terms.push_back(form_from_json(t));
    return TransvectantSeries(d, std::move(terms));
}

} // namespace bezout
