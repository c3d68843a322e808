#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "s3theta/alg_element.hpp"
#include "s3theta/connection.hpp"
#include "s3theta/spin_matrix.hpp"

namespace s3theta {

using json = nlohmann::json;

inline json to_json(const TrigCoeff& f) {
    json terms = json::array();
    for (const auto& [k, v] : f.terms())
        terms.push_back({{"a", k.first}, {"b", k.second}, {"re", v.real()}, {"im", v.imag()}});
    return terms;
}

inline TrigCoeff trig_from_json(const json& j) {
    TrigCoeff f;
    for (const auto& t : j)
        f.add_term(t.at("a").get<int>(), t.at("b").get<int>(),
                   {t.at("re").get<double>(), t.at("im").get<double>()});
    return f;
}

/// {"theta": ..., "modes": [{"p":, "q":, "terms": [{"a","b","re","im"}...]}...]}
inline json to_json(const AlgElement& x) {
    json modes = json::array();
    for (const auto& [m, f] : x.modes())
        modes.push_back({{"p", m.first}, {"q", m.second}, {"terms", to_json(f)}});
    return {{"theta", x.context() ? x.context()->theta : 0.0}, {"modes", modes}};
}

inline AlgElement element_from_json(const json& j, ContextPtr ctx) {
    AlgElement x(std::move(ctx));
    for (const auto& m : j.at("modes"))
        x.add_mode(m.at("p").get<int>(), m.at("q").get<int>(), trig_from_json(m.at("terms")));
    return x;
}

inline AlgElement element_from_json(const json& j) {
    return element_from_json(j, make_context(j.at("theta").get<double>()));
}

/// SpinMatrix as four position-tagged elements.
inline json to_json(const SpinMatrix& m) {
    json out = json::array();
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out.push_back({{"row", r}, {"col", c}, {"entry", to_json(m.at(r, c))}});
    return out;
}

/// {"theta": ..., "pairs": [{"a": <element>, "b": <element>}...]}
inline json to_json_pairs(double theta,
                          const std::vector<std::pair<AlgElement, AlgElement>>& pairs) {
    json arr = json::array();
    for (const auto& [a, b] : pairs) arr.push_back({{"a", to_json(a)}, {"b", to_json(b)}});
    return {{"theta", theta}, {"pairs", arr}};
}

struct ConnectionFile {
    double theta = 0.0;
    std::vector<std::pair<AlgElement, AlgElement>> pairs;
    ContextPtr ctx;
};

inline ConnectionFile connection_from_json(const json& j, double tol = 1e-9) {
    ConnectionFile file;
    file.theta = j.at("theta").get<double>();
    file.ctx = make_context(file.theta, tol);
    for (const auto& p : j.at("pairs"))
        file.pairs.emplace_back(element_from_json(p.at("a"), file.ctx),
                                element_from_json(p.at("b"), file.ctx));
    return file;
}

}  // namespace s3theta
