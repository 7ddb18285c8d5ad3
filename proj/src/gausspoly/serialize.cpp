#include "hh/serialize.hpp"

namespace hh {

namespace {

ojson midx_to_json(const MIdx& m) {
    ojson a = ojson::array();
    for (uint32_t v : m) a.push_back(v);
    return a;
}

MIdx midx_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw serialization_error("multi-index must be an array");
    MIdx m;
    for (const auto& v : j) {
        if (!v.is_number_unsigned())
            throw serialization_error("multi-index entries must be unsigned");
        m.push_back(v.get<uint32_t>());
    }
    return m;
}

} // namespace

ojson pi_scalar_to_json(const PiScalar& s) {
    ojson arr = ojson::array();
    for (const auto& [e, c] : s.terms()) {
        ojson t;
        t["pi"] = e;
        t["re"] = rat_to_string(c.re);
        t["im"] = rat_to_string(c.im);
        arr.push_back(std::move(t));
    }
    return arr;
}

PiScalar pi_scalar_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw serialization_error("PiScalar: expected array");
    PiScalar s;
    for (const auto& t : j) {
        if (!t.contains("pi") || !t.contains("re") || !t.contains("im"))
            throw serialization_error("PiScalar: term needs pi/re/im");
        int e = t.at("pi").get<int>();
        CRat c(rat_from_string(t.at("re").get<std::string>()),
               rat_from_string(t.at("im").get<std::string>()));
        s += PiScalar::pi_pow(e, c);
    }
    return s;
}

ojson gauss_poly_to_json(const GaussPoly& f) {
    ojson j;
    j["n"] = f.context().n;
    j["lambda"] = rat_to_string(f.context().lambda);
    j["t"] = rat_to_string(f.gauss_t());
    ojson terms = ojson::array();
    for (const auto& [k, c] : f.terms()) {
        ojson t;
        t["a"] = midx_to_json(k.a);
        t["b"] = midx_to_json(k.b);
        t["coeff"] = pi_scalar_to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

GaussPoly gauss_poly_from_json(const nlohmann::json& j) {
    for (const char* key : {"n", "lambda", "t", "terms"})
        if (!j.contains(key))
            throw serialization_error(std::string("GaussPoly: missing '") + key + "'");
    WeylContext ctx(j.at("n").get<int>(),
                    rat_from_string(j.at("lambda").get<std::string>()));
    GaussPoly f(ctx, rat_from_string(j.at("t").get<std::string>()));
    for (const auto& t : j.at("terms")) {
        MIdx a = midx_from_json(t.at("a"));
        MIdx b = midx_from_json(t.at("b"));
        if (a.size() != static_cast<std::size_t>(ctx.n) ||
            b.size() != static_cast<std::size_t>(ctx.n))
            throw serialization_error("GaussPoly: index length != n");
        f.add_term(a, b, pi_scalar_from_json(t.at("coeff")));
    }
    return f;
}

} // namespace hh
