#include "hh/matrix_serialize.hpp"

namespace hh {

ojson operator_to_json(const OperatorMatrix& m) {
    const FockTruncation& fock = m.fock();
    ojson j;
    j["n"] = fock.context().n;
    j["lambda"] = rat_to_string(fock.context().lambda);
    j["N"] = fock.cutoff();
    ojson entries = ojson::array();
    for (std::size_t nu = 0; nu < fock.dim(); ++nu) {
        for (std::size_t mu = 0; mu < fock.dim(); ++mu) {
            const PiScalar& c = m.at(mu, nu);
            if (c.is_zero()) continue;
            ojson e;
            e["mu"] = fock.index(mu);
            e["nu"] = fock.index(nu);
            e["c"] = pi_scalar_to_json(c);
            entries.push_back(std::move(e));
        }
    }
    j["entries"] = std::move(entries);
    return j;
}

OperatorMatrix operator_from_json(const ojson& j) {
    if (!j.contains("n") || !j.contains("lambda") || !j.contains("N") ||
        !j.contains("entries"))
        throw serialization_error("operator_from_json: missing field");
    WeylContext ctx(j.at("n").get<int>(),
                    rat_from_string(j.at("lambda").get<std::string>()));
    FockPtr fock = make_fock(ctx, j.at("N").get<unsigned>());
    OperatorMatrix m(fock);
    for (const auto& e : j.at("entries")) {
        MIdx mu = e.at("mu").get<MIdx>();
        MIdx nu = e.at("nu").get<MIdx>();
        if (mu.size() != static_cast<std::size_t>(ctx.n) ||
            nu.size() != static_cast<std::size_t>(ctx.n))
            throw serialization_error("operator_from_json: bad index length");
        m.at(fock->position(mu), fock->position(nu)) =
            pi_scalar_from_json(e.at("c"));
    }
    return m;
}

} // namespace hh
