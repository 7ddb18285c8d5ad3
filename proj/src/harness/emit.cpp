#include "hh/emit.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "hh/errors.hpp"
#include "hh/fock.hpp"
#include "hh/hecke.hpp"
#include "hh/laguerre.hpp"
#include "hh/matrix_serialize.hpp"
#include "hh/spherical.hpp"
#include "hh/weyl.hpp"

namespace hh {

namespace {

std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void check_budget(const SuiteConfig& cfg, const char* target) {
    if (cfg.n < 1 || cfg.n > 4)
        throw domain_error(std::string(target) + ": n out of the supported range [1,4]");
    if (cfg.N > 16 || cfg.kmax > 8)
        throw domain_error(std::string(target) + ": ranges above (N,kmax)=(16,8) are "
                                                 "not desk-scale");
    cfg.context();
}

// psi_0..psi_kmax on r in [0,4] step 0.05, by Horner on the exact Laguerre
// coefficients (independent of GaussPoly::evaluate):
//   psi_k(r) = pi^{-n} (2|lambda|)^n L_k^{n-1}(2|lambda| r^2) e^{-|lambda| r^2}.
std::string emit_profile(const SuiteConfig& cfg) {
    const WeylContext ctx = cfg.context();
    const double lam = ctx.abs_lambda().get_d();
    const double front =
        std::pow(std::acos(-1.0), -ctx.n) * std::pow(2.0 * lam, ctx.n);
    std::vector<std::vector<double>> coeffs;
    for (unsigned k = 0; k <= cfg.kmax; ++k) {
        std::vector<double> c;
        for (const Rat& r : laguerre_coeffs(k, Rat(ctx.n - 1))) c.push_back(r.get_d());
        coeffs.push_back(std::move(c));
    }
    std::string out = "r";
    for (unsigned k = 0; k <= cfg.kmax; ++k) out += ",psi_" + std::to_string(k);
    out += "\n";
    for (int i = 0; i <= 80; ++i) {
        const double r = 0.05 * i;
        char rbuf[16];
        std::snprintf(rbuf, sizeof(rbuf), "%.2f", r);
        out += rbuf;
        const double x = 2.0 * lam * r * r;
        const double damp = front * std::exp(-lam * r * r);
        for (unsigned k = 0; k <= cfg.kmax; ++k) {
            double horner = 0.0;
            for (auto it = coeffs[k].rbegin(); it != coeffs[k].rend(); ++it)
                horner = horner * x + *it;
            out += ",";
            out += fmt_g17(damp * horner);
        }
        out += "\n";
    }
    return out;
}

std::string emit_matrix(const SuiteConfig& cfg) {
    if (binomial((unsigned long)(cfg.n + cfg.N), (unsigned long)cfg.n) > 500)
        throw domain_error("matrix: truncation dimension exceeds the "
                           "desk-scale budget (500)");
    const WeylContext ctx = cfg.context();
    const unsigned k = std::min(cfg.kmax, cfg.N);
    OperatorMatrix S = weyl_transform(bounded_spherical(ctx, k), make_fock(ctx, cfg.N));
    return operator_to_json(S).dump(2) + "\n";
}

std::string emit_table(const SuiteConfig& cfg) {
    const WeylContext ctx = cfg.context();
    GaussPoly P = GaussPoly::constant(ctx, Rat(0), PiScalar::one());
    GaussPoly g = GaussPoly::constant(ctx, ctx.abs_lambda(), PiScalar::one());
    ojson j;
    j["n"] = ctx.n;
    j["lambda"] = rat_to_string(ctx.lambda);
    j["harmonic"] = "1";
    j["density"] = "exp(-|lambda| |z|^2)";
    j["levels"] = ojson::array();
    for (const HeckeCoefficient& co : hecke_bochner(P, g, cfg.kmax)) {
        ojson row;
        row["k"] = co.k;
        row["C"] = co.C.str();
        row["c_closed"] = co.c_closed.str();
        j["levels"].push_back(row);
    }
    return j.dump(2) + "\n";
}

} // namespace

const std::vector<std::string>& emit_targets() {
    static const std::vector<std::string> names = {"profile", "matrix", "table"};
    return names;
}

EmitResult emit_target(const std::string& target, const SuiteConfig& cfg) {
    check_budget(cfg, target.c_str());
    EmitResult res;
    if (target == "profile") {
        res.files.emplace_back("profile.csv", emit_profile(cfg));
    } else if (target == "matrix") {
        res.files.emplace_back("matrix.json", emit_matrix(cfg));
    } else if (target == "table") {
        res.files.emplace_back("table.json", emit_table(cfg));
    } else {
        throw domain_error("emit_target: unknown target '" + target + "'");
    }
    return res;
}

} // namespace hh
