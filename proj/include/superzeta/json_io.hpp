#pragma once

#include <complex>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "superzeta/divisor.hpp"
#include "superzeta/errors.hpp"
#include "superzeta/eval_context.hpp"
#include "superzeta/selberg.hpp"
#include "superzeta/voros.hpp"
#include "superzeta/zeta_type.hpp"

namespace superzeta {

using json = nlohmann::json;

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

namespace io {

inline std::complex<double> parse_complex(const json& j, const char* what) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw parse_error(std::string(what) + ": expected number or [re, im]");
}

inline json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw parse_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

/// {"terms":[[re(c), im(c), q], ...], "kappa": x, "sigma": y}
inline DirichletLogSeries parse_dirichlet_series(const json& j) {
    DirichletLogSeries s;
    if (!j.contains("terms") || !j["terms"].is_array())
        throw parse_error("DirichletLogSeries: missing terms array");
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 3)
            throw parse_error("DirichletLogSeries: each term must be [re, im, q]");
        s.terms.push_back({{t[0].get<double>(), t[1].get<double>()}, t[2].get<double>()});
    }
    s.order_kappa = j.value("kappa", 1.0);
    s.abscissa_sigma = j.value("sigma", 0.0);
    s.validate();
    return s;
}

inline FunctionModel parse_model(const json& j) {
    const std::string type = j.value("type", "");
    if (type == "dirichlet") {
        if (!j.contains("series")) throw parse_error("model: dirichlet requires series");
        return FunctionModel::dirichlet(parse_dirichlet_series(j["series"]));
    }
    if (type == "dirichlet-polynomial")
        return FunctionModel::dirichlet_polynomial(j.value("a", 2.0));
    if (type == "reciprocal-gamma") return FunctionModel::reciprocal_gamma();
    if (type == "sine-quotient") return FunctionModel::sine_quotient();
    throw parse_error("model: unknown type '" + type + "'");
}

/// {"finite":[[re,im,order],...],
///  "progressions":[{"start":[re,im],"order":n,"weight":"constant"|{"multiple":m}},...]}
inline std::vector<DivisorFamily> parse_divisor(const json& j) {
    std::vector<DivisorFamily> out;
    if (j.contains("finite")) {
        std::vector<DivisorPoint> pts;
        for (const auto& p : j["finite"]) {
            if (!p.is_array() || p.size() != 3)
                throw parse_error("divisor: finite entries must be [re, im, order]");
            pts.push_back({{p[0].get<double>(), p[1].get<double>()},
                           p[2].get<long long>()});
        }
        if (!pts.empty()) out.push_back(DivisorFamily::finite(std::move(pts)));
    }
    if (j.contains("progressions")) {
        for (const auto& p : j["progressions"]) {
            auto start = parse_complex(p.at("start"), "progression start");
            long long order = p.value("order", 1LL);
            int multiple = 0;
            if (p.contains("weight")) {
                const auto& w = p["weight"];
                if (w.is_string() && w.get<std::string>() == "constant") {
                    multiple = 0;
                } else if (w.is_object() && w.contains("multiple")) {
                    multiple = w["multiple"].get<int>();
                } else {
                    throw parse_error("divisor: weight must be \"constant\" or {\"multiple\": m}");
                }
            }
            out.push_back(DivisorFamily::progression(start, order, multiple));
        }
    }
    return out;
}

/// {"nontrivial": {...}, "trivial": {...}, "poles": {...}}, each label optional.
inline LabeledDivisor parse_labeled_divisor(const json& j) {
    LabeledDivisor d;
    if (j.contains("nontrivial")) d.nontrivial = parse_divisor(j["nontrivial"]);
    if (j.contains("trivial")) d.trivial = parse_divisor(j["trivial"]);
    if (j.contains("poles")) d.poles = parse_divisor(j["poles"]);
    if (!j.contains("nontrivial") && !j.contains("trivial") && !j.contains("poles"))
        d.nontrivial = parse_divisor(j);  // bare family object
    return d;
}

/// {"m":…, "a_tilde":[...], "b":[...], "power_terms":[[a_re,a_im,mu],...],
///  "sector_theta":…}; or {"builtin":"stirling"}.
inline AsymptoticExpansion parse_expansion(const json& j) {
    if (j.contains("builtin")) {
        if (j["builtin"] == "stirling") return stirling_expansion();
        throw parse_error("expansion: unknown builtin");
    }
    AsymptoticExpansion e;
    e.m = j.at("m").get<int>();
    for (const auto& a : j.at("a_tilde")) e.a_tilde.push_back(parse_complex(a, "a_tilde"));
    for (const auto& b : j.at("b")) e.b.push_back(parse_complex(b, "b"));
    if (j.contains("power_terms"))
        for (const auto& t : j["power_terms"]) {
            if (!t.is_array() || t.size() != 3)
                throw parse_error("expansion: power_terms entries must be [a_re, a_im, mu]");
            e.power_terms.push_back(
                {{t[0].get<double>(), t[1].get<double>()}, t[2].get<double>()});
        }
    e.sector_theta = j.value("sector_theta", 0.75 * kPi);
    e.validate();
    return e;
}

/// {"zeros":{"points":..., "progressions":..., "lattices":...}, "r":…, "genus":…};
/// or {"builtin":"reciprocal-gamma"}.
inline HadamardData parse_hadamard(const json& j) {
    if (j.contains("builtin")) {
        if (j["builtin"] == "reciprocal-gamma") return reciprocal_gamma_hadamard();
        throw parse_error("hadamard: unknown builtin");
    }
    HadamardData d;
    if (j.contains("zeros")) {
        const auto& z = j["zeros"];
        if (z.contains("points"))
            for (const auto& p : z["points"])
                d.zeros.add_point({p[0].get<double>(), p[1].get<double>()},
                                  p[2].get<long long>());
        if (z.contains("progressions"))
            for (const auto& p : z["progressions"])
                d.zeros.add_progression(parse_complex(p.at("start"), "progression"),
                                        p.value("order", 1LL));
        if (z.contains("lattices"))
            for (const auto& p : z["lattices"])
                d.zeros.add_lattice(parse_complex(p.at("center"), "lattice"),
                                    p.at("spacing").get<double>(), p.value("order", 1LL),
                                    p.value("include_center", true));
    }
    d.zero_order_at_origin = j.value("r", 0);
    d.genus = j.value("genus", 1);
    d.validate();
    return d;
}

inline std::vector<ScatteringPole> parse_scattering(const json& j) {
    std::vector<ScatteringPole> out;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 3)
            throw parse_error("scattering_poles entries must be [q_re, q_im, b]");
        out.push_back({{p[0].get<double>(), p[1].get<double>()}, p[2].get<int>()});
    }
    return out;
}

inline SelbergSpecOdd parse_selberg_odd(const json& j) {
    SelbergSpecOdd s;
    s.n = j.at("n").get<int>();
    s.k = j.at("k").get<int>();
    s.d_c_chi = j.value("d_c_chi", 0);
    s.d_sigma_k = j.value("d_sigma_k", 1);
    s.e_dk = j.value("e_dk", 0);
    s.a_k = j.value("a_k", 0.0);
    if (j.contains("scattering_poles")) s.scattering_poles = parse_scattering(j["scattering_poles"]);
    s.validate();
    return s;
}

inline SelbergSpecEven parse_selberg_even(const json& j) {
    SelbergSpecEven s;
    s.n = j.at("n").get<int>();
    s.k = j.at("k").get<int>();
    s.d_c_chi = j.value("d_c_chi", 0);
    s.d_sigma_k = j.value("d_sigma_k", 1);
    s.d_dk = j.value("d_dk", 0);
    s.dim_V_chi = j.value("dim_V_chi", 1);
    s.euler_char = j.value("euler_char", 0LL);
    if (j.contains("scattering_poles")) s.scattering_poles = parse_scattering(j["scattering_poles"]);
    s.validate();
    return s;
}

inline KleinianParams parse_kleinian(const json& j) {
    KleinianParams p;
    p.index_case = j.value("index_case", 1);
    p.c0_abs = j.value("c0_abs", 1.0);
    p.m_c0 = j.value("m_c0", 1);
    p.lattice_coarea = j.value("lattice_coarea", 1.0);
    p.validate();
    return p;
}

inline EvalContext parse_context(const json& j) {
    EvalContext ctx;
    ctx.target_rel_error = j.value("target_rel_error", ctx.target_rel_error);
    ctx.series_truncation = j.value("series_truncation", ctx.series_truncation);
    ctx.quadrature_nodes = j.value("quadrature_nodes", ctx.quadrature_nodes);
    ctx.derivative_step = j.value("derivative_step", ctx.derivative_step);
    ctx.validate();
    return ctx;
}

inline json branch_flags_to_json(const BranchFlags& f) {
    return json{{"delta", f.delta},     {"y_max", f.y_max},
                {"truncation", f.truncation}, {"k0", f.k0},
                {"quad_panels", f.quad_panels}, {"tail_bound", f.tail_bound}};
}

}  // namespace io
}  // namespace superzeta
