#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "superzeta/json_io.hpp"
#include "superzeta/superzeta.hpp"
#include "superzeta/verify.hpp"

namespace superzeta::cli {

struct GridPoint {
    std::complex<double> s;
    std::complex<double> z;
};

struct Row {
    GridPoint point;
    std::complex<double> value{0.0, 0.0};
    double est_error = 0.0;
    BranchFlags flags{};
    std::string label;  // extra output channel (kleinian components)
    bool failed = false;
    int fail_code = 0;
    std::string diagnostic;
};

struct RunOutcome {
    int exit_code = 0;
    std::string output;       // rendered table (csv or json)
    std::string diagnostic;   // one-line machine-readable error, empty on success
    std::string out_path;     // empty = stdout
    std::string format = "csv";
};

struct Overrides {
    std::optional<std::string> out_path;
    std::optional<std::string> format;
    std::optional<double> target_rel_error;
    std::optional<int> threads;
    std::optional<std::string> suite;
};

namespace detail {

inline json resolve_input(const json& inputs, const char* key) {
    if (!inputs.contains(key))
        throw parse_error(std::string("config: missing input '") + key + "'");
    const json& v = inputs[key];
    if (v.is_string()) return io::load_file(v.get<std::string>());
    return v;
}

inline std::vector<GridPoint> parse_grid(const json& j) {
    std::vector<GridPoint> grid;
    if (j.is_array()) {
        for (const auto& row : j) {
            if (!row.is_array() || row.size() != 4)
                throw parse_error("grid rows must be [s_re, s_im, z_re, z_im]");
            grid.push_back({{row[0].get<double>(), row[1].get<double>()},
                            {row[2].get<double>(), row[3].get<double>()}});
        }
    } else if (j.is_object() && j.contains("s") && j.contains("z")) {
        std::vector<std::complex<double>> ss, zs;
        for (const auto& e : j["s"]) ss.push_back(io::parse_complex(e, "grid s"));
        for (const auto& e : j["z"]) zs.push_back(io::parse_complex(e, "grid z"));
        for (const auto& s : ss)
            for (const auto& z : zs) grid.push_back({s, z});
    } else {
        throw parse_error("grid must be an array of rows or {\"s\":[...],\"z\":[...]}");
    }
    if (grid.empty()) throw parse_error("grid must be non-empty");
    return grid;
}

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string render_csv(const std::vector<Row>& rows) {
    std::ostringstream out;
    out << "s_re,s_im,z_re,z_im,value_re,value_im,est_error\n";
    for (const auto& r : rows) {
        out << format_double(r.point.s.real()) << ',' << format_double(r.point.s.imag())
            << ',' << format_double(r.point.z.real()) << ','
            << format_double(r.point.z.imag()) << ',' << format_double(r.value.real())
            << ',' << format_double(r.value.imag()) << ',' << format_double(r.est_error)
            << '\n';
    }
    return out.str();
}

inline std::string render_json(const std::vector<Row>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json o{{"s", {r.point.s.real(), r.point.s.imag()}},
               {"z", {r.point.z.real(), r.point.z.imag()}},
               {"value", {r.value.real(), r.value.imag()}},
               {"est_error", r.est_error},
               {"branch_flags", io::branch_flags_to_json(r.flags)}};
        if (!r.label.empty()) o["component"] = r.label;
        arr.push_back(o);
    }
    return arr.dump(2) + "\n";
}

template <typename Eval>
void evaluate_rows(std::vector<Row>& rows, int threads, Eval&& eval) {
    const auto work = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            try {
                eval(rows[i]);
            } catch (const parse_error& e) {
                rows[i].failed = true;
                rows[i].fail_code = 1;
                rows[i].diagnostic = e.what();
            } catch (const accuracy_error& e) {
                rows[i].failed = true;
                rows[i].fail_code = 3;
                rows[i].diagnostic = e.what();
            } catch (const domain_error& e) {
                rows[i].failed = true;
                rows[i].fail_code = 2;
                rows[i].diagnostic = e.what();
            } catch (const std::exception& e) {
                rows[i].failed = true;
                rows[i].fail_code = 2;
                rows[i].diagnostic = e.what();
            }
        }
    };
    if (threads <= 1 || rows.size() < 2) {
        work(0, rows.size());
        return;
    }
    const size_t n = rows.size();
    const size_t nthreads = std::min<size_t>(threads, n);
    std::vector<std::thread> pool;
    const size_t chunk = (n + nthreads - 1) / nthreads;
    for (size_t t = 0; t < nthreads; ++t) {
        const size_t begin = t * chunk;
        const size_t end = std::min(n, begin + chunk);
        if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
}

}  // namespace detail

/// Execute a job described by a JSON config.  Deterministic: identical config
/// and context produce byte-identical output.
inline RunOutcome run_job(const json& config, const Overrides& ov = {}) {
    RunOutcome outcome;
    try {
        const std::string command = config.value("command", "");
        EvalContext ctx = config.contains("context") ? io::parse_context(config["context"])
                                                     : EvalContext{};
        if (ov.target_rel_error) {
            ctx.target_rel_error = *ov.target_rel_error;
            ctx.validate();
        }
        if (config.contains("output")) {
            outcome.out_path = config["output"].value("path", "");
            outcome.format = config["output"].value("format", "csv");
        }
        if (ov.out_path) outcome.out_path = *ov.out_path;
        if (ov.format) outcome.format = *ov.format;
        if (outcome.format != "csv" && outcome.format != "json")
            throw parse_error("output format must be csv or json");
        const int threads = ov.threads.value_or(config.value("threads", 1));

        if (command == "verify") {
            std::string suite = ov.suite ? *ov.suite : config.value("suite", "");
            if (suite.empty()) throw parse_error("verify requires a named suite");
            const auto results = verify::run_suite(suite);
            std::ostringstream out;
            bool all_pass = true;
            for (const auto& r : results) {
                all_pass = all_pass && r.pass;
                out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "  (err "
                    << detail::format_double(r.max_err) << ", tol "
                    << detail::format_double(r.tol) << ")\n";
            }
            outcome.output = out.str();
            outcome.exit_code = all_pass ? 0 : 3;
            return outcome;
        }

        const json inputs = config.value("inputs", json::object());
        std::vector<Row> rows;
        for (const auto& g : detail::parse_grid(config.at("grid"))) {
            Row r;
            r.point = g;
            rows.push_back(std::move(r));
        }

        if (command == "eval-superzeta") {
            const std::string method = config.value("method", "auto");
            if (inputs.contains("model")) {
                auto model = io::parse_model(detail::resolve_input(inputs, "model"));
                detail::evaluate_rows(rows, threads, [&](Row& r) {
                    SuperzetaResult res;
                    if (method == "direct") {
                        auto oracle = model.zero_oracle();
                        if (!oracle)
                            throw domain_error("eval-superzeta: model has no zero oracle");
                        res = superzeta_direct(*oracle, r.point.s, r.point.z, ctx);
                    } else if (method == "rep") {
                        res = superzeta_integral_rep(model, r.point.s, r.point.z, ctx);
                    } else {
                        res = superzeta_continued(model, r.point.s, r.point.z, 0.0, ctx);
                    }
                    r.value = res.value;
                    r.est_error = res.est_error;
                    r.flags = res.branch_flags;
                });
            } else if (inputs.contains("divisor")) {
                auto divisor =
                    io::parse_labeled_divisor(detail::resolve_input(inputs, "divisor"));
                detail::evaluate_rows(rows, threads, [&](Row& r) {
                    auto res = labeled_superzeta(divisor, r.point.s, r.point.z, ctx);
                    r.value = res.value;
                    r.est_error = res.est_error;
                });
            } else {
                throw parse_error("eval-superzeta requires a model or divisor input");
            }
        } else if (command == "eval-det") {
            auto model = io::parse_model(detail::resolve_input(inputs, "model"));
            detail::evaluate_rows(rows, threads, [&](Row& r) {
                r.value = regularized_det(model, r.point.z, ctx);
                r.est_error = ctx.target_rel_error * std::abs(r.value);
            });
        } else if (command == "residues") {
            auto model = io::parse_model(detail::resolve_input(inputs, "model"));
            detail::evaluate_rows(rows, threads, [&](Row& r) {
                const int n = static_cast<int>(std::lround(r.point.s.real()));
                if (std::abs(r.point.s.real() - n) > 1e-12 || r.point.s.imag() != 0.0)
                    throw domain_error("residues: s must be a positive integer order");
                r.value = i_residue(model, n, r.point.z, ctx);
                r.est_error =
                    std::abs(r.value - i_residue_numeric(model, n, r.point.z, ctx));
            });
        } else if (command == "voros") {
            auto expansion = io::parse_expansion(detail::resolve_input(inputs, "expansion"));
            auto hadamard = io::parse_hadamard(detail::resolve_input(inputs, "hadamard"));
            detail::evaluate_rows(rows, threads, [&](Row& r) {
                auto res = voros_superzeta(expansion, hadamard, r.point.s, r.point.z, ctx);
                r.value = res.value;
                r.est_error = res.est_error;
                r.flags = res.branch_flags;
            });
        } else if (command == "selberg-odd") {
            auto spec = io::parse_selberg_odd(detail::resolve_input(inputs, "selberg"));
            auto model = io::parse_model(detail::resolve_input(inputs, "model"));
            detail::evaluate_rows(rows, threads, [&](Row& r) {
                auto res = odd_nontrivial_superzeta(spec, model, r.point.s, r.point.z, ctx);
                r.value = res.value;
                r.est_error = res.est_error;
                r.flags = res.branch_flags;
            });
        } else if (command == "selberg-even") {
            auto spec = io::parse_selberg_even(detail::resolve_input(inputs, "selberg"));
            auto model = io::parse_model(detail::resolve_input(inputs, "model"));
            detail::evaluate_rows(rows, threads, [&](Row& r) {
                auto res = even_nontrivial_superzeta(spec, model, r.point.s, r.point.z, ctx);
                r.value = res.value;
                r.est_error = res.est_error;
                r.flags = res.branch_flags;
            });
        } else if (command == "kleinian") {
            auto params = io::parse_kleinian(detail::resolve_input(inputs, "kleinian"));
            std::vector<Row> expanded;
            for (const auto& r : rows) {
                auto kc = kleinian_constants(params, r.point.s);
                Row plus = r, minus = r, phi = r;
                plus.value = kc.det_prefactor_plus;
                plus.label = "det_prefactor_plus";
                minus.value = kc.det_prefactor_minus;
                minus.label = "det_prefactor_minus";
                phi.value = kc.phi_quotient_prefactor;
                phi.label = "phi_quotient_prefactor";
                expanded.push_back(plus);
                expanded.push_back(minus);
                expanded.push_back(phi);
            }
            rows = std::move(expanded);
        } else {
            throw parse_error("unknown command '" + command + "'");
        }

        // first failed row (input order) decides the exit
        for (const auto& r : rows) {
            if (r.failed) {
                outcome.exit_code = r.fail_code;
                outcome.diagnostic = "error code=" + std::to_string(r.fail_code) +
                                     " message=\"" + r.diagnostic + "\"";
                return outcome;
            }
        }
        // accuracy gate on every row
        for (const auto& r : rows) {
            if (r.est_error > ctx.target_rel_error * std::max(1.0, std::abs(r.value))) {
                outcome.exit_code = 3;
                outcome.diagnostic =
                    "error code=3 message=\"accuracy target not met (est_error " +
                    detail::format_double(r.est_error) + ")\"";
                return outcome;
            }
        }
        outcome.output = outcome.format == "csv" ? detail::render_csv(rows)
                                                 : detail::render_json(rows);
        return outcome;
    } catch (const parse_error& e) {
        outcome.exit_code = 1;
        outcome.diagnostic = std::string("error code=1 message=\"") + e.what() + "\"";
    } catch (const json::exception& e) {
        outcome.exit_code = 1;
        outcome.diagnostic = std::string("error code=1 message=\"") + e.what() + "\"";
    } catch (const accuracy_error& e) {
        outcome.exit_code = 3;
        outcome.diagnostic = std::string("error code=3 message=\"") + e.what() + "\"";
    } catch (const domain_error& e) {
        outcome.exit_code = 2;
        outcome.diagnostic = std::string("error code=2 message=\"") + e.what() + "\"";
    } catch (const std::exception& e) {
        outcome.exit_code = 2;
        outcome.diagnostic = std::string("error code=2 message=\"") + e.what() + "\"";
    }
    return outcome;
}

}  // namespace superzeta::cli
