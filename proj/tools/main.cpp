// Command-line front door: stability checks, coefficients, Stokes waves,
// asymptotic spectra, figure-8 curves, the truncated-operator oracle and
// parameter maps, with deterministic CSV/JSON/SVG emitters.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gkdv/emit.hpp"
#include "gkdv/errors.hpp"
#include "gkdv/floquet.hpp"
#include "gkdv/spectrum.hpp"
#include "gkdv/stability_map.hpp"
#include "gkdv/stokes.hpp"
#include "gkdv/symbol.hpp"
#include "gkdv/toml.hpp"

namespace {

using namespace gkdv;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitNumerical = 3;

struct ConfigError : Error {
    using Error::Error;
};

// Everything a run can configure; TOML config first, CLI flags override.
struct RunConfig {
    // symbol
    std::string kind;
    std::string dsl;
    ParamMap params;
    int wave_number = 1;
    // run
    double epsilon = 0.01;
    std::optional<double> mu_max;
    int mu_samples = 40;
    int n_modes = 48;
    double newton_tol = 1.0e-12;
    double threshold_tol = 1.0e-6;
    int figure8_samples = 256;
    int n_quad = 64;
    std::string out_dir;
    std::string format = "csv";
    std::string scan_param = "tth";
    // map
    std::string family;
    std::string p1_name, p2_name;
    double p1_lo = 0, p1_hi = 0, p2_lo = 0, p2_hi = 0;
    int p1_samples = 0, p2_samples = 0;
    bool map_oracle = false;
};

const std::set<std::string> kSymbolKeys = {"kind", "dsl", "wave_number", "tth", "kappa",
                                           "gamma", "ta", "tb", "alpha"};
const std::set<std::string> kRunKeys = {"epsilon",        "mu_max",       "mu_samples",
                                        "n_modes",        "newton_tol",   "threshold_tol",
                                        "figure8_samples", "n_quad",      "out_dir",
                                        "format",         "scan_param"};
const std::set<std::string> kMapKeys = {"family",     "p1", "p2",         "p1_range",
                                        "p2_range",   "p1_samples",       "p2_samples",
                                        "oracle"};

double number_or_throw(const toml::Value& v, const std::string& key) {
    if (v.type != toml::Value::Type::number)
        throw ConfigError("config key '" + key + "' must be a number");
    return v.num;
}

void load_config(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const toml::Document doc = toml::parse(text);

    for (const auto& [section, table] : doc) {
        if (section == "symbol") {
            for (const auto& [key, value] : table) {
                if (!kSymbolKeys.count(key) && value.type != toml::Value::Type::number)
                    throw ConfigError("unknown key 'symbol." + key + "'");
                if (key == "kind") {
                    cfg.kind = value.str;
                } else if (key == "dsl") {
                    cfg.dsl = value.str;
                } else if (key == "wave_number") {
                    cfg.wave_number = static_cast<int>(number_or_throw(value, key));
                } else {
                    cfg.params[key] = number_or_throw(value, key);
                }
            }
        } else if (section == "run") {
            for (const auto& [key, value] : table) {
                if (!kRunKeys.count(key)) throw ConfigError("unknown key 'run." + key + "'");
                if (key == "out_dir") cfg.out_dir = value.str;
                else if (key == "format") cfg.format = value.str;
                else if (key == "scan_param") cfg.scan_param = value.str;
                else if (key == "epsilon") cfg.epsilon = number_or_throw(value, key);
                else if (key == "mu_max") cfg.mu_max = number_or_throw(value, key);
                else if (key == "mu_samples") cfg.mu_samples = static_cast<int>(number_or_throw(value, key));
                else if (key == "n_modes") cfg.n_modes = static_cast<int>(number_or_throw(value, key));
                else if (key == "newton_tol") cfg.newton_tol = number_or_throw(value, key);
                else if (key == "threshold_tol") cfg.threshold_tol = number_or_throw(value, key);
                else if (key == "figure8_samples") cfg.figure8_samples = static_cast<int>(number_or_throw(value, key));
                else if (key == "n_quad") cfg.n_quad = static_cast<int>(number_or_throw(value, key));
            }
        } else if (section == "map") {
            for (const auto& [key, value] : table) {
                if (!kMapKeys.count(key)) throw ConfigError("unknown key 'map." + key + "'");
                if (key == "family") cfg.family = value.str;
                else if (key == "p1") cfg.p1_name = value.str;
                else if (key == "p2") cfg.p2_name = value.str;
                else if (key == "oracle") cfg.map_oracle = value.flag;
                else if (key == "p1_samples") cfg.p1_samples = static_cast<int>(number_or_throw(value, key));
                else if (key == "p2_samples") cfg.p2_samples = static_cast<int>(number_or_throw(value, key));
                else if (key == "p1_range" || key == "p2_range") {
                    if (value.type != toml::Value::Type::array || value.array.size() != 2)
                        throw ConfigError("'map." + key + "' must be [lo, hi]");
                    if (key == "p1_range") { cfg.p1_lo = value.array[0]; cfg.p1_hi = value.array[1]; }
                    else { cfg.p2_lo = value.array[0]; cfg.p2_hi = value.array[1]; }
                }
            }
        } else if (!section.empty()) {
            throw ConfigError("unknown config section '" + section + "'");
        }
    }
}

void apply_param_flags(RunConfig& cfg, const std::vector<std::string>& kv_flags) {
    for (const std::string& kv : kv_flags) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError("--p expects name=value, got '" + kv + "'");
        try {
            cfg.params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw ConfigError("--p value for '" + kv.substr(0, eq) + "' is not a number");
        }
    }
}

DispersionSymbol make_symbol(const RunConfig& cfg) {
    if (!cfg.kind.empty() && !cfg.dsl.empty())
        throw ConfigError("give either --symbol or --dsl, not both");
    DispersionSymbol sym =
        !cfg.dsl.empty()
            ? DispersionSymbol::from_expression(cfg.dsl, cfg.params)
            : DispersionSymbol::catalog(symbol_kind_from_string(
                                            cfg.kind.empty() ? "kdv" : cfg.kind),
                                        cfg.params);
    return cfg.wave_number == 1 ? sym : sym.rescaled(cfg.wave_number);
}

void write_file(const std::string& out_dir, const std::string& name, const std::string& body) {
    std::filesystem::create_directories(out_dir);
    const std::string path = out_dir + "/" + name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    out << body;
    std::cerr << "wrote " << path << "\n";
}

void deliver(const RunConfig& cfg, const std::string& name, const std::string& body) {
    if (cfg.out_dir.empty()) {
        std::cout << body;
    } else {
        write_file(cfg.out_dir, name, body);
    }
}

std::vector<double> mu_grid_for(const RunConfig& cfg, const ModulationCoefficients& coeffs) {
    double mu_max = cfg.mu_max.value_or(0.0);
    if (mu_max <= 0.0)
        mu_max = coeffs.te_wb > 0.0 ? 1.5 * mu_critical(coeffs, cfg.epsilon) : 0.05;
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(cfg.mu_samples));
    for (int i = 1; i <= cfg.mu_samples; ++i) grid.push_back(mu_max * i / cfg.mu_samples);
    return grid;
}

// -- subcommands --------------------------------------------------------------

int cmd_check(const RunConfig& cfg) {
    const DispersionSymbol sym = make_symbol(cfg);
    const AssumptionAReport a = check_assumption_a(sym);
    emit::Json j = emit::Json::object();
    j.set("symbol", emit::symbol_json(sym));
    j.set("assumption_a", emit::assumption_a_json(a));
    bool b_passed = false;
    try {
        const ModulationCoefficients coeffs = compute_coefficients(sym);
        const AssumptionBReport b = check_assumption_b(coeffs);
        b_passed = b.passed();
        j.set("assumption_b", emit::assumption_b_json(b));
    } catch (const DegenerateCoefficient& e) {
        j.set("assumption_b",
              emit::Json::object()
                  .set("passed", emit::Json::boolean(false))
                  .set("degenerate", emit::Json::string(e.quantity)));
    }
    j.set("classification", emit::classification_json(classify(sym)));
    deliver(cfg, "check.json", j.dump());
    return a.passed() && b_passed ? kExitOk : kExitDegenerate;
}

int cmd_coeffs(const RunConfig& cfg) {
    const DispersionSymbol sym = make_symbol(cfg);
    const Classification cls = classify(sym);
    emit::Json j = emit::Json::object();
    j.set("symbol", emit::symbol_json(sym));
    try {
        j.set("coefficients", emit::coefficients_json(compute_coefficients(sym)));
    } catch (const DegenerateCoefficient& e) {
        j.set("degenerate", emit::Json::string(e.quantity));
    }
    j.set("classification", emit::classification_json(cls));
    deliver(cfg, "coeffs.json", j.dump());
    return cls.value == StabilityClass::degenerate ? kExitDegenerate : kExitOk;
}

int cmd_stokes(const RunConfig& cfg) {
    const DispersionSymbol sym = make_symbol(cfg);
    const StokesWave wave = solve_newton(sym, cfg.epsilon, cfg.n_modes, cfg.newton_tol);
    deliver(cfg, "wave.json", emit::wave_json(wave).dump());
    return kExitOk;
}

int cmd_spectrum(const RunConfig& cfg) {
    const DispersionSymbol sym = make_symbol(cfg);
    const ModulationCoefficients coeffs = compute_coefficients(sym);
    const BenjaminFeirBranch branch =
        eigenvalue_branches(coeffs, cfg.epsilon, mu_grid_for(cfg, coeffs));
    if (cfg.format == "json") {
        deliver(cfg, "spectrum.json", emit::branch_json(branch).dump());
    } else {
        deliver(cfg, "spectrum.csv", emit::branch_csv(branch));
    }
    return kExitOk;
}

int cmd_figure8(const RunConfig& cfg) {
    const DispersionSymbol sym = make_symbol(cfg);
    const ModulationCoefficients coeffs = compute_coefficients(sym);
    if (coeffs.te_wb <= 0.0) {
        std::cerr << "figure8: not unstable, te_wb = " << emit::fp(coeffs.te_wb)
                  << " <= 0\n";
        return kExitDegenerate;
    }
    const Figure8Curve curve = figure8_curve(coeffs, cfg.epsilon, cfg.figure8_samples);
    // Branch samples over the unstable band accompany the curve.
    std::vector<double> grid;
    for (int i = 0; i <= cfg.figure8_samples; ++i)
        grid.push_back(curve.mu_crit * i / cfg.figure8_samples);
    const BenjaminFeirBranch branch = eigenvalue_branches(coeffs, cfg.epsilon, std::move(grid));
    if (cfg.out_dir.empty()) {
        std::cout << emit::figure8_svg(curve);
    } else {
        write_file(cfg.out_dir, "figure8.svg", emit::figure8_svg(curve));
        write_file(cfg.out_dir, "figure8.csv", emit::branch_csv(branch));
    }
    return kExitOk;
}

int cmd_oracle(const RunConfig& cfg) {
    const DispersionSymbol sym = make_symbol(cfg);
    const ModulationCoefficients coeffs = compute_coefficients(sym);
    const ComparisonReport report =
        compare_asymptotics(sym, cfg.epsilon, mu_grid_for(cfg, coeffs), cfg.n_modes);
    if (cfg.format == "csv") {
        deliver(cfg, "oracle.csv", emit::comparison_csv(report));
    } else {
        deliver(cfg, "oracle.json", emit::comparison_json(report).dump());
    }
    return kExitOk;
}

SymbolFamily2 family_of(const RunConfig& cfg, std::string& p1_name, std::string& p2_name) {
    const std::string family = cfg.family.empty() ? cfg.kind : cfg.family;
    if (!cfg.dsl.empty()) {
        if (p1_name.empty()) throw ConfigError("map over --dsl needs --p1 <param-name>");
        const std::string dsl = cfg.dsl;
        const ParamMap base = cfg.params;
        const std::string n1 = p1_name, n2 = p2_name;
        return [dsl, base, n1, n2](double a, double b) {
            ParamMap p = base;
            p[n1] = a;
            if (!n2.empty()) p[n2] = b;
            return DispersionSymbol::from_expression(dsl, p);
        };
    }
    const SymbolKind kind = symbol_kind_from_string(family);
    // Default parameter axes per family.
    if (p1_name.empty()) {
        switch (kind) {
            case SymbolKind::kawahara: p1_name = "ta"; p2_name = p2_name.empty() ? "tb" : p2_name; break;
            case SymbolKind::capillary_whitham: p1_name = "tth"; p2_name = p2_name.empty() ? "kappa" : p2_name; break;
            case SymbolKind::vorticity_whitham: p1_name = "tth"; p2_name = p2_name.empty() ? "gamma" : p2_name; break;
            case SymbolKind::fkdv: p1_name = "alpha"; break;
            default: p1_name = "tth"; break;
        }
    }
    const ParamMap base = cfg.params;
    const std::string n1 = p1_name, n2 = p2_name;
    return [kind, base, n1, n2](double a, double b) {
        ParamMap p = base;
        p[n1] = a;
        if (!n2.empty()) p[n2] = b;
        return DispersionSymbol::catalog(kind, p);
    };
}

int cmd_map(const RunConfig& cfg) {
    RunConfig local = cfg;
    std::string p1 = cfg.p1_name, p2 = cfg.p2_name;
    const SymbolFamily2 family = family_of(local, p1, p2);
    if (local.p1_samples < 2) throw ConfigError("map needs p1_samples >= 2");

    if (p2.empty() || local.p2_samples < 2) {
        const auto points = scan1d(
            [&](double a) { return family(a, 0.0); }, local.p1_lo, local.p1_hi,
            local.p1_samples);
        deliver(cfg, "map.csv", emit::scan1d_csv(p1, points));
        return kExitOk;
    }
    const SignMap map = scan2d(family, p1, local.p1_lo, local.p1_hi, local.p1_samples, p2,
                               local.p2_lo, local.p2_hi, local.p2_samples);
    if (cfg.out_dir.empty()) {
        std::cout << emit::signmap_csv(map);
    } else {
        write_file(cfg.out_dir, "map.csv", emit::signmap_csv(map));
        if (cfg.format == "svg") write_file(cfg.out_dir, "map.svg", emit::signmap_svg(map));
    }
    return kExitOk;
}

int cmd_threshold(const RunConfig& cfg) {
    double value = 0.0;
    if (!cfg.dsl.empty()) {
        const std::string dsl = cfg.dsl;
        const ParamMap base = cfg.params;
        const std::string scan = cfg.scan_param;
        value = whitham_threshold(cfg.threshold_tol, [dsl, base, scan](double tth) {
            ParamMap p = base;
            p[scan] = tth;
            return DispersionSymbol::from_expression(dsl, p);
        });
    } else {
        value = whitham_threshold(cfg.threshold_tol);
    }
    emit::Json j = emit::Json::object();
    j.set("threshold", emit::Json::number(value));
    j.set("tol", emit::Json::number(cfg.threshold_tol));
    deliver(cfg, "threshold.json", j.dump());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Modulational (Benjamin-Feir) stability toolkit for generalized KdV equations"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    std::vector<std::string> param_flags;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "TOML configuration file");
        sub->add_option("--symbol", cfg.kind,
                        "catalog symbol: whitham, capillary_whitham, vorticity_whitham, "
                        "kawahara, ilw, kdv, fkdv, benjamin_ono");
        sub->add_option("--dsl", cfg.dsl, "dispersion symbol as an expression in xi");
        sub->add_option("--p", param_flags, "symbol parameter name=value (repeatable)");
        sub->add_option("--tth", [&cfg](auto& v) { cfg.params["tth"] = std::stod(v[0]); return true; }, "depth parameter");
        sub->add_option("--kappa", [&cfg](auto& v) { cfg.params["kappa"] = std::stod(v[0]); return true; }, "surface tension");
        sub->add_option("--gamma", [&cfg](auto& v) { cfg.params["gamma"] = std::stod(v[0]); return true; }, "vorticity");
        sub->add_option("--ta", [&cfg](auto& v) { cfg.params["ta"] = std::stod(v[0]); return true; }, "kawahara quadratic coefficient");
        sub->add_option("--tb", [&cfg](auto& v) { cfg.params["tb"] = std::stod(v[0]); return true; }, "kawahara quartic coefficient");
        sub->add_option("--alpha", [&cfg](auto& v) { cfg.params["alpha"] = std::stod(v[0]); return true; }, "fkdv exponent");
        sub->add_option("--wave-number", cfg.wave_number, "rescale to 2*pi/kappa-periodic waves");
        sub->add_option("--epsilon", cfg.epsilon, "wave amplitude");
        sub->add_option("--mu-max", [&cfg](auto& v) { cfg.mu_max = std::stod(v[0]); return true; }, "largest Floquet exponent");
        sub->add_option("--mu-samples", cfg.mu_samples, "Floquet grid size");
        sub->add_option("--n-modes", cfg.n_modes, "Galerkin truncation");
        sub->add_option("--newton-tol", cfg.newton_tol, "Newton residual tolerance");
        sub->add_option("--tol", cfg.threshold_tol, "threshold bisection tolerance");
        sub->add_option("--figure8-samples", cfg.figure8_samples, "curve sample count");
        sub->add_option("--out-dir", cfg.out_dir, "write data files here instead of stdout");
        sub->add_option("--format", cfg.format, "csv, json or svg where applicable");
        sub->add_option("--scan-param", cfg.scan_param, "threshold scan parameter for --dsl");
    };

    CLI::App* check = app.add_subcommand("check", "assumption A/B report");
    CLI::App* coeffs = app.add_subcommand("coeffs", "modulational coefficients and verdict");
    CLI::App* stokes = app.add_subcommand("stokes", "Newton-Galerkin traveling wave");
    CLI::App* spectrum = app.add_subcommand("spectrum", "asymptotic eigenvalue branches");
    CLI::App* figure8 = app.add_subcommand("figure8", "figure-8 curve as SVG and CSV");
    CLI::App* oracle = app.add_subcommand("oracle", "truncated-operator comparison report");
    CLI::App* map = app.add_subcommand("map", "parameter scans of the stability verdict");
    CLI::App* threshold = app.add_subcommand("threshold", "Whitham-Benjamin critical depth");

    for (CLI::App* sub : {check, coeffs, stokes, spectrum, figure8, oracle, map, threshold})
        add_common(sub);

    map->add_option("--family", cfg.family, "catalog family to scan");
    map->add_option("--p1", cfg.p1_name, "first scan parameter");
    map->add_option("--p2", cfg.p2_name, "second scan parameter");
    map->add_option("--p1-range", [&cfg](auto& v) {
        cfg.p1_lo = std::stod(v[0]); cfg.p1_hi = std::stod(v[1]); return true; },
        "first parameter range")->expected(2);
    map->add_option("--p2-range", [&cfg](auto& v) {
        cfg.p2_lo = std::stod(v[0]); cfg.p2_hi = std::stod(v[1]); return true; },
        "second parameter range")->expected(2);
    map->add_option("--p1-samples", cfg.p1_samples, "first parameter sample count");
    map->add_option("--p2-samples", cfg.p2_samples, "second parameter sample count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!config_path.empty()) {
            // Flags already parsed win over the file: reload file first, then
            // re-apply the command line on a fresh pass.
            RunConfig from_file;
            load_config(from_file, config_path);
            // Command-line values were written straight into cfg; merge file
            // values only where the command line left defaults untouched.
            RunConfig defaults;
            auto merged = from_file;
            if (cfg.kind != defaults.kind) merged.kind = cfg.kind;
            if (cfg.dsl != defaults.dsl) merged.dsl = cfg.dsl;
            for (const auto& [k, v] : cfg.params) merged.params[k] = v;
            if (cfg.wave_number != defaults.wave_number) merged.wave_number = cfg.wave_number;
            if (cfg.epsilon != defaults.epsilon) merged.epsilon = cfg.epsilon;
            if (cfg.mu_max) merged.mu_max = cfg.mu_max;
            if (cfg.mu_samples != defaults.mu_samples) merged.mu_samples = cfg.mu_samples;
            if (cfg.n_modes != defaults.n_modes) merged.n_modes = cfg.n_modes;
            if (cfg.newton_tol != defaults.newton_tol) merged.newton_tol = cfg.newton_tol;
            if (cfg.threshold_tol != defaults.threshold_tol) merged.threshold_tol = cfg.threshold_tol;
            if (cfg.figure8_samples != defaults.figure8_samples) merged.figure8_samples = cfg.figure8_samples;
            if (!cfg.out_dir.empty()) merged.out_dir = cfg.out_dir;
            if (cfg.format != defaults.format) merged.format = cfg.format;
            if (cfg.scan_param != defaults.scan_param) merged.scan_param = cfg.scan_param;
            if (!cfg.family.empty()) merged.family = cfg.family;
            if (!cfg.p1_name.empty()) merged.p1_name = cfg.p1_name;
            if (!cfg.p2_name.empty()) merged.p2_name = cfg.p2_name;
            if (cfg.p1_samples) merged.p1_samples = cfg.p1_samples;
            if (cfg.p2_samples) merged.p2_samples = cfg.p2_samples;
            if (cfg.p1_lo != 0 || cfg.p1_hi != 0) { merged.p1_lo = cfg.p1_lo; merged.p1_hi = cfg.p1_hi; }
            if (cfg.p2_lo != 0 || cfg.p2_hi != 0) { merged.p2_lo = cfg.p2_lo; merged.p2_hi = cfg.p2_hi; }
            cfg = merged;
        }
        apply_param_flags(cfg, param_flags);

        if (check->parsed()) return cmd_check(cfg);
        if (coeffs->parsed()) return cmd_coeffs(cfg);
        if (stokes->parsed()) return cmd_stokes(cfg);
        if (spectrum->parsed()) return cmd_spectrum(cfg);
        if (figure8->parsed()) return cmd_figure8(cfg);
        if (oracle->parsed()) return cmd_oracle(cfg);
        if (map->parsed()) return cmd_map(cfg);
        if (threshold->parsed()) return cmd_threshold(cfg);
        return kExitUsage;
    } catch (const ResonantDenominator& e) {
        std::cerr << "degenerate: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const DegenerateCoefficient& e) {
        std::cerr << "degenerate: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const NotUnstable& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const BracketInvalid& e) {
        std::cerr << "degenerate: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const InvalidN& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error at offset " << e.offset << ": " << e.what()
                  << " (expected " << e.expected << ")\n";
        return kExitUsage;
    } catch (const UnknownFunction& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NonDifferentiable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}
