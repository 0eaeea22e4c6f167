#include "gkdv/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "gkdv/errors.hpp"

namespace gkdv::emit {

std::string fp(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

// ---------------------------------------------------------------------------
// Json
// ---------------------------------------------------------------------------

Json Json::object() { return Json{}; }

Json Json::array() {
    Json j;
    j.type_ = Type::array;
    return j;
}

Json Json::number(double v) {
    Json j;
    j.type_ = Type::number;
    j.num_ = v;
    return j;
}

Json Json::integer(long long v) {
    Json j;
    j.type_ = Type::integer;
    j.int_ = v;
    return j;
}

Json Json::string(std::string v) {
    Json j;
    j.type_ = Type::string;
    j.str_ = std::move(v);
    return j;
}

Json Json::boolean(bool v) {
    Json j;
    j.type_ = Type::boolean;
    j.flag_ = v;
    return j;
}

Json& Json::set(const std::string& key, Json value) {
    members_.emplace_back(key, std::move(value));
    return *this;
}

Json& Json::push(Json value) {
    elements_.push_back(std::move(value));
    return *this;
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
}

}  // namespace

void Json::write(std::string& out, int indent, int depth) const {
    const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (type_) {
        case Type::number: {
            if (!std::isfinite(num_)) {
                out += std::isnan(num_) ? "\"nan\"" : (num_ > 0 ? "\"inf\"" : "\"-inf\"");
            } else {
                out += fp(num_);
            }
            break;
        }
        case Type::integer: out += std::to_string(int_); break;
        case Type::boolean: out += flag_ ? "true" : "false"; break;
        case Type::string: write_escaped(out, str_); break;
        case Type::object: {
            if (members_.empty()) {
                out += "{}";
                break;
            }
            out += "{\n";
            for (std::size_t i = 0; i < members_.size(); ++i) {
                out += pad_in;
                write_escaped(out, members_[i].first);
                out += ": ";
                members_[i].second.write(out, indent, depth + 1);
                if (i + 1 < members_.size()) out += ',';
                out += '\n';
            }
            out += pad;
            out += '}';
            break;
        }
        case Type::array: {
            if (elements_.empty()) {
                out += "[]";
                break;
            }
            out += "[\n";
            for (std::size_t i = 0; i < elements_.size(); ++i) {
                out += pad_in;
                elements_[i].write(out, indent, depth + 1);
                if (i + 1 < elements_.size()) out += ',';
                out += '\n';
            }
            out += pad;
            out += ']';
            break;
        }
    }
}

std::string Json::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    out += '\n';
    return out;
}

Json complex_json(const std::complex<double>& z) {
    return Json::object().set("re", Json::number(z.real())).set("im", Json::number(z.imag()));
}

// ---------------------------------------------------------------------------
// JSON payloads
// ---------------------------------------------------------------------------

Json symbol_json(const DispersionSymbol& sym) {
    Json j = Json::object();
    j.set("kind", Json::string(to_string(sym.kind())));
    if (sym.is_expression()) j.set("expression", Json::string(sym.expression_text()));
    Json params = Json::object();
    for (const auto& [key, value] : sym.params()) params.set(key, Json::number(value));
    j.set("params", std::move(params));
    j.set("growth_exponent", Json::number(sym.growth_exponent()));
    if (sym.wave_number() != 1) j.set("wave_number", Json::integer(sym.wave_number()));
    return j;
}

Json coefficients_json(const ModulationCoefficients& c) {
    Json jets = Json::object();
    jets.set("m0", Json::number(c.jets.m0));
    jets.set("m1", Json::number(c.jets.m1));
    jets.set("m2", Json::number(c.jets.m2));
    jets.set("dm1", Json::number(c.jets.dm1));
    jets.set("ddm1", Json::number(c.jets.ddm1));
    jets.set("ddm0", Json::number(c.jets.ddm0));
    return Json::object()
        .set("te12", Json::number(c.te12))
        .set("te_d", Json::number(c.te_d))
        .set("te_b", Json::number(c.te_b))
        .set("te_w", Json::number(c.te_w))
        .set("te_wb", Json::number(c.te_wb))
        .set("fa", Json::number(c.fa))
        .set("te22", Json::number(c.te22))
        .set("te33", Json::number(c.te33))
        .set("tg33", Json::number(c.tg33))
        .set("u2_0", Json::number(c.u2_0))
        .set("u2_2", Json::number(c.u2_2))
        .set("c2", Json::number(c.c2))
        .set("jets", std::move(jets));
}

Json classification_json(const Classification& cls) {
    Json j = Json::object();
    j.set("class", Json::string(to_string(cls.value)));
    j.set("te_wb", Json::number(cls.te_wb));
    if (!cls.reason.empty()) j.set("reason", Json::string(cls.reason));
    return j;
}

Json assumption_a_json(const AssumptionAReport& r) {
    Json j = Json::object();
    j.set("even_ok", Json::boolean(r.even_ok));
    j.set("growth_ok", Json::boolean(r.growth_ok));
    j.set("gap_c0", Json::number(r.gap_c0));
    j.set("tail_certified", Json::boolean(r.tail_certified));
    j.set("n_max", Json::integer(r.n_max));
    if (r.resonant_n) j.set("resonant_n", Json::integer(*r.resonant_n));
    Json warn = Json::array();
    for (int n : r.near_resonant) warn.push(Json::integer(n));
    j.set("near_resonant", std::move(warn));
    j.set("passed", Json::boolean(r.passed()));
    return j;
}

Json assumption_b_json(const AssumptionBReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        entries.push(Json::object()
                         .set("name", Json::string(e.name))
                         .set("value", Json::number(e.value))
                         .set("vanishes", Json::boolean(e.vanishes))
                         .set("near_zero", Json::boolean(e.near_zero)));
    }
    return Json::object()
        .set("tol", Json::number(r.tol))
        .set("entries", std::move(entries))
        .set("passed", Json::boolean(r.passed()));
}

Json wave_json(const StokesWave& wave) {
    Json coeffs = Json::array();
    for (double a : wave.cos_coeffs) coeffs.push(Json::number(a));
    return Json::object()
        .set("epsilon", Json::number(wave.epsilon))
        .set("speed", Json::number(wave.speed))
        .set("cos_coeffs", std::move(coeffs))
        .set("residual_norm", Json::number(wave.residual_norm))
        .set("source", Json::string(wave.source == WaveSource::newton ? "newton" : "expansion"));
}

Json branch_json(const BenjaminFeirBranch& branch) {
    Json mu = Json::array(), l0 = Json::array(), lp = Json::array(), lm = Json::array();
    for (std::size_t i = 0; i < branch.mu_grid.size(); ++i) {
        mu.push(Json::number(branch.mu_grid[i]));
        l0.push(complex_json(branch.lambda0[i]));
        lp.push(complex_json(branch.lambda1_plus[i]));
        lm.push(complex_json(branch.lambda1_minus[i]));
    }
    return Json::object()
        .set("epsilon", Json::number(branch.epsilon))
        .set("mu_crit", Json::number(branch.mu_crit))
        .set("mu", std::move(mu))
        .set("lambda0", std::move(l0))
        .set("lambda1_plus", std::move(lp))
        .set("lambda1_minus", std::move(lm));
}

Json comparison_json(const ComparisonReport& report) {
    Json records = Json::array();
    for (const auto& rec : report.records) {
        Json num = Json::array(), asym = Json::array(), err = Json::array();
        Json rel = Json::array();
        for (int k = 0; k < 3; ++k) {
            num.push(complex_json(rec.numeric[k]));
            asym.push(complex_json(rec.asymptotic[k]));
            err.push(Json::number(rec.abs_err[k]));
            rel.push(Json::number(rec.rel_err[k]));
        }
        records.push(Json::object()
                         .set("mu", Json::number(rec.mu))
                         .set("lambda_num", std::move(num))
                         .set("lambda_asym", std::move(asym))
                         .set("abs_err", std::move(err))
                         .set("rel_err", std::move(rel)));
    }
    return Json::object()
        .set("epsilon", Json::number(report.epsilon))
        .set("n_modes", Json::integer(report.n_modes))
        .set("max_abs_err", Json::number(report.max_abs_err))
        .set("max_re_numeric", Json::number(report.max_re_numeric))
        .set("records", std::move(records));
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

std::string branch_csv(const BenjaminFeirBranch& branch) {
    std::string out =
        "mu,re_lambda0,im_lambda0,re_lambda1_plus,im_lambda1_plus,re_lambda1_minus,im_lambda1_"
        "minus\n";
    for (std::size_t i = 0; i < branch.mu_grid.size(); ++i) {
        out += fp(branch.mu_grid[i]);
        for (const auto* arr : {&branch.lambda0, &branch.lambda1_plus, &branch.lambda1_minus}) {
            out += ',';
            out += fp((*arr)[i].real());
            out += ',';
            out += fp((*arr)[i].imag());
        }
        out += '\n';
    }
    return out;
}

std::string comparison_csv(const ComparisonReport& report) {
    std::string out = "mu";
    for (int k = 0; k < 3; ++k) {
        const std::string s = std::to_string(k);
        out += ",re_num" + s + ",im_num" + s + ",re_asym" + s + ",im_asym" + s + ",abs_err" + s +
               ",rel_err" + s;
    }
    out += '\n';
    for (const auto& rec : report.records) {
        out += fp(rec.mu);
        for (int k = 0; k < 3; ++k) {
            out += ',';
            out += fp(rec.numeric[k].real());
            out += ',';
            out += fp(rec.numeric[k].imag());
            out += ',';
            out += fp(rec.asymptotic[k].real());
            out += ',';
            out += fp(rec.asymptotic[k].imag());
            out += ',';
            out += fp(rec.abs_err[k]);
            out += ',';
            out += fp(rec.rel_err[k]);
        }
        out += '\n';
    }
    return out;
}

namespace {

void append_cell_row(std::string& out, double p1, double p2, const MapCell& cell, bool with_p2) {
    out += fp(p1);
    if (with_p2) {
        out += ',';
        out += fp(p2);
    }
    const ModulationCoefficients c =
        cell.coeffs.value_or(ModulationCoefficients{});
    const bool have = cell.coeffs.has_value();
    for (double v : {c.te12, c.te_d, c.te_b, c.te_w, c.te_wb}) {
        out += ',';
        out += have ? fp(v) : "nan";
    }
    out += ',';
    out += to_string(cell.cls);
    out += '\n';
}

}  // namespace

std::string signmap_csv(const SignMap& map) {
    std::string out = "p1,p2,te12,te_d,te_b,te_w,te_wb,class\n";
    for (std::size_t i2 = 0; i2 < map.p2_values.size(); ++i2)
        for (std::size_t i1 = 0; i1 < map.p1_values.size(); ++i1) {
            const MapCell& cell = map.at(static_cast<int>(i1), static_cast<int>(i2));
            append_cell_row(out, cell.p1, cell.p2, cell, /*with_p2=*/true);
        }
    return out;
}

std::string scan1d_csv(const std::string& p_name, const std::vector<Scan1DPoint>& points) {
    std::string out = p_name + ",te12,te_d,te_b,te_w,te_wb,class\n";
    for (const auto& pt : points) {
        MapCell cell;
        cell.cls = pt.cls;
        cell.coeffs = pt.coeffs;
        append_cell_row(out, pt.p, 0.0, cell, /*with_p2=*/false);
    }
    return out;
}

// ---------------------------------------------------------------------------
// SVG
// ---------------------------------------------------------------------------

namespace {

std::string svg_open(int width, int height) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
           " " + std::to_string(height) + "\">\n";
}

}  // namespace

std::string figure8_svg(const Figure8Curve& curve, int width, int height) {
    const double margin = 48.0;
    const double span_x = std::max(curve.max_re, 1.0e-300);
    const double span_y = std::max(curve.max_im, 1.0e-300);
    const double sx = (width / 2.0 - margin) / span_x;
    const double sy = (height / 2.0 - margin) / span_y;
    const double cx = width / 2.0, cy = height / 2.0;

    std::string out = svg_open(width, height);
    out += "  <line x1=\"" + fp(margin / 2) + "\" y1=\"" + fp(cy) + "\" x2=\"" +
           fp(width - margin / 2) + "\" y2=\"" + fp(cy) + "\" stroke=\"#888\"/>\n";
    out += "  <line x1=\"" + fp(cx) + "\" y1=\"" + fp(margin / 2) + "\" x2=\"" + fp(cx) +
           "\" y2=\"" + fp(height - margin / 2) + "\" stroke=\"#888\"/>\n";
    out += "  <text x=\"" + fp(width - margin / 2) + "\" y=\"" + fp(cy - 8.0) +
           "\" text-anchor=\"end\" font-size=\"14\">Re &#955;</text>\n";
    out += "  <text x=\"" + fp(cx + 8.0) + "\" y=\"" + fp(margin / 2 + 6.0) +
           "\" font-size=\"14\">Im &#955;</text>\n";
    out += "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
    for (const auto& p : curve.points) {
        out += fp(cx + sx * p[0]);
        out += ',';
        out += fp(cy - sy * p[1]);
        out += ' ';
    }
    out += "\"/>\n</svg>\n";
    return out;
}

std::string signmap_svg(const SignMap& map, int width, int height) {
    const double margin = 40.0;
    const std::size_t n1 = map.p1_values.size(), n2 = map.p2_values.size();
    const double cw = (width - 2 * margin) / static_cast<double>(n1);
    const double ch = (height - 2 * margin) / static_cast<double>(n2);

    std::string out = svg_open(width, height);
    for (std::size_t i2 = 0; i2 < n2; ++i2) {
        for (std::size_t i1 = 0; i1 < n1; ++i1) {
            const MapCell& cell = map.at(static_cast<int>(i1), static_cast<int>(i2));
            const char* color = "#cccccc";
            switch (cell.cls) {
                case CellClass::unstable: color = "#c23b22"; break;
                case CellClass::stable: color = "#2a7e43"; break;
                case CellClass::degenerate: color = "#d9c542"; break;
                case CellClass::resonant: color = "#7b5ea7"; break;
            }
            // p2 grows upward.
            const double x = margin + cw * static_cast<double>(i1);
            const double y = height - margin - ch * static_cast<double>(i2 + 1);
            out += "  <rect x=\"" + fp(x) + "\" y=\"" + fp(y) + "\" width=\"" + fp(cw) +
                   "\" height=\"" + fp(ch) + "\" fill=\"" + color + "\"/>\n";
        }
    }
    out += "  <text x=\"" + fp(width / 2.0) + "\" y=\"" + fp(height - 8.0) +
           "\" text-anchor=\"middle\" font-size=\"14\">" + map.p1_name + "</text>\n";
    out += "  <text x=\"12\" y=\"" + fp(height / 2.0) + "\" font-size=\"14\" transform=\"rotate(-90 12 " +
           fp(height / 2.0) + ")\" text-anchor=\"middle\">" + map.p2_name + "</text>\n";
    out += "</svg>\n";
    return out;
}

// ---------------------------------------------------------------------------
// Symbol <-> TOML
// ---------------------------------------------------------------------------

toml::Table symbol_to_toml(const DispersionSymbol& sym) {
    toml::Table table;
    if (sym.is_expression()) {
        table["dsl"] = toml::Value::of(sym.expression_text());
    } else {
        table["kind"] = toml::Value::of(std::string(to_string(sym.kind())));
    }
    for (const auto& [key, value] : sym.params()) table[key] = toml::Value::of(value);
    if (sym.wave_number() != 1)
        table["wave_number"] = toml::Value::of(static_cast<double>(sym.wave_number()));
    return table;
}

DispersionSymbol symbol_from_toml(const toml::Table& table) {
    ParamMap params;
    std::string kind_name, dsl_text;
    int wave_number = 1;
    for (const auto& [key, value] : table) {
        if (key == "kind") {
            kind_name = value.str;
        } else if (key == "dsl") {
            dsl_text = value.str;
        } else if (key == "wave_number") {
            wave_number = static_cast<int>(value.num);
        } else {
            if (value.type != toml::Value::Type::number)
                throw InvalidParameter("symbol parameter '" + key + "' must be a number");
            params[key] = value.num;
        }
    }
    if (!kind_name.empty() && !dsl_text.empty())
        throw InvalidParameter("symbol table: give either 'kind' or 'dsl', not both");
    DispersionSymbol sym =
        !dsl_text.empty()
            ? DispersionSymbol::from_expression(dsl_text, params)
            : DispersionSymbol::catalog(symbol_kind_from_string(kind_name), params);
    return wave_number == 1 ? sym : sym.rescaled(wave_number);
}

}  // namespace gkdv::emit
