#include "gkdv/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gkdv/dsl.hpp"
#include "gkdv/errors.hpp"

namespace gkdv {

namespace {

// Below this point the Whitham/ILW kernels switch to their series expansions;
// the direct formulas lose digits to cancellation as xi -> 0 and the accuracy
// of m''(0) feeds tg_33 downstream.
constexpr double kSeriesCut = 1.0e-3;

// Jet of g(xi) = tanh(t*xi)/xi, the kernel shared by the Whitham family.
// Even, smooth, g(0) = t.
Jet2 tanh_kernel(double t, double xi) {
    if (xi < kSeriesCut) {
        // tanh(z)/z = 1 - z^2/3 + 2 z^4/15 - 17 z^6/315 + ...,  z = t*xi
        const double t2 = t * t;
        const double c2 = -t2 / 3.0, c4 = 2.0 * t2 * t2 / 15.0, c6 = -17.0 * t2 * t2 * t2 / 315.0;
        const double x2 = xi * xi;
        Jet2 g;
        g.v = t * (1.0 + x2 * (c2 + x2 * (c4 + x2 * c6)));
        g.d1 = t * (2.0 * c2 * xi + 4.0 * c4 * xi * x2 + 6.0 * c6 * xi * x2 * x2);
        g.d2 = t * (2.0 * c2 + 12.0 * c4 * x2 + 30.0 * c6 * x2 * x2);
        return g;
    }
    const double T = std::tanh(t * xi);
    const double S = 1.0 - T * T;            // sech^2(t*xi)
    const double T1 = t * S;                 // d/dxi tanh(t*xi)
    const double T2 = -2.0 * t * t * S * T;  // d2/dxi2
    Jet2 g;
    g.v = T / xi;
    g.d1 = T1 / xi - T / (xi * xi);
    g.d2 = T2 / xi - 2.0 * T1 / (xi * xi) + 2.0 * T / (xi * xi * xi);
    return g;
}

// Jet of m(xi) = xi*coth(t*xi) - 1/t (intermediate long-wave). m(0) = 0.
Jet2 ilw_jet(double t, double xi) {
    if (xi < kSeriesCut) {
        // z*coth(z) = 1 + z^2/3 - z^4/45 + 2 z^6/945 - ...,  z = t*xi
        const double t2 = t * t;
        const double c2 = t / 3.0, c4 = -t * t2 / 45.0, c6 = 2.0 * t2 * t2 * t / 945.0;
        const double x2 = xi * xi;
        Jet2 m;
        m.v = x2 * (c2 + x2 * (c4 + x2 * c6));
        m.d1 = 2.0 * c2 * xi + 4.0 * c4 * xi * x2 + 6.0 * c6 * xi * x2 * x2;
        m.d2 = 2.0 * c2 + 12.0 * c4 * x2 + 30.0 * c6 * x2 * x2;
        return m;
    }
    Jet2 x = jet_var(xi);
    return x * coth(t * x) - jet_const(1.0 / t);
}

double require_param(const ParamMap& params, const std::string& key, const char* symbol) {
    auto it = params.find(key);
    if (it == params.end())
        throw InvalidParameter(std::string(symbol) + " requires parameter '" + key + "'");
    if (!std::isfinite(it->second))
        throw InvalidParameter("parameter '" + key + "' is not finite");
    return it->second;
}

void reject_extra_params(const ParamMap& params, std::initializer_list<const char*> allowed,
                         const char* symbol) {
    for (const auto& [key, value] : params) {
        (void)value;
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* a) { return key == a; }) == allowed.end())
            throw InvalidParameter(std::string(symbol) + ": unknown parameter '" + key + "'");
    }
}

}  // namespace

const char* to_string(SymbolKind kind) {
    switch (kind) {
        case SymbolKind::whitham: return "whitham";
        case SymbolKind::capillary_whitham: return "capillary_whitham";
        case SymbolKind::vorticity_whitham: return "vorticity_whitham";
        case SymbolKind::kawahara: return "kawahara";
        case SymbolKind::ilw: return "ilw";
        case SymbolKind::kdv: return "kdv";
        case SymbolKind::fkdv: return "fkdv";
        case SymbolKind::benjamin_ono: return "benjamin_ono";
        case SymbolKind::expression: return "expression";
    }
    return "unknown";
}

SymbolKind symbol_kind_from_string(const std::string& name) {
    if (name == "whitham") return SymbolKind::whitham;
    if (name == "capillary_whitham") return SymbolKind::capillary_whitham;
    if (name == "vorticity_whitham") return SymbolKind::vorticity_whitham;
    if (name == "kawahara") return SymbolKind::kawahara;
    if (name == "ilw") return SymbolKind::ilw;
    if (name == "kdv") return SymbolKind::kdv;
    if (name == "fkdv") return SymbolKind::fkdv;
    if (name == "benjamin_ono" || name == "bo") return SymbolKind::benjamin_ono;
    throw InvalidParameter("unknown symbol kind '" + name + "'");
}

DispersionSymbol DispersionSymbol::catalog(SymbolKind kind, const ParamMap& params) {
    DispersionSymbol s;
    s.kind_ = kind;
    s.name_ = to_string(kind);
    switch (kind) {
        case SymbolKind::whitham: {
            double tth = require_param(params, "tth", "whitham");
            reject_extra_params(params, {"tth"}, "whitham");
            if (tth <= 0.0) throw InvalidParameter("whitham: tth must be positive");
            s.params_ = {{"tth", tth}};
            s.growth_exponent_ = -0.5;
            break;
        }
        case SymbolKind::capillary_whitham: {
            double tth = require_param(params, "tth", "capillary_whitham");
            double kappa = require_param(params, "kappa", "capillary_whitham");
            reject_extra_params(params, {"tth", "kappa"}, "capillary_whitham");
            if (tth <= 0.0) throw InvalidParameter("capillary_whitham: tth must be positive");
            if (kappa <= 0.0) throw InvalidParameter("capillary_whitham: kappa must be positive");
            s.params_ = {{"tth", tth}, {"kappa", kappa}};
            s.growth_exponent_ = 0.5;
            break;
        }
        case SymbolKind::vorticity_whitham: {
            double tth = require_param(params, "tth", "vorticity_whitham");
            double gamma = require_param(params, "gamma", "vorticity_whitham");
            reject_extra_params(params, {"tth", "gamma"}, "vorticity_whitham");
            if (tth <= 0.0) throw InvalidParameter("vorticity_whitham: tth must be positive");
            s.params_ = {{"tth", tth}, {"gamma", gamma}};
            s.growth_exponent_ = -0.5;
            break;
        }
        case SymbolKind::kawahara: {
            double ta = require_param(params, "ta", "kawahara");
            double tb = require_param(params, "tb", "kawahara");
            reject_extra_params(params, {"ta", "tb"}, "kawahara");
            if (tb <= 0.0) throw InvalidParameter("kawahara: tb must be positive");
            s.params_ = {{"ta", ta}, {"tb", tb}};
            s.growth_exponent_ = 4.0;
            break;
        }
        case SymbolKind::ilw: {
            double tth = require_param(params, "tth", "ilw");
            reject_extra_params(params, {"tth"}, "ilw");
            if (tth <= 0.0) throw InvalidParameter("ilw: tth must be positive");
            s.params_ = {{"tth", tth}};
            s.growth_exponent_ = 1.0;
            break;
        }
        case SymbolKind::kdv: {
            reject_extra_params(params, {}, "kdv");
            s.growth_exponent_ = 2.0;
            break;
        }
        case SymbolKind::fkdv: {
            double alpha = require_param(params, "alpha", "fkdv");
            reject_extra_params(params, {"alpha"}, "fkdv");
            if (alpha < 3.0) throw InvalidParameter("fkdv: alpha must be >= 3 (C^3 regularity)");
            s.params_ = {{"alpha", alpha}};
            s.growth_exponent_ = alpha;
            break;
        }
        case SymbolKind::benjamin_ono: {
            reject_extra_params(params, {}, "benjamin_ono");
            s.growth_exponent_ = 1.0;
            s.zero_behavior_ = ZeroBehavior::right_limits_only;
            break;
        }
        case SymbolKind::expression:
            throw InvalidParameter("use DispersionSymbol::from_expression for DSL symbols");
    }
    return s;
}

DispersionSymbol DispersionSymbol::from_expression(const std::string& text,
                                                   const ParamMap& params) {
    DispersionSymbol s;
    s.kind_ = SymbolKind::expression;
    s.name_ = "expression";
    s.params_ = params;
    s.expr_ = std::make_shared<const dsl::Expr>(dsl::parse(text));
    dsl::bind_check(*s.expr_, params);
    // Growth exponent estimated from a log-slope at large xi; it only feeds
    // the tail certification of check_assumption_a.
    const double lo = 64.0, hi = 512.0;
    const double mlo = std::abs(dsl::eval_value(*s.expr_, params, lo));
    const double mhi = std::abs(dsl::eval_value(*s.expr_, params, hi));
    if (std::isfinite(mlo) && std::isfinite(mhi) && mlo > 0.0 && mhi > 0.0)
        s.growth_exponent_ = std::log(mhi / mlo) / std::log(hi / lo);
    else
        s.growth_exponent_ = 0.0;
    s.zero_behavior_ = ZeroBehavior::right_limits_only;
    return s;
}

std::string DispersionSymbol::expression_text() const {
    if (!expr_) return {};
    return dsl::pretty_print(*expr_);
}

Jet2 DispersionSymbol::base_jet(double xi) const {
    switch (kind_) {
        case SymbolKind::kdv: {
            return {xi * xi, 2.0 * xi, 2.0};
        }
        case SymbolKind::kawahara: {
            const double a = params_.at("ta"), b = params_.at("tb");
            const double x2 = xi * xi;
            return {a * x2 + b * x2 * x2, 2.0 * a * xi + 4.0 * b * xi * x2, 2.0 * a + 12.0 * b * x2};
        }
        case SymbolKind::benjamin_ono: {
            // |xi| with right derivatives at 0: (0, 1, 0).
            return {xi, 1.0, 0.0};
        }
        case SymbolKind::fkdv: {
            const double alpha = params_.at("alpha");
            if (xi == 0.0) return {0.0, 0.0, 0.0};  // alpha >= 3
            const double f = std::pow(xi, alpha);
            return {f, alpha * f / xi, alpha * (alpha - 1.0) * f / (xi * xi)};
        }
        case SymbolKind::whitham: {
            const double t = params_.at("tth");
            return sqrt(tanh_kernel(t, xi));
        }
        case SymbolKind::capillary_whitham: {
            const double t = params_.at("tth"), kappa = params_.at("kappa");
            Jet2 x = jet_var(xi);
            return sqrt((1.0 + kappa * x * x) * tanh_kernel(t, xi));
        }
        case SymbolKind::vorticity_whitham: {
            const double t = params_.at("tth"), gamma = params_.at("gamma");
            Jet2 g = tanh_kernel(t, xi);
            return (gamma / 2.0) * g + sqrt(g + (gamma * gamma / 4.0) * g * g);
        }
        case SymbolKind::ilw: {
            return ilw_jet(params_.at("tth"), xi);
        }
        case SymbolKind::expression: {
            return dsl::eval_jet(*expr_, params_, xi);
        }
    }
    throw Error("unreachable symbol kind");
}

Jet2 DispersionSymbol::jet(double xi) const {
    if (!(xi >= 0.0)) throw DomainError("jet requested at negative or non-finite xi");
    if (kappa_wave_ == 1) return base_jet(xi);
    const double k = static_cast<double>(kappa_wave_);
    Jet2 b = base_jet(k * xi);
    return {k * b.v, k * k * b.d1, k * k * k * b.d2};
}

double DispersionSymbol::operator()(double xi) const {
    if (!std::isfinite(xi)) throw DomainError("eval at non-finite xi");
    return jet(std::abs(xi)).v;
}

DispersionSymbol DispersionSymbol::rescaled(int kappa_wave) const {
    if (kappa_wave < 1) throw InvalidParameter("rescale: kappa_wave must be a positive integer");
    DispersionSymbol s = *this;
    s.kappa_wave_ *= kappa_wave;
    return s;
}

AssumptionAReport check_assumption_a(const DispersionSymbol& sym, int n_max,
                                     const AssumptionAGrid& grid) {
    if (n_max < 2) throw InvalidParameter("check_assumption_a: n_max must be >= 2");
    AssumptionAReport report;
    report.n_max = n_max;

    // (A1) evenness on a symmetric sample grid.
    report.even_ok = true;
    for (int i = 0; i < grid.even_samples; ++i) {
        const double xi = -grid.even_span +
                          2.0 * grid.even_span * static_cast<double>(i) / (grid.even_samples - 1);
        const double mp = sym(xi), mm = sym(-xi);
        if (std::abs(mp - mm) > 1.0e-12 * (1.0 + std::abs(mp))) {
            report.even_ok = false;
            break;
        }
    }

    // (A2) two-sided growth bound C1 <xi>^m <= m(xi) <= C2 <xi>^m on a log grid.
    const double m = sym.growth_exponent();
    double ratio_lo = std::numeric_limits<double>::infinity();
    double ratio_hi = 0.0;
    for (int i = 0; i < grid.growth_samples; ++i) {
        const double lxi = std::log(grid.growth_lo) +
                           (std::log(grid.growth_hi) - std::log(grid.growth_lo)) *
                               static_cast<double>(i) / (grid.growth_samples - 1);
        const double xi = std::exp(lxi);
        const double bracket = std::pow(1.0 + xi * xi, 0.5 * m);
        const double ratio = sym(xi) / bracket;
        ratio_lo = std::min(ratio_lo, ratio);
        ratio_hi = std::max(ratio_hi, ratio);
    }
    report.growth_ok = ratio_lo > 0.0 && std::isfinite(ratio_hi);

    // (A3) explicit minimum over n in {0} u {2..n_max}.
    const double m1 = sym(1.0);
    double gap = std::numeric_limits<double>::infinity();
    int arg_min = -1;
    auto visit = [&](int n) {
        const double d = std::abs(sym(static_cast<double>(n)) - m1);
        if (d < gap) {
            gap = d;
            arg_min = n;
        }
        if (d < kNearResonanceTol && d >= kResonanceTol) report.near_resonant.push_back(n);
    };
    visit(0);
    for (int n = 2; n <= n_max; ++n) visit(n);

    // Tail certification for n > n_max from the growth bound: for m > 0 the
    // symbol runs away from m(1) once past the explicit range, for m < 0 it
    // decays towards 0 so the tail gap approaches |m(1)|.
    const double m_edge = sym(static_cast<double>(n_max));
    const double m_next = sym(static_cast<double>(n_max) + 1.0);
    if (m > 0.0) {
        report.tail_certified =
            (m_next >= m_edge) && (std::abs(m_edge - m1) >= gap) && (std::abs(m_next - m1) >= gap);
    } else if (m < 0.0) {
        const double tail_gap = std::abs(m1) - std::max(std::abs(m_edge), std::abs(m_next));
        report.tail_certified = tail_gap > 0.0;
        gap = std::min(gap, tail_gap);
    } else {
        // No usable tail bound; extend the explicit scan.
        for (int n = n_max + 1; n <= 4 * n_max; ++n) visit(n);
        report.tail_certified = false;
    }

    report.gap_c0 = gap;
    if (gap < kResonanceTol) report.resonant_n = arg_min;
    return report;
}

}  // namespace gkdv
