#include "gkdv/modulation.hpp"

#include <cmath>

#include "gkdv/errors.hpp"

namespace gkdv {

namespace {
constexpr double kDegeneracyTol = 1.0e-9;
constexpr double kNearDegeneracyTol = 1.0e-4;
}  // namespace

const char* to_string(StabilityClass cls) {
    switch (cls) {
        case StabilityClass::unstable: return "unstable";
        case StabilityClass::stable: return "stable";
        case StabilityClass::degenerate: return "degenerate";
    }
    return "?";
}

ModulationCoefficients coefficients_from_jets(const JetProvenance& jets) {
    ModulationCoefficients c;
    c.jets = jets;
    c.te12 = jets.dm1;
    c.te22 = -0.5 * jets.ddm1;
    c.te33 = jets.m1 - jets.m0;
    c.tg33 = -0.5 * jets.ddm0;
    c.te_d = c.te12 + c.te33;
    c.te_b = c.te22 - c.te12;

    const double d2 = jets.m1 - jets.m2;
    if (std::abs(d2) < kDegeneracyTol)
        throw DegenerateCoefficient("m(1)-m(2)",
                                    "m(1) - m(2) vanishes (resonance n = 2); fa undefined");
    if (std::abs(c.te_d) < kDegeneracyTol)
        throw DegenerateCoefficient("te_d", "te_d vanishes; te_w undefined");

    c.fa = 1.0 / d2;
    c.u2_2 = 0.5 * c.fa;
    const double d0 = jets.m1 - jets.m0;
    if (std::abs(d0) < kDegeneracyTol)
        throw DegenerateCoefficient("m(1)-m(0)",
                                    "m(1) - m(0) vanishes (resonance n = 0); u2^[0] undefined");
    c.u2_0 = 0.5 / d0;
    c.c2 = 1.0 / d0 + 0.5 / d2;

    const double numerator = c.te12 + 3.0 * jets.m1 - 2.0 * jets.m2 - jets.m0;
    c.te_w = numerator / (d2 * c.te_d);
    c.te_wb = c.te_w * c.te_b;
    return c;
}

ModulationCoefficients compute_coefficients(const DispersionSymbol& sym) {
    const Jet2 j0 = sym.jet(0.0);
    const Jet2 j1 = sym.jet(1.0);
    const Jet2 j2 = sym.jet(2.0);
    JetProvenance jets;
    jets.m0 = j0.v;
    jets.m1 = j1.v;
    jets.m2 = j2.v;
    jets.dm1 = j1.d1;
    jets.ddm1 = j1.d2;
    jets.ddm0 = j0.d2;
    return coefficients_from_jets(jets);
}

AssumptionBReport check_assumption_b(const ModulationCoefficients& coeffs, double tol) {
    AssumptionBReport report;
    report.tol = tol;
    const double te_w_numerator =
        coeffs.te12 + 3.0 * coeffs.jets.m1 - 2.0 * coeffs.jets.m2 - coeffs.jets.m0;
    const std::pair<const char*, double> checks[] = {
        {"te12", coeffs.te12},
        {"te_d", coeffs.te_d},
        {"te_b", coeffs.te_b},
        {"te_w", te_w_numerator},
    };
    for (const auto& [name, value] : checks) {
        AssumptionBReport::Entry e;
        e.name = name;
        e.value = value;
        e.vanishes = std::abs(value) < tol;
        e.near_zero = !e.vanishes && std::abs(value) < kNearDegeneracyTol;
        report.entries.push_back(std::move(e));
    }
    return report;
}

Classification classify(const DispersionSymbol& sym) {
    Classification result;
    const AssumptionAReport a = check_assumption_a(sym);
    if (a.resonant_n.has_value()) {
        result.value = StabilityClass::degenerate;
        result.reason = "resonance n=" + std::to_string(*a.resonant_n);
        return result;
    }
    if (!a.even_ok || !a.growth_ok) {
        result.value = StabilityClass::degenerate;
        result.reason = a.even_ok ? "growth bound fails" : "symbol not even";
        return result;
    }
    ModulationCoefficients coeffs;
    try {
        coeffs = compute_coefficients(sym);
    } catch (const DegenerateCoefficient& e) {
        result.value = StabilityClass::degenerate;
        result.reason = e.quantity + " degenerate";
        return result;
    }
    result.te_wb = coeffs.te_wb;
    const AssumptionBReport b = check_assumption_b(coeffs);
    if (!b.passed()) {
        result.value = StabilityClass::degenerate;
        for (const auto& e : b.entries)
            if (e.vanishes) {
                result.reason = e.name + " vanishes";
                break;
            }
        return result;
    }
    result.value = coeffs.te_wb > 0.0 ? StabilityClass::unstable : StabilityClass::stable;
    return result;
}

}  // namespace gkdv
