#pragma once

#include <string>
#include <vector>

#include "gkdv/symbol.hpp"

namespace gkdv {

/// The six jet values everything below is computed from.
struct JetProvenance {
    double m0 = 0.0;    // m(0)
    double m1 = 0.0;    // m(1)
    double m2 = 0.0;    // m(2)
    double dm1 = 0.0;   // m'(1)
    double ddm1 = 0.0;  // m''(1)
    double ddm0 = 0.0;  // m''(0)
};

/// Modulational coefficients of the linearized operator at a small-amplitude
/// wave. te_wb = te_w * te_b decides the stability dichotomy.
struct ModulationCoefficients {
    double te12 = 0.0;   // m'(1)
    double te_d = 0.0;   // te12 + te33
    double te_b = 0.0;   // te22 - te12
    double te_w = 0.0;   // (m'(1)+3m(1)-2m(2)-m(0)) / ((m(1)-m(2)) te_d)
    double te_wb = 0.0;  // te_w * te_b
    double fa = 0.0;     // 1/(m(1)-m(2))
    double te22 = 0.0;   // -m''(1)/2
    double te33 = 0.0;   // m(1)-m(0)
    double tg33 = 0.0;   // -m''(0)/2
    double u2_0 = 0.0;   // 1/2/(m(1)-m(0))
    double u2_2 = 0.0;   // 1/2/(m(1)-m(2))
    double c2 = 0.0;     // 1/(m(1)-m(0)) + 1/2/(m(1)-m(2))
    JetProvenance jets;
};

/// Computes all coefficients from the jets at xi in {0, 1, 2}.
/// Throws DegenerateCoefficient when a denominator (m(1)-m(2), m(1)-m(0)
/// or te_d) is below tolerance.
ModulationCoefficients compute_coefficients(const DispersionSymbol& sym);
ModulationCoefficients coefficients_from_jets(const JetProvenance& jets);

struct AssumptionBReport {
    struct Entry {
        std::string name;
        double value = 0.0;
        bool vanishes = false;     // |value| < tol
        bool near_zero = false;    // |value| < 1e-4 but not vanishing
    };
    std::vector<Entry> entries;  // te12, te_d, te_b, te_w numerator
    double tol = 1.0e-9;

    bool passed() const {
        for (const auto& e : entries)
            if (e.vanishes) return false;
        return true;
    }
};

AssumptionBReport check_assumption_b(const ModulationCoefficients& coeffs, double tol = 1.0e-9);

enum class StabilityClass { unstable, stable, degenerate };

struct Classification {
    StabilityClass value = StabilityClass::degenerate;
    double te_wb = 0.0;
    std::string reason;  // set for degenerate verdicts

    bool unstable() const { return value == StabilityClass::unstable; }
    bool stable() const { return value == StabilityClass::stable; }
};

const char* to_string(StabilityClass cls);

/// Stability dichotomy: Unstable iff Assumptions A and B hold and te_wb > 0;
/// Stable iff they hold and te_wb < 0; Degenerate otherwise (with reason).
Classification classify(const DispersionSymbol& sym);

}  // namespace gkdv
