#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gkdv/modulation.hpp"

namespace gkdv {

enum class CellClass { unstable, stable, degenerate, resonant };

const char* to_string(CellClass cls);

/// One cell of a parameter scan. Coefficients are present unless the cell is
/// resonant or a denominator degenerates.
struct MapCell {
    double p1 = 0.0;
    double p2 = 0.0;
    CellClass cls = CellClass::degenerate;
    std::string note;                               // which quantity degenerated
    std::optional<int> resonant_n;
    std::optional<ModulationCoefficients> coeffs;   // absent on hard degeneracies
    double te_wb = 0.0;
};

struct SignMap {
    std::string p1_name, p2_name;
    std::vector<double> p1_values, p2_values;
    std::vector<MapCell> cells;  // row-major: index = i2 * n1 + i1

    const MapCell& at(int i1, int i2) const {
        return cells[static_cast<std::size_t>(i2) * p1_values.size() + i1];
    }
};

using SymbolFamily1 = std::function<DispersionSymbol(double)>;
using SymbolFamily2 = std::function<DispersionSymbol(double, double)>;

/// Bisection root of tth -> te_wb(tth) on [0.5, 2.0] for the Whitham family;
/// te_b is verified positive on the bracket. Throws BracketInvalid when the
/// bracket does not straddle a sign change.
double whitham_threshold(double tol);
double whitham_threshold(double tol, const SymbolFamily1& family, double lo = 0.5,
                         double hi = 2.0);

/// Critical slopes ta/tb of the Kawahara coefficient functions along tb = 1,
/// each located as a sign change of the named quantity, plus the resonance
/// slopes -(n^2+1).
struct KawaharaSlopes {
    double te_d_zero = 0.0;      // -5/3
    double te12_zero = 0.0;      // -2
    double te_b_zero = 0.0;      // -10/3
    double te_w_num_zero = 0.0;  // -25/3
    std::vector<double> resonant;  // -(n^2+1), n >= 2
};
KawaharaSlopes kawahara_critical_slopes(int n_resonances = 4);
KawaharaSlopes kawahara_critical_slopes(const SymbolFamily1& family_along_tb1,
                                        int n_resonances = 4);

/// Resonance curves of the gravity-capillary Whitham plane:
/// kappa_0 = tth/tanh(tth) - 1,
/// kappa_n = (n tanh tth - tanh(n tth)) / (n^2 tanh(n tth) - n tanh tth), n >= 2.
/// Throws InvalidN for n = 1 or n < 0.
double capillary_resonance_curve(int n, double tth);

/// Per-cell classification over a 2-parameter grid. Cells within tolerance of
/// a resonance or an Assumption-B degeneracy are painted degenerate, never
/// interpolated. Cells are evaluated in parallel and assembled by index.
SignMap scan2d(const SymbolFamily2& family, const std::string& p1_name, double p1_lo,
               double p1_hi, int n1, const std::string& p2_name, double p2_lo, double p2_hi,
               int n2);

struct Scan1DPoint {
    double p = 0.0;
    double te_wb = 0.0;
    CellClass cls = CellClass::degenerate;
    std::optional<ModulationCoefficients> coeffs;
};
std::vector<Scan1DPoint> scan1d(const SymbolFamily1& family, double lo, double hi, int n);

/// Classifies one parameter point the same way scan cells are classified.
MapCell classify_cell(const DispersionSymbol& sym);

}  // namespace gkdv
