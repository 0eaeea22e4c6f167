#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gkdv/jet.hpp"

namespace gkdv {

namespace dsl {
class Expr;
}

using ParamMap = std::map<std::string, double>;

enum class SymbolKind {
    whitham,
    capillary_whitham,
    vorticity_whitham,
    kawahara,
    ilw,
    kdv,
    fkdv,
    benjamin_ono,
    expression,  // user-supplied DSL symbol
};

enum class ZeroBehavior { smooth, right_limits_only };

const char* to_string(SymbolKind kind);
SymbolKind symbol_kind_from_string(const std::string& name);

/// An even, real Fourier-multiplier symbol m(xi) with closed-form derivative
/// jets and growth metadata. Immutable once constructed; all evaluation is
/// pure and safe to share across threads.
class DispersionSymbol {
public:
    /// Builds one of the catalog symbols. Required parameters:
    ///   whitham:            tth > 0
    ///   capillary_whitham:  tth > 0, kappa > 0
    ///   vorticity_whitham:  tth > 0, gamma real
    ///   kawahara:           ta real, tb > 0
    ///   ilw:                tth > 0
    ///   kdv:                none
    ///   fkdv:               alpha >= 3
    ///   benjamin_ono:       none
    static DispersionSymbol catalog(SymbolKind kind, const ParamMap& params = {});

    /// Builds a symbol from a DSL expression in the variable "xi".
    static DispersionSymbol from_expression(const std::string& text, const ParamMap& params);

    /// m(xi). Even extension: negative arguments evaluate as m(|xi|).
    /// Removable singularities at xi = 0 are evaluated by their analytic limits.
    double operator()(double xi) const;

    /// (m, m', m'') at xi >= 0. For right-limits-only symbols at xi = 0 the
    /// right derivatives are returned.
    Jet2 jet(double xi) const;

    /// The symbol of kappa*M(kappa*D), i.e. xi -> kappa*m(kappa*xi),
    /// with jets rescaled by the chain rule.
    DispersionSymbol rescaled(int kappa_wave) const;

    SymbolKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const ParamMap& params() const { return params_; }
    double growth_exponent() const { return growth_exponent_; }
    ZeroBehavior zero_behavior() const { return zero_behavior_; }
    int wave_number() const { return kappa_wave_; }

    bool is_expression() const { return kind_ == SymbolKind::expression; }
    /// Pretty-printed DSL source (expression symbols only).
    std::string expression_text() const;

private:
    DispersionSymbol() = default;

    Jet2 base_jet(double xi) const;  // jet before the kappa_wave rescaling

    SymbolKind kind_ = SymbolKind::kdv;
    std::string name_;
    ParamMap params_;
    double growth_exponent_ = 2.0;
    ZeroBehavior zero_behavior_ = ZeroBehavior::smooth;
    int kappa_wave_ = 1;
    std::shared_ptr<const dsl::Expr> expr_;
};

/// Sampling used by check_assumption_a. Defaults match the desk-scale grids
/// the library is validated on.
struct AssumptionAGrid {
    double even_span = 10.0;   // evenness checked on xi in [-span, span]
    int even_samples = 101;
    double growth_lo = 10.0;   // growth bound checked on a log grid
    double growth_hi = 1.0e4;
    int growth_samples = 61;
};

struct AssumptionAReport {
    bool even_ok = false;
    bool growth_ok = false;
    double gap_c0 = 0.0;                 // inf_{n != 1} |m(n) - m(1)|, certified
    std::optional<int> resonant_n;       // set when the gap collapses below 1e-9
    std::vector<int> near_resonant;      // |m(n) - m(1)| < 1e-4 but not resonant
    bool tail_certified = false;         // growth bound covers n > n_max
    int n_max = 0;

    bool passed() const { return even_ok && growth_ok && !resonant_n.has_value(); }
};

/// Checks Assumption A: evenness, the two-sided growth bound, and the spectral
/// gap inf_{n in N\{1}} |m(n) - m(1)| >= c_0 > 0. The explicit minimum runs
/// over n in {0} u {2..n_max}; the tail n > n_max is certified from the growth
/// exponent (monotone tail bound).
AssumptionAReport check_assumption_a(const DispersionSymbol& sym, int n_max = 64,
                                     const AssumptionAGrid& grid = {});

constexpr double kResonanceTol = 1.0e-9;
constexpr double kNearResonanceTol = 1.0e-4;

}  // namespace gkdv
