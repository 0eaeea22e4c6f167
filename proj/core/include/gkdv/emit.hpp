#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gkdv/floquet.hpp"
#include "gkdv/modulation.hpp"
#include "gkdv/spectrum.hpp"
#include "gkdv/stability_map.hpp"
#include "gkdv/stokes.hpp"
#include "gkdv/symbol.hpp"
#include "gkdv/toml.hpp"

namespace gkdv::emit {

/// Fixed 17-significant-digit rendering used by every data file, so identical
/// inputs produce byte-identical output.
std::string fp(double value);

/// Minimal insertion-ordered JSON document builder.
class Json {
public:
    static Json object();
    static Json array();
    static Json number(double v);
    static Json integer(long long v);
    static Json string(std::string v);
    static Json boolean(bool v);

    Json& set(const std::string& key, Json value);  // object members, in order
    Json& push(Json value);                         // array elements

    std::string dump(int indent = 2) const;

private:
    enum class Type { object, array, number, integer, string, boolean };
    Type type_ = Type::object;
    double num_ = 0.0;
    long long int_ = 0;
    bool flag_ = false;
    std::string str_;
    std::vector<std::pair<std::string, Json>> members_;
    std::vector<Json> elements_;

    void write(std::string& out, int indent, int depth) const;
};

Json complex_json(const std::complex<double>& z);

// -- JSON payloads ------------------------------------------------------------

Json symbol_json(const DispersionSymbol& sym);
Json coefficients_json(const ModulationCoefficients& coeffs);
Json classification_json(const Classification& cls);
Json assumption_a_json(const AssumptionAReport& report);
Json assumption_b_json(const AssumptionBReport& report);
Json wave_json(const StokesWave& wave);
Json branch_json(const BenjaminFeirBranch& branch);
Json comparison_json(const ComparisonReport& report);

// -- CSV ----------------------------------------------------------------------

std::string branch_csv(const BenjaminFeirBranch& branch);
std::string comparison_csv(const ComparisonReport& report);
/// Header "p1,p2,te12,te_d,te_b,te_w,te_wb,class"; one row per cell, row-major.
std::string signmap_csv(const SignMap& map);
std::string scan1d_csv(const std::string& p_name, const std::vector<Scan1DPoint>& points);

// -- SVG ----------------------------------------------------------------------

/// Closed figure-8 polyline with axes labeled Re lambda / Im lambda.
std::string figure8_svg(const Figure8Curve& curve, int width = 640, int height = 480);
/// Sign-map heat map (one rectangle per cell, class-colored).
std::string signmap_svg(const SignMap& map, int width = 640, int height = 480);

// -- Symbol <-> TOML ----------------------------------------------------------

toml::Table symbol_to_toml(const DispersionSymbol& sym);
DispersionSymbol symbol_from_toml(const toml::Table& table);

}  // namespace gkdv::emit
