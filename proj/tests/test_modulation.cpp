#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gkdv/errors.hpp"
#include "gkdv/modulation.hpp"
#include "gkdv/symbol.hpp"

using namespace gkdv;

namespace {

DispersionSymbol kawahara(double ta, double tb) {
    return DispersionSymbol::catalog(SymbolKind::kawahara, {{"ta", ta}, {"tb", tb}});
}

DispersionSymbol whitham(double tth) {
    return DispersionSymbol::catalog(SymbolKind::whitham, {{"tth", tth}});
}

// Closed form of te_b for the Whitham symbol, c_h = sqrt(tanh tth):
// ((tth (1-c^4) - c^2)^2 + 4 tth^2 c^4 (1-c^4)) / (8 c^3).
double whitham_te_b_closed_form(double tth) {
    const double c = std::sqrt(std::tanh(tth));
    const double c2 = c * c, c4 = c2 * c2;
    const double first = tth * (1.0 - c4) - c2;
    return (first * first + 4.0 * tth * tth * c4 * (1.0 - c4)) / (8.0 * c2 * c);
}

}  // namespace

TEST_CASE("KdV coefficients in closed form") {
    const ModulationCoefficients c = compute_coefficients(DispersionSymbol::catalog(SymbolKind::kdv));
    CHECK(c.te12 == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(c.te_d == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(c.te_b == doctest::Approx(-3.0).epsilon(1e-15));
    CHECK(c.te_w == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(c.te_wb == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(c.te22 == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(c.te33 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c.tg33 == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(c.fa == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    CHECK(c.u2_0 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(c.c2 == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("kawahara (-4, 1) coefficients") {
    const ModulationCoefficients c = compute_coefficients(kawahara(-4.0, 1.0));
    CHECK(c.te12 == doctest::Approx(-4.0).epsilon(1e-14));
    CHECK(c.te_d == doctest::Approx(-7.0).epsilon(1e-14));
    CHECK(c.te_b == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(c.te_w == doctest::Approx(-13.0 / 21.0).epsilon(1e-14));
    CHECK(c.te_wb == doctest::Approx(-26.0 / 21.0).epsilon(1e-14));
}

TEST_CASE("kawahara closed forms over a parameter grid") {
    // te12 = 2ta+4tb, te_d = 3ta+5tb, te_b = -3ta-10tb,
    // te_w = (3ta+25tb)/(3(ta+5tb)(3ta+5tb)).
    int checked = 0;
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            const double ta = -9.7 + 1.01 * i;
            const double tb = 0.4 + 0.35 * j;
            const double te_d = 3 * ta + 5 * tb;
            if (std::abs(ta + 5 * tb) < 0.05 || std::abs(te_d) < 0.05) continue;
            ModulationCoefficients c;
            try {
                c = compute_coefficients(kawahara(ta, tb));
            } catch (const DegenerateCoefficient&) {
                continue;  // resonance line crossed by the grid
            }
            CHECK(c.te12 == doctest::Approx(2 * ta + 4 * tb).epsilon(1e-12));
            CHECK(c.te_d == doctest::Approx(te_d).epsilon(1e-12));
            CHECK(c.te_b == doctest::Approx(-3 * ta - 10 * tb).epsilon(1e-12));
            CHECK(c.te_w ==
                  doctest::Approx((3 * ta + 25 * tb) / (3 * (ta + 5 * tb) * (3 * ta + 5 * tb)))
                      .epsilon(1e-12));
            ++checked;
        }
    }
    CHECK(checked >= 90);
}

TEST_CASE("whitham te_b closed form over tth in [0.2, 5]") {
    for (int i = 0; i < 100; ++i) {
        const double tth = 0.2 + 4.8 * i / 99.0;
        const ModulationCoefficients c = compute_coefficients(whitham(tth));
        CHECK(c.te_b == doctest::Approx(whitham_te_b_closed_form(tth)).epsilon(1e-10));
        CHECK(c.te_b > 0.0);
    }
}

TEST_CASE("benjamin-ono sits exactly on the critical case") {
    const ModulationCoefficients c =
        compute_coefficients(DispersionSymbol::catalog(SymbolKind::benjamin_ono));
    // Jet values (m'(1), 3m(1), -2m(2), -m(0)) = (1, 3, -4, 0) sum to zero.
    CHECK(c.te_w == 0.0);
    CHECK(c.te_wb == 0.0);
}

TEST_CASE("identities between coefficients") {
    for (const auto& sym : {whitham(0.7), whitham(2.0), kawahara(-4.0, 1.0),
                            DispersionSymbol::catalog(SymbolKind::ilw, {{"tth", 1.0}}),
                            DispersionSymbol::catalog(SymbolKind::kdv)}) {
        const ModulationCoefficients c = compute_coefficients(sym);
        CHECK(c.te_wb == c.te_w * c.te_b);     // bitwise: computed as this product
        CHECK(c.te_d == c.te12 + c.te33);      // identity by construction
        CHECK(c.te_b == c.te22 - c.te12);      // identity by construction
        CHECK(c.fa == 2.0 * c.u2_2);
        CHECK(c.jets.m1 == sym(1.0));
    }
}

TEST_CASE("degenerate denominators are named") {
    try {
        compute_coefficients(kawahara(-5.0, 1.0));
        FAIL("expected DegenerateCoefficient");
    } catch (const DegenerateCoefficient& e) {
        CHECK(e.quantity == "m(1)-m(2)");
    }
    try {
        compute_coefficients(kawahara(-5.0 / 3.0, 1.0));
        FAIL("expected DegenerateCoefficient");
    } catch (const DegenerateCoefficient& e) {
        CHECK(e.quantity == "te_d");
    }
}

TEST_CASE("assumption B report") {
    CHECK(check_assumption_b(compute_coefficients(DispersionSymbol::catalog(SymbolKind::kdv)))
              .passed());

    // ta = -2 tb zeroes te12.
    const AssumptionBReport r = check_assumption_b(compute_coefficients(kawahara(-2.0, 1.0)));
    CHECK_FALSE(r.passed());
    for (const auto& e : r.entries) {
        if (e.name == "te12") CHECK(e.vanishes);
        if (e.name == "te_b") CHECK_FALSE(e.vanishes);
    }

    // Benjamin-Ono: the te_w numerator is the vanishing quantity.
    const AssumptionBReport bo =
        check_assumption_b(compute_coefficients(DispersionSymbol::catalog(SymbolKind::benjamin_ono)));
    CHECK_FALSE(bo.passed());
    for (const auto& e : bo.entries) {
        if (e.name == "te_w") CHECK(e.vanishes);
    }
}

TEST_CASE("classification dichotomy") {
    CHECK(classify(whitham(2.0)).unstable());
    CHECK(classify(DispersionSymbol::catalog(SymbolKind::ilw, {{"tth", 1.0}})).stable());
    CHECK(classify(DispersionSymbol::catalog(SymbolKind::kdv)).stable());

    const Classification res = classify(kawahara(-5.0, 1.0));
    CHECK(res.value == StabilityClass::degenerate);
    CHECK(res.reason == "resonance n=2");

    const Classification bo = classify(DispersionSymbol::catalog(SymbolKind::benjamin_ono));
    CHECK(bo.value == StabilityClass::degenerate);
}

TEST_CASE("verdicts are stable under jet jitter") {
    for (const auto& sym : {whitham(2.0), whitham(0.7), kawahara(-4.0, 1.0)}) {
        const ModulationCoefficients base = compute_coefficients(sym);
        REQUIRE(std::abs(base.te_wb) > 1e-6);
        for (double jitter : {-1e-12, 1e-12}) {
            JetProvenance jets = base.jets;
            jets.ddm1 += jitter;
            const ModulationCoefficients perturbed = coefficients_from_jets(jets);
            CHECK((perturbed.te_wb > 0) == (base.te_wb > 0));
        }
    }
}
