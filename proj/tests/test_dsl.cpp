#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gkdv/dsl.hpp"
#include "gkdv/errors.hpp"
#include "gkdv/symbol.hpp"

using namespace gkdv;
using dsl::NodeKind;

TEST_CASE("grammar cases") {
    const dsl::Expr e = dsl::parse("xi^2 + b*xi^4");
    const dsl::Node& root = e.root();
    REQUIRE(root.kind == NodeKind::add);
    CHECK(root.children[0].kind == NodeKind::pow);
    CHECK(root.children[1].kind == NodeKind::mul);
    CHECK(root.children[1].children[0].kind == NodeKind::parameter);
    CHECK(root.children[1].children[0].name == "b");

    CHECK_NOTHROW(dsl::parse("sqrt(tanh(h*xi)/xi)"));
}

TEST_CASE("parse errors carry the byte offset") {
    try {
        dsl::parse("xi +");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 4);
        CHECK(!e.expected.empty());
    }
    CHECK_THROWS_AS(dsl::parse(""), ParseError);
    CHECK_THROWS_AS(dsl::parse("(xi"), ParseError);
    CHECK_THROWS_AS(dsl::parse("xi xi"), ParseError);
    CHECK_THROWS_AS(dsl::parse("foo(xi)"), UnknownFunction);
}

TEST_CASE("precedence and associativity") {
    auto value = [](const std::string& text, ParamMap params = {}, double xi = 1.0) {
        return dsl::eval_jet(dsl::parse(text), params, xi).v;
    };
    CHECK(value("-xi^2", {}, 2.0) == doctest::Approx(-4.0));         // pow binds above neg
    CHECK(value("2^3^2") == doctest::Approx(512.0));                 // pow right-associative
    CHECK(value("1 - 2 - 3") == doctest::Approx(-4.0));              // sub left-associative
    CHECK(value("12/2/3") == doctest::Approx(2.0));                  // div left-associative
    CHECK(value("2 + 3*4") == doctest::Approx(14.0));
    CHECK(value("(2 + 3)*4") == doctest::Approx(20.0));
    CHECK(value("2^-1") == doctest::Approx(0.5));
    CHECK(value("  xi ^ 2\t+ 1", {}, 3.0) == doctest::Approx(10.0));  // whitespace insensitive
}

TEST_CASE("taylor jets at interior points") {
    const Jet2 j = dsl::eval_jet(dsl::parse("xi^2"), {}, 1.0);
    CHECK(j.v == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(j.d1 == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(j.d2 == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("DSL whitham matches the catalog jet to 1e-10") {
    const dsl::Expr e = dsl::parse("sqrt(tanh(h*xi)/xi)");
    const ParamMap p = {{"h", 1.0}};
    const auto catalog = DispersionSymbol::catalog(SymbolKind::whitham, {{"tth", 1.0}});
    const Jet2 a = dsl::eval_jet(e, p, 1.0);
    const Jet2 b = catalog.jet(1.0);
    CHECK(a.v == doctest::Approx(b.v).epsilon(1e-10));
    CHECK(a.d1 == doctest::Approx(b.d1).epsilon(1e-10));
    CHECK(a.d2 == doctest::Approx(b.d2).epsilon(1e-10));
}

TEST_CASE("abs(xi) right-limit at zero") {
    const Jet2 j = dsl::eval_jet(dsl::parse("abs(xi)"), {}, 0.0);
    CHECK(j.v == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(j.d1 == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(j.d2 == doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("every catalog symbol has a faithful DSL twin on [0.1, 10]") {
    struct Twin {
        DispersionSymbol catalog;
        std::string text;
        ParamMap params;
    };
    const std::vector<Twin> twins = {
        {DispersionSymbol::catalog(SymbolKind::whitham, {{"tth", 2.0}}),
         "sqrt(tanh(h*xi)/xi)", {{"h", 2.0}}},
        {DispersionSymbol::catalog(SymbolKind::capillary_whitham, {{"tth", 1.0}, {"kappa", 0.5}}),
         "sqrt((1 + k*xi^2)*tanh(h*xi)/xi)", {{"h", 1.0}, {"k", 0.5}}},
        {DispersionSymbol::catalog(SymbolKind::vorticity_whitham, {{"tth", 1.5}, {"gamma", 2.0}}),
         "g/2*(tanh(h*xi)/xi) + sqrt(tanh(h*xi)/xi + g^2/4*(tanh(h*xi)/xi)^2)",
         {{"h", 1.5}, {"g", 2.0}}},
        {DispersionSymbol::catalog(SymbolKind::kawahara, {{"ta", -4.0}, {"tb", 1.0}}),
         "a*xi^2 + b*xi^4", {{"a", -4.0}, {"b", 1.0}}},
        {DispersionSymbol::catalog(SymbolKind::ilw, {{"tth", 1.0}}),
         "xi*coth(h*xi) - 1/h", {{"h", 1.0}}},
        {DispersionSymbol::catalog(SymbolKind::kdv), "xi^2", {}},
        {DispersionSymbol::catalog(SymbolKind::fkdv, {{"alpha", 3.0}}), "abs(xi)^3", {}},
        {DispersionSymbol::catalog(SymbolKind::benjamin_ono), "abs(xi)", {}},
    };
    for (const auto& twin : twins) {
        const dsl::Expr e = dsl::parse(twin.text);
        for (double xi : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
            const Jet2 a = dsl::eval_jet(e, twin.params, xi);
            const Jet2 b = twin.catalog.jet(xi);
            CHECK(a.v == doctest::Approx(b.v).epsilon(1e-8));
            CHECK(a.d1 == doctest::Approx(b.d1).epsilon(1e-8));
            CHECK(a.d2 == doctest::Approx(b.d2).epsilon(1e-8));
        }
    }
}

TEST_CASE("DSL symbols evaluate their removable limits at zero") {
    // Interior-singular kernels go through the extrapolated right-limit.
    const Jet2 w0 = dsl::eval_jet(dsl::parse("sqrt(tanh(h*xi)/xi)"), {{"h", 2.0}}, 0.0);
    CHECK(w0.v == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));

    const Jet2 ilw0 = dsl::eval_jet(dsl::parse("xi*coth(h*xi) - 1/h"), {{"h", 1.0}}, 0.0);
    CHECK(ilw0.v == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ilw0.d2 == doctest::Approx(2.0 / 3.0).epsilon(1e-7));

    const Jet2 kaw0 = dsl::eval_jet(dsl::parse("a*xi^2 + b*xi^4"), {{"a", -4.0}, {"b", 1.0}}, 0.0);
    CHECK(kaw0.v == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(kaw0.d1 == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(kaw0.d2 == doctest::Approx(-8.0).epsilon(1e-10));
}

TEST_CASE("d1 channel matches central differences of the value channel") {
    const std::vector<std::pair<std::string, ParamMap>> cases = {
        {"sqrt(tanh(h*xi)/xi)", {{"h", 1.3}}},
        {"xi*coth(h*xi) - 1/h", {{"h", 0.7}}},
        {"exp(-xi^2) + cosh(xi)/sinh(xi + 1)", {}},
    };
    for (const auto& [text, params] : cases) {
        const dsl::Expr e = dsl::parse(text);
        for (double xi : {0.4, 1.0, 2.3}) {
            const double h = 1e-4;
            const double fd = (dsl::eval_jet(e, params, xi + h).v -
                               dsl::eval_jet(e, params, xi - h).v) /
                              (2 * h);
            CHECK(dsl::eval_jet(e, params, xi).d1 == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("round trip through pretty_print") {
    const std::vector<std::string> sources = {
        "xi^2 + b*xi^4",
        "sqrt((1 + k*xi^2)*tanh(h*xi)/xi)",
        "-xi^2 - -3*xi",
        "g/2*(tanh(h*xi)/xi) + sqrt(tanh(h*xi)/xi + g^2/4*(tanh(h*xi)/xi)^2)",
        "2^3^xi",
        "(xi + 1)*(xi - 1)/(xi + 2)",
    };
    const ParamMap params = {{"b", 0.5}, {"k", 0.25}, {"h", 1.2}, {"g", -0.7}};
    for (const auto& text : sources) {
        const dsl::Expr e = dsl::parse(text);
        const dsl::Expr reparsed = dsl::parse(dsl::pretty_print(e));
        for (double xi : {0.3, 1.0, 2.2, 6.0}) {
            const Jet2 a = dsl::eval_jet(e, params, xi);
            const Jet2 b = dsl::eval_jet(reparsed, params, xi);
            CHECK(a.v == b.v);
            CHECK(a.d1 == b.d1);
            CHECK(a.d2 == b.d2);
        }
    }
}

TEST_CASE("binding and domain errors") {
    const dsl::Expr e = dsl::parse("a*xi");
    CHECK_THROWS_AS(dsl::bind_check(e, {}), UnknownParameter);
    CHECK_NOTHROW(dsl::bind_check(e, {{"a", 2.0}}));
    CHECK_THROWS_AS(dsl::eval_jet(e, {}, 1.0), UnknownParameter);

    CHECK_THROWS_AS(dsl::eval_jet(dsl::parse("sqrt(-1 - xi^2)"), {}, 1.0), DomainError);
    // A genuine pole is not retried as a removable limit.
    CHECK_THROWS_AS(dsl::eval_jet(dsl::parse("(1 + xi)/(xi - 1)"), {}, 1.0), DomainError);
}

TEST_CASE("abs placement rule") {
    // Directly on xi: fine anywhere.
    CHECK_NOTHROW(dsl::eval_jet(dsl::parse("abs(xi)^3"), {}, 2.0));
    // Outermost: fine.
    CHECK_NOTHROW(dsl::eval_jet(dsl::parse("abs(xi^2 - 1)"), {}, 2.0));
    // Inner abs on a compound argument: rejected.
    CHECK_THROWS_AS(dsl::eval_jet(dsl::parse("sqrt(abs(xi - 1))"), {}, 2.0), NonDifferentiable);
    CHECK_THROWS_AS(dsl::eval_jet(dsl::parse("1 + abs(xi - 1)"), {}, 2.0), NonDifferentiable);
}

TEST_CASE("generated expressions round-trip through pretty_print") {
    // Deterministic LCG-driven expression generator; every tree must survive
    // printing and reparsing with bitwise-identical jets.
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto rng = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<std::uint32_t>(state >> 33);
    };
    const ParamMap params = {{"a", 0.7}, {"b", -1.3}, {"h", 2.1}};

    std::function<std::string(int)> gen = [&](int depth) -> std::string {
        if (depth <= 0) {
            switch (rng() % 4) {
                case 0: return "xi";
                case 1: return "a";
                case 2: return "b";
                default: return std::to_string(1 + rng() % 9) + "." + std::to_string(rng() % 10);
            }
        }
        switch (rng() % 8) {
            case 0: return gen(depth - 1) + " + " + gen(depth - 1);
            case 1: return gen(depth - 1) + " - " + gen(depth - 1);
            case 2: return gen(depth - 1) + "*" + gen(depth - 1);
            case 3: return "(" + gen(depth - 1) + ")/(" + gen(depth - 1) + " + 20)";
            case 4: return "-" + gen(depth - 1);
            case 5: return "tanh(" + gen(depth - 1) + ")";
            case 6: return "exp(-(" + gen(depth - 1) + ")^2)";
            default: return "(" + gen(depth - 1) + ")^2";
        }
    };

    int verified = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::string text = gen(3);
        const dsl::Expr e = dsl::parse(text);
        const dsl::Expr back = dsl::parse(dsl::pretty_print(e));
        for (double xi : {0.3, 1.0, 4.2}) {
            Jet2 j1, j2;
            try {
                j1 = dsl::eval_jet(e, params, xi);
                j2 = dsl::eval_jet(back, params, xi);
            } catch (const Error&) {
                continue;  // a generated pole or domain edge; not the point here
            }
            CHECK(j1.v == j2.v);
            CHECK(j1.d1 == j2.d1);
            CHECK(j1.d2 == j2.d2);
            ++verified;
        }
    }
    CHECK(verified > 100);
}

TEST_CASE("a genuine pole fails extrapolation instead of inventing a limit") {
    // coth(xi) alone has a pole at 0; no removable pattern cancels it.
    CHECK_THROWS_AS(dsl::eval_jet(dsl::parse("coth(xi)"), {}, 0.0), ExtrapolationDiverged);
}

TEST_CASE("parameter names are collected in first-use order") {
    const auto names = dsl::parameter_names(dsl::parse("a*xi + b*xi^2 + a"));
    REQUIRE(names.size() == 2);
    CHECK(names[0] == "a");
    CHECK(names[1] == "b");
}
