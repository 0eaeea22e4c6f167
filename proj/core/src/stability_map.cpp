#include "gkdv/stability_map.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "gkdv/errors.hpp"

namespace gkdv {

namespace {

// Bisection of a scalar function with a validated sign-change bracket.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol,
              const char* what) {
    double flo = f(lo), fhi = f(hi);
    if (!std::isfinite(flo) || !std::isfinite(fhi) || flo * fhi >= 0.0)
        throw BracketInvalid(std::string(what) + ": no sign change on [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "]");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if (flo * fmid < 0.0) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    (void)fhi;
    return 0.5 * (lo + hi);
}

}  // namespace

const char* to_string(CellClass cls) {
    switch (cls) {
        case CellClass::unstable: return "unstable";
        case CellClass::stable: return "stable";
        case CellClass::degenerate: return "degenerate";
        case CellClass::resonant: return "resonant";
    }
    return "?";
}

MapCell classify_cell(const DispersionSymbol& sym) {
    MapCell cell;
    const AssumptionAReport a = check_assumption_a(sym);
    if (a.resonant_n.has_value()) {
        cell.cls = CellClass::resonant;
        cell.resonant_n = a.resonant_n;
        cell.note = "resonance n=" + std::to_string(*a.resonant_n);
        return cell;
    }
    try {
        cell.coeffs = compute_coefficients(sym);
    } catch (const DegenerateCoefficient& e) {
        cell.cls = CellClass::degenerate;
        cell.note = e.quantity;
        return cell;
    }
    cell.te_wb = cell.coeffs->te_wb;
    const AssumptionBReport b = check_assumption_b(*cell.coeffs);
    for (const auto& entry : b.entries) {
        if (entry.vanishes || entry.near_zero) {
            cell.cls = CellClass::degenerate;
            cell.note = entry.name + (entry.vanishes ? " vanishes" : " near zero");
            return cell;
        }
    }
    if (!a.near_resonant.empty()) {
        cell.cls = CellClass::degenerate;
        cell.note = "near resonance n=" + std::to_string(a.near_resonant.front());
        return cell;
    }
    cell.cls = cell.te_wb > 0.0 ? CellClass::unstable : CellClass::stable;
    return cell;
}

double whitham_threshold(double tol, const SymbolFamily1& family, double lo, double hi) {
    if (tol <= 0.0) throw InvalidParameter("whitham_threshold: tol must be positive");
    auto te_wb_of = [&](double tth) { return compute_coefficients(family(tth)).te_wb; };
    // te_b stays positive on the bracket; the root of te_wb is the root of te_w.
    for (double tth : {lo, hi}) {
        if (compute_coefficients(family(tth)).te_b <= 0.0)
            throw BracketInvalid("whitham_threshold: te_b not positive at bracket endpoint");
    }
    return bisect(te_wb_of, lo, hi, tol, "whitham_threshold");
}

double whitham_threshold(double tol) {
    return whitham_threshold(tol, [](double tth) {
        return DispersionSymbol::catalog(SymbolKind::whitham, {{"tth", tth}});
    });
}

KawaharaSlopes kawahara_critical_slopes(const SymbolFamily1& family, int n_resonances) {
    // All coefficient functions below are evaluated along tb = 1; the returned
    // abscissae are the slopes ta/tb of the critical lines.
    auto jets = [&](double ta) { return family(ta); };
    auto te12_of = [&](double ta) { return jets(ta).jet(1.0).d1; };
    auto te_d_of = [&](double ta) {
        const DispersionSymbol s = jets(ta);
        return s.jet(1.0).d1 + s(1.0) - s(0.0);
    };
    auto te_b_of = [&](double ta) {
        const Jet2 j1 = jets(ta).jet(1.0);
        return -j1.d1 - 0.5 * j1.d2;
    };
    auto te_w_num_of = [&](double ta) {
        const DispersionSymbol s = jets(ta);
        return s.jet(1.0).d1 + 3.0 * s(1.0) - 2.0 * s(2.0) - s(0.0);
    };

    KawaharaSlopes slopes;
    const double tol = 1.0e-9;
    slopes.te_d_zero = bisect(te_d_of, -3.0, -1.0, tol, "te_d");
    slopes.te12_zero = bisect(te12_of, -3.0, -1.0, tol, "te12");
    slopes.te_b_zero = bisect(te_b_of, -4.0, -3.0, tol, "te_b");
    slopes.te_w_num_zero = bisect(te_w_num_of, -9.0, -8.0, tol, "te_w numerator");
    // Resonances m(n) = m(1): located as roots of the gap function.
    for (int n = 2; n < 2 + n_resonances; ++n) {
        auto gap = [&](double ta) {
            const DispersionSymbol s = jets(ta);
            return s(static_cast<double>(n)) - s(1.0);
        };
        const double guess = -static_cast<double>(n * n + 1);
        slopes.resonant.push_back(bisect(gap, guess - 0.5, guess + 0.5, tol, "resonance"));
    }
    return slopes;
}

KawaharaSlopes kawahara_critical_slopes(int n_resonances) {
    return kawahara_critical_slopes(
        [](double ta) {
            return DispersionSymbol::catalog(SymbolKind::kawahara, {{"ta", ta}, {"tb", 1.0}});
        },
        n_resonances);
}

double capillary_resonance_curve(int n, double tth) {
    if (n == 1 || n < 0) throw InvalidN("capillary_resonance_curve: n must be 0 or >= 2");
    if (tth <= 0.0) throw InvalidParameter("capillary_resonance_curve: tth must be positive");
    if (n == 0) return tth / std::tanh(tth) - 1.0;
    const double nn = static_cast<double>(n);
    const double t1 = std::tanh(tth), tn = std::tanh(nn * tth);
    return (nn * t1 - tn) / (nn * nn * tn - nn * t1);
}

SignMap scan2d(const SymbolFamily2& family, const std::string& p1_name, double p1_lo,
               double p1_hi, int n1, const std::string& p2_name, double p2_lo, double p2_hi,
               int n2) {
    if (n1 < 2 || n2 < 2) throw InvalidParameter("scan2d: grid must be at least 2x2");
    SignMap map;
    map.p1_name = p1_name;
    map.p2_name = p2_name;
    for (int i = 0; i < n1; ++i)
        map.p1_values.push_back(p1_lo + (p1_hi - p1_lo) * i / (n1 - 1));
    for (int i = 0; i < n2; ++i)
        map.p2_values.push_back(p2_lo + (p2_hi - p2_lo) * i / (n2 - 1));
    map.cells.resize(static_cast<std::size_t>(n1) * n2);

    // Cells are independent; fan rows out to workers and assemble by index so
    // the result does not depend on scheduling.
    const int total = n1 * n2;
    const unsigned n_workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
    std::vector<std::thread> workers;
    workers.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w) {
        workers.emplace_back([&, w]() {
            for (int idx = static_cast<int>(w); idx < total; idx += static_cast<int>(n_workers)) {
                const int i1 = idx % n1, i2 = idx / n1;
                MapCell cell;
                try {
                    cell = classify_cell(family(map.p1_values[i1], map.p2_values[i2]));
                } catch (const Error& e) {
                    cell.cls = CellClass::degenerate;
                    cell.note = e.what();
                }
                cell.p1 = map.p1_values[i1];
                cell.p2 = map.p2_values[i2];
                map.cells[static_cast<std::size_t>(idx)] = std::move(cell);
            }
        });
    }
    for (auto& worker : workers) worker.join();
    return map;
}

std::vector<Scan1DPoint> scan1d(const SymbolFamily1& family, double lo, double hi, int n) {
    if (n < 2) throw InvalidParameter("scan1d: n must be >= 2");
    std::vector<Scan1DPoint> points(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Scan1DPoint& pt = points[static_cast<std::size_t>(i)];
        pt.p = lo + (hi - lo) * i / (n - 1);
        MapCell cell;
        try {
            cell = classify_cell(family(pt.p));
        } catch (const Error& e) {
            cell.cls = CellClass::degenerate;
            cell.note = e.what();
        }
        pt.cls = cell.cls;
        pt.coeffs = cell.coeffs;
        pt.te_wb = cell.te_wb;
    }
    return points;
}

}  // namespace gkdv
