#include "ribbonfold/analysis.hpp"

#include <cmath>
#include <numbers>

namespace ribbonfold {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kBracketLo = 0.1;
constexpr double kBracketHi = kPi - 0.1;
// The formula is flat to machine precision within ~sqrt(eps) of its quadratic
// minimum, which bounds how sharply the derivative-free route can localize it.
constexpr double kCrossCheckFloor = 1e-7;
} // namespace

double ribbonlength(const PolylinePath& path) {
    validate_path(path);
    return path_length(path);
}

double ribbonlength(const RibbonDiagram& diagram) {
    return ribbonlength(diagram.centerline);
}

double rib_theta_derivative(const FoldAngle& theta) {
    const double s = std::sin(theta.half());
    const double c = std::cos(theta.half());
    const double num = (s + 1.0) * (s + 1.0) * (2.0 * s - 1.0);
    return num / (2.0 * c * c * s * s);
}

OptimizeResult optimal_theta(double tolerance) {
    if (!(tolerance > 0.0)) {
        throw DomainError("tolerance must be positive");
    }
    const auto deriv = [](double th) { return rib_theta_derivative(FoldAngle(th)); };
    const auto value = [](double th) { return moebius_rib_formula(FoldAngle(th), 0.0, 0); };

    double lo = kBracketLo;
    double hi = kBracketHi;
    if (!(deriv(lo) < 0.0 && deriv(hi) > 0.0)) {
        throw NumericalError("derivative bracket (0.1, pi-0.1) does not straddle a root");
    }
    int bisect_iters = 0;
    while (hi - lo > tolerance * 0.5 && bisect_iters < 200) {
        const double mid = 0.5 * (lo + hi);
        const double fm = deriv(mid);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        (fm < 0.0 ? lo : hi) = mid;
        ++bisect_iters;
    }
    const double theta_root = 0.5 * (lo + hi);

    // Golden-section cross-check on the formula itself.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = kBracketLo;
    double b = kBracketHi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = value(x1);
    double f2 = value(x2);
    int golden_iters = 0;
    while (b - a > tolerance * 0.5 && golden_iters < 400) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = value(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = value(x2);
        }
        ++golden_iters;
    }
    const double theta_golden = 0.5 * (a + b);

    const double agree = std::max(tolerance, kCrossCheckFloor);
    if (std::abs(theta_root - theta_golden) > agree) {
        throw NumericalError("derivative root and derivative-free minimum disagree");
    }

    OptimizeResult result;
    result.theta_star = theta_root;
    result.rib_value = value(theta_root);
    result.derivative_iterations = bisect_iters;
    result.golden_iterations = golden_iters;
    return result;
}

double limit_rib(Family family) {
    const double r3 = std::sqrt(3.0);
    switch (family) {
        case Family::moebius: return 3.0 * r3;
        case Family::torus2q: return 8.0 * r3;
        case Family::twist_odd: return 9.0 * r3 + 2.0;
        case Family::twist_even: return 8.0 * r3 + 2.0;
    }
    throw DomainError("unknown family");
}

int torus_crossing_number(int p, int q) {
    if (p < 2 || q < 2) {
        throw DomainError("torus crossing number needs p, q >= 2");
    }
    const long long a = static_cast<long long>(p - 1) * q;
    const long long b = static_cast<long long>(p) * (q - 1);
    return static_cast<int>(a < b ? a : b);
}

double kny_bound(int crossing_number) {
    if (crossing_number < 0) {
        throw DomainError("crossing number must be >= 0");
    }
    return 2.5 * crossing_number + 1.0;
}

std::vector<BoundRow> comparison_table(const std::vector<int>& q_values) {
    std::vector<BoundRow> rows;
    rows.reserve(q_values.size());
    const double construction = limit_rib(Family::torus2q);
    for (const int q : q_values) {
        if (q < 3 || q % 2 == 0) {
            throw DomainError("comparison table requires odd q >= 3");
        }
        rows.push_back(BoundRow{q, torus_crossing_number(2, q), construction, kny_bound(q)});
    }
    return rows;
}

int ribbon_linking_number(const RibbonDiagram& diagram) {
    const std::size_t vertex_count =
        diagram.centerline.vertices.empty() ? 0 : diagram.centerline.vertices.size() - 1;
    if (diagram.folds.empty() || diagram.folds.size() != vertex_count) {
        throw DomainError("diagram lacks per-vertex fold provenance; cannot count linking");
    }
    // Sign convention: each half-wrap counts +1; accordion folds cancel in
    // pairs and closure folds contribute nothing.
    int lk = 0;
    for (const auto& fold : diagram.folds) {
        if (fold.role == FoldRole::half_wrap) {
            ++lk;
        }
    }
    return lk;
}

BandType band_type(const PolylinePath& path) {
    validate_path(path);
    if (!path.closed) {
        throw DomainError("band type is defined for closed diagrams only");
    }
    const std::size_t edges = path.vertices.size() - 1;
    return (edges % 2 == 1) ? BandType::moebius_band : BandType::annulus;
}

BandType band_type(const RibbonDiagram& diagram) {
    return band_type(diagram.centerline);
}

std::vector<ReferenceConstant> reference_constants() {
    const double r3 = std::sqrt(3.0);
    return {
        {"pentagon_trefoil", 5.0 / std::tan(kPi / 5.0), "pentagonal trefoil diagram, 5*cot(pi/5)"},
        {"trefoil_construction", 6.0, "best known trefoil constructions"},
        {"unknot_annulus_lk_n", 2.0, "annulus with linking number n costs 2n, value per unit n"},
        {"moebius_lower_bound", r3, "lower bound for any embedded band with a half-twist"},
        {"three_half_twist_bound", 3.0, "3 half-twist band aspect ratio construction"},
        {"twisted_cylinder_bound", 2.0, "sharp bound for the twisted paper cylinder"},
        {"prior_general_bound", 8.0, "previous uniform multi-twist bound"},
        {"prior_moebius_bound", 6.5, "previous multi-twist band bound"},
        {"prior_annulus_bound", 7.45, "previous multi-twist annulus bound"},
        {"this_work_moebius", 3.0 * r3, "multi-twist band bound from the pi/3 accordion"},
    };
}

double formula_for(const ConstructionParams& params) {
    switch (params.family) {
        case Family::moebius:
            return moebius_rib_formula(FoldAngle(params.theta), params.d, params.n);
        case Family::torus2q:
            return torus_rib_formula(2 * params.n + 1, params.d);
        case Family::twist_odd:
            return twist_rib_formula(params.n, TwistParity::odd, params.d);
        case Family::twist_even:
            return twist_rib_formula(params.n, TwistParity::even, params.d);
    }
    throw DomainError("unknown family");
}

RibbonlengthReport make_report(const RibbonDiagram& diagram) {
    RibbonlengthReport report;
    report.formula_value = formula_for(diagram.params);
    report.oracle_value = ribbonlength(diagram);
    report.limit_d_zero = limit_rib(diagram.params.family);
    report.ledger = diagram.ledger;
    report.family = diagram.params;
    return report;
}

} // namespace ribbonfold
