#pragma once

#include <string>
#include <vector>

#include "ribbonfold/constructions.hpp"

namespace ribbonfold {

enum class BandType { moebius_band, annulus };

/// Formula value, geometric oracle value, d->0 limit and the per-term ledger
/// for one built diagram. The formula and the oracle agree within 1e-9 for
/// every construction.
struct RibbonlengthReport {
    double formula_value;
    double oracle_value;
    double limit_d_zero;
    std::vector<LedgerEntry> ledger;
    ConstructionParams family;
};

struct BoundRow {
    int q;
    int crossing_number;
    double construction_bound;
    double kny_bound;
};

struct ReferenceConstant {
    std::string name;
    double value;
    std::string citation;
};

struct OptimizeResult {
    double theta_star;
    double rib_value;            ///< band formula at theta_star with d = 0
    int derivative_iterations;   ///< bisection steps on the closed-form derivative
    int golden_iterations;       ///< golden-section steps on the formula
};

/// Centerline length over the (unit) width.
double ribbonlength(const RibbonDiagram& diagram);
double ribbonlength(const PolylinePath& path);

/// Closed-form derivative with respect to theta of the d-independent part of
/// the band formula: (sin(θ/2)+1)²·(2sin(θ/2)−1) / (2cos²(θ/2)sin²(θ/2)).
double rib_theta_derivative(const FoldAngle& theta);

/// Fold angle minimizing the band formula, found by bisecting the closed-form
/// derivative over (0.1, pi-0.1) and cross-checked by golden-section
/// minimization of the formula itself. Throws NumericalError if the bracket
/// fails or the two routes disagree.
OptimizeResult optimal_theta(double tolerance);

/// d->0 ribbonlength constant of a family: 3√3 (moebius), 8√3 (torus),
/// 9√3+2 (odd twist), 8√3+2 (even twist).
double limit_rib(Family family);

/// min((p-1)*q, p*(q-1)) for p, q >= 2; equals q for the (2,q) family.
int torus_crossing_number(int p, int q);

/// 2.5*Cr + 1.
double kny_bound(int crossing_number);

/// One row per odd q >= 3: crossing number q, the q-independent construction
/// bound 8√3, and 2.5q+1 for comparison.
std::vector<BoundRow> comparison_table(const std::vector<int>& q_values);

/// Counting rule on the diagram's fold provenance: accordion fold pairs
/// cancel, each half-wrap contributes +1, closure folds contribute nothing.
int ribbon_linking_number(const RibbonDiagram& diagram);

/// Edge-parity rule for a closed diagram: odd edge count folds up into a
/// Moebius band, even into an annulus.
BandType band_type(const PolylinePath& path);
BandType band_type(const RibbonDiagram& diagram);

/// Fixed table of reference ribbonlength / aspect-ratio values.
std::vector<ReferenceConstant> reference_constants();

/// Assemble the report for a built diagram.
RibbonlengthReport make_report(const RibbonDiagram& diagram);

/// Formula value for the diagram's own parameters.
double formula_for(const ConstructionParams& params);

} // namespace ribbonfold
