#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ribbonfold/geometry.hpp"

namespace ribbonfold {

enum class Family { moebius, torus2q, twist_odd, twist_even };
enum class TwistParity { odd, even };

std::string family_name(Family family);
Family family_from_string(const std::string& name);

/// What a fold vertex belongs to. Escape-accordion fold pairs cancel in the
/// ribbon linking number, each half-wrap contributes one half-twist, and
/// closure/clasp folds contribute nothing.
enum class FoldRole { accordion, half_wrap, closure };

/// Per-vertex fold record of a built diagram. Unlike FoldSpec, the angle is a
/// raw value in [0, pi): the strip joins of the twist-knot clasps double the
/// ribbon back onto itself, which is the degenerate angle 0.
struct DiagramFold {
    FoldSide side;
    FoldKind kind;
    double angle;
    FoldRole role;
};

struct LedgerEntry {
    std::string name;
    double length;
};

/// Family tag plus the construction knobs: fold angle theta (always pi/3 for
/// the torus and twist families), wrap spacing d, half-wrap parameter n, and
/// the even escape-accordion fold count k.
struct ConstructionParams {
    Family family = Family::moebius;
    double theta = 0.0;
    double d = 0.0;
    int n = 0;
    int k = 0;
};

/// A closed planar knot diagram with fold data, labeled landmark vertices and
/// a named segment-length ledger that accounts for the full centerline length.
struct RibbonDiagram {
    PolylinePath centerline;              ///< closed; last vertex repeats the first
    std::vector<DiagramFold> folds;       ///< one entry per distinct vertex
    std::map<std::string, int> landmarks; ///< label -> vertex index
    std::vector<LedgerEntry> ledger;
    ConstructionParams params;

    int fold_vertex_count() const { return static_cast<int>(folds.size()); }
    double ledger_sum() const;
};

struct ClaspDistances {
    double dK_MP; ///< 1/(2*sqrt(3)), clasp length along the knot from M through N to P
    double d_PM;  ///< 1/sqrt(3) - 1/2, planar offset between P and M
    double d_JT;  ///< 1/(2*sqrt(3))
};

/// Smallest even k >= 2 with k*d >= escape_min_kd(theta); the accordion of a
/// built diagram is then spaced at escape_min_kd(theta)/k so the clearance
/// holds with equality.
int default_even_fold_count(const FoldAngle& theta, double d);

/// Multi-twist folded ribbon band: escape accordion, 2n+1 half-wraps, ends
/// folded behind and joined. Odd fold-vertex count for every valid input.
/// `k` overrides the default fold-count policy (must be even and clear).
RibbonDiagram build_moebius(const FoldAngle& theta, double d, int n,
                            std::optional<int> k = std::nullopt);

/// Two-strip construction closing q = 2n+1 half-wraps into a (2,q)-torus
/// knot diagram; theta is fixed at pi/3. Rejects even or q < 3.
RibbonDiagram build_torus(int q, double d, std::optional<int> k = std::nullopt);

/// Twist-knot diagram: 2n+1 (odd) or 2n (even) half-wraps closed by the
/// four-step (odd) or five-step (even) clasp; theta fixed at pi/3.
RibbonDiagram build_twist(int n, TwistParity parity, double d,
                          std::optional<int> k = std::nullopt);

/// Closed-form folded ribbonlength of the multi-twist band:
/// 2/cos(θ/2) + 1/(cos(θ/2)sin(θ/2)) + tan(θ/2) + 2nd(1 + sin(θ/2)).
/// d = 0 evaluates the limit the builders cannot realize.
double moebius_rib_formula(const FoldAngle& theta, double d, int n);

/// 8*sqrt(3) + 6nd with n = (q-1)/2, for odd q >= 3.
double torus_rib_formula(int q, double d);

/// 9*sqrt(3) + 2 + 6nd (odd) or 8*sqrt(3) + 2 + 6nd (even), n >= 1.
double twist_rib_formula(int n, TwistParity parity, double d);

/// The three clasp constants, each produced by its geometric derivation
/// rather than written down directly.
ClaspDistances clasp_distances();

} // namespace ribbonfold
