#pragma once

#include <span>
#include <vector>

#include "ribbonfold/errors.hpp"

namespace ribbonfold {

/// Planar point / 2-vector in ribbon-width units (the ribbon has width 1).
struct PlanarPoint {
    double x = 0.0;
    double y = 0.0;

    constexpr PlanarPoint() = default;
    constexpr PlanarPoint(double px, double py) : x(px), y(py) {}

    constexpr PlanarPoint operator+(const PlanarPoint& r) const { return {x + r.x, y + r.y}; }
    constexpr PlanarPoint operator-(const PlanarPoint& r) const { return {x - r.x, y - r.y}; }
    constexpr PlanarPoint operator*(double s) const { return {x * s, y * s}; }
    constexpr double dot(const PlanarPoint& r) const { return x * r.x + y * r.y; }
    /// z-component of the 2D cross product; > 0 means r lies counterclockwise of *this.
    constexpr double cross(const PlanarPoint& r) const { return x * r.y - y * r.x; }
    double norm() const;
    PlanarPoint normalized() const;
    bool finite() const;
};

double distance(const PlanarPoint& a, const PlanarPoint& b);

/// Fold angle θ, the interior angle of the knot diagram at a fold vertex.
/// Valid range is the open interval (0, π): θ = 0 doubles the ribbon back
/// onto itself and θ = π is no fold at all. The degenerate θ = π case is
/// accepted only by the raw-angle overloads of turn_at_fold / build_zigzag.
class FoldAngle {
public:
    explicit FoldAngle(double radians);

    double radians() const { return theta_; }
    double half() const { return theta_ / 2.0; }

private:
    double theta_;
};

enum class FoldSide { left, right };
enum class FoldKind { overfold, underfold };

/// One fold event: which way the ribbon turns, whether it passes over or
/// under itself, and the interior angle at the vertex.
struct FoldSpec {
    FoldSide side;
    FoldKind kind;
    FoldAngle angle;
};

/// Parameters of a zigzag (accordion or half-wrap run): fold angle θ,
/// vertex spacing d > 0, and the number of fold vertices.
struct ZigzagParams {
    FoldAngle theta;
    double d;
    int count;

    ZigzagParams(FoldAngle angle, double spacing, int fold_count);
};

/// Open or closed planar polyline. A closed path repeats its first vertex
/// as the last entry; consecutive vertices must be distinct.
struct PolylinePath {
    std::vector<PlanarPoint> vertices;
    bool closed = false;
};

/// Throws DomainError if the path violates its invariants (≥ 2 vertices,
/// consecutive vertices distinct, closed paths ending within 1e-12 of the start).
void validate_path(const PolylinePath& path);

/// Total Euclidean length of the polyline, compensated (Neumaier) summation.
/// This is the geometric oracle for every closed-form ribbonlength check:
/// with width w = 1 the centerline length *is* the ribbonlength.
double path_length(const PolylinePath& path);

/// Reflect an incoming unit direction through a fold. The outgoing direction
/// makes interior angle θ with the incoming segment; the turn of magnitude
/// π − θ goes toward `side` (left = counterclockwise). Accepts θ in (0, π];
/// θ = π is the no-turn degeneracy.
PlanarPoint turn_at_fold(const PlanarPoint& incoming_direction, FoldSide side, double theta);
PlanarPoint turn_at_fold(const PlanarPoint& incoming_direction, const FoldSpec& fold);

/// Planar span of a V-unit: the distance 2·d·sin(θ/2) between the start and
/// end vertices of two consecutive accordion edges.
double v_unit_span(const FoldAngle& theta, double d);

/// Minimal product k·d for an escape accordion at fold angle θ, namely
/// 1/(cos(θ/2)·sin(θ/2)); at this value the ribbon entering and leaving the
/// accordion clear each other by exactly one ribbon width.
double escape_min_kd(const FoldAngle& theta);

struct ClearanceResult {
    bool satisfied;
    double clearance; ///< projected separation k·d·sin(θ/2)·cos(θ/2) of the entering and leaving ribbon
    double margin;    ///< clearance − 1 (≥ 0 when satisfied, 0 at equality)
};

/// Escape-accordion clearance test for an even fold count k ≥ 2:
/// satisfied iff k·d·sin(θ/2) ≥ 1/cos(θ/2).
ClearanceResult clearance_check(const FoldAngle& theta, double d, int k);

/// Raw zigzag vertex walk: `edge_count` + 1 points starting at `start`, each
/// edge of length d, directions alternating between (sin(θ/2), −cos(θ/2)) and
/// (sin(θ/2), +cos(θ/2)). `first_edge_descends` picks which comes first.
/// Accepts θ in (0, π]; θ = π produces a collinear path.
std::vector<PlanarPoint> zigzag_vertices(double theta, double d, int edge_count,
                                         const PlanarPoint& start, bool first_edge_descends);

/// Accordion / half-wrap zigzag with fold specs. Produces an open polyline of
/// count+1 edges of length d with folds at the count interior vertices. The
/// fold sides alternate starting with `start_side`; `fold_kinds` supplies the
/// over/underfold pattern (all overfolds for an accordion, alternating
/// underfold/overfold for half-wraps — the knot diagram looks the same for
/// both). Throws DomainError if fold_kinds.size() != params.count.
std::pair<PolylinePath, std::vector<FoldSpec>> build_zigzag(const ZigzagParams& params,
                                                            const PlanarPoint& start_point,
                                                            FoldSide start_side,
                                                            std::span<const FoldKind> fold_kinds);

} // namespace ribbonfold
