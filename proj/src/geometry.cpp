#include "ribbonfold/geometry.hpp"

#include <cmath>
#include <numbers>

namespace ribbonfold {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kClosureTol = 1e-12;
constexpr double kUnitTol = 1e-9;
} // namespace

double PlanarPoint::norm() const { return std::hypot(x, y); }

PlanarPoint PlanarPoint::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw DomainError("cannot normalize a zero vector");
    }
    return {x / n, y / n};
}

bool PlanarPoint::finite() const { return std::isfinite(x) && std::isfinite(y); }

double distance(const PlanarPoint& a, const PlanarPoint& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

FoldAngle::FoldAngle(double radians) : theta_(radians) {
    if (!(radians > 0.0 && radians < kPi)) {
        throw DomainError("fold angle must lie in the open interval (0, pi)");
    }
}

ZigzagParams::ZigzagParams(FoldAngle angle, double spacing, int fold_count)
    : theta(angle), d(spacing), count(fold_count) {
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        throw DomainError("zigzag spacing d must be positive and finite");
    }
    if (fold_count < 1) {
        throw DomainError("zigzag fold count must be at least 1");
    }
}

void validate_path(const PolylinePath& path) {
    if (path.vertices.size() < 2) {
        throw DomainError("polyline needs at least 2 vertices");
    }
    for (const auto& v : path.vertices) {
        if (!v.finite()) {
            throw DomainError("polyline vertex is not finite");
        }
    }
    for (std::size_t i = 1; i < path.vertices.size(); ++i) {
        if (path.vertices[i].x == path.vertices[i - 1].x &&
            path.vertices[i].y == path.vertices[i - 1].y) {
            throw DomainError("consecutive polyline vertices coincide");
        }
    }
    if (path.closed &&
        distance(path.vertices.front(), path.vertices.back()) > kClosureTol) {
        throw DomainError("closed polyline does not return to its start");
    }
}

double path_length(const PolylinePath& path) {
    // Neumaier-compensated sum: diagrams with tiny d can have millions of edges.
    double sum = 0.0;
    double comp = 0.0;
    for (std::size_t i = 1; i < path.vertices.size(); ++i) {
        const double seg = distance(path.vertices[i - 1], path.vertices[i]);
        const double t = sum + seg;
        if (std::abs(sum) >= std::abs(seg)) {
            comp += (sum - t) + seg;
        } else {
            comp += (seg - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

PlanarPoint turn_at_fold(const PlanarPoint& incoming_direction, FoldSide side, double theta) {
    if (std::abs(incoming_direction.norm() - 1.0) > kUnitTol) {
        throw DomainError("incoming direction must be unit length");
    }
    if (!(theta > 0.0 && theta <= kPi)) {
        throw DomainError("fold angle must lie in (0, pi]");
    }
    // The fold line acts as a mirror: the direction turns by pi - theta,
    // counterclockwise for a left fold.
    const double turn = (side == FoldSide::left) ? (kPi - theta) : -(kPi - theta);
    const double c = std::cos(turn);
    const double s = std::sin(turn);
    return {c * incoming_direction.x - s * incoming_direction.y,
            s * incoming_direction.x + c * incoming_direction.y};
}

PlanarPoint turn_at_fold(const PlanarPoint& incoming_direction, const FoldSpec& fold) {
    return turn_at_fold(incoming_direction, fold.side, fold.angle.radians());
}

double v_unit_span(const FoldAngle& theta, double d) {
    if (!(d > 0.0)) {
        throw DomainError("V-unit spacing d must be positive");
    }
    return 2.0 * d * std::sin(theta.half());
}

double escape_min_kd(const FoldAngle& theta) {
    return 1.0 / (std::cos(theta.half()) * std::sin(theta.half()));
}

ClearanceResult clearance_check(const FoldAngle& theta, double d, int k) {
    if (k < 2 || k % 2 != 0) {
        throw DomainError("escape accordion needs an even number of folds, k >= 2");
    }
    if (!(d > 0.0)) {
        throw DomainError("accordion spacing d must be positive");
    }
    const double h = theta.half();
    const double clearance = static_cast<double>(k) * d * std::sin(h) * std::cos(h);
    ClearanceResult result;
    result.clearance = clearance;
    result.margin = clearance - 1.0;
    result.satisfied = clearance >= 1.0 - kClosureTol;
    return result;
}

std::vector<PlanarPoint> zigzag_vertices(double theta, double d, int edge_count,
                                         const PlanarPoint& start, bool first_edge_descends) {
    if (!(theta > 0.0 && theta <= kPi)) {
        throw DomainError("fold angle must lie in (0, pi]");
    }
    if (!(d > 0.0) || edge_count < 1) {
        throw DomainError("zigzag needs d > 0 and at least one edge");
    }
    const double sx = std::sin(theta / 2.0) * d;
    const double sy = std::cos(theta / 2.0) * d;
    std::vector<PlanarPoint> pts;
    pts.reserve(static_cast<std::size_t>(edge_count) + 1);
    pts.push_back(start);
    PlanarPoint p = start;
    double dir = first_edge_descends ? -1.0 : 1.0;
    for (int i = 0; i < edge_count; ++i) {
        p = {p.x + sx, p.y + dir * sy};
        pts.push_back(p);
        dir = -dir;
    }
    return pts;
}

std::pair<PolylinePath, std::vector<FoldSpec>> build_zigzag(const ZigzagParams& params,
                                                            const PlanarPoint& start_point,
                                                            FoldSide start_side,
                                                            std::span<const FoldKind> fold_kinds) {
    if (static_cast<int>(fold_kinds.size()) != params.count) {
        throw DomainError("fold_kinds length must equal the zigzag fold count");
    }
    // A left first fold means the first edge descends (the turn at the first
    // interior vertex is then counterclockwise); a right first fold mirrors that.
    const bool descend_first = (start_side == FoldSide::left);
    PolylinePath path;
    path.vertices = zigzag_vertices(params.theta.radians(), params.d, params.count + 1,
                                    start_point, descend_first);
    path.closed = false;

    std::vector<FoldSpec> folds;
    folds.reserve(fold_kinds.size());
    FoldSide side = start_side;
    for (const FoldKind kind : fold_kinds) {
        folds.push_back(FoldSpec{side, kind, params.theta});
        side = (side == FoldSide::left) ? FoldSide::right : FoldSide::left;
    }
    return {std::move(path), std::move(folds)};
}

} // namespace ribbonfold
