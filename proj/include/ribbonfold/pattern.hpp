#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbonfold/analysis.hpp"

namespace ribbonfold {

enum class CreaseParity { mountain, valley };

struct Crease {
    double position; ///< arc length along the unfolded strip
    double angle;    ///< crease angle to the strip edge, pi/2 - theta_v/2
    CreaseParity parity;
};

/// Fold-line layout of the unfolded strip. Strip position 0 is the closure
/// vertex feeding v_S (A for the band, E for the knot families); positions
/// increase along the construction's own traversal.
struct CreasePattern {
    double strip_length;
    std::vector<Crease> creases;
};

struct RenderOptions {
    bool labels = true;
    double layer_offset = 0.03; ///< visual separation of coincident layers, never affects lengths
};

struct DiagramDocument {
    std::string schema_version;
    RibbonDiagram diagram;
    std::optional<RibbonlengthReport> reports;
};

CreasePattern crease_pattern(const RibbonDiagram& diagram);

/// Deterministic SVG 1.1 drawing of a diagram: one group per semantic layer
/// (centerline, boundary, folds, labels). Identical inputs give identical bytes.
std::string render_diagram(const RibbonDiagram& diagram, const RenderOptions& options = {});

/// Deterministic SVG 1.1 drawing of an unfolded strip with one line per
/// crease; mountains solid, valleys dashed.
std::string render_crease(const CreasePattern& pattern, const RenderOptions& options = {});

/// UTF-8 JSON with stable key order, schema_version "1". Numeric fields
/// survive a round trip bit-exactly.
std::string to_document(const RibbonDiagram& diagram,
                        const std::optional<RibbonlengthReport>& reports = std::nullopt);
DiagramDocument from_document(const std::string& text);

std::string report_to_json(const RibbonlengthReport& report);
std::string crease_to_json(const CreasePattern& pattern);

/// CSV with header "q,crossing_number,construction_bound,kny_bound" and
/// 6-decimal fixed-point numbers.
std::string comparison_table_csv(const std::vector<BoundRow>& rows);

std::string optimize_to_json(const OptimizeResult& result);

} // namespace ribbonfold
