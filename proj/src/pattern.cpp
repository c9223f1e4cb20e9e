#include "ribbonfold/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace ribbonfold {

namespace {

constexpr double kPi = std::numbers::pi;
using Json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

struct SegKey {
    std::int64_t ax, ay, bx, by;
    bool operator==(const SegKey& o) const {
        return ax == o.ax && ay == o.ay && bx == o.bx && by == o.by;
    }
};

struct SegKeyHash {
    std::size_t operator()(const SegKey& k) const {
        std::size_t h = 1469598103934665603ull;
        for (std::int64_t v : {k.ax, k.ay, k.bx, k.by}) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::int64_t quantize(double v) { return std::llround(v * 1e9); }

// Orientation-independent key so a segment retraced backwards stacks onto the
// same pile as its first traversal.
SegKey segment_key(const PlanarPoint& a, const PlanarPoint& b) {
    SegKey k{quantize(a.x), quantize(a.y), quantize(b.x), quantize(b.y)};
    if (k.ax > k.bx || (k.ax == k.bx && k.ay > k.by)) {
        std::swap(k.ax, k.bx);
        std::swap(k.ay, k.by);
    }
    return k;
}

} // namespace

CreasePattern crease_pattern(const RibbonDiagram& diagram) {
    validate_path(diagram.centerline);
    const std::size_t vertex_count = diagram.centerline.vertices.size() - 1;
    if (diagram.folds.size() != vertex_count) {
        throw DomainError("diagram needs a fold spec at every vertex");
    }
    CreasePattern pattern;
    pattern.strip_length = path_length(diagram.centerline);
    pattern.creases.reserve(vertex_count);
    double arc = 0.0;
    for (std::size_t i = 0; i < vertex_count; ++i) {
        if (i > 0) {
            arc += distance(diagram.centerline.vertices[i - 1], diagram.centerline.vertices[i]);
        }
        const DiagramFold& fold = diagram.folds[i];
        Crease crease;
        crease.position = arc;
        crease.angle = kPi / 2.0 - fold.angle / 2.0;
        crease.parity = (fold.side == FoldSide::left) ? CreaseParity::mountain : CreaseParity::valley;
        pattern.creases.push_back(crease);
    }
    return pattern;
}

std::string render_diagram(const RibbonDiagram& diagram, const RenderOptions& options) {
    validate_path(diagram.centerline);
    const auto& pts = diagram.centerline.vertices;
    const std::size_t edge_count = pts.size() - 1;

    double min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
    for (const auto& p : pts) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double margin = 1.0;

    // Edges stacked on an already-drawn segment slide sideways by one offset
    // step per layer; purely visual, the document lengths stay exact.
    std::unordered_map<SegKey, int, SegKeyHash> seen;
    const bool offset_layers = options.layer_offset > 0.0 && edge_count <= 200000;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << fmt(min_x - margin) << " " << fmt(-(max_y + margin)) << " "
        << fmt(max_x - min_x + 2.0 * margin) << " " << fmt(max_y - min_y + 2.0 * margin)
        << "\">\n";
    svg << "<desc>coincident layers drawn with visual offset " << fmt(options.layer_offset)
        << " width units; all lengths are exact in the underlying diagram</desc>\n";

    // y flips so the diagram's +y points up on screen.
    const auto draw_edge = [&](std::ostringstream& out, const PlanarPoint& a, const PlanarPoint& b,
                               double lateral, const char* attrs) {
        PlanarPoint dir = (b - a).normalized();
        const PlanarPoint normal{-dir.y, dir.x};
        const PlanarPoint a2 = a + normal * lateral;
        const PlanarPoint b2 = b + normal * lateral;
        out << "<line x1=\"" << fmt(a2.x) << "\" y1=\"" << fmt(-a2.y) << "\" x2=\"" << fmt(b2.x)
            << "\" y2=\"" << fmt(-b2.y) << "\" " << attrs << "/>\n";
    };

    std::ostringstream center_group;
    std::ostringstream boundary_group;
    for (std::size_t i = 0; i < edge_count; ++i) {
        const PlanarPoint& a = pts[i];
        const PlanarPoint& b = pts[i + 1];
        double lateral = 0.0;
        if (offset_layers) {
            const int layer = seen[segment_key(a, b)]++;
            lateral = layer * options.layer_offset;
        }
        draw_edge(center_group, a, b, lateral,
                  "stroke=\"#000000\" stroke-width=\"0.02\"");
        draw_edge(boundary_group, a, b, lateral + 0.5,
                  "stroke=\"#9999bb\" stroke-width=\"0.01\"");
        draw_edge(boundary_group, a, b, lateral - 0.5,
                  "stroke=\"#9999bb\" stroke-width=\"0.01\"");
    }
    svg << "<g id=\"boundary\">\n" << boundary_group.str() << "</g>\n";
    svg << "<g id=\"centerline\">\n" << center_group.str() << "</g>\n";

    svg << "<g id=\"folds\">\n";
    const std::size_t n = (diagram.folds.size() == edge_count) ? diagram.folds.size() : 0;
    for (std::size_t i = 0; i < n; ++i) {
        const PlanarPoint& v = pts[i];
        const PlanarPoint& prev = pts[(i + n - 1) % n];
        const PlanarPoint& next = pts[i + 1];
        const PlanarPoint ray_in = (prev - v).normalized();
        const PlanarPoint ray_out = (next - v).normalized();
        PlanarPoint bis = ray_in + ray_out;
        if (bis.norm() < 1e-9) {
            // straight-through; no crease to draw, keep the element count stable
            bis = PlanarPoint{-ray_out.y, ray_out.x};
        } else if (ray_in.dot(ray_out) > 1.0 - 1e-12) {
            // doubling fold: the crease is perpendicular to the strip
            bis = PlanarPoint{-ray_out.y, ray_out.x};
        }
        bis = bis.normalized();
        const double half_angle = diagram.folds[i].angle / 2.0;
        const double half_len = 0.5 / std::max(std::cos(half_angle), 0.2);
        const PlanarPoint a = v - bis * half_len;
        const PlanarPoint b = v + bis * half_len;
        svg << "<line class=\"fold\" x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(-a.y) << "\" x2=\""
            << fmt(b.x) << "\" y2=\"" << fmt(-b.y)
            << "\" stroke=\"#cc3333\" stroke-width=\"0.015\"/>\n";
    }
    svg << "</g>\n";

    svg << "<g id=\"labels\">\n";
    if (options.labels) {
        for (const auto& [label, index] : diagram.landmarks) {
            if (index < 0 || static_cast<std::size_t>(index) >= pts.size()) continue;
            const PlanarPoint& p = pts[static_cast<std::size_t>(index)];
            svg << "<text x=\"" << fmt(p.x + 0.05) << "\" y=\"" << fmt(-(p.y + 0.05))
                << "\" font-size=\"0.25\">" << label << "</text>\n";
        }
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

std::string render_crease(const CreasePattern& pattern, const RenderOptions& options) {
    std::ostringstream svg;
    const double length = pattern.strip_length;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << fmt(-0.5) << " " << fmt(-0.5) << " " << fmt(length + 1.0) << " " << fmt(2.0) << "\">\n";
    svg << "<g id=\"strip\">\n<rect x=\"0\" y=\"0\" width=\"" << fmt(length)
        << "\" height=\"1\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.01\"/>\n</g>\n";
    svg << "<g id=\"creases\">\n";
    for (const auto& crease : pattern.creases) {
        // The crease meets the centerline at its position; mountains solid,
        // valleys dashed.
        const double half_run = 0.5 * std::cos(crease.angle) / std::sin(crease.angle);
        const char* dash = (crease.parity == CreaseParity::valley)
                               ? " stroke-dasharray=\"0.08 0.05\""
                               : "";
        svg << "<line class=\"crease\" x1=\"" << fmt(crease.position - half_run)
            << "\" y1=\"1\" x2=\"" << fmt(crease.position + half_run) << "\" y2=\"0\" stroke=\""
            << (crease.parity == CreaseParity::valley ? "#3355cc" : "#cc3333")
            << "\" stroke-width=\"0.012\"" << dash << "/>\n";
    }
    svg << "</g>\n";
    svg << "<g id=\"labels\">\n";
    if (options.labels) {
        svg << "<text x=\"0\" y=\"1.4\" font-size=\"0.25\">strip length " << fmt(length)
            << "</text>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

namespace {

const char* side_name(FoldSide side) { return side == FoldSide::left ? "left" : "right"; }
const char* kind_name(FoldKind kind) { return kind == FoldKind::overfold ? "overfold" : "underfold"; }
const char* role_name(FoldRole role) {
    switch (role) {
        case FoldRole::accordion: return "accordion";
        case FoldRole::half_wrap: return "half_wrap";
        case FoldRole::closure: return "closure";
    }
    return "closure";
}

FoldSide side_from(const std::string& s) {
    if (s == "left") return FoldSide::left;
    if (s == "right") return FoldSide::right;
    throw ParseError("unknown fold side '" + s + "'");
}
FoldKind kind_from(const std::string& s) {
    if (s == "overfold") return FoldKind::overfold;
    if (s == "underfold") return FoldKind::underfold;
    throw ParseError("unknown fold kind '" + s + "'");
}
FoldRole role_from(const std::string& s) {
    if (s == "accordion") return FoldRole::accordion;
    if (s == "half_wrap") return FoldRole::half_wrap;
    if (s == "closure") return FoldRole::closure;
    throw ParseError("unknown fold role '" + s + "'");
}

Json params_to_json(const ConstructionParams& params) {
    Json j;
    j["family"] = family_name(params.family);
    j["theta"] = params.theta;
    j["d"] = params.d;
    j["n"] = params.n;
    j["k"] = params.k;
    return j;
}

ConstructionParams params_from_json(const Json& j) {
    ConstructionParams params;
    params.family = family_from_string(j.at("family").get<std::string>());
    params.theta = j.at("theta").get<double>();
    params.d = j.at("d").get<double>();
    params.n = j.at("n").get<int>();
    params.k = j.at("k").get<int>();
    return params;
}

Json ledger_to_json(const std::vector<LedgerEntry>& ledger) {
    Json arr = Json::array();
    for (const auto& entry : ledger) {
        Json e;
        e["name"] = entry.name;
        e["length"] = entry.length;
        arr.push_back(std::move(e));
    }
    return arr;
}

std::vector<LedgerEntry> ledger_from_json(const Json& arr) {
    std::vector<LedgerEntry> ledger;
    for (const auto& e : arr) {
        ledger.push_back(LedgerEntry{e.at("name").get<std::string>(), e.at("length").get<double>()});
    }
    return ledger;
}

Json diagram_to_json(const RibbonDiagram& diagram) {
    Json j;
    j["params"] = params_to_json(diagram.params);
    Json centerline;
    centerline["closed"] = diagram.centerline.closed;
    Json vertices = Json::array();
    for (const auto& p : diagram.centerline.vertices) {
        vertices.push_back(Json::array({p.x, p.y}));
    }
    centerline["vertices"] = std::move(vertices);
    j["centerline"] = std::move(centerline);
    Json folds = Json::array();
    for (const auto& fold : diagram.folds) {
        Json f;
        f["side"] = side_name(fold.side);
        f["kind"] = kind_name(fold.kind);
        f["angle"] = fold.angle;
        f["role"] = role_name(fold.role);
        folds.push_back(std::move(f));
    }
    j["folds"] = std::move(folds);
    Json landmarks;
    for (const auto& [label, index] : diagram.landmarks) {
        landmarks[label] = index;
    }
    j["landmarks"] = std::move(landmarks);
    j["ledger"] = ledger_to_json(diagram.ledger);
    return j;
}

RibbonDiagram diagram_from_json(const Json& j) {
    RibbonDiagram diagram;
    diagram.params = params_from_json(j.at("params"));
    const Json& centerline = j.at("centerline");
    diagram.centerline.closed = centerline.at("closed").get<bool>();
    for (const auto& v : centerline.at("vertices")) {
        if (!v.is_array() || v.size() != 2) {
            throw ParseError("vertex entries must be [x, y] pairs");
        }
        diagram.centerline.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    for (const auto& f : j.at("folds")) {
        diagram.folds.push_back(DiagramFold{side_from(f.at("side").get<std::string>()),
                                            kind_from(f.at("kind").get<std::string>()),
                                            f.at("angle").get<double>(),
                                            role_from(f.at("role").get<std::string>())});
    }
    for (const auto& [label, index] : j.at("landmarks").items()) {
        diagram.landmarks[label] = index.get<int>();
    }
    diagram.ledger = ledger_from_json(j.at("ledger"));
    validate_path(diagram.centerline);
    for (const auto& [label, index] : diagram.landmarks) {
        if (index < 0 || static_cast<std::size_t>(index) >= diagram.centerline.vertices.size()) {
            throw ParseError("landmark '" + label + "' is out of range");
        }
    }
    return diagram;
}

Json report_to_json_value(const RibbonlengthReport& report) {
    Json j;
    j["family"] = family_name(report.family.family);
    j["params"] = params_to_json(report.family);
    j["formula_value"] = report.formula_value;
    j["oracle_value"] = report.oracle_value;
    j["limit_d_zero"] = report.limit_d_zero;
    j["ledger"] = ledger_to_json(report.ledger);
    return j;
}

RibbonlengthReport report_from_json_value(const Json& j) {
    RibbonlengthReport report;
    report.family = params_from_json(j.at("params"));
    report.formula_value = j.at("formula_value").get<double>();
    report.oracle_value = j.at("oracle_value").get<double>();
    report.limit_d_zero = j.at("limit_d_zero").get<double>();
    report.ledger = ledger_from_json(j.at("ledger"));
    return report;
}

} // namespace

std::string to_document(const RibbonDiagram& diagram,
                        const std::optional<RibbonlengthReport>& reports) {
    Json doc;
    doc["schema_version"] = "1";
    doc["diagram"] = diagram_to_json(diagram);
    if (reports) {
        doc["reports"] = report_to_json_value(*reports);
    }
    return doc.dump(2) + "\n";
}

DiagramDocument from_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("document parse error: ") + e.what());
    }
    try {
        DiagramDocument result;
        if (!doc.contains("schema_version") || !doc.at("schema_version").is_string()) {
            throw ParseError("document missing schema_version");
        }
        result.schema_version = doc.at("schema_version").get<std::string>();
        if (result.schema_version != "1") {
            throw VersionError("unsupported schema_version '" + result.schema_version + "'");
        }
        result.diagram = diagram_from_json(doc.at("diagram"));
        if (doc.contains("reports")) {
            result.reports = report_from_json_value(doc.at("reports"));
        }
        return result;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("document structure error: ") + e.what());
    }
}

std::string report_to_json(const RibbonlengthReport& report) {
    Json doc;
    doc["schema_version"] = "1";
    doc["report"] = report_to_json_value(report);
    return doc.dump(2) + "\n";
}

std::string crease_to_json(const CreasePattern& pattern) {
    Json doc;
    doc["schema_version"] = "1";
    Json p;
    p["strip_length"] = pattern.strip_length;
    Json creases = Json::array();
    for (const auto& crease : pattern.creases) {
        Json c;
        c["position"] = crease.position;
        c["angle"] = crease.angle;
        c["parity"] = crease.parity == CreaseParity::mountain ? "mountain" : "valley";
        creases.push_back(std::move(c));
    }
    p["creases"] = std::move(creases);
    doc["crease_pattern"] = std::move(p);
    return doc.dump(2) + "\n";
}

std::string comparison_table_csv(const std::vector<BoundRow>& rows) {
    std::ostringstream out;
    out << "q,crossing_number,construction_bound,kny_bound\n";
    for (const auto& row : rows) {
        out << row.q << "," << row.crossing_number << "," << fmt(row.construction_bound) << ","
            << fmt(row.kny_bound) << "\n";
    }
    return out.str();
}

std::string optimize_to_json(const OptimizeResult& result) {
    Json doc;
    doc["theta_star"] = result.theta_star;
    doc["rib_value"] = result.rib_value;
    Json iters;
    iters["derivative_bisection"] = result.derivative_iterations;
    iters["golden_section"] = result.golden_iterations;
    doc["iterations"] = std::move(iters);
    return doc.dump(2) + "\n";
}

} // namespace ribbonfold
