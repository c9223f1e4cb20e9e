// ribbonfold: build folded-ribbon knot diagrams, evaluate and optimize their
// ribbonlength, and export crease patterns, renderings and bound tables.
//
// Exit codes: 0 success, 2 flag/domain errors, 3 constraint errors
// (escape-accordion clearance), 4 numerical failures.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ribbonfold/analysis.hpp"
#include "ribbonfold/constructions.hpp"
#include "ribbonfold/pattern.hpp"

namespace {

using namespace ribbonfold;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitConstraint = 3;
constexpr int kExitNumerical = 4;

// Radians by default; a "deg" suffix (e.g. "60deg") selects degrees.
double parse_angle(const std::string& text) {
    std::string body = text;
    bool degrees = false;
    if (body.size() > 3 && body.substr(body.size() - 3) == "deg") {
        degrees = true;
        body = body.substr(0, body.size() - 3);
    }
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(body, &used);
    } catch (const std::exception&) {
        throw DomainError("cannot parse angle '" + text + "'");
    }
    if (used != body.size()) {
        throw DomainError("cannot parse angle '" + text + "'");
    }
    return degrees ? value * std::numbers::pi / 180.0 : value;
}

struct BuildFlags {
    std::string family;
    std::string theta_text;
    std::optional<double> d;
    int n = 0;
    int q = 0;
    std::optional<int> k;
};

void add_out_flag(CLI::App* cmd, std::string& out_path) {
    cmd->add_option("--out", out_path, "output path (default: stdout)");
}

void add_build_flags(CLI::App* cmd, BuildFlags& flags, bool family_required = true) {
    auto* family = cmd->add_option("--family", flags.family,
                                   "moebius|torus2q|twist-odd|twist-even");
    if (family_required) {
        family->required();
    }
    cmd->add_option("--theta", flags.theta_text,
                    "fold angle, radians (append 'deg' for degrees); moebius only");
    cmd->add_option("--d", flags.d, "vertex spacing in ribbon-width units");
    cmd->add_option("--n", flags.n, "half-wrap parameter n");
    cmd->add_option("--q", flags.q, "odd q >= 3 for the torus family");
    cmd->add_option("--k", flags.k, "even escape-accordion fold count");
}

RibbonDiagram build_from_flags(const BuildFlags& flags) {
    if (flags.family.empty()) {
        throw DomainError("either --family or an input document is required");
    }
    const Family family = family_from_string(flags.family);
    double theta = std::numbers::pi / 3.0;
    if (!flags.theta_text.empty()) {
        theta = parse_angle(flags.theta_text);
        if (family != Family::moebius && std::abs(theta - std::numbers::pi / 3.0) > 1e-12) {
            throw DomainError("theta is fixed at pi/3 for the torus and twist families");
        }
    }
    // Without --d, exact mode: d = escape_min_kd(theta)/k with k defaulting to 2.
    const int k = flags.k.value_or(2);
    const double d = flags.d ? *flags.d : escape_min_kd(FoldAngle(theta)) / k;
    switch (family) {
        case Family::moebius:
            return build_moebius(FoldAngle(theta), d, flags.n, flags.k);
        case Family::torus2q:
            return build_torus(flags.q, d, flags.k);
        case Family::twist_odd:
            return build_twist(flags.n, TwistParity::odd, d, flags.k);
        case Family::twist_even:
            return build_twist(flags.n, TwistParity::even, d, flags.k);
    }
    throw DomainError("unknown family");
}

// Everything is rendered into memory first; error paths must not touch the
// primary output sink.
void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << payload;
        std::cout.flush();
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw DomainError("cannot open output file '" + out_path + "'");
    }
    out << payload;
}

RibbonDiagram diagram_from_input_or_flags(const std::string& input_path, const BuildFlags& flags) {
    if (!input_path.empty()) {
        std::ifstream in(input_path, std::ios::binary);
        if (!in) {
            throw DomainError("cannot open input document '" + input_path + "'");
        }
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return from_document(text).diagram;
    }
    return build_from_flags(flags);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"folded-ribbon knot constructions, ribbonlength reports and crease patterns"};
    app.require_subcommand(1);

    std::string out_path;
    BuildFlags flags;
    std::string format = "doc";
    std::string input_path;
    double tolerance = 1e-9;
    int table_q = 13;
    bool no_labels = false;

    CLI::App* build_cmd = app.add_subcommand("build", "build a diagram and emit its document");
    add_build_flags(build_cmd, flags);
    add_out_flag(build_cmd, out_path);
    build_cmd->add_option("--format", format, "doc");

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "ribbonlength report: formula, oracle, limit, ledger");
    add_build_flags(analyze_cmd, flags, false);
    add_out_flag(analyze_cmd, out_path);
    analyze_cmd->add_option("input", input_path, "previously built document (optional)");

    CLI::App* optimize_cmd =
        app.add_subcommand("optimize", "find the fold angle minimizing the band formula");
    optimize_cmd->add_option("--tol", tolerance, "tolerance on theta (default 1e-9)");
    add_out_flag(optimize_cmd, out_path);

    CLI::App* table_cmd =
        app.add_subcommand("table", "crossing-number bound comparison for odd q = 3..Q");
    table_cmd->add_option("--q", table_q, "largest odd q (default 13)");
    table_cmd->add_option("--format", format, "csv|doc");
    add_out_flag(table_cmd, out_path);

    CLI::App* crease_cmd = app.add_subcommand("crease", "crease pattern of a diagram");
    add_build_flags(crease_cmd, flags, false);
    add_out_flag(crease_cmd, out_path);
    crease_cmd->add_option("input", input_path, "previously built document (optional)");
    crease_cmd->add_option("--format", format, "doc|svg");

    CLI::App* render_cmd = app.add_subcommand("render", "SVG drawing of a diagram");
    add_build_flags(render_cmd, flags, false);
    add_out_flag(render_cmd, out_path);
    render_cmd->add_option("input", input_path, "previously built document (optional)");
    render_cmd->add_flag("--no-labels", no_labels, "omit landmark labels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        app.exit(e);
        return kExitDomain;
    }

    try {
        std::string payload;
        if (build_cmd->parsed()) {
            if (format != "doc") {
                throw DomainError("build supports --format doc");
            }
            const RibbonDiagram diagram = build_from_flags(flags);
            payload = to_document(diagram, make_report(diagram));
        } else if (analyze_cmd->parsed()) {
            const RibbonDiagram diagram = diagram_from_input_or_flags(input_path, flags);
            payload = report_to_json(make_report(diagram));
        } else if (optimize_cmd->parsed()) {
            payload = optimize_to_json(optimal_theta(tolerance));
        } else if (table_cmd->parsed()) {
            if (table_q < 3) {
                throw DomainError("--q must be at least 3");
            }
            std::vector<int> qs;
            for (int q = 3; q <= table_q; q += 2) {
                qs.push_back(q);
            }
            const auto rows = comparison_table(qs);
            if (format == "csv" || format == "doc") {
                payload = comparison_table_csv(rows);
            } else {
                throw DomainError("table supports --format csv");
            }
        } else if (crease_cmd->parsed()) {
            const RibbonDiagram diagram = diagram_from_input_or_flags(input_path, flags);
            const CreasePattern pattern = crease_pattern(diagram);
            if (format == "svg") {
                payload = render_crease(pattern);
            } else if (format == "doc") {
                payload = crease_to_json(pattern);
            } else {
                throw DomainError("crease supports --format doc|svg");
            }
        } else if (render_cmd->parsed()) {
            const RibbonDiagram diagram = diagram_from_input_or_flags(input_path, flags);
            RenderOptions options;
            options.labels = !no_labels;
            payload = render_diagram(diagram, options);
        }
        emit(payload, out_path);
        return kExitOk;
    } catch (const ConstraintError& e) {
        std::cerr << "constraint error: " << e.what() << "\n";
        return kExitConstraint;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const VersionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
