#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "ribbonfold/pattern.hpp"

using namespace ribbonfold;

namespace {
constexpr double kPi = std::numbers::pi;

int count_substring(const std::string& haystack, const std::string& needle) {
    int count = 0;
    std::size_t pos = 0;
    while ((pos = haystack.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

RibbonDiagram random_diagram(std::mt19937& rng) {
    std::uniform_real_distribution<double> spacing(0.03, 0.7);
    std::uniform_int_distribution<int> half(1, 15);
    std::uniform_real_distribution<double> angle(0.4, 2.6);
    const double d = spacing(rng);
    const int n = half(rng);
    switch (rng() % 4) {
        case 0: return build_moebius(FoldAngle(angle(rng)), d, n);
        case 1: return build_torus(2 * n + 1, d);
        case 2: return build_twist(n, TwistParity::odd, d);
        default: return build_twist(n, TwistParity::even, d);
    }
}

bool diagrams_equal(const RibbonDiagram& a, const RibbonDiagram& b) {
    if (a.params.family != b.params.family || a.params.theta != b.params.theta ||
        a.params.d != b.params.d || a.params.n != b.params.n || a.params.k != b.params.k) {
        return false;
    }
    if (a.centerline.closed != b.centerline.closed ||
        a.centerline.vertices.size() != b.centerline.vertices.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.centerline.vertices.size(); ++i) {
        if (a.centerline.vertices[i].x != b.centerline.vertices[i].x ||
            a.centerline.vertices[i].y != b.centerline.vertices[i].y) {
            return false;
        }
    }
    if (a.folds.size() != b.folds.size()) return false;
    for (std::size_t i = 0; i < a.folds.size(); ++i) {
        if (a.folds[i].side != b.folds[i].side || a.folds[i].kind != b.folds[i].kind ||
            a.folds[i].angle != b.folds[i].angle || a.folds[i].role != b.folds[i].role) {
            return false;
        }
    }
    if (a.landmarks != b.landmarks) return false;
    if (a.ledger.size() != b.ledger.size()) return false;
    for (std::size_t i = 0; i < a.ledger.size(); ++i) {
        if (a.ledger[i].name != b.ledger[i].name || a.ledger[i].length != b.ledger[i].length) {
            return false;
        }
    }
    return true;
}
} // namespace

TEST_CASE("crease angles follow pi/2 - theta/2") {
    // the pi/2 escape accordion creases at pi/4
    const RibbonDiagram right_angle = build_moebius(FoldAngle(kPi / 2.0), 0.3, 1);
    const CreasePattern right_pattern = crease_pattern(right_angle);
    const int a_index = right_angle.landmarks.at("v_S");
    CHECK(right_pattern.creases[static_cast<std::size_t>(a_index)].angle ==
          doctest::Approx(kPi / 4.0).epsilon(1e-15));

    const RibbonDiagram third = build_moebius(FoldAngle(kPi / 3.0), 0.3, 1);
    const CreasePattern third_pattern = crease_pattern(third);
    const int v_index = third.landmarks.at("v_E");
    CHECK(third_pattern.creases[static_cast<std::size_t>(v_index)].angle ==
          doctest::Approx(kPi / 3.0).epsilon(1e-15));
}

TEST_CASE("crease pattern structure for a built band") {
    const RibbonDiagram diagram = build_moebius(FoldAngle(kPi / 3.0), 0.2, 3);
    const CreasePattern pattern = crease_pattern(diagram);
    const int k = diagram.params.k;
    CHECK(static_cast<int>(pattern.creases.size()) == k + (2 * 3 + 1) + 2);
    CHECK(static_cast<int>(pattern.creases.size()) == diagram.fold_vertex_count());

    CHECK(pattern.strip_length ==
          doctest::Approx(ribbonlength(diagram)).epsilon(1e-12));
    CHECK(pattern.creases.front().position == 0.0);
    for (std::size_t i = 1; i < pattern.creases.size(); ++i) {
        CHECK(pattern.creases[i].position > pattern.creases[i - 1].position);
    }
    CHECK(pattern.creases.back().position < pattern.strip_length);

    // within the accordion run consecutive creases sit one spacing apart and
    // alternate mountain/valley; the run starts at v_S (index 1)
    const double d_acc = escape_min_kd(FoldAngle(kPi / 3.0)) / k;
    for (int i = 1; i < k; ++i) {
        const auto& prev = pattern.creases[static_cast<std::size_t>(i)];
        const auto& cur = pattern.creases[static_cast<std::size_t>(i + 1)];
        CHECK(cur.position - prev.position == doctest::Approx(d_acc).epsilon(1e-12));
        CHECK(cur.parity != prev.parity);
    }
    // within the wrap run the spacing is the caller's d
    const int w1 = diagram.landmarks.at("w_1");
    const int w_last = diagram.landmarks.at("w_{2n+1}");
    for (int i = w1; i < w_last; ++i) {
        const auto& prev = pattern.creases[static_cast<std::size_t>(i)];
        const auto& cur = pattern.creases[static_cast<std::size_t>(i + 1)];
        CHECK(cur.position - prev.position == doctest::Approx(0.2).epsilon(1e-12));
        CHECK(cur.parity != prev.parity);
    }
}

TEST_CASE("crease count equals fold count for every family") {
    CHECK(crease_pattern(build_torus(5, 0.1)).creases.size() ==
          static_cast<std::size_t>(build_torus(5, 0.1).fold_vertex_count()));
    CHECK(crease_pattern(build_twist(2, TwistParity::odd, 0.1)).creases.size() ==
          static_cast<std::size_t>(build_twist(2, TwistParity::odd, 0.1).fold_vertex_count()));
    CHECK(crease_pattern(build_twist(2, TwistParity::even, 0.1)).creases.size() ==
          static_cast<std::size_t>(build_twist(2, TwistParity::even, 0.1).fold_vertex_count()));
}

TEST_CASE("diagram rendering is deterministic") {
    const RibbonDiagram diagram = build_moebius(FoldAngle(kPi / 3.0), 0.4, 1);
    const std::string first = render_diagram(diagram);
    const std::string second = render_diagram(diagram);
    CHECK(first == second);
    CHECK(first.find("<svg") != std::string::npos);
    CHECK(first.find("id=\"centerline\"") != std::string::npos);
    CHECK(first.find("id=\"boundary\"") != std::string::npos);
    CHECK(first.find("id=\"folds\"") != std::string::npos);
    CHECK(first.find("id=\"labels\"") != std::string::npos);
}

TEST_CASE("fold-line element count equals the fold vertex count") {
    const RibbonDiagram diagram = build_moebius(FoldAngle(kPi / 3.0), 0.4, 1);
    const std::string svg = render_diagram(diagram);
    const int k = diagram.params.k;
    CHECK(count_substring(svg, "class=\"fold\"") == k + 3 + 2);
}

TEST_CASE("label rendering can be switched off") {
    const RibbonDiagram diagram = build_moebius(FoldAngle(kPi / 3.0), 0.4, 1);
    RenderOptions options;
    options.labels = false;
    const std::string svg = render_diagram(diagram, options);
    CHECK(count_substring(svg, "<text") == 0);
    CHECK(count_substring(render_diagram(diagram), "<text") > 0);
}

TEST_CASE("crease rendering") {
    const RibbonDiagram accordion = build_moebius(FoldAngle(kPi / 2.0), 0.3, 0);
    const CreasePattern pattern = crease_pattern(accordion);
    const std::string svg = render_crease(pattern);
    CHECK(svg == render_crease(pattern));
    CHECK(count_substring(svg, "class=\"crease\"") ==
          static_cast<int>(pattern.creases.size()));
    // mountains and valleys alternate inside the accordion, so both styles show up
    CHECK(svg.find("stroke-dasharray") != std::string::npos);

    CreasePattern single;
    single.strip_length = 2.0;
    single.creases.push_back(Crease{1.0, kPi / 3.0, CreaseParity::mountain});
    CHECK(count_substring(render_crease(single), "class=\"crease\"") == 1);

    const CreasePattern torus_pattern = crease_pattern(build_torus(5, 0.2));
    CHECK(count_substring(render_crease(torus_pattern), "class=\"crease\"") ==
          static_cast<int>(torus_pattern.creases.size()));
}

TEST_CASE("document round trip is exact") {
    std::mt19937 rng(97);
    for (int i = 0; i < 30; ++i) {
        const RibbonDiagram diagram = random_diagram(rng);
        const std::string text = to_document(diagram);
        const DiagramDocument doc = from_document(text);
        CHECK(doc.schema_version == "1");
        CHECK(diagrams_equal(doc.diagram, diagram));
        CHECK_FALSE(doc.reports.has_value());
        // serialization itself is deterministic
        CHECK(to_document(doc.diagram) == text);
    }
}

TEST_CASE("document round trip with a report") {
    const RibbonDiagram diagram = build_torus(7, 0.03);
    const RibbonlengthReport report = make_report(diagram);
    const std::string text = to_document(diagram, report);
    const DiagramDocument doc = from_document(text);
    REQUIRE(doc.reports.has_value());
    CHECK(doc.reports->formula_value == report.formula_value);
    CHECK(doc.reports->oracle_value == report.oracle_value);
    CHECK(doc.reports->limit_d_zero == report.limit_d_zero);
    CHECK(doc.reports->ledger.size() == report.ledger.size());
}

TEST_CASE("malformed documents are rejected") {
    const RibbonDiagram diagram = build_moebius(FoldAngle(1.1), 0.3, 1);
    const std::string text = to_document(diagram);

    CHECK_THROWS_AS(from_document(text.substr(0, text.size() / 2)), ParseError);
    CHECK_THROWS_AS(from_document("not json at all"), ParseError);
    CHECK_THROWS_AS(from_document("{}"), ParseError);

    std::string wrong_version = text;
    const std::string needle = "\"schema_version\": \"1\"";
    wrong_version.replace(wrong_version.find(needle), needle.size(),
                          "\"schema_version\": \"99\"");
    CHECK_THROWS_AS(from_document(wrong_version), VersionError);
}

TEST_CASE("comparison table csv") {
    const auto rows = comparison_table({3, 5, 7});
    const std::string csv = comparison_table_csv(rows);
    CHECK(csv.find("q,crossing_number,construction_bound,kny_bound\n") == 0);
    CHECK(csv.find("3,3,13.856406,8.500000\n") != std::string::npos);
    CHECK(csv.find("5,5,13.856406,13.500000\n") != std::string::npos);
    CHECK(csv.find("7,7,13.856406,18.500000\n") != std::string::npos);
    CHECK(csv == comparison_table_csv(rows));
}
