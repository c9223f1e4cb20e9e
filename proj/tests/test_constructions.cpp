#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "ribbonfold/analysis.hpp"
#include "ribbonfold/constructions.hpp"

using namespace ribbonfold;

namespace {
constexpr double kPi = std::numbers::pi;
const double kRoot3 = std::sqrt(3.0);

double ledger_term(const RibbonDiagram& diagram, const std::string& name) {
    for (const auto& entry : diagram.ledger) {
        if (entry.name == name) return entry.length;
    }
    FAIL("missing ledger term ", name);
    return 0.0;
}
} // namespace

TEST_CASE("moebius formula closed forms") {
    // at pi/3 the formula collapses to 3*sqrt(3) + 3nd
    for (int n : {0, 1, 4}) {
        for (double d : {0.0, 0.01, 0.3}) {
            CHECK(moebius_rib_formula(FoldAngle(kPi / 3.0), d, n) ==
                  doctest::Approx(3.0 * kRoot3 + 3.0 * n * d).epsilon(1e-12));
        }
    }
    CHECK(moebius_rib_formula(FoldAngle(kPi / 3.0), 0.0, 7) ==
          doctest::Approx(3.0 * kRoot3).epsilon(1e-14));
    CHECK(moebius_rib_formula(FoldAngle(kPi / 2.0), 0.0, 0) ==
          doctest::Approx(2.0 * std::sqrt(2.0) + 3.0).epsilon(1e-12));
    CHECK_THROWS_AS(moebius_rib_formula(FoldAngle(1.0), -0.1, 0), DomainError);
    CHECK_THROWS_AS(moebius_rib_formula(FoldAngle(1.0), 0.1, -1), DomainError);
}

TEST_CASE("default fold count policy reaches clearance equality") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> angle(0.3, 2.8);
    std::uniform_real_distribution<double> spacing(0.01, 2.0);
    for (int i = 0; i < 200; ++i) {
        const FoldAngle theta(angle(rng));
        const double d = spacing(rng);
        const int k = default_even_fold_count(theta, d);
        CHECK(k >= 2);
        CHECK(k % 2 == 0);
        CHECK(static_cast<double>(k) * d >= escape_min_kd(theta) * (1.0 - 1e-9));
        if (k > 2) {
            CHECK(static_cast<double>(k - 2) * d < escape_min_kd(theta));
        }
        // the built accordion then satisfies the clearance with equality
        const double d_acc = escape_min_kd(theta) / k;
        const auto clearance = clearance_check(theta, d_acc, k);
        CHECK(clearance.satisfied);
        CHECK(std::abs(clearance.margin) <= 1e-12);
    }
}

TEST_CASE("build_moebius matches the closed form") {
    // exact mode: d = escape_min_kd / k
    const double d_exact = escape_min_kd(FoldAngle(kPi / 3.0)) / 2.0;
    const RibbonDiagram flat = build_moebius(FoldAngle(kPi / 3.0), d_exact, 0);
    CHECK(path_length(flat.centerline) == doctest::Approx(3.0 * kRoot3).epsilon(1e-9));

    // the pi/2 evaluation agrees with the constructed polyline
    const RibbonDiagram right = build_moebius(FoldAngle(kPi / 2.0), 0.25, 0);
    CHECK(path_length(right.centerline) ==
          doctest::Approx(2.0 * std::sqrt(2.0) + 3.0).epsilon(1e-9));
    CHECK(path_length(right.centerline) ==
          doctest::Approx(moebius_rib_formula(FoldAngle(kPi / 2.0), 0.25, 0)).epsilon(1e-12));
}

TEST_CASE("build_moebius structure") {
    const RibbonDiagram diagram = build_moebius(FoldAngle(kPi / 3.0), 0.1, 2);
    const int k = diagram.params.k;
    CHECK(diagram.fold_vertex_count() == k + (2 * 2 + 1) + 2);
    CHECK(diagram.fold_vertex_count() % 2 == 1);
    CHECK(diagram.centerline.closed);
    CHECK(distance(diagram.centerline.vertices.front(), diagram.centerline.vertices.back()) <=
          1e-12);

    // landmark sanity: A feeds v_S, E closes back to A
    CHECK(diagram.landmarks.at("A") == 0);
    CHECK(diagram.landmarks.at("v_S") == 1);
    CHECK(diagram.landmarks.at("v_E") == diagram.landmarks.at("w_1"));
    CHECK(diagram.landmarks.at("E") == diagram.fold_vertex_count() - 1);

    // closure vertices carry the construction's fold kinds
    CHECK(diagram.folds[0].kind == FoldKind::overfold);
    CHECK(diagram.folds[0].side == FoldSide::left);
    CHECK(diagram.folds.back().kind == FoldKind::underfold);
    CHECK(diagram.folds.back().side == FoldSide::left);
    // first wrap is a left underfold
    const auto& w1 = diagram.folds[static_cast<std::size_t>(diagram.landmarks.at("w_1"))];
    CHECK(w1.kind == FoldKind::underfold);
    CHECK(w1.side == FoldSide::left);
}

TEST_CASE("moebius ledger terms match their closed forms") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> angle(0.3, 2.8);
    std::uniform_real_distribution<double> spacing(0.02, 1.0);
    std::uniform_int_distribution<int> wraps(0, 20);
    for (int i = 0; i < 50; ++i) {
        const double theta = angle(rng);
        const double d = spacing(rng);
        const int n = wraps(rng);
        const RibbonDiagram diagram = build_moebius(FoldAngle(theta), d, n);
        const double h = theta / 2.0;
        CHECK(ledger_term(diagram, "d_K(v_S,v_E)") ==
              doctest::Approx(1.0 / (std::cos(h) * std::sin(h))).epsilon(1e-12));
        CHECK(ledger_term(diagram, "d_K(w_1,w_{2n+1})") ==
              doctest::Approx(2.0 * n * d).epsilon(1e-12));
        CHECK(ledger_term(diagram, "d(A,v_S)") ==
              doctest::Approx(0.5 / std::cos(h)).epsilon(1e-12));
        CHECK(ledger_term(diagram, "d(A,B)") ==
              doctest::Approx(0.5 * std::tan(h)).epsilon(1e-12));
        CHECK(ledger_term(diagram, "d(B,C)") == doctest::Approx(1.0 / std::cos(h)).epsilon(1e-12));
        CHECK(diagram.ledger_sum() ==
              doctest::Approx(path_length(diagram.centerline)).epsilon(1e-11));
    }
}

TEST_CASE("moebius oracle equivalence on random parameters") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> angle(0.3, 2.8);
    std::uniform_real_distribution<double> spacing(0.02, 1.5);
    std::uniform_int_distribution<int> wraps(0, 50);
    for (int i = 0; i < 200; ++i) {
        const double theta = angle(rng);
        const double d = spacing(rng);
        const int n = wraps(rng);
        const RibbonDiagram diagram = build_moebius(FoldAngle(theta), d, n);
        CHECK(std::abs(path_length(diagram.centerline) -
                       moebius_rib_formula(FoldAngle(theta), d, n)) <= 1e-9);
    }
}

TEST_CASE("caller-supplied k is honored or rejected") {
    const FoldAngle theta(kPi / 3.0);
    // k = 6 with room to spare
    const RibbonDiagram diagram = build_moebius(theta, 1.0, 1, 6);
    CHECK(diagram.params.k == 6);
    CHECK(path_length(diagram.centerline) ==
          doctest::Approx(moebius_rib_formula(theta, 1.0, 1)).epsilon(1e-12));
    CHECK_THROWS_AS(build_moebius(theta, 0.01, 1, 2), ConstraintError);
    CHECK_THROWS_AS(build_moebius(theta, 1.0, 1, 3), DomainError);
    CHECK_THROWS_AS(build_moebius(theta, 0.0, 1), DomainError);
}

TEST_CASE("torus formula") {
    CHECK(torus_rib_formula(3, 0.0) == doctest::Approx(8.0 * kRoot3).epsilon(1e-14));
    CHECK(torus_rib_formula(5, 0.01) == doctest::Approx(8.0 * kRoot3 + 0.12).epsilon(1e-12));
    // q-independence of the d -> 0 limit
    for (int q : {3, 9, 101, 1001}) {
        CHECK(torus_rib_formula(q, 0.0) == doctest::Approx(8.0 * kRoot3).epsilon(1e-14));
    }
    CHECK_THROWS_AS(torus_rib_formula(4, 0.0), DomainError);
    CHECK_THROWS_AS(torus_rib_formula(1, 0.0), DomainError);
}

TEST_CASE("build_torus ledger and oracle") {
    const RibbonDiagram small = build_torus(3, 0.005);
    CHECK(small.ledger_sum() == doctest::Approx(8.0 * kRoot3 + 6.0 * 0.005).epsilon(1e-12));
    CHECK(small.ledger_sum() == doctest::Approx(path_length(small.centerline)).epsilon(1e-11));

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> spacing(0.01, 0.6);
    std::uniform_int_distribution<int> half(1, 40);
    for (int i = 0; i < 60; ++i) {
        const int q = 2 * half(rng) + 1;
        const double d = spacing(rng);
        const RibbonDiagram diagram = build_torus(q, d);
        CHECK(std::abs(path_length(diagram.centerline) - torus_rib_formula(q, d)) <= 1e-9);
        CHECK(std::abs(diagram.ledger_sum() - torus_rib_formula(q, d)) <= 1e-9);
    }
    CHECK_THROWS_AS(build_torus(4, 0.1), DomainError);
    CHECK_THROWS_AS(build_torus(1, 0.1), DomainError);
    CHECK_THROWS_AS(build_torus(-3, 0.1), DomainError);
}

TEST_CASE("torus q=101 with tiny spacing") {
    const RibbonDiagram diagram = build_torus(101, 1e-6);
    CHECK(diagram.ledger_sum() == doctest::Approx(8.0 * kRoot3 + 3e-4).epsilon(1e-9));
    CHECK(std::abs(diagram.ledger_sum() - torus_rib_formula(101, 1e-6)) <= 1e-9);
    CHECK(std::abs(path_length(diagram.centerline) - diagram.ledger_sum()) <= 1e-9);
}

TEST_CASE("torus ledger names carry the right multiplicities") {
    const RibbonDiagram diagram = build_torus(5, 0.05);
    std::map<std::string, int> counts;
    for (const auto& entry : diagram.ledger) counts[entry.name]++;
    CHECK(counts["d(E,v_S)"] == 4);
    CHECK(counts["d_K(v_S,v_E)"] == 3);
    CHECK(counts["d_K(w_1,w_{2n+1})"] == 2);
    CHECK(counts["d(E,F)"] == 4);
    CHECK(counts["d(v_S,v_E)"] == 3);
    CHECK(counts["d(w_1,w_{2n+1})"] == 2);
    CHECK(ledger_term(diagram, "d(E,F)") == doctest::Approx(std::tan(kPi / 6.0) / 2.0).epsilon(1e-12));
    CHECK(ledger_term(diagram, "d(v_S,v_E)") == doctest::Approx(2.0 / kRoot3).epsilon(1e-12));
    CHECK(ledger_term(diagram, "d(E,v_S)") == doctest::Approx(1.0 / kRoot3).epsilon(1e-12));
}

TEST_CASE("clasp distances from the geometric derivation") {
    const ClaspDistances clasp = clasp_distances();
    CHECK(clasp.dK_MP == doctest::Approx(1.0 / (2.0 * kRoot3)).epsilon(1e-12));
    CHECK(clasp.d_PM == doctest::Approx(1.0 / kRoot3 - 0.5).epsilon(1e-12));
    CHECK(clasp.d_JT == doctest::Approx(1.0 / (2.0 * kRoot3)).epsilon(1e-12));
    // the intermediate identities the derivation relies on
    CHECK(std::tan(kPi / 12.0) == doctest::Approx(2.0 - kRoot3).epsilon(1e-14));
    CHECK(0.5 * std::tan(kPi / 12.0) == doctest::Approx(1.0 - kRoot3 / 2.0).epsilon(1e-14));
    CHECK((1.0 - kRoot3 / 2.0) / std::cos(kPi / 6.0) ==
          doctest::Approx(2.0 * kRoot3 / 3.0 - 1.0).epsilon(1e-14));
}

TEST_CASE("twist formulas") {
    CHECK(twist_rib_formula(1, TwistParity::odd, 0.0) ==
          doctest::Approx(9.0 * kRoot3 + 2.0).epsilon(1e-14));
    CHECK(twist_rib_formula(9, TwistParity::odd, 0.0) ==
          doctest::Approx(9.0 * kRoot3 + 2.0).epsilon(1e-14));
    CHECK(twist_rib_formula(1, TwistParity::even, 0.0) ==
          doctest::Approx(8.0 * kRoot3 + 2.0).epsilon(1e-14));
    CHECK(twist_rib_formula(2, TwistParity::odd, 0.1) ==
          doctest::Approx(9.0 * kRoot3 + 2.0 + 1.2).epsilon(1e-12));
    CHECK_THROWS_AS(twist_rib_formula(0, TwistParity::odd, 0.0), DomainError);
}

TEST_CASE("build_twist ledger and oracle") {
    const RibbonDiagram odd1 = build_twist(1, TwistParity::odd, 1e-6);
    CHECK(odd1.ledger_sum() == doctest::Approx(9.0 * kRoot3 + 2.0 + 6e-6).epsilon(1e-10));
    CHECK(std::abs(odd1.ledger_sum() - twist_rib_formula(1, TwistParity::odd, 1e-6)) <= 1e-9);

    std::mt19937 rng(29);
    std::uniform_real_distribution<double> spacing(0.01, 0.6);
    std::uniform_int_distribution<int> half(1, 40);
    for (int i = 0; i < 60; ++i) {
        const int n = half(rng);
        const double d = spacing(rng);
        const TwistParity parity = (i % 2 == 0) ? TwistParity::odd : TwistParity::even;
        const RibbonDiagram diagram = build_twist(n, parity, d);
        CHECK(std::abs(path_length(diagram.centerline) - twist_rib_formula(n, parity, d)) <= 1e-9);
        CHECK(std::abs(diagram.ledger_sum() - path_length(diagram.centerline)) <= 1e-9);
    }
    CHECK_THROWS_AS(build_twist(0, TwistParity::odd, 0.1), DomainError);
    CHECK_THROWS_AS(build_twist(-2, TwistParity::even, 0.1), DomainError);
}

TEST_CASE("twist clasp folds carry the stated angles") {
    const RibbonDiagram odd = build_twist(2, TwistParity::odd, 0.05);
    const auto angle_at = [&](const char* label) {
        return odd.folds[static_cast<std::size_t>(odd.landmarks.at(label))].angle;
    };
    CHECK(angle_at("N") == doctest::Approx(kPi / 6.0).epsilon(1e-15));
    CHECK(angle_at("S") == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(angle_at("J") == doctest::Approx(kPi / 3.0).epsilon(1e-15));
    CHECK(angle_at("U") == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(angle_at("T") == doctest::Approx(0.0).epsilon(1e-15));

    const RibbonDiagram even = build_twist(2, TwistParity::even, 0.05);
    const auto even_angle_at = [&](const char* label) {
        return even.folds[static_cast<std::size_t>(even.landmarks.at(label))].angle;
    };
    CHECK(even_angle_at("Y") == doctest::Approx(kPi / 6.0).epsilon(1e-15));
    CHECK(even_angle_at("W") == doctest::Approx(kPi / 6.0).epsilon(1e-15));
    CHECK(even_angle_at("S") == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(even_angle_at("U") == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(even_angle_at("R") == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("clasp fold angles agree with the built geometry") {
    // the stored angles are the construction's; cross-check them against the
    // interior angles the coordinates actually realize
    for (TwistParity parity : {TwistParity::odd, TwistParity::even}) {
        const RibbonDiagram diagram = build_twist(3, parity, 0.04);
        const auto& pts = diagram.centerline.vertices;
        const std::size_t n = diagram.folds.size();
        for (std::size_t i = 0; i < n; ++i) {
            const PlanarPoint& prev = pts[(i + n - 1) % n];
            const PlanarPoint& next = pts[i + 1];
            const PlanarPoint ray_in = (prev - pts[i]).normalized();
            const PlanarPoint ray_out = (next - pts[i]).normalized();
            const double cos_interior = std::clamp(ray_in.dot(ray_out), -1.0, 1.0);
            const double interior = std::acos(cos_interior);
            CHECK(interior == doctest::Approx(diagram.folds[i].angle).epsilon(1e-7));
        }
    }
}

TEST_CASE("formulas are affine in d with the stated slopes") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> angle(0.3, 2.8);
    std::uniform_int_distribution<int> half(1, 30);
    for (int i = 0; i < 100; ++i) {
        const double theta = angle(rng);
        const int n = half(rng);
        const double f0 = moebius_rib_formula(FoldAngle(theta), 0.0, n);
        const double f1 = moebius_rib_formula(FoldAngle(theta), 0.7, n);
        const double slope = 2.0 * n * (1.0 + std::sin(theta / 2.0));
        CHECK((f1 - f0) / 0.7 == doctest::Approx(slope).epsilon(1e-9));

        const int q = 2 * n + 1;
        CHECK((torus_rib_formula(q, 0.9) - torus_rib_formula(q, 0.0)) / 0.9 ==
              doctest::Approx(6.0 * n).epsilon(1e-9));
        CHECK((twist_rib_formula(n, TwistParity::odd, 0.9) -
               twist_rib_formula(n, TwistParity::odd, 0.0)) /
                  0.9 ==
              doctest::Approx(6.0 * n).epsilon(1e-9));
    }
}

TEST_CASE("every built diagram closes and satisfies the clearance") {
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> spacing(0.02, 0.8);
    std::uniform_int_distribution<int> half(1, 20);
    for (int i = 0; i < 40; ++i) {
        const double d = spacing(rng);
        const int n = half(rng);
        RibbonDiagram diagram;
        switch (i % 4) {
            case 0: diagram = build_moebius(FoldAngle(0.3 + 0.1 * (i % 25)), d, n); break;
            case 1: diagram = build_torus(2 * n + 1, d); break;
            case 2: diagram = build_twist(n, TwistParity::odd, d); break;
            default: diagram = build_twist(n, TwistParity::even, d); break;
        }
        CHECK(diagram.centerline.closed);
        CHECK(distance(diagram.centerline.vertices.front(), diagram.centerline.vertices.back()) <=
              1e-12);
        const FoldAngle theta(diagram.params.theta);
        const auto clearance =
            clearance_check(theta, escape_min_kd(theta) / diagram.params.k, diagram.params.k);
        CHECK(clearance.satisfied);
        CHECK(std::abs(clearance.margin) <= 1e-12);
        CHECK(diagram.folds.size() == diagram.centerline.vertices.size() - 1);
    }
}
