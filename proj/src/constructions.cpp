#include "ribbonfold/constructions.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace ribbonfold {

namespace {

constexpr double kPi = std::numbers::pi;
// Relative slack when deciding whether k*d reaches the clearance threshold, so
// that d = escape_min_kd(theta)/k round-trips to the same k.
constexpr double kPolicyTol = 1e-12;

double require_positive_d(double d) {
    if (!(d > 0.0) || !std::isfinite(d)) {
        throw DomainError("spacing d must be positive and finite (d = 0 is only a formula limit)");
    }
    return d;
}

/// Incremental assembly of a closed diagram: vertices plus per-vertex fold
/// metadata. Sides are derived from the finished geometry, everything else is
/// recorded while walking.
struct Walk {
    std::vector<PlanarPoint> pts;
    std::vector<double> angles;
    std::vector<FoldKind> kinds;
    std::vector<FoldRole> roles;

    void add(PlanarPoint p, double angle, FoldKind kind, FoldRole role) {
        pts.push_back(p);
        angles.push_back(angle);
        kinds.push_back(kind);
        roles.push_back(role);
    }

    const PlanarPoint& back() const { return pts.back(); }

    /// Append `edges` zigzag edges continuing from the current point. Every
    /// edge has length `spacing` except the last, lengthened by `final_extra`.
    /// `dir_x` is +1/-1 for rightward/leftward travel, `first_up` picks the
    /// vertical sense of the first edge. Vertex fold kinds come from
    /// `kind_at(i)` for i = 0..edges-1.
    template <typename KindAt>
    void zigzag(double theta, double spacing, int edges, double dir_x, bool first_up,
                FoldRole role, KindAt kind_at, double final_extra = 0.0) {
        const double h = theta / 2.0;
        const double ux = std::sin(h);
        const double uy = std::cos(h);
        double vy = first_up ? 1.0 : -1.0;
        for (int i = 0; i < edges; ++i) {
            const double len = (i == edges - 1) ? spacing + final_extra : spacing;
            PlanarPoint p{back().x + dir_x * ux * len, back().y + vy * uy * len};
            add(p, theta, kind_at(i), role);
            vy = -vy;
        }
    }

    RibbonDiagram finish(ConstructionParams params, std::vector<LedgerEntry> ledger,
                         std::map<std::string, int> landmarks) && {
        RibbonDiagram diagram;
        diagram.params = params;
        diagram.ledger = std::move(ledger);
        diagram.landmarks = std::move(landmarks);
        diagram.folds.resize(pts.size());
        const std::size_t n = pts.size();
        for (std::size_t i = 0; i < n; ++i) {
            const PlanarPoint& prev = pts[(i + n - 1) % n];
            const PlanarPoint& next = pts[(i + 1) % n];
            const PlanarPoint in_dir = (pts[i] - prev).normalized();
            const PlanarPoint out_dir = (next - pts[i]).normalized();
            const double turn = in_dir.cross(out_dir);
            // A doubling fold (angle 0) has no turn sign; call it left.
            const FoldSide side = turn >= 0.0 ? FoldSide::left : FoldSide::right;
            diagram.folds[i] = DiagramFold{side, kinds[i], angles[i], roles[i]};
        }
        diagram.centerline.closed = true;
        diagram.centerline.vertices = std::move(pts);
        diagram.centerline.vertices.push_back(diagram.centerline.vertices.front());
        validate_path(diagram.centerline);
        return diagram;
    }
};

FoldKind wrap_kind(int i) {
    // Half-wraps alternate a left underfold with a right overfold; index 0 is
    // the first wrap vertex after the accordion.
    return (i % 2 == 0) ? FoldKind::underfold : FoldKind::overfold;
}

struct AccordionSetup {
    int k;
    double d_acc; ///< accordion spacing, escape_min_kd(theta)/k (clearance equality)
};

AccordionSetup accordion_setup(const FoldAngle& theta, double d, std::optional<int> k_override) {
    const double min_kd = escape_min_kd(theta);
    int k;
    if (k_override) {
        k = *k_override;
        if (k < 2 || k % 2 != 0) {
            throw DomainError("escape accordion fold count k must be even and >= 2");
        }
        if (static_cast<double>(k) * d < min_kd * (1.0 - kPolicyTol)) {
            throw ConstraintError(
                "escape accordion clearance violated: need k*d*sin(theta/2) >= 1/cos(theta/2)");
        }
    } else {
        k = default_even_fold_count(theta, d);
    }
    return {k, min_kd / static_cast<double>(k)};
}

} // namespace

std::string family_name(Family family) {
    switch (family) {
        case Family::moebius: return "moebius";
        case Family::torus2q: return "torus2q";
        case Family::twist_odd: return "twist_odd";
        case Family::twist_even: return "twist_even";
    }
    throw DomainError("unknown family");
}

Family family_from_string(const std::string& name) {
    if (name == "moebius") return Family::moebius;
    if (name == "torus2q") return Family::torus2q;
    if (name == "twist_odd" || name == "twist-odd") return Family::twist_odd;
    if (name == "twist_even" || name == "twist-even") return Family::twist_even;
    throw DomainError("unknown family '" + name + "'");
}

double RibbonDiagram::ledger_sum() const {
    double sum = 0.0;
    for (const auto& entry : ledger) {
        sum += entry.length;
    }
    return sum;
}

int default_even_fold_count(const FoldAngle& theta, double d) {
    require_positive_d(d);
    const double min_kd = escape_min_kd(theta);
    const double exact = min_kd / d * (1.0 - kPolicyTol);
    int k = 2 * static_cast<int>(std::ceil(exact / 2.0));
    if (k < 2) k = 2;
    return k;
}

RibbonDiagram build_moebius(const FoldAngle& theta, double d, int n, std::optional<int> k_opt) {
    require_positive_d(d);
    if (n < 0) {
        throw DomainError("moebius half-wrap parameter n must be >= 0");
    }
    const auto [k, d_acc] = accordion_setup(theta, d, k_opt);

    const double h = theta.half();
    const double s = std::sin(h);
    const double c = std::cos(h);
    const double half_tan = 0.5 * std::tan(h);
    const double closure_len = 0.5 / c; // d(A, v_S)
    const double closure_angle = kPi / 2.0 - h;
    const double th = theta.radians();

    Walk w;
    w.add({-half_tan, 0.5}, closure_angle, FoldKind::overfold, FoldRole::closure); // A
    w.add({0.0, 0.0}, th, FoldKind::overfold, FoldRole::accordion);                // v_S
    // k accordion edges; the k-th vertex is v_E = w_1, the first half-wrap.
    w.zigzag(th, d_acc, k, +1.0, true, FoldRole::accordion,
             [](int) { return FoldKind::overfold; });
    w.roles.back() = FoldRole::half_wrap;
    w.kinds.back() = wrap_kind(0);
    const int v_e_index = static_cast<int>(w.pts.size()) - 1;
    if (n > 0) {
        w.zigzag(th, d, 2 * n, +1.0, true, FoldRole::half_wrap,
                 [](int i) { return wrap_kind(i + 1); });
    }
    const int w_last_index = static_cast<int>(w.pts.size()) - 1;
    const PlanarPoint w_last = w.back();
    w.add({w_last.x + half_tan, 0.5}, closure_angle, FoldKind::underfold, FoldRole::closure); // E
    const int e_index = static_cast<int>(w.pts.size()) - 1;

    const double kd = static_cast<double>(k) * d_acc;
    const double wrap_len = 2.0 * static_cast<double>(n) * d;
    std::vector<LedgerEntry> ledger = {
        {"d_K(v_S,v_E)", kd},
        {"d_K(w_1,w_{2n+1})", wrap_len},
        {"d(A,v_S)", closure_len},
        {"d(A,v_S)", closure_len},
        {"d(A,B)", half_tan},
        {"d(A,B)", half_tan},
        {"d(B,C)", kd * s},
        {"d(C,D)", wrap_len * s},
    };
    std::map<std::string, int> landmarks = {
        {"A", 0},         {"v_S", 1},
        {"v_E", v_e_index}, {"w_1", v_e_index},
        {"w_{2n+1}", w_last_index}, {"E", e_index},
    };
    ConstructionParams params{Family::moebius, theta.radians(), d, n, k};
    return std::move(w).finish(params, std::move(ledger), std::move(landmarks));
}

RibbonDiagram build_torus(int q, double d, std::optional<int> k_opt) {
    if (q < 3 || q % 2 == 0) {
        throw DomainError("torus family requires odd q >= 3 (even q gives a two-component link)");
    }
    require_positive_d(d);
    const FoldAngle theta(kPi / 3.0);
    const int n = (q - 1) / 2;
    const auto [k, d_acc] = accordion_setup(theta, d, k_opt);

    const double h = theta.half();
    const double s = std::sin(h);
    const double c = std::cos(h);
    const double half_tan = 0.5 * std::tan(h);
    const double closure_len = 0.5 / c; // d(E, v_S)
    const double closure_angle = kPi / 2.0 - h;
    const double th = theta.radians();
    const auto all_over = [](int) { return FoldKind::overfold; };

    Walk w;
    w.add({-half_tan, 0.5}, closure_angle, FoldKind::overfold, FoldRole::closure); // E
    // Strip AB: accordion, then q half-wraps of end B, then the fold up to I.
    w.add({0.0, 0.0}, th, FoldKind::overfold, FoldRole::accordion); // v_S
    w.zigzag(th, d_acc, k, +1.0, true, FoldRole::accordion, all_over);
    w.roles.back() = FoldRole::half_wrap;
    w.kinds.back() = wrap_kind(0);
    const int v_e_index = static_cast<int>(w.pts.size()) - 1;
    w.zigzag(th, d, 2 * n, +1.0, true, FoldRole::half_wrap,
             [](int i) { return wrap_kind(i + 1); });
    const int w_q_index = static_cast<int>(w.pts.size()) - 1;
    const PlanarPoint w_q = w.back();
    w.add({w_q.x + half_tan, 0.5}, closure_angle, FoldKind::underfold, FoldRole::closure); // I
    const int i_index = static_cast<int>(w.pts.size()) - 1;

    // Strip CD lies under AB: its fold at E coincides with the first one, and
    // its long accordion runs beneath the wraps before extending past them.
    w.add(w.pts.front(), closure_angle, FoldKind::overfold, FoldRole::closure);
    w.add({0.0, 0.0}, th, FoldKind::overfold, FoldRole::accordion);
    w.zigzag(th, d_acc, k, +1.0, true, FoldRole::accordion, all_over);
    w.zigzag(th, d, 2 * n, +1.0, true, FoldRole::accordion, all_over);
    w.zigzag(th, d_acc, k, +1.0, true, FoldRole::accordion, all_over);
    const int n_index = static_cast<int>(w.pts.size()) - 1;
    const PlanarPoint ext_end = w.back();
    w.add({ext_end.x + half_tan, 0.5}, closure_angle, FoldKind::underfold, FoldRole::closure); // M
    const int m_index = static_cast<int>(w.pts.size()) - 1;

    const double kd = static_cast<double>(k) * d_acc;
    const double wrap_len = 2.0 * static_cast<double>(n) * d;
    std::vector<LedgerEntry> ledger;
    for (int i = 0; i < 4; ++i) ledger.push_back({"d(E,v_S)", closure_len});
    for (int i = 0; i < 3; ++i) ledger.push_back({"d_K(v_S,v_E)", kd});
    for (int i = 0; i < 2; ++i) ledger.push_back({"d_K(w_1,w_{2n+1})", wrap_len});
    for (int i = 0; i < 4; ++i) ledger.push_back({"d(E,F)", half_tan});
    for (int i = 0; i < 3; ++i) ledger.push_back({"d(v_S,v_E)", kd * s});
    for (int i = 0; i < 2; ++i) ledger.push_back({"d(w_1,w_{2n+1})", wrap_len * s});

    std::map<std::string, int> landmarks = {
        {"E", 0},   {"v_S", 1},        {"v_E", v_e_index}, {"w_1", v_e_index},
        {"w_q", w_q_index}, {"I", i_index}, {"N", n_index},  {"M", m_index},
    };
    ConstructionParams params{Family::torus2q, theta.radians(), d, n, k};
    return std::move(w).finish(params, std::move(ledger), std::move(landmarks));
}

RibbonDiagram build_twist(int n, TwistParity parity, double d, std::optional<int> k_opt) {
    if (n < 1) {
        throw DomainError("twist family requires n >= 1");
    }
    require_positive_d(d);
    const FoldAngle theta(kPi / 3.0);
    const auto [k, d_acc] = accordion_setup(theta, d, k_opt);
    const ClaspDistances clasp = clasp_distances();

    const double h = theta.half();
    const double s = std::sin(h);
    const double c = std::cos(h);
    const double half_tan = 0.5 * std::tan(h); // also d(J,T)
    const double closure_len = 0.5 / c;
    const double closure_angle = kPi / 2.0 - h;
    const double th = theta.radians();
    const double d_MN = 1.0 - std::sqrt(3.0) / 2.0;
    const double d_NP = clasp.dK_MP - d_MN;
    const auto all_over = [](int) { return FoldKind::overfold; };
    const auto clasp_fold = FoldRole::closure;

    const double kd = static_cast<double>(k) * d_acc;
    const double wrap_len = 2.0 * static_cast<double>(n) * d;

    Walk w;
    w.add({-half_tan, 0.5}, closure_angle, FoldKind::overfold, FoldRole::closure); // E
    w.add({0.0, 0.0}, th, FoldKind::overfold, FoldRole::accordion);                // v_S
    w.zigzag(th, d_acc, k, +1.0, true, FoldRole::accordion, all_over);
    w.roles.back() = FoldRole::half_wrap;
    w.kinds.back() = wrap_kind(0);
    const int v_e_index = static_cast<int>(w.pts.size()) - 1;

    std::vector<LedgerEntry> ledger;
    std::map<std::string, int> landmarks = {{"E", 0}, {"v_S", 1}, {"v_E", v_e_index}, {"w_1", v_e_index}};
    Family family;

    if (parity == TwistParity::odd) {
        family = Family::twist_odd;
        // 2n+1 half-wraps; end B leaves the last one climbing through P to the
        // pi/6 clasp fold at N, then drops through M to the join at U.
        w.zigzag(th, d, 2 * n, +1.0, true, FoldRole::half_wrap,
                 [](int i) { return wrap_kind(i + 1); });
        landmarks["w_{2n+1}"] = static_cast<int>(w.pts.size()) - 1;
        const PlanarPoint w_last = w.back();
        const double climb = 2.0 * closure_len + d_NP; // w -> P -> N
        w.add({w_last.x + climb * s, w_last.y + climb * c}, kPi / 6.0, FoldKind::overfold, clasp_fold); // N
        landmarks["N"] = static_cast<int>(w.pts.size()) - 1;
        w.add({w.back().x, w.back().y - (d_MN + 1.0)}, 0.0, FoldKind::overfold, clasp_fold); // U (join D-B)
        landmarks["U"] = static_cast<int>(w.pts.size()) - 1;
        w.add({w.back().x, w.back().y + 0.5}, kPi / 2.0, FoldKind::overfold, clasp_fold); // S
        landmarks["S"] = static_cast<int>(w.pts.size()) - 1;
        w.add({w.back().x + 0.5 + half_tan, w.back().y}, kPi / 3.0, FoldKind::overfold, clasp_fold); // J
        landmarks["J"] = static_cast<int>(w.pts.size()) - 1;
        w.add({w.back().x - half_tan, w.back().y - 0.5}, th, FoldKind::overfold, FoldRole::accordion); // V
        landmarks["V"] = static_cast<int>(w.pts.size()) - 1;
        const double v_x = w.back().x;
        // End D retraced: extension accordion, the strip under the wraps, and
        // the first accordion, all leftward.
        w.zigzag(th, d_acc, k, -1.0, true, FoldRole::accordion, all_over);
        w.zigzag(th, d, 2 * n, -1.0, true, FoldRole::accordion, all_over);
        w.zigzag(th, d_acc, k, -1.0, true, FoldRole::accordion, all_over);
        const PlanarPoint v_s2 = w.back();
        w.add({v_s2.x - half_tan, v_s2.y + 0.5}, closure_angle, FoldKind::overfold, FoldRole::closure); // E'
        w.add({v_x, w.back().y}, 0.0, FoldKind::overfold, clasp_fold); // T (join C-A)
        landmarks["T"] = static_cast<int>(w.pts.size()) - 1;

        const double leg_rt = clasp.d_PM + 0.5; // d(R,T)
        for (int i = 0; i < 5; ++i) ledger.push_back({"d(E,v_S)", closure_len});
        for (int i = 0; i < 3; ++i) ledger.push_back({"d_K(v_S,v_E)", kd});
        for (int i = 0; i < 2; ++i) ledger.push_back({"d_K(w_1,w_{2n+1})", wrap_len});
        for (int i = 0; i < 6; ++i) ledger.push_back({"d(E,F)", half_tan});
        for (int i = 0; i < 2; ++i) ledger.push_back({"d(R,T)", leg_rt});
        for (int i = 0; i < 2; ++i) ledger.push_back({"d(v_S,v_E)", kd * s});
        for (int i = 0; i < 2; ++i) ledger.push_back({"d(w_1,w_{2n+1})", wrap_len * s});
        ledger.push_back({"d_K(P,M)", clasp.dK_MP});
        ledger.push_back({"d(M,U)", 1.0});
        ledger.push_back({"d(J,T)", clasp.d_JT});
        ledger.push_back({"d_K(T,U)", 1.0});
    } else {
        family = Family::twist_even;
        // 2n half-wraps; end B exits the last wrap still descending, crossing
        // the baseline at w_{2n+1} on its way to the pi/6 fold at Y.
        w.zigzag(th, d, 2 * n - 1, +1.0, true, FoldRole::half_wrap,
                 [](int i) { return wrap_kind(i + 1); }, 0.0);
        const PlanarPoint w_2n = w.back();
        const double x_w = w_2n.x + d * s; // w_{2n+1}, not a fold of strip AB
        w.zigzag(th, d, 1, +1.0, false, clasp_fold, all_over, d_MN); // -> Y
        w.angles.back() = kPi / 6.0;
        landmarks["Y"] = static_cast<int>(w.pts.size()) - 1;
        w.add({w.back().x, w.back().y + d_NP + 1.0}, 0.0, FoldKind::overfold, clasp_fold); // R (join D-B)
        landmarks["R"] = static_cast<int>(w.pts.size()) - 1;
        w.add({w.back().x, w.back().y - 0.5}, kPi / 2.0, FoldKind::overfold, clasp_fold); // S
        landmarks["S"] = static_cast<int>(w.pts.size()) - 1;
        w.add({w.back().x + kd * s, w.back().y}, kPi / 2.0, FoldKind::overfold, clasp_fold); // U
        landmarks["U"] = static_cast<int>(w.pts.size()) - 1;
        w.add({w.back().x, w.back().y - (0.5 + d_NP)}, kPi / 6.0, FoldKind::overfold, clasp_fold); // W
        landmarks["W"] = static_cast<int>(w.pts.size()) - 1;
        // End D retraced leftward: extension accordion (first edge lengthened
        // by the piece past Z), the strip under the wraps, first accordion.
        w.zigzag(th, d_acc, 1, -1.0, true, FoldRole::accordion, all_over, d_MN);
        w.zigzag(th, d_acc, k - 1, -1.0, false, FoldRole::accordion, all_over);
        w.zigzag(th, d, 2 * n, -1.0, true, FoldRole::accordion, all_over);
        w.zigzag(th, d_acc, k, -1.0, true, FoldRole::accordion, all_over);
        const PlanarPoint v_s2 = w.back();
        w.add({v_s2.x - half_tan, v_s2.y + 0.5}, closure_angle, FoldKind::overfold, FoldRole::closure); // E'
        w.add({x_w + 2.0 * half_tan, w.back().y}, 0.0, FoldKind::overfold, clasp_fold); // T (join C-A)
        landmarks["T"] = static_cast<int>(w.pts.size()) - 1;

        for (int i = 0; i < 2; ++i) ledger.push_back({"d(E,v_S)", closure_len});
        for (int i = 0; i < 3; ++i) ledger.push_back({"d_K(v_S,v_E)", kd});
        for (int i = 0; i < 2; ++i) ledger.push_back({"d_K(w_1,w_{2n+1})", wrap_len});
        for (int i = 0; i < 2; ++i) ledger.push_back({"d(E,F)", half_tan});
        for (int i = 0; i < 2; ++i) ledger.push_back({"d_K(M,P)", clasp.dK_MP});
        for (int i = 0; i < 3; ++i) ledger.push_back({"d(v_S,v_E)", kd * s});
        for (int i = 0; i < 2; ++i) ledger.push_back({"d(w_1,w_{2n+1})", wrap_len * s});
        ledger.push_back({"d(X,R)", 1.0});
        for (int i = 0; i < 2; ++i) ledger.push_back({"d(P,M)", clasp.d_PM});
        for (int i = 0; i < 4; ++i) ledger.push_back({"d(S,T)", 0.5});
    }

    ConstructionParams params{family, theta.radians(), d, n, k};
    return std::move(w).finish(params, std::move(ledger), std::move(landmarks));
}

double moebius_rib_formula(const FoldAngle& theta, double d, int n) {
    if (!(d >= 0.0) || !std::isfinite(d)) {
        throw DomainError("formula spacing d must be >= 0 and finite");
    }
    if (n < 0) {
        throw DomainError("moebius half-wrap parameter n must be >= 0");
    }
    const double h = theta.half();
    const double s = std::sin(h);
    const double c = std::cos(h);
    return 2.0 / c + 1.0 / (c * s) + std::tan(h) + 2.0 * n * d * (1.0 + s);
}

double torus_rib_formula(int q, double d) {
    if (q < 3 || q % 2 == 0) {
        throw DomainError("torus family requires odd q >= 3");
    }
    if (!(d >= 0.0) || !std::isfinite(d)) {
        throw DomainError("formula spacing d must be >= 0 and finite");
    }
    const int n = (q - 1) / 2;
    return 8.0 * std::sqrt(3.0) + 6.0 * n * d;
}

double twist_rib_formula(int n, TwistParity parity, double d) {
    if (n < 1) {
        throw DomainError("twist family requires n >= 1");
    }
    if (!(d >= 0.0) || !std::isfinite(d)) {
        throw DomainError("formula spacing d must be >= 0 and finite");
    }
    const double base =
        (parity == TwistParity::odd) ? 9.0 * std::sqrt(3.0) + 2.0 : 8.0 * std::sqrt(3.0) + 2.0;
    return base + 6.0 * n * d;
}

ClaspDistances clasp_distances() {
    // Step-2 fold: angle pi/6 at N with MN perpendicular to PQ, so the small
    // triangle at Q has angle pi/12 and MQ is half the ribbon width.
    const double d_MN = 0.5 * std::tan(kPi / 12.0);     // = 1 - sqrt(3)/2
    const double d_NP = d_MN / std::cos(kPi / 6.0);     // = 2*sqrt(3)/3 - 1
    ClaspDistances clasp;
    clasp.dK_MP = d_MN + d_NP;
    clasp.d_PM = d_MN * std::tan(kPi / 6.0);
    // Step-4 fold: right triangle at T with the opposite leg half a width.
    clasp.d_JT = 0.5 / std::tan(kPi / 3.0);
    return clasp;
}

} // namespace ribbonfold
