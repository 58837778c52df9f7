#include "jacpair/report.hpp"

namespace jacpair {

namespace {

Json json_rat_pair(const Rat& q) {
    return Json::array({q.get_num().get_str(), q.get_den().get_str()});
}

} // namespace

Json json_point(const QPoint& p) { return Json::array({json_rat_pair(p.x), json_rat_pair(p.y)}); }

Json json_polygon(const NewtonPolygon& n) {
    Json verts = Json::array();
    for (Point v : n.vertices()) verts.push_back(json_point(QPoint(v)));
    return Json{{"schema", 1}, {"vertices", verts}};
}

Json json_wdecomp(const WDecomp& d) {
    Json comps = Json::array();
    for (auto it = d.components.rbegin(); it != d.components.rend(); ++it)
        comps.push_back(Json{{"degree", it->first}, {"form", it->second.str()}});
    return Json{{"schema", 1}, {"w", d.w.str()}, {"components", comps}};
}

Json json_hypotheses(const PairHypotheses& h) {
    Json dirs = Json::array();
    for (const DirectionCheck& dc : h.directions)
        dirs.push_back(Json{{"w", dc.w.str()},
                            {"root_exists", dc.root_exists},
                            {"squarefree_ok", dc.squarefree_ok}});
    Json j{{"schema", 1},
           {"a", h.a},
           {"b", h.b},
           {"coprime_ok", h.coprime_ok},
           {"min_ok", h.min_ok},
           {"bracket_constant", h.bracket_value.has_value()},
           {"similarity_ok", h.similarity_ok},
           {"corner_points_ok", h.corner_points_ok},
           {"vertex_divisibility_ok", h.vertex_divisibility_ok},
           {"directions", dirs},
           {"generic_boundaries_ok", h.generic_boundaries_ok}};
    if (h.bracket_value) j["bracket_value"] = h.bracket_value->get_str();
    return j;
}

Json json_magnus(const MagnusCoeffs& c) {
    Json coeffs = Json::array();
    for (std::size_t i = 0; i < c.coeffs.size(); ++i)
        coeffs.push_back(Json{{"gamma", i},
                              {"c", c.coeffs[i].get_str()},
                              {"forced_zero", static_cast<bool>(c.forced_zero[i])}});
    return Json{{"schema", 1},
                {"w", c.w.str()},
                {"d", c.d},
                {"e", c.e},
                {"r", c.root.r},
                {"rho", c.root.rho.get_str()},
                {"H", c.root.H.str()},
                {"mu_max", c.mu_max},
                {"normalization",
                 "coefficients are rho-normalized: paper constants are c * rho^-((e-gamma)/d)"},
                {"coefficients", coeffs}};
}

Json json_magnus_report(const MagnusReport& r) {
    Json levels = Json::array();
    for (const MagnusLevel& lv : r.levels)
        levels.push_back(Json{{"mu", lv.mu}, {"pass", lv.pass}});
    return Json{{"schema", 1},
                {"solve", json_magnus(r.coeffs)},
                {"levels", levels},
                {"powers_ok", r.powers_ok},
                {"vanishing_ok", r.vanishing_ok},
                {"all_pass", r.all_pass}};
}

Json json_square(const SquareCompletion& s) {
    Json order = Json::array();
    for (Point z : s.solve_order) order.push_back(Json::array({z.x, z.y}));
    return Json{{"schema", 1},
                {"C", Json::array({s.C.x, s.C.y})},
                {"P", s.P.str()},
                {"R", s.R.str()},
                {"solve_order", order}};
}

Json json_broken_line(const BrokenLine& t) {
    Json verts = Json::array();
    for (const QPoint& p : t.vertices) verts.push_back(json_point(p));
    return Json{{"side", side_name(t.side)},
                {"anchor", json_point(t.anchor)},
                {"vertices", verts}};
}

Json json_verdict(const PipelineVerdict& v) {
    Json swept = Json::array();
    for (const SweepEntry& e : v.swept) swept.push_back(Json{{"label", e.label}, {"ok", e.ok}});
    const char* conclusion = v.conclusion == PipelineVerdict::Conclusion::r_constant
                                 ? "R_constant"
                                 : (v.conclusion == PipelineVerdict::Conclusion::violation
                                        ? "violation"
                                        : "declined");
    Json j{{"schema", 1},
           {"generic_ok", v.generic_ok},
           {"a", v.a},
           {"b", v.b},
           {"conclusion", conclusion},
           {"swept", swept}};
    if (!v.detail.empty()) j["detail"] = v.detail;
    if (v.generic_ok) {
        j["P"] = v.P.str();
        j["R"] = v.R.str();
        j["chains_swapped"] = v.chains_swapped;
    }
    if (v.conclusion == PipelineVerdict::Conclusion::r_constant) {
        j["u0"] = v.u0.get_str();
        j["bracket_zero"] = v.bracket_zero;
    }
    if (v.conclusion == PipelineVerdict::Conclusion::violation) {
        j["violation_index"] = v.violation_index;
        if (v.offending)
            j["offending_point"] = Json::array({v.offending->x, v.offending->y});
    }
    return j;
}

} // namespace jacpair
