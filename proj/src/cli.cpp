#include "jacpair/cli.hpp"

#include "jacpair/parse.hpp"
#include "jacpair/report.hpp"
#include "jacpair/svg.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace jacpair {

namespace {

bool color_enabled() { return std::getenv("NO_COLOR") == nullptr; }

std::string pass_str(bool ok) {
    if (!color_enabled()) return ok ? "PASS" : "FAIL";
    return ok ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(errc::precondition_violated, "cannot open " + path);
    f << content;
}

void emit_json(const std::string& path, const Json& j, std::ostream& out) {
    std::string text = j.dump(2) + "\n";
    if (path.empty())
        out << text;
    else
        write_file(path, text);
}

Point parse_point(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) fail(errc::syntax_error, "expected 'x,y'");
    return Point{std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
}

Direction parse_direction(const std::string& s) {
    Point p = parse_point(s);
    return Direction(p.x, p.y);
}

std::vector<Point> parse_shape(const std::string& s) {
    std::vector<Point> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto semi = s.find(';', pos);
        std::string part = s.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        auto comma = part.find(',');
        if (comma == std::string::npos) fail(errc::syntax_error, "shape must be 'x,y;x,y;...'");
        out.push_back({std::stol(part.substr(0, comma)), std::stol(part.substr(comma + 1))});
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return out;
}

struct CommonOpts {
    std::string json_path;
    std::string svg_path;
};

} // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for Jacobian pairs: Newton polygons, Magnus coefficients, "
                 "square completion"};
    app.require_subcommand(1);

    std::string f_text, g_text, w_text = "1,1", c_text, kind = "jacobian", shape_text, u0_text;
    bool laurent = false;
    long a = 2, b = 3, mu_max = -2, kk = 1, steps = 3, degree_bound = 10;
    std::uint64_t seed = 1;
    CommonOpts common;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--json", common.json_path, "write a JSON report to this path");
        cmd->add_option("--svg", common.svg_path, "write an SVG diagram to this path");
    };

    CLI::App* newton = app.add_subcommand("newton", "Newton polygon of a polynomial");
    newton->add_option("-F", f_text, "polynomial")->required();
    newton->add_flag("--laurent", laurent, "accept negative exponents");
    add_common(newton);

    CLI::App* decomp_cmd = app.add_subcommand("decomp", "w-homogeneous decomposition");
    decomp_cmd->add_option("-F", f_text, "polynomial")->required();
    decomp_cmd->add_option("-w", w_text, "direction u,v");
    decomp_cmd->add_flag("--laurent", laurent, "accept negative exponents");
    add_common(decomp_cmd);

    CLI::App* bracket_cmd = app.add_subcommand("bracket", "Jacobian bracket [F,G]");
    bracket_cmd->add_option("-F", f_text, "first polynomial")->required();
    bracket_cmd->add_option("-G", g_text, "second polynomial")->required();
    bracket_cmd->add_flag("--laurent", laurent, "accept negative exponents");
    add_common(bracket_cmd);

    CLI::App* msolve = app.add_subcommand("magnus-solve", "solve the degree-relation constants");
    msolve->add_option("-F", f_text, "F")->required();
    msolve->add_option("-G", g_text, "G")->required();
    msolve->add_option("-w", w_text, "direction u,v");
    msolve->add_option("--mu-max", mu_max, "highest level (default d+e-u-v-1)");
    add_common(msolve);

    CLI::App* mverify = app.add_subcommand("magnus-verify", "verify the degree relation per level");
    mverify->add_option("-F", f_text, "F")->required();
    mverify->add_option("-G", g_text, "G")->required();
    mverify->add_option("-w", w_text, "direction u,v");
    add_common(mverify);

    CLI::App* sqc = app.add_subcommand("sqcomplete", "complete the square at a vertex");
    sqc->add_option("-F", f_text, "F")->required();
    sqc->add_option("-C", c_text, "vertex x,y (default: northeastern vertex)");
    add_common(sqc);

    CLI::App* gb = app.add_subcommand("genbound", "generic-boundaries hypothesis report");
    gb->add_option("-F", f_text, "F")->required();
    gb->add_option("-G", g_text, "G")->required();
    gb->add_option("-a", a, "similarity ratio numerator");
    gb->add_option("-b", b, "similarity ratio denominator");
    add_common(gb);

    CLI::App* vt = app.add_subcommand("verify-thm", "square-completion pipeline verdict");
    vt->add_option("-F", f_text, "F")->required();
    vt->add_option("-G", g_text, "G")->required();
    add_common(vt);

    CLI::App* gp = app.add_subcommand("gen-pair", "generate a seeded test pair");
    gp->add_option("--kind", kind, "jacobian | power")->check(CLI::IsMember({"jacobian", "power"}));
    gp->add_option("--seed", seed, "seed");
    gp->add_option("--steps", steps, "automorphism steps (jacobian)");
    gp->add_option("--degree-bound", degree_bound, "degree bound (jacobian)");
    gp->add_option("--shape", shape_text, "N(P) vertices 'x,y;x,y;...' (power)");
    gp->add_option("--k", kk, "power index k, b = 2k+1 (power)");
    gp->add_option("--u0", u0_text, "planted constant (power)");
    add_common(gp);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (newton->parsed()) {
            LaurentPoly f = parse_poly(f_text, laurent);
            NewtonPolygon n = newton_polygon(f);
            out << "N(F) vertices:";
            for (Point v : n.vertices()) out << " (" << v.x << "," << v.y << ")";
            out << "\n";
            if (!common.json_path.empty()) emit_json(common.json_path, json_polygon(n), out);
            if (!common.svg_path.empty()) write_file(common.svg_path, svg_newton(f));
            return 0;
        }
        if (decomp_cmd->parsed()) {
            LaurentPoly f = parse_poly(f_text, laurent);
            WDecomp d = decompose(f, parse_direction(w_text));
            for (auto it = d.components.rbegin(); it != d.components.rend(); ++it)
                out << "deg " << it->first << ": " << it->second.str() << "\n";
            if (!common.json_path.empty()) emit_json(common.json_path, json_wdecomp(d), out);
            return 0;
        }
        if (bracket_cmd->parsed()) {
            LaurentPoly f = parse_poly(f_text, laurent), g = parse_poly(g_text, laurent);
            LaurentPoly br = bracket(f, g);
            out << br.str() << "\n";
            if (!common.json_path.empty())
                emit_json(common.json_path, Json{{"schema", 1}, {"bracket", br.str()}}, out);
            return 0;
        }
        if (msolve->parsed()) {
            LaurentPoly f = parse_poly(f_text), g = parse_poly(g_text);
            Direction w = parse_direction(w_text);
            MagnusCoeffs mc = mu_max == -2 ? magnus_solve(f, g, w) : magnus_solve(f, g, w, mu_max);
            for (std::size_t i = 0; i < mc.coeffs.size(); ++i)
                out << "c'_" << i << " = " << mc.coeffs[i].get_str()
                    << (mc.forced_zero[i] ? "  (forced zero)" : "") << "\n";
            if (!common.json_path.empty()) emit_json(common.json_path, json_magnus(mc), out);
            return 0;
        }
        if (mverify->parsed()) {
            LaurentPoly f = parse_poly(f_text), g = parse_poly(g_text);
            MagnusReport rep = verify_magnus(f, g, parse_direction(w_text));
            for (const MagnusLevel& lv : rep.levels)
                out << "mu=" << lv.mu << " " << pass_str(lv.pass) << "\n";
            out << "overall " << pass_str(rep.all_pass) << "\n";
            if (!common.json_path.empty()) emit_json(common.json_path, json_magnus_report(rep), out);
            return rep.all_pass ? 0 : 1;
        }
        if (sqc->parsed()) {
            LaurentPoly f = parse_poly(f_text);
            Point c = c_text.empty() ? northeastern_vertex(newton_polygon(f)) : parse_point(c_text);
            SquareCompletion sq = complete_square(f, c);
            out << "P = " << sq.P.str() << "\n";
            out << "R = " << sq.R.str() << "\n";
            if (!common.json_path.empty()) emit_json(common.json_path, json_square(sq), out);
            return 0;
        }
        if (gb->parsed()) {
            LaurentPoly f = parse_poly(f_text), g = parse_poly(g_text);
            PairHypotheses h = generic_boundaries(f, g, a, b);
            out << "generic boundaries: " << pass_str(h.generic_boundaries_ok) << "\n";
            if (!common.json_path.empty()) emit_json(common.json_path, json_hypotheses(h), out);
            return h.generic_boundaries_ok ? 0 : 1;
        }
        if (vt->parsed()) {
            LaurentPoly f = parse_poly(f_text), g = parse_poly(g_text);
            NewtonPolygon n = newton_polygon(f);
            PipelineVerdict v;
            bool rectangle = n.size() == 4 && n.vertices()[1].y == 0 && n.vertices()[3].x == 0;
            v = rectangle ? rectangle_pipeline(f, g) : theorem_pipeline(f, g);
            for (const SweepEntry& e : v.swept) out << e.label << " " << pass_str(e.ok) << "\n";
            bool ok = v.conclusion == PipelineVerdict::Conclusion::r_constant;
            out << "verdict: "
                << (ok ? "R_constant"
                       : (v.conclusion == PipelineVerdict::Conclusion::violation ? "violation"
                                                                                 : "declined"))
                << (v.detail.empty() ? "" : " (" + v.detail + ")") << "\n";
            if (!common.json_path.empty()) emit_json(common.json_path, json_verdict(v), out);
            if (!common.svg_path.empty() && v.generic_ok) {
                ParallelogramDecomp dec =
                    build_decomposition(n, northeastern_vertex(n));
                std::vector<Point> sweep_support = support(f);
                for (Point p : support(v.R)) sweep_support.push_back(p);
                write_file(common.svg_path,
                           svg_sweep(dec, enumerate_broken_lines(dec, sweep_support)));
            }
            return ok ? 0 : 1;
        }
        if (gp->parsed()) {
            if (kind == "jacobian") {
                auto [f, g] = gen_jacobian_pair(seed, static_cast<int>(steps), degree_bound);
                out << "F = " << f.str() << "\n";
                out << "G = " << g.str() << "\n";
                if (!common.json_path.empty())
                    emit_json(common.json_path,
                              Json{{"schema", 1}, {"F", f.str()}, {"G", g.str()}}, out);
            } else {
                std::vector<Point> shape =
                    shape_text.empty() ? std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}
                                       : parse_shape(shape_text);
                PowerPair pp = u0_text.empty()
                                   ? gen_power_pair(seed, shape, kk)
                                   : gen_power_pair(seed, shape, kk,
                                                    Rat(parse_poly(u0_text).constant_term()));
                out << "F = " << pp.F.str() << "\n";
                out << "G = " << pp.G.str() << "\n";
                out << "P = " << pp.P.str() << "\n";
                out << "u0 = " << pp.u0.get_str() << "\n";
                if (!common.json_path.empty())
                    emit_json(common.json_path,
                              Json{{"schema", 1},
                                   {"F", pp.F.str()},
                                   {"G", pp.G.str()},
                                   {"P", pp.P.str()},
                                   {"u0", pp.u0.get_str()}},
                              out);
            }
            return 0;
        }
    } catch (const error& e) {
        err << "error [" << e.code_name() << "]: " << e.what() << "\n";
        if (e.code() == errc::syntax_error || e.code() == errc::negative_exponent) return 2;
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace jacpair
