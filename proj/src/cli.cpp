#include "ainf/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "ainf/report.hpp"
#include "ainf/surface.hpp"

namespace ainf {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitFailed = 3;

Tensor in_view(const Tensor& t, bool mod2) { return mod2 ? t.reduced_mod2() : t; }

std::string word_string(const SurfaceScheme& s) {
    std::string out;
    for (std::size_t i = 0; i < s.word.size(); ++i) {
        if (i) out += ' ';
        out += label(s.word[i].first);
        if (s.word[i].second < 0) out += "^-1";
    }
    return out;
}

struct SweepCase {
    int n = 0;
    int t = 0;
    bool relations_hold = true;
    bool thresholds_ok = true;
    bool split_ok = true;
    bool ok() const { return relations_hold && thresholds_ok && split_ok; }
};

SweepCase sweep_case(int n, int t) {
    SweepCase result{n, t};
    PolygonComplex poly = build_polygon(n, t);
    Coalgebra coalg = poly.coalgebra(n + 1);
    result.relations_hold = verify_structure(coalg, poly.face(), n + 1).holds();

    const int threshold = poly.vanishing_threshold();
    for (int k = 2; k <= threshold + 2; ++k) {
        bool zero = poly.diagonal(k, poly.face()).is_zero();
        if (zero != (k >= threshold)) result.thresholds_ok = false;
    }
    if (t < n) {
        SplitPolygons split = split_polygons(n, t);
        for (int k = 2; k < threshold; ++k) {
            Tensor sum = split.p1.diagonal(k, split.p1.face()) +
                         split.p2.diagonal(k, split.p2.face());
            for (const auto& [w, c] : sum.terms())
                for (const Cell& cell : w.factors)
                    if (cell == split.e0) result.split_ok = false;
            Tensor expected = substitute_face(split.parent.diagonal(k, split.parent.face()),
                                              split.parent.face(), split.p1.face(),
                                              split.p2.face());
            if (sum != expected) result.split_ok = false;
        }
    }
    return result;
}

struct CommonOpts {
    bool json_out = false;
    bool mod2 = false;
};

void add_format_flag(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", [&opts](const std::vector<std::string>& vals) {
        if (vals.empty()) return false;
        if (vals[0] == "json") {
            opts.json_out = true;
            return true;
        }
        if (vals[0] == "text") {
            opts.json_out = false;
            return true;
        }
        return false;
    },
    "output format: text (default) or json");
}

void emit(std::ostream& out, const CommonOpts& opts, const std::string& text,
          const json& doc) {
    if (opts.json_out)
        out << doc.dump(2) << '\n';
    else
        out << text;
}

int run_polygon(std::ostream& out, const CommonOpts& opts, int n, int t, int k,
                bool with_boundary) {
    if (t < 0) t = n;
    PolygonComplex poly = build_polygon(n, t);
    Tensor value = in_view(poly.diagonal(k, poly.face()), opts.mod2);

    std::ostringstream text;
    text << "polygon n=" << n << " t=" << t << (opts.mod2 ? " (mod 2)" : "") << '\n';
    text << "Delta_" << k << "(P) = " << to_text(value) << '\n';

    json results = json::array();
    results.push_back(json{{"cell", label(poly.face())},
                           {"k", k},
                           {"terms", terms_json(value)},
                           {"holds", true}});
    if (with_boundary) {
        for (const Cell& c : poly.cells()) {
            Tensor b = in_view(poly.boundary().at(c), opts.mod2);
            text << "boundary(" << label(c) << ") = " << to_text(b) << '\n';
            results.push_back(json{{"cell", label(c)},
                                   {"k", 1},
                                   {"terms", terms_json(b)},
                                   {"holds", true}});
        }
    }
    json doc{{"command", "polygon"},
             {"params", json{{"n", n}, {"t", t}, {"k", k}, {"mod2", opts.mod2}}},
             {"results", results}};
    emit(out, opts, text.str(), doc);
    return kExitOk;
}

int run_surface(std::ostream& out, const CommonOpts& opts, int genus, bool orientable,
                const std::string& word, int k) {
    const bool from_word = !word.empty();
    SurfaceScheme scheme =
        from_word ? build_scheme_from_word(word) : build_scheme(genus, orientable);

    Tensor projected = in_view(projected_diagonal(scheme, k, scheme.top_cell), opts.mod2);

    std::ostringstream text;
    text << "surface genus=" << scheme.genus
         << (scheme.orientable ? " orientable" : " unorientable")
         << (opts.mod2 ? " (mod 2)" : "") << '\n';
    text << "word: " << word_string(scheme) << '\n';
    text << "Delta_" << k << "(X) [projected] = " << to_text(projected) << '\n';

    json params{{"k", k}, {"mod2", opts.mod2}};
    if (from_word)
        params["word"] = word;
    else {
        params["genus"] = genus;
        params["orientable"] = orientable;
    }
    json results = json::array();

    bool all_hold = true;
    if (scheme.canonical) {
        GradedOperation closed = closed_form_operation(k, scheme.genus, scheme.orientable);
        GradedOperation proj = projected_diagonal_op(scheme, k);
        bool agree = true;
        for (const Cell& c : build_surface(scheme).cells) {
            Tensor a = in_view(proj.at(c), opts.mod2);
            Tensor b = in_view(closed.at(c), opts.mod2);
            if (a != b) agree = false;
        }
        Tensor closed_x = in_view(closed.at(scheme.top_cell), opts.mod2);
        text << "Delta_" << k << "(X) [closed form] = " << to_text(closed_x) << '\n';
        text << "agreement: " << (agree ? "true" : "false") << '\n';
        results.push_back(json{{"cell", "X"},
                               {"k", k},
                               {"route", "projected"},
                               {"terms", terms_json(projected)},
                               {"holds", agree}});
        results.push_back(json{{"cell", "X"},
                               {"k", k},
                               {"route", "closed_form"},
                               {"terms", terms_json(closed_x)},
                               {"holds", agree}});
        all_hold = agree;
    } else {
        results.push_back(json{{"cell", "X"},
                               {"k", k},
                               {"route", "projected"},
                               {"terms", terms_json(projected)},
                               {"holds", true}});
    }

    json doc{{"command", "surface"}, {"params", params}, {"results", results}};
    emit(out, opts, text.str(), doc);
    return all_hold ? kExitOk : kExitFailed;
}

int run_verify(std::ostream& out, const CommonOpts& opts, int n, int t, int genus,
               bool orientable, const std::string& word, int r_max) {
    Coalgebra coalg;
    Cell top;
    std::ostringstream header;
    if (n > 0) {
        if (t < 0) t = n;
        PolygonComplex poly = build_polygon(n, t);
        if (r_max < 0) r_max = n + 1;
        coalg = poly.coalgebra(r_max);
        top = poly.face();
        header << "verify polygon n=" << n << " t=" << t;
    } else {
        SurfaceScheme scheme = word.empty() ? build_scheme(genus, orientable)
                                            : build_scheme_from_word(word);
        if (r_max < 0) r_max = scheme.polygon.n() + 1;
        SurfaceComplex surf = build_surface(scheme);
        coalg = surf.coalgebra();
        top = surf.top_cell;
        header << "verify surface genus=" << scheme.genus
               << (scheme.orientable ? " orientable" : " unorientable");
    }
    const CoefficientView view =
        opts.mod2 ? CoefficientView::mod2 : CoefficientView::integral;
    StructureVerification v = verify_structure(coalg, top, r_max, view);

    std::ostringstream text;
    text << header.str() << " (r up to " << r_max << ")"
         << (opts.mod2 ? " (mod 2)" : "") << '\n';
    json results = json::array();
    for (const RelationReport& r : v.reports) {
        text << to_text(r) << '\n';
        for (auto& entry : report_json(r)) results.push_back(std::move(entry));
    }
    text << "reduced form at " << label(top) << ": "
         << (v.reduced_form_consistent ? "consistent" : "INCONSISTENT") << '\n';
    text << "off-top pieces: "
         << (v.off_top_termwise_zero ? "vanish termwise" : "DO NOT vanish termwise")
         << '\n';
    text << "verdict: " << (v.holds() ? "ok" : "FAILED") << '\n';

    json params{{"r_max", r_max}, {"mod2", opts.mod2}};
    if (n > 0) {
        params["n"] = n;
        params["t"] = t;
    } else if (!word.empty()) {
        params["word"] = word;
    } else {
        params["genus"] = genus;
        params["orientable"] = orientable;
    }
    json doc{{"command", "verify"}, {"params", params}, {"results", results}};
    emit(out, opts, text.str(), doc);
    return v.holds() ? kExitOk : kExitFailed;
}

int run_sweep(std::ostream& out, const CommonOpts& opts, int n_max) {
    if (n_max < 3) throw std::invalid_argument("--n-max must be at least 3");
    std::ostringstream text;
    text << "sweep n up to " << n_max << '\n';
    json results = json::array();
    bool all_ok = true;
    for (int n = 3; n <= n_max; ++n)
        for (int t = 2; t <= n; ++t) {
            SweepCase c = sweep_case(n, t);
            all_ok = all_ok && c.ok();
            text << "n=" << n << " t=" << t << ": " << (c.ok() ? "ok" : "FAILED");
            if (!c.relations_hold) text << " [relations]";
            if (!c.thresholds_ok) text << " [thresholds]";
            if (!c.split_ok) text << " [split]";
            text << '\n';
            results.push_back(json{{"n", n},
                                   {"t", t},
                                   {"relations_hold", c.relations_hold},
                                   {"thresholds_ok", c.thresholds_ok},
                                   {"split_ok", c.split_ok},
                                   {"holds", c.ok()}});
        }
    text << "sweep: " << (all_ok ? "ok" : "FAILED") << '\n';
    json doc{{"command", "sweep"},
             {"params", json{{"n_max", n_max}}},
             {"results", results}};
    emit(out, opts, text.str(), doc);
    return all_ok ? kExitOk : kExitFailed;
}

int run_cup(std::ostream& out, const CommonOpts& opts, int genus, bool orientable,
            const std::string& word) {
    SurfaceScheme scheme = word.empty() ? build_scheme(genus, orientable)
                                        : build_scheme_from_word(word);
    SurfaceComplex surf = build_surface(scheme);
    auto matrix = cup_matrix(surf);

    std::ostringstream text;
    text << "cup genus=" << scheme.genus
         << (scheme.orientable ? " orientable" : " unorientable") << '\n';
    text << "basis:";
    for (const Cell& e : surf.edges) text << ' ' << label(e);
    text << '\n' << matrix_text(matrix);

    json params;
    if (!word.empty())
        params["word"] = word;
    else {
        params["genus"] = genus;
        params["orientable"] = orientable;
    }
    json basis = json::array();
    for (const Cell& e : surf.edges) basis.push_back(label(e));
    json doc{{"command", "cup"},
             {"params", params},
             {"basis", basis},
             {"matrix", matrix}};
    emit(out, opts, text.str(), doc);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact A-infinity coalgebra structures on polygon and surface chains"};
    app.name("ainf");
    app.require_subcommand(1);

    CommonOpts polygon_opts, surface_opts, verify_opts, sweep_opts, cup_opts;

    auto* polygon_cmd = app.add_subcommand("polygon", "print a polygon diagonal");
    int pg_n = 0, pg_t = -1, pg_k = 0;
    bool pg_boundary = false;
    polygon_cmd->add_option("--n", pg_n, "number of sides")->required();
    polygon_cmd->add_option("--t", pg_t, "terminal vertex index (default n)");
    polygon_cmd->add_option("--k", pg_k, "diagonal arity")->required();
    polygon_cmd->add_flag("--boundary", pg_boundary, "also print the boundary operator");
    polygon_cmd->add_flag("--mod2", polygon_opts.mod2, "reduce coefficients mod 2");
    add_format_flag(polygon_cmd, polygon_opts);

    auto* surface_cmd =
        app.add_subcommand("surface", "print projected and closed-form surface diagonals");
    int sf_genus = 0, sf_k = 0;
    bool sf_orientable = false;
    std::string sf_word;
    auto* sf_genus_opt = surface_cmd->add_option("--genus", sf_genus, "genus");
    surface_cmd->add_flag("--orientable", sf_orientable, "orientable surface");
    auto* sf_word_opt =
        surface_cmd->add_option("--word", sf_word, "edge word, e.g. \"a a b b\"");
    surface_cmd->add_option("--k", sf_k, "diagonal arity")->required();
    surface_cmd->add_flag("--mod2", surface_opts.mod2, "reduce coefficients mod 2");
    add_format_flag(surface_cmd, surface_opts);
    sf_word_opt->excludes(sf_genus_opt);

    auto* verify_cmd = app.add_subcommand("verify", "check the structure relations");
    int vf_n = 0, vf_t = -1, vf_genus = 0, vf_rmax = -1;
    bool vf_orientable = false;
    std::string vf_word;
    auto* vf_n_opt = verify_cmd->add_option("--n", vf_n, "polygon sides");
    verify_cmd->add_option("--t", vf_t, "terminal vertex index (default n)");
    auto* vf_genus_opt = verify_cmd->add_option("--genus", vf_genus, "surface genus");
    verify_cmd->add_flag("--orientable", vf_orientable, "orientable surface");
    auto* vf_word_opt = verify_cmd->add_option("--word", vf_word, "surface edge word");
    verify_cmd->add_option("--r-max", vf_rmax, "largest relation index (default n+1)");
    verify_cmd->add_flag("--mod2", verify_opts.mod2, "check defects mod 2");
    add_format_flag(verify_cmd, verify_opts);
    vf_n_opt->excludes(vf_genus_opt);
    vf_n_opt->excludes(vf_word_opt);
    vf_word_opt->excludes(vf_genus_opt);

    auto* sweep_cmd = app.add_subcommand("sweep", "verify the full polygon grid");
    int sw_nmax = 0;
    sweep_cmd->add_option("--n-max", sw_nmax, "largest polygon size")->required();
    add_format_flag(sweep_cmd, sweep_opts);

    auto* cup_cmd = app.add_subcommand("cup", "print the mod-2 cup product matrix");
    int cp_genus = 0;
    bool cp_orientable = false;
    std::string cp_word;
    auto* cp_genus_opt = cup_cmd->add_option("--genus", cp_genus, "genus");
    cup_cmd->add_flag("--orientable", cp_orientable, "orientable surface");
    auto* cp_word_opt = cup_cmd->add_option("--word", cp_word, "surface edge word");
    add_format_flag(cup_cmd, cup_opts);
    cp_word_opt->excludes(cp_genus_opt);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (polygon_cmd->parsed()) return run_polygon(out, polygon_opts, pg_n, pg_t, pg_k, pg_boundary);
        if (surface_cmd->parsed()) {
            if (sf_word.empty() && sf_genus_opt->count() == 0)
                throw std::invalid_argument("surface needs --genus or --word");
            return run_surface(out, surface_opts, sf_genus, sf_orientable, sf_word, sf_k);
        }
        if (verify_cmd->parsed()) {
            if (vf_n_opt->count() == 0 && vf_genus_opt->count() == 0 && vf_word.empty())
                throw std::invalid_argument("verify needs --n, --genus or --word");
            return run_verify(out, verify_opts, vf_n_opt->count() ? vf_n : 0, vf_t,
                              vf_genus, vf_orientable, vf_word, vf_rmax);
        }
        if (sweep_cmd->parsed()) return run_sweep(out, sweep_opts, sw_nmax);
        if (cup_cmd->parsed()) {
            if (cp_word.empty() && cp_genus_opt->count() == 0)
                throw std::invalid_argument("cup needs --genus or --word");
            return run_cup(out, cup_opts, cp_genus, cp_orientable, cp_word);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

}  // namespace ainf
