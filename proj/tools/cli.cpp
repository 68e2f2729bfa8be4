#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "gcg/develop.hpp"
#include "gcg/examples.hpp"
#include "gcg/flats.hpp"
#include "gcg/gcog.hpp"
#include "gcg/smallcancel.hpp"
#include "gcg/wise.hpp"

namespace gcg {
namespace {

struct Input {
    std::string bytes;
    json doc;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << text;
}

Input load_json(const std::string& path)
{
    Input in;
    in.bytes = read_file(path);
    try {
        in.doc = json::parse(in.bytes);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": malformed JSON at byte " + std::to_string(e.byte));
    }
    return in;
}

std::string digest(const std::string& bytes)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
    return std::string("fnv1a64:") + buf;
}

// Loads and validates; an invalid complex is an input error for every
// command except validate.
GC load_valid(const std::string& path)
{
    auto in = load_json(path);
    GC gc = gc_from_json(in.doc);
    auto rep = validate(gc);
    rep.merge(check_convention(gc.poset));
    if (!rep.ok())
        throw InputError(path + ": invalid complex (" + rep.issues.front().code + "): " +
                         rep.issues.front().message);
    return gc;
}

Axial parse_axial(const std::string& s)
{
    Axial a;
    char comma = 0;
    std::istringstream ss(s);
    if (!(ss >> a.q >> comma >> a.r) || comma != ',' || !ss.eof())
        throw InputError("expected 'q,r', got '" + s + "'");
    return a;
}

std::pair<int, int> parse_patch(const std::string& s)
{
    int w = 0, h = 0;
    char x = 0;
    std::istringstream ss(s);
    if (!(ss >> w >> x >> h) || (x != 'x' && x != 'X') || !ss.eof() || w < 1 || h < 1)
        throw InputError("expected patch size 'WxH', got '" + s + "'");
    return {w, h};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int exit_for(bool pass) { return pass ? kExitPass : kExitVerdictFail; }

int exit_for(VerdictKind k)
{
    switch (k) {
    case VerdictKind::Hyperbolic:
    case VerdictKind::FlatFound: return kExitPass;
    case VerdictKind::Inconclusive: return kExitVerdictFail;
    case VerdictKind::OutOfTheory: return kExitOutOfTheory;
    }
    return kExitVerdictFail;
}

json with_scope(const Certificate& c, const std::string& scope, int radius = -1)
{
    json j = c.to_json();
    j["scope"] = scope;
    if (radius >= 0) {
        j["radius"] = radius;
        j["interior_only"] = true;
    }
    return j;
}

Certificate report_certificate(const std::string& name, const ValidationReport& r)
{
    Certificate c;
    c.name = name;
    c.verdict = r.ok();
    if (!r.ok())
        c.witness = r.issues.front().witness;
    c.details = r.to_json();
    return c;
}

// ---- commands -------------------------------------------------------------

int cmd_validate(const std::string& path, const std::string& dot, std::ostream& out)
{
    auto in = load_json(path);
    json res{{"command", "validate"}, {"input_digest", digest(in.bytes)}};
    if (!in.doc.is_object() || !in.doc.contains("poset"))
        throw InputError(path + ": complex object needs a 'poset'");
    auto data_rep = validate_poset_data(poset_data_from_json(in.doc.at("poset")));
    if (!data_rep.ok()) {
        res["ok"] = false;
        res["report"] = data_rep.to_json();
        emit(out, res);
        return kExitVerdictFail;
    }
    GC gc = gc_from_json(in.doc);
    auto rep = check_convention(gc.poset);
    rep.merge(validate(gc));
    res["ok"] = rep.ok();
    res["report"] = rep.to_json();
    if (!dot.empty())
        write_file(dot, to_dot(gc.poset));
    emit(out, res);
    return exit_for(rep.ok());
}

int cmd_huge(const std::string& path, std::optional<int> k, std::ostream& out)
{
    GC gc = load_valid(path);
    json res{{"command", "huge"}, {"hugeness", hugeness(gc.poset)}};
    auto g = poset_girth(gc.poset);
    res["realisation_girth"] = g ? json(*g) : json(nullptr);
    if (!k) {
        emit(out, res);
        return kExitPass;
    }
    auto c = check_huge(gc.poset, *k);
    res["certificate"] = c.to_json();
    emit(out, res);
    return exit_for(c.verdict);
}

int cmd_triples(const std::string& path, bool all, std::ostream& out)
{
    GC gc = load_valid(path);
    auto t = find_proper_triple(gc);
    json res{{"command", "triples"}, {"proper_triple", t ? t->to_json(gc) : json(nullptr)}};
    if (all) {
        json per = json::array();
        for (int w = gc.poset.small_count(); w < gc.poset.size(); ++w) {
            auto tw = find_proper_triple_at(gc, w);
            per.push_back({{"big", gc.poset.id(w)}, {"witness", tw ? tw->to_json(gc) : json(nullptr)}});
        }
        res["per_big"] = per;
    }
    emit(out, res);
    return exit_for(!t);
}

int cmd_t4(const std::string& path, std::ostream& out)
{
    GC gc = load_valid(path);
    auto c = check_t4(gc);
    emit(out, {{"command", "t4"}, {"certificate", c.to_json()}});
    return exit_for(c.verdict);
}

int cmd_links(const std::string& path, const std::string& angles, std::optional<int> radius,
              std::ostream& out)
{
    GC gc = load_valid(path);
    auto a = angles_by_name(angles);
    auto c = check_link_condition(gc, a);
    json res{{"command", "links"}, {"certificate", c.to_json()}};
    bool pass = c.verdict;
    if (radius) {
        auto ball = develop_ball(gc, *radius);
        auto bc = check_link_condition(ball, a);
        res["ball_certificate"] = with_scope(bc, "ball", *radius);
        pass = pass && bc.verdict;
    }
    emit(out, res);
    return exit_for(pass);
}

int cmd_classify(const std::string& path, const std::string& patch, bool no_flat, std::ostream& out)
{
    GC gc = load_valid(path);
    ClassifyOptions opts;
    std::tie(opts.flat_width, opts.flat_height) = parse_patch(patch);
    opts.attempt_flat = !no_flat;
    auto v = classify(gc, opts);
    json res = v.to_json();
    res["command"] = "classify";
    emit(out, res);
    return exit_for(v.kind);
}

DevelopOptions focus_options(const GC& gc, const std::vector<std::string>& words, long long max_cells)
{
    DevelopOptions o;
    for (const auto& w : words)
        o.focus.push_back(parse_word(gc, w));
    o.max_cells = static_cast<std::size_t>(max_cells);
    return o;
}

json ball_summary(const DevelopedBall& ball)
{
    int sat = 0, interior = 0;
    for (int X = 0; X < ball.instance_count(); ++X)
        sat += ball.saturated(X);
    for (int c = 0; c < ball.cell_count(); ++c)
        interior += ball.cell_interior(c);
    return {{"radius", ball.radius()},
            {"focused", ball.focused()},
            {"cells", ball.cell_count()},
            {"instances", ball.instance_count()},
            {"saturated_instances", sat},
            {"interior_cells", interior}};
}

int cmd_develop(const std::string& path, int radius, const std::string& out_path,
                const std::vector<std::string>& focus, const std::string& dot, long long max_cells,
                std::ostream& out)
{
    GC gc = load_valid(path);
    auto ball = develop_ball(gc, radius, focus_options(gc, focus, max_cells));
    auto links = check_links(ball);
    auto colour = check_type_coloring(ball);
    auto geo = check_geodesic_completeness(ball);
    json res{{"command", "develop"},
             {"ball", ball_summary(ball)},
             {"checks",
              {report_certificate("links", links).to_json(), report_certificate("type_coloring", colour).to_json(),
               report_certificate("geodesic_completeness", geo).to_json()}}};
    if (out_path.empty())
        res["development"] = ball.to_json();
    else
        write_file(out_path, ball.to_json().dump() + "\n");
    if (!dot.empty())
        write_file(dot, ball.to_dot());
    emit(out, res);
    return exit_for(links.ok() && colour.ok() && geo.ok());
}

int cmd_resolve(const std::string& path, const std::string& word, std::optional<int> radius,
                std::ostream& out)
{
    GC gc = load_valid(path);
    GroupWord w = parse_word(gc, word);
    int r = radius ? *radius : static_cast<int>(w.size()) + 1;
    DevelopOptions o;
    o.focus = {w};
    auto ball = develop_ball(gc, r, o);
    auto rr = resolve_word(ball, w);
    json res{{"command", "resolve"},
             {"word", word_to_json(gc, w)},
             {"radius", r},
             {"resolved", rr.ok},
             {"cell", rr.cell}};
    if (rr.ok)
        res["cell_dist"] = ball.cell_dist(rr.cell);
    else
        res["failed_letter"] = rr.failed_letter;
    emit(out, res);
    return exit_for(rr.ok);
}

int cmd_wise(const std::string& path, int radius, std::optional<int> large, bool cut, bool retri,
             const std::string& dot, std::ostream& out)
{
    GC gc = load_valid(path);
    auto ball = develop_ball(gc, radius);
    auto n = build_nerve(ball);
    auto d = nerve_dimension(n, ball);
    json res{{"command", "wise"},
             {"ball", ball_summary(ball)},
             {"nerve",
              {{"vertices", n.vertices},
               {"maximal_simplices", n.maximal.size()},
               {"edges", n.skeleton.edge_count()},
               {"dimension",
                {{"observed", d.observed},
                 {"formula", d.formula},
                 {"agrees", d.agrees},
                 {"lower_bound_only", d.lower_bound_only}}}}}};
    bool pass = d.agrees;
    if (large) {
        auto c = check_k_largeness(n, *large);
        res["largeness"] = with_scope(c, "ball", radius);
        pass = pass && c.verdict;
    }
    if (cut) {
        auto t = find_cut_up_tetrahedron(n);
        res["cut_up_tetrahedron"] = t ? t->to_json() : json(nullptr);
        pass = pass && !t;
    }
    if (retri) {
        auto r = retriangulate_valence2(ball);
        res["retriangulation"] = with_scope(r.certificate, "ball", radius);
        pass = pass && r.certificate.verdict;
    }
    if (!dot.empty())
        write_file(dot, n.to_dot());
    emit(out, res);
    return exit_for(pass);
}

int cmd_pieces(const std::string& path, int radius, bool list, std::ostream& out)
{
    GC gc = load_valid(path);
    auto ball = develop_ball(gc, radius);
    auto ps = enumerate_pieces(ball);
    std::map<int, int> hist;
    int longest = 0;
    for (const auto& p : ps) {
        ++hist[p.length()];
        longest = std::max(longest, p.length());
    }
    json h = json::object();
    for (auto [len, cnt] : hist)
        h[std::to_string(len)] = cnt;
    json res{{"command", "pieces"},
             {"ball", ball_summary(ball)},
             {"count", ps.size()},
             {"max_length", longest},
             {"length_histogram", h}};
    if (list) {
        json arr = json::array();
        for (const auto& p : ps)
            arr.push_back(p.to_json(gc));
        res["pieces"] = arr;
    }
    emit(out, res);
    return exit_for(longest <= 2);
}

int cmd_ck(const std::string& path, int k, int radius, bool all_cycles, std::ostream& out)
{
    GC gc = load_valid(path);
    auto ball = develop_ball(gc, radius);
    CkOptions o;
    o.all_cycles = all_cycles;
    auto c = check_ck(ball, k, o);
    emit(out, {{"command", "ck"}, {"ball", ball_summary(ball)}, {"certificate", with_scope(c, "ball", radius)}});
    return exit_for(c.verdict);
}

struct FlatRun {
    json result;
    bool pass = false;
};

FlatRun run_flat(const GC& gc, int w, int h, int base, const std::string& svg)
{
    FlatRun fr;
    auto cover = recognise_hex_torus(gc);
    if (!cover) {
        fr.result = {{"recognised", false}, {"reason", "not a locally Klein-four hexagonal torus complex"}};
        return fr;
    }
    auto patch = build_hex_patch(w, h, &*cover);
    if (base < 0 || base >= static_cast<int>(patch.hexagons.size()))
        throw InputError("base hexagon out of range");
    auto lab = label_patch(gc, patch, base);
    auto local = verify_consistency(gc, patch, lab);
    auto ball = develop_ball(gc, patch.required_radius(), flat_focus(lab));
    auto consistent = verify_consistency(gc, patch, lab, &ball);
    auto emb = embed_flat(ball, patch, lab);
    auto shape = check_flat_shape(ball, patch, emb.cells);
    json labels = json::array();
    for (const auto& l : lab.label)
        labels.push_back(word_to_string(gc, l));
    fr.result = {{"recognised", true},
                 {"patch", patch.to_json(&gc)},
                 {"labels", labels},
                 {"ball", ball_summary(ball)},
                 {"local_consistency", local.to_json()},
                 {"consistency", consistent.to_json()},
                 {"embedding", emb.certificate.to_json()},
                 {"shape", shape.to_json()}};
    fr.pass = local.verdict && consistent.verdict && emb.certificate.verdict && shape.verdict;
    if (!svg.empty())
        write_file(svg, patch_to_svg(gc, patch, &lab));
    return fr;
}

int cmd_flat(const std::string& path, const std::string& patch, int base, const std::string& svg,
             std::ostream& out)
{
    GC gc = load_valid(path);
    auto [w, h] = parse_patch(patch);
    auto fr = run_flat(gc, w, h, base, svg);
    fr.result["command"] = "flat";
    emit(out, fr.result);
    return exit_for(fr.pass);
}

struct ExampleArgs {
    std::string family;
    int n = 6, m = 3;
    std::vector<std::string> groups;  // "v=order"
    std::vector<std::string> edges;   // "a-b:m"
    std::string t1, t2, start = "0,0";
    int direction = 0;
    std::string out;
};

GC build_example(const ExampleArgs& a, std::vector<std::string>& warnings)
{
    if (a.family == "product" || a.family == "graphical-product") {
        auto q = cycle_poset(a.n);
        std::map<std::string, GroupPtr> gs;
        for (int v = 0; v < q.small_count(); ++v)
            gs[q.id(v)] = cyclic(2);
        for (const auto& g : a.groups) {
            auto eq = g.find('=');
            if (eq == std::string::npos)
                throw InputError("expected 'vertex=order', got '" + g + "'");
            auto id = g.substr(0, eq);
            if (!gs.count(id))
                throw InputError("unknown small vertex '" + id + "'");
            gs[id] = cyclic(std::stoi(g.substr(eq + 1)));
        }
        return gen_graphical_product(q, gs, &warnings);
    }
    if (a.family == "racg-cycle")
        return gen_racg_cycle(a.n);
    if (a.family == "racg-bipartite")
        return gen_racg_bipartite(a.n, a.m);
    if (a.family == "coxeter") {
        std::vector<std::string> vs;
        std::vector<CoxeterEdge> es;
        if (a.edges.empty()) {
            for (int i = 0; i < a.n; ++i)
                vs.push_back("s" + std::to_string(i));
            for (int i = 0; i < a.n; ++i)
                es.push_back({vs[i], vs[(i + 1) % a.n], a.m});
        } else {
            std::set<std::string> seen;
            for (const auto& e : a.edges) {
                auto dash = e.find('-'), colon = e.find(':');
                if (dash == std::string::npos || colon == std::string::npos || colon < dash)
                    throw InputError("expected 'a-b:m', got '" + e + "'");
                CoxeterEdge ce{e.substr(0, dash), e.substr(dash + 1, colon - dash - 1), std::stoi(e.substr(colon + 1))};
                for (const auto& v : {ce.a, ce.b})
                    if (seen.insert(v).second)
                        vs.push_back(v);
                es.push_back(ce);
            }
        }
        return gen_coxeter_nerve(vs, es);
    }
    if (a.family == "klein-torus") {
        if (a.t1.empty() != a.t2.empty())
            throw InputError("give both --t1 and --t2 or neither");
        return a.t1.empty() ? gen_klein_four_torus() : gen_klein_four_torus(parse_axial(a.t1), parse_axial(a.t2));
    }
    if (a.family == "torus-double") {
        Axial t1 = a.t1.empty() ? Axial{3, 0} : parse_axial(a.t1);
        Axial t2 = a.t2.empty() ? Axial{0, 3} : parse_axial(a.t2);
        return gen_torus_double(t1, t2, a.direction, parse_axial(a.start));
    }
    throw InputError("unknown family '" + a.family +
                     "' (product or graphical-product, racg-cycle, racg-bipartite, coxeter, klein-torus, torus-double)");
}

int cmd_example(const ExampleArgs& a, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> warnings;
    GC gc = build_example(a, warnings);
    for (const auto& w : warnings)
        err << "warning: " << w << '\n';
    json j = gc_to_json(gc);
    if (a.out.empty())
        emit(out, j);
    else
        write_file(a.out, j.dump(2) + "\n");
    return kExitPass;
}

// ---- report ---------------------------------------------------------------

struct ReportArgs {
    std::string path;
    int radius = 3;
    std::string angles;
    long long max_cells = 2'000'000;
    std::string patch = "2x2";
};

int cmd_report(const ReportArgs& a, std::ostream& out)
{
    auto in = load_json(a.path);
    GC gc = gc_from_json(in.doc);
    json rep{{"tool", "gcg"},
             {"input_digest", digest(in.bytes)},
             {"parameters",
              {{"radius", a.radius},
               {"angles", a.angles.empty() ? json("all") : json(a.angles)},
               {"max_cells", a.max_cells},
               {"patch", a.patch}}}};
    json commands = json::array(), certs = json::array(), unknowns = json::array(),
         skipped = json::array();

    commands.push_back("validate");
    auto vrep = check_convention(gc.poset);
    vrep.merge(validate(gc));
    certs.push_back(with_scope(report_certificate("valid", vrep), "complex"));
    if (!vrep.ok()) {
        rep["commands"] = commands;
        rep["certificates"] = certs;
        out << rep.dump(2) << '\n';
        return kExitInputError;
    }

    commands.push_back("huge");
    int k = hugeness(gc.poset);
    rep["hugeness"] = k;
    certs.push_back(with_scope(check_huge(gc.poset, 6), "complex"));

    commands.push_back("links");
    std::vector<std::string> names = a.angles.empty() ? angle_names() : std::vector<std::string>{a.angles};
    for (const auto& name : names) {
        auto c = check_link_condition(gc, angles_by_name(name));
        c.name += "[" + name + "]";
        certs.push_back(with_scope(std::move(c), "complex"));
    }
    certs.push_back(with_scope(cat_minus_one_certificate(gc), "complex"));

    commands.push_back("triples");
    certs.push_back(with_scope(check_t4(gc), "complex"));

    commands.push_back("develop");
    std::optional<DevelopedBall> ball;
    DevelopOptions dopt;
    dopt.max_cells = static_cast<std::size_t>(a.max_cells);
    for (int r = a.radius; r >= 0 && !ball; --r) {
        try {
            ball = develop_ball(gc, r, dopt);
        } catch (const ResourceError& e) {
            unknowns.push_back({{"section", "develop"}, {"radius", r}, {"reason", e.what()}});
        }
    }
    int R = ball->radius();
    rep["development"] = ball_summary(*ball);
    rep["development"]["requested_radius"] = a.radius;
    certs.push_back(with_scope(report_certificate("links_match_local_developments", check_links(*ball)), "ball", R));
    certs.push_back(with_scope(report_certificate("type_coloring", check_type_coloring(*ball)), "ball", R));
    certs.push_back(
        with_scope(report_certificate("geodesic_completeness", check_geodesic_completeness(*ball)), "ball", R));

    commands.push_back("pieces");
    auto ps = enumerate_pieces(*ball);
    int longest = 0;
    for (const auto& p : ps)
        longest = std::max(longest, p.length());
    rep["pieces"] = {{"count", ps.size()}, {"max_length", longest}};
    commands.push_back("ck");
    if (k >= 2)
        certs.push_back(with_scope(check_ck(*ball, k, {}), "ball", R));
    else
        skipped.push_back({{"section", "ck"}, {"reason", "poset has no cycles"}});

    commands.push_back("wise");
    auto n = build_nerve(*ball);
    auto d = nerve_dimension(n, *ball);
    rep["nerve"] = {{"vertices", n.vertices},
                    {"maximal_simplices", n.maximal.size()},
                    {"dimension",
                     {{"observed", d.observed},
                      {"formula", d.formula},
                      {"agrees", d.agrees},
                      {"lower_bound_only", d.lower_bound_only}}}};
    if (k >= 6)
        certs.push_back(with_scope(check_k_largeness(n, k), "ball", R));
    else
        skipped.push_back({{"section", "largeness"}, {"reason", "poset is not 6-huge"}});
    auto cut = find_cut_up_tetrahedron(n);
    rep["cut_up_tetrahedron"] = cut ? cut->to_json() : json(nullptr);

    bool valence2 = true;
    for (int v = 0; v < gc.poset.small_count(); ++v)
        valence2 = valence2 && gc.poset.valence(v) == 2;
    if (valence2) {
        commands.push_back("retriangulate");
        certs.push_back(with_scope(retriangulate_valence2(*ball).certificate, "ball", R));
    } else {
        skipped.push_back({{"section", "retriangulate"}, {"reason", "a small vertex has valence other than 2"}});
    }

    auto [w, h] = parse_patch(a.patch);
    if (recognise_hex_torus(gc)) {
        commands.push_back("flat");
        try {
            rep["flat"] = run_flat(gc, w, h, 0, "").result;
        } catch (const ResourceError& e) {
            unknowns.push_back({{"section", "flat"}, {"reason", e.what()}});
        }
    } else {
        skipped.push_back({{"section", "flat"}, {"reason", "not a hexagonal torus complex"}});
    }

    commands.push_back("classify");
    ClassifyOptions copt;
    copt.flat_width = w;
    copt.flat_height = h;
    Verdict v;
    try {
        v = classify(gc, copt);
        rep["verdict"] = v.to_json();
    } catch (const ResourceError& e) {
        unknowns.push_back({{"section", "classify"}, {"reason", e.what()}});
        v.kind = VerdictKind::Inconclusive;
        rep["verdict"] = {{"verdict", "Unknown"}};
    }

    rep["commands"] = commands;
    rep["certificates"] = certs;
    rep["unknowns"] = unknowns;
    rep["skipped"] = skipped;
    out << rep.dump(2) << '\n';
    return exit_for(v.kind);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Graphical complexes of groups: validation, development and curvature certificates", "gcg"};
    app.require_subcommand(1);

    std::string path, dot, svg, out_path, angles = "c6", patch = "2x2", word;
    std::optional<int> k_opt, radius_opt, large;
    int k = 6, radius = 3, base = 0;
    long long max_cells = 8'000'000;
    bool all = false, no_flat = false, cut = false, retri = false, list = false;
    std::vector<std::string> focus;
    ExampleArgs ex;
    ReportArgs ra;

    auto* validate_cmd = app.add_subcommand("validate", "Check the poset convention and complex axioms");
    validate_cmd->add_option("file,--in", path)->required();
    validate_cmd->add_option("--dot", dot, "Write the poset as DOT");

    auto* huge_cmd = app.add_subcommand("huge", "Hugeness of the poset, or a k-huge certificate");
    huge_cmd->add_option("file,--in", path)->required();
    huge_cmd->add_option("--k", k_opt);

    auto* triples_cmd = app.add_subcommand("triples", "Search for a proper triple (exit 1 if found)");
    triples_cmd->add_option("file,--in", path)->required();
    triples_cmd->add_flag("--all", all, "Report a witness per big vertex");

    auto* t4_cmd = app.add_subcommand("t4", "T(4) certificate");
    t4_cmd->add_option("file,--in", path)->required();

    auto* links_cmd = app.add_subcommand("links", "Link condition for an angle assignment");
    links_cmd->add_option("file,--in", path)->required();
    links_cmd->add_option("--angles", angles)->check(CLI::IsMember(angle_names()));
    links_cmd->add_option("--radius", radius_opt, "Also check the links of a developed ball");

    auto* classify_cmd = app.add_subcommand("classify", "Hyperbolic / FlatFound / Inconclusive / OutOfTheory");
    classify_cmd->add_option("file,--in", path)->required();
    classify_cmd->add_option("--patch", patch, "Flat patch size WxH");
    classify_cmd->add_flag("--no-flat", no_flat, "Skip the flat construction");

    auto* develop_cmd = app.add_subcommand("develop", "Develop a ball of the Basic Construction");
    develop_cmd->add_option("file,--in", path)->required();
    develop_cmd->add_option("--radius", radius);
    develop_cmd->add_option("--out", out_path, "Write the ball JSON here instead of stdout");
    develop_cmd->add_option("--focus", focus, "Saturate only along these words");
    develop_cmd->add_option("--dot", dot);
    develop_cmd->add_option("--max-cells", max_cells);

    auto* resolve_cmd = app.add_subcommand("resolve", "Resolve a word to a cone-cell");
    resolve_cmd->add_option("file,--in", path)->required();
    resolve_cmd->add_option("--word", word)->required();
    resolve_cmd->add_option("--radius", radius_opt);

    auto* wise_cmd = app.add_subcommand("wise", "Nerve of the cone-cell cover");
    wise_cmd->add_option("file,--in", path)->required();
    wise_cmd->add_option("--radius", radius);
    auto* large_opt = wise_cmd->add_option("--check-large", large, "k-largeness of interior links");
    auto* cut_opt = wise_cmd->add_flag("--cut-up-tetra", cut, "Search for a cut-up tetrahedron (exit 1 if found)");
    auto* retri_opt = wise_cmd->add_flag("--retriangulate", retri, "Retriangulate valence-2 smalls");
    large_opt->excludes(cut_opt)->excludes(retri_opt);
    cut_opt->excludes(retri_opt);
    wise_cmd->add_option("--dot", dot);

    auto* pieces_cmd = app.add_subcommand("pieces", "Enumerate pieces");
    pieces_cmd->add_option("file,--in", path)->required();
    pieces_cmd->add_option("--radius", radius);
    pieces_cmd->add_flag("--list", list);

    auto* ck_cmd = app.add_subcommand("ck", "C(k) small cancellation");
    ck_cmd->add_option("file,--in", path)->required();
    ck_cmd->add_option("--k", k);
    ck_cmd->add_option("--radius", radius);
    ck_cmd->add_flag("--all-cycles", all);

    auto* flat_cmd = app.add_subcommand("flat", "Hexagonal flat construction");
    flat_cmd->add_option("file,--in", path)->required();
    flat_cmd->add_option("--patch", patch);
    flat_cmd->add_option("--base", base, "Base hexagon index");
    flat_cmd->add_option("--svg", svg);

    auto* example_cmd = app.add_subcommand("example", "Generate an example complex");
    example_cmd->add_option("family", ex.family)->required();
    example_cmd->add_option("--n", ex.n);
    example_cmd->add_option("--m", ex.m);
    example_cmd->add_option("--group", ex.groups, "product: vertex=order (cyclic)");
    example_cmd->add_option("--edge", ex.edges, "coxeter: a-b:m");
    example_cmd->add_option("--t1", ex.t1);
    example_cmd->add_option("--t2", ex.t2);
    example_cmd->add_option("--direction", ex.direction);
    example_cmd->add_option("--start", ex.start);
    example_cmd->add_option("--out", ex.out);

    auto* report_cmd = app.add_subcommand("report", "Full pipeline report");
    report_cmd->add_option("file,--in", ra.path)->required();
    report_cmd->add_option("--radius", ra.radius);
    report_cmd->add_option("--angles", ra.angles)->check(CLI::IsMember(angle_names()));
    report_cmd->add_option("--max-cells", ra.max_cells);
    report_cmd->add_option("--patch", ra.patch);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (*validate_cmd)
            return cmd_validate(path, dot, out);
        if (*huge_cmd)
            return cmd_huge(path, k_opt, out);
        if (*triples_cmd)
            return cmd_triples(path, all, out);
        if (*t4_cmd)
            return cmd_t4(path, out);
        if (*links_cmd)
            return cmd_links(path, angles, radius_opt, out);
        if (*classify_cmd)
            return cmd_classify(path, patch, no_flat, out);
        if (*develop_cmd)
            return cmd_develop(path, radius, out_path, focus, dot, max_cells, out);
        if (*resolve_cmd)
            return cmd_resolve(path, word, radius_opt, out);
        if (*wise_cmd)
            return cmd_wise(path, radius, large, cut, retri, dot, out);
        if (*pieces_cmd)
            return cmd_pieces(path, radius, list, out);
        if (*ck_cmd)
            return cmd_ck(path, k, radius, all, out);
        if (*flat_cmd)
            return cmd_flat(path, patch, base, svg, out);
        if (*example_cmd)
            return cmd_example(ex, out, err);
        if (*report_cmd)
            return cmd_report(ra, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: bad number: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::out_of_range& e) {
        err << "error: number out of range: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace gcg
