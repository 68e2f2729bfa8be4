#include "gcg/smallcancel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace gcg {

json AngleAssignment::to_json() const
{
    return json{{"name", name},
                {"unit", "pi/420"},
                {"small", small},
                {"big", big},
                {"cone", cone},
                {"small_angle", angle_to_string(small)},
                {"big_angle", angle_to_string(big)},
                {"cone_angle", angle_to_string(cone)},
                {"euclidean", euclidean()}};
}

AngleAssignment angles_by_name(const std::string& name)
{
    constexpr int P = kAngleDenominator;
    if (name == "c6")
        return {name, P / 2, P / 3, P / 6};
    if (name == "c6hyp")
        return {name, P / 2, P / 3, P / 7};
    if (name == "notriple-hyp")
        return {name, P / 2, P / 4, P / 6};
    if (name == "c4t4")
        return {name, P / 2, P / 4, P / 4};
    if (name == "c5t4")
        return {name, P / 2, P / 4, P / 5};
    throw InputError("unknown angle assignment '" + name + "'");
}

std::vector<std::string> angle_names() { return {"c6", "c6hyp", "notriple-hyp", "c4t4", "c5t4"}; }

std::string angle_to_string(long long units)
{
    if (units == 0)
        return "0";
    long long g = std::gcd(units, static_cast<long long>(kAngleDenominator));
    long long num = units / g, den = kAngleDenominator / g;
    std::string s = num == 1 ? "pi" : std::to_string(num) + "pi";
    return den == 1 ? s : s + "/" + std::to_string(den);
}

namespace {

struct LinkCheck {
    std::string kind;
    json where;
    WeightedGraph graph;
    std::vector<json> names;  // per link vertex
};

json check_one(const LinkCheck& L, int threshold, bool& ok, json& witness)
{
    auto c = weighted_shortest_cycle(L.graph);
    json r{{"link", L.kind}, {"at", L.where}};
    r["girth"] = c.length < 0 ? json("infinite") : json(c.length);
    bool pass = c.length < 0 || c.length >= threshold;
    r["pass"] = pass;
    if (!pass && ok) {
        ok = false;
        json cyc = json::array();
        for (int x : c.cycle)
            cyc.push_back(L.names[x]);
        witness = {{"link", L.kind},
                   {"at", L.where},
                   {"cycle", cyc},
                   {"angular_length", c.length},
                   {"angular_length_text", angle_to_string(c.length)}};
    }
    return r;
}

Certificate finish(std::string name, const AngleAssignment& a, int threshold, json links, bool ok,
                   json witness)
{
    Certificate cert;
    cert.name = std::move(name);
    cert.verdict = ok;
    cert.witness = std::move(witness);
    cert.details["angles"] = a.to_json();
    cert.details["threshold"] = threshold;
    cert.details["links"] = std::move(links);
    return cert;
}

}  // namespace

Certificate check_link_condition(const GC& gc, const AngleAssignment& a, int threshold)
{
    const auto& q = gc.poset;
    bool ok = true;
    json witness, links = json::array();

    {
        LinkCheck L{"cone", nullptr, WeightedGraph(q.size()), {}};
        for (int x = 0; x < q.size(); ++x)
            L.names.push_back(q.id(x));
        for (auto [v, w] : q.edges())
            L.graph.add_edge(v, w, a.cone);
        links.push_back(check_one(L, threshold, ok, witness));
    }

    for (int v = 0; v < q.small_count(); ++v) {
        // Join of the bigs above v with |G_v| cone points.
        const auto& up = q.nbrs(v);
        int n = static_cast<int>(up.size()), m = gc.order(v);
        LinkCheck L{"small", q.id(v), WeightedGraph(n + m), {}};
        for (int w : up)
            L.names.push_back(q.id(w));
        for (int g = 0; g < m; ++g)
            L.names.push_back(json{{"cone", g}});
        for (int i = 0; i < n; ++i)
            for (int g = 0; g < m; ++g)
                L.graph.add_edge(i, n + g, a.small);
        links.push_back(check_one(L, threshold, ok, witness));
    }

    for (int w = q.small_count(); w < q.size(); ++w) {
        // Coset graph: cone points G_w, one node per coset g psi(G_v).
        const auto& G = gc.group(w);
        LinkCheck L{"big", q.id(w), WeightedGraph(G.order()), {}};
        for (int g = 0; g < G.order(); ++g)
            L.names.push_back(json{{"cone", g}});
        for (int v : q.nbrs(w)) {
            auto img = image_set(gc.psi(v, w));
            std::map<std::vector<int>, int> coset_node;
            for (int g = 0; g < G.order(); ++g) {
                std::vector<int> coset;
                for (int h : img)
                    coset.push_back(G.mul(g, h));
                std::sort(coset.begin(), coset.end());
                auto [it, fresh] = coset_node.try_emplace(coset, L.graph.n);
                if (fresh) {
                    L.graph.adj.emplace_back();
                    ++L.graph.n;
                    L.names.push_back(json{{"small", q.id(v)}, {"coset", coset}});
                }
                L.graph.add_edge(g, it->second, a.big);
            }
        }
        links.push_back(check_one(L, threshold, ok, witness));
    }
    return finish("link_condition", a, threshold, std::move(links), ok, std::move(witness));
}

Certificate check_link_condition(const DevelopedBall& ball, const AngleAssignment& a, int threshold)
{
    const auto& q = ball.gc().poset;
    bool ok = true;
    json witness, links = json::array();
    auto name_of = [](int node) {
        return node < 0 ? json{{"cell", -node - 1}} : json{{"instance", node}};
    };
    auto weighted = [&](const LinkGraph& L, int weight, std::string kind, json where) {
        LinkCheck C{std::move(kind), std::move(where), WeightedGraph(L.graph.n), {}};
        for (int u = 0; u < L.graph.n; ++u)
            for (int v : L.graph.adj[u])
                if (u < v)
                    C.graph.add_edge(u, v, weight);
        for (int node : L.node)
            C.names.push_back(name_of(node));
        return C;
    };
    int saturated = 0;
    for (int c = 0; c < ball.cell_count(); ++c)
        links.push_back(check_one(weighted(cone_link(ball, c), a.cone, "cone", json{{"cell", c}}),
                                  threshold, ok, witness));
    for (int X = 0; X < ball.instance_count(); ++X) {
        if (!ball.saturated(X))
            continue;
        ++saturated;
        bool small = q.is_small(ball.inst_type(X));
        links.push_back(check_one(weighted(instance_link(ball, X), small ? a.small : a.big,
                                           small ? "small" : "big",
                                           json{{"instance", X}, {"type", q.id(ball.inst_type(X))}}),
                                  threshold, ok, witness));
    }
    auto cert = finish("link_condition_ball", a, threshold, std::move(links), ok, std::move(witness));
    cert.details["saturated_instances"] = saturated;
    if (saturated == 0)
        cert.notes.push_back("no saturated instance; only cone links were checked");
    return cert;
}

Certificate cat_minus_one_certificate(const GC& gc)
{
    int k = hugeness(gc.poset);
    bool triple = find_proper_triple(gc).has_value();
    std::string chosen;
    if (k >= 7)
        chosen = "c6hyp";
    else if (k == 6 && !triple)
        chosen = "notriple-hyp";
    else if (k == 5 && !triple)
        chosen = "c5t4";

    if (chosen.empty()) {
        Certificate c;
        c.name = "cat_minus_one";
        c.verdict = false;
        c.details["status"] = "NotApplicable";
        c.details["hugeness"] = k;
        c.details["proper_triple"] = triple;
        return c;
    }
    auto c = check_link_condition(gc, angles_by_name(chosen));
    c.name = "cat_minus_one";
    c.details["status"] = c.verdict ? "certified" : "failed";
    c.details["hugeness"] = k;
    c.details["proper_triple"] = triple;
    return c;
}

json Piece::to_json(const GC& gc) const
{
    json t = json::array();
    for (int x : types)
        t.push_back(gc.poset.id(x));
    return json{{"cells", {cell_a, cell_b}}, {"types", t}, {"instances", instances}, {"length", length()}};
}

namespace {

// Poset vertices whose instance is shared by the two cells.
std::vector<char> shared_types(const DevelopedBall& ball, int a, int b)
{
    std::vector<char> s(ball.types());
    for (int x = 0; x < ball.types(); ++x)
        s[x] = ball.inst(a, x) == ball.inst(b, x);
    return s;
}

// Maximal paths (with at least one edge) of the subgraph of Q induced on
// `in`, each reported once with its smaller endpoint first.
std::vector<std::vector<int>> maximal_paths(const OneDimPoset& q, const std::vector<char>& in)
{
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> used(q.size(), 0);
    auto extendable = [&](int end) {
        for (int y : q.nbrs(end))
            if (in[y] && !used[y])
                return true;
        return false;
    };
    std::function<void()> dfs = [&]() {
        int last = path.back();
        bool grew = false;
        for (int y : q.nbrs(last))
            if (in[y] && !used[y]) {
                grew = true;
                used[y] = 1;
                path.push_back(y);
                dfs();
                path.pop_back();
                used[y] = 0;
            }
        if (!grew && path.size() >= 2 && path.front() < path.back() && !extendable(path.front()))
            out.push_back(path);
    };
    for (int s = 0; s < q.size(); ++s)
        if (in[s]) {
            used[s] = 1;
            path.assign(1, s);
            dfs();
            used[s] = 0;
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> pairs_sharing_small(const DevelopedBall& ball)
{
    std::set<std::pair<int, int>> pairs;
    const auto& q = ball.gc().poset;
    for (int X = 0; X < ball.instance_count(); ++X) {
        if (!q.is_small(ball.inst_type(X)))
            continue;
        auto cells = ball.cells_at(X);
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (std::size_t j = i + 1; j < cells.size(); ++j)
                pairs.insert(std::minmax(cells[i], cells[j]));
    }
    return {pairs.begin(), pairs.end()};
}

}  // namespace

std::vector<Piece> enumerate_pieces(const DevelopedBall& ball)
{
    const auto& q = ball.gc().poset;
    std::vector<Piece> out;
    for (auto [a, b] : pairs_sharing_small(ball))
        for (auto& p : maximal_paths(q, shared_types(ball, a, b))) {
            Piece pc{a, b, p, {}};
            for (int x : p)
                pc.instances.push_back(ball.inst(a, x));
            out.push_back(std::move(pc));
        }
    return out;
}

int min_circular_cover(int m, const std::vector<std::pair<int, int>>& arcs)
{
    if (m <= 0)
        return 0;
    for (auto [s, l] : arcs)
        if (l >= m)
            return 1;
    int best = -1;
    for (auto [s0, l0] : arcs) {
        long long end = s0 + m;
        long long reach = s0 + l0;
        int count = 1;
        while (reach < end) {
            long long next = reach;
            for (auto [s, l] : arcs) {
                int d = static_cast<int>(((reach - s) % m + m) % m);
                if (d < l)
                    next = std::max(next, reach + (l - d));
            }
            if (next == reach) {
                count = -1;
                break;
            }
            reach = next;
            ++count;
        }
        if (count > 0 && (best < 0 || count < best))
            best = count;
    }
    return best;
}

Certificate check_ck(const DevelopedBall& ball, int k, const CkOptions& opts)
{
    if (k < 2)
        throw InputError("check_ck needs k >= 2");
    const GC& gc = ball.gc();
    const auto& q = gc.poset;
    Certificate cert;
    cert.name = "C(" + std::to_string(k) + ")";

    auto R = realise(q);
    auto g = shortest_cycle(R.graph);
    int girth = static_cast<int>(g.length);
    int max_len = opts.all_cycles ? q.size() : girth;
    auto cycles = girth < 0 ? std::vector<std::vector<int>>{} :
                              enumerate_cycles(R.graph, max_len, opts.cycle_cap);

    auto pieces = enumerate_pieces(ball);
    int max_piece = 0;
    for (const auto& p : pieces)
        max_piece = std::max(max_piece, p.length());

    // Shared type sets of every pair, grouped by cell.
    std::map<int, std::set<std::vector<char>>> shares;
    for (auto [a, b] : pairs_sharing_small(ball)) {
        auto s = shared_types(ball, a, b);
        shares[a].insert(s);
        shares[b].insert(s);
    }

    int interior = 0, min_pieces = -1;
    bool ok = true;
    json witness;
    for (int c = 0; c < ball.cell_count(); ++c) {
        bool inner = true;
        for (int v = 0; v < q.small_count() && inner; ++v)
            inner = ball.saturated(ball.inst(c, v));
        if (!inner)
            continue;
        ++interior;
        for (const auto& cyc : cycles) {
            int m = static_cast<int>(cyc.size());
            std::vector<std::pair<int, int>> arcs;
            for (const auto& s : shares[c]) {
                // Maximal runs of cycle edges with both ends shared.
                std::vector<char> e(m);
                bool all = true;
                for (int i = 0; i < m; ++i) {
                    e[i] = s[cyc[i]] && s[cyc[(i + 1) % m]];
                    all &= e[i] != 0;
                }
                if (all) {
                    arcs.push_back({0, m});
                    continue;
                }
                for (int i = 0; i < m; ++i)
                    if (e[i] && !e[(i + m - 1) % m]) {
                        int l = 0;
                        while (e[(i + l) % m])
                            ++l;
                        arcs.push_back({i, l});
                    }
            }
            int n = min_circular_cover(m, arcs);
            if (n >= 0 && (min_pieces < 0 || n < min_pieces))
                min_pieces = n;
            if (n >= 0 && n < k && ok) {
                ok = false;
                json ids = json::array();
                for (int x : cyc)
                    ids.push_back(q.id(x));
                witness = {{"cell", c}, {"cycle", ids}, {"pieces", n}};
            }
        }
    }
    cert.verdict = ok && interior > 0;
    cert.witness = witness;
    cert.details["k"] = k;
    cert.details["girth"] = girth;
    cert.details["cycles_checked"] = cycles.size();
    cert.details["interior_cells"] = interior;
    cert.details["pieces"] = pieces.size();
    cert.details["max_piece_length"] = max_piece;
    cert.details["min_pieces_per_cycle"] = min_pieces < 0 ? json("unbounded") : json(min_pieces);
    cert.details["pieces_at_most_2"] = max_piece <= 2;
    // C'(1/(k-1)) needs max piece length / girth < 1/(k-1); reported as a ratio.
    if (girth > 0) {
        int gg = std::gcd(max_piece, girth);
        cert.details["c_prime_ratio"] = {max_piece / std::max(gg, 1), girth / std::max(gg, 1)};
        cert.details["c_prime_ratio_at_most_1_over_k"] = max_piece * k <= girth;
    }
    if (interior == 0)
        cert.notes.push_back("no interior cell; C(k) not certified at this radius");
    if (!opts.all_cycles)
        cert.notes.push_back("cycles of length up to the girth of |Q| checked");
    return cert;
}

}  // namespace gcg
