#include "gcg/wise.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace gcg {

namespace {

void sort_unique(std::vector<int>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Bron-Kerbosch with pivoting; calls f on every maximal clique.
void maximal_cliques(const Graph& g, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> R;
    std::function<void(std::vector<int>, std::vector<int>)> bk = [&](std::vector<int> P, std::vector<int> X) {
        if (P.empty() && X.empty()) {
            f(R);
            return;
        }
        int pivot = !P.empty() ? P[0] : X[0];
        std::size_t best = 0;
        for (const auto* S : {&P, &X})
            for (int u : *S) {
                std::size_t c = 0;
                for (int v : P)
                    c += g.has_edge(u, v);
                if (c >= best) {
                    best = c;
                    pivot = u;
                }
            }
        std::vector<int> cand;
        for (int v : P)
            if (!g.has_edge(pivot, v))
                cand.push_back(v);
        for (int v : cand) {
            std::vector<int> P2, X2;
            for (int u : P)
                if (g.has_edge(v, u))
                    P2.push_back(u);
            for (int u : X)
                if (g.has_edge(v, u))
                    X2.push_back(u);
            R.push_back(v);
            bk(std::move(P2), std::move(X2));
            R.pop_back();
            P.erase(std::find(P.begin(), P.end(), v));
            X.push_back(v);
        }
    };
    std::vector<int> all(g.n);
    for (int i = 0; i < g.n; ++i)
        all[i] = i;
    bk(all, {});
}

}  // namespace

NerveComplex build_nerve(const DevelopedBall& ball)
{
    NerveComplex n;
    n.ball = &ball;
    n.vertices = ball.cell_count();
    n.skeleton = Graph(n.vertices);
    for (int c = 0; c < n.vertices; ++c)
        n.interior.push_back(ball.cell_interior(c));

    std::map<std::vector<int>, int> cliques;  // clique -> realising instance
    for (int X = 0; X < ball.instance_count(); ++X) {
        auto cl = ball.cells_at(X);
        std::sort(cl.begin(), cl.end());
        cliques.try_emplace(std::move(cl), X);
    }

    std::vector<std::vector<int>> by_cell(n.vertices);
    std::vector<const std::vector<int>*> list;
    for (const auto& [cl, X] : cliques) {
        for (int c : cl)
            by_cell[c].push_back(static_cast<int>(list.size()));
        list.push_back(&cl);
    }
    std::vector<std::vector<int>> adj(n.vertices);
    for (const auto& [cl, X] : cliques) {
        bool maximal = true;
        for (int id : by_cell[cl[0]]) {
            const auto& other = *list[id];
            if (other.size() > cl.size() && std::includes(other.begin(), other.end(), cl.begin(), cl.end())) {
                maximal = false;
                break;
            }
        }
        if (!maximal)
            continue;
        n.maximal.push_back(cl);
        n.maximal_instance.push_back(X);
        for (int a : cl)
            for (int b : cl)
                if (a != b)
                    adj[a].push_back(b);
    }
    for (int c = 0; c < n.vertices; ++c) {
        sort_unique(adj[c]);
        n.skeleton.adj[c] = std::move(adj[c]);
    }
    return n;
}

bool NerveComplex::is_simplex(const std::vector<int>& cells) const
{
    if (cells.empty())
        return false;
    for (int x = 0; x < ball->types(); ++x) {
        int X = ball->inst(cells[0], x);
        bool all = true;
        for (int c : cells)
            all &= ball->inst(c, x) == X;
        if (all)
            return true;
    }
    return false;
}

json NerveComplex::to_json() const
{
    json j;
    j["vertices"] = vertices;
    j["maximal_simplices"] = maximal;
    j["realising_instances"] = maximal_instance;
    std::vector<int> in(interior.begin(), interior.end());
    j["interior"] = in;
    return j;
}

std::string NerveComplex::to_dot() const
{
    std::ostringstream os;
    os << "graph nerve {\n";
    for (int c = 0; c < vertices; ++c)
        os << "  c" << c << (interior[c] ? " [style=filled, fillcolor=lightblue]" : "") << ";\n";
    for (int a = 0; a < vertices; ++a)
        for (int b : skeleton.adj[a])
            if (a < b)
                os << "  c" << a << " -- c" << b << ";\n";
    os << "}\n";
    return os.str();
}

NerveDimension nerve_dimension(const NerveComplex& n, const DevelopedBall& ball)
{
    NerveDimension d;
    for (const auto& s : n.maximal)
        d.observed = std::max(d.observed, static_cast<int>(s.size()) - 1);
    const GC& gc = ball.gc();
    for (int x = 0; x < gc.poset.size(); ++x)
        d.formula = std::max(d.formula, gc.order(x) - 1);
    d.agrees = d.observed == d.formula;
    d.lower_bound_only = ball.radius() < 2;
    return d;
}

NerveLink nerve_link(const NerveComplex& n, int cell)
{
    NerveLink L;
    L.members = n.skeleton.adj[cell];
    L.graph = Graph(static_cast<int>(L.members.size()));
    for (std::size_t i = 0; i < L.members.size(); ++i)
        for (std::size_t j = i + 1; j < L.members.size(); ++j)
            if (n.skeleton.has_edge(L.members[i], L.members[j]) &&
                n.is_simplex({cell, L.members[i], L.members[j]}))
                L.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    L.graph.normalize();
    return L;
}

Certificate check_k_largeness(const NerveComplex& n, int k)
{
    if (k < 4)
        throw InputError("k-largeness needs k >= 4");
    Certificate cert;
    cert.name = std::to_string(k) + "-large";
    bool ok = true;
    int checked = 0;
    for (int c = 0; c < n.vertices && ok; ++c) {
        if (!n.interior[c])
            continue;
        ++checked;
        auto L = nerve_link(n, c);
        // Flagness: every clique of the 1-skeleton through c spans a simplex.
        std::vector<int> bad;
        Graph nb(static_cast<int>(L.members.size()));
        for (std::size_t i = 0; i < L.members.size(); ++i)
            for (std::size_t j = i + 1; j < L.members.size(); ++j)
                if (n.skeleton.has_edge(L.members[i], L.members[j]))
                    nb.add_edge(static_cast<int>(i), static_cast<int>(j));
        nb.normalize();
        maximal_cliques(nb, [&](const std::vector<int>& cl) {
            if (!bad.empty())
                return;
            std::vector<int> cells{c};
            for (int i : cl)
                cells.push_back(L.members[i]);
            if (!n.is_simplex(cells))
                bad = cells;
        });
        if (!bad.empty()) {
            ok = false;
            cert.witness = {{"cell", c}, {"kind", "not_flag"}, {"clique", bad}};
            break;
        }
        if (auto cyc = find_chordless_cycle(L.graph, 4, k - 1)) {
            ok = false;
            std::vector<int> cells;
            for (int i : *cyc)
                cells.push_back(L.members[i]);
            cert.witness = {{"cell", c}, {"kind", "chordless_cycle"}, {"cycle", cells}};
        }
    }
    cert.verdict = ok && checked > 0;
    cert.details["k"] = k;
    cert.details["interior_links_checked"] = checked;
    cert.details["status"] = checked == 0 ? "unknown" : (ok ? "pass" : "fail");
    cert.notes.push_back("only links of interior cells are judged");
    return cert;
}

json CutUpTetrahedron::to_json() const
{
    return json{{"v", v}, {"s", s}, {"triangles", {{v[0], v[1], v[2]}, {s[0], v[0], v[1]}, {s[1], v[1], v[2]}, {s[2], v[0], v[2]}}}};
}

std::optional<CutUpTetrahedron> find_cut_up_tetrahedron(const NerveComplex& n)
{
    if (n.vertices < 6)
        return std::nullopt;
    const Graph& g = n.skeleton;
    auto apart = [&](int a, int b) { return !g.has_edge(a, b) && (n.interior[a] || n.interior[b]); };
    auto wings = [&](int a, int b, int opposite, const std::array<int, 3>& v) {
        std::vector<int> out;
        for (int s : g.adj[a])
            if (s != v[0] && s != v[1] && s != v[2] && g.has_edge(s, b) && n.is_simplex({s, a, b}) &&
                apart(s, opposite))
                out.push_back(s);
        return out;
    };
    for (int v0 = 0; v0 < n.vertices; ++v0)
        for (int v1 : g.adj[v0]) {
            if (v1 <= v0)
                continue;
            for (int v2 : g.adj[v1]) {
                if (v2 <= v1 || !g.has_edge(v0, v2) || !n.is_simplex({v0, v1, v2}))
                    continue;
                std::array<int, 3> v{v0, v1, v2};
                auto S0 = wings(v0, v1, v2, v);
                if (S0.empty())
                    continue;
                auto S1 = wings(v1, v2, v0, v);
                if (S1.empty())
                    continue;
                auto S2 = wings(v0, v2, v1, v);
                for (int s0 : S0)
                    for (int s1 : S1) {
                        if (s1 == s0 || !apart(s0, s1))
                            continue;
                        for (int s2 : S2)
                            if (s2 != s0 && s2 != s1 && apart(s0, s2) && apart(s1, s2))
                                return CutUpTetrahedron{v, {s0, s1, s2}};
                    }
            }
        }
    return std::nullopt;
}

json RetriangulatedComplex::to_json() const
{
    json verts = json::array();
    for (std::size_t i = 0; i < kind.size(); ++i)
        verts.push_back({{"id", i}, {"kind", kind[i] == Cone ? "cone" : "big"}, {"origin", origin[i]}});
    return json{{"vertices", verts}, {"triangles", triangles}};
}

RetriangulationReport retriangulate_valence2(const DevelopedBall& ball)
{
    const GC& gc = ball.gc();
    const auto& q = gc.poset;
    for (int v = 0; v < q.small_count(); ++v)
        if (q.valence(v) != 2)
            throw InputError("retriangulation needs every small vertex of valence 2; '" + q.id(v) +
                             "' has valence " + std::to_string(q.valence(v)));

    RetriangulationReport rep;
    auto& K = rep.complex;
    std::vector<int> big_vertex(ball.instance_count(), -1);
    for (int c = 0; c < ball.cell_count(); ++c) {
        K.kind.push_back(RetriangulatedComplex::Cone);
        K.origin.push_back(c);
    }
    for (int X = 0; X < ball.instance_count(); ++X)
        if (q.is_big(ball.inst_type(X))) {
            big_vertex[X] = static_cast<int>(K.kind.size());
            K.kind.push_back(RetriangulatedComplex::Big);
            K.origin.push_back(X);
        }
    K.skeleton = Graph(static_cast<int>(K.kind.size()));
    std::set<std::pair<int, int>> edges;
    for (int c = 0; c < ball.cell_count(); ++c) {
        for (int w = q.small_count(); w < q.size(); ++w)
            edges.insert({c, big_vertex[ball.inst(c, w)]});
        for (int v = 0; v < q.small_count(); ++v) {
            int a = big_vertex[ball.inst(c, q.nbrs(v)[0])];
            int b = big_vertex[ball.inst(c, q.nbrs(v)[1])];
            K.triangles.push_back({c, std::min(a, b), std::max(a, b)});
            edges.insert(std::minmax(a, b));
        }
    }
    for (auto [a, b] : edges)
        K.skeleton.add_edge(a, b);
    K.skeleton.normalize();

    // Links in the new complex, read off the triangles.
    std::vector<std::vector<std::pair<int, int>>> link_edges(K.kind.size());
    for (const auto& t : K.triangles) {
        link_edges[t[0]].push_back({t[1], t[2]});
        link_edges[t[1]].push_back({t[0], t[2]});
        link_edges[t[2]].push_back({t[0], t[1]});
    }
    auto link_of = [&](int x, std::vector<int>* colours) {
        std::vector<int> nodes;
        for (auto [a, b] : link_edges[x]) {
            nodes.push_back(a);
            nodes.push_back(b);
        }
        sort_unique(nodes);
        Graph L(static_cast<int>(nodes.size()));
        auto idx = [&](int id) {
            return static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), id) - nodes.begin());
        };
        for (auto [a, b] : link_edges[x])
            L.add_edge(idx(a), idx(b));
        L.normalize();
        if (colours)
            for (int id : nodes)
                colours->push_back(K.kind[id]);
        return L;
    };

    auto old_girth = shortest_cycle(realise(q).graph).length;
    long long new_min = -1, new_max = -1;
    for (int c = 0; c < ball.cell_count(); ++c) {
        long long g = shortest_cycle(link_of(c, nullptr)).length;
        new_min = new_min < 0 ? g : std::min(new_min, g);
        new_max = std::max(new_max, g);
    }
    bool halved = old_girth > 0 && new_min == new_max && 2 * new_min == old_girth;

    int big_checked = 0;
    long long big_girth = -1;
    json big_fail;
    for (int X = 0; X < ball.instance_count(); ++X) {
        if (big_vertex[X] < 0 || !ball.saturated(X))
            continue;
        ++big_checked;
        auto old = instance_link(ball, X);
        std::vector<int> col_old, col_new;
        for (int node : old.node)
            col_old.push_back(node < 0 ? RetriangulatedComplex::Cone : RetriangulatedComplex::Big);
        auto now = link_of(big_vertex[X], &col_new);
        if (big_fail.is_null() && !find_isomorphism(old.graph, now, &col_old, &col_new))
            big_fail = {{"instance", X}};
        long long g = shortest_cycle(now).length;
        if (g >= 0)
            big_girth = big_girth < 0 ? g : std::min(big_girth, g);
    }

    int k = hugeness(q);
    bool large = true;
    if (k >= 6) {
        large = new_min >= 6 && (big_girth < 0 || big_girth >= 6);
    }
    auto& cert = rep.certificate;
    cert.name = "retriangulation";
    cert.verdict = halved && big_fail.is_null() && large;
    cert.witness = big_fail;
    cert.details["cone_link_girth_before"] = old_girth;
    cert.details["cone_link_girth_after"] = new_min;
    cert.details["girth_halved"] = halved;
    cert.details["big_links_checked"] = big_checked;
    cert.details["big_links_unchanged"] = big_fail.is_null();
    cert.details["big_link_girth"] = big_girth;
    cert.details["six_large"] = k >= 6 ? json(large) : json("not applicable");
    cert.details["vertices"] = K.kind.size();
    cert.details["triangles"] = K.triangles.size();
    cert.details["edges"] = K.skeleton.edge_count();
    return rep;
}

}  // namespace gcg
