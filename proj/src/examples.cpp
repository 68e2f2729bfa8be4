#include "gcg/examples.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gcg {

OneDimPoset cycle_poset(int n)
{
    if (n < 3)
        throw InputError("a cycle needs at least 3 vertices");
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i < n; ++i)
        vs.push_back("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        es.push_back({vs[i], vs[(i + 1) % n]});
    return simplices_of_graph(vs, es);
}

GC gen_graphical_product(const OneDimPoset& q, const std::map<std::string, GroupPtr>& small_groups,
                         std::vector<std::string>* warnings)
{
    GC gc;
    gc.poset = q;
    gc.local.resize(q.size());
    for (int v = 0; v < q.small_count(); ++v) {
        auto it = small_groups.find(q.id(v));
        if (it == small_groups.end())
            throw InputError("no group given for small vertex '" + q.id(v) + "'");
        gc.local[v] = it->second;
    }
    for (int w = q.small_count(); w < q.size(); ++w) {
        std::vector<GroupPtr> factors;
        for (int v : q.nbrs(w))
            factors.push_back(gc.local[v]);
        if (factors.empty())
            throw InputError("big vertex '" + q.id(w) + "' has no small vertex below it");
        auto [G, incl] = direct_product(factors);
        gc.local[w] = G;
        const auto& below = q.nbrs(w);
        for (std::size_t i = 0; i < below.size(); ++i)
            gc.maps[{below[i], w}] = Monomorphism{gc.local[below[i]], G, incl[i].image};
    }
    if (warnings && hugeness(q) < 6)
        warnings->push_back("poset is only " + std::to_string(hugeness(q)) + "-huge");
    return gc;
}

GC gen_racg_cycle(int n)
{
    auto q = cycle_poset(n);
    std::map<std::string, GroupPtr> groups;
    auto z2 = cyclic(2);
    for (int v = 0; v < q.small_count(); ++v)
        groups[q.id(v)] = z2;
    return gen_graphical_product(q, groups);
}

GC gen_racg_bipartite(int n, int m)
{
    if (n < 2 || m < 2)
        throw InputError("bipartite sizes must be at least 2");
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i < n; ++i)
        vs.push_back("a" + std::to_string(i));
    for (int j = 0; j < m; ++j)
        vs.push_back("b" + std::to_string(j));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            es.push_back({vs[i], vs[n + j]});
    auto q = simplices_of_graph(vs, es);
    std::map<std::string, GroupPtr> groups;
    auto z2 = cyclic(2);
    for (const auto& v : vs)
        groups[v] = z2;
    return gen_graphical_product(q, groups);
}

GC gen_coxeter_nerve(const std::vector<std::string>& vertices, const std::vector<CoxeterEdge>& edges)
{
    std::map<std::pair<std::string, std::string>, int> label;
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& e : edges) {
        if (e.m < 2)
            throw InputError("Coxeter label on " + e.a + "-" + e.b + " must be at least 2");
        if (e.a == e.b || label.count(std::minmax(e.a, e.b)))
            throw InputError("nerve must be a simple graph (edge " + e.a + "-" + e.b + ")");
        label[std::minmax(e.a, e.b)] = e.m;
        es.push_back({e.a, e.b});
    }
    // A triangle with 1/m1 + 1/m2 + 1/m3 > 1 spans a finite subgroup.
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            for (std::size_t k = j + 1; k < vertices.size(); ++k) {
                auto a = label.find(std::minmax(vertices[i], vertices[j]));
                auto b = label.find(std::minmax(vertices[j], vertices[k]));
                auto c = label.find(std::minmax(vertices[i], vertices[k]));
                if (a == label.end() || b == label.end() || c == label.end())
                    continue;
                long long m1 = a->second, m2 = b->second, m3 = c->second;
                if (m2 * m3 + m1 * m3 + m1 * m2 > m1 * m2 * m3)
                    throw InputError("triangle " + vertices[i] + ", " + vertices[j] + ", " + vertices[k] +
                                     " generates a finite subgroup; the nerve is not 1-dimensional");
            }
    GC gc;
    gc.poset = simplices_of_graph(vertices, es);
    const auto& q = gc.poset;
    gc.local.resize(q.size());
    auto z2 = cyclic(2);
    for (int v = 0; v < q.small_count(); ++v)
        gc.local[v] = z2;
    for (const auto& e : edges) {
        int w = q.index(e.a + "-" + e.b);
        auto [D, s, rs] = dihedral(e.m);
        gc.local[w] = D;
        gc.maps[{q.index(e.a), w}] = Monomorphism{z2, D, s.image};
        gc.maps[{q.index(e.b), w}] = Monomorphism{z2, D, rs.image};
    }
    return gc;
}

Axial hex_direction(int i)
{
    static const Axial d[6] = {{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}};
    return d[((i % 6) + 6) % 6];
}

namespace {

long long floor_div(long long a, long long b)
{
    long long d = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? d - 1 : d;
}

// x * a + y * b = gcd(a, b) >= 0.
long long ext_gcd(long long a, long long b, long long& x, long long& y)
{
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return std::abs(a);
    }
    long long x1, y1;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

HexTorus::HexTorus(Axial t1, Axial t2) : t1_(t1), t2_(t2)
{
    long long det = static_cast<long long>(t1.q) * t2.r - static_cast<long long>(t1.r) * t2.q;
    if (det == 0)
        throw InputError("torus translations are linearly dependent");
    long long x, y;
    long long d2 = ext_gcd(t1.r, t2.r, x, y);
    long long d1 = std::abs(det) / d2;
    if (d1 * d2 > 4096)
        throw ResourceError("torus has more than 4096 hexagons");
    long long s = x * t1.q + y * t2.q;
    d1_ = static_cast<int>(d1);
    d2_ = static_cast<int>(d2);
    s_ = static_cast<int>(((s % d1) + d1) % d1);
}

Axial HexTorus::reduce(Axial h) const
{
    long long k = floor_div(h.r, d2_);
    long long q = h.q - k * s_, r = h.r - k * d2_;
    q = ((q % d1_) + d1_) % d1_;
    return {static_cast<int>(q), static_cast<int>(r)};
}

int HexTorus::hex_index(Axial h) const
{
    auto c = reduce(h);
    return c.r * d1_ + c.q;
}

std::vector<Axial> HexTorus::hex_reps() const
{
    std::vector<Axial> out;
    for (int r = 0; r < d2_; ++r)
        for (int q = 0; q < d1_; ++q)
            out.push_back({q, r});
    return out;
}

std::string HexTorus::vertex_id(char ab, Axial h) const
{
    auto c = reduce(h);
    return std::string(1, ab) + std::to_string(c.q) + "," + std::to_string(c.r);
}

std::string HexTorus::edge_id(int type, Axial h) const
{
    auto c = reduce(h);
    return "E" + std::to_string(type) + ":" + std::to_string(c.q) + "," + std::to_string(c.r);
}

namespace {

// Endpoints (A-corner, B-corner) of edge E_type(h).
std::pair<Axial, Axial> edge_ends(int type, Axial h)
{
    switch (type) {
    case 0: return {h, {h.q, h.r - 1}};
    case 1: return {h, {h.q - 1, h.r}};
    default: return {h, h};
    }
}

}  // namespace

std::pair<int, std::vector<std::string>> HexTorus::skeleton_girth() const
{
    int H = hexagons();
    auto reps = hex_reps();
    Graph g(2 * H);
    std::set<std::pair<int, int>> seen;
    for (int t = 0; t < 3; ++t)
        for (auto h : reps) {
            auto [a, b] = edge_ends(t, h);
            int u = hex_index(a), v = H + hex_index(b);
            if (!seen.insert({u, v}).second)
                return {2, {vertex_id('A', a), vertex_id('B', b)}};
            g.add_edge(u, v);
        }
    g.normalize();
    auto c = shortest_cycle(g);
    std::vector<std::string> ids;
    for (int x : c.cycle) {
        auto h = reps[x % H];
        ids.push_back(vertex_id(x < H ? 'A' : 'B', h));
    }
    return {static_cast<int>(c.length), ids};
}

OneDimPoset HexTorus::poset() const
{
    PosetData d;
    auto reps = hex_reps();
    for (int t = 0; t < 3; ++t)
        for (auto h : reps)
            d.small.push_back(edge_id(t, h));
    for (char ab : {'A', 'B'})
        for (auto h : reps)
            d.big.push_back(vertex_id(ab, h));
    for (int t = 0; t < 3; ++t)
        for (auto h : reps) {
            auto [a, b] = edge_ends(t, h);
            d.edges.push_back({edge_id(t, h), vertex_id('A', a)});
            d.edges.push_back({edge_id(t, h), vertex_id('B', b)});
        }
    return OneDimPoset(std::move(d));
}

std::pair<Axial, Axial> default_torus_translations()
{
    for (int det = 1; det <= 64; ++det)
        for (int d1 = 1; d1 <= det; ++d1) {
            if (det % d1)
                continue;
            int d2 = det / d1;
            for (int s = 0; s < d1; ++s) {
                HexTorus T({d1, 0}, {s, d2});
                if (T.skeleton_girth().first == 6)
                    return {{d1, 0}, {s, d2}};
            }
        }
    throw ResourceError("no girth-6 hexagonal torus with at most 64 hexagons");
}

GC locally_klein_four(const OneDimPoset& q)
{
    GC gc;
    gc.poset = q;
    gc.local.resize(q.size());
    auto z2 = cyclic(2);
    auto k4 = klein_four();
    static const int gens[3] = {2, 1, 3};  // (1,0), (0,1), (1,1)
    for (int v = 0; v < q.small_count(); ++v)
        gc.local[v] = z2;
    for (int w = q.small_count(); w < q.size(); ++w) {
        if (q.valence(w) != 3)
            throw InputError("big vertex '" + q.id(w) + "' has valence " + std::to_string(q.valence(w)) +
                             ", locally Klein-four data needs 3");
        gc.local[w] = k4;
        for (int i = 0; i < 3; ++i) {
            auto m = involution_inclusion(k4, gens[i]);
            m.source = z2;
            gc.maps[{q.nbrs(w)[i], w}] = m;
        }
    }
    return gc;
}

GC gen_klein_four_torus(Axial t1, Axial t2)
{
    HexTorus T(t1, t2);
    auto [g, cyc] = T.skeleton_girth();
    if (g != 6) {
        std::string w;
        for (const auto& id : cyc)
            w += (w.empty() ? "" : " ") + id;
        throw InputError("torus 1-skeleton has girth " + std::to_string(g) + ", need 6 (cycle " + w + ")");
    }
    return locally_klein_four(T.poset());
}

GC gen_klein_four_torus()
{
    auto [t1, t2] = default_torus_translations();
    return gen_klein_four_torus(t1, t2);
}

GC gen_torus_double(Axial t1, Axial t2, int direction, Axial start)
{
    if (direction < 0 || direction > 2)
        throw InputError("torus double direction must be 0, 1 or 2");
    HexTorus T(t1, t2);
    if (T.skeleton_girth().first != 6)
        throw InputError("torus double needs a girth-6 torus");
    auto R = T.poset();

    std::set<std::string> crossed;
    Axial d = hex_direction(direction);
    Axial h = T.reduce(start);
    do {
        // Edge between h and h + d.
        std::string e = direction == 0 ? T.edge_id(0, h) :
                        direction == 1 ? T.edge_id(2, {h.q, h.r - 1}) :
                                         T.edge_id(1, {h.q, h.r - 1});
        if (!crossed.insert(e).second)
            throw InputError("curve crosses edge " + e + " twice");
        h = T.reduce({h.q + d.q, h.r + d.r});
    } while (!(h == T.reduce(start)));
    if (crossed.size() < 2)
        throw InputError("curve closes after one hexagon");

    PosetData pd;
    auto name = [&](const std::string& side, const std::string& id) {
        return crossed.count(id) ? id : side + id;
    };
    for (int v = 0; v < R.small_count(); ++v) {
        if (crossed.count(R.id(v))) {
            pd.small.push_back(R.id(v));
        } else {
            pd.small.push_back("L." + R.id(v));
            pd.small.push_back("R." + R.id(v));
        }
    }
    for (const std::string side : {"L.", "R."}) {
        for (int w = R.small_count(); w < R.size(); ++w)
            pd.big.push_back(side + R.id(w));
        for (auto [v, w] : R.edges())
            pd.edges.push_back({name(side, R.id(v)), side + R.id(w)});
    }
    OneDimPoset q(std::move(pd));
    if (hugeness(q) < 6)
        throw InputError("glued poset is only " + std::to_string(hugeness(q)) + "-huge");
    return locally_klein_four(q);
}

json axial_to_json(Axial a) { return json::array({a.q, a.r}); }

}  // namespace gcg
