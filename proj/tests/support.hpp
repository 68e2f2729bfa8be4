#pragma once

// Independent oracles and fixtures shared by the unit tests and the
// acceptance binary. Nothing here calls the routine it is used to check.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gcg/develop.hpp"
#include "gcg/examples.hpp"
#include "gcg/flats.hpp"
#include "gcg/gcog.hpp"
#include "gcg/smallcancel.hpp"
#include "gcg/wise.hpp"

namespace support {

using namespace gcg;

// ---- right-angled Coxeter groups via the Tits representation ----------------

// Integer Tits form: B(s,s) = 1, 0 on commuting pairs, -1 otherwise. The
// representation is faithful, so distinct matrices are distinct elements.
class TitsRacg {
public:
    using Matrix = std::vector<long long>;

    TitsRacg(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), B_(n * n, -1)
    {
        for (int i = 0; i < n; ++i)
            B_[i * n + i] = 1;
        for (auto [a, b] : edges)
            B_[a * n + b] = B_[b * n + a] = 0;
        for (int s = 0; s < n; ++s)
            refl_.push_back(reflection(s));
        // Generators of cell adjacency: every non-identity element of a
        // vertex group or an edge group.
        for (int s = 0; s < n; ++s)
            gens_.push_back(refl_[s]);
        for (auto [a, b] : edges)
            gens_.push_back(mul(refl_[a], refl_[b]));
    }

    Matrix identity() const
    {
        Matrix m(n_ * n_, 0);
        for (int i = 0; i < n_; ++i)
            m[i * n_ + i] = 1;
        return m;
    }

    Matrix mul(const Matrix& a, const Matrix& b) const
    {
        Matrix c(n_ * n_, 0);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k)
                if (a[i * n_ + k])
                    for (int j = 0; j < n_; ++j)
                        c[i * n_ + j] += a[i * n_ + k] * b[k * n_ + j];
        return c;
    }

    const Matrix& reflection_of(int s) const { return refl_[s]; }

    // Number of group elements at word distance <= r, for r = 0..R.
    std::vector<long long> ball_sizes(int R) const
    {
        std::set<Matrix> seen{identity()};
        std::vector<Matrix> frontier{identity()};
        std::vector<long long> sizes{1};
        for (int r = 1; r <= R; ++r) {
            std::vector<Matrix> next;
            for (const auto& g : frontier)
                for (const auto& s : gens_) {
                    auto h = mul(g, s);
                    if (seen.insert(h).second)
                        next.push_back(std::move(h));
                }
            frontier = std::move(next);
            sizes.push_back(static_cast<long long>(seen.size()));
        }
        return sizes;
    }

private:
    Matrix reflection(int s) const
    {
        // sigma_s(x) = x - 2 B(e_s, x) e_s, as a matrix acting on columns.
        Matrix m = identity();
        for (int j = 0; j < n_; ++j)
            m[s * n_ + j] -= 2 * B_[s * n_ + j];
        return m;
    }

    int n_;
    std::vector<long long> B_;
    std::vector<Matrix> refl_, gens_;
};

inline TitsRacg tits_for_cycle(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        e.push_back({i, (i + 1) % n});
    return TitsRacg(n, e);
}

// ---- girth by edge deletion ------------------------------------------------

inline long long girth_by_edge_deletion(const OneDimPoset& q)
{
    const int n = q.size();
    std::vector<std::vector<int>> adj(n);
    for (auto [v, w] : q.edges()) {
        adj[v].push_back(w);
        adj[w].push_back(v);
    }
    long long best = -1;
    for (auto [v, w] : q.edges()) {
        std::vector<int> d(n, -1);
        std::deque<int> queue{v};
        d[v] = 0;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : adj[x]) {
                if ((x == v && y == w) || (x == w && y == v) || d[y] >= 0)
                    continue;
                d[y] = d[x] + 1;
                queue.push_back(y);
            }
        }
        if (d[w] >= 0 && (best < 0 || d[w] + 1 < best))
            best = d[w] + 1;
    }
    return best;
}

// ---- proper triples by brute force over cone-cells -------------------------

// For every big w and every three distinct elements of G_w (cone-cells around
// w), the three pairwise intersections must each contain a small vertex and
// these smalls must differ (so the triple intersection is w alone).
inline int owner_of(const GC& gc, int w, int g)
{
    for (int v : gc.poset.nbrs(w)) {
        const auto& img = gc.psi(v, w).image;
        if (g != 0 && std::find(img.begin(), img.end(), g) != img.end())
            return v;
    }
    return -1;
}

inline bool brute_force_triple_at(const GC& gc, int w)
{
    const auto& G = gc.group(w);
    const int n = G.order();
    auto diff = [&](int a, int b) {
        for (int x = 0; x < n; ++x)
            if (G.mul(a, x) == b)
                return x;
        return -1;
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                int ab = owner_of(gc, w, diff(a, b));
                int bc = owner_of(gc, w, diff(b, c));
                int ac = owner_of(gc, w, diff(a, c));
                if (ab >= 0 && bc >= 0 && ac >= 0 && ab != bc && bc != ac && ab != ac)
                    return true;
            }
    return false;
}

inline bool brute_force_has_triple(const GC& gc)
{
    for (int w = gc.poset.small_count(); w < gc.poset.size(); ++w)
        if (brute_force_triple_at(gc, w))
            return true;
    return false;
}

// ---- randomized valid inputs -----------------------------------------------

// Hexagonal-torus poset with (Z/2)^3 at every big. The three smalls below a
// big map to e1, e2 and a third element drawn at random; the big carries a
// proper triple exactly when the third element is e1 + e2.
inline GC random_cube_torus(std::mt19937& rng, bool allow_triples)
{
    static const std::vector<std::pair<Axial, Axial>> lattices = {
        {{7, 0}, {2, 1}}, {{3, 0}, {0, 3}}, {{4, 0}, {0, 3}}, {{4, 0}, {1, 3}}, {{3, 0}, {1, 4}}};
    auto [t1, t2] = lattices[rng() % lattices.size()];
    auto q = HexTorus(t1, t2).poset();
    GC gc;
    gc.poset = q;
    auto cube = direct_product({cyclic(2), cyclic(2), cyclic(2)}).first;
    // Mixed-radix digits, first factor most significant: e1 = 4, e2 = 2,
    // e1 + e2 = 6.
    const std::vector<int> thirds = allow_triples ? std::vector<int>{1, 3, 5, 6, 7} : std::vector<int>{1, 3, 5, 7};
    gc.local.resize(q.size());
    for (int v = 0; v < q.small_count(); ++v)
        gc.local[v] = cyclic(2);
    for (int w = q.small_count(); w < q.size(); ++w) {
        gc.local[w] = cube;
        const int images[3] = {4, 2, thirds[rng() % thirds.size()]};
        const auto& below = q.nbrs(w);
        for (std::size_t i = 0; i < below.size(); ++i)
            gc.maps[{below[i], w}] = Monomorphism{gc.local[below[i]], cube, {0, images[i]}};
    }
    return gc;
}

// ---- validation fixtures ---------------------------------------------------

struct Violation {
    std::string name;
    std::string code;
    json witness;  // every key here must match the reported witness
    std::function<ValidationReport()> run;
};

inline ValidationReport full_validation(const GC& gc)
{
    auto r = check_convention(gc.poset);
    r.merge(validate(gc));
    return r;
}

inline PosetData cycle_data(int n, const std::string& prefix = "")
{
    PosetData d;
    for (int i = 0; i < n; ++i)
        d.small.push_back(prefix + "v" + std::to_string(i));
    for (int i = 0; i < n; ++i) {
        std::string b = prefix + "b" + std::to_string(i);
        d.big.push_back(b);
        d.edges.push_back({d.small[i], b});
        d.edges.push_back({d.small[(i + 1) % n], b});
    }
    return d;
}

inline std::vector<Violation> violation_fixtures()
{
    std::vector<Violation> out;
    auto base = [] { return gen_racg_cycle(6); };
    auto idx = [](const GC& gc, const std::string& id) { return gc.poset.index(id); };

    out.push_back({"repeated vertex id", "duplicate_vertex", json::object(), [] {
                       auto d = cycle_data(6);
                       d.small.push_back("v0");
                       return validate_poset_data(d);
                   }});
    out.push_back({"id both small and big", "small_big_overlap", {{"vertex", "b0"}}, [] {
                       auto d = cycle_data(6);
                       d.small.push_back("b0");
                       return validate_poset_data(d);
                   }});
    out.push_back({"incidence to a missing vertex", "unknown_vertex", {{"edge", {"v0", "nowhere"}}}, [] {
                       auto d = cycle_data(6);
                       d.edges.push_back({"v0", "nowhere"});
                       return validate_poset_data(d);
                   }});
    out.push_back({"repeated incidence", "duplicate_incidence", {{"edge", {"v2", "b2"}}}, [] {
                       auto d = cycle_data(6);
                       d.edges.push_back({"v2", "b2"});
                       return validate_poset_data(d);
                   }});
    out.push_back({"single vertex", "too_small", {{"vertex", "v"}}, [] {
                       PosetData d;
                       d.small = {"v"};
                       return check_convention(OneDimPoset(d));
                   }});
    out.push_back({"two components", "disconnected", {{"vertex", "y.v0"}}, [] {
                       auto d = cycle_data(6, "x.");
                       auto e = cycle_data(6, "y.");
                       d.small.insert(d.small.end(), e.small.begin(), e.small.end());
                       d.big.insert(d.big.end(), e.big.begin(), e.big.end());
                       d.edges.insert(d.edges.end(), e.edges.begin(), e.edges.end());
                       return check_convention(OneDimPoset(d));
                   }});
    out.push_back({"pendant big vertex", "valence_one", {{"vertex", "tail"}, {"valence", 1}}, [] {
                       auto d = cycle_data(6);
                       d.big.push_back("tail");
                       d.edges.push_back({"v3", "tail"});
                       return check_convention(OneDimPoset(d));
                   }});
    out.push_back({"figure eight", "cut_vertex", {{"vertex", "v0"}}, [] {
                       auto d = cycle_data(6);
                       auto e = cycle_data(6, "y.");
                       for (auto& s : e.small)
                           if (s == "y.v0")
                               s = "v0";
                       e.small.erase(e.small.begin());
                       for (auto& [s, b] : e.edges)
                           if (s == "y.v0")
                               s = "v0";
                       d.small.insert(d.small.end(), e.small.begin(), e.small.end());
                       d.big.insert(d.big.end(), e.big.begin(), e.big.end());
                       d.edges.insert(d.edges.end(), e.edges.begin(), e.edges.end());
                       return check_convention(OneDimPoset(d));
                   }});
    out.push_back({"trivial local group", "trivial_group", {{"vertex", "v0"}}, [=] {
                       GC gc = base();
                       int v = idx(gc, "v0");
                       gc.local[v] = cyclic(1);
                       for (int w : gc.poset.nbrs(v))
                           gc.maps[{v, w}] = Monomorphism{gc.local[v], gc.local[w], {0}};
                       return full_validation(gc);
                   }});
    out.push_back({"missing structure map", "map_missing", {{"edge", {"v1", "v1-v2"}}}, [=] {
                       GC gc = base();
                       gc.maps.erase({idx(gc, "v1"), idx(gc, "v1-v2")});
                       return full_validation(gc);
                   }});
    out.push_back({"map on a non-incidence", "map_extra", {{"edge", {"v0", "v2-v3"}}}, [=] {
                       GC gc = base();
                       int v = idx(gc, "v0"), w = idx(gc, "v2-v3");
                       gc.maps[{v, w}] = Monomorphism{gc.local[v], gc.local[w], {0, 1}};
                       return full_validation(gc);
                   }});
    out.push_back({"table not a latin square", "latin", {{"vertex", "v0-v1"}, {"row", 1}}, [=] {
                       GC gc = base();
                       int w = idx(gc, "v0-v1");
                       gc.local[w] = make_group("broken", {{0, 1, 2, 3}, {1, 1, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
                       for (int v : gc.poset.nbrs(w))
                           gc.maps[{v, w}].target = gc.local[w];
                       return full_validation(gc);
                   }});
    out.push_back({"element 0 is not the identity", "identity", {{"vertex", "v2"}, {"element", 0}}, [=] {
                       GC gc = base();
                       int v = idx(gc, "v2");
                       gc.local[v] = make_group("shifted", {{1, 0}, {0, 1}});
                       for (int w : gc.poset.nbrs(v))
                           gc.maps[{v, w}].source = gc.local[v];
                       return full_validation(gc);
                   }});
    out.push_back({"element without inverse", "inverse", {{"vertex", "v3"}}, [=] {
                       GC gc = base();
                       int v = idx(gc, "v3");
                       gc.local[v] = make_group("absorbing", {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}});
                       for (int w : gc.poset.nbrs(v))
                           gc.maps[{v, w}] = Monomorphism{gc.local[v], gc.local[w], {0, 1, 2}};
                       return full_validation(gc);
                   }});
    out.push_back({"non-associative loop", "associativity", {{"vertex", "v4-v5"}}, [=] {
                       GC gc = base();
                       int w = idx(gc, "v4-v5");
                       gc.local[w] = make_group("loop5", {{0, 1, 2, 3, 4},
                                                          {1, 0, 3, 4, 2},
                                                          {2, 4, 0, 1, 3},
                                                          {3, 2, 4, 0, 1},
                                                          {4, 3, 1, 2, 0}});
                       for (int v : gc.poset.nbrs(w))
                           gc.maps[{v, w}] = Monomorphism{gc.local[v], gc.local[w], {0, v == idx(gc, "v4") ? 1 : 2}};
                       return full_validation(gc);
                   }});
    out.push_back({"map sends identity elsewhere", "mono_identity", {{"edge", {"v1", "v0-v1"}}, {"image", 1}}, [=] {
                       GC gc = base();
                       gc.maps[{idx(gc, "v1"), idx(gc, "v0-v1")}].image = {1, 0};
                       return full_validation(gc);
                   }});
    out.push_back({"map not a homomorphism", "homomorphism", {{"edge", {"v3", "v2-v3"}}, {"a", 1}, {"b", 1}}, [=] {
                       GC gc = base();
                       int w = idx(gc, "v2-v3");
                       gc.local[w] = cyclic(4);
                       gc.maps[{idx(gc, "v2"), w}] = Monomorphism{gc.local[idx(gc, "v2")], gc.local[w], {0, 2}};
                       gc.maps[{idx(gc, "v3"), w}] = Monomorphism{gc.local[idx(gc, "v3")], gc.local[w], {0, 1}};
                       return full_validation(gc);
                   }});
    out.push_back({"map not injective", "injective", {{"edge", {"v5", "v4-v5"}}, {"a", 0}, {"b", 1}}, [=] {
                       GC gc = base();
                       gc.maps[{idx(gc, "v5"), idx(gc, "v4-v5")}].image = {0, 0};
                       return full_validation(gc);
                   }});
    out.push_back({"inclusion not proper", "proper", {{"edge", {"v0", "v0-v1"}}}, [=] {
                       GC gc = base();
                       int v = idx(gc, "v0");
                       gc.local[v] = klein_four();
                       gc.maps[{v, idx(gc, "v0-v1")}].source = gc.local[v];
                       gc.maps[{v, idx(gc, "v0-v1")}].image = {0, 1, 2, 3};
                       gc.maps[{v, idx(gc, "v5-v0")}].source = gc.local[v];
                       gc.maps[{v, idx(gc, "v5-v0")}].image = {0, 1, 2, 3};
                       return full_validation(gc);
                   }});
    out.push_back({"images meet non-trivially", "intersection",
                   {{"big", "v2-v3"}, {"smalls", {"v2", "v3"}}, {"element", 3}}, [=] {
                       GC gc = base();
                       int w = idx(gc, "v2-v3");
                       gc.maps[{idx(gc, "v2"), w}].image = {0, 3};
                       gc.maps[{idx(gc, "v3"), w}].image = {0, 3};
                       return full_validation(gc);
                   }});
    return out;
}

// True when some reported issue has the code and agrees with every key of
// the expected witness.
inline bool rejected_with(const ValidationReport& r, const std::string& code, const json& witness)
{
    for (const auto& i : r.issues) {
        if (i.code != code)
            continue;
        bool match = true;
        for (auto it = witness.begin(); it != witness.end(); ++it)
            match = match && i.witness.contains(it.key()) && i.witness.at(it.key()) == it.value();
        if (match)
            return true;
    }
    return false;
}

// ---- other fixtures ----------------------------------------------------------

// Graphical product on the 6-cycle poset with Z/3 at v0 and Z/2 elsewhere.
inline GC z3_product()
{
    auto q = cycle_poset(6);
    std::map<std::string, GroupPtr> gs;
    for (int v = 0; v < q.small_count(); ++v)
        gs[q.id(v)] = q.id(v) == "v0" ? cyclic(3) : cyclic(2);
    return gen_graphical_product(q, gs);
}

// RACG 12-cycle complex with both smalls of one big sent to the same
// involution: structure maps exist but the images meet.
inline GC intersecting_images()
{
    GC gc = gen_racg_cycle(6);
    int w = gc.poset.index("v0-v1");
    gc.maps[{gc.poset.index("v0"), w}].image = {0, 1};
    gc.maps[{gc.poset.index("v1"), w}].image = {0, 1};
    return gc;
}

// The r-ball of the square tiling around a square, with cone points at
// square centres and grid points at corners: (2r+1)^2 squares and their
// (2r+2)^2 corners. Corner-corner edges along sides, centre-corner edges
// to the four corners. Colour 0 for centres, 1 for corners.
struct GridOracle {
    Graph graph;
    std::vector<int> colour;
};

inline GridOracle square_grid(int r)
{
    const int s = 2 * r + 1, c = s + 1;
    GridOracle g;
    g.graph = Graph(s * s + c * c);
    auto centre = [&](int i, int j) { return i * s + j; };
    auto corner = [&](int i, int j) { return s * s + i * c + j; };
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            for (int di = 0; di < 2; ++di)
                for (int dj = 0; dj < 2; ++dj)
                    g.graph.add_edge(centre(i, j), corner(i + di, j + dj));
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) {
            if (i + 1 < c)
                g.graph.add_edge(corner(i, j), corner(i + 1, j));
            if (j + 1 < c)
                g.graph.add_edge(corner(i, j), corner(i, j + 1));
        }
    g.graph.normalize();
    g.colour.assign(s * s, 0);
    g.colour.resize(s * s + c * c, 1);
    return g;
}

// Every 3-clique of the skeleton spans a listed triangle and there are no
// 4-cliques: the flag condition for a 2-complex.
inline bool flag_2complex(const RetriangulatedComplex& K)
{
    std::set<std::array<int, 3>> tri;
    for (auto t : K.triangles) {
        std::sort(t.begin(), t.end());
        tri.insert(t);
    }
    const auto& G = K.skeleton;
    for (int a = 0; a < G.n; ++a)
        for (int b : G.adj[a]) {
            if (b <= a)
                continue;
            for (int c : G.adj[b]) {
                if (c <= b || !G.has_edge(a, c))
                    continue;
                if (!tri.count({a, b, c}))
                    return false;
                for (int d : G.adj[c])
                    if (d > c && G.has_edge(a, d) && G.has_edge(b, d))
                        return false;
            }
        }
    return true;
}

}  // namespace support
