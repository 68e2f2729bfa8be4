#include "gcg/develop.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gcg {

GroupWord parse_word(const GC& gc, const std::string& text)
{
    GroupWord w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        auto pos = tok.rfind(':');
        if (pos == std::string::npos)
            throw InputError("letter '" + tok + "' is not of the form id:element");
        int x = gc.poset.index(tok.substr(0, pos));
        if (x < 0)
            throw InputError("letter '" + tok + "' names an unknown vertex");
        int g = 0;
        try {
            g = std::stoi(tok.substr(pos + 1));
        } catch (const std::exception&) {
            throw InputError("letter '" + tok + "' has a malformed element");
        }
        if (g <= 0 || g >= gc.order(x))
            throw InputError("letter '" + tok + "' needs a non-identity element of the local group");
        w.push_back({x, g});
    }
    return w;
}

std::string word_to_string(const GC& gc, const GroupWord& w)
{
    std::string s;
    for (const auto& l : w)
        s += (s.empty() ? "" : " ") + gc.poset.id(l.vertex) + ":" + std::to_string(l.element);
    return s;
}

GroupWord inverse_word(const GC& gc, const GroupWord& w)
{
    GroupWord r;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        r.push_back({it->vertex, gc.group(it->vertex).inv(it->element)});
    return r;
}

json word_to_json(const GC& gc, const GroupWord& w)
{
    json j = json::array();
    for (const auto& l : w)
        j.push_back({gc.poset.id(l.vertex), l.element});
    return j;
}

std::vector<int> DevelopedBall::cells_at(int X) const
{
    std::vector<int> out;
    for (int g = 0; g < slot_count(X); ++g)
        if (slot(X, g) >= 0)
            out.push_back(slot(X, g));
    return out;
}

bool DevelopedBall::cell_interior(int cell) const
{
    for (int x = 0; x < n_types_; ++x)
        if (!saturated(inst(cell, x)))
            return false;
    return true;
}

// Builds balls by saturating instances. Creating a cell propagates two local
// rules until closure:
//   at a big instance, cells whose labels differ by psi_vw(G_v) share the
//   small instance of type v;
//   at a small instance, all cells share the big instances above it.
// Types the rules do not reach get fresh instances.
class Developer {
public:
    Developer(const GC& gc, const DevelopOptions& opts) : opts_(opts)
    {
        b_.gc_ = std::make_shared<const GC>(gc);
        const GC& g = *b_.gc_;
        n_ = g.poset.size();
        b_.n_types_ = n_;
        psi_img_.resize(n_);
        psi_pre_.resize(n_);
        for (int x = 0; x < n_; ++x)
            for (int y : g.poset.nbrs(x)) {
                int v = g.poset.is_small(x) ? x : y, w = g.poset.is_small(x) ? y : x;
                const auto& m = g.psi(v, w);
                std::vector<int> pre(g.order(w), -1);
                for (int h = 0; h < g.order(v); ++h)
                    pre[m.image[h]] = h;
                psi_img_[x].push_back(m.image);
                psi_pre_[x].push_back(std::move(pre));
            }
    }

    DevelopedBall run(int radius)
    {
        b_.radius_ = radius;
        b_.focused_ = !opts_.focus.empty();
        make_base();
        if (opts_.focus.empty())
            run_full(radius);
        else
            run_focused(radius);
        return std::move(b_);
    }

private:
    const GC& gc() const { return *b_.gc_; }

    int& cinst(int c, int x) { return b_.cell_inst_[static_cast<std::size_t>(c) * n_ + x]; }
    int& clab(int c, int x) { return b_.cell_label_[static_cast<std::size_t>(c) * n_ + x]; }
    int& slot(int X, int g) { return b_.slots_[b_.inst_off_[X] + g]; }

    int new_instance(int type)
    {
        int X = static_cast<int>(b_.inst_type_.size());
        b_.inst_type_.push_back(type);
        b_.inst_off_.push_back(static_cast<int>(b_.slots_.size()));
        b_.inst_filled_.push_back(0);
        b_.slots_.resize(b_.slots_.size() + gc().order(type), -1);
        return X;
    }

    int new_cell(int dist)
    {
        if (b_.cell_dist_.size() >= opts_.max_cells)
            throw ResourceError("development exceeds the cell budget of " +
                                std::to_string(opts_.max_cells));
        int c = static_cast<int>(b_.cell_dist_.size());
        b_.cell_dist_.push_back(dist);
        b_.cell_inst_.resize(b_.cell_inst_.size() + n_, -1);
        b_.cell_label_.resize(b_.cell_label_.size() + n_, -1);
        return c;
    }

    void attach_fresh(int c)
    {
        for (int x = 0; x < n_; ++x)
            if (cinst(c, x) < 0) {
                int X = new_instance(x);
                cinst(c, x) = X;
                clab(c, x) = 0;
                slot(X, 0) = c;
                b_.inst_filled_[X] = 1;
            }
    }

    void make_base()
    {
        int c = new_cell(0);
        attach_fresh(c);
    }

    // Position of y in the neighbour list of x.
    int nbr_pos(int x, int y) const
    {
        const auto& nb = gc().poset.nbrs(x);
        return static_cast<int>(std::lower_bound(nb.begin(), nb.end(), y) - nb.begin());
    }

    void create_cell(int seedX, int seed_label, int dist)
    {
        const GC& g = gc();
        int c = new_cell(dist);
        std::vector<std::pair<int, int>> work{{seedX, seed_label}};
        while (!work.empty()) {
            auto [X, y] = work.back();
            work.pop_back();
            int x = b_.inst_type_[X];
            if (cinst(c, x) >= 0) {
                if (cinst(c, x) != X || clab(c, x) != y)
                    throw ConsistencyError("cell " + std::to_string(c) + " reached two instances of type '" +
                                           g.poset.id(x) + "'");
                continue;
            }
            int occ = slot(X, y);
            if (occ >= 0 && occ != c)
                throw ConsistencyError("cell " + std::to_string(c) + " coincides with cell " +
                                       std::to_string(occ) + " at an instance of type '" +
                                       g.poset.id(x) + "'");
            cinst(c, x) = X;
            clab(c, x) = y;
            slot(X, y) = c;
            ++b_.inst_filled_[X];

            const auto& Gx = g.group(x);
            const auto& nb = g.poset.nbrs(x);
            if (g.poset.is_big(x)) {
                for (std::size_t i = 0; i < nb.size(); ++i) {
                    int v = nb[i];
                    const auto& img = psi_img_[x][i];
                    const auto& pre = psi_pre_[x][i];
                    for (int h : img) {
                        int d = slot(X, Gx.mul(y, h));
                        if (d < 0 || d == c)
                            continue;
                        int diff = pre[Gx.mul(Gx.inv(clab(d, x)), y)];
                        work.push_back({cinst(d, v), g.group(v).mul(clab(d, v), diff)});
                        break;
                    }
                }
            } else {
                int d = -1;
                for (int h = 0; h < Gx.order() && d < 0; ++h)
                    if (slot(X, h) >= 0 && slot(X, h) != c)
                        d = slot(X, h);
                if (d >= 0) {
                    int diff = Gx.mul(Gx.inv(clab(d, x)), y);
                    for (std::size_t i = 0; i < nb.size(); ++i) {
                        int w = nb[i];
                        int img = psi_img_[x][i][diff];
                        work.push_back({cinst(d, w), g.group(w).mul(clab(d, w), img)});
                    }
                }
            }
        }
        attach_fresh(c);
    }

    void saturate(int X, int dist)
    {
        int n = gc().order(b_.inst_type_[X]);
        for (int y = 0; y < n; ++y)
            if (slot(X, y) < 0)
                create_cell(X, y, dist);
    }

    void saturate_cell(int c)
    {
        int d = b_.cell_dist_[c];
        for (int x = 0; x < n_; ++x) {
            int X = cinst(c, x);
            if (b_.inst_filled_[X] < gc().order(x))
                saturate(X, d + 1);
        }
    }

    void run_full(int radius)
    {
        int layer_begin = 0;
        for (int n = 0; n < radius; ++n) {
            int layer_end = static_cast<int>(b_.cell_dist_.size());
            std::vector<int> todo;
            for (int c = layer_begin; c < layer_end; ++c)
                for (int x = 0; x < n_; ++x)
                    todo.push_back(cinst(c, x));
            std::sort(todo.begin(), todo.end());
            todo.erase(std::unique(todo.begin(), todo.end()), todo.end());
            for (int X : todo)
                if (b_.inst_filled_[X] < gc().order(b_.inst_type_[X]))
                    saturate(X, n + 1);
            layer_begin = layer_end;
        }
    }

    void run_focused(int radius)
    {
        const GC& g = gc();
        for (const auto& word : opts_.focus) {
            int cur = 0;
            for (std::size_t i = 0; i <= word.size(); ++i) {
                if (b_.cell_dist_[cur] >= radius)
                    break;
                saturate_cell(cur);
                if (i == word.size())
                    break;
                const auto& l = word[i];
                int X = cinst(cur, l.vertex);
                cur = slot(X, g.group(l.vertex).mul(clab(cur, l.vertex), l.element));
            }
        }
    }

    const DevelopOptions& opts_;
    DevelopedBall b_;
    int n_ = 0;
    // Indexed by vertex, then by position in its neighbour list.
    std::vector<std::vector<std::vector<int>>> psi_img_, psi_pre_;
};

DevelopedBall develop_ball(const GC& gc, int radius, const DevelopOptions& opts)
{
    if (radius < 0)
        throw InputError("radius must be non-negative");
    auto rep = validate(gc);
    if (!rep.ok())
        throw InputError("cannot develop an invalid complex: " + rep.issues.front().message);
    Developer dev(gc, opts);
    return dev.run(radius);
}

ResolveResult resolve_word(const DevelopedBall& ball, const GroupWord& word)
{
    const GC& gc = ball.gc();
    int cur = ball.base_cell();
    for (std::size_t i = 0; i < word.size(); ++i) {
        const auto& l = word[i];
        if (l.vertex < 0 || l.vertex >= gc.poset.size())
            throw InputError("letter names an unknown vertex");
        if (l.element <= 0 || l.element >= gc.order(l.vertex))
            throw InputError("letter at '" + gc.poset.id(l.vertex) + "' needs a non-identity element");
        int X = ball.inst(cur, l.vertex);
        int next = ball.slot(X, gc.group(l.vertex).mul(ball.label(cur, l.vertex), l.element));
        if (next < 0)
            return {false, -1, static_cast<int>(i)};
        cur = next;
    }
    return {true, cur, -1};
}

LinkGraph cone_link(const DevelopedBall& ball, int cell)
{
    const auto& q = ball.gc().poset;
    LinkGraph L;
    L.centre = VertexKind::Cone;
    L.graph = Graph(q.size());
    for (int x = 0; x < q.size(); ++x)
        L.node.push_back(ball.inst(cell, x));
    for (auto [v, w] : q.edges())
        L.graph.add_edge(v, w);
    L.graph.normalize();
    return L;
}

LinkGraph instance_link(const DevelopedBall& ball, int X)
{
    const GC& gc = ball.gc();
    int x = ball.inst_type(X);
    LinkGraph L;
    L.centre = gc.poset.is_small(x) ? VertexKind::Small : VertexKind::Big;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> nodes;
    for (int c : ball.cells_at(X))
        for (int y : gc.poset.nbrs(x)) {
            int Y = ball.inst(c, y);
            edges.push_back({-(c + 1), Y});
            nodes.push_back(-(c + 1));
            nodes.push_back(Y);
        }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    L.node = nodes;
    L.graph = Graph(static_cast<int>(nodes.size()));
    auto idx = [&](int id) {
        return static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), id) - nodes.begin());
    };
    for (auto [a, b] : edges)
        L.graph.add_edge(idx(a), idx(b));
    L.graph.normalize();
    return L;
}

ValidationReport check_links(const DevelopedBall& ball)
{
    ValidationReport r;
    const GC& gc = ball.gc();
    const auto& q = gc.poset;

    for (int c = 0; c < ball.cell_count(); ++c) {
        std::set<int> seen;
        for (int x = 0; x < q.size(); ++x) {
            int X = ball.inst(c, x);
            if (X < 0 || ball.inst_type(X) != x || !seen.insert(X).second) {
                r.add("cone_link", "attachment of cell " + std::to_string(c) + " is not injective and typed",
                      {{"cell", c}, {"type", q.id(x)}});
                break;
            }
        }
    }

    for (int X = 0; X < ball.instance_count(); ++X) {
        if (!ball.saturated(X))
            continue;
        int x = ball.inst_type(X);
        const auto& G = gc.group(x);
        auto cells = ball.cells_at(X);
        if (static_cast<int>(cells.size()) != G.order()) {
            r.add("link_size", "instance " + std::to_string(X) + " has the wrong number of cells",
                  {{"instance", X}});
            continue;
        }
        if (q.is_small(x)) {
            // Link is |Q_{>v}| joined with |G_v| cone points.
            int c0 = cells[0];
            for (int c : cells)
                for (int w : q.nbrs(x)) {
                    int expect = gc.group(w).mul(
                        ball.label(c0, w),
                        gc.psi(x, w).image[G.mul(G.inv(ball.label(c0, x)), ball.label(c, x))]);
                    if (ball.inst(c, w) != ball.inst(c0, w) || ball.label(c, w) != expect) {
                        r.add("small_link",
                              "cells at small instance " + std::to_string(X) + " disagree above it",
                              {{"instance", X}, {"type", q.id(x)}, {"cells", {c0, c}}, {"big", q.id(w)}});
                        goto next_instance;
                    }
                }
        } else {
            // Link is the coset graph of G_w over the images of the smalls below.
            for (int v : q.nbrs(x)) {
                auto img = image_set(gc.psi(v, x));
                std::set<int> distinct;
                for (int g = 0; g < G.order(); ++g) {
                    int c = ball.slot(X, g);
                    distinct.insert(ball.inst(c, v));
                    for (int h : img) {
                        int d = ball.slot(X, G.mul(g, h));
                        if (ball.inst(d, v) != ball.inst(c, v)) {
                            r.add("big_link",
                                  "cells in one coset at big instance " + std::to_string(X) +
                                      " do not share a small instance",
                                  {{"instance", X}, {"type", q.id(x)}, {"small", q.id(v)}, {"cells", {c, d}}});
                            goto next_instance;
                        }
                    }
                }
                if (static_cast<int>(distinct.size()) * static_cast<int>(img.size()) != G.order()) {
                    r.add("big_link",
                          "small instances at big instance " + std::to_string(X) +
                              " do not match the cosets of the image of '" + q.id(v) + "'",
                          {{"instance", X}, {"type", q.id(x)}, {"small", q.id(v)}});
                    goto next_instance;
                }
            }
        }
    next_instance:;
    }
    return r;
}

int squared_edge_length(VertexKind a, VertexKind b)
{
    auto has = [&](VertexKind k) { return a == k || b == k; };
    if (a == b)
        throw InputError("no edge joins two vertices of the same type");
    if (has(VertexKind::Small) && has(VertexKind::Big))
        return 1;
    if (has(VertexKind::Small))
        return 3;
    return 4;
}

ValidationReport check_type_coloring(const DevelopedBall& ball)
{
    ValidationReport r;
    const auto& q = ball.gc().poset;
    auto kind_of = [&](int X) { return q.is_small(ball.inst_type(X)) ? VertexKind::Small : VertexKind::Big; };
    for (int c = 0; c < ball.cell_count(); ++c)
        for (auto [v, w] : q.edges()) {
            int V = ball.inst(c, v), W = ball.inst(c, w);
            VertexKind kv = kind_of(V), kw = kind_of(W);
            if (kv != VertexKind::Small || kw != VertexKind::Big || ball.inst_type(V) != v ||
                ball.inst_type(W) != w) {
                r.add("type_coloring", "triangle without one vertex of each type",
                      {{"cell", c}, {"edge", {q.id(v), q.id(w)}}});
                return r;
            }
            int sb = squared_edge_length(kv, kw);
            int sc = squared_edge_length(kv, VertexKind::Cone);
            int bc = squared_edge_length(kw, VertexKind::Cone);
            // Right angle at the small vertex, hypotenuse twice the short side.
            if (sb + sc != bc || 4 * sb != bc) {
                r.add("type_coloring", "edge lengths are not type-determined",
                      {{"cell", c}, {"edge", {q.id(v), q.id(w)}}});
                return r;
            }
        }
    return r;
}

ValidationReport check_geodesic_completeness(const DevelopedBall& ball)
{
    ValidationReport r;
    const auto& q = ball.gc().poset;
    for (int x = 0; x < q.size(); ++x)
        if (q.valence(x) < 2) {
            r.add("free_face", "edge from a cone vertex to '" + q.id(x) + "' lies in a single triangle",
                  {{"cell", ball.base_cell()}, {"type", q.id(x)}, {"valence", q.valence(x)}});
            break;
        }
    int saturated = 0;
    for (int X = 0; X < ball.instance_count(); ++X) {
        if (!ball.saturated(X))
            continue;
        ++saturated;
        auto L = instance_link(ball, X);
        for (int i = 0; i < L.graph.n; ++i)
            if (L.graph.adj[i].size() < 2) {
                json node = L.node[i] < 0 ? json{{"cone", -L.node[i] - 1}} : json{{"instance", L.node[i]}};
                r.add("free_face", "link of instance " + std::to_string(X) + " has a vertex of valence < 2",
                      {{"instance", X}, {"type", q.id(ball.inst_type(X))}, {"link_vertex", node}});
                return r;
            }
    }
    if (saturated == 0)
        r.warnings.push_back("no saturated instances; only cone links were checked");
    return r;
}

WitnessReport infinite_order_witness(const GC& gc, const DevelopedBall& ball, const std::string& v1s,
                                     const std::string& v2s, int g1, int g2, int powers)
{
    const auto& q = gc.poset;
    int v1 = q.index(v1s), v2 = q.index(v2s);
    if (v1 < 0 || v2 < 0 || !q.is_small(v1) || !q.is_small(v2))
        throw InputError("infinite_order_witness needs two small vertices");
    auto R = realise(q);
    auto dist = bfs_dist(R.graph, v1);
    if (dist[v2] < 0 || dist[v2] < 6) {
        std::string path;
        if (dist[v2] >= 0) {
            // Walk back along decreasing distance.
            std::vector<int> p{v2};
            while (p.back() != v1)
                for (int y : R.graph.adj[p.back()])
                    if (dist[y] == dist[p.back()] - 1) {
                        p.push_back(y);
                        break;
                    }
            for (auto it = p.rbegin(); it != p.rend(); ++it)
                path += (path.empty() ? "" : " ") + q.id(*it);
        }
        throw InputError("vertices '" + v1s + "' and '" + v2s + "' are not antipodal (distance " +
                         std::to_string(dist[v2]) + ", path " + path + ")");
    }
    if (g1 < 0)
        g1 = 1;
    if (g2 < 0)
        g2 = 1;
    if (g1 <= 0 || g1 >= gc.order(v1) || g2 <= 0 || g2 >= gc.order(v2))
        throw InputError("infinite_order_witness needs non-identity elements");
    if (powers < 0)
        powers = ball.radius() / 2;

    constexpr int kPi = 420;  // angle units of pi/420
    WitnessReport rep;
    json& d = rep.details;
    d["distance_in_Q"] = dist[v2];
    d["angle_unit"] = "pi/420";
    bool ok = true;

    GroupWord axis;
    for (int n = 0; n < powers; ++n) {
        axis.push_back({v2, g2});
        axis.push_back({v1, g1});
    }
    // Cells along the axis, from the prefixes of the word.
    std::vector<int> cells{ball.base_cell()};
    for (std::size_t i = 1; i <= axis.size(); ++i) {
        auto res = resolve_word(ball, GroupWord(axis.begin(), axis.begin() + i));
        if (!res.ok)
            break;
        cells.push_back(res.cell);
    }
    d["axis_cells"] = cells;
    d["axis_complete"] = cells.size() == axis.size() + 1;
    ok &= cells.size() == axis.size() + 1;

    json cone = json::array();
    for (int c : cells) {
        auto L = cone_link(ball, c);
        auto dl = bfs_dist(L.graph, v1);
        int ang = dl[v2] < 0 ? -1 : dl[v2] * (kPi / 6);
        bool pass = ang >= kPi;
        ok &= pass;
        cone.push_back({{"cell", c}, {"link_distance", dl[v2]}, {"angle", ang}, {"pass", pass}});
    }
    d["cone_checks"] = cone;

    json small = json::array();
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        int x = axis[i].vertex;
        int X = ball.inst(cells[i], x);
        bool shared = ball.inst(cells[i + 1], x) == X;
        int ang = -1;
        if (shared && ball.saturated(X)) {
            auto L = instance_link(ball, X);
            auto at = [&](int id) {
                return static_cast<int>(std::find(L.node.begin(), L.node.end(), id) - L.node.begin());
            };
            auto dl = bfs_dist(L.graph, at(-(cells[i] + 1)));
            int dd = dl[at(-(cells[i + 1] + 1))];
            ang = dd < 0 ? -1 : dd * (kPi / 2);
        }
        bool pass = shared && ang == kPi;
        ok &= pass;
        small.push_back({{"instance", X}, {"type", q.id(x)}, {"angle", ang}, {"pass", pass}});
    }
    d["small_checks"] = small;

    json pw = json::array();
    std::set<int> distinct{ball.base_cell()};
    bool all_distinct = true;
    for (int n = 1; n <= powers; ++n) {
        std::size_t len = static_cast<std::size_t>(2 * n);
        int cell = len < cells.size() ? cells[len] : -1;
        bool fresh = cell >= 0 && distinct.insert(cell).second;
        all_distinct &= fresh;
        pw.push_back({{"n", n}, {"cell", cell}});
    }
    d["powers"] = pw;
    d["powers_distinct"] = all_distinct;
    ok &= all_distinct && powers > 0;
    rep.verified = ok;
    return rep;
}

json DevelopedBall::to_json() const
{
    const auto& q = gc_->poset;
    json j;
    j["radius"] = radius_;
    j["focused"] = focused_;
    j["base_cell"] = 0;
    j["types"] = json::array();
    for (int x = 0; x < n_types_; ++x)
        j["types"].push_back(q.id(x));
    json cells = json::array();
    for (int c = 0; c < cell_count(); ++c) {
        std::vector<int> in(n_types_), lab(n_types_);
        for (int x = 0; x < n_types_; ++x) {
            in[x] = inst(c, x);
            lab[x] = label(c, x);
        }
        cells.push_back({{"id", c}, {"dist", cell_dist(c)}, {"attachment", in}, {"labels", lab}});
    }
    j["cells"] = std::move(cells);
    json insts = json::array();
    for (int X = 0; X < instance_count(); ++X) {
        std::vector<int> s(slot_count(X));
        for (int g = 0; g < slot_count(X); ++g)
            s[g] = slot(X, g);
        insts.push_back({{"id", X},
                         {"type", q.id(inst_type(X))},
                         {"kind", q.is_small(inst_type(X)) ? "small" : "big"},
                         {"torsor", s},
                         {"saturated", saturated(X)}});
    }
    j["instances"] = std::move(insts);
    return j;
}

std::string DevelopedBall::to_dot() const
{
    const auto& q = gc_->poset;
    std::ostringstream os;
    os << "graph ball {\n";
    for (int c = 0; c < cell_count(); ++c)
        os << "  c" << c << " [shape=point, color=red];\n";
    for (int X = 0; X < instance_count(); ++X)
        os << "  i" << X << " [label=\"" << q.id(inst_type(X)) << "\", shape=circle, style=filled, fillcolor="
           << (q.is_small(inst_type(X)) ? "gray" : "white") << (saturated(X) ? "" : ", peripheries=2")
           << "];\n";
    std::set<std::pair<int, int>> sb;
    for (int c = 0; c < cell_count(); ++c) {
        for (int x = 0; x < n_types_; ++x)
            os << "  c" << c << " -- i" << inst(c, x) << " [color=lightgray];\n";
        for (auto [v, w] : q.edges())
            sb.insert({inst(c, v), inst(c, w)});
    }
    for (auto [a, b] : sb)
        os << "  i" << a << " -- i" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace gcg
