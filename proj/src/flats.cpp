#include "gcg/flats.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace gcg {

std::array<TilingEdge, 3> corner_edges(TilingVertex v)
{
    auto [q, r] = v.pos;
    if (v.ab == 'A')
        return {TilingEdge{0, {q, r}}, TilingEdge{2, {q, r}}, TilingEdge{1, {q, r}}};
    return {TilingEdge{1, {q + 1, r}}, TilingEdge{0, {q, r + 1}}, TilingEdge{2, {q, r}}};
}

std::array<TilingVertex, 2> edge_ends(TilingEdge e)
{
    auto [q, r] = e.pos;
    TilingVertex a{'A', {q, r}};
    switch (e.type) {
    case 0: return {a, TilingVertex{'B', {q, r - 1}}};
    case 1: return {a, TilingVertex{'B', {q - 1, r}}};
    default: return {a, TilingVertex{'B', {q, r}}};
    }
}

std::array<TilingEdge, 6> hexagon_edges(Axial h)
{
    auto [q, r] = h;
    return {TilingEdge{0, {q, r}},     TilingEdge{1, {q, r}},     TilingEdge{2, {q - 1, r}},
            TilingEdge{0, {q - 1, r}}, TilingEdge{1, {q, r - 1}}, TilingEdge{2, {q, r - 1}}};
}

std::array<TilingVertex, 6> hexagon_corners(Axial h)
{
    auto [q, r] = h;
    return {TilingVertex{'A', {q, r}},         TilingVertex{'B', {q - 1, r}},
            TilingVertex{'A', {q - 1, r}},     TilingVertex{'B', {q - 1, r - 1}},
            TilingVertex{'A', {q, r - 1}},     TilingVertex{'B', {q, r - 1}}};
}

HexCovering::HexCovering(OneDimPoset q, std::vector<std::array<int, 3>> rotation)
    : q_(std::move(q)), rot_(std::move(rotation))
{
    if (static_cast<int>(rot_.size()) != q_.big_count() || rot_.empty())
        throw InputError("rotation system needs one entry per big vertex");
    frames_[TilingVertex{'A', {0, 0}}] = {q_.small_count(), 0};
}

HexCovering::Frame HexCovering::frame(TilingVertex target) const
{
    if (auto it = frames_.find(target); it != frames_.end())
        return it->second;
    // BFS outward from the known frames, staying near the target.
    auto far = [&](const TilingVertex& v) {
        int dq = v.pos.q - target.pos.q, dr = v.pos.r - target.pos.r;
        return std::abs(dq) + std::abs(dr);
    };
    std::deque<TilingVertex> queue;
    for (const auto& [v, f] : frames_)
        queue.push_back(v);
    std::sort(queue.begin(), queue.end(), [&](const auto& a, const auto& b) { return far(a) < far(b); });
    int limit = far(queue.front()) + 4;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        Frame f = frames_.at(v);
        auto es = corner_edges(v);
        for (int j = 0; j < 3; ++j) {
            int s = rot_[f.big - q_.small_count()][(j + f.offset) % 3];
            auto ends = edge_ends(es[j]);
            TilingVertex u = ends[0] == v ? ends[1] : ends[0];
            const auto& nb = q_.nbrs(s);
            int b2 = nb[0] == f.big ? nb[1] : nb[0];
            const auto& r2 = rot_[b2 - q_.small_count()];
            int p = static_cast<int>(std::find(r2.begin(), r2.end(), s) - r2.begin());
            auto eu = corner_edges(u);
            int jj = static_cast<int>(std::find(eu.begin(), eu.end(), es[j]) - eu.begin());
            Frame g{b2, ((p - jj) % 3 + 3) % 3};
            auto [it, fresh] = frames_.try_emplace(u, g);
            if (!fresh) {
                if (it->second.big != g.big || it->second.offset != g.offset)
                    throw ConsistencyError("rotation system does not define a covering of the plane");
                continue;
            }
            if (u == target)
                return g;
            if (far(u) <= limit)
                queue.push_back(u);
        }
    }
    throw ConsistencyError("covering frame not reachable");
}

int HexCovering::big_at(TilingVertex v) const { return frame(v).big; }

int HexCovering::small_at(TilingEdge e) const
{
    auto v = edge_ends(e)[0];
    Frame f = frame(v);
    auto es = corner_edges(v);
    int j = static_cast<int>(std::find(es.begin(), es.end(), e) - es.begin());
    return rot_[f.big - q_.small_count()][(j + f.offset) % 3];
}

std::optional<HexCovering> recognise_hex_torus(const GC& gc)
{
    const auto& q = gc.poset;
    if (q.big_count() == 0)
        return std::nullopt;
    for (int v = 0; v < q.small_count(); ++v)
        if (gc.order(v) != 2 || q.valence(v) != 2)
            return std::nullopt;
    for (int w = q.small_count(); w < q.size(); ++w) {
        if (gc.order(w) != 4 || q.valence(w) != 3)
            return std::nullopt;
        for (int x = 0; x < 4; ++x)
            if (gc.group(w).mul(x, x) != 0)
                return std::nullopt;
    }
    int S = q.small_count(), B = q.big_count();
    auto other = [&](int s, int b) { return q.nbrs(s)[0] == b ? q.nbrs(s)[1] : q.nbrs(s)[0]; };

    // Bigs in BFS order so each choice is constrained by earlier ones.
    std::vector<int> order, seen(B, 0);
    order.push_back(S);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int s : q.nbrs(order[i])) {
            int b = other(s, order[i]);
            if (!seen[b - S]) {
                seen[b - S] = 1;
                order.push_back(b);
            }
        }
    if (static_cast<int>(order.size()) != B)
        return std::nullopt;

    std::vector<int> parity(B, -1);
    auto rot = [&](int b) {
        const auto& n = q.nbrs(b);
        return parity[b - S] == 0 ? std::array<int, 3>{n[0], n[1], n[2]} : std::array<int, 3>{n[0], n[2], n[1]};
    };
    // Every face through an assigned big closes after exactly 6 edges, as far
    // as the assigned rotations determine it.
    auto faces_ok = [&]() {
        for (int b : order) {
            if (parity[b - S] < 0)
                continue;
            for (int s0 : q.nbrs(b)) {
                int cb = b, cs = s0, len = 0;
                while (true) {
                    int nb = other(cs, cb);
                    if (parity[nb - S] < 0)
                        break;
                    auto r = rot(nb);
                    int p = static_cast<int>(std::find(r.begin(), r.end(), cs) - r.begin());
                    cb = nb;
                    cs = r[(p + 1) % 3];
                    ++len;
                    if (cb == b && cs == s0) {
                        if (len != 6)
                            return false;
                        break;
                    }
                    if (len > 6)
                        return false;
                }
            }
        }
        return true;
    };
    long long budget = 2'000'000;
    std::function<bool(std::size_t)> search = [&](std::size_t i) {
        if (i == order.size())
            return true;
        if (--budget < 0)
            return false;
        for (int p = 0; p < (i == 0 ? 1 : 2); ++p) {
            parity[order[i] - S] = p;
            if (faces_ok() && search(i + 1))
                return true;
        }
        parity[order[i] - S] = -1;
        return false;
    };
    if (!search(0))
        return std::nullopt;
    std::vector<std::array<int, 3>> rotation;
    for (int b = S; b < q.size(); ++b)
        rotation.push_back(rot(b));
    return HexCovering(q, std::move(rotation));
}

int HexPatch::index(Axial h) const
{
    if (h.q < 0 || h.q >= width || h.r < 0 || h.r >= height)
        return -1;
    return h.r * width + h.q;
}

int HexPatch::diameter() const
{
    int n = static_cast<int>(hexagons.size());
    Graph g(n);
    for (const auto& a : adjacencies)
        g.add_edge(a.a, a.b);
    int d = 0;
    for (int s = 0; s < n; ++s)
        for (int x : bfs_dist(g, s))
            d = std::max(d, x);
    return d;
}

json HexPatch::to_json(const GC* gc) const
{
    auto name = [&](int x) { return x < 0 || !gc ? json(x) : json(gc->poset.id(x)); };
    json j;
    j["width"] = width;
    j["height"] = height;
    j["hexagons"] = json::array();
    for (auto h : hexagons)
        j["hexagons"].push_back(axial_to_json(h));
    j["adjacencies"] = json::array();
    for (const auto& a : adjacencies)
        j["adjacencies"].push_back({{"hexagons", {a.a, a.b}},
                                    {"edge", {{"type", a.edge.type}, {"at", axial_to_json(a.edge.pos)}}},
                                    {"small", name(a.small)}});
    j["corners"] = json::array();
    for (const auto& c : corners)
        j["corners"].push_back({{"vertex", std::string(1, c.vertex.ab) + "(" + std::to_string(c.vertex.pos.q) +
                                               "," + std::to_string(c.vertex.pos.r) + ")"},
                                {"hexagons", c.hexagons},
                                {"big", name(c.big)}});
    return j;
}

HexPatch build_hex_patch(int w, int h, const HexCovering* p)
{
    if (w < 1 || h < 1)
        throw InputError("patch dimensions must be positive");
    HexPatch P;
    P.width = w;
    P.height = h;
    for (int r = 0; r < h; ++r)
        for (int q = 0; q < w; ++q)
            P.hexagons.push_back({q, r});
    for (auto hx : P.hexagons) {
        auto [q, r] = hx;
        const std::pair<Axial, TilingEdge> nbrs[3] = {{{q + 1, r}, {0, {q, r}}},
                                                      {{q, r + 1}, {1, {q, r}}},
                                                      {{q + 1, r - 1}, {2, {q, r - 1}}}};
        for (const auto& [nb, e] : nbrs) {
            int b = P.index(nb);
            if (b < 0)
                continue;
            int a = P.index(hx);
            P.adjacencies.push_back({std::min(a, b), std::max(a, b), e, p ? p->small_at(e) : -1});
        }
    }
    std::sort(P.adjacencies.begin(), P.adjacencies.end(),
              [](const auto& x, const auto& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    std::set<TilingVertex> corners;
    for (auto hx : P.hexagons)
        for (auto c : hexagon_corners(hx))
            corners.insert(c);
    for (auto c : corners) {
        auto [q, r] = c.pos;
        std::array<Axial, 3> hs = c.ab == 'A' ? std::array<Axial, 3>{Axial{q, r}, Axial{q + 1, r}, Axial{q, r + 1}} :
                                                std::array<Axial, 3>{Axial{q + 1, r}, Axial{q, r + 1}, Axial{q + 1, r + 1}};
        std::array<int, 3> idx{};
        bool inside = true;
        for (int i = 0; i < 3; ++i)
            inside &= (idx[i] = P.index(hs[i])) >= 0;
        if (!inside)
            continue;
        std::sort(idx.begin(), idx.end());
        P.corners.push_back({c, idx, p ? p->big_at(c) : -1});
    }
    for (auto hx : P.hexagons) {
        std::array<int, 12> cyc{};
        auto es = hexagon_edges(hx);
        auto cs = hexagon_corners(hx);
        for (int i = 0; i < 6; ++i) {
            cyc[2 * i] = p ? p->small_at(es[i]) : -1;
            cyc[2 * i + 1] = p ? p->big_at(cs[i]) : -1;
        }
        P.cycles.push_back(cyc);
    }
    return P;
}

FlatLabelling label_patch(const GC& gc, const HexPatch& patch, int base)
{
    int n = static_cast<int>(patch.hexagons.size());
    if (base < 0 || base >= n)
        throw InputError("base hexagon outside the patch");
    std::vector<std::vector<std::pair<int, int>>> nb(n);
    for (const auto& a : patch.adjacencies) {
        if (a.small < 0)
            throw InputError("patch has no p' typing; build it with a covering");
        if (gc.order(a.small) != 2)
            throw InputError("labelling needs Z/2 at small vertex '" + gc.poset.id(a.small) + "'");
        nb[a.a].push_back({a.b, a.small});
        nb[a.b].push_back({a.a, a.small});
    }
    for (int w = gc.poset.small_count(); w < gc.poset.size(); ++w)
        if (gc.order(w) != 4)
            throw InputError("labelling needs Klein-four big groups");
    FlatLabelling L;
    L.base = base;
    L.label.assign(n, {});
    L.parent.assign(n, -2);
    L.parent[base] = -1;
    std::deque<int> queue{base};
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        std::sort(nb[a].begin(), nb[a].end());
        for (auto [b, v] : nb[a]) {
            if (L.parent[b] != -2)
                continue;
            L.parent[b] = a;
            L.label[b] = L.label[a];
            if (!L.label[b].empty() && L.label[b].back().vertex == v)
                L.label[b].pop_back();
            else
                L.label[b].push_back({v, 1});
            queue.push_back(b);
        }
    }
    return L;
}

Certificate verify_consistency(const GC& gc, const HexPatch& patch, const FlatLabelling& lab,
                               const DevelopedBall* ball)
{
    Certificate cert;
    cert.name = "flat_consistency";
    const auto& q = gc.poset;
    auto shared_small = [&](int a, int b) {
        auto [x, y] = std::minmax(a, b);
        for (const auto& adj : patch.adjacencies)
            if (adj.a == x && adj.b == y)
                return adj.small;
        return -1;
    };

    json witness;
    for (const auto& c : patch.corners) {
        auto [h1, h2, h3] = c.hexagons;
        int w = c.big;
        int v12 = shared_small(h1, h2), v13 = shared_small(h1, h3), v23 = shared_small(h2, h3);
        auto elem = [&](int v) { return gc.maps.count({v, w}) ? gc.psi(v, w).image[1] : -1; };
        int x12 = elem(v12), x13 = elem(v13), x23 = elem(v23);
        const auto& G = gc.group(w);
        bool ok = x12 > 0 && x13 > 0 && x23 > 0 && G.mul(G.inv(x12), x13) == x23;
        if (!ok) {
            witness = {{"kind", "triple"},
                       {"big", q.id(w)},
                       {"hexagons", c.hexagons},
                       {"smalls", {q.id(v12), q.id(v13), q.id(v23)}},
                       {"elements", {x12, x13, x23}}};
            break;
        }
    }
    cert.details["corners_checked"] = patch.corners.size();
    bool local_ok = witness.is_null();

    std::string status = local_ok ? "consistent" : "inconsistent";
    if (local_ok && ball) {
        int checked = 0;
        for (const auto& adj : patch.adjacencies) {
            auto ra = resolve_word(*ball, lab.label[adj.a]);
            auto rb = resolve_word(*ball, lab.label[adj.b]);
            if (!ra.ok || !rb.ok) {
                status = "unknown";
                cert.details["required_radius"] = patch.required_radius();
                break;
            }
            ++checked;
            if (ra.cell == rb.cell || ball->inst(ra.cell, adj.small) != ball->inst(rb.cell, adj.small)) {
                status = "inconsistent";
                witness = {{"kind", "adjacency"},
                           {"hexagons", {adj.a, adj.b}},
                           {"small", q.id(adj.small)},
                           {"cells", {ra.cell, rb.cell}}};
                break;
            }
        }
        cert.details["adjacencies_checked"] = checked;
    }
    cert.verdict = status == "consistent";
    cert.witness = witness;
    cert.details["status"] = status;
    cert.details["adjacencies"] = patch.adjacencies.size();
    return cert;
}

FlatEmbedding embed_flat(const DevelopedBall& ball, const HexPatch& patch, const FlatLabelling& lab)
{
    const GC& gc = ball.gc();
    const auto& q = gc.poset;
    FlatEmbedding E;
    auto& cert = E.certificate;
    cert.name = "flat_embedding";
    int n = static_cast<int>(patch.hexagons.size());
    E.cells.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        auto r = resolve_word(ball, lab.label[i]);
        if (!r.ok) {
            cert.verdict = false;
            cert.details["status"] = "unknown";
            cert.details["required_radius"] = patch.required_radius();
            cert.witness = {{"hexagon", i}, {"word", word_to_string(gc, lab.label[i])}};
            return E;
        }
        E.cells[i] = r.cell;
    }

    // Image of every plane vertex, recorded from each hexagon containing it.
    std::map<TilingEdge, std::set<int>> small_img;
    std::map<TilingVertex, std::set<int>> big_img;
    std::map<TilingEdge, int> small_hexes;
    std::map<TilingVertex, int> big_hexes;
    std::set<std::array<int, 3>> triangles;
    for (int i = 0; i < n; ++i) {
        auto es = hexagon_edges(patch.hexagons[i]);
        auto cs = hexagon_corners(patch.hexagons[i]);
        const auto& cyc = patch.cycles[i];
        int c = E.cells[i];
        for (int k = 0; k < 6; ++k) {
            small_img[es[k]].insert(ball.inst(c, cyc[2 * k]));
            big_img[cs[k]].insert(ball.inst(c, cyc[2 * k + 1]));
            ++small_hexes[es[k]];
            ++big_hexes[cs[k]];
        }
        for (int k = 0; k < 12; ++k) {
            int a = ball.inst(c, cyc[k]), b = ball.inst(c, cyc[(k + 1) % 12]);
            triangles.insert({c, std::min(a, b), std::max(a, b)});
        }
    }

    json fail;
    for (const auto& [e, imgs] : small_img)
        if (imgs.size() != 1 && fail.is_null())
            fail = {{"kind", "well_defined"}, {"edge", {{"type", e.type}, {"at", axial_to_json(e.pos)}}}};
    for (const auto& [v, imgs] : big_img)
        if (imgs.size() != 1 && fail.is_null())
            fail = {{"kind", "well_defined"}, {"corner", std::string(1, v.ab) + axial_to_json(v.pos).dump()}};
    bool well_defined = fail.is_null();

    std::set<int> cells(E.cells.begin(), E.cells.end());
    std::set<int> smalls, bigs;
    for (const auto& [e, imgs] : small_img)
        smalls.insert(*imgs.begin());
    for (const auto& [v, imgs] : big_img)
        bigs.insert(*imgs.begin());
    bool injective = static_cast<int>(cells.size()) == n && smalls.size() == small_img.size() &&
                     bigs.size() == big_img.size();
    if (!injective && fail.is_null())
        fail = {{"kind", "injective"}};

    // Angle sums in units of pi/420 at interior vertices of the patch.
    constexpr int cone = 70, small = 210, big = 140, full = 840;
    std::map<int, int> cone_count, small_count, big_count;
    for (const auto& t : triangles) {
        cone_count[t[0]]++;
        for (int p : {1, 2}) {
            int X = t[p];
            (q.is_small(ball.inst_type(X)) ? small_count : big_count)[X]++;
        }
    }
    bool angles_ok = true;
    json sums = json::object();
    std::set<int> cone_sums, small_sums, big_sums;
    for (int c : E.cells)
        cone_sums.insert(cone_count[c] * cone);
    for (const auto& [e, k] : small_hexes)
        if (k == 2)
            small_sums.insert(small_count[*small_img[e].begin()] * small);
    for (const auto& [v, k] : big_hexes)
        if (k == 3)
            big_sums.insert(big_count[*big_img[v].begin()] * big);
    for (const auto* s : {&cone_sums, &small_sums, &big_sums})
        for (int a : *s)
            angles_ok &= a == full;
    sums["cone"] = std::vector<int>(cone_sums.begin(), cone_sums.end());
    sums["small"] = std::vector<int>(small_sums.begin(), small_sums.end());
    sums["big"] = std::vector<int>(big_sums.begin(), big_sums.end());
    if (!angles_ok && fail.is_null())
        fail = {{"kind", "angle_sum"}, {"sums", sums}};

    int triples = 0;
    bool triples_ok = true;
    for (const auto& c : patch.corners) {
        int w = c.big;
        ProperTripleWitness t;
        bool ok = is_proper_triple(gc, w, ball.label(E.cells[c.hexagons[0]], w),
                                   ball.label(E.cells[c.hexagons[1]], w), ball.label(E.cells[c.hexagons[2]], w), &t);
        triples += ok;
        triples_ok &= ok;
        if (!ok && fail.is_null())
            fail = {{"kind", "proper_triple"}, {"hexagons", c.hexagons}};
    }

    cert.verdict = well_defined && injective && angles_ok && triples_ok;
    cert.witness = fail;
    cert.details["status"] = cert.verdict ? "embedded" : "failed";
    cert.details["cells"] = E.cells;
    cert.details["well_defined"] = well_defined;
    cert.details["injective"] = injective;
    cert.details["angle_sums"] = sums;
    cert.details["angle_unit"] = "pi/420";
    cert.details["interior_corners"] = patch.corners.size();
    cert.details["proper_triples"] = triples;
    cert.notes.push_back("local isometry and injectivity are certified; global isometry is not");
    return E;
}

Certificate check_flat_shape(const DevelopedBall& ball, const HexPatch& patch, const std::vector<int>& cells)
{
    const GC& gc = ball.gc();
    const auto& q = gc.poset;
    Certificate cert;
    cert.name = "flat_shape";
    auto fail = [&](json w) {
        cert.verdict = false;
        cert.witness = std::move(w);
        return cert;
    };
    int n = static_cast<int>(patch.hexagons.size());
    if (static_cast<int>(cells.size()) != n)
        throw InputError("one cell per patch hexagon is required");
    if (patch.corners.empty())
        return fail({{"kind", "no_hexagonal_structure"}});
    std::set<int> distinct(cells.begin(), cells.end());
    if (static_cast<int>(distinct.size()) != n || *distinct.begin() < 0)
        return fail({{"kind", "cone_vertices"}});

    auto shared = [&](int a, int b) {
        std::vector<int> s;
        for (int x = 0; x < q.size(); ++x)
            if (ball.inst(a, x) == ball.inst(b, x))
                s.push_back(x);
        return s;
    };
    std::set<std::pair<int, int>> adjacent;
    for (const auto& adj : patch.adjacencies) {
        adjacent.insert({adj.a, adj.b});
        std::vector<int> expect{adj.small};
        for (int w : q.nbrs(adj.small))
            expect.push_back(w);
        std::sort(expect.begin(), expect.end());
        if (shared(cells[adj.a], cells[adj.b]) != expect)
            return fail({{"kind", "edge_midpoint"}, {"hexagons", {adj.a, adj.b}}, {"small", q.id(adj.small)}});
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!adjacent.count({a, b}) && !shared(cells[a], cells[b]).empty())
                return fail({{"kind", "non_adjacent_overlap"}, {"hexagons", {a, b}}});
    for (const auto& c : patch.corners) {
        auto [h1, h2, h3] = c.hexagons;
        auto s12 = shared(cells[h1], cells[h2]);
        std::vector<int> common;
        for (int x : s12)
            if (ball.inst(cells[h3], x) == ball.inst(cells[h1], x))
                common.push_back(x);
        if (common != std::vector<int>{c.big})
            return fail({{"kind", "tiling_vertex"}, {"hexagons", c.hexagons}});
        int w = c.big;
        if (!is_proper_triple(gc, w, ball.label(cells[h1], w), ball.label(cells[h2], w), ball.label(cells[h3], w)))
            return fail({{"kind", "proper_triple"}, {"hexagons", c.hexagons}});
    }
    cert.verdict = true;
    cert.details["hexagons"] = n;
    cert.details["interior_corners"] = patch.corners.size();
    return cert;
}

DevelopOptions flat_focus(const FlatLabelling& lab)
{
    DevelopOptions o;
    o.focus = lab.label;
    return o;
}

std::string patch_to_svg(const GC& gc, const HexPatch& patch, const FlatLabelling* lab)
{
    const double size = 48.0, s3 = std::sqrt(3.0);
    auto centre = [&](Axial h) {
        return std::pair<double, double>{size * s3 * (h.q + h.r / 2.0), -size * 1.5 * h.r};
    };
    double minx = 1e9, maxx = -1e9, miny = 1e9, maxy = -1e9;
    for (auto h : patch.hexagons) {
        auto [x, y] = centre(h);
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
    }
    double pad = size * 1.2;
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << minx - pad << " " << miny - pad << " "
       << (maxx - minx) + 2 * pad << " " << (maxy - miny) + 2 * pad << "\">\n";
    for (int i = 0; i < static_cast<int>(patch.hexagons.size()); ++i) {
        auto [cx, cy] = centre(patch.hexagons[i]);
        os << "  <polygon fill=\"" << (lab && lab->base == i ? "#fde68a" : "#e0f2fe")
           << "\" stroke=\"#334155\" points=\"";
        for (int k = 0; k < 6; ++k) {
            double a = M_PI / 180.0 * (60 * k - 30);
            os << cx + size * std::cos(a) << "," << cy + size * std::sin(a) << " ";
        }
        os << "\"/>\n";
        std::string text = lab ? word_to_string(gc, lab->label[i]) : "";
        os << "  <text x=\"" << cx << "\" y=\"" << cy << "\" font-size=\"7\" text-anchor=\"middle\">"
           << (text.empty() ? "e" : text) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace gcg
