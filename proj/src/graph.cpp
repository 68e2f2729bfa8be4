#include "gcg/graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <queue>

namespace gcg {

bool Graph::has_edge(int u, int v) const
{
    const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    int other = adj[u].size() <= adj[v].size() ? v : u;
    return std::find(a.begin(), a.end(), other) != a.end();
}

std::size_t Graph::edge_count() const
{
    std::size_t s = 0;
    for (const auto& a : adj)
        s += a.size();
    return s / 2;
}

void Graph::normalize()
{
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
}

std::vector<int> bfs_dist(const Graph& g, int src)
{
    std::vector<int> d(g.n, -1);
    std::queue<int> q;
    d[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.adj[x])
            if (d[y] < 0) {
                d[y] = d[x] + 1;
                q.push(y);
            }
    }
    return d;
}

CycleResult shortest_cycle(const Graph& g)
{
    CycleResult best;
    std::vector<int> dist(g.n), par(g.n);
    for (int r = 0; r < g.n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(par.begin(), par.end(), -1);
        std::queue<int> q;
        dist[r] = 0;
        q.push(r);
        int bx = -1, by = -1;
        long long blen = -1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            if (blen >= 0 && 2 * dist[x] + 1 > blen)
                break;
            for (int y : g.adj[x]) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    par[y] = x;
                    q.push(y);
                } else if (y != par[x] && x != par[y]) {
                    long long len = dist[x] + dist[y] + 1;
                    if (blen < 0 || len < blen) {
                        blen = len;
                        bx = x;
                        by = y;
                    }
                }
            }
        }
        if (blen >= 0 && (best.length < 0 || blen < best.length)) {
            std::vector<int> px, py;
            for (int v = bx; v != -1; v = par[v])
                px.push_back(v);
            for (int v = by; v != -1; v = par[v])
                py.push_back(v);
            // px and py both end at r.
            std::vector<int> cyc(px.rbegin(), px.rend());
            for (std::size_t i = 0; i + 1 < py.size(); ++i)
                cyc.push_back(py[i]);
            best.length = blen;
            best.cycle = std::move(cyc);
        }
    }
    return best;
}

std::vector<int> component_ids(const Graph& g)
{
    std::vector<int> comp(g.n, -1);
    int c = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : g.adj[x])
                if (comp[y] < 0) {
                    comp[y] = c;
                    stack.push_back(y);
                }
        }
        ++c;
    }
    return comp;
}

std::vector<int> articulation_points(const Graph& g)
{
    std::vector<int> disc(g.n, -1), low(g.n, 0), parent(g.n, -1);
    std::vector<char> is_ap(g.n, 0);
    int timer = 0;
    // Iterative Tarjan; the frame stores the next neighbour index.
    for (int s = 0; s < g.n; ++s) {
        if (disc[s] >= 0)
            continue;
        std::vector<std::pair<int, std::size_t>> st{{s, 0}};
        disc[s] = low[s] = timer++;
        int root_children = 0;
        while (!st.empty()) {
            auto& [x, i] = st.back();
            if (i < g.adj[x].size()) {
                int y = g.adj[x][i++];
                if (disc[y] < 0) {
                    parent[y] = x;
                    disc[y] = low[y] = timer++;
                    if (x == s)
                        ++root_children;
                    st.push_back({y, 0});
                } else if (y != parent[x]) {
                    low[x] = std::min(low[x], disc[y]);
                }
            } else {
                int done = x;
                st.pop_back();
                if (!st.empty()) {
                    int p = st.back().first;
                    low[p] = std::min(low[p], low[done]);
                    if (p != s && low[done] >= disc[p])
                        is_ap[p] = 1;
                }
            }
        }
        if (root_children > 1)
            is_ap[s] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (is_ap[v])
            out.push_back(v);
    return out;
}

CycleResult weighted_shortest_cycle(const WeightedGraph& g)
{
    constexpr long long INF = std::numeric_limits<long long>::max() / 4;
    CycleResult best;
    std::vector<long long> d(g.n);
    std::vector<int> par(g.n);
    for (int u = 0; u < g.n; ++u) {
        for (std::size_t ei = 0; ei < g.adj[u].size(); ++ei) {
            auto [v, w] = g.adj[u][ei];
            if (v < u)
                continue;
            // Shortest u -> v path avoiding the edge (u, v) itself.
            std::fill(d.begin(), d.end(), INF);
            std::fill(par.begin(), par.end(), -1);
            using Item = std::pair<long long, int>;
            std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
            d[u] = 0;
            pq.push({0, u});
            while (!pq.empty()) {
                auto [dx, x] = pq.top();
                pq.pop();
                if (dx != d[x])
                    continue;
                if (x == v)
                    break;
                if (best.length >= 0 && dx + w >= best.length)
                    break;
                for (auto [y, wy] : g.adj[x]) {
                    if ((x == u && y == v) || (x == v && y == u))
                        continue;
                    if (dx + wy < d[y]) {
                        d[y] = dx + wy;
                        par[y] = x;
                        pq.push({d[y], y});
                    }
                }
            }
            if (d[v] >= INF)
                continue;
            long long len = d[v] + w;
            if (best.length < 0 || len < best.length) {
                best.length = len;
                best.cycle.clear();
                for (int x = v; x != -1; x = par[x])
                    best.cycle.push_back(x);
                std::reverse(best.cycle.begin(), best.cycle.end());
            }
        }
    }
    return best;
}

std::optional<std::vector<int>> find_chordless_cycle(const Graph& g, int min_len, int max_len)
{
    if (max_len < min_len || max_len < 3)
        return std::nullopt;
    std::vector<int> path;
    std::vector<char> on_path(g.n, 0);
    std::optional<std::vector<int>> found;

    // Every path vertex other than its predecessor and (when closing) the
    // start must be non-adjacent to the candidate; this keeps paths induced.
    std::function<void()> extend = [&]() {
        if (found)
            return;
        int s = path.front();
        int last = path.back();
        int j = static_cast<int>(path.size()) - 1;
        for (int u : g.adj[last]) {
            if (found)
                return;
            if (u <= s || on_path[u])
                continue;
            bool ok = true;
            bool closes = false;
            for (int i = 0; i < j && ok; ++i) {
                if (!g.has_edge(u, path[i]))
                    continue;
                if (i == 0 && j >= 1)
                    closes = true;
                else
                    ok = false;
            }
            if (!ok)
                continue;
            int len = j + 2;
            if (closes) {
                if (len >= min_len && len <= max_len) {
                    found = path;
                    found->push_back(u);
                }
                continue;
            }
            if (len + 1 > max_len)
                continue;
            path.push_back(u);
            on_path[u] = 1;
            extend();
            on_path[u] = 0;
            path.pop_back();
        }
    };

    for (int s = 0; s < g.n && !found; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        extend();
        on_path[s] = 0;
    }
    return found;
}

std::vector<std::vector<int>> enumerate_cycles(const Graph& g, int max_len, std::size_t cap)
{
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> on_path(g.n, 0);
    std::function<void()> extend = [&]() {
        if (out.size() >= cap)
            return;
        int s = path.front();
        int last = path.back();
        for (int u : g.adj[last]) {
            if (u == s && path.size() >= 3 && path[1] < path.back()) {
                out.push_back(path);
                if (out.size() >= cap)
                    return;
                continue;
            }
            if (u <= s || on_path[u] || static_cast<int>(path.size()) >= max_len)
                continue;
            path.push_back(u);
            on_path[u] = 1;
            extend();
            on_path[u] = 0;
            path.pop_back();
        }
    };
    for (int s = 0; s < g.n && out.size() < cap; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        extend();
        on_path[s] = 0;
    }
    return out;
}

namespace {

// Colour refinement; returns stable colours comparable across graphs because
// signatures are interned in a shared table.
void refine(const Graph& a, const Graph& b, std::vector<int>& ca, std::vector<int>& cb)
{
    for (int round = 0; round < a.n + 1; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> table;
        auto sig = [&](const Graph& g, const std::vector<int>& c, int v) {
            std::vector<int> ns;
            for (int u : g.adj[v])
                ns.push_back(c[u]);
            std::sort(ns.begin(), ns.end());
            return std::make_pair(c[v], ns);
        };
        std::vector<std::pair<int, std::vector<int>>> sa(a.n), sb(b.n);
        for (int v = 0; v < a.n; ++v)
            table.emplace(sa[v] = sig(a, ca, v), 0);
        for (int v = 0; v < b.n; ++v)
            table.emplace(sb[v] = sig(b, cb, v), 0);
        int id = 0;
        for (auto& [k, val] : table)
            val = id++;
        std::vector<int> na(a.n), nb(b.n);
        for (int v = 0; v < a.n; ++v)
            na[v] = table[sa[v]];
        for (int v = 0; v < b.n; ++v)
            nb[v] = table[sb[v]];
        auto classes = [](const std::vector<int>& c) {
            std::vector<int> s(c);
            std::sort(s.begin(), s.end());
            return std::unique(s.begin(), s.end()) - s.begin();
        };
        bool stable = classes(na) == classes(ca) && classes(nb) == classes(cb);
        ca = std::move(na);
        cb = std::move(nb);
        if (stable)
            break;
    }
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b,
                                                 const std::vector<int>* colour_a,
                                                 const std::vector<int>* colour_b)
{
    if (a.n != b.n || a.edge_count() != b.edge_count())
        return std::nullopt;
    std::vector<int> ca(a.n, 0), cb(b.n, 0);
    if (colour_a && colour_b) {
        ca = *colour_a;
        cb = *colour_b;
    }
    refine(a, b, ca, cb);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return std::nullopt;
    }

    // Match vertices of a in BFS order so each new vertex has a mapped neighbour.
    std::vector<int> order;
    std::vector<char> seen(a.n, 0);
    for (int s = 0; s < a.n; ++s) {
        if (seen[s])
            continue;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            order.push_back(x);
            for (int y : a.adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    q.push(y);
                }
        }
    }

    std::vector<int> map(a.n, -1), used(b.n, 0);
    std::function<bool(std::size_t)> go = [&](std::size_t idx) -> bool {
        if (idx == order.size())
            return true;
        int x = order[idx];
        int anchor = -1;
        for (int y : a.adj[x])
            if (map[y] >= 0) {
                anchor = y;
                break;
            }
        std::vector<int> cand;
        if (anchor >= 0)
            cand = b.adj[map[anchor]];
        else
            for (int v = 0; v < b.n; ++v)
                cand.push_back(v);
        for (int u : cand) {
            if (used[u] || cb[u] != ca[x])
                continue;
            bool ok = true;
            for (int y : a.adj[x])
                if (map[y] >= 0 && !b.has_edge(u, map[y])) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            // Non-edges must map to non-edges among mapped vertices.
            std::size_t mapped_nbrs = 0;
            for (int y : a.adj[x])
                mapped_nbrs += map[y] >= 0;
            std::size_t used_nbrs = 0;
            for (int z : b.adj[u])
                used_nbrs += used[z] != 0;
            if (mapped_nbrs != used_nbrs)
                continue;
            map[x] = u;
            used[u] = 1;
            if (go(idx + 1))
                return true;
            map[x] = -1;
            used[u] = 0;
        }
        return false;
    };
    if (!go(0))
        return std::nullopt;
    return map;
}

}  // namespace gcg
