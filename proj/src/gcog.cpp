#include "gcg/gcog.hpp"

#include <algorithm>
#include <set>

namespace gcg {

const Monomorphism& GraphicalComplexOfGroups::psi(int v, int w) const
{
    auto it = maps.find({v, w});
    if (it == maps.end())
        throw InputError("no structure map " + poset.id(v) + " -> " + poset.id(w));
    return it->second;
}

std::string map_key(const std::string& v, const std::string& w) { return v + "->" + w; }

ValidationReport validate(const GC& gc)
{
    ValidationReport r;
    const auto& q = gc.poset;
    auto edge_json = [&](int v, int w) { return json::array({q.id(v), q.id(w)}); };

    for (int x = 0; x < q.size(); ++x) {
        if (gc.order(x) < 2)
            r.add("trivial_group", "local group at '" + q.id(x) + "' is trivial",
                  {{"vertex", q.id(x)}});
        for (auto i : validate_group(gc.group(x)).issues) {
            i.witness["vertex"] = q.id(x);
            i.message = "group at '" + q.id(x) + "': " + i.message;
            r.issues.push_back(std::move(i));
        }
    }

    std::set<std::pair<int, int>> incidence(q.edges().begin(), q.edges().end());
    for (auto e : q.edges())
        if (!gc.maps.count(e))
            r.add("map_missing", "no structure map for " + q.id(e.first) + " <= " + q.id(e.second),
                  {{"edge", edge_json(e.first, e.second)}});
    for (const auto& [e, m] : gc.maps) {
        if (!incidence.count(e)) {
            r.add("map_extra", "structure map on a non-incidence " + q.id(e.first) + ", " +
                                   q.id(e.second),
                  {{"edge", edge_json(e.first, e.second)}});
            continue;
        }
        for (auto i : validate_monomorphism(m).issues) {
            i.witness["edge"] = edge_json(e.first, e.second);
            i.message = "map " + q.id(e.first) + " -> " + q.id(e.second) + ": " + i.message;
            r.issues.push_back(std::move(i));
        }
    }

    for (int w = q.small_count(); w < q.size(); ++w) {
        const auto& below = q.nbrs(w);
        for (std::size_t i = 0; i < below.size(); ++i)
            for (std::size_t j = i + 1; j < below.size(); ++j) {
                auto a = gc.maps.find({below[i], w});
                auto b = gc.maps.find({below[j], w});
                if (a == gc.maps.end() || b == gc.maps.end())
                    continue;
                auto common = subgroup_intersection(a->second, b->second);
                if (common.size() > 1) {
                    int shared = common[0] == 0 ? common[1] : common[0];
                    r.add("intersection",
                          "images of '" + q.id(below[i]) + "' and '" + q.id(below[j]) +
                              "' in '" + q.id(w) + "' share element " + std::to_string(shared),
                          {{"big", q.id(w)},
                           {"smalls", {q.id(below[i]), q.id(below[j])}},
                           {"element", shared}});
                }
            }
    }
    return r;
}

std::vector<int> image_owner(const GC& gc, int w)
{
    std::vector<int> owner(gc.order(w), -1);
    for (int v : gc.poset.nbrs(w)) {
        const auto& m = gc.psi(v, w);
        for (std::size_t g = 1; g < m.image.size(); ++g)
            owner[m.image[g]] = v;
    }
    return owner;
}

json ProperTripleWitness::to_json(const GC& gc) const
{
    const auto& q = gc.poset;
    const auto& G = gc.group(big);
    return json{{"big", q.id(big)},
                {"smalls", {q.id(v1), q.id(v2), q.id(v3)}},
                {"a", a},
                {"b", b},
                {"a_inv_b", G.mul(G.inv(a), b)},
                {"elements", {{q.id(big), a}, {q.id(big), b}}}};
}

bool is_proper_triple(const GC& gc, int w, int g1, int g2, int g3, ProperTripleWitness* out)
{
    const auto& G = gc.group(w);
    auto owner = image_owner(gc, w);
    int a = G.mul(G.inv(g1), g2);
    int b = G.mul(G.inv(g1), g3);
    int c = G.mul(G.inv(a), b);
    if (a == 0 || b == 0 || c == 0)
        return false;
    int v2 = owner[a], v1 = owner[b], v3 = owner[c];
    if (v1 < 0 || v2 < 0 || v3 < 0 || v1 == v2 || v1 == v3 || v2 == v3)
        return false;
    if (out)
        *out = ProperTripleWitness{w, v1, v2, v3, a, b};
    return true;
}

std::optional<ProperTripleWitness> find_proper_triple_at(const GC& gc, int w)
{
    const auto& G = gc.group(w);
    const auto& below = gc.poset.nbrs(w);
    if (below.size() < 3)
        return std::nullopt;
    auto owner = image_owner(gc, w);
    for (int v1 : below)
        for (int v2 : below) {
            if (v1 == v2)
                continue;
            std::optional<ProperTripleWitness> best;
            auto im1 = image_set(gc.psi(v1, w));
            auto im2 = image_set(gc.psi(v2, w));
            for (int a : im2) {
                if (a == 0)
                    continue;
                for (int b : im1) {
                    if (b == 0)
                        continue;
                    int v3 = owner[G.mul(G.inv(a), b)];
                    if (v3 < 0 || v3 == v1 || v3 == v2)
                        continue;
                    ProperTripleWitness t{w, v1, v2, v3, a, b};
                    if (!best || t.key() < best->key())
                        best = t;
                }
            }
            if (best)
                return best;
        }
    return std::nullopt;
}

std::optional<ProperTripleWitness> find_proper_triple(const GC& gc)
{
    for (int w = gc.poset.small_count(); w < gc.poset.size(); ++w)
        if (auto t = find_proper_triple_at(gc, w))
            return t;
    return std::nullopt;
}

Certificate check_t4(const GC& gc)
{
    Certificate c;
    c.name = "T(4)";
    auto t = find_proper_triple(gc);
    c.verdict = !t.has_value();
    if (t)
        c.witness = t->to_json(gc);
    c.notes.push_back("T(4) is evaluated as the absence of a proper triple");
    return c;
}

std::string to_string(VerdictKind k)
{
    switch (k) {
    case VerdictKind::Hyperbolic: return "Hyperbolic";
    case VerdictKind::FlatFound: return "FlatFound";
    case VerdictKind::Inconclusive: return "Inconclusive";
    case VerdictKind::OutOfTheory: return "OutOfTheory";
    }
    return "?";
}

json Verdict::to_json() const
{
    json j{{"verdict", to_string(kind)}, {"reason", reason}, {"hugeness", hugeness}};
    j["witness"] = witness;
    return j;
}

Presentation fundamental_group_presentation(const GC& gc)
{
    Presentation p;
    const auto& q = gc.poset;
    std::vector<std::vector<int>> gen(q.size());
    for (int x = 0; x < q.size(); ++x) {
        gen[x].assign(gc.order(x), -1);
        for (int g = 1; g < gc.order(x); ++g) {
            gen[x][g] = static_cast<int>(p.generators.size());
            p.generators.push_back(q.id(x) + ":" + std::to_string(g));
        }
    }
    auto word = [&](int x, int g) {
        return g == 0 ? std::vector<int>{} : std::vector<int>{gen[x][g]};
    };
    for (int x = 0; x < q.size(); ++x) {
        const auto& G = gc.group(x);
        for (int a = 1; a < G.order(); ++a)
            for (int b = 1; b < G.order(); ++b)
                p.relations.push_back({{gen[x][a], gen[x][b]}, word(x, G.mul(a, b))});
    }
    for (auto [v, w] : q.edges()) {
        const auto& m = gc.psi(v, w);
        for (int g = 1; g < gc.order(v); ++g)
            p.relations.push_back({{gen[v][g]}, word(w, m.image[g])});
    }
    return p;
}

json Presentation::to_json() const
{
    json rel = json::array();
    for (const auto& [l, r] : relations)
        rel.push_back({{"lhs", l}, {"rhs", r}});
    return json{{"generators", generators}, {"relations", rel}};
}

json gc_to_json(const GC& gc)
{
    json j;
    j["poset"] = poset_to_json(gc.poset);
    j["groups"] = json::object();
    for (int x = 0; x < gc.poset.size(); ++x)
        j["groups"][gc.poset.id(x)] = group_to_json(gc.group(x));
    j["maps"] = json::object();
    for (const auto& [e, m] : gc.maps)
        j["maps"][map_key(gc.poset.id(e.first), gc.poset.id(e.second))] = m.image;
    return j;
}

GC gc_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("poset") || !j.contains("groups") || !j.contains("maps"))
        throw InputError("complex object needs 'poset', 'groups' and 'maps'");
    GC gc;
    gc.poset = poset_from_json(j.at("poset"));
    const auto& q = gc.poset;
    gc.local.resize(q.size());
    const auto& groups = j.at("groups");
    for (int x = 0; x < q.size(); ++x) {
        if (!groups.contains(q.id(x)))
            throw InputError("no local group for vertex '" + q.id(x) + "'");
        gc.local[x] = group_from_json(groups.at(q.id(x)));
    }
    for (auto it = groups.begin(); it != groups.end(); ++it)
        if (q.index(it.key()) < 0)
            throw InputError("local group given for unknown vertex '" + it.key() + "'");
    const auto& maps = j.at("maps");
    for (auto it = maps.begin(); it != maps.end(); ++it) {
        const std::string& key = it.key();
        auto pos = key.find("->");
        if (pos == std::string::npos)
            throw InputError("map key '" + key + "' is not of the form v->w");
        int v = q.index(key.substr(0, pos)), w = q.index(key.substr(pos + 2));
        if (v < 0 || w < 0)
            throw InputError("map key '" + key + "' names an unknown vertex");
        Monomorphism m{gc.local[v], gc.local[w], it.value().get<std::vector<int>>()};
        if (static_cast<int>(m.image.size()) != m.source->order())
            throw InputError("map '" + key + "' has " + std::to_string(m.image.size()) +
                             " entries, source order is " + std::to_string(m.source->order()));
        for (int t : m.image)
            if (t < 0 || t >= m.target->order())
                throw InputError("map '" + key + "' entry " + std::to_string(t) + " out of range");
        gc.maps[{v, w}] = std::move(m);
    }
    return gc;
}

}  // namespace gcg
