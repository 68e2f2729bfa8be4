#include "gcg/poset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gcg {

ValidationReport validate_poset_data(const PosetData& d)
{
    ValidationReport r;
    std::set<std::string> small(d.small.begin(), d.small.end());
    std::set<std::string> big(d.big.begin(), d.big.end());
    if (small.size() != d.small.size() || big.size() != d.big.size())
        r.add("duplicate_vertex", "a vertex id is listed twice");
    for (const auto& s : d.small)
        if (big.count(s)) {
            r.add("small_big_overlap", "id '" + s + "' is both small and big", {{"vertex", s}});
            break;
        }
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& [s, b] : d.edges) {
        if (!small.count(s) || !big.count(b)) {
            r.add("unknown_vertex", "incidence (" + s + ", " + b + ") references a missing vertex",
                  {{"edge", {s, b}}});
            break;
        }
    }
    for (const auto& e : d.edges) {
        if (!seen.insert(e).second) {
            r.add("duplicate_incidence", "incidence (" + e.first + ", " + e.second + ") repeated",
                  {{"edge", {e.first, e.second}}});
            break;
        }
    }
    return r;
}

OneDimPoset::OneDimPoset(PosetData d) : data_(std::move(d))
{
    auto rep = validate_poset_data(data_);
    if (!rep.ok())
        throw InputError("invalid poset: " + rep.issues.front().message);
    n_small_ = static_cast<int>(data_.small.size());
    ids_ = data_.small;
    ids_.insert(ids_.end(), data_.big.begin(), data_.big.end());
    for (int i = 0; i < size(); ++i)
        index_[ids_[i]] = i;
    nbrs_.assign(size(), {});
    for (const auto& [s, b] : data_.edges) {
        int v = index_.at(s), w = index_.at(b);
        edges_.push_back({v, w});
        nbrs_[v].push_back(w);
        nbrs_[w].push_back(v);
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto& n : nbrs_)
        std::sort(n.begin(), n.end());
}

int OneDimPoset::index(const std::string& id) const
{
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

bool OneDimPoset::leq(int v, int w) const
{
    if (v == w)
        return true;
    if (!is_small(v) || !is_big(w))
        return false;
    return std::binary_search(nbrs_[v].begin(), nbrs_[v].end(), w);
}

RealisationGraph realise(const OneDimPoset& q)
{
    RealisationGraph r;
    r.graph = Graph(q.size());
    for (auto [v, w] : q.edges())
        r.graph.add_edge(v, w);
    r.graph.normalize();
    for (int x = 0; x < q.size(); ++x) {
        r.small.push_back(q.is_small(x));
        r.ids.push_back(q.id(x));
    }
    return r;
}

std::optional<long long> girth(const RealisationGraph& g)
{
    auto c = shortest_cycle(g.graph);
    if (c.length < 0)
        return std::nullopt;
    return c.length;
}

std::optional<long long> poset_girth(const OneDimPoset& q) { return girth(realise(q)); }

int hugeness(const OneDimPoset& q)
{
    auto g = poset_girth(q);
    return g ? static_cast<int>(*g / 2) : kHugeForest;
}

Certificate check_huge(const OneDimPoset& q, int k)
{
    if (k < 2)
        throw InputError("check_huge needs k >= 2");
    Certificate c;
    c.name = "huge";
    auto r = realise(q);
    auto cyc = shortest_cycle(r.graph);
    c.details["k"] = k;
    c.details["girth"] = cyc.length < 0 ? json("infinite") : json(cyc.length);
    c.verdict = cyc.length < 0 || cyc.length >= 2 * k;
    if (!c.verdict) {
        json w = json::array();
        for (int x : cyc.cycle)
            w.push_back(q.id(x));
        c.witness = {{"cycle", w}, {"length", cyc.length}};
    }
    return c;
}

ValidationReport check_convention(const OneDimPoset& q)
{
    ValidationReport r;
    if (q.size() <= 1)
        r.add("too_small", "poset has at most one vertex",
              q.size() ? json{{"vertex", q.id(0)}} : json::object());
    auto g = realise(q);
    auto comp = component_ids(g.graph);
    for (int x = 0; x < q.size(); ++x)
        if (comp[x] != 0) {
            r.add("disconnected", "vertex '" + q.id(x) + "' is not connected to '" + q.id(0) + "'",
                  {{"vertex", q.id(x)}});
            break;
        }
    for (int x = 0; x < q.size(); ++x)
        if (q.valence(x) == 1) {
            r.add("valence_one", "vertex '" + q.id(x) + "' has valence " +
                                     std::to_string(q.valence(x)),
                  {{"vertex", q.id(x)}, {"valence", q.valence(x)}});
            break;
        }
    auto aps = articulation_points(g.graph);
    if (!aps.empty())
        r.add("cut_vertex", "vertex '" + q.id(aps.front()) + "' disconnects |Q|",
              {{"vertex", q.id(aps.front())}});
    return r;
}

RealisationGraph up_set(const OneDimPoset& q, const std::string& v)
{
    int x = q.index(v);
    if (x < 0)
        throw InputError("up_set: unknown vertex '" + v + "'");
    if (!q.is_small(x))
        throw InputError("up_set: '" + v + "' is not small");
    RealisationGraph r;
    r.graph = Graph(1 + q.valence(x));
    r.small = {1};
    r.ids = {v};
    int i = 1;
    for (int w : q.nbrs(x)) {
        r.graph.add_edge(0, i++);
        r.small.push_back(0);
        r.ids.push_back(q.id(w));
    }
    return r;
}

OneDimPoset simplify(const OneDimPoset& q)
{
    std::vector<char> alive(q.size(), 1);
    std::vector<int> deg(q.size());
    for (int x = 0; x < q.size(); ++x)
        deg[x] = q.valence(x);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < q.size(); ++x)
            if (alive[x] && deg[x] == 1) {
                alive[x] = 0;
                for (int y : q.nbrs(x))
                    if (alive[y])
                        --deg[y];
                deg[x] = 0;
                changed = true;
            }
    }
    PosetData d;
    for (int x = 0; x < q.size(); ++x)
        if (alive[x])
            (q.is_small(x) ? d.small : d.big).push_back(q.id(x));
    for (auto [v, w] : q.edges())
        if (alive[v] && alive[w])
            d.edges.push_back({q.id(v), q.id(w)});
    return OneDimPoset(std::move(d));
}

OneDimPoset simplices_of_graph(const std::vector<std::string>& vertices,
                               const std::vector<std::pair<std::string, std::string>>& edges)
{
    PosetData d;
    d.small = vertices;
    for (const auto& [a, b] : edges) {
        std::string e = a + "-" + b;
        d.big.push_back(e);
        d.edges.push_back({a, e});
        d.edges.push_back({b, e});
    }
    return OneDimPoset(std::move(d));
}

std::string to_dot(const OneDimPoset& q)
{
    std::ostringstream os;
    os << "graph Q {\n";
    for (int x = 0; x < q.size(); ++x)
        os << "  \"" << q.id(x) << "\" ["
           << (q.is_small(x) ? "shape=circle, style=filled, fillcolor=gray" :
                               "shape=circle, style=filled, fillcolor=white")
           << "];\n";
    for (auto [v, w] : q.edges())
        os << "  \"" << q.id(v) << "\" -- \"" << q.id(w) << "\";\n";
    os << "}\n";
    return os.str();
}

json poset_to_json(const OneDimPoset& q)
{
    json j;
    j["small"] = q.data().small;
    j["big"] = q.data().big;
    j["edges"] = json::array();
    for (const auto& [s, b] : q.data().edges)
        j["edges"].push_back({s, b});
    return j;
}

namespace {
std::string id_string(const json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    throw InputError("vertex ids must be strings or integers");
}
}  // namespace

PosetData poset_data_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("small") || !j.contains("big") || !j.contains("edges"))
        throw InputError("poset object needs 'small', 'big' and 'edges'");
    PosetData d;
    for (const auto& v : j.at("small"))
        d.small.push_back(id_string(v));
    for (const auto& v : j.at("big"))
        d.big.push_back(id_string(v));
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw InputError("each poset edge must be a [small, big] pair");
        d.edges.push_back({id_string(e[0]), id_string(e[1])});
    }
    return d;
}

OneDimPoset poset_from_json(const json& j) { return OneDimPoset(poset_data_from_json(j)); }

}  // namespace gcg
