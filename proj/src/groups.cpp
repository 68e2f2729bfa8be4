#include "gcg/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace gcg {

int max_group_order()
{
    if (const char* s = std::getenv("GCG_MAX_GROUP_ORDER")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && v > 0)
            return static_cast<int>(v);
    }
    return 256;
}

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), n_(static_cast<int>(table.size()))
{
    if (n_ == 0)
        throw InputError("group '" + name_ + "': empty table");
    if (n_ > max_group_order())
        throw ResourceError("group '" + name_ + "': order " + std::to_string(n_) +
                            " exceeds cap " + std::to_string(max_group_order()));
    table_.reserve(static_cast<std::size_t>(n_) * n_);
    for (int a = 0; a < n_; ++a) {
        if (static_cast<int>(table[a].size()) != n_)
            throw InputError("group '" + name_ + "': row " + std::to_string(a) + " has length " +
                             std::to_string(table[a].size()) + ", expected " + std::to_string(n_));
        for (int x : table[a]) {
            if (x < 0 || x >= n_)
                throw InputError("group '" + name_ + "': entry " + std::to_string(x) +
                                 " out of range in row " + std::to_string(a));
            table_.push_back(x);
        }
    }
    inv_.assign(n_, -1);
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (mul(x, y) == 0) {
                inv_[x] = y;
                break;
            }
}

std::vector<std::vector<int>> FiniteGroup::table() const
{
    std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            t[a][b] = mul(a, b);
    return t;
}

int Monomorphism::preimage(int t) const
{
    for (std::size_t g = 0; g < image.size(); ++g)
        if (image[g] == t)
            return static_cast<int>(g);
    return -1;
}

ValidationReport validate_group(const FiniteGroup& g)
{
    ValidationReport r;
    const int n = g.order();

    for (int a = 0; a < n; ++a) {
        std::vector<char> row(n, 0), col(n, 0);
        bool row_ok = true, col_ok = true;
        for (int b = 0; b < n; ++b) {
            row_ok &= !std::exchange(row[g.mul(a, b)], 1);
            col_ok &= !std::exchange(col[g.mul(b, a)], 1);
        }
        if (!row_ok) {
            r.add("latin", "row " + std::to_string(a) + " is not a permutation", {{"row", a}});
            break;
        }
        if (!col_ok) {
            r.add("latin", "column " + std::to_string(a) + " is not a permutation", {{"column", a}});
            break;
        }
    }

    for (int x = 0; x < n; ++x)
        if (g.mul(0, x) != x || g.mul(x, 0) != x) {
            r.add("identity", "element 0 does not act as identity on " + std::to_string(x),
                  {{"element", x}});
            break;
        }

    for (int x = 0; x < n; ++x) {
        int y = g.inv(x);
        if (y < 0 || g.mul(x, y) != 0 || g.mul(y, x) != 0) {
            r.add("inverse", "element " + std::to_string(x) + " has no two-sided inverse",
                  {{"element", x}});
            break;
        }
    }

    bool assoc = true;
    for (int a = 0; a < n && assoc; ++a)
        for (int b = 0; b < n && assoc; ++b)
            for (int c = 0; c < n && assoc; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
                    r.add("associativity", "(ab)c != a(bc)", {{"a", a}, {"b", b}, {"c", c}});
                    assoc = false;
                }
    return r;
}

ValidationReport validate_monomorphism(const Monomorphism& m)
{
    if (!m.source || !m.target)
        throw InputError("monomorphism without source or target");
    const int ns = m.source->order(), nt = m.target->order();
    if (static_cast<int>(m.image.size()) != ns)
        throw InputError("monomorphism image has length " + std::to_string(m.image.size()) +
                         ", source order is " + std::to_string(ns));
    for (int x : m.image)
        if (x < 0 || x >= nt)
            throw InputError("monomorphism image entry " + std::to_string(x) + " out of range");

    ValidationReport r;
    if (m.image[0] != 0)
        r.add("mono_identity", "identity maps to " + std::to_string(m.image[0]),
              {{"image", m.image[0]}});

    bool hom = true;
    for (int a = 0; a < ns && hom; ++a)
        for (int b = 0; b < ns && hom; ++b)
            if (m.image[m.source->mul(a, b)] != m.target->mul(m.image[a], m.image[b])) {
                r.add("homomorphism", "psi(ab) != psi(a)psi(b)", {{"a", a}, {"b", b}});
                hom = false;
            }

    std::vector<int> seen(nt, -1);
    for (int a = 0; a < ns; ++a) {
        if (seen[m.image[a]] >= 0) {
            r.add("injective", "two elements share an image",
                  {{"a", seen[m.image[a]]}, {"b", a}, {"image", m.image[a]}});
            break;
        }
        seen[m.image[a]] = a;
    }

    if (!(ns < nt))
        r.add("proper", "inclusion is not proper", {{"source_order", ns}, {"target_order", nt}});
    return r;
}

GroupPtr make_group(std::string name, std::vector<std::vector<int>> table)
{
    return std::make_shared<const FiniteGroup>(std::move(name), std::move(table));
}

GroupPtr cyclic(int n)
{
    if (n < 1)
        throw InputError("cyclic group order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    return make_group("Z/" + std::to_string(n), std::move(t));
}

GroupPtr klein_four()
{
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            t[a][b] = a ^ b;
    return make_group("Z/2xZ/2", std::move(t));
}

std::pair<GroupPtr, std::vector<Monomorphism>> direct_product(const std::vector<GroupPtr>& gs)
{
    if (gs.empty())
        throw InputError("direct product of an empty list");
    const long long cap = max_group_order();
    long long total = 1;
    for (const auto& g : gs) {
        total *= g->order();
        if (total > cap)
            throw ResourceError("direct product order exceeds cap " + std::to_string(cap));
    }
    const int n = static_cast<int>(total);
    const int k = static_cast<int>(gs.size());

    // place[i] is the weight of digit i.
    std::vector<int> place(k, 1);
    for (int i = k - 2; i >= 0; --i)
        place[i] = place[i + 1] * gs[i + 1]->order();

    auto digit = [&](int x, int i) { return (x / place[i]) % gs[i]->order(); };

    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int c = 0;
            for (int i = 0; i < k; ++i)
                c += gs[i]->mul(digit(a, i), digit(b, i)) * place[i];
            t[a][b] = c;
        }

    std::string name;
    for (int i = 0; i < k; ++i)
        name += (i ? "x" : "") + gs[i]->name();
    auto prod = make_group(name, std::move(t));

    std::vector<Monomorphism> incl;
    for (int i = 0; i < k; ++i) {
        Monomorphism m{gs[i], prod, std::vector<int>(gs[i]->order())};
        for (int x = 0; x < gs[i]->order(); ++x)
            m.image[x] = x * place[i];
        incl.push_back(std::move(m));
    }
    return {prod, incl};
}

std::tuple<GroupPtr, Monomorphism, Monomorphism> dihedral(int m)
{
    if (m < 2)
        throw InputError("dihedral group needs m >= 2, got " + std::to_string(m));
    const int n = 2 * m;
    auto md = [m](int x) { return ((x % m) + m) % m; };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int a = x % m, b = y % m;
            bool fx = x >= m, fy = y >= m;
            // rho^a sigma^fx * rho^b sigma^fy = rho^(a +- b) sigma^(fx xor fy)
            int r = fx ? md(a - b) : md(a + b);
            t[x][y] = r + ((fx != fy) ? m : 0);
        }
    auto g = make_group("D" + std::to_string(m), std::move(t));
    auto z2 = cyclic(2);
    Monomorphism r{z2, g, {0, m}};
    Monomorphism s{z2, g, {0, m + 1}};
    return {g, r, s};
}

std::vector<int> image_set(const Monomorphism& m)
{
    std::vector<int> s(m.image);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::vector<int> subgroup_intersection(const Monomorphism& a, const Monomorphism& b)
{
    if (!a.target || !b.target || !(a.target == b.target || *a.target == *b.target))
        throw InputError("subgroup_intersection: monomorphisms have different targets");
    auto sa = image_set(a), sb = image_set(b);
    std::vector<int> out;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
    return out;
}

Monomorphism compose(const Monomorphism& first, const Monomorphism& second)
{
    if (!(first.target == second.source || *first.target == *second.source))
        throw InputError("compose: target of first is not source of second");
    Monomorphism m{first.source, second.target, std::vector<int>(first.image.size())};
    for (std::size_t x = 0; x < first.image.size(); ++x)
        m.image[x] = second.image[first.image[x]];
    return m;
}

Monomorphism involution_inclusion(const GroupPtr& target, int x)
{
    return Monomorphism{cyclic(2), target, {0, x}};
}

json group_to_json(const FiniteGroup& g)
{
    return json{{"name", g.name()}, {"order", g.order()}, {"table", g.table()}};
}

GroupPtr group_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("table"))
        throw InputError("group object needs a 'table'");
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    std::string name = j.value("name", std::string("G"));
    if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
        throw InputError("group '" + name + "': order field disagrees with table size");
    return make_group(std::move(name), std::move(table));
}

}  // namespace gcg
