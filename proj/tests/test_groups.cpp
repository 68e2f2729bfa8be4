#include <doctest.h>

#include <cstdlib>
#include <numeric>
#include <set>

#include "gcg/groups.hpp"

using namespace gcg;

namespace {

// Element orders computed by repeated multiplication.
std::multiset<int> element_orders(const FiniteGroup& g)
{
    std::multiset<int> out;
    for (int x = 0; x < g.order(); ++x) {
        int k = 1;
        for (int y = x; y != 0; y = g.mul(y, x))
            ++k;
        out.insert(x == 0 ? 1 : k);
    }
    return out;
}

bool is_abelian(const FiniteGroup& g)
{
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (g.mul(a, b) != g.mul(b, a))
                return false;
    return true;
}

}  // namespace

TEST_CASE("stock groups satisfy the axioms")
{
    for (int n = 1; n <= 12; ++n)
        CHECK(validate_group(*cyclic(n)).ok());
    CHECK(validate_group(*klein_four()).ok());
    for (int m = 2; m <= 8; ++m)
        CHECK(validate_group(*std::get<0>(dihedral(m))).ok());
    auto [p, inc] = direct_product({cyclic(2), cyclic(3), klein_four()});
    CHECK(p->order() == 24);
    CHECK(validate_group(*p).ok());
    for (const auto& m : inc)
        CHECK(validate_monomorphism(m).ok());
}

TEST_CASE("cyclic and Klein four orders")
{
    CHECK(element_orders(*cyclic(6)) == std::multiset<int>{1, 2, 3, 3, 6, 6});
    CHECK(element_orders(*klein_four()) == std::multiset<int>{1, 2, 2, 2});
    // (a, b) -> 2a + b
    auto k = klein_four();
    CHECK(k->mul(1, 2) == 3);
    CHECK(k->mul(3, 3) == 0);
}

TEST_CASE("dihedral group layout")
{
    for (int m = 2; m <= 7; ++m) {
        auto [d, s, rs] = dihedral(m);
        CHECK(d->order() == 2 * m);
        CHECK(is_abelian(*d) == (m <= 2));
        // rho = 1 has order m, every reflection has order 2.
        int k = 1;
        for (int y = 1; y != 0; y = d->mul(y, 1))
            ++k;
        CHECK(k == m);
        for (int j = 0; j < m; ++j)
            CHECK(d->mul(m + j, m + j) == 0);
        CHECK(s.image == std::vector<int>{0, m});
        CHECK(rs.image == std::vector<int>{0, m + 1});
        // The two reflections generate: their product is a rotation of order m.
        CHECK(d->mul(m, m + 1) != 0);
        CHECK(d->mul(m, m + 1) < m);
        CHECK(validate_monomorphism(s).ok());
        CHECK(validate_monomorphism(rs).ok());
        auto common = subgroup_intersection(s, rs);
        CHECK(common == std::vector<int>{0});
    }
}

TEST_CASE("direct product digits and factor inclusions")
{
    auto [p, inc] = direct_product({cyclic(2), cyclic(3)});
    REQUIRE(inc.size() == 2);
    // First factor most significant: (a, b) -> 3a + b.
    CHECK(inc[0].image == std::vector<int>{0, 3});
    CHECK(inc[1].image == std::vector<int>{0, 1, 2});
    CHECK(subgroup_intersection(inc[0], inc[1]) == std::vector<int>{0});
    CHECK(is_abelian(*p));
    CHECK(element_orders(*p) == element_orders(*cyclic(6)));
}

TEST_CASE("monomorphism defects are reported")
{
    auto z2 = cyclic(2), z4 = cyclic(4), k = klein_four();
    CHECK(validate_monomorphism({z2, z4, {0, 2}}).ok());
    CHECK(validate_monomorphism({z2, z4, {0, 1}}).has("homomorphism"));
    CHECK(validate_monomorphism({z2, z4, {0, 0}}).has("injective"));
    CHECK(validate_monomorphism({z2, z4, {2, 0}}).has("mono_identity"));
    CHECK(validate_monomorphism({k, k, {0, 1, 2, 3}}).has("proper"));
    CHECK_THROWS_AS(validate_monomorphism({z2, z4, {0}}), InputError);
    CHECK_THROWS_AS(validate_monomorphism({z2, z4, {0, 7}}), InputError);
}

TEST_CASE("broken tables are constructible but rejected")
{
    auto bad = make_group("bad", {{0, 1}, {1, 1}});
    auto r = validate_group(*bad);
    CHECK(r.has("latin"));
    CHECK(r.has("inverse"));
    CHECK_THROWS_AS(make_group("ragged", {{0, 1}, {1}}), InputError);
    CHECK_THROWS_AS(make_group("range", {{0, 2}, {1, 0}}), InputError);
    CHECK_THROWS_AS(make_group("empty", {}), InputError);
}

TEST_CASE("compose and involution inclusions")
{
    auto [d, s, rs] = dihedral(3);
    auto [p, inc] = direct_product({d, cyclic(2)});
    auto c = compose(s, inc[0]);
    CHECK(c.source == s.source);
    CHECK(c.target == p);
    CHECK(validate_monomorphism(c).ok());
    auto inv = involution_inclusion(klein_four(), 3);
    CHECK(inv.image == std::vector<int>{0, 3});
    CHECK(image_set(inv) == std::vector<int>{0, 3});
}

TEST_CASE("json round trip")
{
    for (auto g : {cyclic(5), klein_four(), std::get<0>(dihedral(4))}) {
        auto back = group_from_json(group_to_json(*g));
        CHECK(*back == *g);
        CHECK(back->name() == g->name());
    }
    CHECK_THROWS_AS(group_from_json(json{{"order", 3}, {"table", {{0, 1}, {1, 0}}}}), InputError);
    CHECK_THROWS_AS(group_from_json(json::array()), InputError);
}

TEST_CASE("order cap follows the environment")
{
    CHECK(max_group_order() == 256);
    CHECK_THROWS_AS(cyclic(300), ResourceError);
    setenv("GCG_MAX_GROUP_ORDER", "8", 1);
    CHECK(max_group_order() == 8);
    CHECK_THROWS_AS(cyclic(9), ResourceError);
    CHECK_THROWS_AS(direct_product({cyclic(3), cyclic(3)}), ResourceError);
    setenv("GCG_MAX_GROUP_ORDER", "nonsense", 1);
    CHECK(max_group_order() == 256);
    unsetenv("GCG_MAX_GROUP_ORDER");
}
