#include <doctest.h>

#include "support.hpp"

using namespace gcg;

namespace {

// Fewest arcs covering every edge of an m-cycle, over all subsets.
int brute_cover(int m, const std::vector<std::pair<int, int>>& arcs)
{
    int best = -1;
    const int n = static_cast<int>(arcs.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<char> hit(m, 0);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1)
                for (int j = 0; j < arcs[i].second; ++j)
                    hit[(arcs[i].first + j) % m] = 1;
        if (std::count(hit.begin(), hit.end(), 1) == m) {
            int c = __builtin_popcount(static_cast<unsigned>(mask));
            if (best < 0 || c < best)
                best = c;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("angle assignments")
{
    auto c6 = angles_by_name("c6");
    CHECK(c6.small == 210);
    CHECK(c6.big == 140);
    CHECK(c6.cone == 70);
    CHECK(c6.euclidean());
    CHECK(angles_by_name("c4t4").euclidean());
    CHECK(angles_by_name("c6hyp").hyperbolic());
    CHECK(angles_by_name("notriple-hyp").hyperbolic());
    CHECK(angles_by_name("c5t4").hyperbolic());
    // pi/2 + pi/4 + pi/5 in units of pi/420.
    auto c5 = angles_by_name("c5t4");
    CHECK(c5.small + c5.big + c5.cone == 210 + 105 + 84);
    CHECK_THROWS_AS(angles_by_name("nope"), InputError);
    CHECK(angle_names().size() == 5);
}

TEST_CASE("exact angle text")
{
    CHECK(angle_to_string(560) == "4pi/3");
    CHECK(angle_to_string(840) == "2pi");
    CHECK(angle_to_string(70) == "pi/6");
    CHECK(angle_to_string(630) == "3pi/2");
    CHECK(angle_to_string(420) == "pi");
    CHECK(angle_to_string(0) == "0");
}

TEST_CASE("link condition on 6-huge examples")
{
    auto c6 = angles_by_name("c6");
    for (const auto& gc : {gen_racg_cycle(6), gen_racg_cycle(7), gen_klein_four_torus(), support::z3_product(),
                           gen_torus_double({3, 0}, {0, 3}, 2)}) {
        auto c = check_link_condition(gc, c6);
        CHECK(c.verdict);
        CHECK(c.witness.is_null());
    }
}

TEST_CASE("intersecting images fail at a big link with 4pi/3")
{
    auto c = check_link_condition(support::intersecting_images(), angles_by_name("c6"));
    REQUIRE_FALSE(c.verdict);
    CHECK(c.witness["link"] == "big");
    CHECK(c.witness["at"] == "v0-v1");
    CHECK(c.witness["cycle"].size() == 4);
    CHECK(c.witness["angular_length"] == 560);
    CHECK(c.witness["angular_length_text"] == "4pi/3");
}

TEST_CASE("4-huge cone links are short")
{
    auto c = check_link_condition(gen_racg_cycle(4), angles_by_name("c6"));
    CHECK_FALSE(c.verdict);
    CHECK(c.witness["link"] == "cone");
    CHECK(c.witness["angular_length_text"] == "4pi/3");
    CHECK(check_link_condition(gen_racg_cycle(4), angles_by_name("c4t4")).verdict);
}

TEST_CASE("Klein-four big links are hexagons")
{
    auto gc = gen_klein_four_torus();
    auto c = check_link_condition(gc, angles_by_name("notriple-hyp"));
    CHECK_FALSE(c.verdict);
    CHECK(c.witness["link"] == "big");
    CHECK(c.witness["cycle"].size() == 6);
    CHECK(c.witness["angular_length_text"] == "3pi/2");
}

TEST_CASE("ball link condition")
{
    auto ball = develop_ball(gen_racg_cycle(6), 2);
    auto c = check_link_condition(ball, angles_by_name("c6"));
    CHECK(c.verdict);
    CHECK(c.details["saturated_instances"] > 0);
}

TEST_CASE("CAT(-1) certificates")
{
    auto k7 = cat_minus_one_certificate(gen_racg_cycle(7));
    CHECK(k7.verdict);
    CHECK(k7.details["status"] == "certified");
    auto k6 = cat_minus_one_certificate(gen_racg_cycle(6));
    CHECK(k6.verdict);
    CHECK(k6.details["angles"]["name"] == "notriple-hyp");
    auto k5 = cat_minus_one_certificate(gen_racg_cycle(5));
    CHECK(k5.verdict);
    CHECK(k5.details["angles"]["name"] == "c5t4");
    auto flat = cat_minus_one_certificate(gen_klein_four_torus());
    CHECK_FALSE(flat.verdict);
    CHECK(flat.details["status"] == "NotApplicable");
}

TEST_CASE("circular cover agrees with brute force")
{
    std::mt19937 rng(5);
    for (int t = 0; t < 400; ++t) {
        int m = 3 + static_cast<int>(rng() % 10);
        int n = 1 + static_cast<int>(rng() % 7);
        std::vector<std::pair<int, int>> arcs;
        for (int i = 0; i < n; ++i)
            arcs.push_back({static_cast<int>(rng() % m), 1 + static_cast<int>(rng() % (m / 2 + 1))});
        CAPTURE(m);
        CHECK(min_circular_cover(m, arcs) == brute_cover(m, arcs));
    }
    CHECK(min_circular_cover(12, {{0, 12}}) == 1);
    CHECK(min_circular_cover(12, {}) == -1);
}

TEST_CASE("pieces are short shared paths")
{
    for (const auto& gc : {gen_racg_cycle(6), gen_klein_four_torus(), support::z3_product()}) {
        auto ball = develop_ball(gc, 2);
        auto ps = enumerate_pieces(ball);
        REQUIRE(!ps.empty());
        for (const auto& p : ps) {
            CHECK(p.length() <= 2);
            CHECK(p.cell_a < p.cell_b);
            for (std::size_t i = 0; i < p.types.size(); ++i) {
                CHECK(ball.inst(p.cell_a, p.types[i]) == ball.inst(p.cell_b, p.types[i]));
                CHECK(p.instances[i] == ball.inst(p.cell_a, p.types[i]));
                if (i + 1 < p.types.size()) {
                    int x = p.types[i], y = p.types[i + 1];
                    CHECK((gc.poset.leq(x, y) || gc.poset.leq(y, x)));
                }
            }
        }
    }
}

TEST_CASE("C(k) verdicts")
{
    auto b6 = develop_ball(gen_racg_cycle(6), 3);
    auto c6 = check_ck(b6, 6);
    CHECK(c6.verdict);
    CHECK(c6.details["max_piece_length"] == 2);
    CHECK(c6.details["c_prime_ratio"] == json::array({1, 6}));
    CHECK(c6.details["c_prime_ratio_at_most_1_over_k"] == true);
    CHECK_FALSE(check_ck(b6, 7).verdict);

    auto b4 = develop_ball(gen_racg_cycle(4), 3);
    CHECK(check_ck(b4, 4).verdict);
    auto fail = check_ck(b4, 6);
    CHECK_FALSE(fail.verdict);
    CHECK(fail.witness["pieces"] == 4);

    auto b7 = develop_ball(gen_racg_cycle(7), 2);
    CHECK(check_ck(b7, 7).verdict);

    CkOptions all;
    all.all_cycles = true;
    CHECK(check_ck(develop_ball(gen_klein_four_torus(), 2), 6, all).verdict);
    // No interior cell, no verdict.
    CHECK_FALSE(check_ck(develop_ball(gen_racg_cycle(6), 0), 6).verdict);
    CHECK_THROWS_AS(check_ck(b6, 1), InputError);
}
