#include <doctest.h>

#include "support.hpp"

using namespace gcg;

namespace {

// Patch adjacency from axial arithmetic alone: hexagons are neighbours when
// their difference is one of the six unit directions.
struct AxialOracle {
    int adjacencies = 0;
    int triangles = 0;
    int diameter = 0;
};

AxialOracle axial_oracle(int w, int h)
{
    std::vector<Axial> hs;
    for (int r = 0; r < h; ++r)
        for (int q = 0; q < w; ++q)
            hs.push_back({q, r});
    const int n = static_cast<int>(hs.size());
    auto adj = [&](int a, int b) {
        int dq = hs[b].q - hs[a].q, dr = hs[b].r - hs[a].r;
        int s = -dq - dr;
        return std::max({std::abs(dq), std::abs(dr), std::abs(s)}) == 1;
    };
    AxialOracle o;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!adj(a, b))
                continue;
            ++o.adjacencies;
            for (int c = b + 1; c < n; ++c)
                o.triangles += adj(a, c) && adj(b, c);
        }
    for (int a = 0; a < n; ++a) {
        std::vector<int> d(n, -1);
        std::deque<int> bfs{a};
        d[a] = 0;
        while (!bfs.empty()) {
            int x = bfs.front();
            bfs.pop_front();
            for (int y = 0; y < n; ++y)
                if (d[y] < 0 && adj(x, y)) {
                    d[y] = d[x] + 1;
                    bfs.push_back(y);
                }
        }
        o.diameter = std::max(o.diameter, *std::max_element(d.begin(), d.end()));
    }
    return o;
}

struct FlatRun {
    HexPatch patch;
    FlatLabelling lab;
    DevelopedBall ball;
};

FlatRun run_flat(const GC& gc, int w, int h, int base = 0)
{
    auto cov = recognise_hex_torus(gc);
    REQUIRE(cov.has_value());
    auto patch = build_hex_patch(w, h, &*cov);
    auto lab = label_patch(gc, patch, base);
    auto ball = develop_ball(gc, patch.required_radius(), flat_focus(lab));
    return {std::move(patch), std::move(lab), std::move(ball)};
}

}  // namespace

TEST_CASE("tiling geometry")
{
    for (int i = 0; i < 6; ++i) {
        auto d = hex_direction(i), e = hex_direction((i + 3) % 6);
        CHECK(d.q + e.q == 0);
        CHECK(d.r + e.r == 0);
    }
    for (Axial h : {Axial{0, 0}, Axial{2, -1}, Axial{-3, 4}}) {
        auto edges = hexagon_edges(h);
        auto corners = hexagon_corners(h);
        // Consecutive boundary edges meet at the corner between them.
        for (int k = 0; k < 6; ++k) {
            auto a = edge_ends(edges[k]);
            auto b = edge_ends(edges[(k + 1) % 6]);
            bool meets = false;
            for (auto x : a)
                for (auto y : b)
                    meets |= x == y && x == corners[k];
            CHECK(meets);
        }
    }
    for (TilingVertex v : {TilingVertex{'A', {0, 0}}, TilingVertex{'B', {1, 2}}})
        for (auto e : corner_edges(v)) {
            auto ends = edge_ends(e);
            CHECK((ends[0] == v || ends[1] == v));
        }
}

TEST_CASE("patch adjacency agrees with axial arithmetic")
{
    for (auto [w, h] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 3}}) {
        CAPTURE(w);
        CAPTURE(h);
        auto p = build_hex_patch(w, h);
        auto o = axial_oracle(w, h);
        CHECK(static_cast<int>(p.adjacencies.size()) == o.adjacencies);
        CHECK(static_cast<int>(p.corners.size()) == o.triangles);
        CHECK(p.diameter() == o.diameter);
        CHECK(p.required_radius() == o.diameter + 1);
        for (const auto& a : p.adjacencies)
            CHECK(a.small == -1);
    }
    auto p = build_hex_patch(2, 2);
    CHECK(p.adjacencies.size() == 5);
    CHECK(p.corners.size() == 2);
    CHECK(p.index({1, 1}) == 3);
    CHECK(p.index({2, 0}) == -1);
}

TEST_CASE("Klein torus is recognised and the covering is locally injective")
{
    auto gc = gen_klein_four_torus();
    auto cov = recognise_hex_torus(gc);
    REQUIRE(cov.has_value());
    for (const auto& rot : cov->rotation()) {
        std::set<int> s(rot.begin(), rot.end());
        CHECK(s.size() == 3);
    }
    // Around any corner the three edges go to the three smalls below its big.
    for (int q = -3; q <= 3; ++q)
        for (int r = -3; r <= 3; ++r)
            for (char ab : {'A', 'B'}) {
                TilingVertex v{ab, {q, r}};
                int w = cov->big_at(v);
                std::set<int> smalls;
                for (auto e : corner_edges(v)) {
                    int s = cov->small_at(e);
                    CHECK(gc.poset.leq(s, w));
                    smalls.insert(s);
                }
                CHECK(smalls.size() == 3);
            }
    // Each subdivided hexagon maps onto a hexagon of Q.
    auto patch = build_hex_patch(3, 3, &*cov);
    for (const auto& cyc : patch.cycles) {
        std::set<int> seen(cyc.begin(), cyc.end());
        CHECK(seen.size() == 12);
        for (int k = 0; k < 12; ++k) {
            int a = cyc[k], b = cyc[(k + 1) % 12];
            CHECK((gc.poset.leq(a, b) || gc.poset.leq(b, a)));
        }
    }
    CHECK_FALSE(recognise_hex_torus(gen_racg_cycle(6)).has_value());
    CHECK_FALSE(recognise_hex_torus(gen_torus_double({3, 0}, {0, 3}, 0)).has_value());
}

TEST_CASE("labels step by one letter across each adjacency")
{
    auto gc = gen_klein_four_torus();
    auto cov = recognise_hex_torus(gc);
    REQUIRE(cov.has_value());
    auto patch = build_hex_patch(3, 3, &*cov);
    auto lab = label_patch(gc, patch);
    CHECK(lab.label[0].empty());
    CHECK(lab.parent[0] == -1);
    for (int i = 1; i < static_cast<int>(patch.hexagons.size()); ++i) {
        int p = lab.parent[i];
        REQUIRE(p >= 0);
        CHECK(lab.label[i].size() == lab.label[p].size() + 1);
        CHECK(std::equal(lab.label[p].begin(), lab.label[p].end(), lab.label[i].begin()));
        CHECK(lab.label[i].back().element == 1);
    }
    auto other = label_patch(gc, patch, 4);
    CHECK(other.base == 4);
    CHECK(other.label[4].empty());
    CHECK_THROWS_AS(label_patch(support::z3_product(), build_hex_patch(2, 2)), InputError);
}

TEST_CASE("flat patches embed with flat angle sums")
{
    auto gc = gen_klein_four_torus();
    for (auto [w, h] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {3, 2}}) {
        CAPTURE(w);
        CAPTURE(h);
        auto f = run_flat(gc, w, h);
        CHECK(verify_consistency(gc, f.patch, f.lab).verdict);
        auto full = verify_consistency(gc, f.patch, f.lab, &f.ball);
        CHECK(full.verdict);
        CHECK(full.details["adjacencies_checked"] == f.patch.adjacencies.size());
        auto e = embed_flat(f.ball, f.patch, f.lab);
        CHECK(e.certificate.verdict);
        CHECK(e.certificate.details["well_defined"] == true);
        CHECK(e.certificate.details["injective"] == true);
        for (const char* k : {"cone", "small", "big"})
            for (int s : e.certificate.details["angle_sums"][k])
                CHECK(s == kFullTurn);
        CHECK(e.certificate.details["proper_triples"] == f.patch.corners.size());
        CHECK(check_flat_shape(f.ball, f.patch, e.cells).verdict);
    }
    // From another base the embedding is a translate: same shape verdict.
    auto moved = run_flat(gc, 3, 3, 4);
    auto e = embed_flat(moved.ball, moved.patch, moved.lab);
    CHECK(e.certificate.verdict);
    CHECK(check_flat_shape(moved.ball, moved.patch, e.cells).verdict);
}

TEST_CASE("a single hexagon has no hexagonal structure")
{
    auto f = run_flat(gen_klein_four_torus(), 1, 1);
    auto e = embed_flat(f.ball, f.patch, f.lab);
    auto s = check_flat_shape(f.ball, f.patch, e.cells);
    CHECK_FALSE(s.verdict);
    CHECK(s.witness["kind"] == "no_hexagonal_structure");
}

TEST_CASE("wrong cells are caught by the shape check")
{
    auto f = run_flat(gen_klein_four_torus(), 2, 2);
    auto e = embed_flat(f.ball, f.patch, f.lab);
    REQUIRE(e.certificate.verdict);
    auto dup = e.cells;
    dup[1] = dup[0];
    CHECK(check_flat_shape(f.ball, f.patch, dup).witness["kind"] == "cone_vertices");
    auto swapped = e.cells;
    std::swap(swapped[0], swapped[3]);
    CHECK_FALSE(check_flat_shape(f.ball, f.patch, swapped).verdict);
    CHECK_THROWS_AS(check_flat_shape(f.ball, f.patch, {0}), InputError);
}

TEST_CASE("a perturbed map breaks the local check")
{
    auto gc = gen_klein_four_torus();
    auto cov = recognise_hex_torus(gc);
    REQUIRE(cov.has_value());
    auto patch = build_hex_patch(2, 2, &*cov);
    auto lab = label_patch(gc, patch);
    REQUIRE(verify_consistency(gc, patch, lab).verdict);
    // Send two smalls under one corner's big to the same involution.
    const auto& c = patch.corners.front();
    int w = c.big;
    auto below = gc.poset.nbrs(w);
    auto bad = gc;
    bad.maps.at({below[1], w}).image[1] = gc.psi(below[0], w).image[1];
    auto cert = verify_consistency(bad, patch, lab);
    CHECK_FALSE(cert.verdict);
    CHECK(cert.details["status"] == "inconsistent");
    CHECK(cert.witness["kind"] == "triple");
    CHECK(cert.witness["big"] == gc.poset.id(w));
    CHECK_FALSE(validate(bad).ok());
}

TEST_CASE("consistency needs a ball large enough")
{
    auto gc = gen_klein_four_torus();
    auto cov = recognise_hex_torus(gc);
    REQUIRE(cov.has_value());
    auto patch = build_hex_patch(3, 3, &*cov);
    auto lab = label_patch(gc, patch);
    auto small = develop_ball(gc, 1);
    auto c = verify_consistency(gc, patch, lab, &small);
    CHECK(c.details["status"] == "unknown");
    CHECK(c.details["required_radius"] == patch.required_radius());
    CHECK(embed_flat(small, patch, lab).certificate.details["status"] == "unknown");
}

TEST_CASE("svg drawing")
{
    auto gc = gen_klein_four_torus();
    auto cov = recognise_hex_torus(gc);
    REQUIRE(cov.has_value());
    auto patch = build_hex_patch(2, 2, &*cov);
    auto lab = label_patch(gc, patch);
    auto svg = patch_to_svg(gc, patch, &lab);
    CHECK(svg.rfind("<svg", 0) == 0);
    std::size_t polys = 0;
    for (auto pos = svg.find("<polygon"); pos != std::string::npos; pos = svg.find("<polygon", pos + 1))
        ++polys;
    CHECK(polys == 4);
    CHECK(svg.find("</svg>") != std::string::npos);
    auto j = patch.to_json(&gc);
    CHECK(j["hexagons"].size() == 4);
}
