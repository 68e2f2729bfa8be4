#pragma once

#include <string>
#include <vector>

#include "gcg/common.hpp"
#include "gcg/develop.hpp"
#include "gcg/gcog.hpp"

namespace gcg {

// Angles are integers in units of pi/420, so every angle used here
// (pi/2 .. pi/7) is exact. A full turn is 840.
constexpr int kAngleDenominator = 420;
constexpr int kFullTurn = 2 * kAngleDenominator;

struct AngleAssignment {
    std::string name;
    int small = 0;  // angle at the small vertex of each triangle
    int big = 0;
    int cone = 0;

    bool euclidean() const { return small + big + cone == kAngleDenominator; }
    bool hyperbolic() const { return small + big + cone < kAngleDenominator; }
    json to_json() const;
};

// c6, c6hyp, notriple-hyp, c4t4, c5t4.
AngleAssignment angles_by_name(const std::string& name);
std::vector<std::string> angle_names();
// "pi/6", "4pi/3", "2pi"; exact.
std::string angle_to_string(long long units);

// Link condition from the local developments, computed from gc alone. Needs
// the structure maps to exist but not to satisfy the intersection axiom.
Certificate check_link_condition(const GC& gc, const AngleAssignment& a, int threshold = kFullTurn);
// Same condition on the links of a developed ball: every cone link and every
// saturated instance link.
Certificate check_link_condition(const DevelopedBall& ball, const AngleAssignment& a,
                                 int threshold = kFullTurn);

// Chooses an assignment by hugeness and triple data, then checks it. Details
// carry "status": "certified", "failed" or "NotApplicable".
Certificate cat_minus_one_certificate(const GC& gc);

// A maximal path in the intersection of two cells. `types` are poset vertices
// along the path; `instances` the corresponding ball vertices.
struct Piece {
    int cell_a = -1, cell_b = -1;
    std::vector<int> types;
    std::vector<int> instances;

    int length() const { return static_cast<int>(types.size()) - 1; }
    json to_json(const GC& gc) const;
};

// Over all pairs of cells sharing a small instance; sorted by (cell_a,
// cell_b, types).
std::vector<Piece> enumerate_pieces(const DevelopedBall& ball);

struct CkOptions {
    // Check every embedded cycle of |Q| rather than those up to the girth.
    bool all_cycles = false;
    std::size_t cycle_cap = 200000;
};

// C(k) at every interior cell; details include the C' ratio
// max piece length / girth.
Certificate check_ck(const DevelopedBall& ball, int k, const CkOptions& opts = {});

// Fewest arcs covering a cycle of m edges. Arcs are (start, length) modulo m.
// Returns -1 if some edge is uncovered.
int min_circular_cover(int m, const std::vector<std::pair<int, int>>& arcs);

}  // namespace gcg
