#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gcg/gcog.hpp"

namespace gcg {

// Poset of simplices of the n-cycle graph: smalls v0..v{n-1}, bigs "vi-vj".
OneDimPoset cycle_poset(int n);

// Big groups are the direct products of the groups of the smalls below, in
// index order; maps are the factor inclusions. Appends a warning when the
// poset is not 6-huge.
GC gen_graphical_product(const OneDimPoset& q, const std::map<std::string, GroupPtr>& small_groups,
                         std::vector<std::string>* warnings = nullptr);

// Right-angled Coxeter group of the n-cycle graph (|Q| is a 2n-cycle).
GC gen_racg_cycle(int n);
// Right-angled Coxeter group of K_{n,m}; vertices a0.., b0...
GC gen_racg_bipartite(int n, int m);

struct CoxeterEdge {
    std::string a, b;
    int m = 2;
};

// Z/2 at vertices of L, dihedral of order 2m at edges; the first endpoint
// maps to sigma, the second to rho sigma. Rejects spherical triangles.
GC gen_coxeter_nerve(const std::vector<std::string>& vertices, const std::vector<CoxeterEdge>& edges);

// Axial coordinates on the hexagonal tiling; a vector names a hexagon or a
// translation.
struct Axial {
    int q = 0, r = 0;
    bool operator==(const Axial&) const = default;
    auto operator<=>(const Axial&) const = default;
};

// Neighbour directions: d0=(1,0), d1=(1,-1), d2=(0,-1), d3=(-1,0), d4=(-1,1), d5=(0,1).
Axial hex_direction(int i);

// Quotient of the hexagonal tiling by the lattice spanned by t1, t2.
// Tiling vertices: A(q,r) is the corner of hexagons (q,r), (q+1,r), (q,r+1);
// B(q,r) of (q+1,r), (q,r+1), (q+1,r+1). Edges: E0(q,r) separates (q,r) from
// (q+1,r), E1(q,r) from (q,r+1), E2(q,r) separates (q+1,r) from (q,r+1).
class HexTorus {
public:
    HexTorus(Axial t1, Axial t2);

    Axial t1() const { return t1_; }
    Axial t2() const { return t2_; }
    int hexagons() const { return d1_ * d2_; }
    // Canonical representative: 0 <= q < d1, 0 <= r < d2.
    Axial reduce(Axial h) const;
    int hex_index(Axial h) const;
    std::vector<Axial> hex_reps() const;

    std::string vertex_id(char ab, Axial h) const;     // "A3,0"
    std::string edge_id(int type, Axial h) const;      // "E1:3,0"
    // Girth of the quotient 1-skeleton, counting loops as 1 and double
    // edges as 2; witness is a list of tiling-vertex ids.
    std::pair<int, std::vector<std::string>> skeleton_girth() const;
    // Poset of simplices under reverse inclusion: smalls are edges E0, E1,
    // E2 by representative; bigs are A then B.
    OneDimPoset poset() const;

private:
    Axial t1_, t2_;
    int d1_ = 0, d2_ = 0, s_ = 0;
};

// The lattice of least index whose quotient has girth 6; ties broken by the
// reduced basis ((d1, 0), (s, d2)) lexicographically.
std::pair<Axial, Axial> default_torus_translations();

// Z/2 at smalls, Klein four at bigs (all of valence 3). The three smalls below
// each big, in index order, map to <(1,0)>, <(0,1)>, <(1,1)>.
GC locally_klein_four(const OneDimPoset& q);

// Throws InputError (with the witness cycle) unless the quotient has girth 6.
GC gen_klein_four_torus(Axial t1, Axial t2);
GC gen_klein_four_torus();

// Two copies of the torus poset (ids prefixed "L." and "R.") glued along the
// edges crossed by the straight line of hexagons start, start + d_j, ...
// Direction j in 0..2 picks the pair of opposite edges.
GC gen_torus_double(Axial t1, Axial t2, int direction, Axial start = {});

json axial_to_json(Axial a);

}  // namespace gcg
