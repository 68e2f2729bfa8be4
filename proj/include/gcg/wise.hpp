#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gcg/common.hpp"
#include "gcg/develop.hpp"
#include "gcg/graph.hpp"

namespace gcg {

// Nerve of the cover of a ball by its cells. A set of cells spans a simplex
// iff some instance lies in all of them, so the simplices are exactly the
// faces of the per-instance cliques.
struct NerveComplex {
    int vertices = 0;
    std::vector<std::vector<int>> maximal;  // sorted cell lists
    std::vector<int> maximal_instance;      // an instance realising each
    std::vector<char> interior;             // per cell: all instances saturated
    Graph skeleton;
    const DevelopedBall* ball = nullptr;

    bool is_simplex(const std::vector<int>& cells) const;
    json to_json() const;
    std::string to_dot() const;
};

// Keeps a pointer to the ball; the ball must outlive the nerve.
NerveComplex build_nerve(const DevelopedBall& ball);

struct NerveDimension {
    int observed = -1;
    int formula = -1;  // max |G_x| - 1 over all poset vertices
    bool agrees = false;
    bool lower_bound_only = false;  // radius < 2
};

NerveDimension nerve_dimension(const NerveComplex& n, const DevelopedBall& ball);

// Flagness and k-largeness of the links of interior cells.
Certificate check_k_largeness(const NerveComplex& n, int k);

// Link of a cell: vertices are its neighbours, edges the pairs spanning a
// triangle with it. `members` maps link vertices to cells.
struct NerveLink {
    Graph graph;
    std::vector<int> members;
};
NerveLink nerve_link(const NerveComplex& n, int cell);

struct CutUpTetrahedron {
    std::array<int, 3> v{};  // central triangle
    std::array<int, 3> s{};  // s[0] on v0 v1, s[1] on v1 v2, s[2] on v0 v2
    json to_json() const;
};

// Least witness in (v, s) order whose non-edges are certified by an interior
// endpoint.
std::optional<CutUpTetrahedron> find_cut_up_tetrahedron(const NerveComplex& n);

// 2-complex with cone and big vertices only.
struct RetriangulatedComplex {
    enum Kind { Cone = 0, Big = 1 };
    std::vector<int> kind;
    std::vector<int> origin;  // cell id for cones, instance id for bigs
    std::vector<std::array<int, 3>> triangles;
    Graph skeleton;

    json to_json() const;
};

struct RetriangulationReport {
    RetriangulatedComplex complex;
    Certificate certificate;
};

// Replaces each small instance and its two edges to bigs by a single
// big-big edge. Throws InputError unless every small vertex has valence 2.
RetriangulationReport retriangulate_valence2(const DevelopedBall& ball);

}  // namespace gcg
