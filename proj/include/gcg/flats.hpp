#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcg/common.hpp"
#include "gcg/develop.hpp"
#include "gcg/examples.hpp"
#include "gcg/gcog.hpp"

namespace gcg {

// A corner of the hexagonal tiling: A(q,r) or B(q,r), as in HexTorus.
struct TilingVertex {
    char ab = 'A';
    Axial pos;
    auto operator<=>(const TilingVertex&) const = default;
};

// Plane edge E_type(pos); its midpoint maps to a small vertex.
struct TilingEdge {
    int type = 0;
    Axial pos;
    auto operator<=>(const TilingEdge&) const = default;
};

// The three edges at a corner in counterclockwise order.
std::array<TilingEdge, 3> corner_edges(TilingVertex v);
std::array<TilingVertex, 2> edge_ends(TilingEdge e);
// The subdivided boundary of a hexagon, counterclockwise from E0(h):
// edges at even positions, corners at odd positions.
std::array<TilingEdge, 6> hexagon_edges(Axial h);
std::array<TilingVertex, 6> hexagon_corners(Axial h);

// A locally injective map p' from the subdivided tiling onto |Q|, given by a
// rotation system on Q whose faces are all hexagons.
class HexCovering {
public:
    // rotation[b - small_count] lists the three smalls of big b in cyclic
    // order. Corner A(0,0) maps to the first big with offset 0.
    HexCovering(OneDimPoset q, std::vector<std::array<int, 3>> rotation);

    int big_at(TilingVertex v) const;
    int small_at(TilingEdge e) const;
    const std::vector<std::array<int, 3>>& rotation() const { return rot_; }

private:
    struct Frame {
        int big;
        int offset;
    };
    Frame frame(TilingVertex v) const;

    OneDimPoset q_;
    std::vector<std::array<int, 3>> rot_;
    mutable std::map<TilingVertex, Frame> frames_;
};

// Recognises Z/2 smalls of valence 2 under Klein-four bigs of valence 3 whose
// poset is a hexagonally embedded torus graph. The images of the maps are not
// inspected; verify_consistency judges them.
std::optional<HexCovering> recognise_hex_torus(const GC& gc);

struct HexPatch {
    struct Adjacency {
        int a = -1, b = -1;  // hexagon indices, a < b
        TilingEdge edge;
        int small = -1;
    };
    struct Corner {
        TilingVertex vertex;
        std::array<int, 3> hexagons{};
        int big = -1;
    };

    int width = 0, height = 0;
    std::vector<Axial> hexagons;        // q fastest
    std::vector<Adjacency> adjacencies;
    std::vector<Corner> corners;        // tiling vertices lying in 3 patch hexagons
    std::vector<std::array<int, 12>> cycles;  // p' image of each subdivided hexagon; -1 untyped

    int index(Axial h) const;  // -1 outside the patch
    int diameter() const;      // in hexagon adjacency steps
    int required_radius() const { return diameter() + 1; }
    json to_json(const GC* gc = nullptr) const;
};

// The w x h parallelogram q in [0, w), r in [0, h). Without a covering the
// small and big fields stay -1.
HexPatch build_hex_patch(int w, int h, const HexCovering* p = nullptr);

struct FlatLabelling {
    std::vector<GroupWord> label;  // per hexagon
    std::vector<int> parent;       // BFS tree, -1 at the base
    int base = 0;
};

// BFS from `base`: across an edge typed v, label(b) = label(a) (v, 1).
// Throws InputError unless every small group has order 2.
FlatLabelling label_patch(const GC& gc, const HexPatch& patch, int base = 0);

// Local check at every interior corner: the three labels differ pairwise by
// the three non-identity elements of the big group. With a ball, also checks
// every adjacency by resolving both labels. details.status is "consistent",
// "inconsistent" or "unknown".
Certificate verify_consistency(const GC& gc, const HexPatch& patch, const FlatLabelling& lab,
                               const DevelopedBall* ball = nullptr);

struct FlatEmbedding {
    std::vector<int> cells;  // per hexagon, -1 unresolved
    Certificate certificate;
};

FlatEmbedding embed_flat(const DevelopedBall& ball, const HexPatch& patch, const FlatLabelling& lab);

// Checks that the given cells realise the hexagonal structure of the patch:
// distinct cells, adjacent hexagons sharing exactly the up-set of the edge
// type, corners shared by exactly their three cells, proper triples there.
Certificate check_flat_shape(const DevelopedBall& ball, const HexPatch& patch, const std::vector<int>& cells);

// Focus words for a ball that can resolve every label.
DevelopOptions flat_focus(const FlatLabelling& lab);

std::string patch_to_svg(const GC& gc, const HexPatch& patch, const FlatLabelling* lab = nullptr);

}  // namespace gcg
