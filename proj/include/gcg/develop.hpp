#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gcg/common.hpp"
#include "gcg/gcog.hpp"
#include "gcg/graph.hpp"

namespace gcg {

struct Letter {
    int vertex = -1;   // poset vertex index
    int element = 0;   // non-identity element of the local group at vertex
    bool operator==(const Letter&) const = default;
};

using GroupWord = std::vector<Letter>;

// Text form: space separated "id:element" letters, e.g. "v0:1 w2:3".
GroupWord parse_word(const GC& gc, const std::string& text);
std::string word_to_string(const GC& gc, const GroupWord& w);
// Reversed letters with inverted elements.
GroupWord inverse_word(const GC& gc, const GroupWord& w);
json word_to_json(const GC& gc, const GroupWord& w);

struct DevelopOptions {
    // When non-empty, only the instances of cells met while reading these
    // words from the base cell are saturated, instead of the whole ball.
    std::vector<GroupWord> focus;
    std::size_t max_cells = 8'000'000;
};

enum class VertexKind { Cone, Small, Big };

// A ball in the Basic Construction. Cells are cone-cells; an instance is a
// vertex of the ball of small or big type. At every instance X of type x the
// cells through X are indexed by a torsor label in G_x; slot(X, g) is the cell
// with label g, or -1 when it has not been developed.
class DevelopedBall {
public:
    const GC& gc() const { return *gc_; }
    int radius() const { return radius_; }
    bool focused() const { return focused_; }
    int base_cell() const { return 0; }
    int cell_count() const { return static_cast<int>(cell_dist_.size()); }
    int instance_count() const { return static_cast<int>(inst_type_.size()); }
    int types() const { return n_types_; }

    int inst(int cell, int x) const { return cell_inst_[static_cast<std::size_t>(cell) * n_types_ + x]; }
    int label(int cell, int x) const { return cell_label_[static_cast<std::size_t>(cell) * n_types_ + x]; }
    // Distance from the base cell where cells sharing any instance are
    // adjacent. In focused balls this is the depth at which the cell was
    // first reached.
    int cell_dist(int cell) const { return cell_dist_[cell]; }

    int inst_type(int X) const { return inst_type_[X]; }
    int slot_count(int X) const { return gc_->order(inst_type_[X]); }
    int slot(int X, int g) const { return slots_[inst_off_[X] + g]; }
    // All slots filled: the link of X is complete.
    bool saturated(int X) const { return inst_filled_[X] == slot_count(X); }
    std::vector<int> cells_at(int X) const;
    // Every instance of the cell is saturated.
    bool cell_interior(int cell) const;

    json to_json() const;
    std::string to_dot() const;

private:
    friend class Developer;
    std::shared_ptr<const GC> gc_;
    int radius_ = 0;
    bool focused_ = false;
    int n_types_ = 0;
    std::vector<int> cell_inst_, cell_label_, cell_dist_;
    std::vector<int> inst_type_, inst_off_, inst_filled_;
    std::vector<int> slots_;
};

// Requires gc valid. Raises ConsistencyError if saturation contradicts itself.
DevelopedBall develop_ball(const GC& gc, int radius, const DevelopOptions& opts = {});

struct ResolveResult {
    bool ok = false;
    int cell = -1;
    int failed_letter = -1;  // index of the first unresolvable letter
};

ResolveResult resolve_word(const DevelopedBall& ball, const GroupWord& word);

// Link of a vertex of the ball. Nodes are instance ids, or cone points
// encoded as -(cell + 1).
struct LinkGraph {
    VertexKind centre = VertexKind::Cone;
    Graph graph;
    std::vector<int> node;
};

LinkGraph cone_link(const DevelopedBall& ball, int cell);
LinkGraph instance_link(const DevelopedBall& ball, int X);

ValidationReport check_links(const DevelopedBall& ball);
ValidationReport check_type_coloring(const DevelopedBall& ball);
ValidationReport check_geodesic_completeness(const DevelopedBall& ball);

// Squared edge lengths of the Euclidean cone metric by endpoint kinds:
// small-big 1, small-cone 3, big-cone 4.
int squared_edge_length(VertexKind a, VertexKind b);

struct WitnessReport {
    bool verified = false;
    json details;
};

// g1, g2 of -1 select the least non-identity elements; powers of -1 uses
// radius / 2.
WitnessReport infinite_order_witness(const GC& gc, const DevelopedBall& ball,
                                     const std::string& v1, const std::string& v2, int g1 = -1,
                                     int g2 = -1, int powers = -1);

}  // namespace gcg
