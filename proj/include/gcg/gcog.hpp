#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcg/common.hpp"
#include "gcg/groups.hpp"
#include "gcg/poset.hpp"

namespace gcg {

struct GraphicalComplexOfGroups {
    OneDimPoset poset;
    std::vector<GroupPtr> local;                         // indexed by poset vertex
    std::map<std::pair<int, int>, Monomorphism> maps;    // (small, big) -> psi

    const FiniteGroup& group(int x) const { return *local[x]; }
    int order(int x) const { return local[x]->order(); }
    const Monomorphism& psi(int v, int w) const;
};

using GC = GraphicalComplexOfGroups;

// Checks non-triviality, the map set, the group and monomorphism axioms, and
// the pairwise trivial intersection of images at every big vertex.
ValidationReport validate(const GC& gc);

// Translated form of three cone-cells around a big vertex w: elements e, a, b
// of G_w with a in psi(v2), b in psi(v1), and a^-1 b in psi(v3), all
// non-identity.
struct ProperTripleWitness {
    int big = -1;
    int v1 = -1, v2 = -1, v3 = -1;
    int a = 0, b = 0;

    json to_json(const GC& gc) const;
    auto key() const { return std::make_tuple(big, v1, v2, v3, a, b); }
};

// Lexicographically least witness over (w, v1, v2, v3, a, b).
std::optional<ProperTripleWitness> find_proper_triple(const GC& gc);
std::optional<ProperTripleWitness> find_proper_triple_at(const GC& gc, int w);

// Whether three elements of G_w, read as torsor labels of cone-cells around
// one big vertex, form a proper triple. Fills `out` with the translated form.
bool is_proper_triple(const GC& gc, int w, int g1, int g2, int g3,
                      ProperTripleWitness* out = nullptr);

Certificate check_t4(const GC& gc);

enum class VerdictKind { Hyperbolic, FlatFound, Inconclusive, OutOfTheory };

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::string reason;
    int hugeness = 0;
    json witness;

    json to_json() const;
};

std::string to_string(VerdictKind k);

struct ClassifyOptions {
    bool attempt_flat = true;
    int flat_width = 2;
    int flat_height = 2;
};

Verdict classify(const GC& gc, const ClassifyOptions& opts = {});

// Generators are the non-identity elements of every local group; relations
// are lhs = rhs as words in generator indices (an empty word is the identity).
struct Presentation {
    std::vector<std::string> generators;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> relations;

    json to_json() const;
};

Presentation fundamental_group_presentation(const GC& gc);

json gc_to_json(const GC& gc);
GC gc_from_json(const json& j);
std::string map_key(const std::string& v, const std::string& w);

// Element of G_w lying in the image of exactly one small below w, per element
// (-1 for the identity and elements outside every image). Assumes a valid gc.
std::vector<int> image_owner(const GC& gc, int w);

}  // namespace gcg
