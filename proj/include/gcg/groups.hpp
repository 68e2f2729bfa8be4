#pragma once

#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gcg/common.hpp"

namespace gcg {

// Upper bound on group orders; GCG_MAX_GROUP_ORDER overrides the default 256.
int max_group_order();

// A finite group given by its multiplication table. The identity is element 0.
//
// Construction only checks the table shape; the group axioms are checked by
// validate_group so that broken tables can still be inspected and reported.
class FiniteGroup {
public:
    FiniteGroup() = default;
    FiniteGroup(std::string name, std::vector<std::vector<int>> table);

    int order() const { return n_; }
    const std::string& name() const { return name_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    // -1 when x has no right inverse (only possible in an invalid table).
    int inv(int x) const { return inv_[x]; }
    std::vector<std::vector<int>> table() const;

    bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && table_ == o.table_; }

private:
    std::string name_;
    int n_ = 0;
    std::vector<int> table_;
    std::vector<int> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct Monomorphism {
    GroupPtr source;
    GroupPtr target;
    std::vector<int> image;

    int operator()(int g) const { return image[g]; }
    // Preimage of a target element, or -1 when it is not in the image.
    int preimage(int t) const;
};

ValidationReport validate_group(const FiniteGroup& g);
ValidationReport validate_monomorphism(const Monomorphism& m);

GroupPtr make_group(std::string name, std::vector<std::vector<int>> table);
GroupPtr cyclic(int n);
GroupPtr klein_four();

// Factor i occupies the i-th mixed-radix digit, the first factor being the
// most significant.
std::pair<GroupPtr, std::vector<Monomorphism>> direct_product(const std::vector<GroupPtr>& gs);

// Elements: rotation rho^k is k, reflection rho^k sigma is m + k.
// Returns the group and the inclusions of <sigma> and <rho sigma>.
std::tuple<GroupPtr, Monomorphism, Monomorphism> dihedral(int m);

// Sorted target elements lying in both images; always contains 0.
std::vector<int> subgroup_intersection(const Monomorphism& a, const Monomorphism& b);
std::vector<int> image_set(const Monomorphism& m);

// Composite x -> second(first(x)).
Monomorphism compose(const Monomorphism& first, const Monomorphism& second);

// Inclusion of the order-2 subgroup {0, x} of target, from Z/2.
Monomorphism involution_inclusion(const GroupPtr& target, int x);

json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const json& j);

}  // namespace gcg
