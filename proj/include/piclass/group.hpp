#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "piclass/perm.hpp"

namespace piclass {

/// Default bound on exhaustive enumeration. Everything in this library
/// materializes full element lists, so the cap is what keeps memory bounded.
inline constexpr long long kDefaultEnumerationCap = 20000;

/// An element set: permutations of one degree, sorted in the canonical
/// (lexicographic) order, no duplicates. Subgroups, conjugacy classes,
/// central series terms and the like are all carried in this form.
using ElementSet = std::vector<Permutation>;

bool set_contains(const ElementSet& set, const Permutation& x);
bool is_subset(const ElementSet& inner, const ElementSet& outer);

/// Closure of the generators under composition, found breadth-first with
/// the generators applied in list order. The result is returned in
/// canonical order. Throws CapExceeded when the closure grows past `cap`.
ElementSet closure(int degree, const std::vector<Permutation>& generators,
                   long long cap = kDefaultEnumerationCap);

/// A finite permutation group given by generators, with the full element
/// list materialized on demand. Immutable once enumerated; safe to share
/// read-only between verification workers.
class PermGroup {
public:
    PermGroup(std::string label, int degree, std::vector<Permutation> generators,
              long long cap = kDefaultEnumerationCap);

    const std::string& label() const { return label_; }
    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    long long cap() const { return cap_; }

    /// Full element list in canonical order; enumerates on first use.
    const ElementSet& elements() const;

    long long order() const { return static_cast<long long>(elements().size()); }

    bool contains(const Permutation& x) const { return set_contains(elements(), x); }

    Permutation identity() const { return Permutation(degree_); }

    void relabel(std::string label) { label_ = std::move(label); }

    /// Non-null when this group was built as a direct product.
    const PermGroup* left_factor() const { return left_.get(); }
    const PermGroup* right_factor() const { return right_.get(); }

private:
    std::string label_;
    int degree_;
    std::vector<Permutation> generators_;
    long long cap_;
    mutable std::optional<ElementSet> elements_;
    std::shared_ptr<const PermGroup> left_;
    std::shared_ptr<const PermGroup> right_;

    friend PermGroup direct_product(const PermGroup& a, const PermGroup& b);
};

/// The direct product of a and b acting on degree(a) + degree(b) points.
/// The embedded copy of a fixes b's points pointwise and vice versa.
/// Throws CapExceeded if |a|*|b| exceeds the (larger of the two) caps.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

// Stock constructors. D(k) is the dihedral group of ORDER k.
PermGroup cyclic_group(long long n, long long cap = kDefaultEnumerationCap);
PermGroup dihedral_group(long long order, long long cap = kDefaultEnumerationCap);
PermGroup symmetric_group(int n, long long cap = kDefaultEnumerationCap);
PermGroup alternating_group(int n, long long cap = kDefaultEnumerationCap);
PermGroup quaternion_group(long long cap = kDefaultEnumerationCap);

/// SL(2,3) realized by its faithful action on the 8 nonzero vectors of the
/// 2-dimensional space over the 3-element field.
PermGroup special_linear_2_3(long long cap = kDefaultEnumerationCap);

}  // namespace piclass
