#pragma once

#include <compare>
#include <string>
#include <vector>

namespace piclass {

/// A permutation of the points {0, ..., degree-1}, stored as its image array.
/// Comparison is lexicographic on the image array; this is the canonical
/// element ordering used everywhere a deterministic representative is needed.
class Permutation {
public:
    /// The identity on `degree` points.
    explicit Permutation(int degree);

    /// From an explicit image array; throws Error unless it is a bijection.
    explicit Permutation(std::vector<int> images);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator[](int point) const { return images_[point]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;

    /// Composition: (a * b) maps i to a[b[i]], i.e. b acts first.
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    Permutation inverse() const;

    /// Lengths of all cycles, fixed points included as 1s.
    std::vector<int> cycle_lengths() const;

    /// Disjoint cycle notation, fixed points omitted; "()" for the identity.
    std::string cycle_string() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// Least n >= 1 with x^n = identity; the lcm of the cycle lengths.
long long element_order(const Permutation& x);

}  // namespace piclass
