#include "piclass/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "piclass/errors.hpp"

namespace piclass {

bool set_contains(const ElementSet& set, const Permutation& x) {
    return std::binary_search(set.begin(), set.end(), x);
}

bool is_subset(const ElementSet& inner, const ElementSet& outer) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

ElementSet closure(int degree, const std::vector<Permutation>& generators, long long cap) {
    std::set<Permutation> seen;
    std::deque<Permutation> frontier;

    Permutation id(degree);
    seen.insert(id);
    frontier.push_back(id);

    while (!frontier.empty()) {
        Permutation current = std::move(frontier.front());
        frontier.pop_front();
        for (const Permutation& g : generators) {
            Permutation next = current * g;
            if (seen.insert(next).second) {
                if (static_cast<long long>(seen.size()) > cap) throw CapExceeded(cap);
                frontier.push_back(std::move(next));
            }
        }
    }
    return ElementSet(seen.begin(), seen.end());
}

PermGroup::PermGroup(std::string label, int degree, std::vector<Permutation> generators,
                     long long cap)
    : label_(std::move(label)), degree_(degree), generators_(std::move(generators)), cap_(cap) {
    if (degree_ < 1) throw Error("PermGroup: degree must be positive");
    if (generators_.empty()) throw Error("PermGroup: generator list must be nonempty");
    if (cap_ < 1) throw Error("PermGroup: cap must be positive");
    for (const Permutation& g : generators_) {
        if (g.degree() != degree_)
            throw Error("PermGroup: generator degree does not match the group degree");
    }
}

const ElementSet& PermGroup::elements() const {
    if (!elements_) elements_ = closure(degree_, generators_, cap_);
    return *elements_;
}

namespace {

Permutation embed_left(const Permutation& p, int total_degree) {
    std::vector<int> images(total_degree);
    for (int i = 0; i < p.degree(); ++i) images[i] = p[i];
    for (int i = p.degree(); i < total_degree; ++i) images[i] = i;
    return Permutation(std::move(images));
}

Permutation embed_right(const Permutation& p, int offset) {
    std::vector<int> images(offset + p.degree());
    for (int i = 0; i < offset; ++i) images[i] = i;
    for (int i = 0; i < p.degree(); ++i) images[offset + i] = offset + p[i];
    return Permutation(std::move(images));
}

}  // namespace

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
    long long cap = std::max(a.cap(), b.cap());
    if (a.order() * b.order() > cap) throw CapExceeded(cap);

    int total_degree = a.degree() + b.degree();
    std::vector<Permutation> generators;
    generators.reserve(a.generators().size() + b.generators().size());
    for (const Permutation& g : a.generators()) generators.push_back(embed_left(g, total_degree));
    for (const Permutation& g : b.generators()) generators.push_back(embed_right(g, a.degree()));

    PermGroup product(a.label() + "x" + b.label(), total_degree, std::move(generators), cap);
    product.left_ = std::make_shared<const PermGroup>(a);
    product.right_ = std::make_shared<const PermGroup>(b);
    return product;
}

PermGroup cyclic_group(long long n, long long cap) {
    if (n < 1) throw Error("C(n): n must be positive");
    std::string label = "C(" + std::to_string(n) + ")";
    if (n == 1) return PermGroup(label, 1, {Permutation(1)}, cap);
    std::vector<int> images(n);
    for (long long i = 0; i < n; ++i) images[i] = static_cast<int>((i + 1) % n);
    return PermGroup(label, static_cast<int>(n), {Permutation(std::move(images))}, cap);
}

PermGroup dihedral_group(long long order, long long cap) {
    if (order < 2 || order % 2 != 0) throw Error("D(k): k must be an even integer >= 2");
    std::string label = "D(" + std::to_string(order) + ")";
    long long n = order / 2;  // number of rotations
    if (n == 1) return PermGroup(label, 2, {Permutation(std::vector<int>{1, 0})}, cap);
    if (n == 2) {
        // The order-4 dihedral group is the Klein four group; a faithful
        // action needs two independent swapped pairs.
        return PermGroup(label, 4,
                         {Permutation(std::vector<int>{1, 0, 2, 3}),
                          Permutation(std::vector<int>{0, 1, 3, 2})},
                         cap);
    }
    std::vector<int> rotation(n), reflection(n);
    for (long long i = 0; i < n; ++i) {
        rotation[i] = static_cast<int>((i + 1) % n);
        reflection[i] = static_cast<int>((n - i) % n);
    }
    return PermGroup(label, static_cast<int>(n),
                     {Permutation(std::move(rotation)), Permutation(std::move(reflection))}, cap);
}

PermGroup symmetric_group(int n, long long cap) {
    if (n < 1) throw Error("S(n): n must be positive");
    std::string label = "S(" + std::to_string(n) + ")";
    if (n == 1) return PermGroup(label, 1, {Permutation(1)}, cap);
    std::vector<int> swap_first(n), cycle(n);
    for (int i = 0; i < n; ++i) {
        swap_first[i] = i;
        cycle[i] = (i + 1) % n;
    }
    swap_first[0] = 1;
    swap_first[1] = 0;
    if (n == 2) return PermGroup(label, 2, {Permutation(std::move(swap_first))}, cap);
    return PermGroup(label, n, {Permutation(std::move(swap_first)), Permutation(std::move(cycle))},
                     cap);
}

PermGroup alternating_group(int n, long long cap) {
    if (n < 1) throw Error("A(n): n must be positive");
    std::string label = "A(" + std::to_string(n) + ")";
    if (n <= 2) return PermGroup(label, n, {Permutation(n)}, cap);

    std::vector<int> three_cycle(n);
    for (int i = 0; i < n; ++i) three_cycle[i] = i;
    three_cycle[0] = 1;
    three_cycle[1] = 2;
    three_cycle[2] = 0;
    if (n == 3) return PermGroup(label, 3, {Permutation(std::move(three_cycle))}, cap);

    std::vector<int> big_cycle(n);
    if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) big_cycle[i] = (i + 1) % n;  // full cycle, even for odd n
    } else {
        big_cycle[0] = 0;  // cycle on the last n-1 points
        for (int i = 1; i < n; ++i) big_cycle[i] = i % (n - 1) + 1;
    }
    return PermGroup(label, n,
                     {Permutation(std::move(three_cycle)), Permutation(std::move(big_cycle))}, cap);
}

namespace {

// Quaternion units encoded as basis*2 + (1 if negative): 1, -1, i, -i, j, -j, k, -k.
int quat_multiply(int x, int y) {
    static constexpr int kBasis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int kNegative[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    int bx = x >> 1, by = y >> 1;
    int sign = (x & 1) ^ (y & 1) ^ kNegative[bx][by];
    return kBasis[bx][by] * 2 + sign;
}

Permutation quat_right_multiplication(int unit) {
    std::vector<int> images(8);
    for (int x = 0; x < 8; ++x) images[x] = quat_multiply(x, unit);
    return Permutation(std::move(images));
}

}  // namespace

PermGroup quaternion_group(long long cap) {
    // Right regular action on the 8 quaternion units; generated by i and j.
    return PermGroup("Q8", 8, {quat_right_multiplication(2), quat_right_multiplication(4)}, cap);
}

PermGroup special_linear_2_3(long long cap) {
    // Points are the 8 nonzero vectors of F3^2 in lexicographic order.
    std::vector<std::pair<int, int>> points;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            if (a != 0 || b != 0) points.emplace_back(a, b);
        }
    }
    auto index_of = [&](int a, int b) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (points[i] == std::make_pair(a, b)) return static_cast<int>(i);
        }
        throw Error("SL(2,3): internal point lookup failed");
    };
    auto matrix_action = [&](int m00, int m01, int m10, int m11) {
        std::vector<int> images(8);
        for (std::size_t i = 0; i < points.size(); ++i) {
            auto [a, b] = points[i];
            images[i] = index_of((m00 * a + m01 * b) % 3, (m10 * a + m11 * b) % 3);
        }
        return Permutation(std::move(images));
    };
    // The standard generators: a transvection and the order-4 rotation.
    return PermGroup("SL(2,3)", 8, {matrix_action(1, 1, 0, 1), matrix_action(0, 2, 1, 0)}, cap);
}

}  // namespace piclass
