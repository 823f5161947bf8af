#include "piclass/perm.hpp"

#include <numeric>

#include "piclass/errors.hpp"

namespace piclass {

Permutation::Permutation(int degree) : images_(degree) {
    if (degree < 1) throw Error("Permutation: degree must be positive");
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty()) throw Error("Permutation: degree must be positive");
    std::vector<bool> seen(images_.size(), false);
    for (int image : images_) {
        if (image < 0 || image >= degree() || seen[image])
            throw Error("Permutation: image array is not a bijection");
        seen[image] = true;
    }
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i) {
        if (images_[i] != i) return false;
    }
    return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw Error("Permutation: degree mismatch in composition");
    std::vector<int> images(a.degree());
    for (int i = 0; i < a.degree(); ++i) images[i] = a.images_[b.images_[i]];
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> images(degree());
    for (int i = 0; i < degree(); ++i) images[images_[i]] = i;
    return Permutation(std::move(images));
}

std::vector<int> Permutation::cycle_lengths() const {
    std::vector<int> lengths;
    std::vector<bool> visited(degree(), false);
    for (int start = 0; start < degree(); ++start) {
        if (visited[start]) continue;
        int length = 0;
        for (int i = start; !visited[i]; i = images_[i]) {
            visited[i] = true;
            ++length;
        }
        lengths.push_back(length);
    }
    return lengths;
}

std::string Permutation::cycle_string() const {
    std::string out;
    std::vector<bool> visited(degree(), false);
    for (int start = 0; start < degree(); ++start) {
        if (visited[start] || images_[start] == start) {
            visited[start] = true;
            continue;
        }
        out += '(';
        bool first = true;
        for (int i = start; !visited[i]; i = images_[i]) {
            visited[i] = true;
            if (!first) out += ' ';
            out += std::to_string(i);
            first = false;
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

long long element_order(const Permutation& x) {
    long long order = 1;
    for (int length : x.cycle_lengths()) order = std::lcm(order, static_cast<long long>(length));
    return order;
}

}  // namespace piclass
