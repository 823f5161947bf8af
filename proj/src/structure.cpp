#include "piclass/structure.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "piclass/errors.hpp"

namespace piclass {

namespace {

std::vector<Permutation> inverses_of(const std::vector<Permutation>& perms) {
    std::vector<Permutation> result;
    result.reserve(perms.size());
    for (const Permutation& p : perms) result.push_back(p.inverse());
    return result;
}

// [x, s] = x^-1 s^-1 x s
Permutation commutator(const Permutation& x, const Permutation& x_inv, const Permutation& s,
                       const Permutation& s_inv) {
    return x_inv * s_inv * x * s;
}

}  // namespace

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g) {
    const ElementSet& elements = g.elements();
    const std::vector<Permutation>& gens = g.generators();
    std::vector<Permutation> gen_invs = inverses_of(gens);

    auto index_of = [&](const Permutation& x) {
        return static_cast<std::size_t>(
            std::lower_bound(elements.begin(), elements.end(), x) - elements.begin());
    };

    std::vector<bool> assigned(elements.size(), false);
    std::vector<ConjugacyClass> classes;

    for (std::size_t start = 0; start < elements.size(); ++start) {
        if (assigned[start]) continue;
        // Orbit of elements[start] under conjugation; conjugating by the
        // generators alone reaches the whole class.
        std::set<Permutation> orbit;
        std::deque<Permutation> frontier;
        orbit.insert(elements[start]);
        frontier.push_back(elements[start]);
        while (!frontier.empty()) {
            Permutation current = std::move(frontier.front());
            frontier.pop_front();
            for (std::size_t k = 0; k < gens.size(); ++k) {
                Permutation conjugate = gen_invs[k] * current * gens[k];
                if (orbit.insert(conjugate).second) frontier.push_back(std::move(conjugate));
            }
        }
        ElementSet members(orbit.begin(), orbit.end());
        for (const Permutation& m : members) assigned[index_of(m)] = true;
        ConjugacyClass cls{members.front(), static_cast<long long>(members.size()),
                           std::move(members)};
        classes.push_back(std::move(cls));
    }

    std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
        if (a.size != b.size) return a.size < b.size;
        return a.representative < b.representative;
    });
    return classes;
}

ElementSet centre(const PermGroup& g) {
    // Commuting with every generator is commuting with everything.
    ElementSet result;
    for (const Permutation& x : g.elements()) {
        bool central = true;
        for (const Permutation& s : g.generators()) {
            if (!(x * s == s * x)) {
                central = false;
                break;
            }
        }
        if (central) result.push_back(x);
    }
    return result;
}

ElementSet centralizer(const PermGroup& g, const ElementSet& s) {
    ElementSet result;
    for (const Permutation& x : g.elements()) {
        bool commutes = true;
        for (const Permutation& y : s) {
            if (!(x * y == y * x)) {
                commutes = false;
                break;
            }
        }
        if (commutes) result.push_back(x);
    }
    return result;
}

ElementSet subgroup_centre(const ElementSet& h) {
    ElementSet result;
    for (const Permutation& x : h) {
        bool central = true;
        for (const Permutation& y : h) {
            if (!(x * y == y * x)) {
                central = false;
                break;
            }
        }
        if (central) result.push_back(x);
    }
    return result;
}

UpperCentralSeries upper_central_series(const PermGroup& g) {
    const ElementSet& elements = g.elements();
    const std::vector<Permutation>& gens = g.generators();
    std::vector<Permutation> gen_invs = inverses_of(gens);

    UpperCentralSeries series;
    ElementSet current = centre(g);
    series.terms.push_back(current);

    while (true) {
        ElementSet next;
        for (const Permutation& x : elements) {
            Permutation x_inv = x.inverse();
            bool lifts = true;
            for (std::size_t k = 0; k < gens.size(); ++k) {
                if (!set_contains(current, commutator(x, x_inv, gens[k], gen_invs[k]))) {
                    lifts = false;
                    break;
                }
            }
            if (lifts) next.push_back(x);
        }
        if (next.size() == current.size()) break;  // fixpoint reached
        series.terms.push_back(next);
        current = std::move(next);
    }
    series.stabilized = true;
    return series;
}

namespace {

bool is_power_of(long long n, long long q) {
    while (n % q == 0) n /= q;
    return n == 1;
}

bool normalizes(const Permutation& y, const ElementSet& p) {
    Permutation y_inv = y.inverse();
    for (const Permutation& x : p) {
        if (!set_contains(p, y_inv * x * y)) return false;
    }
    return true;
}

}  // namespace

ElementSet sylow_subgroup(const PermGroup& g, long long q) {
    if (!is_prime(q)) throw Error("sylow_subgroup: q must be prime");
    long long target = part(g.order(), PrimeSet::single(q));
    ElementSet p{g.identity()};
    if (target == 1) return p;

    ElementSet q_elements;
    for (const Permutation& x : g.elements()) {
        if (is_power_of(element_order(x), q)) q_elements.push_back(x);
    }

    std::vector<Permutation> accumulated_generators;
    while (static_cast<long long>(p.size()) < target) {
        const Permutation* found = nullptr;
        for (const Permutation& y : q_elements) {
            if (set_contains(p, y)) continue;
            if (normalizes(y, p)) {
                found = &y;
                break;
            }
        }
        if (found == nullptr)
            throw std::logic_error("sylow_subgroup: extension stalled below the full q-part");
        accumulated_generators.push_back(*found);
        p = closure(g.degree(), accumulated_generators, g.order());
    }
    return p;
}

ElementSet pi_elements(const PermGroup& g, const PrimeSet& p) {
    ElementSet result;
    for (const Permutation& x : g.elements()) {
        if (is_p_number(element_order(x), p)) result.push_back(x);
    }
    return result;
}

bool is_closed_under_multiplication(const ElementSet& s) {
    for (const Permutation& x : s) {
        for (const Permutation& y : s) {
            if (!set_contains(s, x * y)) return false;
        }
    }
    return true;
}

bool has_normal_hall_pi(const ElementSet& c, const PrimeSet& p) {
    if (c.empty() || !is_closed_under_multiplication(c)) throw NotASubgroup();
    ElementSet t;
    for (const Permutation& x : c) {
        if (is_p_number(element_order(x), p)) t.push_back(x);
    }
    long long hall_order = part(static_cast<long long>(c.size()), p);
    if (static_cast<long long>(t.size()) != hall_order) return false;
    return is_closed_under_multiplication(t);
}

bool hypercentral_hall_oracle(const PermGroup& g, const PrimeSet& p) {
    const ElementSet hypercentre = upper_central_series(g).hypercentre();
    for (const Permutation& x : pi_elements(g, p)) {
        if (!set_contains(hypercentre, x)) return false;
    }
    return true;
}

}  // namespace piclass
