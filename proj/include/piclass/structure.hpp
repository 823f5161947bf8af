#pragma once

#include <vector>

#include "piclass/arith.hpp"
#include "piclass/group.hpp"

namespace piclass {

struct ConjugacyClass {
    Permutation representative;  // the canonical minimum of the class
    long long size = 0;
    ElementSet members;
};

/// All conjugacy classes, sorted by (size, representative). The classes
/// partition the group and their sizes sum to the order.
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g);

/// Z(G): the elements commuting with everything, i.e. the union of the
/// size-1 conjugacy classes.
ElementSet centre(const PermGroup& g);

/// C_G(S): the elements of g commuting with every element of S.
ElementSet centralizer(const PermGroup& g, const ElementSet& s);

/// Centre of a subgroup given as an element set.
ElementSet subgroup_centre(const ElementSet& h);

/// The chain Z_1 < Z_2 < ... < Z_m of the upper central series, recorded
/// up to its fixpoint. The last term is the hypercentre.
struct UpperCentralSeries {
    std::vector<ElementSet> terms;
    bool stabilized = true;

    const ElementSet& hypercentre() const { return terms.back(); }
};

/// Computes Z_1 = Z(G) and lifts by the fixpoint rule
///   Z_{i+1} = { x : [x, s] lies in Z_i for every generator s },
/// stopping at the first repeat. Checking generators suffices because
/// [x, gh] = [x, h][x, g]^h and each Z_i is normal.
UpperCentralSeries upper_central_series(const PermGroup& g);

/// A Sylow q-subgroup, grown deterministically: starting from the
/// identity, repeatedly adjoin the canonically least q-element outside
/// the current q-subgroup that normalizes it. Returns {identity} when
/// q does not divide |G|.
ElementSet sylow_subgroup(const PermGroup& g, long long q);

/// The set G_P of P-elements: elements whose order is a P-number.
/// Always contains the identity; closed under conjugation and inversion.
ElementSet pi_elements(const PermGroup& g, const PrimeSet& p);

bool is_closed_under_multiplication(const ElementSet& s);

/// True iff the subgroup c has a normal Hall P-subgroup, detected as:
/// the P-elements of c number exactly part(|c|, P) and are closed under
/// multiplication (they then form the unique, hence normal, Hall
/// P-subgroup). Throws NotASubgroup if c itself fails the closure check.
bool has_normal_hall_pi(const ElementSet& c, const PrimeSet& p);

/// Ground truth for "g has a hypercentral Hall P-subgroup", computed
/// structurally with no class-size counting: every P-element must lie in
/// the final term of the upper central series.
bool hypercentral_hall_oracle(const PermGroup& g, const PrimeSet& p);

}  // namespace piclass
