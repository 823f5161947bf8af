#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "piclass/arith.hpp"
#include "piclass/group.hpp"

namespace piclass {

/// The P-class-size frequency table of a group: for each conjugacy-class
/// size n of a P-element, the number w(n) of classes of that size. This
/// multiset is the sole input to every multiset-only decision procedure;
/// the group order deliberately does not live here (groups with equal
/// tables can have different orders).
struct FrequencyTable {
    PrimeSet pi = PrimeSet::all();
    std::map<long long, long long> counts;  // class size -> number of classes

    /// N = sum of n * w(n): the total number of P-elements.
    long long total_elements() const;

    /// Sizes with nonzero count, ascending.
    std::vector<long long> support() const;
};

/// The size of the union of those classes in the table whose sizes are
/// sigma-numbers, together with cached q-parts of that size.
class SigmaSum {
public:
    SigmaSum(PrimeSet sigma, long long total)
        : sigma_(std::move(sigma)), total_(total) {}

    const PrimeSet& sigma() const { return sigma_; }
    long long total() const { return total_; }

    /// part(total, {q}), cached per prime.
    long long q_part(long long q) const;

private:
    PrimeSet sigma_;
    long long total_ = 0;
    mutable std::map<long long, long long> q_part_cache_;
};

/// Builds the table from a group: one entry per conjugacy class whose
/// elements are P-elements. w(1) always equals the order of the Hall
/// P-subgroup of the centre.
FrequencyTable frequency_table(const PermGroup& g, const PrimeSet& p);

/// total = sum over sizes n that are sigma-numbers of n * w(n).
SigmaSum s_sigma(const FrequencyTable& f, const PrimeSet& sigma);

/// The q-part of the total size of the classes in the table whose sizes
/// are q-powers. This equals the q-part of the order of the hypercentre
/// of any group realizing the table. Requires q in f.pi (the identity is
/// false outside it); throws QNotInPi otherwise.
long long hypercentre_q_part(const FrequencyTable& f, long long q);

/// True iff a Sylow q-subgroup of the realizing group is hypercentral,
/// i.e. hypercentre_q_part(f, q) equals the group order's q-part, which
/// the caller must supply (it is not derivable from the table).
bool sylow_hypercentral_criterion(const FrequencyTable& f, long long q, long long g_q_part);

/// Decides from the table alone whether a group realizing it has a
/// hypercentral Hall pi-subgroup: with N the total element count, checks
/// part(N, {q}) = hypercentre_q_part(f, q) for every prime q in pi
/// dividing N.
///
/// Soundness: if G realizes the table and has a hypercentral Hall
/// pi-subgroup, then G is the direct product of a nilpotent normal
/// pi-subgroup and a pi'-subgroup, the pi-elements are exactly that
/// factor, so N = |G|_pi and each check passes because the table's
/// q-part recovers |Z_inf(G)|_q = |G|_q.
/// Completeness: for any realizing H, the solutions of x^{|H|_pi} = 1
/// include all pi-elements, and their count N is a multiple of |H|_pi
/// by the Frobenius solution-counting theorem; hence
/// part(N, {q}) >= |H|_q >= |Z_inf(H)|_q = hypercentre_q_part(f, q)
/// for q in pi, and equality throughout forces every Sylow q-subgroup
/// with q in pi to be hypercentral, which yields the Hall pi-subgroup.
bool decide_hypercentral_hall_pi(const FrequencyTable& f);

/// Specialization for tables built with pi = all primes, where N equals
/// the group order: true iff the realizing group is nilpotent.
bool decide_nilpotent_from_multiset(const FrequencyTable& f);

struct TheoremCVerdict {
    bool divides = false;  // centre_q_part divides the q-part of the S_{q'} total
    bool equal = false;    // the two are equal; the centre of a Sylow
                           // q-subgroup is then contained in the centre
};

/// The divisibility and equality tests between part(|Z(G)|, {q}) (passed
/// in by the caller) and the q-part of the S_{q'} total. Requires q in
/// f.pi; throws QNotInPi otherwise.
TheoremCVerdict theorem_c_check(const FrequencyTable& f, long long q, long long centre_q_part);

struct PropCVerdict {
    bool zq_central = false;        // Z(Q) contained in Z(G) for Q a Sylow q-subgroup
    bool cgq_normal_hall = false;   // C_G(Q) has a normal Hall pi-subgroup
    bool conclusion_equal = false;  // |Z(G)|_q equals the q-part of the S_{q'} total
};

/// Evaluates the sufficient condition for the equality in
/// theorem_c_check: if Z(Q) <= Z(G) and C_G(Q) has a normal Hall
/// pi-subgroup then the equality must hold. Throws QNotInPi when q is
/// outside p, QNotDividing when q does not divide |G|.
PropCVerdict propc_hypothesis_check(const PermGroup& g, const PrimeSet& p, long long q);

/// JSON rendering: {"schema":"piclass/1","pi":"{2}","counts":[[n,w],...]}
/// with counts sorted by n. Groups with equal tables render to identical
/// bytes.
std::string table_to_json(const FrequencyTable& f);

/// Inverse of table_to_json; accepts the same shape with or without the
/// schema field. Throws Error on malformed input.
FrequencyTable table_from_json(std::string_view text);

}  // namespace piclass
