#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "piclass/arith.hpp"
#include "piclass/group.hpp"
#include "piclass/parse.hpp"

namespace piclass {

/// The fixed registry of checks a corpus run may emit.
inline constexpr const char* kCheckRegistry[] = {
    "theo-hyp",  "theorem-A", "theorem-C",     "prop-C",
    "frobenius", "lemma-2.1", "chm-corollary", "centre-hypercentre-primes",
};

/// Outcome of one check on one group. `q` is the check-specific index:
/// the prime q for the per-prime checks, the divisor n for "frobenius",
/// the factor index for "lemma-2.1", and 0 elsewhere. The details map
/// always carries enough numeric witnesses to redo the check by hand.
struct Verdict {
    std::string group_label;
    std::string pi;  // PrimeSet syntax; "*" for pi-independent checks
    std::string check_name;
    long long q = 0;
    bool passed = false;
    std::map<std::string, long long> details;
};

struct CorpusError {
    int line = 0;
    std::string spec;
    std::string message;
};

struct CorpusReport {
    std::vector<Verdict> verdicts;
    std::vector<CorpusError> errors;
    std::map<std::string, std::pair<long long, long long>> summary;  // check -> (passed, failed)
    std::string corpus_hash;

    bool all_passed() const;
};

/// Counts the solutions of x^n = 1 by raising every element to the n-th
/// power; the count must be a multiple of n. Throws NotADivisor unless
/// n divides |G|.
Verdict frobenius_check(const PermGroup& g, long long n);

/// Runs every registered check on one group: per prime set P in `pis`
/// the table-vs-oracle decision, and per prime q in P dividing |G| the
/// hypercentre identity, the centre/Sylow-centre criterion, and its
/// sufficient condition; plus the per-group checks (solution counts for
/// every divisor up to `frobenius_divisor_bound`, 0 = all divisors;
/// nilpotency from the full table; hypercentre/centre prime divisors;
/// class-size multisets of embedded direct factors).
std::vector<Verdict> verify_group(const PermGroup& g, const std::vector<PrimeSet>& pis,
                                  long long frobenius_divisor_bound = 0);

/// Which prime sets to test per group.
struct PiPolicy {
    enum class Mode { AllSubsets, Listed };
    Mode mode = Mode::AllSubsets;
    std::vector<PrimeSet> listed;

    static PiPolicy all_subsets() { return {}; }
    static PiPolicy list(std::vector<PrimeSet> pis) {
        return {Mode::Listed, std::move(pis)};
    }
};

/// AllSubsets: every nonempty subset of the primes dividing |G| when
/// there are at most four of them, else the singletons plus the full
/// set. Listed: the given sets verbatim.
std::vector<PrimeSet> pi_sets_for_group(const PermGroup& g, const PiPolicy& policy);

/// Verifies every corpus entry, collecting per-group parse/cap errors
/// instead of aborting. Verdicts are sorted by (group, check, pi, q).
CorpusReport run_corpus(const Corpus& corpus, const PiPolicy& policy);

std::string report_to_json(const CorpusReport& report);
std::string report_to_table(const CorpusReport& report);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace piclass
