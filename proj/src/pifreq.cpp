#include "piclass/pifreq.hpp"

#include <cassert>

#include <nlohmann/json.hpp>

#include "piclass/errors.hpp"
#include "piclass/structure.hpp"

namespace piclass {

using nlohmann::json;

long long FrequencyTable::total_elements() const {
    long long total = 0;
    for (const auto& [size, count] : counts) total += size * count;
    return total;
}

std::vector<long long> FrequencyTable::support() const {
    std::vector<long long> sizes;
    sizes.reserve(counts.size());
    for (const auto& [size, count] : counts) sizes.push_back(size);
    return sizes;
}

long long SigmaSum::q_part(long long q) const {
    auto it = q_part_cache_.find(q);
    if (it == q_part_cache_.end())
        it = q_part_cache_.emplace(q, part(total_, PrimeSet::single(q))).first;
    return it->second;
}

FrequencyTable frequency_table(const PermGroup& g, const PrimeSet& p) {
    FrequencyTable table;
    table.pi = p;
    for (const ConjugacyClass& cls : conjugacy_classes(g)) {
        if (is_p_number(element_order(cls.representative), p)) ++table.counts[cls.size];
    }
    return table;
}

SigmaSum s_sigma(const FrequencyTable& f, const PrimeSet& sigma) {
    long long total = 0;
    for (const auto& [size, count] : f.counts) {
        if (is_p_number(size, sigma)) total += size * count;
    }
    return SigmaSum(sigma, total);
}

long long hypercentre_q_part(const FrequencyTable& f, long long q) {
    if (!is_prime(q)) throw Error("hypercentre_q_part: q must be prime");
    if (!f.pi.contains(q)) throw QNotInPi(q);
    return s_sigma(f, PrimeSet::single(q)).q_part(q);
}

bool sylow_hypercentral_criterion(const FrequencyTable& f, long long q, long long g_q_part) {
    if (g_q_part < 1) throw Error("sylow_hypercentral_criterion: the group's q-part must be positive");
    return hypercentre_q_part(f, q) == g_q_part;
}

bool decide_hypercentral_hall_pi(const FrequencyTable& f) {
    long long n = f.total_elements();
    for (const auto& [q, exponent] : factorize(n)) {
        if (!f.pi.contains(q)) continue;
        if (part(n, PrimeSet::single(q)) != hypercentre_q_part(f, q)) return false;
    }
    return true;
}

bool decide_nilpotent_from_multiset(const FrequencyTable& f) {
    long long n = f.total_elements();
    for (const auto& [q, exponent] : factorize(n)) {
        if (part(n, PrimeSet::single(q)) != hypercentre_q_part(f, q)) return false;
    }
    return true;
}

TheoremCVerdict theorem_c_check(const FrequencyTable& f, long long q, long long centre_q_part) {
    if (!is_prime(q)) throw Error("theorem_c_check: q must be prime");
    if (!f.pi.contains(q)) throw QNotInPi(q);
    if (centre_q_part < 1) throw Error("theorem_c_check: centre_q_part must be positive");
    long long s_qprime_q_part = s_sigma(f, PrimeSet::single(q).complement()).q_part(q);
    TheoremCVerdict verdict;
    verdict.divides = s_qprime_q_part % centre_q_part == 0;
    verdict.equal = s_qprime_q_part == centre_q_part;
    return verdict;
}

PropCVerdict propc_hypothesis_check(const PermGroup& g, const PrimeSet& p, long long q) {
    if (!is_prime(q)) throw Error("propc_hypothesis_check: q must be prime");
    if (!p.contains(q)) throw QNotInPi(q);
    if (g.order() % q != 0) throw QNotDividing(q);

    ElementSet sylow_q = sylow_subgroup(g, q);
    ElementSet centre_of_g = centre(g);

    PropCVerdict verdict;
    verdict.zq_central = is_subset(subgroup_centre(sylow_q), centre_of_g);
    verdict.cgq_normal_hall = has_normal_hall_pi(centralizer(g, sylow_q), p);
    long long centre_q_part = part(static_cast<long long>(centre_of_g.size()), PrimeSet::single(q));
    verdict.conclusion_equal = theorem_c_check(frequency_table(g, p), q, centre_q_part).equal;
    // The hypotheses are sufficient for the equality; a violation here is a bug.
    assert(!(verdict.zq_central && verdict.cgq_normal_hall) || verdict.conclusion_equal);
    return verdict;
}

std::string table_to_json(const FrequencyTable& f) {
    json counts = json::array();
    for (const auto& [size, count] : f.counts) counts.push_back({size, count});
    json out{{"schema", "piclass/1"}, {"pi", f.pi.to_string()}, {"counts", counts}};
    return out.dump();
}

FrequencyTable table_from_json(std::string_view text) {
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(std::string("malformed table JSON: ") + e.what());
    }
    if (!parsed.is_object() || !parsed.contains("pi") || !parsed.contains("counts"))
        throw Error("malformed table JSON: expected an object with \"pi\" and \"counts\"");
    if (parsed.contains("schema") && parsed["schema"] != "piclass/1")
        throw Error("malformed table JSON: unsupported schema");
    if (!parsed["pi"].is_string() || !parsed["counts"].is_array())
        throw Error("malformed table JSON: wrong field types");

    FrequencyTable table;
    try {
        table.pi = PrimeSet::parse(parsed["pi"].get<std::string>());
    } catch (const ParseError& e) {
        throw Error(std::string("malformed table JSON: bad pi: ") + e.what());
    }
    for (const json& entry : parsed["counts"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
            throw Error("malformed table JSON: counts entries must be [size, count] pairs");
        long long size = entry[0].get<long long>();
        long long count = entry[1].get<long long>();
        if (size < 1 || count < 1)
            throw Error("malformed table JSON: sizes and counts must be positive");
        if (table.counts.count(size)) throw Error("malformed table JSON: duplicate size");
        table.counts[size] = count;
    }
    if (table.counts.empty() || table.counts.begin()->first != 1)
        throw Error("malformed table JSON: the identity's size-1 class is missing");
    return table;
}

}  // namespace piclass
