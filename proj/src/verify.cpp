#include "piclass/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "piclass/errors.hpp"
#include "piclass/pifreq.hpp"
#include "piclass/structure.hpp"

namespace piclass {

using nlohmann::json;

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 1099511628211ull;
    }
    return hash;
}

bool CorpusReport::all_passed() const {
    if (!errors.empty()) return false;
    for (const Verdict& v : verdicts) {
        if (!v.passed) return false;
    }
    return true;
}

namespace {

Permutation power(const Permutation& x, long long n) {
    Permutation result(x.degree());
    Permutation base = x;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

std::vector<long long> divisors_of(long long n) {
    std::vector<long long> divisors;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        divisors.push_back(d);
        if (d != n / d) divisors.push_back(n / d);
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

std::vector<long long> prime_divisors(long long n) {
    std::vector<long long> primes;
    for (const auto& [p, e] : factorize(n)) primes.push_back(p);
    return primes;
}

// The multiset of full-group class sizes of the elements lying in an
// embedded direct factor (the elements acting only on the factor's points).
std::map<long long, long long> embedded_factor_class_sizes(const PermGroup& product,
                                                           bool left_factor) {
    int left_degree = product.left_factor()->degree();
    auto in_factor = [&](const Permutation& x) {
        if (left_factor) {
            for (int i = left_degree; i < x.degree(); ++i) {
                if (x[i] != i) return false;
            }
        } else {
            for (int i = 0; i < left_degree; ++i) {
                if (x[i] != i) return false;
            }
        }
        return true;
    };
    std::map<long long, long long> sizes;
    for (const ConjugacyClass& cls : conjugacy_classes(product)) {
        if (in_factor(cls.representative)) ++sizes[cls.size];
    }
    return sizes;
}

std::map<long long, long long> standalone_class_sizes(const PermGroup& g) {
    std::map<long long, long long> sizes;
    for (const ConjugacyClass& cls : conjugacy_classes(g)) ++sizes[cls.size];
    return sizes;
}

}  // namespace

Verdict frobenius_check(const PermGroup& g, long long n) {
    if (n < 1 || g.order() % n != 0) throw NotADivisor(n, g.order());
    long long count = 0;
    for (const Permutation& x : g.elements()) {
        if (power(x, n).is_identity()) ++count;
    }
    Verdict verdict;
    verdict.group_label = g.label();
    verdict.pi = "*";
    verdict.check_name = "frobenius";
    verdict.q = n;
    verdict.passed = count % n == 0;
    verdict.details = {{"n", n}, {"count", count}};
    return verdict;
}

std::vector<Verdict> verify_group(const PermGroup& g, const std::vector<PrimeSet>& pis,
                                  long long frobenius_divisor_bound) {
    std::vector<Verdict> verdicts;
    const long long order = g.order();
    const ElementSet centre_of_g = centre(g);
    const UpperCentralSeries series = upper_central_series(g);
    const long long hypercentre_order = static_cast<long long>(series.hypercentre().size());
    const std::vector<long long> group_primes = prime_divisors(order);

    auto emit = [&](std::string check, std::string pi, long long q, bool passed,
                    std::map<std::string, long long> details) {
        verdicts.push_back(
            {g.label(), std::move(pi), std::move(check), q, passed, std::move(details)});
    };

    for (const PrimeSet& p : pis) {
        const FrequencyTable table = frequency_table(g, p);
        const std::string pi_text = p.to_string();
        const long long centre_pi_part =
            part(static_cast<long long>(centre_of_g.size()), p);

        // Table-only decision against the structural ground truth.
        {
            bool decision = decide_hypercentral_hall_pi(table);
            bool oracle = hypercentral_hall_oracle(g, p);
            emit("theorem-A", pi_text, 0, decision == oracle,
                 {{"decision", decision}, {"oracle", oracle},
                  {"total_pi_elements", table.total_elements()},
                  {"table_fnv", static_cast<long long>(fnv1a64(table_to_json(table)))}});
        }

        for (long long q : group_primes) {
            if (!p.contains(q)) continue;

            // Hypercentre q-part identity, plus the congruence
            // |S_q| = |Z(G)|_pi (mod q) underpinning it.
            {
                long long s_q_total = s_sigma(table, PrimeSet::single(q)).total();
                long long table_q_part = hypercentre_q_part(table, q);
                long long structural_q_part = part(hypercentre_order, PrimeSet::single(q));
                bool congruent = (s_q_total - centre_pi_part) % q == 0;
                emit("theo-hyp", pi_text, q,
                     table_q_part == structural_q_part && congruent,
                     {{"q", q},
                      {"s_q_total", s_q_total},
                      {"table_q_part", table_q_part},
                      {"structural_q_part", structural_q_part},
                      {"centre_pi_part", centre_pi_part},
                      {"congruent", congruent}});
            }

            // Centre q-part divides the S_{q'} q-part; on equality the
            // centre of a Sylow q-subgroup must be central in G.
            {
                long long centre_q_part =
                    part(static_cast<long long>(centre_of_g.size()), PrimeSet::single(q));
                SigmaSum s_qprime = s_sigma(table, PrimeSet::single(q).complement());
                TheoremCVerdict tc = theorem_c_check(table, q, centre_q_part);
                bool sylow_centre_central =
                    is_subset(subgroup_centre(sylow_subgroup(g, q)), centre_of_g);
                emit("theorem-C", pi_text, q, tc.divides && (!tc.equal || sylow_centre_central),
                     {{"q", q},
                      {"centre_q_part", centre_q_part},
                      {"s_qprime_total", s_qprime.total()},
                      {"s_qprime_q_part", s_qprime.q_part(q)},
                      {"divides", tc.divides},
                      {"equal", tc.equal},
                      {"sylow_centre_central", sylow_centre_central}});
            }

            // Sufficient condition for the equality above.
            {
                PropCVerdict pc = propc_hypothesis_check(g, p, q);
                bool implication =
                    !(pc.zq_central && pc.cgq_normal_hall) || pc.conclusion_equal;
                emit("prop-C", pi_text, q, implication,
                     {{"q", q},
                      {"zq_central", pc.zq_central},
                      {"cgq_normal_hall", pc.cgq_normal_hall},
                      {"conclusion_equal", pc.conclusion_equal}});
            }
        }
    }

    // Solution counts of x^n = 1 for the divisors of |G|.
    for (long long n : divisors_of(order)) {
        if (frobenius_divisor_bound > 0 && n > frobenius_divisor_bound) break;
        verdicts.push_back(frobenius_check(g, n));
    }

    // Nilpotency decided from the full class-size multiset vs the series.
    {
        FrequencyTable full_table = frequency_table(g, PrimeSet::all());
        bool decision = decide_nilpotent_from_multiset(full_table);
        bool oracle = hypercentre_order == order;
        emit("chm-corollary", "*", 0, decision == oracle,
             {{"decision", decision}, {"oracle", oracle}, {"group_order", order}});
    }

    // Every prime dividing the hypercentre order divides the centre order.
    {
        bool passed = true;
        for (long long p : prime_divisors(hypercentre_order)) {
            if (static_cast<long long>(centre_of_g.size()) % p != 0) passed = false;
        }
        emit("centre-hypercentre-primes", "*", 0, passed,
             {{"centre_order", static_cast<long long>(centre_of_g.size())},
              {"hypercentre_order", hypercentre_order}});
    }

    // For direct products: the class sizes of an embedded factor, taken in
    // the whole group, must reproduce the factor's own class-size multiset.
    if (g.left_factor() != nullptr) {
        for (int side = 0; side < 2; ++side) {
            const PermGroup& factor = side == 0 ? *g.left_factor() : *g.right_factor();
            auto embedded = embedded_factor_class_sizes(g, side == 0);
            auto standalone = standalone_class_sizes(factor);
            emit("lemma-2.1", "*", side, embedded == standalone,
                 {{"factor", side},
                  {"factor_order", factor.order()},
                  {"embedded_classes", static_cast<long long>(embedded.size())},
                  {"standalone_classes", static_cast<long long>(standalone.size())}});
        }
    }

    std::stable_sort(verdicts.begin(), verdicts.end(), [](const Verdict& a, const Verdict& b) {
        return std::tie(a.check_name, a.pi, a.q) < std::tie(b.check_name, b.pi, b.q);
    });
    return verdicts;
}

std::vector<PrimeSet> pi_sets_for_group(const PermGroup& g, const PiPolicy& policy) {
    if (policy.mode == PiPolicy::Mode::Listed) return policy.listed;

    std::vector<long long> primes = prime_divisors(g.order());
    std::vector<PrimeSet> sets;
    if (primes.empty()) return sets;
    if (primes.size() <= 4) {
        for (unsigned mask = 1; mask < (1u << primes.size()); ++mask) {
            std::vector<long long> subset;
            for (std::size_t i = 0; i < primes.size(); ++i) {
                if (mask & (1u << i)) subset.push_back(primes[i]);
            }
            sets.push_back(PrimeSet::finite(std::move(subset)));
        }
    } else {
        for (long long p : primes) sets.push_back(PrimeSet::single(p));
        sets.push_back(PrimeSet::finite(primes));
    }
    return sets;
}

CorpusReport run_corpus(const Corpus& corpus, const PiPolicy& policy) {
    CorpusReport report;
    report.corpus_hash = [&] {
        char buffer[32];
        std::snprintf(buffer, sizeof buffer, "fnv1a64:%016llx",
                      static_cast<unsigned long long>(fnv1a64(corpus.raw_text)));
        return std::string(buffer);
    }();

    for (const CorpusEntry& entry : corpus.entries) {
        try {
            PermGroup group = named_group(entry.spec, corpus.cap);
            group.elements();  // force enumeration so cap errors surface here
            std::vector<Verdict> verdicts = verify_group(group, pi_sets_for_group(group, policy));
            report.verdicts.insert(report.verdicts.end(),
                                   std::make_move_iterator(verdicts.begin()),
                                   std::make_move_iterator(verdicts.end()));
        } catch (const Error& e) {
            report.errors.push_back({entry.line, entry.spec, e.what()});
        }
    }

    std::stable_sort(report.verdicts.begin(), report.verdicts.end(),
                     [](const Verdict& a, const Verdict& b) {
                         return std::tie(a.group_label, a.check_name, a.pi, a.q) <
                                std::tie(b.group_label, b.check_name, b.pi, b.q);
                     });

    for (const char* check : kCheckRegistry) report.summary[check] = {0, 0};
    for (const Verdict& v : report.verdicts) {
        auto& [passed, failed] = report.summary[v.check_name];
        (v.passed ? passed : failed) += 1;
    }
    return report;
}

std::string report_to_json(const CorpusReport& report) {
    json verdicts = json::array();
    for (const Verdict& v : report.verdicts) {
        verdicts.push_back({{"group", v.group_label},
                            {"check", v.check_name},
                            {"pi", v.pi},
                            {"q", v.q},
                            {"passed", v.passed},
                            {"details", v.details}});
    }
    json errors = json::array();
    for (const CorpusError& e : report.errors) {
        errors.push_back({{"line", e.line}, {"spec", e.spec}, {"error", e.message}});
    }
    json summary;
    for (const auto& [check, counts] : report.summary) {
        summary[check] = {{"passed", counts.first}, {"failed", counts.second}};
    }
    json out{{"schema", "piclass/1"},
             {"corpus_hash", report.corpus_hash},
             {"summary", summary},
             {"verdicts", verdicts},
             {"errors", errors}};
    return out.dump(2);
}

std::string report_to_table(const CorpusReport& report) {
    std::ostringstream out;
    out << "corpus " << report.corpus_hash << "\n";
    for (const auto& [check, counts] : report.summary) {
        out << "  " << check << ": " << counts.first << " passed, " << counts.second
            << " failed\n";
    }
    if (!report.errors.empty()) {
        out << "errors:\n";
        for (const CorpusError& e : report.errors) {
            out << "  line " << e.line << " [" << e.spec << "]: " << e.message << "\n";
        }
    }
    out << "\n";
    out << "group | check | pi | q | result | details\n";
    for (const Verdict& v : report.verdicts) {
        out << v.group_label << " | " << v.check_name << " | " << v.pi << " | " << v.q << " | "
            << (v.passed ? "ok" : "FAIL") << " |";
        for (const auto& [key, value] : v.details) out << ' ' << key << '=' << value;
        out << "\n";
    }
    return out.str();
}

}  // namespace piclass
