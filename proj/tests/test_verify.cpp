#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "piclass/errors.hpp"
#include "piclass/pifreq.hpp"
#include "piclass/structure.hpp"
#include "piclass/verify.hpp"

using namespace piclass;

namespace {

const Verdict* find_verdict(const std::vector<Verdict>& verdicts, const std::string& check,
                            const std::string& pi = "", long long q = -1) {
    for (const Verdict& v : verdicts) {
        if (v.check_name != check) continue;
        if (!pi.empty() && v.pi != pi) continue;
        if (q >= 0 && v.q != q) continue;
        return &v;
    }
    return nullptr;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("solution counting for x^n = 1") {
    Verdict trivial = frobenius_check(symmetric_group(4), 1);
    CHECK(trivial.passed);
    CHECK(trivial.details.at("count") >= 1);

    Verdict s3 = frobenius_check(symmetric_group(3), 2);
    CHECK(s3.details.at("count") == 4);  // identity plus three transpositions
    CHECK(s3.passed);

    Verdict c5s3 = frobenius_check(named_group("C(5)xS(3)"), 10);
    CHECK(c5s3.details.at("count") == 20);
    CHECK(c5s3.passed);

    CHECK_THROWS_AS(frobenius_check(symmetric_group(3), 4), NotADivisor);
    CHECK_THROWS_AS(frobenius_check(symmetric_group(3), 0), NotADivisor);
}

TEST_CASE("solution counts agree with the element-order route") {
    for (const char* spec : {"S(4)", "A(5)", "SL(2,3)", "C(3)xD(10)"}) {
        PermGroup g = named_group(spec);
        for (long long n = 1; n <= g.order(); ++n) {
            if (g.order() % n != 0) continue;
            long long by_order = 0;
            for (const Permutation& x : g.elements()) {
                if (n % element_order(x) == 0) ++by_order;
            }
            CHECK(frobenius_check(g, n).details.at("count") == by_order);
        }
    }
}

TEST_CASE("verify_group emits the registered checks") {
    PermGroup a4 = alternating_group(4);
    auto verdicts = verify_group(a4, {PrimeSet::single(2)});

    const Verdict* theorem_a = find_verdict(verdicts, "theorem-A", "{2}");
    REQUIRE(theorem_a != nullptr);
    CHECK(theorem_a->passed);
    CHECK(theorem_a->details.at("decision") == 0);
    CHECK(theorem_a->details.at("oracle") == 0);

    const Verdict* theo_hyp = find_verdict(verdicts, "theo-hyp", "{2}", 2);
    REQUIRE(theo_hyp != nullptr);
    CHECK(theo_hyp->passed);
    CHECK(theo_hyp->details.at("table_q_part") == 1);
    CHECK(theo_hyp->details.at("structural_q_part") == 1);

    auto cd = verify_group(named_group("C(3)xD(10)"), {PrimeSet::finite({2, 3})});
    const Verdict* theorem_c = find_verdict(cd, "theorem-C", "{2,3}", 3);
    REQUIRE(theorem_c != nullptr);
    CHECK(theorem_c->passed);
    CHECK(theorem_c->details.at("divides") == 1);
    CHECK(theorem_c->details.at("equal") == 0);
    CHECK(theorem_c->details.at("s_qprime_q_part") == 9);
    CHECK(theorem_c->details.at("centre_q_part") == 3);

    auto q8 = verify_group(quaternion_group(), {PrimeSet::single(2)});
    const Verdict* chm = find_verdict(q8, "chm-corollary");
    REQUIRE(chm != nullptr);
    CHECK(chm->passed);
    CHECK(chm->details.at("decision") == 1);

    // Every registered check appears for a direct product with |pi(G)| > 1.
    auto product = verify_group(named_group("Q8xC(3)"), {PrimeSet::finite({2, 3})});
    std::set<std::string> seen;
    for (const Verdict& v : product) seen.insert(v.check_name);
    for (const char* check : kCheckRegistry) CHECK(seen.count(check) == 1);

    // Failed verdicts never come with an empty details map.
    for (const Verdict& v : product) CHECK_FALSE(v.details.empty());
}

TEST_CASE("verify_group covers every divisor in the solution counts") {
    PermGroup g = symmetric_group(4);
    auto verdicts = verify_group(g, {});
    std::vector<long long> seen;
    for (const Verdict& v : verdicts) {
        if (v.check_name == "frobenius") {
            seen.push_back(v.q);
            CHECK(v.passed);
        }
    }
    std::vector<long long> divisors;
    for (long long d = 1; d <= 24; ++d) {
        if (24 % d == 0) divisors.push_back(d);
    }
    CHECK(seen == divisors);
}

TEST_CASE("pi policy expansion") {
    PermGroup g = named_group("C(3)xD(10)");  // order 30, three prime divisors
    auto sets = pi_sets_for_group(g, PiPolicy::all_subsets());
    CHECK(sets.size() == 7);
    std::set<std::string> rendered;
    for (const PrimeSet& p : sets) rendered.insert(p.to_string());
    CHECK(rendered ==
          std::set<std::string>{"{2}", "{3}", "{5}", "{2,3}", "{2,5}", "{3,5}", "{2,3,5}"});

    auto listed = pi_sets_for_group(g, PiPolicy::list({PrimeSet::single(7)}));
    REQUIRE(listed.size() == 1);
    CHECK(listed.front() == PrimeSet::single(7));

    CHECK(pi_sets_for_group(cyclic_group(1), PiPolicy::all_subsets()).empty());
}

TEST_CASE("corpus runs") {
    Corpus corpus = parse_corpus("S(3)\nA(4)\n");
    CorpusReport report = run_corpus(corpus, PiPolicy::list({PrimeSet::single(2)}));
    CHECK(report.errors.empty());
    CHECK(report.all_passed());

    // Identical frequency tables leave identical digests in the report.
    const Verdict* s3 = find_verdict(report.verdicts, "theorem-A", "{2}");
    long long s3_fnv = 0, a4_fnv = 0;
    for (const Verdict& v : report.verdicts) {
        if (v.check_name != "theorem-A") continue;
        if (v.group_label == "S(3)") s3_fnv = v.details.at("table_fnv");
        if (v.group_label == "A(4)") a4_fnv = v.details.at("table_fnv");
    }
    REQUIRE(s3 != nullptr);
    CHECK(s3_fnv == a4_fnv);
    CHECK(s3_fnv != 0);

    // Verdicts are sorted by (group, check, pi, q).
    for (std::size_t i = 1; i < report.verdicts.size(); ++i) {
        const Verdict& a = report.verdicts[i - 1];
        const Verdict& b = report.verdicts[i];
        CHECK(std::tie(a.group_label, a.check_name, a.pi, a.q) <=
              std::tie(b.group_label, b.check_name, b.pi, b.q));
    }

    // Summary tallies match the verdict list.
    for (const auto& [check, counts] : report.summary) {
        long long passed = 0, failed = 0;
        for (const Verdict& v : report.verdicts) {
            if (v.check_name == check) (v.passed ? passed : failed) += 1;
        }
        CHECK(counts.first == passed);
        CHECK(counts.second == failed);
    }
}

TEST_CASE("empty corpus") {
    CorpusReport report = run_corpus(parse_corpus("# empty\n"), PiPolicy::all_subsets());
    CHECK(report.verdicts.empty());
    CHECK(report.errors.empty());
    CHECK(report.all_passed());
}

TEST_CASE("per-group errors are collected, not fatal") {
    Corpus corpus = parse_corpus("cap=10\nS(3)\nS(5)\nB(2)\n");
    CorpusReport report = run_corpus(corpus, PiPolicy::all_subsets());
    REQUIRE(report.errors.size() == 2);
    CHECK(report.errors[0].line == 3);
    CHECK(report.errors[0].spec == "S(5)");
    CHECK(report.errors[0].message.find("cap") != std::string::npos);
    CHECK(report.errors[1].spec == "B(2)");
    CHECK_FALSE(report.all_passed());
    // S(3) itself was still verified.
    CHECK(find_verdict(report.verdicts, "chm-corollary") != nullptr);
}

TEST_CASE("reports are deterministic") {
    Corpus corpus = parse_corpus("S(3)\nSL(2,3)\nC(3)xD(10)\n");
    CorpusReport first = run_corpus(corpus, PiPolicy::all_subsets());
    CorpusReport second = run_corpus(corpus, PiPolicy::all_subsets());
    CHECK(report_to_json(first) == report_to_json(second));
    CHECK(report_to_table(first) == report_to_table(second));
    CHECK(first.corpus_hash == second.corpus_hash);
    CHECK(first.corpus_hash.rfind("fnv1a64:", 0) == 0);

    CorpusReport other = run_corpus(parse_corpus("S(3)\n"), PiPolicy::all_subsets());
    CHECK(other.corpus_hash != first.corpus_hash);
}

TEST_CASE("report JSON carries the schema and every section") {
    CorpusReport report =
        run_corpus(parse_corpus("S(3)\n"), PiPolicy::list({PrimeSet::single(2)}));
    std::string json = report_to_json(report);
    CHECK(json.find("\"schema\": \"piclass/1\"") != std::string::npos);
    CHECK(json.find("\"corpus_hash\"") != std::string::npos);
    CHECK(json.find("\"summary\"") != std::string::npos);
    CHECK(json.find("\"verdicts\"") != std::string::npos);
    CHECK(json.find("\"errors\"") != std::string::npos);
}

}  // TEST_SUITE
