// piclass: compute pi-class-size frequency tables of small permutation
// groups, decide hypercentral Hall pi-subgroups from those tables alone,
// and verify the decision procedures against structural computations
// across a corpus of groups.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "piclass/errors.hpp"
#include "piclass/pifreq.hpp"
#include "piclass/structure.hpp"
#include "piclass/verify.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalseOrFailed = 1;
constexpr int kExitUsage = 2;

long long env_default_cap() {
    const char* env = std::getenv("PICLASS_CAP");
    if (env == nullptr) return piclass::kDefaultEnumerationCap;
    std::string text(env);
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw piclass::Error("PICLASS_CAP must be a positive integer");
    long long value = std::stoll(text);
    if (value < 1) throw piclass::Error("PICLASS_CAP must be a positive integer");
    return value;
}

long long resolve_cap(const std::optional<long long>& flag) {
    return flag.has_value() ? *flag : env_default_cap();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw piclass::Error("cannot write file: " + path);
    out << content;
}

std::vector<long long> summary_primes(const piclass::FrequencyTable& table) {
    if (table.pi.kind() == piclass::PrimeSet::Kind::Finite) return table.pi.members();
    std::vector<long long> primes;
    for (const auto& [p, e] : piclass::factorize(table.total_elements())) {
        if (table.pi.contains(p)) primes.push_back(p);
    }
    return primes;
}

std::string render_table_text(const std::string& label, long long order,
                              const piclass::FrequencyTable& table) {
    std::ostringstream out;
    out << "group   " << label << "  (order " << order << ")\n";
    out << "pi      " << table.pi.to_string() << "\n";
    out << "  size  classes\n";
    for (const auto& [size, count] : table.counts) {
        out << std::setw(6) << size << "  " << count << "\n";
    }
    out << "N = " << table.total_elements() << ", w(1) = " << table.counts.at(1) << "\n";
    for (long long q : summary_primes(table)) {
        piclass::SigmaSum s_q = piclass::s_sigma(table, piclass::PrimeSet::single(q));
        piclass::SigmaSum s_qprime =
            piclass::s_sigma(table, piclass::PrimeSet::single(q).complement());
        out << "q = " << q << ": |S_q| = " << s_q.total() << ", |S_q|_q = " << s_q.q_part(q)
            << ", |S_q'| = " << s_qprime.total() << ", |S_q'|_q = " << s_qprime.q_part(q) << "\n";
    }
    return out.str();
}

nlohmann::json verdict_to_json(const piclass::Verdict& v) {
    return {{"group", v.group_label}, {"check", v.check_name}, {"pi", v.pi},
            {"q", v.q},              {"passed", v.passed},    {"details", v.details}};
}

std::string verdicts_table(const std::vector<piclass::Verdict>& verdicts) {
    std::ostringstream out;
    out << "check | pi | q | result | details\n";
    for (const piclass::Verdict& v : verdicts) {
        out << v.check_name << " | " << v.pi << " | " << v.q << " | "
            << (v.passed ? "ok" : "FAIL") << " |";
        for (const auto& [key, value] : v.details) out << ' ' << key << '=' << value;
        out << "\n";
    }
    return out.str();
}

struct Options {
    std::string group_spec;
    std::string input;
    std::string corpus_path;
    std::string pi_text;
    std::vector<std::string> pi_list;
    std::optional<long long> cap;
    std::string format = "table";
    std::string out_path;
};

int cmd_freq(const Options& opt) {
    piclass::PermGroup group = piclass::named_group(opt.group_spec, resolve_cap(opt.cap));
    piclass::FrequencyTable table =
        piclass::frequency_table(group, piclass::PrimeSet::parse(opt.pi_text));
    std::string rendered = opt.format == "json"
                               ? piclass::table_to_json(table) + "\n"
                               : render_table_text(group.label(), group.order(), table);
    std::cout << rendered;
    if (!opt.out_path.empty()) write_file(opt.out_path, rendered);
    return kExitTrue;
}

int cmd_decide(const Options& opt) {
    piclass::FrequencyTable table;
    if (std::filesystem::exists(opt.input)) {
        std::ifstream in(opt.input, std::ios::binary);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        table = piclass::table_from_json(buffer.str());
        if (!opt.pi_text.empty() && !(piclass::PrimeSet::parse(opt.pi_text) == table.pi))
            throw piclass::Error("--pi disagrees with the table's own prime set");
    } else {
        if (opt.pi_text.empty())
            throw piclass::Error("decide on a group spec requires --pi");
        piclass::PermGroup group = piclass::named_group(opt.input, resolve_cap(opt.cap));
        table = piclass::frequency_table(group, piclass::PrimeSet::parse(opt.pi_text));
    }
    bool verdict = piclass::decide_hypercentral_hall_pi(table);
    std::cout << (verdict ? "true" : "false") << "\n";
    return verdict ? kExitTrue : kExitFalseOrFailed;
}

int cmd_verify(const Options& opt) {
    piclass::PermGroup group = piclass::named_group(opt.group_spec, resolve_cap(opt.cap));
    std::vector<piclass::PrimeSet> pis;
    if (opt.pi_list.empty()) {
        pis = piclass::pi_sets_for_group(group, piclass::PiPolicy::all_subsets());
    } else {
        for (const std::string& text : opt.pi_list) pis.push_back(piclass::PrimeSet::parse(text));
    }
    std::vector<piclass::Verdict> verdicts = piclass::verify_group(group, pis);

    std::string rendered;
    if (opt.format == "json") {
        nlohmann::json list = nlohmann::json::array();
        for (const piclass::Verdict& v : verdicts) list.push_back(verdict_to_json(v));
        rendered = nlohmann::json{{"schema", "piclass/1"},
                                  {"group", group.label()},
                                  {"order", group.order()},
                                  {"verdicts", list}}
                       .dump(2) +
                   "\n";
    } else {
        rendered = verdicts_table(verdicts);
    }
    std::cout << rendered;
    if (!opt.out_path.empty()) write_file(opt.out_path, rendered);

    for (const piclass::Verdict& v : verdicts) {
        if (!v.passed) return kExitFalseOrFailed;
    }
    return kExitTrue;
}

int cmd_corpus(const Options& opt) {
    piclass::Corpus corpus = piclass::load_corpus_file(opt.corpus_path);
    if (opt.cap.has_value()) {
        corpus.cap = *opt.cap;  // explicit flag beats the file header
    } else if (!corpus.cap_from_header) {
        corpus.cap = env_default_cap();
    }

    piclass::PiPolicy policy = piclass::PiPolicy::all_subsets();
    if (!opt.pi_list.empty()) {
        std::vector<piclass::PrimeSet> listed;
        for (const std::string& text : opt.pi_list) listed.push_back(piclass::PrimeSet::parse(text));
        policy = piclass::PiPolicy::list(std::move(listed));
    }

    piclass::CorpusReport report = piclass::run_corpus(corpus, policy);
    std::cout << (opt.format == "json" ? piclass::report_to_json(report) + "\n"
                                       : piclass::report_to_table(report));
    if (!opt.out_path.empty()) {
        write_file(opt.out_path + ".json", piclass::report_to_json(report) + "\n");
        write_file(opt.out_path + ".txt", piclass::report_to_table(report));
    }
    return report.all_passed() ? kExitTrue : kExitFalseOrFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pi-class-size frequency tables and hypercentral Hall subgroup decisions"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* freq = app.add_subcommand("freq", "compute the frequency table of a group");
    freq->add_option("group", opt.group_spec, "group spec, e.g. \"C(3)xD(10)\"")->required();
    freq->add_option("--pi", opt.pi_text, "prime set, e.g. \"{2,3}\", \"{2}'\", \"*\"")->required();
    freq->add_option("--cap", opt.cap, "enumeration cap (default 20000, or PICLASS_CAP)");
    freq->add_option("--format", opt.format)->check(CLI::IsMember({"table", "json"}));
    freq->add_option("--out", opt.out_path, "also write the output to this file");

    CLI::App* decide =
        app.add_subcommand("decide", "decide the hypercentral Hall pi-subgroup from a group "
                                     "spec or a frequency-table JSON file");
    decide->add_option("input", opt.input, "group spec, or path to a table JSON file")->required();
    decide->add_option("--pi", opt.pi_text, "prime set (required for group specs)");
    decide->add_option("--cap", opt.cap, "enumeration cap");

    CLI::App* verify = app.add_subcommand("verify", "run every check on a single group");
    verify->add_option("group", opt.group_spec, "group spec")->required();
    verify->add_option("--pi", opt.pi_list, "prime set, repeatable; default: all subsets");
    verify->add_option("--cap", opt.cap, "enumeration cap");
    verify->add_option("--format", opt.format)->check(CLI::IsMember({"table", "json"}));
    verify->add_option("--out", opt.out_path, "also write the output to this file");

    CLI::App* corpus = app.add_subcommand("corpus", "verify every group in a corpus file");
    corpus->add_option("path", opt.corpus_path, "corpus file")->required();
    corpus->add_option("--pi", opt.pi_list, "prime set, repeatable; default: all subsets");
    corpus->add_option("--cap", opt.cap, "enumeration cap (beats the file's cap= header)");
    corpus->add_option("--format", opt.format)->check(CLI::IsMember({"table", "json"}));
    corpus->add_option("--out", opt.out_path, "write <out>.json and <out>.txt reports");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (freq->parsed()) return cmd_freq(opt);
        if (decide->parsed()) return cmd_decide(opt);
        if (verify->parsed()) return cmd_verify(opt);
        return cmd_corpus(opt);
    } catch (const piclass::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}
