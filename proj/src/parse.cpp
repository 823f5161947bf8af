#include "piclass/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "piclass/errors.hpp"

namespace piclass {

namespace {

std::string trim(std::string_view s) {
    std::size_t begin = 0, end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return std::string(s.substr(begin, end - begin));
}

class SpecParser {
public:
    SpecParser(std::string_view text, long long cap) : text_(text), cap_(cap) {}

    PermGroup parse() {
        PermGroup group = parse_atom();
        skip_ws();
        while (!at_end() && peek() == 'x') {
            ++pos_;
            PermGroup rhs = parse_atom();
            group = direct_product(group, rhs);
            skip_ws();
        }
        if (!at_end()) throw ParseError("trailing input after group expression", pos_);
        return group;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (at_end() || peek() != c) throw ParseError(std::string("expected ") + what, pos_);
        ++pos_;
    }

    long long parse_number() {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a number", pos_);
        long long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > 1000000000) throw ParseError("number out of range", pos_);
            ++pos_;
        }
        return value;
    }

    // Name tokens never contain 'x'; it is reserved as the product operator.
    std::string read_name() {
        skip_ws();
        std::string name;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek())) && peek() != 'x') {
            name += peek();
            ++pos_;
        }
        if (name.empty()) throw ParseError("expected a group name", pos_);
        return name;
    }

    PermGroup parse_atom() {
        std::string name = read_name();
        if (name == "perm") return parse_raw_generators();
        if (name == "Q8") return quaternion_group(cap_);
        if (name == "SL") {
            expect('(', "'('");
            long long p = parse_number();
            expect(',', "','");
            long long q = parse_number();
            expect(')', "')'");
            if (p != 2 || q != 3) throw ParseError("only SL(2,3) is supported", pos_);
            return special_linear_2_3(cap_);
        }
        if (name == "C" || name == "D" || name == "S" || name == "A") {
            expect('(', "'('");
            long long n = parse_number();
            expect(')', "')'");
            std::size_t here = pos_;
            try {
                if (name == "C") return cyclic_group(n, cap_);
                if (name == "D") return dihedral_group(n, cap_);
                if (name == "S") return symmetric_group(static_cast<int>(n), cap_);
                return alternating_group(static_cast<int>(n), cap_);
            } catch (const Error& e) {
                throw ParseError(e.what(), here);
            }
        }
        throw UnknownName(name);
    }

    // perm[degree]((cycle)(cycle); (cycle); ...)
    PermGroup parse_raw_generators() {
        expect('[', "'['");
        long long degree = parse_number();
        if (degree < 1 || degree > 100000) throw ParseError("degree out of range", pos_);
        expect(']', "']'");
        expect('(', "'('");

        std::vector<Permutation> generators;
        while (true) {
            generators.push_back(parse_generator(static_cast<int>(degree)));
            skip_ws();
            if (!at_end() && peek() == ';') {
                ++pos_;
                continue;
            }
            break;
        }
        expect(')', "')'");
        return PermGroup("perm[" + std::to_string(degree) + "](...)", static_cast<int>(degree),
                         std::move(generators), cap_);
    }

    Permutation parse_generator(int degree) {
        std::vector<int> images(degree);
        for (int i = 0; i < degree; ++i) images[i] = i;
        std::vector<bool> used(degree, false);

        skip_ws();
        if (at_end() || peek() != '(')
            throw ParseError("expected a cycle (use '()' for the identity)", pos_);
        while (!at_end() && peek() == '(') {
            ++pos_;
            std::vector<int> cycle;
            skip_ws();
            while (!at_end() && peek() != ')') {
                long long point = parse_number();
                if (point >= degree)
                    throw ParseError("point " + std::to_string(point) + " is out of range", pos_);
                if (used[point])
                    throw ParseError("point " + std::to_string(point) + " repeated in generator",
                                     pos_);
                used[point] = true;
                cycle.push_back(static_cast<int>(point));
                skip_ws();
                if (!at_end() && peek() == ',') {
                    ++pos_;
                    skip_ws();
                }
            }
            expect(')', "')'");
            for (std::size_t i = 0; i + 1 < cycle.size(); ++i) images[cycle[i]] = cycle[i + 1];
            if (cycle.size() > 1) images[cycle.back()] = cycle.front();
            skip_ws();
        }
        return Permutation(std::move(images));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    long long cap_;
};

}  // namespace

PermGroup named_group(std::string_view spec, long long cap) {
    SpecParser parser(spec, cap);
    PermGroup group = parser.parse();
    group.relabel(trim(spec));
    return group;
}

Corpus parse_corpus(std::string_view text) {
    Corpus corpus;
    corpus.raw_text = std::string(text);

    std::istringstream in(corpus.raw_text);
    std::string raw_line;
    int line_number = 0;
    while (std::getline(in, raw_line)) {
        ++line_number;
        std::string line = raw_line.substr(0, raw_line.find('#'));
        line = trim(line);
        if (line.empty()) continue;
        if (line.rfind("cap=", 0) == 0) {
            std::string value = trim(line.substr(4));
            if (value.empty() ||
                value.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("malformed cap header on line " + std::to_string(line_number), 0);
            corpus.cap = std::stoll(value);
            corpus.cap_from_header = true;
            continue;
        }
        corpus.entries.push_back({line_number, line});
    }
    return corpus;
}

Corpus load_corpus_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open corpus file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_corpus(buffer.str());
}

}  // namespace piclass
