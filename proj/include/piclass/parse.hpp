#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "piclass/group.hpp"

namespace piclass {

/// Builds a group from a one-line spec. Grammar:
///
///   expr := atom ('x' atom)*                      products, left-associative
///   atom := C(n) | D(k) | S(n) | A(n) | Q8 | SL(2,3)
///         | perm[degree]((cycles); (cycles); ...)  raw generators, 0-based
///
/// Examples: "S(3)", "C(3)xD(10)", "perm[5]((0 1 2 3 4); (1 4)(2 3))".
/// Throws ParseError, UnknownName; enumeration later obeys `cap`.
PermGroup named_group(std::string_view spec, long long cap = kDefaultEnumerationCap);

struct CorpusEntry {
    int line = 0;  // 1-based line number in the corpus file
    std::string spec;
};

/// A corpus file: one group spec per line, '#' comments, optional header
/// line `cap=N` overriding the enumeration cap for the whole file.
struct Corpus {
    std::vector<CorpusEntry> entries;
    long long cap = kDefaultEnumerationCap;
    bool cap_from_header = false;
    std::string raw_text;  // exact file bytes, digested into reports
};

Corpus parse_corpus(std::string_view text);
Corpus load_corpus_file(const std::string& path);

}  // namespace piclass
