#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace piclass {

/// Base class for all recoverable errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input: group specs, prime sets, corpus files, table JSON.
struct ParseError : Error {
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          position(position) {}

    std::size_t position;
};

/// A group-spec name that scans fine but names no known constructor.
struct UnknownName : Error {
    explicit UnknownName(const std::string& name)
        : Error("unknown group name: " + name), name(name) {}

    std::string name;
};

/// Closure enumeration grew past the configured cap.
struct CapExceeded : Error {
    explicit CapExceeded(long long cap)
        : Error("group enumeration exceeded the cap of " + std::to_string(cap) + " elements"),
          cap(cap) {}

    long long cap;
};

/// A per-prime query was made for a prime outside the table's prime set.
/// The quantities involved are meaningless there, so this is a hard error.
struct QNotInPi : Error {
    explicit QNotInPi(long long q)
        : Error("prime " + std::to_string(q) + " is not in the table's prime set"), q(q) {}

    long long q;
};

/// A per-prime query was made for a prime not dividing the group order.
struct QNotDividing : Error {
    explicit QNotDividing(long long q)
        : Error("prime " + std::to_string(q) + " does not divide the group order"), q(q) {}

    long long q;
};

/// Solution counting for x^n = 1 requires n to divide the group order.
struct NotADivisor : Error {
    NotADivisor(long long n, long long order)
        : Error(std::to_string(n) + " does not divide the group order " + std::to_string(order)),
          n(n) {}

    long long n;
};

/// An element set handed in as a subgroup failed the closure check.
struct NotASubgroup : Error {
    NotASubgroup() : Error("element set is not closed under multiplication") {}
};

}  // namespace piclass
