#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace piclass {

bool is_prime(long long n);

/// Prime factorization of n >= 1 by trial division (empty map for n = 1).
/// Throws Error for n < 1.
std::map<long long, long long> factorize(long long n);

/// A set of primes, stored either as a finite set or as the complement of
/// a finite set. The cofinite kind keeps p'-style sets representable
/// without enumerating primes; the empty cofinite set is "all primes".
///
/// Textual syntax: `{2,3}` finite, `{2}'` cofinite, `*` all primes.
class PrimeSet {
public:
    enum class Kind { Finite, Cofinite };

    static PrimeSet finite(std::vector<long long> primes);
    static PrimeSet cofinite(std::vector<long long> excluded_primes);
    static PrimeSet all() { return cofinite({}); }
    static PrimeSet single(long long p) { return finite({p}); }

    /// Parses the textual syntax above. Throws ParseError.
    static PrimeSet parse(std::string_view text);

    Kind kind() const { return kind_; }

    /// Finite: the set itself. Cofinite: the excluded primes.
    const std::vector<long long>& members() const { return members_; }

    bool contains(long long p) const;
    PrimeSet complement() const;

    std::string to_string() const;

    bool operator==(const PrimeSet&) const = default;

private:
    PrimeSet(Kind kind, std::vector<long long> members);

    Kind kind_;
    std::vector<long long> members_;  // sorted, distinct primes
};

/// The P-part of n: the largest divisor of n all of whose prime factors
/// lie in P. Always divides n; n / part(n, P) is coprime to every p in P.
long long part(long long n, const PrimeSet& p);

/// True iff n equals its own P-part, i.e. part(n, complement of P) = 1.
bool is_p_number(long long n, const PrimeSet& p);

}  // namespace piclass
