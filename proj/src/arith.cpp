#include "piclass/arith.hpp"

#include <algorithm>
#include <cctype>

#include "piclass/errors.hpp"

namespace piclass {

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long long d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::map<long long, long long> factorize(long long n) {
    if (n < 1) throw Error("factorize: argument must be a positive integer, got " + std::to_string(n));
    std::map<long long, long long> factors;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++factors[p];
            n /= p;
        }
    }
    if (n > 1) ++factors[n];
    return factors;
}

PrimeSet::PrimeSet(Kind kind, std::vector<long long> members)
    : kind_(kind), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (long long p : members_) {
        if (!is_prime(p)) throw Error("PrimeSet: " + std::to_string(p) + " is not prime");
    }
}

PrimeSet PrimeSet::finite(std::vector<long long> primes) {
    return PrimeSet(Kind::Finite, std::move(primes));
}

PrimeSet PrimeSet::cofinite(std::vector<long long> excluded_primes) {
    return PrimeSet(Kind::Cofinite, std::move(excluded_primes));
}

bool PrimeSet::contains(long long p) const {
    bool listed = std::binary_search(members_.begin(), members_.end(), p);
    return kind_ == Kind::Finite ? listed : !listed;
}

PrimeSet PrimeSet::complement() const {
    return PrimeSet(kind_ == Kind::Finite ? Kind::Cofinite : Kind::Finite, members_);
}

std::string PrimeSet::to_string() const {
    if (kind_ == Kind::Cofinite && members_.empty()) return "*";
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(members_[i]);
    }
    out += '}';
    if (kind_ == Kind::Cofinite) out += '\'';
    return out;
}

PrimeSet PrimeSet::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };

    skip_ws();
    if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
        if (pos != text.size()) throw ParseError("trailing input after '*'", pos);
        return all();
    }
    if (pos >= text.size() || text[pos] != '{') throw ParseError("expected '{' or '*'", pos);
    ++pos;

    std::vector<long long> primes;
    skip_ws();
    if (pos < text.size() && text[pos] != '}') {
        while (true) {
            skip_ws();
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("expected a prime number", pos);
            long long value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + (text[pos] - '0');
                ++pos;
            }
            if (!is_prime(value))
                throw ParseError(std::to_string(value) + " is not prime", pos);
            primes.push_back(value);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
    }
    if (pos >= text.size() || text[pos] != '}') throw ParseError("expected '}'", pos);
    ++pos;

    bool cofinite_marker = pos < text.size() && text[pos] == '\'';
    if (cofinite_marker) ++pos;
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing input after prime set", pos);

    return cofinite_marker ? cofinite(std::move(primes)) : finite(std::move(primes));
}

long long part(long long n, const PrimeSet& p) {
    if (n < 1) throw Error("part: argument must be a positive integer, got " + std::to_string(n));
    long long result = 1;
    for (const auto& [prime, exponent] : factorize(n)) {
        if (!p.contains(prime)) continue;
        for (long long i = 0; i < exponent; ++i) result *= prime;
    }
    return result;
}

bool is_p_number(long long n, const PrimeSet& p) {
    return part(n, p.complement()) == 1;
}

}  // namespace piclass
