#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

namespace netindex {

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(std::int64_t value);

/// Exact positive integer kept as a prime -> exponent map; the empty map is 1.
/// Values like 3^64800 stay cheap to multiply, raise to powers and compare
/// without ever being expanded into digit strings.
class FactoredInteger {
public:
    FactoredInteger() = default;  // the value 1

    static FactoredInteger one() { return {}; }

    /// Factorizes by trial division; value must be >= 1.
    static FactoredInteger from_integer(std::int64_t value);

    /// prime^exponent; prime must actually be prime and exponent >= 0.
    static FactoredInteger from_prime_power(std::int64_t prime, const BigInt& exponent);

    bool is_one() const { return factors_.empty(); }

    /// Prime -> exponent, primes ascending, exponents strictly positive.
    const std::map<std::int64_t, BigInt>& factors() const { return factors_; }

    FactoredInteger& operator*=(const FactoredInteger& rhs);
    friend FactoredInteger operator*(FactoredInteger lhs, const FactoredInteger& rhs) {
        lhs *= rhs;
        return lhs;
    }

    /// Exponent-wise power; k must be >= 0 and k = 0 gives 1.
    FactoredInteger pow(std::int64_t k) const;

    /// sum of exponent * log10(prime); relative error well below 1e-9.
    double log10() const;

    /// Expanded integer value; refuses exponents too large to materialize.
    BigInt expand() const;

    /// Decimal string when the value has at most max_digits digits, else "".
    std::string to_decimal(std::size_t max_digits) const;

    /// Canonical factored rendering: "1", "2^60", "2*3^7", "2^6*3^6".
    std::string to_string() const;

    bool operator==(const FactoredInteger&) const = default;

private:
    std::map<std::int64_t, BigInt> factors_;
};

}  // namespace netindex
