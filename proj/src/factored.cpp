#include "netindex/factored.hpp"

#include <cmath>
#include <stdexcept>

namespace netindex {

namespace {

// Expansion guard: pow(2, kMaxExpandExponent) is ~300k digits, already far
// beyond anything callers should print; bigger requests are almost certainly
// bugs and would eat memory for nothing.
constexpr std::int64_t kMaxExpandExponent = 1'000'000;

}  // namespace

bool is_prime(std::int64_t value) {
    if (value < 2) return false;
    if (value % 2 == 0) return value == 2;
    for (std::int64_t d = 3; d <= value / d; d += 2)
        if (value % d == 0) return false;
    return true;
}

FactoredInteger FactoredInteger::from_integer(std::int64_t value) {
    if (value < 1)
        throw std::domain_error("cannot factor non-positive value " + std::to_string(value));
    FactoredInteger result;
    std::int64_t rest = value;
    for (std::int64_t p = 2; p <= rest / p; p += (p == 2 ? 1 : 2)) {
        while (rest % p == 0) {
            ++result.factors_[p];
            rest /= p;
        }
    }
    if (rest > 1) ++result.factors_[rest];
    return result;
}

FactoredInteger FactoredInteger::from_prime_power(std::int64_t prime, const BigInt& exponent) {
    if (!is_prime(prime))
        throw std::invalid_argument("base " + std::to_string(prime) + " is not prime");
    if (exponent < 0)
        throw std::domain_error("negative exponent " + exponent.str() + " for prime " +
                                std::to_string(prime));
    FactoredInteger result;
    if (exponent > 0) result.factors_[prime] = exponent;
    return result;
}

FactoredInteger& FactoredInteger::operator*=(const FactoredInteger& rhs) {
    for (const auto& [prime, exponent] : rhs.factors_) {
        auto it = factors_.try_emplace(prime, 0).first;
        it->second += exponent;
        if (it->second == 0) factors_.erase(it);
    }
    return *this;
}

FactoredInteger FactoredInteger::pow(std::int64_t k) const {
    if (k < 0)
        throw std::domain_error("negative power " + std::to_string(k) +
                                " of a factored integer");
    FactoredInteger result;
    if (k == 0) return result;
    for (const auto& [prime, exponent] : factors_) result.factors_[prime] = exponent * k;
    return result;
}

double FactoredInteger::log10() const {
    double total = 0.0;
    for (const auto& [prime, exponent] : factors_)
        total += exponent.convert_to<double>() * std::log10(static_cast<double>(prime));
    return total;
}

BigInt FactoredInteger::expand() const {
    BigInt result = 1;
    for (const auto& [prime, exponent] : factors_) {
        if (exponent > kMaxExpandExponent)
            throw std::overflow_error("refusing to expand " + std::to_string(prime) + "^" +
                                      exponent.str());
        result *= boost::multiprecision::pow(BigInt(prime),
                                             exponent.convert_to<unsigned int>());
    }
    return result;
}

std::string FactoredInteger::to_decimal(std::size_t max_digits) const {
    // digit count is floor(log10) + 1; the 0.5 slack absorbs rounding at the
    // boundary, where the expanded string settles it exactly.
    if (log10() > static_cast<double>(max_digits) + 0.5) return "";
    const std::string digits = expand().str();
    return digits.size() <= max_digits ? digits : "";
}

std::string FactoredInteger::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [prime, exponent] : factors_) {
        if (!out.empty()) out += "*";
        out += std::to_string(prime);
        if (exponent != 1) out += "^" + exponent.str();
    }
    return out;
}

}  // namespace netindex
