#pragma once

#include "netindex/factored.hpp"
#include "netindex/graph.hpp"

#include <cstdint>
#include <string>
#include <variant>

namespace netindex {

double log10_of(const BigInt& value);

/// Result of an index computation. Multiplicative indices stay factored,
/// integral sums stay exact big integers, and only non-integral exponents
/// fall back to floating point.
class IndexValue {
public:
    explicit IndexValue(FactoredInteger value) : value_(std::move(value)) {}
    explicit IndexValue(BigInt value) : value_(std::move(value)) {}
    explicit IndexValue(double value) : value_(value) {}

    bool is_factored() const { return std::holds_alternative<FactoredInteger>(value_); }
    bool is_integer() const { return std::holds_alternative<BigInt>(value_); }
    bool is_real() const { return std::holds_alternative<double>(value_); }

    const FactoredInteger& factored() const { return std::get<FactoredInteger>(value_); }
    const BigInt& integer() const { return std::get<BigInt>(value_); }
    double real() const { return std::get<double>(value_); }

    /// log10 of the value; requires it to be strictly positive.
    double log10() const;

    /// Factored values render factored, integers as decimal, reals as %.15g.
    std::string to_string() const;

    bool operator==(const IndexValue&) const = default;

private:
    std::variant<FactoredInteger, BigInt, double> value_;
};

/// M1(G) = sum_v d(v)^2.
std::int64_t first_zagreb(const Graph& g);

/// M2(G) = sum_{uv in E} d(u) d(v).
std::int64_t second_zagreb(const Graph& g);

/// NK(G) = prod_v d(v). Undefined when some vertex is isolated.
FactoredInteger narumi_katayama(const Graph& g);

/// Pi_{1,c}(G) = prod_v d(v)^c for integer c >= 0. Undefined when some
/// vertex is isolated.
FactoredInteger mult_zagreb_1(const Graph& g, std::int64_t c);

/// Pi_2(G) = prod_{uv in E} d(u) d(v), accumulated edge by edge.
FactoredInteger mult_zagreb_2(const Graph& g);

/// Pi_1^*(G) = prod_{uv in E} (d(u) + d(v)); an empty edge set gives 1.
FactoredInteger mult_zagreb_1_star(const Graph& g);

/// True when sum-connectivity values are computed exactly (alpha a
/// non-negative integer of reasonable size), false for the floating-point
/// fallback.
bool chi_alpha_is_exact(double alpha);

/// chi_alpha(G) = sum_{uv in E} (d(u) + d(v))^alpha. Exact (integer) for
/// integral alpha >= 0, floating point otherwise.
IndexValue sum_connectivity(const Graph& g, double alpha);

}  // namespace netindex
