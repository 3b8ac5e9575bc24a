#include "netindex/indices.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace netindex {

namespace {

void require_no_isolated_vertex(const Graph& g, const char* index) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.degree(static_cast<VertexId>(v)) == 0)
            throw std::domain_error(std::string(index) + " undefined: vertex " +
                                    std::to_string(v) + " is isolated");
}

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", value);
    return buf;
}

}  // namespace

double log10_of(const BigInt& value) {
    if (value <= 0)
        throw std::domain_error("log10 of non-positive integer " + value.str());
    // Doubles carry values up to ~1e308 exactly enough; beyond that, split the
    // decimal string into a 17-digit mantissa and a power of ten.
    const std::string digits = value.str();
    if (digits.size() <= 300) return std::log10(value.convert_to<double>());
    const std::size_t head_len = 17;
    const double head = std::stod(digits.substr(0, head_len));
    return std::log10(head) + static_cast<double>(digits.size() - head_len);
}

double IndexValue::log10() const {
    if (is_factored()) {
        if (factored().is_one()) return 0.0;
        return factored().log10();
    }
    if (is_integer()) return log10_of(integer());
    const double v = real();
    if (!(v > 0.0)) throw std::domain_error("log10 of non-positive value " + format_real(v));
    return std::log10(v);
}

std::string IndexValue::to_string() const {
    if (is_factored()) return factored().to_string();
    if (is_integer()) return integer().str();
    return format_real(real());
}

std::int64_t first_zagreb(const Graph& g) {
    std::int64_t total = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const std::int64_t d = g.degree(static_cast<VertexId>(v));
        total += d * d;
    }
    return total;
}

std::int64_t second_zagreb(const Graph& g) {
    std::int64_t total = 0;
    for (const auto& [u, v] : g.edges())
        total += static_cast<std::int64_t>(g.degree(u)) * g.degree(v);
    return total;
}

FactoredInteger narumi_katayama(const Graph& g) {
    require_no_isolated_vertex(g, "Narumi-Katayama index");
    FactoredInteger product;
    for (const auto& [degree, count] : degree_spectrum(g))
        product *= FactoredInteger::from_integer(degree).pow(count);
    return product;
}

FactoredInteger mult_zagreb_1(const Graph& g, std::int64_t c) {
    if (c < 0)
        throw std::domain_error("first multiplicative Zagreb index needs c >= 0, got c = " +
                                std::to_string(c));
    require_no_isolated_vertex(g, "first multiplicative Zagreb index");
    // Accumulated vertex by vertex, straight from the definition; keeping this
    // route separate from narumi_katayama().pow(c) is what gives the
    // cross-check between the two any teeth.
    FactoredInteger product;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        product *= FactoredInteger::from_integer(g.degree(static_cast<VertexId>(v))).pow(c);
    return product;
}

FactoredInteger mult_zagreb_2(const Graph& g) {
    FactoredInteger product;
    for (const auto& [pair, count] : degree_pair_spectrum(g))
        product *= FactoredInteger::from_integer(static_cast<std::int64_t>(pair.first) *
                                                 pair.second)
                       .pow(count);
    return product;
}

FactoredInteger mult_zagreb_1_star(const Graph& g) {
    FactoredInteger product;
    for (const auto& [pair, count] : degree_pair_spectrum(g))
        product *= FactoredInteger::from_integer(pair.first + pair.second).pow(count);
    return product;
}

bool chi_alpha_is_exact(double alpha) {
    return alpha >= 0.0 && alpha == std::floor(alpha) && alpha <= 1e6;
}

IndexValue sum_connectivity(const Graph& g, double alpha) {
    if (chi_alpha_is_exact(alpha)) {
        const auto a = static_cast<unsigned int>(alpha);
        BigInt total = 0;
        for (const auto& [pair, count] : degree_pair_spectrum(g))
            total += count * boost::multiprecision::pow(BigInt(pair.first + pair.second), a);
        return IndexValue(total);
    }
    double total = 0.0;
    for (const auto& [pair, count] : degree_pair_spectrum(g))
        total += static_cast<double>(count) *
                 std::pow(static_cast<double>(pair.first + pair.second), alpha);
    return IndexValue(total);
}

}  // namespace netindex
