#include "netindex/indices.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace netindex;
using testsupport::throws_with;

namespace {

FactoredInteger pp(std::int64_t prime, std::int64_t exponent) {
    return FactoredInteger::from_prime_power(prime, BigInt(exponent));
}

Graph k4() {
    return Graph::from_edges(
        4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Graph c6() {
    return Graph::from_edges(
        6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}

Graph p3() { return Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("index values on the complete graph K4") {
    const Graph g = k4();
    CHECK(first_zagreb(g) == 36);
    CHECK(second_zagreb(g) == 54);
    CHECK(narumi_katayama(g) == pp(3, 4));
    CHECK(narumi_katayama(g).expand() == 81);
    CHECK(mult_zagreb_2(g) == pp(3, 12));
    CHECK(mult_zagreb_2(g).expand() == 531441);
    CHECK(mult_zagreb_1_star(g).expand() == 46656);
    CHECK(sum_connectivity(g, 0).integer() == 6);
    CHECK(sum_connectivity(g, 1).integer() == 36);
    CHECK(sum_connectivity(g, 2).integer() == 216);
}

TEST_CASE("index values on the 6-cycle") {
    const Graph g = c6();
    CHECK(first_zagreb(g) == 24);
    CHECK(second_zagreb(g) == 24);
    CHECK(narumi_katayama(g) == pp(2, 6));
    CHECK(mult_zagreb_2(g) == pp(2, 12));
    CHECK(mult_zagreb_1_star(g) == pp(2, 12));
    CHECK(sum_connectivity(g, 2).integer() == 96);
}

TEST_CASE("index values on a 3-vertex path") {
    const Graph g = p3();
    CHECK(first_zagreb(g) == 6);
    CHECK(second_zagreb(g) == 4);
    CHECK(narumi_katayama(g) == pp(2, 1));
    CHECK(mult_zagreb_2(g) == pp(2, 2));
    CHECK(mult_zagreb_1_star(g) == pp(3, 2));
    CHECK(sum_connectivity(g, 2).integer() == 18);
    CHECK(sum_connectivity(g, -0.5).real() ==
          doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("first multiplicative Zagreb index handles the exponent parameter") {
    const Graph g = k4();
    CHECK(mult_zagreb_1(g, 0).is_one());
    CHECK(mult_zagreb_1(g, 1) == narumi_katayama(g));
    CHECK(mult_zagreb_1(g, 2) == pp(3, 8));
    CHECK_THROWS_AS(mult_zagreb_1(g, -1), std::domain_error);
}

TEST_CASE("multiplicative indices reject isolated vertices, additive ones cope") {
    const Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1}});
    CHECK(throws_with<std::domain_error>([&] { narumi_katayama(g); }, "isolated"));
    CHECK(throws_with<std::domain_error>([&] { mult_zagreb_1(g, 2); }, "isolated"));
    CHECK(mult_zagreb_2(Graph::from_edges(2, std::vector<Edge>{})).is_one());
    CHECK(mult_zagreb_1_star(Graph::from_edges(2, std::vector<Edge>{})).is_one());
    CHECK(sum_connectivity(Graph::from_edges(2, std::vector<Edge>{}), 2).integer() == 0);
}

TEST_CASE("sum-connectivity evaluation mode follows alpha") {
    CHECK(chi_alpha_is_exact(0.0));
    CHECK(chi_alpha_is_exact(3.0));
    CHECK_FALSE(chi_alpha_is_exact(0.5));
    CHECK_FALSE(chi_alpha_is_exact(-1.0));
    const Graph g = k4();
    CHECK(sum_connectivity(g, 2).is_integer());
    CHECK(sum_connectivity(g, 0.5).is_real());
    // chi_{-1}(K4) = 6 * (1/6) = 1 exactly.
    CHECK(sum_connectivity(g, -1).real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("IndexValue rendering and log10") {
    const IndexValue factored(pp(2, 60));
    CHECK(factored.to_string() == "2^60");
    CHECK(factored.log10() == doctest::Approx(60.0 * std::log10(2.0)).epsilon(1e-12));

    const IndexValue integer(BigInt(1000));
    CHECK(integer.to_string() == "1000");
    CHECK(integer.log10() == doctest::Approx(3.0).epsilon(1e-12));

    const IndexValue real(2.5);
    CHECK(real.to_string() == "2.5");
    CHECK(real.log10() == doctest::Approx(std::log10(2.5)).epsilon(1e-12));

    CHECK(IndexValue(FactoredInteger::one()).log10() == 0.0);
    CHECK_THROWS_AS(IndexValue(BigInt(0)).log10(), std::domain_error);
    CHECK_THROWS_AS(IndexValue(-1.5).log10(), std::domain_error);
}

TEST_CASE("log10 of big integers uses the decimal-string path") {
    const BigInt big = boost::multiprecision::pow(BigInt(10), 400);
    CHECK(log10_of(big) == doctest::Approx(400.0).epsilon(1e-12));
    CHECK(log10_of(big * 3) == doctest::Approx(400.0 + std::log10(3.0)).epsilon(1e-12));
    CHECK(log10_of(BigInt(1)) == doctest::Approx(0.0));
    CHECK_THROWS_AS(log10_of(BigInt(-2)), std::domain_error);
}

TEST_CASE("index identities hold on random graphs") {
    std::mt19937 rng(testsupport::kSeed);
    for (int round = 0; round < 25; ++round) {
        const Graph g = testsupport::random_connected_graph(rng);

        // M1 through the degree spectrum.
        std::int64_t m1 = 0;
        for (const auto& [degree, count] : degree_spectrum(g))
            m1 += static_cast<std::int64_t>(degree) * degree * count;
        CHECK(m1 == first_zagreb(g));

        // M2 through the pair spectrum.
        std::int64_t m2 = 0;
        for (const auto& [pair, count] : degree_pair_spectrum(g))
            m2 += static_cast<std::int64_t>(pair.first) * pair.second * count;
        CHECK(m2 == second_zagreb(g));

        CHECK(sum_connectivity(g, 0).integer() == static_cast<std::int64_t>(g.edge_count()));
        CHECK(sum_connectivity(g, 1).integer() == first_zagreb(g));
    }
}
