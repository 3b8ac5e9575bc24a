#pragma once

#include "netindex/factored.hpp"
#include "netindex/family.hpp"
#include "netindex/graph.hpp"
#include "netindex/indices.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace netindex {

/// Integer-coefficient polynomial in the dimension n; coeffs[i] multiplies n^i.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<std::int64_t> coeffs);

    std::int64_t operator()(std::int64_t n) const;

    /// Highest power first, e.g. "9n^2-33n+30" or "12".
    std::string to_string(std::string_view var = "n") const;

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<std::int64_t> coeffs_;
};

struct VertexRow {
    int degree;
    Polynomial count;
};

struct EdgeRow {
    int degree_u;  // degree_u <= degree_v
    int degree_v;
    Polynomial count;
};

/// A family's vertex and edge partitions as row polynomials in n, with the
/// n range each table covers. CS_n's edge partition is piecewise: at n = 1
/// a single fixed row replaces the general rows.
struct PartitionTable {
    Family family;
    int vertex_min_n;
    int edge_min_n;
    std::vector<VertexRow> vertex_rows;
    std::vector<EdgeRow> edge_rows;
    std::vector<EdgeRow> edge_rows_n1;  // only CS has a special case
};

const PartitionTable& partition_table(Family family);

Polynomial vertex_count_polynomial(Family family);
Polynomial edge_count_polynomial(Family family);

/// Vertex partition rows evaluated at n, zero-count rows dropped.
/// Throws std::out_of_range below the table's n range.
DegreeSpectrum table_degree_spectrum(Family family, int n);

/// Edge partition rows evaluated at n, zero-count rows kept as written.
/// Throws std::out_of_range below the table's n range.
DegreePairSpectrum table_edge_spectrum(Family family, int n);

/// One prime power of a product formula. The exponent polynomial is
/// evaluated at n; for the first multiplicative Zagreb index it is then
/// scaled by c.
struct PrimePower {
    std::int64_t prime;
    Polynomial exponent;
};

struct ProductFormula {
    int min_n = 1;
    std::vector<PrimePower> factors;
    /// CS_n's modified index is printed as a plain integer at n = 1.
    std::optional<std::int64_t> literal_n1;
};

/// One term of a sum-connectivity closed form:
///   coeff(n) * prod_j base_j ^ (alpha_scale_j * alpha + offset_j).
struct ChiBase {
    std::int64_t base;
    std::int64_t alpha_scale;
    std::int64_t offset;
};

struct ChiTerm {
    Polynomial coeff;
    std::vector<ChiBase> bases;
};

struct ChiFormula {
    int min_n = 1;
    std::vector<ChiTerm> terms;
    std::vector<ChiTerm> terms_n1;  // only CS has a special case
    bool has_n1_case = false;
};

const ProductFormula& pi1c_formula(Family family);
const ProductFormula& pi2_formula(Family family);
const ProductFormula& pi1star_formula(Family family);
const ChiFormula& chi_formula(Family family);

/// The catalog's closed forms, transcribed as printed and evaluated exactly.
/// Each throws std::out_of_range below the formula's n range.
FactoredInteger theorem_pi1c(Family family, int n, std::int64_t c);
FactoredInteger theorem_pi2(Family family, int n);
FactoredInteger theorem_pi1star(Family family, int n);
IndexValue theorem_chi(Family family, int n, double alpha);

/// Dispatcher over the four cataloged indices; M1/M2/NK have no catalog
/// entry and raise std::invalid_argument.
IndexValue theorem_value(Family family, IndexKind index, int n, std::int64_t c, double alpha);

/// Symbolic rendering of a cataloged expression, for report output.
std::string theorem_formula_string(Family family, IndexKind index);

/// Symbolic rendering of a partition table ("3: 6n^2+6n; 6: 9n^2-3n").
std::string table_formula_string(Family family, bool edge_table);

}  // namespace netindex
