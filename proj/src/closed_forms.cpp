#include "netindex/closed_forms.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace netindex {

Polynomial::Polynomial(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t Polynomial::operator()(std::int64_t n) const {
    std::int64_t value = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * n + *it;
    return value;
}

std::string Polynomial::to_string(std::string_view var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const std::int64_t c = coeffs_[i];
        if (c == 0) continue;
        if (!out.empty())
            out += c > 0 ? "+" : "-";
        else if (c < 0)
            out += "-";
        const std::int64_t mag = c > 0 ? c : -c;
        if (mag != 1 || i == 0) out += std::to_string(mag);
        if (i >= 1) out += var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// Reference data, kept verbatim from the printed source material, misprints
// included. The verifier's whole job is to adjudicate these rows and closed
// forms against graph-derived ground truth, so nothing here is "corrected".
// ---------------------------------------------------------------------------

const PartitionTable& table_for(Family family) {
    static const std::array<PartitionTable, 5> tables = {{
        // SL
        {Family::SL,
         1,
         1,
         {{3, {0, 6, 6}}, {6, {0, -3, 9}}},
         {{3, 3, {0, 6}}, {3, 6, {0, 6, 18}}, {6, 6, {0, -12, 18}}},
         {}},
        // CS
        {Family::CS,
         1,
         1,
         {{3, {2, 2}}, {6, {-1, 1}}},
         {{3, 3, {4, 1}}, {3, 6, {-2, 4}}, {6, 6, {-2, 1}}},
         {{3, 3, {6}}}},
        // HX
        {Family::HX,
         2,
         3,
         {{3, {6}}, {4, {-12, 6}}, {6, {7, -9, 3}}},
         {{3, 4, {12}},
          {3, 6, {6}},
          {4, 4, {-18, 6}},
          {4, 6, {-24, 12}},
          {6, 6, {30, -33, 9}}},
         {}},
        // OX
        {Family::OX,
         1,
         1,
         {{2, {0, 6}}, {4, {0, -3, 9}}},
         {{2, 4, {0, 12}}, {4, 4, {0, -12, 18}}},
         {}},
        // HC
        {Family::HC,
         1,
         1,
         {{2, {0, 6}}, {3, {0, -6, 6}}},
         {{2, 2, {6}}, {2, 3, {-12, 12}}, {3, 3, {6, -15, 9}}},
         {}},
    }};
    return tables[static_cast<std::size_t>(family)];
}

struct CountPolynomials {
    Polynomial vertices;
    Polynomial edges;
};

const CountPolynomials& counts_for(Family family) {
    static const std::array<CountPolynomials, 5> counts = {{
        {{0, 3, 15}, {0, 0, 36}},  // SL
        {{1, 3}, {0, 6}},          // CS
        {{1, -3, 3}, {6, -15, 9}}, // HX
        {{0, 3, 9}, {0, 0, 18}},   // OX
        {{0, 0, 6}, {0, -3, 9}},   // HC
    }};
    return counts[static_cast<std::size_t>(family)];
}

const ProductFormula& pi1c_for(Family family) {
    static const std::array<ProductFormula, 5> formulas = {{
        {1, {{2, {0, -3, 9}}, {3, {0, 3, 15}}}, {}},    // SL: 2^(9n^2-3n) 3^(15n^2+3n)
        {1, {{2, {-1, 1}}, {3, {1, 3}}}, {}},           // CS: 2^(n-1) 3^(3n+1)
        {2, {{2, {-17, 3, 3}}, {3, {13, -9, 3}}}, {}},  // HX: 2^(3n^2+3n-17) 3^(3n^2-9n+13)
        {1, {{2, {0, 0, 18}}}, {}},                     // OX: 2^(18n^2)
        {1, {{2, {0, 6}}, {3, {0, -6, 6}}}, {}},        // HC: 2^(6n) 3^(6n^2-6n)
    }};
    return formulas[static_cast<std::size_t>(family)];
}

const ProductFormula& pi2_for(Family family) {
    static const std::array<ProductFormula, 5> formulas = {{
        {1, {{2, {0, -18, 54}}, {3, {0, 0, 72}}}, {}},    // SL
        {1, {{2, {-6, 6}}, {3, {0, 12}}}, {}},            // CS
        {2, {{2, {-56, -6, 18}}, {3, {60, -54, 18}}}, {}},// HX
        {1, {{2, {0, -12, 72}}}, {}},                     // OX
        {1, {{2, {0, 12}}, {3, {0, -18, 18}}}, {}},       // HC
    }};
    return formulas[static_cast<std::size_t>(family)];
}

const ProductFormula& pi1star_for(Family family) {
    static const std::array<ProductFormula, 5> formulas = {{
        {1, {{2, {0, -18, 36}}, {3, {0, 6, 54}}}, {}},  // SL
        {1, {{2, {0, 3}}, {3, {-2, 10}}}, 46656},       // CS (plain integer at n = 1)
        {3,
         {{2, {-18, -46, 18}}, {3, {42, -33, 9}}, {5, {-24, 12}}, {7, {12}}},
         {}},                                           // HX
        {1, {{2, {0, -24, 54}}, {3, {0, 12}}}, {}},     // OX
        {1, {{2, {18, -15, 9}}, {3, {6, -15, 9}}, {5, {-12, 12}}}, {}},  // HC
    }};
    return formulas[static_cast<std::size_t>(family)];
}

const ChiFormula& chi_for(Family family) {
    static const std::array<ChiFormula, 5> formulas = {{
        // SL: n 6^(a+1) + (6n^2+2n) 3^(2a+1) + (3n^2-2n) 2^(2a+1) 3^(a+1)
        {1,
         {{{0, 1}, {{6, 1, 1}}},
          {{0, 2, 6}, {{3, 2, 1}}},
          {{0, -2, 3}, {{2, 2, 1}, {3, 1, 1}}}},
         {},
         false},
        // CS: (n+4) 2^a 3^a + (4n-2) 3^(2a) + (n-2) 2^(2a) 3^a; 6^(a+1) at n = 1
        {1,
         {{{4, 1}, {{2, 1, 0}, {3, 1, 0}}},
          {{-2, 4}, {{3, 2, 0}}},
          {{-2, 1}, {{2, 2, 0}, {3, 1, 0}}}},
         {{{1}, {{6, 1, 1}}}},
         true},
        // HX: 3(n-3) 2^(3a+1) + (n-2) 2^(a+2) 3^(a+1)
        //     + (-3n^2+11n-10) 2^(2a) 3^(a+1) + 12 7^a + 6 3^(2a)
        {3,
         {{{-9, 3}, {{2, 3, 1}}},
          {{-2, 1}, {{2, 1, 2}, {3, 1, 1}}},
          {{-10, 11, -3}, {{2, 2, 0}, {3, 1, 1}}},
          {{12}, {{7, 1, 0}}},
          {{6}, {{3, 2, 0}}}},
         {},
         false},
        // OX: n 2^(a+2) 3^(a+1) + 3n(3n-2) 2^(3a+1)
        {1,
         {{{0, 1}, {{2, 1, 2}, {3, 1, 1}}},
          {{0, -6, 9}, {{2, 3, 1}}}},
         {},
         false},
        // HC: 3 2^(2a+1) + 12(n-1) 5^a + (3n^2-5n+2) 2^a 3^(a+1)
        {1,
         {{{3}, {{2, 2, 1}}},
          {{-12, 12}, {{5, 1, 0}}},
          {{2, -5, 3}, {{2, 1, 0}, {3, 1, 1}}}},
         {},
         false},
    }};
    return formulas[static_cast<std::size_t>(family)];
}

void require_min_n(int n, int min_n, const std::string& what) {
    if (n < min_n)
        throw std::out_of_range(what + " covers n >= " + std::to_string(min_n) +
                                ", got n = " + std::to_string(n));
}

std::string named(Family family, const char* what) {
    return std::string(what) + " for " + std::string(family_name(family));
}

// "a+1" / "2a" / "3a+1" / "a" for base^(scale*a + offset).
std::string chi_exponent_string(const ChiBase& base) {
    std::string out;
    if (base.alpha_scale != 1) out += std::to_string(base.alpha_scale);
    out += "a";
    if (base.offset != 0) out += "+" + std::to_string(base.offset);
    return out;
}

std::string chi_terms_string(const std::vector<ChiTerm>& terms) {
    std::string out;
    for (const ChiTerm& term : terms) {
        if (!out.empty()) out += " + ";
        const std::string coeff = term.coeff.to_string();
        std::string part;
        if (coeff != "1" || term.bases.empty())
            part = coeff.find_first_of("+-", 1) != std::string::npos ? "(" + coeff + ")" : coeff;
        for (const ChiBase& base : term.bases) {
            if (!part.empty()) part += "*";
            part += std::to_string(base.base) + "^(" + chi_exponent_string(base) + ")";
        }
        out += part;
    }
    return out;
}

std::string product_formula_string(const ProductFormula& formula, bool scale_by_c) {
    std::string out;
    for (const PrimePower& pp : formula.factors) {
        if (!out.empty()) out += "*";
        const std::string poly = pp.exponent.to_string();
        out += std::to_string(pp.prime) +
               (scale_by_c ? "^((" + poly + ")*c)" : "^(" + poly + ")");
    }
    if (formula.literal_n1) out += "; n=1: " + std::to_string(*formula.literal_n1);
    return out;
}

}  // namespace

const PartitionTable& partition_table(Family family) { return table_for(family); }

Polynomial vertex_count_polynomial(Family family) { return counts_for(family).vertices; }

Polynomial edge_count_polynomial(Family family) { return counts_for(family).edges; }

DegreeSpectrum table_degree_spectrum(Family family, int n) {
    const PartitionTable& table = table_for(family);
    require_min_n(n, table.vertex_min_n, named(family, "vertex partition table"));
    DegreeSpectrum spectrum;
    for (const VertexRow& row : table.vertex_rows) {
        const std::int64_t count = row.count(n);
        if (count != 0) spectrum[row.degree] = count;
    }
    return spectrum;
}

DegreePairSpectrum table_edge_spectrum(Family family, int n) {
    const PartitionTable& table = table_for(family);
    require_min_n(n, table.edge_min_n, named(family, "edge partition table"));
    const std::vector<EdgeRow>& rows =
        (n == 1 && !table.edge_rows_n1.empty()) ? table.edge_rows_n1 : table.edge_rows;
    DegreePairSpectrum spectrum;
    for (const EdgeRow& row : rows) spectrum[{row.degree_u, row.degree_v}] = row.count(n);
    return spectrum;
}

const ProductFormula& pi1c_formula(Family family) { return pi1c_for(family); }
const ProductFormula& pi2_formula(Family family) { return pi2_for(family); }
const ProductFormula& pi1star_formula(Family family) { return pi1star_for(family); }
const ChiFormula& chi_formula(Family family) { return chi_for(family); }

FactoredInteger theorem_pi1c(Family family, int n, std::int64_t c) {
    if (c < 0)
        throw std::domain_error("closed form pi1c needs c >= 0, got c = " + std::to_string(c));
    const ProductFormula& formula = pi1c_for(family);
    require_min_n(n, formula.min_n, named(family, "closed form pi1c"));
    FactoredInteger value;
    for (const PrimePower& pp : formula.factors)
        value *= FactoredInteger::from_prime_power(pp.prime, BigInt(pp.exponent(n)) * c);
    return value;
}

namespace {

FactoredInteger evaluate_product(const ProductFormula& formula, Family family, int n,
                                 const char* what) {
    require_min_n(n, formula.min_n, named(family, what));
    if (n == 1 && formula.literal_n1) return FactoredInteger::from_integer(*formula.literal_n1);
    FactoredInteger value;
    for (const PrimePower& pp : formula.factors)
        value *= FactoredInteger::from_prime_power(pp.prime, BigInt(pp.exponent(n)));
    return value;
}

}  // namespace

FactoredInteger theorem_pi2(Family family, int n) {
    return evaluate_product(pi2_for(family), family, n, "closed form pi2");
}

FactoredInteger theorem_pi1star(Family family, int n) {
    return evaluate_product(pi1star_for(family), family, n, "closed form pi1star");
}

IndexValue theorem_chi(Family family, int n, double alpha) {
    const ChiFormula& formula = chi_for(family);
    require_min_n(n, formula.min_n, named(family, "closed form chi"));
    const std::vector<ChiTerm>& terms =
        (n == 1 && formula.has_n1_case) ? formula.terms_n1 : formula.terms;
    if (chi_alpha_is_exact(alpha)) {
        const auto a = static_cast<std::int64_t>(alpha);
        BigInt total = 0;
        for (const ChiTerm& term : terms) {
            BigInt product = term.coeff(n);
            for (const ChiBase& base : term.bases)
                product *= boost::multiprecision::pow(
                    BigInt(base.base),
                    static_cast<unsigned int>(base.alpha_scale * a + base.offset));
            total += product;
        }
        return IndexValue(total);
    }
    double total = 0.0;
    for (const ChiTerm& term : terms) {
        double product = static_cast<double>(term.coeff(n));
        for (const ChiBase& base : term.bases)
            product *= std::pow(static_cast<double>(base.base),
                                static_cast<double>(base.alpha_scale) * alpha +
                                    static_cast<double>(base.offset));
        total += product;
    }
    return IndexValue(total);
}

IndexValue theorem_value(Family family, IndexKind index, int n, std::int64_t c, double alpha) {
    switch (index) {
        case IndexKind::Pi1c:    return IndexValue(theorem_pi1c(family, n, c));
        case IndexKind::Pi2:     return IndexValue(theorem_pi2(family, n));
        case IndexKind::Chi:     return theorem_chi(family, n, alpha);
        case IndexKind::Pi1Star: return IndexValue(theorem_pi1star(family, n));
        case IndexKind::M1:
        case IndexKind::M2:
        case IndexKind::NK:
            throw std::invalid_argument("no closed form cataloged for index " +
                                        std::string(index_name(index)));
    }
    throw std::logic_error("unhandled IndexKind value");
}

std::string theorem_formula_string(Family family, IndexKind index) {
    switch (index) {
        case IndexKind::Pi1c:    return product_formula_string(pi1c_for(family), true);
        case IndexKind::Pi2:     return product_formula_string(pi2_for(family), false);
        case IndexKind::Pi1Star: return product_formula_string(pi1star_for(family), false);
        case IndexKind::Chi: {
            const ChiFormula& formula = chi_for(family);
            std::string out = chi_terms_string(formula.terms);
            if (formula.has_n1_case) out += "; n=1: " + chi_terms_string(formula.terms_n1);
            return out;
        }
        case IndexKind::M1:
        case IndexKind::M2:
        case IndexKind::NK:
            throw std::invalid_argument("no closed form cataloged for index " +
                                        std::string(index_name(index)));
    }
    throw std::logic_error("unhandled IndexKind value");
}

std::string table_formula_string(Family family, bool edge_table) {
    const PartitionTable& table = table_for(family);
    std::string out;
    if (edge_table) {
        for (const EdgeRow& row : table.edge_rows) {
            if (!out.empty()) out += "; ";
            out += "(" + std::to_string(row.degree_u) + "," + std::to_string(row.degree_v) +
                   "): " + row.count.to_string();
        }
        if (!table.edge_rows_n1.empty()) {
            out += "; n=1:";
            for (const EdgeRow& row : table.edge_rows_n1)
                out += " (" + std::to_string(row.degree_u) + "," +
                       std::to_string(row.degree_v) + "): " + row.count.to_string();
        }
    } else {
        for (const VertexRow& row : table.vertex_rows) {
            if (!out.empty()) out += "; ";
            out += std::to_string(row.degree) + ": " + row.count.to_string();
        }
    }
    return out;
}

}  // namespace netindex
