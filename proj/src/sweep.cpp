#include "netindex/sweep.hpp"

#include "netindex/generators.hpp"
#include "netindex/indices.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace netindex {

namespace {

std::string format_param(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", value);
    return buf;
}

std::string format_log10(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

bool is_exact_c(double c) { return c >= 0.0 && c == std::floor(c) && c <= 1e6; }

/// log10 of chi directly from the pair spectrum, safe for values far beyond
/// double range (all terms are positive for a nonempty edge set).
double chi_log10(const DegreePairSpectrum& ps, double alpha) {
    double top = -std::numeric_limits<double>::infinity();
    std::vector<double> logs;
    for (const auto& [pair, count] : ps) {
        const double l = std::log10(static_cast<double>(count)) +
                         alpha * std::log10(static_cast<double>(pair.first + pair.second));
        logs.push_back(l);
        top = std::max(top, l);
    }
    if (logs.empty()) throw std::domain_error("chi log10 undefined for an empty edge set");
    double sum = 0;
    for (double l : logs) sum += std::pow(10.0, l - top);
    return top + std::log10(sum);
}

std::vector<Family> normalized(std::vector<Family> families) {
    std::sort(families.begin(), families.end());
    families.erase(std::unique(families.begin(), families.end()), families.end());
    return families;
}

std::vector<IndexKind> normalized(std::vector<IndexKind> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    return indices;
}

SweepRow make_row(const Graph& g, Family family, int n, IndexKind index, double c,
                  double alpha) {
    SweepRow row{family, n, index, "", 0.0, ""};
    switch (index) {
        case IndexKind::Pi1c: {
            row.param = "c=" + format_param(c);
            if (is_exact_c(c)) {
                const FactoredInteger value = mult_zagreb_1(g, static_cast<std::int64_t>(c));
                row.value_log10 = value.log10();
                row.value_exact = value.to_decimal(40);
            } else {
                // Pi_{1,c} = NK^c extends to non-integral c in log space only.
                row.value_log10 = c * narumi_katayama(g).log10();
            }
            break;
        }
        case IndexKind::Pi2: {
            const FactoredInteger value = mult_zagreb_2(g);
            row.value_log10 = value.log10();
            row.value_exact = value.to_decimal(40);
            break;
        }
        case IndexKind::Chi: {
            row.param = "alpha=" + format_param(alpha);
            const IndexValue value = sum_connectivity(g, alpha);
            if (value.is_integer()) {
                row.value_log10 = log10_of(value.integer());
                const std::string digits = value.integer().str();
                if (digits.size() <= 40) row.value_exact = digits;
            } else {
                row.value_log10 = chi_log10(degree_pair_spectrum(g), alpha);
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.12g", value.real());
                row.value_exact = buf;
            }
            break;
        }
        case IndexKind::Pi1Star: {
            const FactoredInteger value = mult_zagreb_1_star(g);
            row.value_log10 = value.log10();
            row.value_exact = value.to_decimal(40);
            break;
        }
        case IndexKind::M1: {
            const std::int64_t value = first_zagreb(g);
            row.value_log10 = std::log10(static_cast<double>(value));
            row.value_exact = std::to_string(value);
            break;
        }
        case IndexKind::M2: {
            const std::int64_t value = second_zagreb(g);
            row.value_log10 = std::log10(static_cast<double>(value));
            row.value_exact = std::to_string(value);
            break;
        }
        case IndexKind::NK: {
            const FactoredInteger value = narumi_katayama(g);
            row.value_log10 = value.log10();
            row.value_exact = value.to_decimal(40);
            break;
        }
    }
    return row;
}

}  // namespace

std::vector<SweepRow> compute_sweep(const SweepOptions& options) {
    if (options.n_lo < 2)
        throw std::invalid_argument("sweep dimensions start at n = 2, got n = " +
                                    std::to_string(options.n_lo));
    if (options.n_lo > options.n_hi)
        throw std::invalid_argument("invalid dimension range " + std::to_string(options.n_lo) +
                                    ".." + std::to_string(options.n_hi));
    const std::vector<Family> families = normalized(options.families);
    const std::vector<IndexKind> indices = normalized(options.indices);

    std::vector<SweepRow> rows;
    for (Family family : families) {
        for (int n = options.n_lo; n <= options.n_hi; ++n) {
            const LabeledNetwork net = generate({family, n});
            for (IndexKind index : indices)
                rows.push_back(make_row(net.graph, family, n, index, options.c, options.alpha));
        }
    }
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.family != b.family) return a.family < b.family;
        if (a.index != b.index) return a.index < b.index;
        return a.n < b.n;
    });
    return rows;
}

namespace {

constexpr const char* kColumns[6] = {"family", "n",           "index",
                                     "param",  "value_log10", "value_exact"};

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(line.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return fields;
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "family,n,index,param,value_log10,value_exact\n";
    for (const SweepRow& row : rows)
        out << family_name(row.family) << "," << row.n << "," << index_name(row.index) << ","
            << row.param << "," << format_log10(row.value_log10) << "," << row.value_exact
            << "\n";
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV input");
    const std::vector<std::string> header = split_fields(line);
    for (std::size_t i = 0; i < header.size(); ++i)
        if (i >= 6 || header[i] != kColumns[i])
            throw std::runtime_error("unknown CSV column '" + header[i] + "'");
    if (header.size() < 6)
        throw std::runtime_error("missing CSV column '" + std::string(kColumns[header.size()]) +
                                 "'");

    std::vector<SweepRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != 6)
            throw std::runtime_error("CSV line " + std::to_string(line_no) + " has " +
                                     std::to_string(fields.size()) + " fields, expected 6");
        try {
            SweepRow row{parse_family(fields[0]), std::stoi(fields[1]),
                         parse_index(fields[2]),  fields[3],
                         std::stod(fields[4]),    fields[5]};
            rows.push_back(std::move(row));
        } catch (const std::exception& e) {
            throw std::runtime_error("CSV line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return rows;
}

}  // namespace netindex
