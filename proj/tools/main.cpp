#include "netindex/closed_forms.hpp"
#include "netindex/family.hpp"
#include "netindex/generators.hpp"
#include "netindex/indices.hpp"
#include "netindex/io.hpp"
#include "netindex/plot.hpp"
#include "netindex/sweep.hpp"
#include "netindex/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace netindex;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Range {
    int lo = 1;
    int hi = 1;
};

// "A..B" (or a bare "A" meaning A..A).
Range parse_range(const std::string& text) {
    const auto parse_int = [&](const std::string& part) {
        std::size_t used = 0;
        const int value = std::stoi(part, &used);
        if (used != part.size()) throw std::invalid_argument("bad number '" + part + "'");
        return value;
    };
    try {
        const auto dots = text.find("..");
        Range range;
        if (dots == std::string::npos) {
            range.lo = range.hi = parse_int(text);
        } else {
            range.lo = parse_int(text.substr(0, dots));
            range.hi = parse_int(text.substr(dots + 2));
        }
        if (range.lo > range.hi)
            throw std::invalid_argument("empty range " + std::to_string(range.lo) + ".." +
                                        std::to_string(range.hi));
        return range;
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid range '" + text + "' (expected A..B)");
    }
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    return out;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    return in;
}

std::vector<Family> parse_families(const std::vector<std::string>& names) {
    std::vector<Family> families;
    if (names.empty()) {
        families.assign(kAllFamilies.begin(), kAllFamilies.end());
    } else {
        for (const std::string& name : names) families.push_back(parse_family(name));
        std::sort(families.begin(), families.end());
        families.erase(std::unique(families.begin(), families.end()), families.end());
    }
    return families;
}

std::string format_log10(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

int cmd_gen(const std::string& family_name_arg, int n, const std::string& out_path) {
    const LabeledNetwork net = generate({parse_family(family_name_arg), n});
    std::ofstream out = open_output(out_path);
    write_edge_list(out, net);
    std::cout << family_name(net.spec.family) << "_" << n << ": "
              << net.graph.vertex_count() << " vertices, " << net.graph.edge_count()
              << " edges -> " << out_path << "\n";
    return kExitOk;
}

int cmd_compute(const std::string& family_name_arg, int n, const std::string& index_name_arg,
                double c, double alpha) {
    const Family family = parse_family(family_name_arg);
    const IndexKind index = parse_index(index_name_arg);
    const LabeledNetwork net = generate({family, n});
    const Graph& g = net.graph;

    std::string header = std::string(index_name(index)) + "(" +
                         std::string(family_name(family)) + "_" + std::to_string(n) + ")";
    const auto print_factored = [&](const FactoredInteger& value) {
        std::cout << header << "\n";
        std::cout << "factored: " << value.to_string() << "\n";
        const std::string decimal = value.to_decimal(40);
        if (!decimal.empty()) std::cout << "decimal: " << decimal << "\n";
        std::cout << "log10: " << format_log10(value.is_one() ? 0.0 : value.log10()) << "\n";
    };

    switch (index) {
        case IndexKind::Pi1c: {
            header += " c=" + format_log10(c);
            if (c >= 0 && c == std::floor(c) && c <= 1e6) {
                print_factored(mult_zagreb_1(g, static_cast<std::int64_t>(c)));
            } else {
                std::cout << header << "\n";
                std::cout << "log10: " << format_log10(c * narumi_katayama(g).log10())
                          << "  (exact value only defined for integral c >= 0)\n";
            }
            break;
        }
        case IndexKind::Pi2:     print_factored(mult_zagreb_2(g)); break;
        case IndexKind::Pi1Star: print_factored(mult_zagreb_1_star(g)); break;
        case IndexKind::NK:      print_factored(narumi_katayama(g)); break;
        case IndexKind::M1: {
            const std::int64_t value = first_zagreb(g);
            std::cout << header << "\nvalue: " << value << "\n";
            std::cout << "log10: " << format_log10(std::log10(static_cast<double>(value)))
                      << "\n";
            break;
        }
        case IndexKind::M2: {
            const std::int64_t value = second_zagreb(g);
            std::cout << header << "\nvalue: " << value << "\n";
            std::cout << "log10: " << format_log10(std::log10(static_cast<double>(value)))
                      << "\n";
            break;
        }
        case IndexKind::Chi: {
            header += " alpha=" + format_log10(alpha);
            const IndexValue value = sum_connectivity(g, alpha);
            std::cout << header << "\nvalue: " << value.to_string() << "\n";
            std::cout << "log10: " << format_log10(value.log10()) << "\n";
            break;
        }
    }
    return kExitOk;
}

int cmd_verify(const std::vector<std::string>& family_names, const std::string& range_text,
               std::vector<std::int64_t> c_values, std::vector<double> alpha_values,
               const std::string& out_path, const std::vector<std::string>& expected) {
    const std::vector<Family> families = parse_families(family_names);
    const Range range = parse_range(range_text);
    if (c_values.empty()) c_values = {2};
    if (alpha_values.empty()) alpha_values = {2.0};

    VerificationReport report;
    for (Family family : families) {
        VerificationReport part =
            verify_family(family, range.lo, range.hi, c_values, alpha_values);
        report.entries.insert(report.entries.end(), part.entries.begin(), part.entries.end());
    }

    {
        std::ofstream out = open_output(out_path);
        write_report_json(out, report);
    }

    const auto summary = report.summary();
    for (Family family : families) {
        const auto it = summary.find(family);
        const StatusCounts counts = it == summary.end() ? StatusCounts{} : it->second;
        std::cout << family_name(family) << ": " << counts.match << " match, "
                  << counts.mismatch << " mismatch, " << counts.out_of_range
                  << " out-of-range\n";
    }

    const std::vector<std::string> mismatched = report.mismatched_quantities();
    for (const ReportEntry& entry : report.entries) {
        if (entry.status != VerifyStatus::Mismatch) continue;
        std::cout << "MISMATCH " << family_name(entry.family) << " n=" << entry.n << " "
                  << entry.quantity << ": formula " << entry.formula_value << " vs graph "
                  << entry.graph_value << "\n";
    }
    std::cout << "report written to " << out_path << "\n";

    // The allowlist must name exactly the quantities that mismatched: an
    // uncovered mismatch fails, and so does an allowlisted one that never
    // showed up.
    const std::set<std::string> allow(expected.begin(), expected.end());
    const std::set<std::string> got(mismatched.begin(), mismatched.end());
    bool failed = false;
    for (const std::string& name : got) {
        if (!allow.count(name)) {
            std::cout << "unexpected mismatch in " << name << "\n";
            failed = true;
        }
    }
    for (const std::string& name : allow) {
        if (!got.count(name)) {
            std::cout << "expected mismatch in " << name << " did not occur\n";
            failed = true;
        }
    }
    return failed ? kExitMismatch : kExitOk;
}

int cmd_sweep(const std::vector<std::string>& family_names, const std::string& range_text,
              const std::vector<std::string>& index_names, double c, double alpha,
              const std::string& csv_path) {
    SweepOptions options;
    options.families = parse_families(family_names);
    const Range range = parse_range(range_text);
    options.n_lo = range.lo;
    options.n_hi = range.hi;
    if (!index_names.empty()) {
        options.indices.clear();
        for (const std::string& name : index_names) options.indices.push_back(parse_index(name));
    }
    options.c = c;
    options.alpha = alpha;

    const std::vector<SweepRow> rows = compute_sweep(options);
    std::ofstream out = open_output(csv_path);
    write_sweep_csv(out, rows);
    std::cout << rows.size() << " rows -> " << csv_path << "\n";
    return kExitOk;
}

int cmd_plot(const std::string& csv_path, const std::string& svg_path) {
    std::ifstream in = open_input(csv_path);
    const std::vector<SweepRow> rows = read_sweep_csv(in);
    const std::string svg = render_sweep_svg(rows);
    std::ofstream out = open_output(svg_path);
    out << svg;
    std::cout << rows.size() << " rows plotted -> " << svg_path << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chemical network generators and degree-based topological indices"};
    app.require_subcommand(1);

    std::string family;
    std::string out_path;
    std::string index;
    std::string range_text = "1..10";
    std::string csv_path;
    std::string svg_path;
    std::vector<std::string> families;
    std::vector<std::string> indices;
    std::vector<std::string> expected_mismatches;
    std::vector<std::int64_t> c_values;
    std::vector<double> alpha_values;
    int n = 1;
    double c = 2.0;
    double alpha = 2.0;

    CLI::App* gen = app.add_subcommand("gen", "Generate a family graph as an edge list");
    gen->add_option("--family", family, "Family name (SL, CS, HX, OX, HC)")->required();
    gen->add_option("--n", n, "Dimension (n >= 1)")->required();
    gen->add_option("--out", out_path, "Output edge-list path")->required();

    CLI::App* compute = app.add_subcommand("compute", "Compute one index on one family graph");
    compute->add_option("--family", family, "Family name")->required();
    compute->add_option("--n", n, "Dimension")->required();
    compute->add_option("--index", index, "Index name (pi1c, pi2, chi, pi1star, m1, m2, nk)")
        ->required();
    compute->add_option("--c", c, "Exponent c for pi1c (default 2)");
    compute->add_option("--alpha", alpha, "Exponent alpha for chi (default 2)");

    CLI::App* verify = app.add_subcommand(
        "verify", "Check the closed-form catalog against generated graphs");
    verify->add_option("--family", families, "Families to verify (default: all)");
    verify->add_option("--n-range", range_text, "Dimension range A..B (default 1..10)");
    verify->add_option("--c", c_values, "c values for pi1c (default 2)");
    verify->add_option("--alpha", alpha_values, "alpha values for chi (default 2)");
    verify->add_option("--out", out_path, "JSON report path")
        ->default_val("verify-report.json");
    verify->add_option("--expect-mismatch", expected_mismatches,
                       "Quantity expected to mismatch (chi, pi2, ...); "
                       "exit 0 only if mismatches equal this set");

    CLI::App* sweep = app.add_subcommand("sweep", "Compute indices over a dimension range");
    sweep->add_option("--family", families, "Families to sweep (default: all)");
    sweep->add_option("--n-range", range_text, "Dimension range A..B (default 2..12)");
    sweep->add_option("--index", indices, "Indices (default: pi1c pi2 chi pi1star)");
    sweep->add_option("--c", c, "Exponent c for pi1c (default 2)");
    sweep->add_option("--alpha", alpha, "Exponent alpha for chi (default 2)");
    sweep->add_option("--csv", csv_path, "Output CSV path")->required();

    CLI::App* plot = app.add_subcommand("plot", "Render a sweep CSV as SVG line charts");
    plot->add_option("--csv", csv_path, "Input CSV path")->required();
    plot->add_option("--svg", svg_path, "Output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(family, n, out_path);
        if (compute->parsed()) return cmd_compute(family, n, index, c, alpha);
        if (verify->parsed())
            return cmd_verify(families, range_text, c_values, alpha_values, out_path,
                              expected_mismatches);
        if (sweep->parsed()) {
            if (sweep->count("--n-range") == 0) range_text = "2..12";
            return cmd_sweep(families, range_text, indices, c, alpha, csv_path);
        }
        if (plot->parsed()) return cmd_plot(csv_path, svg_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cerr << "error: no subcommand given\n";
    return kExitUsage;
}
