#include "netindex/verify.hpp"

#include "netindex/generators.hpp"
#include "netindex/indices.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <stdexcept>

namespace netindex {

namespace {

std::string format_param(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", value);
    return buf;
}

std::string spectrum_string(const DegreeSpectrum& ds) {
    std::string out;
    for (const auto& [degree, count] : ds) {
        if (!out.empty()) out += " ";
        out += std::to_string(degree) + ":" + std::to_string(count);
    }
    return out.empty() ? "(empty)" : out;
}

std::string spectrum_string(const DegreePairSpectrum& ps) {
    std::string out;
    for (const auto& [pair, count] : ps) {
        if (!out.empty()) out += " ";
        out += "(" + std::to_string(pair.first) + "," + std::to_string(pair.second) +
               "):" + std::to_string(count);
    }
    return out.empty() ? "(empty)" : out;
}

template <typename Spectrum>
Spectrum without_zero_rows(const Spectrum& spectrum) {
    Spectrum out;
    for (const auto& [key, count] : spectrum)
        if (count != 0) out.emplace(key, count);
    return out;
}

/// L1 distance between two prime-exponent maps; zero iff the values agree.
BigInt exponent_distance(const FactoredInteger& a, const FactoredInteger& b) {
    BigInt distance = 0;
    auto ia = a.factors().begin();
    auto ib = b.factors().begin();
    while (ia != a.factors().end() || ib != b.factors().end()) {
        if (ib == b.factors().end() || (ia != a.factors().end() && ia->first < ib->first)) {
            distance += ia->second;
            ++ia;
        } else if (ia == a.factors().end() || ib->first < ia->first) {
            distance += ib->second;
            ++ib;
        } else {
            distance += boost::multiprecision::abs(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return distance;
}

// --- floating-point chi comparison -----------------------------------------
//
// For non-integral alpha both sides are doubles. Values beyond double range
// are compared in log space instead: each side is re-evaluated as
// sign * 10^log10, with positive and negative term groups accumulated by
// log-sum-exp and combined at the end.

struct SignedLog {
    int sign = 0;         // -1, 0, +1
    double log10_abs = 0; // meaningful when sign != 0
};

double log_sum(const std::vector<double>& logs) {
    if (logs.empty()) return -std::numeric_limits<double>::infinity();
    const double top = *std::max_element(logs.begin(), logs.end());
    double sum = 0;
    for (double l : logs) sum += std::pow(10.0, l - top);
    return top + std::log10(sum);
}

SignedLog combine(const std::vector<double>& positive, const std::vector<double>& negative) {
    const double lp = log_sum(positive);
    const double ln = log_sum(negative);
    if (std::isinf(lp) && std::isinf(ln)) return {0, 0};
    if (std::isinf(ln) || lp - ln > 1e-13) {
        const double rest = std::isinf(ln) ? 0.0 : std::pow(10.0, ln - lp);
        return {1, lp + std::log10(1.0 - rest)};
    }
    if (std::isinf(lp) || ln - lp > 1e-13) {
        const double rest = std::isinf(lp) ? 0.0 : std::pow(10.0, lp - ln);
        return {-1, ln + std::log10(1.0 - rest)};
    }
    return {0, 0};  // cancellation beyond log-space resolution
}

SignedLog chi_signed_log_from_graph(const DegreePairSpectrum& ps, double alpha) {
    std::vector<double> logs;
    for (const auto& [pair, count] : ps)
        if (count > 0)
            logs.push_back(std::log10(static_cast<double>(count)) +
                           alpha * std::log10(static_cast<double>(pair.first + pair.second)));
    return combine(logs, {});
}

SignedLog chi_signed_log_from_formula(Family family, int n, double alpha) {
    const ChiFormula& formula = chi_formula(family);
    const std::vector<ChiTerm>& terms =
        (n == 1 && formula.has_n1_case) ? formula.terms_n1 : formula.terms;
    std::vector<double> positive;
    std::vector<double> negative;
    for (const ChiTerm& term : terms) {
        const std::int64_t coeff = term.coeff(n);
        if (coeff == 0) continue;
        double log10_term = std::log10(static_cast<double>(coeff > 0 ? coeff : -coeff));
        for (const ChiBase& base : term.bases)
            log10_term += (static_cast<double>(base.alpha_scale) * alpha + base.offset) *
                          std::log10(static_cast<double>(base.base));
        (coeff > 0 ? positive : negative).push_back(log10_term);
    }
    return combine(positive, negative);
}

std::string signed_log_string(const SignedLog& value) {
    if (value.sign == 0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s10^%.6f", value.sign < 0 ? "-" : "",
                  value.log10_abs);
    return buf;
}

std::string real_string(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", value);
    return buf;
}

constexpr double kRealCutoff = 1e300;

bool reals_close(double a, double b) {
    if (a == b) return true;
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= 1e-9 * scale;
}

bool signed_logs_close(const SignedLog& a, const SignedLog& b) {
    if (a.sign != b.sign) return false;
    if (a.sign == 0) return true;
    // 1e-9 relative in the value is ~4.34e-10 absolute in log10.
    return std::abs(a.log10_abs - b.log10_abs) <= 4.4e-10;
}

}  // namespace

bool all_zero(const std::vector<Residual>& residuals) {
    return std::all_of(residuals.begin(), residuals.end(),
                       [](const Residual& r) { return r.value == 0; });
}

std::vector<Residual> check_lemma_identities(const DegreeSpectrum& ds,
                                             const DegreePairSpectrum& ps,
                                             std::int64_t vertex_count,
                                             std::int64_t edge_count) {
    std::vector<Residual> residuals;

    BigInt vertex_total = 0;
    for (const auto& [degree, count] : ds) vertex_total += count;
    residuals.push_back({"vertex-total", vertex_total - vertex_count});

    BigInt edge_total = 0;
    for (const auto& [pair, count] : ps) edge_total += count;
    residuals.push_back({"edge-total", edge_total - edge_count});

    std::set<int> degrees;
    for (const auto& [degree, count] : ds) degrees.insert(degree);
    for (const auto& [pair, count] : ps) {
        degrees.insert(pair.first);
        degrees.insert(pair.second);
    }
    for (int degree : degrees) {
        BigInt incident = 0;
        for (const auto& [pair, count] : ps) {
            if (pair.first == degree && pair.second == degree)
                incident += 2 * BigInt(count);
            else if (pair.first == degree || pair.second == degree)
                incident += count;
        }
        const auto it = ds.find(degree);
        const std::int64_t n_i = it == ds.end() ? 0 : it->second;
        residuals.push_back(
            {"degree-row[" + std::to_string(degree) + "]", incident - BigInt(degree) * n_i});
    }

    BigInt degree_sum = 0;
    for (const auto& [degree, count] : ds) degree_sum += BigInt(degree) * count;
    residuals.push_back({"degree-sum", degree_sum - 2 * BigInt(edge_count)});

    return residuals;
}

std::vector<Residual> self_consistency_suite(const Graph& g) {
    std::vector<Residual> residuals;

    // Pi_2 over edges against the vertex form prod_v d(v)^d(v).
    FactoredInteger vertex_form;
    for (const auto& [degree, count] : degree_spectrum(g))
        if (degree > 0)
            vertex_form *= FactoredInteger::from_integer(degree).pow(
                static_cast<std::int64_t>(degree) * count);
    residuals.push_back({"pi2-edge-vs-vertex", exponent_distance(mult_zagreb_2(g), vertex_form)});

    const FactoredInteger nk = narumi_katayama(g);
    for (std::int64_t c = 0; c <= 3; ++c)
        residuals.push_back({"pi1c-vs-nk-pow[c=" + std::to_string(c) + "]",
                             exponent_distance(mult_zagreb_1(g, c), nk.pow(c))});

    residuals.push_back({"chi0-vs-edge-count",
                         sum_connectivity(g, 0).integer() - BigInt(g.edge_count())});
    residuals.push_back(
        {"chi1-vs-m1", sum_connectivity(g, 1).integer() - BigInt(first_zagreb(g))});

    return residuals;
}

std::string_view verify_status_name(VerifyStatus status) {
    switch (status) {
        case VerifyStatus::Match:      return "MATCH";
        case VerifyStatus::Mismatch:   return "MISMATCH";
        case VerifyStatus::OutOfRange: return "OUT_OF_RANGE";
    }
    throw std::logic_error("unhandled VerifyStatus value");
}

std::map<Family, StatusCounts> VerificationReport::summary() const {
    std::map<Family, StatusCounts> out;
    for (const ReportEntry& entry : entries) {
        StatusCounts& counts = out[entry.family];
        switch (entry.status) {
            case VerifyStatus::Match:      ++counts.match; break;
            case VerifyStatus::Mismatch:   ++counts.mismatch; break;
            case VerifyStatus::OutOfRange: ++counts.out_of_range; break;
        }
    }
    return out;
}

int VerificationReport::mismatch_count() const {
    int count = 0;
    for (const ReportEntry& entry : entries)
        if (entry.status == VerifyStatus::Mismatch) ++count;
    return count;
}

std::vector<std::string> VerificationReport::mismatched_quantities() const {
    std::set<std::string> names;
    for (const ReportEntry& entry : entries)
        if (entry.status == VerifyStatus::Mismatch) names.insert(quantity_base(entry.quantity));
    return {names.begin(), names.end()};
}

std::string quantity_base(std::string_view quantity) {
    const auto bracket = quantity.find('[');
    return std::string(quantity.substr(0, bracket));
}

namespace {

/// Builds one entry by evaluating the reference side and the graph side,
/// tolerating out-of-range reference formulas and undefined graph values.
template <typename RefFn, typename GraphFn, typename EqFn>
ReportEntry adjudicate(Family family, int n, std::string quantity, std::string formula,
                       RefFn&& reference, GraphFn&& graph, EqFn&& equal) {
    ReportEntry entry{family, n, std::move(quantity), std::move(formula), "", "",
                      VerifyStatus::Match};
    bool out_of_range = false;
    try {
        entry.formula_value = reference();
    } catch (const std::out_of_range&) {
        out_of_range = true;
    }
    try {
        entry.graph_value = graph();
    } catch (const std::domain_error& e) {
        entry.graph_value = std::string("undefined: ") + e.what();
    }
    if (out_of_range) {
        entry.status = VerifyStatus::OutOfRange;
        return entry;
    }
    try {
        entry.status = equal() ? VerifyStatus::Match : VerifyStatus::Mismatch;
    } catch (const std::domain_error&) {
        entry.status = VerifyStatus::Mismatch;  // in range but undefined on the graph
    }
    return entry;
}

}  // namespace

VerificationReport verify_family(Family family, int n_lo, int n_hi,
                                 const std::vector<std::int64_t>& c_values,
                                 const std::vector<double>& alpha_values) {
    if (n_lo < 1 || n_lo > n_hi)
        throw std::invalid_argument("invalid dimension range " + std::to_string(n_lo) + ".." +
                                    std::to_string(n_hi));
    VerificationReport report;
    for (int n = n_lo; n <= n_hi; ++n) {
        const LabeledNetwork net = generate({family, n});
        const Graph& g = net.graph;
        const DegreeSpectrum ds = degree_spectrum(g);
        const DegreePairSpectrum ps = degree_pair_spectrum(g);

        report.entries.push_back(adjudicate(
            family, n, "vertex-table", table_formula_string(family, false),
            [&] { return spectrum_string(without_zero_rows(table_degree_spectrum(family, n))); },
            [&] { return spectrum_string(without_zero_rows(ds)); },
            [&] {
                return without_zero_rows(table_degree_spectrum(family, n)) ==
                       without_zero_rows(ds);
            }));

        report.entries.push_back(adjudicate(
            family, n, "edge-table", table_formula_string(family, true),
            [&] { return spectrum_string(without_zero_rows(table_edge_spectrum(family, n))); },
            [&] { return spectrum_string(without_zero_rows(ps)); },
            [&] {
                return without_zero_rows(table_edge_spectrum(family, n)) ==
                       without_zero_rows(ps);
            }));

        for (std::int64_t c : c_values) {
            report.entries.push_back(adjudicate(
                family, n, "pi1c[c=" + std::to_string(c) + "]",
                theorem_formula_string(family, IndexKind::Pi1c),
                [&] { return theorem_pi1c(family, n, c).to_string(); },
                [&] { return mult_zagreb_1(g, c).to_string(); },
                [&] { return theorem_pi1c(family, n, c) == mult_zagreb_1(g, c); }));
        }

        report.entries.push_back(
            adjudicate(family, n, "pi2", theorem_formula_string(family, IndexKind::Pi2),
                       [&] { return theorem_pi2(family, n).to_string(); },
                       [&] { return mult_zagreb_2(g).to_string(); },
                       [&] { return theorem_pi2(family, n) == mult_zagreb_2(g); }));

        report.entries.push_back(
            adjudicate(family, n, "pi1star", theorem_formula_string(family, IndexKind::Pi1Star),
                       [&] { return theorem_pi1star(family, n).to_string(); },
                       [&] { return mult_zagreb_1_star(g).to_string(); },
                       [&] { return theorem_pi1star(family, n) == mult_zagreb_1_star(g); }));

        for (double alpha : alpha_values) {
            const std::string quantity = "chi[alpha=" + format_param(alpha) + "]";
            const std::string formula = theorem_formula_string(family, IndexKind::Chi);
            if (chi_alpha_is_exact(alpha)) {
                report.entries.push_back(adjudicate(
                    family, n, quantity, formula,
                    [&] { return theorem_chi(family, n, alpha).integer().str(); },
                    [&] { return sum_connectivity(g, alpha).integer().str(); },
                    [&] {
                        return theorem_chi(family, n, alpha).integer() ==
                               sum_connectivity(g, alpha).integer();
                    }));
            } else {
                // Compare doubles while they fit, signed log-space beyond.
                const auto in_double_range = [&](double v) {
                    return std::isfinite(v) && std::abs(v) <= kRealCutoff;
                };
                report.entries.push_back(adjudicate(
                    family, n, quantity, formula,
                    [&] {
                        const double v = theorem_chi(family, n, alpha).real();
                        return in_double_range(v)
                                   ? real_string(v)
                                   : signed_log_string(chi_signed_log_from_formula(family, n, alpha));
                    },
                    [&] {
                        const double v = sum_connectivity(g, alpha).real();
                        return in_double_range(v)
                                   ? real_string(v)
                                   : signed_log_string(chi_signed_log_from_graph(ps, alpha));
                    },
                    [&] {
                        const double ref = theorem_chi(family, n, alpha).real();
                        const double act = sum_connectivity(g, alpha).real();
                        if (in_double_range(ref) && in_double_range(act))
                            return reals_close(ref, act);
                        return signed_logs_close(chi_signed_log_from_formula(family, n, alpha),
                                                 chi_signed_log_from_graph(ps, alpha));
                    }));
            }
        }
    }
    return report;
}

}  // namespace netindex
