#include "netindex/io.hpp"

#include "netindex/plot.hpp"
#include "netindex/sweep.hpp"
#include "support.hpp"

#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

using namespace netindex;
using testsupport::throws_with;

TEST_CASE("edge lists serialize with a header and sorted pairs") {
    std::ostringstream out;
    write_edge_list(out, gen_chain_silicate(1));
    CHECK(out.str() == "CS 1 4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
}

TEST_CASE("edge lists round-trip") {
    const LabeledNetwork net = gen_silicate(2);
    std::ostringstream out;
    write_edge_list(out, net);
    std::istringstream in(out.str());
    const EdgeListFile file = read_edge_list(in);
    CHECK(file.family == Family::SL);
    CHECK(file.n == 2);
    CHECK(file.graph == net.graph);
}

TEST_CASE("edge-list parsing rejects malformed input") {
    const auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_edge_list(in);
    };
    CHECK(throws_with<std::runtime_error>([&] { parse(""); }, "empty"));
    CHECK(throws_with<std::runtime_error>([&] { parse("CS one 4 6\n"); }, "malformed"));
    CHECK(throws_with<std::runtime_error>([&] { parse("CS 1 4 6 9\n"); }, "trailing"));
    CHECK(throws_with<std::runtime_error>([&] { parse("CS 1 4 2\n0 1\n"); },
                                          "edge count mismatch"));
    CHECK(throws_with<std::runtime_error>([&] { parse("CS 1 4 1\n0 x\n"); },
                                          "malformed edge line"));
    CHECK(throws_with<std::invalid_argument>([&] { parse("CS 1 4 2\n0 1\n1 0\n"); },
                                             "duplicate edge"));
    CHECK(throws_with<std::invalid_argument>([&] { parse("ZZ 1 4 1\n0 1\n"); },
                                             "unknown family"));
}

TEST_CASE("verification reports serialize as deterministic JSON") {
    const VerificationReport report = verify_family(Family::HX, 2, 3, {2}, {2.0});
    std::ostringstream out_a;
    std::ostringstream out_b;
    write_report_json(out_a, report);
    write_report_json(out_b, report);
    CHECK(out_a.str() == out_b.str());

    const nlohmann::json doc = nlohmann::json::parse(out_a.str());
    REQUIRE(doc.contains("entries"));
    REQUIRE(doc.contains("summary"));
    REQUIRE(doc.contains("mismatch_total"));
    CHECK(doc["entries"].size() == report.entries.size());
    const auto& first = doc["entries"][0];
    CHECK(first["family"] == "HX");
    CHECK(first["n"] == 2);
    CHECK(first["quantity"] == "vertex-table");
    CHECK(first["status"] == "MATCH");
    CHECK(first.contains("formula"));
    CHECK(first.contains("formula_value"));
    CHECK(first.contains("graph_value"));
    CHECK(doc["summary"]["HX"]["mismatch"].get<int>() == report.summary().at(Family::HX).mismatch);
    CHECK(doc["mismatch_total"].get<int>() == report.mismatch_count());
}

TEST_CASE("sweep rows serialize to the pinned CSV header") {
    SweepOptions options;
    options.families = {Family::CS};
    options.n_lo = 2;
    options.n_hi = 3;
    options.indices = {IndexKind::M1, IndexKind::Chi};
    const std::vector<SweepRow> rows = compute_sweep(options);
    REQUIRE(rows.size() == 4);

    std::ostringstream out;
    write_sweep_csv(out, rows);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == "family,n,index,param,value_log10,value_exact");

    std::istringstream round(out.str());
    const std::vector<SweepRow> parsed = read_sweep_csv(round);
    REQUIRE(parsed.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(parsed[i].family == rows[i].family);
        CHECK(parsed[i].n == rows[i].n);
        CHECK(parsed[i].index == rows[i].index);
        CHECK(parsed[i].param == rows[i].param);
        CHECK(parsed[i].value_exact == rows[i].value_exact);
        CHECK(parsed[i].value_log10 ==
              doctest::Approx(rows[i].value_log10).epsilon(1e-8));
    }
}

TEST_CASE("sweep rows are ordered by family, index, dimension") {
    SweepOptions options;
    options.families = {Family::HC, Family::SL};
    options.n_lo = 2;
    options.n_hi = 3;
    options.indices = {IndexKind::Pi2, IndexKind::Pi1c};
    const std::vector<SweepRow> rows = compute_sweep(options);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].family == Family::SL);
    CHECK(rows[0].index == IndexKind::Pi1c);
    CHECK(rows[0].n == 2);
    CHECK(rows[1].n == 3);
    CHECK(rows[2].index == IndexKind::Pi2);
    CHECK(rows[4].family == Family::HC);
}

TEST_CASE("sweeps refuse dimensions below two") {
    SweepOptions options;
    options.n_lo = 1;
    CHECK(throws_with<std::invalid_argument>([&] { compute_sweep(options); }, "n = 2"));
}

TEST_CASE("sweep values follow the evaluation rules") {
    SweepOptions options;
    options.families = {Family::CS};
    options.n_lo = 2;
    options.n_hi = 2;
    options.indices = {IndexKind::Pi1c, IndexKind::NK, IndexKind::M2};
    options.c = 2.0;
    const std::vector<SweepRow> rows = compute_sweep(options);
    REQUIRE(rows.size() == 3);

    CHECK(rows[0].index == IndexKind::Pi1c);
    CHECK(rows[0].param == "c=2");
    CHECK(rows[0].value_exact == "19131876");  // (2 * 3^7)^2

    CHECK(rows[1].index == IndexKind::M2);
    CHECK(rows[1].param == "");
    CHECK(rows[1].value_exact == "162");

    CHECK(rows[2].index == IndexKind::NK);
    CHECK(rows[2].value_exact == "4374");  // 2 * 3^7
}

TEST_CASE("non-integral alpha sweeps store the raw value") {
    SweepOptions options;
    options.families = {Family::CS};
    options.n_lo = 2;
    options.n_hi = 2;
    options.indices = {IndexKind::Chi};
    options.alpha = 0.5;
    const std::vector<SweepRow> rows = compute_sweep(options);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].param == "alpha=0.5");
    const double expected = 6.0 * std::sqrt(6.0) + 6.0 * 3.0;  // 6 sqrt6 + 6 sqrt9
    CHECK(std::stod(rows[0].value_exact) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(rows[0].value_log10 == doctest::Approx(std::log10(expected)).epsilon(1e-9));
}

TEST_CASE("non-integral c sweeps are log-scale only") {
    SweepOptions options;
    options.families = {Family::CS};
    options.n_lo = 2;
    options.n_hi = 2;
    options.indices = {IndexKind::Pi1c};
    options.c = 0.5;
    const std::vector<SweepRow> rows = compute_sweep(options);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].param == "c=0.5");
    CHECK(rows[0].value_exact == "");
    // NK(CS_2) = 2 * 3^7, so log10 at c = 0.5 is half its log10
    const double expected = 0.5 * std::log10(2.0 * 2187.0);
    CHECK(rows[0].value_log10 == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("CSV parsing rejects unknown columns and bad rows") {
    const auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_sweep_csv(in);
    };
    CHECK(throws_with<std::runtime_error>(
        [&] { parse("family,n,indexx,param,value_log10,value_exact\n"); }, "indexx"));
    CHECK(throws_with<std::runtime_error>(
        [&] { parse("family,n,index,param,value_log10\n"); }, "missing CSV column"));
    CHECK(throws_with<std::runtime_error>(
        [&] { parse("family,n,index,param,value_log10,value_exact\nSL,2,pi2\n"); },
        "expected 6"));
    CHECK(throws_with<std::runtime_error>(
        [&] { parse("family,n,index,param,value_log10,value_exact\nQQ,2,pi2,,1.0,\n"); },
        "unknown family"));
    CHECK(parse("family,n,index,param,value_log10,value_exact\n").empty());
}

TEST_CASE("SVG rendering is deterministic and shaped by its input") {
    SweepOptions options;
    options.families = {Family::SL, Family::HC};
    options.n_lo = 2;
    options.n_hi = 5;
    options.indices = {IndexKind::Pi2, IndexKind::Chi};
    const std::vector<SweepRow> rows = compute_sweep(options);

    const std::string svg = render_sweep_svg(rows);
    CHECK(svg == render_sweep_svg(rows));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);

    std::size_t charts = 0;
    for (std::size_t pos = svg.find("<g class=\"chart\">"); pos != std::string::npos;
         pos = svg.find("<g class=\"chart\">", pos + 1))
        ++charts;
    CHECK(charts == 2);

    std::size_t polylines = 0;
    for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
         pos = svg.find("<polyline", pos + 1))
        ++polylines;
    CHECK(polylines == 4);  // 2 charts x 2 families

    CHECK(svg.find("#1f77b4") != std::string::npos);  // SL series color
    CHECK(svg.find("#ff7f0e") != std::string::npos);  // HC series color
}

TEST_CASE("empty sweeps render an empty chart shell") {
    const std::string svg = render_sweep_svg({});
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("no data") != std::string::npos);
}
