#include <doctest.h>

#include <json.hpp>

#include "spancom/report.hpp"

using namespace spancom;
using nlohmann::json;

TEST_CASE("closed-form report fields") {
    const std::string text = report_closed_json(4, 3);
    const json doc = json::parse(text);
    CHECK(doc.at("mode") == "closed_form");
    CHECK(doc.at("n") == 4);
    CHECK(doc.at("m") == 3);
    CHECK(doc.at("f_vector") == json::array({"4", "6", "3"}));
    CHECK(doc.at("h_vector_raw") == json::array({"1", "1", "1", "0"}));
    CHECK(doc.at("h_vector") == json::array({"1", "1", "1"}));
    CHECK(doc.at("hilbert_numerator") == json::array({"1", "1", "1"}));
    CHECK(doc.at("pole_order") == 3);
    CHECK(doc.at("shifted") == "skipped");
    CHECK(doc.at("shelling_order") == "skipped");
    CHECK(doc.at("minimal_nonfaces") == "skipped");
}

TEST_CASE("closed-form report handles large parameters") {
    const json doc = json::parse(report_closed_json(200, 100));
    CHECK(doc.at("pole_order") == 199);
    CHECK(doc.at("f_vector").size() == 199);
    CHECK(doc.at("h_vector").size() == 100);
}

TEST_CASE("graph report fields") {
    const Graph g = make_unicyclic(4, 4, {}).base;
    const json doc = json::parse(report_graph_json(g));
    CHECK(doc.at("mode") == "graph");
    CHECK(doc.at("vertices") == 4);
    CHECK(doc.at("edges") == 4);
    CHECK(doc.at("f_vector") == json::array({"4", "6", "4"}));
    CHECK(doc.at("h_vector") == json::array({"1", "1", "1", "1"}));
    CHECK(doc.at("pole_order") == 3);
    CHECK(doc.at("shifted") == true);
    CHECK(doc.at("shelling_order") == json::array({1, 2, 3, 4}));
    CHECK(doc.at("minimal_nonfaces") == json::array({json::array({1, 2, 3, 4})}));
}

TEST_CASE("graph report beyond the guard skips per field") {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 2; v <= 27; ++v) {
        pairs.emplace_back(1, v);
    }
    const json doc = json::parse(report_graph_json(build_graph(27, pairs)));
    CHECK(doc.at("vertices") == 27);
    CHECK(doc.at("edges") == 26);
    CHECK(doc.at("f_vector") == "skipped");
    CHECK(doc.at("shifted") == "skipped");
    CHECK(doc.at("minimal_nonfaces") == "skipped");
}

TEST_CASE("graph report works for any connected graph") {
    // two cycles sharing a vertex: not uni-cyclic, still a valid complex
    const Graph g =
        build_graph(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}});
    const json doc = json::parse(report_graph_json(g));
    CHECK(doc.at("pole_order") == 4); // trees have |V| - 1 = 4 edges
    CHECK(doc.at("f_vector").size() == 4);
    CHECK(doc.at("shifted").is_boolean());
    CHECK(doc.at("minimal_nonfaces").is_array());
}

TEST_CASE("reports are byte-identical across runs") {
    CHECK(report_closed_json(7, 4) == report_closed_json(7, 4));
    const Graph g = make_unicyclic(6, 3, attachment_chain(6, 3)).base;
    CHECK(report_graph_json(g) == report_graph_json(g));
}

TEST_CASE("verification sweep passes and serializes deterministically") {
    const VerifyReport report = run_verification(4, 12);
    CHECK(report.overall);
    // n=3: m=3; n=4: m in {3,4}; two attachment shapes each
    CHECK(report.cells.size() == 6);
    const std::vector<std::string> expected_names = {
        "spanning_trees", "kirchhoff_count", "f_vector",
        "h_vector",       "hilbert_series",  "hilbert_expansion",
        "h_sum",          "shifted",         "shelling_order"};
    for (const VerifyCell& cell : report.cells) {
        CHECK(cell.overall);
        REQUIRE(cell.checks.size() == expected_names.size());
        for (std::size_t i = 0; i < expected_names.size(); ++i) {
            CHECK(cell.checks[i].name == expected_names[i]);
            CHECK(cell.checks[i].match);
        }
    }

    const json doc = json::parse(verify_report_json(report));
    CHECK(doc.at("overall") == true);
    CHECK(doc.at("cells").size() == 6);
    CHECK(doc.at("cells")[0].at("params").at("n") == 3);
    CHECK(doc.at("cells")[0].at("params").at("attachment") == "chain");
}

TEST_CASE("a failing check flows through to the document and the overall flag") {
    VerifyReport report;
    report.n_max = 4;
    report.expand_to = 12;
    VerifyCell cell;
    cell.n = 4;
    cell.m = 3;
    cell.attachment = "chain";
    cell.checks.push_back({"f_vector", "[4,6,3]", "[4,6,4]", false, 0});
    cell.overall = false;
    report.cells.push_back(cell);
    report.overall = false;

    const json doc = json::parse(verify_report_json(report));
    CHECK(doc.at("overall") == false);
    CHECK(doc.at("cells")[0].at("overall") == false);
    CHECK(doc.at("cells")[0].at("checks")[0].at("name") == "f_vector");
    CHECK(doc.at("cells")[0].at("checks")[0].at("match") == false);
}

TEST_CASE("verification with expansion degree zero compares only H(0)") {
    const VerifyReport report = run_verification(3, 0);
    CHECK(report.overall);
    for (const VerifyCell& cell : report.cells) {
        for (const VerifyCheck& check : cell.checks) {
            if (check.name == "hilbert_expansion") {
                CHECK(check.closed_form_value == "[1]");
                CHECK(check.oracle_value == "[1]");
            }
        }
    }
}

TEST_CASE("verification rejects bad parameters") {
    CHECK_THROWS_AS(run_verification(2, 12), Error);
    CHECK_THROWS_AS(run_verification(4, -1), Error);
}
